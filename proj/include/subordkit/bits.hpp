#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subordkit {

/// An element of a finite powerset algebra: bit i set iff atom i is present.
using Mask = std::uint32_t;

/// A set of at most 64 small indices (elements of a <= 6-atom algebra,
/// elements of a frame with <= 64 members, ...).
using Row = std::uint64_t;

inline constexpr unsigned kMaxAtoms = 12;
inline constexpr unsigned kMaxRowAtoms = 6;
inline constexpr unsigned kMaxRowSize = 64;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments that live in different algebras / frames / spaces.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

constexpr Mask full_mask(unsigned n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

constexpr Row full_row(unsigned size) {
  return size >= 64 ? ~Row{0} : ((Row{1} << size) - 1);
}

constexpr Row bit(unsigned i) { return Row{1} << i; }

constexpr bool has(Row r, unsigned i) { return (r >> i) & 1u; }

/// Calls f(i) for every set bit i, ascending.
template <class F>
constexpr void for_each_bit(std::uint64_t r, F&& f) {
  while (r != 0) {
    const auto i = static_cast<unsigned>(std::countr_zero(r));
    f(i);
    r &= r - 1;
  }
}

inline std::vector<unsigned> atoms_of(Mask m) {
  std::vector<unsigned> out;
  for_each_bit(m, [&](unsigned i) { out.push_back(i); });
  return out;
}

/// Lexicographic comparison of the sorted atom lists of two masks; the empty
/// element is least and a proper prefix sorts first ({0} < {0,1} < {1}).
inline bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const unsigned ia = static_cast<unsigned>(std::countr_zero(a));
    const unsigned ib = static_cast<unsigned>(std::countr_zero(b));
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// All 2^n masks in lexicographic order.
inline const std::vector<Mask>& lex_order(unsigned n) {
  if (n > kMaxAtoms) throw CapError("lex_order: at most 12 atoms");
  static const std::vector<std::vector<Mask>> cache = [] {
    std::vector<std::vector<Mask>> c(kMaxAtoms + 1);
    for (unsigned k = 0; k <= kMaxAtoms; ++k) {
      auto& v = c[k];
      v.resize(std::size_t{1} << k);
      for (Mask m = 0; m < v.size(); ++m) v[m] = m;
      std::sort(v.begin(), v.end(), lex_less);
    }
    return c;
  }();
  return cache[n];
}

/// Canonical text of an element: sorted atom indices, e.g. "{0,2}".
inline std::string format_mask(Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](unsigned i) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  });
  s += '}';
  return s;
}

/// Members of a row as masks, in lexicographic order of the masks.
inline std::vector<Mask> lex_members(Row r) {
  std::vector<Mask> out;
  for_each_bit(r, [&](unsigned i) { out.push_back(i); });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace subordkit
