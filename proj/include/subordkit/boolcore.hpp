#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "subordkit/bits.hpp"

namespace subordkit {

/// The finite boolean algebra P({0,...,n-1}), 1 <= n <= 12.
class BoolAlg {
 public:
  explicit BoolAlg(unsigned n_atoms) : n_(n_atoms) {
    if (n_atoms < 1 || n_atoms > kMaxAtoms) {
      throw CapError("BoolAlg: atom count must be in [1, 12], got " + std::to_string(n_atoms));
    }
  }

  unsigned n_atoms() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  Mask bottom() const { return 0; }
  Mask top() const { return full_mask(n_); }
  bool contains(Mask m) const { return (m & ~top()) == 0; }
  Mask complement(Mask m) const { return top() & ~m; }

  friend bool operator==(const BoolAlg&, const BoolAlg&) = default;

 private:
  unsigned n_;
};

/// An element of a BoolAlg. The owning algebra is carried so that mixing
/// elements of different algebras is detected.
struct Element {
  unsigned n_atoms;
  Mask mask;

  Element(const BoolAlg& alg, Mask m) : n_atoms(alg.n_atoms()), mask(m) {
    if (!alg.contains(m)) {
      throw PreconditionError("element " + format_mask(m) + " has an atom outside the " +
                              std::to_string(alg.n_atoms()) + "-atom algebra");
    }
  }

  BoolAlg algebra() const { return BoolAlg(n_atoms); }
  friend bool operator==(const Element&, const Element&) = default;
};

namespace detail {
inline void same_algebra(const Element& a, const Element& b) {
  if (a.n_atoms != b.n_atoms) {
    throw MismatchError("elements of a " + std::to_string(a.n_atoms) + "-atom and a " +
                        std::to_string(b.n_atoms) + "-atom algebra");
  }
}
}  // namespace detail

inline Element meet(const Element& a, const Element& b) {
  detail::same_algebra(a, b);
  return Element(a.algebra(), a.mask & b.mask);
}

inline Element join(const Element& a, const Element& b) {
  detail::same_algebra(a, b);
  return Element(a.algebra(), a.mask | b.mask);
}

inline Element complement(const Element& a) {
  return Element(a.algebra(), full_mask(a.n_atoms) & ~a.mask);
}

inline bool leq(const Element& a, const Element& b) {
  detail::same_algebra(a, b);
  return (a.mask & ~b.mask) == 0;
}

enum class FamilyKind { raw, ideal, filter };

inline const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::ideal: return "ideal";
    case FamilyKind::filter: return "filter";
    default: return "raw";
  }
}

/// A set of elements of one algebra, stored as a bitset over the carrier,
/// with an ideal/filter/raw tag. Equality compares the member sets only.
class ElemFamily {
 public:
  explicit ElemFamily(const BoolAlg& alg, FamilyKind kind = FamilyKind::raw)
      : alg_(alg), words_((alg.size() + 63) / 64, 0), kind_(kind) {}

  ElemFamily(const BoolAlg& alg, std::initializer_list<Mask> members,
             FamilyKind kind = FamilyKind::raw)
      : ElemFamily(alg, kind) {
    for (Mask m : members) insert(m);
  }

  static ElemFamily whole(const BoolAlg& alg, FamilyKind kind = FamilyKind::raw) {
    ElemFamily f(alg, kind);
    for (Mask m = 0; m < alg.size(); ++m) f.insert(m);
    return f;
  }

  /// The principal ideal {x : x <= a}.
  static ElemFamily down(const BoolAlg& alg, Mask a) {
    ElemFamily f(alg, FamilyKind::ideal);
    for (Mask sub = a;; sub = (sub - 1) & a) {
      f.insert(sub);
      if (sub == 0) break;
    }
    return f;
  }

  /// The principal filter {x : a <= x}.
  static ElemFamily up(const BoolAlg& alg, Mask a) {
    ElemFamily f(alg, FamilyKind::filter);
    for (Mask m = 0; m < alg.size(); ++m) {
      if ((a & ~m) == 0) f.insert(m);
    }
    return f;
  }

  /// Family whose members are the set bits of a 64-bit row (n <= 6).
  static ElemFamily from_row(const BoolAlg& alg, Row r, FamilyKind kind = FamilyKind::raw) {
    if (alg.n_atoms() > kMaxRowAtoms) throw CapError("ElemFamily::from_row: at most 6 atoms");
    ElemFamily f(alg, kind);
    f.words_[0] = r & full_row(static_cast<unsigned>(alg.size()));
    return f;
  }

  const BoolAlg& algebra() const { return alg_; }
  FamilyKind kind() const { return kind_; }
  void set_kind(FamilyKind k) { kind_ = k; }

  bool contains(Mask m) const {
    return m < alg_.size() && ((words_[m / 64] >> (m % 64)) & 1u);
  }

  void insert(Mask m) {
    if (!alg_.contains(m)) {
      throw PreconditionError("family member " + format_mask(m) + " outside the algebra");
    }
    words_[m / 64] |= Row{1} << (m % 64);
  }

  void erase(Mask m) {
    if (alg_.contains(m)) words_[m / 64] &= ~(Row{1} << (m % 64));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Row w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const { return count() == 0; }

  /// The members as a row; only for algebras with at most 6 atoms.
  Row row() const {
    if (alg_.n_atoms() > kMaxRowAtoms) throw CapError("ElemFamily::row: at most 6 atoms");
    return words_[0];
  }

  /// Members in ascending mask order.
  std::vector<Mask> members() const {
    std::vector<Mask> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for_each_bit(words_[w], [&](unsigned i) { out.push_back(static_cast<Mask>(w * 64 + i)); });
    }
    return out;
  }

  /// Members in canonical (lexicographic) order.
  std::vector<Mask> lex_sorted() const {
    auto m = members();
    std::sort(m.begin(), m.end(), lex_less);
    return m;
  }

  bool subset_of(const ElemFamily& other) const {
    check_same(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  bool intersects(const ElemFamily& other) const {
    check_same(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & other.words_[w]) return true;
    }
    return false;
  }

  friend bool operator==(const ElemFamily& a, const ElemFamily& b) {
    return a.alg_ == b.alg_ && a.words_ == b.words_;
  }

 private:
  void check_same(const ElemFamily& other) const {
    if (!(alg_ == other.alg_)) throw MismatchError("families of different algebras");
  }

  BoolAlg alg_;
  std::vector<Row> words_;
  FamilyKind kind_;
};

/// "[{0},{0,1}]": members in lexicographic order.
inline std::string format_family(const ElemFamily& f) {
  std::string s = "[";
  bool first = true;
  for (Mask m : f.lex_sorted()) {
    if (!first) s += ", ";
    s += format_mask(m);
    first = false;
  }
  return s + "]";
}

inline bool is_down_closed(const ElemFamily& f) {
  for (Mask m : f.members()) {
    for (Mask sub = m;; sub = (sub - 1) & m) {
      if (!f.contains(sub)) return false;
      if (sub == 0) break;
    }
  }
  return true;
}

inline bool is_up_closed(const ElemFamily& f) {
  const Mask top = f.algebra().top();
  for (Mask m : f.members()) {
    const Mask rest = top & ~m;
    for (Mask extra = rest;; extra = (extra - 1) & rest) {
      if (!f.contains(m | extra)) return false;
      if (extra == 0) break;
    }
  }
  return true;
}

inline bool is_ideal(const ElemFamily& f) {
  if (!f.contains(0) || !is_down_closed(f)) return false;
  const auto ms = f.members();
  for (Mask a : ms)
    for (Mask b : ms)
      if (!f.contains(a | b)) return false;
  return true;
}

inline bool is_filter(const ElemFamily& f) {
  if (!f.contains(f.algebra().top()) || !is_up_closed(f)) return false;
  const auto ms = f.members();
  for (Mask a : ms)
    for (Mask b : ms)
      if (!f.contains(a & b)) return false;
  return true;
}

/// Whether the family satisfies the closure conditions its tag promises.
inline bool tag_valid(const ElemFamily& f) {
  switch (f.kind()) {
    case FamilyKind::ideal: return is_ideal(f);
    case FamilyKind::filter: return is_filter(f);
    default: return true;
  }
}

/// U(X) = {b : x <= b for all x in X}; U of the empty family is the carrier.
inline ElemFamily upper_bounds(const ElemFamily& x) {
  const BoolAlg& alg = x.algebra();
  ElemFamily out(alg, FamilyKind::filter);
  const auto xs = x.members();
  for (Mask b = 0; b < alg.size(); ++b) {
    bool bound = true;
    for (Mask m : xs) {
      if (m & ~b) {
        bound = false;
        break;
      }
    }
    if (bound) out.insert(b);
  }
  return out;
}

/// L(X) = {b : b <= x for all x in X}; L of the empty family is the carrier.
inline ElemFamily lower_bounds(const ElemFamily& x) {
  const BoolAlg& alg = x.algebra();
  ElemFamily out(alg, FamilyKind::ideal);
  const auto xs = x.members();
  for (Mask b = 0; b < alg.size(); ++b) {
    bool bound = true;
    for (Mask m : xs) {
      if (b & ~m) {
        bound = false;
        break;
      }
    }
    if (bound) out.insert(b);
  }
  return out;
}

/// The elementwise complement {not x : x in X}; swaps the ideal/filter tag.
inline ElemFamily negate_family(const ElemFamily& x) {
  const BoolAlg& alg = x.algebra();
  FamilyKind k = x.kind();
  if (k == FamilyKind::ideal) {
    k = FamilyKind::filter;
  } else if (k == FamilyKind::filter) {
    k = FamilyKind::ideal;
  }
  ElemFamily out(alg, k);
  for (Mask m : x.members()) out.insert(alg.complement(m));
  return out;
}

inline Mask join_all(const ElemFamily& x) {
  Mask j = 0;
  for (Mask m : x.members()) j |= m;
  return j;
}

inline Mask meet_all(const ElemFamily& x) {
  Mask j = x.algebra().top();
  for (Mask m : x.members()) j &= m;
  return j;
}

/// Smallest ideal containing X. Finite ideals are principal, so this is the
/// down-set of the join of X.
inline ElemFamily ideal_generated(const ElemFamily& x) {
  return ElemFamily::down(x.algebra(), join_all(x));
}

}  // namespace subordkit
