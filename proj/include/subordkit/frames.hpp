#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subordkit/bits.hpp"
#include "subordkit/subord.hpp"

namespace subordkit {

/// Index of an element of a finite frame.
using Idx = unsigned;

/// Result of validating an order matrix as a finite frame. Each failed
/// stage carries the first offending indices in ascending order.
struct FrameReport {
  bool partial_order = true;
  bool lattice = true;
  bool distributive = true;
  std::vector<Idx> witness;
  std::string detail;

  bool valid() const { return partial_order && lattice && distributive; }
};

namespace detail {

inline std::optional<Idx> greatest_in(Row set, const std::vector<Row>& down) {
  std::optional<Idx> found;
  for_each_bit(set, [&](unsigned c) {
    if (!found && (set & ~down[c]) == 0) found = c;
  });
  return found;
}

inline std::optional<Idx> least_in(Row set, const std::vector<Row>& up) {
  std::optional<Idx> found;
  for_each_bit(set, [&](unsigned c) {
    if (!found && (set & ~up[c]) == 0) found = c;
  });
  return found;
}

inline std::vector<Row> transpose(const std::vector<Row>& up) {
  std::vector<Row> down(up.size(), 0);
  for (unsigned i = 0; i < up.size(); ++i) {
    for_each_bit(up[i], [&](unsigned j) { down[j] |= bit(i); });
  }
  return down;
}

}  // namespace detail

/// up[i] holds every j with i <= j.
inline FrameReport validate_frame(const std::vector<Row>& up) {
  FrameReport rep;
  const auto n = static_cast<unsigned>(up.size());
  if (n == 0 || n > kMaxRowSize) {
    rep.partial_order = false;
    rep.detail = "size must be in [1, 64]";
    return rep;
  }
  const Row all = full_row(n);
  for (Idx i = 0; i < n; ++i) {
    if (up[i] & ~all) {
      rep.partial_order = false;
      rep.witness = {i};
      rep.detail = "row " + std::to_string(i) + " names an element out of range";
      return rep;
    }
    if (!has(up[i], i)) {
      rep.partial_order = false;
      rep.witness = {i};
      rep.detail = "not reflexive at " + std::to_string(i);
      return rep;
    }
  }
  for (Idx i = 0; i < n; ++i) {
    for (Idx j = i + 1; j < n; ++j) {
      if (has(up[i], j) && has(up[j], i)) {
        rep.partial_order = false;
        rep.witness = {i, j};
        rep.detail = "not antisymmetric at " + std::to_string(i) + ", " + std::to_string(j);
        return rep;
      }
    }
  }
  for (Idx i = 0; i < n; ++i) {
    for (Idx j = 0; j < n; ++j) {
      if (!has(up[i], j)) continue;
      const Row miss = up[j] & ~up[i];
      if (miss) {
        const auto k = static_cast<Idx>(std::countr_zero(miss));
        rep.partial_order = false;
        rep.witness = {i, j, k};
        rep.detail = "not transitive at " + std::to_string(i) + " <= " + std::to_string(j) +
                     " <= " + std::to_string(k);
        return rep;
      }
    }
  }
  const auto down = detail::transpose(up);
  std::vector<Idx> meet(n * n), join(n * n);
  for (Idx i = 0; i < n; ++i) {
    for (Idx j = 0; j < n; ++j) {
      auto m = detail::greatest_in(down[i] & down[j], down);
      auto s = detail::least_in(up[i] & up[j], up);
      if (!m || !s) {
        rep.lattice = false;
        rep.witness = {i, j};
        rep.detail = std::string("no ") + (m ? "join" : "meet") + " of " + std::to_string(i) + " and " +
                     std::to_string(j);
        return rep;
      }
      meet[i * n + j] = *m;
      join[i * n + j] = *s;
    }
  }
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      for (Idx c = 0; c < n; ++c) {
        const Idx lhs = meet[a * n + join[b * n + c]];
        const Idx rhs = join[meet[a * n + b] * n + meet[a * n + c]];
        if (lhs != rhs) {
          rep.distributive = false;
          rep.witness = {a, b, c};
          rep.detail = "a and (b or c) differs from (a and b) or (a and c) for a, b, c = " +
                       std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c);
          return rep;
        }
      }
    }
  }
  return rep;
}

/// A finite distributive lattice given by its order matrix, with meet and
/// join tables. At most 64 elements.
class FinFrame {
 public:
  /// Throws PreconditionError if the order is not a finite frame.
  static FinFrame make(std::vector<Row> up, std::vector<std::string> labels = {}) {
    const FrameReport rep = validate_frame(up);
    if (!rep.valid()) throw PreconditionError("not a frame: " + rep.detail);
    return FinFrame(std::move(up), std::move(labels));
  }

  /// Downsets of the poset generated by the strict relations (a < b),
  /// ordered by (size, point mask).
  static FinFrame downsets(unsigned points, const std::vector<std::pair<unsigned, unsigned>>& edges) {
    if (points > kMaxRowAtoms) throw CapError("downsets: at most 6 poset points");
    std::vector<Mask> below(points);
    for (unsigned p = 0; p < points; ++p) below[p] = Mask{1} << p;
    for (auto [a, b] : edges) {
      if (a >= points || b >= points) throw PreconditionError("poset edge out of range");
      below[b] |= Mask{1} << a;
    }
    for (unsigned k = 0; k < points; ++k) {
      for (unsigned p = 0; p < points; ++p) {
        if ((below[p] >> k) & 1u) below[p] |= below[k];
      }
    }
    for (unsigned p = 0; p < points; ++p) {
      for (unsigned q = 0; q < points; ++q) {
        if (p != q && ((below[p] >> q) & 1u) && ((below[q] >> p) & 1u)) {
          throw PreconditionError("poset edges contain a cycle through " + std::to_string(p) + " and " +
                                  std::to_string(q));
        }
      }
    }
    std::vector<Mask> ds;
    for (Mask d = 0; d < (Mask{1} << points); ++d) {
      bool closed = true;
      for_each_bit(d, [&](unsigned p) {
        if (below[p] & ~d) closed = false;
      });
      if (closed) ds.push_back(d);
    }
    std::stable_sort(ds.begin(), ds.end(), [](Mask a, Mask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    return from_sets(ds);
  }

  /// The lattice of the given sets under inclusion; they must form a frame.
  static FinFrame from_sets(const std::vector<Mask>& sets) {
    std::vector<Row> up(sets.size(), 0);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      labels.push_back(format_mask(sets[i]));
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if ((sets[i] & ~sets[j]) == 0) up[i] |= bit(static_cast<unsigned>(j));
      }
    }
    return make(std::move(up), std::move(labels));
  }

  static FinFrame chain(unsigned n) {
    std::vector<Row> up(n);
    for (unsigned i = 0; i < n; ++i) up[i] = full_row(n) & ~full_row(i);
    return make(std::move(up));
  }

  /// P(k) with element index equal to the atom mask.
  static FinFrame powerset(unsigned k) {
    if (k > kMaxRowAtoms) throw CapError("powerset: at most 6 atoms");
    std::vector<Mask> sets(std::size_t{1} << k);
    for (Mask m = 0; m < sets.size(); ++m) sets[m] = m;
    return from_sets(sets);
  }

  unsigned size() const { return n_; }
  Idx bottom() const { return bottom_; }
  Idx top() const { return top_; }
  Row all() const { return full_row(n_); }
  const std::vector<Row>& up_rows() const { return up_; }
  Row up(Idx a) const { return up_[a]; }
  Row down(Idx a) const { return down_[a]; }
  bool leq(Idx a, Idx b) const { return has(up_[a], b); }
  Idx meet(Idx a, Idx b) const { return meet_[a * n_ + b]; }
  Idx join(Idx a, Idx b) const { return join_[a * n_ + b]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Idx a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  Idx join_all(Row set) const {
    Idx j = bottom_;
    for_each_bit(set, [&](unsigned x) { j = join(j, x); });
    return j;
  }

  Idx meet_all(Row set) const {
    Idx m = top_;
    for_each_bit(set, [&](unsigned x) { m = meet(m, x); });
    return m;
  }

  /// Elements j != 0 that are not the join of two strictly smaller elements.
  std::vector<Idx> join_irreducibles() const {
    std::vector<Idx> out;
    for (Idx j = 0; j < n_; ++j) {
      if (j == bottom_) continue;
      const Row strictly_below = down_[j] & ~bit(j);
      if (join_all(strictly_below) != j) out.push_back(j);
    }
    return out;
  }

  /// Length of the longest chain from the bottom.
  unsigned rank(Idx a) const { return rank_.at(a); }

  friend bool operator==(const FinFrame& a, const FinFrame& b) { return a.up_ == b.up_; }

 private:
  FinFrame(std::vector<Row> up, std::vector<std::string> labels)
      : n_(static_cast<unsigned>(up.size())), up_(std::move(up)), labels_(std::move(labels)) {
    down_ = detail::transpose(up_);
    meet_.resize(n_ * n_);
    join_.resize(n_ * n_);
    for (Idx i = 0; i < n_; ++i) {
      for (Idx j = 0; j < n_; ++j) {
        meet_[i * n_ + j] = static_cast<std::uint8_t>(*detail::greatest_in(down_[i] & down_[j], down_));
        join_[i * n_ + j] = static_cast<std::uint8_t>(*detail::least_in(up_[i] & up_[j], up_));
      }
    }
    bottom_ = *detail::least_in(all(), up_);
    top_ = *detail::greatest_in(all(), down_);
    rank_.assign(n_, 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (Idx a = 0; a < n_; ++a) {
        for_each_bit(down_[a] & ~bit(a), [&](unsigned b) {
          if (rank_[b] + 1 > rank_[a]) {
            rank_[a] = rank_[b] + 1;
            changed = true;
          }
        });
      }
    }
  }

  unsigned n_;
  std::vector<Row> up_;
  std::vector<Row> down_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
  std::vector<std::string> labels_;
  std::vector<unsigned> rank_;
  Idx bottom_ = 0;
  Idx top_ = 0;
};

/// a* = the join of every x with a and x = 0.
inline Idx pseudocomplement(const FinFrame& l, Idx a) {
  Row xs = 0;
  for (Idx x = 0; x < l.size(); ++x) {
    if (l.meet(a, x) == l.bottom()) xs |= bit(x);
  }
  return l.join_all(xs);
}

/// a is well inside b iff a* or b = 1.
inline bool well_inside(const FinFrame& l, Idx a, Idx b) {
  return l.join(pseudocomplement(l, a), b) == l.top();
}

/// Every a is the join of the elements well inside it.
inline bool is_regular_frame(const FinFrame& l) {
  for (Idx a = 0; a < l.size(); ++a) {
    Row xs = 0;
    for (Idx x = 0; x < l.size(); ++x) {
      if (well_inside(l, x, a)) xs |= bit(x);
    }
    if (l.join_all(xs) != a) return false;
  }
  return true;
}

/// Every element has a complement.
inline bool is_boolean(const FinFrame& l) {
  for (Idx a = 0; a < l.size(); ++a) {
    bool found = false;
    for (Idx b = 0; b < l.size() && !found; ++b) {
      found = l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
    }
    if (!found) return false;
  }
  return true;
}

/// The regular elements {a : a = a**} as a frame, with the inclusion of its
/// carrier into the original frame (incl[i] is the index in the original).
struct Booleanization {
  FinFrame frame;
  std::vector<Idx> incl;

  /// Index in the booleanization of an original element, if regular.
  std::optional<Idx> index_of(Idx original) const {
    for (Idx i = 0; i < incl.size(); ++i) {
      if (incl[i] == original) return i;
    }
    return std::nullopt;
  }
};

inline Idx double_pseudocomplement(const FinFrame& l, Idx a) {
  return pseudocomplement(l, pseudocomplement(l, a));
}

inline Booleanization booleanization(const FinFrame& l) {
  std::vector<Idx> incl;
  for (Idx a = 0; a < l.size(); ++a) {
    if (double_pseudocomplement(l, a) == a) incl.push_back(a);
  }
  std::vector<Row> up(incl.size(), 0);
  std::vector<std::string> labels;
  for (Idx i = 0; i < incl.size(); ++i) {
    labels.push_back(l.label(incl[i]));
    for (Idx j = 0; j < incl.size(); ++j) {
      if (l.leq(incl[i], incl[j])) up[i] |= bit(j);
    }
  }
  return {FinFrame::make(std::move(up), std::move(labels)), std::move(incl)};
}

/// Atom coordinates of a boolean frame: element index <-> atom mask.
class BooleanCoordinates {
 public:
  explicit BooleanCoordinates(const FinFrame& l) {
    if (!is_boolean(l)) throw PreconditionError("BooleanCoordinates: frame is not boolean");
    for (Idx a = 0; a < l.size(); ++a) {
      if (a != l.bottom() && (l.down(a) & ~bit(a)) == bit(l.bottom())) atoms_.push_back(a);
    }
    if (atoms_.empty()) throw PreconditionError("BooleanCoordinates: degenerate frame with 0 = 1");
    if (atoms_.size() > kMaxRowAtoms) throw CapError("BooleanCoordinates: at most 6 atoms");
    to_mask_.resize(l.size());
    from_mask_.assign(std::size_t{1} << atoms_.size(), 0);
    for (Idx a = 0; a < l.size(); ++a) {
      Mask m = 0;
      for (unsigned i = 0; i < atoms_.size(); ++i) {
        if (l.leq(atoms_[i], a)) m |= Mask{1} << i;
      }
      to_mask_[a] = m;
      from_mask_[m] = a;
    }
  }

  BoolAlg algebra() const { return BoolAlg(static_cast<unsigned>(atoms_.size())); }
  const std::vector<Idx>& atoms() const { return atoms_; }
  Mask to_mask(Idx a) const { return to_mask_.at(a); }
  Idx from_mask(Mask m) const { return from_mask_.at(m); }

 private:
  std::vector<Idx> atoms_;
  std::vector<Mask> to_mask_;
  std::vector<Idx> from_mask_;
};

/// The booleanization of a frame as an algebra with the well-inside relation
/// of the original frame, in atom coordinates.
struct RegularPart {
  Booleanization b;
  BooleanCoordinates coords;
  SubAlgebra algebra;

  /// Original-frame index of an algebra element.
  Idx original(Mask m) const { return b.incl[coords.from_mask(m)]; }
};

inline RegularPart regular_part(const FinFrame& l) {
  Booleanization b = booleanization(l);
  BooleanCoordinates coords(b.frame);
  const BoolAlg alg = coords.algebra();
  Subordination prec(alg, alg);
  for (Mask x = 0; x < alg.size(); ++x) {
    for (Mask y = 0; y < alg.size(); ++y) {
      if (well_inside(l, b.incl[coords.from_mask(x)], b.incl[coords.from_mask(y)])) prec.add(x, y);
    }
  }
  SubAlgebra sa = SubAlgebra::make(std::move(prec));
  return {std::move(b), std::move(coords), std::move(sa)};
}

// ---------------------------------------------------------------------------
// Maps between frames

/// A function between the carriers of two finite frames.
struct LatticeMap {
  FinFrame dom;
  FinFrame cod;
  std::vector<Idx> table;

  LatticeMap(FinFrame d, FinFrame c, std::vector<Idx> t) : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
    if (table.size() != dom.size()) throw PreconditionError("LatticeMap: table size differs from domain size");
    for (Idx v : table) {
      if (v >= cod.size()) throw PreconditionError("LatticeMap: value " + std::to_string(v) + " out of range");
    }
  }

  static LatticeMap identity(const FinFrame& l) {
    std::vector<Idx> t(l.size());
    for (Idx i = 0; i < l.size(); ++i) t[i] = i;
    return LatticeMap(l, l, std::move(t));
  }

  Idx operator()(Idx a) const { return table.at(a); }

  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
};

/// second o first
inline LatticeMap compose(const LatticeMap& first, const LatticeMap& second) {
  if (!(first.cod == second.dom)) throw MismatchError("compose: middle frames differ");
  std::vector<Idx> t(first.dom.size());
  for (Idx a = 0; a < t.size(); ++a) t[a] = second(first(a));
  return LatticeMap(first.dom, second.cod, std::move(t));
}

inline bool is_monotone(const LatticeMap& h) {
  for (Idx a = 0; a < h.dom.size(); ++a) {
    for (Idx b = 0; b < h.dom.size(); ++b) {
      if (h.dom.leq(a, b) && !h.cod.leq(h(a), h(b))) return false;
    }
  }
  return true;
}

/// Top and binary meets are preserved.
inline bool is_preframe(const LatticeMap& h) {
  if (h(h.dom.top()) != h.cod.top()) return false;
  for (Idx a = 0; a < h.dom.size(); ++a) {
    for (Idx b = 0; b < h.dom.size(); ++b) {
      if (h(h.dom.meet(a, b)) != h.cod.meet(h(a), h(b))) return false;
    }
  }
  return true;
}

/// Joins of every directed family are preserved. In a finite lattice a
/// directed family has a maximum, so this checks the join of every subset
/// that has a maximum; it is exponential and reserved for tests.
inline bool preserves_directed_joins(const LatticeMap& h) {
  const unsigned n = h.dom.size();
  if (n > 16) throw CapError("preserves_directed_joins: at most 16 elements");
  for (Row s = 1; s < (Row{1} << n); ++s) {
    const Idx j = h.dom.join_all(s);
    if (!has(s, j)) continue;
    Row img = 0;
    for_each_bit(s, [&](unsigned a) { img |= bit(h(a)); });
    if (h.cod.join_all(img) != h(j)) return false;
  }
  return true;
}

inline bool is_frame_hom(const LatticeMap& h) {
  if (!is_preframe(h) || h(h.dom.bottom()) != h.cod.bottom()) return false;
  for (Idx a = 0; a < h.dom.size(); ++a) {
    for (Idx b = 0; b < h.dom.size(); ++b) {
      if (h(h.dom.join(a, b)) != h.cod.join(h(a), h(b))) return false;
    }
  }
  return true;
}

/// Whether diamond is join-preserving and satisfies, for all a, b,
/// box(a or b) <= box a or diamond b and box a and diamond b <= diamond(a and b).
inline bool is_cmorph_witness(const LatticeMap& box, const std::vector<Idx>& diamond) {
  const FinFrame& L = box.dom;
  const FinFrame& M = box.cod;
  if (diamond.size() != L.size()) return false;
  if (diamond[L.bottom()] != M.bottom()) return false;
  for (Idx a = 0; a < L.size(); ++a) {
    for (Idx b = 0; b < L.size(); ++b) {
      if (diamond[L.join(a, b)] != M.join(diamond[a], diamond[b])) return false;
      if (!M.leq(box(L.join(a, b)), M.join(box(a), diamond[b]))) return false;
      if (!M.leq(M.meet(box(a), diamond[b]), diamond[L.meet(a, b)])) return false;
    }
  }
  return true;
}

enum class Verdict { yes, no, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "inconclusive";
  }
}

inline constexpr unsigned kMaxJoinIrreducibles = 8;
inline constexpr std::uint64_t kDiamondNodeBudget = 2'000'000;

struct DiamondSearch {
  Verdict verdict = Verdict::no;
  std::vector<Idx> diamond;  // full table when verdict is yes
  std::uint64_t nodes = 0;
  std::string detail;
};

/// Searches for a join-preserving diamond witnessing that box is a
/// c-morphism. Candidates are monotone assignments on the join-irreducibles
/// of the domain, extended by joins, tried in ascending codomain-index order
/// per irreducible; the first witness found is returned.
inline DiamondSearch find_diamond(const LatticeMap& box) {
  const FinFrame& L = box.dom;
  const FinFrame& M = box.cod;
  DiamondSearch out;
  std::vector<Idx> irr = L.join_irreducibles();
  if (irr.size() > kMaxJoinIrreducibles) {
    out.verdict = Verdict::inconclusive;
    out.detail = "domain has " + std::to_string(irr.size()) + " join-irreducibles; the search cap is 8";
    return out;
  }
  std::stable_sort(irr.begin(), irr.end(), [&](Idx a, Idx b) { return L.rank(a) < L.rank(b); });
  const std::size_t m = irr.size();
  // irr_below[a]: positions (in irr) of the irreducibles below a.
  std::vector<std::uint32_t> irr_below(L.size(), 0);
  for (Idx a = 0; a < L.size(); ++a) {
    for (std::size_t k = 0; k < m; ++k) {
      if (L.leq(irr[k], a)) irr_below[a] |= 1u << k;
    }
  }
  // decided_at[k]: elements whose irreducibles all lie in positions < k + 1.
  std::vector<Row> decided_at(m + 1, 0);
  for (std::size_t k = 0; k <= m; ++k) {
    const std::uint32_t assigned = k == 0 ? 0u : static_cast<std::uint32_t>((1u << k) - 1);
    for (Idx a = 0; a < L.size(); ++a) {
      if ((irr_below[a] & ~assigned) == 0) decided_at[k] |= bit(a);
    }
  }
  std::vector<Idx> val(m, 0);
  auto extend = [&](Idx a, std::size_t assigned) {
    Idx j = M.bottom();
    for (std::size_t k = 0; k < assigned; ++k) {
      if ((irr_below[a] >> k) & 1u) j = M.join(j, val[k]);
    }
    return j;
  };
  bool found = false;
  bool exhausted = false;
  std::vector<Idx> dia(L.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found || exhausted) return;
    if (++out.nodes > kDiamondNodeBudget) {
      exhausted = true;
      return;
    }
    // Second inequality on newly decided b.
    const Row fresh = decided_at[k] & ~(k == 0 ? Row{0} : decided_at[k - 1]);
    for (Idx b = 0; b < L.size(); ++b) dia[b] = has(decided_at[k], b) ? extend(b, k) : M.bottom();
    bool ok = true;
    for_each_bit(fresh, [&](unsigned b) {
      if (!ok) return;
      for (Idx a = 0; a < L.size() && ok; ++a) {
        if (!M.leq(M.meet(box(a), dia[b]), dia[L.meet(a, b)])) ok = false;
      }
    });
    if (!ok) return;
    if (k == m) {
      if (is_cmorph_witness(box, dia)) {
        found = true;
        out.diamond = dia;
      }
      return;
    }
    for (Idx v = 0; v < M.size() && !found && !exhausted; ++v) {
      bool mono = true;
      for (std::size_t p = 0; p < k && mono; ++p) {
        if (L.leq(irr[p], irr[k]) && !M.leq(val[p], v)) mono = false;
      }
      if (!mono) continue;
      val[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  if (found) {
    out.verdict = Verdict::yes;
  } else if (exhausted) {
    out.verdict = Verdict::inconclusive;
    out.detail = "node budget of " + std::to_string(kDiamondNodeBudget) + " exhausted";
  } else {
    out.verdict = Verdict::no;
  }
  return out;
}

struct MapProfile {
  bool monotone = false;
  bool preframe = false;
  bool frame = false;
  Verdict cmorph = Verdict::no;
  std::vector<Idx> diamond;
  std::string cmorph_detail;
};

/// MONOTONE, PREFRAME (top and binary meets), FRAME (also bottom and binary
/// joins) and CMORPH (a diamond witness exists; searched only for preframe
/// maps).
inline MapProfile classify_map(const LatticeMap& h, bool search_diamond = true) {
  MapProfile p;
  p.monotone = is_monotone(h);
  p.preframe = is_preframe(h);
  p.frame = p.preframe && is_frame_hom(h);
  if (p.preframe && search_diamond) {
    DiamondSearch d = find_diamond(h);
    p.cmorph = d.verdict;
    p.diamond = std::move(d.diamond);
    p.cmorph_detail = std::move(d.detail);
  }
  return p;
}

inline std::string format_profile(const MapProfile& p) {
  std::string s;
  auto add = [&](bool f, const char* name) {
    if (f) s += s.empty() ? name : std::string(",") + name;
  };
  add(p.monotone, "MONOTONE");
  add(p.preframe, "PREFRAME");
  add(p.frame, "FRAME");
  add(p.cmorph == Verdict::yes, "CMORPH");
  return s.empty() ? "-" : s;
}

/// A bijection whose inverse is also monotone.
inline bool frame_iso_check(const LatticeMap& h) {
  if (h.dom.size() != h.cod.size()) return false;
  Row seen = 0;
  for (Idx v : h.table) seen |= bit(v);
  if (seen != h.cod.all()) return false;
  for (Idx a = 0; a < h.dom.size(); ++a) {
    for (Idx b = 0; b < h.dom.size(); ++b) {
      if (h.dom.leq(a, b) != h.cod.leq(h(a), h(b))) return false;
    }
  }
  return true;
}

}  // namespace subordkit
