#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subordkit/functors.hpp"
#include "subordkit/subord.hpp"

namespace subordkit {

namespace detail {

inline void require_compatible(const Subordination& t, const Subordination& s1, const Subordination& s2,
                               const char* who) {
  const CompatResult c = is_compatible(t, s1, s2);
  if (!c.compatible) {
    throw PreconditionError(std::string(who) + ": relation is not compatible (" + c.equation + " fails at (" +
                            format_mask(c.witness.first) + ";" + format_mask(c.witness.second) + "))");
  }
}

/// Elements of a row that lie below every member of another row.
inline Row lower_bounds_row(const BoolAlg& alg, Row xs) {
  Row out = 0;
  for (Mask a = 0; a < alg.size(); ++a) {
    bool below = true;
    for_each_bit(xs, [&](unsigned x) {
      if (a & ~x) below = false;
    });
    if (below) out |= bit(a);
  }
  return out;
}

inline Row upper_bounds_row(const BoolAlg& alg, Row xs) {
  Row out = 0;
  for (Mask a = 0; a < alg.size(); ++a) {
    bool above = true;
    for_each_bit(xs, [&](unsigned x) {
      if (x & ~a) above = false;
    });
    if (above) out |= bit(a);
  }
  return out;
}

inline Mask join_row(Row xs) {
  Mask j = 0;
  for_each_bit(xs, [&](unsigned x) { j |= x; });
  return j;
}

inline Mask meet_row(const BoolAlg& alg, Row xs) {
  Mask m = alg.top();
  for_each_bit(xs, [&](unsigned x) { m &= x; });
  return m;
}

inline std::string pair_text(Mask a, Mask b) { return "(" + format_mask(a) + ", " + format_mask(b) + ")"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Continuity

/// Verdict plus the lexicographically least pair b1 S2 b2 where it fails.
struct ContinuityResult {
  bool continuous = true;
  std::optional<std::pair<Mask, Mask>> witness;
};

/// For all b1 S2 b2 there is a in T~[b1] with T~[b2] inside S1[a]. No
/// compatibility check; for diagnostics on arbitrary relations.
inline ContinuityResult continuity_unchecked(const Subordination& t, const Subordination& s1,
                                             const Subordination& s2) {
  const Subordination tt = tilde_inverse(t);
  ContinuityResult r;
  for (Mask b1 : lex_order(s2.dom().n_atoms())) {
    for (Mask b2 : lex_members(s2.targets(b1))) {
      const Row need = tt.targets(b2);
      bool found = false;
      for_each_bit(tt.targets(b1), [&](unsigned a) {
        if ((need & ~s1.targets(a)) == 0) found = true;
      });
      if (!found) {
        r.continuous = false;
        r.witness = std::pair{b1, b2};
        return r;
      }
    }
  }
  return r;
}

inline ContinuityResult is_continuous(const Subordination& t, const Subordination& s1, const Subordination& s2) {
  detail::require_compatible(t, s1, s2, "is_continuous");
  return continuity_unchecked(t, s1, s2);
}

/// The five equivalent formulations of continuity, each evaluated on its own.
struct ContinuityVariants {
  bool v1a = true;  // a in T~[b1], T~[b2] inside S1[a]
  bool v1b = true;  // a in T~[b1], a in L(T~[b2])
  bool v1c = true;  // a in T^{-1}[b2], a in U(T^{-1}[b1])
  bool v2b = true;  // b1 T~ meet(T~[b2])
  bool v2c = true;  // join(T^{-1}[b1]) T b2

  bool agree() const { return v1a == v1b && v1b == v1c && v1c == v2b && v2b == v2c; }
};

inline ContinuityVariants continuity_variants(const Subordination& t, const Subordination& s1,
                                              const Subordination& s2) {
  detail::require_compatible(t, s1, s2, "continuity_variants");
  const BoolAlg& a1 = t.dom();
  const Subordination tt = tilde_inverse(t);
  std::vector<Row> src(t.cod().size());
  for (Mask b = 0; b < t.cod().size(); ++b) src[b] = t.sources(b);
  ContinuityVariants v;
  for (Mask b1 = 0; b1 < s2.dom().size(); ++b1) {
    for_each_bit(s2.targets(b1), [&](unsigned b2) {
      const Row t1 = tt.targets(b1);
      const Row t2 = tt.targets(b2);
      bool e1a = false;
      for_each_bit(t1, [&](unsigned a) {
        if ((t2 & ~s1.targets(a)) == 0) e1a = true;
      });
      v.v1a = v.v1a && e1a;
      v.v1b = v.v1b && (t1 & detail::lower_bounds_row(a1, t2)) != 0;
      v.v1c = v.v1c && (src[b2] & detail::upper_bounds_row(a1, src[b1])) != 0;
      v.v2b = v.v2b && tt.relates(b1, detail::meet_row(a1, t2));
      v.v2c = v.v2c && t.relates(detail::join_row(src[b1]), b2);
    });
  }
  return v;
}

/// The join-preserving witness of RI(T) being a c-morphism:
/// diamond I = {a : a in L(T~[b]) for some b in I}, as a table on RI(B2).
inline std::vector<Idx> explicit_diamond(const Subordination& t, const RoundIdealFrame& ri1,
                                         const RoundIdealFrame& ri2) {
  const Subordination tt = tilde_inverse(t);
  std::vector<Idx> table(ri2.size());
  for (Idx i = 0; i < ri2.size(); ++i) {
    Row members = 0;
    for_each_bit(ri2.ideal(i), [&](unsigned b) { members |= detail::lower_bounds_row(t.dom(), tt.targets(b)); });
    table[i] = ri1.index_or_throw(members, "explicit_diamond");
  }
  return table;
}

// ---------------------------------------------------------------------------
// Functionality

struct FunctionalResult {
  bool functional = true;
  bool left = true;   // T~ o T inside S1
  bool right = true;  // S2 inside T o T~
  std::string detail;
};

inline FunctionalResult is_functional(const Subordination& t, const Subordination& s1, const Subordination& s2) {
  detail::require_compatible(t, s1, s2, "is_functional");
  const Subordination tt = tilde_inverse(t);
  FunctionalResult r;
  if (auto w = first_excess(compose(t, tt), s1)) {
    r.left = false;
    r.detail = "T~ o T relates " + detail::pair_text(w->first, w->second) + " outside S1";
  }
  if (auto w = first_excess(s2, compose(tt, t))) {
    r.right = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("S2 relates ") +
                detail::pair_text(w->first, w->second) + " outside T o T~";
  }
  r.functional = r.left && r.right;
  return r;
}

/// (2a) a T 0 implies a = 0; (2b) a T (b1 or b2), b1 S2 b1', b2 S2 b2'
/// give a1, a2 with a S1 (a1 or a2), a1 T b1', a2 T b2'.
struct FunctionalCharacterization {
  bool c2a = true;
  bool c2b = true;
  std::vector<Mask> witness;  // a for 2a; (a, b1, b2, b1', b2') for 2b

  bool holds() const { return c2a && c2b; }
};

inline FunctionalCharacterization functional_characterization(const Subordination& t, const Subordination& s1,
                                                              const Subordination& s2) {
  detail::require_compatible(t, s1, s2, "functional_characterization");
  FunctionalCharacterization r;
  const BoolAlg& A = t.dom();
  const BoolAlg& B = t.cod();
  for (Mask a : lex_order(A.n_atoms())) {
    if (a != 0 && t.relates(a, 0)) {
      r.c2a = false;
      r.witness = {a};
      break;
    }
  }
  const std::size_t nb = B.size();
  std::vector<Row> src(nb);
  for (Mask b = 0; b < nb; ++b) src[b] = t.sources(b);
  // good[b1' * nb + b2']: the a with S1[a] meeting {a1 or a2 : a1 T b1', a2 T b2'}.
  std::vector<Row> good(nb * nb, 0);
  for (Mask p = 0; p < nb; ++p) {
    for (Mask q = 0; q < nb; ++q) {
      Row joins = 0;
      for_each_bit(src[p], [&](unsigned x) { for_each_bit(src[q], [&](unsigned y) { joins |= bit(x | y); }); });
      Row g = 0;
      for (Mask a = 0; a < A.size(); ++a) {
        if (s1.targets(a) & joins) g |= bit(a);
      }
      good[p * nb + q] = g;
    }
  }
  bool fails = false;
  for (Mask b1 = 0; b1 < nb && !fails; ++b1) {
    for (Mask b2 = 0; b2 < nb && !fails; ++b2) {
      const Row lhs = src[b1 | b2];
      if (!lhs) continue;
      for_each_bit(s2.targets(b1), [&](unsigned p) {
        for_each_bit(s2.targets(b2), [&](unsigned q) {
          if (lhs & ~good[p * nb + q]) fails = true;
        });
      });
    }
  }
  if (fails) {
    r.c2b = false;
    const auto& la = lex_order(A.n_atoms());
    const auto& lb = lex_order(B.n_atoms());
    for (Mask a : la) {
      for (Mask b1 : lb) {
        for (Mask b2 : lb) {
          if (!t.relates(a, b1 | b2)) continue;
          for (Mask p : lex_members(s2.targets(b1))) {
            for (Mask q : lex_members(s2.targets(b2))) {
              if (!has(good[p * nb + q], a)) {
                if (r.c2a) r.witness = {a, b1, b2, p, q};
                return r;
              }
            }
          }
        }
      }
    }
  }
  return r;
}

/// T is an isomorphism iff T and T~ are both functional.
inline bool is_isomorphism(const Subordination& t, const Subordination& s1, const Subordination& s2) {
  return is_functional(t, s1, s2).functional && is_functional(tilde_inverse(t), s2, s1).functional;
}

// ---------------------------------------------------------------------------
// Maps between de Vries algebras

/// A function between the carriers of two S5-subordination algebras.
struct DeVriesMap {
  SubAlgebra dom;
  SubAlgebra cod;
  std::vector<Mask> table;

  DeVriesMap(SubAlgebra d, SubAlgebra c, std::vector<Mask> t) : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
    if (table.size() != dom.alg().size()) throw PreconditionError("DeVriesMap: table size differs from domain size");
    for (Mask v : table) {
      if (!cod.alg().contains(v)) throw PreconditionError("DeVriesMap: value " + format_mask(v) + " out of range");
    }
  }

  static DeVriesMap identity(const SubAlgebra& b) {
    std::vector<Mask> t(b.alg().size());
    for (Mask m = 0; m < t.size(); ++m) t[m] = m;
    return DeVriesMap(b, b, std::move(t));
  }

  Mask operator()(Mask a) const { return table.at(a); }

  friend bool operator==(const DeVriesMap& a, const DeVriesMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }
};

/// M1-M4 plus the multiplicative and lower-continuity conditions, with
/// the first failing instance of each as text.
struct DeVriesFlags {
  bool m1 = true, m2 = true, m3 = true, m4 = true;
  bool mult = true;
  bool lower_cont = true;
  std::vector<std::string> failures;

  bool morphism() const { return m1 && m2 && m3 && m4; }
  bool continuous_mult() const { return mult && lower_cont; }
};

inline DeVriesFlags check_devries_morphism(const DeVriesMap& f) {
  DeVriesFlags fl;
  const BoolAlg A = f.dom.alg();
  const BoolAlg B = f.cod.alg();
  const Subordination& s1 = f.dom.s();
  const Subordination& s2 = f.cod.s();
  const auto& la = lex_order(A.n_atoms());
  if (f(0) != 0) {
    fl.m1 = false;
    fl.failures.push_back("M1: f({}) = " + format_mask(f(0)));
  }
  for (Mask a : la) {
    for (Mask b : la) {
      if (fl.m2 && f(a & b) != (f(a) & f(b))) {
        fl.m2 = false;
        fl.failures.push_back("M2: meet not preserved at " + detail::pair_text(a, b));
      }
    }
  }
  for (Mask a : la) {
    for (Mask b : lex_members(s1.targets(a))) {
      if (fl.m3 && !s2.relates(B.complement(f(A.complement(a))), f(b))) {
        fl.m3 = false;
        fl.failures.push_back("M3: fails at " + detail::pair_text(a, b));
      }
    }
  }
  for (Mask a : la) {
    Mask j = 0;
    for_each_bit(s1.sources(a), [&](unsigned b) { j |= f(b); });
    if (j != f(a)) {
      fl.m4 = false;
      fl.lower_cont = false;
      fl.failures.push_back("M4: f" + format_mask(a) + " = " + format_mask(f(a)) + " but the join below is " +
                            format_mask(j));
      break;
    }
  }
  if (f(A.top()) != B.top()) {
    fl.mult = false;
    fl.failures.push_back("MULT: f(1) = " + format_mask(f(A.top())));
  } else {
    bool done = false;
    for (Mask a : la) {
      for (Mask b : lex_members(s1.targets(a))) {
        for (Mask c : la) {
          for (Mask d : lex_members(s1.targets(c))) {
            if (!done && !s2.relates(f(a) & f(c), f(b & d))) {
              fl.mult = false;
              done = true;
              fl.failures.push_back("MULT: fails at a, b, c, d = " + format_mask(a) + ", " + format_mask(b) + ", " +
                                    format_mask(c) + ", " + format_mask(d));
            }
          }
        }
      }
    }
  }
  return fl;
}

/// (g * f)(a) = join of g(f(b)) over b S1 a.
inline DeVriesMap devries_compose(const DeVriesMap& f, const DeVriesMap& g) {
  if (!(f.cod == g.dom)) throw MismatchError("devries_compose: middle algebras differ");
  std::vector<Mask> t(f.dom.alg().size());
  for (Mask a = 0; a < t.size(); ++a) {
    Mask j = 0;
    for_each_bit(f.dom.s().sources(a), [&](unsigned b) { j |= g(f(b)); });
    t[a] = j;
  }
  return DeVriesMap(f.dom, g.cod, std::move(t));
}

/// Box_T b = join of T^{-1}[b], from B2 to B1, for continuous compatible
/// T: B1 -> B2 between de Vries algebras.
inline DeVriesMap box_of(const Subordination& t, const SubAlgebra& b1, const SubAlgebra& b2) {
  if (!(b1.profile() & kDeVries) || !(b2.profile() & kDeVries)) {
    throw PreconditionError("box_of: both algebras must be de Vries algebras");
  }
  const ContinuityResult c = is_continuous(t, b1.s(), b2.s());
  if (!c.continuous) throw PreconditionError("box_of: relation is not continuous");
  std::vector<Mask> table(b2.alg().size());
  for (Mask b = 0; b < table.size(); ++b) table[b] = detail::join_row(t.sources(b));
  return DeVriesMap(b2, b1, std::move(table));
}

/// a T_Box b iff a S1 Box b' and b' S2 b for some b'; box: B2 -> B1 gives
/// T_Box: B1 -> B2.
inline Subordination t_of(const DeVriesMap& box) {
  const DeVriesFlags fl = check_devries_morphism(box);
  if (!fl.continuous_mult()) throw PreconditionError("t_of: map is not multiplicative and lower continuous");
  const SubAlgebra& b2 = box.dom;
  const SubAlgebra& b1 = box.cod;
  Subordination t(b1.alg(), b2.alg());
  for (Mask bp = 0; bp < b2.alg().size(); ++bp) {
    const Row as = b1.s().sources(box(bp));
    const Row bs = b2.s().targets(bp);
    for_each_bit(as, [&](unsigned a) { t.set_targets(a, t.targets(a) | bs); });
  }
  return t;
}

}  // namespace subordkit
