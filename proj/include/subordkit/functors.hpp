#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subordkit/boolcore.hpp"
#include "subordkit/frames.hpp"
#include "subordkit/subord.hpp"

namespace subordkit {

/// The frame of round ideals of an S5-subordination algebra. Every finite
/// ideal is principal, so the round ideals are the round down-sets of
/// their generators; elements are ordered by (generator size, generator).
class RoundIdealFrame {
 public:
  explicit RoundIdealFrame(SubAlgebra base) : base_(std::move(base)) {
    const BoolAlg& alg = base_.alg();
    const Subordination& s = base_.s();
    std::vector<Mask> gens;
    for (Mask a = 0; a < alg.size(); ++a) {
      const Row ideal = ElemFamily::down(alg, a).row();
      if (s.preimage(ideal) == ideal) gens.push_back(a);
    }
    std::stable_sort(gens.begin(), gens.end(), [](Mask a, Mask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : lex_less(a, b);
    });
    gens_ = gens;
    for (Mask g : gens_) ideals_.push_back(ElemFamily::down(alg, g).row());
    std::vector<Row> up(gens_.size(), 0);
    std::vector<std::string> labels;
    for (Idx i = 0; i < gens_.size(); ++i) {
      labels.push_back("down" + format_mask(gens_[i]));
      for (Idx j = 0; j < gens_.size(); ++j) {
        if ((ideals_[i] & ~ideals_[j]) == 0) up[i] |= bit(j);
      }
    }
    frame_ = FinFrame::make(std::move(up), std::move(labels));
  }

  const SubAlgebra& base() const { return base_; }
  const BoolAlg& alg() const { return base_.alg(); }
  const FinFrame& frame() const { return *frame_; }
  unsigned size() const { return static_cast<unsigned>(gens_.size()); }
  /// Generator a of the element ↓a.
  Mask generator(Idx i) const { return gens_.at(i); }
  const std::vector<Mask>& generators() const { return gens_; }
  /// Members of the ideal as a row over the algebra carrier.
  Row ideal(Idx i) const { return ideals_.at(i); }
  ElemFamily family(Idx i) const { return ElemFamily::from_row(alg(), ideals_.at(i), FamilyKind::ideal); }

  std::optional<Idx> index_of(Row ideal) const {
    for (Idx i = 0; i < ideals_.size(); ++i) {
      if (ideals_[i] == ideal) return i;
    }
    return std::nullopt;
  }

  Idx index_or_throw(Row ideal, const char* what) const {
    auto i = index_of(ideal);
    if (!i) throw PreconditionError(std::string(what) + ": result is not a round ideal");
    return *i;
  }

  /// I* = S^{-1}[not U(I)], as an ideal row.
  Row pseudocomplement_formula(Idx i) const {
    const ElemFamily u = upper_bounds(family(i));
    return base_.s().preimage(negate_family(u)).row();
  }

  /// not S[U(I)], the other side of the negation lemma.
  Row pseudocomplement_negated_image(Idx i) const {
    const ElemFamily u = upper_bounds(family(i));
    return negate_family(base_.s().image(u)).row();
  }

  /// I well inside J iff U(I) meets J.
  bool well_inside_formula(Idx i, Idx j) const {
    return upper_bounds(family(i)).intersects(family(j));
  }

  /// I = S^{-1}[L(S[U(I)])].
  bool normal_formula(Idx i) const {
    const ElemFamily u = upper_bounds(family(i));
    const ElemFamily l = lower_bounds(base_.s().image(u));
    return base_.s().preimage(l.row()) == ideals_.at(i);
  }

 private:
  SubAlgebra base_;
  std::vector<Mask> gens_;
  std::vector<Row> ideals_;
  std::optional<FinFrame> frame_;
};

inline RoundIdealFrame round_ideals(const SubAlgebra& b) { return RoundIdealFrame(b); }

/// Exact agreement of the formula-based and generic pseudocomplement and
/// well-inside, plus validity and regularity of the frame.
struct RoundIdealReport {
  bool frame_valid = true;
  bool pseudocomplement_agrees = true;
  bool well_inside_agrees = true;
  bool regular = true;
  std::string detail;

  bool ok() const { return frame_valid && pseudocomplement_agrees && well_inside_agrees && regular; }
};

inline RoundIdealReport check_round_ideal_frame(const RoundIdealFrame& ri) {
  RoundIdealReport rep;
  const FinFrame& f = ri.frame();
  rep.frame_valid = validate_frame(f.up_rows()).valid();
  for (Idx i = 0; i < ri.size() && rep.pseudocomplement_agrees; ++i) {
    const Row formula = ri.pseudocomplement_formula(i);
    const Row other = ri.pseudocomplement_negated_image(i);
    const Row generic = ri.ideal(pseudocomplement(f, i));
    if (formula != generic || other != generic) {
      rep.pseudocomplement_agrees = false;
      rep.detail = "pseudocomplement of down" + format_mask(ri.generator(i)) + " disagrees";
    }
  }
  for (Idx i = 0; i < ri.size() && rep.well_inside_agrees; ++i) {
    for (Idx j = 0; j < ri.size(); ++j) {
      if (ri.well_inside_formula(i, j) != well_inside(f, i, j)) {
        rep.well_inside_agrees = false;
        rep.detail = "well-inside of down" + format_mask(ri.generator(i)) + ", down" +
                     format_mask(ri.generator(j)) + " disagrees";
        break;
      }
    }
  }
  rep.regular = is_regular_frame(f);
  if (!rep.regular && rep.detail.empty()) rep.detail = "round-ideal frame is not regular";
  return rep;
}

/// RI(T): RI(B2) -> RI(B1), I -> T^{-1}[I], for compatible T: B1 -> B2.
inline LatticeMap ri_on_morphism(const Subordination& t, const RoundIdealFrame& ri1, const RoundIdealFrame& ri2) {
  const CompatResult c = is_compatible(t, ri1.base().s(), ri2.base().s());
  if (!c.compatible) {
    throw PreconditionError("ri_on_morphism: relation is not compatible (" + c.equation + " fails at (" +
                            format_mask(c.witness.first) + ";" + format_mask(c.witness.second) + "))");
  }
  std::vector<Idx> table(ri2.size());
  for (Idx i = 0; i < ri2.size(); ++i) table[i] = ri1.index_or_throw(t.preimage(ri2.ideal(i)), "ri_on_morphism");
  return LatticeMap(ri2.frame(), ri1.frame(), std::move(table));
}

/// NI(B): the booleanization of RI(B), with the regular-part algebra in atom
/// coordinates. normal[m] is the RI index of the normal ideal with mask m.
struct MacNeilleAlgebra {
  RoundIdealFrame ri;
  RegularPart rp;

  const SubAlgebra& algebra() const { return rp.algebra; }
  Idx ri_index(Mask m) const { return rp.original(m); }
  Row ideal(Mask m) const { return ri.ideal(ri_index(m)); }
  std::optional<Mask> mask_of(Row ideal) const {
    auto i = ri.index_of(ideal);
    if (!i) return std::nullopt;
    auto j = rp.b.index_of(*i);
    if (!j) return std::nullopt;
    return rp.coords.to_mask(*j);
  }
};

inline MacNeilleAlgebra macneille(const SubAlgebra& b) {
  RoundIdealFrame ri(b);
  RegularPart rp = regular_part(ri.frame());
  return {std::move(ri), std::move(rp)};
}

/// Whether the normal elements found by booleanization are exactly the round
/// ideals satisfying the fixpoint formula, and whether the inherited
/// well-inside matches U(I) meets J.
struct MacNeilleReport {
  bool fixpoint_agrees = true;
  bool prec_agrees = true;
  std::string detail;
};

inline MacNeilleReport check_macneille(const MacNeilleAlgebra& ni) {
  MacNeilleReport rep;
  for (Idx i = 0; i < ni.ri.size(); ++i) {
    const bool by_booleanization = ni.rp.b.index_of(i).has_value();
    if (by_booleanization != ni.ri.normal_formula(i)) {
      rep.fixpoint_agrees = false;
      rep.detail = "down" + format_mask(ni.ri.generator(i)) + " differs between booleanization and fixpoint";
      break;
    }
  }
  const BoolAlg alg = ni.algebra().alg();
  for (Mask x = 0; x < alg.size() && rep.prec_agrees; ++x) {
    for (Mask y = 0; y < alg.size(); ++y) {
      if (ni.algebra().s().relates(x, y) != ni.ri.well_inside_formula(ni.ri_index(x), ni.ri_index(y))) {
        rep.prec_agrees = false;
        rep.detail = "well-inside differs at " + format_mask(x) + ", " + format_mask(y);
        break;
      }
    }
  }
  return rep;
}

/// a Q I iff a is in I, from B to NI(B).
inline Subordination q_relation(const MacNeilleAlgebra& ni) {
  const BoolAlg& a = ni.ri.alg();
  const BoolAlg nb = ni.algebra().alg();
  Subordination q(a, nb);
  for (Mask m = 0; m < nb.size(); ++m) {
    for_each_bit(ni.ideal(m), [&](unsigned x) { q.add(x, m); });
  }
  return q;
}

/// With T the tilde inverse of Q: T o Q = S and Q o T = the well-inside of NI.
struct QIsoReport {
  bool left = true;   // T o Q = S
  bool right = true;  // Q o T = prec
  bool q_compatible = true;
  std::string detail;
};

inline QIsoReport check_q_iso(const MacNeilleAlgebra& ni) {
  QIsoReport rep;
  const Subordination q = q_relation(ni);
  const Subordination t = tilde_inverse(q);
  const Subordination& s = ni.ri.base().s();
  const Subordination& prec = ni.algebra().s();
  rep.q_compatible = is_compatible(q, s, prec).compatible;
  if (auto d = first_difference(compose(q, t), s)) {
    rep.left = false;
    rep.detail = "T o Q differs from S at (" + format_mask(d->first) + ";" + format_mask(d->second) + ")";
  }
  if (auto d = first_difference(compose(t, q), prec)) {
    rep.right = false;
    rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("Q o T differs from prec at (") +
                  format_mask(d->first) + ";" + format_mask(d->second) + ")";
  }
  return rep;
}

/// a in J iff a in I and I well inside J for some normal I; returns the
/// first (a, J) where the two sides differ.
inline std::optional<std::pair<Mask, Idx>> interpolation_counterexample(const MacNeilleAlgebra& ni) {
  const FinFrame& f = ni.ri.frame();
  const BoolAlg& alg = ni.ri.alg();
  for (Mask a : lex_order(alg.n_atoms())) {
    for (Idx j = 0; j < ni.ri.size(); ++j) {
      const bool lhs = has(ni.ri.ideal(j), a);
      bool rhs = false;
      for (Idx k : ni.rp.b.incl) {
        if (has(ni.ri.ideal(k), a) && well_inside(f, k, j)) rhs = true;
      }
      if (lhs != rhs) return std::pair{a, j};
    }
  }
  return std::nullopt;
}

/// iota(b) = S^{-1}[↓b] for every b, with injectivity and the test
/// "a S b iff iota(a) well inside iota(b)".
struct IotaReport {
  std::vector<Row> images;
  bool injective = true;
  bool structure_preserving = true;
  std::string detail;
};

inline Row iota(const SubAlgebra& b, Mask x) {
  return b.s().preimage(ElemFamily::down(b.alg(), x).row());
}

inline IotaReport iota_report(const MacNeilleAlgebra& ni) {
  IotaReport rep;
  const SubAlgebra& b = ni.ri.base();
  const BoolAlg& alg = b.alg();
  for (Mask x = 0; x < alg.size(); ++x) rep.images.push_back(iota(b, x));
  for (Mask x : lex_order(alg.n_atoms())) {
    for (Mask y : lex_order(alg.n_atoms())) {
      if (rep.injective && !lex_less(y, x) && x != y && rep.images[x] == rep.images[y]) {
        rep.injective = false;
        rep.detail = "iota" + format_mask(x) + " = iota" + format_mask(y);
      }
      if (!rep.structure_preserving) continue;
      const auto ix = ni.mask_of(rep.images[x]);
      const auto iy = ni.mask_of(rep.images[y]);
      const bool rhs = ix && iy && ni.algebra().s().relates(*ix, *iy);
      if (b.s().relates(x, y) != rhs) {
        rep.structure_preserving = false;
        if (rep.detail.empty()) rep.detail = "S and well-inside differ at " + format_mask(x) + ", " + format_mask(y);
      }
    }
  }
  return rep;
}

/// The relation B(box): B M -> B L, b related to a iff b is well inside box a,
/// in the atom coordinates of the two regular parts.
struct BRelation {
  RegularPart from;  // of the codomain M of box
  RegularPart to;    // of the domain L of box
  Subordination rel;
};

inline BRelation b_on_morphism(const LatticeMap& box) {
  if (!is_preframe(box)) throw PreconditionError("b_on_morphism: map is not a preframe homomorphism");
  if (!is_regular_frame(box.dom) || !is_regular_frame(box.cod)) {
    throw PreconditionError("b_on_morphism: frames must be regular");
  }
  RegularPart from = regular_part(box.cod);
  RegularPart to = regular_part(box.dom);
  Subordination rel(from.algebra.alg(), to.algebra.alg());
  for (Mask b = 0; b < from.algebra.alg().size(); ++b) {
    for (Mask a = 0; a < to.algebra.alg().size(); ++a) {
      if (well_inside(box.cod, from.original(b), box(to.original(a)))) rel.add(b, a);
    }
  }
  return {std::move(from), std::move(to), std::move(rel)};
}

/// f_L(a) = {b in B L : b well inside a}, from L to RI(B L, prec).
struct FIso {
  RegularPart rp;
  RoundIdealFrame ri;
  LatticeMap map;
};

inline FIso f_iso(const FinFrame& l) {
  if (!is_regular_frame(l)) throw PreconditionError("f_iso: frame is not regular");
  RegularPart rp = regular_part(l);
  RoundIdealFrame ri(rp.algebra);
  std::vector<Idx> table(l.size());
  const BoolAlg alg = rp.algebra.alg();
  for (Idx a = 0; a < l.size(); ++a) {
    Row members = 0;
    for (Mask b = 0; b < alg.size(); ++b) {
      if (well_inside(l, rp.original(b), a)) members |= bit(b);
    }
    table[a] = ri.index_or_throw(members, "f_iso");
  }
  LatticeMap m(l, ri.frame(), std::move(table));
  return {std::move(rp), std::move(ri), std::move(m)};
}

// ---------------------------------------------------------------------------
// Functor laws as predicates

/// RI(S) is the identity of RI(B).
inline bool ri_identity_law(const RoundIdealFrame& ri) {
  return ri_on_morphism(ri.base().s(), ri, ri) == LatticeMap::identity(ri.frame());
}

/// RI(T2 o T1) = RI(T1) o RI(T2).
inline bool ri_composition_law(const Subordination& t1, const Subordination& t2, const RoundIdealFrame& ri1,
                               const RoundIdealFrame& ri2, const RoundIdealFrame& ri3) {
  const LatticeMap lhs = ri_on_morphism(compose(t1, t2), ri1, ri3);
  const LatticeMap rhs = compose(ri_on_morphism(t2, ri2, ri3), ri_on_morphism(t1, ri1, ri2));
  return lhs == rhs;
}

/// B(id) is the well-inside relation of B L.
inline bool b_identity_law(const FinFrame& l) {
  const BRelation r = b_on_morphism(LatticeMap::identity(l));
  return r.rel == r.to.algebra.s();
}

/// B(box2 o box1) = B(box1) o B(box2).
inline bool b_composition_law(const LatticeMap& box1, const LatticeMap& box2) {
  const BRelation lhs = b_on_morphism(compose(box1, box2));
  return lhs.rel == compose(b_on_morphism(box2).rel, b_on_morphism(box1).rel);
}

/// NI(T) o Q_B1 = Q_B2 o T, with NI(T) = B(RI(T)).
inline bool naturality_q(const Subordination& t, const MacNeilleAlgebra& ni1, const MacNeilleAlgebra& ni2) {
  const LatticeMap rit = ri_on_morphism(t, ni1.ri, ni2.ri);
  const BRelation nit = b_on_morphism(rit);
  const Subordination lhs = compose(q_relation(ni1), nit.rel);
  const Subordination rhs = compose(t, q_relation(ni2));
  return lhs == rhs;
}

/// RI(B box) o f_L = f_M o box.
inline bool naturality_f(const LatticeMap& box) {
  const FIso fl = f_iso(box.dom);
  const FIso fm = f_iso(box.cod);
  const BRelation bb = b_on_morphism(box);
  // B box: (B M, prec) -> (B L, prec); RI of it maps RI(B L) to RI(B M).
  const LatticeMap ri_bb = ri_on_morphism(bb.rel, fm.ri, fl.ri);
  return compose(fl.map, ri_bb) == compose(box, fm.map);
}

}  // namespace subordkit
