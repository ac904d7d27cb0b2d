#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subordkit/frames.hpp"
#include "subordkit/functors.hpp"
#include "subordkit/morphclass.hpp"
#include "subordkit/space.hpp"
#include "subordkit/subord.hpp"

namespace subordkit {

// Finite spaces are discrete, so interior and closure are identities. They
// are kept as named functions so the formulas below read as stated.
inline PointSet interior(PointSet u) { return u; }
inline PointSet closure(PointSet u) { return u; }

/// Points of B are its atoms (the principal ultrafilters); x R_S y iff
/// S[x] is contained in y. Throws if R_S is not an equivalence.
inline FinSubSpace ult(const SubAlgebra& b) {
  const BoolAlg& alg = b.alg();
  const unsigned n = alg.n_atoms();
  std::vector<PointSet> rel(n, 0);
  for (unsigned x = 0; x < n; ++x) {
    const Row ux = ElemFamily::up(alg, Mask{1} << x).row();
    const Row img = b.s().image(ux);
    for (unsigned y = 0; y < n; ++y) {
      const Row uy = ElemFamily::up(alg, Mask{1} << y).row();
      if ((img & ~uy) == 0) rel[x] |= PointSet{1} << y;
    }
  }
  std::vector<unsigned> labels(n);
  for (unsigned x = 0; x < n; ++x) {
    if (!((rel[x] >> x) & 1u)) throw PreconditionError("ult: R_S is not reflexive");
    for (unsigned y = 0; y < n; ++y) {
      if (((rel[x] >> y) & 1u) && rel[x] != rel[y]) throw PreconditionError("ult: R_S is not an equivalence");
    }
    labels[x] = static_cast<unsigned>(std::countr_zero(rel[x]));
  }
  return FinSubSpace(std::move(labels));
}

/// The algebra of (clopen = all) subsets with S_E.
inline SubAlgebra clop(const FinSubSpace& x) { return from_equivalence(x); }

/// X/E with the projection; quotient points are class indices.
struct Quotient {
  unsigned size;
  std::vector<unsigned> proj;

  /// pi[U] as a set of classes.
  PointSet image(PointSet u) const {
    PointSet out = 0;
    for_each_bit(u, [&](unsigned p) { out |= PointSet{1} << proj[p]; });
    return out;
  }

  /// pi^{-1}[V]
  PointSet preimage(PointSet v) const {
    PointSet out = 0;
    for (unsigned p = 0; p < proj.size(); ++p) {
      if ((v >> proj[p]) & 1u) out |= PointSet{1} << p;
    }
    return out;
  }
};

inline Quotient quotient(const FinSubSpace& x) { return {x.n_classes(), x.labels()}; }

/// [x] Q(R) [y] iff x R y, between the discrete quotient spaces.
inline PointRelation q_of_relation(const PointRelation& r) {
  if (auto w = compatibility_witness(r)) {
    throw PreconditionError("q_of_relation: relation is not compatible at (" + std::to_string(w->first) + "," +
                            std::to_string(w->second) + ")");
  }
  const FinSubSpace q1 = FinSubSpace::discrete(r.dom().n_classes());
  const FinSubSpace q2 = FinSubSpace::discrete(r.cod().n_classes());
  PointRelation out(q1, q2);
  for (auto [p, q] : r.pairs()) out.add(r.dom().class_index(p), r.cod().class_index(q));
  // Representative independence.
  for (unsigned p = 0; p < r.dom().points(); ++p) {
    for (unsigned q = 0; q < r.cod().points(); ++q) {
      if (out.relates(r.dom().class_index(p), r.cod().class_index(q)) != r.relates(p, q)) {
        throw PreconditionError("q_of_relation: not well defined");
      }
    }
  }
  return out;
}

/// Box_R U = X minus R^{-1}[X minus U], for R on a single space.
inline PointSet box_rel(const PointRelation& r, PointSet u) {
  const PointSet all = r.dom().all();
  return all & ~r.preimage(r.cod().all() & ~u);
}

/// Box_E U for the equivalence of a space: the largest saturated subset of U.
inline PointSet box_r(const FinSubSpace& x, PointSet u) {
  return x.all() & ~x.saturate(x.all() & ~u);
}

inline PointSet saturate(const FinSubSpace& x, PointSet u) { return x.saturate(u); }
inline bool is_saturated(const FinSubSpace& x, PointSet u) { return x.is_saturated(u); }

/// Injectable Box_R, so checks can run against a deliberately broken one.
using BoxFn = std::function<PointSet(const FinSubSpace&, PointSet)>;

inline BoxFn default_box() { return [](const FinSubSpace& x, PointSet u) { return box_r(x, u); }; }

/// Phi(I): the union of the atom sets of the members of an ideal.
inline PointSet phi(const SubAlgebra& b, const ElemFamily& ideal) {
  if (!(ideal.algebra() == b.alg())) throw MismatchError("phi: family over another algebra");
  if (!is_ideal(ideal)) throw PreconditionError("phi: family is not an ideal");
  return join_all(ideal);
}

/// Psi(F): the intersection of the atom sets of the members of a filter.
inline PointSet psi(const SubAlgebra& b, const ElemFamily& filter) {
  if (!(filter.algebra() == b.alg())) throw MismatchError("psi: family over another algebra");
  if (!is_filter(filter)) throw PreconditionError("psi: family is not a filter");
  return meet_all(filter);
}

/// Every ideal of the algebra of b (principal, one per element).
inline std::vector<ElemFamily> all_ideals(const BoolAlg& alg) {
  std::vector<ElemFamily> out;
  for (Mask a : lex_order(alg.n_atoms())) out.push_back(ElemFamily::down(alg, a));
  return out;
}

inline std::vector<ElemFamily> all_filters(const BoolAlg& alg) {
  std::vector<ElemFamily> out;
  for (Mask a : lex_order(alg.n_atoms())) out.push_back(ElemFamily::up(alg, a));
  return out;
}

/// A failed point-set law: which law, on which family, and the two sides.
struct LawFailure {
  std::string law;
  std::string family;
  std::string detail;
};

/// Phi(not F) = Psi(F)^c, Phi(L(F)) = int Psi(F), Psi(not I) = Phi(I)^c,
/// Psi(U(I)) = cl Phi(I), over every ideal and filter.
inline std::optional<LawFailure> check_translation_laws(const SubAlgebra& b) {
  const BoolAlg& alg = b.alg();
  const PointSet all = alg.top();
  for (const ElemFamily& f : all_filters(alg)) {
    if (phi(b, negate_family(f)) != (all & ~psi(b, f))) {
      return LawFailure{"phi-neg", format_family(f), "Phi(not F) differs from Psi(F)^c"};
    }
    if (phi(b, lower_bounds(f)) != interior(psi(b, f))) {
      return LawFailure{"phi-lower", format_family(f), "Phi(L(F)) differs from int Psi(F)"};
    }
  }
  for (const ElemFamily& i : all_ideals(alg)) {
    if (psi(b, negate_family(i)) != (all & ~phi(b, i))) {
      return LawFailure{"psi-neg", format_family(i), "Psi(not I) differs from Phi(I)^c"};
    }
    if (psi(b, upper_bounds(i)) != closure(phi(b, i))) {
      return LawFailure{"psi-upper", format_family(i), "Psi(U(I)) differs from cl Phi(I)"};
    }
  }
  return std::nullopt;
}

/// Phi(S^{-1}[I]) = Box_R Phi(I) for every ideal I.
inline std::optional<LawFailure> check_phi_box(const SubAlgebra& b, const BoxFn& box = default_box()) {
  const FinSubSpace x = ult(b);
  for (const ElemFamily& i : all_ideals(b.alg())) {
    const ElemFamily pre = ElemFamily::from_row(b.alg(), b.s().preimage(i.row()), FamilyKind::ideal);
    const PointSet lhs = phi(b, pre);
    const PointSet rhs = box(x, phi(b, i));
    if (lhs != rhs) {
      return LawFailure{"phi-box", format_family(i),
                        "Phi(S^-1[I]) = " + format_mask(lhs) + " but Box_R Phi(I) = " + format_mask(rhs)};
    }
  }
  return std::nullopt;
}

/// Psi(S[F]) = R[Psi(F)] for every filter F.
inline std::optional<LawFailure> check_psi_r(const SubAlgebra& b) {
  const FinSubSpace x = ult(b);
  const PointRelation r = PointRelation::equivalence(x);
  for (const ElemFamily& f : all_filters(b.alg())) {
    const ElemFamily img = ElemFamily::from_row(b.alg(), b.s().image(f.row()), FamilyKind::filter);
    const PointSet lhs = psi(b, img);
    const PointSet rhs = r.image(psi(b, f));
    if (lhs != rhs) {
      return LawFailure{"psi-r", format_family(f),
                        "Psi(S[F]) = " + format_mask(lhs) + " but R[Psi(F)] = " + format_mask(rhs)};
    }
  }
  return std::nullopt;
}

/// O_R(X): the saturated (open) subsets, ordered by (size, mask).
inline std::vector<PointSet> saturated_opens(const FinSubSpace& x) {
  std::vector<PointSet> out;
  for (PointSet u = 0; u <= x.all(); ++u) {
    if (x.is_saturated(interior(u)) && interior(u) == u) out.push_back(u);
  }
  std::stable_sort(out.begin(), out.end(), [](PointSet a, PointSet b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  return out;
}

inline FinFrame saturated_open_frame(const FinSubSpace& x) { return FinFrame::from_sets(saturated_opens(x)); }

/// The frame of opens of a discrete space with k points.
inline FinFrame discrete_open_frame(unsigned k) {
  std::vector<PointSet> sets;
  for (PointSet u = 0; u < (PointSet{1} << k); ++u) sets.push_back(u);
  std::stable_sort(sets.begin(), sets.end(), [](PointSet a, PointSet b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  return FinFrame::from_sets(sets);
}

/// R-regular opens: saturated opens fixed by Box_R int R cl, with
/// U prec V iff R[cl U] is contained in V.
struct RegularOpens {
  std::vector<PointSet> elements;
  FinFrame frame;
  std::vector<Row> prec;  // prec[i] holds j with elements[i] prec elements[j]
};

inline RegularOpens r_regular_opens(const FinSubSpace& x, const BoxFn& box = default_box()) {
  std::vector<PointSet> els;
  for (PointSet u : saturated_opens(x)) {
    if (box(x, interior(x.saturate(closure(u)))) == u) els.push_back(u);
  }
  FinFrame f = FinFrame::from_sets(els);
  std::vector<Row> prec(els.size(), 0);
  for (Idx i = 0; i < els.size(); ++i) {
    for (Idx j = 0; j < els.size(); ++j) {
      if ((x.saturate(closure(els[i])) & ~els[j]) == 0) prec[i] |= bit(j);
    }
  }
  return {std::move(els), std::move(f), std::move(prec)};
}

inline std::optional<Idx> index_in(const std::vector<PointSet>& sets, PointSet u) {
  for (Idx i = 0; i < sets.size(); ++i) {
    if (sets[i] == u) return i;
  }
  return std::nullopt;
}

/// Outcome of the explicit isomorphisms between the round-ideal side, the
/// saturated opens and the quotient space.
struct DualityReport {
  bool ri_to_or = true;     // Phi: RI(B) -> O_R(X)
  bool or_to_quot = true;   // pi: O_R(X) -> O(X/R)
  bool ri_to_quot = true;   // pi o Phi
  bool ni_to_ro = true;     // Phi: NI(B) -> RO_R(X), preserving prec both ways
  bool ro_to_quot = true;   // pi: RO_R(X) -> RO(X/R)
  bool ro_equals_or = true; // RO_R = O_R at finite scale
  bool phi_star = true;     // Phi(I*) = Box_R int(Phi(I)^c)
  bool phi_double_star = true;  // Phi(I**) = Box_R int(R[cl Phi(I)])
  unsigned quotient_size = 0;
  std::string detail;

  bool ok() const {
    return ri_to_or && or_to_quot && ri_to_quot && ni_to_ro && ro_to_quot && ro_equals_or && phi_star &&
           phi_double_star;
  }
};

inline DualityReport duality_isomorphisms(const SubAlgebra& b, const BoxFn& box = default_box()) {
  DualityReport rep;
  auto note = [&](const std::string& s) {
    if (rep.detail.empty()) rep.detail = s;
  };
  const FinSubSpace x = ult(b);
  const Quotient q = quotient(x);
  rep.quotient_size = q.size;
  const MacNeilleAlgebra ni = macneille(b);
  const RoundIdealFrame& ri = ni.ri;
  const std::vector<PointSet> opens = saturated_opens(x);
  const FinFrame or_frame = FinFrame::from_sets(opens);
  const FinFrame quot_frame = discrete_open_frame(q.size);
  std::vector<PointSet> quot_sets;
  for (Idx i = 0; i < quot_frame.size(); ++i) quot_sets.push_back(static_cast<PointSet>(i));
  {
    std::vector<PointSet> s;
    for (PointSet u = 0; u < (PointSet{1} << q.size); ++u) s.push_back(u);
    std::stable_sort(s.begin(), s.end(), [](PointSet a, PointSet c) {
      return std::popcount(a) != std::popcount(c) ? std::popcount(a) < std::popcount(c) : a < c;
    });
    quot_sets = s;
  }
  auto phi_row = [&](Row ideal) { return phi(b, ElemFamily::from_row(b.alg(), ideal, FamilyKind::ideal)); };

  // RI(B) -> O_R(X)
  std::vector<Idx> t1(ri.size());
  for (Idx i = 0; i < ri.size() && rep.ri_to_or; ++i) {
    auto j = index_in(opens, phi_row(ri.ideal(i)));
    if (!j) {
      rep.ri_to_or = false;
      note("Phi(down" + format_mask(ri.generator(i)) + ") is not a saturated open");
    } else {
      t1[i] = *j;
    }
  }
  if (rep.ri_to_or && (opens.size() != ri.size() || !frame_iso_check(LatticeMap(ri.frame(), or_frame, t1)))) {
    rep.ri_to_or = false;
    note("Phi is not an isomorphism RI(B) -> O_R(X)");
  }

  // O_R(X) -> O(X/R)
  std::vector<Idx> t2(opens.size());
  for (Idx i = 0; i < opens.size() && rep.or_to_quot; ++i) {
    auto j = index_in(quot_sets, q.image(opens[i]));
    if (!j || q.preimage(q.image(opens[i])) != opens[i]) {
      rep.or_to_quot = false;
      note("pi does not map " + format_mask(opens[i]) + " to an open of X/R");
    } else {
      t2[i] = *j;
    }
  }
  if (rep.or_to_quot && (opens.size() != quot_sets.size() ||
                         !frame_iso_check(LatticeMap(or_frame, quot_frame, t2)))) {
    rep.or_to_quot = false;
    note("pi is not an isomorphism O_R(X) -> O(X/R)");
  }
  if (rep.ri_to_or && rep.or_to_quot) {
    rep.ri_to_quot = frame_iso_check(compose(LatticeMap(ri.frame(), or_frame, t1), LatticeMap(or_frame, quot_frame, t2)));
    if (!rep.ri_to_quot) note("RI(B) -> O(X/R) is not an isomorphism");
  } else {
    rep.ri_to_quot = false;
  }

  // NI(B) -> RO_R(X)
  const RegularOpens ro = r_regular_opens(x, box);
  rep.ro_equals_or = ro.elements == opens;
  if (!rep.ro_equals_or) note("RO_R(X) differs from O_R(X)");
  const auto& incl = ni.rp.b.incl;
  std::vector<Idx> t3(incl.size());
  for (Idx k = 0; k < incl.size() && rep.ni_to_ro; ++k) {
    auto j = index_in(ro.elements, phi_row(ri.ideal(incl[k])));
    if (!j) {
      rep.ni_to_ro = false;
      note("Phi(down" + format_mask(ri.generator(incl[k])) + ") is not R-regular");
    } else {
      t3[k] = *j;
    }
  }
  if (rep.ni_to_ro) {
    if (ro.elements.size() != incl.size() || !frame_iso_check(LatticeMap(ni.rp.b.frame, ro.frame, t3))) {
      rep.ni_to_ro = false;
      note("Phi is not an isomorphism NI(B) -> RO_R(X)");
    } else {
      for (Idx k = 0; k < incl.size(); ++k) {
        for (Idx l = 0; l < incl.size(); ++l) {
          const bool lhs = well_inside(ri.frame(), incl[k], incl[l]);
          if (lhs != has(ro.prec[t3[k]], t3[l])) {
            rep.ni_to_ro = false;
            note("prec is not preserved between NI(B) and RO_R(X)");
          }
        }
      }
    }
  }

  // RO_R(X) -> RO(X/R): every subset of a discrete space is regular open,
  // and there cl U inside V is plain inclusion.
  std::vector<Idx> t4(ro.elements.size());
  for (Idx i = 0; i < ro.elements.size() && rep.ro_to_quot; ++i) {
    auto j = index_in(quot_sets, q.image(ro.elements[i]));
    if (!j) {
      rep.ro_to_quot = false;
    } else {
      t4[i] = *j;
    }
  }
  if (rep.ro_to_quot) {
    if (ro.elements.size() != quot_sets.size() || !frame_iso_check(LatticeMap(ro.frame, quot_frame, t4))) {
      rep.ro_to_quot = false;
      note("pi is not an isomorphism RO_R(X) -> RO(X/R)");
    } else {
      for (Idx i = 0; i < ro.elements.size(); ++i) {
        for (Idx j = 0; j < ro.elements.size(); ++j) {
          const bool quot_prec = (closure(quot_sets[t4[i]]) & ~quot_sets[t4[j]]) == 0;
          if (has(ro.prec[i], j) != quot_prec) {
            rep.ro_to_quot = false;
            note("prec is not preserved between RO_R(X) and RO(X/R)");
          }
        }
      }
    }
  }

  // Pseudocomplement formulas.
  const FinFrame& f = ri.frame();
  for (Idx i = 0; i < ri.size(); ++i) {
    const PointSet p = phi_row(ri.ideal(i));
    const Idx star = pseudocomplement(f, i);
    if (phi_row(ri.ideal(star)) != box(x, interior(x.all() & ~p))) {
      rep.phi_star = false;
      note("Phi(I*) formula fails at down" + format_mask(ri.generator(i)));
    }
    const Idx dstar = pseudocomplement(f, star);
    if (phi_row(ri.ideal(dstar)) != box(x, interior(x.saturate(closure(p))))) {
      rep.phi_double_star = false;
      note("Phi(I**) formula fails at down" + format_mask(ri.generator(i)));
    }
  }
  return rep;
}

/// The four conditions on a compatible point relation: Q(R) continuous,
/// preimages of saturated opens open, clopen interpolation, and the
/// algebraic condition on S_R. Topologies are discrete and evaluated
/// through interior/closure.
struct FourWayReport {
  bool q_continuous = true;
  bool saturated_preimage = true;
  bool clopen_interpolation = true;
  bool algebraic = true;

  bool agree() const {
    return q_continuous == saturated_preimage && saturated_preimage == clopen_interpolation &&
           clopen_interpolation == algebraic;
  }
};

inline FourWayReport continuity_crosscheck(const PointRelation& r) {
  FourWayReport rep;
  const PointRelation qr = q_of_relation(r);
  const FinSubSpace& x1 = r.dom();
  const FinSubSpace& x2 = r.cod();
  auto is_open = [](PointSet u) { return interior(u) == u; };
  auto is_closed = [](PointSet u) { return closure(u) == u; };
  // A relation between spaces is continuous when preimages of opens are
  // open and preimages of closed sets are closed.
  for (PointSet u = 0; u <= qr.cod().all(); ++u) {
    if (is_open(u) && !is_open(qr.preimage(u))) rep.q_continuous = false;
    if (is_closed(u) && !is_closed(qr.preimage(u))) rep.q_continuous = false;
  }
  for (PointSet v = 0; v <= x2.all(); ++v) {
    if (is_open(v) && x2.is_saturated(v) && !is_open(r.preimage(v))) rep.saturated_preimage = false;
  }
  for (PointSet b1 = 0; b1 <= x2.all(); ++b1) {
    for (PointSet b2 = 0; b2 <= x2.all(); ++b2) {
      if (x2.saturate(b1) & ~b2) continue;
      bool found = false;
      for (PointSet a = 0; a <= x1.all() && !found; ++a) {
        found = (r.preimage(b1) & ~a) == 0 && (a & ~r.preimage(b2)) == 0;
      }
      if (!found) rep.clopen_interpolation = false;
    }
  }
  const Subordination sr = from_closed_relation(r);
  const SubAlgebra c1 = clop(x1);
  const SubAlgebra c2 = clop(x2);
  const Subordination tt = tilde_inverse(sr);
  for (PointSet b1 = 0; b1 <= x2.all(); ++b1) {
    for (PointSet b2 = 0; b2 <= x2.all(); ++b2) {
      if (!c2.s().relates(b1, b2)) continue;
      bool found = false;
      for_each_bit(tt.targets(b1), [&](unsigned a) {
        if ((tt.targets(b2) & ~c1.s().targets(a)) == 0) found = true;
      });
      if (!found) rep.algebraic = false;
    }
  }
  return rep;
}

/// E1 inside R-converse o R and R o R-converse inside E2.
struct PointFunctional {
  bool functional = true;
  bool total = true;   // E1 inside R^ o R
  bool single = true;  // R o R^ inside E2
  std::optional<std::pair<unsigned, unsigned>> witness;
};

inline PointFunctional point_functional(const PointRelation& r) {
  PointFunctional pf;
  const PointRelation e1 = PointRelation::equivalence(r.dom());
  const PointRelation e2 = PointRelation::equivalence(r.cod());
  const PointRelation rc = converse(r);
  const PointRelation left = compose(r, rc);   // R^ o R on X1
  const PointRelation right = compose(rc, r);  // R o R^ on X2
  for (auto [p, q] : e1.pairs()) {
    if (!left.relates(p, q)) {
      pf.total = false;
      if (!pf.witness) pf.witness = std::pair{p, q};
    }
  }
  for (auto [p, q] : right.pairs()) {
    if (!e2.relates(p, q)) {
      pf.single = false;
      if (!pf.witness) pf.witness = std::pair{p, q};
    }
  }
  pf.functional = pf.total && pf.single;
  return pf;
}

/// Irreducibility of E: E[F] is proper for every proper closed F. At finite
/// scale this forces E to be the identity.
inline bool is_irreducible(const FinSubSpace& x) {
  for (PointSet f = 0; f < x.all(); ++f) {
    if (closure(f) == f && x.saturate(f) == x.all()) return false;
  }
  return true;
}

}  // namespace subordkit
