#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subordkit/boolcore.hpp"
#include "subordkit/space.hpp"

namespace subordkit {

/// Axiom checks enumerate quadruples of elements; they are capped here.
inline constexpr unsigned kMaxAxiomAtoms = 5;

/// A relation T between two finite boolean algebras, stored as the target
/// set T[a] of every domain element. Both sides have at most 6 atoms.
class Subordination {
 public:
  Subordination(const BoolAlg& dom, const BoolAlg& cod) : dom_(dom), cod_(cod) {
    if (dom.n_atoms() > kMaxRowAtoms || cod.n_atoms() > kMaxRowAtoms) {
      throw CapError("Subordination: at most 6 atoms per side");
    }
    rows_.assign(dom.size(), 0);
  }

  Subordination(const BoolAlg& dom, const BoolAlg& cod, const std::vector<std::pair<Mask, Mask>>& pairs)
      : Subordination(dom, cod) {
    for (auto [a, b] : pairs) add(a, b);
  }

  const BoolAlg& dom() const { return dom_; }
  const BoolAlg& cod() const { return cod_; }
  bool is_endo() const { return dom_ == cod_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// T[a] as a row over the codomain carrier.
  Row targets(Mask a) const { return rows_.at(a); }

  /// T^{-1}[b] as a row over the domain carrier.
  Row sources(Mask b) const {
    Row out = 0;
    for (Mask a = 0; a < rows_.size(); ++a) {
      if (has(rows_[a], b)) out |= bit(a);
    }
    return out;
  }

  bool relates(Mask a, Mask b) const { return a < rows_.size() && has(rows_[a], b); }

  void add(Mask a, Mask b) {
    if (!dom_.contains(a) || !cod_.contains(b)) {
      throw PreconditionError("pair (" + format_mask(a) + ";" + format_mask(b) + ") out of range");
    }
    rows_[a] |= bit(b);
  }

  void set_targets(Mask a, Row targets) { rows_.at(a) = targets & full_row(static_cast<unsigned>(cod_.size())); }

  /// T[X] = {b : x T b for some x in X}.
  Row image(Row xs) const {
    Row out = 0;
    for_each_bit(xs, [&](unsigned a) { out |= rows_[a]; });
    return out;
  }

  /// T^{-1}[Y] = {a : a T y for some y in Y}.
  Row preimage(Row ys) const {
    Row out = 0;
    for (Mask a = 0; a < rows_.size(); ++a) {
      if (rows_[a] & ys) out |= bit(a);
    }
    return out;
  }

  ElemFamily image(const ElemFamily& x) const {
    if (!(x.algebra() == dom_)) throw MismatchError("image: family not over the domain");
    return ElemFamily::from_row(cod_, image(x.row()));
  }

  ElemFamily preimage(const ElemFamily& y) const {
    if (!(y.algebra() == cod_)) throw MismatchError("preimage: family not over the codomain");
    return ElemFamily::from_row(dom_, preimage(y.row()));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (Row r : rows_) c += static_cast<std::size_t>(std::popcount(r));
    return c;
  }

  /// All pairs, ordered lexicographically by (a, b).
  std::vector<std::pair<Mask, Mask>> pairs() const {
    std::vector<std::pair<Mask, Mask>> out;
    for (Mask a : lex_order(dom_.n_atoms())) {
      for (Mask b : lex_members(rows_[a])) out.emplace_back(a, b);
    }
    return out;
  }

  friend bool operator==(const Subordination&, const Subordination&) = default;

 private:
  BoolAlg dom_;
  BoolAlg cod_;
  std::vector<Row> rows_;
};

/// "({0};{0}), ({0};{0,1})"
inline std::string format_pairs(const Subordination& t) {
  std::string s;
  for (auto [a, b] : t.pairs()) {
    if (!s.empty()) s += ", ";
    s += "(" + format_mask(a) + ";" + format_mask(b) + ")";
  }
  return s;
}

/// The order relation <= on an algebra.
inline Subordination order(const BoolAlg& alg) {
  Subordination s(alg, alg);
  for (Mask a = 0; a < alg.size(); ++a) s.set_targets(a, ElemFamily::up(alg, a).row());
  return s;
}

/// second o first: a relates to c iff a first b and b second c for some b.
inline Subordination compose(const Subordination& first, const Subordination& second) {
  if (!(first.cod() == second.dom())) throw MismatchError("compose: middle algebras differ");
  Subordination out(first.dom(), second.cod());
  for (Mask a = 0; a < first.dom().size(); ++a) out.set_targets(a, second.image(first.targets(a)));
  return out;
}

inline Subordination converse(const Subordination& t) {
  Subordination out(t.cod(), t.dom());
  for (Mask a = 0; a < t.dom().size(); ++a) {
    for_each_bit(t.targets(a), [&](unsigned b) { out.add(b, a); });
  }
  return out;
}

/// b T~ a iff (not a) T (not b).
inline Subordination tilde_inverse(const Subordination& t) {
  Subordination out(t.cod(), t.dom());
  for (Mask a = 0; a < t.dom().size(); ++a) {
    for_each_bit(t.targets(a), [&](unsigned b) {
      out.add(t.cod().complement(b), t.dom().complement(a));
    });
  }
  return out;
}

inline bool subset_of(const Subordination& a, const Subordination& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw MismatchError("relations on different algebras");
  for (Mask x = 0; x < a.dom().size(); ++x) {
    if (a.targets(x) & ~b.targets(x)) return false;
  }
  return true;
}

/// Lexicographically least pair in exactly one of the two relations.
inline std::optional<std::pair<Mask, Mask>> first_difference(const Subordination& a, const Subordination& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw MismatchError("relations on different algebras");
  for (Mask x : lex_order(a.dom().n_atoms())) {
    const Row d = a.targets(x) ^ b.targets(x);
    if (d) return std::pair{x, lex_members(d).front()};
  }
  return std::nullopt;
}

/// Lexicographically least pair of a that is not in b.
inline std::optional<std::pair<Mask, Mask>> first_excess(const Subordination& a, const Subordination& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw MismatchError("relations on different algebras");
  for (Mask x : lex_order(a.dom().n_atoms())) {
    const Row d = a.targets(x) & ~b.targets(x);
    if (d) return std::pair{x, lex_members(d).front()};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Axioms

enum class Axiom { S1, S2, S3, S4, S5, S6, S7, S8 };

inline constexpr std::array<Axiom, 8> kAllAxioms = {Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4,
                                                    Axiom::S5, Axiom::S6, Axiom::S7, Axiom::S8};

inline std::string to_string(Axiom a) { return "S" + std::to_string(static_cast<int>(a) + 1); }

/// Outcome of one axiom. The witness lists the quantified elements of the
/// lexicographically least failing instance, in the order of the statement.
struct AxiomResult {
  Axiom axiom;
  bool applicable = true;
  bool pass = true;
  std::vector<Mask> witness;
  std::string detail;
};

enum Profile : unsigned {
  kSub = 1u << 0,
  kS5 = 1u << 1,
  kCompingent = 1u << 2,
  kDeVries = 1u << 3,
};

inline std::string format_profile(unsigned p) {
  std::string s;
  auto add = [&](unsigned f, const char* name) {
    if (p & f) s += s.empty() ? name : std::string(",") + name;
  };
  add(kSub, "SUB");
  add(kS5, "S5");
  add(kCompingent, "COMPINGENT");
  add(kDeVries, "DEVRIES");
  return s.empty() ? "-" : s;
}

struct AxiomReport {
  std::array<AxiomResult, 8> results;
  unsigned profile = 0;

  const AxiomResult& operator[](Axiom a) const { return results[static_cast<std::size_t>(a)]; }
  bool all_applicable_pass() const {
    for (const auto& r : results) {
      if (r.applicable && !r.pass) return false;
    }
    return true;
  }
};

namespace detail {

inline std::string wit(std::initializer_list<Mask> ms) {
  std::string s;
  for (Mask m : ms) {
    if (!s.empty()) s += ", ";
    s += format_mask(m);
  }
  return s;
}

inline AxiomResult check_one(const Subordination& t, Axiom ax) {
  const BoolAlg& A = t.dom();
  const BoolAlg& B = t.cod();
  const auto& la = lex_order(A.n_atoms());
  const auto& lb = lex_order(B.n_atoms());
  AxiomResult r{ax, true, true, {}, {}};
  auto fail = [&](std::vector<Mask> w, std::string d) {
    r.pass = false;
    r.witness = std::move(w);
    r.detail = std::move(d);
  };

  switch (ax) {
    case Axiom::S1:
      if (!t.relates(0, 0)) {
        fail({0, 0}, "0 S 0 missing");
      } else if (!t.relates(A.top(), B.top())) {
        fail({A.top(), B.top()}, "1 S 1 missing");
      }
      break;

    case Axiom::S2:
      for (Mask a : la) {
        for (Mask b : la) {
          const Row common = t.targets(a) & t.targets(b) & ~t.targets(a | b);
          if (common) {
            const Mask c = lex_members(common).front();
            fail({a, b, c}, "a S c and b S c but not (a or b) S c for a, b, c = " + wit({a, b, c}));
            return r;
          }
        }
      }
      break;

    case Axiom::S3:
      for (Mask a : la) {
        const Row row = t.targets(a);
        for (Mask c : lb) {
          if (!has(row, c)) continue;
          for (Mask d : lb) {
            if (has(row, d) && !has(row, c & d)) {
              fail({a, c, d}, "a S c and a S d but not a S (c and d) for a, c, d = " + wit({a, c, d}));
              return r;
            }
          }
        }
      }
      break;

    case Axiom::S4: {
      // Fast test: rows are up-closed and shrink as the source grows.
      bool ok = true;
      for (Mask a = 0; a < A.size() && ok; ++a) {
        const Row row = t.targets(a);
        for_each_bit(row, [&](unsigned c) {
          for (unsigned i = 0; i < B.n_atoms(); ++i) {
            if (!has(row, c | (Mask{1} << i))) ok = false;
          }
        });
        for (unsigned i = 0; i < A.n_atoms(); ++i) {
          if ((a >> i) & 1u) {
            if (row & ~t.targets(a & ~(Mask{1} << i))) ok = false;
          }
        }
      }
      if (ok) break;
      for (Mask a : la) {
        for (Mask b : la) {
          if (a & ~b) continue;
          for (Mask c : lex_members(t.targets(b))) {
            for (Mask d : lb) {
              if ((c & ~d) == 0 && !t.relates(a, d)) {
                fail({a, b, c, d}, "a <= b S c <= d but not a S d for a, b, c, d = " + wit({a, b, c, d}));
                return r;
              }
            }
          }
        }
      }
      break;
    }

    case Axiom::S5:
      for (Mask a : la) {
        for (Mask b : lex_members(t.targets(a))) {
          if (a & ~b) {
            fail({a, b}, "a S b but not a <= b for a, b = " + wit({a, b}));
            return r;
          }
        }
      }
      break;

    case Axiom::S6:
      for (Mask a : la) {
        for (Mask b : lex_members(t.targets(a))) {
          if (!t.relates(A.complement(b), A.complement(a))) {
            fail({a, b}, "a S b but not (not b) S (not a) for a, b = " + wit({a, b}));
            return r;
          }
        }
      }
      break;

    case Axiom::S7: {
      std::vector<Row> col(A.size());
      for (Mask b = 0; b < A.size(); ++b) col[b] = t.sources(b);
      for (Mask a : la) {
        for (Mask b : lex_members(t.targets(a))) {
          if ((t.targets(a) & col[b]) == 0) {
            fail({a, b}, "a S b with no c such that a S c S b for a, b = " + wit({a, b}));
            return r;
          }
        }
      }
      break;
    }

    case Axiom::S8:
      for (Mask a : la) {
        if (a == 0) continue;
        if ((t.sources(a) & ~Row{1}) == 0) {
          fail({a}, "no nonzero b with b S a for a = " + format_mask(a));
          return r;
        }
      }
      break;
  }
  return r;
}

inline void check_cap(const Subordination& t) {
  if (t.dom().n_atoms() > kMaxAxiomAtoms || t.cod().n_atoms() > kMaxAxiomAtoms) {
    throw CapError("axiom checks are capped at 5 atoms");
  }
}

}  // namespace detail

/// Evaluates a single axiom. S5-S8 need an endo-relation.
inline AxiomResult check_axiom(const Subordination& t, Axiom ax) {
  detail::check_cap(t);
  if (static_cast<int>(ax) >= static_cast<int>(Axiom::S5) && !t.is_endo()) {
    throw PreconditionError(to_string(ax) + " is only defined for a relation on one algebra");
  }
  return detail::check_one(t, ax);
}

/// Evaluates S1-S8 exhaustively and derives the profile flags. On a
/// relation between two different algebras S5-S8 are marked not applicable.
inline AxiomReport check_axioms(const Subordination& t) {
  detail::check_cap(t);
  AxiomReport rep;
  for (Axiom ax : kAllAxioms) {
    const auto i = static_cast<std::size_t>(ax);
    if (i >= 4 && !t.is_endo()) {
      rep.results[i] = AxiomResult{ax, false, true, {}, "needs a relation on one algebra"};
    } else {
      rep.results[i] = detail::check_one(t, ax);
    }
  }
  auto ok = [&](Axiom a) { return rep[a].applicable && rep[a].pass; };
  if (ok(Axiom::S1) && ok(Axiom::S2) && ok(Axiom::S3) && ok(Axiom::S4)) rep.profile |= kSub;
  if ((rep.profile & kSub) && t.is_endo() && ok(Axiom::S5) && ok(Axiom::S6) && ok(Axiom::S7)) {
    rep.profile |= kS5;
  }
  if ((rep.profile & kS5) && ok(Axiom::S8)) rep.profile |= kCompingent | kDeVries;
  return rep;
}

inline bool is_s5_subordination(const Subordination& t) { return (check_axioms(t).profile & kS5) != 0; }

/// A boolean algebra with an S5-subordination (S1-S7).
class SubAlgebra {
 public:
  /// Throws PreconditionError naming the first failing axiom.
  static SubAlgebra make(Subordination s) {
    if (!s.is_endo()) throw PreconditionError("SubAlgebra: relation must be on one algebra");
    const AxiomReport rep = check_axioms(s);
    for (std::size_t i = 0; i < 7; ++i) {
      if (!rep.results[i].pass) {
        throw PreconditionError("SubAlgebra: " + to_string(rep.results[i].axiom) + " fails: " +
                                rep.results[i].detail);
      }
    }
    return SubAlgebra(std::move(s), rep.profile);
  }

  /// Skips validation; the caller guarantees S1-S7.
  static SubAlgebra trusted(Subordination s, unsigned profile) { return SubAlgebra(std::move(s), profile); }

  const BoolAlg& alg() const { return s_.dom(); }
  const Subordination& s() const { return s_; }
  unsigned profile() const { return profile_; }
  bool compingent() const { return (profile_ & kCompingent) != 0; }

  friend bool operator==(const SubAlgebra& a, const SubAlgebra& b) { return a.s_ == b.s_; }

 private:
  SubAlgebra(Subordination s, unsigned profile) : s_(std::move(s)), profile_(profile) {}
  Subordination s_;
  unsigned profile_;
};

inline SubAlgebra order_algebra(const BoolAlg& alg) {
  return SubAlgebra::trusted(order(alg), kSub | kS5 | kCompingent | kDeVries);
}

/// Result of a compatibility check: which equation fails and at which pair.
struct CompatResult {
  bool compatible = true;
  std::string equation;  // "S2 o T = T" or "T o S1 = T"
  std::pair<Mask, Mask> witness{0, 0};
  bool witness_in_t = false;  // whether the witness pair belongs to T
};

/// S2 o T = T = T o S1.
inline CompatResult is_compatible(const Subordination& t, const Subordination& s1, const Subordination& s2) {
  if (!(t.dom() == s1.dom()) || !s1.is_endo() || !(t.cod() == s2.dom()) || !s2.is_endo()) {
    throw MismatchError("is_compatible: S1 must live on dom(T) and S2 on cod(T)");
  }
  CompatResult r;
  if (auto d = first_difference(compose(t, s2), t)) {
    r = {false, "S2 o T = T", *d, t.relates(d->first, d->second)};
  } else if (auto d2 = first_difference(compose(s1, t), t)) {
    r = {false, "T o S1 = T", *d2, t.relates(d2->first, d2->second)};
  }
  return r;
}

inline bool is_compatible(const Subordination& t, const SubAlgebra& b1, const SubAlgebra& b2) {
  return is_compatible(t, b1.s(), b2.s()).compatible;
}

/// The algebra P(points) of a finite space.
inline BoolAlg algebra_of(const FinSubSpace& x) { return BoolAlg(x.points()); }

/// U S_E V iff E[U] is a subset of V.
inline SubAlgebra from_equivalence(const FinSubSpace& x) {
  if (x.points() > kMaxRowAtoms) throw CapError("from_equivalence: at most 6 points");
  const BoolAlg alg = algebra_of(x);
  Subordination s(alg, alg);
  for (Mask u = 0; u < alg.size(); ++u) s.set_targets(u, ElemFamily::up(alg, x.saturate(u)).row());
  const unsigned profile = kSub | kS5 | (x.is_discrete() ? (kCompingent | kDeVries) : 0u);
  return SubAlgebra::trusted(std::move(s), profile);
}

/// U S_R V iff R[U] is a subset of V. R must be compatible.
inline Subordination from_closed_relation(const PointRelation& r) {
  if (auto w = compatibility_witness(r)) {
    throw PreconditionError("from_closed_relation: relation is not compatible; (" +
                            std::to_string(w->first) + "," + std::to_string(w->second) +
                            ") is in E2 o R o E1 but not in R");
  }
  if (r.dom().points() > kMaxRowAtoms || r.cod().points() > kMaxRowAtoms) {
    throw CapError("from_closed_relation: at most 6 points per side");
  }
  const BoolAlg a = algebra_of(r.dom());
  const BoolAlg b = algebra_of(r.cod());
  Subordination s(a, b);
  for (Mask u = 0; u < a.size(); ++u) s.set_targets(u, ElemFamily::up(b, r.image(u)).row());
  return s;
}

}  // namespace subordkit
