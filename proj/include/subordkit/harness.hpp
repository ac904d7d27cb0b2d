#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "subordkit/duality.hpp"
#include "subordkit/dsl.hpp"
#include "subordkit/frames.hpp"
#include "subordkit/functors.hpp"
#include "subordkit/morphclass.hpp"
#include "subordkit/space.hpp"
#include "subordkit/subord.hpp"

namespace subordkit {

/// splitmix64; see docs/json-schema.md for the constants and the draw rules.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-enough draw in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Inclusive range.
  unsigned between(unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(below(hi - lo + 1)); }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Independent stream for one named population, so adding a population
/// does not shift the others.
inline SplitMix64 stream(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 mix(seed ^ (salt * 0xD1B54A32D192ED03ull));
  return SplitMix64(mix.next());
}

inline constexpr unsigned kMaxPartitionPoints = 6;

/// All partitions of k points in restricted-growth-string order.
inline std::vector<FinSubSpace> gen_partitions(unsigned k) {
  if (k < 1 || k > kMaxPartitionPoints) throw CapError("gen_partitions: k must be in [1, 6]");
  std::vector<FinSubSpace> out;
  std::vector<unsigned> rgs(k, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned max_label) {
    if (pos == k) {
      out.emplace_back(rgs);
      return;
    }
    for (unsigned v = 0; v <= max_label + 1; ++v) {
      rgs[pos] = v;
      rec(pos + 1, std::max(max_label, v));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

/// A partition drawn from the stream: each point gets a label in [0, k).
inline FinSubSpace gen_partition(SplitMix64& rng, unsigned k) {
  std::vector<unsigned> labels(k);
  for (auto& l : labels) l = static_cast<unsigned>(rng.below(k));
  return FinSubSpace(std::move(labels));
}

/// A drawn relation saturated to E2 o R o E1.
inline PointRelation gen_compatible_relation(SplitMix64& rng, const FinSubSpace& x1, const FinSubSpace& x2) {
  PointRelation r(x1, x2);
  for (unsigned p = 0; p < x1.points(); ++p) {
    r.set_row(p, static_cast<PointSet>(rng.next()) & x2.all());
  }
  return saturate(r);
}

inline PointRelation gen_compatible_relation(std::uint64_t seed, const FinSubSpace& x1, const FinSubSpace& x2) {
  SplitMix64 rng(seed);
  return gen_compatible_relation(rng, x1, x2);
}

/// Every compatible relation between two spaces, lifted from the relations
/// between their classes, in increasing class-relation code.
inline std::vector<PointRelation> all_compatible_relations(const FinSubSpace& x1, const FinSubSpace& x2) {
  const unsigned c1 = x1.n_classes();
  const unsigned c2 = x2.n_classes();
  std::vector<PointRelation> out;
  const std::uint64_t n = std::uint64_t{1} << (c1 * c2);
  for (std::uint64_t code = 0; code < n; ++code) {
    PointRelation r(x1, x2);
    for (unsigned p = 0; p < x1.points(); ++p) {
      PointSet row = 0;
      for (unsigned j = 0; j < c2; ++j) {
        if ((code >> (x1.class_index(p) * c2 + j)) & 1u) row |= x2.classes()[j];
      }
      r.set_row(p, row);
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// A poset on `points` points given by strict edges (a < b), a < b as numbers.
struct GenPoset {
  unsigned points = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;
};

inline GenPoset gen_poset(SplitMix64& rng, unsigned max_points) {
  GenPoset p;
  p.points = rng.between(1, max_points);
  for (unsigned a = 0; a < p.points; ++a) {
    for (unsigned b = a + 1; b < p.points; ++b) {
      if (rng.below(3) == 0) p.edges.emplace_back(a, b);
    }
  }
  return p;
}

/// Downset frame of a drawn poset with 1..max_points points.
inline FinFrame gen_frame(std::uint64_t seed, unsigned max_points) {
  if (max_points > kMaxPartitionPoints) throw CapError("gen_frame: at most 6 points");
  if (max_points == 0) return FinFrame::downsets(0, {});
  SplitMix64 rng(seed);
  const GenPoset p = gen_poset(rng, max_points);
  return FinFrame::downsets(p.points, p.edges);
}

/// Preframe map P(k1) -> P(k2) sending the coatom missing atom i to
/// images[i] and extending by meets.
inline LatticeMap preframe_from_coatoms(unsigned k1, unsigned k2, const std::vector<Mask>& images) {
  const FinFrame l = FinFrame::powerset(k1);
  const FinFrame m = FinFrame::powerset(k2);
  std::vector<Idx> table(l.size());
  for (Mask x = 0; x < l.size(); ++x) {
    Mask v = full_mask(k2);
    for (unsigned i = 0; i < k1; ++i) {
      if (!((x >> i) & 1u)) v &= images[i];
    }
    table[x] = v;
  }
  return LatticeMap(l, m, std::move(table));
}

/// Frame homomorphism P(k1) -> P(k2), X -> {j : g(j) in X}.
inline LatticeMap frame_hom_from_function(unsigned k1, unsigned k2, const std::vector<unsigned>& g) {
  const FinFrame l = FinFrame::powerset(k1);
  const FinFrame m = FinFrame::powerset(k2);
  std::vector<Idx> table(l.size());
  for (Mask x = 0; x < l.size(); ++x) {
    Mask v = 0;
    for (unsigned j = 0; j < k2; ++j) {
      if ((x >> g[j]) & 1u) v |= Mask{1} << j;
    }
    table[x] = v;
  }
  return LatticeMap(l, m, std::move(table));
}

inline DeVriesMap devmap_from_coatoms(unsigned k1, unsigned k2, const std::vector<Mask>& images) {
  const LatticeMap h = preframe_from_coatoms(k1, k2, images);
  std::vector<Mask> table(h.table.begin(), h.table.end());
  return DeVriesMap(order_algebra(BoolAlg(k1)), order_algebra(BoolAlg(k2)), std::move(table));
}

// ---------------------------------------------------------------------------
// Instances

struct AlgebraCase {
  SubAlgebra b;
  std::optional<FinSubSpace> partition;  // set when b = from_equivalence(partition)
};

struct MorphCase {
  Subordination t;
  SubAlgebra b1;
  SubAlgebra b2;
  std::optional<PointRelation> rel;  // set when t = S_R
};

struct PairCase {
  MorphCase m1;
  MorphCase m2;
};

struct FrameCase {
  FinFrame f;
  std::optional<GenPoset> poset;
};

struct MapCase {
  LatticeMap h;
};

struct MapPairCase {
  LatticeMap h1;
  LatticeMap h2;
};

struct DevCase {
  DeVriesMap f;
};

inline Workspace to_workspace(const AlgebraCase& c) {
  Workspace ws;
  const unsigned n = c.b.alg().n_atoms();
  ws.add_algebra("B", n);
  if (c.partition) {
    ws.add_equiv("E", "B", c.partition->classes());
    ws.add_sub_from_equiv("S", "E");
  } else {
    ws.add_sub_pairs("S", "B", "B", c.b.s().pairs());
  }
  return ws;
}

namespace detail {

inline void add_morph(Workspace& ws, const MorphCase& m, const std::string& tag, const std::string& x,
                      const std::string& y) {
  if (m.rel) {
    if (!ws.contains(x)) ws.add_space(x, m.rel->dom().points(), m.rel->dom().classes());
    if (!ws.contains(y)) ws.add_space(y, m.rel->cod().points(), m.rel->cod().classes());
    ws.add_rel("R" + tag, x, y, m.rel->pairs());
    ws.add_sub_from_rel("T" + tag, "R" + tag);
    return;
  }
  const std::string a = "A" + x;
  const std::string b = "A" + y;
  if (!ws.contains(a)) {
    ws.add_algebra(a, m.b1.alg().n_atoms());
    ws.add_sub_pairs("S" + x, a, a, m.b1.s().pairs());
  }
  if (!ws.contains(b)) {
    ws.add_algebra(b, m.b2.alg().n_atoms());
    ws.add_sub_pairs("S" + y, b, b, m.b2.s().pairs());
  }
  ws.add_sub_pairs("T" + tag, a, b, m.t.pairs());
}

inline std::string order_name(unsigned i) { return i == 0 ? "L" : i == 1 ? "M" : "N"; }

inline void add_order_frame(Workspace& ws, const std::string& name, const FinFrame& f) {
  if (!ws.contains(name)) ws.add_frame_order(name, f.up_rows());
}

}  // namespace detail

inline Workspace to_workspace(const MorphCase& c) {
  Workspace ws;
  detail::add_morph(ws, c, "", "X", "Y");
  return ws;
}

inline Workspace to_workspace(const PairCase& c) {
  Workspace ws;
  detail::add_morph(ws, c.m1, "1", "X", "Y");
  detail::add_morph(ws, c.m2, "2", "Y", "Z");
  return ws;
}

inline Workspace to_workspace(const FrameCase& c) {
  Workspace ws;
  if (c.poset) {
    ws.add_frame_poset("L", c.poset->points, c.poset->edges);
  } else {
    ws.add_frame_order("L", c.f.up_rows());
  }
  return ws;
}

inline Workspace to_workspace(const MapCase& c) {
  Workspace ws;
  detail::add_order_frame(ws, "L", c.h.dom);
  const std::string cod = c.h.dom == c.h.cod ? "L" : "M";
  detail::add_order_frame(ws, cod, c.h.cod);
  std::vector<std::pair<Idx, Idx>> entries;
  for (Idx i = 0; i < c.h.table.size(); ++i) entries.emplace_back(i, c.h.table[i]);
  ws.add_map("h", "L", cod, entries);
  return ws;
}

inline Workspace to_workspace(const MapPairCase& c) {
  Workspace ws;
  const FinFrame* frames[3] = {&c.h1.dom, &c.h1.cod, &c.h2.cod};
  std::string names[3];
  for (unsigned i = 0; i < 3; ++i) {
    names[i] = detail::order_name(i);
    for (unsigned j = 0; j < i; ++j) {
      if (*frames[j] == *frames[i]) names[i] = names[j];
    }
    detail::add_order_frame(ws, names[i], *frames[i]);
  }
  std::vector<std::pair<Idx, Idx>> e1, e2;
  for (Idx i = 0; i < c.h1.table.size(); ++i) e1.emplace_back(i, c.h1.table[i]);
  for (Idx i = 0; i < c.h2.table.size(); ++i) e2.emplace_back(i, c.h2.table[i]);
  ws.add_map("h1", names[0], names[1], e1);
  ws.add_map("h2", names[1], names[2], e2);
  return ws;
}

inline Workspace to_workspace(const DevCase& c) {
  Workspace ws;
  ws.add_algebra("A", c.f.dom.alg().n_atoms());
  const std::string cod = c.f.dom == c.f.cod ? "A" : "B";
  if (cod == "B") ws.add_algebra("B", c.f.cod.alg().n_atoms());
  std::vector<std::pair<Mask, Mask>> entries;
  for (Mask m = 0; m < c.f.table.size(); ++m) entries.emplace_back(m, c.f.table[m]);
  ws.add_devmap("f", "A", cod, entries);
  return ws;
}

inline Workspace to_workspace(const Workspace& w) { return w; }

struct NoCase {};
inline Workspace to_workspace(const NoCase&) { return {}; }

// ---------------------------------------------------------------------------
// Configuration and populations

struct GenConfig {
  std::uint64_t seed = 1;
  unsigned max_atoms_exhaustive = 3;
  unsigned max_atoms_sampled = 5;
  unsigned samples_per_size = 200;
  unsigned max_atoms_dual = 4;          // exhaustive partitions for the isomorphism laws
  unsigned max_points_exhaustive = 3;   // exhaustive compatible relations
  unsigned sampled_points = 4;
  unsigned relation_samples = 1000;
  unsigned pair_samples = 500;
  unsigned frame_samples = 200;
  unsigned max_poset_points = 5;
  unsigned workspace_samples = 200;
  unsigned max_failures_kept = 1;
  std::set<std::string> laws;  // empty selects every law
  BoxFn box = default_box();   // replaceable for mutation runs
};

/// Cached algebra-level structures keyed by the subordination.
class Context {
 public:
  explicit Context(const GenConfig& cfg) : cfg_(cfg) {}
  const GenConfig& cfg() const { return cfg_; }

  const MacNeilleAlgebra& ni(const SubAlgebra& b) {
    auto key = std::make_pair(b.alg().n_atoms(), b.s().rows());
    auto it = ni_.find(key);
    if (it == ni_.end()) it = ni_.emplace(key, std::make_unique<MacNeilleAlgebra>(macneille(b))).first;
    return *it->second;
  }

  const RoundIdealFrame& ri(const SubAlgebra& b) { return ni(b).ri; }

 private:
  const GenConfig& cfg_;
  std::map<std::pair<unsigned, std::vector<Row>>, std::unique_ptr<MacNeilleAlgebra>> ni_;
};

namespace detail {

inline MorphCase morph_of(const PointRelation& r) {
  return {from_closed_relation(r), from_equivalence(r.dom()), from_equivalence(r.cod()), r};
}

inline std::vector<FinSubSpace> spaces_upto(unsigned k) {
  std::vector<FinSubSpace> out;
  for (unsigned n = 1; n <= k; ++n) {
    for (auto& x : gen_partitions(n)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

inline std::vector<AlgebraCase> algebra_population(unsigned exhaustive_upto, unsigned sampled_upto,
                                                   unsigned samples, std::uint64_t seed) {
  std::vector<AlgebraCase> out;
  for (const FinSubSpace& x : detail::spaces_upto(exhaustive_upto)) out.push_back({from_equivalence(x), x});
  SplitMix64 rng = stream(seed, 1);
  for (unsigned n = exhaustive_upto + 1; n <= sampled_upto; ++n) {
    for (unsigned i = 0; i < samples; ++i) {
      FinSubSpace x = gen_partition(rng, n);
      out.push_back({from_equivalence(x), x});
    }
  }
  return out;
}

inline std::vector<MorphCase> morphism_population(const GenConfig& cfg) {
  std::vector<MorphCase> out;
  const auto spaces = detail::spaces_upto(cfg.max_points_exhaustive);
  for (const auto& x1 : spaces) {
    for (const auto& x2 : spaces) {
      for (const auto& r : all_compatible_relations(x1, x2)) out.push_back(detail::morph_of(r));
    }
  }
  SplitMix64 rng = stream(cfg.seed, 2);
  for (unsigned i = 0; i < cfg.relation_samples; ++i) {
    const FinSubSpace x1 = gen_partition(rng, cfg.sampled_points);
    const FinSubSpace x2 = gen_partition(rng, cfg.sampled_points);
    out.push_back(detail::morph_of(gen_compatible_relation(rng, x1, x2)));
  }
  return out;
}

inline std::vector<PairCase> pair_population(const GenConfig& cfg) {
  std::vector<PairCase> out;
  const auto small = detail::spaces_upto(2);
  for (const auto& x1 : small) {
    for (const auto& x2 : small) {
      for (const auto& x3 : small) {
        const auto r1s = all_compatible_relations(x1, x2);
        const auto r2s = all_compatible_relations(x2, x3);
        for (const auto& r1 : r1s) {
          for (const auto& r2 : r2s) out.push_back({detail::morph_of(r1), detail::morph_of(r2)});
        }
      }
    }
  }
  SplitMix64 rng = stream(cfg.seed, 3);
  for (unsigned i = 0; i < cfg.pair_samples; ++i) {
    FinSubSpace xs[3] = {gen_partition(rng, rng.between(1, cfg.sampled_points)),
                         gen_partition(rng, rng.between(1, cfg.sampled_points)),
                         gen_partition(rng, rng.between(1, cfg.sampled_points))};
    PointRelation r1 = gen_compatible_relation(rng, xs[0], xs[1]);
    PointRelation r2 = gen_compatible_relation(rng, xs[1], xs[2]);
    out.push_back({detail::morph_of(r1), detail::morph_of(r2)});
  }
  return out;
}

inline std::vector<FrameCase> frame_population(const GenConfig& cfg) {
  std::vector<FrameCase> out;
  for (unsigned k = 1; k <= 3; ++k) {
    std::vector<std::pair<unsigned, unsigned>> slots;
    for (unsigned a = 0; a < k; ++a) {
      for (unsigned b = a + 1; b < k; ++b) slots.emplace_back(a, b);
    }
    for (unsigned code = 0; code < (1u << slots.size()); ++code) {
      GenPoset p{k, {}};
      for (unsigned s = 0; s < slots.size(); ++s) {
        if ((code >> s) & 1u) p.edges.push_back(slots[s]);
      }
      out.push_back({FinFrame::downsets(p.points, p.edges), p});
    }
  }
  SplitMix64 rng = stream(cfg.seed, 4);
  for (unsigned i = 0; i < cfg.frame_samples; ++i) {
    const GenPoset p = gen_poset(rng, cfg.max_poset_points);
    out.push_back({FinFrame::downsets(p.points, p.edges), p});
  }
  return out;
}

/// Preframe maps between powersets: all of them for k <= 2, then drawn
/// ones with k <= 3, half of which are frame homomorphisms.
inline std::vector<MapCase> map_population(const GenConfig& cfg) {
  std::vector<MapCase> out;
  for (unsigned k1 = 1; k1 <= 2; ++k1) {
    for (unsigned k2 = 1; k2 <= 2; ++k2) {
      const unsigned vals = 1u << k2;
      unsigned total = 1;
      for (unsigned i = 0; i < k1; ++i) total *= vals;
      for (unsigned code = 0; code < total; ++code) {
        std::vector<Mask> imgs(k1);
        unsigned c = code;
        for (unsigned i = 0; i < k1; ++i, c /= vals) imgs[i] = c % vals;
        out.push_back({preframe_from_coatoms(k1, k2, imgs)});
      }
    }
  }
  SplitMix64 rng = stream(cfg.seed, 5);
  for (unsigned i = 0; i < cfg.samples_per_size; ++i) {
    const unsigned k1 = rng.between(1, 3);
    const unsigned k2 = rng.between(1, 3);
    if (rng.coin()) {
      std::vector<Mask> imgs(k1);
      for (auto& m : imgs) m = static_cast<Mask>(rng.below(1u << k2));
      out.push_back({preframe_from_coatoms(k1, k2, imgs)});
    } else {
      std::vector<unsigned> g(k2);
      for (auto& v : g) v = static_cast<unsigned>(rng.below(k1));
      out.push_back({frame_hom_from_function(k1, k2, g)});
    }
  }
  return out;
}

inline std::vector<MapPairCase> map_pair_population(const GenConfig& cfg) {
  std::vector<MapPairCase> out;
  SplitMix64 rng = stream(cfg.seed, 6);
  auto draw = [&](unsigned k1, unsigned k2) {
    std::vector<Mask> imgs(k1);
    for (auto& m : imgs) m = static_cast<Mask>(rng.below(1u << k2));
    return preframe_from_coatoms(k1, k2, imgs);
  };
  for (unsigned i = 0; i < cfg.pair_samples; ++i) {
    const unsigned k1 = rng.between(1, 3), k2 = rng.between(1, 3), k3 = rng.between(1, 3);
    LatticeMap h1 = draw(k1, k2);
    LatticeMap h2 = draw(k2, k3);
    out.push_back({std::move(h1), std::move(h2)});
  }
  return out;
}

/// Every MULT + LOWER_CONT table between (P(k), <=) for k <= 2, then drawn
/// meet-preserving tables for k = 3.
inline std::vector<DevCase> devmap_population(const GenConfig& cfg) {
  std::vector<DevCase> out;
  for (unsigned k1 = 1; k1 <= 2; ++k1) {
    for (unsigned k2 = 1; k2 <= 2; ++k2) {
      const SubAlgebra a = order_algebra(BoolAlg(k1));
      const SubAlgebra b = order_algebra(BoolAlg(k2));
      const unsigned n1 = 1u << k1;
      const unsigned vals = 1u << k2;
      unsigned total = 1;
      for (unsigned i = 0; i < n1; ++i) total *= vals;
      for (unsigned code = 0; code < total; ++code) {
        std::vector<Mask> table(n1);
        unsigned c = code;
        for (unsigned i = 0; i < n1; ++i, c /= vals) table[i] = c % vals;
        DeVriesMap f(a, b, std::move(table));
        if (check_devries_morphism(f).continuous_mult()) out.push_back({std::move(f)});
      }
    }
  }
  SplitMix64 rng = stream(cfg.seed, 7);
  for (unsigned i = 0; i < cfg.samples_per_size; ++i) {
    std::vector<Mask> imgs(3);
    for (auto& m : imgs) m = static_cast<Mask>(rng.below(8));
    out.push_back({devmap_from_coatoms(3, 3, imgs)});
  }
  return out;
}

/// Compatible relations between discrete spaces (T continuous between
/// (P(k), <=) carriers): exhaustive for k <= 2, drawn for k = 3.
inline std::vector<MorphCase> devries_morphism_population(const GenConfig& cfg) {
  std::vector<MorphCase> out;
  for (unsigned k1 = 1; k1 <= 2; ++k1) {
    for (unsigned k2 = 1; k2 <= 2; ++k2) {
      for (const auto& r : all_compatible_relations(FinSubSpace::discrete(k1), FinSubSpace::discrete(k2))) {
        out.push_back(detail::morph_of(r));
      }
    }
  }
  SplitMix64 rng = stream(cfg.seed, 8);
  for (unsigned i = 0; i < cfg.samples_per_size; ++i) {
    out.push_back(detail::morph_of(
        gen_compatible_relation(rng, FinSubSpace::discrete(3), FinSubSpace::discrete(3))));
  }
  return out;
}

/// A workspace with one or two declarations of every kind, all drawn.
inline Workspace gen_workspace(SplitMix64& rng) {
  Workspace ws;
  auto rand_mask = [&](unsigned n) { return static_cast<Mask>(rng.below(std::uint64_t{1} << n)); };
  const unsigned na = rng.between(1, 3);
  const unsigned nb = rng.between(1, 3);
  ws.add_algebra("A", na);
  ws.add_algebra("B", nb);
  const FinSubSpace ea = gen_partition(rng, na);
  ws.add_equiv("EA", "A", ea.classes());
  const FinSubSpace x = gen_partition(rng, rng.between(1, 4));
  const FinSubSpace y = gen_partition(rng, rng.between(1, 4));
  ws.add_space("X", x.points(), x.classes());
  ws.add_space("Y", y.points(), y.classes());
  PointRelation r(x, y);
  for (unsigned p = 0; p < x.points(); ++p) r.set_row(p, static_cast<PointSet>(rng.next()));
  ws.add_rel("R", "X", "Y", r.pairs());
  const PointRelation rs = saturate(r);
  ws.add_rel("Rs", "X", "Y", rs.pairs());
  ws.add_sub_from_rel("TR", "Rs");
  ws.add_sub_from_equiv("SA", "EA");
  ws.add_sub_from_equiv("SX", "X");
  std::vector<std::pair<Mask, Mask>> pairs;
  const unsigned npairs = rng.between(0, 6);
  for (unsigned i = 0; i < npairs; ++i) pairs.emplace_back(rand_mask(na), rand_mask(nb));
  ws.add_sub_pairs("T", "A", "B", pairs);
  const GenPoset p = gen_poset(rng, 4);
  ws.add_frame_poset("L", p.points, p.edges);
  const FinFrame l = ws.get<FinFrame>("L");
  const FinFrame c = FinFrame::chain(rng.between(1, 4));
  ws.add_frame_order("C", c.up_rows());
  std::vector<std::pair<Idx, Idx>> entries;
  for (Idx i = 0; i < l.size(); ++i) entries.emplace_back(i, static_cast<Idx>(rng.below(c.size())));
  ws.add_map("h", "L", "C", entries);
  std::vector<std::pair<Mask, Mask>> dev;
  for (Mask m = 0; m < (Mask{1} << na); ++m) dev.emplace_back(m, rand_mask(nb));
  ws.add_devmap("f", "A", "B", dev);
  std::vector<Mask> members;
  for (Mask m = 0; m < (Mask{1} << na); ++m) {
    if (rng.below(3) == 0) members.push_back(m);
  }
  const FamilyKind kinds[3] = {FamilyKind::raw, FamilyKind::ideal, FamilyKind::filter};
  ws.add_family("F", "A", kinds[rng.below(3)], members);
  return ws;
}

// ---------------------------------------------------------------------------
// Laws

enum class Outcome { pass, fail, skip };

struct CheckResult {
  Outcome outcome;
  std::string detail;
};

inline CheckResult pass() { return {Outcome::pass, {}}; }
inline CheckResult skip() { return {Outcome::skip, {}}; }
inline CheckResult fail(std::string d) { return {Outcome::fail, std::move(d)}; }
inline CheckResult expect(bool ok, const std::string& d) { return ok ? pass() : fail(d); }

using Case = std::variant<AlgebraCase, MorphCase, PairCase, FrameCase, MapCase, MapPairCase, DevCase, Workspace,
                          NoCase>;

enum class Population {
  algebra,        // partitions n <= max_atoms_exhaustive, drawn up to max_atoms_sampled
  small_algebra,  // partitions n <= max_atoms_exhaustive
  dual_algebra,   // partitions n <= max_atoms_dual
  morphism,
  pair,
  frame,
  map,
  map_pair,
  devmap,
  devries_morphism,
  workspace,
  none,
};

struct Law {
  std::string id;
  std::string anchor;  // the formula exercised
  Population population;
  std::function<CheckResult(const Case&, Context&)> check;
};

namespace detail {

template <class T, class F>
std::function<CheckResult(const Case&, Context&)> on(F f) {
  return [f](const Case& c, Context& ctx) -> CheckResult { return f(std::get<T>(c), ctx); };
}

inline std::string family_text(const BoolAlg& alg, Row r) { return format_family(ElemFamily::from_row(alg, r)); }

/// Every family of an algebra with at most 3 atoms, or a deterministic
/// sample of 64 for larger ones.
inline std::vector<Row> neg_lemma_families(const BoolAlg& alg) {
  std::vector<Row> out;
  const unsigned size = alg.size();
  if (size <= 8) {
    for (Row r = 0; r < (Row{1} << size); ++r) out.push_back(r);
  } else {
    SplitMix64 rng(alg.n_atoms());
    for (unsigned i = 0; i < 64; ++i) out.push_back(rng.next() & full_row(size));
  }
  return out;
}

inline CheckResult check_neg_lemma(const AlgebraCase& c) {
  const BoolAlg& alg = c.b.alg();
  const Subordination& s = c.b.s();
  for (Row r : neg_lemma_families(alg)) {
    const ElemFamily x = ElemFamily::from_row(alg, r);
    const ElemFamily lhs = negate_family(s.image(x));
    const ElemFamily rhs = s.preimage(negate_family(x));
    if (!(lhs == rhs)) return fail("not S[X] differs from S^-1[not X] at X = " + format_family(x));
  }
  return pass();
}

inline CheckResult check_ri_laws_extra(const RoundIdealFrame& ri) {
  const FinFrame& f = ri.frame();
  for (Idx i = 0; i < ri.size(); ++i) {
    const Idx s = pseudocomplement(f, i);
    if (pseudocomplement(f, pseudocomplement(f, s)) != s) {
      return fail("I*** differs from I* at down" + format_mask(ri.generator(i)));
    }
    for (Idx j = 0; j < ri.size(); ++j) {
      if (well_inside(f, i, j) && !well_inside(f, double_pseudocomplement(f, i), j)) {
        return fail("I prec J but not I** prec J at down" + format_mask(ri.generator(i)) + ", down" +
                    format_mask(ri.generator(j)));
      }
    }
  }
  return pass();
}

inline CheckResult check_duality(const AlgebraCase& c, Context& ctx, int which) {
  const DualityReport r = duality_isomorphisms(c.b, ctx.cfg().box);
  switch (which) {
    case 0: return expect(r.ri_to_or, r.detail);
    case 1: return expect(r.or_to_quot && r.ri_to_quot, r.detail);
    case 2: return expect(r.ni_to_ro && r.ro_equals_or && r.phi_star && r.phi_double_star, r.detail);
    default: return expect(r.ro_to_quot, r.detail);
  }
}

inline CheckResult check_continuity_composition(const PairCase& c) {
  const bool c1 = is_continuous(c.m1.t, c.m1.b1.s(), c.m1.b2.s()).continuous;
  const bool c2 = is_continuous(c.m2.t, c.m2.b1.s(), c.m2.b2.s()).continuous;
  if (!c1 || !c2) return skip();
  const Subordination t = compose(c.m1.t, c.m2.t);
  const CompatResult cr = is_compatible(t, c.m1.b1.s(), c.m2.b2.s());
  if (!cr.compatible) return fail("composite is not compatible: " + cr.equation);
  const ContinuityResult r = is_continuous(t, c.m1.b1.s(), c.m2.b2.s());
  if (!r.continuous) return fail("composite is not continuous at " + pair_text(r.witness->first, r.witness->second));
  return pass();
}

}  // namespace detail

/// Every law, in report order.
inline const std::vector<Law>& all_laws() {
  using namespace detail;
  static const std::vector<Law> laws = [] {
    std::vector<Law> v;
    v.push_back({"SUB.neg-lemma", "not S[X] = S^-1[not X]", Population::small_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context&) { return check_neg_lemma(c); })});
    v.push_back({"SUB.relation-functor", "S_{R2 o R1} = S_{R2} o S_{R1}", Population::pair,
                 on<PairCase>([](const PairCase& c, Context&) {
                   const Subordination lhs = from_closed_relation(compose(*c.m1.rel, *c.m2.rel));
                   const Subordination rhs = compose(c.m1.t, c.m2.t);
                   auto d = first_difference(lhs, rhs);
                   return expect(!d, d ? "differs at " + pair_text(d->first, d->second) : "");
                 })});
    v.push_back({"RI.frame", "RI(B) is a frame under inclusion", Population::algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   const FrameReport r = validate_frame(ctx.ri(c.b).frame().up_rows());
                   return expect(r.valid(), r.detail);
                 })});
    v.push_back({"RI.pseudocomplement", "I* = S^-1[not U(I)] = not S[U(I)]; I*** = I*", Population::algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   const RoundIdealReport r = check_round_ideal_frame(ctx.ri(c.b));
                   if (!r.pseudocomplement_agrees) return fail(r.detail);
                   return check_ri_laws_extra(ctx.ri(c.b));
                 })});
    v.push_back({"RI.well-inside", "I prec J iff U(I) meets J", Population::algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   const RoundIdealReport r = check_round_ideal_frame(ctx.ri(c.b));
                   return expect(r.well_inside_agrees, r.detail);
                 })});
    v.push_back({"RI.regular", "every I is the join of the J with J prec I", Population::algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   return expect(is_regular_frame(ctx.ri(c.b).frame()), "round-ideal frame is not regular");
                 })});
    v.push_back({"NI.fixpoint", "I normal iff I = S^-1[L(S[U(I)])]", Population::algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   const MacNeilleReport r = check_macneille(ctx.ni(c.b));
                   if (!r.fixpoint_agrees || !r.prec_agrees) return fail(r.detail);
                   const unsigned p = ctx.ni(c.b).algebra().profile();
                   return expect((p & kDeVries) != 0, "NI(B) fails the de Vries profile");
                 })});
    v.push_back({"Q.iso", "T = Q~: T o Q = S and Q o T = prec; iota bijective when compingent", Population::algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   const QIsoReport r = check_q_iso(ctx.ni(c.b));
                   if (!r.q_compatible) return fail("Q is not compatible");
                   if (!r.left || !r.right) return fail(r.detail);
                   if (!c.b.compingent()) return pass();
                   const IotaReport io = iota_report(ctx.ni(c.b));
                   return expect(io.injective && io.structure_preserving, io.detail);
                 })});
    v.push_back({"NI.interpolation", "a in J iff a in I prec J for some normal I", Population::small_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   auto w = interpolation_counterexample(ctx.ni(c.b));
                   return expect(!w, w ? "fails at a = " + format_mask(w->first) + ", J = down" +
                                             format_mask(ctx.ri(c.b).generator(w->second))
                                       : "");
                 })});
    v.push_back({"RI.functor.identity", "RI(S) = id", Population::algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   return expect(ri_identity_law(ctx.ri(c.b)), "RI(S) is not the identity");
                 })});
    v.push_back({"RI.functor.composition", "RI(T2 o T1) = RI(T1) o RI(T2)", Population::pair,
                 on<PairCase>([](const PairCase& c, Context& ctx) {
                   return expect(ri_composition_law(c.m1.t, c.m2.t, ctx.ri(c.m1.b1), ctx.ri(c.m1.b2),
                                                    ctx.ri(c.m2.b2)),
                                 "RI(T2 o T1) differs from RI(T1) o RI(T2)");
                 })});
    v.push_back({"B.functor.identity", "B(id) = prec", Population::frame,
                 on<FrameCase>([](const FrameCase& c, Context&) {
                   if (!is_regular_frame(c.f)) return skip();
                   return expect(b_identity_law(c.f), "B(id) differs from prec");
                 })});
    v.push_back({"B.functor.composition", "B(box2 o box1) = B(box1) o B(box2)", Population::map_pair,
                 on<MapPairCase>([](const MapPairCase& c, Context&) {
                   return expect(b_composition_law(c.h1, c.h2), "B(box2 o box1) differs from B(box1) o B(box2)");
                 })});
    v.push_back({"Q.naturality", "NI(T) o Q_B1 = Q_B2 o T", Population::morphism,
                 on<MorphCase>([](const MorphCase& c, Context& ctx) {
                   return expect(naturality_q(c.t, ctx.ni(c.b1), ctx.ni(c.b2)), "Q square does not commute");
                 })});
    v.push_back({"f.naturality", "RI(B box) o f_L = f_M o box", Population::map,
                 on<MapCase>([](const MapCase& c, Context&) {
                   return expect(naturality_f(c.h), "f square does not commute");
                 })});
    v.push_back({"C.four-way", "Q(R) continuous; R^-1[saturated open] open; clopen interpolation; algebraic",
                 Population::morphism, on<MorphCase>([](const MorphCase& c, Context& ctx) {
                   if (!c.rel) return skip();
                   const FourWayReport r = continuity_crosscheck(*c.rel);
                   const bool alg = is_continuous(c.t, c.b1.s(), c.b2.s()).continuous;
                   (void)ctx;
                   return expect(r.agree() && r.algebraic == alg, "the four conditions disagree");
                 })});
    v.push_back({"C.variants", "1a = 1b = 1c = 2b = 2c", Population::morphism,
                 on<MorphCase>([](const MorphCase& c, Context&) {
                   const ContinuityVariants v = continuity_variants(c.t, c.b1.s(), c.b2.s());
                   const bool base = is_continuous(c.t, c.b1.s(), c.b2.s()).continuous;
                   return expect(v.agree() && v.v1a == base, "continuity variants disagree");
                 })});
    v.push_back({"C.composition", "T1, T2 continuous => T2 o T1 continuous", Population::pair,
                 on<PairCase>([](const PairCase& c, Context&) { return check_continuity_composition(c); })});
    v.push_back({"C.diamond", "diamond I = {a : a in L(T~[b]), b in I} witnesses RI(T) as a c-morphism",
                 Population::morphism, on<MorphCase>([](const MorphCase& c, Context& ctx) {
                   const RoundIdealFrame& r1 = ctx.ri(c.b1);
                   const RoundIdealFrame& r2 = ctx.ri(c.b2);
                   const LatticeMap box = ri_on_morphism(c.t, r1, r2);
                   return expect(is_cmorph_witness(box, explicit_diamond(c.t, r1, r2)),
                                 "explicit diamond is not a witness");
                 })});
    v.push_back({"F.characterization", "T~ o T <= S1 and S2 <= T o T~ iff (2a) and (2b)", Population::morphism,
                 on<MorphCase>([](const MorphCase& c, Context&) {
                   const bool def = is_functional(c.t, c.b1.s(), c.b2.s()).functional;
                   const FunctionalCharacterization ch = functional_characterization(c.t, c.b1.s(), c.b2.s());
                   bool point = def;
                   if (c.rel) point = point_functional(*c.rel).functional;
                   return expect(def == ch.holds() && def == point,
                                 "definition, characterization and point condition disagree");
                 })});
    v.push_back({"F.implies-continuous", "T functional => T continuous", Population::morphism,
                 on<MorphCase>([](const MorphCase& c, Context&) {
                   if (!is_functional(c.t, c.b1.s(), c.b2.s()).functional) return skip();
                   return expect(is_continuous(c.t, c.b1.s(), c.b2.s()).continuous, "functional but not continuous");
                 })});
    v.push_back({"F.RI-frame-hom", "T functional => RI(T) is a frame homomorphism", Population::morphism,
                 on<MorphCase>([](const MorphCase& c, Context& ctx) {
                   if (!is_functional(c.t, c.b1.s(), c.b2.s()).functional) return skip();
                   const LatticeMap h = ri_on_morphism(c.t, ctx.ri(c.b1), ctx.ri(c.b2));
                   return expect(classify_map(h, false).frame, "RI(T) is not a frame homomorphism");
                 })});
    v.push_back({"F.B-of-frame-hom", "box frame homomorphism => B(box) functional", Population::map,
                 on<MapCase>([](const MapCase& c, Context&) {
                   if (!is_frame_hom(c.h)) return skip();
                   const BRelation b = b_on_morphism(c.h);
                   return expect(is_functional(b.rel, b.from.algebra.s(), b.to.algebra.s()).functional,
                                 "B(box) is not functional");
                 })});
    v.push_back({"BT.box-roundtrip", "Box_{T_Box} = Box", Population::devmap,
                 on<DevCase>([](const DevCase& c, Context&) {
                   const Subordination t = t_of(c.f);
                   return expect(box_of(t, c.f.cod, c.f.dom) == c.f, "Box of T_Box differs from Box");
                 })});
    v.push_back({"BT.t-roundtrip", "T_{Box_T} = T", Population::devries_morphism,
                 on<MorphCase>([](const MorphCase& c, Context&) {
                   const DeVriesMap box = box_of(c.t, c.b1, c.b2);
                   auto d = first_difference(t_of(box), c.t);
                   return expect(!d, d ? "T of Box_T differs at " + pair_text(d->first, d->second) : "");
                 })});
    v.push_back({"S7.RI-O_R", "Phi: RI(B) = O_R(X)", Population::dual_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) { return check_duality(c, ctx, 0); })});
    v.push_back({"S7.O_R-quotient", "O_R(X) = O(X/R)", Population::dual_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) { return check_duality(c, ctx, 1); })});
    v.push_back({"S7.NI-RO_R", "Phi: NI(B) = RO_R(X), Phi(I*) = Box_R int(Phi(I)^c)", Population::dual_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) { return check_duality(c, ctx, 2); })});
    v.push_back({"S7.RO_R-quotient", "RO_R(X) = RO(X/R)", Population::dual_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) { return check_duality(c, ctx, 3); })});
    v.push_back({"S7.translation", "Phi(not F) = Psi(F)^c, Phi(L(F)) = int Psi(F), Psi(U(I)) = cl Phi(I)",
                 Population::small_algebra, on<AlgebraCase>([](const AlgebraCase& c, Context&) {
                   auto f = check_translation_laws(c.b);
                   return expect(!f, f ? f->law + " at " + f->family + ": " + f->detail : "");
                 })});
    v.push_back({"S7.lemma.phi-box", "Phi(S^-1[I]) = Box_R Phi(I)", Population::small_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context& ctx) {
                   auto f = check_phi_box(c.b, ctx.cfg().box);
                   return expect(!f, f ? "I = " + f->family + ": " + f->detail : "");
                 })});
    v.push_back({"S7.lemma.psi-R", "Psi(S[F]) = R[Psi(F)]", Population::small_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context&) {
                   auto f = check_psi_r(c.b);
                   return expect(!f, f ? "F = " + f->family + ": " + f->detail : "");
                 })});
    v.push_back({"DUAL.roundtrip", "ult(clop(X)) = X and clop(ult(B)) = B", Population::dual_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context&) {
                   const FinSubSpace x = ult(c.b);
                   if (!(clop(x) == c.b)) return fail("clop(ult(B)) differs from B");
                   if (c.partition && !(x == *c.partition)) return fail("ult(clop(X)) differs from X");
                   return pass();
                 })});
    v.push_back({"DUAL.irreducible", "finite E irreducible iff E = id", Population::dual_algebra,
                 on<AlgebraCase>([](const AlgebraCase& c, Context&) {
                   const FinSubSpace x = ult(c.b);
                   return expect(is_irreducible(x) == x.is_discrete(), "irreducibility differs from discreteness");
                 })});
    v.push_back({"BOOL.boolean", "B L = {a = a**} is boolean", Population::frame,
                 on<FrameCase>([](const FrameCase& c, Context&) {
                   return expect(is_boolean(booleanization(c.f).frame), "booleanization is not boolean");
                 })});
    v.push_back({"BOOL.closure", "a <= a**, a <= b => a** <= b**, a**** = a**", Population::frame,
                 on<FrameCase>([](const FrameCase& c, Context&) {
                   const FinFrame& f = c.f;
                   for (Idx a = 0; a < f.size(); ++a) {
                     const Idx aa = double_pseudocomplement(f, a);
                     if (!f.leq(a, aa)) return fail("a ** is not above a at " + std::to_string(a));
                     if (double_pseudocomplement(f, aa) != aa) return fail("** is not idempotent at " + std::to_string(a));
                     for (Idx b = 0; b < f.size(); ++b) {
                       if (f.leq(a, b) && !f.leq(aa, double_pseudocomplement(f, b))) {
                         return fail("** is not monotone at " + std::to_string(a) + ", " + std::to_string(b));
                       }
                     }
                   }
                   return pass();
                 })});
    v.push_back({"BOOL.three-chain", "B(3-chain) = 2", Population::none, [](const Case&, Context&) {
                   const Booleanization b = booleanization(FinFrame::chain(3));
                   return expect(b.frame.size() == 2 && is_boolean(b.frame) && !is_regular_frame(FinFrame::chain(3)),
                                 "booleanization of the 3-chain is not the 2-element frame");
                 }});
    v.push_back({"DSL.roundtrip", "parse(serialize(w)) = w", Population::workspace,
                 on<Workspace>([](const Workspace& w, Context&) {
                   const std::string text = serialize(w);
                   const Workspace back = parse(text);
                   if (!(back == w)) return fail("parse(serialize(w)) differs from w");
                   return expect(serialize(back) == text, "serialization is not idempotent");
                 })});
    return v;
  }();
  return laws;
}

inline const Law* find_law(const std::string& id) {
  for (const Law& l : all_laws()) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Reports

struct LawFailureRecord {
  std::string workspace_dsl;
  std::string detail;
};

struct LawReport {
  std::string law_id;
  std::string paper_anchor;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<LawFailureRecord> failures;  // first max_failures_kept, in instance order

  bool passed() const { return failure_count == 0; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<LawReport> laws;

  bool passed() const {
    for (const auto& l : laws) {
      if (!l.passed()) return false;
    }
    return true;
  }

  const LawReport* find(const std::string& id) const {
    for (const auto& l : laws) {
      if (l.law_id == id) return &l;
    }
    return nullptr;
  }
};

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::ordered_json to_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["law_id"] = r.law_id;
  j["paper_anchor"] = r.paper_anchor;
  j["instances"] = r.instances;
  j["failure_count"] = r.failure_count;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"workspace_dsl", f.workspace_dsl}, {"detail", f.detail}});
  return j;
}

inline nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  j["laws"] = nlohmann::ordered_json::array();
  for (const auto& l : r.laws) j["laws"].push_back(to_json(l));
  return j;
}

inline std::string report_text(const SuiteReport& r) { return to_json(r).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Runner

namespace detail {

template <class T>
std::vector<Case> wrap_cases(std::vector<T> v) {
  std::vector<Case> out;
  out.reserve(v.size());
  for (auto& x : v) out.emplace_back(std::move(x));
  return out;
}

inline std::vector<Case> population(Population p, const GenConfig& cfg) {
  switch (p) {
    case Population::algebra:
      return wrap_cases(
          algebra_population(cfg.max_atoms_exhaustive, cfg.max_atoms_sampled, cfg.samples_per_size, cfg.seed));
    case Population::small_algebra:
      return wrap_cases(algebra_population(cfg.max_atoms_exhaustive, 0, 0, cfg.seed));
    case Population::dual_algebra: return wrap_cases(algebra_population(cfg.max_atoms_dual, 0, 0, cfg.seed));
    case Population::morphism: return wrap_cases(morphism_population(cfg));
    case Population::pair: return wrap_cases(pair_population(cfg));
    case Population::frame: return wrap_cases(frame_population(cfg));
    case Population::map: return wrap_cases(map_population(cfg));
    case Population::map_pair: return wrap_cases(map_pair_population(cfg));
    case Population::devmap: return wrap_cases(devmap_population(cfg));
    case Population::devries_morphism: return wrap_cases(devries_morphism_population(cfg));
    case Population::workspace: {
      std::vector<Case> out;
      SplitMix64 rng = stream(cfg.seed, 9);
      for (unsigned i = 0; i < cfg.workspace_samples; ++i) out.emplace_back(gen_workspace(rng));
      return out;
    }
    case Population::none: return {Case{NoCase{}}};
  }
  return {};
}

inline std::string case_dsl(const Case& c) {
  return std::visit([](const auto& x) { return serialize(to_workspace(x)); }, c);
}

inline void run_law(const Law& law, const std::vector<Case>& cases, Context& ctx, LawReport& rep) {
  for (const Case& c : cases) {
    CheckResult r;
    try {
      r = law.check(c, ctx);
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    if (r.outcome == Outcome::skip) continue;
    ++rep.instances;
    if (r.outcome == Outcome::fail) {
      ++rep.failure_count;
      if (rep.failures.size() < ctx.cfg().max_failures_kept) rep.failures.push_back({case_dsl(c), r.detail});
    }
  }
}

}  // namespace detail

/// Runs the selected laws over their generated populations.
inline SuiteReport run_suite(const GenConfig& cfg) {
  SuiteReport rep;
  rep.seed = cfg.seed;
  Context ctx(cfg);
  std::map<Population, std::vector<Case>> pops;
  for (const Law& law : all_laws()) {
    if (!cfg.laws.empty() && !cfg.laws.count(law.id)) continue;
    auto it = pops.find(law.population);
    if (it == pops.end()) it = pops.emplace(law.population, detail::population(law.population, cfg)).first;
    LawReport lr{law.id, law.anchor, 0, 0, {}};
    detail::run_law(law, it->second, ctx, lr);
    rep.laws.push_back(std::move(lr));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Instances drawn from a workspace

/// Structure on an algebra: the unique from_equiv subordination declared on
/// it if there is one, else the order.
inline SubAlgebra structure_of(const Workspace& ws, const std::string& alg) {
  std::optional<SubAlgebra> found;
  for (const std::string& n : ws.names_of(DeclKind::sub)) {
    const Decl& d = ws.at(n);
    if (d.sub_form == SubForm::from_equiv && d.dom == alg) {
      if (found) return order_algebra(ws.get<BoolAlg>(alg));
      found = from_equivalence(std::get<FinSubSpace>(ws.at(d.source).object));
    }
  }
  return found ? *found : order_algebra(ws.get<BoolAlg>(alg));
}

/// Every equiv, then each endomorphic subordination passing S1-S7 that is
/// not already listed.
inline std::vector<AlgebraCase> workspace_algebras(const Workspace& ws) {
  std::vector<AlgebraCase> out;
  for (const Decl* d : ws.canonical()) {
    if (d->kind == DeclKind::equiv) {
      const auto& x = std::get<FinSubSpace>(d->object);
      out.push_back({from_equivalence(x), x});
    } else if (d->kind == DeclKind::sub) {
      const auto& s = std::get<Subordination>(d->object);
      if (!s.is_endo() || s.dom().n_atoms() > kMaxAxiomAtoms) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const AlgebraCase& c) { return c.b.s() == s; });
      if (seen) continue;
      try {
        out.push_back({SubAlgebra::make(s), std::nullopt});
      } catch (const PreconditionError&) {
      }
    }
  }
  return out;
}

/// Each sub with its resolved structures; from_rel subs use the partitions
/// of their spaces. Subs that are not compatible are left out.
inline std::vector<MorphCase> workspace_morphisms(const Workspace& ws) {
  std::vector<MorphCase> out;
  for (const std::string& n : ws.names_of(DeclKind::sub)) {
    const Decl& d = ws.at(n);
    const auto& t = std::get<Subordination>(d.object);
    try {
      if (d.sub_form == SubForm::from_rel) {
        out.push_back(detail::morph_of(ws.get<PointRelation>(d.source)));
      } else if (d.sub_form == SubForm::pairs) {
        MorphCase m{t, structure_of(ws, d.dom), structure_of(ws, d.cod), std::nullopt};
        if (is_compatible(m.t, m.b1.s(), m.b2.s()).compatible) out.push_back(std::move(m));
      }
    } catch (const Error&) {
    }
  }
  return out;
}

inline std::vector<Case> workspace_population(const Workspace& ws, Population p) {
  using detail::wrap_cases;
  switch (p) {
    case Population::algebra:
    case Population::small_algebra:
    case Population::dual_algebra: return wrap_cases(workspace_algebras(ws));
    case Population::morphism: return wrap_cases(workspace_morphisms(ws));
    case Population::devries_morphism: {
      std::vector<MorphCase> out;
      for (auto& m : workspace_morphisms(ws)) {
        if ((m.b1.profile() & kDeVries) && (m.b2.profile() & kDeVries)) out.push_back(std::move(m));
      }
      return wrap_cases(std::move(out));
    }
    case Population::pair: {
      std::vector<PairCase> out;
      const auto ms = workspace_morphisms(ws);
      for (const auto& a : ms) {
        for (const auto& b : ms) {
          if (a.rel.has_value() != b.rel.has_value()) continue;
          if (a.rel ? a.rel->cod() == b.rel->dom() : a.b2 == b.b1) out.push_back({a, b});
        }
      }
      return wrap_cases(std::move(out));
    }
    case Population::frame: {
      std::vector<FrameCase> out;
      for (const std::string& n : ws.names_of(DeclKind::frame)) {
        const Decl& d = ws.at(n);
        FrameCase c{std::get<FinFrame>(d.object), std::nullopt};
        if (d.frame_form == FrameForm::poset) c.poset = GenPoset{d.poset_points, d.poset_edges};
        out.push_back(std::move(c));
      }
      return wrap_cases(std::move(out));
    }
    case Population::map: {
      std::vector<MapCase> out;
      for (const std::string& n : ws.names_of(DeclKind::map)) {
        const auto& h = ws.get<LatticeMap>(n);
        if (is_preframe(h) && is_regular_frame(h.dom) && is_regular_frame(h.cod)) out.push_back({h});
      }
      return wrap_cases(std::move(out));
    }
    case Population::map_pair: {
      std::vector<MapPairCase> out;
      std::vector<LatticeMap> hs;
      for (const std::string& n : ws.names_of(DeclKind::map)) {
        const auto& h = ws.get<LatticeMap>(n);
        if (is_preframe(h) && is_regular_frame(h.dom) && is_regular_frame(h.cod)) hs.push_back(h);
      }
      for (const auto& a : hs) {
        for (const auto& b : hs) {
          if (a.cod == b.dom) out.push_back({a, b});
        }
      }
      return wrap_cases(std::move(out));
    }
    case Population::devmap: {
      std::vector<DevCase> out;
      for (const std::string& n : ws.names_of(DeclKind::devmap)) {
        const auto& f = ws.get<DeVriesMap>(n);
        if (check_devries_morphism(f).continuous_mult()) out.push_back({f});
      }
      return wrap_cases(std::move(out));
    }
    case Population::workspace: return {Case{ws}};
    case Population::none: return {Case{NoCase{}}};
  }
  return {};
}

/// One law over the instances a workspace supplies.
inline LawReport verify_law(const Workspace& ws, const std::string& law_id, const GenConfig& cfg = {}) {
  const Law* law = find_law(law_id);
  if (!law) throw PreconditionError("unknown law '" + law_id + "'");
  Context ctx(cfg);
  LawReport lr{law->id, law->anchor, 0, 0, {}};
  detail::run_law(*law, workspace_population(ws, law->population), ctx, lr);
  return lr;
}

/// Off-by-one complement: the complement is taken inside all points but the
/// last one.
inline BoxFn mutated_box() {
  return [](const FinSubSpace& x, PointSet u) {
    const PointSet all = x.all() >> 1;
    return all & ~x.saturate(all & ~u);
  };
}

/// Exhaustive search for a compatible, non-continuous T between spaces of
/// at most `max_points` points; returns the first in enumeration order.
inline std::optional<std::pair<MorphCase, std::pair<Mask, Mask>>> search_noncontinuous(unsigned max_points) {
  const auto spaces = detail::spaces_upto(max_points);
  for (const auto& x1 : spaces) {
    for (const auto& x2 : spaces) {
      for (const auto& r : all_compatible_relations(x1, x2)) {
        MorphCase m = detail::morph_of(r);
        const ContinuityResult c = is_continuous(m.t, m.b1.s(), m.b2.s());
        if (!c.continuous) return std::pair{std::move(m), *c.witness};
      }
    }
  }
  return std::nullopt;
}

}  // namespace subordkit
