#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subordkit/bits.hpp"

namespace subordkit {

/// A set of points of a finite space: bit p set iff point p is present.
using PointSet = std::uint32_t;

inline constexpr unsigned kMaxPoints = 12;

/// A finite set {0,...,k-1} with an equivalence relation, stored as a class
/// index per point. Class indices are normalized to a restricted growth
/// string: point 0 is in class 0 and each new class gets the next index.
class FinSubSpace {
 public:
  /// From a class label per point; labels are renumbered canonically.
  explicit FinSubSpace(std::vector<unsigned> labels) : cls_(std::move(labels)) {
    if (cls_.empty() || cls_.size() > kMaxPoints) {
      throw CapError("FinSubSpace: point count must be in [1, 12], got " +
                     std::to_string(cls_.size()));
    }
    std::vector<std::pair<unsigned, unsigned>> seen;
    for (auto& c : cls_) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == c; });
      if (it == seen.end()) {
        seen.emplace_back(c, static_cast<unsigned>(seen.size()));
        c = seen.back().second;
      } else {
        c = it->second;
      }
    }
    n_classes_ = static_cast<unsigned>(seen.size());
    masks_.assign(n_classes_, 0);
    for (unsigned p = 0; p < cls_.size(); ++p) masks_[cls_[p]] |= PointSet{1} << p;
  }

  /// From explicit classes; they must partition {0,...,k-1}.
  static FinSubSpace from_classes(unsigned k, const std::vector<PointSet>& classes) {
    if (k < 1 || k > kMaxPoints) throw CapError("FinSubSpace: point count must be in [1, 12]");
    std::vector<unsigned> labels(k, ~0u);
    for (unsigned c = 0; c < classes.size(); ++c) {
      if (classes[c] == 0) throw PreconditionError("empty class in partition");
      for_each_bit(classes[c], [&](unsigned p) {
        if (p >= k) throw PreconditionError("class member " + std::to_string(p) + " out of range");
        if (labels[p] != ~0u) {
          throw PreconditionError("point " + std::to_string(p) + " is in two classes");
        }
        labels[p] = c;
      });
    }
    for (unsigned p = 0; p < k; ++p) {
      if (labels[p] == ~0u) throw PreconditionError("point " + std::to_string(p) + " is in no class");
    }
    return FinSubSpace(std::move(labels));
  }

  static FinSubSpace discrete(unsigned k) {
    std::vector<unsigned> l(k);
    for (unsigned p = 0; p < k; ++p) l[p] = p;
    return FinSubSpace(std::move(l));
  }

  static FinSubSpace one_class(unsigned k) { return FinSubSpace(std::vector<unsigned>(k, 0)); }

  unsigned points() const { return static_cast<unsigned>(cls_.size()); }
  PointSet all() const { return full_mask(points()); }
  unsigned n_classes() const { return n_classes_; }
  unsigned class_index(unsigned p) const { return cls_.at(p); }
  PointSet class_of(unsigned p) const { return masks_[cls_.at(p)]; }
  /// Classes ordered by least member.
  const std::vector<PointSet>& classes() const { return masks_; }
  const std::vector<unsigned>& labels() const { return cls_; }
  bool is_discrete() const { return n_classes_ == points(); }

  bool related(unsigned p, unsigned q) const { return cls_.at(p) == cls_.at(q); }

  /// E[U], the union of the classes meeting U.
  PointSet saturate(PointSet u) const {
    PointSet out = 0;
    for (PointSet c : masks_) {
      if (c & u) out |= c;
    }
    return out;
  }

  bool is_saturated(PointSet u) const { return saturate(u) == u; }

  friend bool operator==(const FinSubSpace&, const FinSubSpace&) = default;

 private:
  std::vector<unsigned> cls_;
  unsigned n_classes_ = 0;
  std::vector<PointSet> masks_;
};

/// "{0,1},{2}"
inline std::string format_classes(const FinSubSpace& x) {
  std::string s;
  for (std::size_t c = 0; c < x.classes().size(); ++c) {
    if (c) s += ',';
    s += format_mask(x.classes()[c]);
  }
  return s;
}

/// A relation between the points of two finite spaces, one row of targets
/// per domain point.
class PointRelation {
 public:
  PointRelation(FinSubSpace dom, FinSubSpace cod)
      : dom_(std::move(dom)), cod_(std::move(cod)), rows_(dom_.points(), 0) {}

  PointRelation(FinSubSpace dom, FinSubSpace cod, const std::vector<std::pair<unsigned, unsigned>>& pairs)
      : PointRelation(std::move(dom), std::move(cod)) {
    for (auto [p, q] : pairs) add(p, q);
  }

  static PointRelation identity(const FinSubSpace& x) {
    PointRelation r(x, x);
    for (unsigned p = 0; p < x.points(); ++p) r.add(p, p);
    return r;
  }

  /// The equivalence relation of a space as a point relation.
  static PointRelation equivalence(const FinSubSpace& x) {
    PointRelation r(x, x);
    for (unsigned p = 0; p < x.points(); ++p) r.rows_[p] = x.class_of(p);
    return r;
  }

  const FinSubSpace& dom() const { return dom_; }
  const FinSubSpace& cod() const { return cod_; }
  const std::vector<PointSet>& rows() const { return rows_; }
  PointSet row(unsigned p) const { return rows_.at(p); }

  void add(unsigned p, unsigned q) {
    if (p >= dom_.points() || q >= cod_.points()) {
      throw PreconditionError("relation pair (" + std::to_string(p) + "," + std::to_string(q) +
                              ") out of range");
    }
    rows_[p] |= PointSet{1} << q;
  }

  void set_row(unsigned p, PointSet targets) { rows_.at(p) = targets & cod_.all(); }

  bool relates(unsigned p, unsigned q) const { return (rows_.at(p) >> q) & 1u; }

  /// R[U]
  PointSet image(PointSet u) const {
    PointSet out = 0;
    for_each_bit(u & dom_.all(), [&](unsigned p) { out |= rows_[p]; });
    return out;
  }

  /// R^{-1}[V]
  PointSet preimage(PointSet v) const {
    PointSet out = 0;
    for (unsigned p = 0; p < rows_.size(); ++p) {
      if (rows_[p] & v) out |= PointSet{1} << p;
    }
    return out;
  }

  /// Pairs in ascending (p, q) order.
  std::vector<std::pair<unsigned, unsigned>> pairs() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p = 0; p < rows_.size(); ++p) {
      for_each_bit(rows_[p], [&](unsigned q) { out.emplace_back(p, q); });
    }
    return out;
  }

  friend bool operator==(const PointRelation&, const PointRelation&) = default;

 private:
  FinSubSpace dom_;
  FinSubSpace cod_;
  std::vector<PointSet> rows_;
};

/// second o first: p relates to r iff p first q and q second r for some q.
inline PointRelation compose(const PointRelation& first, const PointRelation& second) {
  if (!(first.cod() == second.dom())) throw MismatchError("compose: middle spaces differ");
  PointRelation out(first.dom(), second.cod());
  for (unsigned p = 0; p < first.dom().points(); ++p) out.set_row(p, second.image(first.row(p)));
  return out;
}

inline PointRelation converse(const PointRelation& r) {
  PointRelation out(r.cod(), r.dom());
  for (auto [p, q] : r.pairs()) out.add(q, p);
  return out;
}

inline bool subset_of(const PointRelation& a, const PointRelation& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw MismatchError("relations on different spaces");
  for (unsigned p = 0; p < a.dom().points(); ++p) {
    if (a.row(p) & ~b.row(p)) return false;
  }
  return true;
}

/// E2 o R o E1, the least compatible relation containing R. Idempotent.
inline PointRelation saturate(const PointRelation& r) {
  PointRelation out(r.dom(), r.cod());
  for (unsigned p = 0; p < r.dom().points(); ++p) {
    out.set_row(p, r.cod().saturate(r.image(r.dom().class_of(p))));
  }
  return out;
}

/// First pair (p, q) of E2 o R o E1 that is missing from R, if any.
inline std::optional<std::pair<unsigned, unsigned>> compatibility_witness(const PointRelation& r) {
  const PointRelation s = saturate(r);
  for (auto [p, q] : s.pairs()) {
    if (!r.relates(p, q)) return std::pair{p, q};
  }
  return std::nullopt;
}

inline bool is_compatible(const PointRelation& r) { return !compatibility_witness(r).has_value(); }

/// "(0,1),(2,2)"
inline std::string format_pairs(const PointRelation& r) {
  std::string s;
  for (auto [p, q] : r.pairs()) {
    if (!s.empty()) s += ',';
    s += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return s;
}

}  // namespace subordkit
