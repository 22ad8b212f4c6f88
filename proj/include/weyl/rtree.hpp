// Two parametric R-trees with exact rational geometry.
//
// Both trees are the plane glued along the x-axis: vertical fibers {x} x R
// meet the axis, and the distance between points on different fibers runs
// down to the axis, along it, and back up. The strip tree keeps |x| < 1 and
// is not complete; the full tree is. All predicates and distances below are
// exact on rational inputs.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyl::rtree {

using Rational = boost::multiprecision::cpp_rational;

struct TreePoint {
  Rational x, y;
  friend bool operator==(const TreePoint& a, const TreePoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const TreePoint& a, const TreePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

enum class TreeKind { strip, full };  // (-1,1) x R, respectively R x R

class RTree {
 public:
  static RTree strip_tree() { return RTree(TreeKind::strip); }
  static RTree full_tree() { return RTree(TreeKind::full); }

  TreeKind kind() const { return kind_; }
  bool complete() const { return kind_ == TreeKind::full; }

  bool valid(const TreePoint& p) const {
    return kind_ == TreeKind::full || rational_abs(p.x) < 1;
  }
  void require_valid(const TreePoint& p) const {
    if (!valid(p)) throw std::invalid_argument("point outside the tree's base interval");
  }

 private:
  explicit RTree(TreeKind k) : kind_(k) {}
  TreeKind kind_;
};

/// |y - y'| on a common fiber, else |y| + |x - x'| + |y'| through the axis.
inline Rational tree_distance(const RTree& t, const TreePoint& p, const TreePoint& q) {
  t.require_valid(p);
  t.require_valid(q);
  if (p.x == q.x) return rational_abs(p.y - q.y);
  return rational_abs(p.y) + rational_abs(p.x - q.x) + rational_abs(q.y);
}

/// Arc-length point on the unique geodesic [p, q] at parameter s in [0,1]:
/// down the fiber of p, along the axis, up the fiber of q.
inline TreePoint geodesic(const RTree& t, const TreePoint& p, const TreePoint& q, const Rational& s) {
  t.require_valid(p);
  t.require_valid(q);
  if (s < 0 || s > 1) throw std::invalid_argument("geodesic parameter outside [0,1]");
  if (p.x == q.x) return TreePoint{p.x, p.y + s * (q.y - p.y)};
  const Rational len = tree_distance(t, p, q);
  const Rational at = s * len;
  const Rational down = rational_abs(p.y);
  const Rational across = rational_abs(p.x - q.x);
  if (at <= down) {
    const Rational y = p.y > 0 ? Rational(p.y - at) : Rational(p.y + at);
    return TreePoint{p.x, y};
  }
  if (at <= down + across) {
    const Rational step = at - down;
    const Rational x = p.x < q.x ? Rational(p.x + step) : Rational(p.x - step);
    return TreePoint{x, 0};
  }
  const Rational up = at - down - across;
  return TreePoint{q.x, q.y > 0 ? up : Rational(-up)};
}

// ---------------------------------------------------------------------------
// Apartments (complete geodesic lines)

struct ApartmentDescriptor {
  enum class Kind { vertical, bi_ray, axis };
  Kind kind = Kind::vertical;
  Rational x0;               // vertical: the fiber {x0} x R
  Rational x1, x2;           // bi_ray: rays at x1 < x2 joined by [x1,x2] x 0
  int sign1 = 1, sign2 = 1;  // vertical direction of each ray
};

struct SegmentQuery {
  bool horizontal = true;  // horizontal: y = 0, x in (lo, hi); else x = at, y in (lo, hi)
  Rational lo, hi;
  Rational at;
};

struct SegmentDecision {
  bool contained = false;
  std::optional<ApartmentDescriptor> witness;
  std::vector<std::string> analysis;
};

/// Decides containment of a segment in some apartment, by the
/// classification of complete geodesic lines: vertical fibers, bi-rays
/// (whose axis part is a compact interval), and, in the complete tree
/// only, the axis itself.
inline SegmentDecision is_segment_in_apartment(const RTree& t, const SegmentQuery& seg) {
  SegmentDecision out;
  if (seg.lo >= seg.hi) throw std::invalid_argument("segment interval empty");

  if (!seg.horizontal) {
    t.require_valid(TreePoint{seg.at, 0});
    out.contained = true;
    ApartmentDescriptor w;
    w.kind = ApartmentDescriptor::Kind::vertical;
    w.x0 = seg.at;
    out.witness = w;
    out.analysis.push_back("vertical segments lie inside their full fiber, an apartment");
    return out;
  }

  out.analysis.push_back("vertical apartments meet the axis in a single point");
  out.analysis.push_back("bi-ray apartments contain exactly the compact axis piece [x1, x2]");
  if (t.kind() == TreeKind::full) {
    out.contained = true;
    ApartmentDescriptor w;
    w.kind = ApartmentDescriptor::Kind::axis;
    out.witness = w;
    out.analysis.push_back("the axis is an apartment of the complete tree and contains the segment");
    return out;
  }
  // strip tree: need x1 <= lo < hi <= x2 with -1 < x1, x2 < 1
  if (seg.lo > -1 && seg.hi < 1) {
    out.contained = true;
    ApartmentDescriptor w;
    w.kind = ApartmentDescriptor::Kind::bi_ray;
    w.x1 = seg.lo;
    w.x2 = seg.hi;
    out.witness = w;
    out.analysis.push_back("a bi-ray with feet at the segment endpoints contains it");
  } else {
    out.contained = false;
    out.analysis.push_back(
        "the segment closure reaches the open ends of the base interval; no bi-ray "
        "foot can sit at or beyond them, and the strip tree has no axis apartment");
  }
  return out;
}

// ---------------------------------------------------------------------------
// The stretch homeomorphism (full tree -> strip tree)

inline TreePoint stretch_map(const TreePoint& p) {
  const Rational d = 1 + rational_abs(p.x);
  return TreePoint{p.x / d, p.y};
}

inline TreePoint stretch_map_inverse(const TreePoint& p) {
  if (rational_abs(p.x) >= 1) throw std::invalid_argument("inverse stretch needs |x| < 1");
  const Rational d = 1 - rational_abs(p.x);
  return TreePoint{p.x / d, p.y};
}

// ---------------------------------------------------------------------------
// Retraction along the +infinity end of the axis, and fiber ultrametrics

/// The 1-Lipschitz retraction onto the axis determined by the +infinity
/// axis end: each apartment through that end is mapped isometrically onto
/// the axis fixing their common ray. Defined on the complete tree.
inline TreePoint retraction(const RTree& t, const TreePoint& p) {
  if (t.kind() != TreeKind::full)
    throw std::invalid_argument("retraction requires the complete tree");
  return TreePoint{p.x - rational_abs(p.y), 0};
}

struct FiberMetricValue {
  Rational delta;
  TreePoint branch;  // where the two rays toward the +infinity end meet
};

/// Ultrametric on a retraction fiber: twice the distance from either point
/// to the branch point of their rays toward the end.
inline FiberMetricValue fiber_ultrametric(const RTree& t, const TreePoint& b, const TreePoint& c) {
  if (!(retraction(t, b) == retraction(t, c)))
    throw std::invalid_argument("points lie in different retraction fibers");
  if (b == c) return {Rational(0), b};
  TreePoint e;
  if (b.x != c.x) {
    e = TreePoint{std::max(b.x, c.x), 0};
  } else {
    // same fiber and same x forces |y_b| = |y_c| with opposite signs
    e = TreePoint{b.x, 0};
  }
  const Rational db = tree_distance(t, e, b);
  const Rational dc = tree_distance(t, e, c);
  if (db != dc) throw std::logic_error("branch point not equidistant");
  return {db + dc, e};
}

struct FiberReport {
  std::size_t points = 0;
  unsigned long long triples_checked = 0;
  bool ultrametric_ok = false;
  bool delta_equals_distance = false;  // empirical Lipschitz constant is 1
  Rational max_ratio;                  // max delta/d over distinct pairs
};

/// Checks the ultrametric inequality on every triple of a fiber sample and
/// compares delta with the tree distance pairwise; exact throughout. The
/// triple loop runs on the closed form delta = 2 max(|y|, |y'|), which is
/// itself verified against the branch-point construction on every pair.
inline FiberReport verify_fiber_metric(const RTree& t, const std::vector<TreePoint>& fiber) {
  FiberReport rep;
  rep.points = fiber.size();
  rep.ultrametric_ok = true;
  rep.delta_equals_distance = true;
  rep.max_ratio = 0;

  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      const FiberMetricValue v = fiber_ultrametric(t, fiber[i], fiber[j]);
      const Rational d = tree_distance(t, fiber[i], fiber[j]);
      if (v.delta != d) rep.delta_equals_distance = false;
      if (d != 0 && v.delta / d > rep.max_ratio) rep.max_ratio = v.delta / d;
      const Rational closed_form =
          fiber[i] == fiber[j]
              ? Rational(0)
              : 2 * std::max(rational_abs(fiber[i].y), rational_abs(fiber[j].y));
      if (v.delta != closed_form) throw std::logic_error("fiber metric closed form mismatch");
    }

  // rank the points by |y| and intern point identities, so the triple loop
  // below runs on plain integers
  std::vector<Rational> height;
  for (const TreePoint& p : fiber) height.push_back(rational_abs(p.y));
  std::vector<Rational> sorted = height;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> rank(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i)
    rank[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), height[i]) -
                               sorted.begin());
  std::vector<int> point_id(fiber.size());
  {
    std::map<TreePoint, int> ids;
    for (std::size_t i = 0; i < fiber.size(); ++i)
      point_id[i] = ids.emplace(fiber[i], static_cast<int>(ids.size())).first->second;
  }

  auto delta_rank = [&](std::size_t i, std::size_t j) {
    if (point_id[i] == point_id[j]) return -1;  // below every real rank
    return std::max(rank[i], rank[j]);
  };
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j)
      for (std::size_t k = j + 1; k < fiber.size(); ++k) {
        const int dij = delta_rank(i, j), djk = delta_rank(j, k), dik = delta_rank(i, k);
        if (dik > std::max(dij, djk) || dij > std::max(dik, djk) || djk > std::max(dij, dik))
          rep.ultrametric_ok = false;
        ++rep.triples_checked;
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Covering construction over the axis

struct CoverElement {
  long long k = 0;           // base interval U_k = ((k-1) r/2, (k+1) r/2)
  Rational lo, hi;           // U_k bounds
  TreePoint basepoint;       // a_U = (k r/2, 0)
  TreePoint rep;             // fiber point indexing this class
  std::vector<int> members;  // sample indices, exact membership
};

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BurilloCover {
  Rational r;
  std::vector<CoverElement> elements;
  int realized_order = 0;
  Rational realized_mesh;
  std::vector<ClaimResult> claims;
  bool all_claims_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

/// Isometric lift of y into the fiber over (a, 0): d(lift, y) = |p(y) - a|.
inline TreePoint lift_to_fiber(const TreePoint& y, const Rational& a) {
  const Rational b = y.x - rational_abs(y.y);  // retraction value
  if (a >= b && a <= y.x) {
    // on the ray from y toward the end
    const Rational s = rational_abs(y.y) - (a - b);
    return TreePoint{y.x, y.y >= 0 ? s : Rational(-s)};
  }
  if (a > y.x) return TreePoint{a, 0};
  // a < b: continue up y's fiber away from the axis
  const Rational s = rational_abs(y.y) + (b - a);
  return TreePoint{y.x, y.y >= 0 ? s : Rational(-s)};
}

/// Exact distance from y to the delta-ball {y' in fiber over a :
/// delta(y', x) <= radius}; the ball is either {x} alone or the cone of
/// fiber points with height <= radius/2.
inline Rational distance_to_delta_ball(const RTree& t, const TreePoint& y, const Rational& a,
                                       const TreePoint& x, const Rational& radius) {
  const Rational sx = rational_abs(x.y);
  if (2 * sx > radius) return tree_distance(t, y, x);  // singleton ball
  const Rational cap = radius / 2;
  const Rational ay = rational_abs(y.y);
  Rational best = ay + rational_abs(y.x - a);  // y' = (a, 0)
  if (y.x >= a && y.x - a <= cap) {
    const Rational on_fiber = rational_abs(ay - (y.x - a));  // y' at matching height
    best = std::min(best, on_fiber);
  }
  return best;
}

}  // namespace detail

/// Membership in W_{U,x}: some fiber point within distance r of y lies in
/// the 3rL-ball around x (L = 1 on trees).
inline bool cover_member(const RTree& t, const TreePoint& y, const CoverElement& w,
                         const Rational& r) {
  const Rational b = retraction(t, y).x;
  if (!(b > w.lo && b < w.hi)) return false;
  return detail::distance_to_delta_ball(t, y, w.basepoint.x, w.rep, 3 * r) <= r;
}

/// Builds the cover of the sampled points: half-overlapping axis intervals
/// of length r (order 2), one class per delta-ball of lifted points.
inline BurilloCover burillo_cover(const RTree& t, const Rational& r,
                                  const std::vector<TreePoint>& sample) {
  if (r <= 0) throw std::invalid_argument("cover scale must be positive");
  if (t.kind() != TreeKind::full)
    throw std::invalid_argument("cover construction requires the complete tree");

  BurilloCover out;
  out.r = r;
  out.realized_mesh = 0;

  auto intervals_of = [&](const Rational& b) {
    // k with (k-1) r/2 < b < (k+1) r/2, i.e. |2b/r - k| < 1
    std::vector<long long> ks;
    const Rational q = 2 * b / r;
    const boost::multiprecision::cpp_int num = boost::multiprecision::numerator(q);
    const boost::multiprecision::cpp_int den = boost::multiprecision::denominator(q);
    boost::multiprecision::cpp_int fl = num / den;
    if (num < 0 && num % den != 0) fl -= 1;
    for (boost::multiprecision::cpp_int k = fl; k <= fl + 1; ++k)
      if (rational_abs(q - Rational(k)) < 1) ks.push_back(static_cast<long long>(k));
    return ks;
  };

  // the element list: one class per delta-ball hit by a lifted sample point
  std::set<std::pair<long long, TreePoint>> classes;
  for (const TreePoint& y : sample) {
    const Rational b = retraction(t, y).x;
    for (long long k : intervals_of(b)) {
      const Rational a = k * r / 2;
      const TreePoint lift = detail::lift_to_fiber(y, a);
      const TreePoint rep =
          2 * rational_abs(lift.y) <= 3 * r ? TreePoint{a, 0} : lift;  // ball class key
      classes.insert({k, rep});
    }
  }

  for (const auto& key : classes) {
    CoverElement w;
    w.k = key.first;
    w.lo = Rational(key.first - 1) * r / 2;
    w.hi = Rational(key.first + 1) * r / 2;
    w.basepoint = TreePoint{Rational(key.first) * r / 2, 0};
    w.rep = key.second;
    out.elements.push_back(std::move(w));
  }

  // members are decided by the defining condition, not by class assignment;
  // only elements over an interval containing p(y) can match
  std::map<long long, std::vector<std::size_t>> by_interval;
  for (std::size_t i = 0; i < out.elements.size(); ++i) by_interval[out.elements[i].k].push_back(i);
  for (int i = 0; i < static_cast<int>(sample.size()); ++i) {
    int order = 0;
    const Rational b = retraction(t, sample[i]).x;
    for (long long k : intervals_of(b)) {
      auto it = by_interval.find(k);
      if (it == by_interval.end()) continue;
      for (std::size_t idx : it->second)
        if (cover_member(t, sample[i], out.elements[idx], r)) {
          out.elements[idx].members.push_back(i);
          ++order;
        }
    }
    out.realized_order = std::max(out.realized_order, order);
  }
  for (const CoverElement& w : out.elements)
    for (std::size_t i = 0; i < w.members.size(); ++i)
      for (std::size_t j = i + 1; j < w.members.size(); ++j) {
        const Rational d = tree_distance(t, sample[w.members[i]], sample[w.members[j]]);
        if (d > out.realized_mesh) out.realized_mesh = d;
      }

  // claim checks on the sample
  std::vector<Rational> feet;
  feet.reserve(sample.size());
  for (const TreePoint& y : sample) feet.push_back(retraction(t, y).x);

  ClaimResult c1{"absorption", true, "points within r of a member, over the same interval, are members"};
  for (const CoverElement& w : out.elements) {
    std::set<int> member_set(w.members.begin(), w.members.end());
    for (int i = 0; i < static_cast<int>(sample.size()); ++i) {
      if (!(feet[i] > w.lo && feet[i] < w.hi) || member_set.count(i)) continue;
      for (int m : w.members)
        if (tree_distance(t, sample[i], sample[m]) <= r) {
          c1.pass = false;  // a non-member within r of a member contradicts absorption
          break;
        }
    }
  }
  out.claims.push_back(c1);

  ClaimResult c2{"mesh", out.realized_mesh <= 5 * r, "element diameters at most r(2+3L), L = 1"};
  out.claims.push_back(c2);

  ClaimResult c3{"coverage", true, "every sample point belongs to an element"};
  {
    std::vector<bool> covered(sample.size(), false);
    for (const CoverElement& w : out.elements)
      for (int m : w.members) covered[m] = true;
    for (bool c : covered)
      if (!c) c3.pass = false;
  }
  out.claims.push_back(c3);

  ClaimResult c4{"disjointness", true, "classes over one interval are equal or disjoint"};
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (std::size_t j = i + 1; j < out.elements.size(); ++j) {
      if (out.elements[i].k != out.elements[j].k) continue;
      std::set<int> a(out.elements[i].members.begin(), out.elements[i].members.end());
      for (int m : out.elements[j].members)
        if (a.count(m)) c4.pass = false;
    }
  out.claims.push_back(c4);

  ClaimResult c5{"order", out.realized_order <= 2, "realized order at most n + 1 = 2"};
  out.claims.push_back(c5);

  return out;
}

/// Claim-6 style refinement on the sample: every element of the finer
/// cover is contained (as a member set) in some element of the coarser.
inline bool cover_refines(const RTree& t, const BurilloCover& fine, const BurilloCover& coarse,
                          const std::vector<TreePoint>& sample) {
  for (const CoverElement& w : fine.elements) {
    bool inside_some = false;
    for (const CoverElement& big : coarse.elements) {
      if (!(big.lo <= w.lo && w.hi <= big.hi)) continue;  // base intervals must nest
      bool all = true;
      for (int m : w.members)
        if (!cover_member(t, sample[m], big, coarse.r)) {
          all = false;
          break;
        }
      if (all) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Directions and punctured balls

enum class DirectionKind { axis_plus, axis_minus, fiber_up, fiber_down };

struct Direction {
  DirectionKind kind;
  TreePoint base;

  /// Point at arc length s along the ray (caller keeps s within the tree).
  TreePoint at(const Rational& s) const {
    switch (kind) {
      case DirectionKind::axis_plus:
        return TreePoint{base.x + s, base.y};
      case DirectionKind::axis_minus:
        return TreePoint{base.x - s, base.y};
      case DirectionKind::fiber_up:
        return TreePoint{base.x, base.y + s};
      case DirectionKind::fiber_down:
        return TreePoint{base.x, base.y - s};
    }
    return base;
  }
};

/// The exact set of directions at a point: four at axis points (two along
/// the axis, two along the fiber), two at interior fiber points.
inline std::vector<Direction> directions_at(const RTree& t, const TreePoint& o) {
  t.require_valid(o);
  if (o.y == 0)
    return {Direction{DirectionKind::axis_minus, o}, Direction{DirectionKind::axis_plus, o},
            Direction{DirectionKind::fiber_down, o}, Direction{DirectionKind::fiber_up, o}};
  return {Direction{DirectionKind::fiber_down, o}, Direction{DirectionKind::fiber_up, o}};
}

/// Number of connected components of the punctured ball met by the sample:
/// two points are connected iff their geodesic misses the center, decided
/// exactly by d(z, o) + d(o, w) == d(z, w).
inline int punctured_components(const RTree& t, const TreePoint& o, const Rational& eps,
                                const std::vector<TreePoint>& sample) {
  if (eps <= 0) throw std::invalid_argument("radius must be positive");
  std::vector<int> pts;
  for (int i = 0; i < static_cast<int>(sample.size()); ++i) {
    if (sample[i] == o) continue;
    if (tree_distance(t, o, sample[i]) < eps) pts.push_back(i);
  }
  std::vector<Rational> to_center;
  to_center.reserve(pts.size());
  for (int idx : pts) to_center.push_back(tree_distance(t, sample[idx], o));
  std::vector<int> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
      const bool through_center =
          to_center[i] + to_center[j] == tree_distance(t, sample[pts[i]], sample[pts[j]]);
      if (!through_center) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  std::set<int> roots;
  for (std::size_t i = 0; i < pts.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

// ---------------------------------------------------------------------------
// Deterministic sampling (dyadic rationals from a seeded generator)

inline Rational uniform_rational(std::mt19937_64& rng, long lo, long hi, long denom = 4096) {
  const unsigned long span = static_cast<unsigned long>(hi - lo) * static_cast<unsigned long>(denom);
  return Rational(lo * denom + static_cast<long>(rng() % span), denom);
}

inline std::vector<TreePoint> sample_tree_points(const RTree& t, std::mt19937_64& rng, int n,
                                                 long range = 8) {
  std::vector<TreePoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rational x = t.kind() == TreeKind::full ? uniform_rational(rng, -range, range)
                                            : uniform_rational(rng, 0, 2, 65536) - 1;
    while (t.kind() == TreeKind::strip && rational_abs(x) >= 1)
      x = uniform_rational(rng, 0, 2, 65536) - 1;
    out.push_back(TreePoint{x, uniform_rational(rng, -range, range)});
  }
  return out;
}

/// Points spread over the sectors around o: its own fiber, the axis near
/// its foot, and nearby fibers. Intended for punctured-ball counting,
/// where generic sampling would miss the measure-zero fiber of o.
inline std::vector<TreePoint> sample_ball_points(const RTree& t, const TreePoint& o,
                                                 const Rational& eps, std::mt19937_64& rng, int n) {
  std::vector<TreePoint> out;
  out.reserve(n);
  while (static_cast<int>(out.size()) < n) {
    const int mode = static_cast<int>(rng() % 3);
    const Rational u = uniform_rational(rng, -1, 1, 4096) * eps;
    const Rational v = uniform_rational(rng, -1, 1, 4096) * eps;
    TreePoint p;
    if (mode == 0)
      p = TreePoint{o.x, o.y + u};
    else if (mode == 1)
      p = TreePoint{o.x + u, 0};
    else
      p = TreePoint{o.x + u, v};
    if (t.valid(p)) out.push_back(p);
  }
  return out;
}

/// Points of the retraction fiber over (a, 0): (a + s, +-s).
inline std::vector<TreePoint> sample_fiber_points(const Rational& a, std::mt19937_64& rng, int n,
                                                  long range = 8) {
  std::vector<TreePoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Rational s = uniform_rational(rng, 0, range);
    const bool up = rng() & 1;
    out.push_back(TreePoint{a + s, up ? s : Rational(-s)});
  }
  return out;
}

}  // namespace weyl::rtree
