// Model surfaces of constant curvature and comparison trigonometry.
//
// Charts: the unit sphere (kappa > 0, metric scaled by 1/sqrt(kappa)), the
// euclidean plane (kappa = 0) and the unit hyperboloid in Minkowski space
// (kappa < 0, scaled by 1/sqrt(-kappa)). Distances and geodesics are
// closed-form; comparison checks work on distance data alone.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyl::catk {

struct Tolerances {
  double comparison = 1e-9;  // metric comparisons, invariant slack
  double identity = 1e-12;   // closed-form identities
};
inline constexpr Tolerances kTol{};

struct Kappa {
  double value = 0.0;

  /// Diameter of the model space: pi/sqrt(kappa) for positive curvature,
  /// infinite otherwise.
  double diameter() const {
    return value > 0 ? M_PI / std::sqrt(value) : std::numeric_limits<double>::infinity();
  }
};

enum class Chart { sphere, plane, hyperboloid };

inline Chart chart_for(double kappa) {
  if (kappa > 0) return Chart::sphere;
  if (kappa < 0) return Chart::hyperboloid;
  return Chart::plane;
}

struct ModelPoint {
  std::array<double, 3> x{0, 0, 0};
  Chart chart = Chart::plane;

  static ModelPoint plane(double a, double b) { return {{a, b, 0}, Chart::plane}; }
  static ModelPoint sphere(double a, double b, double c) { return {{a, b, c}, Chart::sphere}; }
  static ModelPoint hyperboloid(double t, double a, double b) {
    return {{t, a, b}, Chart::hyperboloid};
  }
};

namespace detail {

inline double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double minkowski(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double clamp(double x, double lo, double hi) { return x < lo ? lo : (x > hi ? hi : x); }

inline void check_on_chart(double kappa, const ModelPoint& p) {
  if (p.chart != chart_for(kappa)) throw std::invalid_argument("model point on wrong chart");
  switch (p.chart) {
    case Chart::sphere:
      if (std::abs(dot3(p.x, p.x) - 1.0) > kTol.comparison)
        throw std::invalid_argument("sphere point not on the unit sphere");
      break;
    case Chart::plane:
      if (std::abs(p.x[2]) > kTol.comparison)
        throw std::invalid_argument("plane point has nonzero third coordinate");
      break;
    case Chart::hyperboloid:
      if (std::abs(minkowski(p.x, p.x) + 1.0) > kTol.comparison || p.x[0] <= 0)
        throw std::invalid_argument("point not on the upper hyperboloid sheet");
      break;
  }
}

}  // namespace detail

/// Exact-formula distance in the model space of curvature kappa.
inline double model_distance(double kappa, const ModelPoint& p, const ModelPoint& q) {
  detail::check_on_chart(kappa, p);
  detail::check_on_chart(kappa, q);
  switch (p.chart) {
    case Chart::sphere:
      return std::acos(detail::clamp(detail::dot3(p.x, q.x), -1.0, 1.0)) / std::sqrt(kappa);
    case Chart::plane:
      return std::hypot(p.x[0] - q.x[0], p.x[1] - q.x[1]);
    case Chart::hyperboloid: {
      const double c = -detail::minkowski(p.x, q.x);
      return std::acosh(std::max(1.0, c)) / std::sqrt(-kappa);
    }
  }
  return 0;
}

/// The point at parameter t on the unique geodesic [p, q]; requires
/// d(p, q) < D_kappa (antipodal sphere points have no unique geodesic).
inline ModelPoint geodesic_point(double kappa, const ModelPoint& p, const ModelPoint& q, double t) {
  detail::check_on_chart(kappa, p);
  detail::check_on_chart(kappa, q);
  if (t < 0 || t > 1) throw std::invalid_argument("geodesic parameter outside [0,1]");
  switch (p.chart) {
    case Chart::plane:
      return ModelPoint::plane(p.x[0] + t * (q.x[0] - p.x[0]), p.x[1] + t * (q.x[1] - p.x[1]));
    case Chart::sphere: {
      const double cosang = detail::clamp(detail::dot3(p.x, q.x), -1.0, 1.0);
      const double ang = std::acos(cosang);
      if (ang >= M_PI - kTol.comparison) throw std::invalid_argument("geodesic not unique");
      if (ang < 1e-15) return p;
      const double s = std::sin(ang);
      ModelPoint out;
      out.chart = Chart::sphere;
      for (int i = 0; i < 3; ++i)
        out.x[i] = (std::sin((1 - t) * ang) * p.x[i] + std::sin(t * ang) * q.x[i]) / s;
      return out;
    }
    case Chart::hyperboloid: {
      const double c = std::max(1.0, -detail::minkowski(p.x, q.x));
      const double ang = std::acosh(c);
      if (ang < 1e-15) return p;
      const double s = std::sinh(ang);
      ModelPoint out;
      out.chart = Chart::hyperboloid;
      for (int i = 0; i < 3; ++i)
        out.x[i] = (std::sinh((1 - t) * ang) * p.x[i] + std::sinh(t * ang) * q.x[i]) / s;
      return out;
    }
  }
  return p;
}

struct ComparisonTriangle {
  double kappa = 0;
  double a = 0, b = 0, c = 0;          // side lengths
  double alpha = 0, beta = 0, gamma = 0;  // angles opposite a, b, c
};

namespace detail {

/// Angle opposite side `opp` given the other two sides, by the law of
/// cosines of the matching chart.
inline double solved_angle(double kappa, double opp, double s1, double s2) {
  if (s1 == 0 || s2 == 0)
    return 0;  // degenerate corner; callers reject where it matters
  if (kappa == 0)
    return std::acos(clamp((s1 * s1 + s2 * s2 - opp * opp) / (2 * s1 * s2), -1.0, 1.0));
  if (kappa > 0) {
    const double r = std::sqrt(kappa);
    const double num = std::cos(r * opp) - std::cos(r * s1) * std::cos(r * s2);
    const double den = std::sin(r * s1) * std::sin(r * s2);
    return std::acos(clamp(num / den, -1.0, 1.0));
  }
  const double r = std::sqrt(-kappa);
  const double num = std::cosh(r * s1) * std::cosh(r * s2) - std::cosh(r * opp);
  const double den = std::sinh(r * s1) * std::sinh(r * s2);
  return std::acos(clamp(num / den, -1.0, 1.0));
}

}  // namespace detail

/// Solves the comparison triangle with the given side lengths in M_kappa.
inline ComparisonTriangle comparison_triangle(double kappa, double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative side length");
  const double dk = Kappa{kappa}.diameter();
  if (a + b + c >= 2 * dk) throw std::invalid_argument("exceeds comparison perimeter");
  if (a > b + c + kTol.comparison || b > a + c + kTol.comparison || c > a + b + kTol.comparison)
    throw std::invalid_argument("triangle inequality violated");
  ComparisonTriangle t;
  t.kappa = kappa;
  t.a = a;
  t.b = b;
  t.c = c;
  t.alpha = detail::solved_angle(kappa, a, b, c);
  t.beta = detail::solved_angle(kappa, b, a, c);
  t.gamma = detail::solved_angle(kappa, c, a, b);
  return t;
}

struct SinesResidual {
  double ratio_residual = 0;                    // law of sines, all charts
  std::optional<double> determinant_residual;   // spherical identity, kappa > 0
  double max_residual() const {
    return determinant_residual ? std::max(ratio_residual, *determinant_residual) : ratio_residual;
  }
};

/// Law-of-sines residual: the maximal pairwise difference of the ratios
/// sin(angle)/s(opposite side), where s is the chart's side function. For
/// kappa > 0, also the residual of the determinant identity
/// det(a,b,c) = sin(alpha) sin(sqrt(k) c) sin(sqrt(k) b) on realized unit
/// vectors.
inline SinesResidual law_of_sines_residual(double kappa, const ComparisonTriangle& t) {
  if (t.a <= 0 || t.b <= 0 || t.c <= 0) throw std::invalid_argument("degenerate triangle");
  auto side = [&](double x) {
    if (kappa == 0) return x;
    if (kappa > 0) return std::sin(std::sqrt(kappa) * x);
    return std::sinh(std::sqrt(-kappa) * x);
  };
  const double r1 = std::sin(t.alpha) / side(t.a);
  const double r2 = std::sin(t.beta) / side(t.b);
  const double r3 = std::sin(t.gamma) / side(t.c);
  SinesResidual out;
  out.ratio_residual =
      std::max({std::abs(r1 - r2), std::abs(r1 - r3), std::abs(r2 - r3)});

  if (kappa > 0) {
    // realize the triangle on the unit sphere with vertex a at the pole
    const double r = std::sqrt(kappa);
    const std::array<double, 3> va{0, 0, 1};
    const std::array<double, 3> vb{std::sin(r * t.c), 0, std::cos(r * t.c)};
    const std::array<double, 3> vc{std::sin(r * t.b) * std::cos(t.alpha),
                                   std::sin(r * t.b) * std::sin(t.alpha), std::cos(r * t.b)};
    const double det = va[0] * (vb[1] * vc[2] - vb[2] * vc[1]) -
                       va[1] * (vb[0] * vc[2] - vb[2] * vc[0]) +
                       va[2] * (vb[0] * vc[1] - vb[1] * vc[0]);
    out.determinant_residual =
        std::abs(det - std::sin(t.alpha) * std::sin(r * t.c) * std::sin(r * t.b));
  }
  return out;
}

/// Distance data of a quadruple (p, q, r, m) with m on the segment [q, r].
struct CatQuadruple {
  double pq = 0, pr = 0, qr = 0;
  double qm = 0, mr = 0, pm = 0;
};

/// The comparison inequality: d(p, m) does not exceed the distance from
/// the comparison point of p to the comparison point of m in M_kappa.
inline bool cat_check(double kappa, const CatQuadruple& quad) {
  if (std::abs(quad.qm + quad.mr - quad.qr) > kTol.comparison)
    throw std::invalid_argument("m is not on the segment [q, r]");
  const double dk = Kappa{kappa}.diameter();
  if (quad.pq + quad.qr + quad.pr >= 2 * dk)
    throw std::invalid_argument("exceeds comparison perimeter");
  if (quad.pq > quad.pr + quad.qr + kTol.comparison ||
      quad.pr > quad.pq + quad.qr + kTol.comparison ||
      quad.qr > quad.pq + quad.pr + kTol.comparison)
    throw std::invalid_argument("triangle inequality violated");

  if (quad.qr <= kTol.comparison)  // q = r = m: compare along the degenerate side
    return quad.pm <= quad.pq + kTol.comparison;

  // realize the comparison triangle: q at a base point, r along a geodesic,
  // p placed by the angle at q
  const double angle_q = detail::solved_angle(kappa, quad.pr, quad.pq, quad.qr);
  ModelPoint cq, cr, cp;
  if (kappa == 0) {
    cq = ModelPoint::plane(0, 0);
    cr = ModelPoint::plane(quad.qr, 0);
    cp = ModelPoint::plane(quad.pq * std::cos(angle_q), quad.pq * std::sin(angle_q));
  } else if (kappa > 0) {
    const double r = std::sqrt(kappa);
    cq = ModelPoint::sphere(0, 0, 1);
    cr = ModelPoint::sphere(std::sin(r * quad.qr), 0, std::cos(r * quad.qr));
    cp = ModelPoint::sphere(std::sin(r * quad.pq) * std::cos(angle_q),
                            std::sin(r * quad.pq) * std::sin(angle_q), std::cos(r * quad.pq));
  } else {
    const double r = std::sqrt(-kappa);
    cq = ModelPoint::hyperboloid(1, 0, 0);
    cr = ModelPoint::hyperboloid(std::cosh(r * quad.qr), std::sinh(r * quad.qr), 0);
    cp = ModelPoint::hyperboloid(std::cosh(r * quad.pq), std::sinh(r * quad.pq) * std::cos(angle_q),
                                 std::sinh(r * quad.pq) * std::sin(angle_q));
  }
  const ModelPoint cm = geodesic_point(kappa, cq, cr, quad.qm / quad.qr);
  return quad.pm <= model_distance(kappa, cp, cm) + kTol.comparison;
}

struct AngleEstimate {
  std::vector<double> raw;        // 2 asin(d(c(s), c'(s)) / 2s) along the schedule
  double angle = 0;               // Richardson-extrapolated limit
  bool monotone = true;           // raw sequence monotone (either direction)
  double last_delta = 0;          // |raw.back() - raw[n-2]|, convergence hint
};

inline std::vector<double> geometric_schedule(double s0 = 0.5, int steps = 12) {
  std::vector<double> out;
  double s = s0;
  for (int i = 0; i < steps; ++i, s /= 2) out.push_back(s);
  return out;
}

/// Angle between two unit-speed geodesics from a common point, from the
/// chord lengths d(c(s), c'(s)). The limit is accelerated by one level of
/// Richardson extrapolation (second order, matching a geometric schedule).
inline AngleEstimate alexandrov_angle_estimate(const std::function<double(double)>& chord_at,
                                               const std::vector<double>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
    if (schedule[i + 1] >= schedule[i] || schedule[i + 1] <= 0)
      throw std::invalid_argument("schedule must decrease to zero through positive values");

  AngleEstimate out;
  for (double s : schedule) {
    const double chord = chord_at(s);
    if (chord < 0 || chord > 2 * s * (1 + 1e-12))
      throw std::invalid_argument("not geodesics from a common point");
    out.raw.push_back(2 * std::asin(detail::clamp(chord / (2 * s), -1.0, 1.0)));
  }
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < out.raw.size(); ++i) {
    inc = inc && out.raw[i] >= out.raw[i - 1] - kTol.identity;
    dec = dec && out.raw[i] <= out.raw[i - 1] + kTol.identity;
  }
  out.monotone = inc || dec;
  if (out.raw.size() == 1) {
    out.angle = out.raw[0];
  } else {
    const double t1 = out.raw[out.raw.size() - 2], t2 = out.raw.back();
    out.angle = (4 * t2 - t1) / 3;  // assumes the schedule halves s each step
    out.last_delta = std::abs(t2 - t1);
  }
  return out;
}

/// The modified metric gluing the space of directions into a puncture:
/// sqrt(d^2 + angle^2).
inline double blowup_metric(double d, double theta) {
  if (d < 0) throw std::invalid_argument("negative distance");
  if (theta < 0 || theta > M_PI) throw std::invalid_argument("angle outside [0, pi]");
  return std::sqrt(d * d + theta * theta);
}

}  // namespace weyl::catk
