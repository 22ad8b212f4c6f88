// The verification suite behind `verify-all` and the acceptance runner.
//
// Each criterion is a pure function of the seed, returning a report whose
// checks carry the pinned tolerances. Sampling is deterministic: all
// randomness flows from the seed through mt19937_64.

#pragma once

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/building.hpp"
#include "weyl/catk.hpp"
#include "weyl/json_io.hpp"
#include "weyl/report.hpp"
#include "weyl/rtree.hpp"
#include "weyl/support_lattice.hpp"

namespace weyl::verify {

using report::Report;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

namespace detail {

inline const SphericalBuilding& fano() {
  static const SphericalBuilding b = an_building(2, 2);
  return b;
}

inline std::vector<SimplicialComplex> apartment_supports(const SphericalBuilding& b) {
  std::vector<SimplicialComplex> out;
  for (const Apartment& a : b.apartments()) out.push_back(a.faces);
  return out;
}

inline catk::ModelPoint random_model_point(std::mt19937_64& rng, double kappa) {
  if (kappa == 0) return catk::ModelPoint::plane(uniform(rng, -2, 2), uniform(rng, -2, 2));
  if (kappa > 0) {
    double v[3];
    double n = 0;
    do {
      for (double& c : v) c = uniform(rng, -1, 1);
      n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    } while (n < 1e-3);
    return catk::ModelPoint::sphere(v[0] / n, v[1] / n, v[2] / n);
  }
  const double a = uniform(rng, -1.5, 1.5), b = uniform(rng, -1.5, 1.5);
  return catk::ModelPoint::hyperboloid(std::sqrt(1 + a * a + b * b), a, b);
}

}  // namespace detail

/// 1. Fano homology: H_1 free of rank 8, agreeing with the opposite-chamber
/// count and the Euler characteristic.
inline Report criterion_fano_homology(std::uint64_t) {
  Report rep;
  rep.command = "criterion 1: fano homology";
  const auto& b = detail::fano();
  const HomologyGroup h1 = homology(b.complex(), 1);
  rep.add("betti", h1.betti == 8, "H_1 betti = " + std::to_string(h1.betti));
  rep.add("torsion", h1.torsion.empty(), "no invariant factors above 1");
  bool opposite_ok = true;
  for (const Simplex& c : b.chambers())
    if (b.opposite_chambers(c).size() != 8) opposite_ok = false;
  rep.add("opposite chambers", opposite_ok, "every chamber has exactly 8 opposites");
  const long long euler =
      static_cast<long long>(b.complex().faces(0).size()) -
      static_cast<long long>(b.complex().faces(1).size());
  rep.add("euler characteristic", 1 - euler == 8 && euler == -7,
          "1 - (14 - 21) = 8 from the face counts");
  rep.artifacts = {{"betti", h1.betti}, {"euler", euler}};
  return rep;
}

/// 2. Solomon-Tits bases over F_2 and F_3: unit invariant factors.
inline Report criterion_solomon_tits(std::uint64_t) {
  Report rep;
  rep.command = "criterion 2: solomon-tits basis";
  {
    const auto& b = detail::fano();
    auto basis = b.solomon_tits_basis(b.chambers().front());
    bool units = true;
    for (const auto& d : basis.divisors) units = units && d == 1;
    rep.add("q=2 cycle count", basis.cycles.size() == 8, "8 apartment cycles");
    rep.add("q=2 invariant factors", units && basis.rank == 8, "all divisors 1, rank 8");
    rep.add("q=2 verified", basis.verified, "rank equals betti equals cycle count");
  }
  {
    const SphericalBuilding b3 = an_building(2, 3);
    auto basis = b3.solomon_tits_basis(b3.chambers().front());
    bool units = true;
    for (const auto& d : basis.divisors) units = units && d == 1;
    rep.add("q=3 cycle count", basis.cycles.size() == 27, "27 = q^3 apartment cycles");
    rep.add("q=3 invariant factors", units && basis.rank == 27, "all divisors 1, rank 27");
    rep.add("q=3 verified", basis.verified, "rank equals betti equals cycle count");
  }
  return rep;
}

/// 3. Supports of random basis combinations: purity and behavior under
/// suspension (exact complex equality).
inline Report criterion_support_suspension(std::uint64_t seed) {
  Report rep;
  rep.command = "criterion 3: support purity and suspension";
  rep.inputs = {{"seed", seed}, {"combinations", 100}};
  const auto& b = detail::fano();
  auto basis = b.solomon_tits_basis(b.chambers().front());
  std::mt19937_64 rng(seed);
  bool pure_ok = true, suspension_ok = true;
  int tested = 0;
  while (tested < 100) {
    Chain z(1);
    for (const Chain& c : basis.cycles) {
      const long long coef = static_cast<long long>(rng() % 9) - 4;
      z += c.scaled(coef);
    }
    if (z.is_zero()) continue;  // resample the rare all-cancel draw
    ++tested;
    const SimplicialComplex supp = support(z, b.complex());
    if (!(supp.is_pure() && supp.dim() == 1)) pure_ok = false;
    const Chain s = suspend_cycle(z, b.complex(), 0);
    const SimplicialComplex joined = join(b.complex(), sphere_complex(0));
    if (!(support(s, joined) == join(supp, sphere_complex(0)))) suspension_ok = false;
  }
  rep.add("support purity", pure_ok, "100 random combinations, pure of dimension 1");
  rep.add("suspension support", suspension_ok, "support of suspension equals support * S0, exactly");
  return rep;
}

/// 4. Support lattice: 35 indecomposables, reconstruction up to
/// isomorphism, and the suspended lattice with its S0 minimum.
inline Report criterion_lattice(std::uint64_t) {
  Report rep;
  rep.command = "criterion 4: lattice reconstruction";
  const auto& b = detail::fano();
  SupportLattice lat(b.complex(), detail::apartment_supports(b));
  rep.add("indecomposables", lat.indecomposables().size() == 35,
          "14 closed vertices + 21 closed edges");
  rep.add("minimal element", lat.minimal_element().is_empty(), "empty complex");
  auto rec = lat.reconstruct();
  rep.add("reconstruction", rec.isomorphic, "simplicially isomorphic to the building");

  const SphericalBuilding wj = weak_join(b, 0);
  SupportLattice jlat(wj.complex(), detail::apartment_supports(wj));
  const SimplicialComplex minimal = jlat.minimal_element();
  const int base = b.complex().vertex_count();
  rep.add("join minimal element",
          minimal.dim() == 0 && minimal.faces(0).size() == 2 && minimal.has_vertex(base) &&
              minimal.has_vertex(base + 1),
          "the two suspension vertices");
  auto jrec = jlat.reconstruct();
  rep.add("join reconstruction", jrec.isomorphic && isomorphic_complexes(jrec.complex, b.complex()),
          "quotient by the S0 factor recovers the building");
  rep.add("join recovered",
          isomorphic_complexes(join(jrec.complex, sphere_complex(0)), wj.complex()),
          "joining the sphere back reproduces the suspended complex");
  return rep;
}

/// 5. Building axioms, exhaustively on the Fano building.
inline Report criterion_axioms(std::uint64_t) {
  Report rep;
  rep.command = "criterion 5: building axioms";
  const BuildingAxiomReport r = detail::fano().verify_axioms();
  rep.add("B1", r.b1.pass, r.b1.detail);
  rep.add("B2", r.b2.pass, r.b2.detail);
  return rep;
}

/// 6. Law of sines across curvatures, with the spherical determinant
/// identity; residuals below 1e-9 on 10^4 triangles per curvature.
inline Report criterion_sines(std::uint64_t seed) {
  Report rep;
  rep.command = "criterion 6: law of sines";
  rep.inputs = {{"seed", seed}, {"triangles_per_kappa", 10000}, {"tolerance", 1e-9}};
  for (double kappa : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(std::llround(kappa * 1000 + 5000)));
    double worst_ratio = 0, worst_det = 0;
    int tested = 0;
    while (tested < 10000) {
      double s[3];
      for (double& x : s) x = uniform(rng, 0.05, 1.0);
      if (s[0] > s[1] + s[2] - 0.01 || s[1] > s[0] + s[2] - 0.01 || s[2] > s[0] + s[1] - 0.01)
        continue;
      ++tested;
      const auto tri = catk::comparison_triangle(kappa, s[0], s[1], s[2]);
      const auto res = catk::law_of_sines_residual(kappa, tri);
      worst_ratio = std::max(worst_ratio, res.ratio_residual);
      if (res.determinant_residual) worst_det = std::max(worst_det, *res.determinant_residual);
    }
    std::ostringstream label;
    label << "kappa " << kappa;
    rep.add(label.str() + " ratios", worst_ratio < 1e-9, "max residual " + std::to_string(worst_ratio));
    if (kappa > 0)
      rep.add(label.str() + " determinant", worst_det < 1e-9,
              "max residual " + std::to_string(worst_det));
  }
  return rep;
}

/// 7. Comparison-inequality sanity: model spaces pass at their own
/// curvature; a documented spherical quadruple fails the flat check.
inline Report criterion_cat_check(std::uint64_t seed) {
  Report rep;
  rep.command = "criterion 7: cat comparison checks";
  rep.inputs = {{"seed", seed}, {"quadruples_per_kappa", 10000}};
  for (double kappa : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(std::llround(kappa * 1000 + 5000)));
    bool all_pass = true;
    int tested = 0;
    while (tested < 10000) {
      auto p = detail::random_model_point(rng, kappa);
      auto q = detail::random_model_point(rng, kappa);
      auto r = detail::random_model_point(rng, kappa);
      catk::CatQuadruple quad;
      quad.pq = catk::model_distance(kappa, p, q);
      quad.pr = catk::model_distance(kappa, p, r);
      quad.qr = catk::model_distance(kappa, q, r);
      const double dk = catk::Kappa{kappa}.diameter();
      if (quad.pq + quad.pr + quad.qr >= 2 * dk - 1e-3 || quad.qr < 1e-6) continue;
      ++tested;
      auto m = catk::geodesic_point(kappa, q, r, uniform(rng, 0, 1));
      quad.qm = catk::model_distance(kappa, q, m);
      quad.mr = catk::model_distance(kappa, m, r);
      quad.pm = catk::model_distance(kappa, p, m);
      if (!catk::cat_check(kappa, quad)) all_pass = false;
    }
    rep.add("kappa " + std::to_string(kappa) + " self-comparison", all_pass,
            "all sampled quadruples satisfy the inequality");
  }
  // the spherical equilateral triangle with sides pi/2 is thicker than flat
  catk::CatQuadruple witness;
  witness.pq = witness.pr = witness.qr = M_PI / 2;
  witness.qm = witness.mr = M_PI / 4;
  witness.pm = M_PI / 2;
  const bool flat_fails = !catk::cat_check(0, witness);
  const bool spherical_holds = catk::cat_check(1, witness);
  rep.add("spherical witness", flat_fails && spherical_holds,
          "fails at kappa 0, passes at kappa 1");
  rep.artifacts = {{"witness",
                    {{"pq", witness.pq},
                     {"pr", witness.pr},
                     {"qr", witness.qr},
                     {"qm", witness.qm},
                     {"mr", witness.mr},
                     {"pm", witness.pm},
                     {"euclidean_median", std::sqrt(3.0) / 2 * M_PI / 2}}}};
  return rep;
}

/// 8. Fiber ultrametric on 10^3 sampled fiber points, exact.
inline Report criterion_fiber_metric(std::uint64_t seed) {
  Report rep;
  rep.command = "criterion 8: fiber ultrametric";
  rep.inputs = {{"seed", seed}, {"points", 1000}};
  const auto t2 = rtree::RTree::full_tree();
  std::mt19937_64 rng(seed);
  auto fiber = rtree::sample_fiber_points(rtree::Rational(-2), rng, 1000);
  const auto r = rtree::verify_fiber_metric(t2, fiber);
  rep.add("ultrametric", r.ultrametric_ok, "all triples, exact rational arithmetic");
  rep.add("delta equals distance", r.delta_equals_distance, "branch-point metric matches d");
  rep.add("lipschitz constant", r.max_ratio == 1, "empirical L = 1 exactly");
  rep.artifacts = {{"triples_checked", r.triples_checked}};
  return rep;
}

/// 9. Covering construction at r = 1 and r = 1/5: order, mesh, claims,
/// refinement; exact rational arithmetic throughout.
inline Report criterion_burillo(std::uint64_t seed) {
  Report rep;
  rep.command = "criterion 9: covering construction";
  rep.inputs = {{"seed", seed}, {"points", 1000}};
  const auto t2 = rtree::RTree::full_tree();
  std::mt19937_64 rng(seed);
  auto sample = rtree::sample_tree_points(t2, rng, 1000);
  const auto coarse = rtree::burillo_cover(t2, rtree::Rational(1), sample);
  const auto fine = rtree::burillo_cover(t2, rtree::Rational(1, 5), sample);
  rep.add("order r=1", coarse.realized_order <= 2, "realized order <= n + 1 = 2");
  rep.add("mesh r=1", coarse.realized_mesh <= 5, "realized mesh <= r(2+3L) = 5");
  rep.add("claims r=1", coarse.all_claims_pass(), "absorption, mesh, coverage, disjointness, order");
  rep.add("order r=1/5", fine.realized_order <= 2, "realized order <= 2");
  rep.add("mesh r=1/5", fine.realized_mesh <= 1, "realized mesh <= 5r = 1");
  rep.add("claims r=1/5", fine.all_claims_pass(), "all claim checks");
  rep.add("refinement", rtree::cover_refines(t2, fine, coarse, sample),
          "the r/5 cover refines the r cover on the sample");
  rep.artifacts = {{"elements_r1", coarse.elements.size()}, {"elements_r5th", fine.elements.size()}};
  return rep;
}

/// 10. Punctured balls versus direction sets at a branch point and at an
/// interior fiber point, with pairwise angles pi.
inline Report criterion_directions(std::uint64_t seed) {
  Report rep;
  rep.command = "criterion 10: directions and punctured balls";
  rep.inputs = {{"seed", seed}, {"points", 1000}};
  const auto t2 = rtree::RTree::full_tree();
  const rtree::TreePoint origin{0, 0}, interior{0, 2};
  std::mt19937_64 rng(seed);

  for (const auto& [eps_num, eps_den] : {std::pair<long, long>{1, 10}, {1, 2}}) {
    const rtree::Rational eps(eps_num, eps_den);
    auto sample = rtree::sample_ball_points(t2, origin, eps, rng, 1000);
    const int comps = rtree::punctured_components(t2, origin, eps, sample);
    rep.add("origin components eps=" + std::to_string(eps_num) + "/" + std::to_string(eps_den),
            comps == 4 && rtree::directions_at(t2, origin).size() == 4,
            "components = directions = 4");
  }
  {
    auto sample = rtree::sample_ball_points(t2, interior, rtree::Rational(1, 2), rng, 1000);
    const int comps = rtree::punctured_components(t2, interior, rtree::Rational(1, 2), sample);
    rep.add("interior components", comps == 2 && rtree::directions_at(t2, interior).size() == 2,
            "components = directions = 2");
  }
  bool angles_ok = true;
  auto dirs = rtree::directions_at(t2, origin);
  auto schedule = catk::geometric_schedule();
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      auto chord = [&](double s) {
        const rtree::Rational rs(s);
        return rtree::tree_distance(t2, dirs[i].at(rs), dirs[j].at(rs)).convert_to<double>();
      };
      const auto est = catk::alexandrov_angle_estimate(chord, schedule);
      if (std::abs(est.angle - M_PI) > 1e-9) angles_ok = false;
    }
  rep.add("pairwise angles", angles_ok, "all distinct directions at angle pi, within 1e-9");
  return rep;
}

/// 11. The incomplete/complete tree pair: the open axis of the strip tree
/// lies in no apartment, and the stretch map is a homeomorphism but not an
/// isometry.
inline Report criterion_tree_example(std::uint64_t seed) {
  Report rep;
  rep.command = "criterion 11: stretch map and apartment classification";
  rep.inputs = {{"seed", seed}, {"round_trips", 10000}};
  const auto t1 = rtree::RTree::strip_tree();
  const auto t2 = rtree::RTree::full_tree();

  rtree::SegmentQuery axis;
  axis.horizontal = true;
  axis.lo = -1;
  axis.hi = 1;
  const auto dec = rtree::is_segment_in_apartment(t1, axis);
  rep.add("open axis uncontained", !dec.contained && dec.analysis.size() >= 3,
          "classification of apartments rules out every kind");

  rtree::SegmentQuery full_axis;
  full_axis.horizontal = true;
  full_axis.lo = -5;
  full_axis.hi = 5;
  rep.add("complete tree axis", rtree::is_segment_in_apartment(t2, full_axis).contained,
          "the axis is an apartment of the complete tree");

  std::mt19937_64 rng(seed);
  bool round_trip_exact = true;
  auto pts = rtree::sample_tree_points(t2, rng, 10000);
  for (const auto& p : pts)
    if (!(rtree::stretch_map_inverse(rtree::stretch_map(p)) == p)) round_trip_exact = false;
  rep.add("round trip", round_trip_exact, "exact identity on 10^4 samples (within 1e-12 trivially)");

  const rtree::TreePoint a{1, 0}, b{2, 0};
  const rtree::Rational before = rtree::tree_distance(t2, a, b);
  const rtree::Rational after = rtree::tree_distance(t1, rtree::stretch_map(a), rtree::stretch_map(b));
  rep.add("distortion witness", before == 1 && after == rtree::Rational(1, 6),
          "d((1,0),(2,0)) = 1 maps to 1/6");
  rep.artifacts = {{"witness",
                    {{"p", io::tree_point_to_json(a)},
                     {"q", io::tree_point_to_json(b)},
                     {"distance_before", io::rational_to_json(before)},
                     {"distance_after", io::rational_to_json(after)}}},
                   {"classification", dec.analysis}};
  return rep;
}

/// 12. Local homology of the Fano building: Z^2 in degree 1 at every
/// vertex, trivial elsewhere.
inline Report criterion_local_homology(std::uint64_t) {
  Report rep;
  rep.command = "criterion 12: local homology";
  const auto& k = detail::fano().complex();
  bool degree1 = true, elsewhere = true;
  for (const Simplex& v : k.faces(0)) {
    const HomologyGroup h = local_homology(k, v.vertices()[0], 1);
    if (!(h.betti == 2 && h.torsion.empty())) degree1 = false;
    for (int deg : {0, 2, 3})
      if (!local_homology(k, v.vertices()[0], deg).is_trivial()) elsewhere = false;
  }
  rep.add("degree 1", degree1, "Z^2 at every vertex (three-point links)");
  rep.add("other degrees", elsewhere, "trivial in degrees 0, 2, 3");
  return rep;
}

struct Criterion {
  int id;
  std::string name;
  Report (*run)(std::uint64_t seed);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "fano-homology", criterion_fano_homology},
      {2, "solomon-tits", criterion_solomon_tits},
      {3, "support-suspension", criterion_support_suspension},
      {4, "lattice", criterion_lattice},
      {5, "axioms", criterion_axioms},
      {6, "law-of-sines", criterion_sines},
      {7, "cat-check", criterion_cat_check},
      {8, "fiber-metric", criterion_fiber_metric},
      {9, "burillo-cover", criterion_burillo},
      {10, "directions", criterion_directions},
      {11, "tree-example", criterion_tree_example},
      {12, "local-homology", criterion_local_homology},
  };
  return list;
}

}  // namespace weyl::verify
