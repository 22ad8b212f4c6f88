// Batch front end: every verification pipeline behind JSON reports with
// deterministic seeds. Exit codes: 0 all checks pass, 1 a check failed or
// the computation rejected its input, 2 usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "weyl/building.hpp"
#include "weyl/catk.hpp"
#include "weyl/json_io.hpp"
#include "weyl/report.hpp"
#include "weyl/rtree.hpp"
#include "weyl/support_lattice.hpp"
#include "weyl/verify.hpp"

using nlohmann::json;
using weyl::report::Report;

namespace {

json read_json_input(const std::string& path) {
  if (path.empty() || path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

struct Output {
  json payload;
  int exit_code = 0;
};

weyl::BuildingData joined_data(weyl::BuildingData d, int join_n) {
  if (join_n < 0) return d;
  const auto sphere = weyl::sphere_complex(join_n);
  weyl::BuildingData out;
  out.complex = weyl::join(d.complex, sphere);
  out.type_of = d.type_of;  // types of the new vertices are not needed downstream
  for (const auto& a : d.apartment_faces) out.apartment_faces.push_back(weyl::join(a, sphere));
  return out;
}

Output run_lattice(const json& building_json, int join_n) {
  weyl::BuildingData data = weyl::io::building_data_from_json(building_json);
  data = joined_data(std::move(data), join_n);
  weyl::SupportLattice lat(data.complex, data.apartment_faces);

  json out;
  const auto count = lat.element_count();
  out["elements"] = count ? json(*count) : json(nullptr);
  json ind = json::array();
  for (const auto& c : lat.indecomposables()) {
    json facets = json::array();
    for (const auto& f : c.facets()) facets.push_back(f.vertices());
    ind.push_back(facets);
  }
  out["indecomposables"] = ind;
  json minimal = json::array();
  const auto minimal_complex = lat.minimal_element();
  for (const auto& f : minimal_complex.facets()) minimal.push_back(f.vertices());
  out["minimal"] = minimal;
  bool iso = false;
  try {
    iso = lat.reconstruct().isomorphic;
  } catch (const std::exception&) {
    iso = false;
  }
  out["reconstruction_isomorphic"] = iso;
  return {out, 0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical-building homology and comparison-geometry toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  std::string out_path;
  std::string format = "json";
  double tolerance = 1e-9;
  app.add_option("--seed", seed, "seed for all sampling")->capture_default_str();
  app.add_option("--out", out_path, "write the JSON output to a file instead of stdout");
  app.add_option("--tolerance", tolerance, "comparison tolerance echoed into reports")
      ->capture_default_str();
  app.add_option("--format", format, "output format (json)")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();

  std::function<Output()> action;

  // ---- complex ------------------------------------------------------------
  auto* cpx = app.add_subcommand("complex", "simplicial complex operations (JSON in/out)");
  cpx->require_subcommand(1);
  {
    static std::string in_path = "-";
    static int degree = 0, sphere_n = 0, vertex = 0, suspend_n = 0;
    static bool reduced = false;
    static std::string chain_path;

    auto* make = cpx->add_subcommand("make", "downward closure of a facet list");
    make->add_option("--in", in_path, "complex JSON (default stdin)");
    make->callback([&] {
      action = [] {
        json j = read_json_input(in_path);
        std::vector<std::vector<weyl::VertexId>> facets;
        for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<weyl::VertexId>>());
        return Output{weyl::io::complex_to_json(weyl::make_complex(facets)), 0};
      };
    });

    auto* sphere = cpx->add_subcommand("sphere", "cross-polytope sphere");
    sphere->add_option("--n", sphere_n, "sphere dimension (>= -1)")->required();
    sphere->callback([&] {
      action = [] { return Output{weyl::io::complex_to_json(weyl::sphere_complex(sphere_n)), 0}; };
    });

    auto* js = cpx->add_subcommand("join-sphere", "join the input with a sphere");
    js->add_option("--n", sphere_n, "sphere dimension")->required();
    js->add_option("--in", in_path, "complex JSON (default stdin)");
    js->callback([&] {
      action = [] {
        auto k = weyl::io::complex_from_json(read_json_input(in_path));
        return Output{weyl::io::complex_to_json(weyl::join(k, weyl::sphere_complex(sphere_n))), 0};
      };
    });

    auto* lk = cpx->add_subcommand("link", "link of a vertex");
    lk->add_option("--vertex", vertex, "vertex id")->required();
    lk->add_option("--in", in_path, "complex JSON (default stdin)");
    lk->callback([&] {
      action = [] {
        auto k = weyl::io::complex_from_json(read_json_input(in_path));
        return Output{weyl::io::complex_to_json(weyl::link(k, vertex)), 0};
      };
    });

    auto* hom = cpx->add_subcommand("homology", "integer homology via Smith normal form");
    hom->add_option("--k", degree, "degree")->required();
    hom->add_flag("--reduced", reduced, "reduced homology");
    hom->add_option("--in", in_path, "complex JSON (default stdin)");
    hom->callback([&] {
      action = [] {
        auto k = weyl::io::complex_from_json(read_json_input(in_path));
        const auto h = weyl::homology(k, degree, reduced);
        Report rep;
        rep.command = "complex homology";
        rep.inputs = {{"k", degree}, {"reduced", reduced}};
        json torsion = json::array();
        for (const auto& d : h.torsion) torsion.push_back(d.str());
        rep.artifacts = {{"betti", h.betti}, {"torsion", torsion}};
        rep.add("computed", true, "betti " + std::to_string(h.betti));
        return Output{rep.to_json(), 0};
      };
    });

    auto* lhom = cpx->add_subcommand("local-homology", "local homology at a vertex via the link");
    lhom->add_option("--vertex", vertex, "vertex id")->required();
    lhom->add_option("--k", degree, "degree")->required();
    lhom->add_option("--in", in_path, "complex JSON (default stdin)");
    lhom->callback([&] {
      action = [] {
        auto k = weyl::io::complex_from_json(read_json_input(in_path));
        const auto h = weyl::local_homology(k, vertex, degree);
        Report rep;
        rep.command = "complex local-homology";
        rep.inputs = {{"vertex", vertex}, {"k", degree}};
        json torsion = json::array();
        for (const auto& d : h.torsion) torsion.push_back(d.str());
        rep.artifacts = {{"betti", h.betti}, {"torsion", torsion}};
        rep.add("computed", true, "betti " + std::to_string(h.betti));
        return Output{rep.to_json(), 0};
      };
    });

    auto* supp = cpx->add_subcommand("support", "support of a top cycle");
    supp->add_option("--chain", chain_path, "chain JSON file")->required();
    supp->add_option("--in", in_path, "complex JSON (default stdin)");
    supp->callback([&] {
      action = [] {
        auto k = weyl::io::complex_from_json(read_json_input(in_path));
        auto z = weyl::io::chain_from_json(read_json_input(chain_path));
        return Output{weyl::io::complex_to_json(weyl::support(z, k)), 0};
      };
    });

    auto* sus = cpx->add_subcommand("suspend", "suspend a top cycle through n+1 antipodal pairs");
    sus->add_option("--chain", chain_path, "chain JSON file")->required();
    sus->add_option("--n", suspend_n, "sphere dimension")->required();
    sus->add_option("--in", in_path, "complex JSON (default stdin)");
    sus->callback([&] {
      action = [] {
        auto k = weyl::io::complex_from_json(read_json_input(in_path));
        auto z = weyl::io::chain_from_json(read_json_input(chain_path));
        return Output{weyl::io::chain_to_json(weyl::suspend_cycle(z, k, suspend_n)), 0};
      };
    });
  }

  // ---- building -----------------------------------------------------------
  auto* bld = app.add_subcommand("building", "finite spherical buildings of type A");
  bld->require_subcommand(1);
  {
    static int n = 2, q = 2, join_n = -1;
    static std::string in_path;
    static std::string simplex_arg;

    auto* an = bld->add_subcommand("an", "flag complex of PG(n, q) with its apartment catalog");
    an->add_option("--n", n, "rank (1 or 2)")->required();
    an->add_option("--q", q, "field size (2 or 3)")->required();
    an->add_option("--join", join_n, "join with the given sphere dimension");
    an->callback([&] {
      action = [] {
        auto b = weyl::an_building(n, q);
        if (join_n >= 0) return Output{weyl::io::building_to_json(weyl::weak_join(b, join_n)), 0};
        return Output{weyl::io::building_to_json(b), 0};
      };
    });

    auto* ver = bld->add_subcommand("verify", "axioms B1/B2 and thickness");
    ver->add_option("--n", n, "rank (used when no --in)");
    ver->add_option("--q", q, "field size");
    ver->add_option("--in", in_path, "building JSON (default: construct from --n/--q)");
    ver->callback([&] {
      action = [] {
        weyl::BuildingData data = in_path.empty()
                                      ? weyl::an_building(n, q).data()
                                      : weyl::io::building_data_from_json(read_json_input(in_path));
        const auto axioms = weyl::verify_axioms_data(data);
        const auto thick = weyl::thickness_data(data);
        Report rep;
        rep.command = "building verify";
        rep.add("B1", axioms.b1.pass, axioms.b1.detail);
        rep.add("B2", axioms.b2.pass, axioms.b2.detail);
        json panels = json::array();
        for (const auto& p : thick.panels)
          panels.push_back(
              {{"panel", p.panel}, {"chambers", p.chambers}, {"apartments", p.apartments}});
        rep.artifacts = {{"thick", thick.thick},
                         {"min_panel_chambers", thick.min_panel_chambers},
                         {"min_face_apartments", thick.min_face_apartments},
                         {"panels", panels}};
        return Output{rep.to_json(), rep.all_pass() ? 0 : 1};
      };
    });

    auto* basis = bld->add_subcommand("basis", "Solomon-Tits basis with verification");
    basis->add_option("--n", n, "rank")->required();
    basis->add_option("--q", q, "field size")->required();
    basis->callback([&] {
      action = [] {
        auto b = weyl::an_building(n, q);
        auto st = b.solomon_tits_basis(b.chambers().front());
        Report rep;
        rep.command = "building basis";
        rep.inputs = {{"n", n}, {"q", q}};
        json divisors = json::array();
        for (const auto& d : st.divisors) divisors.push_back(d.str());
        rep.artifacts = {{"cycles", st.cycles.size()},
                         {"rank", st.rank},
                         {"betti", st.betti},
                         {"divisors", divisors}};
        rep.add("verified", st.verified, "unit divisors, rank equals betti equals cycle count");
        return Output{rep.to_json(), rep.all_pass() ? 0 : 1};
      };
    });

    auto* opp = bld->add_subcommand("opposite", "opposite chambers of the first chamber");
    opp->add_option("--n", n, "rank")->required();
    opp->add_option("--q", q, "field size")->required();
    opp->callback([&] {
      action = [] {
        auto b = weyl::an_building(n, q);
        const auto list = b.opposite_chambers(b.chambers().front());
        Report rep;
        rep.command = "building opposite";
        rep.inputs = {{"n", n}, {"q", q}};
        json chambers = json::array();
        for (const auto& c : list) chambers.push_back(c.vertices());
        rep.artifacts = {{"count", list.size()}, {"chambers", chambers}};
        rep.add("computed", true, std::to_string(list.size()) + " opposite chambers");
        return Output{rep.to_json(), 0};
      };
    });

    auto* inter = bld->add_subcommand("intersection", "a simplex as an intersection of apartments");
    inter->add_option("--n", n, "rank")->required();
    inter->add_option("--q", q, "field size")->required();
    inter->add_option("--simplex", simplex_arg, "comma-separated vertex ids")->required();
    inter->callback([&] {
      action = [] {
        auto b = weyl::an_building(n, q);
        std::vector<weyl::VertexId> verts;
        std::stringstream ss(simplex_arg);
        for (std::string part; std::getline(ss, part, ',');) verts.push_back(std::stoi(part));
        std::sort(verts.begin(), verts.end());
        const auto ids = b.simplex_as_apartment_intersection(weyl::Simplex(verts));
        Report rep;
        rep.command = "building intersection";
        rep.inputs = {{"n", n}, {"q", q}, {"simplex", verts}};
        rep.artifacts = {{"apartments", ids}};
        rep.add("computed", true, std::to_string(ids.size()) + " apartments suffice");
        return Output{rep.to_json(), 0};
      };
    });
  }

  // ---- lattice --------------------------------------------------------------
  {
    static std::string building_path = "-";
    static int join_n = -1;
    auto* lat = app.add_subcommand("lattice", "support lattice of apartment cycles");
    lat->add_option("--building", building_path, "building JSON (default stdin)");
    lat->add_option("--join", join_n, "join with the given sphere dimension first");
    lat->callback([&] {
      action = [] { return run_lattice(read_json_input(building_path), join_n); };
    });
  }

  // ---- catk -----------------------------------------------------------------
  auto* ck = app.add_subcommand("catk", "model-space comparison trigonometry");
  ck->require_subcommand(1);
  {
    static double kappa = 0;
    static std::vector<double> sides;
    static std::string quad_path = "-";

    auto* sines = ck->add_subcommand("sines", "solve a comparison triangle and check the law of sines");
    sines->add_option("--kappa", kappa, "curvature")->required();
    sines->add_option("--sides", sides, "three side lengths")->expected(3)->required();
    sines->callback([&] {
      action = [&tolerance] {
        Report rep;
        rep.command = "catk sines";
        rep.inputs = {{"kappa", kappa}, {"sides", sides}, {"tolerance", tolerance}};
        const auto tri = weyl::catk::comparison_triangle(kappa, sides[0], sides[1], sides[2]);
        const auto res = weyl::catk::law_of_sines_residual(kappa, tri);
        rep.artifacts = {{"angles", {tri.alpha, tri.beta, tri.gamma}},
                         {"ratio_residual", res.ratio_residual}};
        if (res.determinant_residual)
          rep.artifacts["determinant_residual"] = *res.determinant_residual;
        rep.add("law of sines", res.max_residual() < tolerance,
                "max residual " + std::to_string(res.max_residual()));
        return Output{rep.to_json(), rep.all_pass() ? 0 : 1};
      };
    });

    auto* check = ck->add_subcommand("check", "comparison inequality for a distance quadruple");
    check->add_option("--kappa", kappa, "curvature")->required();
    check->add_option("--quad", quad_path, "quadruple JSON (default stdin)");
    check->callback([&] {
      action = [] {
        const json j = read_json_input(quad_path);
        weyl::catk::CatQuadruple quad;
        quad.pq = j.at("pq").get<double>();
        quad.pr = j.at("pr").get<double>();
        quad.qr = j.at("qr").get<double>();
        quad.qm = j.at("qm").get<double>();
        quad.mr = j.at("mr").get<double>();
        quad.pm = j.at("pm").get<double>();
        Report rep;
        rep.command = "catk check";
        rep.inputs = {{"kappa", kappa}, {"quad", j}};
        const bool ok = weyl::catk::cat_check(kappa, quad);
        rep.add("comparison inequality", ok,
                ok ? "d(p,m) within the comparison bound" : "quadruple is thicker than the model");
        return Output{rep.to_json(), ok ? 0 : 1};
      };
    });
  }

  // ---- rtree ----------------------------------------------------------------
  auto* rt = app.add_subcommand("rtree", "parametric R-trees: metric, retraction, covers");
  rt->require_subcommand(1);
  {
    static std::string tree_name = "t2", p_arg, q_arg, o_arg, r_arg = "1", eps_arg = "1/2",
                       a_arg = "0", lo_arg, hi_arg, at_arg;
    static int count = 1000;
    static bool horizontal = false, vertical = false;

    auto tree_of = [](const std::string& name) {
      if (name == "t1") return weyl::rtree::RTree::strip_tree();
      if (name == "t2") return weyl::rtree::RTree::full_tree();
      throw std::invalid_argument("tree must be t1 or t2");
    };

    auto* dist = rt->add_subcommand("dist", "exact tree distance");
    dist->add_option("--tree", tree_name, "t1 or t2")->capture_default_str();
    dist->add_option("--p", p_arg, "first point x,y")->required();
    dist->add_option("--q", q_arg, "second point x,y")->required();
    dist->callback([&, tree_of] {
      action = [tree_of] {
        const auto t = tree_of(tree_name);
        const auto p = weyl::io::parse_tree_point(p_arg);
        const auto q = weyl::io::parse_tree_point(q_arg);
        Report rep;
        rep.command = "rtree dist";
        rep.inputs = {{"tree", tree_name}, {"p", p_arg}, {"q", q_arg}};
        rep.artifacts = {{"distance", weyl::io::rational_to_json(weyl::rtree::tree_distance(t, p, q))}};
        rep.add("computed", true, "");
        return Output{rep.to_json(), 0};
      };
    });

    auto* bur = rt->add_subcommand("burillo", "axis cover with fiber ultrametric classes");
    bur->add_option("--r", r_arg, "cover scale (rational)")->capture_default_str();
    bur->add_option("--n", count, "sample size")->capture_default_str();
    bur->callback([&] {
      action = [&seed] {
        const auto t2 = weyl::rtree::RTree::full_tree();
        const auto r = weyl::io::parse_rational(r_arg);
        std::mt19937_64 rng(seed);
        const auto sample = weyl::rtree::sample_tree_points(t2, rng, count);
        const auto cover = weyl::rtree::burillo_cover(t2, r, sample);
        const auto fine = weyl::rtree::burillo_cover(t2, r / 5, sample);
        Report rep;
        rep.command = "rtree burillo";
        rep.inputs = {{"r", r_arg}, {"n", count}, {"seed", seed}};
        rep.artifacts = {{"elements", cover.elements.size()},
                         {"realized_order", cover.realized_order},
                         {"realized_mesh", weyl::io::rational_to_json(cover.realized_mesh)}};
        rep.add("order", cover.realized_order <= 2, "realized order <= 2");
        rep.add("mesh", cover.realized_mesh <= 5 * r, "realized mesh <= r(2+3L)");
        for (const auto& c : cover.claims) rep.add("claim " + c.name, c.pass, c.detail);
        rep.add("refinement", weyl::rtree::cover_refines(t2, fine, cover, sample),
                "the r/5 cover refines this one on the sample");
        return Output{rep.to_json(), rep.all_pass() ? 0 : 1};
      };
    });

    auto* tha = rt->add_subcommand("theorem-a", "punctured-ball components versus directions");
    tha->add_option("--o", o_arg, "center x,y")->required();
    tha->add_option("--eps", eps_arg, "ball radius (rational)")->capture_default_str();
    tha->add_option("--n", count, "sample size")->capture_default_str();
    tha->callback([&] {
      action = [&seed] {
        const auto t2 = weyl::rtree::RTree::full_tree();
        const auto o = weyl::io::parse_tree_point(o_arg);
        const auto eps = weyl::io::parse_rational(eps_arg);
        std::mt19937_64 rng(seed);
        const auto sample = weyl::rtree::sample_ball_points(t2, o, eps, rng, count);
        const auto dirs = weyl::rtree::directions_at(t2, o);
        const int comps = weyl::rtree::punctured_components(t2, o, eps, sample);

        bool angles_ok = true;
        double worst = 0;
        const auto schedule = weyl::catk::geometric_schedule();
        for (std::size_t i = 0; i < dirs.size(); ++i)
          for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            auto chord = [&](double s) {
              const weyl::rtree::Rational rs(s);
              return weyl::rtree::tree_distance(t2, dirs[i].at(rs), dirs[j].at(rs))
                  .convert_to<double>();
            };
            const auto est = weyl::catk::alexandrov_angle_estimate(chord, schedule);
            worst = std::max(worst, std::abs(est.angle - M_PI));
            if (std::abs(est.angle - M_PI) > 1e-9) angles_ok = false;
          }

        Report rep;
        rep.command = "rtree theorem-a";
        rep.inputs = {{"o", o_arg}, {"eps", eps_arg}, {"n", count}, {"seed", seed}};
        rep.artifacts = {{"directions", dirs.size()}, {"components", comps}};
        rep.add("components equal directions", comps == static_cast<int>(dirs.size()),
                std::to_string(comps) + " components, " + std::to_string(dirs.size()) + " directions");
        rep.add("pairwise angles", angles_ok,
                "max deviation from pi: " + std::to_string(worst));
        return Output{rep.to_json(), rep.all_pass() ? 0 : 1};
      };
    });

    auto* fib = rt->add_subcommand("fiber", "ultrametric report for a retraction fiber");
    fib->add_option("--a", a_arg, "fiber base point on the axis (rational)")->capture_default_str();
    fib->add_option("--n", count, "sample size")->capture_default_str();
    fib->callback([&] {
      action = [&seed] {
        const auto t2 = weyl::rtree::RTree::full_tree();
        std::mt19937_64 rng(seed);
        const auto fiber =
            weyl::rtree::sample_fiber_points(weyl::io::parse_rational(a_arg), rng, count);
        const auto r = weyl::rtree::verify_fiber_metric(t2, fiber);
        Report rep;
        rep.command = "rtree fiber";
        rep.inputs = {{"a", a_arg}, {"n", count}, {"seed", seed}};
        rep.artifacts = {{"triples_checked", r.triples_checked},
                         {"max_ratio", weyl::io::rational_to_json(r.max_ratio)}};
        rep.add("ultrametric", r.ultrametric_ok, "all triples, exact");
        rep.add("delta equals distance", r.delta_equals_distance, "L = 1 exactly");
        return Output{rep.to_json(), rep.all_pass() ? 0 : 1};
      };
    });

    auto* seg = rt->add_subcommand("segment", "is a segment contained in an apartment?");
    seg->add_option("--tree", tree_name, "t1 or t2")->capture_default_str();
    seg->add_flag("--horizontal", horizontal, "horizontal segment: y = 0, x in (lo, hi)");
    seg->add_flag("--vertical", vertical, "vertical segment: x = at, y in (lo, hi)");
    seg->add_option("--lo", lo_arg, "interval lower bound (rational)")->required();
    seg->add_option("--hi", hi_arg, "interval upper bound (rational)")->required();
    seg->add_option("--at", at_arg, "fixed coordinate for vertical segments");
    seg->callback([&, tree_of] {
      action = [tree_of] {
        if (horizontal == vertical)
          throw std::invalid_argument("pass exactly one of --horizontal / --vertical");
        weyl::rtree::SegmentQuery q;
        q.horizontal = horizontal;
        q.lo = weyl::io::parse_rational(lo_arg);
        q.hi = weyl::io::parse_rational(hi_arg);
        if (vertical) q.at = weyl::io::parse_rational(at_arg.empty() ? "0" : at_arg);
        const auto dec = weyl::rtree::is_segment_in_apartment(tree_of(tree_name), q);
        Report rep;
        rep.command = "rtree segment";
        rep.inputs = {{"tree", tree_name},
                      {"horizontal", horizontal},
                      {"lo", lo_arg},
                      {"hi", hi_arg}};
        rep.artifacts = {{"contained", dec.contained}, {"analysis", dec.analysis}};
        rep.add("decided", true, dec.contained ? "contained" : "not contained");
        return Output{rep.to_json(), 0};
      };
    });

    auto* st = rt->add_subcommand("stretch", "stretch map between the trees");
    st->add_option("--p", p_arg, "point x,y in the complete tree")->required();
    st->callback([&] {
      action = [] {
        const auto p = weyl::io::parse_tree_point(p_arg);
        const auto image = weyl::rtree::stretch_map(p);
        Report rep;
        rep.command = "rtree stretch";
        rep.inputs = {{"p", p_arg}};
        rep.artifacts = {{"image", weyl::io::tree_point_to_json(image)}};
        rep.add("round trip", weyl::rtree::stretch_map_inverse(image) == p, "exact");
        return Output{rep.to_json(), 0};
      };
    });
  }

  // ---- verify-all -------------------------------------------------------------
  {
    static int criterion_id = 0;
    auto* va = app.add_subcommand("verify-all", "run the full verification suite");
    va->add_option("--criterion", criterion_id, "run a single criterion (1-12)");
    va->callback([&] {
      action = [&seed] {
        json reports = json::array();
        bool all = true;
        for (const auto& crit : weyl::verify::criteria()) {
          if (criterion_id != 0 && crit.id != criterion_id) continue;
          Report rep = crit.run(seed);
          rep.inputs["seed"] = seed;
          all = all && rep.all_pass();
          json j = rep.to_json();
          j["criterion"] = crit.id;
          j["name"] = crit.name;
          reports.push_back(j);
        }
        if (reports.empty()) throw std::invalid_argument("no such criterion");
        return Output{json{{"command", "verify-all"}, {"reports", reports}, {"pass", all}},
                      all ? 0 : 1};
      };
    });
  }

  // global flags (--seed, --out, ...) may appear after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; }))
      enable_fallthrough(s);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  json payload;
  int code = 0;
  try {
    Output out = action();
    payload = std::move(out.payload);
    code = out.exit_code;
  } catch (const std::exception& e) {
    Report rep;
    rep.command = "error";
    rep.add("run", false, e.what());
    payload = rep.to_json();
    code = 1;
  }

  const std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return code;
}
