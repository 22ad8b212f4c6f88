#include <catch2/catch_amalgamated.hpp>

#include "weyl/building.hpp"

using namespace weyl;

namespace {

const SphericalBuilding& fano() {
  static const SphericalBuilding b = an_building(2, 2);
  return b;
}

}  // namespace

TEST_CASE("an_building shapes") {
  SECTION("projective line over F_2") {
    auto b = an_building(1, 2);
    CHECK(b.complex().faces(0).size() == 3);
    CHECK(b.complex().dim() == 0);
    CHECK(b.apartments().size() == 3);
  }
  SECTION("Fano plane flag complex") {
    const auto& b = fano();
    CHECK(b.complex().faces(0).size() == 14);
    CHECK(b.complex().faces(1).size() == 21);
    CHECK(b.apartments().size() == 28);  // frames of F_2^3
    for (const Apartment& a : b.apartments()) {
      CHECK(a.faces.faces(0).size() == 6);
      CHECK(a.faces.faces(1).size() == 6);
      CHECK(a.chart.size() == 6);
    }
  }
  SECTION("PG(2,3)") {
    auto b = an_building(2, 3);
    CHECK(b.complex().faces(0).size() == 26);
    CHECK(b.complex().faces(1).size() == 52);
  }
  SECTION("unsupported parameters") {
    CHECK_THROWS(an_building(3, 2));
    CHECK_THROWS(an_building(2, 4));
  }
}

TEST_CASE("charts are gallery-consistent") {
  // chambers sharing a panel differ by the simple reflection whose index
  // matches the type of the vertex they disagree on
  const auto& b = fano();
  const auto& g = b.group();
  for (const Apartment& a : b.apartments()) {
    for (const auto& [c1, w1] : a.chart)
      for (const auto& [c2, w2] : a.chart) {
        if (c1 == c2) continue;
        std::vector<VertexId> diff;
        for (VertexId v : c1.vertices())
          if (!c2.contains(v)) diff.push_back(v);
        if (diff.size() != 1) continue;  // not panel-adjacent
        const CoxeterElement rel = g.compose(g.inverse(w1), w2);
        CHECK(rel == g.simple(b.type_of()[diff[0]]));
      }
  }
}

TEST_CASE("apartment_containing") {
  const auto& b = fano();
  SECTION("opposite chambers span a unique apartment") {
    const Simplex c0 = b.chambers().front();
    for (const Simplex& d : b.opposite_chambers(c0))
      CHECK(b.apartments_containing(c0, d).size() == 1);
  }
  SECTION("single vertex: deterministic first hit") {
    const Simplex v({0});
    int id = b.apartment_containing(v, v);
    CHECK(id == b.apartments_containing(v, v).front());
  }
  SECTION("chambers sharing a panel lie in a common apartment") {
    const Simplex c0 = b.chambers().front();
    for (const Simplex& c : b.chambers()) {
      if (c == c0) continue;
      std::vector<VertexId> shared;
      for (VertexId v : c0.vertices())
        if (c.contains(v)) shared.push_back(v);
      if (shared.size() == 1) CHECK_NOTHROW(b.apartment_containing(c0, c));
    }
  }
}

TEST_CASE("opposite chamber counts") {
  SECTION("Fano: q^3 = 8 for every chamber") {
    const auto& b = fano();
    for (const Simplex& c : b.chambers()) CHECK(b.opposite_chambers(c).size() == 8);
  }
  SECTION("thin hexagon: unique antipode") {
    auto thin = thin_building(CoxeterDiagram::type_a(2));
    for (const Simplex& c : thin.chambers()) CHECK(thin.opposite_chambers(c).size() == 1);
  }
  SECTION("projective line over F_2: the other two points") {
    auto b = an_building(1, 2);
    for (const Simplex& c : b.chambers()) CHECK(b.opposite_chambers(c).size() == 2);
  }
}

TEST_CASE("fundamental classes") {
  SECTION("thin hexagon: alternating cycle") {
    auto thin = thin_building(CoxeterDiagram::type_a(2));
    const auto& g = thin.group();
    const Apartment& a = thin.apartments().front();
    const Simplex c0 = thin.chambers().front();
    Chain z = thin.fundamental_class(a, c0);
    CHECK(boundary(z).is_zero());
    CHECK(z.coefficient(c0) == 1);
    for (const auto& [s, c] : z.terms()) REQUIRE((c == 1 || c == -1));

    // gallery parity: in the type-ordered orientation the coefficient of the
    // chamber at Weyl distance w from c0 is a global sign times (-1)^{l(w)}
    auto type_parity = [&](const Simplex& chamber) {
      std::vector<std::pair<int, VertexId>> typed;
      for (VertexId v : chamber.vertices()) typed.emplace_back(thin.type_of()[v], v);
      std::sort(typed.begin(), typed.end());
      int inv = 0;
      for (std::size_t i = 0; i < typed.size(); ++i)
        for (std::size_t j = i + 1; j < typed.size(); ++j)
          if (typed[i].second > typed[j].second) ++inv;
      return inv % 2 == 0 ? 1LL : -1LL;
    };
    const CoxeterElement anchor_inv = g.inverse(a.chart.at(c0));
    const long long global = z.coefficient(c0) * type_parity(c0);
    for (const auto& [d, w] : a.chart) {
      const int len = g.length(g.compose(anchor_inv, w));
      const long long parity = (len % 2 == 0) ? 1 : -1;
      CHECK(z.coefficient(d) * type_parity(d) == global * parity);
    }
  }
  SECTION("every Fano apartment class is a cycle supported on its apartment") {
    const auto& b = fano();
    for (const Apartment& a : b.apartments()) {
      const Simplex c0 = a.chart.begin()->first;
      Chain z = b.fundamental_class(a, c0);
      CHECK(boundary(z).is_zero());
      CHECK(support(z, b.complex()) == a.faces);
    }
  }
  SECTION("classes from different apartments agree on the anchor chamber") {
    const auto& b = fano();
    const Simplex c0 = b.chambers().front();
    std::vector<Chain> classes;
    for (const Apartment& a : b.apartments())
      if (a.chart.count(c0)) classes.push_back(b.fundamental_class(a, c0));
    REQUIRE(classes.size() >= 2);
    for (const Chain& z : classes) CHECK(z.coefficient(c0) == 1);
  }
  SECTION("base chamber must lie in the apartment") {
    const auto& b = fano();
    for (const Simplex& c : b.chambers())
      if (!b.apartments().front().chart.count(c)) {
        CHECK_THROWS(b.fundamental_class(b.apartments().front(), c));
        break;
      }
  }
}

TEST_CASE("solomon-tits basis") {
  SECTION("Fano: 8 cycles forming a basis of H_1") {
    auto basis = fano().solomon_tits_basis(fano().chambers().front());
    CHECK(basis.cycles.size() == 8);
    CHECK(basis.rank == 8);
    CHECK(basis.betti == 8);  // Euler characteristic: 1 - (14 - 21)
    CHECK(basis.unique_apartments);
    for (const auto& d : basis.divisors) CHECK(d == 1);
    CHECK(basis.verified);
  }
  SECTION("thin hexagon: one cycle") {
    auto thin = thin_building(CoxeterDiagram::type_a(2));
    auto basis = thin.solomon_tits_basis(thin.chambers().front());
    CHECK(basis.cycles.size() == 1);
    CHECK(basis.verified);
  }
}

TEST_CASE("building axioms") {
  SECTION("Fano passes B1 and B2") {
    auto rep = fano().verify_axioms();
    CHECK(rep.b1.pass);
    CHECK(rep.b2.pass);
  }
  SECTION("thin hexagon passes") {
    auto rep = thin_building(CoxeterDiagram::type_a(2)).verify_axioms();
    CHECK(rep.all_pass());
  }
  SECTION("every constructed building and weak join passes") {
    CHECK(an_building(1, 2).verify_axioms().all_pass());
    CHECK(an_building(1, 3).verify_axioms().all_pass());
    CHECK(an_building(2, 3).verify_axioms().all_pass());
    CHECK(weak_join(fano(), 0).verify_axioms().all_pass());
  }
  SECTION("deleting an apartment breaks B1") {
    const auto& b = fano();
    std::vector<Apartment> fewer(b.apartments().begin(), b.apartments().end() - 1);
    SphericalBuilding crippled(b.complex(), b.diagram(), b.type_of(), std::move(fewer));
    CHECK_FALSE(crippled.verify_axioms().b1.pass);
  }
}

TEST_CASE("thickness") {
  SECTION("Fano is thick with q+1 chambers per panel") {
    auto rep = fano().thickness();
    CHECK(rep.thick);
    for (const auto& p : rep.panels) {
      CHECK(p.chambers == 3);
      CHECK(p.apartments >= 3);
    }
  }
  SECTION("thin hexagon is not thick") {
    CHECK_FALSE(thin_building(CoxeterDiagram::type_a(2)).thickness().thick);
  }
  SECTION("weak joins are not thick") {
    CHECK_FALSE(weak_join(fano(), 0).thickness().thick);
  }
}

TEST_CASE("weak joins") {
  SECTION("Fano * S0: suspension homology") {
    auto wj = weak_join(fano(), 0);
    CHECK(wj.complex().dim() == 2);
    CHECK(homology(wj.complex(), 2).betti == 8);
    CHECK(homology(wj.complex(), 1).betti == 0);
  }
  SECTION("thin hexagon * S0 is a 2-sphere") {
    auto wj = weak_join(thin_building(CoxeterDiagram::type_a(2)), 0);
    CHECK(homology(wj.complex(), 2).betti == 1);
    CHECK(homology(wj.complex(), 2).torsion.empty());
  }
  SECTION("axioms hold after joining") {
    auto rep = weak_join(thin_building(CoxeterDiagram::type_a(2)), 0).verify_axioms();
    CHECK(rep.all_pass());
    auto rep2 = weak_join(an_building(1, 2), 0).verify_axioms();
    CHECK(rep2.all_pass());
  }
  SECTION("suspension preserves betti across degrees") {
    auto b = an_building(1, 2);
    auto wj = weak_join(b, 1);  // three points joined with S^1
    CHECK(homology(wj.complex(), 2).betti == homology(b.complex(), 0, true).betti);
  }
}

TEST_CASE("simplices as apartment intersections") {
  const auto& b = fano();
  SECTION("chambers need two apartments") {
    for (int i = 0; i < 3; ++i) {
      auto ids = b.simplex_as_apartment_intersection(b.chambers()[i]);
      CHECK(ids.size() == 2);
    }
  }
  SECTION("vertices need at most three") {
    for (VertexId v : {0, 7}) {
      auto ids = b.simplex_as_apartment_intersection(Simplex({v}));
      CHECK(ids.size() <= 3);
    }
  }
  SECTION("thin buildings are rejected") {
    auto thin = thin_building(CoxeterDiagram::type_a(2));
    CHECK_THROWS_WITH(thin.simplex_as_apartment_intersection(Simplex({0})),
                      Catch::Matchers::ContainsSubstring("thickness"));
  }
}

TEST_CASE("A2 over F_2: three independent chamber counts agree") {
  const auto& b = fano();
  const long long q = 2;
  CHECK(static_cast<long long>(b.chambers().size()) == (q * q + q + 1) * (q + 1));
  CHECK(static_cast<long long>(b.opposite_chambers(b.chambers().front()).size()) == q * q * q);
  CHECK(homology(b.complex(), 1).betti == q * q * q);
}
