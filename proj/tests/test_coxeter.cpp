#include <catch2/catch_amalgamated.hpp>

#include "weyl/coxeter.hpp"
#include "weyl/homology.hpp"

using namespace weyl;

TEST_CASE("group orders match the classical formulas") {
  CHECK(generate_group(CoxeterDiagram::type_a(1)).size() == 2);
  CHECK(generate_group(CoxeterDiagram::type_a(2)).size() == 6);    // (n+1)!
  CHECK(generate_group(CoxeterDiagram::type_a(3)).size() == 24);
  CHECK(generate_group(CoxeterDiagram::type_b(2)).size() == 8);    // 2^n n!
  CHECK(generate_group(CoxeterDiagram::type_b(3)).size() == 48);
  CHECK(generate_group(CoxeterDiagram::dihedral(5)).size() == 10);  // 2m
  CHECK(generate_group(CoxeterDiagram::dihedral(12)).size() == 24);
  CHECK(generate_group(CoxeterDiagram::type_a(2).product(CoxeterDiagram::type_a(1))).size() == 12);
}

TEST_CASE("unsupported diagrams are rejected") {
  CHECK_THROWS(CoxeterDiagram::type_a(4));
  CHECK_THROWS(CoxeterDiagram::dihedral(13));
  // affine-type rank-3 chain (4,4) is not in the supported list
  CHECK_THROWS(CoxeterGroup(CoxeterDiagram({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}})));
  CHECK_THROWS(CoxeterDiagram({{1, 2}, {3, 1}}));  // not symmetric
}

TEST_CASE("element arithmetic") {
  CoxeterGroup g(CoxeterDiagram::type_a(2));
  auto s0 = g.simple(0), s1 = g.simple(1);
  CHECK(g.length(g.identity()) == 0);
  CHECK(g.length(s0) == 1);
  CHECK(g.length(g.compose(s0, s1)) == 2);
  CHECK(g.compose(s0, s0) == g.identity());
  // braid relation s0 s1 s0 = s1 s0 s1
  CHECK(g.compose(g.compose(s0, s1), s0) == g.compose(g.compose(s1, s0), s1));
  for (const auto& w : g.elements()) CHECK(g.compose(w, g.inverse(w)) == g.identity());
}

TEST_CASE("longest element and opposition") {
  SECTION("A2: length 3, number of positive roots") {
    CoxeterGroup g(CoxeterDiagram::type_a(2));
    CHECK(g.length(g.longest_element()) == 3);
    CHECK(g.positive_root_count() == 3);
    CHECK(g.opposition(g.identity(), g.longest_element()));
    CHECK_FALSE(g.opposition(g.identity(), g.simple(0)));
    // opposition is an involution: w opposite w' iff w' opposite w
    for (const auto& w : g.elements())
      for (const auto& w2 : g.elements())
        CHECK(g.opposition(w, w2) == g.opposition(w2, w));
    // each element has exactly one opposite
    for (const auto& w : g.elements()) {
      int count = 0;
      for (const auto& w2 : g.elements())
        if (g.opposition(w, w2)) ++count;
      CHECK(count == 1);
    }
  }
  SECTION("w0 centrality per type") {
    CHECK_FALSE(CoxeterGroup(CoxeterDiagram::type_a(2)).longest_is_central());  // type-reversing
    CHECK(CoxeterGroup(CoxeterDiagram::type_b(2)).longest_is_central());        // w0 = -1
    CHECK(CoxeterGroup(CoxeterDiagram::type_a(1)).longest_is_central());
  }
  SECTION("B3: longest element has length n^2") {
    CoxeterGroup g(CoxeterDiagram::type_b(3));
    CHECK(g.length(g.longest_element()) == 9);
  }
}

TEST_CASE("coxeter complexes are triangulated spheres") {
  SECTION("A1 gives two points") {
    auto data = coxeter_complex(CoxeterDiagram::type_a(1));
    CHECK(data.complex.faces(0).size() == 2);
    CHECK(data.complex.dim() == 0);
  }
  SECTION("A2 gives a hexagon") {
    auto data = coxeter_complex(CoxeterDiagram::type_a(2));
    CHECK(data.complex.faces(0).size() == 6);
    CHECK(data.complex.faces(1).size() == 6);
    CHECK(homology(data.complex, 1).betti == 1);
  }
  SECTION("B2 gives an octagon") {
    auto data = coxeter_complex(CoxeterDiagram::type_b(2));
    CHECK(data.complex.faces(0).size() == 8);
    CHECK(data.complex.faces(1).size() == 8);
  }
  SECTION("sphere homology and vertex type counts for all supported types") {
    std::vector<CoxeterDiagram> diagrams = {
        CoxeterDiagram::type_a(1), CoxeterDiagram::type_a(2), CoxeterDiagram::type_a(3),
        CoxeterDiagram::type_b(2), CoxeterDiagram::type_b(3), CoxeterDiagram::dihedral(6)};
    for (const auto& d : diagrams) {
      CoxeterGroup g(d);
      auto data = coxeter_complex_of(g);
      const int m = data.complex.dim();
      CAPTURE(g.order(), m);
      CHECK(static_cast<int>(data.chamber_of.size()) == g.order());
      // top reduced homology Z, lower reduced homology zero
      CHECK(homology(data.complex, m, true).betti == 1);
      CHECK(homology(data.complex, m, true).torsion.empty());
      for (int k = 0; k < m; ++k) {
        auto h = homology(data.complex, k, true);
        CHECK(h.betti == 0);
        CHECK(h.torsion.empty());
      }
      // each type class has |W| / |W_{S minus i}| vertices
      for (int i = 0; i < g.rank(); ++i) {
        std::vector<int> gens;
        for (int j = 0; j < g.rank(); ++j)
          if (j != i) gens.push_back(j);
        const std::size_t parabolic_order =
            gens.empty() ? 1 : g.parabolic(gens).size();
        const std::size_t expected = g.order() / parabolic_order;
        std::size_t got = 0;
        for (int t : data.type_of)
          if (t == i) ++got;
        CHECK(got == expected);
      }
      // chambers have one vertex of each type
      for (const auto& [w, chamber] : data.chamber_of) {
        std::set<int> types;
        for (VertexId v : chamber.vertices()) types.insert(data.type_of[v]);
        CHECK(types.size() == static_cast<std::size_t>(g.rank()));
      }
    }
  }
}
