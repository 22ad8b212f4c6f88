#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "weyl/building.hpp"
#include "weyl/support_lattice.hpp"

using namespace weyl;

namespace {

const SphericalBuilding& fano() {
  static const SphericalBuilding b = an_building(2, 2);
  return b;
}

std::vector<SimplicialComplex> apartment_supports(const SphericalBuilding& b) {
  std::vector<SimplicialComplex> out;
  for (const Apartment& a : b.apartments()) out.push_back(a.faces);
  return out;
}

const SupportLattice& fano_lattice() {
  static const SupportLattice lat(fano().complex(), apartment_supports(fano()));
  return lat;
}

}  // namespace

TEST_CASE("small lattices") {
  SECTION("single apartment") {
    const Apartment& a = fano().apartments().front();
    SupportLattice lat(fano().complex(), {a.faces});
    CHECK(lat.meet_core().size() == 1);
    CHECK(lat.element_count() == 1ULL);
    CHECK(lat.minimal_element() == a.faces);
    auto ind = lat.indecomposables();
    REQUIRE(ind.size() == 1);
    CHECK(ind.front() == a.faces);
    CHECK_THROWS_WITH(lat.reconstruct(), Catch::Matchers::ContainsSubstring("reconstruction failed"));
  }
  SECTION("two disjoint hexagons give a four-element lattice") {
    std::vector<std::vector<VertexId>> f;
    for (int b : {0, 6})
      for (int i = 0; i < 6; ++i) f.push_back({b + i, b + (i + 1) % 6});
    auto ground = make_complex(f);
    auto a1 = make_complex(std::vector<std::vector<VertexId>>(f.begin(), f.begin() + 6));
    auto a2v = std::vector<std::vector<VertexId>>(f.begin() + 6, f.end());
    auto a2 = SimplicialComplex::from_faces(make_complex(a2v).facets(), ground.vertex_count());
    auto a1g = SimplicialComplex::from_faces(a1.facets(), ground.vertex_count());
    SupportLattice lat(ground, {a1g, a2});
    CHECK(lat.element_count() == 4ULL);  // A, A', union, empty
    CHECK(lat.minimal_element().is_empty());
    CHECK(lat.indecomposables().size() == 2);
    CHECK(lat.contains(a1g));
    CHECK(lat.contains(ground));
  }
  SECTION("empty generator list is rejected") {
    CHECK_THROWS(SupportLattice(fano().complex(), {}));
  }
}

TEST_CASE("Fano support lattice") {
  const SupportLattice& lat = fano_lattice();

  SECTION("meet core matches independent enumeration") {
    CHECK(lat.meet_core().size() == 218);
  }
  SECTION("every closed face is a lattice element") {
    const auto& k = fano().complex();
    for (int d = 0; d <= k.dim(); ++d)
      for (const Simplex& f : k.faces(d))
        CHECK(lat.contains(SimplicialComplex::from_faces({f}, k.vertex_count())));
  }
  SECTION("indecomposables are exactly the 35 closed faces") {
    auto ind = lat.indecomposables();
    REQUIRE(ind.size() == 35);
    std::set<FaceSet> got;
    for (const auto& c : ind) got.insert(lat.to_bits(c));
    const auto& k = fano().complex();
    for (int d = 0; d <= k.dim(); ++d)
      for (const Simplex& f : k.faces(d))
        CHECK(got.count(lat.to_bits(SimplicialComplex::from_faces({f}, k.vertex_count()))));
  }
  SECTION("minimal element is empty") {
    CHECK(lat.minimal_element().is_empty());
  }
  SECTION("element count via subcomplex enumeration") {
    CHECK(lat.element_count() == 15054568ULL);
  }
  SECTION("membership scan accepts unions and rejects non-elements") {
    std::mt19937_64 rng(11);
    const auto& core = lat.meet_core();
    for (int trial = 0; trial < 50; ++trial) {
      FaceSet u = core[rng() % core.size()];
      for (int j = 0; j < 3; ++j) u = u | core[rng() % core.size()];
      CHECK(lat.contains_bits(u));
    }
    // a bare flag with only one endpoint is not even a subcomplex: to_bits throws
    // instead build the subcomplex {vertex 0} plus nothing else: it IS an element here,
    // so use a non-element of a different lattice below.
    SupportLattice tiny(fano().complex(), {fano().apartments().front().faces});
    CHECK_FALSE(tiny.contains(SimplicialComplex::from_faces({Simplex({0})},
                                                            fano().complex().vertex_count())));
  }
  SECTION("distributivity spot check on random triples") {
    std::mt19937_64 rng(23);
    const auto& core = lat.meet_core();
    auto random_element = [&]() {
      FaceSet u = core[rng() % core.size()];
      for (int j = 0; j < 2; ++j) u = u | core[rng() % core.size()];
      return u;
    };
    for (int trial = 0; trial < 200; ++trial) {
      FaceSet a = random_element(), b = random_element(), c = random_element();
      CHECK(((a | b) & c) == ((a & c) | (b & c)));
      CHECK(lat.contains_bits((a | b) & c));
    }
  }
  SECTION("generator order does not change the core") {
    auto gens = apartment_supports(fano());
    std::reverse(gens.begin(), gens.end());
    std::swap(gens[3], gens[17]);
    SupportLattice lat2(fano().complex(), gens);
    CHECK(lat2.meet_core() == lat.meet_core());
  }
  SECTION("reconstruction recovers the building complex") {
    auto rec = lat.reconstruct();
    CHECK(rec.complex.faces(0).size() == 14);
    CHECK(rec.complex.faces(1).size() == 21);
    CHECK(rec.isomorphic);
  }
  SECTION("supports of random basis-cycle combinations are lattice elements") {
    const auto& b = fano();
    auto basis = b.solomon_tits_basis(b.chambers().front());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      Chain z(1);
      bool nonzero = false;
      for (const Chain& c : basis.cycles) {
        long long coef = static_cast<long long>(rng() % 7) - 3;
        if (coef != 0) nonzero = true;
        z += c.scaled(coef);
      }
      if (!nonzero || z.is_zero()) continue;
      CHECK(lat.contains(support(z, b.complex())));
    }
  }
}

TEST_CASE("suspended Fano lattice") {
  auto wj = weak_join(fano(), 0);
  SupportLattice lat(wj.complex(), apartment_supports(wj));

  SECTION("minimal element is the S0 factor") {
    auto minimal = lat.minimal_element();
    CHECK(minimal.dim() == 0);
    CHECK(minimal.faces(0).size() == 2);
    const int base = fano().complex().vertex_count();
    CHECK(minimal.has_vertex(base));
    CHECK(minimal.has_vertex(base + 1));
  }
  SECTION("indecomposables are the joined closed faces plus the minimum") {
    auto ind = lat.indecomposable_bits();
    const auto& k = fano().complex();
    std::set<FaceSet> expected;
    expected.insert(lat.to_bits(join(SimplicialComplex::empty(k.vertex_count()), sphere_complex(0))));
    for (int d = 0; d <= k.dim(); ++d)
      for (const Simplex& f : k.faces(d))
        expected.insert(
            lat.to_bits(join(SimplicialComplex::from_faces({f}, k.vertex_count()), sphere_complex(0))));
    CHECK(ind.size() == expected.size());
    for (const FaceSet& b : ind) CHECK(expected.count(b));
  }
  SECTION("reconstruction quotients out the sphere factor") {
    auto rec = lat.reconstruct();
    CHECK(rec.complex.faces(0).size() == 14);
    CHECK(rec.complex.faces(1).size() == 21);
    CHECK(rec.isomorphic);
    CHECK(isomorphic_complexes(rec.complex, fano().complex()));
  }
  SECTION("element count agrees with the unsuspended lattice") {
    CHECK(lat.element_count() == 15054568ULL);
  }
}

TEST_CASE("isomorphism search") {
  CHECK(isomorphic_complexes(sphere_complex(2), sphere_complex(2)));
  CHECK_FALSE(isomorphic_complexes(sphere_complex(2), sphere_complex(1)));
  // relabeled hexagons are isomorphic
  auto h1 = make_complex({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  auto h2 = make_complex({{5, 3}, {3, 0}, {0, 4}, {4, 1}, {1, 2}, {2, 5}});
  CHECK(isomorphic_complexes(h1, h2));
  // hexagon vs two triangles: same face counts, different structure
  auto tri2 = make_complex({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(isomorphic_complexes(h1, tri2));
}
