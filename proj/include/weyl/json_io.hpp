// JSON formats for complexes, chains, diagrams, buildings and rationals.
//
//   complex:  {"vertices": N, "facets": [[ints]]}
//   chain:    {"degree": k, "terms": [{"simplex": [ints], "coef": int}]}
//   diagram:  {"type": "A"|"B"|"I2", "n": int}  or  {"m": [[ints]]}
//   building: complex fields plus {"types": [ints], "apartments": [[[ints]]]}
//   rational: decimal or "p/q" strings on input; {"exact","approx"} on output

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "weyl/building.hpp"
#include "weyl/coxeter.hpp"
#include "weyl/rtree.hpp"
#include "weyl/simplicial.hpp"

namespace weyl::io {

using nlohmann::json;

inline json complex_to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (const Simplex& f : k.facets()) facets.push_back(f.vertices());
  return {{"vertices", k.vertex_count()}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.contains("facets")) throw std::invalid_argument("complex JSON needs a facets array");
  std::vector<Simplex> fs;
  for (const auto& f : j.at("facets")) {
    std::vector<VertexId> v = f.get<std::vector<VertexId>>();
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) throw std::invalid_argument("empty facet in complex JSON");
    fs.emplace_back(std::move(v));
  }
  const int vertices = j.value("vertices", -1);
  if (fs.empty()) return SimplicialComplex::empty(std::max(0, vertices));
  return SimplicialComplex::from_faces(fs, vertices);
}

inline json chain_to_json(const Chain& z) {
  json terms = json::array();
  for (const auto& [s, c] : z.terms()) terms.push_back({{"simplex", s.vertices()}, {"coef", c}});
  return {{"degree", z.degree()}, {"terms", terms}};
}

inline Chain chain_from_json(const json& j) {
  Chain z(j.at("degree").get<int>());
  for (const auto& t : j.at("terms"))
    z.add_oriented(t.at("simplex").get<std::vector<VertexId>>(), t.at("coef").get<long long>());
  return z;
}

inline json diagram_to_json(const CoxeterDiagram& d) { return {{"m", d.matrix()}}; }

inline CoxeterDiagram diagram_from_json(const json& j) {
  if (j.contains("m")) return CoxeterDiagram(j.at("m").get<std::vector<std::vector<int>>>());
  const std::string type = j.at("type").get<std::string>();
  const int n = j.at("n").get<int>();
  if (type == "A") return CoxeterDiagram::type_a(n);
  if (type == "B") return CoxeterDiagram::type_b(n);
  if (type == "I2") return CoxeterDiagram::dihedral(n);
  throw std::invalid_argument("unknown diagram type: " + type);
}

inline json building_to_json(const SphericalBuilding& b) {
  json out = complex_to_json(b.complex());
  out["types"] = b.type_of();
  json apartments = json::array();
  for (const Apartment& a : b.apartments()) {
    json facets = json::array();
    for (const Simplex& f : a.faces.facets()) facets.push_back(f.vertices());
    apartments.push_back(facets);
  }
  out["apartments"] = apartments;
  out["diagram"] = diagram_to_json(b.diagram());
  return out;
}

inline BuildingData building_data_from_json(const json& j) {
  BuildingData d;
  d.complex = complex_from_json(j);
  d.type_of = j.at("types").get<std::vector<int>>();
  for (const auto& apt : j.at("apartments")) {
    std::vector<Simplex> fs;
    for (const auto& f : apt) fs.emplace_back(f.get<std::vector<VertexId>>());
    d.apartment_faces.push_back(SimplicialComplex::from_faces(fs, d.complex.vertex_count()));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Exact rationals

/// Accepts integers ("3"), fractions ("-7/4") and decimals ("1.25").
inline rtree::Rational parse_rational(const std::string& s) {
  using rtree::Rational;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const Rational num(boost::multiprecision::cpp_int(s.substr(0, slash)));
    const Rational den(boost::multiprecision::cpp_int(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return num / den;
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rational(boost::multiprecision::cpp_int(digits)) / Rational(den);
}

inline std::string rational_to_string(const rtree::Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline json rational_to_json(const rtree::Rational& r) {
  return {{"exact", rational_to_string(r)}, {"approx", r.convert_to<double>()}};
}

/// "x,y" with rational components.
inline rtree::TreePoint parse_tree_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("point literal must be x,y");
  return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

inline json tree_point_to_json(const rtree::TreePoint& p) {
  return {{"x", rational_to_json(p.x)}, {"y", rational_to_json(p.y)}};
}

}  // namespace weyl::io
