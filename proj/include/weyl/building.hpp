// Finite thick spherical buildings of type A (flag complexes of projective
// spaces over small fields), with an eagerly materialized apartment catalog.
//
// Apartments carry charts into the Coxeter group; all chart-dependent
// notions (opposition, fundamental-class signs) reduce to group arithmetic,
// and the building axioms are verified exhaustively at this scale.

#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/coxeter.hpp"
#include "weyl/homology.hpp"
#include "weyl/simplicial.hpp"

namespace weyl {

struct Apartment {
  SimplicialComplex faces;
  std::map<Simplex, CoxeterElement> chart;  // chamber -> group element

  std::vector<Simplex> chambers() const {
    std::vector<Simplex> out;
    out.reserve(chart.size());
    for (const auto& [c, w] : chart) out.push_back(c);
    return out;
  }
};

struct AxiomCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BuildingAxiomReport {
  AxiomCheck b1;
  AxiomCheck b2;
  bool all_pass() const { return b1.pass && b2.pass; }
};

struct PanelInfo {
  std::vector<VertexId> panel;  // empty for the rank-1 empty panel
  int chambers = 0;
  int apartments = 0;
};

// Thickness is decided by chamber counts on panels (the apartment-count
// variant misreads weak joins, where suspension panels sit in many
// apartments but only two chambers); both counts are reported.
struct ThicknessReport {
  bool thick = false;              // every panel on >= 3 chambers
  int min_panel_chambers = 0;
  int min_face_apartments = 0;     // min over non-maximal faces
  std::vector<PanelInfo> panels;
};

struct SolomonTitsBasis {
  std::vector<Chain> cycles;
  std::vector<Simplex> opposite;     // the chambers opposite the base chamber
  bool unique_apartments = false;    // base + opposite chamber span one apartment
  std::vector<BigInt> divisors;      // invariant factors of the coefficient matrix
  int rank = 0;
  long long betti = 0;               // top betti of the building complex
  bool verified = false;             // unit divisors and rank == betti == #cycles
};

/// Chart-free view of a building: what the JSON format carries.
struct BuildingData {
  SimplicialComplex complex;
  std::vector<int> type_of;
  std::vector<SimplicialComplex> apartment_faces;
};

namespace detail {

inline std::set<Simplex> face_set_of(const SimplicialComplex& k) {
  std::set<Simplex> out;
  for (int d = 0; d <= k.dim(); ++d)
    for (const Simplex& f : k.faces(d)) out.insert(f);
  return out;
}

inline bool iso_maps_facets(const SimplicialComplex& from, const SimplicialComplex& to,
                            const std::map<VertexId, VertexId>& image) {
  for (const Simplex& f : from.facets()) {
    std::vector<VertexId> mapped;
    for (VertexId v : f.vertices()) mapped.push_back(image.at(v));
    std::sort(mapped.begin(), mapped.end());
    if (!to.has_face(Simplex(mapped))) return false;
  }
  return from.facets().size() == to.facets().size();
}

inline bool assign_type_class(const SimplicialComplex& from, const SimplicialComplex& to,
                              const std::set<VertexId>& fixed,
                              std::map<int, std::vector<VertexId>>& src_by_type,
                              std::map<int, std::vector<VertexId>>& dst_by_type,
                              const std::vector<int>& types, std::size_t ti,
                              std::map<VertexId, VertexId>& image) {
  if (ti == types.size()) return iso_maps_facets(from, to, image);
  auto& src = src_by_type[types[ti]];
  auto& dst = dst_by_type[types[ti]];
  std::vector<VertexId> perm = dst;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < src.size(); ++i)
      if (fixed.count(src[i]) && perm[i] != src[i]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (std::size_t i = 0; i < src.size(); ++i) image[src[i]] = perm[i];
    if (assign_type_class(from, to, fixed, src_by_type, dst_by_type, types, ti + 1, image))
      return true;
    for (std::size_t i = 0; i < src.size(); ++i) image.erase(src[i]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Exhaustive search for a type-preserving simplicial isomorphism
/// from -> to fixing the simplices c and d pointwise.
inline bool exists_iso_fixing(const SimplicialComplex& from, const SimplicialComplex& to,
                              const std::vector<int>& type_of, const Simplex& c, const Simplex& d) {
  std::set<VertexId> fixed(c.vertices().begin(), c.vertices().end());
  fixed.insert(d.vertices().begin(), d.vertices().end());

  std::map<int, std::vector<VertexId>> src_by_type, dst_by_type;
  for (const Simplex& v : from.faces(0)) {
    const VertexId x = v.vertices()[0];
    src_by_type[type_of.at(x)].push_back(x);
  }
  for (const Simplex& v : to.faces(0)) {
    const VertexId x = v.vertices()[0];
    dst_by_type[type_of.at(x)].push_back(x);
  }
  if (src_by_type.size() != dst_by_type.size()) return false;
  for (const auto& [t, vs] : src_by_type) {
    auto it = dst_by_type.find(t);
    if (it == dst_by_type.end() || it->second.size() != vs.size()) return false;
  }

  std::map<VertexId, VertexId> image;
  std::vector<int> types;
  for (const auto& [t, vs] : src_by_type) types.push_back(t);
  return assign_type_class(from, to, fixed, src_by_type, dst_by_type, types, 0, image);
}

}  // namespace detail

/// Axiom checks from chart-free data (exhaustive at desk scale).
inline BuildingAxiomReport verify_axioms_data(const BuildingData& b) {
  BuildingAxiomReport rep;
  rep.b1 = {"B1", true, "every pair of faces lies in a common apartment"};
  std::vector<Simplex> all;
  for (int d = 0; d <= b.complex.dim(); ++d)
    for (const Simplex& f : b.complex.faces(d)) all.push_back(f);
  for (std::size_t i = 0; i < all.size() && rep.b1.pass; ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      bool found = false;
      for (const SimplicialComplex& a : b.apartment_faces)
        if (a.has_face(all[i]) && a.has_face(all[j])) {
          found = true;
          break;
        }
      if (!found) {
        rep.b1.pass = false;
        rep.b1.detail = "no apartment contains both faces";
        break;
      }
    }

  rep.b2 = {"B2", true, "type-preserving isomorphisms found for all shared pairs"};
  for (std::size_t i = 0; i < b.apartment_faces.size() && rep.b2.pass; ++i)
    for (std::size_t j = i + 1; j < b.apartment_faces.size() && rep.b2.pass; ++j) {
      std::vector<Simplex> common;
      for (const Simplex& f : detail::face_set_of(b.apartment_faces[i]))
        if (b.apartment_faces[j].has_face(f)) common.push_back(f);
      for (std::size_t x = 0; x < common.size() && rep.b2.pass; ++x)
        for (std::size_t y = x; y < common.size(); ++y)
          if (!detail::exists_iso_fixing(b.apartment_faces[i], b.apartment_faces[j], b.type_of,
                                         common[x], common[y])) {
            rep.b2.pass = false;
            rep.b2.detail = "no type-preserving isomorphism fixing a common pair";
            break;
          }
    }
  return rep;
}

/// Thickness from chart-free data; see ThicknessReport for the convention.
inline ThicknessReport thickness_data(const BuildingData& b) {
  ThicknessReport rep;
  const int dim = b.complex.dim();
  rep.min_face_apartments = static_cast<int>(b.apartment_faces.size());

  auto apartment_count = [&](const Simplex& f) {
    int n = 0;
    for (const SimplicialComplex& a : b.apartment_faces)
      if (a.has_face(f)) ++n;
    return n;
  };
  auto is_chamber = [&](const Simplex& f) {
    const auto& fs = b.complex.facets();
    return std::binary_search(fs.begin(), fs.end(), f);
  };

  for (int k = 0; k < dim; ++k)
    for (const Simplex& f : b.complex.faces(k)) {
      if (is_chamber(f)) continue;
      rep.min_face_apartments = std::min(rep.min_face_apartments, apartment_count(f));
    }

  if (dim >= 1) {
    for (const Simplex& p : b.complex.faces(dim - 1)) {
      PanelInfo info;
      info.panel = p.vertices();
      info.apartments = apartment_count(p);
      for (const Simplex& c : b.complex.facets())
        if (p.is_face_of(c)) ++info.chambers;
      rep.panels.push_back(std::move(info));
    }
  } else {
    PanelInfo info;
    info.chambers = static_cast<int>(b.complex.facets().size());
    info.apartments = static_cast<int>(b.apartment_faces.size());
    rep.min_face_apartments = info.apartments;
    rep.panels.push_back(std::move(info));
  }

  rep.min_panel_chambers = rep.panels.empty() ? 0 : rep.panels.front().chambers;
  for (const auto& p : rep.panels)
    rep.min_panel_chambers = std::min(rep.min_panel_chambers, p.chambers);
  rep.thick = !rep.panels.empty() && rep.min_panel_chambers >= 3;
  return rep;
}

class SphericalBuilding {
 public:
  SphericalBuilding(SimplicialComplex complex, CoxeterDiagram diagram, std::vector<int> type_of,
                    std::vector<Apartment> apartments)
      : complex_(std::move(complex)),
        diagram_(std::move(diagram)),
        group_(std::make_shared<CoxeterGroup>(diagram_)),
        type_of_(std::move(type_of)),
        apartments_(std::move(apartments)) {}

  const SimplicialComplex& complex() const { return complex_; }
  const CoxeterDiagram& diagram() const { return diagram_; }
  const CoxeterGroup& group() const { return *group_; }
  const std::vector<int>& type_of() const { return type_of_; }
  const std::vector<Apartment>& apartments() const { return apartments_; }
  const std::vector<Simplex>& chambers() const { return complex_.facets(); }

  bool is_chamber(const Simplex& c) const {
    const auto& fs = complex_.facets();
    return std::binary_search(fs.begin(), fs.end(), c);
  }

  /// First apartment (by catalog id) containing both faces.
  int apartment_containing(const Simplex& c, const Simplex& d) const {
    for (std::size_t i = 0; i < apartments_.size(); ++i)
      if (apartments_[i].faces.has_face(c) && apartments_[i].faces.has_face(d))
        return static_cast<int>(i);
    throw std::runtime_error("axiom (B1) violated");
  }

  std::vector<int> apartments_containing(const Simplex& c, const Simplex& d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < apartments_.size(); ++i)
      if (apartments_[i].faces.has_face(c) && apartments_[i].faces.has_face(d))
        out.push_back(static_cast<int>(i));
    return out;
  }

  /// Chambers opposite c0: Weyl distance w0 inside some shared apartment.
  std::vector<Simplex> opposite_chambers(const Simplex& c0) const {
    if (!is_chamber(c0)) throw std::invalid_argument("opposite_chambers: not a chamber");
    std::set<Simplex> out;
    for (const Apartment& apt : apartments_) {
      auto it = apt.chart.find(c0);
      if (it == apt.chart.end()) continue;
      for (const auto& [d, w] : apt.chart)
        if (group_->opposition(it->second, w)) out.insert(d);
    }
    return {out.begin(), out.end()};
  }

  /// Fundamental class of an apartment, oriented so that the base chamber
  /// carries +1; the chamber at Weyl distance w carries (-1)^{l(w)}.
  Chain fundamental_class(const Apartment& apt, const Simplex& c0) const {
    auto anchor = apt.chart.find(c0);
    if (anchor == apt.chart.end()) throw std::invalid_argument("base chamber not in apartment");
    const CoxeterElement w0inv = group_->inverse(anchor->second);

    Chain z(complex_.dim());
    for (const auto& [d, w] : apt.chart) {
      const int len = group_->length(group_->compose(w0inv, w));
      const long long sign = (len % 2 == 0) ? 1 : -1;
      z.add(d, sign * type_order_sign(d));
    }
    // normalize the global orientation so that c0 itself carries +1
    if (z.coefficient(c0) < 0) z = z.scaled(-1);
    return z;
  }

  BuildingData data() const {
    BuildingData d;
    d.complex = complex_;
    d.type_of = type_of_;
    for (const Apartment& a : apartments_) d.apartment_faces.push_back(a.faces);
    return d;
  }

  ThicknessReport thickness() const { return thickness_data(data()); }

  SolomonTitsBasis solomon_tits_basis(const Simplex& c0) const {
    SolomonTitsBasis out;
    out.opposite = opposite_chambers(c0);
    out.unique_apartments = true;
    for (const Simplex& d : out.opposite) {
      const std::vector<int> apts = apartments_containing(c0, d);
      if (apts.size() != 1) out.unique_apartments = false;
      if (apts.empty()) throw std::runtime_error("axiom (B1) violated");
      out.cycles.push_back(fundamental_class(apartments_[apts.front()], c0));
    }

    const auto& chambers = complex_.facets();
    IntegerMatrix m(static_cast<int>(out.cycles.size()), static_cast<int>(chambers.size()));
    for (std::size_t i = 0; i < out.cycles.size(); ++i)
      for (const auto& [s, c] : out.cycles[i].terms())
        m.set(static_cast<int>(i), complex_.face_index(s), c);
    SmithResult snf = smith_normal_form(m);
    out.divisors = snf.divisors;
    out.rank = snf.rank;
    out.betti = complex_.dim() >= 0 ? homology(complex_, complex_.dim(), true).betti : 0;

    bool units = true;
    for (const BigInt& d : out.divisors)
      if (d != 1) units = false;
    out.verified = units && out.rank == static_cast<int>(out.cycles.size()) &&
                   out.betti == static_cast<long long>(out.cycles.size()) && out.unique_apartments;
    return out;
  }

  BuildingAxiomReport verify_axioms() const { return verify_axioms_data(data()); }

  /// Minimal list of apartments whose intersection is exactly the closed
  /// simplex. Requires thickness; ties broken by lexicographic ids.
  std::vector<int> simplex_as_apartment_intersection(const Simplex& a) const {
    if (!thickness().thick)
      throw std::invalid_argument("intersection representation requires thickness");
    if (!complex_.has_face(a)) throw std::invalid_argument("not a face of the building");

    std::set<Simplex> target;
    collect_closure(a, target);
    const std::vector<int> candidates = apartments_containing(a, a);

    std::vector<int> combo;
    for (int k = 1; k <= 4; ++k) {
      combo.clear();
      if (search_intersection(candidates, target, 0, k, combo)) return combo;
    }
    throw std::runtime_error("no apartment intersection representation found");
  }

 private:
  long long type_order_sign(const Simplex& chamber) const {
    // parity of the permutation taking the type-ordered vertex tuple to
    // the id-ordered tuple
    std::vector<std::pair<int, VertexId>> typed;
    for (VertexId v : chamber.vertices()) typed.emplace_back(type_of_.at(v), v);
    std::sort(typed.begin(), typed.end());
    int inv = 0;
    for (std::size_t i = 0; i < typed.size(); ++i)
      for (std::size_t j = i + 1; j < typed.size(); ++j)
        if (typed[i].second > typed[j].second) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  }

  static void collect_closure(const Simplex& a, std::set<Simplex>& out) {
    if (!out.insert(a).second) return;
    if (a.dim() == 0) return;
    for (int i = 0; i <= a.dim(); ++i) collect_closure(a.facet_opposite(i), out);
  }

  bool search_intersection(const std::vector<int>& candidates, const std::set<Simplex>& target,
                           std::size_t start, int k, std::vector<int>& combo) const {
    if (k == 0) {
      std::set<Simplex> inter = detail::face_set_of(apartments_[combo.front()].faces);
      for (std::size_t i = 1; i < combo.size(); ++i) {
        const auto& faces = apartments_[combo[i]].faces;
        for (auto it = inter.begin(); it != inter.end();)
          it = faces.has_face(*it) ? std::next(it) : inter.erase(it);
      }
      return inter == target;
    }
    for (std::size_t i = start;
         i < candidates.size() && candidates.size() - i >= static_cast<std::size_t>(k); ++i) {
      combo.push_back(candidates[i]);
      if (search_intersection(candidates, target, i + 1, k - 1, combo)) return true;
      combo.pop_back();
    }
    return false;
  }

  SimplicialComplex complex_;
  CoxeterDiagram diagram_;
  std::shared_ptr<const CoxeterGroup> group_;
  std::vector<int> type_of_;
  std::vector<Apartment> apartments_;
};

// ---------------------------------------------------------------------------
// Construction: A_n buildings over F_q as flag complexes

namespace detail {

/// Normalized homogeneous coordinates in F_q^3 (first nonzero entry 1);
/// used for both points and lines (a line is stored by its normal form).
inline std::vector<std::array<int, 3>> projective_points(int q, int dims) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < (dims >= 3 ? q : 1); ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        std::array<int, 3> v{a, b, c};
        if (v == std::array<int, 3>{0, 0, 0}) continue;
        int lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
        if (lead != 1) continue;  // keep normalized representatives only
        out.push_back(v);
      }
  return out;
}

inline int dot_mod(const std::array<int, 3>& a, const std::array<int, 3>& b, int q) {
  return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q;
}

/// Maps a one-line permutation of {0..n} to the corresponding element of
/// W(A_n) = S_{n+1}, built by breadth-first search so that adjacent
/// position swaps match right multiplication by simple reflections.
inline std::map<std::vector<int>, CoxeterElement> symmetric_group_table(const CoxeterGroup& g,
                                                                        int n_plus_1) {
  std::map<std::vector<int>, CoxeterElement> table;
  std::vector<int> id_perm(n_plus_1);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  table.emplace(id_perm, g.identity());
  std::vector<std::vector<int>> queue{id_perm};
  while (!queue.empty()) {
    std::vector<int> p = queue.back();
    queue.pop_back();
    const CoxeterElement w = table.at(p);
    for (int i = 0; i + 1 < n_plus_1; ++i) {
      std::vector<int> p2 = p;
      std::swap(p2[i], p2[i + 1]);
      if (!table.count(p2)) {
        table.emplace(p2, g.compose(w, g.simple(i)));
        queue.push_back(p2);
      }
    }
  }
  return table;
}

}  // namespace detail

/// The building of type A_n over F_q: vertices are proper nonzero
/// subspaces of F_q^{n+1}, faces are flags, apartments come from frames
/// (spanning sets of n+1 lines). Desk scale: n in {1,2}, q in {2,3}.
inline SphericalBuilding an_building(int n, int q) {
  if ((n != 1 && n != 2) || (q != 2 && q != 3))
    throw std::invalid_argument("an_building supports n in {1,2}, q in {2,3}");

  const CoxeterDiagram diagram = CoxeterDiagram::type_a(n);
  CoxeterGroup group(diagram);
  const auto perm_table = detail::symmetric_group_table(group, n + 1);

  if (n == 1) {
    const auto pts = detail::projective_points(q, 2);
    const int npts = static_cast<int>(pts.size());
    std::vector<Simplex> facets;
    for (int i = 0; i < npts; ++i) facets.push_back(Simplex({i}));
    SimplicialComplex complex = SimplicialComplex::from_faces(facets, npts);

    std::vector<Apartment> apartments;
    for (int i = 0; i < npts; ++i)
      for (int j = i + 1; j < npts; ++j) {
        Apartment a;
        a.faces = SimplicialComplex::from_faces({Simplex({i}), Simplex({j})}, npts);
        a.chart.emplace(Simplex({i}), perm_table.at({0, 1}));
        a.chart.emplace(Simplex({j}), perm_table.at({1, 0}));
        apartments.push_back(std::move(a));
      }
    return SphericalBuilding(std::move(complex), diagram, std::vector<int>(npts, 0),
                             std::move(apartments));
  }

  // n == 2: the projective plane PG(2, q)
  const auto pts = detail::projective_points(q, 3);
  const int npts = static_cast<int>(pts.size());
  // lines are indexed by their normal vectors, in the same normalized order
  const auto lines = pts;

  auto line_through = [&](int i, int j) {
    for (int l = 0; l < npts; ++l)
      if (detail::dot_mod(pts[i], lines[l], q) == 0 && detail::dot_mod(pts[j], lines[l], q) == 0)
        return l;
    throw std::logic_error("projective plane: no line through two points");
  };

  std::vector<Simplex> facets;
  for (int i = 0; i < npts; ++i)
    for (int l = 0; l < npts; ++l)
      if (detail::dot_mod(pts[i], lines[l], q) == 0)
        facets.push_back(Simplex({i, npts + l}));
  SimplicialComplex complex = SimplicialComplex::from_faces(facets, 2 * npts);

  std::vector<int> type_of(2 * npts, 0);
  for (int l = 0; l < npts; ++l) type_of[npts + l] = 1;

  // frames: non-collinear point triples
  std::vector<Apartment> apartments;
  for (int i = 0; i < npts; ++i)
    for (int j = i + 1; j < npts; ++j)
      for (int k = j + 1; k < npts; ++k) {
        const int lij = line_through(i, j);
        if (detail::dot_mod(pts[k], lines[lij], q) == 0) continue;  // collinear
        const std::array<int, 3> frame{i, j, k};
        Apartment a;
        std::vector<Simplex> hex_facets;
        for (const auto& perm : {std::vector<int>{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}) {
          const int p = frame[perm[0]];
          const int l = line_through(frame[perm[0]], frame[perm[1]]);
          Simplex chamber({std::min(p, npts + l), std::max(p, npts + l)});
          hex_facets.push_back(chamber);
          a.chart.emplace(chamber, perm_table.at(perm));
        }
        a.faces = SimplicialComplex::from_faces(hex_facets, 2 * npts);
        apartments.push_back(std::move(a));
      }

  return SphericalBuilding(std::move(complex), diagram, std::move(type_of), std::move(apartments));
}

/// A thin building: the Coxeter complex itself with a one-apartment catalog.
inline SphericalBuilding thin_building(const CoxeterDiagram& d) {
  CoxeterGroup g(d);
  CoxeterComplexData data = coxeter_complex_of(g);
  Apartment a;
  a.faces = data.complex;
  for (const auto& [w, chamber] : data.chamber_of) a.chart.emplace(chamber, w);
  return SphericalBuilding(data.complex, d, data.type_of, {std::move(a)});
}

/// Weak building: join with the n-sphere. Apartments become A * S^n with
/// diagram extended by n+1 factors of A_1; suspension vertices of pair i
/// carry the new type rank + i.
inline SphericalBuilding weak_join(const SphericalBuilding& b, int n) {
  if (n < 0) throw std::invalid_argument("weak_join requires n >= 0");

  CoxeterDiagram extended = b.diagram();
  for (int i = 0; i <= n; ++i) extended = extended.product(CoxeterDiagram::type_a(1));
  CoxeterGroup ext_group(extended);
  const CoxeterGroup& base_group = b.group();
  const int base_rank = b.diagram().rank();
  const int base_roots = base_group.root_count();
  if (ext_group.root_count() != base_roots + 2 * (n + 1))
    throw std::logic_error("weak_join: product root blocks out of order");

  auto embed = [&](const CoxeterElement& w, int sphere_choice) {
    CoxeterElement out = ext_group.identity();
    for (int r = 0; r < base_roots; ++r) out.root_image[r] = w.root_image[r];
    for (int i = 0; i <= n; ++i)
      if ((sphere_choice >> i) & 1) out = ext_group.compose(out, ext_group.simple(base_rank + i));
    return out;
  };

  const SimplicialComplex sphere = sphere_complex(n);
  SimplicialComplex joined = join(b.complex(), sphere);
  const int base_vertices = b.complex().vertex_count();

  std::vector<int> type_of = b.type_of();
  type_of.resize(base_vertices + 2 * (n + 1));
  for (int i = 0; i <= n; ++i) {
    type_of[base_vertices + 2 * i] = base_rank + i;
    type_of[base_vertices + 2 * i + 1] = base_rank + i;
  }

  std::vector<Apartment> apartments;
  for (const Apartment& a : b.apartments()) {
    Apartment ja;
    ja.faces = join(a.faces, sphere);
    for (const auto& [c, w] : a.chart)
      for (int choice = 0; choice < (1 << (n + 1)); ++choice) {
        std::vector<VertexId> verts = c.vertices();
        for (int i = 0; i <= n; ++i) verts.push_back(base_vertices + 2 * i + ((choice >> i) & 1));
        std::sort(verts.begin(), verts.end());
        ja.chart.emplace(Simplex(std::move(verts)), embed(w, choice));
      }
    apartments.push_back(std::move(ja));
  }

  return SphericalBuilding(std::move(joined), std::move(extended), std::move(type_of),
                           std::move(apartments));
}

}  // namespace weyl
