// The lattice of unions and intersections of cycle supports.
//
// The closure of apartment supports under union and intersection is far too
// large to materialize on a thick building (tens of millions of subcomplexes
// already for a projective plane), but it is distributive, so it is
// determined by its intersection-closed core: every lattice element is a
// union of core elements. The core is materialized by fixpoint iteration;
// membership, indecomposables, the minimal element and exact element counts
// are all answered from it.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/simplicial.hpp"

namespace weyl {

/// Subcomplexes of a fixed ground complex as bitsets over its face list.
class FaceSet {
 public:
  FaceSet() = default;
  explicit FaceSet(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

  void set(int i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  int count() const {
    int n = 0;
    for (auto w : words_) n += __builtin_popcountll(w);
    return n;
  }
  FaceSet operator&(const FaceSet& o) const {
    FaceSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  FaceSet operator|(const FaceSet& o) const {
    FaceSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  bool subset_of(const FaceSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  friend bool operator==(const FaceSet& a, const FaceSet& b) { return a.words_ == b.words_; }
  friend bool operator<(const FaceSet& a, const FaceSet& b) { return a.words_ < b.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct LatticeReconstruction {
  SimplicialComplex complex;
  bool isomorphic = false;  // against the ground complex modulo the minimal element
};

/// Type-free simplicial isomorphism search (backtracking over vertices with
/// coface-signature and edge pruning). Exhaustive at desk scale.
inline bool isomorphic_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dim() != b.dim()) return false;
  for (int d = 0; d <= a.dim(); ++d)
    if (a.faces(d).size() != b.faces(d).size()) return false;
  if (a.is_empty()) return true;

  auto vertex_list = [](const SimplicialComplex& k) {
    std::vector<VertexId> out;
    for (const Simplex& v : k.faces(0)) out.push_back(v.vertices()[0]);
    return out;
  };
  auto signature = [](const SimplicialComplex& k, VertexId v) {
    std::vector<int> sig(k.dim() + 1, 0);
    for (int d = 0; d <= k.dim(); ++d)
      for (const Simplex& f : k.faces(d))
        if (f.contains(v)) ++sig[d];
    return sig;
  };

  const std::vector<VertexId> va = vertex_list(a), vb = vertex_list(b);
  if (va.size() != vb.size()) return false;
  std::map<VertexId, std::vector<int>> sig_a, sig_b;
  for (VertexId v : va) sig_a[v] = signature(a, v);
  for (VertexId v : vb) sig_b[v] = signature(b, v);

  std::map<VertexId, VertexId> image;
  std::set<VertexId> used;

  auto edge_ok = [&](VertexId v, VertexId w) {
    for (const auto& [u, x] : image) {
      const bool ea = a.has_face(Simplex::oriented({u, v}).first);
      const bool eb = b.has_face(Simplex::oriented({x, w}).first);
      if (ea != eb) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == va.size()) {
      for (int d = 1; d <= a.dim(); ++d)
        for (const Simplex& f : a.faces(d)) {
          std::vector<VertexId> mapped;
          for (VertexId v : f.vertices()) mapped.push_back(image.at(v));
          std::sort(mapped.begin(), mapped.end());
          if (!b.has_face(Simplex(mapped))) return false;
        }
      return true;
    }
    const VertexId v = va[i];
    for (VertexId w : vb) {
      if (used.count(w) || sig_a.at(v) != sig_b.at(w)) continue;
      if (v != va.front() && !edge_ok(v, w)) continue;
      image[v] = w;
      used.insert(w);
      if (place(i + 1)) return true;
      image.erase(v);
      used.erase(w);
    }
    return false;
  };
  return place(0);
}

class SupportLattice {
 public:
  SupportLattice(SimplicialComplex ground, std::vector<SimplicialComplex> generators)
      : ground_(std::move(ground)), generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("lattice requires at least one generator");
    index_ground();
    std::set<FaceSet> core;
    std::vector<FaceSet> gen_bits;
    for (const auto& g : generators_) gen_bits.push_back(to_bits(g));
    std::vector<FaceSet> queue = gen_bits;
    for (const auto& b : gen_bits) core.insert(b);
    while (!queue.empty()) {
      FaceSet x = queue.back();
      queue.pop_back();
      for (const FaceSet& g : gen_bits) {
        FaceSet y = x & g;
        if (core.insert(y).second) queue.push_back(y);
      }
    }
    core_.assign(core.begin(), core.end());
  }

  const SimplicialComplex& ground() const { return ground_; }
  const std::vector<SimplicialComplex>& generators() const { return generators_; }

  /// The intersection-closed core, sorted. Lattice elements are exactly the
  /// unions of nonempty subsets of this family.
  const std::vector<FaceSet>& meet_core() const { return core_; }

  FaceSet to_bits(const SimplicialComplex& sub) const {
    FaceSet bits(faces_.size());
    for (int d = 0; d <= sub.dim(); ++d)
      for (const Simplex& f : sub.faces(d)) {
        auto it = face_index_.find(f);
        if (it == face_index_.end())
          throw std::invalid_argument("not a subcomplex of the lattice ground");
        bits.set(it->second);
      }
    return bits;
  }

  SimplicialComplex to_complex(const FaceSet& bits) const {
    std::vector<Simplex> fs;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (bits.test(static_cast<int>(i))) fs.push_back(faces_[i]);
    if (fs.empty()) return SimplicialComplex::empty(ground_.vertex_count());
    return SimplicialComplex::from_faces(fs, ground_.vertex_count());
  }

  /// Membership scan: a subcomplex is a lattice element iff it is the union
  /// of the core elements below it.
  bool contains_bits(const FaceSet& x) const {
    if (x.none()) {
      for (const FaceSet& m : core_)
        if (m.none()) return true;
      return false;
    }
    FaceSet acc(faces_.size());
    for (const FaceSet& m : core_)
      if (m.subset_of(x)) acc = acc | m;
    return acc == x;
  }
  bool contains(const SimplicialComplex& sub) const { return contains_bits(to_bits(sub)); }

  /// Elements that are not unions of strictly smaller elements. These are
  /// always core elements; the global minimum qualifies only when nonempty
  /// (the empty complex is the empty union).
  std::vector<FaceSet> indecomposable_bits() const {
    std::vector<FaceSet> out;
    for (const FaceSet& m : core_) {
      FaceSet u(faces_.size());
      for (const FaceSet& m2 : core_)
        if (m2.subset_of(m) && !(m2 == m)) u = u | m2;
      if (!(u == m)) out.push_back(m);
    }
    return out;
  }
  std::vector<SimplicialComplex> indecomposables() const {
    std::vector<SimplicialComplex> out;
    for (const FaceSet& b : indecomposable_bits()) out.push_back(to_complex(b));
    return out;
  }

  FaceSet minimal_bits() const {
    FaceSet acc = core_.front();
    for (const FaceSet& m : core_) acc = acc & m;
    for (const FaceSet& m : core_)
      if (m == acc) return acc;
    // unreachable for a correctly intersection-closed core
    throw std::runtime_error("lattice violates the unique-minimum property");
  }
  SimplicialComplex minimal_element() const { return to_complex(minimal_bits()); }

  /// Exact number of lattice elements, when computable: by direct
  /// enumeration below the cap, by quotienting out a nonempty minimal
  /// element, or by counting subcomplexes when the core contains every
  /// closed face (the thick-building case).
  std::optional<unsigned long long> element_count(std::size_t bfs_cap = 200000) const {
    return count_unions(core_, bfs_cap);
  }

  /// Rebuilds a complex from the poset of indecomposables modulo the
  /// minimal element and checks it against the ground complex (with the
  /// minimal element's star removed).
  LatticeReconstruction reconstruct() const {
    const FaceSet m0 = minimal_bits();
    std::vector<FaceSet> ind = indecomposable_bits();
    std::vector<FaceSet> stripped;
    const FaceSet keep = mask_disjoint_from(m0);
    for (const FaceSet& p : ind) {
      if (p == m0) continue;
      FaceSet s = p & keep;
      if (s.none()) throw std::runtime_error("reconstruction failed");
      stripped.push_back(s);
    }
    if (stripped.empty()) throw std::runtime_error("reconstruction failed");

    // atoms of the stripped poset become vertices
    std::vector<FaceSet> atoms;
    for (const FaceSet& p : stripped) {
      bool minimal = true;
      for (const FaceSet& q : stripped)
        if (!(q == p) && q.subset_of(p)) {
          minimal = false;
          break;
        }
      if (minimal) atoms.push_back(p);
    }

    std::vector<Simplex> faces;
    std::set<std::vector<VertexId>> seen;
    for (const FaceSet& p : stripped) {
      std::vector<VertexId> verts;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].subset_of(p)) verts.push_back(static_cast<VertexId>(i));
      if (verts.empty() || !seen.insert(verts).second)
        throw std::runtime_error("reconstruction failed");
      faces.emplace_back(verts);
    }

    LatticeReconstruction out{SimplicialComplex::from_faces(faces, static_cast<int>(atoms.size())),
                              false};
    // the face poset must reproduce the stripped indecomposable poset
    if (out.complex.face_count() != stripped.size())
      throw std::runtime_error("reconstruction failed");
    for (std::size_t i = 0; i < stripped.size(); ++i)
      for (std::size_t j = 0; j < stripped.size(); ++j) {
        const bool below = stripped[i].subset_of(stripped[j]);
        const bool below_faces = faces[i].is_face_of(faces[j]);
        if (below != below_faces) throw std::runtime_error("reconstruction failed");
      }

    out.isomorphic = isomorphic_complexes(out.complex, to_complex(ground_bits() & keep));
    return out;
  }

 private:
  void index_ground() {
    for (int d = 0; d <= ground_.dim(); ++d)
      for (const Simplex& f : ground_.faces(d)) {
        face_index_.emplace(f, static_cast<int>(faces_.size()));
        faces_.push_back(f);
      }
  }

  FaceSet ground_bits() const {
    FaceSet bits(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) bits.set(static_cast<int>(i));
    return bits;
  }

  /// Faces sharing no vertex with any face of m0.
  FaceSet mask_disjoint_from(const FaceSet& m0) const {
    std::set<VertexId> verts;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (m0.test(static_cast<int>(i)))
        verts.insert(faces_[i].vertices().begin(), faces_[i].vertices().end());
    FaceSet bits(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      bool disjoint = true;
      for (VertexId v : faces_[i].vertices())
        if (verts.count(v)) {
          disjoint = false;
          break;
        }
      if (disjoint) bits.set(static_cast<int>(i));
    }
    return bits;
  }

  FaceSet closure_bits(int face) const {
    FaceSet bits(faces_.size());
    std::vector<Simplex> stack{faces_[face]};
    while (!stack.empty()) {
      Simplex s = stack.back();
      stack.pop_back();
      bits.set(face_index_.at(s));
      if (s.dim() > 0)
        for (int i = 0; i <= s.dim(); ++i) stack.push_back(s.facet_opposite(i));
    }
    return bits;
  }

  std::optional<unsigned long long> count_unions(const std::vector<FaceSet>& core,
                                                 std::size_t bfs_cap) const {
    if (core.empty()) return 0ULL;
    FaceSet covered(faces_.size());
    for (const FaceSet& m : core) covered = covered | m;
    FaceSet minimal = core.front();
    for (const FaceSet& m : core) minimal = minimal & m;
    bool has_empty = false;
    for (const FaceSet& m : core) has_empty = has_empty || m.none();

    // thick case: all closed faces of the covered part are core elements,
    // so the lattice is every subcomplex of the covered part
    bool all_closed_faces = true;
    int covered_dim = -1;
    std::vector<int> covered_faces;
    for (std::size_t i = 0; i < faces_.size() && all_closed_faces; ++i) {
      if (!covered.test(static_cast<int>(i))) continue;
      covered_faces.push_back(static_cast<int>(i));
      covered_dim = std::max(covered_dim, faces_[i].dim());
      const FaceSet cl = closure_bits(static_cast<int>(i));
      bool found = false;
      for (const FaceSet& m : core)
        if (m == cl) {
          found = true;
          break;
        }
      if (!found) all_closed_faces = false;
    }
    if (all_closed_faces && covered_dim <= 1) {
      std::vector<int> edges, verts;
      for (int i : covered_faces)
        (faces_[i].dim() == 0 ? verts : edges).push_back(i);
      if (edges.size() <= 22 && verts.size() <= 62) {
        std::map<VertexId, int> vpos;
        for (std::size_t i = 0; i < verts.size(); ++i) vpos[faces_[verts[i]].vertices()[0]] = static_cast<int>(i);
        std::vector<std::uint64_t> edge_masks;
        for (int e : edges) {
          std::uint64_t m = 0;
          for (VertexId v : faces_[e].vertices()) m |= std::uint64_t{1} << vpos.at(v);
          edge_masks.push_back(m);
        }
        unsigned long long total = 0;
        const std::size_t nv = verts.size();
        // enumerate edge subsets, counting free vertices for each
        std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t vm) {
          if (i == edge_masks.size()) {
            total += 1ULL << (nv - __builtin_popcountll(vm));
            return;
          }
          rec(i + 1, vm);
          rec(i + 1, vm | edge_masks[i]);
        };
        rec(0, 0);
        if (!has_empty) total -= 1;  // the empty union is not an element
        return total;
      }
    }

    // quotient by a nonempty minimal element when every core element is the
    // join of its stripped part with the minimal element
    if (!minimal.none()) {
      const FaceSet keep = mask_disjoint_from(minimal);
      bool join_structured = true;
      std::vector<FaceSet> stripped;
      for (const FaceSet& m : core) {
        const FaceSet s = m & keep;
        if (!(expand_with(s, minimal) == m)) {
          join_structured = false;
          break;
        }
        stripped.push_back(s);
      }
      if (join_structured) {
        std::set<FaceSet> dedup(stripped.begin(), stripped.end());
        if (dedup.size() == core.size())
          return count_unions(std::vector<FaceSet>(dedup.begin(), dedup.end()), bfs_cap);
      }
    }

    // direct enumeration with a cap
    std::set<FaceSet> all(core.begin(), core.end());
    std::vector<FaceSet> queue(all.begin(), all.end());
    while (!queue.empty()) {
      FaceSet x = queue.back();
      queue.pop_back();
      for (const FaceSet& m : core) {
        FaceSet y = x | m;
        if (all.insert(y).second) {
          if (all.size() > bfs_cap) return std::nullopt;
          queue.push_back(y);
        }
      }
    }
    return static_cast<unsigned long long>(all.size());
  }

  /// The join of a stripped subcomplex with the minimal element: all unions
  /// of a face from each side (plus the two sides themselves).
  FaceSet expand_with(const FaceSet& stripped, const FaceSet& minimal) const {
    FaceSet out = stripped | minimal;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (!stripped.test(static_cast<int>(i))) continue;
      for (std::size_t j = 0; j < faces_.size(); ++j) {
        if (!minimal.test(static_cast<int>(j))) continue;
        std::vector<VertexId> u = faces_[i].vertices();
        u.insert(u.end(), faces_[j].vertices().begin(), faces_[j].vertices().end());
        std::sort(u.begin(), u.end());
        auto it = face_index_.find(Simplex(u));
        if (it != face_index_.end()) out.set(it->second);
      }
    }
    return out;
  }

  SimplicialComplex ground_;
  std::vector<SimplicialComplex> generators_;
  std::vector<Simplex> faces_;
  std::map<Simplex, int> face_index_;
  std::vector<FaceSet> core_;
};

inline SupportLattice generate_lattice(const SimplicialComplex& ground,
                                       const std::vector<SimplicialComplex>& generators) {
  return SupportLattice(ground, generators);
}

}  // namespace weyl
