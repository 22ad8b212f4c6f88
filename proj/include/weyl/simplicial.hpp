// Finite abstract simplicial complexes and integer chains.
//
// Complexes are stored by their inclusion-maximal faces; the full face
// list per dimension is materialized at construction so that instances
// are immutable and safe to share across threads.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weyl {

using VertexId = int;

/// An abstract simplex: a strictly increasing, nonempty vertex list.
class Simplex {
 public:
  explicit Simplex(std::vector<VertexId> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty()) throw std::invalid_argument("simplex must have at least one vertex");
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (verts_[i] < 0) throw std::invalid_argument("vertex ids must be non-negative");
      if (i > 0 && verts_[i - 1] >= verts_[i])
        throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
  }

  /// Builds a simplex from an arbitrary vertex ordering. Returns the sorted
  /// simplex together with the sign of the sorting permutation (0 if a
  /// vertex repeats, in which case the oriented simplex is degenerate).
  static std::pair<Simplex, int> oriented(std::vector<VertexId> vertices) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      for (std::size_t j = i; j > 0 && vertices[j - 1] > vertices[j]; --j) {
        std::swap(vertices[j - 1], vertices[j]);
        sign = -sign;
      }
    }
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i - 1] == vertices[i]) sign = 0;
    if (sign == 0) throw std::invalid_argument("degenerate simplex (repeated vertex)");
    return {Simplex(std::move(vertices)), sign};
  }

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<VertexId>& vertices() const { return verts_; }

  bool contains(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
  }

  /// The facet opposite the i-th vertex (0-based).
  Simplex facet_opposite(int i) const {
    std::vector<VertexId> v = verts_;
    v.erase(v.begin() + i);
    return Simplex(std::move(v));
  }

  /// Inserts a vertex not already present, keeping order.
  Simplex with_vertex(VertexId v) const {
    std::vector<VertexId> out = verts_;
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it != out.end() && *it == v) throw std::invalid_argument("vertex already in simplex");
    out.insert(it, v);
    return Simplex(std::move(out));
  }

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.verts_ == b.verts_; }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    // dimension-major, then lexicographic: gives the canonical face order
    if (a.verts_.size() != b.verts_.size()) return a.verts_.size() < b.verts_.size();
    return a.verts_ < b.verts_;
  }

 private:
  std::vector<VertexId> verts_;
};

/// A finite abstract simplicial complex. The empty complex (dim -1) is a
/// valid value; it arises as the (-1)-sphere and as an empty support.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the downward closure of the given faces. Non-maximal input
  /// faces are absorbed. A vertex count larger than required may be given
  /// so that subcomplexes remember their ambient vertex range.
  static SimplicialComplex from_faces(const std::vector<Simplex>& faces, int vertex_count = -1) {
    SimplicialComplex k;
    int max_v = -1;
    for (const Simplex& f : faces) max_v = std::max(max_v, f.vertices().back());
    k.vertex_count_ = std::max(vertex_count, max_v + 1);

    std::set<Simplex> all;
    for (const Simplex& f : faces) close_down(f, all);
    k.index_faces(all);
    return k;
  }

  static SimplicialComplex empty(int vertex_count = 0) {
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    return k;
  }

  int vertex_count() const { return vertex_count_; }
  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  bool is_empty() const { return faces_.empty(); }

  const std::vector<Simplex>& facets() const { return facets_; }

  /// All k-dimensional faces in canonical (lexicographic) order.
  const std::vector<Simplex>& faces(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dim()) return none;
    return faces_[k];
  }

  std::size_t face_count() const {
    std::size_t n = 0;
    for (const auto& fs : faces_) n += fs.size();
    return n;
  }

  bool has_face(const Simplex& s) const {
    if (s.dim() > dim()) return false;
    const auto& fs = faces_[s.dim()];
    return std::binary_search(fs.begin(), fs.end(), s);
  }

  bool has_vertex(VertexId v) const { return has_face(Simplex({v})); }

  /// Position of s within faces(s.dim()), used as a matrix index.
  int face_index(const Simplex& s) const {
    const auto& fs = faces_[s.dim()];
    auto it = std::lower_bound(fs.begin(), fs.end(), s);
    if (it == fs.end() || !(*it == s)) throw std::out_of_range("simplex not in complex");
    return static_cast<int>(it - fs.begin());
  }

  /// True if every maximal face has dimension dim().
  bool is_pure() const {
    for (const Simplex& f : facets_)
      if (f.dim() != dim()) return false;
    return true;
  }

  bool contains_subcomplex(const SimplicialComplex& sub) const {
    for (const Simplex& f : sub.facets_)
      if (!has_face(f)) return false;
    return true;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
  }

 private:
  static void close_down(const Simplex& f, std::set<Simplex>& out) {
    if (!out.insert(f).second) return;
    if (f.dim() == 0) return;
    for (int i = 0; i <= f.dim(); ++i) close_down(f.facet_opposite(i), out);
  }

  void index_faces(const std::set<Simplex>& all) {
    int d = -1;
    for (const Simplex& s : all) d = std::max(d, s.dim());
    faces_.assign(d + 1, {});
    for (const Simplex& s : all) faces_[s.dim()].push_back(s);
    for (auto& fs : faces_) std::sort(fs.begin(), fs.end());
    // facets: faces with no proper coface in the set
    for (const Simplex& s : all) {
      bool maximal = true;
      if (s.dim() < d) {
        for (int v = 0; v < vertex_count_ && maximal; ++v) {
          if (s.contains(v)) continue;
          if (all.count(s.with_vertex(v))) maximal = false;
        }
      }
      if (maximal) facets_.push_back(s);
    }
    std::sort(facets_.begin(), facets_.end());
  }

  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> faces_;  // by dimension
};

/// An integer chain of fixed degree. Simplices are stored sorted; a term
/// given in arbitrary vertex order picks up the sign of the sorting
/// permutation.
class Chain {
 public:
  explicit Chain(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("chain degree must be >= 0");
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Simplex, long long>& terms() const { return terms_; }

  void add(const Simplex& s, long long c) {
    if (s.dim() != degree_) throw std::invalid_argument("term dimension does not match chain degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_oriented(std::vector<VertexId> vertices, long long c) {
    auto [s, sign] = Simplex::oriented(std::move(vertices));
    add(s, sign * c);
  }

  long long coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }

  Chain& operator+=(const Chain& other) {
    if (other.degree_ != degree_) throw std::invalid_argument("chain degree mismatch");
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
  }

  Chain scaled(long long a) const {
    Chain out(degree_);
    if (a != 0)
      for (const auto& [s, c] : terms_) out.add(s, a * c);
    return out;
  }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  std::map<Simplex, long long> terms_;
};

/// Simplicial boundary of a chain (zero chain of degree 0 maps to an
/// empty degree-0 chain; callers wanting reduced boundaries sum the
/// coefficients themselves).
inline Chain boundary(const Chain& z) {
  if (z.degree() == 0) return Chain(0);
  Chain out(z.degree() - 1);
  for (const auto& [s, c] : z.terms()) {
    long long sign = 1;
    for (int i = 0; i <= s.dim(); ++i) {
      out.add(s.facet_opposite(i), sign * c);
      sign = -sign;
    }
  }
  return out;
}

inline bool is_cycle(const Chain& z) {
  return z.degree() == 0 || boundary(z).is_zero();
}

// ---------------------------------------------------------------------------
// Constructions

inline SimplicialComplex make_complex(const std::vector<std::vector<VertexId>>& facets) {
  if (facets.empty())
    throw std::invalid_argument("empty complex not constructible");
  std::vector<Simplex> fs;
  fs.reserve(facets.size());
  for (const auto& f : facets) {
    std::vector<VertexId> v = f;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    fs.emplace_back(std::move(v));
  }
  return SimplicialComplex::from_faces(fs);
}

/// Join K * L. Vertex ids of L are shifted past those of K; the join with
/// the empty complex is the identity.
inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (l.is_empty()) return k;
  const int shift = k.vertex_count();
  std::vector<Simplex> shifted;
  for (const Simplex& g : l.facets()) {
    std::vector<VertexId> v = g.vertices();
    for (VertexId& x : v) x += shift;
    shifted.emplace_back(std::move(v));
  }
  if (k.is_empty())
    return SimplicialComplex::from_faces(shifted, shift + l.vertex_count());

  std::vector<Simplex> fs;
  fs.reserve(k.facets().size() * shifted.size());
  for (const Simplex& f : k.facets())
    for (const Simplex& g : shifted) {
      std::vector<VertexId> v = f.vertices();
      v.insert(v.end(), g.vertices().begin(), g.vertices().end());
      fs.emplace_back(std::move(v));
    }
  return SimplicialComplex::from_faces(fs, shift + l.vertex_count());
}

/// Boundary of the (n+1)-dimensional cross-polytope: the standard
/// triangulation of the n-sphere. Vertices 2i and 2i+1 are antipodal;
/// n = -1 gives the empty complex.
inline SimplicialComplex sphere_complex(int n) {
  if (n < -1) throw std::invalid_argument("sphere dimension must be >= -1");
  if (n == -1) return SimplicialComplex::empty();
  std::vector<Simplex> facets;
  const int pairs = n + 1;
  for (int choice = 0; choice < (1 << pairs); ++choice) {
    std::vector<VertexId> v;
    for (int i = 0; i < pairs; ++i) v.push_back(2 * i + ((choice >> i) & 1));
    facets.emplace_back(std::move(v));
  }
  return SimplicialComplex::from_faces(facets, 2 * pairs);
}

/// Link of a vertex: all faces s with v not in s and s + {v} a face of K.
/// Ambient vertex ids are kept.
inline SimplicialComplex link(const SimplicialComplex& k, VertexId v) {
  if (!k.has_vertex(v)) throw std::invalid_argument("link: vertex not in complex");
  std::vector<Simplex> fs;
  for (const Simplex& f : k.facets()) {
    if (!f.contains(v)) continue;
    if (f.dim() == 0) continue;  // isolated vertex: empty link
    std::vector<VertexId> w;
    for (VertexId x : f.vertices())
      if (x != v) w.push_back(x);
    fs.emplace_back(std::move(w));
  }
  if (fs.empty()) return SimplicialComplex::empty(k.vertex_count());
  return SimplicialComplex::from_faces(fs, k.vertex_count());
}

/// Support of a top-degree cycle: the closure of the simplices carrying a
/// nonzero coefficient. Defined here only for cycles, where it is a pure
/// subcomplex of top dimension.
inline SimplicialComplex support(const Chain& z, const SimplicialComplex& k) {
  if (z.degree() != k.dim() && !(z.is_zero()))
    throw std::invalid_argument("support defined here only for cycles");
  for (const auto& [s, c] : z.terms())
    if (!k.has_face(s)) throw std::invalid_argument("chain does not live in the complex");
  if (!is_cycle(z)) throw std::invalid_argument("support defined here only for cycles");
  if (z.is_zero()) return SimplicialComplex::empty(k.vertex_count());
  std::vector<Simplex> fs;
  for (const auto& [s, c] : z.terms()) fs.push_back(s);
  return SimplicialComplex::from_faces(fs, k.vertex_count());
}

/// Suspends a top cycle through n+1 antipodal pairs, one at a time: each
/// step sends z to z*v - z*u for the next pair {u, v}. The result is a
/// cycle of degree z.degree() + n + 1 in join(k, sphere_complex(n)).
inline Chain suspend_cycle(const Chain& z, const SimplicialComplex& k, int n) {
  if (n < 0) throw std::invalid_argument("suspension count must be >= 0");
  if (z.degree() != k.dim() && !z.is_zero())
    throw std::invalid_argument("suspend_cycle requires a top cycle");
  if (!is_cycle(z)) throw std::invalid_argument("suspend_cycle requires a cycle");

  Chain cur = z;
  int next_vertex = k.vertex_count();
  for (int i = 0; i <= n; ++i) {
    const VertexId u = next_vertex, v = next_vertex + 1;
    next_vertex += 2;
    Chain out(cur.degree() + 1);
    for (const auto& [s, c] : cur.terms()) {
      out.add(s.with_vertex(v), c);   // u, v exceed all existing ids: no sign
      out.add(s.with_vertex(u), -c);
    }
    cur = std::move(out);
  }
  return cur;
}

}  // namespace weyl
