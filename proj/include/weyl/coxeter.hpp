// Finite Coxeter groups of small rank and their Coxeter complexes.
//
// Elements are canonicalized by their action on the root system: a faithful
// exact representation for every supported type. Crystallographic factors
// (A_n, B_n) act on integer root vectors; dihedral factors I2(m) act on the
// 2m roots indexed around the circle, which stays exact even when the
// reflection representation has irrational matrix entries.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/simplicial.hpp"

namespace weyl {

class CoxeterDiagram {
 public:
  explicit CoxeterDiagram(std::vector<std::vector<int>> m) : m_(std::move(m)) {
    const int n = static_cast<int>(m_.size());
    if (n < 1) throw std::invalid_argument("diagram rank must be >= 1");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(m_[i].size()) != n) throw std::invalid_argument("coxeter matrix not square");
      if (m_[i][i] != 1) throw std::invalid_argument("coxeter matrix diagonal must be 1");
      for (int j = 0; j < n; ++j) {
        if (m_[i][j] != m_[j][i]) throw std::invalid_argument("coxeter matrix not symmetric");
        if (i != j && m_[i][j] < 2) throw std::invalid_argument("off-diagonal entries must be >= 2");
      }
    }
  }

  static CoxeterDiagram type_a(int n) {
    require(n >= 1 && n <= 3, "type A supported for rank 1..3");
    return chain(n, std::vector<int>(std::max(0, n - 1), 3));
  }

  static CoxeterDiagram type_b(int n) {
    require(n == 2 || n == 3, "type B supported for rank 2..3");
    std::vector<int> labels(n - 1, 3);
    labels.back() = 4;
    return chain(n, labels);
  }

  static CoxeterDiagram dihedral(int m) {
    require(m >= 2 && m <= 12, "I2(m) supported for m in 2..12");
    return CoxeterDiagram({{1, m}, {m, 1}});
  }

  /// Reducible diagram: block sum. Used for weak joins, whose apartments
  /// carry extra A1 factors.
  CoxeterDiagram product(const CoxeterDiagram& other) const {
    const int n = rank(), k = other.rank();
    std::vector<std::vector<int>> m(n + k, std::vector<int>(n + k, 2));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = m_[i][j];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[n + i][n + j] = other.m_[i][j];
    return CoxeterDiagram(std::move(m));
  }

  int rank() const { return static_cast<int>(m_.size()); }
  int entry(int i, int j) const { return m_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return m_; }

  friend bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b) { return a.m_ == b.m_; }

 private:
  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }
  static CoxeterDiagram chain(int n, const std::vector<int>& labels) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = labels[i];
    return CoxeterDiagram(std::move(m));
  }

  std::vector<std::vector<int>> m_;
};

/// A group element, stored as the permutation it induces on the roots.
struct CoxeterElement {
  std::vector<int> root_image;

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.root_image == b.root_image;
  }
  friend bool operator<(const CoxeterElement& a, const CoxeterElement& b) {
    return a.root_image < b.root_image;
  }
};

/// A finite Coxeter group, fully enumerated. Construction fails for
/// diagrams outside the supported finite types (components A1..A3, B2, B3,
/// I2(m<=12), in any product combination).
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterDiagram d) : diagram_(std::move(d)) {
    build_roots();
    enumerate();
  }

  const CoxeterDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  int root_count() const { return static_cast<int>(negation_.size()); }
  int positive_root_count() const { return root_count() / 2; }

  /// All elements, sorted by their root permutation (deterministic).
  const std::vector<CoxeterElement>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }

  CoxeterElement identity() const {
    CoxeterElement e;
    e.root_image.resize(root_count());
    std::iota(e.root_image.begin(), e.root_image.end(), 0);
    return e;
  }

  const CoxeterElement& simple(int i) const { return simples_.at(i); }

  CoxeterElement compose(const CoxeterElement& a, const CoxeterElement& b) const {
    CoxeterElement out;
    out.root_image.resize(root_count());
    for (int r = 0; r < root_count(); ++r) out.root_image[r] = a.root_image[b.root_image[r]];
    return out;
  }

  CoxeterElement inverse(const CoxeterElement& a) const {
    CoxeterElement out;
    out.root_image.resize(root_count());
    for (int r = 0; r < root_count(); ++r) out.root_image[a.root_image[r]] = r;
    return out;
  }

  /// Length = number of positive roots sent to negative roots.
  int length(const CoxeterElement& w) const {
    int l = 0;
    for (int r = 0; r < root_count(); ++r)
      if (is_positive_[r] && !is_positive_[w.root_image[r]]) ++l;
    return l;
  }

  const CoxeterElement& longest_element() const { return longest_; }

  /// Opposition: w^{-1} w' is the longest element.
  bool opposition(const CoxeterElement& w, const CoxeterElement& w2) const {
    return compose(w, longest_) == w2;
  }

  /// True if conjugation by the longest element permutes the simple
  /// reflections nontrivially (type-reversing opposition).
  bool longest_is_central() const {
    for (int i = 0; i < rank(); ++i) {
      CoxeterElement c = compose(compose(longest_, simple(i)), longest_);
      if (!(c == simple(i))) return false;
    }
    return true;
  }

  int element_index(const CoxeterElement& w) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
    if (it == elements_.end() || !(*it == w)) throw std::invalid_argument("element not in group");
    return static_cast<int>(it - elements_.begin());
  }

  /// Enumerates the standard parabolic subgroup generated by the given
  /// simple reflections.
  std::vector<CoxeterElement> parabolic(const std::vector<int>& gens) const {
    std::set<CoxeterElement> seen{identity()};
    std::vector<CoxeterElement> queue{identity()};
    while (!queue.empty()) {
      CoxeterElement w = queue.back();
      queue.pop_back();
      for (int i : gens) {
        CoxeterElement ws = compose(w, simple(i));
        if (seen.insert(ws).second) queue.push_back(ws);
      }
    }
    return {seen.begin(), seen.end()};
  }

  /// Canonical representative of the coset w * <gens>: the least element.
  CoxeterElement coset_representative(const CoxeterElement& w, const std::vector<CoxeterElement>& subgroup) const {
    CoxeterElement best = compose(w, subgroup.front());
    for (std::size_t i = 1; i < subgroup.size(); ++i) {
      CoxeterElement cand = compose(w, subgroup[i]);
      if (cand < best) best = cand;
    }
    return best;
  }

 private:
  // Root bookkeeping built per irreducible component. Crystallographic
  // components store integer root vectors; dihedral components only need
  // index arithmetic on the 2m roots of I2(m).
  void build_roots() {
    const int n = rank();
    simple_action_.assign(n, {});
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (int i = 0; i < n; ++i) {
      if (comp[i] >= 0) continue;
      std::vector<int> c{i};
      comp[i] = static_cast<int>(comps.size());
      for (std::size_t k = 0; k < c.size(); ++k)
        for (int j = 0; j < n; ++j)
          if (comp[j] < 0 && diagram_.entry(c[k], j) >= 3) {
            comp[j] = comp[i];
            c.push_back(j);
          }
      std::sort(c.begin(), c.end());
      comps.push_back(std::move(c));
    }

    simples_.assign(n, CoxeterElement{});
    for (const auto& c : comps) {
      if (c.size() == 1) {
        append_dihedral_block(c, 2);  // A1 = degenerate dihedral with 2 roots
      } else if (c.size() == 2) {
        append_dihedral_block(c, diagram_.entry(c[0], c[1]));
      } else if (c.size() == 3) {
        append_rank3_block(c);
      } else {
        throw std::invalid_argument("unsupported Coxeter diagram (rank of component > 3)");
      }
    }

    // assemble full simple-reflection permutations from per-component tables
    for (int i = 0; i < n; ++i) {
      std::vector<int> img(root_count_accum_);
      std::iota(img.begin(), img.end(), 0);
      for (const auto& [root, image] : simple_action_[i]) img[root] = image;
      simples_[i].root_image = std::move(img);
    }
  }

  void append_dihedral_block(const std::vector<int>& simples_in_comp, int m) {
    if (m > 12) throw std::invalid_argument("unsupported Coxeter diagram (I2(m) with m > 12)");
    const int offset = root_count_accum_;
    if (simples_in_comp.size() == 1) {
      // single A1: roots {alpha, -alpha}
      is_positive_.push_back(true);
      is_positive_.push_back(false);
      negation_.push_back(offset + 1);
      negation_.push_back(offset);
      simple_action_[simples_in_comp[0]][offset] = offset + 1;
      simple_action_[simples_in_comp[0]][offset + 1] = offset;
      root_count_accum_ += 2;
      return;
    }
    // roots are indexed around the circle; 0..m-1 positive, k+m is -k.
    // the simple roots sit at indices 0 and m-1.
    const int nroots = 2 * m;
    for (int k = 0; k < nroots; ++k) {
      is_positive_.push_back(k < m);
      negation_.push_back(offset + (k + m) % nroots);
    }
    // reflection orthogonal to the root at index j: k -> 2j + m - k (mod 2m)
    auto reflect = [&](int axis_root, int k) { return ((2 * axis_root + m - k) % nroots + nroots) % nroots; };
    for (int k = 0; k < nroots; ++k) {
      simple_action_[simples_in_comp[0]][offset + k] = offset + reflect(0, k);
      simple_action_[simples_in_comp[1]][offset + k] = offset + reflect(m - 1, k);
    }
    root_count_accum_ += nroots;
  }

  // Rank-3 chains: A3 (labels 3,3) and B3 (3,4), realized on integer
  // root vectors. The diagram order must match a chain; anything else is
  // unsupported.
  void append_rank3_block(const std::vector<int>& c) {
    // find chain ordering: the two ends have exactly one neighbor
    std::vector<int> order = chain_order(c);
    const int m01 = diagram_.entry(order[0], order[1]);
    const int m12 = diagram_.entry(order[1], order[2]);
    std::vector<std::vector<int>> roots;
    std::vector<std::vector<int>> simple_roots;
    if (m01 == 3 && m12 == 3) {
      // A3 in R^4: e_i - e_j
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j) {
            std::vector<int> v(4, 0);
            v[i] = 1;
            v[j] = -1;
            roots.push_back(v);
          }
      simple_roots = {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}};
    } else if ((m01 == 3 && m12 == 4)) {
      // B3 in R^3: +-e_i, +-e_i +- e_j
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          std::vector<int> v(3, 0);
          v[i] = s;
          roots.push_back(v);
        }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              std::vector<int> v(3, 0);
              v[i] = si;
              v[j] = sj;
              roots.push_back(v);
            }
      simple_roots = {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}};
    } else {
      throw std::invalid_argument("unsupported rank-3 Coxeter diagram");
    }

    const int offset = root_count_accum_;
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < roots.size(); ++k) index[roots[k]] = offset + static_cast<int>(k);
    auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
      int s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
      return s;
    };
    for (std::size_t k = 0; k < roots.size(); ++k) {
      std::vector<int> neg = roots[k];
      for (int& x : neg) x = -x;
      negation_.push_back(index.at(neg));
      // positivity: first nonzero coordinate is positive
      int lead = 0;
      for (int x : roots[k])
        if (x != 0) {
          lead = x;
          break;
        }
      is_positive_.push_back(lead > 0);
    }
    for (int s = 0; s < 3; ++s) {
      const std::vector<int>& alpha = simple_roots[s];
      const int aa = dot(alpha, alpha);
      for (std::size_t k = 0; k < roots.size(); ++k) {
        std::vector<int> img = roots[k];
        const int coef = 2 * dot(img, alpha);
        if (coef % aa != 0) throw std::logic_error("non-integral reflection");
        for (std::size_t i = 0; i < img.size(); ++i) img[i] -= (coef / aa) * alpha[i];
        simple_action_[order[s]][offset + static_cast<int>(k)] = index.at(img);
      }
    }
    root_count_accum_ += static_cast<int>(roots.size());
  }

  std::vector<int> chain_order(const std::vector<int>& c) const {
    auto bonded = [&](int a, int b) { return diagram_.entry(a, b) >= 3; };
    for (const int start : c) {
      int nb = 0;
      for (int other : c)
        if (other != start && bonded(start, other)) ++nb;
      if (nb != 1) continue;
      std::vector<int> order{start};
      std::set<int> used{start};
      while (order.size() < c.size()) {
        bool advanced = false;
        for (int other : c)
          if (!used.count(other) && bonded(order.back(), other)) {
            order.push_back(other);
            used.insert(other);
            advanced = true;
            break;
          }
        if (!advanced) break;
      }
      if (order.size() == c.size()) return order;
    }
    throw std::invalid_argument("unsupported rank-3 Coxeter diagram (not a chain)");
  }

  void enumerate() {
    // guard against accidental infinite types before BFS: all our supported
    // components are finite by construction, but a malformed chain label
    // combination (e.g. 4,4) must be rejected by append_rank3_block already.
    std::set<CoxeterElement> seen{identity()};
    std::vector<CoxeterElement> queue{identity()};
    while (!queue.empty()) {
      CoxeterElement w = queue.back();
      queue.pop_back();
      for (int i = 0; i < rank(); ++i) {
        CoxeterElement ws = compose(w, simples_[i]);
        if (seen.insert(ws).second) {
          queue.push_back(ws);
          if (seen.size() > 100000) throw std::invalid_argument("Coxeter group too large or infinite");
        }
      }
    }
    elements_.assign(seen.begin(), seen.end());
    longest_ = *std::max_element(elements_.begin(), elements_.end(),
                                 [this](const CoxeterElement& a, const CoxeterElement& b) {
                                   return length(a) < length(b);
                                 });
    // uniqueness of the longest element
    const int lmax = length(longest_);
    int count = 0;
    for (const CoxeterElement& w : elements_)
      if (length(w) == lmax) ++count;
    if (count != 1) throw std::logic_error("longest element not unique");
  }

  CoxeterDiagram diagram_;
  std::vector<CoxeterElement> simples_;
  std::vector<std::map<int, int>> simple_action_;  // per simple index, sparse action on roots
  std::vector<bool> is_positive_;
  std::vector<int> negation_;
  int root_count_accum_ = 0;
  std::vector<CoxeterElement> elements_;
  CoxeterElement longest_;
};

// ---------------------------------------------------------------------------
// Spec-level operations

inline std::vector<CoxeterElement> generate_group(const CoxeterDiagram& d) {
  return CoxeterGroup(d).elements();
}

inline CoxeterElement longest_element(const CoxeterDiagram& d) {
  return CoxeterGroup(d).longest_element();
}

inline bool opposition(const CoxeterElement& w, const CoxeterElement& w2, const CoxeterDiagram& d) {
  return CoxeterGroup(d).opposition(w, w2);
}

/// The Coxeter complex: faces are cosets of proper standard parabolic
/// subgroups; chambers correspond to group elements.
struct CoxeterComplexData {
  SimplicialComplex complex;
  std::map<CoxeterElement, Simplex> chamber_of;
  std::vector<int> type_of;  // vertex id -> simple reflection index
};

inline CoxeterComplexData coxeter_complex_of(const CoxeterGroup& g) {
  const int n = g.rank();
  // subgroup W_{S \ {i}} per type i
  std::vector<std::vector<CoxeterElement>> maximal_parabolic(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> gens;
    for (int j = 0; j < n; ++j)
      if (j != i) gens.push_back(j);
    maximal_parabolic[i] = gens.empty() ? std::vector<CoxeterElement>{g.identity()} : g.parabolic(gens);
  }

  CoxeterComplexData out;
  std::map<std::pair<int, CoxeterElement>, VertexId> vertex_ids;
  std::vector<Simplex> facets;
  std::vector<int> types;
  for (const CoxeterElement& w : g.elements()) {
    std::vector<VertexId> verts;
    for (int i = 0; i < n; ++i) {
      CoxeterElement rep = g.coset_representative(w, maximal_parabolic[i]);
      auto key = std::make_pair(i, rep);
      auto it = vertex_ids.find(key);
      if (it == vertex_ids.end()) {
        it = vertex_ids.emplace(key, static_cast<VertexId>(types.size())).first;
        types.push_back(i);
      }
      verts.push_back(it->second);
    }
    std::sort(verts.begin(), verts.end());
    facets.emplace_back(std::move(verts));
  }

  out.complex = SimplicialComplex::from_faces(facets, static_cast<int>(types.size()));
  out.type_of = std::move(types);
  {
    int idx = 0;
    for (const CoxeterElement& w : g.elements()) out.chamber_of.emplace(w, facets[idx++]);
  }
  return out;
}

inline CoxeterComplexData coxeter_complex(const CoxeterDiagram& d) {
  return coxeter_complex_of(CoxeterGroup(d));
}

}  // namespace weyl
