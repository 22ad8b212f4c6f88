// Integer simplicial homology via Smith normal form.
//
// All matrix arithmetic is exact (arbitrary-precision integers); pivoting
// chooses the entry of least absolute value with full reduction, which
// keeps entries small on incidence-type matrices.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyl/simplicial.hpp"

namespace weyl {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix; only nonzero entries are stored.
class IntegerMatrix {
 public:
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

  void set(int r, int c, BigInt v) {
    check(r, c);
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = std::move(v);
  }

  BigInt at(int r, int c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  IntegerMatrix multiply(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix out(rows_, other.cols_);
    std::map<std::pair<int, int>, BigInt> acc;
    for (const auto& [rc, v] : entries_)
      for (const auto& [rc2, w] : other.entries_)
        if (rc.second == rc2.first) acc[{rc.first, rc2.second}] += v * w;
    for (auto& [rc, v] : acc)
      if (v != 0) out.entries_[rc] = std::move(v);
    return out;
  }

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  }

  int rows_, cols_;
  std::map<std::pair<int, int>, BigInt> entries_;
};

struct SmithResult {
  std::vector<BigInt> divisors;  // invariant factors d1 | d2 | ... (all >= 1)
  int rank = 0;
};

/// Smith normal form over the integers. Returns the invariant factors and
/// the rank; the divisors form a divisibility chain.
inline SmithResult smith_normal_form(const IntegerMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols, 0));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;

  auto abs_of = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

  SmithResult out;
  int t = 0;
  const int bound = std::min(rows, cols);
  while (t < bound) {
    // locate the nonzero entry of least absolute value in the submatrix
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          BigInt v = abs_of(a[i][j]);
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;  // submatrix is zero
    std::swap(a[t], a[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        if (q != 0)
          for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder became the smaller pivot
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        if (q != 0)
          for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce divisibility: pivot must divide every remaining entry
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols && clean; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            clean = false;
          }
    }
    out.divisors.push_back(abs_of(a[t][t]));
    ++t;
  }
  out.rank = static_cast<int>(out.divisors.size());
  return out;
}

/// Boundary matrix of K in degree k: rows are (k-1)-faces, columns are
/// k-faces, both in canonical order. For k = 0 the unreduced boundary is
/// the zero map with no rows; the reduced flag yields one row of ones
/// (the augmentation).
inline IntegerMatrix boundary_matrix(const SimplicialComplex& k, int deg, bool reduced = false) {
  if (deg < 0 || deg > k.dim()) throw std::out_of_range("boundary degree out of range");
  const auto& cols = k.faces(deg);
  if (deg == 0) {
    IntegerMatrix m(reduced ? 1 : 0, static_cast<int>(cols.size()));
    if (reduced)
      for (int j = 0; j < static_cast<int>(cols.size()); ++j) m.set(0, j, 1);
    return m;
  }
  const auto& rows = k.faces(deg - 1);
  IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const Simplex& s = cols[j];
    int sign = 1;
    for (int i = 0; i <= s.dim(); ++i) {
      m.set(k.face_index(s.facet_opposite(i)), j, sign);
      sign = -sign;
    }
  }
  return m;
}

struct HomologyGroup {
  long long betti = 0;
  std::vector<BigInt> torsion;  // invariant factors >= 2, divisibility chain

  bool is_trivial() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.betti == b.betti && a.torsion == b.torsion;
  }
};

/// H_k(K; Z) (unreduced by default). betti = #k-faces - rank d_k - rank d_{k+1};
/// torsion comes from the invariant factors of d_{k+1}.
inline HomologyGroup homology(const SimplicialComplex& k, int deg, bool reduced = false) {
  if (deg < 0 || deg > k.dim()) throw std::out_of_range("homology degree out of range");
  const long long faces_k = static_cast<long long>(k.faces(deg).size());
  const SmithResult low = smith_normal_form(boundary_matrix(k, deg, reduced));
  SmithResult high;
  if (deg + 1 <= k.dim()) high = smith_normal_form(boundary_matrix(k, deg + 1));

  HomologyGroup h;
  h.betti = faces_k - low.rank - high.rank;
  for (const BigInt& d : high.divisors)
    if (d >= 2) h.torsion.push_back(d);
  return h;
}

/// Local homology at a vertex, realized combinatorially as the reduced
/// homology of the link in degree k-1. Degrees outside the link's range
/// follow the usual conventions (reduced H_{-1} of the empty complex is Z).
inline HomologyGroup local_homology(const SimplicialComplex& k, VertexId v, int deg) {
  if (!k.has_vertex(v)) throw std::invalid_argument("local_homology: vertex not in complex");
  const SimplicialComplex lk = link(k, v);
  const int d = deg - 1;
  if (d == -1) return HomologyGroup{lk.is_empty() ? 1 : 0, {}};
  if (d < -1 || lk.is_empty() || d > lk.dim()) return HomologyGroup{};
  return homology(lk, d, /*reduced=*/true);
}

}  // namespace weyl
