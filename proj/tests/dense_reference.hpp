#pragma once

// Independent dense-matrix reference for homology of small complexes.
// Textbook Smith reduction on dense integer arrays and plain Gaussian
// elimination over GF(2); shares nothing with the engine's sparse
// elimination path.  Used as the oracle for the engine's group shapes.

#include <algorithm>
#include <vector>

#include "ints.hpp"
#include "simplicial.hpp"

namespace kfref {

using kf::Int;

using Dense = std::vector<std::vector<Int>>;

inline Dense dense_boundary(const kf::SimplicialComplex& X, int k,
                            const std::vector<std::vector<char>>* dead) {
  int rows = k >= 1 ? X.size(k - 1) : 0;
  int cols = X.size(k);
  Dense a(rows, std::vector<Int>(cols, 0));
  if (k < 1 || k > 3) return a;
  for (int c = 0; c < cols; ++c) {
    if (dead && (*dead)[k][c]) continue;
    for (auto [r, s] : X.boundary_of(k, c)) {
      if (dead && (*dead)[k - 1][r]) continue;
      a[r][c] = s;
    }
  }
  return a;
}

// Diagonal of the Smith form (positive entries, divisibility chain).
inline std::vector<Int> dense_smith(Dense a) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<Int> diag;
  int t = 0;
  while (t < m && t < n) {
    // Pick a pivot, preferring magnitude 1.
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Int mag = a[i][j] < 0 ? -a[i][j] : a[i][j];
        if (pr < 0 || mag < best) {
          best = mag;
          pr = i;
          pc = j;
          if (best == 1) goto found;
        }
      }
  found:
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pc]);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        while (a[i][t] != 0) {
          Int q = kf::round_div(a[i][t], a[t][t]);
          for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) std::swap(a[i], a[t]);
        }
      }
      for (int j = t + 1; j < n; ++j) {
        while (a[t][j] != 0) {
          Int q = kf::round_div(a[t][j], a[t][t]);
          for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            for (int i = t; i < m; ++i) std::swap(a[i][j], a[i][t]);
            dirty = true;
          }
        }
      }
      if (!dirty) {
        bool col_clear = true;
        for (int i = t + 1; i < m; ++i)
          if (a[i][t] != 0) col_clear = false;
        if (col_clear) break;
      }
    }
    diag.push_back(a[t][t] < 0 ? -a[t][t] : a[t][t]);
    ++t;
  }
  // Enforce the divisibility chain on the diagonal multiset.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j)
        if (diag[j] % diag[i] != 0) {
          Int g = kf::int_gcd(diag[i], diag[j]);
          Int l = diag[i] / g * diag[j];
          diag[i] = g;
          diag[j] = l;
          changed = true;
        }
    std::sort(diag.begin(), diag.end());
  }
  return diag;
}

inline int dense_rank_gf2(const Dense& a) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<std::vector<char>> b(m, std::vector<char>(n, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = a[i][j] % 2 != 0;
  int rank = 0;
  for (int c = 0; c < n && rank < m; ++c) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (b[r][c]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(b[rank], b[pivot]);
    for (int r = 0; r < m; ++r)
      if (r != rank && b[r][c])
        for (int j = c; j < n; ++j) b[r][j] ^= b[rank][j];
    ++rank;
  }
  return rank;
}

struct RefGroup {
  int betti = 0;
  std::vector<Int> torsion;
};

// Homology of (X, A) by the rank/torsion formulas on dense boundary
// matrices; A given as per-dimension membership masks (may be empty).
inline RefGroup ref_homology(const kf::SimplicialComplex& X, int k, bool mod2,
                             const std::vector<std::vector<char>>* dead) {
  int nk = 0;
  for (int i = 0; i < X.size(k); ++i)
    if (!dead || !(*dead)[k][i]) ++nk;
  Dense dk = dense_boundary(X, k, dead);
  Dense dk1 = k < 3 ? dense_boundary(X, k + 1, dead)
                    : Dense(X.size(3), std::vector<Int>());
  RefGroup out;
  if (mod2) {
    int r1 = dense_rank_gf2(dk);
    int r2 = dense_rank_gf2(dk1);
    out.betti = nk - r1 - r2;
    return out;
  }
  std::vector<Int> s1 = dense_smith(dk);
  std::vector<Int> s2 = dense_smith(dk1);
  int r1 = 0;
  for (const Int& d : s1)
    if (d != 0) ++r1;
  int r2 = 0;
  for (const Int& d : s2)
    if (d != 0) ++r2;
  out.betti = nk - r1 - r2;
  for (const Int& d : s2)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

inline std::vector<std::vector<char>> dead_masks(
    const kf::SimplicialComplex& X, const kf::SubcomplexRef& A) {
  std::vector<std::vector<char>> dead(4);
  for (int d = 0; d <= 3; ++d) {
    dead[d].assign(X.size(d), 0);
    for (int idx : A.cells[d]) dead[d][idx] = 1;
  }
  return dead;
}

}  // namespace kfref
