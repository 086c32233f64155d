#include "int_matrix.hpp"

#include <algorithm>
#include <cassert>

#include "error.hpp"

namespace kf {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Int IntMatrix::at(int r, int c) const {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Int(0) : it->second;
}

void IntMatrix::set(int r, int c, Int value) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  if (value == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = std::move(value);
}

void IntMatrix::add_at(int r, int c, const Int& value) {
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  IntMatrix out(rows_, rhs.cols_);
  // Group rhs by row for the sparse product.
  std::vector<std::vector<std::pair<int, const Int*>>> rhs_rows(rhs.rows_);
  for (const auto& [key, v] : rhs.entries_)
    rhs_rows[key.first].push_back({key.second, &v});
  for (const auto& [key, v] : entries_) {
    for (const auto& [c, w] : rhs_rows[key.second])
      out.add_at(key.first, c, v * (*w));
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (const auto& [key, v] : entries_) out.set(key.second, key.first, v);
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  assert(static_cast<int>(x.size()) == cols_);
  std::vector<Int> out(rows_, 0);
  for (const auto& [key, v] : entries_) out[key.first] += v * x[key.second];
  return out;
}

std::vector<Int> SnfFull::diagonal() const {
  int n = std::min(D.rows(), D.cols());
  std::vector<Int> d(n);
  for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
  return d;
}

namespace {

// Working state of the reduction.  Starts sparse; converts to a dense table
// when fill exceeds 30%, which subdivided complexes do reach in the reduced
// blocks.
struct SnfWork {
  int m, n;
  bool dense = false;
  std::vector<std::map<int, Int>> srows;  // sparse: row -> (col -> value)
  std::vector<int> col_nnz;
  std::vector<std::vector<Int>> drows;  // dense rows
  std::size_t nnz = 0;

  // Transforms, tracked densely (inputs here are small or already reduced).
  std::vector<std::vector<Int>> U, Uinv, V, Vinv;

  explicit SnfWork(const IntMatrix& A) : m(A.rows()), n(A.cols()) {
    srows.resize(m);
    col_nnz.assign(n, 0);
    for (const auto& [key, v] : A.entries()) {
      srows[key.first][key.second] = v;
      ++col_nnz[key.second];
      ++nnz;
    }
    U = dense_identity(m);
    Uinv = dense_identity(m);
    V = dense_identity(n);
    Vinv = dense_identity(n);
    maybe_densify();
  }

  static std::vector<std::vector<Int>> dense_identity(int k) {
    std::vector<std::vector<Int>> out(k, std::vector<Int>(k, 0));
    for (int i = 0; i < k; ++i) out[i][i] = 1;
    return out;
  }

  void maybe_densify() {
    if (dense || m == 0 || n == 0) return;
    if (nnz * 10 <= static_cast<std::size_t>(m) * n * 3) return;
    drows.assign(m, std::vector<Int>(n, 0));
    for (int i = 0; i < m; ++i)
      for (const auto& [j, v] : srows[i]) drows[i][j] = v;
    srows.clear();
    srows.shrink_to_fit();
    dense = true;
  }

  Int get(int i, int j) const {
    if (dense) return drows[i][j];
    auto it = srows[i].find(j);
    return it == srows[i].end() ? Int(0) : it->second;
  }

  void put(int i, int j, Int v) {
    if (dense) {
      drows[i][j] = std::move(v);
      return;
    }
    auto it = srows[i].find(j);
    if (v == 0) {
      if (it != srows[i].end()) {
        srows[i].erase(it);
        --col_nnz[j];
        --nnz;
      }
    } else if (it == srows[i].end()) {
      srows[i][j] = std::move(v);
      ++col_nnz[j];
      ++nnz;
    } else {
      it->second = std::move(v);
    }
  }

  // row_i -= q * row_j on the working matrix (and U, Uinv accordingly).
  void row_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    if (dense) {
      for (int c = 0; c < n; ++c)
        if (drows[j][c] != 0) drows[i][c] -= q * drows[j][c];
    } else {
      for (const auto& [c, v] : std::map<int, Int>(srows[j]))
        put(i, c, get(i, c) - q * v);
      maybe_densify();
    }
    for (int c = 0; c < m; ++c) U[i][c] -= q * U[j][c];
    for (int r = 0; r < m; ++r) Uinv[r][j] += q * Uinv[r][i];
  }

  // col_j -= q * col_k (and V, Vinv accordingly).
  void col_axpy(int j, int k, const Int& q) {
    if (q == 0) return;
    if (dense) {
      for (int r = 0; r < m; ++r)
        if (drows[r][k] != 0) drows[r][j] -= q * drows[r][k];
    } else {
      for (int r = 0; r < m; ++r) {
        Int v = get(r, k);
        if (v != 0) put(r, j, get(r, j) - q * v);
      }
      maybe_densify();
    }
    for (int r = 0; r < n; ++r) V[r][j] -= q * V[r][k];
    for (int c = 0; c < n; ++c) Vinv[k][c] += q * Vinv[j][c];
  }

  void row_swap(int i, int j) {
    if (i == j) return;
    if (dense) {
      std::swap(drows[i], drows[j]);
    } else {
      std::swap(srows[i], srows[j]);
    }
    std::swap(U[i], U[j]);
    for (int r = 0; r < m; ++r) std::swap(Uinv[r][i], Uinv[r][j]);
  }

  void col_swap(int j, int k) {
    if (j == k) return;
    if (dense) {
      for (int r = 0; r < m; ++r) std::swap(drows[r][j], drows[r][k]);
    } else {
      for (int r = 0; r < m; ++r) {
        Int a = get(r, j), b = get(r, k);
        if (a != 0 || b != 0) {
          put(r, j, b);
          put(r, k, a);
        }
      }
    }
    for (int r = 0; r < n; ++r) std::swap(V[r][j], V[r][k]);
    std::swap(Vinv[j], Vinv[k]);
  }

  void row_negate(int i) {
    if (dense) {
      for (int c = 0; c < n; ++c) drows[i][c] = -drows[i][c];
    } else {
      for (auto& [c, v] : srows[i]) v = -v;
    }
    for (int c = 0; c < m; ++c) U[i][c] = -U[i][c];
    for (int r = 0; r < m; ++r) Uinv[r][i] = -Uinv[r][i];
  }

  int active_row_nnz(int i, int t) const {
    int count = 0;
    if (dense) {
      for (int c = t; c < n; ++c)
        if (drows[i][c] != 0) ++count;
    } else {
      for (auto it = srows[i].lower_bound(t); it != srows[i].end(); ++it)
        ++count;
    }
    return count;
  }

  int active_col_nnz(int j, int t) const {
    int count = 0;
    for (int r = t; r < m; ++r)
      if (get(r, j) != 0) ++count;
    return count;
  }

  // Pivot rule: smallest nonzero magnitude, ties broken by least fill-in
  // (Markowitz count), then lowest (row, col).
  bool pick_pivot(int t, int& pr, int& pc) {
    bool found = false;
    Int best_abs = 0;
    long long best_fill = 0;
    for (int i = t; i < m; ++i) {
      auto scan = [&](int j, const Int& v) {
        Int a = v < 0 ? -v : v;
        if (found && a > best_abs) return;
        long long fill = static_cast<long long>(active_row_nnz(i, t) - 1) *
                         (active_col_nnz(j, t) - 1);
        if (!found || a < best_abs || (a == best_abs && fill < best_fill) ||
            (a == best_abs && fill == best_fill &&
             (i < pr || (i == pr && j < pc)))) {
          found = true;
          best_abs = a;
          best_fill = fill;
          pr = i;
          pc = j;
        }
      };
      if (dense) {
        for (int j = t; j < n; ++j)
          if (drows[i][j] != 0) scan(j, drows[i][j]);
      } else {
        for (auto it = srows[i].lower_bound(t); it != srows[i].end(); ++it)
          scan(it->first, it->second);
      }
    }
    return found;
  }

  // Euclidean clearing of row t and column t against the pivot at (t, t);
  // swaps keep the smallest remainder in pivot position, so this terminates.
  void clear_position(int t) {
    for (;;) {
      bool col_dirty = false;
      for (int i = t + 1; i < m; ++i) {
        Int v = get(i, t);
        while (v != 0) {
          Int q = round_div(v, get(t, t));
          row_axpy(i, t, q);
          v = get(i, t);
          if (v != 0) {
            row_swap(t, i);
            v = get(i, t);
          }
        }
      }
      bool row_dirty = false;
      for (int j = t + 1; j < n; ++j) {
        Int v = get(t, j);
        while (v != 0) {
          Int q = round_div(v, get(t, t));
          col_axpy(j, t, q);
          v = get(t, j);
          if (v != 0) {
            col_swap(t, j);
            v = get(t, j);
            row_dirty = true;
          }
        }
      }
      // A column swap cannot occur above, but a col_swap inside the row pass
      // may have reintroduced entries below the pivot.
      for (int i = t + 1; i < m && !col_dirty; ++i)
        if (get(i, t) != 0) col_dirty = true;
      (void)row_dirty;
      if (!col_dirty) return;
    }
  }
};

bool already_smith(const IntMatrix& A) {
  int k = std::min(A.rows(), A.cols());
  Int prev = 0;
  bool seen_zero_diag = false;
  std::vector<Int> diag(k, 0);
  for (const auto& [key, v] : A.entries()) {
    if (key.first != key.second) return false;
    if (v < 0) return false;
    diag[key.first] = v;
  }
  for (int i = 0; i < k; ++i) {
    if (diag[i] == 0) {
      seen_zero_diag = true;
      continue;
    }
    if (seen_zero_diag) return false;  // zeros must trail
    if (prev != 0 && diag[i] % prev != 0) return false;
    prev = diag[i];
  }
  return true;
}

IntMatrix from_dense(const std::vector<std::vector<Int>>& d, int m, int n) {
  IntMatrix out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] != 0) out.set(i, j, d[i][j]);
  return out;
}

}  // namespace

SnfFull snf_full(const IntMatrix& A) {
  SnfFull out;
  if (already_smith(A)) {
    out.U = IntMatrix::identity(A.rows());
    out.Uinv = out.U;
    out.V = IntMatrix::identity(A.cols());
    out.Vinv = out.V;
    out.D = A;
    for (int i = 0; i < std::min(A.rows(), A.cols()); ++i)
      if (out.D.at(i, i) != 0) ++out.rank;
    return out;
  }

  SnfWork w(A);
  int limit = std::min(w.m, w.n);
  int t = 0;
  for (; t < limit; ++t) {
    int pr, pc;
    if (!w.pick_pivot(t, pr, pc)) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);
    w.clear_position(t);
  }
  int rank = t;

  for (int i = 0; i < rank; ++i)
    if (w.get(i, i) < 0) w.row_negate(i);

  // Repair the divisibility chain pairwise; the product of the two entries
  // is preserved so the loop terminates.
  for (;;) {
    int bad = -1;
    for (int i = 0; i + 1 < rank; ++i) {
      if (w.get(i + 1, i + 1) % w.get(i, i) != 0) {
        bad = i;
        break;
      }
    }
    if (bad < 0) break;
    w.row_axpy(bad, bad + 1, -1);  // row_bad += row_{bad+1}
    w.clear_position(bad);
    if (w.get(bad, bad) < 0) w.row_negate(bad);
    if (w.get(bad + 1, bad + 1) < 0) w.row_negate(bad + 1);
  }

  out.rank = rank;
  out.U = from_dense(w.U, w.m, w.m);
  out.Uinv = from_dense(w.Uinv, w.m, w.m);
  out.V = from_dense(w.V, w.n, w.n);
  out.Vinv = from_dense(w.Vinv, w.n, w.n);
  IntMatrix D(w.m, w.n);
  for (int i = 0; i < rank; ++i) D.set(i, i, w.get(i, i));
  out.D = D;
  return out;
}

SnfResult snf(const IntMatrix& A) {
  SnfFull f = snf_full(A);
  return {std::move(f.U), std::move(f.D), std::move(f.V)};
}

std::optional<std::vector<Int>> solve_integer(const SnfFull& f,
                                              const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != f.U.cols())
    fail(ErrorKind::BadArgument, "solve_integer: dimension mismatch");
  std::vector<Int> y = f.U.apply(b);
  int n = f.V.rows();
  std::vector<Int> z(n, 0);
  int k = std::min(f.D.rows(), f.D.cols());
  for (int i = 0; i < f.D.rows(); ++i) {
    Int d = i < k ? f.D.at(i, i) : Int(0);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % d != 0) return std::nullopt;
      z[i] = y[i] / d;
    }
  }
  return f.V.apply(z);
}

Int det(const IntMatrix& A) {
  if (A.rows() != A.cols())
    fail(ErrorKind::BadArgument, "det: matrix not square");
  int n = A.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (const auto& [key, v] : A.entries()) a[key.first][key.second] = v;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace kf
