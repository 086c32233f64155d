#pragma once

// Elimination of unit-incidence pairs on a simplicial chain complex.
//
// For a pair (a, b) with <da, b> = u invertible, removing the two cells and
// replacing the boundary block by its Schur complement yields a chain
// homotopy equivalent complex.  The projection pi and inclusion iota of the
// tracked degree are composed along the way:
//   pi(b)   = -u^-1 * (da - u b)        (pair one degree above the tracked)
//   pi(a)   = 0                          (pair at the tracked degree)
//   iota(x) = x - u^-1 <dx, b> iota(a)   (pair at the tracked degree)
// Rows and columns touched by an elimination stay exact; the per-row column
// lists are pruned lazily.  Pairs whose Schur update is free (singleton row
// or column) are drained first; the rest are ordered by Markowitz fill.

#include <array>
#include <cassert>
#include <cstdint>
#include <deque>
#include <queue>
#include <tuple>
#include <vector>

#include "ints.hpp"
#include "simplicial.hpp"

namespace kf::detail {

struct RingZOps {
  using value = Int;
  static bool is_zero(const value& v) { return v == 0; }
  static bool is_unit(const value& v) { return v == 1 || v == -1; }
  // num / unit for unit in {1, -1}
  static value div_unit(const value& num, const value& unit) {
    return unit > 0 ? num : -num;
  }
  static void add_mul(value& acc, const value& a, const value& b) {
    acc += a * b;
  }
  static value neg(const value& v) { return -v; }
  static value one() { return 1; }
};

struct RingZ2Ops {
  using value = std::uint8_t;
  static bool is_zero(value v) { return v == 0; }
  static bool is_unit(value v) { return v != 0; }
  static value div_unit(value num, value) { return num; }
  static void add_mul(value& acc, value a, value b) { acc ^= (a & b); }
  static value neg(value v) { return v; }
  static value one() { return 1; }
};

template <class R>
class ChainReducer {
 public:
  using C = typename R::value;
  using Entry = std::pair<std::int32_t, C>;
  using Vec = std::vector<Entry>;  // sorted by index, nonzero coefficients

  ChainReducer(const SimplicialComplex& X,
               const std::array<std::vector<std::uint8_t>, 4>& dead,
               int tracked)
      : X_(X), tracked_(tracked) {
    for (int d = 0; d <= 3; ++d) {
      int n = X.size(d);
      alive_[d].assign(n, 1);
      if (d < static_cast<int>(dead.size()) && !dead[d].empty())
        for (int i = 0; i < n; ++i)
          if (dead[d][i]) alive_[d][i] = 0;
    }
    for (int d = 1; d <= 3; ++d) {
      int n = X.size(d);
      int m = X.size(d - 1);
      cols_[d].resize(n);
      rows_[d].resize(m);
      row_nnz_[d].assign(m, 0);
      col_nnz_[d].assign(n, 0);
      for (int c = 0; c < n; ++c) {
        if (!alive_[d][c]) continue;
        Vec col;
        for (auto [f, sign] : X.boundary_of(d, c)) {
          if (!alive_[d - 1][f]) continue;
          C v = sign > 0 ? R::one() : R::neg(R::one());
          col.push_back({f, v});
        }
        std::sort(col.begin(), col.end());
        for (auto& [r, v] : col) {
          rows_[d][r].push_back(c);
          ++row_nnz_[d][r];
        }
        col_nnz_[d][c] = static_cast<int>(col.size());
        cols_[d][c] = std::move(col);
      }
    }
    int nk = X.size(tracked_);
    pi_.resize(nk);
    pi_rows_.resize(nk);
    iota_.resize(nk);
    for (int i = 0; i < nk; ++i) {
      if (!alive_[tracked_][i]) continue;
      pi_[i] = {{i, R::one()}};
      pi_rows_[i].push_back(i);
      iota_[i] = {{i, R::one()}};
    }
    seed_candidates();
  }

  void run() {
    while (!zero_fill_.empty() || !heap_.empty()) {
      if (!zero_fill_.empty()) {
        auto [d, c, r] = zero_fill_.front();
        zero_fill_.pop_front();
        attempt(d, c, r, true);
      } else {
        auto [cost, d, c, r] = heap_.top();
        heap_.pop();
        long long now = current_cost(d, c, r);
        if (now < 0) continue;  // gone or not a unit anymore
        if (now > -cost) {
          heap_.push({-now, d, c, r});
          continue;
        }
        attempt(d, c, r, false);
      }
    }
  }

  const std::array<std::vector<std::uint8_t>, 4>& alive() const {
    return alive_;
  }
  const Vec& column(int d, int c) const { return cols_[d][c]; }
  const Vec& pi(int orig) const { return pi_[orig]; }
  const Vec& iota(int cell) const { return iota_[cell]; }

 private:
  const SimplicialComplex& X_;
  int tracked_;
  std::array<std::vector<std::uint8_t>, 4> alive_;
  std::array<std::vector<Vec>, 4> cols_;
  std::array<std::vector<std::vector<std::int32_t>>, 4> rows_;
  std::array<std::vector<int>, 4> row_nnz_, col_nnz_;

  std::vector<Vec> pi_;
  std::vector<std::vector<std::int32_t>> pi_rows_;
  std::vector<Vec> iota_;

  std::deque<std::tuple<int, std::int32_t, std::int32_t>> zero_fill_;
  // (-cost, d, col, row); lazy validation at pop.
  std::priority_queue<std::tuple<long long, int, std::int32_t, std::int32_t>>
      heap_;
  Vec scratch_;

  static int find_entry(const Vec& v, std::int32_t idx) {
    auto it = std::lower_bound(
        v.begin(), v.end(), idx,
        [](const Entry& e, std::int32_t i) { return e.first < i; });
    if (it == v.end() || it->first != idx) return -1;
    return static_cast<int>(it - v.begin());
  }

  void seed_candidates() {
    for (int d = 1; d <= 3; ++d)
      for (int c = 0; c < X_.size(d); ++c)
        for (const auto& [r, v] : cols_[d][c])
          if (R::is_unit(v)) consider(d, c, r);
  }

  void consider(int d, std::int32_t c, std::int32_t r) {
    if (col_nnz_[d][c] == 1 || row_nnz_[d][r] == 1)
      zero_fill_.push_back({d, c, r});
    else
      heap_.push({-(static_cast<long long>(row_nnz_[d][r]) - 1) *
                      (col_nnz_[d][c] - 1),
                  d, c, r});
  }

  long long current_cost(int d, std::int32_t c, std::int32_t r) const {
    if (!alive_[d][c] || !alive_[d - 1][r]) return -1;
    int pos = find_entry(cols_[d][c], r);
    if (pos < 0 || !R::is_unit(cols_[d][c][pos].second)) return -1;
    return static_cast<long long>(row_nnz_[d][r] - 1) * (col_nnz_[d][c] - 1);
  }

  void attempt(int d, std::int32_t c, std::int32_t r, bool) {
    if (!alive_[d][c] || !alive_[d - 1][r]) return;
    int pos = find_entry(cols_[d][c], r);
    if (pos < 0 || !R::is_unit(cols_[d][c][pos].second)) return;
    eliminate(d, c, r, cols_[d][c][pos].second);
  }

  // target += factor * src; maintains counts, row lists, candidates.
  void col_update(int d, std::int32_t target, const Vec& src,
                  const C& factor) {
    Vec& dst = cols_[d][target];
    scratch_.clear();
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
      if (b == src.end() || (a != dst.end() && a->first < b->first)) {
        scratch_.push_back(*a++);
      } else if (a == dst.end() || a->first > b->first) {
        C v{};
        R::add_mul(v, factor, b->second);
        if (!R::is_zero(v)) {
          scratch_.push_back({b->first, v});
          rows_[d][b->first].push_back(target);
          ++row_nnz_[d][b->first];
          if (R::is_unit(v)) consider(d, target, b->first);
        }
        ++b;
      } else {
        C v = a->second;
        R::add_mul(v, factor, b->second);
        if (!R::is_zero(v)) {
          scratch_.push_back({a->first, v});
          if (R::is_unit(v)) consider(d, target, a->first);
        } else {
          --row_nnz_[d][a->first];
          maybe_row_singleton(d, a->first);
        }
        ++a;
        ++b;
      }
    }
    col_nnz_[d][target] = static_cast<int>(scratch_.size());
    dst.swap(scratch_);
    if (col_nnz_[d][target] == 1 && R::is_unit(dst[0].second))
      zero_fill_.push_back({d, target, dst[0].first});
  }

  void maybe_row_singleton(int d, std::int32_t r) {
    if (row_nnz_[d][r] != 1 || !alive_[d - 1][r]) return;
    for (std::int32_t c : rows_[d][r]) {
      if (!alive_[d][c]) continue;
      int pos = find_entry(cols_[d][c], r);
      if (pos < 0) continue;
      if (R::is_unit(cols_[d][c][pos].second))
        zero_fill_.push_back({d, c, r});
      return;
    }
  }

  void drop_entry(int d, std::int32_t c, std::int32_t r) {
    Vec& col = cols_[d][c];
    int pos = find_entry(col, r);
    if (pos < 0) return;
    col.erase(col.begin() + pos);
    --col_nnz_[d][c];
    --row_nnz_[d][r];
    if (col_nnz_[d][c] == 1 && alive_[d][c] && R::is_unit(col[0].second))
      zero_fill_.push_back({d, c, col[0].first});
    maybe_row_singleton(d, r);
  }

  void eliminate(int d, std::int32_t a, std::int32_t b, C unit) {
    Vec col_a = cols_[d][a];

    // Row b across the other columns.
    std::vector<std::pair<std::int32_t, C>> beta;
    {
      auto& list = rows_[d][b];
      std::vector<std::int32_t> kept;
      for (std::int32_t c : list) {
        if (!alive_[d][c] || c == a) continue;
        int pos = find_entry(cols_[d][c], b);
        if (pos < 0) continue;
        kept.push_back(c);
        beta.push_back({c, cols_[d][c][pos].second});
      }
      list = std::move(kept);
    }

    alive_[d][a] = 0;
    alive_[d - 1][b] = 0;

    // Schur update: col_c -= (beta_c / unit) * col_a.  The row-b entry of
    // col_c cancels exactly.
    for (const auto& [c, v] : beta) {
      C q = R::div_unit(v, unit);
      col_update(d, c, col_a, R::neg(q));
    }

    // Remove column a.
    for (const auto& [r, v] : col_a) {
      --row_nnz_[d][r];
      if (r != b) maybe_row_singleton(d, r);
    }
    cols_[d][a].clear();
    col_nnz_[d][a] = 0;

    // Row a of the next boundary matrix vanishes with the cell.
    if (d < 3) {
      for (std::int32_t c : rows_[d + 1][a]) {
        if (!alive_[d + 1][c]) continue;
        drop_entry(d + 1, c, a);
      }
      rows_[d + 1][a].clear();
    }
    // Column b of the previous boundary matrix vanishes with the cell.
    if (d - 1 >= 1) {
      for (const auto& [r, v] : cols_[d - 1][b]) {
        --row_nnz_[d - 1][r];
        maybe_row_singleton(d - 1, r);
      }
      cols_[d - 1][b].clear();
      col_nnz_[d - 1][b] = 0;
    }

    if (d - 1 == tracked_) {
      // Substitute b by -unit^-1 * (col_a without b) in every pi column.
      Vec gamma;
      gamma.reserve(col_a.size() - 1);
      for (const auto& [r, v] : col_a)
        if (r != b) gamma.push_back({r, v});
      auto& list = pi_rows_[b];
      for (std::int32_t p : list) {
        int pos = find_entry(pi_[p], b);
        if (pos < 0) continue;
        C coeff = pi_[p][pos].second;
        pi_[p].erase(pi_[p].begin() + pos);
        if (!gamma.empty()) {
          C factor = R::neg(R::div_unit(coeff, unit));
          merge_into(pi_[p], gamma, factor, p);
        }
      }
      list.clear();
      iota_[b].clear();
    } else if (d == tracked_) {
      for (const auto& [c, v] : beta) {
        C factor = R::neg(R::div_unit(v, unit));
        plain_merge(iota_[c], iota_[a], factor);
      }
      iota_[a].clear();
      auto& list = pi_rows_[a];
      for (std::int32_t p : list) {
        int pos = find_entry(pi_[p], a);
        if (pos >= 0) pi_[p].erase(pi_[p].begin() + pos);
      }
      list.clear();
    }
  }

  void merge_into(Vec& dst, const Vec& src, const C& factor,
                  std::int32_t pi_col) {
    scratch_.clear();
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
      if (b == src.end() || (a != dst.end() && a->first < b->first)) {
        scratch_.push_back(*a++);
      } else if (a == dst.end() || a->first > b->first) {
        C v{};
        R::add_mul(v, factor, b->second);
        if (!R::is_zero(v)) {
          scratch_.push_back({b->first, v});
          pi_rows_[b->first].push_back(pi_col);
        }
        ++b;
      } else {
        C v = a->second;
        R::add_mul(v, factor, b->second);
        if (!R::is_zero(v)) scratch_.push_back({a->first, v});
        ++a;
        ++b;
      }
    }
    dst.swap(scratch_);
  }

  static void plain_merge(Vec& dst, const Vec& src, const C& factor) {
    Vec out;
    out.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
      if (b == src.end() || (a != dst.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == dst.end() || a->first > b->first) {
        C v{};
        R::add_mul(v, factor, b->second);
        if (!R::is_zero(v)) out.push_back({b->first, v});
        ++b;
      } else {
        C v = a->second;
        R::add_mul(v, factor, b->second);
        if (!R::is_zero(v)) out.push_back({a->first, v});
        ++a;
        ++b;
      }
    }
    dst.swap(out);
  }
};

}  // namespace kf::detail
