#include "gf2.hpp"

#include "error.hpp"

namespace kf {

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitVec Gf2Matrix::apply(const BitVec& x) const {
  BitVec out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (row_[r] & x).count() % 2 != 0;
  return out;
}

Gf2Elim::Gf2Elim(const Gf2Matrix& A) : cols_(A.cols()) {
  int m = A.rows();
  echelon_rows_.reserve(m);
  ops_.reserve(m);
  for (int r = 0; r < m; ++r) {
    echelon_rows_.push_back(A.row(r));
    BitVec op(m);
    op[r] = true;
    ops_.push_back(op);
  }
  int lead = 0;
  for (int c = 0; c < cols_ && lead < m; ++c) {
    int pivot = -1;
    for (int r = lead; r < m; ++r)
      if (echelon_rows_[r][c]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(echelon_rows_[lead], echelon_rows_[pivot]);
    std::swap(ops_[lead], ops_[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r != lead && echelon_rows_[r][c]) {
        echelon_rows_[r] ^= echelon_rows_[lead];
        ops_[r] ^= ops_[lead];
      }
    }
    pivot_col_.push_back(c);
    ++lead;
  }
  // Kernel: one basis vector per non-pivot column.
  BitVec is_pivot(cols_);
  for (int c : pivot_col_) is_pivot[c] = true;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    BitVec k(cols_);
    k[c] = true;
    for (int r = 0; r < rank(); ++r)
      if (echelon_rows_[r][c]) k[pivot_col_[r]] = true;
    kernel_.push_back(std::move(k));
  }
}

std::optional<BitVec> Gf2Elim::solve(const BitVec& b) const {
  if (static_cast<int>(b.size()) != static_cast<int>(ops_.empty()
                                                         ? b.size()
                                                         : ops_[0].size()))
    fail(ErrorKind::BadArgument, "solve over GF(2): dimension mismatch");
  int m = static_cast<int>(echelon_rows_.size());
  BitVec x(cols_);
  for (int r = 0; r < m; ++r) {
    bool rhs = (ops_[r] & b).count() % 2 != 0;
    if (r < rank()) {
      if (rhs) x[pivot_col_[r]] = true;
    } else if (rhs) {
      return std::nullopt;  // inconsistent row 0 = 1
    }
  }
  return x;
}

std::optional<BitVec> solve_gf2(const Gf2Matrix& A, const BitVec& b) {
  if (static_cast<int>(b.size()) != A.rows())
    fail(ErrorKind::BadArgument,
         "solve_gf2: right-hand side length must equal the row count");
  return Gf2Elim(A).solve(b);
}

}  // namespace kf
