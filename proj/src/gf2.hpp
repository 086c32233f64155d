#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <vector>

namespace kf {

using BitVec = boost::dynamic_bitset<>;

// Dense bit-row matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}
  static Gf2Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return row_[r][c]; }
  void set(int r, int c, bool v) { row_[r][c] = v; }
  const BitVec& row(int r) const { return row_[r]; }
  BitVec& row(int r) { return row_[r]; }

  BitVec apply(const BitVec& x) const;  // A * x
  bool operator==(const Gf2Matrix& rhs) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BitVec> row_;
};

// One solution of A x = b over GF(2), or empty when the system is
// inconsistent.  Throws on a row/length mismatch.
std::optional<BitVec> solve_gf2(const Gf2Matrix& A, const BitVec& b);

// Row-echelon factorization kept around for repeated solves against a fixed
// matrix, plus a kernel basis.
class Gf2Elim {
 public:
  explicit Gf2Elim(const Gf2Matrix& A);
  int rank() const { return static_cast<int>(pivot_col_.size()); }
  std::optional<BitVec> solve(const BitVec& b) const;
  const std::vector<BitVec>& kernel_basis() const { return kernel_; }

 private:
  int cols_ = 0;
  std::vector<BitVec> echelon_rows_;  // augmented with row-op record
  std::vector<BitVec> ops_;           // row ops applied to reach echelon
  std::vector<int> pivot_col_;
  std::vector<BitVec> kernel_;
};

}  // namespace kf
