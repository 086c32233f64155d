#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ints.hpp"

namespace kf {

// Sparse integer matrix with exact arbitrary-precision entries.  Zero entries
// are never stored; row/col indices are bounds-checked in debug builds.
class IntMatrix {
 public:
  using Key = std::pair<int, int>;

  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Int at(int r, int c) const;
  void set(int r, int c, Int value);
  void add_at(int r, int c, const Int& value);

  const std::map<Key, Int>& entries() const { return entries_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;
  IntMatrix transposed() const;

  std::vector<Int> apply(const std::vector<Int>& x) const;  // A * x

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<Key, Int> entries_;
};

// U * A * V = D with U, V unimodular and D diagonal, nonnegative, satisfying
// the divisibility chain d1 | d2 | ... (zeros trailing).
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

// Same decomposition with both inverses tracked, for callers that need to
// translate between the original and diagonal coordinates.
struct SnfFull {
  IntMatrix U, D, V, Uinv, Vinv;
  int rank = 0;
  std::vector<Int> diagonal() const;
};

SnfResult snf(const IntMatrix& A);
SnfFull snf_full(const IntMatrix& A);

// Integral solution of A x = b via a precomputed decomposition; empty when
// none exists.
std::optional<std::vector<Int>> solve_integer(const SnfFull& f,
                                              const std::vector<Int>& b);

// Exact determinant by fraction-free (Bareiss) elimination; square input.
Int det(const IntMatrix& A);

}  // namespace kf
