#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "int_matrix.hpp"
#include "ints.hpp"

namespace kf {

// A k-simplex as a strictly increasing tuple of vertex ids, k <= 3.
struct Simplex {
  std::array<int, 4> v{-1, -1, -1, -1};
  std::int8_t k = -1;

  Simplex() = default;
  Simplex(std::initializer_list<int> verts);
  static Simplex from_sorted(const int* verts, int count);
  static Simplex from_unsorted(std::vector<int> verts);  // sorts, rejects dups

  int dim() const { return k; }
  int size() const { return k + 1; }
  int operator[](int i) const { return v[i]; }
  bool contains(int vertex) const;
  Simplex face_omitting(int i) const;

  friend bool operator<(const Simplex& a, const Simplex& b);
  friend bool operator==(const Simplex& a, const Simplex& b);
  std::string str() const;
};

// Reference to a subcomplex of some parent complex, as sorted cell-index
// lists per dimension.
struct SubcomplexRef {
  std::array<std::vector<int>, 4> cells;

  bool contains(int dim, int idx) const;
  bool empty() const;
  void sort_unique();
};

// Immutable simplicial complex, closed under faces.  Cell tables are kept in
// lexicographic order, which is the canonical ordering used by all matrices.
class SimplicialComplex {
 public:
  using Ptr = std::shared_ptr<const SimplicialComplex>;

  // Builds the closure of the given cells.  `vertex_count` fixes the vertex
  // id space (ids may be sparse; only ids appearing in cells become
  // 0-cells).
  static Ptr build(int vertex_count, const std::vector<Simplex>& cells);

  int vertex_count() const { return vertex_count_; }
  int dim() const;
  int size(int k) const { return static_cast<int>(table_[k].size()); }
  const Simplex& cell(int k, int idx) const { return table_[k][idx]; }
  const std::vector<Simplex>& cells(int k) const { return table_[k]; }
  int index_of(const Simplex& s) const;  // -1 when absent
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  // Faces of cell (k, idx) with their incidence signs, ordered as in the
  // boundary formula.
  std::vector<std::pair<int, int>> boundary_of(int k, int idx) const;

  IntMatrix boundary_matrix(int k) const;  // 1 <= k <= 3
  long long euler_characteristic() const;

  bool same_tables(const SimplicialComplex& other) const;

 private:
  int vertex_count_ = 0;
  std::array<std::vector<Simplex>, 4> table_;
};

enum class Ring { Z, Z2 };

// A simplicial chain; for Ring::Z2 the coefficients are kept in {0,1}.
struct Chain {
  SimplicialComplex::Ptr carrier;
  int degree = 0;
  Ring ring = Ring::Z;
  std::vector<std::pair<int, Int>> coeffs;  // (cell index, coefficient)

  void normalize();
  bool is_zero() const { return coeffs.empty(); }
  Int coeff_of(int idx) const;
};

Chain make_chain(SimplicialComplex::Ptr X, int degree, Ring ring,
                 std::vector<std::pair<int, Int>> coeffs);
Chain chain_add(const Chain& a, const Chain& b);
Chain chain_scale(const Chain& a, const Int& s);
Chain boundary_chain(const Chain& c);
Chain chain_mod2(const Chain& c);  // reinterpret over Z2

// Builds the 1-cycle of an oriented closed edge path given by its vertex
// sequence.
Chain cycle_of_vertex_loop(SimplicialComplex::Ptr X,
                           const std::vector<int>& loop, Ring ring);

// ---------------------------------------------------------------------------
// Barycentric subdivision.

struct Subdivision {
  SimplicialComplex::Ptr coarse;
  SimplicialComplex::Ptr fine;

  // Fine vertex id of the barycenter of coarse cell (k, idx).  Coarse
  // vertices keep their ids.
  std::array<std::vector<int>, 4> barycenter;

  // Smallest coarse cell carrying fine cell (k, idx).
  std::array<std::vector<std::pair<int, int>>, 4> carrier;

  // Chain-level subdivision operator: cycles map to homologous cycles.
  Chain map_chain(const Chain& coarse_chain) const;

  // Image of a coarse vertex loop as a fine vertex loop (through edge
  // barycenters).
  std::vector<int> map_vertex_loop(const std::vector<int>& loop) const;

 private:
  friend Subdivision barycentric_subdivide(SimplicialComplex::Ptr X);
  // Signed fine cells forming the subdivision of coarse cell (k, idx).
  std::array<std::vector<std::vector<std::pair<int, int>>>, 4> chain_op_;
};

Subdivision barycentric_subdivide(SimplicialComplex::Ptr X);

// ---------------------------------------------------------------------------
// Stars and subcomplex utilities.

// Closed star of S: all cells meeting S, plus their faces.  Throws when S is
// not a subcomplex of X.
SubcomplexRef star_neighborhood(const SimplicialComplex& X,
                                const SubcomplexRef& S);

// Standalone complex on the referenced cells (vertex id space shared with
// the parent).
SimplicialComplex::Ptr extract(const SimplicialComplex& X,
                               const SubcomplexRef& ref);

// Closure of `cells` inside X as a reference.
SubcomplexRef closure_ref(const SimplicialComplex& X,
                          const std::vector<Simplex>& cells);

// Cells of `sub` located inside `X` (tuple-wise); throws when missing.
SubcomplexRef locate(const SimplicialComplex& X, const SimplicialComplex& sub);

// Link of a vertex as a standalone complex (cells opposite v in the cells
// containing v).
SimplicialComplex::Ptr vertex_link(const SimplicialComplex& X, int v);

// Connected components over the 1-skeleton; returns component id per vertex
// id that occurs as a 0-cell (map keyed by vertex id).
int component_count(const SimplicialComplex& X);

}  // namespace kf
