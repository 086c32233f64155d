#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gf2.hpp"
#include "int_matrix.hpp"
#include "simplicial.hpp"

namespace kf {

struct GroupPresentation;
using GroupPtr = std::shared_ptr<const GroupPresentation>;

// Coordinates of a homology class in a group's stored basis: the free block
// first (exact integers), then the torsion block (reduced into [0, d_i)).
struct HomologyClass {
  GroupPtr group;
  std::vector<Int> coords;

  bool is_zero() const;
};

// Finitely generated abelian group with explicit representative cycles.
// Immutable after computation; safe to share across threads.
struct GroupPresentation {
  Ring ring = Ring::Z;
  int betti = 0;
  std::vector<Int> torsion;  // d_i >= 2, d_i | d_{i+1}
  std::vector<Chain> basis;  // betti free cycles, then torsion cycles

  SimplicialComplex::Ptr carrier;
  int degree = 0;
  bool relative = false;

  int rank() const { return betti + static_cast<int>(torsion.size()); }
  bool trivial() const { return rank() == 0; }

  struct Solver;
  std::shared_ptr<const Solver> solver;

  GroupPresentation();
  ~GroupPresentation();
};

// H_k(X; ring) or H_k(X, A; ring) when A is present.  A must reference cells
// of X.  Representative cycles are chains on X (relative cycles when A is
// present).
GroupPtr homology_group(SimplicialComplex::Ptr X,
                        const std::optional<SubcomplexRef>& A, int k,
                        Ring ring);

// Coordinates of the cycle z in G's basis; z must be a cycle (boundary
// supported in A for relative groups) on the complex G was computed from.
HomologyClass class_of(const Chain& z, const GroupPtr& G);

// Image of an integral class under H_1(.;Z) -> H_1(.;Z2); G2 must come from
// the same complex, subcomplex and degree.
HomologyClass mod2_reduce(const HomologyClass& c, const GroupPtr& G2);

// Matrix of the inclusion-induced map with respect to the stored bases;
// column j holds the coordinates of the image of source basis cycle j.
// The source carrier must be a subcomplex of the target carrier (cells are
// matched by vertex tuples).
IntMatrix induced_map(const GroupPtr& source, const GroupPtr& target);

HomologyClass zero_class(const GroupPtr& G);
HomologyClass class_add(const HomologyClass& a, const HomologyClass& b);
HomologyClass class_negate(const HomologyClass& a);
HomologyClass class_scale(const HomologyClass& a, const Int& s);
bool class_eq(const HomologyClass& a, const HomologyClass& b);

// Representative cycle: sum of coords times basis cycles.
Chain representative(const HomologyClass& c);

}  // namespace kf
