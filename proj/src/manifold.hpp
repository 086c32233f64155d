#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "homology.hpp"
#include "simplicial.hpp"

namespace kf {

struct ValidationReport {
  bool is_pseudomanifold = false;
  bool is_orientable = false;
  bool connected = false;
  int components = 0;
  std::vector<Simplex> bad_simplices;       // purity/coface violations
  std::vector<int> vertex_link_failures;    // vertices with bad links
  std::string orientation_obstruction;      // dual cycle description

  bool links_ok() const { return vertex_link_failures.empty(); }
  bool ok() const {
    return is_pseudomanifold && is_orientable && links_ok() && connected;
  }
  std::string summary() const;
};

// Full combinatorial-manifold validation: purity, triangle coface counts,
// vertex links (disk or sphere), connectivity, orientability.
ValidationReport validate(const SimplicialComplex& X);

// Coherent orientation signs per tetrahedron, propagated through the dual
// graph; the first tetrahedron of each component is normalized to
// `first_sign`.  Throws InvalidComplex naming an obstructing tetrahedron
// cycle when none exists.
std::vector<int> orient(const SimplicialComplex& X, int first_sign = 1);

// Boundary subcomplex: triangles contained in exactly one tetrahedron, plus
// faces.
SubcomplexRef boundary_subcomplex(const SimplicialComplex& X);

// Triangulated compact oriented 3-manifold with boundary; the open manifold
// under study is its interior.  Immutable after construction.
class CompactModel3 {
 public:
  using Ptr = std::shared_ptr<const CompactModel3>;

  // Validates and orients; throws InvalidComplex when the report fails.
  static Ptr build(SimplicialComplex::Ptr X, int first_sign = 1);

  const SimplicialComplex::Ptr& complex() const { return complex_; }
  const std::vector<int>& orientation() const { return orientation_; }
  const ValidationReport& report() const { return report_; }
  const SubcomplexRef& boundary_ref() const { return boundary_ref_; }
  const SimplicialComplex::Ptr& boundary_complex() const { return boundary_; }
  bool vertex_interior(int v) const { return !on_boundary_[v]; }

  // Memoized homology of the model (and of the pair rel boundary).
  GroupPtr homology(int k, Ring ring, bool rel_boundary) const;

 private:
  SimplicialComplex::Ptr complex_;
  std::vector<int> orientation_;
  ValidationReport report_;
  SubcomplexRef boundary_ref_;
  SimplicialComplex::Ptr boundary_;
  std::vector<bool> on_boundary_;

  mutable std::mutex cache_mu_;
  mutable std::map<std::tuple<int, int, int>, GroupPtr> cache_;
};

// H_1^infty of the open interior, computed as H_1(model, boundary; ring).
// Only tame manifolds (interiors of compact triangulated models) are
// representable here; that restriction is inherent to this realization.
GroupPtr locally_finite_h1(const CompactModel3& M, Ring ring);

}  // namespace kf
