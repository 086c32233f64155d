#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homology.hpp"
#include "manifold.hpp"

namespace kf {

// Oriented knot as a simple closed edge path through interior vertices of
// the model's 1-skeleton.
struct EdgeLoop {
  std::vector<int> vertices;  // cyclic; edge i runs vertices[i] -> [i+1]
};

// Validates closedness, simplicity, edge existence, interiority.
EdgeLoop make_edge_loop(const CompactModel3& M, std::vector<int> vertices);
EdgeLoop reversed(const EdgeLoop& K);
Chain loop_cycle(SimplicialComplex::Ptr X, const EdgeLoop& K, Ring ring);

// Class of [K] in H_1(model; ring).
HomologyClass knot_class(const CompactModel3& M, const EdgeLoop& K, Ring ring);

// True iff K is null in H_1(model, boundary; Z), the locally finite H_1 of
// the open interior.
bool is_null_locally_finite(const CompactModel3& M, const EdgeLoop& K);

// Solution set of an affine condition over the integers.
struct OffsetSolutionSet {
  enum class Kind { Empty, All, Affine };
  Kind kind = Kind::Empty;
  Int base = 0;    // Affine
  Int period = 0;  // Affine; 0 encodes a unique solution

  bool contains(const Int& k) const;
  std::string str() const;
  bool operator==(const OffsetSolutionSet&) const = default;
};

// Knot exterior with its boundary torus and the meridian / reference
// longitude chains.
struct ExteriorData {
  CompactModel3::Ptr subdivided;  // model after the subdivisions used
  int subdivisions = 2;
  std::vector<int> knot_loop;  // image of K in the subdivided model

  SubcomplexRef nbhd;  // N(K), the closed star of the subdivided knot
  SimplicialComplex::Ptr nbhd_complex;

  CompactModel3::Ptr exterior;
  SubcomplexRef torus_in_ext;  // frontier torus, as cells of the exterior
  SubcomplexRef outer_in_ext;  // image of the model boundary
  SimplicialComplex::Ptr torus_complex;

  Chain meridian;    // 1-chains on the exterior complex
  Chain longitude0;  // reference longitude (gauge: defined up to meridians)

  // Memoized groups of the exterior.
  GroupPtr h1_exterior(Ring ring) const;          // absolute
  GroupPtr h1_rel_outer() const;                  // H1(E, outer; Z)
  GroupPtr h1_rel_outer_ring(Ring ring) const;

  struct Cache;
  std::shared_ptr<Cache> cache;
};

// Subdivides (twice, three times on retry), takes the closed star as N(K),
// forms the exterior and identifies the meridian and a reference longitude.
ExteriorData build_exterior(const CompactModel3& M, const EdgeLoop& K);

// All k such that longitude0 + k * meridian is null in H1(exterior, outer).
OffsetSolutionSet preferred_offsets(const ExteriorData& E);
OffsetSolutionSet preferred_offsets(const CompactModel3& M, const EdgeLoop& K);

// The class of longitude0 + k * meridian in the given group over the
// exterior complex.
HomologyClass longitude_class(const ExteriorData& E, const Int& k,
                              const GroupPtr& G);

// Exposed for testing: solve l + k m = 0 coordinate-wise in G.
OffsetSolutionSet solve_offset_equation(const GroupPtr& G,
                                        const HomologyClass& l,
                                        const HomologyClass& m);

}  // namespace kf
