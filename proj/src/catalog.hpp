#pragma once

#include <array>
#include <string>
#include <vector>

#include "decide.hpp"
#include "knot.hpp"
#include "manifold.hpp"

namespace kf {

enum class Family {
  Ball,
  SolidTorus,
  ThickenedTorus,
  Handlebody,
  LensPunctured,
  S1xS2Punctured,
};

enum class KnotSelector {
  Core,
  CorePower,
  Contractible,
  TorsionGenerator,
  HandleCore,
};

// Parameter ranges: genus <= 4, p <= 7 with gcd(p, q) = 1, |n| <= 4.
struct CatalogSpec {
  Family family = Family::Ball;
  KnotSelector knot = KnotSelector::Contractible;
  int genus = 2;   // Handlebody
  int p = 3;       // LensPunctured
  int q = 1;       // LensPunctured
  int n = 2;       // CorePower exponent
  int handle = 1;  // HandleCore index (1-based)

  std::string name() const;
};

// Expected group shape of a fixture, derived by hand from the long exact
// sequences of the defining decompositions.
struct ExpectedHomology {
  GroupShape h0, h1, h2;        // over Z
  int h0_mod2 = 1, h1_mod2 = 0, h2_mod2 = 0;
  GroupShape h1_rel;            // H1(model, boundary; Z)
};

struct Fixture {
  std::string name;
  CompactModel3::Ptr model;
  EdgeLoop knot;
  ExpectedHomology expect;
  Outcome expected_verdict = Outcome::PreconditionFailed;
};

Fixture generate(const CatalogSpec& spec);

// The enumerated corpus used by the test suites.
std::vector<CatalogSpec> default_catalog();

// Families parsed from CLI strings; throws BadArgument on unknown names.
Family family_from_string(const std::string& s);
KnotSelector selector_from_string(const std::string& s);
std::string family_to_string(Family f);
std::string selector_to_string(KnotSelector k);

// --- building blocks (exposed for tests) ---

// A triangulated surface piece: `n` vertices and triangles on them.
struct Base2D {
  int n = 0;
  std::vector<std::array<int, 3>> tris;
};

Base2D disk_with_inner_triangle();  // 6 vertices, interior triangle 0,1,2
Base2D disk_with_inner_pentagon();  // 10 vertices, interior ring 0..4
Base2D cone_disk(int rim);          // center 0, rim 1..rim
Base2D torus_seven_vertex();
Base2D octahedron_sphere();

// Layered product: vertex (v, layer) = layer * base.n + v; prisms are
// triangulated by the staircase ordered by the base vertex index.  With
// `cyclic`, layer `layers` wraps to 0 (layers >= 3); otherwise an interval.
// `twist` optionally relabels the base vertices across the wrap-around slab.
SimplicialComplex::Ptr layered_product(const Base2D& base, int layers,
                                       bool cyclic,
                                       const std::vector<int>& twist = {});

}  // namespace kf
