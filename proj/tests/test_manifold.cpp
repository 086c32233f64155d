#include <doctest.h>

#include "catalog.hpp"
#include "error.hpp"
#include "manifold.hpp"

using namespace kf;

namespace {

// Disk x S^1 with the wrap-around slab glued through a reflection of the
// square disk: a solid Klein bottle.
SimplicialComplex::Ptr solid_klein_bottle() {
  Base2D sq = cone_disk(4);
  std::vector<int> reflect = {0, 1, 4, 3, 2};  // fixes 1 and 3, swaps 2 and 4
  return layered_product(sq, 3, true, reflect);
}

}  // namespace

TEST_CASE("a single tetrahedron validates with four boundary triangles") {
  auto X = SimplicialComplex::build(4, {Simplex({0, 1, 2, 3})});
  ValidationReport rep = validate(*X);
  CHECK(rep.is_pseudomanifold);
  CHECK(rep.is_orientable);
  CHECK(rep.connected);
  CHECK(rep.links_ok());
  CHECK(rep.ok());
  SubcomplexRef b = boundary_subcomplex(*X);
  CHECK(b.cells[2].size() == 4);
}

TEST_CASE("three tetrahedra sharing a triangle are not a pseudomanifold") {
  auto X = SimplicialComplex::build(6, {Simplex({0, 1, 2, 3}),
                                        Simplex({0, 1, 2, 4}),
                                        Simplex({0, 1, 2, 5})});
  ValidationReport rep = validate(*X);
  CHECK(!rep.is_pseudomanifold);
  bool listed = false;
  for (const auto& s : rep.bad_simplices)
    if (s == Simplex({0, 1, 2})) listed = true;
  CHECK(listed);
}

TEST_CASE("the solid Klein bottle is a pseudomanifold but not orientable") {
  auto X = solid_klein_bottle();
  ValidationReport rep = validate(*X);
  CHECK(rep.is_pseudomanifold);
  CHECK(rep.links_ok());
  CHECK(!rep.is_orientable);
  CHECK(!rep.orientation_obstruction.empty());
  CHECK_THROWS_AS(orient(*X), Error);
  try {
    orient(*X);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidComplex);
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
  CHECK_THROWS_AS(CompactModel3::build(X), Error);
}

TEST_CASE("orientation of a single tetrahedron is the normalization sign") {
  auto X = SimplicialComplex::build(4, {Simplex({0, 1, 2, 3})});
  CHECK(orient(*X) == std::vector<int>{1});
  CHECK(orient(*X, -1) == std::vector<int>{-1});
}

TEST_CASE("orientation is coherent and unique up to a global sign") {
  Fixture f = generate({Family::SolidTorus, KnotSelector::Core});
  auto X = f.model->complex();
  std::vector<int> s = orient(*X);
  // Coherence: induced orientations cancel on every interior triangle.
  std::vector<int> sum(X->size(2), 0);
  std::vector<int> count(X->size(2), 0);
  for (int t = 0; t < X->size(3); ++t) {
    const Simplex& tet = X->cell(3, t);
    for (int i = 0; i <= 3; ++i) {
      int fidx = X->index_of(tet.face_omitting(i));
      sum[fidx] += s[t] * (i % 2 == 0 ? 1 : -1);
      ++count[fidx];
    }
  }
  for (int fidx = 0; fidx < X->size(2); ++fidx)
    if (count[fidx] == 2) CHECK(sum[fidx] == 0);
  // Flipped normalization negates everything.
  std::vector<int> neg = orient(*X, -1);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(neg[i] == -s[i]);
}

TEST_CASE("boundary of a valid model is a closed surface of even chi") {
  for (const auto& spec : default_catalog()) {
    Fixture f = generate(spec);
    auto B = f.model->boundary_complex();
    std::vector<int> ecof(B->size(1), 0);
    for (int t = 0; t < B->size(2); ++t)
      for (auto [e, sgn] : B->boundary_of(2, t)) ++ecof[e];
    for (int e = 0; e < B->size(1); ++e) CHECK(ecof[e] == 2);
    CHECK(B->euler_characteristic() % 2 == 0);
  }
}

TEST_CASE("locally finite H1 fixtures") {
  Fixture st = generate({Family::SolidTorus, KnotSelector::Core});
  CHECK(locally_finite_h1(*st.model, Ring::Z)->trivial());

  Fixture ball = generate({Family::Ball, KnotSelector::Contractible});
  CHECK(locally_finite_h1(*ball.model, Ring::Z)->trivial());

  CatalogSpec s{Family::LensPunctured, KnotSelector::TorsionGenerator};
  s.p = 3;
  s.q = 1;
  Fixture lens = generate(s);
  GroupPtr g = locally_finite_h1(*lens.model, Ring::Z);
  CHECK(g->betti == 0);
  REQUIRE(g->torsion.size() == 1);
  CHECK(g->torsion[0] == 3);
}

TEST_CASE("interior vertices are exactly those off the boundary") {
  Fixture f = generate({Family::Ball, KnotSelector::Contractible});
  int interior = 0;
  for (int i = 0; i < f.model->complex()->size(0); ++i) {
    int v = f.model->complex()->cell(0, i).v[0];
    if (f.model->vertex_interior(v)) ++interior;
  }
  CHECK(interior == 3);  // the middle-layer inner triangle
}
