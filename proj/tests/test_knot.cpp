#include <doctest.h>

#include <map>

#include "catalog.hpp"
#include "error.hpp"
#include "knot.hpp"

using namespace kf;

namespace {

const Fixture& cached_fixture(const CatalogSpec& spec) {
  static std::map<std::string, Fixture> cache;
  auto [it, inserted] = cache.try_emplace(spec.name());
  if (inserted) it->second = generate(spec);
  return it->second;
}

const ExteriorData& cached_exterior(const CatalogSpec& spec) {
  static std::map<std::string, ExteriorData> cache;
  auto it = cache.find(spec.name());
  if (it == cache.end()) {
    const Fixture& f = cached_fixture(spec);
    it = cache.emplace(spec.name(), build_exterior(*f.model, f.knot)).first;
  }
  return it->second;
}

CatalogSpec st_core() { return {Family::SolidTorus, KnotSelector::Core}; }

CatalogSpec st_double() {
  CatalogSpec s{Family::SolidTorus, KnotSelector::CorePower};
  s.n = 2;
  return s;
}

CatalogSpec ball_unknot() {
  return {Family::Ball, KnotSelector::Contractible};
}

CatalogSpec lens31() {
  CatalogSpec s{Family::LensPunctured, KnotSelector::TorsionGenerator};
  s.p = 3;
  s.q = 1;
  return s;
}

// Relocate a chain from the exterior complex into the subdivided model.
Chain into_subdivided(const ExteriorData& E, const Chain& c) {
  auto X = E.subdivided->complex();
  Chain out{X, c.degree, c.ring, {}};
  for (const auto& [idx, coeff] : c.coeffs) {
    int t = X->index_of(c.carrier->cell(c.degree, idx));
    REQUIRE(t >= 0);
    out.coeffs.push_back({t, coeff});
  }
  out.normalize();
  return out;
}

}  // namespace

TEST_CASE("knot_class examples") {
  const Fixture& st = cached_fixture(st_core());
  HomologyClass c = knot_class(*st.model, st.knot, Ring::Z);
  REQUIRE(c.coords.size() == 1);
  CHECK((c.coords[0] == 1 || c.coords[0] == -1));
  HomologyClass c2 = knot_class(*st.model, st.knot, Ring::Z2);
  CHECK(!c2.is_zero());

  const Fixture& dbl = cached_fixture(st_double());
  HomologyClass d = knot_class(*dbl.model, dbl.knot, Ring::Z);
  CHECK((d.coords[0] == 2 || d.coords[0] == -2));
  CHECK(knot_class(*dbl.model, dbl.knot, Ring::Z2).is_zero());

  const Fixture& ball = cached_fixture(ball_unknot());
  CHECK(knot_class(*ball.model, ball.knot, Ring::Z).is_zero());
}

TEST_CASE("edge loop validation rejects bad input") {
  const Fixture& st = cached_fixture(st_core());
  // Repeated vertex.
  CHECK_THROWS_AS(make_edge_loop(*st.model, {0, 10, 0}), Error);
  // Boundary vertex (5 is on the boundary pentagon of the disk).
  CHECK_THROWS_AS(make_edge_loop(*st.model, {5, 15, 25}), Error);
  // Missing edge.
  CHECK_THROWS_AS(make_edge_loop(*st.model, {0, 10, 21}), Error);
}

TEST_CASE("is_null_locally_finite examples") {
  CHECK(is_null_locally_finite(*cached_fixture(st_core()).model,
                               cached_fixture(st_core()).knot));
  CHECK(is_null_locally_finite(*cached_fixture(ball_unknot()).model,
                               cached_fixture(ball_unknot()).knot));
  const Fixture& lens = cached_fixture(lens31());
  CHECK(!is_null_locally_finite(*lens.model, lens.knot));
}

TEST_CASE("exterior of the solid torus core is a thickened torus") {
  const ExteriorData& E = cached_exterior(st_core());
  CHECK(E.subdivisions == 2);
  GroupPtr h1e = E.h1_exterior(Ring::Z);
  CHECK(h1e->betti == 2);
  CHECK(h1e->torsion.empty());

  // The neighborhood is a solid torus and the pieces tile the model.
  CHECK(E.nbhd_complex->euler_characteristic() == 0);
  GroupPtr h1n = homology_group(E.nbhd_complex, std::nullopt, 1, Ring::Z);
  CHECK(h1n->betti == 1);
  CHECK(h1n->torsion.empty());
  int total = E.subdivided->complex()->size(3);
  CHECK(static_cast<int>(E.nbhd.cells[3].size()) +
            E.exterior->complex()->size(3) ==
        total);

  // Frontier torus.
  CHECK(E.torus_complex->euler_characteristic() == 0);
  GroupPtr h1t = homology_group(E.torus_complex, std::nullopt, 1, Ring::Z);
  CHECK(h1t->betti == 2);
}

TEST_CASE("meridian and longitude satisfy their postconditions") {
  for (const CatalogSpec& spec : {st_core(), ball_unknot()}) {
    CAPTURE(spec.name());
    const ExteriorData& E = cached_exterior(spec);

    // Both are cycles on the frontier torus inside the exterior.
    CHECK(boundary_chain(E.meridian).is_zero());
    CHECK(boundary_chain(E.longitude0).is_zero());

    auto torus = E.torus_complex;
    GroupPtr h1t = homology_group(torus, std::nullopt, 1, Ring::Z);
    auto on_torus = [&](const Chain& c) {
      Chain out{torus, 1, Ring::Z, {}};
      for (const auto& [idx, coeff] : c.coeffs) {
        int t = torus->index_of(c.carrier->cell(1, idx));
        REQUIRE(t >= 0);
        out.coeffs.push_back({t, coeff});
      }
      out.normalize();
      return out;
    };
    HomologyClass mu = class_of(on_torus(E.meridian), h1t);
    HomologyClass lam = class_of(on_torus(E.longitude0), h1t);

    // Primitivity of mu, and (lambda, mu) a basis: |det| = 1, which is the
    // unimodular intersection number on the torus.
    Int det = lam.coords[0] * mu.coords[1] - lam.coords[1] * mu.coords[0];
    CHECK((det == 1 || det == -1));
    CHECK(int_gcd(mu.coords[0], mu.coords[1]) == 1);

    // mu dies in the neighborhood, lambda maps to the knot class there.
    GroupPtr h1n = homology_group(E.nbhd_complex, std::nullopt, 1, Ring::Z);
    auto in_nbhd = [&](const Chain& c) {
      Chain out{E.nbhd_complex, 1, Ring::Z, {}};
      for (const auto& [idx, coeff] : c.coeffs) {
        int t = E.nbhd_complex->index_of(c.carrier->cell(1, idx));
        REQUIRE(t >= 0);
        out.coeffs.push_back({t, coeff});
      }
      out.normalize();
      return out;
    };
    CHECK(class_of(in_nbhd(E.meridian), h1n).is_zero());
    HomologyClass lam_n = class_of(in_nbhd(E.longitude0), h1n);
    Chain kcyc = cycle_of_vertex_loop(E.nbhd_complex, E.knot_loop, Ring::Z);
    HomologyClass kcls = class_of(kcyc, h1n);
    CHECK(class_eq(lam_n, kcls));
  }
}

TEST_CASE("unknot exterior in the ball has meridian-generated H1") {
  const ExteriorData& E = cached_exterior(ball_unknot());
  GroupPtr h1e = E.h1_exterior(Ring::Z);
  REQUIRE(h1e->betti == 1);
  CHECK(h1e->torsion.empty());
  HomologyClass mu = class_of(E.meridian, h1e);
  CHECK((mu.coords[0] == 1 || mu.coords[0] == -1));
}

TEST_CASE("knot neighborhoods of interior loops avoid the model boundary") {
  const ExteriorData& E = cached_exterior(ball_unknot());
  const auto& bnd = E.subdivided->boundary_ref();
  for (int d = 0; d <= 3; ++d)
    for (int idx : E.nbhd.cells[d]) CHECK(!bnd.contains(d, idx));
}

TEST_CASE("preferred offsets: every framing of the solid torus core works") {
  OffsetSolutionSet o = preferred_offsets(cached_exterior(st_core()));
  CHECK(o.kind == OffsetSolutionSet::Kind::All);
  CHECK(o.contains(-7));
  CHECK(o.contains(12));
}

TEST_CASE("preferred offsets: the unknot in the ball has a unique one") {
  OffsetSolutionSet o = preferred_offsets(cached_exterior(ball_unknot()));
  REQUIRE(o.kind == OffsetSolutionSet::Kind::Affine);
  CHECK(o.period == 0);
  CHECK(o.contains(o.base));
  CHECK(!o.contains(o.base + 1));
}

TEST_CASE("preferred offsets: lens torsion generator has none") {
  const ExteriorData& E = cached_exterior(lens31());
  OffsetSolutionSet o = preferred_offsets(E);
  CHECK(o.kind == OffsetSolutionSet::Kind::Empty);

  // Brute force: the relative group is Z/3, so any solution set would be a
  // congruence class modulo a divisor of 3; k in [-12, 12] covers every
  // residue, so checking the range is exhaustive.
  GroupPtr G = E.h1_rel_outer();
  for (int k = -12; k <= 12; ++k)
    CHECK(!longitude_class(E, k, G).is_zero());
}

TEST_CASE("a preferred framing exists whenever the knot is null at infinity") {
  for (const auto& spec : default_catalog()) {
    const Fixture& f = cached_fixture(spec);
    if (!is_null_locally_finite(*f.model, f.knot)) continue;
    CAPTURE(spec.name());
    OffsetSolutionSet o = preferred_offsets(cached_exterior(spec));
    CHECK(o.kind != OffsetSolutionSet::Kind::Empty);
  }
}

TEST_CASE("preferred longitudes of mod-2 null knots are mod-2 null") {
  for (const auto& spec : default_catalog()) {
    const Fixture& f = cached_fixture(spec);
    if (!is_null_locally_finite(*f.model, f.knot)) continue;
    if (!knot_class(*f.model, f.knot, Ring::Z2).is_zero()) continue;
    CAPTURE(spec.name());
    const ExteriorData& E = cached_exterior(spec);
    OffsetSolutionSet o = preferred_offsets(E);
    REQUIRE(o.kind != OffsetSolutionSet::Kind::Empty);
    GroupPtr G2 = E.h1_exterior(Ring::Z2);
    std::vector<Int> ks;
    if (o.kind == OffsetSolutionSet::Kind::All) {
      ks = {0, 1};
    } else {
      ks.push_back(o.base);
      if (o.period != 0) ks.push_back(o.base + o.period);
    }
    for (const Int& k : ks) {
      if (!o.contains(k)) continue;
      CHECK(longitude_class(E, k, G2).is_zero());
    }
  }
}

TEST_CASE("longitudes push forward to the knot class in the model") {
  for (const CatalogSpec& spec : {st_core(), ball_unknot()}) {
    CAPTURE(spec.name());
    const ExteriorData& E = cached_exterior(spec);
    auto X2 = E.subdivided->complex();
    GroupPtr g = homology_group(X2, std::nullopt, 1, Ring::Z);
    Chain kcyc = cycle_of_vertex_loop(X2, E.knot_loop, Ring::Z);
    HomologyClass kappa = class_of(kcyc, g);
    for (int k : {-1, 0, 2}) {
      Chain lk = chain_add(E.longitude0, chain_scale(E.meridian, k));
      HomologyClass pushed = class_of(into_subdivided(E, lk), g);
      CHECK(class_eq(pushed, kappa));
    }
  }
}

TEST_CASE("offset equation solver handles torsion congruences") {
  auto G = std::make_shared<GroupPresentation>();
  G->ring = Ring::Z;
  G->betti = 1;
  G->torsion = {2, 6};
  auto cls = [&](std::vector<Int> v) {
    return HomologyClass{G, std::move(v)};
  };
  // Free coordinate forces k = -2; torsion parts must agree.
  {
    OffsetSolutionSet o =
        solve_offset_equation(G, cls({2, 0, 2}), cls({1, 1, 1}));
    REQUIRE(o.kind == OffsetSolutionSet::Kind::Affine);
    CHECK(o.period == 0);
    CHECK(o.base == -2);
  }
  // Pure congruences merge: k odd and 2k = 4 mod 6 gives k = 5 mod 6.
  {
    OffsetSolutionSet o =
        solve_offset_equation(G, cls({0, 1, 2}), cls({0, 1, 2}));
    REQUIRE(o.kind == OffsetSolutionSet::Kind::Affine);
    CHECK(o.period == 6);
    CHECK(o.contains(5));
    CHECK(!o.contains(3));
  }
  // Inconsistent free coordinate.
  {
    OffsetSolutionSet o =
        solve_offset_equation(G, cls({1, 0, 0}), cls({2, 0, 0}));
    CHECK(o.kind == OffsetSolutionSet::Kind::Empty);
  }
  // No constraints at all.
  {
    OffsetSolutionSet o =
        solve_offset_equation(G, cls({0, 0, 0}), cls({0, 0, 0}));
    CHECK(o.kind == OffsetSolutionSet::Kind::All);
  }
  // Unsolvable congruence: 2k = 1 mod 2.
  {
    OffsetSolutionSet o =
        solve_offset_equation(G, cls({0, 1, 0}), cls({0, 0, 0}));
    CHECK(o.kind == OffsetSolutionSet::Kind::Empty);
  }
}
