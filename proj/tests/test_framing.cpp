#include <doctest.h>

#include "catalog.hpp"
#include "error.hpp"
#include "framing.hpp"

using namespace kf;

TEST_CASE("one meridional twist flips the framing class") {
  CHECK(twist({0}, 1).value == 1);
  CHECK(twist({1}, 1).value == 0);
}

TEST_CASE("twist table matches (c + n) mod 2") {
  for (int c : {0, 1})
    for (int n = -5; n <= 5; ++n) {
      int want = ((c + n) % 2 + 2) % 2;
      CHECK(twist({c}, n).value == want);
    }
  // Two full twists are trivial.
  CHECK(twist({1}, 2).value == 1);
  CHECK(twist({0}, 0).value == 0);
}

TEST_CASE("the cable class is the generator regardless of the input") {
  CHECK(cable_class({0}).value == 1);  // 2*0 + 1
  CHECK(cable_class({1}).value == 1);  // 2*1 + 1 = 3 = 1
  // Image is a constant, so iterating stays there.
  CHECK(cable_class(cable_class({0})).value == 1);
  CHECK(cable_class(cable_class({1})).value == 1);
  // Literal formula.
  for (int c : {0, 1}) CHECK(cable_class({c}).value == (2 * c + 1) % 2);
}

TEST_CASE("extension criterion on explicit classes") {
  Fixture tt = generate({Family::ThickenedTorus, KnotSelector::Core});
  GroupPtr g2 = tt.model->homology(1, Ring::Z2, false);
  REQUIRE(g2->betti == 2);

  HomologyClass zero = zero_class(g2);
  HomologyClass e1{g2, {1, 0}};
  HomologyClass e12{g2, {1, 1}};

  // The zero homomorphism always extends the zero target.
  CHECK(extension_exists(zero, {0}));
  CHECK(extension_exists(e1, {0}));
  // A nonzero class can hit 1; the zero class cannot.
  CHECK(extension_exists(e1, {1}));
  CHECK(extension_exists(e12, {1}));
  CHECK(!extension_exists(zero, {1}));

  // Witnesses satisfy their defining equation.
  Gf2Functional phi = construct_extension(e1);
  CHECK(evaluate(phi, e1) == 1);
  Gf2Functional psi = construct_extension(e12);
  CHECK(evaluate(psi, e12) == 1);
  // For e1 + e2 the functional is one of (1,0), (0,1).
  bool is10 = psi.coefficients[0] && !psi.coefficients[1];
  bool is01 = !psi.coefficients[0] && psi.coefficients[1];
  CHECK((is10 || is01));

  CHECK_THROWS_AS(construct_extension(zero), Error);
}

TEST_CASE("extension criterion agrees with functional enumeration") {
  // Over every catalog model: phi exists with phi(kappa2) = c iff some of
  // the 2^d functionals evaluates to c on kappa2.
  for (const auto& spec : default_catalog()) {
    CAPTURE(spec.name());
    Fixture f = generate(spec);
    GroupPtr g2 = f.model->homology(1, Ring::Z2, false);
    int d = g2->rank();
    REQUIRE(d <= 12);
    Chain kcyc = loop_cycle(f.model->complex(), f.knot, Ring::Z2);
    HomologyClass kappa2 = class_of(kcyc, g2);
    for (int target : {0, 1}) {
      bool brute = false;
      for (unsigned mask = 0; mask < (1u << d) && !brute; ++mask) {
        int val = 0;
        for (int i = 0; i < d; ++i)
          if ((mask >> i) & 1 && kappa2.coords[i] % 2 != 0) val ^= 1;
        brute = val == target;
      }
      CHECK(extension_exists(kappa2, {target}) == brute);
    }
  }
}

TEST_CASE("extension criterion in a trivial group") {
  Fixture ball = generate({Family::Ball, KnotSelector::Contractible});
  GroupPtr g2 = ball.model->homology(1, Ring::Z2, false);
  REQUIRE(g2->trivial());
  HomologyClass zero = zero_class(g2);
  CHECK(extension_exists(zero, {0}));
  CHECK(!extension_exists(zero, {1}));
}

TEST_CASE("bit-level criterion matches the class-level one") {
  BitVec k2(3);
  k2[0] = true;
  k2[2] = true;
  CHECK(extension_exists_bits(k2, true));
  CHECK(extension_exists_bits(k2, false));
  Gf2Functional phi = construct_extension_bits(k2);
  int val = 0;
  for (int i = 0; i < 3; ++i)
    if (phi.coefficients[i] && k2[i]) val ^= 1;
  CHECK(val == 1);
  BitVec zero(3);
  CHECK(!extension_exists_bits(zero, true));
  CHECK_THROWS_AS(construct_extension_bits(zero), Error);
}
