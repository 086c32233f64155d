#pragma once

#include "gf2.hpp"
#include "homology.hpp"

namespace kf {

// Element of pi_1(SO(3)), identified with Z/2.  The artifact never measures
// a frame map geometrically; it tracks these classes symbolically and
// applies the arithmetic relations between them.
struct SigmaClass {
  int value = 0;  // 0 or 1

  bool operator==(const SigmaClass&) const = default;
};

// Effect of n full meridional twists on a framing class.
SigmaClass twist(SigmaClass c, const Int& n);

// Class of the revolution framing of the (2,1)-cable: 2c + 1, always the
// generator.
SigmaClass cable_class(SigmaClass c);

// Z2-valued functional on H1(M; Z2), representing a homomorphism
// H1(M; Z) -> Z2 through the mod-2 reduction.
struct Gf2Functional {
  BitVec coefficients;  // over the basis of H1(M; Z2)
};

// Pairing <phi, x> in Z2.
int evaluate(const Gf2Functional& phi, const HomologyClass& x);

// True iff some functional phi on H1(M; Z2) satisfies phi(kappa2) = c;
// decided by solving the one-row GF(2) system.
bool extension_exists(const HomologyClass& kappa2, SigmaClass c);
bool extension_exists_bits(const BitVec& kappa2, bool target);

// A functional with phi(kappa2) = 1; requires kappa2 != 0.
Gf2Functional construct_extension(const HomologyClass& kappa2);
Gf2Functional construct_extension_bits(const BitVec& kappa2);

}  // namespace kf
