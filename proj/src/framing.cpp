#include "framing.hpp"

#include "error.hpp"

namespace kf {

SigmaClass twist(SigmaClass c, const Int& n) {
  Int r = (c.value + n) % 2;
  if (r < 0) r += 2;
  return {static_cast<int>(r)};
}

SigmaClass cable_class(SigmaClass c) {
  return {static_cast<int>((2 * c.value + 1) % 2)};
}

namespace {

BitVec class_bits(const HomologyClass& kappa2) {
  if (!kappa2.group || kappa2.group->ring != Ring::Z2)
    fail(ErrorKind::BadArgument, "sigma-framing criteria need a Z2 class");
  int d = kappa2.group->rank();
  BitVec bits(d);
  for (int i = 0; i < d; ++i)
    if (kappa2.coords[i] % 2 != 0) bits[i] = true;
  return bits;
}

Gf2Matrix row_system(const BitVec& kappa2) {
  int d = static_cast<int>(kappa2.size());
  Gf2Matrix A(1, d);
  for (int i = 0; i < d; ++i)
    if (kappa2[i]) A.set(0, i, true);
  return A;
}

}  // namespace

int evaluate(const Gf2Functional& phi, const HomologyClass& x) {
  int acc = 0;
  for (std::size_t i = 0; i < phi.coefficients.size(); ++i)
    if (phi.coefficients[i] && x.coords[i] % 2 != 0) acc ^= 1;
  return acc;
}

bool extension_exists_bits(const BitVec& kappa2, bool target) {
  BitVec b(1);
  b[0] = target;
  return solve_gf2(row_system(kappa2), b).has_value();
}

bool extension_exists(const HomologyClass& kappa2, SigmaClass c) {
  return extension_exists_bits(class_bits(kappa2), c.value != 0);
}

Gf2Functional construct_extension_bits(const BitVec& kappa2) {
  if (kappa2.none())
    fail(ErrorKind::BadArgument,
         "construct_extension: the mod-2 knot class is zero");
  BitVec b(1);
  b[0] = true;
  auto x = solve_gf2(row_system(kappa2), b);
  if (!x) fail(ErrorKind::Internal, "nonzero class admits no dual functional");
  return {*x};
}

Gf2Functional construct_extension(const HomologyClass& kappa2) {
  return construct_extension_bits(class_bits(kappa2));
}

}  // namespace kf
