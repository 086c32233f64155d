#include "decide.hpp"

#include <sstream>

#include "error.hpp"

namespace kf {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Realizable:
      return "Realizable";
    case Outcome::NotRealizable:
      return "NotRealizable";
    case Outcome::PreconditionFailed:
      return "PreconditionFailed";
  }
  return "?";
}

GroupShape shape_of(const GroupPtr& G) {
  return {G->betti, G->torsion};
}

std::string GroupShape::str(Ring ring) const {
  std::ostringstream os;
  if (ring == Ring::Z2) {
    os << "Z2^" << betti;
    return os.str();
  }
  if (betti == 0 && torsion.empty()) return "0";
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

Verdict decide(const CompactModel3& M, const EdgeLoop& K) {
  Verdict v;
  v.knot_cycle = loop_cycle(M.complex(), K, Ring::Z);

  GroupPtr locfin = M.homology(1, Ring::Z, true);
  GroupPtr h1 = M.homology(1, Ring::Z, false);
  GroupPtr h1m2 = M.homology(1, Ring::Z2, false);
  v.locfin_shape = shape_of(locfin);
  v.h1_shape = shape_of(h1);
  v.h1_mod2_shape = shape_of(h1m2);

  HomologyClass loc = class_of(v.knot_cycle, locfin);
  v.locfin_coords = loc.coords;
  HomologyClass kappa = class_of(v.knot_cycle, h1);
  v.kappa_coords = kappa.coords;
  HomologyClass kappa2 = mod2_reduce(kappa, h1m2);
  v.kappa2_coords = kappa2.coords;

  if (!loc.is_zero()) {
    v.outcome = Outcome::PreconditionFailed;
  } else if (kappa2.is_zero()) {
    v.outcome = Outcome::NotRealizable;
  } else {
    v.outcome = Outcome::Realizable;
  }
  return v;
}

CrossCheckReport cross_check(const CompactModel3& M, const EdgeLoop& K) {
  Verdict v = decide(M, K);
  if (v.outcome == Outcome::PreconditionFailed)
    fail(ErrorKind::BadArgument,
         "cross_check requires a knot that is null in the locally finite H1");

  CrossCheckReport rep;
  GroupPtr h1m2 = M.homology(1, Ring::Z2, false);
  Chain kcyc2 = chain_mod2(v.knot_cycle);
  HomologyClass kappa2 = class_of(kcyc2, h1m2);

  ExteriorData E = build_exterior(M, K);
  OffsetSolutionSet offsets = preferred_offsets(E);
  rep.offsets = offsets;

  auto push = [&](const std::string& name, bool applicable, bool pass,
                  const std::string& detail) {
    rep.items.push_back({name, applicable, pass, detail});
    if (applicable && !pass)
      fail(ErrorKind::Internal, "consistency check failed: " + name +
                                    (detail.empty() ? "" : " (" + detail + ")"));
  };

  // (a) A null-class knot admits a preferred framing offset.
  push("preferred-framing-exists", true,
       offsets.kind != OffsetSolutionSet::Kind::Empty, offsets.str());

  // (b) If the mod-2 knot class vanishes, every preferred longitude has
  // zero mod-2 class in the exterior.  Only the parity of the offset
  // matters, so representatives of the parities present suffice.
  bool b_applicable = kappa2.is_zero();
  bool b_pass = true;
  std::string b_detail;
  if (b_applicable) {
    std::vector<Int> ks;
    switch (offsets.kind) {
      case OffsetSolutionSet::Kind::Empty:
        break;
      case OffsetSolutionSet::Kind::All:
        ks = {0, 1};
        break;
      case OffsetSolutionSet::Kind::Affine:
        ks.push_back(offsets.base);
        if (offsets.period != 0 && offsets.period % 2 != 0)
          ks.push_back(offsets.base + offsets.period);
        break;
    }
    GroupPtr G2 = E.h1_exterior(Ring::Z2);
    for (const Int& k : ks) {
      HomologyClass lk = longitude_class(E, k, G2);
      if (!lk.is_zero()) {
        b_pass = false;
        std::ostringstream os;
        os << "offset " << k << " has nonzero mod-2 longitude class";
        b_detail = os.str();
        break;
      }
    }
  }
  push("longitude-mod2-vanishes", b_applicable, b_pass, b_detail);

  // (c) A nonzero mod-2 class admits an explicit extension functional.
  bool c_applicable = !kappa2.is_zero();
  bool c_pass = true;
  std::string c_detail;
  if (c_applicable) {
    Gf2Functional phi = construct_extension(kappa2);
    rep.extension_witness = phi;
    c_pass = evaluate(phi, kappa2) == 1;
    c_detail = c_pass ? "phi(kappa2) = 1" : "phi(kappa2) != 1";
  }
  push("extension-functional", c_applicable, c_pass, c_detail);

  // (d) The negative branch via the framing calculus: no functional sends
  // the zero class to the forced cable value 1.
  bool d_applicable = kappa2.is_zero();
  bool d_pass = true;
  if (d_applicable) {
    SigmaClass forced = cable_class({0});  // = 1 regardless of the input
    d_pass = !extension_exists(zero_class(h1m2), forced);
  }
  push("no-extension-for-null-class", d_applicable, d_pass, "");

  return rep;
}

}  // namespace kf
