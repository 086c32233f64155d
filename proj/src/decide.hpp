#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framing.hpp"
#include "knot.hpp"

namespace kf {

enum class Outcome { Realizable, NotRealizable, PreconditionFailed };

const char* outcome_name(Outcome o);

// Shape of a group for reporting.
struct GroupShape {
  int betti = 0;
  std::vector<Int> torsion;
  std::string str(Ring ring) const;
};
GroupShape shape_of(const GroupPtr& G);

// Decision result with the evidence that produced it.
struct Verdict {
  Outcome outcome = Outcome::PreconditionFailed;

  GroupShape h1_shape, h1_mod2_shape, locfin_shape;
  std::vector<Int> kappa_coords;   // [K] in H1(M; Z)
  std::vector<Int> kappa2_coords;  // [K] in H1(M; Z2)
  std::vector<Int> locfin_coords;  // [K] in H1(M, dM; Z)
  Chain knot_cycle;                // evidence cycle on the model complex
};

// The realizability decision: PreconditionFailed when K is not null in the
// locally finite H1; otherwise Realizable iff the mod-2 class is nonzero.
Verdict decide(const CompactModel3& M, const EdgeLoop& K);

// Consistency checks tying the decision to the framing calculus; these are
// bug detectors, so a failed check throws rather than reporting.
struct CrossCheckReport {
  struct Item {
    std::string name;
    bool applicable = false;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  std::optional<OffsetSolutionSet> offsets;
  std::optional<Gf2Functional> extension_witness;
};

CrossCheckReport cross_check(const CompactModel3& M, const EdgeLoop& K);

}  // namespace kf
