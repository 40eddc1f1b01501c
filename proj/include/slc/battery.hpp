#pragma once

#include "slc/extend.hpp"

namespace slc {

// Deterministic hand-built configurations driving every extension-recipe
// branch that random instances reach rarely or never: the relaxed 5-cycle
// attachments, the merged triangle pendant, the degenerate good-cycle
// ladder, the cubic-tail and K2,3 sub-branches, and so on. Each fixture's
// output is verified; a failure throws ContractError. Branch hits land in
// `cov` when given.
void run_planted_battery(BranchCoverage* cov);

}  // namespace slc
