#pragma once

#include <vector>

#include "banet/claims.hpp"

namespace banet {

// Runs every verification claim and returns them in a fixed order. jobs > 1
// computes independent claims concurrently; results are identical either way.
std::vector<ClaimResult> run_verification_claims(int jobs = 1);

}  // namespace banet
