#pragma once

#include "dcr/instance.hpp"

namespace dcr {

// Diameter 1: every terminal pair needs a direct operating link, so
// R = prod over unordered terminal pairs of p(uv), with p(uv) = 0 for a
// missing edge. O(k^2) rational operations, no state enumeration.
ExactProbability reliability_d1(const NetworkInstance& instance);

// Two terminals u,v at diameter 2:
// R = 1 - (1 - p(uv)) prod over w != u,v of (1 - p(uw) p(wv)).
// O(n) rational operations, no state enumeration.
ExactProbability reliability_k2_d2(const NetworkInstance& instance);

}  // namespace dcr
