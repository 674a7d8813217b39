#pragma once

#include <cstdint>

#include "hyperoct/partition.hpp"

namespace hyperoct {

// Irreducible character chi^lambda of S_n on the class of cycle type mu
// (Murnaghan-Nakayama rule, memoized; safe to call concurrently).
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

}  // namespace hyperoct
