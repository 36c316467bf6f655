#pragma once

#include <cstdint>
#include <vector>

#include "seqknap/instance.hpp"

namespace seqknap {

struct GenParams {
    int max_types = 5;
    int max_knapsacks = 3;
    std::vector<Count> chain = {1, 2, 4, 8};
    Count max_bound = 3;
    Count max_capacity = 12;
};

// Deterministic per seed; the output always validates. Values stay strictly
// positive, and gains collide often enough that multi-member blocks show up.
Instance gen_random(std::uint64_t seed, const GenParams& params = {});

} // namespace seqknap
