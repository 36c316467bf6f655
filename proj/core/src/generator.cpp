#include "seqknap/generator.hpp"

#include <algorithm>
#include <random>

namespace seqknap {

Instance gen_random(std::uint64_t seed, const GenParams& params) {
    std::mt19937_64 rng(seed);
    const auto pick = [&](Count lo, Count hi) {
        return std::uniform_int_distribution<Count>(lo, hi)(rng);
    };

    const int n = static_cast<int>(pick(1, params.max_types));
    const int m = static_cast<int>(pick(1, params.max_knapsacks));

    std::vector<ItemType> items;
    for (int j = 0; j < n; ++j) {
        ItemType it;
        // the first item anchors the chain at the unit size
        const auto si = j == 0 ? size_t{0}
                               : static_cast<size_t>(pick(0, static_cast<Count>(params.chain.size()) - 1));
        it.size = params.chain[si];
        it.bound = pick(1, params.max_bound);
        const Count mode = pick(0, 5);
        if (mode <= 2) {
            // proportional to size, so equal gains collide across sizes and
            // blocks with several members form
            it.value = Rat(pick(1, 5)) * it.size;
        } else if (mode == 3) {
            it.value = Rat(pick(1, 9), 2) * it.size;
        } else {
            it.value = Rat(pick(1, 20));
        }
        items.push_back(it);
    }

    std::vector<Count> capacities;
    for (int i = 0; i < m; ++i) capacities.push_back(pick(0, params.max_capacity));
    if (std::all_of(capacities.begin(), capacities.end(), [](Count c) { return c == 0; }))
        capacities.front() = pick(1, params.max_capacity);

    return validate_instance(std::move(items), std::move(capacities));
}

} // namespace seqknap
