#pragma once

#include <vector>

#include "seqknap/instance.hpp"

namespace seqknap {

// One synthetic item built by the level-up grouping pass. `members` counts
// original item types inside it; the true size of the members may fall short
// of assigned_size when the final run is partial.
struct GroupedItem {
    Count assigned_size = 1;
    Rat value;
    std::vector<std::pair<int, Count>> members; // (type index, units), type ascending

    Count true_size(const Instance& inst) const;
    // flattened member type indices, one per unit; used for deterministic ties
    std::vector<int> member_key() const;
};

// Sorts by value non-increasing (ties: lexicographically smallest member key)
// and merges runs of (target / current size) consecutive entries into one
// synthetic item of the target size. A final partial run still gets the full
// target size.
std::vector<GroupedItem> group_items(std::vector<GroupedItem> pool, Count current_size,
                                     Count target_size);

// The recursive exact solver: per size class, place the best available
// (grouped) items into that class's capacity slices, group the leftovers
// upward, recurse. First-fit over knapsacks in index order.
AssignmentX aopt_solve(const Instance& inst);

// Same algorithm with per-type bounds replaced by the multiset `keep`
// (count per type index). Throws infeasible_keep_error when keep cannot be
// assigned completely.
AssignmentX aopt_solve_on_set(const Instance& inst, const std::vector<Count>& keep);

// True iff no feasible reshuffle of the same item multiset beats any value
// prefix. Exhaustive over reassignments, use on tiny instances only.
bool is_opt_solution(const AssignmentX& x, const Instance& inst, Count budget = 1'000'000);

// True iff no slice hosts a bundle of two or more items whose total size and
// value match a single item type that is unassigned or sits in a higher
// class slice.
bool is_ordered_solution(const AssignmentX& x, const Instance& inst, Count budget = 1'000'000);

// Repeatedly swaps offending bundles with their single-item counterparts
// until is_ordered_solution holds. Preserves every prefix value and prefix
// size exactly.
AssignmentX make_ordered(AssignmentX x, const Instance& inst, Count budget = 1'000'000);

} // namespace seqknap
