#pragma once

#include <vector>

#include "seqknap/rational.hpp"

namespace seqknap {

struct ItemType {
    Count size = 1;
    Rat value;
    Count bound = 1;
    // position in the user's input, 0-based; survives sorting so reports can
    // speak the caller's numbering
    int original_index = 0;
};

// A validated problem: items sorted by size ascending (value non-increasing
// within one size), sizes forming a divisibility chain starting at 1.
struct Instance {
    std::vector<ItemType> items;
    std::vector<Count> capacities;
    std::vector<Count> sizes; // distinct item sizes d_1 < ... < d_l

    int type_count() const { return static_cast<int>(items.size()); }
    int knapsack_count() const { return static_cast<int>(capacities.size()); }
    int level_count() const { return static_cast<int>(sizes.size()); }

    // size-class index (0-based) of an item type
    int item_class(int j) const;
    // size-class index of a size value; the size must be present
    int class_of_size(Count s) const;

    // exact gain v/s as a rational
    Rat gain(int j) const { return items[j].value / items[j].size; }
};

Instance validate_instance(std::vector<ItemType> raw_items, std::vector<Count> raw_capacities);

// Per-knapsack split of capacity into one slice per size class. Slice h only
// ever hosts items of size <= d_h, and d_h divides r[i][h].
struct CapacityPartition {
    std::vector<std::vector<Count>> r; // [knapsack][class]

    std::vector<Count> column_sums() const;
};

CapacityPartition capacity_partition(const Instance& inst);

// The subproblem seen by the first h+1 size classes: items of size <= d_h and
// the prefix slices of every knapsack (h is 0-based here).
Instance restrict_to_class(const Instance& inst, int h);

// Greedy largest-size-first extraction. Input: (size, multiplicity) pairs
// sorted by size descending, sizes from a divisibility chain; target must be
// at most the total and either a multiple of the largest size present or
// equal to the total. Because each size divides the next the greedy choice is
// exact: the result says how many units of each entry to take so the sizes
// sum to target. Throws if the target is unreachable.
std::vector<Count> greedy_exact_fill(const std::vector<std::pair<Count, Count>>& sizes_desc,
                                     Count target);

// Solutions of the knapsack formulation: x[i][j][h] = number of items of
// type j placed in slice h of knapsack i.
struct AssignmentX {
    std::vector<std::vector<std::vector<Count>>> x;

    static AssignmentX zeros(int knapsacks, int types, int levels);

    int knapsack_count() const { return static_cast<int>(x.size()); }
    int type_count() const { return x.empty() ? 0 : static_cast<int>(x[0].size()); }
    int level_count() const {
        return x.empty() || x[0].empty() ? 0 : static_cast<int>(x[0][0].size());
    }

    Rat value(const Instance& inst) const;
    // value of everything sitting in classes 0..h
    Rat prefix_value(const Instance& inst, int h) const;
    // total size of everything sitting in classes 0..h
    Count prefix_size(const Instance& inst, int h) const;
    // assigned multiset: count per item type
    std::vector<Count> item_counts() const;
    Count total_count() const;

    bool operator==(const AssignmentX&) const = default;
};

// Checks slice capacities, class eligibility (no item below its own class)
// and per-type bounds.
bool x_feasible(const AssignmentX& x, const Instance& inst, const CapacityPartition& part);

} // namespace seqknap
