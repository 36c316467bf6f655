#pragma once

#include <map>
#include <vector>

#include "seqknap/instance.hpp"

namespace seqknap {

// A set of equal-gain item types where every member's size is coverable by
// the smaller members' total capacity, so the whole set behaves like copies
// of its smallest member.
struct Block {
    std::vector<int> members; // item type indices, size ascending
    Count weight = 1;         // size of the smallest member
    Rat profit;               // value of the smallest member
    Count multiplicity = 0;   // total member size divided by weight
};

// Evaluates the coverability chain for an explicit candidate member set
// (indices sorted by size ascending).
bool is_block(const Instance& inst, const std::vector<int>& members);

// Groups types by exact gain, then greedily extends blocks within a gain
// class scanning sizes ascending. The result is the unique coarsest partition
// into blocks.
std::vector<Block> maximal_block_partition(const Instance& inst);

// The aggregated single-knapsack view: block types with weights f and profits
// p, per-class multiplicities, and one capacity per size class (the slice
// column sums).
struct MspInstance {
    std::vector<Block> blocks; // re-indexed: f ascending, p non-increasing on ties
    std::vector<Count> f;
    std::vector<Rat> p;
    std::vector<std::vector<Count>> tilde_b; // [type][class]
    std::vector<Count> part_caps;            // per class
    std::vector<Count> d;                    // size chain
    std::vector<int> block_of_type;          // original item type -> block index

    int type_count() const { return static_cast<int>(f.size()); }
    int level_count() const { return static_cast<int>(d.size()); }
    Rat gain(int w) const { return p[static_cast<size_t>(w)] / f[static_cast<size_t>(w)]; }
};

MspInstance to_msp(const Instance& inst, const std::vector<Block>& partition);

// Aggregated solutions: y[w][q][h] = items of block type w drawn from class q
// sitting in part h.
struct AssignmentY {
    std::vector<std::vector<std::vector<Count>>> y;

    static AssignmentY zeros(int types, int levels);

    int type_count() const { return static_cast<int>(y.size()); }
    int level_count() const { return y.empty() ? 0 : static_cast<int>(y[0].size()); }

    Rat profit(const MspInstance& msp) const;
    Rat prefix_profit(const MspInstance& msp, int h) const;
    // per (type, class) totals over parts
    std::vector<std::vector<Count>> class_totals() const;

    bool operator==(const AssignmentY&) const = default;
    auto operator<=>(const AssignmentY&) const = default;
};

// occupancy of one entry: size consumed in the part, rounded up to whole
// class-q chunks
Count occupancy(const MspInstance& msp, int w, int q, Count count);

// Checks the ceiling capacity constraint per part and the chunk bound per
// (type, class) against the full aggregated instance.
bool y_feasible(const AssignmentY& y, const MspInstance& msp);

AssignmentY x_to_y(const AssignmentX& x, const Instance& inst, const MspInstance& msp);

// Rebuilds a knapsack solution whose value is at least the aggregated profit
// (equal when no entry needs rounding). Throws infeasible_y_error when the
// input violates the aggregated constraints.
AssignmentX y_to_x(const AssignmentY& y, const Instance& inst, const MspInstance& msp);

// One linear inequality over the knapsack variables, keyed by original item
// index; applies to the per-type totals regardless of knapsack or part.
struct LinearInequalityX {
    std::map<int, Rat> coef_by_original;
    Rat rhs;

    Rat evaluate(const AssignmentX& x, const Instance& inst) const;
    bool operator==(const LinearInequalityX&) const = default;
    bool operator<(const LinearInequalityX& o) const {
        if (coef_by_original != o.coef_by_original) return coef_by_original < o.coef_by_original;
        return rhs < o.rhs;
    }
};

// Expands an aggregated-space inequality (coefficients on per-class totals of
// each block type) to the knapsack variables: each member of block w from
// class q inherits the coefficient scaled by d_q / f_w.
LinearInequalityX lift_inequality(const std::map<std::pair<int, int>, Rat>& coeffs, const Rat& rhs,
                                  const Instance& inst, const MspInstance& msp);

} // namespace seqknap
