#pragma once

#include <functional>
#include <vector>

#include "seqknap/enumerate.hpp"

namespace seqknap {

using XVisitor = std::function<void(const AssignmentX&)>;
using YVisitor = std::function<void(const AssignmentY&)>;

// Streams every feasible assignment, the empty one included. Each emitted
// point counts against the budget; going past it throws budget_exceeded_error.
// Returns the number of points.
Count enumerate_feasible_x(const Instance& inst, Count budget, const XVisitor& visit);

// Same over the aggregated variables of a (possibly cut-down) problem.
Count enumerate_feasible_y(const RestrictedProblem& p, Count budget, const YVisitor& visit);

// Aggregated feasibility against the cut-down multiplicities and capacities.
bool y_feasible(const AssignmentY& y, const RestrictedProblem& p);

struct BruteResult {
    Rat best;
    std::vector<AssignmentX> argmax;
};

// Exhaustive search over all feasible assignments; keeps every maximizer.
BruteResult brute_optimum(const Instance& inst, Count budget = 1'000'000);

// Prefix-profit dominance over every feasible redistribution of the same
// per-(type, class) totals across parts.
bool is_opt_y(const AssignmentY& y, const RestrictedProblem& p, Count budget = 1'000'000);

// True when no part hosts a smaller-class bundle that one spare same-profit
// class-q chunk could stand in for.
bool is_ordered_y(const AssignmentY& y, const RestrictedProblem& p, Count budget = 1'000'000);

std::vector<AssignmentX> filter_opt_ordered(const std::vector<AssignmentX>& points,
                                            const Instance& inst, Count budget = 1'000'000);
std::vector<AssignmentY> filter_opt_ordered(const std::vector<AssignmentY>& points,
                                            const RestrictedProblem& p, Count budget = 1'000'000);

// The maximum-value points among those that are prefix-optimal and
// well-ordered.
std::vector<AssignmentX> mo_oo(const Instance& inst, Count budget = 1'000'000);
std::vector<AssignmentY> mo_oo(const RestrictedProblem& p, Count budget = 1'000'000);

} // namespace seqknap
