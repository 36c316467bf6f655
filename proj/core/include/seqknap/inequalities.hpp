#pragma once

#include <map>
#include <string>
#include <vector>

#include "seqknap/enumerate.hpp"

namespace seqknap {

enum class Choice : char { alpha = 'a', beta = 'b' };

// One alpha/beta pick per active (type, class >= 2nd) pair of the target
// family. The class-1 coefficients are always 1 and carry no choice.
struct CoefficientSelection {
    std::map<std::pair<int, int>, Choice> a; // keyed (type, class)

    // concatenated picks in (class, type) ascending order, rendered as the
    // usual greek letters
    std::string tag() const;

    bool operator==(const CoefficientSelection&) const = default;
    auto operator<=>(const CoefficientSelection&) const = default;
};

// Shared evaluation state for one family and one selection: the chain of
// active positions in evaluation order, per-position crowding sizes, and the
// memo for the recursive rhs function.
class GContext {
public:
    GContext(RestrictedProblem problem, CoefficientSelection selection);

    const RestrictedProblem& problem() const { return problem_; }
    const CoefficientSelection& selection() const { return selection_; }
    const std::vector<std::pair<int, int>>& chain() const { return chain_; } // (type, class)

    // the recursive rhs at an explicit starting point; S aggregates the
    // capacities of parts >= b
    Count g(int k, int b, Count S);

    // coefficient increments of one active position under the downstream
    // selection
    std::pair<Count, Count> alpha_beta(int k, int b);

    // the position's own pick applied to alpha_beta
    Count coefficient(int k, int b);

private:
    Count eval(size_t pos, Count S);
    Count eval_next(size_t pos, Count S);
    Count crowding(size_t pos); // cached floor-size at the position
    size_t position_of(int k, int b) const;

    RestrictedProblem problem_;
    CoefficientSelection selection_;
    std::vector<std::pair<int, int>> chain_;
    std::vector<Count> crowding_cache_;
    std::vector<char> crowding_known_;
    std::map<std::pair<size_t, Count>, Count> memo_;
    Count base_units_ = 0;
};

// One aggregated-space inequality: sum of coef * per-class totals <= rhs.
struct YInequality {
    std::map<std::pair<int, int>, Rat> coefficients; // (type, class) -> weight
    Count rhs = 0;
    CoefficientSelection selection;

    Rat lhs_value(const AssignmentY& y) const;

    bool operator==(const YInequality& o) const {
        return coefficients == o.coefficients && rhs == o.rhs;
    }
};

// The unit-class family member: coefficient 1 on every active type, rhs from
// the greedy fill total.
YInequality base_inequality(const RestrictedProblem& p);

// Convenience wrappers over GContext for one-off queries (1-based style
// callers pass explicit k and b, 0-based here).
Count g_value(GContext& ctx, int k, int b, Count S);
std::pair<Count, Count> alpha_beta(GContext& ctx, int k, int b);

// All inequalities of the family over types 0..k, classes 0..b, capacities F:
// every alpha/beta selection over the active positions, deduplicated by
// coefficient vector and rhs. max_selections caps the enumeration.
std::vector<YInequality> generate_I(const MspInstance& msp, int k, int b, std::vector<Count> F,
                                    Count max_selections = 1'000'000);

struct ConditionReport {
    Count points_checked = 0;
    Count optima_checked = 0;
    // (inequality index, offending point)
    std::vector<std::pair<size_t, AssignmentY>> validity_violations;
    // optima covered by no tight inequality
    std::vector<AssignmentY> coverage_violations;

    bool clean() const { return validity_violations.empty() && coverage_violations.empty(); }
};

// Sweeps every feasible well-ordered prefix-maximal point of the problem:
// each must satisfy every inequality, and each optimum must meet at least one
// with equality.
ConditionReport check_conditions(const std::vector<YInequality>& inequalities,
                                 const RestrictedProblem& p, Count budget = 1'000'000);

// The full outer description over the knapsack variables: for every item
// subset, normalize, build its family, lift back. Non-negativity is implicit.
std::vector<LinearInequalityX> describe_polytope(const Instance& inst, Count subset_cap = 4096);

} // namespace seqknap
