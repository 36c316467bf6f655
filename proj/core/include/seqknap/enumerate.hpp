#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "seqknap/blocks.hpp"

namespace seqknap {

// A live state of the aggregated problem during the top-down decomposition:
// the remaining multiplicities per (type, class), the remaining part
// capacities, the largest class still in play (b) and the largest type with
// class-b items (k). Value type, cheap to copy per branch.
struct RestrictedProblem {
    MspInstance msp;
    std::vector<std::vector<Count>> avail; // [type][class]
    std::vector<Count> F;                  // per part
    int k = 0;
    int b = 0;

    Count delta(int h) const {
        return std::min(msp.d[static_cast<size_t>(h)], msp.d[static_cast<size_t>(b)]);
    }
    Count aggregate_from(int h) const;
    bool active(int w, int q) const {
        return avail[static_cast<size_t>(w)][static_cast<size_t>(q)] > 0;
    }
};

// The whole aggregated problem, nothing fixed yet.
RestrictedProblem full_problem(const MspInstance& msp);

// Universe cut down to types 0..k and classes 0..b with the given capacities.
// Checks the divisibility preconditions on F.
RestrictedProblem restricted_problem(const MspInstance& msp, int k, int b, std::vector<Count> F);

// Active types whose gain strictly dominates type j's, ascending.
std::vector<int> gain_dominators(const RestrictedProblem& p, int j);

// The per-class availability sizes for one type: how much dominating weight
// can crowd it out of each part prefix.
struct HProfile {
    std::vector<Count> f_bar; // dominating weight reachable in classes 0..g
    std::vector<Count> f_h;   // what remains after lower parts absorb their share
    std::vector<Count> v_min; // size absorbed by part g itself
};

HProfile h_profile(const RestrictedProblem& p, int j);

// Bracket for the dominating weight still unassigned when part g is reached:
// (floor(f_h/delta)*delta, f_h + delta).
std::pair<Count, Count> availability_bounds(const RestrictedProblem& p, int j, int g);

// Candidate counts for type w placed in part h (h >= p.b), drawn from class
// p.b. Never more than three values; every candidate keeps f_w * v divisible
// by delta_b.
std::vector<Count> value_range_at_part(const RestrictedProblem& p, int w, int h);

// Candidate values of y at (type p.k, class p.b, part p.b).
std::vector<Count> value_range_top(const RestrictedProblem& p);

// Candidate totals over all parts >= p.b for (type w, class p.b).
std::vector<Count> value_range_tail_for(const RestrictedProblem& p, int w);
std::vector<Count> value_range_tail(const RestrictedProblem& p);

// Applies the reduction for the already-fixed per-part values of type p.k
// (fixed[h - p.b] for h = p.b..l-1) and returns the candidate set for type
// p.k - 1 at part p.b.
std::vector<Count> next_type_range(const RestrictedProblem& p, const std::vector<Count>& fixed);

// The unique greedy fill when only unit-size classes remain (p.b == 0).
AssignmentY base_case(const RestrictedProblem& p);

// Walks types descending within each class, classes descending, branching
// over the per-part candidate sets filtered by the per-type total range;
// bottoms out at the base fill. Returns all candidate points (a superset of
// the true optimum set), deduplicated.
std::vector<AssignmentY> enumerate_optima(const RestrictedProblem& p, Count branch_budget = 1'000'000);

// Replays y through the same walk and verifies every fixed value sits inside
// the candidate set computed at that moment (and that no set exceeds three
// values). Returns false with a note on the first miss.
struct RangeWalkReport {
    bool ok = true;
    std::string note;
};
RangeWalkReport check_ranges_along(const RestrictedProblem& p, const AssignmentY& y);

} // namespace seqknap
