// Property sweeps over the 200 generated instances: solver vs exhaustive
// search, profit correspondence across the aggregation, candidate-range
// coverage of the maximal well-behaved points, and the generated inequality
// families against every enumerable point.

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "seqknap/aopt.hpp"
#include "seqknap/inequalities.hpp"
#include "seqknap/io.hpp"
#include "seqknap/oracle.hpp"

using namespace seqknap;
using testutil::corpus;

namespace {

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// inequality rows compiled down to (validated type position, coefficient)
// terms so a sweep can evaluate them on per-type totals instead of walking
// the whole assignment cube for every row
struct CompiledRow {
    std::vector<std::pair<size_t, Rat>> terms;
    Rat rhs;
};

std::vector<CompiledRow> compile_rows(const std::vector<LinearInequalityX>& rows,
                                      const Instance& inst) {
    std::vector<size_t> position_of(inst.items.size(), 0);
    for (size_t j = 0; j < inst.items.size(); ++j)
        position_of[static_cast<size_t>(inst.items[j].original_index)] = j;
    std::vector<CompiledRow> out;
    for (const LinearInequalityX& row : rows) {
        CompiledRow c;
        c.rhs = row.rhs;
        for (const auto& [orig, coef] : row.coef_by_original)
            c.terms.emplace_back(position_of[static_cast<size_t>(orig)], coef);
        out.push_back(std::move(c));
    }
    return out;
}

bool violates_any(const std::vector<CompiledRow>& rows, const std::vector<Count>& totals) {
    for (const CompiledRow& row : rows) {
        Rat lhs = 0;
        for (const auto& [j, coef] : row.terms) lhs += coef * totals[j];
        if (lhs > row.rhs) return true;
    }
    return false;
}

} // namespace

TEST_CASE("corpus: the solver matches exhaustive search on every instance") {
    for (const auto& entry : corpus()) {
        CAPTURE(entry.seed);
        const auto start = std::chrono::steady_clock::now();
        const AssignmentX best = aopt_solve(entry.inst);
        const BruteResult brute = brute_optimum(entry.inst);
        const CapacityPartition part = capacity_partition(entry.inst);
        CHECK(x_feasible(best, entry.inst, part));
        CHECK(best.value(entry.inst) == brute.best);
        CHECK(elapsed_seconds(start) < 5.0);
    }
}

TEST_CASE("corpus: profits correspond across the aggregation both ways") {
    for (const auto& entry : corpus()) {
        CAPTURE(entry.seed);
        const Instance& inst = entry.inst;
        const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
        const RestrictedProblem full = full_problem(msp);
        const CapacityPartition part = capacity_partition(inst);

        Count profit_mismatches = 0;
        enumerate_feasible_x(inst, 1'000'000, [&](const AssignmentX& x) {
            const AssignmentY y = x_to_y(x, inst, msp);
            if (y.profit(msp) != x.value(inst)) ++profit_mismatches;
        });
        CHECK(profit_mismatches == 0);

        Rat best_y = 0;
        Count rebuild_failures = 0;
        enumerate_feasible_y(full, 1'000'000, [&](const AssignmentY& y) {
            const Rat p = y.profit(msp);
            best_y = std::max(best_y, p);
            const AssignmentX x = y_to_x(y, inst, msp);
            if (!x_feasible(x, inst, part) || x.value(inst) < p) ++rebuild_failures;
        });
        CHECK(rebuild_failures == 0);
        CHECK(best_y == brute_optimum(inst).best);
    }
}

TEST_CASE("corpus: every maximal well-behaved point replays inside the candidate ranges") {
    for (const auto& entry : corpus()) {
        CAPTURE(entry.seed);
        const MspInstance msp = to_msp(entry.inst, maximal_block_partition(entry.inst));
        const RestrictedProblem full = full_problem(msp);
        // a few instances have no prefix-optimal well-ordered point at the
        // maximum profit at all; the coverage claim is then vacuous
        const std::vector<AssignmentY> optima = mo_oo(full);
        const std::vector<AssignmentY> candidates = enumerate_optima(full);
        for (const AssignmentY& y : optima) {
            const RangeWalkReport replay = check_ranges_along(full, y);
            CAPTURE(replay.note);
            CHECK(replay.ok);
            CHECK(std::find(candidates.begin(), candidates.end(), y) != candidates.end());
        }
    }
}

TEST_CASE("corpus: generated families hold and tightly cover the optima") {
    for (const auto& entry : corpus()) {
        CAPTURE(entry.seed);
        const MspInstance msp = to_msp(entry.inst, maximal_block_partition(entry.inst));
        const RestrictedProblem full = full_problem(msp);
        const auto rows = generate_I(msp, msp.type_count() - 1, msp.level_count() - 1,
                                     msp.part_caps);
        const ConditionReport report = check_conditions(rows, full);
        CHECK(report.points_checked > 0);
        // optima_checked can be zero: a few instances have no well-behaved
        // point at the maximum profit, and coverage is then vacuous
        CHECK(report.validity_violations.empty());
        CHECK(report.coverage_violations.empty());
    }
}

TEST_CASE("corpus: the full description holds for every well-behaved assignment") {
    for (const auto& entry : corpus()) {
        CAPTURE(entry.seed);
        const Instance& inst = entry.inst;
        const std::vector<CompiledRow> rows = compile_rows(describe_polytope(inst), inst);

        // cheap screen on per-type totals first; only a point that breaks a
        // row pays for the well-behavedness classification
        Count escapees = 0;
        enumerate_feasible_x(inst, 1'000'000, [&](const AssignmentX& x) {
            if (!violates_any(rows, x.item_counts())) return;
            if (!filter_opt_ordered({x}, inst).empty()) ++escapees;
        });
        CHECK(escapees == 0);
    }
}
