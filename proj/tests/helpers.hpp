#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seqknap/enumerate.hpp"
#include "seqknap/errors.hpp"
#include "seqknap/generator.hpp"
#include "seqknap/inequalities.hpp"
#include "seqknap/instance.hpp"
#include "seqknap/oracle.hpp"

namespace testutil {

// the six-type three-knapsack instance used as the running example across
// the suite: sizes (1,2,2,2,4,4), values (4,28,15,14,28,32), bounds
// (2,4,8,7,2,1), capacities (7,2,6)
inline seqknap::Instance worked_instance() {
    using seqknap::Rat;
    return seqknap::validate_instance({{1, Rat(4), 2, 0},
                                       {2, Rat(28), 4, 0},
                                       {2, Rat(15), 8, 0},
                                       {2, Rat(14), 7, 0},
                                       {4, Rat(28), 2, 0},
                                       {4, Rat(32), 1, 0}},
                                      {7, 2, 6});
}

inline seqknap::MspInstance worked_msp() {
    const seqknap::Instance inst = worked_instance();
    return seqknap::to_msp(inst, seqknap::maximal_block_partition(inst));
}

struct CorpusEntry {
    std::uint64_t seed = 0;
    seqknap::Instance inst;
};

// 200 seeded instances whose full solution space enumerates within the point
// budget; built once per binary
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        for (std::uint64_t seed = 1; out.size() < 200 && seed <= 4000; ++seed) {
            seqknap::Instance inst = seqknap::gen_random(seed);
            try {
                seqknap::enumerate_feasible_x(inst, 1'000'000, [](const seqknap::AssignmentX&) {});
            } catch (const seqknap::budget_exceeded_error&) {
                continue;
            }
            out.push_back({seed, std::move(inst)});
        }
        return out;
    }();
    return entries;
}

// every alpha/beta pick vector over the active positions of the family at
// (p.k, p.b); slot order matches the family generator
inline std::vector<seqknap::CoefficientSelection>
all_selections(const seqknap::RestrictedProblem& p) {
    std::vector<std::pair<int, int>> slots; // (type, class)
    for (int q = 1; q <= p.b; ++q)
        for (int w = 0; w <= p.k; ++w)
            if (p.active(w, q)) slots.emplace_back(w, q);
    std::vector<seqknap::CoefficientSelection> out;
    for (unsigned long long mask = 0; mask < (1ull << slots.size()); ++mask) {
        seqknap::CoefficientSelection sel;
        for (size_t i = 0; i < slots.size(); ++i)
            sel.a[slots[i]] =
                ((mask >> i) & 1) ? seqknap::Choice::beta : seqknap::Choice::alpha;
        out.push_back(std::move(sel));
    }
    return out;
}

// per-(type, class) totals in a compact comparable form
inline std::vector<std::vector<seqknap::Count>> totals(const seqknap::AssignmentY& y) {
    return y.class_totals();
}

} // namespace testutil
