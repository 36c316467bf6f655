#include "seqknap/oracle.hpp"

#include <algorithm>
#include <map>

#include "seqknap/aopt.hpp"
#include "seqknap/errors.hpp"

namespace seqknap {

namespace {

struct XCell {
    int j, i, h;
};

} // namespace

Count enumerate_feasible_x(const Instance& inst, Count budget, const XVisitor& visit) {
    const auto part = capacity_partition(inst);
    const int n = inst.type_count();
    const int m = inst.knapsack_count();
    const int l = inst.level_count();

    std::vector<XCell> cells;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            for (int h = inst.item_class(j); h < l; ++h) cells.push_back({j, i, h});

    AssignmentX x = AssignmentX::zeros(m, n, l);
    auto room = part.r;
    std::vector<Count> left(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) left[static_cast<size_t>(j)] = inst.items[static_cast<size_t>(j)].bound;

    Count emitted = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            if (emitted == budget) throw budget_exceeded_error(budget);
            ++emitted;
            visit(x);
            return;
        }
        const auto [j, i, h] = cells[idx];
        const Count s = inst.items[static_cast<size_t>(j)].size;
        const Count most = std::min(left[static_cast<size_t>(j)],
                                    room[static_cast<size_t>(i)][static_cast<size_t>(h)] / s);
        for (Count c = 0; c <= most; ++c) {
            x.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)] = c;
            left[static_cast<size_t>(j)] -= c;
            room[static_cast<size_t>(i)][static_cast<size_t>(h)] -= c * s;
            rec(idx + 1);
            room[static_cast<size_t>(i)][static_cast<size_t>(h)] += c * s;
            left[static_cast<size_t>(j)] += c;
            x.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)] = 0;
        }
    };
    rec(0);
    return emitted;
}

namespace {

struct YCell {
    int w, q, h;
};

// per-(type, class) budget in whole class-q chunks
Count chunk_budget(const RestrictedProblem& p, int w, int q) {
    return p.msp.f[static_cast<size_t>(w)] * p.avail[static_cast<size_t>(w)][static_cast<size_t>(q)] /
           p.msp.d[static_cast<size_t>(q)];
}

} // namespace

Count enumerate_feasible_y(const RestrictedProblem& p, Count budget, const YVisitor& visit) {
    const int t = p.msp.type_count();
    const int l = p.msp.level_count();

    std::vector<YCell> cells;
    for (int w = 0; w < t; ++w)
        for (int q = 0; q < l; ++q) {
            if (!p.active(w, q)) continue;
            for (int h = q; h < l; ++h) cells.push_back({w, q, h});
        }

    AssignmentY y = AssignmentY::zeros(t, l);
    std::vector<Count> occ_left = p.F;
    std::vector<std::vector<Count>> chunks_left(static_cast<size_t>(t),
                                                std::vector<Count>(static_cast<size_t>(l), 0));
    for (int w = 0; w < t; ++w)
        for (int q = 0; q < l; ++q)
            if (p.active(w, q)) chunks_left[static_cast<size_t>(w)][static_cast<size_t>(q)] = chunk_budget(p, w, q);

    Count emitted = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            if (emitted == budget) throw budget_exceeded_error(budget);
            ++emitted;
            visit(y);
            return;
        }
        const auto [w, q, h] = cells[idx];
        const Count fw = p.msp.f[static_cast<size_t>(w)];
        const Count dq = p.msp.d[static_cast<size_t>(q)];
        // a count v occupies ceil(fw v / dq) chunks of size dq in the part
        const Count by_chunks = chunks_left[static_cast<size_t>(w)][static_cast<size_t>(q)] * dq / fw;
        const Count by_room = (occ_left[static_cast<size_t>(h)] / dq) * dq / fw;
        const Count most = std::min(by_chunks, by_room);
        for (Count v = 0; v <= most; ++v) {
            const Count used = (fw * v + dq - 1) / dq;
            y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)] = v;
            occ_left[static_cast<size_t>(h)] -= used * dq;
            chunks_left[static_cast<size_t>(w)][static_cast<size_t>(q)] -= used;
            rec(idx + 1);
            chunks_left[static_cast<size_t>(w)][static_cast<size_t>(q)] += used;
            occ_left[static_cast<size_t>(h)] += used * dq;
            y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)] = 0;
        }
    };
    rec(0);
    return emitted;
}

bool y_feasible(const AssignmentY& y, const RestrictedProblem& p) {
    const int t = p.msp.type_count();
    const int l = p.msp.level_count();
    if (y.type_count() != t || y.level_count() != l) return false;

    for (int h = 0; h < l; ++h) {
        Count load = 0;
        for (int w = 0; w < t; ++w)
            for (int q = 0; q < l; ++q) {
                const Count v = y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)];
                if (v == 0) continue;
                if (v < 0 || q > h || !p.active(w, q)) return false;
                load += occupancy(p.msp, w, q, v);
            }
        if (load > p.F[static_cast<size_t>(h)]) return false;
    }
    for (int w = 0; w < t; ++w)
        for (int q = 0; q < l; ++q) {
            Count used = 0;
            const Count fw = p.msp.f[static_cast<size_t>(w)];
            const Count dq = p.msp.d[static_cast<size_t>(q)];
            for (int h = q; h < l; ++h) {
                const Count v = y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)];
                used += (fw * v + dq - 1) / dq;
            }
            if (used > (p.active(w, q) ? chunk_budget(p, w, q) : 0)) return false;
        }
    return true;
}

BruteResult brute_optimum(const Instance& inst, Count budget) {
    BruteResult out;
    out.best = 0;
    enumerate_feasible_x(inst, budget, [&](const AssignmentX& x) {
        const Rat v = x.value(inst);
        if (v > out.best) {
            out.best = v;
            out.argmax.clear();
        }
        if (v == out.best) out.argmax.push_back(x);
    });
    return out;
}

bool is_opt_y(const AssignmentY& y, const RestrictedProblem& p, Count budget) {
    const int t = p.msp.type_count();
    const int l = p.msp.level_count();
    const auto totals = y.class_totals();

    std::vector<Rat> mine(static_cast<size_t>(l));
    for (int h = 0; h < l; ++h) mine[static_cast<size_t>(h)] = y.prefix_profit(p.msp, h);

    // cells for one (w, q) with something to place, in part order; the last
    // part of each group swallows the remainder
    struct Group {
        int w, q;
        Count total;
    };
    std::vector<Group> groups;
    for (int w = 0; w < t; ++w)
        for (int q = 0; q < l; ++q)
            if (totals[static_cast<size_t>(w)][static_cast<size_t>(q)] > 0)
                groups.push_back({w, q, totals[static_cast<size_t>(w)][static_cast<size_t>(q)]});

    AssignmentY other = AssignmentY::zeros(t, l);
    std::vector<Count> occ_left = p.F;
    Count tried = 0;
    bool dominated = true;

    std::function<bool(size_t, int, Count, Count)> rec = [&](size_t gi, int h, Count left,
                                                             Count chunks) -> bool {
        // returns true when a strictly better prefix was found
        if (gi == groups.size()) {
            if (tried == budget) throw budget_exceeded_error(budget);
            ++tried;
            for (int hh = 0; hh < l; ++hh)
                if (other.prefix_profit(p.msp, hh) > mine[static_cast<size_t>(hh)]) return true;
            return false;
        }
        const auto& g = groups[gi];
        const Count fw = p.msp.f[static_cast<size_t>(g.w)];
        const Count dq = p.msp.d[static_cast<size_t>(g.q)];
        if (h == l) return false; // remainder not placed, dead branch
        const Count by_chunks = chunks * dq / fw;
        const Count by_room = (occ_left[static_cast<size_t>(h)] / dq) * dq / fw;
        Count most = std::min({left, by_chunks, by_room});
        for (Count v = 0; v <= most; ++v) {
            if (h == l - 1 && v != left) continue; // everything must land somewhere
            const Count used = (fw * v + dq - 1) / dq;
            other.y[static_cast<size_t>(g.w)][static_cast<size_t>(g.q)][static_cast<size_t>(h)] = v;
            occ_left[static_cast<size_t>(h)] -= used * dq;
            bool hit;
            if (v == left) {
                const auto& ng = gi + 1 < groups.size() ? groups[gi + 1] : g;
                hit = rec(gi + 1, gi + 1 < groups.size() ? ng.q : 0, gi + 1 < groups.size() ? ng.total : 0,
                          gi + 1 < groups.size() ? chunk_budget(p, ng.w, ng.q) : 0);
            } else {
                hit = rec(gi, h + 1, left - v, chunks - used);
            }
            occ_left[static_cast<size_t>(h)] += used * dq;
            other.y[static_cast<size_t>(g.w)][static_cast<size_t>(g.q)][static_cast<size_t>(h)] = 0;
            if (hit) return true;
        }
        return false;
    };

    if (!groups.empty()) {
        dominated = !rec(0, groups[0].q, groups[0].total, chunk_budget(p, groups[0].w, groups[0].q));
    }
    return dominated;
}

bool is_ordered_y(const AssignmentY& y, const RestrictedProblem& p, Count budget) {
    const int t = p.msp.type_count();
    const int l = p.msp.level_count();
    Count steps = 0;
    const auto spend = [&]() {
        if (steps == budget) throw search_space_too_large_error(budget);
        ++steps;
    };

    for (int h = 0; h < l; ++h) {
        for (int q = 1; q <= h && q < l; ++q) {
            const Count dq = p.msp.d[static_cast<size_t>(q)];
            // entries at part h from classes below q, as (type, class) pairs
            std::vector<std::pair<int, int>> small;
            for (int w = 0; w < t; ++w)
                for (int qq = 0; qq < q; ++qq)
                    if (y.y[static_cast<size_t>(w)][static_cast<size_t>(qq)][static_cast<size_t>(h)] > 0)
                        small.push_back({w, qq});
            if (small.empty()) continue;

            // spare class-q chunks of each type, counting both never-assigned
            // ones and those sitting above part h
            std::vector<Rat> spare_profit;
            for (int w = 0; w < t; ++w) {
                Count below = 0;
                for (int hh = q; hh <= h; ++hh)
                    below += y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(hh)];
                const Count fw = p.msp.f[static_cast<size_t>(w)];
                const Count have = p.avail[static_cast<size_t>(w)][static_cast<size_t>(q)] - below;
                if (have >= dq / fw) spare_profit.push_back(p.msp.gain(w) * dq);
            }
            if (spare_profit.empty()) continue;

            // subset search for a bundle of exactly one chunk's worth of size
            bool found = false;
            std::function<void(size_t, Count, Rat)> dig = [&](size_t idx, Count size, Rat profit) {
                if (found) return;
                spend();
                if (size == dq) {
                    for (const Rat& s : spare_profit)
                        if (s == profit) {
                            found = true;
                            return;
                        }
                    return;
                }
                if (idx == small.size()) return;
                const auto [w, qq] = small[idx];
                const Count fw = p.msp.f[static_cast<size_t>(w)];
                const Count cap = std::min(
                    y.y[static_cast<size_t>(w)][static_cast<size_t>(qq)][static_cast<size_t>(h)],
                    (dq - size) / fw);
                for (Count z = 0; z <= cap && !found; ++z)
                    dig(idx + 1, size + z * fw, profit + p.msp.p[static_cast<size_t>(w)] * z);
            };
            dig(0, 0, Rat(0));
            if (found) return false;
        }
    }
    return true;
}

std::vector<AssignmentX> filter_opt_ordered(const std::vector<AssignmentX>& points,
                                            const Instance& inst, Count budget) {
    std::vector<AssignmentX> out;
    for (const auto& x : points)
        if (is_opt_solution(x, inst, budget) && is_ordered_solution(x, inst, budget)) out.push_back(x);
    return out;
}

std::vector<AssignmentY> filter_opt_ordered(const std::vector<AssignmentY>& points,
                                            const RestrictedProblem& p, Count budget) {
    std::vector<AssignmentY> out;
    for (const auto& y : points)
        if (is_opt_y(y, p, budget) && is_ordered_y(y, p, budget)) out.push_back(y);
    return out;
}

std::vector<AssignmentX> mo_oo(const Instance& inst, Count budget) {
    const auto res = brute_optimum(inst, budget);
    return filter_opt_ordered(res.argmax, inst, budget);
}

std::vector<AssignmentY> mo_oo(const RestrictedProblem& p, Count budget) {
    std::vector<AssignmentY> argmax;
    Rat best = 0;
    bool seeded = false;
    enumerate_feasible_y(p, budget, [&](const AssignmentY& y) {
        const Rat v = y.profit(p.msp);
        if (!seeded || v > best) {
            best = v;
            argmax.clear();
            seeded = true;
        }
        if (v == best) argmax.push_back(y);
    });
    return filter_opt_ordered(argmax, p, budget);
}

} // namespace seqknap
