#include "seqknap/enumerate.hpp"

#include <algorithm>
#include <set>

#include "seqknap/errors.hpp"

namespace seqknap {

Count RestrictedProblem::aggregate_from(int h) const {
    Count total = 0;
    for (size_t g = static_cast<size_t>(h); g < F.size(); ++g) total += F[g];
    return total;
}

RestrictedProblem full_problem(const MspInstance& msp) {
    RestrictedProblem p;
    p.msp = msp;
    p.avail = msp.tilde_b;
    p.F = msp.part_caps;
    p.k = msp.type_count() - 1;
    p.b = msp.level_count() - 1;
    return p;
}

RestrictedProblem restricted_problem(const MspInstance& msp, int k, int b, std::vector<Count> F) {
    if (k < 0 || k >= msp.type_count() || b < 0 || b >= msp.level_count())
        throw domain_error("restricted problem indices out of range");
    if (static_cast<int>(F.size()) != msp.level_count())
        throw domain_error("capacity vector length mismatch");
    RestrictedProblem p;
    p.msp = msp;
    p.F = std::move(F);
    p.k = k;
    p.b = b;
    p.avail.assign(msp.tilde_b.size(), std::vector<Count>(static_cast<size_t>(msp.level_count()), 0));
    for (int w = 0; w <= k; ++w)
        for (int q = 0; q <= b; ++q)
            p.avail[static_cast<size_t>(w)][static_cast<size_t>(q)] =
                msp.tilde_b[static_cast<size_t>(w)][static_cast<size_t>(q)];
    for (int h = 0; h < msp.level_count(); ++h) {
        if (p.F[static_cast<size_t>(h)] < 0 || p.F[static_cast<size_t>(h)] > msp.part_caps[static_cast<size_t>(h)])
            throw domain_error("capacity component out of range");
        if (p.F[static_cast<size_t>(h)] % p.delta(h) != 0)
            throw divisibility_violation_error("capacity component not a multiple of its chunk");
    }
    return p;
}

std::vector<int> gain_dominators(const RestrictedProblem& p, int j) {
    std::vector<int> out;
    const Rat mine = p.msp.gain(j);
    for (int u = 0; u < p.msp.type_count(); ++u) {
        if (p.msp.gain(u) <= mine) continue;
        bool alive = false;
        for (int q = 0; q <= p.b && !alive; ++q) alive = p.active(u, q);
        if (alive) out.push_back(u);
    }
    return out;
}

HProfile h_profile(const RestrictedProblem& p, int j) {
    const int l = p.msp.level_count();
    HProfile hp;
    hp.f_bar.assign(static_cast<size_t>(l), 0);
    hp.f_h.assign(static_cast<size_t>(l), 0);
    hp.v_min.assign(static_cast<size_t>(l), 0);

    const Rat mine = p.msp.gain(j);
    Count absorbed = 0;
    for (int g = 0; g < l; ++g) {
        Count weight = 0;
        for (int u = 0; u < p.msp.type_count(); ++u) {
            if (p.msp.gain(u) <= mine) continue;
            for (int q = 0; q <= g; ++q) {
                if (q == g && u > j) continue; // same-class types above j never compete here
                weight += p.msp.f[static_cast<size_t>(u)] *
                          p.avail[static_cast<size_t>(u)][static_cast<size_t>(q)];
            }
        }
        hp.f_bar[static_cast<size_t>(g)] = weight;
        hp.f_h[static_cast<size_t>(g)] = weight - absorbed;
        const Count delta = p.delta(g);
        hp.v_min[static_cast<size_t>(g)] =
            std::min(hp.f_h[static_cast<size_t>(g)] / delta * delta, p.F[static_cast<size_t>(g)]);
        absorbed += hp.v_min[static_cast<size_t>(g)];
    }
    return hp;
}

std::pair<Count, Count> availability_bounds(const RestrictedProblem& p, int j, int g) {
    const HProfile hp = h_profile(p, j);
    const Count delta = p.delta(g);
    const Count fh = hp.f_h[static_cast<size_t>(g)];
    return {fh / delta * delta, fh + delta};
}

namespace {

// shared core of the candidate-set formulas: capacity S available to the
// entry, crowding size fh, chunk delta, item weight fw, count cap
std::vector<Count> candidate_values(Count S, Count fh, Count delta, Count fw, Count cap) {
    if (cap <= 0) return {0};
    const Count step = delta / fw; // weights divide the chunk by construction
    const Count hi_cut = fh / delta * delta;
    const Count lo_cut = ((fh + delta - 1) / delta + 1) * delta;
    const auto clip = [&](Count cut) {
        const Count spare = S - cut;
        if (spare <= 0) return Count{0};
        return std::min(spare / delta * step, cap);
    };
    const Count lo = clip(lo_cut);
    const Count hi = clip(hi_cut);
    std::vector<Count> out;
    for (Count v = lo; v <= hi; v += step) out.push_back(v);
    if (out.empty()) out.push_back(0);
    return out;
}

} // namespace

std::vector<Count> value_range_at_part(const RestrictedProblem& p, int w, int h) {
    const Count cap = p.avail[static_cast<size_t>(w)][static_cast<size_t>(p.b)];
    if (cap == 0) return {0};
    const HProfile hp = h_profile(p, w);
    return candidate_values(p.F[static_cast<size_t>(h)], hp.f_h[static_cast<size_t>(h)],
                            p.msp.d[static_cast<size_t>(p.b)], p.msp.f[static_cast<size_t>(w)], cap);
}

std::vector<Count> value_range_top(const RestrictedProblem& p) {
    return value_range_at_part(p, p.k, p.b);
}

std::vector<Count> value_range_tail_for(const RestrictedProblem& p, int w) {
    const Count cap = p.avail[static_cast<size_t>(w)][static_cast<size_t>(p.b)];
    if (cap == 0) return {0};
    const HProfile hp = h_profile(p, w);
    return candidate_values(p.aggregate_from(p.b), hp.f_h[static_cast<size_t>(p.b)],
                            p.msp.d[static_cast<size_t>(p.b)], p.msp.f[static_cast<size_t>(w)], cap);
}

std::vector<Count> value_range_tail(const RestrictedProblem& p) {
    return value_range_tail_for(p, p.k);
}

namespace {

// removes the already-fixed per-part values of type w at class p.b from the
// state: capacity shrinks, the type's class-b items leave the universe
RestrictedProblem reduce_after_type(RestrictedProblem p, int w, const std::vector<Count>& fixed) {
    const Count fw = p.msp.f[static_cast<size_t>(w)];
    for (int h = p.b; h < p.msp.level_count(); ++h) {
        const Count v = fixed[static_cast<size_t>(h - p.b)];
        p.F[static_cast<size_t>(h)] -= fw * v;
        if (p.F[static_cast<size_t>(h)] < 0) throw domain_error("fixed values exceed capacity");
    }
    p.avail[static_cast<size_t>(w)][static_cast<size_t>(p.b)] = 0;
    return p;
}

} // namespace

std::vector<Count> next_type_range(const RestrictedProblem& p, const std::vector<Count>& fixed) {
    if (p.k == 0) throw domain_error("no smaller type to bound");
    if (static_cast<int>(fixed.size()) != p.msp.level_count() - p.b)
        throw domain_error("fixed value vector length mismatch");
    RestrictedProblem next = reduce_after_type(p, p.k, fixed);
    next.k = p.k - 1;
    return value_range_at_part(next, next.k, next.b);
}

AssignmentY base_case(const RestrictedProblem& p) {
    if (p.b != 0) throw domain_error("base fill needs a unit-size-only problem");
    const int l = p.msp.level_count();
    AssignmentY y = AssignmentY::zeros(p.msp.type_count(), l);
    std::vector<Count> used(static_cast<size_t>(l), 0);
    for (int w = 0; w <= p.k; ++w) {
        Count left = p.avail[static_cast<size_t>(w)][0];
        for (int h = 0; h < l && left > 0; ++h) {
            const Count give = std::min(p.F[static_cast<size_t>(h)] - used[static_cast<size_t>(h)], left);
            if (give <= 0) continue;
            y.y[static_cast<size_t>(w)][0][static_cast<size_t>(h)] = give;
            used[static_cast<size_t>(h)] += give;
            left -= give;
        }
    }
    return y;
}

namespace {

class OptimaWalk {
public:
    OptimaWalk(Count budget) : budget_(budget), budget_start_(budget) {}

    std::vector<AssignmentY> run(RestrictedProblem p) {
        partial_ = AssignmentY::zeros(p.msp.type_count(), p.msp.level_count());
        descend(std::move(p));
        return std::move(out_);
    }

private:
    void spend() {
        if (budget_-- <= 0) throw branch_budget_exceeded_error(budget_start_);
    }

    void descend(RestrictedProblem p) {
        spend();
        if (p.b == 0) {
            AssignmentY filled = base_case(p);
            for (int w = 0; w < filled.type_count(); ++w)
                for (int h = 0; h < p.msp.level_count(); ++h)
                    partial_.y[static_cast<size_t>(w)][0][static_cast<size_t>(h)] =
                        filled.y[static_cast<size_t>(w)][0][static_cast<size_t>(h)];
            out_.push_back(partial_);
            for (int w = 0; w < filled.type_count(); ++w)
                for (int h = 0; h < p.msp.level_count(); ++h)
                    partial_.y[static_cast<size_t>(w)][0][static_cast<size_t>(h)] = 0;
            return;
        }
        int w = -1;
        for (int u = p.k; u >= 0; --u)
            if (p.active(u, p.b)) {
                w = u;
                break;
            }
        if (w < 0) {
            // class exhausted: drop it and move down one level
            for (auto& row : p.avail) row[static_cast<size_t>(p.b)] = 0;
            p.b -= 1;
            p.k = p.msp.type_count() - 1;
            descend(std::move(p));
            return;
        }
        p.k = w;
        const std::vector<Count> tail = value_range_tail_for(p, w);
        const Count tail_max = *std::max_element(tail.begin(), tail.end());
        std::vector<Count> fixed(static_cast<size_t>(p.msp.level_count() - p.b), 0);
        branch_parts(p, w, p.b, 0, tail_max, tail, fixed);
    }

    void branch_parts(const RestrictedProblem& p, int w, int h, Count chosen_total, Count tail_max,
                      const std::vector<Count>& tail, std::vector<Count>& fixed) {
        spend();
        if (h == p.msp.level_count()) {
            if (std::find(tail.begin(), tail.end(), chosen_total) == tail.end()) return;
            RestrictedProblem next = reduce_after_type(p, w, fixed);
            descend(std::move(next));
            return;
        }
        RestrictedProblem state = p;
        // re-read the candidate set with all earlier parts of this type fixed
        for (int g = p.b; g < h; ++g) {
            state.F[static_cast<size_t>(g)] -=
                p.msp.f[static_cast<size_t>(w)] * fixed[static_cast<size_t>(g - p.b)];
            state.avail[static_cast<size_t>(w)][static_cast<size_t>(p.b)] -=
                fixed[static_cast<size_t>(g - p.b)];
        }
        for (Count v : value_range_at_part(state, w, h)) {
            if (chosen_total + v > tail_max) continue;
            fixed[static_cast<size_t>(h - p.b)] = v;
            partial_.y[static_cast<size_t>(w)][static_cast<size_t>(p.b)][static_cast<size_t>(h)] = v;
            branch_parts(p, w, h + 1, chosen_total + v, tail_max, tail, fixed);
            partial_.y[static_cast<size_t>(w)][static_cast<size_t>(p.b)][static_cast<size_t>(h)] = 0;
            fixed[static_cast<size_t>(h - p.b)] = 0;
        }
    }

    std::vector<AssignmentY> out_;
    AssignmentY partial_;
    Count budget_;
    Count budget_start_;
};

} // namespace

std::vector<AssignmentY> enumerate_optima(const RestrictedProblem& p, Count branch_budget) {
    OptimaWalk walk(branch_budget);
    std::vector<AssignmentY> points = walk.run(p);
    std::set<AssignmentY> dedup(points.begin(), points.end());
    return {dedup.begin(), dedup.end()};
}

RangeWalkReport check_ranges_along(const RestrictedProblem& start, const AssignmentY& y) {
    RangeWalkReport report;
    auto fail = [&](const std::string& why) {
        report.ok = false;
        report.note = why;
    };

    RestrictedProblem p = start;
    const int l = p.msp.level_count();
    while (report.ok) {
        if (p.b == 0) {
            const AssignmentY filled = base_case(p);
            for (int w = 0; w <= p.k; ++w)
                for (int h = 0; h < l; ++h)
                    if (filled.y[static_cast<size_t>(w)][0][static_cast<size_t>(h)] !=
                        y.y[static_cast<size_t>(w)][0][static_cast<size_t>(h)])
                        fail("unit-class fill differs at type " + std::to_string(w + 1) + ", part " +
                             std::to_string(h + 1));
            return report;
        }
        int w = -1;
        for (int u = p.k; u >= 0; --u)
            if (p.active(u, p.b)) {
                w = u;
                break;
            }
        if (w < 0) {
            for (auto& row : p.avail) row[static_cast<size_t>(p.b)] = 0;
            p.b -= 1;
            p.k = p.msp.type_count() - 1;
            continue;
        }
        p.k = w;
        const std::vector<Count> tail = value_range_tail_for(p, w);
        if (tail.size() > 3) fail("tail candidate set larger than three");
        Count total = 0;
        std::vector<Count> fixed(static_cast<size_t>(l - p.b), 0);
        RestrictedProblem state = p;
        for (int h = p.b; h < l && report.ok; ++h) {
            const std::vector<Count> range = value_range_at_part(state, w, h);
            if (range.size() > 3) fail("candidate set larger than three");
            const Count v = y.y[static_cast<size_t>(w)][static_cast<size_t>(p.b)][static_cast<size_t>(h)];
            if (std::find(range.begin(), range.end(), v) == range.end()) {
                fail("value " + std::to_string(v) + " of type " + std::to_string(w + 1) + ", class " +
                     std::to_string(p.b + 1) + ", part " + std::to_string(h + 1) +
                     " outside its candidate set");
                break;
            }
            fixed[static_cast<size_t>(h - p.b)] = v;
            total += v;
            state.F[static_cast<size_t>(h)] -= p.msp.f[static_cast<size_t>(w)] * v;
            state.avail[static_cast<size_t>(w)][static_cast<size_t>(p.b)] -= v;
        }
        if (!report.ok) return report;
        if (std::find(tail.begin(), tail.end(), total) == tail.end()) {
            fail("per-type total " + std::to_string(total) + " of type " + std::to_string(w + 1) +
                 " outside the tail candidate set");
            return report;
        }
        p = reduce_after_type(p, w, fixed);
    }
    return report;
}

} // namespace seqknap
