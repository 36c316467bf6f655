#include "seqknap/inequalities.hpp"

#include <algorithm>

#include "seqknap/errors.hpp"
#include "seqknap/oracle.hpp"

namespace seqknap {

std::string CoefficientSelection::tag() const {
    std::vector<std::pair<std::pair<int, int>, Choice>> rows(a.begin(), a.end());
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first.second, x.first.first) < std::pair(y.first.second, y.first.first);
    });
    std::string out;
    for (const auto& [key, c] : rows) out += c == Choice::alpha ? "\xce\xb1" : "\xce\xb2";
    return out;
}

GContext::GContext(RestrictedProblem problem, CoefficientSelection selection)
    : problem_(std::move(problem)), selection_(std::move(selection)) {
    const int t = problem_.msp.type_count();
    const int l = problem_.msp.level_count();
    for (int q = l - 1; q >= 1; --q)
        for (int w = t - 1; w >= 0; --w)
            if (problem_.active(w, q)) chain_.push_back({w, q});
    crowding_cache_.assign(chain_.size(), 0);
    crowding_known_.assign(chain_.size(), 0);
    for (int w = 0; w < t; ++w) base_units_ += problem_.avail[static_cast<size_t>(w)][0];
}

Count GContext::crowding(size_t pos) {
    if (!crowding_known_[pos]) {
        const auto [w, q] = chain_[pos];
        // the level view: everything above this class is already spoken for,
        // and chunks are measured in this class's size
        RestrictedProblem view = problem_;
        for (auto& row : view.avail)
            for (size_t qq = static_cast<size_t>(q) + 1; qq < row.size(); ++qq) row[qq] = 0;
        view.b = q;
        crowding_cache_[pos] = h_profile(view, w).f_h[static_cast<size_t>(q)];
        crowding_known_[pos] = 1;
    }
    return crowding_cache_[pos];
}

size_t GContext::position_of(int k, int b) const {
    for (size_t i = 0; i < chain_.size(); ++i)
        if (chain_[i].first == k && chain_[i].second == b) return i;
    throw domain_error("no active entry at that type and class");
}

Count GContext::eval_next(size_t pos, Count S) {
    const int q_here = chain_[pos].second;
    const int q_next = pos + 1 < chain_.size() ? chain_[pos + 1].second : 0;
    // dropping a level frees the capacities of the parts in between
    Count shift = 0;
    for (int g = q_next; g < q_here; ++g) shift += problem_.F[static_cast<size_t>(g)];
    return eval(pos + 1, S + shift);
}

Count GContext::eval(size_t pos, Count S) {
    if (pos == chain_.size()) return std::min(S, base_units_);
    const auto key = std::make_pair(pos, S);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto [w, q] = chain_[pos];
    const Count fw = problem_.msp.f[static_cast<size_t>(w)];
    const Count delta = problem_.msp.d[static_cast<size_t>(q)];
    const Count have = problem_.avail[static_cast<size_t>(w)][static_cast<size_t>(q)];
    const Count X = crowding(pos) / delta * delta;

    const auto pick_at = selection_.a.find({w, q});
    if (pick_at == selection_.a.end()) throw domain_error("selection has no pick for an active entry");
    const Count adj = pick_at->second == Choice::alpha ? X : X + delta;
    const Count cap_chunks = fw * have / delta;

    Count sigma = 0;
    Count leftover = S;
    if (S >= adj) {
        if ((S - adj) % delta != 0)
            throw divisibility_violation_error("argument off the chunk grid of the entry");
        const Count s = (S - adj) / delta;
        if (s > cap_chunks) {
            sigma = cap_chunks;
            leftover = S - fw * have;
        } else {
            sigma = s;
            leftover = adj;
        }
    }
    const Count slope = eval_next(pos, adj + delta) - eval_next(pos, adj);
    const Count out = eval_next(pos, leftover) + slope * sigma;
    memo_.emplace(key, out);
    return out;
}

Count GContext::g(int k, int b, Count S) {
    const int t = problem_.msp.type_count();
    const int l = problem_.msp.level_count();
    if (k < 0 || k >= t || b < 0 || b >= l) throw domain_error("arguments out of range");
    if (S < 0) S = 0;
    if (b == 0) {
        Count units = 0;
        for (int w = 0; w <= k; ++w) units += problem_.avail[static_cast<size_t>(w)][0];
        return std::min(S, units);
    }
    size_t pos = 0;
    while (pos < chain_.size()) {
        const auto [w, q] = chain_[pos];
        if (q < b || (q == b && w <= k)) break;
        ++pos;
    }
    const int q_pos = pos < chain_.size() ? chain_[pos].second : 0;
    Count shift = 0;
    for (int g = q_pos; g < b; ++g) shift += problem_.F[static_cast<size_t>(g)];
    return eval(pos, S + shift);
}

std::pair<Count, Count> GContext::alpha_beta(int k, int b) {
    const size_t pos = position_of(k, b);
    const Count delta = problem_.msp.d[static_cast<size_t>(b)];
    const Count X = crowding(pos) / delta * delta;
    const Count lo = eval_next(pos, X);
    const Count mid = eval_next(pos, X + delta);
    const Count hi = eval_next(pos, X + 2 * delta);
    return {mid - lo, hi - mid};
}

Count GContext::coefficient(int k, int b) {
    const auto [a, be] = alpha_beta(k, b);
    const auto pick_at = selection_.a.find({k, b});
    if (pick_at == selection_.a.end()) throw domain_error("selection has no pick for an active entry");
    return pick_at->second == Choice::alpha ? a : be;
}

Rat YInequality::lhs_value(const AssignmentY& y) const {
    const auto totals = y.class_totals();
    Rat sum = 0;
    for (const auto& [key, c] : coefficients) {
        const auto [w, q] = key;
        if (w < y.type_count() && q < y.level_count())
            sum += c * totals[static_cast<size_t>(w)][static_cast<size_t>(q)];
    }
    return sum;
}

YInequality base_inequality(const RestrictedProblem& p) {
    YInequality out;
    Count units = 0;
    for (int w = 0; w < p.msp.type_count(); ++w) {
        if (p.active(w, 0)) out.coefficients[{w, 0}] = 1;
        units += p.avail[static_cast<size_t>(w)][0];
    }
    out.rhs = std::min(p.aggregate_from(0), units);
    return out;
}

Count g_value(GContext& ctx, int k, int b, Count S) { return ctx.g(k, b, S); }

std::pair<Count, Count> alpha_beta(GContext& ctx, int k, int b) { return ctx.alpha_beta(k, b); }

std::vector<YInequality> generate_I(const MspInstance& msp, int k, int b, std::vector<Count> F,
                                    Count max_selections) {
    const RestrictedProblem p = restricted_problem(msp, k, b, std::move(F));
    if (b == 0) return {base_inequality(p)};

    // selection slots in display order: class ascending, then type ascending
    std::vector<std::pair<int, int>> slots;
    for (int q = 1; q <= b; ++q)
        for (int w = 0; w <= k; ++w)
            if (p.active(w, q)) slots.push_back({w, q});

    if (slots.size() >= 63 || (Count{1} << slots.size()) > max_selections)
        throw selection_budget_exceeded_error(max_selections);

    std::vector<YInequality> out;
    const Count total = Count{1} << slots.size();
    for (Count mask = 0; mask < total; ++mask) {
        CoefficientSelection sel;
        for (size_t i = 0; i < slots.size(); ++i)
            sel.a[slots[i]] = (mask >> i) & 1 ? Choice::beta : Choice::alpha;
        GContext ctx(p, sel);

        YInequality ineq;
        ineq.selection = sel;
        for (int w = 0; w <= k; ++w)
            if (p.active(w, 0)) ineq.coefficients[{w, 0}] = 1;
        for (const auto& slot : slots) {
            const Count c = ctx.coefficient(slot.first, slot.second);
            if (c != 0)
                ineq.coefficients[slot] = Rat(c) * msp.f[static_cast<size_t>(slot.first)] /
                                          msp.d[static_cast<size_t>(slot.second)];
        }
        ineq.rhs = ctx.g(k, b, p.aggregate_from(b));

        const bool dup =
            std::any_of(out.begin(), out.end(), [&](const YInequality& e) { return e == ineq; });
        if (!dup) out.push_back(std::move(ineq));
    }
    return out;
}

ConditionReport check_conditions(const std::vector<YInequality>& inequalities,
                                 const RestrictedProblem& p, Count budget) {
    ConditionReport rep;
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
        ++rep.points_checked;
        // cheap screen first; only points that break a row need the
        // expensive classification to decide whether the break counts
        bool classified = false, counts = false;
        for (size_t idx = 0; idx < inequalities.size(); ++idx)
            if (inequalities[idx].lhs_value(y) > Rat(inequalities[idx].rhs)) {
                if (!classified) {
                    counts = is_opt_y(y, p, budget) && is_ordered_y(y, p, budget);
                    classified = true;
                }
                if (counts) rep.validity_violations.push_back({idx, y});
            }
    });
    const auto top = filter_opt_ordered(argmax, p, budget);
    rep.optima_checked = static_cast<Count>(top.size());
    for (const auto& y : top) {
        bool tight = false;
        for (const auto& iq : inequalities)
            if (iq.lhs_value(y) == Rat(iq.rhs)) {
                tight = true;
                break;
            }
        if (!tight) rep.coverage_violations.push_back(y);
    }
    return rep;
}

std::vector<LinearInequalityX> describe_polytope(const Instance& inst, Count subset_cap) {
    const int n = inst.type_count();
    if (n >= 63 || (Count{1} << n) > subset_cap) throw subset_budget_exceeded_error(subset_cap);

    const auto cols = capacity_partition(inst).column_sums();
    const int l = inst.level_count();

    std::vector<LinearInequalityX> out;
    for (Count mask = 1; mask < (Count{1} << n); ++mask) {
        std::vector<ItemType> chosen;
        std::vector<int> parent_index;
        int q0 = l;
        for (int j = 0; j < n; ++j)
            if ((mask >> j) & 1) {
                chosen.push_back(inst.items[static_cast<size_t>(j)]);
                parent_index.push_back(inst.items[static_cast<size_t>(j)].original_index);
                q0 = std::min(q0, inst.item_class(j));
            }
        const Count unit = inst.sizes[static_cast<size_t>(q0)];
        for (auto& it : chosen) it.size /= unit;

        // the subset problem, measured in units of its smallest member; the
        // class grid keeps the whole upper part of the original chain even
        // where the subset has gaps
        Instance sub = validate_instance(chosen, inst.capacities);
        // validation renumbers; speak the parent's numbering again
        for (auto& it : sub.items) it.original_index = parent_index[static_cast<size_t>(it.original_index)];
        const auto blocks = maximal_block_partition(sub);

        const int lt = l - q0;
        MspInstance msp;
        msp.blocks = blocks;
        msp.d.resize(static_cast<size_t>(lt));
        msp.part_caps.resize(static_cast<size_t>(lt));
        for (int g = 0; g < lt; ++g) {
            msp.d[static_cast<size_t>(g)] = inst.sizes[static_cast<size_t>(q0 + g)] / unit;
            msp.part_caps[static_cast<size_t>(g)] = cols[static_cast<size_t>(q0 + g)] / unit;
        }
        const int t = static_cast<int>(blocks.size());
        msp.tilde_b.assign(static_cast<size_t>(t), std::vector<Count>(static_cast<size_t>(lt), 0));
        msp.block_of_type.assign(static_cast<size_t>(sub.type_count()), -1);
        for (int w = 0; w < t; ++w) {
            const Block& blk = blocks[static_cast<size_t>(w)];
            msp.f.push_back(blk.weight);
            msp.p.push_back(blk.profit);
            for (int j : blk.members) {
                msp.block_of_type[static_cast<size_t>(j)] = w;
                const ItemType& it = sub.items[static_cast<size_t>(j)];
                const auto at = std::find(msp.d.begin(), msp.d.end(), it.size);
                const auto q = static_cast<size_t>(at - msp.d.begin());
                msp.tilde_b[static_cast<size_t>(w)][q] += it.bound * it.size / blk.weight;
            }
        }

        const auto family = generate_I(msp, t - 1, lt - 1, msp.part_caps);
        for (const auto& iq : family) {
            LinearInequalityX lifted = lift_inequality(iq.coefficients, Rat(iq.rhs), sub, msp);
            const bool dup = std::any_of(out.begin(), out.end(),
                                         [&](const LinearInequalityX& e) { return e == lifted; });
            if (!dup) out.push_back(std::move(lifted));
        }
    }
    return out;
}

} // namespace seqknap
