#include "seqknap/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "seqknap/errors.hpp"

namespace seqknap {

bool is_block(const Instance& inst, const std::vector<int>& members) {
    if (members.empty()) return false;
    Count reach = inst.items[static_cast<size_t>(members.front())].size;
    Count covered = 0;
    for (size_t v = 0; v < members.size(); ++v) {
        const ItemType& it = inst.items[static_cast<size_t>(members[v])];
        if (v > 0 && it.size > reach + covered) return false;
        covered += it.bound * it.size;
    }
    return true;
}

std::vector<Block> maximal_block_partition(const Instance& inst) {
    // types grouped by exact gain; instance order within a group is already
    // size ascending
    std::vector<std::vector<int>> gain_groups;
    std::vector<Rat> gains;
    for (int j = 0; j < inst.type_count(); ++j) {
        const Rat g = inst.gain(j);
        auto at = std::find(gains.begin(), gains.end(), g);
        if (at == gains.end()) {
            gains.push_back(g);
            gain_groups.push_back({j});
        } else {
            gain_groups[static_cast<size_t>(at - gains.begin())].push_back(j);
        }
    }

    std::vector<Block> out;
    for (const auto& group : gain_groups) {
        std::vector<int> current;
        Count reach = 0;   // smallest size of the open block
        Count covered = 0; // total size already inside it
        auto flush = [&]() {
            if (current.empty()) return;
            Block b;
            b.members = current;
            b.weight = inst.items[static_cast<size_t>(current.front())].size;
            b.profit = inst.items[static_cast<size_t>(current.front())].value;
            b.multiplicity = covered / b.weight;
            out.push_back(std::move(b));
            current.clear();
            covered = 0;
        };
        for (int j : group) {
            const ItemType& it = inst.items[static_cast<size_t>(j)];
            if (!current.empty() && it.size > reach + covered) flush();
            if (current.empty()) reach = it.size;
            current.push_back(j);
            covered += it.bound * it.size;
        }
        flush();
    }

    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.profit != b.profit) return a.profit > b.profit;
        return a.members.front() < b.members.front();
    });
    return out;
}

MspInstance to_msp(const Instance& inst, const std::vector<Block>& partition) {
    MspInstance msp;
    msp.blocks = partition;
    msp.d = inst.sizes;
    msp.part_caps = capacity_partition(inst).column_sums();
    const int t = static_cast<int>(partition.size());
    const int l = inst.level_count();
    msp.f.reserve(static_cast<size_t>(t));
    msp.p.reserve(static_cast<size_t>(t));
    msp.tilde_b.assign(static_cast<size_t>(t), std::vector<Count>(static_cast<size_t>(l), 0));
    msp.block_of_type.assign(static_cast<size_t>(inst.type_count()), -1);
    for (int w = 0; w < t; ++w) {
        const Block& blk = partition[static_cast<size_t>(w)];
        msp.f.push_back(blk.weight);
        msp.p.push_back(blk.profit);
        for (int j : blk.members) {
            msp.block_of_type[static_cast<size_t>(j)] = w;
            const ItemType& it = inst.items[static_cast<size_t>(j)];
            const int q = inst.item_class(j);
            msp.tilde_b[static_cast<size_t>(w)][static_cast<size_t>(q)] +=
                it.bound * it.size / blk.weight;
        }
    }
    return msp;
}

AssignmentY AssignmentY::zeros(int types, int levels) {
    AssignmentY out;
    out.y.assign(static_cast<size_t>(types),
                 std::vector<std::vector<Count>>(static_cast<size_t>(levels),
                                                 std::vector<Count>(static_cast<size_t>(levels), 0)));
    return out;
}

Rat AssignmentY::profit(const MspInstance& msp) const {
    return prefix_profit(msp, level_count() - 1);
}

Rat AssignmentY::prefix_profit(const MspInstance& msp, int h) const {
    Rat total = 0;
    for (size_t w = 0; w < y.size(); ++w)
        for (size_t q = 0; q < y[w].size(); ++q)
            for (int part = 0; part <= h; ++part)
                if (y[w][q][static_cast<size_t>(part)] != 0)
                    total += msp.p[w] * y[w][q][static_cast<size_t>(part)];
    return total;
}

std::vector<std::vector<Count>> AssignmentY::class_totals() const {
    std::vector<std::vector<Count>> totals(y.size());
    for (size_t w = 0; w < y.size(); ++w) {
        totals[w].assign(y[w].size(), 0);
        for (size_t q = 0; q < y[w].size(); ++q)
            for (Count c : y[w][q]) totals[w][q] += c;
    }
    return totals;
}

Count occupancy(const MspInstance& msp, int w, int q, Count count) {
    const Count dq = msp.d[static_cast<size_t>(q)];
    const Count load = msp.f[static_cast<size_t>(w)] * count;
    return (load + dq - 1) / dq * dq;
}

bool y_feasible(const AssignmentY& y, const MspInstance& msp) {
    const int t = msp.type_count();
    const int l = msp.level_count();
    if (y.type_count() != t || y.level_count() != l) return false;
    for (int h = 0; h < l; ++h) {
        Count load = 0;
        for (int w = 0; w < t; ++w)
            for (int q = 0; q < l; ++q) {
                const Count c = y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)];
                if (c < 0) return false;
                if (c > 0 && q > h) return false; // class above its part
                load += occupancy(msp, w, q, c);
            }
        if (load > msp.part_caps[static_cast<size_t>(h)]) return false;
    }
    for (int w = 0; w < t; ++w)
        for (int q = 0; q < l; ++q) {
            Count chunks = 0;
            for (int h = q; h < l; ++h)
                chunks += occupancy(msp, w, q,
                                    y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)]) /
                          msp.d[static_cast<size_t>(q)];
            if (chunks * msp.d[static_cast<size_t>(q)] >
                msp.f[static_cast<size_t>(w)] * msp.tilde_b[static_cast<size_t>(w)][static_cast<size_t>(q)])
                return false;
        }
    return true;
}

AssignmentY x_to_y(const AssignmentX& x, const Instance& inst, const MspInstance& msp) {
    AssignmentY out = AssignmentY::zeros(msp.type_count(), msp.level_count());
    for (int j = 0; j < inst.type_count(); ++j) {
        const int w = msp.block_of_type[static_cast<size_t>(j)];
        const int q = inst.item_class(j);
        const Count scale = inst.sizes[static_cast<size_t>(q)] / msp.f[static_cast<size_t>(w)];
        for (int i = 0; i < x.knapsack_count(); ++i)
            for (int h = 0; h < x.level_count(); ++h)
                out.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)] +=
                    scale * x.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)];
    }
    return out;
}

AssignmentX y_to_x(const AssignmentY& y, const Instance& inst, const MspInstance& msp) {
    if (!y_feasible(y, msp)) throw infeasible_y_error("aggregated constraints violated");
    const int l = msp.level_count();
    const int m = inst.knapsack_count();
    const CapacityPartition part = capacity_partition(inst);

    // per part and original type: how many real items to place
    std::vector<std::vector<Count>> demand(static_cast<size_t>(l),
                                           std::vector<Count>(static_cast<size_t>(inst.type_count()), 0));
    std::vector<Count> bound_left;
    for (const ItemType& it : inst.items) bound_left.push_back(it.bound);

    for (int w = 0; w < msp.type_count(); ++w) {
        for (int q = 0; q < l; ++q) {
            // members of this block drawn from class q, lowest original index
            // first when distributing
            std::vector<int> providers;
            for (int j : msp.blocks[static_cast<size_t>(w)].members)
                if (inst.item_class(j) == q) providers.push_back(j);
            std::sort(providers.begin(), providers.end(), [&](int a, int b) {
                return inst.items[static_cast<size_t>(a)].original_index <
                       inst.items[static_cast<size_t>(b)].original_index;
            });
            for (int h = q; h < l; ++h) {
                const Count c = y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)];
                if (c == 0) continue;
                Count items = occupancy(msp, w, q, c) / msp.d[static_cast<size_t>(q)];
                for (int j : providers) {
                    if (items == 0) break;
                    const Count take = std::min(items, bound_left[static_cast<size_t>(j)]);
                    bound_left[static_cast<size_t>(j)] -= take;
                    demand[static_cast<size_t>(h)][static_cast<size_t>(j)] += take;
                    items -= take;
                }
                if (items != 0) throw infeasible_y_error("class multiplicity exhausted");
            }
        }
    }

    // split each part's aggregated load across knapsack slices, biggest items
    // first so every slice fills exactly
    AssignmentX out = AssignmentX::zeros(m, inst.type_count(), l);
    for (int h = 0; h < l; ++h) {
        std::vector<std::pair<Count, Count>> inventory; // (size, count), size desc
        std::vector<std::vector<int>> holders;          // types per inventory entry
        for (int j = inst.type_count() - 1; j >= 0; --j) {
            const Count c = demand[static_cast<size_t>(h)][static_cast<size_t>(j)];
            if (c == 0) continue;
            const Count s = inst.items[static_cast<size_t>(j)].size;
            if (!inventory.empty() && inventory.back().first == s) {
                inventory.back().second += c;
                holders.back().push_back(j);
            } else {
                inventory.emplace_back(s, c);
                holders.push_back({j});
            }
        }
        Count remaining = 0;
        for (const auto& [s, c] : inventory) remaining += s * c;
        for (int i = 0; i < m && remaining > 0; ++i) {
            const Count target = std::min(part.r[static_cast<size_t>(i)][static_cast<size_t>(h)], remaining);
            const std::vector<Count> take = greedy_exact_fill(inventory, target);
            for (size_t e = 0; e < take.size(); ++e) {
                Count units = take[e];
                inventory[e].second -= units;
                for (int j : holders[e]) {
                    if (units == 0) break;
                    Count& have = demand[static_cast<size_t>(h)][static_cast<size_t>(j)];
                    const Count grab = std::min(units, have);
                    have -= grab;
                    units -= grab;
                    out.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)] += grab;
                }
            }
            remaining -= target;
        }
        if (remaining != 0) throw infeasible_y_error("part load exceeds its slices");
    }
    return out;
}

Rat LinearInequalityX::evaluate(const AssignmentX& x, const Instance& inst) const {
    std::vector<Count> totals = x.item_counts();
    Rat lhs = 0;
    for (int j = 0; j < inst.type_count(); ++j) {
        const auto at = coef_by_original.find(inst.items[static_cast<size_t>(j)].original_index);
        if (at != coef_by_original.end() && totals[static_cast<size_t>(j)] != 0)
            lhs += at->second * totals[static_cast<size_t>(j)];
    }
    return lhs;
}

LinearInequalityX lift_inequality(const std::map<std::pair<int, int>, Rat>& coeffs, const Rat& rhs,
                                  const Instance& inst, const MspInstance& msp) {
    LinearInequalityX out;
    out.rhs = rhs;
    for (const auto& [key, nu] : coeffs) {
        if (nu == 0) continue;
        const auto [w, q] = key;
        for (int j : msp.blocks[static_cast<size_t>(w)].members) {
            if (inst.items[static_cast<size_t>(j)].size != msp.d[static_cast<size_t>(q)]) continue;
            const Rat mu = nu * msp.d[static_cast<size_t>(q)] / msp.f[static_cast<size_t>(w)];
            if (mu != 0) out.coef_by_original[inst.items[static_cast<size_t>(j)].original_index] += mu;
        }
    }
    return out;
}

} // namespace seqknap
