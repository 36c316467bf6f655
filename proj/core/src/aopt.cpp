#include "seqknap/aopt.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "seqknap/errors.hpp"

namespace seqknap {

namespace {

// value descending; ties resolved by the lexicographically smallest flattened
// member-type sequence so runs are reproducible
bool better(const GroupedItem& a, const GroupedItem& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.member_key() < b.member_key();
}

struct LevelState {
    std::vector<GroupedItem> pool;
};

AssignmentX aopt_core(const Instance& inst, const std::vector<Count>& multiplicity) {
    const int m = inst.knapsack_count();
    const int n = inst.type_count();
    const int l = inst.level_count();
    const CapacityPartition part = capacity_partition(inst);

    AssignmentX out = AssignmentX::zeros(m, n, l);
    std::vector<GroupedItem> pool;

    for (int h = 0; h < l; ++h) {
        const Count d = inst.sizes[static_cast<size_t>(h)];
        for (int j = 0; j < n; ++j) {
            if (inst.item_class(j) != h) continue;
            GroupedItem unit;
            unit.assigned_size = d;
            unit.value = inst.items[static_cast<size_t>(j)].value;
            unit.members = {{j, 1}};
            for (Count c = 0; c < multiplicity[static_cast<size_t>(j)]; ++c) pool.push_back(unit);
        }

        std::sort(pool.begin(), pool.end(), better);

        std::vector<Count> slots(static_cast<size_t>(m), 0);
        Count total_slots = 0;
        for (int i = 0; i < m; ++i) {
            slots[static_cast<size_t>(i)] = part.r[static_cast<size_t>(i)][static_cast<size_t>(h)] / d;
            total_slots += slots[static_cast<size_t>(i)];
        }
        const Count chosen = std::min<Count>(static_cast<Count>(pool.size()), total_slots);

        int knap = 0;
        for (Count idx = 0; idx < chosen; ++idx) {
            while (slots[static_cast<size_t>(knap)] == 0) ++knap;
            --slots[static_cast<size_t>(knap)];
            for (const auto& [j, c] : pool[static_cast<size_t>(idx)].members)
                out.x[static_cast<size_t>(knap)][static_cast<size_t>(j)][static_cast<size_t>(h)] += c;
        }

        std::vector<GroupedItem> leftover(pool.begin() + static_cast<long>(chosen), pool.end());
        if (h + 1 < l)
            pool = group_items(std::move(leftover), d, inst.sizes[static_cast<size_t>(h) + 1]);
        else
            pool.clear();
    }
    return out;
}

} // namespace

Count GroupedItem::true_size(const Instance& inst) const {
    Count total = 0;
    for (const auto& [j, c] : members) total += inst.items[static_cast<size_t>(j)].size * c;
    return total;
}

std::vector<int> GroupedItem::member_key() const {
    std::vector<int> key;
    for (const auto& [j, c] : members)
        for (Count u = 0; u < c; ++u) key.push_back(j);
    return key;
}

std::vector<GroupedItem> group_items(std::vector<GroupedItem> pool, Count current_size,
                                     Count target_size) {
    if (target_size % current_size != 0)
        throw divisibility_violation_error("grouping target not a multiple of the current size");
    std::sort(pool.begin(), pool.end(), better);
    const Count run = target_size / current_size;
    std::vector<GroupedItem> out;
    for (size_t at = 0; at < pool.size(); at += static_cast<size_t>(run)) {
        GroupedItem merged;
        merged.assigned_size = target_size;
        merged.value = 0;
        std::map<int, Count> members;
        const size_t end = std::min(pool.size(), at + static_cast<size_t>(run));
        for (size_t v = at; v < end; ++v) {
            merged.value += pool[v].value;
            for (const auto& [j, c] : pool[v].members) members[j] += c;
        }
        merged.members.assign(members.begin(), members.end());
        out.push_back(std::move(merged));
    }
    return out;
}

AssignmentX aopt_solve(const Instance& inst) {
    std::vector<Count> mult;
    mult.reserve(inst.items.size());
    for (const ItemType& it : inst.items) mult.push_back(it.bound);
    return aopt_core(inst, mult);
}

AssignmentX aopt_solve_on_set(const Instance& inst, const std::vector<Count>& keep) {
    if (static_cast<int>(keep.size()) != inst.type_count())
        throw domain_error("keep multiset length does not match the type count");
    Count wanted = 0;
    for (int j = 0; j < inst.type_count(); ++j) {
        if (keep[static_cast<size_t>(j)] < 0) throw non_positive_field_error("keep count");
        if (keep[static_cast<size_t>(j)] > inst.items[static_cast<size_t>(j)].bound)
            throw infeasible_keep_error("keep exceeds the bound of type " + std::to_string(j + 1));
        wanted += keep[static_cast<size_t>(j)];
    }
    AssignmentX out = aopt_core(inst, keep);
    if (out.total_count() != wanted)
        throw infeasible_keep_error("multiset does not fit the capacities");
    return out;
}

namespace {

// enumerates every placement of exactly `need[j]` items per type, invoking
// `visit` on each complete assignment
class ExactPlacer {
public:
    ExactPlacer(const Instance& inst, const CapacityPartition& part, std::vector<Count> need,
                Count budget)
        : inst_(inst), need_(std::move(need)), budget_(budget), budget_start_(budget) {
        const int m = inst.knapsack_count();
        const int l = inst.level_count();
        room_.assign(static_cast<size_t>(m), std::vector<Count>(static_cast<size_t>(l), 0));
        for (int i = 0; i < m; ++i)
            for (int h = 0; h < l; ++h)
                room_[static_cast<size_t>(i)][static_cast<size_t>(h)] =
                    part.r[static_cast<size_t>(i)][static_cast<size_t>(h)];
        cells_by_type_.resize(static_cast<size_t>(inst.type_count()));
        for (int j = 0; j < inst.type_count(); ++j)
            for (int i = 0; i < m; ++i)
                for (int h = inst.item_class(j); h < l; ++h)
                    cells_by_type_[static_cast<size_t>(j)].emplace_back(i, h);
        current_ = AssignmentX::zeros(m, inst.type_count(), l);
    }

    template <typename Visitor>
    void run(Visitor&& visit) {
        place_type(0, visit);
    }

private:
    template <typename Visitor>
    void place_type(int j, Visitor& visit) {
        if (j == inst_.type_count()) {
            if (budget_-- <= 0) throw search_space_too_large_error(budget_start_);
            visit(current_);
            return;
        }
        place_cell(j, 0, need_[static_cast<size_t>(j)], visit);
    }

    template <typename Visitor>
    void place_cell(int j, size_t cell, Count left, Visitor& visit) {
        if (left == 0) {
            place_type(j + 1, visit);
            return;
        }
        const auto& cells = cells_by_type_[static_cast<size_t>(j)];
        if (cell == cells.size()) return;
        const Count s = inst_.items[static_cast<size_t>(j)].size;
        const auto [i, h] = cells[cell];
        const Count fit = std::min(left, room_[static_cast<size_t>(i)][static_cast<size_t>(h)] / s);
        for (Count take = fit; take >= 0; --take) {
            room_[static_cast<size_t>(i)][static_cast<size_t>(h)] -= take * s;
            current_.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)] = take;
            place_cell(j, cell + 1, left - take, visit);
            current_.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)] = 0;
            room_[static_cast<size_t>(i)][static_cast<size_t>(h)] += take * s;
        }
    }

    const Instance& inst_;
    std::vector<Count> need_;
    std::vector<std::vector<Count>> room_;
    std::vector<std::vector<std::pair<int, int>>> cells_by_type_;
    AssignmentX current_;
    Count budget_;
    Count budget_start_;
};

} // namespace

bool is_opt_solution(const AssignmentX& x, const Instance& inst, Count budget) {
    const CapacityPartition part = capacity_partition(inst);
    const int l = inst.level_count();
    std::vector<Rat> mine;
    mine.reserve(static_cast<size_t>(l));
    for (int h = 0; h < l; ++h) mine.push_back(x.prefix_value(inst, h));

    bool ok = true;
    ExactPlacer placer(inst, part, x.item_counts(), budget);
    placer.run([&](const AssignmentX& other) {
        if (!ok) return;
        for (int h = 0; h < l; ++h) {
            if (other.prefix_value(inst, h) > mine[static_cast<size_t>(h)]) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

namespace {

struct BundleHit {
    int knapsack = 0;
    int level = 0;
    std::vector<std::pair<int, Count>> bundle; // members removed from the slice
    int partner_type = 0;
    // where the partner currently sits; nullopt means it is unassigned
    std::optional<std::pair<int, int>> partner_at;
};

// searches one slice for a bundle of >= 2 items whose total size and value
// match a single item type available above `level` or unassigned
class BundleFinder {
public:
    BundleFinder(const AssignmentX& x, const Instance& inst, Count budget)
        : x_(x), inst_(inst), budget_(budget), budget_start_(budget), used_(x.item_counts()) {}

    std::optional<BundleHit> find() {
        for (int h = 0; h < inst_.level_count(); ++h)
            for (int i = 0; i < inst_.knapsack_count(); ++i) {
                slice_.clear();
                for (int j = 0; j < inst_.type_count(); ++j) {
                    const Count c = x_.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)];
                    if (c > 0) slice_.emplace_back(j, c);
                }
                picked_.assign(slice_.size(), 0);
                std::optional<BundleHit> hit;
                search(0, 0, Rat(0), 0, i, h, hit);
                if (hit) return hit;
            }
        return std::nullopt;
    }

private:
    void search(size_t at, Count size, Rat value, Count count, int i, int h,
                std::optional<BundleHit>& hit) {
        if (hit) return;
        if (budget_-- <= 0) throw search_space_too_large_error(budget_start_);
        if (count >= 2) {
            if (auto partner = match(size, value, h)) {
                BundleHit out;
                out.knapsack = i;
                out.level = h;
                for (size_t idx = 0; idx < slice_.size(); ++idx)
                    if (picked_[idx] > 0) out.bundle.emplace_back(slice_[idx].first, picked_[idx]);
                out.partner_type = partner->first;
                out.partner_at = partner->second;
                hit = out;
                return;
            }
        }
        if (at == slice_.size()) return;
        const Count cap = inst_.sizes[static_cast<size_t>(h)];
        const int j = slice_[at].first;
        const Count have = slice_[at].second;
        const Count s = inst_.items[static_cast<size_t>(j)].size;
        for (Count take = 0; take <= have && size + take * s <= cap; ++take) {
            picked_[at] = take;
            search(at + 1, size + take * s, value + inst_.items[static_cast<size_t>(j)].value * take,
                   count + take, i, h, hit);
            if (hit) return;
        }
        picked_[at] = 0;
    }

    // a single item of this exact size and value, unassigned or above h
    std::optional<std::pair<int, std::optional<std::pair<int, int>>>> match(Count size, Rat value,
                                                                            int h) const {
        for (int t = 0; t < inst_.type_count(); ++t) {
            if (inst_.items[static_cast<size_t>(t)].size != size) continue;
            if (inst_.items[static_cast<size_t>(t)].value != value) continue;
            for (int h2 = h + 1; h2 < inst_.level_count(); ++h2)
                for (int i2 = 0; i2 < inst_.knapsack_count(); ++i2)
                    if (x_.x[static_cast<size_t>(i2)][static_cast<size_t>(t)][static_cast<size_t>(h2)] > 0)
                        return std::make_pair(t, std::make_optional(std::make_pair(i2, h2)));
            if (used_[static_cast<size_t>(t)] < inst_.items[static_cast<size_t>(t)].bound)
                return std::make_pair(t, std::optional<std::pair<int, int>>{});
        }
        return std::nullopt;
    }

    const AssignmentX& x_;
    const Instance& inst_;
    Count budget_;
    Count budget_start_;
    std::vector<Count> used_;
    std::vector<std::pair<int, Count>> slice_;
    std::vector<Count> picked_;
};

} // namespace

bool is_ordered_solution(const AssignmentX& x, const Instance& inst, Count budget) {
    return !BundleFinder(x, inst, budget).find().has_value();
}

AssignmentX make_ordered(AssignmentX x, const Instance& inst, Count budget) {
    const Count budget_start = budget;
    for (;;) {
        auto hit = BundleFinder(x, inst, budget).find();
        if (!hit) return x;
        const auto& [i, h, bundle, t, partner_at] = *hit;
        for (const auto& [j, c] : bundle)
            x.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)] -= c;
        x.x[static_cast<size_t>(i)][static_cast<size_t>(t)][static_cast<size_t>(h)] += 1;
        if (partner_at) {
            const auto [i2, h2] = *partner_at;
            x.x[static_cast<size_t>(i2)][static_cast<size_t>(t)][static_cast<size_t>(h2)] -= 1;
            for (const auto& [j, c] : bundle)
                x.x[static_cast<size_t>(i2)][static_cast<size_t>(j)][static_cast<size_t>(h2)] += c;
        }
        if (budget-- <= 0) throw search_space_too_large_error(budget_start);
    }
}

} // namespace seqknap
