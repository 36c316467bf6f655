#include "seqknap/instance.hpp"

#include <algorithm>
#include <numeric>

#include "seqknap/errors.hpp"

namespace seqknap {

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("bad rational literal '" + text + "'");
    }
}

int Instance::item_class(int j) const { return class_of_size(items[static_cast<size_t>(j)].size); }

int Instance::class_of_size(Count s) const {
    const auto it = std::lower_bound(sizes.begin(), sizes.end(), s);
    return static_cast<int>(it - sizes.begin());
}

Instance validate_instance(std::vector<ItemType> raw_items, std::vector<Count> raw_capacities) {
    if (raw_items.empty() || raw_capacities.empty()) throw empty_instance_error();
    for (size_t j = 0; j < raw_items.size(); ++j) {
        if (raw_items[j].size < 1) throw non_positive_field_error("item size");
        if (raw_items[j].bound < 1) throw non_positive_field_error("item bound");
        raw_items[j].original_index = static_cast<int>(j);
    }
    for (Count c : raw_capacities) {
        // zero-capacity knapsacks are legal degenerate rows
        if (c < 0) throw non_positive_field_error("capacity");
    }

    std::stable_sort(raw_items.begin(), raw_items.end(), [](const ItemType& a, const ItemType& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.value > b.value;
    });

    Instance inst;
    inst.items = std::move(raw_items);
    inst.capacities = std::move(raw_capacities);
    for (const ItemType& it : inst.items) {
        if (inst.sizes.empty() || inst.sizes.back() != it.size) inst.sizes.push_back(it.size);
    }
    if (inst.sizes.front() != 1) throw missing_unit_size_error(inst.sizes.front());
    for (size_t q = 1; q < inst.sizes.size(); ++q) {
        if (inst.sizes[q] % inst.sizes[q - 1] != 0)
            throw non_divisible_sizes_error(inst.sizes[q - 1], inst.sizes[q]);
    }
    return inst;
}

CapacityPartition capacity_partition(const Instance& inst) {
    const int m = inst.knapsack_count();
    const int l = inst.level_count();
    CapacityPartition part;
    part.r.assign(static_cast<size_t>(m), std::vector<Count>(static_cast<size_t>(l), 0));
    for (int i = 0; i < m; ++i) {
        Count left = inst.capacities[static_cast<size_t>(i)];
        for (int h = 0; h + 1 < l; ++h) {
            const Count slice = left % inst.sizes[static_cast<size_t>(h) + 1];
            part.r[static_cast<size_t>(i)][static_cast<size_t>(h)] = slice;
            left -= slice;
        }
        part.r[static_cast<size_t>(i)][static_cast<size_t>(l) - 1] = left;
    }
    return part;
}

std::vector<Count> CapacityPartition::column_sums() const {
    if (r.empty()) return {};
    std::vector<Count> sums(r.front().size(), 0);
    for (const auto& row : r)
        for (size_t h = 0; h < row.size(); ++h) sums[h] += row[h];
    return sums;
}

Instance restrict_to_class(const Instance& inst, int h) {
    if (h < 0 || h >= inst.level_count()) throw domain_error("restriction class out of range");
    const CapacityPartition part = capacity_partition(inst);
    std::vector<ItemType> kept;
    for (const ItemType& it : inst.items)
        if (it.size <= inst.sizes[static_cast<size_t>(h)]) kept.push_back(it);
    std::vector<Count> caps(inst.capacities.size(), 0);
    for (size_t i = 0; i < caps.size(); ++i)
        for (int q = 0; q <= h; ++q) caps[i] += part.r[i][static_cast<size_t>(q)];
    // re-validate: keeps original indices of the surviving items intact
    Instance out = validate_instance(kept, caps);
    for (size_t j = 0; j < kept.size(); ++j) out.items[j].original_index = kept[j].original_index;
    return out;
}

std::vector<Count> greedy_exact_fill(const std::vector<std::pair<Count, Count>>& sizes_desc,
                                     Count target) {
    std::vector<Count> take(sizes_desc.size(), 0);
    Count left = target;
    for (size_t idx = 0; idx < sizes_desc.size() && left > 0; ++idx) {
        const auto [size, avail] = sizes_desc[idx];
        const Count units = std::min(avail, left / size);
        take[idx] = units;
        left -= units * size;
    }
    if (left != 0) throw domain_error("exact fill unreachable for target " + std::to_string(target));
    return take;
}

AssignmentX AssignmentX::zeros(int knapsacks, int types, int levels) {
    AssignmentX out;
    out.x.assign(static_cast<size_t>(knapsacks),
                 std::vector<std::vector<Count>>(static_cast<size_t>(types),
                                                 std::vector<Count>(static_cast<size_t>(levels), 0)));
    return out;
}

Rat AssignmentX::value(const Instance& inst) const {
    return prefix_value(inst, level_count() - 1);
}

Rat AssignmentX::prefix_value(const Instance& inst, int h) const {
    Rat total = 0;
    for (const auto& knap : x)
        for (size_t j = 0; j < knap.size(); ++j)
            for (int q = 0; q <= h; ++q)
                if (knap[j][static_cast<size_t>(q)] != 0)
                    total += inst.items[j].value * knap[j][static_cast<size_t>(q)];
    return total;
}

Count AssignmentX::prefix_size(const Instance& inst, int h) const {
    Count total = 0;
    for (const auto& knap : x)
        for (size_t j = 0; j < knap.size(); ++j)
            for (int q = 0; q <= h; ++q) total += inst.items[j].size * knap[j][static_cast<size_t>(q)];
    return total;
}

std::vector<Count> AssignmentX::item_counts() const {
    std::vector<Count> counts(static_cast<size_t>(type_count()), 0);
    for (const auto& knap : x)
        for (size_t j = 0; j < knap.size(); ++j)
            for (Count n : knap[j]) counts[j] += n;
    return counts;
}

Count AssignmentX::total_count() const {
    Count total = 0;
    for (const auto& knap : x)
        for (const auto& row : knap)
            for (Count n : row) total += n;
    return total;
}

bool x_feasible(const AssignmentX& x, const Instance& inst, const CapacityPartition& part) {
    const int m = inst.knapsack_count();
    const int n = inst.type_count();
    const int l = inst.level_count();
    if (x.knapsack_count() != m || x.type_count() != n || x.level_count() != l) return false;
    std::vector<Count> used(static_cast<size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
        for (int h = 0; h < l; ++h) {
            Count load = 0;
            for (int j = 0; j < n; ++j) {
                const Count cnt = x.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)];
                if (cnt < 0) return false;
                if (cnt > 0 && inst.item_class(j) > h) return false; // too big for this slice
                load += cnt * inst.items[static_cast<size_t>(j)].size;
                used[static_cast<size_t>(j)] += cnt;
            }
            if (load > part.r[static_cast<size_t>(i)][static_cast<size_t>(h)]) return false;
        }
    }
    for (int j = 0; j < n; ++j)
        if (used[static_cast<size_t>(j)] > inst.items[static_cast<size_t>(j)].bound) return false;
    return true;
}

} // namespace seqknap
