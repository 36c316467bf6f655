#include "seqknap/io.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "json.hpp"

#include "seqknap/errors.hpp"

namespace seqknap {

namespace {

using nlohmann::json;

json rat_out(const Rat& r) {
    if (denominator(r) == 1) {
        const BigInt num = numerator(r);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return num.convert_to<std::int64_t>();
    }
    return rat_to_string(r);
}

Rat rat_in(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw parse_error(where + " must be an integer or a rational string");
}

Count count_in(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw parse_error(where + " must be an integer");
    return v.get<Count>();
}

std::string dump(const json& doc, bool pretty) { return doc.dump(pretty ? 2 : -1); }

} // namespace

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(e.what());
    }
    if (!doc.is_object() || !doc.contains("items") || !doc.contains("capacities"))
        throw parse_error("expected an object with 'items' and 'capacities'");
    const json& items = doc["items"];
    const json& caps = doc["capacities"];
    if (!items.is_array() || items.empty()) throw parse_error("'items' must be a non-empty array");
    if (!caps.is_array() || caps.empty()) throw parse_error("'capacities' must be a non-empty array");

    std::vector<ItemType> raw;
    for (size_t j = 0; j < items.size(); ++j) {
        const json& it = items[j];
        const std::string at = "items[" + std::to_string(j + 1) + "]";
        if (!it.is_object() || !it.contains("size") || !it.contains("value") || !it.contains("bound"))
            throw parse_error(at + " needs 'size', 'value' and 'bound'");
        ItemType item;
        item.size = count_in(it["size"], at + ".size");
        item.value = rat_in(it["value"], at + ".value");
        item.bound = count_in(it["bound"], at + ".bound");
        raw.push_back(item);
    }
    std::vector<Count> capacities;
    for (size_t i = 0; i < caps.size(); ++i)
        capacities.push_back(count_in(caps[i], "capacities[" + std::to_string(i + 1) + "]"));
    return validate_instance(std::move(raw), std::move(capacities));
}

std::string serialize_instance(const Instance& inst, bool pretty) {
    std::vector<const ItemType*> by_input(inst.items.size(), nullptr);
    for (const ItemType& it : inst.items) by_input[static_cast<size_t>(it.original_index)] = &it;
    json items = json::array();
    for (const ItemType* it : by_input)
        items.push_back({{"size", it->size}, {"value", rat_out(it->value)}, {"bound", it->bound}});
    const json doc{{"items", items}, {"capacities", inst.capacities}};
    return dump(doc, pretty);
}

std::string serialize_partition(const CapacityPartition& part, bool pretty) {
    const json doc{{"r", part.r}, {"column_sums", part.column_sums()}};
    return dump(doc, pretty);
}

std::string serialize_assignment_x(const AssignmentX& x, const Instance& inst, bool pretty) {
    std::vector<std::tuple<int, int, int, Count>> rows;
    for (int i = 0; i < x.knapsack_count(); ++i)
        for (int j = 0; j < x.type_count(); ++j)
            for (int h = 0; h < x.level_count(); ++h) {
                const Count c = x.x[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(h)];
                if (c != 0)
                    rows.emplace_back(i + 1, inst.items[static_cast<size_t>(j)].original_index + 1,
                                      h + 1, c);
            }
    std::sort(rows.begin(), rows.end());
    json entries = json::array();
    for (const auto& [i, j, h, c] : rows)
        entries.push_back({{"knapsack", i}, {"item", j}, {"part", h}, {"count", c}});
    const json doc{{"x", entries}, {"value", rat_to_string(x.value(inst))}};
    return dump(doc, pretty);
}

std::string serialize_msp(const MspInstance& msp, const Instance& inst, bool pretty) {
    json blocks = json::array();
    for (const Block& b : msp.blocks) {
        json members = json::array();
        for (int j : b.members)
            members.push_back(inst.items[static_cast<size_t>(j)].original_index + 1);
        blocks.push_back({{"members", members},
                          {"weight", b.weight},
                          {"profit", rat_out(b.profit)},
                          {"multiplicity", b.multiplicity}});
    }
    json profits = json::array();
    for (const Rat& v : msp.p) profits.push_back(rat_out(v));
    const json doc{{"blocks", blocks},   {"f", msp.f},
                   {"p", profits},       {"tilde_b", msp.tilde_b},
                   {"part_caps", msp.part_caps}, {"d", msp.d}};
    return dump(doc, pretty);
}

namespace {

json assignment_y_json(const AssignmentY& y, const MspInstance& msp) {
    json entries = json::array();
    for (int w = 0; w < y.type_count(); ++w)
        for (int q = 0; q < y.level_count(); ++q)
            for (int h = 0; h < y.level_count(); ++h) {
                const Count c = y.y[static_cast<size_t>(w)][static_cast<size_t>(q)][static_cast<size_t>(h)];
                if (c != 0)
                    entries.push_back({{"type", w + 1}, {"class", q + 1}, {"part", h + 1}, {"count", c}});
            }
    return json{{"y", entries}, {"profit", rat_to_string(y.profit(msp))}};
}

} // namespace

std::string serialize_assignment_y(const AssignmentY& y, const MspInstance& msp, bool pretty) {
    return dump(assignment_y_json(y, msp), pretty);
}

std::string serialize_assignments_y(const std::vector<AssignmentY>& ys, const MspInstance& msp,
                                    bool pretty) {
    json points = json::array();
    for (const AssignmentY& y : ys) points.push_back(assignment_y_json(y, msp));
    const json doc{{"points", points}, {"count", ys.size()}};
    return dump(doc, pretty);
}

std::string serialize_y_inequalities(const std::vector<YInequality>& rows, bool pretty) {
    json out = json::array();
    for (const YInequality& r : rows) {
        json lhs = json::array();
        for (const auto& [key, coef] : r.coefficients)
            lhs.push_back({{"w", key.first + 1}, {"q", key.second + 1}, {"coef", rat_out(coef)}});
        out.push_back({{"lhs", lhs}, {"rhs", r.rhs}, {"selection", r.selection.tag()}});
    }
    return dump(out, pretty);
}

std::string serialize_x_inequalities(const std::vector<LinearInequalityX>& rows, bool pretty) {
    json out = json::array();
    for (const LinearInequalityX& r : rows) {
        json lhs = json::array();
        for (const auto& [orig, coef] : r.coef_by_original)
            lhs.push_back({{"item", orig + 1}, {"coef", rat_out(coef)}});
        out.push_back({{"lhs", lhs}, {"rhs", rat_out(r.rhs)}});
    }
    return dump(out, pretty);
}

} // namespace seqknap
