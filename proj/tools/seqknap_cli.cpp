#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "seqknap/aopt.hpp"
#include "seqknap/errors.hpp"
#include "seqknap/generator.hpp"
#include "seqknap/inequalities.hpp"
#include "seqknap/io.hpp"
#include "seqknap/oracle.hpp"

namespace {

using nlohmann::json;
using namespace seqknap;

bool logging_on() {
    const char* v = std::getenv("SEQKNAP_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_step(const std::string& line) {
    if (logging_on()) std::cerr << "[seqknap] " << line << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot write '" + out_path + "'");
    out << text << "\n";
}

struct Options {
    std::string input;
    std::string output;
    bool pretty = false;
    Count budget_points = 1'000'000;
    Count budget_branches = 1'000'000;
    Count subset_cap = 4096;
    int k = 0; // user numbering; 0 means whole problem
    int b = 0;
    std::string F_text; // comma-separated per-class capacities
    std::uint64_t seed = 1;
    std::vector<std::string> random_spec;
};

// the --F list arrives as one token so it cannot swallow the positional
std::vector<Count> parse_capacities(const std::string& text) {
    std::vector<Count> out;
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw parse_error("bad capacity '" + part + "' in --F");
        }
    }
    return out;
}

Instance load_instance(const Options& o) {
    log_step("reading instance from " + (o.input.empty() ? std::string("<missing>") : o.input));
    Instance inst = parse_instance(slurp(o.input));
    log_step("instance: " + std::to_string(inst.type_count()) + " types, " +
             std::to_string(inst.knapsack_count()) + " knapsacks, " +
             std::to_string(inst.level_count()) + " size classes");
    return inst;
}

GenParams parse_gen_params(const std::vector<std::string>& spec) {
    GenParams params;
    for (const std::string& token : spec) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw parse_error("random spec entries look like key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string val = token.substr(eq + 1);
        try {
            if (key == "n") {
                params.max_types = std::stoi(val);
            } else if (key == "m") {
                params.max_knapsacks = std::stoi(val);
            } else if (key == "bound") {
                params.max_bound = std::stoll(val);
            } else if (key == "cap") {
                params.max_capacity = std::stoll(val);
            } else if (key == "chain") {
                params.chain.clear();
                std::istringstream ss(val);
                std::string part;
                while (std::getline(ss, part, ',')) params.chain.push_back(std::stoll(part));
            } else {
                throw parse_error("unknown random spec key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw parse_error("bad number in random spec '" + token + "'");
        }
    }
    return params;
}

// family coordinates from user numbering, defaulting to the whole problem
std::pair<int, int> family_coords(const Options& o, const MspInstance& msp) {
    const int k = o.k == 0 ? msp.type_count() : o.k;
    const int b = o.b == 0 ? msp.level_count() : o.b;
    if (k < 1 || b < 1) throw domain_error("indices are 1-based");
    return {k - 1, b - 1};
}

int run_partition(const Options& o) {
    const Instance inst = load_instance(o);
    emit(serialize_partition(capacity_partition(inst), o.pretty), o.output);
    return 0;
}

int run_solve(const Options& o) {
    const Instance inst = load_instance(o);
    const AssignmentX x = aopt_solve(inst);
    emit(serialize_assignment_x(x, inst, o.pretty), o.output);
    return 0;
}

int run_transform(const Options& o) {
    const Instance inst = load_instance(o);
    const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
    emit(serialize_msp(msp, inst, o.pretty), o.output);
    return 0;
}

int run_enumerate(const Options& o) {
    const Instance inst = load_instance(o);
    const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
    const auto [k, b] = family_coords(o, msp);
    const RestrictedProblem p = restricted_problem(
        msp, k, b, o.F_text.empty() ? msp.part_caps : parse_capacities(o.F_text));
    log_step("enumerating candidates at type " + std::to_string(k + 1) + ", class " + std::to_string(b + 1));
    const auto points = enumerate_optima(p, o.budget_branches);
    emit(serialize_assignments_y(points, msp, o.pretty), o.output);
    return 0;
}

int run_inequalities(const Options& o) {
    const Instance inst = load_instance(o);
    const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
    const auto [k, b] = family_coords(o, msp);
    const auto family =
        generate_I(msp, k, b, o.F_text.empty() ? msp.part_caps : parse_capacities(o.F_text));
    emit(serialize_y_inequalities(family, o.pretty), o.output);
    return 0;
}

int run_describe(const Options& o) {
    const Instance inst = load_instance(o);
    const auto rows = describe_polytope(inst, o.subset_cap);
    emit(serialize_x_inequalities(rows, o.pretty), o.output);
    return 0;
}

struct CheckRow {
    std::string name;
    std::string status; // pass | fail | skipped
    std::string note;
    json counterexample = nullptr;
};

int run_verify(const Options& o) {
    if (!o.input.empty() && !o.random_spec.empty())
        throw domain_error("choose either an input file or a random spec");
    Instance inst = [&]() {
        if (!o.random_spec.empty() || o.input.empty()) {
            const GenParams params = parse_gen_params(o.random_spec);
            log_step("generating random instance, seed " + std::to_string(o.seed));
            return gen_random(o.seed, params);
        }
        return load_instance(o);
    }();

    const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
    const RestrictedProblem full = full_problem(msp);
    std::vector<CheckRow> checks;

    const auto guard = [&](const std::string& name, auto&& body) {
        CheckRow row;
        row.name = name;
        row.status = "pass";
        try {
            body(row);
        } catch (const budget_exceeded_error& e) {
            row.status = "skipped";
            row.note = e.what();
        } catch (const search_space_too_large_error& e) {
            row.status = "skipped";
            row.note = e.what();
        } catch (const branch_budget_exceeded_error& e) {
            row.status = "skipped";
            row.note = e.what();
        } catch (const selection_budget_exceeded_error& e) {
            row.status = "skipped";
            row.note = e.what();
        } catch (const subset_budget_exceeded_error& e) {
            row.status = "skipped";
            row.note = e.what();
        }
        log_step("check " + row.name + ": " + row.status +
                 (row.note.empty() ? std::string() : " (" + row.note + ")"));
        checks.push_back(std::move(row));
    };

    Rat best_x = 0;

    guard("solve-matches-oracle", [&](CheckRow& row) {
        const AssignmentX mine = aopt_solve(inst);
        const BruteResult brute = brute_optimum(inst, o.budget_points);
        best_x = brute.best;
        if (!x_feasible(mine, inst, capacity_partition(inst))) {
            row.status = "fail";
            row.note = "solver output infeasible";
            row.counterexample = json::parse(serialize_assignment_x(mine, inst));
        } else if (mine.value(inst) != brute.best) {
            row.status = "fail";
            row.note = "solver value " + rat_to_string(mine.value(inst)) + " vs exhaustive " +
                       rat_to_string(brute.best);
            row.counterexample = json::parse(serialize_assignment_x(mine, inst));
        }
    });

    guard("profit-correspondence", [&](CheckRow& row) {
        enumerate_feasible_x(inst, o.budget_points, [&](const AssignmentX& x) {
            if (row.status != "pass") return;
            const AssignmentY y = x_to_y(x, inst, msp);
            if (y.profit(msp) != x.value(inst)) {
                row.status = "fail";
                row.note = "aggregated profit drifted from the knapsack value";
                row.counterexample = json::parse(serialize_assignment_x(x, inst));
            }
        });
    });

    guard("objective-correspondence", [&](CheckRow& row) {
        Rat best_y = 0;
        enumerate_feasible_y(full, o.budget_points, [&](const AssignmentY& y) {
            const Rat v = y.profit(msp);
            if (v > best_y) best_y = v;
        });
        if (best_y != best_x) {
            row.status = "fail";
            row.note = "aggregated optimum " + rat_to_string(best_y) + " vs knapsack optimum " +
                       rat_to_string(best_x);
        }
    });

    guard("y-rebuild-feasible", [&](CheckRow& row) {
        const CapacityPartition part = capacity_partition(inst);
        enumerate_feasible_y(full, o.budget_points, [&](const AssignmentY& y) {
            if (row.status != "pass") return;
            const AssignmentX back = y_to_x(y, inst, msp);
            if (!x_feasible(back, inst, part) || back.value(inst) < y.profit(msp)) {
                row.status = "fail";
                row.note = "rebuilt assignment broken or short on value";
                row.counterexample = json::parse(serialize_assignment_y(y, msp));
            }
        });
    });

    guard("optima-enumeration-covers", [&](CheckRow& row) {
        const auto candidates = enumerate_optima(full, o.budget_branches);
        const auto optima = mo_oo(full, o.budget_points);
        for (const AssignmentY& y : optima) {
            const bool listed = std::find(candidates.begin(), candidates.end(), y) != candidates.end();
            const RangeWalkReport walk = check_ranges_along(full, y);
            if (!listed || !walk.ok) {
                row.status = "fail";
                row.note = listed ? walk.note : "optimum missing from the candidate walk";
                row.counterexample = json::parse(serialize_assignment_y(y, msp));
                return;
            }
        }
    });

    guard("inequality-conditions", [&](CheckRow& row) {
        const auto family = generate_I(msp, msp.type_count() - 1, msp.level_count() - 1, msp.part_caps);
        const ConditionReport rep = check_conditions(family, full, o.budget_points);
        if (!rep.clean()) {
            row.status = "fail";
            row.note = std::to_string(rep.validity_violations.size()) + " validity and " +
                       std::to_string(rep.coverage_violations.size()) + " coverage violations";
            if (!rep.validity_violations.empty())
                row.counterexample = json::parse(serialize_assignment_y(rep.validity_violations.front().second, msp));
            else
                row.counterexample = json::parse(serialize_assignment_y(rep.coverage_violations.front(), msp));
        }
    });

    guard("polytope-description", [&](CheckRow& row) {
        const auto rows = describe_polytope(inst, o.subset_cap);
        enumerate_feasible_x(inst, o.budget_points, [&](const AssignmentX& x) {
            if (row.status != "pass") return;
            // row checks are cheap; only points that escape a row need the
            // expensive classification
            bool escapes = false;
            for (const LinearInequalityX& r : rows)
                if (r.evaluate(x, inst) > r.rhs) {
                    escapes = true;
                    break;
                }
            if (!escapes) return;
            if (is_opt_solution(x, inst, o.budget_points) && is_ordered_solution(x, inst, o.budget_points)) {
                row.status = "fail";
                row.note = "a well-behaved point escapes the description";
                row.counterexample = json::parse(serialize_assignment_x(x, inst));
            }
        });
    });

    bool all_pass = true;
    json rows = json::array();
    for (const CheckRow& row : checks) {
        if (row.status == "fail") all_pass = false;
        json r{{"name", row.name}, {"status", row.status}};
        if (!row.note.empty()) r["note"] = row.note;
        if (!row.counterexample.is_null()) r["counterexample"] = row.counterexample;
        rows.push_back(std::move(r));
    }
    const json report{{"instance", json::parse(serialize_instance(inst))},
                      {"checks", rows},
                      {"pass", all_pass}};
    emit(report.dump(o.pretty ? 2 : -1), o.output);
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and polytope toolkit for knapsacks with divisible item sizes"};
    app.require_subcommand(1);

    Options o;
    const auto wire = [&](CLI::App* sub, bool takes_input) {
        if (takes_input) sub->add_option("input,--input", o.input, "instance JSON file");
        sub->add_option("--output", o.output, "write the report here instead of stdout");
        sub->add_flag("--pretty", o.pretty, "indent the JSON output");
        sub->add_option("--budget-points", o.budget_points, "cap on exhaustively enumerated points");
        sub->add_option("--budget-branches", o.budget_branches, "cap on enumeration branch nodes");
        return sub;
    };

    auto* c_partition = wire(app.add_subcommand("partition", "split capacities into per-class slices"), true);
    auto* c_solve = wire(app.add_subcommand("solve", "solve the instance exactly"), true);
    auto* c_transform =
        wire(app.add_subcommand("transform", "aggregate the instance into its block form"), true);
    auto* c_enumerate =
        wire(app.add_subcommand("enumerate", "enumerate candidate optimal aggregated solutions"), true);
    auto* c_inequalities =
        wire(app.add_subcommand("inequalities", "emit the inequality family of a subproblem"), true);
    auto* c_describe =
        wire(app.add_subcommand("describe", "emit the full outer description over item counts"), true);
    auto* c_verify = wire(app.add_subcommand("verify", "cross-check the whole pipeline exhaustively"), true);

    for (CLI::App* sub : {c_enumerate, c_inequalities}) {
        sub->add_option("--k", o.k, "largest type of the subproblem (1-based)");
        sub->add_option("--b", o.b, "largest size class of the subproblem (1-based)");
        sub->add_option("--F", o.F_text, "per-class capacities, comma separated");
    }
    c_describe->add_option("--subset-cap", o.subset_cap, "largest allowed number of item subsets");
    c_verify->add_option("--subset-cap", o.subset_cap, "largest allowed number of item subsets");
    c_verify->add_option("--seed", o.seed, "seed for the random instance");
    c_verify->add_option("--random", o.random_spec,
                         "generate the instance instead of reading one; key=value entries "
                         "(n, m, bound, cap, chain)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(c_partition)) return run_partition(o);
        if (app.got_subcommand(c_solve)) return run_solve(o);
        if (app.got_subcommand(c_transform)) return run_transform(o);
        if (app.got_subcommand(c_enumerate)) return run_enumerate(o);
        if (app.got_subcommand(c_inequalities)) return run_inequalities(o);
        if (app.got_subcommand(c_describe)) return run_describe(o);
        if (app.got_subcommand(c_verify)) return run_verify(o);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
