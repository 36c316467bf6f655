#pragma once

#include <stdexcept>
#include <string>

namespace seqknap {

// Base for everything a malformed input or an over-budget computation can
// throw. Callers that just want "domain problem vs. bug" can catch this one.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class empty_instance_error : public domain_error {
public:
    empty_instance_error() : domain_error("EmptyInstance: no items or no knapsacks") {}
};

class non_divisible_sizes_error : public domain_error {
public:
    explicit non_divisible_sizes_error(long long small, long long big)
        : domain_error("NonDivisibleSizes: " + std::to_string(big) + " is not a multiple of " +
                       std::to_string(small)) {}
};

class missing_unit_size_error : public domain_error {
public:
    explicit missing_unit_size_error(long long smallest)
        : domain_error("MissingUnitSize: smallest item size is " + std::to_string(smallest) +
                       ", expected 1") {}
};

class non_positive_field_error : public domain_error {
public:
    explicit non_positive_field_error(const std::string& field)
        : domain_error("NonPositiveField: " + field) {}
};

class search_space_too_large_error : public domain_error {
public:
    explicit search_space_too_large_error(long long budget)
        : domain_error("SearchSpaceTooLarge: enumeration exceeded " + std::to_string(budget) +
                       " states") {}
};

class budget_exceeded_error : public domain_error {
public:
    explicit budget_exceeded_error(long long budget)
        : domain_error("BudgetExceeded: more than " + std::to_string(budget) +
                       " feasible points") {}
};

class branch_budget_exceeded_error : public domain_error {
public:
    explicit branch_budget_exceeded_error(long long budget)
        : domain_error("BranchBudgetExceeded: more than " + std::to_string(budget) + " branches") {}
};

class selection_budget_exceeded_error : public domain_error {
public:
    explicit selection_budget_exceeded_error(long long budget)
        : domain_error("SelectionBudgetExceeded: more than " + std::to_string(budget) +
                       " coefficient selections") {}
};

class subset_budget_exceeded_error : public domain_error {
public:
    explicit subset_budget_exceeded_error(long long budget)
        : domain_error("SubsetBudgetExceeded: more than " + std::to_string(budget) +
                       " item subsets") {}
};

class infeasible_y_error : public domain_error {
public:
    explicit infeasible_y_error(const std::string& why)
        : domain_error("InfeasibleY: " + why) {}
};

class infeasible_keep_error : public domain_error {
public:
    explicit infeasible_keep_error(const std::string& why)
        : domain_error("InfeasibleKeep: " + why) {}
};

class divisibility_violation_error : public domain_error {
public:
    explicit divisibility_violation_error(const std::string& why)
        : domain_error("DivisibilityViolation: " + why) {}
};

class parse_error : public domain_error {
public:
    explicit parse_error(const std::string& why) : domain_error("ParseError: " + why) {}
};

} // namespace seqknap
