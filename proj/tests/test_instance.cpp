#include <chrono>

#include "doctest.h"
#include "helpers.hpp"

using namespace seqknap;

TEST_CASE("a single unit item makes a valid one-class instance") {
    const Instance inst = validate_instance({{1, Rat(1), 1, 0}}, {1});
    CHECK(inst.level_count() == 1);
    CHECK(inst.type_count() == 1);
    CHECK(inst.sizes == std::vector<Count>{1});
}

TEST_CASE("sizes must divide each other") {
    CHECK_THROWS_AS(validate_instance({{1, Rat(1), 1, 0}, {2, Rat(1), 1, 0}, {3, Rat(1), 1, 0}}, {6}),
                    non_divisible_sizes_error);
}

TEST_CASE("the smallest size must be one") {
    CHECK_THROWS_AS(validate_instance({{3, Rat(1), 1, 0}}, {3}), missing_unit_size_error);
}

TEST_CASE("no items or no knapsacks is rejected") {
    CHECK_THROWS_AS(validate_instance({}, {1}), empty_instance_error);
    CHECK_THROWS_AS(validate_instance({{1, Rat(1), 1, 0}}, {}), empty_instance_error);
}

TEST_CASE("non-positive sizes, bounds or capacities are rejected") {
    CHECK_THROWS_AS(validate_instance({{0, Rat(1), 1, 0}}, {1}), non_positive_field_error);
    CHECK_THROWS_AS(validate_instance({{1, Rat(1), 0, 0}}, {1}), non_positive_field_error);
    CHECK_THROWS_AS(validate_instance({{1, Rat(1), 1, 0}}, {-1}), non_positive_field_error);
}

TEST_CASE("validation sorts by size, then by value within a size, and keeps input numbering") {
    const Instance inst =
        validate_instance({{2, Rat(5), 1, 0}, {1, Rat(1), 1, 0}, {2, Rat(9), 1, 0}}, {4});
    CHECK(inst.items[0].size == 1);
    CHECK(inst.items[1].value == Rat(9));
    CHECK(inst.items[2].value == Rat(5));
    CHECK(inst.items[0].original_index == 1);
    CHECK(inst.items[1].original_index == 2);
    CHECK(inst.items[2].original_index == 0);
}

TEST_CASE("one size class passes capacities through") {
    const Instance inst = validate_instance({{1, Rat(2), 3, 0}}, {5, 9});
    const CapacityPartition part = capacity_partition(inst);
    CHECK(part.r == std::vector<std::vector<Count>>{{5}, {9}});
}

TEST_CASE("capacity 5 over chain (1,2,4) splits into (1,0,4)") {
    const Instance inst = validate_instance(
        {{1, Rat(1), 1, 0}, {2, Rat(1), 1, 0}, {4, Rat(1), 1, 0}}, {5});
    const CapacityPartition part = capacity_partition(inst);
    CHECK(part.r == std::vector<std::vector<Count>>{{1, 0, 4}});
}

TEST_CASE("worked example: slices and their column sums") {
    const Instance inst = testutil::worked_instance();

    const auto started = std::chrono::steady_clock::now();
    const CapacityPartition part = capacity_partition(inst);
    const auto elapsed = std::chrono::steady_clock::now() - started;

    CHECK(part.r == std::vector<std::vector<Count>>{{1, 2, 4}, {0, 2, 0}, {0, 2, 4}});
    CHECK(part.column_sums() == std::vector<Count>{1, 6, 8});
    CHECK(std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() < 1000);
}

TEST_CASE("slices add back up to the capacity and stay divisible, across the corpus") {
    for (const auto& entry : testutil::corpus()) {
        const CapacityPartition part = capacity_partition(entry.inst);
        for (int i = 0; i < entry.inst.knapsack_count(); ++i) {
            Count total = 0;
            for (int h = 0; h < entry.inst.level_count(); ++h) {
                const Count slice = part.r[static_cast<size_t>(i)][static_cast<size_t>(h)];
                CAPTURE(entry.seed);
                CHECK(slice >= 0);
                CHECK(slice % entry.inst.sizes[static_cast<size_t>(h)] == 0);
                total += slice;
            }
            CHECK(total == entry.inst.capacities[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("restricting to a class prefix keeps small items and prefix slices") {
    const Instance inst = testutil::worked_instance();

    SUBCASE("middle class") {
        const Instance sub = restrict_to_class(inst, 1);
        CHECK(sub.sizes == std::vector<Count>{1, 2});
        CHECK(sub.type_count() == 4);
        CHECK(sub.capacities == std::vector<Count>{3, 2, 2});
    }
    SUBCASE("last class returns the identical problem") {
        const Instance sub = restrict_to_class(inst, inst.level_count() - 1);
        CHECK(sub.capacities == inst.capacities);
        CHECK(sub.type_count() == inst.type_count());
    }
    SUBCASE("first class keeps only unit items and the unit slices") {
        const Instance sub = restrict_to_class(inst, 0);
        CHECK(sub.sizes == std::vector<Count>{1});
        CHECK(sub.type_count() == 1);
        CHECK(sub.capacities == std::vector<Count>{1, 0, 0});
    }
}

TEST_CASE("greedy extraction takes whole units down the chain") {
    SUBCASE("mixed sizes, exact target") {
        // entries (size, multiplicity) sorted by size descending
        const std::vector<std::pair<Count, Count>> pool{{4, 2}, {2, 3}, {1, 5}};
        CHECK(greedy_exact_fill(pool, 12) == std::vector<Count>{2, 2, 0});
    }
    SUBCASE("whole pool when the target is the total") {
        const std::vector<std::pair<Count, Count>> pool{{2, 2}, {1, 1}};
        CHECK(greedy_exact_fill(pool, 5) == std::vector<Count>{2, 1});
    }
    SUBCASE("unreachable target throws") {
        const std::vector<std::pair<Count, Count>> pool{{2, 1}};
        CHECK_THROWS_AS(greedy_exact_fill(pool, 7), domain_error);
    }
}

TEST_CASE("feasibility checks slices, class eligibility and bounds") {
    const Instance inst = testutil::worked_instance();
    const CapacityPartition part = capacity_partition(inst);
    AssignmentX x = AssignmentX::zeros(inst.knapsack_count(), inst.type_count(), inst.level_count());
    CHECK(x_feasible(x, inst, part));

    SUBCASE("an item below its own class is rejected") {
        x.x[0][5][1] = 1; // size-4 item in a size-2 slice
        CHECK_FALSE(x_feasible(x, inst, part));
    }
    SUBCASE("a slice cannot be overfilled") {
        x.x[0][0][0] = 2; // two units into the single unit slice
        CHECK_FALSE(x_feasible(x, inst, part));
    }
    SUBCASE("per-type bounds hold across knapsacks") {
        // validation sorts the size-4 pair value-descending, so the bound-1
        // type sits at position 4
        x.x[0][4][2] = 1;
        x.x[2][4][2] = 1;
        CHECK_FALSE(x_feasible(x, inst, part));
    }
    SUBCASE("a feasible placement passes") {
        x.x[0][0][0] = 1;
        x.x[0][1][1] = 1;
        x.x[2][5][2] = 1;
        CHECK(x_feasible(x, inst, part));
    }
}
