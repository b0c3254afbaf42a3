#include "helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace amdahlx;

namespace {

/// Model fitted on the full noiseless corner grid of the cube generator.
FittedModel cube_model() {
    const GroundTruth truth = fixtures::cube_truth();
    const auto grid = sample_configs(fixtures::cube_ranges(), 1, 0, SampleMode::full_grid);
    return fit(truth.spec(), generate(truth, grid));
}

} // namespace

TEST(CostModel, linear_in_resource_values) {
    const SchemaPtr s = make_schema({"a", "b"});
    const CostModel cost(s, {3.0, 2.0}, 10.0);
    EXPECT_DOUBLE_EQ(cost.cost(ResourceVector(s, {1.0, 1.0})), 15.0);
    EXPECT_DOUBLE_EQ(cost.cost(ResourceVector(s, {2.0, 0.5})), 17.0);
    EXPECT_THROW(CostModel(s, {1.0}), std::invalid_argument);  // weight count
    const SchemaPtr other = make_schema({"x", "y"});
    EXPECT_THROW(cost.cost(ResourceVector(other, {1.0, 1.0})), std::domain_error);
}

TEST(Explore, vacuous_target_keeps_the_whole_grid_sorted_by_cost) {
    const FittedModel model = cube_model();
    const CostModel cost(model.spec().schema_ptr(), {3.0, 2.0, 1.0});
    const ExplorationResult result =
        explore(model, fixtures::cube_ranges(), 1e-6, cost, 100);
    EXPECT_EQ(result.evaluated, 8u);
    EXPECT_EQ(result.feasible.size(), 8u);
    EXPECT_EQ(result.infeasible, 0u);
    EXPECT_EQ(result.errors, 0u);
    for (std::size_t i = 1; i < result.feasible.size(); ++i)
        EXPECT_LE(result.feasible[i - 1].cost, result.feasible[i].cost);
}

TEST(Explore, unreachable_target_returns_empty_with_counts) {
    const FittedModel model = cube_model();
    const CostModel cost = CostModel::uniform(model.spec().schema_ptr());
    const ExplorationResult result =
        explore(model, fixtures::cube_ranges(), 1e9, cost, 100);
    EXPECT_TRUE(result.feasible.empty());
    EXPECT_EQ(result.evaluated, 8u);
    EXPECT_EQ(result.infeasible, 8u);
    EXPECT_TRUE(frontier(result).empty());
}

TEST(Explore, matches_brute_force_generator_enumeration) {
    const GroundTruth truth = fixtures::cube_truth();
    const FittedModel model = cube_model();
    const RangeTable ranges = fixtures::cube_ranges();
    const CostModel cost(model.spec().schema_ptr(), {3.0, 2.0, 1.0});

    // Median of the eight true grid scores as the target: the midpoint of
    // the two central values, so no config sits on the boundary.
    std::vector<double> scores;
    for (std::size_t i = 0; i < ranges.grid_size(); ++i)
        scores.push_back(truth.true_score(ranges.config_at(i)));
    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());
    const double target = 0.5 * (sorted[3] + sorted[4]);

    // Brute-force reference: filter on true scores, stable-sort by cost.
    struct Entry {
        ResourceVector config;
        double score;
        double cost;
    };
    std::vector<Entry> expected;
    for (std::size_t i = 0; i < ranges.grid_size(); ++i) {
        const ResourceVector config = ranges.config_at(i);
        if (scores[i] >= target) expected.push_back({config, scores[i], cost.cost(config)});
    }
    std::stable_sort(expected.begin(), expected.end(),
                     [](const Entry& a, const Entry& b) { return a.cost < b.cost; });

    const ExplorationResult result = explore(model, ranges, target, cost, 100);
    ASSERT_EQ(result.feasible.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_TRUE(result.feasible[i].config.same_values(expected[i].config));
        EXPECT_NEAR(result.feasible[i].predicted_score, expected[i].score,
                    1e-6 * expected[i].score);
        EXPECT_DOUBLE_EQ(result.feasible[i].cost, expected[i].cost);
    }
    EXPECT_EQ(result.evaluated, 8u);
    EXPECT_EQ(result.infeasible, 8u - expected.size());
}

TEST(Explore, limit_truncates_but_counts_cover_the_grid) {
    const FittedModel model = cube_model();
    const CostModel cost = CostModel::uniform(model.spec().schema_ptr());
    const ExplorationResult result =
        explore(model, fixtures::cube_ranges(), 1e-6, cost, 3);
    EXPECT_EQ(result.feasible.size(), 3u);
    EXPECT_EQ(result.feasible_total, 8u);
    EXPECT_EQ(result.evaluated, 8u);
}

TEST(Explore, every_result_lies_within_the_ranges) {
    const FittedModel model = cube_model();
    const RangeTable ranges = fixtures::cube_ranges();
    const CostModel cost = CostModel::uniform(model.spec().schema_ptr());
    const ExplorationResult result = explore(model, ranges, 55.0, cost, 100);
    for (const auto& p : result.feasible)
        for (std::size_t j = 0; j < p.config.size(); ++j) {
            const auto& axis = ranges.levels(j);
            EXPECT_NE(std::find(axis.begin(), axis.end(), p.config[j]), axis.end());
        }
}

TEST(Explore, deterministic) {
    const FittedModel model = cube_model();
    const CostModel cost(model.spec().schema_ptr(), {3.0, 2.0, 1.0});
    const ExplorationResult a = explore(model, fixtures::cube_ranges(), 60.0, cost, 100);
    const ExplorationResult b = explore(model, fixtures::cube_ranges(), 60.0, cost, 100);
    ASSERT_EQ(a.feasible.size(), b.feasible.size());
    for (std::size_t i = 0; i < a.feasible.size(); ++i) {
        EXPECT_TRUE(a.feasible[i].config.same_values(b.feasible[i].config));
        EXPECT_EQ(a.feasible[i].predicted_score, b.feasible[i].predicted_score);
    }
}

TEST(Explore, raising_a_level_never_loses_feasibility_for_positive_models) {
    // With nonnegative coefficients and positive exponents, more of any
    // resource can only help: every feasible config stays feasible when one
    // coordinate moves up a level.
    const FittedModel model = cube_model();
    const RangeTable ranges = fixtures::cube_ranges();
    const CostModel cost = CostModel::uniform(model.spec().schema_ptr());
    for (double target : {55.0, 60.0, 70.0}) {
        const ExplorationResult result = explore(model, ranges, target, cost, 100);
        for (const auto& p : result.feasible) {
            for (std::size_t j = 0; j < p.config.size(); ++j) {
                const auto& axis = ranges.levels(j);
                const auto at = std::find(axis.begin(), axis.end(), p.config[j]);
                if (at + 1 == axis.end()) continue;  // already at the top level
                std::vector<double> bumped = p.config.values();
                bumped[j] = *(at + 1);
                const auto score = try_predict_score(
                    model, ResourceVector(p.config.schema_ptr(), bumped));
                ASSERT_TRUE(score.has_value());
                EXPECT_GE(*score, target);
            }
        }
    }
}

TEST(Explore, rejects_bad_arguments_and_oversized_grids) {
    const FittedModel model = cube_model();
    const CostModel cost = CostModel::uniform(model.spec().schema_ptr());
    EXPECT_THROW(explore(model, fixtures::cube_ranges(), -1.0, cost, 10),
                 std::invalid_argument);
    EXPECT_THROW(explore(model, fixtures::cube_ranges(), 50.0, cost, 0),
                 std::invalid_argument);
    try {
        explore(model, fixtures::cube_ranges(), 50.0, cost, 10, 4);
        FAIL() << "expected the grid cap to trip";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("8"), std::string::npos);
    }
}

TEST(Frontier, dominance_staircase) {
    const SchemaPtr s = make_schema({"a"});
    const auto point = [&](double value, double score, double cost) {
        return FeasiblePoint{ResourceVector(s, {value}), score, cost};
    };
    // Middle entry dominated: (2, 9) never beats the cheaper (1, 10).
    ExplorationResult r;
    r.feasible = {point(1, 10, 1), point(2, 9, 2), point(3, 12, 3)};
    const auto steps = frontier(r);
    ASSERT_EQ(steps.size(), 2u);
    EXPECT_DOUBLE_EQ(steps[0].cost, 1.0);
    EXPECT_DOUBLE_EQ(steps[0].score, 10.0);
    EXPECT_DOUBLE_EQ(steps[1].cost, 3.0);
    EXPECT_DOUBLE_EQ(steps[1].score, 12.0);

    // Singleton passes through; equal costs collapse to the better score.
    ExplorationResult single;
    single.feasible = {point(1, 10, 5)};
    EXPECT_EQ(frontier(single).size(), 1u);

    ExplorationResult tied;
    tied.feasible = {point(1, 10, 5), point(2, 14, 5), point(3, 15, 6)};
    const auto tie_steps = frontier(tied);
    ASSERT_EQ(tie_steps.size(), 2u);
    EXPECT_DOUBLE_EQ(tie_steps[0].cost, 5.0);
    EXPECT_DOUBLE_EQ(tie_steps[0].score, 14.0);

    EXPECT_TRUE(frontier(ExplorationResult{}).empty());
}

TEST(Frontier, nondecreasing_over_real_exploration) {
    const FittedModel model = cube_model();
    const CostModel cost(model.spec().schema_ptr(), {3.0, 2.0, 1.0});
    const ExplorationResult result =
        explore(model, fixtures::cube_ranges(), 55.0, cost, 100);
    const auto steps = frontier(result);
    ASSERT_FALSE(steps.empty());
    for (std::size_t i = 1; i < steps.size(); ++i) {
        EXPECT_GT(steps[i].cost, steps[i - 1].cost);
        EXPECT_GT(steps[i].score, steps[i - 1].score);
    }
}
