// Inverse design-space exploration.
//
// Given a fitted model, the question is turned around: which configurations
// in a discrete range grid reach a target score, and what do they cost?  The
// grid is enumerated exhaustively (resources are discrete in practice), so
// results are exact over the candidate set and fully reproducible.

#pragma once

#include "amdahlx/ranges.hpp"
#include "amdahlx/regression.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amdahlx {

/// Linear configuration cost: offset + sum_j weight_j * value_j.
class CostModel {
public:
    CostModel(SchemaPtr schema, std::vector<double> weights, double offset = 0.0)
        : schema_(std::move(schema)), weights_(std::move(weights)), offset_(offset) {
        if (!schema_) throw std::invalid_argument("CostModel: null schema");
        if (weights_.size() != schema_->size())
            throw std::invalid_argument("CostModel: expected one weight per resource, got " +
                                        std::to_string(weights_.size()) + " for " +
                                        std::to_string(schema_->size()));
        for (std::size_t j = 0; j < weights_.size(); ++j)
            if (!std::isfinite(weights_[j]))
                throw std::invalid_argument("CostModel: weight for '" + schema_->name(j) +
                                            "' is not finite");
        if (!std::isfinite(offset_))
            throw std::invalid_argument("CostModel: offset is not finite");
    }

    /// Every resource at the same weight; offset zero.
    static CostModel uniform(SchemaPtr schema, double weight = 1.0) {
        const std::size_t k = schema ? schema->size() : 0;
        return CostModel(std::move(schema), std::vector<double>(k, weight));
    }

    const ResourceSchema& schema() const { return *schema_; }
    const std::vector<double>& weights() const { return weights_; }
    double offset() const { return offset_; }

    double cost(const ResourceVector& config) const {
        if (!config.conforms_to(*schema_))
            throw std::domain_error("CostModel: configuration schema does not match");
        double c = offset_;
        for (std::size_t j = 0; j < weights_.size(); ++j) c += weights_[j] * config[j];
        return c;
    }

private:
    SchemaPtr schema_;
    std::vector<double> weights_;
    double offset_;
};

/// One configuration meeting the target, with its prediction and cost.
struct FeasiblePoint {
    ResourceVector config;
    double predicted_score;
    double cost;
};

/// A point on the cost/score frontier: the best score reachable at or below
/// this cost.
struct FrontierPoint {
    double cost;
    double score;
};

/// Outcome of a grid exploration.  `feasible` is sorted ascending by cost
/// with ties kept in grid enumeration (lexicographic) order, truncated to
/// the requested limit; the counts always cover the whole grid.
struct ExplorationResult {
    double target = 0.0;
    std::vector<FeasiblePoint> feasible;
    std::size_t evaluated = 0;    // grid points scored
    std::size_t infeasible = 0;   // predictions below the target
    std::size_t errors = 0;       // configurations the model could not score
    std::size_t feasible_total = 0;  // before the limit was applied
};

/// Evaluate the model over the whole range grid, keep configurations whose
/// predicted score reaches the target, and rank them by cost.  Prediction
/// failures (nonpositive inverse score) are counted, never fatal.
inline ExplorationResult explore(const FittedModel& model, const RangeTable& ranges,
                                 double target_score, const CostModel& cost, std::size_t limit,
                                 std::size_t grid_cap = kDefaultGridCap) {
    if (!(target_score > 0.0) || !std::isfinite(target_score))
        throw std::invalid_argument("explore: target score must be positive");
    if (limit < 1) throw std::invalid_argument("explore: limit must be at least 1");
    if (*ranges.schema() != model.spec().schema())
        throw std::invalid_argument("explore: range schema does not match the model");
    if (cost.schema() != model.spec().schema())
        throw std::invalid_argument("explore: cost schema does not match the model");
    const std::size_t total = ranges.grid_size();
    if (total > grid_cap)
        throw std::invalid_argument("explore: grid has " + std::to_string(total) +
                                    " points, above the cap of " + std::to_string(grid_cap));

    ExplorationResult result;
    result.target = target_score;
    for (std::size_t i = 0; i < total; ++i) {
        const ResourceVector config = ranges.config_at(i);
        ++result.evaluated;
        const std::optional<double> score = try_predict_score(model, config);
        if (!score) {
            ++result.errors;
            continue;
        }
        if (*score >= target_score)
            result.feasible.push_back({config, *score, cost.cost(config)});
        else
            ++result.infeasible;
    }
    result.feasible_total = result.feasible.size();
    // Stable sort over the lexicographic enumeration keeps that order for
    // cost ties.
    std::stable_sort(result.feasible.begin(), result.feasible.end(),
                     [](const FeasiblePoint& a, const FeasiblePoint& b) { return a.cost < b.cost; });
    if (result.feasible.size() > limit)
        result.feasible.erase(result.feasible.begin() + static_cast<std::ptrdiff_t>(limit),
                              result.feasible.end());
    return result;
}

/// Cost/score staircase: walking the feasible list in cost order, emit a
/// point whenever the score improves on everything cheaper.  Costs strictly
/// increase and scores strictly increase; equal-cost candidates collapse to
/// the best of them.
inline std::vector<FrontierPoint> frontier(const ExplorationResult& result) {
    std::vector<FrontierPoint> steps;
    for (const FeasiblePoint& p : result.feasible) {
        if (!steps.empty() && p.predicted_score <= steps.back().score) continue;
        if (!steps.empty() && steps.back().cost == p.cost)
            steps.back().score = p.predicted_score;
        else
            steps.push_back({p.cost, p.predicted_score});
    }
    return steps;
}

} // namespace amdahlx
