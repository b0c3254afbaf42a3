// Ground-truth dataset generator.
//
// Runs the speedup model forward from known fractions to produce
// benchmark-like datasets, optionally with multiplicative truncated-Gaussian
// noise.  Fitting this output closes the loop: with zero noise the regression
// must recover the generating fractions almost exactly.

#pragma once

#include "amdahlx/dataset.hpp"
#include "amdahlx/model.hpp"
#include "amdahlx/ranges.hpp"
#include "amdahlx/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amdahlx {

/// A known model to generate from: spec, true fractions keyed by the spec's
/// terms, and the score of the baseline configuration.
class GroundTruth {
public:
    GroundTruth(ModelSpec spec, FractionSet fractions, double baseline_perf)
        : spec_(std::move(spec)), fractions_(std::move(fractions)), baseline_perf_(baseline_perf) {
        if (!std::isfinite(baseline_perf_) || baseline_perf_ <= 0.0)
            throw std::domain_error("GroundTruth: baseline performance must be positive");
        if (fractions_.parallel().size() != spec_.term_count())
            throw std::invalid_argument("GroundTruth: fraction count does not match the spec");
        for (const auto& t : spec_.terms())
            fractions_.fraction_of(t);  // throws when a term has no fraction
    }

    const ModelSpec& spec() const { return spec_; }
    const FractionSet& fractions() const { return fractions_; }
    double baseline_perf() const { return baseline_perf_; }

    /// Noise-free score of a configuration.
    double true_score(const ResourceVector& config) const {
        const SpeedupResult s = speedup_multi(fractions_, spec_.terms(), spec_.baseline(), config);
        return score_from_speedup(s.speedup, baseline_perf_);
    }

private:
    ModelSpec spec_;
    FractionSet fractions_;
    double baseline_perf_;
};

/// Measurement noise description.  Only multiplicative truncated-Gaussian
/// noise exists; sigma = 0 behaves exactly like no noise at all.
struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;

    static NoiseSpec none() { return {0.0, 0}; }
    static NoiseSpec gaussian(double sigma, std::uint64_t seed) {
        if (!(sigma >= 0.0) || !std::isfinite(sigma))
            throw std::invalid_argument("NoiseSpec: sigma must be a nonnegative finite value");
        return {sigma, seed};
    }

    bool active() const { return sigma > 0.0; }
};

enum class SampleMode {
    random_uniform,  ///< n independent draws, each resource uniform over its levels
    full_grid,       ///< every grid point in lexicographic order; n is ignored
};

/// Draw training configurations from a range table.  Deterministic given the
/// seed; full-grid mode refuses grids above the cap.
inline std::vector<ResourceVector> sample_configs(const RangeTable& ranges, std::size_t n,
                                                  std::uint64_t seed,
                                                  SampleMode mode = SampleMode::random_uniform,
                                                  std::size_t grid_cap = kDefaultGridCap) {
    std::vector<ResourceVector> configs;
    if (mode == SampleMode::full_grid) {
        const std::size_t total = ranges.grid_size();
        if (total > grid_cap)
            throw std::invalid_argument("sample_configs: full grid has " + std::to_string(total) +
                                        " points, above the cap of " + std::to_string(grid_cap));
        configs.reserve(total);
        for (std::size_t i = 0; i < total; ++i) configs.push_back(ranges.config_at(i));
        return configs;
    }

    if (n < 1) throw std::invalid_argument("sample_configs: need at least one configuration");
    std::mt19937_64 eng(rng::splitmix64(seed));
    configs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> values(ranges.axes());
        for (std::size_t j = 0; j < ranges.axes(); ++j) {
            const auto& axis = ranges.levels(j);
            values[j] = axis[rng::bounded(eng, axis.size())];
        }
        configs.emplace_back(ranges.schema(), std::move(values));
    }
    return configs;
}

/// Evaluate the ground truth over the configurations and apply noise:
/// score_i = true_score_i * (1 + eps_i) with eps_i derived from
/// (noise.seed, i) and truncated to (-0.5, 0.5), so scores stay positive
/// and row order does not affect any draw.
inline Dataset generate(const GroundTruth& truth, const std::vector<ResourceVector>& configs,
                        const NoiseSpec& noise = NoiseSpec::none()) {
    std::vector<Observation> rows;
    rows.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        double score = truth.true_score(configs[i]);
        if (noise.active())
            score *= 1.0 + rng::truncated_gaussian(noise.seed, i, noise.sigma);
        rows.push_back({configs[i], score});
    }
    return Dataset(truth.spec().schema_ptr(), std::move(rows), "synthetic");
}

} // namespace amdahlx
