// K-fold cross-validation with mean-absolute-percentage-error scoring.
//
// Folds are contiguous blocks of a deterministically shuffled index vector,
// so a report is reproducible from (dataset order, fold count, seed).  Every
// fold refits the model — including its column scaler — on the training rows
// only; held-out rows never influence the fit they are scored against.

#pragma once

#include "amdahlx/regression.hpp"
#include "amdahlx/rng.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amdahlx {

/// Assignment of every dataset row to exactly one held-out fold.
class FoldPlan {
public:
    FoldPlan(std::size_t n, std::size_t k, std::uint64_t seed) : n_(n), k_(k), seed_(seed) {
        if (k < 2) throw std::invalid_argument("FoldPlan: need at least 2 folds");
        if (n < k)
            throw std::invalid_argument("FoldPlan: " + std::to_string(n) +
                                        " rows cannot fill " + std::to_string(k) + " folds");
        const std::vector<std::size_t> order = rng::shuffled_indices(n, seed);
        folds_.resize(k);
        // First n % k folds take one extra row so sizes differ by at most one.
        const std::size_t base = n / k;
        const std::size_t extra = n % k;
        std::size_t pos = 0;
        for (std::size_t f = 0; f < k; ++f) {
            const std::size_t len = base + (f < extra ? 1 : 0);
            folds_[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                             order.begin() + static_cast<std::ptrdiff_t>(pos + len));
            pos += len;
        }
    }

    std::size_t rows() const { return n_; }
    std::size_t fold_count() const { return k_; }
    std::uint64_t seed() const { return seed_; }

    /// Row indices held out in fold f.
    const std::vector<std::size_t>& holdout(std::size_t f) const { return folds_.at(f); }

    /// The fold holding out row i (per-row assignment view).
    std::size_t fold_of(std::size_t row) const {
        for (std::size_t f = 0; f < folds_.size(); ++f)
            for (std::size_t i : folds_[f])
                if (i == row) return f;
        throw std::out_of_range("FoldPlan: row " + std::to_string(row) + " out of range");
    }

    /// Row indices trained on in fold f (complement of the holdout).
    std::vector<std::size_t> training(std::size_t f) const {
        std::vector<bool> held(n_, false);
        for (std::size_t i : folds_.at(f)) held[i] = true;
        std::vector<std::size_t> train;
        train.reserve(n_ - folds_.at(f).size());
        for (std::size_t i = 0; i < n_; ++i)
            if (!held[i]) train.push_back(i);
        return train;
    }

private:
    std::size_t n_;
    std::size_t k_;
    std::uint64_t seed_;
    std::vector<std::vector<std::size_t>> folds_;
};

/// Standard five-fold plan (k overridable for experiments).
inline FoldPlan make_folds(std::size_t n, std::uint64_t seed, std::size_t k = 5) {
    return FoldPlan(n, k, seed);
}

/// Mean absolute percentage error, in percent.
inline double mape(const std::vector<double>& actual, const std::vector<double>& predicted) {
    if (actual.size() != predicted.size())
        throw std::invalid_argument("mape: actual and predicted lengths differ");
    if (actual.empty()) throw std::invalid_argument("mape: empty input");
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (!(actual[i] > 0.0))
            throw std::invalid_argument("mape: actual value at index " + std::to_string(i) +
                                        " is not positive");
        sum += std::abs(actual[i] - predicted[i]) / actual[i];
    }
    return 100.0 * sum / static_cast<double>(actual.size());
}

/// Cross-validation outcome.  `accuracy` is the 100 - MAPE convention, so a
/// model at 3% mean error reports 97% accuracy.
struct CvReport {
    std::string label;                     // model/dataset tag for summary tables
    std::size_t fold_count = 0;
    std::uint64_t seed = 0;
    std::vector<double> fold_mapes;        // one MAPE (percent) per fold
    std::vector<std::size_t> fold_sizes;   // held-out rows per fold
    double mean_mape = 0.0;                // arithmetic mean of fold MAPEs
    double accuracy = 0.0;                 // always exactly 100 - mean_mape
    std::size_t failed_predictions = 0;    // held-out rows with no usable prediction
    std::vector<std::optional<double>> row_predictions;  // out-of-fold score per row
    std::vector<std::string> warnings;     // deduplicated fold-fit warnings
};

/// Five-fold (by default) cross-validation of `spec` over `data`.  Held-out
/// rows whose prediction is unusable (nonpositive inverse score) are charged
/// the full 100% error rather than dropped, so degenerate fits cannot look
/// good by failing to predict.
inline CvReport cross_validate(const ModelSpec& spec, const Dataset& data, std::uint64_t seed,
                               std::size_t folds = 5, const FitOptions& options = {}) {
    const FoldPlan plan(data.size(), folds, seed);
    CvReport report;
    report.label = data.source();
    report.fold_count = folds;
    report.seed = seed;
    report.row_predictions.assign(data.size(), std::nullopt);

    for (std::size_t f = 0; f < folds; ++f) {
        const auto train_rows = plan.training(f);
        const auto& test_rows = plan.holdout(f);
        std::optional<FittedModel> fitted;
        try {
            fitted = fit(spec, data.subset(train_rows), options);
        } catch (const std::exception& e) {
            throw std::invalid_argument("cross_validate: fold " + std::to_string(f) + ": " +
                                        e.what());
        }
        const FittedModel& model = *fitted;
        for (const std::string& w : model.warnings()) {
            bool seen = false;
            for (const std::string& have : report.warnings) seen = seen || have == w;
            if (!seen) report.warnings.push_back(w);
        }

        std::vector<double> actual;
        std::vector<std::optional<double>> predicted;
        actual.reserve(test_rows.size());
        predicted.reserve(test_rows.size());
        for (std::size_t i : test_rows) {
            const std::optional<double> score = try_predict_score(model, data.row(i).config);
            actual.push_back(data.row(i).score);
            predicted.push_back(score);
            report.row_predictions[i] = score;
            if (!score) ++report.failed_predictions;
        }
        const auto [fold_mape, failed] = detail::mape_with_failures(actual, predicted);
        (void)failed;  // already counted per row above
        report.fold_mapes.push_back(fold_mape);
        report.fold_sizes.push_back(test_rows.size());
    }

    report.mean_mape =
        std::accumulate(report.fold_mapes.begin(), report.fold_mapes.end(), 0.0) /
        static_cast<double>(report.fold_mapes.size());
    report.accuracy = 100.0 - report.mean_mape;
    return report;
}

} // namespace amdahlx
