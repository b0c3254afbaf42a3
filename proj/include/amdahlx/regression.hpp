// Ordinary least squares fit of the reciprocal speedup model.
//
// The scaled design (z-scored non-intercept columns) is solved with a
// column-pivoting complete orthogonal decomposition, which yields the
// minimum-norm solution when the design is rank deficient.  Coefficients are
// kept both in the scaled space actually solved and mapped back to the raw
// ratio space used for prediction.

#pragma once

#include "amdahlx/design.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amdahlx {

/// Relative cutoff below which a pivot is treated as zero when ranking.
inline constexpr double kRankThreshold = 1e-10;

/// Standard deviation below which a feature column counts as constant.
inline constexpr double kDegenerateStd = 1e-12;

struct FitOptions {
    bool normalize = true;
};

/// Per-column z-score parameters for the non-intercept columns.  Degenerate
/// (constant) columns keep scale 1 and are flagged.
class Scaler {
public:
    Scaler() = default;

    /// Identity scaler for k feature columns.
    static Scaler identity(std::size_t k) {
        Scaler s;
        s.mean_.assign(k, 0.0);
        s.std_.assign(k, 1.0);
        s.degenerate_.assign(k, false);
        s.fitted_on_ = 0;
        return s;
    }

    /// Rebuild from previously saved statistics (deserialization).
    static Scaler restore(std::vector<double> means, std::vector<double> stddevs,
                          std::vector<bool> degenerate, std::size_t fitted_on) {
        if (means.size() != stddevs.size() || means.size() != degenerate.size())
            throw std::invalid_argument("Scaler::restore: statistic lengths differ");
        for (double sd : stddevs)
            if (!(sd > 0.0))
                throw std::invalid_argument("Scaler::restore: scale factors must be positive");
        Scaler s;
        s.mean_ = std::move(means);
        s.std_ = std::move(stddevs);
        s.degenerate_ = std::move(degenerate);
        s.fitted_on_ = fitted_on;
        return s;
    }

    /// Column statistics from the training design (population std).
    static Scaler fit(const Eigen::MatrixXd& X) {
        const auto n = X.rows();
        const std::size_t k = X.cols() > 0 ? static_cast<std::size_t>(X.cols() - 1) : 0;
        Scaler s;
        s.mean_.resize(k);
        s.std_.resize(k);
        s.degenerate_.resize(k);
        s.fitted_on_ = static_cast<std::size_t>(n);
        for (std::size_t j = 0; j < k; ++j) {
            const auto col = X.col(static_cast<Eigen::Index>(j + 1));
            const double mu = col.mean();
            const double var = (col.array() - mu).square().sum() / static_cast<double>(n);
            const double sd = std::sqrt(var);
            s.mean_[j] = mu;
            s.degenerate_[j] = sd < kDegenerateStd;
            s.std_[j] = s.degenerate_[j] ? 1.0 : sd;
        }
        return s;
    }

    std::size_t columns() const { return mean_.size(); }
    std::size_t fitted_on() const { return fitted_on_; }
    double mean(std::size_t j) const { return mean_.at(j); }
    double stddev(std::size_t j) const { return std_.at(j); }
    bool degenerate(std::size_t j) const { return degenerate_.at(j); }
    const std::vector<double>& means() const { return mean_; }
    const std::vector<double>& stddevs() const { return std_; }
    const std::vector<bool>& degenerate_flags() const { return degenerate_; }

    /// Z-score the non-intercept columns.
    Eigen::MatrixXd transform(const Eigen::MatrixXd& X) const {
        Eigen::MatrixXd Z = X;
        for (std::size_t j = 0; j < columns(); ++j)
            Z.col(static_cast<Eigen::Index>(j + 1)) =
                (X.col(static_cast<Eigen::Index>(j + 1)).array() - mean_[j]) / std_[j];
        return Z;
    }

    /// Undo transform; transform then inverse_transform is the identity.
    Eigen::MatrixXd inverse_transform(const Eigen::MatrixXd& Z) const {
        Eigen::MatrixXd X = Z;
        for (std::size_t j = 0; j < columns(); ++j)
            X.col(static_cast<Eigen::Index>(j + 1)) =
                Z.col(static_cast<Eigen::Index>(j + 1)).array() * std_[j] + mean_[j];
        return X;
    }

private:
    std::vector<double> mean_;
    std::vector<double> std_;
    std::vector<bool> degenerate_;
    std::size_t fitted_on_ = 0;
};

/// Fraction estimates recovered from fitted coefficients by normalizing with
/// their sum.  `valid` marks whether every estimate is physically plausible
/// (inside [-eps, 1+eps] with eps = 0.05).
struct FractionEstimate {
    double serial_hat = 0.0;
    std::vector<double> term_hats;  // aligned with the model spec's term order
    bool valid = false;

    static constexpr double kValidSlack = 0.05;
};

/// A trained model: spec, coefficients in both spaces, scaler, and training
/// diagnostics.  Immutable; safe to share across threads for prediction.
class FittedModel {
public:
    FittedModel(ModelSpec spec, Eigen::VectorXd coefficients_raw,
                Eigen::VectorXd coefficients_scaled, Scaler scaler, int rank,
                double condition, double training_mape, std::vector<std::string> warnings)
        : spec_(std::move(spec)),
          coefficients_raw_(std::move(coefficients_raw)),
          coefficients_scaled_(std::move(coefficients_scaled)),
          scaler_(std::move(scaler)),
          rank_(rank),
          condition_(condition),
          training_mape_(training_mape),
          warnings_(std::move(warnings)) {
        const auto expected = static_cast<Eigen::Index>(spec_.term_count() + 1);
        if (coefficients_raw_.size() != expected || coefficients_scaled_.size() != expected)
            throw std::invalid_argument("FittedModel: coefficient length does not match spec");
    }

    const ModelSpec& spec() const { return spec_; }
    const Eigen::VectorXd& coefficients_raw() const { return coefficients_raw_; }
    const Eigen::VectorXd& coefficients_scaled() const { return coefficients_scaled_; }
    const Scaler& scaler() const { return scaler_; }
    int rank() const { return rank_; }
    double condition_estimate() const { return condition_; }
    double training_mape() const { return training_mape_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    ModelSpec spec_;
    Eigen::VectorXd coefficients_raw_;
    Eigen::VectorXd coefficients_scaled_;
    Scaler scaler_;
    int rank_;
    double condition_;
    double training_mape_;
    std::vector<std::string> warnings_;
};

namespace detail {

/// Predicted inverse score for one row of raw features.
inline double dot_raw(const Eigen::VectorXd& alpha, const Eigen::VectorXd& features) {
    return alpha.dot(features);
}

inline Eigen::VectorXd feature_row(const ModelSpec& spec, const ResourceVector& config) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(spec.term_count() + 1));
    x(0) = 1.0;
    for (std::size_t t = 0; t < spec.term_count(); ++t)
        x(static_cast<Eigen::Index>(t + 1)) =
            term_ratio(spec.terms()[t], spec.baseline(), config);
    return x;
}

/// MAPE in the score domain where failed predictions (inverse <= 0) count as
/// 100% error per row.  Returns {mape_percent, failed_row_count}.
inline std::pair<double, std::size_t>
mape_with_failures(const std::vector<double>& actual_scores,
                   const std::vector<std::optional<double>>& predicted_scores) {
    double sum = 0.0;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < actual_scores.size(); ++i) {
        if (predicted_scores[i]) {
            sum += std::abs(actual_scores[i] - *predicted_scores[i]) / actual_scores[i];
        } else {
            sum += 1.0;
            ++failed;
        }
    }
    const double mape =
        actual_scores.empty() ? 0.0 : 100.0 * sum / static_cast<double>(actual_scores.size());
    return {mape, failed};
}

} // namespace detail

/// Least-squares fit of a design built from `spec`.  Emits warnings (not
/// errors) for constant feature columns and rank deficiency.
inline FittedModel fit(const ModelSpec& spec, const DesignMatrix& design,
                       const FitOptions& options = {}) {
    const Eigen::Index n = design.rows();
    const Eigen::Index p = design.cols();
    if (n < 1)
        throw std::invalid_argument("fit: empty design");
    if (p != static_cast<Eigen::Index>(spec.term_count() + 1))
        throw std::invalid_argument("fit: design width does not match the spec");
    if (!design.X.allFinite() || !design.y.allFinite())
        throw std::invalid_argument("fit: design contains non-finite entries");

    std::vector<std::string> warnings;
    const Scaler scaler = options.normalize
                              ? Scaler::fit(design.X)
                              : Scaler::identity(static_cast<std::size_t>(p - 1));
    if (options.normalize) {
        for (std::size_t j = 0; j < scaler.columns(); ++j)
            if (scaler.degenerate(j))
                warnings.push_back("column '" + design.labels[j + 1] +
                                   "' is constant across the training rows; its effect "
                                   "cannot be identified from this data");
    }

    const Eigen::MatrixXd Z = scaler.transform(design.X);

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(kRankThreshold);
    cod.compute(Z);
    const Eigen::VectorXd beta = cod.solve(design.y);
    const int rank = static_cast<int>(cod.rank());

    double condition = 0.0;
    if (rank > 0) {
        const Eigen::VectorXd diag =
            cod.matrixT().diagonal().head(rank).cwiseAbs();
        const double lo = diag.minCoeff();
        condition = lo > 0.0 ? diag.maxCoeff() / lo : std::numeric_limits<double>::infinity();
    }

    if (rank < static_cast<int>(p))
        warnings.push_back("design matrix rank " + std::to_string(rank) + " < " +
                           std::to_string(p) +
                           "; coefficients are a minimum-norm least-squares solution");

    // Map scaled coefficients back to the raw ratio space:
    //   y = b0 + sum_j b_j (x_j - mu_j) / sd_j
    //     = (b0 - sum_j b_j mu_j / sd_j) + sum_j (b_j / sd_j) x_j
    Eigen::VectorXd alpha(p);
    double intercept = beta(0);
    for (std::size_t j = 0; j < scaler.columns(); ++j) {
        const double aj = beta(static_cast<Eigen::Index>(j + 1)) / scaler.stddev(j);
        alpha(static_cast<Eigen::Index>(j + 1)) = aj;
        intercept -= aj * scaler.mean(j);
    }
    alpha(0) = intercept;

    // Training MAPE in the score domain, from the already-built features.
    std::vector<double> actual(static_cast<std::size_t>(n));
    std::vector<std::optional<double>> predicted(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        actual[static_cast<std::size_t>(i)] = 1.0 / design.y(i);
        const double yhat = design.X.row(i).dot(alpha);
        if (yhat > 0.0)
            predicted[static_cast<std::size_t>(i)] = 1.0 / yhat;
    }
    const auto [mape, failed] = detail::mape_with_failures(actual, predicted);
    if (failed > 0)
        warnings.push_back(std::to_string(failed) +
                           " training row(s) predicted a nonpositive inverse score");

    return FittedModel(spec, std::move(alpha), beta, scaler, rank, condition, mape,
                       std::move(warnings));
}

/// Convenience overload building the design first.
inline FittedModel fit(const ModelSpec& spec, const Dataset& data,
                       const FitOptions& options = {}) {
    return fit(spec, build_design(spec, data), options);
}

/// Predicted inverse score without the positivity check; nonpositive values
/// signal extrapolation beyond the model's validity.
inline double predict_inverse_raw(const FittedModel& model, const ResourceVector& config) {
    if (!config.conforms_to(model.spec().schema()))
        throw std::domain_error("predict: configuration schema does not match the model");
    return detail::dot_raw(model.coefficients_raw(),
                           detail::feature_row(model.spec(), config));
}

/// Predicted inverse score; throws when the model extrapolates into an
/// invalid region (result <= 0), echoing the offending configuration.
inline double predict_inverse(const FittedModel& model, const ResourceVector& config) {
    const double yhat = predict_inverse_raw(model, config);
    if (!(yhat > 0.0) || !std::isfinite(yhat))
        throw std::domain_error("predict: nonpositive inverse score " + std::to_string(yhat) +
                                " for configuration (" + config.describe() + ")");
    return yhat;
}

/// Predicted benchmark score (reciprocal of the inverse prediction).
inline double predict_score(const FittedModel& model, const ResourceVector& config) {
    return 1.0 / predict_inverse(model, config);
}

/// Score prediction that reports failure instead of throwing.
inline std::optional<double> try_predict_score(const FittedModel& model,
                                               const ResourceVector& config) {
    const double yhat = predict_inverse_raw(model, config);
    if (!(yhat > 0.0) || !std::isfinite(yhat)) return std::nullopt;
    return 1.0 / yhat;
}

/// Whether a fraction estimate sits inside [0, 1] up to the validity slack.
inline bool in_unit_slack(double f) {
    return f >= -FractionEstimate::kValidSlack && f <= 1.0 + FractionEstimate::kValidSlack;
}

/// Fractions implied by the coefficients: each estimate is its coefficient
/// divided by the coefficient sum, so any uniform rescaling cancels.
inline FractionEstimate extract_fractions(const FittedModel& model) {
    const auto& alpha = model.coefficients_raw();
    const double total = alpha.sum();
    if (std::abs(total) <= 1e-12)
        throw std::domain_error("extract_fractions: coefficient sum is numerically zero");
    FractionEstimate est;
    est.serial_hat = alpha(0) / total;
    est.term_hats.resize(static_cast<std::size_t>(alpha.size() - 1));
    bool valid = in_unit_slack(est.serial_hat);
    for (std::size_t t = 0; t < est.term_hats.size(); ++t) {
        est.term_hats[t] = alpha(static_cast<Eigen::Index>(t + 1)) / total;
        valid = valid && in_unit_slack(est.term_hats[t]);
    }
    est.valid = valid;
    return est;
}

} // namespace amdahlx
