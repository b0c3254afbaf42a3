// Regression target and design matrix via the reciprocal transform.
//
// Row i of the design is [1, ratio(term_1, baseline, config_i), ...] and the
// target is y_i = 1 / score_i, so that the speedup model becomes an ordinary
// linear regression y = X a.

#pragma once

#include "amdahlx/dataset.hpp"
#include "amdahlx/features.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace amdahlx {

/// n x (K+1) feature matrix with an all-ones intercept column, the inverse
/// score target, and per-column labels.
struct DesignMatrix {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    std::vector<std::string> labels;

    Eigen::Index rows() const { return X.rows(); }
    Eigen::Index cols() const { return X.cols(); }
};

/// Build the design matrix for a spec over a dataset.  Row order is
/// preserved; the result is a pure function of the inputs.
inline DesignMatrix build_design(const ModelSpec& spec, const Dataset& data) {
    if (data.empty())
        throw std::invalid_argument("build_design: empty dataset");
    if (data.schema() != spec.schema())
        throw std::invalid_argument("build_design: dataset schema does not match the spec");

    const std::size_t n = data.size();
    const std::size_t k = spec.term_count();
    DesignMatrix d;
    d.X.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k + 1));
    d.y.resize(static_cast<Eigen::Index>(n));
    d.labels.reserve(k + 1);
    d.labels.push_back("intercept");
    for (const auto& t : spec.terms()) d.labels.push_back(t.label());

    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = data.row(i);
        d.y(static_cast<Eigen::Index>(i)) = 1.0 / row.score;
        d.X(static_cast<Eigen::Index>(i), 0) = 1.0;
        for (std::size_t t = 0; t < k; ++t) {
            const double v = term_ratio(spec.terms()[t], spec.baseline(), row.config);
            if (!std::isfinite(v) || v <= 0.0)
                throw std::invalid_argument("build_design: row " + std::to_string(i) +
                                            ", term '" + spec.terms()[t].label() +
                                            "' produced a non-finite or nonpositive ratio");
            d.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t + 1)) = v;
        }
    }
    return d;
}

} // namespace amdahlx
