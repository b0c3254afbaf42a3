// Forward speedup model.
//
// Speedup of a test configuration over a baseline for a program whose
// mutually exclusive fractions are each enhanced by one resource term:
//
//   S = 1 / (serial + sum_t f_t * ratio_t(base, test))
//
// where ratio_t is the term's enhancement ratio (base over test).  With a
// single one-resource term this is the classic serial/parallel split.

#pragma once

#include "amdahlx/features.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <vector>

namespace amdahlx {

/// Speedup together with the serial-plus-parallel denominator it came from.
struct SpeedupResult {
    double speedup;
    double denominator;
};

/// Ground-truth program fractions: a serial remainder plus one fraction per
/// feature term.  Construction enforces the physical constraints (each
/// fraction in [0, 1], total exactly 1); fitted models are deliberately not
/// run through this type.
class FractionSet {
public:
    FractionSet(double serial, std::map<FeatureTerm, double> parallel)
        : serial_(serial), parallel_(std::move(parallel)) {
        validate();
    }

    /// Build with serial = 1 - sum of the given parallel fractions.
    static FractionSet with_remainder(std::map<FeatureTerm, double> parallel) {
        double sum = 0.0;
        for (const auto& [t, f] : parallel) { (void)t; sum += f; }
        return FractionSet(1.0 - sum, std::move(parallel));
    }

    double serial() const { return serial_; }
    const std::map<FeatureTerm, double>& parallel() const { return parallel_; }

    double fraction_of(const FeatureTerm& term) const {
        auto it = parallel_.find(term);
        if (it == parallel_.end())
            throw std::invalid_argument("FractionSet: no fraction for term '" + term.label() + "'");
        return it->second;
    }

private:
    void validate() const {
        double sum = serial_;
        auto in_unit = [](double f) { return std::isfinite(f) && f >= 0.0 && f <= 1.0; };
        if (!in_unit(serial_))
            throw std::domain_error("FractionSet: serial fraction must lie in [0, 1]");
        for (const auto& [t, f] : parallel_) {
            if (!in_unit(f))
                throw std::domain_error("FractionSet: fraction for term '" + t.label() +
                                        "' must lie in [0, 1]");
            sum += f;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::domain_error("FractionSet: fractions must sum to 1 (got " +
                                    std::to_string(sum) + ")");
    }

    double serial_;
    std::map<FeatureTerm, double> parallel_;
};

/// Single-resource speedup: 1 / ((1 - f) + f * (r_base / r_test)).
inline SpeedupResult speedup_single(double fraction, double r_base, double r_test) {
    if (!std::isfinite(fraction) || fraction < 0.0 || fraction > 1.0)
        throw std::domain_error("speedup_single: fraction must lie in [0, 1]");
    if (!(r_base > 0.0) || !(r_test > 0.0))
        throw std::domain_error("speedup_single: resource values must be positive");
    const double denom = (1.0 - fraction) + fraction * (r_base / r_test);
    if (!(denom > 0.0))
        throw std::domain_error("speedup_single: nonpositive denominator");
    return {1.0 / denom, denom};
}

/// Multi-resource speedup over an explicit term list.  The fractions must be
/// keyed exactly by `terms`; base and test must share the same schema.
inline SpeedupResult speedup_multi(const FractionSet& fractions,
                                   const std::vector<FeatureTerm>& terms,
                                   const ResourceVector& base,
                                   const ResourceVector& test) {
    if (!base.conforms_to(test.schema()))
        throw std::domain_error("speedup_multi: baseline and test schemas differ");
    if (fractions.parallel().size() != terms.size())
        throw std::invalid_argument("speedup_multi: fraction set and term list sizes differ");
    double denom = fractions.serial();
    for (const auto& term : terms)
        denom += fractions.fraction_of(term) * term_ratio(term, base, test);
    if (!(denom > 0.0))
        throw std::domain_error("speedup_multi: nonpositive denominator");
    return {1.0 / denom, denom};
}

/// Test score implied by a speedup over a baseline score.
inline double score_from_speedup(double speedup, double baseline_perf) {
    if (!(speedup > 0.0) || !(baseline_perf > 0.0))
        throw std::domain_error("score_from_speedup: arguments must be positive");
    return baseline_perf * speedup;
}

} // namespace amdahlx
