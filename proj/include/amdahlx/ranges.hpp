// Discrete per-resource value ranges.
//
// A RangeTable pins down the finite set of values each resource may take —
// either an arithmetic progression or an explicit level list.  The same table
// drives random sampling of training configurations and exhaustive grid
// enumeration, so both views agree on what the feasible space is.

#pragma once

#include "amdahlx/resources.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace amdahlx {

/// Default ceiling on exhaustive grid enumeration.
inline constexpr std::size_t kDefaultGridCap = 1'000'000;

/// One value list per schema resource, each sorted ascending with duplicates
/// removed.  Enumeration order over the full grid is lexicographic in schema
/// order with the last resource varying fastest.
class RangeTable {
public:
    RangeTable(SchemaPtr schema, std::vector<std::vector<double>> levels)
        : schema_(std::move(schema)), levels_(std::move(levels)) {
        if (!schema_) throw std::invalid_argument("RangeTable: null schema");
        if (levels_.size() != schema_->size())
            throw std::invalid_argument("RangeTable: expected one level list per resource, got " +
                                        std::to_string(levels_.size()) + " for " +
                                        std::to_string(schema_->size()));
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            auto& axis = levels_[j];
            if (axis.empty())
                throw std::invalid_argument("RangeTable: resource '" + schema_->name(j) +
                                            "' has no values");
            for (double v : axis)
                if (!std::isfinite(v) || v <= 0.0)
                    throw std::invalid_argument("RangeTable: resource '" + schema_->name(j) +
                                                "' has a nonpositive or non-finite value");
            std::sort(axis.begin(), axis.end());
            axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
        }
    }

    /// Inclusive arithmetic progression lo, lo+step, ... capped at hi.
    static std::vector<double> arithmetic(double lo, double hi, double step) {
        if (!(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(step)))
            throw std::invalid_argument("RangeTable::arithmetic: non-finite bound or step");
        if (lo <= 0.0) throw std::invalid_argument("RangeTable::arithmetic: lo must be positive");
        if (step <= 0.0) throw std::invalid_argument("RangeTable::arithmetic: step must be positive");
        if (hi < lo) throw std::invalid_argument("RangeTable::arithmetic: hi is below lo");
        // Tolerate bounds like hi = lo + 3*step that round a hair short.
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        std::vector<double> out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k) out.push_back(lo + static_cast<double>(k) * step);
        return out;
    }

    const SchemaPtr& schema() const { return schema_; }
    std::size_t axes() const { return levels_.size(); }
    const std::vector<double>& levels(std::size_t j) const { return levels_.at(j); }

    /// Number of grid points; throws if the product overflows size_t.
    std::size_t grid_size() const {
        std::size_t total = 1;
        for (const auto& axis : levels_) {
            if (total > std::numeric_limits<std::size_t>::max() / axis.size())
                throw std::overflow_error("RangeTable: grid size overflows");
            total *= axis.size();
        }
        return total;
    }

    /// The i-th grid point in lexicographic order (last resource fastest).
    ResourceVector config_at(std::size_t index) const {
        if (index >= grid_size())
            throw std::out_of_range("RangeTable: grid index " + std::to_string(index) +
                                    " out of range");
        std::vector<double> values(levels_.size());
        std::size_t rest = index;
        for (std::size_t j = levels_.size(); j-- > 0;) {
            const auto& axis = levels_[j];
            values[j] = axis[rest % axis.size()];
            rest /= axis.size();
        }
        return ResourceVector(schema_, std::move(values));
    }

    /// Smallest value of every resource, as a configuration.
    ResourceVector minima() const {
        std::vector<double> values(levels_.size());
        for (std::size_t j = 0; j < levels_.size(); ++j) values[j] = levels_[j].front();
        return ResourceVector(schema_, std::move(values));
    }

    /// Largest value of every resource, as a configuration.
    ResourceVector maxima() const {
        std::vector<double> values(levels_.size());
        for (std::size_t j = 0; j < levels_.size(); ++j) values[j] = levels_[j].back();
        return ResourceVector(schema_, std::move(values));
    }

private:
    SchemaPtr schema_;
    std::vector<std::vector<double>> levels_;
};

} // namespace amdahlx
