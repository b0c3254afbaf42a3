// Named system resources and concrete configurations.
//
// A ResourceSchema fixes the set of configurable resources (cores, core
// frequency, cache size, ...) for one modeling problem; a ResourceVector is
// one configuration of those resources in natural units.  Both are immutable
// after construction and safe to share across threads.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amdahlx {

/// Ordered list of unique, non-empty resource names.
class ResourceSchema {
public:
    explicit ResourceSchema(std::vector<std::string> names)
        : names_(std::move(names)) {
        if (names_.empty())
            throw std::invalid_argument("ResourceSchema: at least one resource required");
        for (const auto& n : names_) {
            if (n.empty())
                throw std::invalid_argument("ResourceSchema: resource names must be non-empty");
        }
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("ResourceSchema: duplicate resource name");
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    /// Index of a resource that must exist.
    std::size_t index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw std::invalid_argument("ResourceSchema: unknown resource '" + std::string(name) + "'");
    }

    bool operator==(const ResourceSchema& o) const { return names_ == o.names_; }
    bool operator!=(const ResourceSchema& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

using SchemaPtr = std::shared_ptr<const ResourceSchema>;

inline SchemaPtr make_schema(std::vector<std::string> names) {
    return std::make_shared<const ResourceSchema>(std::move(names));
}

/// One system configuration: a strictly positive, finite value per resource.
class ResourceVector {
public:
    ResourceVector(SchemaPtr schema, std::vector<double> values)
        : schema_(std::move(schema)), values_(std::move(values)) {
        if (!schema_)
            throw std::invalid_argument("ResourceVector: null schema");
        if (values_.size() != schema_->size())
            throw std::invalid_argument("ResourceVector: expected " +
                                        std::to_string(schema_->size()) + " values, got " +
                                        std::to_string(values_.size()));
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i]) || values_[i] <= 0.0)
                throw std::domain_error("ResourceVector: resource '" + schema_->name(i) +
                                        "' must be a positive finite value");
        }
    }

    const ResourceSchema& schema() const { return *schema_; }
    const SchemaPtr& schema_ptr() const { return schema_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    double value_of(std::string_view name) const { return values_[schema_->index_of(name)]; }

    bool conforms_to(const ResourceSchema& s) const { return *schema_ == s; }

    bool same_values(const ResourceVector& o) const {
        return *schema_ == *o.schema_ && values_ == o.values_;
    }

    /// "cores=28, core_freq_mhz=2500" style rendering for diagnostics.
    std::string describe() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) os << ", ";
            os << schema_->name(i) << '=' << values_[i];
        }
        return os.str();
    }

private:
    SchemaPtr schema_;
    std::vector<double> values_;
};

} // namespace amdahlx
