// Measurement table: configurations with their benchmark scores.

#pragma once

#include "amdahlx/resources.hpp"

#include <string>
#include <utility>
#include <vector>

namespace amdahlx {

/// One benchmark run: a configuration and the score it produced.
struct Observation {
    ResourceVector config;
    double score;
};

/// Rows of (configuration, score).  Scores are "higher is better" and must
/// be strictly positive; metrics where lower is better are expected to be
/// inverted before ingestion.  Duplicate configurations are allowed (repeat
/// runs).
class Dataset {
public:
    Dataset(SchemaPtr schema, std::vector<Observation> rows, std::string source = "")
        : schema_(std::move(schema)), rows_(std::move(rows)), source_(std::move(source)) {
        if (!schema_)
            throw std::invalid_argument("Dataset: null schema");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!rows_[i].config.conforms_to(*schema_))
                throw std::invalid_argument("Dataset: row " + std::to_string(i) +
                                            " does not conform to the schema");
            if (!std::isfinite(rows_[i].score) || rows_[i].score <= 0.0)
                throw std::invalid_argument("Dataset: row " + std::to_string(i) +
                                            " has a nonpositive score");
        }
    }

    const ResourceSchema& schema() const { return *schema_; }
    const SchemaPtr& schema_ptr() const { return schema_; }
    const std::vector<Observation>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const Observation& row(std::size_t i) const { return rows_.at(i); }
    const std::string& source() const { return source_; }

    /// Rows selected by index, in the given order.
    Dataset subset(const std::vector<std::size_t>& indices) const {
        std::vector<Observation> sel;
        sel.reserve(indices.size());
        for (auto i : indices) sel.push_back(rows_.at(i));
        return Dataset(schema_, std::move(sel), source_);
    }

    /// Per-resource minimum over all rows; the default baseline choice.
    ResourceVector column_minima() const {
        if (rows_.empty())
            throw std::invalid_argument("Dataset: minima of an empty dataset");
        std::vector<double> mins = rows_.front().config.values();
        for (const auto& r : rows_)
            for (std::size_t j = 0; j < mins.size(); ++j)
                mins[j] = std::min(mins[j], r.config[j]);
        return ResourceVector(schema_, std::move(mins));
    }

    /// Per-resource maximum over all rows.
    ResourceVector column_maxima() const {
        if (rows_.empty())
            throw std::invalid_argument("Dataset: maxima of an empty dataset");
        std::vector<double> maxs = rows_.front().config.values();
        for (const auto& r : rows_)
            for (std::size_t j = 0; j < maxs.size(); ++j)
                maxs[j] = std::max(maxs[j], r.config[j]);
        return ResourceVector(schema_, std::move(maxs));
    }

private:
    SchemaPtr schema_;
    std::vector<Observation> rows_;
    std::string source_;
};

} // namespace amdahlx
