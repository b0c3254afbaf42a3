// Monomial feature terms over resources and the model specification.
//
// A FeatureTerm is a monomial with integer exponents, e.g. {cores: 1},
// {cores: 1, mem_freq_mhz: 1} for a two-factor interaction, or
// {mem_freq_mhz: 1, mem_channels: 1, cores: -1} for bandwidth per core.
// Its enhancement ratio between a baseline and a test configuration is
// prod_j (base_j / test_j)^e_j.

#pragma once

#include "amdahlx/resources.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace amdahlx {

namespace detail {

/// pow with integer exponent via binary exponentiation; exact for e in {-1,0,1}.
inline double ipow(double base, int exp) {
    if (exp < 0) return 1.0 / ipow(base, -exp);
    double result = 1.0;
    double b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e != 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace detail

/// Monomial over resources: map from resource name to nonzero integer exponent.
/// Equality and ordering consider the exponent map only, never the label.
class FeatureTerm {
public:
    explicit FeatureTerm(std::map<std::string, int> exponents, std::string label = "")
        : exponents_(std::move(exponents)), label_(std::move(label)) {
        if (exponents_.empty())
            throw std::invalid_argument("FeatureTerm: at least one nonzero exponent required");
        for (const auto& [name, e] : exponents_) {
            if (name.empty())
                throw std::invalid_argument("FeatureTerm: empty resource name");
            if (e == 0)
                throw std::invalid_argument("FeatureTerm: zero exponent for '" + name + "'");
        }
        if (label_.empty()) label_ = derive_label();
    }

    /// Single-resource term r^1.
    static FeatureTerm single(const std::string& resource) {
        return FeatureTerm({{resource, 1}});
    }

    /// Two-factor interaction r_a * r_b.
    static FeatureTerm pair(const std::string& a, const std::string& b) {
        return FeatureTerm({{a, 1}, {b, 1}});
    }

    const std::map<std::string, int>& exponents() const { return exponents_; }
    const std::string& label() const { return label_; }

    /// True when every referenced resource exists in the schema.
    bool defined_over(const ResourceSchema& schema) const {
        for (const auto& [name, e] : exponents_) {
            (void)e;
            if (!schema.find(name)) return false;
        }
        return true;
    }

    bool operator==(const FeatureTerm& o) const { return exponents_ == o.exponents_; }
    bool operator!=(const FeatureTerm& o) const { return !(*this == o); }
    bool operator<(const FeatureTerm& o) const { return exponents_ < o.exponents_; }

private:
    std::string derive_label() const {
        std::string num, den;
        for (const auto& [name, e] : exponents_) {
            std::string& part = e > 0 ? num : den;
            if (!part.empty()) part += '*';
            part += name;
            int a = e > 0 ? e : -e;
            if (a != 1) part += '^' + std::to_string(a);
        }
        if (den.empty()) return num;
        if (num.empty()) num = "1";
        return num + '/' + den;
    }

    std::map<std::string, int> exponents_;
    std::string label_;
};

/// Enhancement ratio of a term between baseline and test configurations:
/// prod_j (base_j / test_j)^e_j.  This is the design-matrix entry for the
/// term after the reciprocal transform.
inline double term_ratio(const FeatureTerm& term, const ResourceVector& base,
                         const ResourceVector& test) {
    if (!base.conforms_to(test.schema()))
        throw std::domain_error("term_ratio: baseline and test schemas differ");
    double r = 1.0;
    for (const auto& [name, e] : term.exponents()) {
        const std::size_t j = base.schema().index_of(name);
        r *= detail::ipow(base[j] / test[j], e);
    }
    return r;
}

/// Default term list: one single-resource term per schema entry (schema
/// order), all two-factor interactions when requested (index-lexicographic
/// order), then any extra terms in the given order.  Duplicates collapse to
/// the first occurrence.
inline std::vector<FeatureTerm> standard_terms(const ResourceSchema& schema,
                                               bool include_pairwise,
                                               const std::vector<FeatureTerm>& extra = {}) {
    std::vector<FeatureTerm> terms;
    std::set<FeatureTerm> seen;
    auto push = [&](FeatureTerm t) {
        if (seen.insert(t).second) terms.push_back(std::move(t));
    };

    for (const auto& name : schema.names())
        push(FeatureTerm::single(name));
    if (include_pairwise) {
        for (std::size_t i = 0; i < schema.size(); ++i)
            for (std::size_t j = i + 1; j < schema.size(); ++j)
                push(FeatureTerm::pair(schema.name(i), schema.name(j)));
    }
    for (const auto& t : extra) {
        if (!t.defined_over(schema))
            throw std::invalid_argument("standard_terms: term '" + t.label() +
                                        "' references a resource outside the schema");
        push(t);
    }
    return terms;
}

/// A complete model specification: resource schema, ordered feature terms
/// (intercept excluded) and the baseline configuration anchoring all ratios.
class ModelSpec {
public:
    ModelSpec(SchemaPtr schema, std::vector<FeatureTerm> terms, ResourceVector baseline)
        : schema_(std::move(schema)), terms_(std::move(terms)), baseline_(std::move(baseline)) {
        if (!schema_)
            throw std::invalid_argument("ModelSpec: null schema");
        if (!baseline_.conforms_to(*schema_))
            throw std::invalid_argument("ModelSpec: baseline does not conform to schema");
        std::set<FeatureTerm> seen;
        for (const auto& t : terms_) {
            if (!t.defined_over(*schema_))
                throw std::invalid_argument("ModelSpec: term '" + t.label() +
                                            "' references a resource outside the schema");
            if (!seen.insert(t).second)
                throw std::invalid_argument("ModelSpec: duplicate term '" + t.label() + "'");
        }
    }

    const ResourceSchema& schema() const { return *schema_; }
    const SchemaPtr& schema_ptr() const { return schema_; }
    const std::vector<FeatureTerm>& terms() const { return terms_; }
    const ResourceVector& baseline() const { return baseline_; }

    /// Number of resource terms (the intercept is not counted).
    std::size_t term_count() const { return terms_.size(); }

    /// Same spec with a different baseline; predictions from a refit model
    /// are invariant under this change.
    ModelSpec with_baseline(ResourceVector baseline) const {
        return ModelSpec(schema_, terms_, std::move(baseline));
    }

private:
    SchemaPtr schema_;
    std::vector<FeatureTerm> terms_;
    ResourceVector baseline_;
};

} // namespace amdahlx
