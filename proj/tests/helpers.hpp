// Shared fixtures for the test suites: a four-resource schema, realistic
// discrete ranges, and a known ground-truth model to generate from.

#pragma once

#include "amdahlx/amdahlx.hpp"

#include <map>
#include <vector>

namespace fixtures {

using namespace amdahlx;

/// cores, core frequency, last-level cache, memory frequency.
inline SchemaPtr quad_schema() {
    return make_schema({"cores", "core_freq_mhz", "llc_mb", "mem_freq_mhz"});
}

/// Server-like discrete ranges: 28 core counts, 8 frequency steps, 32 cache
/// sizes, 3 memory speeds.
inline RangeTable quad_ranges() {
    return RangeTable(quad_schema(), {
                                         RangeTable::arithmetic(1, 28, 1),
                                         RangeTable::arithmetic(1800, 2500, 100),
                                         RangeTable::arithmetic(7, 38, 1),
                                         {2133, 2400, 2667},
                                     });
}

/// The four terms the demo ground truth enhances: three singles plus the
/// cores x memory-frequency interaction.
inline std::vector<FeatureTerm> quad_terms() {
    return {
        FeatureTerm::single("cores"),
        FeatureTerm::single("core_freq_mhz"),
        FeatureTerm::single("mem_freq_mhz"),
        FeatureTerm::pair("cores", "mem_freq_mhz"),
    };
}

inline ModelSpec quad_spec() {
    const SchemaPtr schema = quad_schema();
    return ModelSpec(schema, quad_terms(),
                     ResourceVector(schema, {1.0, 1800.0, 7.0, 2133.0}));
}

/// Known generator: serial 0.05, cores 0.55, core freq 0.20, mem freq 0.10,
/// cores x mem freq 0.10; baseline scores 100.
inline GroundTruth quad_truth() {
    const auto terms = quad_terms();
    std::map<FeatureTerm, double> fractions = {
        {terms[0], 0.55},
        {terms[1], 0.20},
        {terms[2], 0.10},
        {terms[3], 0.10},
    };
    return GroundTruth(quad_spec(), FractionSet(0.05, std::move(fractions)), 100.0);
}

/// Tiny three-resource generator whose eight corner scores are all distinct.
inline GroundTruth cube_truth() {
    const SchemaPtr schema = make_schema({"alpha", "beta", "gamma"});
    const std::vector<FeatureTerm> terms = {
        FeatureTerm::single("alpha"),
        FeatureTerm::single("beta"),
        FeatureTerm::single("gamma"),
    };
    std::map<FeatureTerm, double> fractions = {
        {terms[0], 0.40},
        {terms[1], 0.22},
        {terms[2], 0.13},
    };
    ModelSpec spec(schema, terms, ResourceVector(schema, {1.0, 1.0, 1.0}));
    return GroundTruth(std::move(spec), FractionSet(0.25, std::move(fractions)), 50.0);
}

inline RangeTable cube_ranges() {
    return RangeTable(make_schema({"alpha", "beta", "gamma"}),
                      {{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}});
}

} // namespace fixtures
