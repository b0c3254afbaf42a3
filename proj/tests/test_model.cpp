#include "amdahlx/model.hpp"

#include <gtest/gtest.h>

using namespace amdahlx;

namespace {

SchemaPtr ab_schema() { return make_schema({"a", "b"}); }

} // namespace

TEST(SpeedupSingle, classic_half_parallel_doubled_resource) {
    // Half the program sped up 2x: S = 1 / (0.5 + 0.5/2) = 4/3.
    const SpeedupResult r = speedup_single(0.5, 1.0, 2.0);
    EXPECT_NEAR(r.speedup, 1.3333333333333333, 1e-12);
    EXPECT_NEAR(r.denominator, 0.75, 1e-15);
}

TEST(SpeedupSingle, fraction_zero_and_one) {
    EXPECT_DOUBLE_EQ(speedup_single(0.0, 1.0, 100.0).speedup, 1.0);
    EXPECT_DOUBLE_EQ(speedup_single(1.0, 1.0, 4.0).speedup, 4.0);
}

TEST(SpeedupSingle, identity_when_resource_unchanged) {
    EXPECT_DOUBLE_EQ(speedup_single(0.7, 3.0, 3.0).speedup, 1.0);
}

TEST(SpeedupSingle, rejects_bad_arguments) {
    EXPECT_THROW(speedup_single(-0.1, 1.0, 2.0), std::domain_error);
    EXPECT_THROW(speedup_single(1.1, 1.0, 2.0), std::domain_error);
    EXPECT_THROW(speedup_single(0.5, 0.0, 2.0), std::domain_error);
    EXPECT_THROW(speedup_single(0.5, 1.0, -2.0), std::domain_error);
}

TEST(SpeedupMulti, two_single_terms_hand_value) {
    // serial 0.3, f_a 0.4 at ratio 1/2, f_b 0.3 at ratio 1/4:
    // denom = 0.3 + 0.4*0.5 + 0.3*0.25 = 0.575, S = 1.739130...
    const SchemaPtr schema = ab_schema();
    const std::vector<FeatureTerm> terms = {FeatureTerm::single("a"), FeatureTerm::single("b")};
    const FractionSet fractions(0.3, {{terms[0], 0.4}, {terms[1], 0.3}});
    const ResourceVector base(schema, {1.0, 1.0});
    const ResourceVector test(schema, {2.0, 4.0});
    const SpeedupResult r = speedup_multi(fractions, terms, base, test);
    EXPECT_NEAR(r.denominator, 0.575, 1e-15);
    EXPECT_NEAR(r.speedup, 1.7391304347826086, 1e-12);
}

TEST(SpeedupMulti, interaction_term_hand_value) {
    // Both resources doubled: singles contribute 0.1*0.5 each, the a*b
    // interaction contributes 0.1*0.25, the rest (0.7) is untouched.
    const SchemaPtr schema = ab_schema();
    const std::vector<FeatureTerm> terms = {
        FeatureTerm::single("a"),
        FeatureTerm::single("b"),
        FeatureTerm::pair("a", "b"),
    };
    const FractionSet fractions(0.7, {{terms[0], 0.1}, {terms[1], 0.1}, {terms[2], 0.1}});
    const ResourceVector base(schema, {1.0, 1.0});
    const ResourceVector test(schema, {2.0, 2.0});
    // denom = 0.7 + 0.1*0.5 + 0.1*0.5 + 0.1*0.25 = 0.825
    const SpeedupResult r = speedup_multi(fractions, terms, base, test);
    EXPECT_NEAR(r.denominator, 0.825, 1e-15);
    EXPECT_NEAR(r.speedup, 1.0 / 0.825, 1e-12);
}

TEST(SpeedupMulti, unchanged_configuration_gives_unit_speedup) {
    const SchemaPtr schema = ab_schema();
    const std::vector<FeatureTerm> terms = {FeatureTerm::single("a"), FeatureTerm::pair("a", "b")};
    const FractionSet fractions(0.25, {{terms[0], 0.5}, {terms[1], 0.25}});
    const ResourceVector v(schema, {3.0, 7.0});
    EXPECT_DOUBLE_EQ(speedup_multi(fractions, terms, v, v).speedup, 1.0);
}

TEST(SpeedupMulti, rejects_schema_mismatch_and_missing_fraction) {
    const SchemaPtr schema = ab_schema();
    const std::vector<FeatureTerm> terms = {FeatureTerm::single("a")};
    const FractionSet fractions(0.5, {{terms[0], 0.5}});
    const ResourceVector base(schema, {1.0, 1.0});
    const ResourceVector other(make_schema({"a", "c"}), {1.0, 1.0});
    EXPECT_THROW(speedup_multi(fractions, terms, base, other), std::domain_error);

    const std::vector<FeatureTerm> wrong = {FeatureTerm::single("b")};
    EXPECT_THROW(speedup_multi(fractions, wrong, base, base), std::invalid_argument);
}

TEST(FractionSet, enforces_unit_interval_and_sum) {
    const FeatureTerm a = FeatureTerm::single("a");
    EXPECT_THROW(FractionSet(-0.1, {{a, 1.1}}), std::domain_error);
    EXPECT_THROW(FractionSet(0.5, {{a, 0.6}}), std::domain_error);  // sums to 1.1
    EXPECT_THROW(FractionSet(0.5, {{a, 0.4}}), std::domain_error);  // sums to 0.9
    EXPECT_NO_THROW(FractionSet(0.5, {{a, 0.5}}));
}

TEST(FractionSet, with_remainder_fills_serial) {
    const FeatureTerm a = FeatureTerm::single("a");
    const FeatureTerm b = FeatureTerm::single("b");
    const FractionSet f = FractionSet::with_remainder({{a, 0.6}, {b, 0.3}});
    EXPECT_NEAR(f.serial(), 0.1, 1e-15);
    EXPECT_DOUBLE_EQ(f.fraction_of(a), 0.6);
}

TEST(ScoreFromSpeedup, scales_baseline) {
    EXPECT_DOUBLE_EQ(score_from_speedup(1.7391304347826086, 100.0), 173.91304347826086);
    EXPECT_THROW(score_from_speedup(0.0, 100.0), std::domain_error);
    EXPECT_THROW(score_from_speedup(1.0, -1.0), std::domain_error);
}
