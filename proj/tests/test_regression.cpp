#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace amdahlx;

namespace {

/// Noiseless dataset from the shared ground truth.
Dataset quad_data(std::size_t n, std::uint64_t seed) {
    const GroundTruth truth = fixtures::quad_truth();
    return generate(truth, sample_configs(fixtures::quad_ranges(), n, seed));
}

} // namespace

TEST(Scaler, transform_inverse_transform_is_identity) {
    const DesignMatrix d = build_design(fixtures::quad_spec(), quad_data(40, 3));
    const Scaler scaler = Scaler::fit(d.X);
    const Eigen::MatrixXd back = scaler.inverse_transform(scaler.transform(d.X));
    EXPECT_LT((back - d.X).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Scaler, flags_constant_columns) {
    Eigen::MatrixXd X(4, 3);
    X.col(0).setOnes();
    X.col(1) << 1.0, 2.0, 3.0, 4.0;
    X.col(2).setConstant(7.0);
    const Scaler s = Scaler::fit(X);
    EXPECT_FALSE(s.degenerate(0));
    EXPECT_TRUE(s.degenerate(1));
    EXPECT_DOUBLE_EQ(s.stddev(1), 1.0);  // degenerate columns keep scale 1
}

TEST(Fit, recovers_exact_coefficients_from_noiseless_data) {
    const Dataset data = quad_data(50, 7);
    const FittedModel model = fit(fixtures::quad_spec(), data);
    // 1/score = (serial + sum f_t ratio_t) / baseline_perf, so the raw
    // coefficients are the fractions over the baseline score.
    const auto& alpha = model.coefficients_raw();
    ASSERT_EQ(alpha.size(), 5);
    EXPECT_NEAR(alpha(0), 0.05 / 100.0, 1e-10);
    EXPECT_NEAR(alpha(1), 0.55 / 100.0, 1e-10);
    EXPECT_NEAR(alpha(2), 0.20 / 100.0, 1e-10);
    EXPECT_NEAR(alpha(3), 0.10 / 100.0, 1e-10);
    EXPECT_NEAR(alpha(4), 0.10 / 100.0, 1e-10);
    EXPECT_EQ(model.rank(), 5);
    EXPECT_TRUE(model.warnings().empty());
    EXPECT_LT(model.training_mape(), 1e-8);
}

TEST(Fit, interpolates_handmade_linear_target) {
    // y built exactly as X alpha*; least squares must return alpha*.
    const SchemaPtr s = make_schema({"a", "b"});
    const ModelSpec spec(s, standard_terms(*s, false), ResourceVector(s, {1.0, 1.0}));
    std::vector<Observation> rows;
    const double a0 = 0.01, a1 = 0.03, a2 = 0.002;
    for (double a : {1.0, 2.0, 4.0})
        for (double b : {1.0, 3.0}) {
            const double y = a0 + a1 / a + a2 / b;
            rows.push_back({ResourceVector(s, {a, b}), 1.0 / y});
        }
    const FittedModel model = fit(spec, Dataset(s, rows));
    EXPECT_NEAR(model.coefficients_raw()(0), a0, 1e-12);
    EXPECT_NEAR(model.coefficients_raw()(1), a1, 1e-12);
    EXPECT_NEAR(model.coefficients_raw()(2), a2, 1e-12);
}

TEST(Fit, constant_column_warns_by_name_and_drops_rank) {
    // llc_mb never varies, so its single term duplicates the intercept.
    const SchemaPtr schema = fixtures::quad_schema();
    RangeTable ranges(schema, {
                                  RangeTable::arithmetic(1, 28, 1),
                                  RangeTable::arithmetic(1800, 2500, 100),
                                  {7.0},
                                  {2133.0, 2400.0, 2667.0},
                              });
    const ModelSpec spec(schema, standard_terms(*schema, false), ranges.minima());
    const GroundTruth truth = fixtures::quad_truth();
    const Dataset data = generate(truth, sample_configs(ranges, 60, 11));
    const FittedModel model = fit(spec, data);

    bool named = false;
    for (const auto& w : model.warnings()) named = named || w.find("llc_mb") != std::string::npos;
    EXPECT_TRUE(named);
    EXPECT_LT(model.rank(), static_cast<int>(spec.term_count() + 1));
}

TEST(Fit, determinism) {
    const Dataset data = quad_data(48, 21);
    const FittedModel m1 = fit(fixtures::quad_spec(), data);
    const FittedModel m2 = fit(fixtures::quad_spec(), data);
    EXPECT_TRUE(m1.coefficients_raw() == m2.coefficients_raw());
    EXPECT_TRUE(m1.coefficients_scaled() == m2.coefficients_scaled());
}

TEST(Fit, residuals_orthogonal_to_scaled_design) {
    const Dataset data = generate(fixtures::quad_truth(),
                                  sample_configs(fixtures::quad_ranges(), 60, 5),
                                  NoiseSpec::gaussian(0.05, 9));
    const DesignMatrix d = build_design(fixtures::quad_spec(), data);
    const FittedModel model = fit(fixtures::quad_spec(), d);
    const Eigen::MatrixXd Z = model.scaler().transform(d.X);
    const Eigen::VectorXd residual = d.y - Z * model.coefficients_scaled();
    EXPECT_LT((Z.transpose() * residual).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Fit, normalization_on_and_off_agree_on_well_conditioned_design) {
    const Dataset data = generate(fixtures::quad_truth(),
                                  sample_configs(fixtures::quad_ranges(), 70, 13),
                                  NoiseSpec::gaussian(0.03, 4));
    FitOptions raw_fit;
    raw_fit.normalize = false;
    const FittedModel scaled = fit(fixtures::quad_spec(), data);
    const FittedModel unscaled = fit(fixtures::quad_spec(), data, raw_fit);
    const auto probes = sample_configs(fixtures::quad_ranges(), 50, 99);
    for (const auto& config : probes) {
        const double a = predict_score(scaled, config);
        const double b = predict_score(unscaled, config);
        EXPECT_NEAR(a, b, 1e-8 * std::abs(a));
    }
}

TEST(Fit, baseline_choice_never_changes_predictions) {
    const Dataset data = generate(fixtures::quad_truth(),
                                  sample_configs(fixtures::quad_ranges(), 80, 17),
                                  NoiseSpec::gaussian(0.02, 6));
    const ModelSpec original = fixtures::quad_spec();
    const ModelSpec rebased = original.with_baseline(data.column_maxima());
    const FittedModel m1 = fit(original, data);
    const FittedModel m2 = fit(rebased, data);
    const auto probes = sample_configs(fixtures::quad_ranges(), 100, 23);
    for (const auto& config : probes) {
        const double a = predict_score(m1, config);
        const double b = predict_score(m2, config);
        EXPECT_NEAR(a, b, 1e-9 * std::abs(a));
    }
}

TEST(Predict, raw_and_scaled_coefficient_paths_agree) {
    const Dataset data = quad_data(60, 31);
    const DesignMatrix d = build_design(fixtures::quad_spec(), data);
    const FittedModel model = fit(fixtures::quad_spec(), d);
    const Eigen::MatrixXd Z = model.scaler().transform(d.X);
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        const double via_raw = d.X.row(i).dot(model.coefficients_raw());
        const double via_scaled = Z.row(i).dot(model.coefficients_scaled());
        EXPECT_NEAR(via_raw, via_scaled, 1e-9 * std::abs(via_raw));
    }
}

TEST(Predict, baseline_prediction_is_coefficient_sum) {
    const Dataset data = quad_data(45, 37);
    const FittedModel model = fit(fixtures::quad_spec(), data);
    const double at_baseline = predict_inverse(model, model.spec().baseline());
    EXPECT_NEAR(at_baseline, model.coefficients_raw().sum(), 1e-12);
}

TEST(Predict, nonpositive_inverse_is_a_domain_error_naming_the_config) {
    // Hand-built model whose prediction goes negative away from the baseline.
    const SchemaPtr s = make_schema({"a"});
    const ModelSpec spec(s, {FeatureTerm::single("a")}, ResourceVector(s, {1.0}));
    Eigen::VectorXd alpha(2);
    alpha << -0.5, 1.0;  // yhat = -0.5 + 1/a, negative once a > 2
    const FittedModel model(spec, alpha, alpha, Scaler::identity(1), 2, 1.0, 0.0, {});
    const ResourceVector far(s, {10.0});
    try {
        predict_score(model, far);
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("a=10"), std::string::npos);
    }
    EXPECT_FALSE(try_predict_score(model, far).has_value());
    EXPECT_NEAR(*try_predict_score(model, ResourceVector(s, {1.0})), 2.0, 1e-12);
}

TEST(ExtractFractions, normalizes_away_common_scale) {
    const SchemaPtr s = make_schema({"a", "b"});
    const ModelSpec spec(s, standard_terms(*s, false), ResourceVector(s, {1.0, 1.0}));
    for (double scale : {1.0, 0.004, 250.0}) {
        Eigen::VectorXd alpha(3);
        alpha << 0.3 * scale, 0.4 * scale, 0.3 * scale;
        const FittedModel model(spec, alpha, alpha, Scaler::identity(2), 3, 1.0, 0.0, {});
        const FractionEstimate est = extract_fractions(model);
        EXPECT_NEAR(est.serial_hat, 0.3, 1e-12);
        EXPECT_NEAR(est.term_hats[0], 0.4, 1e-12);
        EXPECT_NEAR(est.term_hats[1], 0.3, 1e-12);
        EXPECT_TRUE(est.valid);
        EXPECT_NEAR(est.serial_hat + est.term_hats[0] + est.term_hats[1], 1.0, 1e-9);
    }
}

TEST(ExtractFractions, flags_unphysical_estimates_and_rejects_zero_sum) {
    const SchemaPtr s = make_schema({"a"});
    const ModelSpec spec(s, {FeatureTerm::single("a")}, ResourceVector(s, {1.0}));
    Eigen::VectorXd negative(2);
    negative << 1.4, -0.4;
    const FittedModel bad(spec, negative, negative, Scaler::identity(1), 2, 1.0, 0.0, {});
    const FractionEstimate est = extract_fractions(bad);
    EXPECT_FALSE(est.valid);
    EXPECT_NEAR(est.serial_hat, 1.4, 1e-12);  // still reported

    Eigen::VectorXd zero_sum(2);
    zero_sum << 1.0, -1.0;
    const FittedModel degenerate(spec, zero_sum, zero_sum, Scaler::identity(1), 2, 1.0, 0.0, {});
    EXPECT_THROW(extract_fractions(degenerate), std::domain_error);
}

TEST(ExtractFractions, recovers_ground_truth_fractions) {
    const FittedModel model = fit(fixtures::quad_spec(), quad_data(58, 41));
    const FractionEstimate est = extract_fractions(model);
    ASSERT_EQ(est.term_hats.size(), 4u);
    EXPECT_NEAR(est.serial_hat, 0.05, 1e-8);
    EXPECT_NEAR(est.term_hats[0], 0.55, 1e-8);
    EXPECT_NEAR(est.term_hats[1], 0.20, 1e-8);
    EXPECT_NEAR(est.term_hats[2], 0.10, 1e-8);
    EXPECT_NEAR(est.term_hats[3], 0.10, 1e-8);
    EXPECT_TRUE(est.valid);
}
