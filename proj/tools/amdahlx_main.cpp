// Command-line front end.
//
// Subcommands cover the whole workflow: synthesize a dataset from a known
// model, fit a model to measurements, cross-validate it, predict scores for
// new configurations, explore a design grid against a score target, and
// merge many cross-validation reports into one comparison table.
//
// Exit codes: 0 success, 2 input error (bad files, flags, or formats),
// 3 numerical error (model evaluation failed, e.g. nonpositive prediction).

#include "amdahlx/amdahlx.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace amdahlx;

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

/// "name=value" pairs from repeated --set flags, as a configuration.
ResourceVector config_from_pairs(const std::vector<std::string>& pairs, const SchemaPtr& schema) {
    std::vector<double> values(schema->size());
    std::vector<bool> got(schema->size(), false);
    for (const auto& pair : pairs) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects name=value, got '" + pair + "'");
        const std::string name = pair.substr(0, eq);
        const auto idx = schema->find(name);
        if (!idx)
            throw std::invalid_argument("--set: unknown resource '" + name + "'");
        values[*idx] = parse_double(pair.substr(eq + 1), "--set " + name);
        got[*idx] = true;
    }
    for (std::size_t j = 0; j < schema->size(); ++j)
        if (!got[j])
            throw std::invalid_argument("--set: missing resource '" + schema->name(j) + "'");
    return ResourceVector(schema, std::move(values));
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
}

void print_fit_summary(const FittedModel& model, std::size_t rows) {
    const std::size_t p = model.spec().term_count() + 1;
    std::printf("rows: %zu, coefficients: %zu (intercept + %zu terms)\n", rows, p, p - 1);
    std::printf("rank: %d / %zu, condition estimate: %.6g\n", model.rank(), p,
                model.condition_estimate());
    std::printf("training MAPE: %.6f%%  (accuracy %.6f%%)\n", model.training_mape(),
                100.0 - model.training_mape());
    const FractionEstimate fractions = extract_fractions(model);
    std::printf("fractions (%s):\n", fractions.valid ? "valid" : "NOT physically valid");
    std::printf("  %-28s %12.6f\n", "serial", fractions.serial_hat);
    for (std::size_t t = 0; t < fractions.term_hats.size(); ++t)
        std::printf("  %-28s %12.6f\n", model.spec().terms()[t].label().c_str(),
                    fractions.term_hats[t]);
    print_warnings(model.warnings());
}

int run_synth(const std::string& ranges_path, const std::string& truth_path,
              const std::string& out_path, std::string truth_out, std::size_t n,
              std::uint64_t seed, double sigma, std::uint64_t noise_seed,
              const std::string& mode) {
    const RangeTable ranges = load_ranges(ranges_path);
    const GroundTruth truth = load_truth(truth_path, ranges.minima());
    if (*ranges.schema() != truth.spec().schema())
        throw std::invalid_argument(ranges_path + ": resources do not match " + truth_path);
    const SampleMode sample_mode =
        mode == "grid" ? SampleMode::full_grid : SampleMode::random_uniform;
    const auto configs = sample_configs(ranges, n, seed, sample_mode);
    const Dataset data = generate(truth, configs, NoiseSpec::gaussian(sigma, noise_seed));
    save_dataset(out_path, data);
    if (truth_out.empty())
        truth_out = std::filesystem::path(out_path).replace_extension(".truth.json").string();
    save_truth(truth_out, truth);
    std::printf("wrote %zu rows to %s (truth: %s)\n", data.size(), out_path.c_str(),
                truth_out.c_str());
    return 0;
}

int run_fit(const std::string& data_path, const std::string& spec_path,
            const std::string& out_path) {
    const Dataset data = load_dataset(data_path);
    const ModelSpec spec = load_model_spec(spec_path, data);
    const FittedModel model = fit(spec, data);
    save_model(out_path, model);
    print_fit_summary(model, data.size());
    std::printf("model written to %s\n", out_path.c_str());
    return 0;
}

int run_cv(const std::string& data_path, const std::string& spec_path, std::uint64_t seed,
           std::size_t folds, std::string label, const std::string& outdir) {
    const Dataset data = load_dataset(data_path);
    const ModelSpec spec = load_model_spec(spec_path, data);
    CvReport report = cross_validate(spec, data, seed, folds);
    if (!label.empty()) report.label = std::move(label);
    std::cout << format_cv_table(report);
    if (report.failed_predictions > 0)
        std::printf("failed predictions: %zu (each charged 100%% error)\n",
                    report.failed_predictions);
    print_warnings(report.warnings);
    if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        save_cv_report(join_path(outdir, "cv_report.json"), report);
        save_cv_csv(join_path(outdir, "cv_folds.csv"), report);
        std::printf("report written to %s\n", outdir.c_str());
    }
    return 0;
}

int run_predict(const std::string& model_path, const std::vector<std::string>& set_pairs,
                const std::string& configs_path, const std::string& out_path) {
    const FittedModel model = load_model(model_path);
    std::vector<ResourceVector> configs;
    if (!configs_path.empty())
        configs = load_configs(configs_path, model.spec().schema_ptr());
    if (!set_pairs.empty())
        configs.push_back(config_from_pairs(set_pairs, model.spec().schema_ptr()));
    if (configs.empty())
        throw std::invalid_argument("predict: give --configs FILE and/or --set name=value");

    std::vector<double> scores;
    scores.reserve(configs.size());
    for (const auto& config : configs) scores.push_back(predict_score(model, config));

    if (!out_path.empty()) {
        save_predictions_csv(out_path, configs, scores);
        std::printf("%zu predictions written to %s\n", scores.size(), out_path.c_str());
    }
    for (std::size_t i = 0; i < configs.size() && (out_path.empty() || configs.size() == 1); ++i)
        std::printf("%s -> %s\n", configs[i].describe().c_str(),
                    format_double(scores[i]).c_str());
    return 0;
}

int run_explore(const std::string& model_path, const std::string& ranges_path, double target,
                const std::string& cost_path, std::size_t limit, const std::string& outdir) {
    const FittedModel model = load_model(model_path);
    const RangeTable ranges = load_ranges(ranges_path);
    if (*ranges.schema() != model.spec().schema())
        throw std::invalid_argument(ranges_path + ": resources do not match the model");
    const CostModel cost = cost_path.empty()
                               ? CostModel::uniform(model.spec().schema_ptr())
                               : load_cost(cost_path, model.spec().schema_ptr());
    const ExplorationResult result = explore(model, ranges, target, cost, limit);
    const auto steps = frontier(result);

    std::printf("grid: %zu evaluated, %zu feasible (kept %zu), %zu infeasible, %zu errors\n",
                result.evaluated, result.feasible_total, result.feasible.size(),
                result.infeasible, result.errors);
    const std::size_t show = std::min<std::size_t>(result.feasible.size(), 10);
    for (std::size_t i = 0; i < show; ++i)
        std::printf("  cost %-12s score %-12s %s\n",
                    format_double(result.feasible[i].cost).c_str(),
                    format_double(result.feasible[i].predicted_score).c_str(),
                    result.feasible[i].config.describe().c_str());
    std::printf("frontier: %zu step(s)\n", steps.size());

    if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        save_exploration_csv(join_path(outdir, "exploration.csv"), result,
                             model.spec().schema());
        save_exploration_json(join_path(outdir, "exploration.json"), result);
        save_frontier_csv(join_path(outdir, "frontier.csv"), steps);
        std::printf("results written to %s\n", outdir.c_str());
    }
    return 0;
}

int run_report(const std::vector<std::string>& report_paths, const std::string& out_path) {
    std::vector<CvReport> reports;
    reports.reserve(report_paths.size());
    for (const auto& path : report_paths) reports.push_back(load_cv_report(path));
    const std::string csv = cv_summary_csv(reports);
    std::cout << csv;
    if (!out_path.empty()) {
        write_text_atomic(out_path, csv);
        std::printf("summary written to %s\n", out_path.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multicore performance modeling: fit, validate, predict, explore"};
    app.require_subcommand(1);

    // synth
    std::string synth_ranges, synth_truth, synth_out, synth_truth_out, synth_mode = "random";
    std::size_t synth_n = 100;
    std::uint64_t synth_seed = 42, synth_noise_seed = 42;
    double synth_sigma = 0.0;
    auto* synth = app.add_subcommand("synth", "Generate a dataset from a known model");
    synth->add_option("--ranges", synth_ranges, "Range table JSON")->required();
    synth->add_option("--truth", synth_truth, "Generator model JSON")->required();
    synth->add_option("--out", synth_out, "Output dataset CSV")->required();
    synth->add_option("--truth-out", synth_truth_out,
                      "Output truth JSON (default: dataset path with .truth.json)");
    synth->add_option("--n", synth_n, "Configurations to sample (random mode)");
    synth->add_option("--seed", synth_seed, "Sampling seed");
    synth->add_option("--sigma", synth_sigma, "Relative noise level (0 = noiseless)");
    synth->add_option("--noise-seed", synth_noise_seed, "Noise seed");
    synth->add_option("--mode", synth_mode, "Sampling mode")
        ->check(CLI::IsMember({"random", "grid"}));

    // fit
    std::string fit_data, fit_spec, fit_out;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a model to a measurement CSV");
    fit_cmd->add_option("--data", fit_data, "Dataset CSV")->required();
    fit_cmd->add_option("--spec", fit_spec, "Model spec JSON")->required();
    fit_cmd->add_option("--out", fit_out, "Output model JSON")->required();

    // cv
    std::string cv_data, cv_spec, cv_label, cv_outdir;
    std::uint64_t cv_seed = 42;
    std::size_t cv_folds = 5;
    auto* cv_cmd = app.add_subcommand("cv", "Cross-validate a spec against a dataset");
    cv_cmd->add_option("--data", cv_data, "Dataset CSV")->required();
    cv_cmd->add_option("--spec", cv_spec, "Model spec JSON")->required();
    cv_cmd->add_option("--seed", cv_seed, "Fold shuffle seed");
    cv_cmd->add_option("--folds", cv_folds, "Fold count");
    cv_cmd->add_option("--label", cv_label, "Report label (default: dataset path)");
    cv_cmd->add_option("--outdir", cv_outdir, "Directory for cv_report.json / cv_folds.csv");

    // predict
    std::string predict_model, predict_configs, predict_out;
    std::vector<std::string> predict_set;
    auto* predict_cmd = app.add_subcommand("predict", "Predict scores for configurations");
    predict_cmd->add_option("--model", predict_model, "Fitted model JSON")->required();
    predict_cmd->add_option("--configs", predict_configs, "Configurations CSV");
    predict_cmd->add_option("--set", predict_set,
                            "Single configuration as repeated name=value");
    predict_cmd->add_option("--out", predict_out, "Output predictions CSV");

    // explore
    std::string explore_model, explore_ranges, explore_cost, explore_outdir;
    double explore_target = 0.0;
    std::size_t explore_limit = 100;
    auto* explore_cmd =
        app.add_subcommand("explore", "Find grid configurations reaching a target score");
    explore_cmd->add_option("--model", explore_model, "Fitted model JSON")->required();
    explore_cmd->add_option("--ranges", explore_ranges, "Candidate range table JSON")->required();
    explore_cmd->add_option("--target", explore_target, "Score target")->required();
    explore_cmd->add_option("--cost", explore_cost,
                            "Cost model JSON (default: every resource at weight 1)");
    explore_cmd->add_option("--limit", explore_limit, "Max feasible rows kept");
    explore_cmd->add_option("--outdir", explore_outdir, "Directory for exploration outputs");

    // report
    std::vector<std::string> report_files;
    std::string report_out;
    auto* report_cmd =
        app.add_subcommand("report", "Merge cross-validation reports into one table");
    report_cmd->add_option("reports", report_files, "CV report JSON files")
        ->required()
        ->expected(-1);
    report_cmd->add_option("--out", report_out, "Output summary CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // flag/usage problems are input errors
    }

    try {
        if (app.got_subcommand(synth))
            return run_synth(synth_ranges, synth_truth, synth_out, synth_truth_out, synth_n,
                             synth_seed, synth_sigma, synth_noise_seed, synth_mode);
        if (app.got_subcommand(fit_cmd)) return run_fit(fit_data, fit_spec, fit_out);
        if (app.got_subcommand(cv_cmd))
            return run_cv(cv_data, cv_spec, cv_seed, cv_folds, cv_label, cv_outdir);
        if (app.got_subcommand(predict_cmd))
            return run_predict(predict_model, predict_set, predict_configs, predict_out);
        if (app.got_subcommand(explore_cmd))
            return run_explore(explore_model, explore_ranges, explore_target, explore_cost,
                               explore_limit, explore_outdir);
        if (app.got_subcommand(report_cmd)) return run_report(report_files, report_out);
    } catch (const std::domain_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
