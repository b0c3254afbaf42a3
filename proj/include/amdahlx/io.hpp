// File formats and report emission.
//
// CSV carries measurement tables and plot-ready outputs; JSON carries model
// specs, fitted models, ground truths, and cross-validation reports.  Every
// number is written in locale-independent shortest round-trip form, every
// file is written atomically (temp file + rename), and every load error
// names the file — plus the line or field — at fault.

#pragma once

#include "amdahlx/explorer.hpp"
#include "amdahlx/synthetic.hpp"
#include "amdahlx/validation.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace amdahlx {

inline constexpr const char* kModelFormatTag = "amdahl-model/1";
inline constexpr const char* kTruthFormatTag = "amdahl-truth/1";
inline constexpr const char* kCvReportFormatTag = "amdahl-cv-report/1";

// ---------------------------------------------------------------------------
// Number and text primitives

/// Shortest decimal string that parses back to exactly this double.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Strict decimal parse of a whole field; `what` names the field in errors.
inline double parse_double(std::string_view text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || text.empty())
        throw std::invalid_argument(what + ": not a number: '" + std::string(text) + "'");
    return v;
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

/// Comma split with whitespace trimming; no quoting (fields are numbers and
/// resource names).
inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(path + ": cannot open for reading");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                           const std::string& ctx) {
    const auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(ctx + ": missing field '" + key + "'");
    return *it;
}

inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(path + ": cannot open for reading");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

} // namespace detail

/// Write the full content to a temp file beside `path`, then rename it into
/// place, so readers never observe a half-written file.
inline void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::invalid_argument(path + ": cannot open for writing");
        out << content;
        out.flush();
        if (!out)
            throw std::invalid_argument(path + ": write failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw std::invalid_argument(path + ": rename failed: " + ec.message());
}

// ---------------------------------------------------------------------------
// Datasets (CSV: resource columns then a final `score` column)

/// Parse a measurement CSV.  The header names the resources in order and
/// must end with `score`; every later line is one run.  Errors carry
/// 1-based line numbers.
inline Dataset load_dataset(const std::string& path) {
    const auto lines = detail::read_lines(path);
    std::size_t header_line = 0;
    while (header_line < lines.size() && detail::trim(lines[header_line]).empty()) ++header_line;
    if (header_line == lines.size())
        throw std::invalid_argument(path + ": empty file, expected a CSV header");

    const auto header = detail::split_csv(lines[header_line]);
    if (header.size() < 2 || header.back() != "score")
        throw std::invalid_argument(path + " line " + std::to_string(header_line + 1) +
                                    ": header must list resource names then a final 'score' column");
    std::vector<std::string> names(header.begin(), header.end() - 1);
    SchemaPtr schema;
    try {
        schema = make_schema(std::move(names));
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + " line " + std::to_string(header_line + 1) + ": " +
                                    e.what());
    }

    std::vector<Observation> rows;
    for (std::size_t li = header_line + 1; li < lines.size(); ++li) {
        if (detail::trim(lines[li]).empty()) continue;
        const std::string where = path + " line " + std::to_string(li + 1);
        const auto fields = detail::split_csv(lines[li]);
        if (fields.size() != header.size())
            throw std::invalid_argument(where + ": expected " + std::to_string(header.size()) +
                                        " fields, got " + std::to_string(fields.size()));
        std::vector<double> values(schema->size());
        for (std::size_t j = 0; j < schema->size(); ++j)
            values[j] = parse_double(fields[j], where + ", column '" + schema->name(j) + "'");
        const double score = parse_double(fields.back(), where + ", column 'score'");
        try {
            if (!std::isfinite(score) || score <= 0.0)
                throw std::domain_error("score must be positive, got " + fields.back());
            rows.push_back({ResourceVector(schema, std::move(values)), score});
        } catch (const std::exception& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    if (rows.empty())
        throw std::invalid_argument(path + ": no data rows");
    return Dataset(schema, std::move(rows), path);
}

/// Emit a dataset in the same CSV format load_dataset reads.
inline void save_dataset(const std::string& path, const Dataset& data) {
    std::ostringstream out;
    for (std::size_t j = 0; j < data.schema().size(); ++j) out << data.schema().name(j) << ',';
    out << "score\n";
    for (const auto& row : data.rows()) {
        for (std::size_t j = 0; j < row.config.size(); ++j)
            out << format_double(row.config[j]) << ',';
        out << format_double(row.score) << '\n';
    }
    write_text_atomic(path, out.str());
}

/// Parse a configuration CSV against a known schema.  Columns may appear in
/// any order; a `score` column, if present, is ignored.
inline std::vector<ResourceVector> load_configs(const std::string& path, const SchemaPtr& schema) {
    const auto lines = detail::read_lines(path);
    std::size_t header_line = 0;
    while (header_line < lines.size() && detail::trim(lines[header_line]).empty()) ++header_line;
    if (header_line == lines.size())
        throw std::invalid_argument(path + ": empty file, expected a CSV header");

    const auto header = detail::split_csv(lines[header_line]);
    std::vector<std::optional<std::size_t>> target(header.size());
    std::vector<bool> covered(schema->size(), false);
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "score") continue;
        const auto j = schema->find(header[c]);
        if (!j)
            throw std::invalid_argument(path + ": unknown column '" + header[c] + "'");
        if (covered[*j])
            throw std::invalid_argument(path + ": duplicate column '" + header[c] + "'");
        covered[*j] = true;
        target[c] = *j;
    }
    for (std::size_t j = 0; j < schema->size(); ++j)
        if (!covered[j])
            throw std::invalid_argument(path + ": missing column '" + schema->name(j) + "'");

    std::vector<ResourceVector> configs;
    for (std::size_t li = header_line + 1; li < lines.size(); ++li) {
        if (detail::trim(lines[li]).empty()) continue;
        const std::string where = path + " line " + std::to_string(li + 1);
        const auto fields = detail::split_csv(lines[li]);
        if (fields.size() != header.size())
            throw std::invalid_argument(where + ": expected " + std::to_string(header.size()) +
                                        " fields, got " + std::to_string(fields.size()));
        std::vector<double> values(schema->size());
        for (std::size_t c = 0; c < header.size(); ++c)
            if (target[c])
                values[*target[c]] =
                    parse_double(fields[c], where + ", column '" + header[c] + "'");
        try {
            configs.emplace_back(schema, std::move(values));
        } catch (const std::exception& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    if (configs.empty())
        throw std::invalid_argument(path + ": no configuration rows");
    return configs;
}

// ---------------------------------------------------------------------------
// JSON building blocks

inline nlohmann::json term_to_json(const FeatureTerm& term) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [name, e] : term.exponents()) exps[name] = e;
    return {{"exponents", std::move(exps)}, {"label", term.label()}};
}

/// Accepts either the structured form {"exponents": {...}, "label": ...} or
/// a bare exponent map {"cores": 1}.
inline FeatureTerm term_from_json(const nlohmann::json& j, const std::string& ctx) {
    if (!j.is_object())
        throw std::invalid_argument(ctx + ": term entries must be objects");
    const nlohmann::json* exps = &j;
    std::string label;
    if (j.contains("exponents")) {
        exps = &j.at("exponents");
        if (j.contains("label")) label = j.at("label").get<std::string>();
    }
    std::map<std::string, int> exponents;
    for (const auto& [name, value] : exps->items()) {
        if (!value.is_number_integer())
            throw std::invalid_argument(ctx + ": exponent for '" + name +
                                        "' must be an integer");
        exponents[name] = value.get<int>();
    }
    try {
        return FeatureTerm(std::move(exponents), std::move(label));
    } catch (const std::exception& e) {
        throw std::invalid_argument(ctx + ": " + e.what());
    }
}

inline nlohmann::json resource_map_to_json(const ResourceVector& v) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < v.size(); ++i) j[v.schema().name(i)] = v[i];
    return j;
}

inline ResourceVector resource_map_from_json(const nlohmann::json& j, const SchemaPtr& schema,
                                             const std::string& ctx) {
    std::vector<double> values(schema->size());
    std::vector<bool> got(schema->size(), false);
    for (const auto& [name, value] : j.items()) {
        const auto idx = schema->find(name);
        if (!idx)
            throw std::invalid_argument(ctx + ": unknown resource '" + name + "'");
        values[*idx] = value.get<double>();
        got[*idx] = true;
    }
    for (std::size_t i = 0; i < schema->size(); ++i)
        if (!got[i])
            throw std::invalid_argument(ctx + ": missing resource '" + schema->name(i) + "'");
    try {
        return ResourceVector(schema, std::move(values));
    } catch (const std::exception& e) {
        throw std::invalid_argument(ctx + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Model spec files

/// A parsed spec file.  The baseline may be absent: the convention is to
/// default it to the per-resource minimum of the training data, which is
/// only known once the dataset is loaded.
struct ModelSpecFile {
    SchemaPtr schema;
    bool include_pairwise = false;
    std::vector<FeatureTerm> file_terms;
    std::optional<ResourceVector> baseline;

    /// Terms the file asks for: with include_pairwise the full standard set
    /// (singles, pairs, file terms as extras); otherwise the file's own list,
    /// or all singles when it lists none.
    std::vector<FeatureTerm> effective_terms() const {
        if (include_pairwise) return standard_terms(*schema, true, file_terms);
        if (file_terms.empty()) return standard_terms(*schema, false);
        return file_terms;
    }

    ModelSpec resolve(const ResourceVector& default_baseline) const {
        return ModelSpec(schema, effective_terms(),
                         baseline ? *baseline : default_baseline);
    }

    ModelSpec resolve(const Dataset& data) const {
        if (data.schema() != *schema)
            throw std::invalid_argument(
                "model spec: dataset columns do not match the spec's resources");
        return resolve(data.column_minima());
    }
};

inline ModelSpecFile load_model_spec_file(const std::string& path) {
    const nlohmann::json j = detail::parse_json_file(path);
    ModelSpecFile file;
    std::vector<std::string> names;
    for (const auto& n : detail::require_field(j, "resources", path))
        names.push_back(n.get<std::string>());
    try {
        file.schema = make_schema(std::move(names));
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    file.include_pairwise = j.value("include_pairwise", false);
    if (j.contains("terms"))
        for (const auto& t : j.at("terms"))
            file.file_terms.push_back(term_from_json(t, path));
    for (const auto& t : file.file_terms)
        if (!t.defined_over(*file.schema))
            throw std::invalid_argument(path + ": term '" + t.label() +
                                        "' references a resource outside 'resources'");
    if (j.contains("baseline"))
        file.baseline = resource_map_from_json(j.at("baseline"), file.schema, path);
    return file;
}

/// Spec file resolved against the dataset that will train it.
inline ModelSpec load_model_spec(const std::string& path, const Dataset& data) {
    try {
        return load_model_spec_file(path).resolve(data);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Fitted model persistence

inline nlohmann::json model_to_json(const FittedModel& model) {
    const auto& spec = model.spec();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : spec.terms()) terms.push_back(term_to_json(t));

    const auto vec = [](const Eigen::VectorXd& v) {
        return std::vector<double>(v.data(), v.data() + v.size());
    };
    const FractionEstimate fractions = extract_fractions(model);

    return {
        {"format", kModelFormatTag},
        {"resources", spec.schema().names()},
        {"terms", std::move(terms)},
        {"baseline", resource_map_to_json(spec.baseline())},
        {"coefficients_raw", vec(model.coefficients_raw())},
        {"coefficients_scaled", vec(model.coefficients_scaled())},
        {"scaler",
         {{"means", model.scaler().means()},
          {"stddevs", model.scaler().stddevs()},
          {"degenerate", model.scaler().degenerate_flags()},
          {"fitted_on", model.scaler().fitted_on()}}},
        {"rank", model.rank()},
        {"condition", model.condition_estimate()},
        {"training_mape_pct", model.training_mape()},
        {"warnings", model.warnings()},
        // Derived view for human readers; ignored on load.
        {"fractions",
         {{"serial", fractions.serial_hat},
          {"terms", fractions.term_hats},
          {"valid", fractions.valid}}},
    };
}

inline FittedModel model_from_json(const nlohmann::json& j, const std::string& ctx) {
    const std::string format = detail::require_field(j, "format", ctx).get<std::string>();
    if (format != kModelFormatTag)
        throw std::invalid_argument(ctx + ": unsupported format '" + format + "', expected '" +
                                    kModelFormatTag + "'");
    std::vector<std::string> names;
    for (const auto& n : detail::require_field(j, "resources", ctx))
        names.push_back(n.get<std::string>());
    SchemaPtr schema;
    try {
        schema = make_schema(std::move(names));
    } catch (const std::exception& e) {
        throw std::invalid_argument(ctx + ": " + e.what());
    }
    std::vector<FeatureTerm> terms;
    for (const auto& t : detail::require_field(j, "terms", ctx))
        terms.push_back(term_from_json(t, ctx));
    const ResourceVector baseline =
        resource_map_from_json(detail::require_field(j, "baseline", ctx), schema, ctx);

    const auto vec = [&](const char* key) {
        const auto raw = detail::require_field(j, key, ctx).get<std::vector<double>>();
        return Eigen::Map<const Eigen::VectorXd>(raw.data(),
                                                 static_cast<Eigen::Index>(raw.size()))
            .eval();
    };
    const nlohmann::json& sj = detail::require_field(j, "scaler", ctx);
    Scaler scaler;
    try {
        scaler = Scaler::restore(
            detail::require_field(sj, "means", ctx).get<std::vector<double>>(),
            detail::require_field(sj, "stddevs", ctx).get<std::vector<double>>(),
            detail::require_field(sj, "degenerate", ctx).get<std::vector<bool>>(),
            detail::require_field(sj, "fitted_on", ctx).get<std::size_t>());
    } catch (const std::exception& e) {
        throw std::invalid_argument(ctx + ": scaler: " + e.what());
    }

    try {
        return FittedModel(
            ModelSpec(schema, std::move(terms), baseline), vec("coefficients_raw"),
            vec("coefficients_scaled"), std::move(scaler),
            detail::require_field(j, "rank", ctx).get<int>(),
            detail::require_field(j, "condition", ctx).get<double>(),
            detail::require_field(j, "training_mape_pct", ctx).get<double>(),
            j.value("warnings", std::vector<std::string>{}));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(ctx + ": " + e.what());
    }
}

inline void save_model(const std::string& path, const FittedModel& model) {
    write_text_atomic(path, model_to_json(model).dump(2) + "\n");
}

inline FittedModel load_model(const std::string& path) {
    return model_from_json(detail::parse_json_file(path), path);
}

// ---------------------------------------------------------------------------
// Ground truth persistence

inline nlohmann::json truth_to_json(const GroundTruth& truth) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : truth.spec().terms()) {
        nlohmann::json entry = term_to_json(t);
        entry["fraction"] = truth.fractions().fraction_of(t);
        terms.push_back(std::move(entry));
    }
    return {
        {"format", kTruthFormatTag},
        {"resources", truth.spec().schema().names()},
        {"baseline", resource_map_to_json(truth.spec().baseline())},
        {"baseline_perf", truth.baseline_perf()},
        {"serial", truth.fractions().serial()},
        {"terms", std::move(terms)},
    };
}

/// Load a generator description.  The baseline may be omitted when a default
/// (typically the range minima) is supplied.
inline GroundTruth load_truth(const std::string& path,
                              std::optional<ResourceVector> default_baseline = {}) {
    const nlohmann::json j = detail::parse_json_file(path);
    const std::string format = detail::require_field(j, "format", path).get<std::string>();
    if (format != kTruthFormatTag)
        throw std::invalid_argument(path + ": unsupported format '" + format + "', expected '" +
                                    kTruthFormatTag + "'");
    std::vector<std::string> names;
    for (const auto& n : detail::require_field(j, "resources", path))
        names.push_back(n.get<std::string>());
    SchemaPtr schema;
    try {
        schema = make_schema(std::move(names));
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }

    std::vector<FeatureTerm> terms;
    std::map<FeatureTerm, double> fractions;
    for (const auto& entry : detail::require_field(j, "terms", path)) {
        FeatureTerm term = term_from_json(entry, path);
        const double f = detail::require_field(entry, "fraction", path).get<double>();
        if (!fractions.emplace(term, f).second)
            throw std::invalid_argument(path + ": duplicate term '" + term.label() + "'");
        terms.push_back(std::move(term));
    }

    std::optional<ResourceVector> baseline;
    if (j.contains("baseline"))
        baseline = resource_map_from_json(j.at("baseline"), schema, path);
    else if (default_baseline && default_baseline->conforms_to(*schema))
        baseline = std::move(default_baseline);
    if (!baseline)
        throw std::invalid_argument(path + ": no baseline given and no usable default");

    try {
        return GroundTruth(
            ModelSpec(schema, std::move(terms), *baseline),
            FractionSet(detail::require_field(j, "serial", path).get<double>(),
                        std::move(fractions)),
            detail::require_field(j, "baseline_perf", path).get<double>());
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

inline void save_truth(const std::string& path, const GroundTruth& truth) {
    write_text_atomic(path, truth_to_json(truth).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Range tables

/// Range file: {"resources": [{"name": ..., "min": ..., "max": ..., "step": ...}
/// or {"name": ..., "levels": [...]}]}; resource order defines the schema.
inline RangeTable load_ranges(const std::string& path) {
    const nlohmann::json j = detail::parse_json_file(path);
    std::vector<std::string> names;
    std::vector<std::vector<double>> levels;
    for (const auto& entry : detail::require_field(j, "resources", path)) {
        const std::string name = detail::require_field(entry, "name", path).get<std::string>();
        const std::string ctx = path + ": resource '" + name + "'";
        names.push_back(name);
        try {
            if (entry.contains("levels")) {
                levels.push_back(entry.at("levels").get<std::vector<double>>());
            } else {
                const double lo = detail::require_field(entry, "min", ctx).get<double>();
                const double hi = detail::require_field(entry, "max", ctx).get<double>();
                const double step = entry.value("step", 1.0);
                levels.push_back(RangeTable::arithmetic(lo, hi, step));
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(ctx + ": " + e.what());
        }
    }
    try {
        return RangeTable(make_schema(std::move(names)), std::move(levels));
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Cost models

/// Cost file: {"offset": 0.0, "weights": {"cores": 120.0, ...}}; resources
/// not listed get weight 0.
inline CostModel load_cost(const std::string& path, const SchemaPtr& schema) {
    const nlohmann::json j = detail::parse_json_file(path);
    std::vector<double> weights(schema->size(), 0.0);
    if (j.contains("weights")) {
        for (const auto& [name, value] : j.at("weights").items()) {
            const auto idx = schema->find(name);
            if (!idx)
                throw std::invalid_argument(path + ": unknown resource '" + name +
                                            "' in weights");
            weights[*idx] = value.get<double>();
        }
    }
    try {
        return CostModel(schema, std::move(weights), j.value("offset", 0.0));
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Cross-validation reports

inline nlohmann::json cv_report_to_json(const CvReport& report) {
    return {
        {"format", kCvReportFormatTag},
        {"label", report.label},
        {"folds", report.fold_count},
        {"seed", report.seed},
        {"fold_mapes_pct", report.fold_mapes},
        {"fold_sizes", report.fold_sizes},
        {"mean_mape_pct", report.mean_mape},
        {"accuracy_pct", report.accuracy},
        {"failed_predictions", report.failed_predictions},
        {"warnings", report.warnings},
    };
}

inline CvReport cv_report_from_json(const nlohmann::json& j, const std::string& ctx) {
    const std::string format = detail::require_field(j, "format", ctx).get<std::string>();
    if (format != kCvReportFormatTag)
        throw std::invalid_argument(ctx + ": unsupported format '" + format + "', expected '" +
                                    kCvReportFormatTag + "'");
    CvReport report;
    report.label = j.value("label", std::string{});
    report.fold_count = detail::require_field(j, "folds", ctx).get<std::size_t>();
    report.seed = detail::require_field(j, "seed", ctx).get<std::uint64_t>();
    report.fold_mapes = detail::require_field(j, "fold_mapes_pct", ctx).get<std::vector<double>>();
    report.fold_sizes =
        detail::require_field(j, "fold_sizes", ctx).get<std::vector<std::size_t>>();
    report.mean_mape = detail::require_field(j, "mean_mape_pct", ctx).get<double>();
    report.accuracy = detail::require_field(j, "accuracy_pct", ctx).get<double>();
    report.failed_predictions = j.value("failed_predictions", std::size_t{0});
    report.warnings = j.value("warnings", std::vector<std::string>{});
    return report;
}

inline void save_cv_report(const std::string& path, const CvReport& report) {
    write_text_atomic(path, cv_report_to_json(report).dump(2) + "\n");
}

inline CvReport load_cv_report(const std::string& path) {
    return cv_report_from_json(detail::parse_json_file(path), path);
}

/// Aligned plain-text fold table for terminal display.
inline std::string format_cv_table(const CvReport& report) {
    std::ostringstream out;
    char line[128];
    out << "fold  n_valid      MAPE%  accuracy%\n";
    for (std::size_t f = 0; f < report.fold_mapes.size(); ++f) {
        std::snprintf(line, sizeof(line), "%4zu  %7zu  %9.4f  %9.4f\n", f,
                      report.fold_sizes[f], report.fold_mapes[f],
                      100.0 - report.fold_mapes[f]);
        out << line;
    }
    std::snprintf(line, sizeof(line), "mean  %7zu  %9.4f  %9.4f\n",
                  std::accumulate(report.fold_sizes.begin(), report.fold_sizes.end(),
                                  std::size_t{0}),
                  report.mean_mape, report.accuracy);
    out << line;
    return out.str();
}

/// Per-fold CSV for one report.
inline void save_cv_csv(const std::string& path, const CvReport& report) {
    std::ostringstream out;
    out << "fold,n_valid,mape_pct,accuracy_pct\n";
    for (std::size_t f = 0; f < report.fold_mapes.size(); ++f)
        out << f << ',' << report.fold_sizes[f] << ',' << format_double(report.fold_mapes[f])
            << ',' << format_double(100.0 - report.fold_mapes[f]) << '\n';
    write_text_atomic(path, out.str());
}

/// One-row-per-report summary CSV for accuracy comparisons across models.
inline std::string cv_summary_csv(const std::vector<CvReport>& reports) {
    std::ostringstream out;
    out << "label,folds,seed,mean_mape_pct,accuracy_pct,failed_predictions\n";
    for (const auto& r : reports)
        out << r.label << ',' << r.fold_count << ',' << r.seed << ','
            << format_double(r.mean_mape) << ',' << format_double(r.accuracy) << ','
            << r.failed_predictions << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Prediction and exploration output

inline void save_predictions_csv(const std::string& path,
                                 const std::vector<ResourceVector>& configs,
                                 const std::vector<double>& scores) {
    if (configs.size() != scores.size())
        throw std::invalid_argument("save_predictions_csv: configs and scores differ in length");
    if (configs.empty())
        throw std::invalid_argument("save_predictions_csv: nothing to write");
    std::ostringstream out;
    const auto& schema = configs.front().schema();
    for (std::size_t j = 0; j < schema.size(); ++j) out << schema.name(j) << ',';
    out << "predicted_score\n";
    for (std::size_t i = 0; i < configs.size(); ++i) {
        for (std::size_t j = 0; j < configs[i].size(); ++j)
            out << format_double(configs[i][j]) << ',';
        out << format_double(scores[i]) << '\n';
    }
    write_text_atomic(path, out.str());
}

inline void save_exploration_csv(const std::string& path, const ExplorationResult& result,
                                 const ResourceSchema& schema) {
    std::ostringstream out;
    for (std::size_t j = 0; j < schema.size(); ++j) out << schema.name(j) << ',';
    out << "predicted_score,cost\n";
    for (const auto& p : result.feasible) {
        for (std::size_t j = 0; j < p.config.size(); ++j)
            out << format_double(p.config[j]) << ',';
        out << format_double(p.predicted_score) << ',' << format_double(p.cost) << '\n';
    }
    write_text_atomic(path, out.str());
}

inline nlohmann::json exploration_to_json(const ExplorationResult& result) {
    nlohmann::json feasible = nlohmann::json::array();
    for (const auto& p : result.feasible)
        feasible.push_back({{"config", resource_map_to_json(p.config)},
                            {"predicted_score", p.predicted_score},
                            {"cost", p.cost}});
    return {
        {"target_score", result.target},
        {"evaluated", result.evaluated},
        {"infeasible", result.infeasible},
        {"errors", result.errors},
        {"feasible_total", result.feasible_total},
        {"feasible", std::move(feasible)},
    };
}

inline void save_exploration_json(const std::string& path, const ExplorationResult& result) {
    write_text_atomic(path, exploration_to_json(result).dump(2) + "\n");
}

inline void save_frontier_csv(const std::string& path,
                              const std::vector<FrontierPoint>& steps) {
    std::ostringstream out;
    out << "cost,best_score\n";
    for (const auto& s : steps)
        out << format_double(s.cost) << ',' << format_double(s.score) << '\n';
    write_text_atomic(path, out.str());
}

} // namespace amdahlx
