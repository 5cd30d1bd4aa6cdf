#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "scenval/experiments.hpp"
#include "scenval/report.hpp"
#include "scenval/theory.hpp"

namespace scenval::cli {

using ordered_json = nlohmann::ordered_json;

OutputFormat format_from_name(const std::string& name) {
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw InvalidParameter("unknown format '" + name + "' (expected json or csv)");
}

ExpectationMode mode_from_name(const std::string& name) {
    if (name == "exact") {
        return ExpectationMode::Exact;
    }
    if (name == "asymptotic") {
        return ExpectationMode::AsymptoticHalf;
    }
    throw InvalidParameter("unknown mode '" + name +
                           "' (expected exact or asymptotic)");
}

namespace {

constexpr int kSchemaVersion = 1;

const std::vector<DensityKind> kTableDensities = {
    DensityKind::StandardNormal, DensityKind::ExponentialMean1,
    DensityKind::StudentT1, DensityKind::Cauchy11, DensityKind::Pareto11,
};
const std::vector<double> kTableRhos = {0.1, 0.3, 0.5, 0.7, 0.9};
const std::vector<int> kTableSizes = {500, 5000};

void write_output(const OutputTarget& target, const std::string& content) {
    if (target.path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(target.path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + target.path + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("I/O error while writing '" + target.path + "'");
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed.has_value()) {
        return *seed;
    }
    std::random_device device;
    const std::uint64_t chosen =
        (static_cast<std::uint64_t>(device()) << 32) ^ device();
    std::cerr << "scenval: no --seed given, using " << chosen << "\n";
    return chosen;
}

std::string mode_flag(ExpectationMode mode) {
    return mode == ExpectationMode::Exact ? "exact" : "asymptotic";
}

// The reproduce string regenerates the content; the output destination is
// deliberately not part of it.
std::string output_suffix(const OutputTarget& target) {
    return " --format " +
           std::string(target.format == OutputFormat::Json ? "json" : "csv");
}

}  // namespace

int cmd_validate(const ValidateConfig& config) {
    const PointSet empirical =
        read_point_set_csv(config.empirical_path, SourceLabel::Empirical);
    const PointSet generated =
        read_point_set_csv(config.generated_path, SourceLabel::Generated);

    if (empirical.dim() != generated.dim()) {
        throw DimensionMismatch(
            "dimension mismatch: '" + config.empirical_path + "' has d=" +
            std::to_string(empirical.dim()) + " but '" + config.generated_path +
            "' has d=" + std::to_string(generated.dim()));
    }
    if (empirical.size() != generated.size()) {
        throw UnequalSampleSizes(
            "sample size mismatch: '" + config.empirical_path + "' has m=" +
            std::to_string(empirical.size()) + " but '" + config.generated_path +
            "' has m=" + std::to_string(generated.size()));
    }

    const MeasureParams params{config.k, config.rho};
    const ValidationReport report =
        validate_pair(empirical, generated, params, config.mode, config.threads);

    const std::string reproduce =
        "scenval validate --empirical " + config.empirical_path + " --generated " +
        config.generated_path + " --k " + std::to_string(config.k) + " --rho " +
        format_double(config.rho) + " --mode " + mode_flag(config.mode) +
        output_suffix(config.output);

    if (config.output.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "validate";
        doc["inputs"] = {
            {"empirical", {{"path", config.empirical_path},
                           {"m", report.m},
                           {"d", report.d}}},
            {"generated", {{"path", config.generated_path},
                           {"m", generated.size()},
                           {"d", generated.dim()}}},
        };
        doc["params"] = {{"k", report.k},
                         {"rho", report.rho},
                         {"mode", mode_flag(report.mode)}};
        doc["nnc"] = {{"value", report.nnc},
                      {"t1", report.t1},
                      {"t2", report.t2},
                      {"expected_t", report.expected_t},
                      {"tie_count", report.tie_count}};
        doc["mr"] = {{"value", report.mr},
                     {"memorized_count", report.memorized_count},
                     {"mr_limit", report.mr_limit}};
        doc["methodology"] = report.methodology;
        doc["reproduce"] = reproduce;
        write_output(config.output, doc.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "# scenval validate\n";
    out << "# reproduce: " << reproduce << "\n";
    out << "key,value\n";
    out << "m," << report.m << "\n";
    out << "d," << report.d << "\n";
    out << "k," << report.k << "\n";
    out << "rho," << format_double(report.rho) << "\n";
    out << "mode," << mode_flag(report.mode) << "\n";
    out << "nnc," << format_double(report.nnc) << "\n";
    out << "t1," << format_double(report.t1) << "\n";
    out << "t2," << format_double(report.t2) << "\n";
    out << "expected_t," << format_double(report.expected_t) << "\n";
    out << "tie_count," << report.tie_count << "\n";
    out << "mr," << format_double(report.mr) << "\n";
    out << "memorized_count," << report.memorized_count << "\n";
    out << "mr_limit," << format_double(report.mr_limit) << "\n";
    write_output(config.output, out.str());
    return 0;
}

int cmd_table1(const Table1Config& config) {
    if (config.repetitions < 1) {
        throw InvalidParameter("repetitions must be >= 1");
    }
    const std::uint64_t seed = resolve_seed(config.seed);

    struct Row {
        std::string density;
        int m;
        double rho;
        double mean, stddev, std_error, theoretical;
    };
    std::vector<Row> rows;
    for (const DensityKind density : kTableDensities) {
        for (const int m : kTableSizes) {
            ExperimentSpec spec;
            spec.density = density;
            spec.d = 2;
            spec.m = m;
            spec.repetitions = config.repetitions;
            spec.root_seed = seed;
            spec.statistic = Statistic::Mr;
            const auto results = run_mr_grid(spec, kTableRhos, config.threads);
            for (const ExperimentResult& res : results) {
                rows.push_back(Row{density_for(density).name(), m, res.spec.rho,
                                   res.mean, res.stddev, res.std_error,
                                   res.theoretical});
            }
        }
    }

    const std::string reproduce =
        "scenval table1 --reps " + std::to_string(config.repetitions) + " --seed " +
        std::to_string(seed) + output_suffix(config.output);

    if (config.output.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "table1";
        doc["params"] = {{"d", 2},
                         {"reps", config.repetitions},
                         {"seed", seed}};
        doc["rows"] = ordered_json::array();
        for (const Row& row : rows) {
            doc["rows"].push_back({{"density", row.density},
                                   {"d", 2},
                                   {"m", row.m},
                                   {"rho", row.rho},
                                   {"reps", config.repetitions},
                                   {"mean_mr", row.mean},
                                   {"stddev", row.stddev},
                                   {"std_error", row.std_error},
                                   {"theoretical", row.theoretical}});
        }
        doc["reproduce"] = reproduce;
        write_output(config.output, doc.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "# scenval table1: memorizing-ratio null experiment, d=2\n";
    out << "# seed=" << seed << " reps=" << config.repetitions << "\n";
    out << "# reproduce: " << reproduce << "\n";
    out << "density,d,m,rho,reps,mean_mr,stddev,std_error,theoretical\n";
    for (const Row& row : rows) {
        out << row.density << ",2," << row.m << ',' << format_double(row.rho) << ','
            << config.repetitions << ',' << format_double(row.mean) << ','
            << format_double(row.stddev) << ',' << format_double(row.std_error)
            << ',' << format_double(row.theoretical) << "\n";
    }
    write_output(config.output, out.str());
    return 0;
}

int cmd_nnc_convergence(const NncConvergenceConfig& config) {
    if (config.sample_sizes.empty()) {
        throw InvalidParameter("no sample sizes given");
    }
    const DensityKind density = density_kind_from_name(config.density);
    const std::uint64_t seed = resolve_seed(config.seed);

    std::vector<ExperimentResult> results;
    for (const int m : config.sample_sizes) {
        ExperimentSpec spec;
        spec.density = density;
        spec.d = config.d;
        spec.m = m;
        spec.k = config.k;
        spec.mode = config.mode;
        spec.repetitions = config.repetitions;
        spec.root_seed = seed;
        spec.statistic = Statistic::Nnc;
        results.push_back(run_nnc_null(spec, config.threads));
    }

    std::string reproduce = "scenval nnc-convergence --density " + config.density +
                            " --d " + std::to_string(config.d) + " --k " +
                            std::to_string(config.k) + " --mode " +
                            mode_flag(config.mode);
    for (const int m : config.sample_sizes) {
        reproduce += " --m " + std::to_string(m);
    }
    reproduce += " --reps " + std::to_string(config.repetitions) + " --seed " +
                 std::to_string(seed) + output_suffix(config.output);

    if (config.output.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "nnc-convergence";
        doc["params"] = {{"density", config.density},
                         {"d", config.d},
                         {"k", config.k},
                         {"mode", mode_flag(config.mode)},
                         {"reps", config.repetitions},
                         {"seed", seed}};
        doc["rows"] = ordered_json::array();
        for (const ExperimentResult& res : results) {
            doc["rows"].push_back({{"m", res.spec.m},
                                   {"mean_nnc", res.mean},
                                   {"stddev", res.stddev},
                                   {"std_error", res.std_error}});
        }
        doc["reproduce"] = reproduce;
        write_output(config.output, doc.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "# scenval nnc-convergence: same-distribution null experiment\n";
    out << "# density=" << config.density << " d=" << config.d << " k=" << config.k
        << " mode=" << mode_flag(config.mode) << " seed=" << seed
        << " reps=" << config.repetitions << "\n";
    out << "# reproduce: " << reproduce << "\n";
    out << "density,d,k,mode,m,reps,mean_nnc,stddev,std_error\n";
    for (const ExperimentResult& res : results) {
        out << config.density << ',' << config.d << ',' << config.k << ','
            << mode_flag(config.mode) << ',' << res.spec.m << ','
            << config.repetitions << ',' << format_double(res.mean) << ','
            << format_double(res.stddev) << ',' << format_double(res.std_error)
            << "\n";
    }
    write_output(config.output, out.str());
    return 0;
}

int cmd_harness(const HarnessConfig& config) {
    if (config.steps < 1) {
        throw InvalidParameter("empty schedule: --steps must be >= 1");
    }
    const std::uint64_t seed = resolve_seed(config.seed);

    const PointSet training =
        config.training_path.empty()
            ? make_correlated_line_training(
                  config.training_size, config.noise_sigma,
                  SeedPath{seed, "harness-training", 0, SourceLabel::Empirical})
            : read_point_set_csv(config.training_path, SourceLabel::Empirical);

    const auto schedule = make_decreasing_sigma_schedule(
        config.steps, config.sigma0, config.decay,
        static_cast<int>(training.size()), seed);
    const auto trajectory = run_harness(training, schedule, config.k, config.rho,
                                        config.mode, config.threads);

    std::string reproduce = "scenval harness";
    if (!config.training_path.empty()) {
        reproduce += " --training " + config.training_path;
    } else {
        reproduce += " --training-size " + std::to_string(config.training_size) +
                     " --noise " + format_double(config.noise_sigma);
    }
    reproduce += " --steps " + std::to_string(config.steps) + " --sigma0 " +
                 format_double(config.sigma0) + " --decay " +
                 format_double(config.decay) + " --k " + std::to_string(config.k) +
                 " --rho " + format_double(config.rho) + " --mode " +
                 mode_flag(config.mode) + " --seed " + std::to_string(seed) +
                 output_suffix(config.output);

    if (config.output.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "harness";
        doc["params"] = {{"k", config.k},
                         {"rho", config.rho},
                         {"mode", mode_flag(config.mode)},
                         {"steps", config.steps},
                         {"sigma0", config.sigma0},
                         {"decay", config.decay},
                         {"training_m", training.size()},
                         {"training_d", training.dim()},
                         {"seed", seed}};
        doc["rows"] = ordered_json::array();
        for (const HarnessStep& step : trajectory) {
            doc["rows"].push_back({{"step", step.step},
                                   {"generator", step.generator},
                                   {"sigma", step.sigma},
                                   {"nnc", step.nnc},
                                   {"mr", step.mr}});
        }
        doc["reproduce"] = reproduce;
        write_output(config.output, doc.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "# scenval harness: generator schedule against a fixed training set\n";
    out << "# k=" << config.k << " rho=" << format_double(config.rho) << " mode="
        << mode_flag(config.mode) << " seed=" << seed << " training_m="
        << training.size() << " training_d=" << training.dim() << "\n";
    out << "# reproduce: " << reproduce << "\n";
    out << "step,generator,sigma,nnc,mr\n";
    for (const HarnessStep& step : trajectory) {
        out << step.step << ',' << step.generator << ',' << format_double(step.sigma)
            << ',' << format_double(step.nnc) << ',' << format_double(step.mr)
            << "\n";
    }
    write_output(config.output, out.str());
    return 0;
}

int cmd_q_check(const QCheckConfig& config) {
    struct Row {
        std::string density;
        int d;
        double rho;
        int s;
        double closed_form, quadrature, abs_diff;
    };
    std::vector<Row> rows;
    double max_diff = 0.0;

    quad::Options opts;
    opts.abs_tol = config.abs_tol;
    for (const int d : {1, 2}) {
        for (const DensityKind kind : kTableDensities) {
            const Density density = density_for(kind);
            for (const double rho : kTableRhos) {
                for (int s = 0; s <= 5; ++s) {
                    const double closed = theory::q_closed_form(s, rho, d);
                    const double numeric = theory::q_quadrature(s, rho, d, density, opts);
                    const double diff = std::abs(closed - numeric);
                    max_diff = std::max(max_diff, diff);
                    rows.push_back(
                        Row{density.name(), d, rho, s, closed, numeric, diff});
                }
            }
        }
    }

    const std::string reproduce = "scenval q-check --fail-above " +
                                  format_double(config.fail_above) +
                                  output_suffix(config.output);

    if (config.output.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "q-check";
        doc["params"] = {{"fail_above", config.fail_above},
                         {"abs_tol", config.abs_tol}};
        doc["max_abs_diff"] = max_diff;
        doc["rows"] = ordered_json::array();
        for (const Row& row : rows) {
            doc["rows"].push_back({{"density", row.density},
                                   {"d", row.d},
                                   {"rho", row.rho},
                                   {"s", row.s},
                                   {"closed_form", row.closed_form},
                                   {"quadrature", row.quadrature},
                                   {"abs_diff", row.abs_diff}});
        }
        doc["reproduce"] = reproduce;
        write_output(config.output, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "# scenval q-check: closed form vs quadrature for Q(s)\n";
        out << "# max_abs_diff=" << format_double(max_diff) << "\n";
        out << "# reproduce: " << reproduce << "\n";
        out << "density,d,rho,s,closed_form,quadrature,abs_diff\n";
        for (const Row& row : rows) {
            out << row.density << ',' << row.d << ',' << format_double(row.rho) << ','
                << row.s << ',' << format_double(row.closed_form) << ','
                << format_double(row.quadrature) << ',' << format_double(row.abs_diff)
                << "\n";
        }
        write_output(config.output, out.str());
    }

    if (max_diff > config.fail_above) {
        std::cerr << "scenval: q-check failed: max |closed - quadrature| = "
                  << format_double(max_diff) << " exceeds "
                  << format_double(config.fail_above) << "\n";
        return 4;
    }
    return 0;
}

int run_guarded(const std::function<int()>& command) {
    try {
        return command();
    } catch (const IoError& e) {
        std::cerr << "scenval: error: " << e.what() << "\n";
        return 2;
    } catch (const CsvParseError& e) {
        std::cerr << "scenval: error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureNotConverged& e) {
        std::cerr << "scenval: error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "scenval: error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "scenval: internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace scenval::cli
