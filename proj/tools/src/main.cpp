#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using scenval::cli::format_from_name;
using scenval::cli::mode_from_name;

void add_output_options(CLI::App* cmd, std::string& format, std::string& output,
                        const std::string& default_format) {
    format = default_format;
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output,-o", output, "Output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "scenval - sample-based validation measures for scenario generators"};
    app.require_subcommand(1);

    // validate
    scenval::cli::ValidateConfig validate;
    std::string validate_mode = "exact";
    std::string validate_format;
    auto* validate_cmd = app.add_subcommand(
        "validate", "Compute nnc and mr for an empirical/generated CSV pair");
    validate_cmd->add_option("--empirical,-e", validate.empirical_path,
                             "Empirical sample (CSV, one point per row)")
        ->required();
    validate_cmd->add_option("--generated,-g", validate.generated_path,
                             "Generated sample (CSV, one point per row)")
        ->required();
    validate_cmd->add_option("--k", validate.k, "Neighbor depth for nnc");
    validate_cmd->add_option("--rho", validate.rho,
                             "Neighborhood fraction for mr, in (0, 1]");
    validate_cmd->add_option("--mode", validate_mode, "Expectation centering")
        ->check(CLI::IsMember({"exact", "asymptotic"}));
    validate_cmd->add_option("--threads", validate.threads,
                             "Worker threads (0: hardware)");
    add_output_options(validate_cmd, validate_format, validate.output.path, "json");

    // table1
    scenval::cli::Table1Config table1;
    std::uint64_t table1_seed = 0;
    std::string table1_format;
    auto* table1_cmd = app.add_subcommand(
        "table1",
        "Memorizing-ratio convergence grid: 5 densities x 5 rho x m in {500, 5000}");
    table1_cmd->add_option("--reps", table1.repetitions, "Repetitions per cell");
    auto* table1_seed_opt =
        table1_cmd->add_option("--seed", table1_seed, "Root seed");
    table1_cmd->add_option("--threads", table1.threads,
                           "Worker threads (0: hardware)");
    add_output_options(table1_cmd, table1_format, table1.output.path, "csv");

    // nnc-convergence
    scenval::cli::NncConvergenceConfig nncconv;
    std::uint64_t nncconv_seed = 0;
    std::string nncconv_mode = "exact";
    std::string nncconv_format;
    auto* nncconv_cmd = app.add_subcommand(
        "nnc-convergence",
        "Mean nnc of same-distribution samples across sample sizes");
    nncconv_cmd->add_option("--density", nncconv.density, "Marginal density")
        ->check(CLI::IsMember(
            {"normal", "exponential", "student-t", "cauchy", "pareto"}));
    nncconv_cmd->add_option("--d", nncconv.d, "Dimension");
    nncconv_cmd->add_option("--k", nncconv.k, "Neighbor depth");
    nncconv_cmd->add_option("--mode", nncconv_mode, "Expectation centering")
        ->check(CLI::IsMember({"exact", "asymptotic"}));
    nncconv_cmd
        ->add_option("--m", nncconv.sample_sizes,
                     "Sample size (repeatable; default 100 1000 5000)")
        ->expected(-1);
    nncconv_cmd->add_option("--reps", nncconv.repetitions, "Repetitions per size");
    auto* nncconv_seed_opt =
        nncconv_cmd->add_option("--seed", nncconv_seed, "Root seed");
    nncconv_cmd->add_option("--threads", nncconv.threads,
                            "Worker threads (0: hardware)");
    add_output_options(nncconv_cmd, nncconv_format, nncconv.output.path, "csv");

    // harness
    scenval::cli::HarnessConfig harness;
    std::uint64_t harness_seed = 0;
    std::string harness_mode = "exact";
    std::string harness_format;
    auto* harness_cmd = app.add_subcommand(
        "harness",
        "Evaluate both measures along a jitter-resampler schedule that slides "
        "toward copying its training data");
    harness_cmd->add_option("--training", harness.training_path,
                            "Training CSV (default: synthetic correlated data)");
    harness_cmd->add_option("--training-size", harness.training_size,
                            "Synthetic training size");
    harness_cmd->add_option("--noise", harness.noise_sigma,
                            "Synthetic training noise around the diagonal");
    harness_cmd->add_option("--steps", harness.steps, "Schedule length");
    harness_cmd->add_option("--sigma0", harness.sigma0, "Initial jitter sigma");
    harness_cmd->add_option("--decay", harness.decay,
                            "Geometric sigma decay per step, in (0, 1)");
    harness_cmd->add_option("--k", harness.k, "Neighbor depth for nnc");
    harness_cmd->add_option("--rho", harness.rho, "Neighborhood fraction for mr");
    harness_cmd->add_option("--mode", harness_mode, "Expectation centering")
        ->check(CLI::IsMember({"exact", "asymptotic"}));
    auto* harness_seed_opt =
        harness_cmd->add_option("--seed", harness_seed, "Root seed");
    harness_cmd->add_option("--threads", harness.threads,
                            "Worker threads (0: hardware)");
    add_output_options(harness_cmd, harness_format, harness.output.path, "csv");

    // q-check
    scenval::cli::QCheckConfig qcheck;
    std::string qcheck_format;
    auto* qcheck_cmd = app.add_subcommand(
        "q-check",
        "Cross-check the closed form of Q(s) against adaptive quadrature over "
        "the full reference grid");
    qcheck_cmd->add_option("--fail-above", qcheck.fail_above,
                           "Exit nonzero above this |closed - quadrature|");
    qcheck_cmd->add_option("--tol", qcheck.abs_tol, "Quadrature absolute tolerance");
    add_output_options(qcheck_cmd, qcheck_format, qcheck.output.path, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    return scenval::cli::run_guarded([&]() -> int {
        if (validate_cmd->parsed()) {
            validate.mode = mode_from_name(validate_mode);
            validate.output.format = format_from_name(validate_format);
            return scenval::cli::cmd_validate(validate);
        }
        if (table1_cmd->parsed()) {
            if (table1_seed_opt->count() > 0) {
                table1.seed = table1_seed;
            }
            table1.output.format = format_from_name(table1_format);
            return scenval::cli::cmd_table1(table1);
        }
        if (nncconv_cmd->parsed()) {
            nncconv.mode = mode_from_name(nncconv_mode);
            if (nncconv_seed_opt->count() > 0) {
                nncconv.seed = nncconv_seed;
            }
            nncconv.output.format = format_from_name(nncconv_format);
            return scenval::cli::cmd_nnc_convergence(nncconv);
        }
        if (harness_cmd->parsed()) {
            harness.mode = mode_from_name(harness_mode);
            if (harness_seed_opt->count() > 0) {
                harness.seed = harness_seed;
            }
            harness.output.format = format_from_name(harness_format);
            return scenval::cli::cmd_harness(harness);
        }
        if (qcheck_cmd->parsed()) {
            qcheck.output.format = format_from_name(qcheck_format);
            return scenval::cli::cmd_q_check(qcheck);
        }
        return 2;
    });
}
