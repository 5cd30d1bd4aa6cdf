#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scenval/measures.hpp"

namespace scenval::cli {

enum class OutputFormat { Json, Csv };

OutputFormat format_from_name(const std::string& name);
ExpectationMode mode_from_name(const std::string& name);

/// Common output plumbing: empty path means stdout.
struct OutputTarget {
    std::string path;
    OutputFormat format = OutputFormat::Json;
};

struct ValidateConfig {
    std::string empirical_path;
    std::string generated_path;
    int k = 3;
    double rho = 0.5;
    ExpectationMode mode = ExpectationMode::Exact;
    unsigned threads = 0;
    OutputTarget output;
};

struct Table1Config {
    int repetitions = 100;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    OutputTarget output{.path = "", .format = OutputFormat::Csv};
};

struct NncConvergenceConfig {
    std::string density = "normal";
    int d = 2;
    int k = 3;
    ExpectationMode mode = ExpectationMode::Exact;
    std::vector<int> sample_sizes{100, 1000, 5000};
    int repetitions = 100;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    OutputTarget output{.path = "", .format = OutputFormat::Csv};
};

struct HarnessConfig {
    std::string training_path;     // empty: synthetic correlated-line data
    int training_size = 500;
    double noise_sigma = 0.1;
    int steps = 10;
    double sigma0 = 1.0;
    double decay = 0.7;
    int k = 3;
    double rho = 0.5;
    ExpectationMode mode = ExpectationMode::Exact;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    OutputTarget output{.path = "", .format = OutputFormat::Csv};
};

struct QCheckConfig {
    double fail_above = 1e-6;
    double abs_tol = 1e-8;
    OutputTarget output{.path = "", .format = OutputFormat::Csv};
};

int cmd_validate(const ValidateConfig& config);
int cmd_table1(const Table1Config& config);
int cmd_nnc_convergence(const NncConvergenceConfig& config);
int cmd_harness(const HarnessConfig& config);
int cmd_q_check(const QCheckConfig& config);

/// Maps a thrown error to the documented exit codes: 2 for I/O and
/// parsing, 3 for validation and shape problems, 4 for numerical
/// failures.
int run_guarded(const std::function<int()>& command);

}  // namespace scenval::cli
