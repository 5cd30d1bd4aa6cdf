#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "scenval/measures.hpp"
#include "scenval/point_set.hpp"
#include "scenval/sampling.hpp"

namespace scenval {

/// A d-dimensional product law built from one marginal density.
struct ProductLaw {
    DensityKind density = DensityKind::StandardNormal;
    int d = 2;
};

/// Strongly dependent two-dimensional data: points near the diagonal,
/// (t, t + noise_sigma * z) with t and z standard normal.
struct CorrelatedLineLaw {
    double noise_sigma = 0.1;
};

/// A law that experiment protocols and the TrueSampler generator can
/// draw fresh samples from.
class DataLaw {
public:
    DataLaw(ProductLaw law) : law_(law) {}                 // NOLINT(google-explicit-constructor)
    DataLaw(CorrelatedLineLaw law) : law_(law) {}          // NOLINT(google-explicit-constructor)

    int dim() const;
    std::string describe() const;
    PointSet sample(int m, const SeedPath& path) const;

private:
    std::variant<ProductLaw, CorrelatedLineLaw> law_;
};

/// Which statistic a Monte-Carlo experiment evaluates.
enum class Statistic { Mr, Nnc, Both };

/// Declarative description of one Monte-Carlo run: two independent
/// samples of size m are drawn from the same density per repetition and
/// the selected statistic is evaluated on the pair.
///
/// The sampling substreams are keyed by (density, d, m, repetition,
/// role) only, so specs differing in rho or k reuse identical draws.
struct ExperimentSpec {
    DensityKind density = DensityKind::StandardNormal;
    int d = 2;
    int m = 500;
    double rho = 0.5;              // mr only
    int k = 3;                     // nnc only
    ExpectationMode mode = ExpectationMode::Exact;
    int repetitions = 100;
    std::uint64_t root_seed = 0;
    Statistic statistic = Statistic::Mr;

    std::string sampling_stream_id() const;
};

/// Outcome of a Monte-Carlo experiment.
struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<double> values;    // one per repetition, in repetition order
    double mean = 0.0;
    double stddev = 0.0;
    double std_error = 0.0;        // stddev / sqrt(repetitions)
    double theoretical = 0.0;      // mr_limit for mr runs, 0 for nnc runs
};

/// Memorizing-ratio convergence experiment (spec.statistic must be Mr).
ExperimentResult run_mr_convergence(const ExperimentSpec& spec, unsigned threads = 0);

/// Same protocol evaluated for several rho values on shared draws; the
/// per-repetition values of element r are bitwise identical to a
/// run_mr_convergence with spec.rho = rhos[r].
std::vector<ExperimentResult> run_mr_grid(const ExperimentSpec& spec,
                                          std::span<const double> rhos,
                                          unsigned threads = 0);

/// Null-hypothesis coincidence experiment (spec.statistic must be Nnc).
ExperimentResult run_nnc_null(const ExperimentSpec& spec, unsigned threads = 0);

/// Toy scenario generators standing in for a trained model.
struct GeneratorSpec {
    enum class Kind {
        Memorizer,            // cyclic training copy + jitter, sigma >= 0
        JitterResampler,      // resample with replacement + jitter, sigma > 0
        IndependenceBreaker,  // per-column permutation of a resample
        TrueSampler,          // fresh draw from `law`
    };

    Kind kind = Kind::TrueSampler;
    double sigma = 0.0;
    std::optional<DataLaw> law;    // required for TrueSampler
    int output_size = 0;           // 0: match the training size
    SeedPath seed;

    std::string tag() const;
};

/// Runs one toy generator against a training set; the result carries the
/// Generated label and the training dimension.
PointSet generate(const GeneratorSpec& spec, const PointSet& training);

/// Training data used by the default harness: m points concentrated on
/// the diagonal of R^2, labeled Empirical.
PointSet make_correlated_line_training(int m, double noise_sigma,
                                       const SeedPath& path);

/// One step of a harness trajectory.
struct HarnessStep {
    int step = 0;
    std::string generator;
    double sigma = 0.0;
    double nnc = 0.0;
    double mr = 0.0;
};

/// Evaluates both statistics for every generator of the schedule against
/// a fixed training set.
std::vector<HarnessStep> run_harness(const PointSet& training,
                                     std::span<const GeneratorSpec> schedule,
                                     int k, double rho,
                                     ExpectationMode mode = ExpectationMode::Exact,
                                     unsigned threads = 0);

/// Schedule of JitterResampler generators with sigma decreasing
/// geometrically from sigma0 by `decay` per step; mimics a generator
/// sliding from noise toward copying its training data.
std::vector<GeneratorSpec> make_decreasing_sigma_schedule(int steps, double sigma0,
                                                          double decay, int output_size,
                                                          std::uint64_t root_seed);

}  // namespace scenval
