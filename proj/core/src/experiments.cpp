#include "scenval/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "scenval/parallel.hpp"
#include "scenval/stats.hpp"
#include "scenval/theory.hpp"

namespace scenval {

int DataLaw::dim() const {
    if (const auto* p = std::get_if<ProductLaw>(&law_)) {
        return p->d;
    }
    return 2;
}

std::string DataLaw::describe() const {
    if (const auto* p = std::get_if<ProductLaw>(&law_)) {
        return density_for(p->density).name() + ":d" + std::to_string(p->d);
    }
    const auto& line = std::get<CorrelatedLineLaw>(law_);
    return "line:noise" + std::to_string(line.noise_sigma);
}

PointSet DataLaw::sample(int m, const SeedPath& path) const {
    if (const auto* p = std::get_if<ProductLaw>(&law_)) {
        return scenval::sample(density_for(p->density), p->d, m, path);
    }
    const auto& line = std::get<CorrelatedLineLaw>(law_);
    if (m < 2) {
        throw TooSmall("a sample needs at least 2 points, got " + std::to_string(m));
    }
    SubstreamRng rng(path);
    std::vector<double> coords(static_cast<std::size_t>(m) * 2);
    for (int i = 0; i < m; ++i) {
        const double t = rng.normal();
        const double z = rng.normal();
        coords[2 * static_cast<std::size_t>(i)] = t;
        coords[2 * static_cast<std::size_t>(i) + 1] = t + line.noise_sigma * z;
    }
    return PointSet(std::move(coords), 2, path.role);
}

std::string ExperimentSpec::sampling_stream_id() const {
    // rho, k and the statistic do not influence sampling, so cells that
    // differ only in them share draws.
    return "null:" + density_for(density).name() + ":d" + std::to_string(d) +
           ":m" + std::to_string(m);
}

namespace {

void check_spec(const ExperimentSpec& spec, Statistic expected) {
    if (spec.statistic != expected && spec.statistic != Statistic::Both) {
        throw InvalidParameter("experiment spec selects a different statistic");
    }
    if (spec.repetitions < 1) {
        throw InvalidParameter("repetitions must be >= 1");
    }
    if (spec.m < 2) {
        throw TooSmall("experiment needs m >= 2");
    }
    if (spec.d < 1) {
        throw InvalidParameter("dimension must be positive");
    }
}

void aggregate(ExperimentResult& result) {
    result.mean = stats::mean(result.values);
    result.stddev = stats::sample_stddev(result.values);
    result.std_error = stats::standard_error(result.values);
}

std::pair<PointSet, PointSet> draw_pair(const ExperimentSpec& spec, int rep) {
    const Density density = density_for(spec.density);
    const std::string id = spec.sampling_stream_id();
    SeedPath e_path{spec.root_seed, id, static_cast<std::uint64_t>(rep),
                    SourceLabel::Empirical};
    SeedPath g_path{spec.root_seed, id, static_cast<std::uint64_t>(rep),
                    SourceLabel::Generated};
    return {sample(density, spec.d, spec.m, e_path),
            sample(density, spec.d, spec.m, g_path)};
}

}  // namespace

std::vector<ExperimentResult> run_mr_grid(const ExperimentSpec& spec,
                                          std::span<const double> rhos,
                                          unsigned threads) {
    check_spec(spec, Statistic::Mr);
    if (rhos.empty()) {
        throw InvalidParameter("rho grid is empty");
    }
    for (double rho : rhos) {
        detail::check_rho(rho);
    }

    const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
    // values[r][rep]
    std::vector<std::vector<double>> values(rhos.size(),
                                            std::vector<double>(reps, 0.0));
    parallel_for(reps, threads, [&](std::size_t rep) {
        const auto [e, g] = draw_pair(spec, static_cast<int>(rep));
        const auto curve = mr_curve(e, g, rhos, 1);
        for (std::size_t r = 0; r < rhos.size(); ++r) {
            values[r][rep] = curve[r].mr;
        }
    });

    std::vector<ExperimentResult> results;
    results.reserve(rhos.size());
    for (std::size_t r = 0; r < rhos.size(); ++r) {
        ExperimentResult res;
        res.spec = spec;
        res.spec.rho = rhos[r];
        res.spec.statistic = Statistic::Mr;
        res.values = std::move(values[r]);
        res.theoretical = theory::mr_limit(rhos[r], spec.d);
        aggregate(res);
        results.push_back(std::move(res));
    }
    return results;
}

ExperimentResult run_mr_convergence(const ExperimentSpec& spec, unsigned threads) {
    const double rhos[1] = {spec.rho};
    return std::move(run_mr_grid(spec, rhos, threads)[0]);
}

ExperimentResult run_nnc_null(const ExperimentSpec& spec, unsigned threads) {
    check_spec(spec, Statistic::Nnc);
    detail::check_k(spec.k, 2 * static_cast<std::size_t>(spec.m) - 1);

    const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
    ExperimentResult res;
    res.spec = spec;
    res.spec.statistic = Statistic::Nnc;
    res.values.assign(reps, 0.0);
    res.theoretical = 0.0;
    parallel_for(reps, threads, [&](std::size_t rep) {
        const auto [e, g] = draw_pair(spec, static_cast<int>(rep));
        res.values[rep] = nnc(e, g, spec.k, spec.mode, 1).nnc;
    });
    aggregate(res);
    return res;
}

std::string GeneratorSpec::tag() const {
    switch (kind) {
        case Kind::Memorizer: return "memorizer";
        case Kind::JitterResampler: return "jitter-resampler";
        case Kind::IndependenceBreaker: return "independence-breaker";
        case Kind::TrueSampler: return "true-sampler";
    }
    return "unknown";
}

PointSet generate(const GeneratorSpec& spec, const PointSet& training) {
    const int m = spec.output_size > 0 ? spec.output_size
                                       : static_cast<int>(training.size());
    if (m < 2) {
        throw TooSmall("generator output needs m >= 2");
    }
    const std::size_t dim = training.dim();
    SeedPath path = spec.seed;
    path.role = SourceLabel::Generated;

    switch (spec.kind) {
        case GeneratorSpec::Kind::Memorizer: {
            // Covers the whole training set (cyclically for m != training
            // size) so that a zero-jitter memorizer yields mr = 1 exactly.
            if (spec.sigma < 0.0) {
                throw InvalidParameter("memorizer jitter must be >= 0");
            }
            SubstreamRng rng(path);
            std::vector<double> coords(static_cast<std::size_t>(m) * dim);
            for (int i = 0; i < m; ++i) {
                const auto src =
                    training.point(static_cast<std::size_t>(i) % training.size());
                double* dst = coords.data() + static_cast<std::size_t>(i) * dim;
                for (std::size_t c = 0; c < dim; ++c) {
                    dst[c] = spec.sigma > 0.0 ? src[c] + spec.sigma * rng.normal()
                                              : src[c];
                }
            }
            return PointSet(std::move(coords), dim, SourceLabel::Generated);
        }
        case GeneratorSpec::Kind::JitterResampler: {
            if (spec.sigma <= 0.0) {
                throw InvalidParameter("jitter resampler needs sigma > 0");
            }
            SubstreamRng rng(path);
            std::vector<double> coords(static_cast<std::size_t>(m) * dim);
            for (int i = 0; i < m; ++i) {
                const auto pick = static_cast<std::size_t>(
                    rng.uniform() * static_cast<double>(training.size()));
                const auto src = training.point(std::min(pick, training.size() - 1));
                double* dst = coords.data() + static_cast<std::size_t>(i) * dim;
                for (std::size_t c = 0; c < dim; ++c) {
                    dst[c] = src[c] + spec.sigma * rng.normal();
                }
            }
            return PointSet(std::move(coords), dim, SourceLabel::Generated);
        }
        case GeneratorSpec::Kind::IndependenceBreaker: {
            SubstreamRng rng(path);
            // resample rows, then shuffle each coordinate column on its own
            std::vector<double> coords(static_cast<std::size_t>(m) * dim);
            for (int i = 0; i < m; ++i) {
                const auto pick = static_cast<std::size_t>(
                    rng.uniform() * static_cast<double>(training.size()));
                const auto src = training.point(std::min(pick, training.size() - 1));
                std::copy(src.begin(), src.end(),
                          coords.begin() + static_cast<std::size_t>(i) * dim);
            }
            for (std::size_t c = 0; c < dim; ++c) {
                for (std::size_t i = static_cast<std::size_t>(m) - 1; i > 0; --i) {
                    const auto j = static_cast<std::size_t>(
                        rng.uniform() * static_cast<double>(i + 1));
                    std::swap(coords[i * dim + c],
                              coords[std::min(j, i) * dim + c]);
                }
            }
            return PointSet(std::move(coords), dim, SourceLabel::Generated);
        }
        case GeneratorSpec::Kind::TrueSampler: {
            if (!spec.law.has_value()) {
                throw InvalidParameter("TrueSampler needs a data law");
            }
            if (static_cast<std::size_t>(spec.law->dim()) != dim) {
                throw DimensionMismatch(
                    "generator law dimension " + std::to_string(spec.law->dim()) +
                    " does not match the training dimension " + std::to_string(dim));
            }
            return spec.law->sample(m, path);
        }
    }
    throw InvalidParameter("unknown generator kind");
}

PointSet make_correlated_line_training(int m, double noise_sigma,
                                       const SeedPath& path) {
    SeedPath p = path;
    p.role = SourceLabel::Empirical;
    return DataLaw(CorrelatedLineLaw{noise_sigma}).sample(m, p);
}

std::vector<HarnessStep> run_harness(const PointSet& training,
                                     std::span<const GeneratorSpec> schedule,
                                     int k, double rho, ExpectationMode mode,
                                     unsigned threads) {
    if (schedule.empty()) {
        throw InvalidParameter("empty schedule");
    }
    detail::check_rho(rho);

    std::vector<HarnessStep> trajectory(schedule.size());
    parallel_for(schedule.size(), threads, [&](std::size_t s) {
        const PointSet generated = generate(schedule[s], training);
        HarnessStep step;
        step.step = static_cast<int>(s);
        step.generator = schedule[s].tag();
        step.sigma = schedule[s].sigma;
        step.nnc = nnc(training, generated, k, mode, 1).nnc;
        step.mr = memorizing_ratio(training, generated, rho, 1).mr;
        trajectory[s] = std::move(step);
    });
    return trajectory;
}

std::vector<GeneratorSpec> make_decreasing_sigma_schedule(int steps, double sigma0,
                                                          double decay, int output_size,
                                                          std::uint64_t root_seed) {
    if (steps < 1) {
        throw InvalidParameter("empty schedule");
    }
    if (sigma0 <= 0.0 || decay <= 0.0 || decay >= 1.0) {
        throw InvalidParameter("need sigma0 > 0 and decay in (0, 1)");
    }
    std::vector<GeneratorSpec> schedule;
    schedule.reserve(static_cast<std::size_t>(steps));
    double sigma = sigma0;
    for (int s = 0; s < steps; ++s) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::JitterResampler;
        spec.sigma = sigma;
        spec.output_size = output_size;
        spec.seed = SeedPath{root_seed, "harness", static_cast<std::uint64_t>(s),
                             SourceLabel::Generated};
        schedule.push_back(std::move(spec));
        sigma *= decay;
    }
    return schedule;
}

}  // namespace scenval
