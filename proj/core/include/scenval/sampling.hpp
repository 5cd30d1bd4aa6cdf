#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "scenval/point_set.hpp"

namespace scenval {

/// The five marginal laws used throughout the experiment suite.
enum class DensityKind {
    StandardNormal,
    ExponentialMean1,
    StudentT1,       // one degree of freedom
    Cauchy11,        // location 1, scale 1
    Pareto11,        // shape 1, scale 1
};

/// A univariate density with an evaluable pdf, cdf and inverse cdf,
/// extended to R^d as a product of iid coordinates.
class Density {
public:
    explicit Density(DensityKind kind) : kind_(kind) {}

    DensityKind kind() const { return kind_; }
    std::string name() const;

    /// Marginal pdf; 0 outside the support.
    double pdf1(double x) const;

    /// Marginal cdf.
    double cdf1(double x) const;

    /// Marginal inverse cdf for u in (0, 1).
    double quantile(double u) const;

    /// Product pdf over the coordinates of x.
    double pdf(std::span<const double> x) const;

    /// Lower edge of the support (-inf for full-line laws).
    double support_lower() const;

private:
    DensityKind kind_;
};

Density density_for(DensityKind kind);

/// Parses "normal", "exponential", "student-t", "cauchy", "pareto".
DensityKind density_kind_from_name(const std::string& name);

/// Address of one random substream: a root seed plus the experiment,
/// repetition and sample-role coordinates. Identical paths always yield
/// identical variates, independent of threading or call order.
struct SeedPath {
    std::uint64_t root = 0;
    std::string experiment;
    std::uint64_t repetition = 0;
    SourceLabel role = SourceLabel::Empirical;
};

namespace detail {
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);
std::uint64_t derive_stream_seed(const SeedPath& path);
}  // namespace detail

/// A uniform (0,1) stream bound to one seed path.
class SubstreamRng {
public:
    explicit SubstreamRng(const SeedPath& path)
        : engine_(detail::derive_stream_seed(path)) {}

    /// Strictly inside (0, 1), suitable for inverse-cdf sampling.
    double uniform() {
        const std::uint64_t bits = engine_() >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal variate via the inverse cdf.
    double normal();

private:
    std::mt19937_64 engine_;
};

/// Draws m iid points in R^d whose coordinates follow the marginal
/// density (product law), labeled with the role of the seed path.
PointSet sample(const Density& density, int d, int m, const SeedPath& path);

/// Inverse standard normal cdf, accurate to full double precision.
double standard_normal_quantile(double u);

/// Standard normal cdf.
double standard_normal_cdf(double x);

}  // namespace scenval
