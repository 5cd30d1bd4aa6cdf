#include "scenval/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace scenval {

namespace {

constexpr double kPi = std::numbers::pi;

// Acklam's rational approximation to the inverse normal cdf, refined
// below with one Halley step to full double precision.
double acklam_approx(double p) {
    static constexpr double a[6] = {
        -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
        1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {
        -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
        6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[6] = {
        -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
        -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {
        7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
        3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
               q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double standard_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double standard_normal_quantile(double u) {
    if (!(u > 0.0) || !(u < 1.0)) {
        throw InvalidParameter("normal quantile needs u in (0, 1)");
    }
    double x = acklam_approx(u);
    // One Halley refinement against the exact cdf.
    const double err = standard_normal_cdf(x) - u;
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
    if (pdf > 0.0) {
        const double step = err / pdf;
        x -= step / (1.0 + 0.5 * x * step);
    }
    return x;
}

std::string Density::name() const {
    switch (kind_) {
        case DensityKind::StandardNormal: return "normal";
        case DensityKind::ExponentialMean1: return "exponential";
        case DensityKind::StudentT1: return "student-t";
        case DensityKind::Cauchy11: return "cauchy";
        case DensityKind::Pareto11: return "pareto";
    }
    return "unknown";
}

double Density::pdf1(double x) const {
    switch (kind_) {
        case DensityKind::StandardNormal:
            return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
        case DensityKind::ExponentialMean1:
            return x < 0.0 ? 0.0 : std::exp(-x);
        case DensityKind::StudentT1:
            return 1.0 / (kPi * (1.0 + x * x));
        case DensityKind::Cauchy11: {
            const double z = x - 1.0;
            return 1.0 / (kPi * (1.0 + z * z));
        }
        case DensityKind::Pareto11:
            return x < 1.0 ? 0.0 : 1.0 / (x * x);
    }
    return 0.0;
}

double Density::cdf1(double x) const {
    switch (kind_) {
        case DensityKind::StandardNormal:
            return standard_normal_cdf(x);
        case DensityKind::ExponentialMean1:
            return x < 0.0 ? 0.0 : -std::expm1(-x);
        case DensityKind::StudentT1:
            return 0.5 + std::atan(x) / kPi;
        case DensityKind::Cauchy11:
            return 0.5 + std::atan(x - 1.0) / kPi;
        case DensityKind::Pareto11:
            return x < 1.0 ? 0.0 : 1.0 - 1.0 / x;
    }
    return 0.0;
}

double Density::quantile(double u) const {
    if (!(u > 0.0) || !(u < 1.0)) {
        throw InvalidParameter("quantile needs u in (0, 1)");
    }
    switch (kind_) {
        case DensityKind::StandardNormal:
            return standard_normal_quantile(u);
        case DensityKind::ExponentialMean1:
            return -std::log1p(-u);
        case DensityKind::StudentT1:
            return std::tan(kPi * (u - 0.5));
        case DensityKind::Cauchy11:
            return 1.0 + std::tan(kPi * (u - 0.5));
        case DensityKind::Pareto11:
            return 1.0 / (1.0 - u);
    }
    return 0.0;
}

double Density::pdf(std::span<const double> x) const {
    double prod = 1.0;
    for (double c : x) {
        prod *= pdf1(c);
    }
    return prod;
}

double Density::support_lower() const {
    switch (kind_) {
        case DensityKind::ExponentialMean1: return 0.0;
        case DensityKind::Pareto11: return 1.0;
        default: return -std::numeric_limits<double>::infinity();
    }
}

Density density_for(DensityKind kind) { return Density(kind); }

DensityKind density_kind_from_name(const std::string& name) {
    if (name == "normal") return DensityKind::StandardNormal;
    if (name == "exponential") return DensityKind::ExponentialMean1;
    if (name == "student-t") return DensityKind::StudentT1;
    if (name == "cauchy") return DensityKind::Cauchy11;
    if (name == "pareto") return DensityKind::Pareto11;
    throw InvalidParameter("unknown density '" + name +
                           "' (expected normal, exponential, student-t, cauchy "
                           "or pareto)");
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t derive_stream_seed(const SeedPath& path) {
    std::uint64_t s = splitmix64(path.root ^ fnv1a64(path.experiment));
    s = splitmix64(s ^ path.repetition);
    s = splitmix64(s ^ (path.role == SourceLabel::Empirical ? 0x45ULL : 0x47ULL));
    return s;
}

}  // namespace detail

double SubstreamRng::normal() { return standard_normal_quantile(uniform()); }

PointSet sample(const Density& density, int d, int m, const SeedPath& path) {
    if (d < 1) {
        throw InvalidParameter("dimension must be positive, got " + std::to_string(d));
    }
    if (m < 2) {
        throw TooSmall("a sample needs at least 2 points, got " + std::to_string(m));
    }
    SubstreamRng rng(path);
    std::vector<double> coords(static_cast<std::size_t>(m) *
                               static_cast<std::size_t>(d));
    for (double& c : coords) {
        c = density.quantile(rng.uniform());
    }
    return PointSet(std::move(coords), static_cast<std::size_t>(d), path.role);
}

}  // namespace scenval
