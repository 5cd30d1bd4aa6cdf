#include <doctest.h>

#include <cmath>
#include <numbers>

#include "scenval/quadrature.hpp"
#include "scenval/sampling.hpp"
#include "scenval/stats.hpp"
#include "support.hpp"

using namespace scenval;
using namespace scenval::testsupport;

namespace {

const DensityKind kAllKinds[] = {
    DensityKind::StandardNormal, DensityKind::ExponentialMean1,
    DensityKind::StudentT1, DensityKind::Cauchy11, DensityKind::Pareto11,
};

std::vector<double> draw_uniforms(const SeedPath& path, std::size_t n) {
    SubstreamRng rng(path);
    std::vector<double> out(n);
    for (double& u : out) {
        u = rng.uniform();
    }
    return out;
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("pdf reference values") {
    CHECK(density_for(DensityKind::StandardNormal).pdf(std::vector<double>{0.0, 0.0}) ==
          doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
    CHECK(density_for(DensityKind::Pareto11).pdf1(0.5) == 0.0);
    CHECK(density_for(DensityKind::Pareto11).pdf1(1.0) == 1.0);
    CHECK(density_for(DensityKind::Pareto11).pdf1(2.0) == 0.25);
    CHECK(density_for(DensityKind::ExponentialMean1).pdf1(0.0) == 1.0);
    CHECK(density_for(DensityKind::ExponentialMean1).pdf1(-0.1) == 0.0);
    // the t law with one degree of freedom is the cauchy law shifted to 0
    for (double x : {-2.0, 0.0, 0.5, 3.0}) {
        CHECK(density_for(DensityKind::StudentT1).pdf1(x) ==
              density_for(DensityKind::Cauchy11).pdf1(x + 1.0));
    }
}

TEST_CASE("every pdf integrates to one") {
    for (DensityKind kind : kAllKinds) {
        const Density density = density_for(kind);
        std::vector<double> breaks;
        if (std::isfinite(density.support_lower())) {
            breaks.push_back(density.support_lower());
        }
        const auto result = quad::integrate_real_line(
            [&](double x) { return density.pdf1(x); }, {}, breaks);
        CHECK(result.value == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("quantile and cdf are inverse to each other") {
    for (DensityKind kind : kAllKinds) {
        const Density density = density_for(kind);
        for (double u : {1e-6, 0.01, 0.25, 0.5, 0.75, 0.99, 1.0 - 1e-6}) {
            const double x = density.quantile(u);
            CHECK(density.cdf1(x) == doctest::Approx(u).epsilon(1e-9));
        }
    }
    // deep normal tails stay accurate in relative terms
    for (double u : {1e-12, 1e-9, 1.0 - 1e-9}) {
        const double x = standard_normal_quantile(u);
        const double back = standard_normal_cdf(x);
        CHECK(back == doctest::Approx(u).epsilon(1e-6));
    }
}

TEST_CASE("support constraints hold for every draw") {
    const auto exp_set =
        sample(density_for(DensityKind::ExponentialMean1), 1, 5000,
               SeedPath{1, "support", 0, SourceLabel::Empirical});
    for (double c : exp_set.coords()) {
        CHECK(c > 0.0);
    }
    const auto pareto_set =
        sample(density_for(DensityKind::Pareto11), 1, 5000,
               SeedPath{1, "support", 1, SourceLabel::Empirical});
    for (double c : pareto_set.coords()) {
        CHECK(c >= 1.0);
    }
}

TEST_CASE("sampling is deterministic per seed path") {
    const SeedPath path{42, "determinism", 3, SourceLabel::Generated};
    const auto a = sample(density_for(DensityKind::StandardNormal), 2, 100, path);
    const auto b = sample(density_for(DensityKind::StandardNormal), 2, 100, path);
    REQUIRE(a.coords().size() == b.coords().size());
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        CHECK(a.coords()[i] == b.coords()[i]);
    }
    CHECK(a.label() == SourceLabel::Generated);

    // any change of the path changes the stream
    const auto c = sample(density_for(DensityKind::StandardNormal), 2, 100,
                          SeedPath{42, "determinism", 4, SourceLabel::Generated});
    const auto d = sample(density_for(DensityKind::StandardNormal), 2, 100,
                          SeedPath{42, "determinism", 3, SourceLabel::Empirical});
    CHECK(a.coords()[0] != c.coords()[0]);
    CHECK(a.coords()[0] != d.coords()[0]);
}

TEST_CASE("substreams for the two roles look independent") {
    const std::size_t n = 10'000;
    const auto u_emp =
        draw_uniforms(SeedPath{7, "corr", 0, SourceLabel::Empirical}, n);
    const auto u_gen =
        draw_uniforms(SeedPath{7, "corr", 0, SourceLabel::Generated}, n);
    CHECK(std::abs(stats::pearson(u_emp, u_gen)) < 0.05);

    const auto u_rep1 =
        draw_uniforms(SeedPath{7, "corr", 1, SourceLabel::Empirical}, n);
    CHECK(std::abs(stats::pearson(u_emp, u_rep1)) < 0.05);
}

TEST_CASE("sample mean of the normal law obeys the CLT bound") {
    const int m = 500;
    const auto points = sample(density_for(DensityKind::StandardNormal), 2, m,
                               SeedPath{11, "clt", 0, SourceLabel::Empirical});
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        mean_x += points.point(i)[0];
        mean_y += points.point(i)[1];
    }
    mean_x /= m;
    mean_y /= m;
    const double bound = 4.0 / std::sqrt(static_cast<double>(m));
    CHECK(std::abs(mean_x) < bound);
    CHECK(std::abs(mean_y) < bound);
}

TEST_CASE("marginals pass a Kolmogorov-Smirnov check") {
    // 1% critical value for n = 10^4
    const std::size_t n = 10'000;
    const double critical = 1.6276 / std::sqrt(static_cast<double>(n));
    std::uint64_t root = 100;
    for (DensityKind kind : kAllKinds) {
        const Density density = density_for(kind);
        const auto points = sample(density, 1, static_cast<int>(n),
                                   SeedPath{root++, "ks", 0, SourceLabel::Empirical});
        std::vector<double> values(points.coords().begin(), points.coords().end());
        const double d =
            ks_distance(values, [&](double x) { return density.cdf1(x); });
        INFO("density ", density.name(), " ks distance ", d);
        CHECK(d < critical);
    }
}

TEST_CASE("density names round-trip") {
    for (DensityKind kind : kAllKinds) {
        CHECK(density_kind_from_name(density_for(kind).name()) == kind);
    }
    CHECK_THROWS_AS(density_kind_from_name("uniform"), InvalidParameter);
}

TEST_CASE("sample validates its parameters") {
    const Density normal = density_for(DensityKind::StandardNormal);
    const SeedPath path{};
    CHECK_THROWS_AS(sample(normal, 0, 10, path), InvalidParameter);
    CHECK_THROWS_AS(sample(normal, 2, 1, path), TooSmall);
    CHECK_THROWS_AS(normal.quantile(0.0), InvalidParameter);
    CHECK_THROWS_AS(normal.quantile(1.0), InvalidParameter);
}

}  // TEST_SUITE
