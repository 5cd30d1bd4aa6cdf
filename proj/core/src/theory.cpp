#include "scenval/theory.hpp"

#include <cmath>

#include "scenval/errors.hpp"

namespace scenval::theory {

namespace {

void check_params(double rho, int d) {
    detail::check_rho(rho);
    if (d < 1) {
        throw InvalidParameter("dimension must be positive, got " + std::to_string(d));
    }
}

// rho^d without pow's corner cases for large integer d.
double rho_pow_d(double rho, int d) {
    return std::pow(rho, static_cast<double>(d));
}

// The integrand of the defining integral, evaluated from the density
// value without algebraic simplification. A log-space fallback covers
// deep tails where f^(s+2) underflows.
double q_integrand(double f, int s, double rho_neg_d) {
    if (f <= 0.0) {
        return 0.0;
    }
    const double num = rho_neg_d * std::pow(f, static_cast<double>(s) + 2.0);
    const double den = std::pow(f + rho_neg_d * f, static_cast<double>(s) + 1.0);
    if (num > 0.0 && den > 0.0 && std::isfinite(num) && std::isfinite(den)) {
        return num / den;
    }
    const double log_num =
        std::log(rho_neg_d) + (static_cast<double>(s) + 2.0) * std::log(f);
    const double log_den =
        (static_cast<double>(s) + 1.0) * std::log(f + rho_neg_d * f);
    return std::exp(log_num - log_den);
}

}  // namespace

double mr_limit(double rho, int d) {
    check_params(rho, d);
    const double x = rho_pow_d(rho, d);
    return x / (x + 1.0);
}

double q_closed_form(int s, double rho, int d) {
    check_params(rho, d);
    if (s < 0) {
        throw InvalidParameter("s must be nonnegative, got " + std::to_string(s));
    }
    const double x = rho_pow_d(rho, d);
    double num = 1.0;
    for (int i = 0; i < s; ++i) {
        num *= x;
    }
    double den = 1.0;
    for (int i = 0; i <= s; ++i) {
        den *= x + 1.0;
    }
    return num / den;
}

double q_quadrature(int s, double rho, int d, const Density& density,
                    const quad::Options& opts) {
    check_params(rho, d);
    if (s < 0) {
        throw InvalidParameter("s must be nonnegative, got " + std::to_string(s));
    }
    if (d != 1 && d != 2) {
        throw InvalidParameter(
            "the quadrature oracle only covers d = 1 and d = 2, got " +
            std::to_string(d));
    }

    const double rho_neg_d = std::pow(rho, -static_cast<double>(d));
    std::vector<double> breakpoints;
    const double lower = density.support_lower();
    if (std::isfinite(lower)) {
        breakpoints.push_back(lower);
    }

    if (d == 1) {
        auto f = [&](double x) { return q_integrand(density.pdf1(x), s, rho_neg_d); };
        return quad::integrate_real_line(f, opts, breakpoints).value;
    }
    auto f = [&](double x, double y) {
        return q_integrand(density.pdf1(x) * density.pdf1(y), s, rho_neg_d);
    };
    return quad::integrate_real_plane(f, opts, breakpoints).value;
}

}  // namespace scenval::theory
