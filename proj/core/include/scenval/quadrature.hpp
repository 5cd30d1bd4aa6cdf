#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace scenval::quad {

struct Options {
    double abs_tol = 1e-8;
    std::size_t max_evaluations = 10'000'000;
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over the finite
/// interval [a, b]. `breakpoints` are interior abscissae used as initial
/// subdivision boundaries (useful for kinks and support edges).
/// Throws QuadratureNotConverged when the evaluation budget runs out
/// above tolerance.
Result integrate_interval(const std::function<double(double)>& f, double a, double b,
                          const Options& opts = {},
                          const std::vector<double>& breakpoints = {});

/// Adaptive integration of f over the rectangle [ax, bx] x [ay, by] with
/// a tensor G7/K15 rule and quad-tree subdivision. Breakpoints split the
/// initial rectangle along each axis.
Result integrate_rectangle(const std::function<double(double, double)>& f,
                           double ax, double bx, double ay, double by,
                           const Options& opts = {},
                           const std::vector<double>& breakpoints_x = {},
                           const std::vector<double>& breakpoints_y = {});

/// Integration of f over the whole real line via the compactifying map
/// x = t / (1 - t^2), t in (-1, 1). `breakpoints` are given on the x axis
/// and mapped internally; use them to mark support boundaries.
Result integrate_real_line(const std::function<double(double)>& f,
                           const Options& opts = {},
                           const std::vector<double>& breakpoints = {});

/// Two-dimensional analogue of integrate_real_line over R^2 with the same
/// per-axis compactification.
Result integrate_real_plane(const std::function<double(double, double)>& f,
                            const Options& opts = {},
                            const std::vector<double>& breakpoints = {});

/// Inverse of the compactifying map: the t in (-1, 1) with t/(1-t^2) = x.
double compactify(double x);

}  // namespace scenval::quad
