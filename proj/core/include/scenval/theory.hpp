#pragma once

#include "scenval/quadrature.hpp"
#include "scenval/sampling.hpp"

namespace scenval::theory {

/// Large-m reference value of the memorizing ratio under identical
/// continuous distributions: rho^d / (rho^d + 1). Accurate for any d,
/// including high dimensions where the value underflows toward 0.
double mr_limit(double rho, int d);

/// Closed form of the limiting probability that exactly s generated
/// points land in the shrunken nearest-neighbor ball of an empirical
/// point: rho^(d*s) / (rho^d + 1)^(s+1). The value is independent of the
/// underlying density; q_quadrature provides the independent check of
/// that claim.
double q_closed_form(int s, double rho, int d);

/// Numerically integrates the defining integral of Q(s) for a concrete
/// density over R^d (d = 1 or 2, the oracle's scope), without assuming
/// the algebraic simplification behind q_closed_form. The improper
/// domain is compactified coordinate-wise so heavy-tailed laws integrate
/// to the same absolute tolerance.
/// Throws QuadratureNotConverged when the evaluation budget is exceeded.
double q_quadrature(int s, double rho, int d, const Density& density,
                    const quad::Options& opts = {});

/// The spec of one Q(s) evaluation; bundles the parameters the oracle
/// grid iterates over.
struct QSpec {
    double rho = 0.5;
    int d = 2;
    DensityKind density = DensityKind::StandardNormal;
};

}  // namespace scenval::theory
