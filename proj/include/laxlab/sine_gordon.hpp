#pragma once

#include <functional>
#include <utility>

#include "laxlab/fields.hpp"

namespace laxlab::sg {

/// Travelling-kink parameters; |v| < 1 keeps the Lorentz factor real.
struct KinkParams {
    double v = 0.0;
    double x0 = 0.0;
};

/// Exact kink phi(x,t) = 4 atan(exp((x - v t - x0)/sqrt(1 - v^2))),
/// a solution of phi_tt - phi_xx = -sin(phi). Throws FieldError if |v| >= 1.
double kink(double x, double t, const KinkParams& p);
double kink_dx(double x, double t, const KinkParams& p);
double kink_dt(double x, double t, const KinkParams& p);
double kink_dxx(double x, double t, const KinkParams& p);
double kink_dxt(double x, double t, const KinkParams& p);
double kink_dtt(double x, double t, const KinkParams& p);

/// phi sampled on a grid with closed-form derivatives attached.
ScalarField kink_field(const GridSpec& grid, const KinkParams& p);

/// Optional closed second derivatives of phi; needed so that u23 = phi_x/2
/// and v23 = phi_t/2 can carry exact first derivatives of their own.
struct SecondDerivs {
    Field2D dxx, dxt, dtt;
};

/// The reduction u12 = cos(phi/2), v13 = sin(phi/2), u13 = v12 = 0,
/// u23 = phi_x/2, v23 = phi_t/2, h11 = h22 = 1, h = 0. Closed-form
/// derivatives are chained through when phi carries them.
std::pair<CoefficientSet, SecondFormCoeffs> coefficients_from_phi(
    const ScalarField& phi, const SecondDerivs* second = nullptr);

/// SecondDerivs of the exact kink.
SecondDerivs kink_second_derivs(const KinkParams& p);

/// Explicit three-level solve of phi_tt - phi_xx = -sin(phi) with Dirichlet
/// boundaries. The second time level comes from a Taylor start using phi_t
/// at t_min.
struct SGState {
    GridSpec grid;
    std::function<double(double)> phi0;      // phi(x, t_min)
    std::function<double(double)> phi_t0;    // phi_t(x, t_min)
    std::function<double(double)> left_bc;   // phi(x_min, t)
    std::function<double(double)> right_bc;  // phi(x_max, t)
    double cfl_bound = 0.5;
};

/// Initial/boundary data drawn from the exact kink.
SGState kink_state(const GridSpec& grid, const KinkParams& p);

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Returns phi over the full grid (nt-1 steps). Throws SolveError on CFL
/// violation or NaN blowup.
ScalarField evolve(const SGState& state);

/// Discrete energy of the pair of consecutive time levels (n, n+1):
/// trapezoid in x of phi_t^2/2 + phi_x^2/2 + (1 - cos phi), with phi_t the
/// two-level difference and phi, phi_x averaged across the levels.
double energy(const ScalarField& phi, int level);

/// Fraction of nodes where |sin(phi/2)| or |cos(phi/2)| < guard; the metric
/// of the reduced surface degenerates there.
double degenerate_fraction(const ScalarField& phi, double guard = 0.05);

}  // namespace laxlab::sg
