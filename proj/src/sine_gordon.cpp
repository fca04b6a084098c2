#include "laxlab/sine_gordon.hpp"

#include <cmath>

namespace laxlab::sg {

namespace {

double lorentz_width(const KinkParams& p) {
    if (std::abs(p.v) >= 1.0) throw FieldError("kink: |v| must be < 1");
    return std::sqrt(1.0 - p.v * p.v);
}

double xi(double x, double t, const KinkParams& p) {
    return (x - p.v * t - p.x0) / lorentz_width(p);
}

double sech(double z) { return 1.0 / std::cosh(z); }

}  // namespace

double kink(double x, double t, const KinkParams& p) {
    return 4.0 * std::atan(std::exp(xi(x, t, p)));
}

double kink_dx(double x, double t, const KinkParams& p) {
    return 2.0 * sech(xi(x, t, p)) / lorentz_width(p);
}

double kink_dt(double x, double t, const KinkParams& p) {
    return -2.0 * p.v * sech(xi(x, t, p)) / lorentz_width(p);
}

double kink_dxx(double x, double t, const KinkParams& p) {
    const double z = xi(x, t, p);
    const double w = lorentz_width(p);
    return -2.0 * sech(z) * std::tanh(z) / (w * w);
}

double kink_dxt(double x, double t, const KinkParams& p) {
    const double z = xi(x, t, p);
    const double w = lorentz_width(p);
    return 2.0 * p.v * sech(z) * std::tanh(z) / (w * w);
}

double kink_dtt(double x, double t, const KinkParams& p) {
    const double z = xi(x, t, p);
    const double w = lorentz_width(p);
    return -2.0 * p.v * p.v * sech(z) * std::tanh(z) / (w * w);
}

ScalarField kink_field(const GridSpec& grid, const KinkParams& p) {
    lorentz_width(p);  // reject |v| >= 1 up front
    return ScalarField(
        grid, [p](double x, double t) { return kink(x, t, p); },
        [p](double x, double t) { return kink_dx(x, t, p); },
        [p](double x, double t) { return kink_dt(x, t, p); });
}

SecondDerivs kink_second_derivs(const KinkParams& p) {
    return SecondDerivs{
        [p](double x, double t) { return kink_dxx(x, t, p); },
        [p](double x, double t) { return kink_dxt(x, t, p); },
        [p](double x, double t) { return kink_dtt(x, t, p); }};
}

std::pair<CoefficientSet, SecondFormCoeffs> coefficients_from_phi(const ScalarField& phi,
                                                                  const SecondDerivs* second) {
    const GridSpec& g = phi.grid();

    auto sampled = [&](auto point) {
        std::vector<double> out(phi.values().size());
        for (int n = 0; n < g.nt; ++n)
            for (int j = 0; j < g.nx; ++j)
                out[static_cast<std::size_t>(n) * g.nx + j] = point(j, n);
        return out;
    };

    CoefficientSet c;
    if (phi.has_closed_form() && phi.has_closed_dx() && phi.has_closed_dt()) {
        auto f = phi.closed_value();
        auto fx = phi.closed_dx();
        auto ft = phi.closed_dt();
        c.u12 = ScalarField(
            g, [f](double x, double t) { return std::cos(f(x, t) / 2.0); },
            [f, fx](double x, double t) { return -std::sin(f(x, t) / 2.0) * fx(x, t) / 2.0; },
            [f, ft](double x, double t) { return -std::sin(f(x, t) / 2.0) * ft(x, t) / 2.0; });
        c.v13 = ScalarField(
            g, [f](double x, double t) { return std::sin(f(x, t) / 2.0); },
            [f, fx](double x, double t) { return std::cos(f(x, t) / 2.0) * fx(x, t) / 2.0; },
            [f, ft](double x, double t) { return std::cos(f(x, t) / 2.0) * ft(x, t) / 2.0; });
        Field2D u23x, u23t, v23x, v23t;
        if (second) {
            auto dxx = second->dxx, dxt = second->dxt, dtt = second->dtt;
            u23x = [dxx](double x, double t) { return dxx(x, t) / 2.0; };
            u23t = [dxt](double x, double t) { return dxt(x, t) / 2.0; };
            v23x = u23t;
            v23t = [dtt](double x, double t) { return dtt(x, t) / 2.0; };
        }
        c.u23 = ScalarField(g, [fx](double x, double t) { return fx(x, t) / 2.0; }, u23x, u23t);
        c.v23 = ScalarField(g, [ft](double x, double t) { return ft(x, t) / 2.0; }, v23x, v23t);
    } else {
        ScalarField half = 0.5 * phi;
        c.u12 = ScalarField(g, sampled([&](int j, int n) { return std::cos(half.at(j, n)); }));
        c.v13 = ScalarField(g, sampled([&](int j, int n) { return std::sin(half.at(j, n)); }));
        c.u23 = 0.5 * diff_x(phi);
        c.v23 = 0.5 * diff_t(phi);
    }
    c.u13 = constant_field(g, 0.0);
    c.v12 = constant_field(g, 0.0);

    SecondFormCoeffs s{constant_field(g, 1.0), constant_field(g, 1.0), constant_field(g, 0.0)};
    return {std::move(c), std::move(s)};
}

SGState kink_state(const GridSpec& grid, const KinkParams& p) {
    lorentz_width(p);
    SGState st;
    st.grid = grid;
    st.phi0 = [grid, p](double x) { return kink(x, grid.t_min, p); };
    st.phi_t0 = [grid, p](double x) { return kink_dt(x, grid.t_min, p); };
    st.left_bc = [grid, p](double t) { return kink(grid.x_min, t, p); };
    st.right_bc = [grid, p](double t) { return kink(grid.x_max, t, p); };
    return st;
}

ScalarField evolve(const SGState& state) {
    const GridSpec& g = state.grid;
    g.validate();
    const double dx = g.dx(), dt = g.dt();
    if (dt / dx > state.cfl_bound + 1e-14)
        throw SolveError("CFL violation: dt/dx = " + std::to_string(dt / dx) +
                         " exceeds bound " + std::to_string(state.cfl_bound));

    const double r2 = (dt / dx) * (dt / dx);
    std::vector<double> phi(static_cast<std::size_t>(g.nx) * g.nt);
    auto at = [&](int j, int n) -> double& { return phi[static_cast<std::size_t>(n) * g.nx + j]; };

    for (int j = 0; j < g.nx; ++j) at(j, 0) = state.phi0(g.x(j));

    // Taylor start: phi^1 = phi^0 + dt phi_t + dt^2/2 (phi_xx - sin phi)
    at(0, 1) = state.left_bc(g.t(1));
    at(g.nx - 1, 1) = state.right_bc(g.t(1));
    for (int j = 1; j + 1 < g.nx; ++j) {
        const double lap = (at(j + 1, 0) - 2.0 * at(j, 0) + at(j - 1, 0)) / (dx * dx);
        at(j, 1) = at(j, 0) + dt * state.phi_t0(g.x(j)) +
                   0.5 * dt * dt * (lap - std::sin(at(j, 0)));
    }

    for (int n = 1; n + 1 < g.nt; ++n) {
        at(0, n + 1) = state.left_bc(g.t(n + 1));
        at(g.nx - 1, n + 1) = state.right_bc(g.t(n + 1));
        for (int j = 1; j + 1 < g.nx; ++j) {
            at(j, n + 1) = 2.0 * at(j, n) - at(j, n - 1) +
                           r2 * (at(j + 1, n) - 2.0 * at(j, n) + at(j - 1, n)) -
                           dt * dt * std::sin(at(j, n));
        }
        for (int j = 0; j < g.nx; ++j)
            if (!std::isfinite(at(j, n + 1)))
                throw SolveError("NaN/Inf at time level " + std::to_string(n + 1) +
                                 ", x index " + std::to_string(j));
    }
    return ScalarField(g, std::move(phi));
}

double energy(const ScalarField& phi, int level) {
    const GridSpec& g = phi.grid();
    if (level < 0 || level + 1 >= g.nt) throw SolveError("energy: need two consecutive levels");
    const double dx = g.dx(), dt = g.dt();

    std::vector<double> density(static_cast<std::size_t>(g.nx));
    for (int j = 0; j < g.nx; ++j) {
        const double pt = (phi.at(j, level + 1) - phi.at(j, level)) / dt;
        const double pm = 0.5 * (phi.at(j, level) + phi.at(j, level + 1));
        double px;
        auto avg = [&](int jj) { return 0.5 * (phi.at(jj, level) + phi.at(jj, level + 1)); };
        if (j == 0)
            px = (-3.0 * avg(0) + 4.0 * avg(1) - avg(2)) / (2.0 * dx);
        else if (j == g.nx - 1)
            px = (3.0 * avg(j) - 4.0 * avg(j - 1) + avg(j - 2)) / (2.0 * dx);
        else
            px = (avg(j + 1) - avg(j - 1)) / (2.0 * dx);
        density[static_cast<std::size_t>(j)] = 0.5 * pt * pt + 0.5 * px * px + (1.0 - std::cos(pm));
    }

    double e = 0.0;
    for (int j = 0; j + 1 < g.nx; ++j)
        e += 0.5 * dx * (density[static_cast<std::size_t>(j)] + density[static_cast<std::size_t>(j) + 1]);
    return e;
}

double degenerate_fraction(const ScalarField& phi, double guard) {
    std::size_t bad = 0;
    for (double v : phi.values()) {
        if (std::abs(std::sin(v / 2.0)) < guard || std::abs(std::cos(v / 2.0)) < guard) ++bad;
    }
    return static_cast<double>(bad) / static_cast<double>(phi.values().size());
}

}  // namespace laxlab::sg
