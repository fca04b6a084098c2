#include "laxlab/structure.hpp"

#include <cmath>

namespace laxlab {

namespace {

void check_shared_grid(const CoefficientSet& c, const SecondFormCoeffs& s) {
    const GridSpec& g = c.grid();
    for (const ScalarField* f :
         {&c.u13, &c.u23, &c.v12, &c.v13, &c.v23, &s.h11, &s.h22, &s.h})
        if (!(f->grid() == g)) throw FieldError("coefficient fields do not share one grid");
}

ResidualEntry make_entry(const std::string& label, const ScalarField& r) {
    return ResidualEntry{label, r.max_abs(), r.rms_interior()};
}

}  // namespace

const ResidualEntry& ResidualReport::entry(const std::string& label) const {
    for (const auto& e : entries)
        if (e.label == label) return e;
    throw std::out_of_range("no residual entry labeled " + label);
}

double ResidualReport::worst_max_abs() const {
    double w = 0.0;
    for (const auto& e : entries) w = std::max(w, e.max_abs);
    return w;
}

FormBundle build_forms(const CoefficientSet& c, const SecondFormCoeffs& s) {
    check_shared_grid(c, s);
    FormBundle b;
    b.omega1 = {c.u12, c.v12};
    b.omega2 = {c.u13, c.v13};
    b.omega12 = {c.u23, c.v23};
    b.omega13 = {s.h11 * c.u12 + s.h * c.u13, s.h11 * c.v12 + s.h * c.v13};
    b.omega23 = {s.h * c.u12 + s.h22 * c.u13, s.h * c.v12 + s.h22 * c.v13};
    return b;
}

std::vector<ScalarField> structure_residual_fields(const CoefficientSet& c,
                                                   const SecondFormCoeffs& s,
                                                   DerivStrategy strategy) {
    check_shared_grid(c, s);
    const ScalarField au = s.h11 * c.u12 + s.h * c.u13;
    const ScalarField bu = s.h * c.u12 + s.h22 * c.u13;
    const ScalarField av = s.h11 * c.v12 + s.h * c.v13;
    const ScalarField bv = s.h * c.v12 + s.h22 * c.v13;
    const ScalarField det = s.h11 * s.h22 - s.h * s.h;

    std::vector<ScalarField> r;
    r.push_back(diff_x(c.u12, strategy) - diff_t(c.v12, strategy) + c.u23 * c.v13 -
                c.u13 * c.v23);
    r.push_back(diff_x(c.u13, strategy) - diff_t(c.v13, strategy) + c.u12 * c.v23 -
                c.u23 * c.v12);
    r.push_back(diff_x(c.u23, strategy) - diff_t(c.v23, strategy) +
                det * (c.u13 * c.v12 - c.u12 * c.v13));
    r.push_back(diff_x(au, strategy) - diff_t(av, strategy) + c.u23 * bv - c.v23 * bu);
    r.push_back(diff_x(bu, strategy) - diff_t(bv, strategy) + c.v23 * au - c.u23 * av);
    return r;
}

std::string strategy_tag(const CoefficientSet& c, const SecondFormCoeffs& s,
                         DerivStrategy strategy) {
    if (strategy == DerivStrategy::FiniteDifference) return "finite_difference";
    bool all = true, any = false;
    for (const ScalarField* f :
         {&c.u12, &c.u13, &c.u23, &c.v12, &c.v13, &c.v23, &s.h11, &s.h22, &s.h}) {
        const bool closed = f->has_closed_dx() && f->has_closed_dt();
        all = all && closed;
        any = any || closed;
    }
    if (all) return "closed_form";
    return any ? "mixed" : "finite_difference";
}

ResidualReport residuals_structure(const CoefficientSet& c, const SecondFormCoeffs& s,
                                   DerivStrategy strategy) {
    auto fields = structure_residual_fields(c, s, strategy);
    ResidualReport rep;
    rep.grid = c.grid();
    rep.derivative_strategy = strategy_tag(c, s, strategy);
    const char* labels[] = {"eq1", "eq2", "eq3", "eq4", "eq5"};
    for (std::size_t i = 0; i < fields.size(); ++i)
        rep.entries.push_back(make_entry(labels[i], fields[i]));
    return rep;
}

CurvatureFields curvatures(const SecondFormCoeffs& s) {
    return CurvatureFields{0.5 * (s.h11 + s.h22), s.h11 * s.h22 - s.h * s.h};
}

FundamentalForms fundamental_form_coeffs(const CoefficientSet& c, const SecondFormCoeffs& s) {
    check_shared_grid(c, s);
    const FormBundle b = build_forms(c, s);

    auto square = [](const OneForm& w) {
        return QuadraticFormCoeffs{w.dt_coef * w.dt_coef, w.dt_coef * w.dx_coef,
                                   w.dx_coef * w.dx_coef};
    };
    auto add = [](const QuadraticFormCoeffs& a, const QuadraticFormCoeffs& b2) {
        return QuadraticFormCoeffs{a.dt2 + b2.dt2, a.dtdx + b2.dtdx, a.dx2 + b2.dx2};
    };
    auto product = [](const OneForm& w, const OneForm& z) {
        // symmetric product: cross term is (w_t z_x + w_x z_t)/2, reported
        // via the dtdx slot which carries the coefficient of dt dx + dx dt
        return QuadraticFormCoeffs{
            w.dt_coef * z.dt_coef,
            0.5 * (w.dt_coef * z.dx_coef + w.dx_coef * z.dt_coef),
            w.dx_coef * z.dx_coef};
    };

    FundamentalForms f;
    f.I = add(square(b.omega1), square(b.omega2));
    f.II = add(product(b.omega1, b.omega13), product(b.omega2, b.omega23));
    f.III = add(square(b.omega13), square(b.omega23));
    return f;
}

}  // namespace laxlab
