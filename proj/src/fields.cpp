#include "laxlab/fields.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "laxlab/sine_gordon.hpp"

namespace laxlab {

void GridSpec::validate() const {
    if (nx < 3 || nt < 3) throw FieldError("GridSpec: nx and nt must both be >= 3");
    if (!(x_max > x_min)) throw FieldError("GridSpec: x_max must exceed x_min");
    if (!(t_max > t_min)) throw FieldError("GridSpec: t_max must exceed t_min");
}

ScalarField::ScalarField(const GridSpec& grid, Field2D value, Field2D ddx, Field2D ddt)
    : grid_(grid), value_(std::move(value)), ddx_(std::move(ddx)), ddt_(std::move(ddt)) {
    grid_.validate();
    values_.resize(static_cast<std::size_t>(grid_.nx) * grid_.nt);
    for (int n = 0; n < grid_.nt; ++n)
        for (int j = 0; j < grid_.nx; ++j)
            values_[static_cast<std::size_t>(n) * grid_.nx + j] = value_(grid_.x(j), grid_.t(n));
}

ScalarField::ScalarField(const GridSpec& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != static_cast<std::size_t>(grid_.nx) * grid_.nt)
        throw FieldError("ScalarField: sample count does not match grid");
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double ScalarField::rms_interior() const {
    double s = 0.0;
    std::size_t count = 0;
    for (int n = 1; n + 1 < grid_.nt; ++n)
        for (int j = 1; j + 1 < grid_.nx; ++j) {
            const double v = at(j, n);
            s += v * v;
            ++count;
        }
    return count ? std::sqrt(s / count) : 0.0;
}

bool ScalarField::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {

// d/dq along one axis: central interior, 3-point one-sided at ends.
// stride walks the axis, count is its length, h its spacing.
void stencil_axis(const std::vector<double>& in, std::vector<double>& out, std::size_t base,
                  std::size_t stride, int count, double h) {
    auto v = [&](int i) { return in[base + static_cast<std::size_t>(i) * stride]; };
    auto o = [&](int i) -> double& { return out[base + static_cast<std::size_t>(i) * stride]; };
    o(0) = (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h);
    for (int i = 1; i + 1 < count; ++i) o(i) = (v(i + 1) - v(i - 1)) / (2.0 * h);
    o(count - 1) = (3.0 * v(count - 1) - 4.0 * v(count - 2) + v(count - 3)) / (2.0 * h);
}

}  // namespace

ScalarField diff_x(const ScalarField& f, DerivStrategy strategy) {
    const GridSpec& g = f.grid();
    if (strategy == DerivStrategy::Auto && f.has_closed_dx())
        return ScalarField(g, f.closed_dx());
    std::vector<double> out(f.values().size());
    for (int n = 0; n < g.nt; ++n)
        stencil_axis(f.values(), out, static_cast<std::size_t>(n) * g.nx, 1, g.nx, g.dx());
    return ScalarField(g, std::move(out));
}

ScalarField diff_t(const ScalarField& f, DerivStrategy strategy) {
    const GridSpec& g = f.grid();
    if (strategy == DerivStrategy::Auto && f.has_closed_dt())
        return ScalarField(g, f.closed_dt());
    std::vector<double> out(f.values().size());
    for (int j = 0; j < g.nx; ++j)
        stencil_axis(f.values(), out, static_cast<std::size_t>(j), static_cast<std::size_t>(g.nx),
                     g.nt, g.dt());
    return ScalarField(g, std::move(out));
}

namespace {

void check_same_grid(const ScalarField& a, const ScalarField& b) {
    if (!(a.grid() == b.grid())) throw FieldError("field arithmetic: grid mismatch");
}

template <class Op>
ScalarField pointwise(const ScalarField& a, const ScalarField& b, Op op, Field2D value, Field2D ddx,
                      Field2D ddt) {
    check_same_grid(a, b);
    std::vector<double> out(a.values().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.values()[i], b.values()[i]);
    if (value) {
        ScalarField r(a.grid(), std::move(value), std::move(ddx), std::move(ddt));
        // keep the pointwise samples authoritative; they agree with the
        // closed form to roundoff by construction
        return r;
    }
    return ScalarField(a.grid(), std::move(out));
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    Field2D v, dx, dt;
    if (a.has_closed_form() && b.has_closed_form()) {
        auto av = a.closed_value(), bv = b.closed_value();
        v = [av, bv](double x, double t) { return av(x, t) + bv(x, t); };
        if (a.has_closed_dx() && b.has_closed_dx()) {
            auto ax = a.closed_dx(), bx = b.closed_dx();
            dx = [ax, bx](double x, double t) { return ax(x, t) + bx(x, t); };
        }
        if (a.has_closed_dt() && b.has_closed_dt()) {
            auto at_ = a.closed_dt(), bt = b.closed_dt();
            dt = [at_, bt](double x, double t) { return at_(x, t) + bt(x, t); };
        }
    }
    return pointwise(a, b, [](double p, double q) { return p + q; }, v, dx, dt);
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    Field2D v, dx, dt;
    if (a.has_closed_form() && b.has_closed_form()) {
        auto av = a.closed_value(), bv = b.closed_value();
        v = [av, bv](double x, double t) { return av(x, t) - bv(x, t); };
        if (a.has_closed_dx() && b.has_closed_dx()) {
            auto ax = a.closed_dx(), bx = b.closed_dx();
            dx = [ax, bx](double x, double t) { return ax(x, t) - bx(x, t); };
        }
        if (a.has_closed_dt() && b.has_closed_dt()) {
            auto at_ = a.closed_dt(), bt = b.closed_dt();
            dt = [at_, bt](double x, double t) { return at_(x, t) - bt(x, t); };
        }
    }
    return pointwise(a, b, [](double p, double q) { return p - q; }, v, dx, dt);
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    Field2D v, dx, dt;
    if (a.has_closed_form() && b.has_closed_form()) {
        auto av = a.closed_value(), bv = b.closed_value();
        v = [av, bv](double x, double t) { return av(x, t) * bv(x, t); };
        if (a.has_closed_dx() && b.has_closed_dx()) {
            auto ax = a.closed_dx(), bx = b.closed_dx();
            dx = [av, bv, ax, bx](double x, double t) {
                return ax(x, t) * bv(x, t) + av(x, t) * bx(x, t);
            };
        }
        if (a.has_closed_dt() && b.has_closed_dt()) {
            auto at_ = a.closed_dt(), bt = b.closed_dt();
            dt = [av, bv, at_, bt](double x, double t) {
                return at_(x, t) * bv(x, t) + av(x, t) * bt(x, t);
            };
        }
    }
    return pointwise(a, b, [](double p, double q) { return p * q; }, v, dx, dt);
}

ScalarField operator*(double s, const ScalarField& f) {
    if (f.has_closed_form()) {
        auto v = f.closed_value();
        Field2D dx, dt;
        if (f.has_closed_dx()) {
            auto fx = f.closed_dx();
            dx = [s, fx](double x, double t) { return s * fx(x, t); };
        }
        if (f.has_closed_dt()) {
            auto ft = f.closed_dt();
            dt = [s, ft](double x, double t) { return s * ft(x, t); };
        }
        return ScalarField(f.grid(), [s, v](double x, double t) { return s * v(x, t); },
                           std::move(dx), std::move(dt));
    }
    std::vector<double> out(f.values().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * f.values()[i];
    return ScalarField(f.grid(), std::move(out));
}

ScalarField constant_field(const GridSpec& grid, double c) {
    auto zero = [](double, double) { return 0.0; };
    return ScalarField(grid, [c](double, double) { return c; }, zero, zero);
}

std::pair<CoefficientSet, SecondFormCoeffs> sample_family(const FamilySpec& family,
                                                          const GridSpec& grid) {
    grid.validate();
    if (family.name == "zero") {
        CoefficientSet c{constant_field(grid, 0), constant_field(grid, 0), constant_field(grid, 0),
                         constant_field(grid, 0), constant_field(grid, 0), constant_field(grid, 0)};
        SecondFormCoeffs s{constant_field(grid, 0), constant_field(grid, 0),
                           constant_field(grid, 0)};
        return {std::move(c), std::move(s)};
    }
    if (family.name == "constant") {
        CoefficientSet c{constant_field(grid, family.u12), constant_field(grid, family.u13),
                         constant_field(grid, family.u23), constant_field(grid, family.v12),
                         constant_field(grid, family.v13), constant_field(grid, family.v23)};
        SecondFormCoeffs s{constant_field(grid, family.h11), constant_field(grid, family.h22),
                           constant_field(grid, family.h)};
        return {std::move(c), std::move(s)};
    }
    if (family.name == "sine_gordon_kink") {
        sg::KinkParams p{family.velocity, family.x0};
        const sg::SecondDerivs sd = sg::kink_second_derivs(p);
        return sg::coefficients_from_phi(sg::kink_field(grid, p), &sd);
    }
    if (family.name == "custom_csv") return load_fields_csv(family.csv_path, grid);
    throw FieldError("unknown coefficient family: " + family.name);
}

std::pair<CoefficientSet, SecondFormCoeffs> load_fields_csv(const std::string& path,
                                                            const GridSpec& grid) {
    std::ifstream in(path);
    if (!in) throw FieldError("cannot open CSV: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("j,n,", 0) != 0)
        throw FieldError("CSV missing expected header j,n,u12,...: " + path);

    const std::size_t total = static_cast<std::size_t>(grid.nx) * grid.nt;
    std::array<std::vector<double>, 9> cols;
    for (auto& c : cols) c.assign(total, std::nan(""));

    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        std::array<double, 11> vals{};
        for (int k = 0; k < 11; ++k) {
            if (!std::getline(ss, tok, ',')) throw FieldError("CSV row with too few columns");
            vals[static_cast<std::size_t>(k)] = std::stod(tok);
        }
        const int j = static_cast<int>(vals[0]);
        const int n = static_cast<int>(vals[1]);
        if (j < 0 || j >= grid.nx || n < 0 || n >= grid.nt)
            throw FieldError("CSV node index out of grid range");
        for (int k = 0; k < 9; ++k)
            cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(n) * grid.nx + j] =
                vals[static_cast<std::size_t>(k + 2)];
        ++rows;
    }
    if (rows != total) throw FieldError("CSV row count does not match grid shape");
    for (const auto& c : cols)
        for (double v : c)
            if (!std::isfinite(v)) throw FieldError("CSV leaves grid nodes unset or non-finite");

    CoefficientSet c{ScalarField(grid, std::move(cols[0])), ScalarField(grid, std::move(cols[1])),
                     ScalarField(grid, std::move(cols[2])), ScalarField(grid, std::move(cols[3])),
                     ScalarField(grid, std::move(cols[4])), ScalarField(grid, std::move(cols[5]))};
    SecondFormCoeffs s{ScalarField(grid, std::move(cols[6])), ScalarField(grid, std::move(cols[7])),
                       ScalarField(grid, std::move(cols[8]))};
    return {std::move(c), std::move(s)};
}

void save_fields_csv(const std::string& path, const CoefficientSet& c, const SecondFormCoeffs& s) {
    std::ofstream out(path);
    if (!out) throw FieldError("cannot write CSV: " + path);
    out.precision(17);
    out << "j,n,u12,u13,u23,v12,v13,v23,h11,h22,h\n";
    const GridSpec& g = c.grid();
    for (int n = 0; n < g.nt; ++n)
        for (int j = 0; j < g.nx; ++j)
            out << j << ',' << n << ',' << c.u12.at(j, n) << ',' << c.u13.at(j, n) << ','
                << c.u23.at(j, n) << ',' << c.v12.at(j, n) << ',' << c.v13.at(j, n) << ','
                << c.v23.at(j, n) << ',' << s.h11.at(j, n) << ',' << s.h22.at(j, n) << ','
                << s.h.at(j, n) << '\n';
}

}  // namespace laxlab
