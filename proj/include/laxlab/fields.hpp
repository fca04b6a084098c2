#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxlab {

struct GridSpec {
    double x_min = 0.0, x_max = 1.0;
    double t_min = 0.0, t_max = 1.0;
    int nx = 3, nt = 3;

    void validate() const;

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dt() const { return (t_max - t_min) / (nt - 1); }
    double x(int j) const { return x_min + j * dx(); }
    double t(int n) const { return t_min + n * dt(); }

    bool operator==(const GridSpec& o) const = default;
};

using Field2D = std::function<double(double, double)>;  // (x, t) -> value

/// Grid samples of a scalar function of (x, t), optionally backed by
/// closed-form value/derivative evaluators. Row = t index n, column = x
/// index j; immutable after construction.
class ScalarField {
public:
    ScalarField() = default;

    /// Sample a closed form on the grid; derivative evaluators may be null.
    ScalarField(const GridSpec& grid, Field2D value, Field2D ddx = nullptr, Field2D ddt = nullptr);

    /// Wrap raw samples (no closed form).
    ScalarField(const GridSpec& grid, std::vector<double> values);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    double at(int j, int n) const { return values_[static_cast<std::size_t>(n) * grid_.nx + j]; }

    bool has_closed_form() const { return static_cast<bool>(value_); }
    bool has_closed_dx() const { return static_cast<bool>(ddx_); }
    bool has_closed_dt() const { return static_cast<bool>(ddt_); }
    const Field2D& closed_value() const { return value_; }
    const Field2D& closed_dx() const { return ddx_; }
    const Field2D& closed_dt() const { return ddt_; }

    double max_abs() const;
    /// RMS over interior nodes (boundary rows/columns excluded).
    double rms_interior() const;
    bool all_finite() const;

private:
    GridSpec grid_;
    std::vector<double> values_;
    Field2D value_, ddx_, ddt_;
};

enum class DerivStrategy {
    Auto,              // closed form when available, else finite differences
    FiniteDifference,  // always stencils on the samples
};

/// d/dx: second-order central stencils, second-order one-sided at the
/// x boundaries. Closed-form ddx is used instead when present and permitted.
ScalarField diff_x(const ScalarField& f, DerivStrategy strategy = DerivStrategy::Auto);
ScalarField diff_t(const ScalarField& f, DerivStrategy strategy = DerivStrategy::Auto);

// Pointwise arithmetic; closed forms are propagated when both operands carry them.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& f);
ScalarField constant_field(const GridSpec& grid, double c);

struct CoefficientSet {
    ScalarField u12, u13, u23, v12, v13, v23;
    const GridSpec& grid() const { return u12.grid(); }
};

struct SecondFormCoeffs {
    ScalarField h11, h22, h;  // h = h12 = h21
    const GridSpec& grid() const { return h11.grid(); }
};

/// Named scenario families for sample_family.
struct FamilySpec {
    std::string name;  // zero | constant | sine_gordon_kink | custom_csv
    // constant:
    double u12 = 0, u13 = 0, u23 = 0, v12 = 0, v13 = 0, v23 = 0;
    double h11 = 0, h22 = 0, h = 0;
    // sine_gordon_kink:
    double velocity = 0.0;
    double x0 = 0.0;
    // custom_csv:
    std::string csv_path;
};

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instantiate a coefficient scenario on a grid. The kink family carries
/// closed-form derivatives on every field.
std::pair<CoefficientSet, SecondFormCoeffs> sample_family(const FamilySpec& family,
                                                          const GridSpec& grid);

/// CSV with header j,n,u12,u13,u23,v12,v13,v23,h11,h22,h; one row per node.
std::pair<CoefficientSet, SecondFormCoeffs> load_fields_csv(const std::string& path,
                                                            const GridSpec& grid);
void save_fields_csv(const std::string& path, const CoefficientSet& c, const SecondFormCoeffs& s);

}  // namespace laxlab
