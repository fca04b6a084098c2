#pragma once

#include <string>
#include <vector>

#include "laxlab/fields.hpp"

namespace laxlab {

/// One-form as (dt-coefficient, dx-coefficient) fields.
struct OneForm {
    ScalarField dt_coef, dx_coef;
};

/// The five one-forms of the ansatz: omega1, omega2, omega12 carry the raw
/// coefficients; omega13, omega23 are their Cartan's-lemma combinations with
/// the h_ij. omega3 is identically zero and not stored.
struct FormBundle {
    OneForm omega1, omega2, omega12, omega13, omega23;
};

struct ResidualEntry {
    std::string label;
    double max_abs = 0.0;
    double rms_interior = 0.0;
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;
    GridSpec grid;
    std::string derivative_strategy;  // "closed_form" | "finite_difference" | "mixed"

    const ResidualEntry& entry(const std::string& label) const;
    double worst_max_abs() const;
};

struct CurvatureFields {
    ScalarField H, K;
};

/// dt/dx coefficients of a quadratic form a dt^2 + 2b dt dx + c dx^2.
struct QuadraticFormCoeffs {
    ScalarField dt2, dtdx, dx2;
};

struct FundamentalForms {
    QuadraticFormCoeffs I, II, III;
};

FormBundle build_forms(const CoefficientSet& c, const SecondFormCoeffs& s);

/// Residuals of the five structure equations, evaluated in their printed
/// form (derivatives of the combined h-weighted coefficients, not expanded).
/// Labels: eq1..eq5.
ResidualReport residuals_structure(const CoefficientSet& c, const SecondFormCoeffs& s,
                                   DerivStrategy strategy = DerivStrategy::Auto);

/// The residual fields themselves, same order eq1..eq5.
std::vector<ScalarField> structure_residual_fields(const CoefficientSet& c,
                                                   const SecondFormCoeffs& s,
                                                   DerivStrategy strategy = DerivStrategy::Auto);

/// H = (h11 + h22)/2, K = h11 h22 - h^2, pointwise.
CurvatureFields curvatures(const SecondFormCoeffs& s);

FundamentalForms fundamental_form_coeffs(const CoefficientSet& c, const SecondFormCoeffs& s);

/// Strategy tag helper shared with the Lax evaluator.
std::string strategy_tag(const CoefficientSet& c, const SecondFormCoeffs& s,
                         DerivStrategy strategy);

}  // namespace laxlab
