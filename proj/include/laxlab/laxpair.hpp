#pragma once

#include <string>
#include <vector>

#include "laxlab/algebra.hpp"
#include "laxlab/fields.hpp"
#include "laxlab/structure.hpp"

namespace laxlab {

/// U, V of the block Lax pair at one grid node.
struct LaxPairAt {
    Mat6 U, V;
};

enum class Branch { CoefficientBranch, CurvatureOneBranch, Both, Neither };

std::string to_string(Branch b);

struct BranchClass {
    Branch branch = Branch::Neither;
    double coefficient_factor_max = 0.0;  // max |u12 v13 - u13 v12|
    double curvature_factor_max = 0.0;    // max |h11 h22 - h^2 - 1|
    double threshold = 0.0;
};

/// U1 = skew(u12,u13,u23), V1 = skew(v12,v13,v23);
/// U2 = skew(h11 u12 + h u13, h u12 + h22 u13, u23), V2 analogous.
LaxPairAt build_lax_at(const CoefficientSet& c, const SecondFormCoeffs& s, int j, int n);

/// Residuals of U_x - V_t + [U, V] in the six independent slots.
/// Labels: block1_12, block1_13, block1_23, block2_12, block2_13, block2_23.
ResidualReport zero_curvature_residuals(const CoefficientSet& c, const SecondFormCoeffs& s,
                                        DerivStrategy strategy = DerivStrategy::Auto);

/// The six residual fields, same label order.
std::vector<ScalarField> zero_curvature_residual_fields(
    const CoefficientSet& c, const SecondFormCoeffs& s,
    DerivStrategy strategy = DerivStrategy::Auto);

/// Pointwise (u12 v13 - u13 v12)(h^2 - h11 h22 + 1).
ScalarField constraint_field(const CoefficientSet& c, const SecondFormCoeffs& s);

BranchClass classify_branch(const CoefficientSet& c, const SecondFormCoeffs& s, double threshold);

struct EquivalencePair {
    std::string structure_label;  // eq1..eq5
    std::string lax_label;        // block slot it must match
    double max_abs_discrepancy = 0.0;
};

struct EquivalenceReport {
    std::vector<EquivalencePair> pairs;
    /// max |block1_23 residual - block2_23 residual|; vanishes when the
    /// matching constraint holds.
    double slot23_difference = 0.0;
    GridSpec grid;
    std::string derivative_strategy;
};

EquivalenceReport equivalence_report(const CoefficientSet& c, const SecondFormCoeffs& s,
                                     DerivStrategy strategy = DerivStrategy::Auto);

struct SubstitutionResult {
    CoefficientSet coeffs;
    int guarded_nodes = 0;  // nodes with |u12| <= guard, left untouched
};

/// Coefficient-branch substitution v13 <- u13 v12 / u12, guarded against
/// small u12; guarded nodes keep their original v13 and are counted.
SubstitutionResult apply_coefficient_branch(const CoefficientSet& c, double guard = 1e-6);

}  // namespace laxlab
