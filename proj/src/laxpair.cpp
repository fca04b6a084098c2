#include "laxlab/laxpair.hpp"

#include <cmath>

namespace laxlab {

namespace {

struct CombinedFields {
    ScalarField au, bu, av, bv;  // h-weighted combinations feeding the second block
};

CombinedFields combined(const CoefficientSet& c, const SecondFormCoeffs& s) {
    return CombinedFields{s.h11 * c.u12 + s.h * c.u13, s.h * c.u12 + s.h22 * c.u13,
                          s.h11 * c.v12 + s.h * c.v13, s.h * c.v12 + s.h22 * c.v13};
}

}  // namespace

std::string to_string(Branch b) {
    switch (b) {
        case Branch::CoefficientBranch: return "CoefficientBranch";
        case Branch::CurvatureOneBranch: return "CurvatureOneBranch";
        case Branch::Both: return "Both";
        case Branch::Neither: return "Neither";
    }
    return "Neither";
}

LaxPairAt build_lax_at(const CoefficientSet& c, const SecondFormCoeffs& s, int j, int n) {
    const GridSpec& g = c.grid();
    if (j < 0 || j >= g.nx || n < 0 || n >= g.nt)
        throw std::out_of_range("build_lax_at: node index outside grid");

    const SkewTriple u1{c.u12.at(j, n), c.u13.at(j, n), c.u23.at(j, n)};
    const SkewTriple v1{c.v12.at(j, n), c.v13.at(j, n), c.v23.at(j, n)};
    const double h11 = s.h11.at(j, n), h22 = s.h22.at(j, n), h = s.h.at(j, n);
    const SkewTriple u2{h11 * u1.a12 + h * u1.a13, h * u1.a12 + h22 * u1.a13, u1.a23};
    const SkewTriple v2{h11 * v1.a12 + h * v1.a13, h * v1.a12 + h22 * v1.a13, v1.a23};

    return LaxPairAt{block_diag(skew_from_triple(u1), skew_from_triple(u2)),
                     block_diag(skew_from_triple(v1), skew_from_triple(v2))};
}

std::vector<ScalarField> zero_curvature_residual_fields(const CoefficientSet& c,
                                                        const SecondFormCoeffs& s,
                                                        DerivStrategy strategy) {
    const GridSpec& g = c.grid();
    const CombinedFields cf = combined(c, s);

    const ScalarField u12x = diff_x(c.u12, strategy), v12t = diff_t(c.v12, strategy);
    const ScalarField u13x = diff_x(c.u13, strategy), v13t = diff_t(c.v13, strategy);
    const ScalarField u23x = diff_x(c.u23, strategy), v23t = diff_t(c.v23, strategy);
    const ScalarField aux = diff_x(cf.au, strategy), avt = diff_t(cf.av, strategy);
    const ScalarField bux = diff_x(cf.bu, strategy), bvt = diff_t(cf.bv, strategy);

    const std::size_t total = static_cast<std::size_t>(g.nx) * g.nt;
    std::vector<std::vector<double>> slots(6, std::vector<double>(total));

    for (int n = 0; n < g.nt; ++n)
        for (int j = 0; j < g.nx; ++j) {
            const std::size_t idx = static_cast<std::size_t>(n) * g.nx + j;

            const Mat3 U1 = skew_from_triple({c.u12.at(j, n), c.u13.at(j, n), c.u23.at(j, n)});
            const Mat3 V1 = skew_from_triple({c.v12.at(j, n), c.v13.at(j, n), c.v23.at(j, n)});
            const Mat3 U2 = skew_from_triple({cf.au.at(j, n), cf.bu.at(j, n), c.u23.at(j, n)});
            const Mat3 V2 = skew_from_triple({cf.av.at(j, n), cf.bv.at(j, n), c.v23.at(j, n)});

            const Mat3 comm1 = commutator(U1, V1);
            const Mat3 comm2 = commutator(U2, V2);

            slots[0][idx] = u12x.at(j, n) - v12t.at(j, n) + comm1(0, 1);
            slots[1][idx] = u13x.at(j, n) - v13t.at(j, n) + comm1(0, 2);
            slots[2][idx] = u23x.at(j, n) - v23t.at(j, n) + comm1(1, 2);
            slots[3][idx] = aux.at(j, n) - avt.at(j, n) + comm2(0, 1);
            slots[4][idx] = bux.at(j, n) - bvt.at(j, n) + comm2(0, 2);
            slots[5][idx] = u23x.at(j, n) - v23t.at(j, n) + comm2(1, 2);
        }

    std::vector<ScalarField> out;
    out.reserve(6);
    for (auto& v : slots) out.emplace_back(g, std::move(v));
    return out;
}

ResidualReport zero_curvature_residuals(const CoefficientSet& c, const SecondFormCoeffs& s,
                                        DerivStrategy strategy) {
    auto fields = zero_curvature_residual_fields(c, s, strategy);
    ResidualReport rep;
    rep.grid = c.grid();
    rep.derivative_strategy = strategy_tag(c, s, strategy);
    const char* labels[] = {"block1_12", "block1_13", "block1_23",
                            "block2_12", "block2_13", "block2_23"};
    for (std::size_t i = 0; i < fields.size(); ++i)
        rep.entries.push_back({labels[i], fields[i].max_abs(), fields[i].rms_interior()});
    return rep;
}

ScalarField constraint_field(const CoefficientSet& c, const SecondFormCoeffs& s) {
    return (c.u12 * c.v13 - c.u13 * c.v12) *
           (s.h * s.h - s.h11 * s.h22 + constant_field(c.grid(), 1.0));
}

BranchClass classify_branch(const CoefficientSet& c, const SecondFormCoeffs& s,
                            double threshold) {
    if (!(threshold > 0.0)) throw FieldError("classify_branch: threshold must be > 0");
    BranchClass bc;
    bc.threshold = threshold;
    bc.coefficient_factor_max = (c.u12 * c.v13 - c.u13 * c.v12).max_abs();
    bc.curvature_factor_max =
        (s.h11 * s.h22 - s.h * s.h - constant_field(c.grid(), 1.0)).max_abs();

    const bool coeff = bc.coefficient_factor_max <= threshold;
    const bool curv = bc.curvature_factor_max <= threshold;
    bc.branch = coeff && curv ? Branch::Both
                : coeff       ? Branch::CoefficientBranch
                : curv        ? Branch::CurvatureOneBranch
                              : Branch::Neither;
    return bc;
}

SubstitutionResult apply_coefficient_branch(const CoefficientSet& c, double guard) {
    SubstitutionResult out{c, 0};
    std::vector<double> v13 = c.v13.values();
    for (std::size_t i = 0; i < v13.size(); ++i) {
        const double u12 = c.u12.values()[i];
        if (std::abs(u12) > guard)
            v13[i] = c.u13.values()[i] * c.v12.values()[i] / u12;
        else
            ++out.guarded_nodes;
    }
    out.coeffs.v13 = ScalarField(c.grid(), std::move(v13));
    return out;
}

EquivalenceReport equivalence_report(const CoefficientSet& c, const SecondFormCoeffs& s,
                                     DerivStrategy strategy) {
    const auto structure = structure_residual_fields(c, s, strategy);
    const auto lax = zero_curvature_residual_fields(c, s, strategy);

    // The third structure equation carries the (h11 h22 - h^2) factor, which the
    // commutator produces in the second block's (2,3) slot.
    const std::pair<int, int> pairing[] = {{0, 0}, {1, 1}, {2, 5}, {3, 3}, {4, 4}};
    const char* structure_labels[] = {"eq1", "eq2", "eq3", "eq4", "eq5"};
    const char* lax_labels[] = {"block1_12", "block1_13", "block1_23",
                                "block2_12", "block2_13", "block2_23"};

    EquivalenceReport rep;
    rep.grid = c.grid();
    rep.derivative_strategy = strategy_tag(c, s, strategy);
    for (auto [si, li] : pairing) {
        const ScalarField d = structure[static_cast<std::size_t>(si)] -
                              lax[static_cast<std::size_t>(li)];
        rep.pairs.push_back({structure_labels[si], lax_labels[li], d.max_abs()});
    }
    rep.slot23_difference = (lax[2] - lax[5]).max_abs();
    return rep;
}

}  // namespace laxlab
