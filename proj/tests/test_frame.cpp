#include <cmath>

#include <doctest.h>

#include "laxlab/frame.hpp"
#include "laxlab/structure.hpp"
#include "test_helpers.hpp"

using namespace laxlab;

namespace {

std::pair<CoefficientSet, SecondFormCoeffs> kink_on(const GridSpec& g) {
    return sample_family(FamilySpec{.name = "sine_gordon_kink"}, g);
}

/// Constant connection Omega_t = skew(0, 0, c), Omega_x = 0: with
/// h11 = h22 = 1, h = 0 and only u13 = c nonzero, the (2,3) slot of
/// Omega_t is h22 * u13 = c and everything else vanishes.
std::pair<CoefficientSet, SecondFormCoeffs> constant_connection(const GridSpec& g, double c) {
    FamilySpec f{.name = "constant"};
    f.u13 = c;
    f.h11 = f.h22 = 1.0;
    return sample_family(f, g);
}

}  // namespace

TEST_CASE("propagate_frames: zero scenario keeps the seed everywhere") {
    const GridSpec g = testing::small_grid();
    auto [c, s] = sample_family(FamilySpec{.name = "zero"}, g);
    const Rotation3 seed = rodrigues_exp({0.3, -0.2, 0.9});
    const FrameField ff = propagate_frames(c, s, seed);
    for (const auto& f : ff.frames) CHECK((f - seed).frobenius() == 0.0);
}

TEST_CASE("propagate_frames: constant coefficients match the closed-form exponential") {
    const GridSpec g{0.0, 1.0, 0.0, 2.0, 11, 201};
    const double cval = 0.8;
    auto [c, s] = constant_connection(g, cval);
    const FrameField ff = propagate_frames(c, s, Rotation3::identity());
    for (int n = 0; n < g.nt; ++n) {
        const Rotation3 expected = rodrigues_exp({0.0, 0.0, cval * g.t(n)});
        CHECK((ff.at(0, n) - expected).frobenius() <= 1e-10);
    }
}

TEST_CASE("propagate_frames: orthonormality preserved over many steps") {
    const GridSpec g{-2, 2, 0, 1, 101, 101};  // ~10^4 nodes
    auto [c, s] = kink_on(g);
    const FrameField ff = propagate_frames(c, s, Rotation3::identity());
    CHECK(ff.worst_orthonormality_defect() <= 1e-10);
    for (int n = 0; n < g.nt; n += 25)
        for (int j = 0; j < g.nx; j += 25)
            CHECK(ff.at(j, n).det() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("propagate_frames rejects a bad seed") {
    auto [c, s] = sample_family(FamilySpec{.name = "zero"}, testing::small_grid());
    Mat3 bad = Mat3::identity();
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(propagate_frames(c, s, bad), FrameError);
}

TEST_CASE("frame/connection coupling: dE/dt matches Omega_t E at interior nodes") {
    const GridSpec g{-2, 2, 0, 1, 201, 201};
    auto [c, s] = kink_on(g);
    const FrameField ff = propagate_frames(c, s, Rotation3::identity());

    double worst = 0.0;
    for (int n = 1; n + 1 < g.nt; n += 20)
        for (int j = 1; j + 1 < g.nx; j += 20) {
            const Mat3 dEdt = (ff.at(j, n + 1) - ff.at(j, n - 1)) * (1.0 / (2.0 * g.dt()));
            const double h11 = s.h11.at(j, n), h22 = s.h22.at(j, n), h = s.h.at(j, n);
            const Mat3 omega_t = skew_from_triple(
                {c.u23.at(j, n), h11 * c.u12.at(j, n) + h * c.u13.at(j, n),
                 h * c.u12.at(j, n) + h22 * c.u13.at(j, n)});
            worst = std::max(worst, (dEdt - omega_t * ff.at(j, n)).frobenius());
        }
    CHECK(worst <= 5.0 * (g.dx() * g.dx() + g.dt() * g.dt()) * 100.0);  // O(h^2), loose constant
}

TEST_CASE("path_defect") {
    SUBCASE("zero scenario has no defect") {
        auto [c, s] = sample_family(FamilySpec{.name = "zero"}, testing::small_grid());
        CHECK(path_defect(c, s, Rotation3::identity()) == 0.0);
    }

    SUBCASE("compatible kink fields: second-order decay") {
        auto defect = [](int n) {
            const GridSpec g{-2, 2, 0, 1, n, n};
            auto [c, s] = kink_on(g);
            return path_defect(c, s, Rotation3::identity());
        };
        const double d1 = defect(101), d2 = defect(201);
        CHECK(d1 / d2 > 3.2);
        CHECK(d1 / d2 < 4.8);
    }

    SUBCASE("incompatibility injection raises the defect by 10x and grows with epsilon") {
        const GridSpec g{-2, 2, 0, 1, 101, 101};
        auto [c, s] = kink_on(g);
        const double base = path_defect(c, s, Rotation3::identity());

        double previous = base;
        for (double factor : {1.01, 1.02, 1.04}) {
            CoefficientSet cp = c;
            cp.u23 = factor * c.u23;
            const double d = path_defect(cp, s, Rotation3::identity());
            CHECK(d >= 10.0 * base);
            CHECK(d > previous);
            previous = d;
        }
    }
}

TEST_CASE("reconstruct_surface simple cases") {
    SUBCASE("zero scenario collapses to the origin") {
        const GridSpec g = testing::small_grid();
        auto [c, s] = sample_family(FamilySpec{.name = "zero"}, g);
        const SurfaceMesh mesh = reconstruct_surface(propagate_frames(c, s, Rotation3::identity()), c);
        for (const auto& p : mesh.positions) {
            CHECK(p[0] == 0.0);
            CHECK(p[1] == 0.0);
            CHECK(p[2] == 0.0);
        }
    }

    SUBCASE("u12 = 1 with zero connection draws the line t*e1") {
        const GridSpec g{0, 1, 0, 2, 5, 21};
        FamilySpec f{.name = "constant"};
        f.u12 = 1.0;
        auto [c, s] = sample_family(f, g);
        const SurfaceMesh mesh = reconstruct_surface(propagate_frames(c, s, Rotation3::identity()), c);
        for (int n = 0; n < g.nt; ++n)
            for (int j = 0; j < g.nx; ++j) {
                CHECK(mesh.at(j, n)[0] == doctest::Approx(g.t(n)).epsilon(1e-12));
                CHECK(std::abs(mesh.at(j, n)[1]) <= 1e-12);
                CHECK(std::abs(mesh.at(j, n)[2]) <= 1e-12);
            }
    }
}

TEST_CASE("discrete_forms on analytic meshes") {
    SUBCASE("plane is exactly flat") {
        const GridSpec g{0, 1, 0, 1, 11, 11};
        SurfaceMesh mesh;
        mesh.grid = g;
        mesh.positions.resize(121);
        for (int n = 0; n < 11; ++n)
            for (int j = 0; j < 11; ++j)
                mesh.positions[static_cast<std::size_t>(n) * 11 + j] =
                    Vec3{j * 0.1, n * 0.1, 0.0};
        const DiscreteForms f = discrete_forms(mesh);
        CHECK(f.degenerate_count == 0);
        for (const auto& d : f.nodes) {
            CHECK(d.K == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(d.H == doctest::Approx(0.0).epsilon(1e-12));
        }
    }

    SUBCASE("unit sphere patch has K = 1, |H| = 1 within 1%") {
        const GridSpec g{0.6, 1.2, 0.4, 1.0, 61, 61};  // (t, x) as (theta, phi) angles
        SurfaceMesh mesh;
        mesh.grid = g;
        mesh.positions.resize(static_cast<std::size_t>(61) * 61);
        for (int n = 0; n < g.nt; ++n)
            for (int j = 0; j < g.nx; ++j) {
                const double theta = g.t(n), phi = g.x(j);
                mesh.positions[static_cast<std::size_t>(n) * g.nx + j] =
                    Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                         std::cos(theta)};
            }
        const DiscreteForms f = discrete_forms(mesh);
        CHECK(f.degenerate_count == 0);
        for (const auto& d : f.nodes) {
            CHECK(std::abs(d.K - 1.0) <= 0.01);
            CHECK(std::abs(std::abs(d.H) - 1.0) <= 0.01);
        }
    }

    SUBCASE("degenerate line mesh throws") {
        const GridSpec g{0, 1, 0, 1, 6, 6};
        SurfaceMesh mesh;
        mesh.grid = g;
        mesh.positions.assign(36, Vec3{0, 0, 0});
        CHECK_THROWS_AS(discrete_forms(mesh), FrameError);
    }
}

TEST_CASE("end to end: kink surface has K near 1 and matching first form") {
    const GridSpec g{-2, 2, 0, 1, 401, 101};  // dx = dt = 0.01
    auto [c, s] = kink_on(g);
    const FrameField frames = propagate_frames(c, s, Rotation3::identity());
    const SurfaceMesh mesh = reconstruct_surface(frames, c);
    const DiscreteForms f = discrete_forms(mesh);

    CHECK(f.degenerate_count < static_cast<int>(f.nodes.size()) / 10);
    CHECK(f.max_abs_K_deviation_from(1.0) <= 0.02);

    // discrete E, F, G vs analytic cos^2(phi/2), 0, sin^2(phi/2)
    const FundamentalForms analytic = fundamental_form_coeffs(c, s);
    double worst = 0.0;
    for (const auto& d : f.nodes) {
        worst = std::max(worst, std::abs(d.E - analytic.I.dt2.at(d.j, d.n)));
        worst = std::max(worst, std::abs(d.F - analytic.I.dtdx.at(d.j, d.n)));
        worst = std::max(worst, std::abs(d.G - analytic.I.dx2.at(d.j, d.n)));
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("reconstruction first-form error decays at second order") {
    auto worst_E = [](int nx, int nt) {
        const GridSpec g{-2, 2, 0, 1, nx, nt};
        auto [c, s] = kink_on(g);
        const SurfaceMesh mesh = reconstruct_surface(propagate_frames(c, s, Rotation3::identity()), c);
        const DiscreteForms f = discrete_forms(mesh);
        const FundamentalForms analytic = fundamental_form_coeffs(c, s);
        double worst = 0.0;
        for (const auto& d : f.nodes)
            worst = std::max(worst, std::abs(d.E - analytic.I.dt2.at(d.j, d.n)));
        return worst;
    };
    const double w1 = worst_E(101, 26), w2 = worst_E(201, 51);
    CHECK(w1 / w2 > 3.0);
    CHECK(w1 / w2 < 5.5);
}
