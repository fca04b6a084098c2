#include "laxlab/frame.hpp"

#include <cmath>
#include <fstream>

namespace laxlab {

namespace {

SkewTriple omega_t_at(const CoefficientSet& c, const SecondFormCoeffs& s, int j, int n) {
    const double h11 = s.h11.at(j, n), h22 = s.h22.at(j, n), h = s.h.at(j, n);
    return SkewTriple{c.u23.at(j, n), h11 * c.u12.at(j, n) + h * c.u13.at(j, n),
                      h * c.u12.at(j, n) + h22 * c.u13.at(j, n)};
}

SkewTriple omega_x_at(const CoefficientSet& c, const SecondFormCoeffs& s, int j, int n) {
    const double h11 = s.h11.at(j, n), h22 = s.h22.at(j, n), h = s.h.at(j, n);
    return SkewTriple{c.v23.at(j, n), h11 * c.v12.at(j, n) + h * c.v13.at(j, n),
                      h * c.v12.at(j, n) + h22 * c.v13.at(j, n)};
}

Rotation3 step(const Rotation3& frame, const SkewTriple& a, const SkewTriple& b, double delta) {
    // midpoint coefficients: average of the two endpoint nodes
    const SkewTriple mid{0.5 * delta * (a.a12 + b.a12), 0.5 * delta * (a.a13 + b.a13),
                         0.5 * delta * (a.a23 + b.a23)};
    return rodrigues_exp(mid) * frame;
}

void check_seed(const Rotation3& seed) {
    if (orthonormality_defect(seed) > 1e-8 || seed.det() < 0.0)
        throw FrameError("seed frame is not a proper rotation");
}

Vec3 add_scaled(const Vec3& p, const Vec3& d, double s) {
    return Vec3{p[0] + s * d[0], p[1] + s * d[1], p[2] + s * d[2]};
}

Vec3 tangent_combo(const Rotation3& frame, double c1, double c2) {
    // c1*e1 + c2*e2, rows of the frame
    return Vec3{c1 * frame(0, 0) + c2 * frame(1, 0), c1 * frame(0, 1) + c2 * frame(1, 1),
                c1 * frame(0, 2) + c2 * frame(1, 2)};
}

}  // namespace

double FrameField::worst_orthonormality_defect() const {
    double w = 0.0;
    for (const auto& f : frames) w = std::max(w, orthonormality_defect(f));
    return w;
}

FrameField propagate_frames(const CoefficientSet& c, const SecondFormCoeffs& s,
                            const Rotation3& seed) {
    check_seed(seed);
    const GridSpec& g = c.grid();
    FrameField ff;
    ff.grid = g;
    ff.frames.resize(static_cast<std::size_t>(g.nx) * g.nt);
    auto at = [&](int j, int n) -> Rotation3& {
        return ff.frames[static_cast<std::size_t>(n) * g.nx + j];
    };

    at(0, 0) = seed;
    for (int n = 0; n + 1 < g.nt; ++n)
        at(0, n + 1) = step(at(0, n), omega_t_at(c, s, 0, n), omega_t_at(c, s, 0, n + 1), g.dt());
    for (int n = 0; n < g.nt; ++n)
        for (int j = 0; j + 1 < g.nx; ++j)
            at(j + 1, n) =
                step(at(j, n), omega_x_at(c, s, j, n), omega_x_at(c, s, j + 1, n), g.dx());
    return ff;
}

double path_defect(const CoefficientSet& c, const SecondFormCoeffs& s, const Rotation3& seed) {
    check_seed(seed);
    const GridSpec& g = c.grid();

    // path A: up the t edge at x_min, then across the top time level
    Rotation3 a = seed;
    for (int n = 0; n + 1 < g.nt; ++n)
        a = step(a, omega_t_at(c, s, 0, n), omega_t_at(c, s, 0, n + 1), g.dt());
    for (int j = 0; j + 1 < g.nx; ++j)
        a = step(a, omega_x_at(c, s, j, g.nt - 1), omega_x_at(c, s, j + 1, g.nt - 1), g.dx());

    // path B: across the bottom time level, then up the t edge at x_max
    Rotation3 b = seed;
    for (int j = 0; j + 1 < g.nx; ++j)
        b = step(b, omega_x_at(c, s, j, 0), omega_x_at(c, s, j + 1, 0), g.dx());
    for (int n = 0; n + 1 < g.nt; ++n)
        b = step(b, omega_t_at(c, s, g.nx - 1, n), omega_t_at(c, s, g.nx - 1, n + 1), g.dt());

    return (a - b).frobenius();
}

SurfaceMesh reconstruct_surface(const FrameField& frames, const CoefficientSet& c) {
    const GridSpec& g = frames.grid;
    if (!(g == c.grid())) throw FrameError("reconstruct_surface: grid mismatch");

    SurfaceMesh mesh;
    mesh.grid = g;
    mesh.positions.resize(frames.frames.size());
    mesh.normals.resize(frames.frames.size());
    auto pos = [&](int j, int n) -> Vec3& {
        return mesh.positions[static_cast<std::size_t>(n) * g.nx + j];
    };

    auto dpos_t = [&](int j, int n) {
        return tangent_combo(frames.at(j, n), c.u12.at(j, n), c.u13.at(j, n));
    };
    auto dpos_x = [&](int j, int n) {
        return tangent_combo(frames.at(j, n), c.v12.at(j, n), c.v13.at(j, n));
    };

    pos(0, 0) = Vec3{0, 0, 0};
    for (int n = 0; n + 1 < g.nt; ++n) {
        const Vec3 f0 = dpos_t(0, n), f1 = dpos_t(0, n + 1);
        pos(0, n + 1) = add_scaled(add_scaled(pos(0, n), f0, 0.5 * g.dt()), f1, 0.5 * g.dt());
    }
    for (int n = 0; n < g.nt; ++n)
        for (int j = 0; j + 1 < g.nx; ++j) {
            const Vec3 f0 = dpos_x(j, n), f1 = dpos_x(j + 1, n);
            pos(j + 1, n) = add_scaled(add_scaled(pos(j, n), f0, 0.5 * g.dx()), f1, 0.5 * g.dx());
        }

    for (int n = 0; n < g.nt; ++n)
        for (int j = 0; j < g.nx; ++j) {
            const Rotation3& f = frames.at(j, n);
            mesh.normals[static_cast<std::size_t>(n) * g.nx + j] =
                Vec3{f(2, 0), f(2, 1), f(2, 2)};
        }
    return mesh;
}

double DiscreteForms::max_abs_K_deviation_from(double k_ref) const {
    double w = 0.0;
    for (const auto& d : nodes)
        if (!d.degenerate) w = std::max(w, std::abs(d.K - k_ref));
    return w;
}

DiscreteForms discrete_forms(const SurfaceMesh& mesh, double degeneracy_eps) {
    const GridSpec& g = mesh.grid;
    if (g.nx < 5 || g.nt < 5) throw FrameError("discrete_forms: grid must be at least 5x5");

    auto P = [&](int j, int n) { return mesh.at(j, n); };
    auto sub = [](const Vec3& a, const Vec3& b) {
        return Vec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    auto dot = [](const Vec3& a, const Vec3& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    auto cross = [](const Vec3& a, const Vec3& b) {
        return Vec3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]};
    };

    const double dt = g.dt(), dx = g.dx();
    DiscreteForms out;
    double k_sum = 0.0;
    std::size_t k_count = 0;

    for (int n = 1; n + 1 < g.nt; ++n)
        for (int j = 1; j + 1 < g.nx; ++j) {
            DiscreteFormsAt d;
            d.j = j;
            d.n = n;

            Vec3 xt = sub(P(j, n + 1), P(j, n - 1));
            Vec3 xx = sub(P(j + 1, n), P(j - 1, n));
            for (auto& v : xt) v /= 2.0 * dt;
            for (auto& v : xx) v /= 2.0 * dx;

            d.E = dot(xt, xt);
            d.F = dot(xt, xx);
            d.G = dot(xx, xx);

            const double det = d.E * d.G - d.F * d.F;
            if (det < degeneracy_eps) {
                d.degenerate = true;
                ++out.degenerate_count;
                out.nodes.push_back(d);
                continue;
            }

            Vec3 nrm = cross(xt, xx);
            const double nn = std::sqrt(dot(nrm, nrm));
            for (auto& v : nrm) v /= nn;

            Vec3 xtt = sub(sub(P(j, n + 1), P(j, n)), sub(P(j, n), P(j, n - 1)));
            Vec3 xxx = sub(sub(P(j + 1, n), P(j, n)), sub(P(j, n), P(j - 1, n)));
            Vec3 xtx = sub(sub(P(j + 1, n + 1), P(j + 1, n - 1)),
                           sub(P(j - 1, n + 1), P(j - 1, n - 1)));
            for (auto& v : xtt) v /= dt * dt;
            for (auto& v : xxx) v /= dx * dx;
            for (auto& v : xtx) v /= 4.0 * dx * dt;

            d.L = dot(xtt, nrm);
            d.M = dot(xtx, nrm);
            d.N = dot(xxx, nrm);
            d.K = (d.L * d.N - d.M * d.M) / det;
            d.H = (d.E * d.N - 2.0 * d.F * d.M + d.G * d.L) / (2.0 * det);

            k_sum += d.K;
            ++k_count;
            out.nodes.push_back(d);
        }

    if (k_count == 0) throw FrameError("discrete_forms: all interior nodes are degenerate");
    out.mean_K = k_sum / static_cast<double>(k_count);
    return out;
}

void save_mesh_obj(const std::string& path, const SurfaceMesh& mesh) {
    std::ofstream out(path);
    if (!out) throw FrameError("cannot write OBJ: " + path);
    out.precision(17);
    const GridSpec& g = mesh.grid;
    for (const auto& p : mesh.positions) out << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    auto vid = [&](int j, int n) { return n * g.nx + j + 1; };  // OBJ is 1-based
    for (int n = 0; n + 1 < g.nt; ++n)
        for (int j = 0; j + 1 < g.nx; ++j) {
            out << "f " << vid(j, n) << ' ' << vid(j + 1, n) << ' ' << vid(j + 1, n + 1) << '\n';
            out << "f " << vid(j, n) << ' ' << vid(j + 1, n + 1) << ' ' << vid(j, n + 1) << '\n';
        }
}

void save_mesh_csv(const std::string& path, const SurfaceMesh& mesh) {
    std::ofstream out(path);
    if (!out) throw FrameError("cannot write CSV: " + path);
    out.precision(17);
    out << "j,n,X,Y,Z\n";
    const GridSpec& g = mesh.grid;
    for (int n = 0; n < g.nt; ++n)
        for (int j = 0; j < g.nx; ++j) {
            const Vec3& p = mesh.at(j, n);
            out << j << ',' << n << ',' << p[0] << ',' << p[1] << ',' << p[2] << '\n';
        }
}

}  // namespace laxlab
