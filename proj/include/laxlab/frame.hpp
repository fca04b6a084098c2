#pragma once

#include <array>
#include <optional>
#include <vector>

#include "laxlab/algebra.hpp"
#include "laxlab/fields.hpp"

namespace laxlab {

using Vec3 = std::array<double, 3>;

/// Per-node Darboux frames; rows of each Rotation3 are e1, e2, e3.
struct FrameField {
    GridSpec grid;
    std::vector<Rotation3> frames;  // row-major, index n*nx + j

    const Rotation3& at(int j, int n) const {
        return frames[static_cast<std::size_t>(n) * grid.nx + j];
    }
    double worst_orthonormality_defect() const;
};

struct SurfaceMesh {
    GridSpec grid;
    std::vector<Vec3> positions;  // index n*nx + j
    std::vector<Vec3> normals;    // e3 per node, same indexing

    const Vec3& at(int j, int n) const {
        return positions[static_cast<std::size_t>(n) * grid.nx + j];
    }
};

/// Discrete fundamental-form data at one interior node.
struct DiscreteFormsAt {
    int j = 0, n = 0;
    double E = 0, F = 0, G = 0;  // first form (t direction first)
    double L = 0, M = 0, N = 0;  // second form
    double K = 0, H = 0;
    bool degenerate = false;  // EG - F^2 below the guard; K, H unset then
};

struct DiscreteForms {
    std::vector<DiscreteFormsAt> nodes;  // interior nodes only
    int degenerate_count = 0;
    double mean_K = 0.0;  // over non-degenerate nodes
    double max_abs_K_deviation_from(double k_ref) const;
};

/// Transport by midpoint exponential steps: along t at x_min, then along x
/// per time level. Connection matrices:
/// Omega_t = skew(u23, h11 u12 + h u13, h u12 + h22 u13), Omega_x likewise
/// with the v's.
FrameField propagate_frames(const CoefficientSet& c, const SecondFormCoeffs& s,
                            const Rotation3& seed);

/// Frobenius distance between the (x_max, t_max) frames transported along
/// the two extreme lattice paths (t-then-x vs x-then-t).
double path_defect(const CoefficientSet& c, const SecondFormCoeffs& s, const Rotation3& seed);

/// Trapezoid line integration of dx = omega1 e1 + omega2 e2 over the same
/// sweep order, anchored at the origin.
SurfaceMesh reconstruct_surface(const FrameField& frames, const CoefficientSet& c);

/// Central-difference fundamental forms of a mesh; nodes with
/// EG - F^2 < degeneracy_eps are flagged and excluded from K/H statistics.
DiscreteForms discrete_forms(const SurfaceMesh& mesh, double degeneracy_eps = 1e-8);

struct FrameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void save_mesh_obj(const std::string& path, const SurfaceMesh& mesh);
void save_mesh_csv(const std::string& path, const SurfaceMesh& mesh);

}  // namespace laxlab
