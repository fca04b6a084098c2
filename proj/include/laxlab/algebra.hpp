#pragma once

#include <array>
#include <cstddef>

namespace laxlab {

/// Coefficients of a 3x3 antisymmetric matrix in slots (1,2), (1,3), (2,3).
/// The realized matrix is
///   [  0    a12   a13 ]
///   [ -a12   0    a23 ]
///   [ -a13 -a23    0  ]
/// Dual axis vector convention (fixed project-wide): w = (-a23, a13, -a12),
/// i.e. skew(t) acts as v -> w x v.
struct SkewTriple {
    double a12 = 0.0;
    double a13 = 0.0;
    double a23 = 0.0;
};

struct Mat3 {
    std::array<double, 9> m{};  // row-major

    double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

    static Mat3 identity();
    static Mat3 zero();

    Mat3 transpose() const;
    Mat3 operator*(const Mat3& o) const;
    Mat3 operator+(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    Mat3 operator*(double s) const;

    double frobenius() const;
    double det() const;
};

/// Proper rotation; rows are frame vectors when used as a Darboux frame.
using Rotation3 = Mat3;

struct Mat6 {
    std::array<double, 36> m{};  // row-major

    double operator()(int r, int c) const { return m[static_cast<std::size_t>(6 * r + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(6 * r + c)]; }

    static Mat6 identity();

    Mat6 operator*(const Mat6& o) const;
    Mat6 operator+(const Mat6& o) const;
    Mat6 operator-(const Mat6& o) const;
    Mat6 transpose() const;
    double frobenius() const;
};

Mat3 skew_from_triple(const SkewTriple& t);

Mat3 commutator(const Mat3& a, const Mat3& b);

/// Closed-form exponential of skew_from_triple(t) (axis-angle formula,
/// series fallback below angle 1e-6).
Rotation3 rodrigues_exp(const SkewTriple& t);

Mat6 block_diag(const Mat3& a, const Mat3& b);

/// Frobenius norm of R*R^T - I. Zero iff R is orthogonal.
double orthonormality_defect(const Mat3& r);

}  // namespace laxlab
