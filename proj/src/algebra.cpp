#include "laxlab/algebra.hpp"

#include <cmath>

namespace laxlab {

Mat3 Mat3::identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
}

Mat3 Mat3::zero() { return Mat3{}; }

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat3 Mat3::operator+(const Mat3& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
    return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i] - o.m[i];
    return r;
}

Mat3 Mat3::operator*(double s) const {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i] * s;
    return r;
}

double Mat3::frobenius() const {
    double s = 0.0;
    for (double v : m) s += v * v;
    return std::sqrt(s);
}

double Mat3::det() const {
    const Mat3& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat6 Mat6::identity() {
    Mat6 r;
    for (int i = 0; i < 6; ++i) r(i, i) = 1.0;
    return r;
}

Mat6 Mat6::operator*(const Mat6& o) const {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            double s = 0.0;
            for (int k = 0; k < 6; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat6 Mat6::operator+(const Mat6& o) const {
    Mat6 r;
    for (std::size_t i = 0; i < 36; ++i) r.m[i] = m[i] + o.m[i];
    return r;
}

Mat6 Mat6::operator-(const Mat6& o) const {
    Mat6 r;
    for (std::size_t i = 0; i < 36; ++i) r.m[i] = m[i] - o.m[i];
    return r;
}

Mat6 Mat6::transpose() const {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r(i, j) = (*this)(j, i);
    return r;
}

double Mat6::frobenius() const {
    double s = 0.0;
    for (double v : m) s += v * v;
    return std::sqrt(s);
}

Mat3 skew_from_triple(const SkewTriple& t) {
    Mat3 r;
    r(0, 1) = t.a12;
    r(0, 2) = t.a13;
    r(1, 2) = t.a23;
    r(1, 0) = -t.a12;
    r(2, 0) = -t.a13;
    r(2, 1) = -t.a23;
    return r;
}

Mat3 commutator(const Mat3& a, const Mat3& b) { return a * b - b * a; }

Rotation3 rodrigues_exp(const SkewTriple& t) {
    const Mat3 m = skew_from_triple(t);
    const Mat3 m2 = m * m;
    const double theta = std::sqrt(t.a12 * t.a12 + t.a13 * t.a13 + t.a23 * t.a23);

    double c1, c2;  // exp(M) = I + c1*M + c2*M^2
    if (theta < 1e-6) {
        // series to O(theta^4), exact to double precision in this range
        const double t2 = theta * theta;
        c1 = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
        c2 = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
    } else {
        c1 = std::sin(theta) / theta;
        c2 = (1.0 - std::cos(theta)) / (theta * theta);
    }
    return Mat3::identity() + m * c1 + m2 * c2;
}

Mat6 block_diag(const Mat3& a, const Mat3& b) {
    Mat6 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            r(i, j) = a(i, j);
            r(i + 3, j + 3) = b(i, j);
        }
    return r;
}

double orthonormality_defect(const Mat3& r) {
    return (r * r.transpose() - Mat3::identity()).frobenius();
}

}  // namespace laxlab
