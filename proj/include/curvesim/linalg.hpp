#pragma once

#include "curvesim/unipoly.hpp"

#include <array>

namespace curvesim {

template <class K>
struct Vec3 {
    std::array<K, 3> v{RingTraits<K>::zero(), RingTraits<K>::zero(), RingTraits<K>::zero()};

    K& operator[](int i) { return v[i]; }
    const K& operator[](int i) const { return v[i]; }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return Vec3{{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return Vec3{{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
    }
    friend Vec3 operator*(const Vec3& a, const K& c) { return Vec3{{a[0] * c, a[1] * c, a[2] * c}}; }
    friend bool operator==(const Vec3& a, const Vec3& b) {
        return RingTraits<K>::is_zero(a[0] - b[0]) && RingTraits<K>::is_zero(a[1] - b[1]) &&
               RingTraits<K>::is_zero(a[2] - b[2]);
    }
    bool is_zero() const {
        return RingTraits<K>::is_zero(v[0]) && RingTraits<K>::is_zero(v[1]) &&
               RingTraits<K>::is_zero(v[2]);
    }
};

template <class K>
K dot(const Vec3<K>& a, const Vec3<K>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class K>
Vec3<K> cross(const Vec3<K>& a, const Vec3<K>& b) {
    return Vec3<K>{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

// Column-major 3x3 matrix: col(j) is the image of the j-th basis vector.
template <class K>
struct Mat3 {
    std::array<Vec3<K>, 3> cols;

    static Mat3 identity() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m.cols[i][i] = RingTraits<K>::one();
        return m;
    }
    static Mat3 from_cols(const Vec3<K>& c0, const Vec3<K>& c1, const Vec3<K>& c2) {
        Mat3 m;
        m.cols = {c0, c1, c2};
        return m;
    }

    K at(int r, int c) const { return cols[c][r]; }
    void set(int r, int c, K v) { cols[c][r] = std::move(v); }

    friend Vec3<K> operator*(const Mat3& m, const Vec3<K>& x) {
        return m.cols[0] * x[0] + m.cols[1] * x[1] + m.cols[2] * x[2];
    }
    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        return from_cols(a * b.cols[0], a * b.cols[1], a * b.cols[2]);
    }
    friend Mat3 operator*(const Mat3& a, const K& c) {
        return from_cols(a.cols[0] * c, a.cols[1] * c, a.cols[2] * c);
    }
    friend bool operator==(const Mat3& a, const Mat3& b) {
        return a.cols[0] == b.cols[0] && a.cols[1] == b.cols[1] && a.cols[2] == b.cols[2];
    }

    Mat3 transpose() const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.set(r, c, at(c, r));
        return m;
    }

    K det() const { return dot(cols[0], cross(cols[1], cols[2])); }

    // exact inverse by adjugate over a field; requires det != 0
    Mat3 inverse() const {
        K d = det();
        Mat3 adj;
        Vec3<K> r0 = cross(cols[1], cols[2]);
        Vec3<K> r1 = cross(cols[2], cols[0]);
        Vec3<K> r2 = cross(cols[0], cols[1]);
        // adjugate rows are these cross products
        for (int c = 0; c < 3; ++c) {
            adj.set(0, c, RingTraits<K>::divexact(r0[c], d));
            adj.set(1, c, RingTraits<K>::divexact(r1[c], d));
            adj.set(2, c, RingTraits<K>::divexact(r2[c], d));
        }
        return adj;
    }

    bool is_special_orthogonal() const {
        Mat3 gram = transpose() * (*this);
        return gram == identity() && RingTraits<K>::is_zero(det() - RingTraits<K>::one());
    }
};

// Exact rotation matrix from a nonzero quaternion (w, x, y, z); entries have
// denominator |q|^2, so rational quaternions give rational SO(3) matrices.
inline Mat3<Rational> rotation_from_quaternion(const Rational& w, const Rational& x,
                                               const Rational& y, const Rational& z) {
    Rational n = w * w + x * x + y * y + z * z;
    assert(sgn(n) > 0);
    Mat3<Rational> m;
    m.set(0, 0, (w * w + x * x - y * y - z * z) / n);
    m.set(0, 1, (x * y - w * z) * 2 / n);
    m.set(0, 2, (x * z + w * y) * 2 / n);
    m.set(1, 0, (x * y + w * z) * 2 / n);
    m.set(1, 1, (w * w - x * x + y * y - z * z) / n);
    m.set(1, 2, (y * z - w * x) * 2 / n);
    m.set(2, 0, (x * z - w * y) * 2 / n);
    m.set(2, 1, (y * z + w * x) * 2 / n);
    m.set(2, 2, (w * w - x * x - y * y + z * z) / n);
    return m;
}

template <class K>
Vec3<K> vec_cast3(const Vec3<Rational>& v) {
    return Vec3<K>{{RingTraits<K>::from_rational(v[0]), RingTraits<K>::from_rational(v[1]),
                    RingTraits<K>::from_rational(v[2])}};
}

template <class K>
Mat3<K> mat_cast3(const Mat3<Rational>& m) {
    return Mat3<K>::from_cols(vec_cast3<K>(m.cols[0]), vec_cast3<K>(m.cols[1]),
                              vec_cast3<K>(m.cols[2]));
}

} // namespace curvesim
