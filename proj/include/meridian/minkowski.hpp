#pragma once
#include <array>
#include <cmath>

namespace meridian {

// Point/vector of R^4_1 in the fixed orthonormal basis e1..e4,
// signature (+,+,+,-) with e4 the timelike direction.
struct SpacetimeVector {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;

    SpacetimeVector operator+(const SpacetimeVector& o) const {
        return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4};
    }
    SpacetimeVector operator-(const SpacetimeVector& o) const {
        return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4};
    }
    SpacetimeVector operator*(double s) const { return {x1 * s, x2 * s, x3 * s, x4 * s}; }

    std::array<double, 4> coords() const { return {x1, x2, x3, x4}; }

    double max_abs() const {
        return std::max(std::max(std::abs(x1), std::abs(x2)),
                        std::max(std::abs(x3), std::abs(x4)));
    }
};

inline SpacetimeVector operator*(double s, const SpacetimeVector& v) { return v * s; }

// Indefinite inner product u1w1 + u2w2 + u3w3 - u4w4.
inline double inner4(const SpacetimeVector& u, const SpacetimeVector& w) {
    return u.x1 * w.x1 + u.x2 * w.x2 + u.x3 * w.x3 - u.x4 * w.x4;
}

enum class Causal { spacelike, timelike, lightlike };

// Sign of <v,v> against a tolerance band around zero.
inline Causal causal_character(const SpacetimeVector& v, double tol = 1e-9) {
    const double q = inner4(v, v);
    if (q > tol) return Causal::spacelike;
    if (q < -tol) return Causal::timelike;
    return Causal::lightlike;
}

// Element of Lambda^2 R^4_1 in the basis e_i ^ e_j, i<j, with the fixed
// coordinate order (12,13,14,23,24,34). The induced inner product is
// diagonal in this basis with signs (+,+,-,+,-,-): a basis bivector has
// norm -1 exactly when one of its indices is 4.
struct Bivector {
    double c12 = 0.0, c13 = 0.0, c14 = 0.0, c23 = 0.0, c24 = 0.0, c34 = 0.0;

    Bivector operator+(const Bivector& o) const {
        return {c12 + o.c12, c13 + o.c13, c14 + o.c14, c23 + o.c23, c24 + o.c24, c34 + o.c34};
    }
    Bivector operator-(const Bivector& o) const {
        return {c12 - o.c12, c13 - o.c13, c14 - o.c14, c23 - o.c23, c24 - o.c24, c34 - o.c34};
    }
    Bivector operator*(double s) const {
        return {c12 * s, c13 * s, c14 * s, c23 * s, c24 * s, c34 * s};
    }

    std::array<double, 6> coords() const { return {c12, c13, c14, c23, c24, c34}; }

    static Bivector from_coords(const std::array<double, 6>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }

    double max_abs() const {
        double m = 0.0;
        for (double c : coords()) m = std::max(m, std::abs(c));
        return m;
    }
};

inline Bivector operator*(double s, const Bivector& b) { return b * s; }

// Exterior product; coordinates c_ij = u_i w_j - u_j w_i.
inline Bivector wedge(const SpacetimeVector& u, const SpacetimeVector& w) {
    return {u.x1 * w.x2 - u.x2 * w.x1, u.x1 * w.x3 - u.x3 * w.x1,
            u.x1 * w.x4 - u.x4 * w.x1, u.x2 * w.x3 - u.x3 * w.x2,
            u.x2 * w.x4 - u.x4 * w.x2, u.x3 * w.x4 - u.x4 * w.x3};
}

// Induced inner product on bivectors. On decomposables this equals the
// determinant of the 2x2 Gram matrix of inner4 values; the bilinear
// extension is diagonal on the e_i ^ e_j basis.
inline double inner_biv(const Bivector& a, const Bivector& b) {
    return a.c12 * b.c12 + a.c13 * b.c13 - a.c14 * b.c14 + a.c23 * b.c23 -
           a.c24 * b.c24 - a.c34 * b.c34;
}

} // namespace meridian
