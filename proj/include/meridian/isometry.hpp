#pragma once
#include <cstdint>

#include "meridian/minkowski.hpp"

namespace meridian {

// Linear isometry of R^4_1 from the identity component SO+(3,1),
// stored as a 4x4 matrix acting on column coordinate vectors.
struct Isometry {
    double m[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};

    SpacetimeVector apply(const SpacetimeVector& v) const;
    Isometry compose(const Isometry& rhs) const; // this * rhs

    static Isometry identity() { return {}; }
    static Isometry rotation(int i, int j, double angle);  // spatial plane (i,j), 0-based, i,j < 3
    static Isometry boost(int i, double rapidity);         // plane (e_i, e4), 0-based i < 3

    // Max-abs defect of Q^T eta Q - eta; zero for an exact isometry.
    double metric_defect() const;
};

// Random element of the identity component: product of three spatial
// rotations and three boosts with bounded rapidity.
Isometry random_isometry(std::uint64_t seed, double max_angle = 3.0, double max_rapidity = 0.8);

} // namespace meridian
