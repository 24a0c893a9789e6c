#pragma once

namespace meridian {

// Elliptic: profile rotated about the timelike e4 axis, base curve on S^2(1).
// Hyperbolic: profile rotated about the spacelike e1 axis, base curve on S^2_1(1).
enum class SurfaceKind { elliptic, hyperbolic };

inline const char* to_string(SurfaceKind k) {
    return k == SurfaceKind::elliptic ? "elliptic" : "hyperbolic";
}

} // namespace meridian
