#include "meridian/isometry.hpp"

#include <cmath>
#include <random>

namespace meridian {

SpacetimeVector Isometry::apply(const SpacetimeVector& v) const {
    const double in[4] = {v.x1, v.x2, v.x3, v.x4};
    double out[4] = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += m[r][c] * in[c];
    return {out[0], out[1], out[2], out[3]};
}

Isometry Isometry::compose(const Isometry& rhs) const {
    Isometry q;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += m[r][k] * rhs.m[k][c];
            q.m[r][c] = acc;
        }
    return q;
}

Isometry Isometry::rotation(int i, int j, double angle) {
    Isometry q;
    const double c = std::cos(angle), s = std::sin(angle);
    q.m[i][i] = c;
    q.m[j][j] = c;
    q.m[i][j] = -s;
    q.m[j][i] = s;
    return q;
}

Isometry Isometry::boost(int i, double rapidity) {
    Isometry q;
    const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    q.m[i][i] = ch;
    q.m[3][3] = ch;
    q.m[i][3] = sh;
    q.m[3][i] = sh;
    return q;
}

double Isometry::metric_defect() const {
    const double eta[4] = {1, 1, 1, -1};
    double defect = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += m[k][a] * eta[k] * m[k][b];
            const double target = (a == b) ? eta[a] : 0.0;
            defect = std::max(defect, std::abs(acc - target));
        }
    return defect;
}

Isometry random_isometry(std::uint64_t seed, double max_angle, double max_rapidity) {
    std::mt19937_64 rng(seed);
    auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto sym = [&](double lim) { return (2.0 * u01() - 1.0) * lim; };

    Isometry q = Isometry::rotation(0, 1, sym(max_angle));
    q = q.compose(Isometry::rotation(0, 2, sym(max_angle)));
    q = q.compose(Isometry::rotation(1, 2, sym(max_angle)));
    q = q.compose(Isometry::boost(0, sym(max_rapidity)));
    q = q.compose(Isometry::boost(1, sym(max_rapidity)));
    q = q.compose(Isometry::boost(2, sym(max_rapidity)));
    return q;
}

} // namespace meridian
