#include <doctest.h>

#include <cmath>
#include <random>

#include "meridian/isometry.hpp"
#include "meridian/minkowski.hpp"

using namespace meridian;

namespace {

SpacetimeVector e(int i) {
    SpacetimeVector v;
    (&v.x1)[i] = 1.0;
    return v;
}

struct Rand {
    std::mt19937_64 gen{12345};
    double operator()() { return 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0; }
    SpacetimeVector vec() { return {(*this)(), (*this)(), (*this)(), (*this)()}; }
};

} // namespace

TEST_CASE("inner4 basis values and a mixed product") {
    CHECK(inner4(e(3), e(3)) == -1.0);
    CHECK(inner4(e(0), e(0)) == 1.0);
    CHECK(inner4(e(1), e(1)) == 1.0);
    CHECK(inner4({1, 2, 0, 3}, {0, 1, 1, 1}) == -1.0);
}

TEST_CASE("inner4 is symmetric and bilinear") {
    Rand rnd;
    for (int k = 0; k < 200; ++k) {
        const SpacetimeVector u = rnd.vec(), w = rnd.vec(), p = rnd.vec();
        const double a = rnd();
        CHECK(std::abs(inner4(u, w) - inner4(w, u)) <= 1e-14);
        CHECK(std::abs(inner4(u + p * a, w) - (inner4(u, w) + a * inner4(p, w))) <= 1e-13);
    }
}

TEST_CASE("wedge on basis vectors and antisymmetry") {
    const Bivector b = wedge(e(0), e(1));
    CHECK(b.c12 == 1.0);
    CHECK(b.c13 == 0.0);
    CHECK(b.c14 == 0.0);
    CHECK(b.c23 == 0.0);
    CHECK(b.c24 == 0.0);
    CHECK(b.c34 == 0.0);

    const Bivector m = wedge({1, 0, 0, 1}, {0, 1, 0, 0});
    CHECK(m.c12 == 1.0);
    CHECK(m.c24 == -1.0);
    CHECK(m.c13 == 0.0);
    CHECK(m.c14 == 0.0);
    CHECK(m.c23 == 0.0);
    CHECK(m.c34 == 0.0);

    Rand rnd;
    for (int k = 0; k < 100; ++k) {
        const SpacetimeVector u = rnd.vec(), w = rnd.vec();
        CHECK((wedge(u, w) + wedge(w, u)).max_abs() == 0.0);
        CHECK(wedge(u, u).max_abs() == 0.0);
    }
}

TEST_CASE("bivector inner product: basis signs (+,+,-,+,-,-)") {
    const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const double sign[6] = {1, 1, -1, 1, -1, -1};
    for (int a = 0; a < 6; ++a) {
        const Bivector ba = wedge(e(idx[a][0]), e(idx[a][1]));
        for (int b = 0; b < 6; ++b) {
            const Bivector bb = wedge(e(idx[b][0]), e(idx[b][1]));
            CHECK(inner_biv(ba, bb) == (a == b ? sign[a] : 0.0));
        }
    }
}

TEST_CASE("bivector inner product matches the Gram determinant on decomposables") {
    Rand rnd;
    for (int k = 0; k < 300; ++k) {
        const SpacetimeVector u = rnd.vec(), w = rnd.vec(), p = rnd.vec(), q = rnd.vec();
        const double lhs = inner_biv(wedge(u, w), wedge(p, q));
        const double rhs = inner4(u, p) * inner4(w, q) - inner4(u, q) * inner4(w, p);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("causal character at the default tolerance") {
    CHECK(causal_character(e(0)) == Causal::spacelike);
    CHECK(causal_character(e(3)) == Causal::timelike);
    CHECK(causal_character(e(0) + e(3)) == Causal::lightlike);
    CHECK(causal_character({0, 0, 0, 0}) == Causal::lightlike);
    CHECK(causal_character({1e-6, 0, 0, 0}, 1e-9) == Causal::spacelike);
}

TEST_CASE("random isometries preserve the metric") {
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(random_isometry(seed).metric_defect() <= 1e-12);
}

TEST_CASE("orthonormal frames reproduce the wedge sign table") {
    // Columns of an isometry form a frame with signs (+,+,+,-); the six wedge
    // products must have norms (1,1,-1,1,-1,-1) and vanishing cross products.
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const Isometry q = random_isometry(seed);
        SpacetimeVector fr[4];
        for (int c = 0; c < 4; ++c) fr[c] = {q.m[0][c], q.m[1][c], q.m[2][c], q.m[3][c]};
        const Bivector wedges[6] = {wedge(fr[0], fr[1]), wedge(fr[0], fr[2]),
                                    wedge(fr[0], fr[3]), wedge(fr[1], fr[2]),
                                    wedge(fr[1], fr[3]), wedge(fr[2], fr[3])};
        const double sign[6] = {1, 1, -1, 1, -1, -1};
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                const double want = (a == b) ? sign[a] : 0.0;
                CHECK(std::abs(inner_biv(wedges[a], wedges[b]) - want) <= 1e-12);
            }
    }
}
