#include <catch2/catch_amalgamated.hpp>

#include "mdt/motive.hpp"

#include <random>

using namespace mdt;

namespace {

MotiveRat V(int e) { return MotiveRat::v_pow(e); }

MotiveRat frac(std::initializer_list<std::pair<int, long>> n,
               std::initializer_list<std::pair<int, long>> d) {
    VPoly np, dp;
    for (auto& [e, c] : n) np += VPoly::term(e, c);
    for (auto& [e, c] : d) dp += VPoly::term(e, c);
    return MotiveRat(np, dp);
}

// brute-force count of invertible n x n matrices over the p-element field
long count_gl(int n, int p) {
    int cells = n * n;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= p;
    long cnt = 0;
    std::vector<int> m(cells);
    for (long idx = 0; idx < total; ++idx) {
        long t = idx;
        for (int i = 0; i < cells; ++i) { m[i] = t % p; t /= p; }
        // rank by Gaussian elimination mod p
        std::vector<std::vector<int>> a(n, std::vector<int>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a[r][c] = m[r * n + c];
        int rank = 0;
        for (int c = 0; c < n && rank < n; ++c) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if (a[r][c] % p != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(a[rank], a[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == rank || a[r][c] % p == 0) continue;
                // r <- a[rank][c]*r - a[r][c]*rank
                int f1 = a[rank][c] % p, f2 = a[r][c] % p;
                for (int cc = 0; cc < n; ++cc)
                    a[r][cc] = ((a[r][cc] * f1 - a[rank][cc] * f2) % p + p) % p;
            }
            ++rank;
        }
        if (rank == n) ++cnt;
    }
    return cnt;
}

MotiveRat random_mrat(std::mt19937& rng) {
    std::uniform_int_distribution<int> ce(-3, 3), cc(-4, 4);
    auto poly = [&](bool nonzero) {
        VPoly p;
        for (int t = 0; t < 3; ++t) p += VPoly::term(ce(rng), cc(rng));
        if (nonzero && p.zero()) p = VPoly(1) + VPoly::v(2);
        return p;
    };
    return MotiveRat(poly(false), poly(true));
}

}  // namespace

TEST_CASE("rational function arithmetic") {
    MotiveRat a = frac({{1, 1}}, {{2, 1}, {0, -1}});   // v/(v^2-1)
    CHECK((a + (-a)).zero());

    MotiveRat p = frac({{2, 1}, {0, -1}}, {{0, 1}});   // v^2-1
    MotiveRat q = frac({{2, 1}, {0, 1}}, {{0, 1}});    // v^2+1
    CHECK(p * q == frac({{4, 1}, {0, -1}}, {{0, 1}}));

    MotiveRat x = MotiveRat(VPoly::v(6), (VPoly::v(2) - VPoly(1)) * (VPoly::v(2) - VPoly(1)));
    MotiveRat y = MotiveRat(VPoly::v(2), VPoly::v(2) - VPoly(1));
    MotiveRat ratio = x / y;
    CHECK(ratio == frac({{4, 1}}, {{2, 1}, {0, -1}}));
    // independent cross-check at v = 3 with exact rationals
    CHECK(ratio.eval_v(Rat(3)) == x.eval_v(Rat(3)) / y.eval_v(Rat(3)));

    CHECK_THROWS_AS(x / MotiveRat(), std::domain_error);
}

TEST_CASE("canonical form is a normal form") {
    std::mt19937 rng(20240811);
    for (int it = 0; it < 200; ++it) {
        MotiveRat a = random_mrat(rng), b = random_mrat(rng);
        bool eq = (a == b);
        CHECK((a - b).zero() == eq);
        if ((a - b).zero()) CHECK(a == b);
    }
    // denominator constant term is nonzero and leading coefficient positive
    MotiveRat f = MotiveRat(VPoly::v(3), VPoly::v(1) - VPoly::v(4));
    CHECK(f.den.min_exp() == 0);
    CHECK(f.den.lead() > 0);
}

TEST_CASE("adams operations") {
    CHECK(V(1).adams(2) == V(2));

    MotiveRat a = frac({{1, -1}}, {{2, 1}, {0, -1}});  // -v/(v^2-1)
    CHECK(a.adams(2) == frac({{2, -1}}, {{4, 1}, {0, -1}}));

    MotiveRat f = frac({{3, 1}, {0, 1}}, {{1, 1}, {0, -1}});  // (v^3+1)/(v-1)
    CHECK(f.adams(2).adams(3) == f.adams(6));

    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        MotiveRat a1 = random_mrat(rng), b1 = random_mrat(rng);
        for (int n : {2, 3}) {
            CHECK((a1 * b1).adams(n) == a1.adams(n) * b1.adams(n));
            CHECK((a1 + b1).adams(n) == a1.adams(n) + b1.adams(n));
        }
    }
}

TEST_CASE("gl_order") {
    CHECK(gl_order(0).is_one());
    CHECK(gl_order(1) == VPoly::v(2) - VPoly(1));
    CHECK(MotiveRat(gl_order(2)).eval_even(2) == 6);
    for (int n : {1, 2})
        for (int p : {2, 3})
            CHECK(MotiveRat(gl_order(n)).eval_even(p) == count_gl(n, p));
}

TEST_CASE("virtual motive normalization") {
    CHECK(vir_normalize(MotiveRat(1), 0).is_one());
    MotiveRat gl1 = MotiveRat(gl_order(1));
    CHECK(vir_normalize(gl1, 1) == frac({{2, -1}, {0, 1}}, {{1, 1}}));  // -(v^2-1)/v
    MotiveRat x = frac({{4, 1}, {1, 1}}, {{1, 1}, {0, -1}});
    CHECK(vir_normalize(x, 3) * vir_normalize(MotiveRat(1), -3) == x);
}

TEST_CASE("eval_even") {
    CHECK(frac({{2, 1}, {0, 1}}, {{0, 1}}).eval_even(3) == 4);
    MotiveRat f = MotiveRat(VPoly::v(6), (VPoly::v(2) - VPoly(1)) * (VPoly::v(2) - VPoly(1)));
    CHECK(f.eval_even(2) == 8);
    CHECK_THROWS_AS(V(1).eval_even(3), odd_power_error);
    CHECK_THROWS_AS(f.eval_even(1), pole_error);
}
