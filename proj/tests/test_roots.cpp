#include <catch2/catch_amalgamated.hpp>

#include "mdt/roots.hpp"

using namespace mdt;

namespace {

bool contains(const std::vector<Root>& roots, const std::vector<int>& coords) {
    for (const Root& r : roots)
        if (r.coords == coords) return true;
    return false;
}

const Root& find(const std::vector<Root>& roots, const std::vector<int>& coords) {
    for (const Root& r : roots)
        if (r.coords == coords) return r;
    throw std::logic_error("root not found");
}

}  // namespace

TEST_CASE("enumeration") {
    SigmaPartition conifold = SigmaPartition::from_bits("01");
    auto r2 = enumerate_positive_roots(2, conifold, 2);
    REQUIRE(r2.size() == 3);
    CHECK(find(r2, {0, 1}).kind == RootKind::RealOdd);
    CHECK(find(r2, {1, 0}).kind == RootKind::RealOdd);
    CHECK(find(r2, {1, 1}).kind == RootKind::Imaginary);

    auto r1 = enumerate_positive_roots(1, SigmaPartition::from_bits("0"), 3);
    REQUIRE(r1.size() == 3);
    for (const Root& r : r1) CHECK(r.kind == RootKind::Imaginary);

    auto r3 = enumerate_positive_roots(3, special_sigma(2, 1), 1);
    REQUIRE(r3.size() == 3);
    CHECK(contains(r3, {0, 1, 0}));
    CHECK(contains(r3, {0, 0, 1}));
    CHECK(contains(r3, {1, 0, 0}));  // -alpha_[1,2] + delta
}

TEST_CASE("normal forms round-trip") {
    SigmaPartition s = special_sigma(2, 1);
    for (const Root& r : enumerate_positive_roots(3, s, 9)) {
        auto back = root_from_coords(r.coords);
        REQUIRE(back.has_value());
        CHECK(back->imaginary == r.imaginary);
        CHECK(back->n == r.n);
        if (!r.imaginary) {
            CHECK(back->a == r.a);
            CHECK(back->b == r.b);
            CHECK(back->sign == r.sign);
        }
    }
    CHECK_FALSE(root_from_coords({2, 0}).has_value());
    CHECK_FALSE(root_from_coords({1, 0, 1, 0}).has_value());
    CHECK(root_from_coords({1, 0, 1}).has_value());  // delta - alpha_1
}

TEST_CASE("parity") {
    CHECK(parity(SigmaPartition::from_bits("01"), {1, 0}) == 1);
    CHECK(parity(special_sigma(2, 0), {1, 0}) == 0);       // empty sum
    CHECK(parity(special_sigma(3, 1), {0, 0, 1, 1}) == 0); // alpha_[2,3]
}

TEST_CASE("simple reflection") {
    CHECK(simple_reflection(2, 1, {1, 0}) == std::vector<int>{1, 2});
    for (int N : {1, 2, 3, 5})
        for (int k = 0; k < N; ++k)
            CHECK(simple_reflection(N, k, std::vector<int>(N, 1)) == std::vector<int>(N, 1));
    // s_0(alpha_0) = -alpha_0
    CHECK(simple_reflection(3, 0, {1, 0, 0}) == std::vector<int>{-1, 0, 0});
    CHECK(simple_reflection(3, 0, {1, 1, 0}) == std::vector<int>{0, 1, 0});
}

TEST_CASE("reflection bijection on positive roots") {
    const int D = 6;
    for (auto [n0, n1] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}}) {
        SigmaPartition s = special_sigma(n0, n1);
        int N = n0 + n1;
        auto roots = enumerate_positive_roots(N, s, D);
        for (int k = 0; k < N; ++k) {
            std::vector<int> alpha_k(N, 0);
            alpha_k[k] = 1;
            for (const Root& r : roots) {
                if (r.coords == alpha_k || r.degree() > D - 2) continue;
                auto img = simple_reflection(N, k, r.coords);
                CHECK(root_from_coords(img).has_value());
                CHECK(img != alpha_k);
                CHECK(simple_reflection(N, k, img) == r.coords);
            }
        }
    }
}

TEST_CASE("parity is preserved by reflection with flipped sigma") {
    const int D = 6;
    for (auto [n0, n1] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}}) {
        SigmaPartition s = special_sigma(n0, n1);
        int N = n0 + n1;
        auto loops = s.loop_set();
        auto roots = enumerate_positive_roots(N, s, D);
        for (int k = 0; k < N; ++k) {
            if (loops.count(k)) continue;
            SigmaPartition sf = s.flip(k);
            std::vector<int> alpha_k(N, 0);
            alpha_k[k] = 1;
            for (const Root& r : roots) {
                if (r.imaginary || r.coords == alpha_k || r.degree() > D - 2) continue;
                auto img = simple_reflection(N, k, r.coords);
                CHECK(parity(s, r.coords) == parity(sf, img));
            }
        }
    }
}

TEST_CASE("curve classes") {
    SigmaPartition conifold = SigmaPartition::from_bits("01");
    auto roots = enumerate_positive_roots(2, conifold, 2);
    CurveClass cc = curve_class(conifold, find(roots, {1, 1}));
    CHECK(cc.n == 1);
    CHECK_FALSE(cc.interval.has_value());

    SigmaPartition s21 = special_sigma(2, 1);
    auto r21 = enumerate_positive_roots(3, s21, 2);
    CurveClass c12 = curve_class(s21, find(r21, {0, 1, 1}));
    CHECK(c12.c == 2);  // vertices 1, 2 loopless

    SigmaPartition s31 = special_sigma(3, 1);
    auto r31 = enumerate_positive_roots(4, s31, 1);
    CurveClass c33 = curve_class(s31, find(r31, {0, 0, 0, 1}));
    CHECK(c33.interval == std::make_pair(3, 3));
    CHECK(c33.c == 1);
}

TEST_CASE("stability pairing and genericity") {
    int N = 3;
    StabilityParam pt_literal;  // base (1-N, 1, ..., 1), eps (+1, 0, ..., 0)
    pt_literal.base.assign(N, Rat(1));
    pt_literal.base[0] = Rat(1 - N);
    pt_literal.eps.assign(N, Rat(0));
    pt_literal.eps[0] = Rat(1);
    std::vector<int> delta(N, 1);
    CHECK(pt_literal.pair_with(delta) == std::make_pair(Rat(0), Rat(1)));
    CHECK_FALSE(pt_literal.negative_on(delta));

    StabilityParam dt_literal = pt_literal;
    dt_literal.eps[0] = Rat(-1);
    CHECK(dt_literal.pair_with(delta) == std::make_pair(Rat(0), Rat(-1)));
    CHECK(dt_literal.negative_on(delta));

    StabilityParam zero;
    zero.base.assign(N, Rat(0));
    zero.eps.assign(N, Rat(0));
    auto roots = enumerate_positive_roots(N, special_sigma(2, 1), 6);
    CHECK_FALSE(is_generic(zero, roots));

    // engine DT/PT chambers: generic at degree 8, and the selected root sets
    // are re,+ (+ imaginary for DT)
    for (int n : {2, 3, 4}) {
        SigmaPartition s = n == 2 ? special_sigma(1, 1) : (n == 3 ? special_sigma(2, 1) : special_sigma(3, 1));
        auto rs = enumerate_positive_roots(n, s, 8);
        StabilityParam dt = zeta_dt(n), pt = zeta_pt(n);
        CHECK(is_generic(dt, rs));
        CHECK(is_generic(pt, rs));
        for (const Root& r : rs) {
            bool in_dt = dt.negative_on(r.coords);
            bool in_pt = pt.negative_on(r.coords);
            if (r.imaginary) {
                CHECK(in_dt);
                CHECK_FALSE(in_pt);
            } else {
                CHECK(in_dt == (r.sign > 0));
                CHECK(in_pt == (r.sign > 0));
            }
        }
        StabilityParam nc = zeta_ncdt(n);
        CHECK(is_generic(nc, rs));
        for (const Root& r : rs) CHECK(nc.negative_on(r.coords));
    }
}
