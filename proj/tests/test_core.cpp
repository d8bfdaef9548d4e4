#include "doctest.h"
#include "support.hpp"

#include "toric_ic/error.hpp"

using namespace toric;
using namespace fixtures;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(to_string(parse_rat("6/4")) == "3/2");
    CHECK(to_string(parse_rat("-7")) == "-7");
    CHECK(to_string(parse_rat("0/5")) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
    CHECK_THROWS_AS(parse_rat("1.5"), Error);
    CHECK(floor(Rat(-1, 2)) == -1);
    CHECK(ceil(Rat(-1, 2)) == 0);
    CHECK(binomial(5, 2) == 10);
}

TEST_CASE("pairing examples") {
    RatVector u{Rat(1, 2), Rat(3)};
    CHECK(pairing(u, lv({2, 1})) == 4);
    CHECK(pairing(rv({0, 0, 0}), lv({5, -2, 7})) == 0);
    CHECK(pairing(rv({1, 0}), lv({0, 1})) == 0);
    try {
        (void)pairing(rv({1, 0}), lv({1, 2, 3}));
        FAIL("expected dimension error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::dimension_mismatch);
    }
}

TEST_CASE("pairing is bilinear") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        RatVector u(3), w(3);
        LatticeVector v(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = Rat(d(rng), 1 + std::abs(d(rng)));
            w[i] = Rat(d(rng), 1 + std::abs(d(rng)));
            v[i] = d(rng);
        }
        const Rat a(d(rng), 7), b(d(rng), 5);
        CHECK(pairing(add(scale(a, u), scale(b, w)), v) == a * pairing(u, v) + b * pairing(w, v));
    }
}

TEST_CASE("affine frames") {
    SUBCASE("coordinate segment") {
        std::vector<RatVector> pts{rv({0, 0}), rv({3, 0})};
        auto f = affine_frame(pts);
        CHECK(f.base == lv({0, 0}));
        REQUIRE(f.dim() == 1);
        CHECK((f.basis[0] == lv({1, 0}) || f.basis[0] == lv({-1, 0})));
    }
    SUBCASE("segment x + 2y = 2") {
        std::vector<RatVector> pts{rv({0, 1}), rv({2, 0})};
        auto f = affine_frame(pts);
        REQUIRE(f.dim() == 1);
        CHECK((f.basis[0] == lv({2, -1}) || f.basis[0] == lv({-2, 1})));
        // Every lattice point of the line is base + c·basis.
        for (long x = -6; x <= 6; x += 2) {
            auto c = f.coordinates(RatVector{Rat(x), Rat(2 - x, 2)});
            REQUIRE(c);
            CHECK(is_integral((*c)[0]));
        }
    }
    SUBCASE("full span") {
        std::vector<RatVector> pts{rv({0, 0}), rv({1, 0}), rv({0, 1})};
        auto f = affine_frame(pts);
        CHECK(f.dim() == 2);
        IntMatrix b{f.basis[0], f.basis[1]};
        CHECK(abs(determinant(b)) == 1);
    }
    SUBCASE("span without lattice points") {
        std::vector<RatVector> pts{RatVector{Rat(1, 2), Rat(0)}, RatVector{Rat(1, 2), Rat(1)}};
        try {
            (void)affine_frame(pts);
            FAIL("expected non-integral span");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::non_integral_span);
        }
    }
    SUBCASE("rational points on an integral line") {
        std::vector<RatVector> pts{RatVector{Rat(1, 2), Rat(1, 2)}, RatVector{Rat(5, 2), Rat(5, 2)}};
        auto f = affine_frame(pts);
        CHECK(f.dim() == 1);
        CHECK(f.coordinates(rv({1, 1})));
        CHECK(!f.coordinates(rv({1, 2})));
    }
}

TEST_CASE("affine frame round trip in a box") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RatVector> pts;
        for (int i = 0; i < 2; ++i) pts.push_back(RatVector{Rat(d(rng)), Rat(d(rng)), Rat(d(rng))});
        if (pts[0] == pts[1]) continue;
        auto f = affine_frame(pts);
        const RatVector dir = sub(pts[1], pts[0]);
        // Lattice points of the line inside [-6,6]^3, found by scanning.
        for (int x = -6; x <= 6; ++x)
            for (int y = -6; y <= 6; ++y)
                for (int z = -6; z <= 6; ++z) {
                    RatVector p{Rat(x), Rat(y), Rat(z)};
                    const RatVector off = sub(p, pts[0]);
                    RatMatrix m{dir, off};
                    const bool on_line = rank(m) <= 1;
                    auto c = f.coordinates(p);
                    CHECK(on_line == c.has_value());
                    if (c) CHECK(is_integral((*c)[0]));
                }
    }
}

TEST_CASE("hermite kernel and saturation") {
    IntMatrix a{lv({2, 4, 6})};
    auto k = integer_kernel(a, 3);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(pairing(to_rat(v), lv({1, 2, 3})) == 0);
    std::vector<RatVector> dirs{rv({2, 0}), rv({0, 4})};
    auto s = saturated_basis(dirs, 2);
    IntMatrix b{s[0], s[1]};
    CHECK(abs(determinant(b)) == 1);
}

TEST_CASE("unimodular maps") {
    CHECK(is_unimodular({lv({1, 1}), lv({0, 1})}));
    CHECK(!is_unimodular({lv({2, 0}), lv({0, 1})}));
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) CHECK(is_unimodular(random_unimodular(rng, 3)));
    CHECK((toric::apply(identity_matrix(2), rv({3, -4})) == rv({3, -4})));
}
