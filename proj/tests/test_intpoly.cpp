#include <doctest.h>

#include <random>

#include "specred/intpoly.hpp"

using namespace specred;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree, int coeff_bound) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    int deg = deg_dist(rng);
    std::vector<Int> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(coeff_dist(rng));
    return IntPoly(std::move(coeffs));
}

IntPoly random_nonzero_poly(std::mt19937& rng, int max_degree, int coeff_bound) {
    for (;;) {
        IntPoly p = random_poly(rng, max_degree, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    IntPoly xm1{-1, 1};
    IntPoly xp1{1, 1};
    CHECK(xm1 * xp1 == IntPoly{-1, 0, 1});

    IntPoly p{3, 0, 7};
    CHECK(p * IntPoly::zero() == IntPoly::zero());
    CHECK((p + (-p)).is_zero());
    CHECK(p - p == IntPoly::zero());

    // (x^2 - 21x + 88)(x + 7), multiplied out by hand
    IntPoly quad{88, -21, 1};
    CHECK(quad * IntPoly{7, 1} == IntPoly{616, -59, -14, 1});

    CHECK(IntPoly{1, 2}.scaled(Int(3)) == IntPoly{3, 6});
    CHECK(IntPoly{1, 1}.shifted_up(2) == IntPoly{0, 0, 1, 1});
}

TEST_CASE("degree bookkeeping stays normalized") {
    IntPoly p(std::vector<Int>{Int(1), Int(2), Int(0), Int(0)});
    CHECK(p.degree() == 1);
    CHECK((IntPoly{5, 1} - IntPoly{0, 1}) == IntPoly{5});
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly::constant(Int(0)).is_zero());
}

TEST_CASE("derivative") {
    CHECK(IntPoly{0, -4, 0, 1}.derivative() == IntPoly{-4, 0, 3});
    CHECK(IntPoly{5}.derivative().is_zero());
    // cubic of P(7,110)
    CHECK(IntPoly{550, -116, -5, 1}.derivative() == IntPoly{-116, -10, 3});
}

TEST_CASE("gcd on shared-root fixtures") {
    CHECK(IntPoly::gcd(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{-1, 1});

    // both cubics vanish at 11
    IntPoly c1{550, -116, -5, 1};
    IntPoly c2{693, -107, -7, 1};
    CHECK(c1.eval(Int(11)) == 0);
    CHECK(c2.eval(Int(11)) == 0);
    CHECK(IntPoly::gcd(c1, c2) == IntPoly{-11, 1});

    // both divisible by x^2 - 21x + 88
    IntPoly d1{616, -59, -14, 1};
    IntPoly d2{1320, -227, -6, 1};
    IntPoly quad{88, -21, 1};
    CHECK(d1.divided_exactly_by(quad).has_value());
    CHECK(d2.divided_exactly_by(quad).has_value());
    CHECK(IntPoly::gcd(d1, d2) == quad);

    CHECK(IntPoly::gcd(IntPoly{4}, IntPoly{6}) == IntPoly{1});
    CHECK(IntPoly::gcd(IntPoly::zero(), IntPoly{-2, 4}) == IntPoly{-1, 2});
    CHECK_THROWS_AS(IntPoly::gcd(IntPoly::zero(), IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("gcd of common multiples is divisible by the cofactor") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly p = random_nonzero_poly(rng, 4, 8);
        IntPoly q = random_nonzero_poly(rng, 4, 8);
        IntPoly g = random_nonzero_poly(rng, 3, 8);
        IntPoly d = IntPoly::gcd(p * g, q * g);
        CHECK(d.divided_exactly_by(g.normalized()).has_value());
    }
}

TEST_CASE("exact division") {
    IntPoly prod = IntPoly{88, -21, 1} * IntPoly{7, 1};
    auto q = prod.divided_exactly_by(IntPoly{7, 1});
    REQUIRE(q.has_value());
    CHECK(*q == IntPoly{88, -21, 1});
    CHECK_FALSE(IntPoly{1, 0, 1}.divided_exactly_by(IntPoly{1, 1}).has_value());
    CHECK_FALSE(IntPoly{1, 1}.divided_exactly_by(IntPoly{0, 2}).has_value());
}

TEST_CASE("square-free part strips multiplicities") {
    IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{3, 1};
    CHECK(sq.square_free_part() == IntPoly{-1, 1} * IntPoly{3, 1});
    CHECK_FALSE(sq.is_square_free());
    CHECK(IntPoly{-1, 0, 1}.is_square_free());
    // content does not disturb the result
    CHECK(IntPoly{-2, 0, 2}.square_free_part() == IntPoly{-1, 0, 1});
}

TEST_CASE("evaluation and signs") {
    IntPoly p{550, -116, -5, 1};
    CHECK(p.eval(Int(0)) == 550);
    CHECK(p.eval(Rat(11)) == 0);
    CHECK(p.sign_at(Rat(11)) == 0);
    CHECK(p.sign_at(make_rat(Int(21), Int(2))) < 0);
    CHECK(p.sign_at_pos_inf() == 1);
    CHECK(p.sign_at_neg_inf() == -1);
    CHECK(IntPoly{1, 0, 1}.sign_at_neg_inf() == 1);
}

TEST_CASE("taylor coefficients recover the shift expansion") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        IntPoly p = random_nonzero_poly(rng, 5, 10);
        // p(y + t) = sum_j taylor_j(t) y^j evaluated at integer t, y
        Int t(3), y(2);
        Int direct = p.eval(Int(t + y));
        Int expanded(0);
        Int ypow(1);
        for (int j = 0; j <= p.degree(); ++j) {
            expanded += p.taylor_coefficient(static_cast<std::size_t>(j)).eval(t) * ypow;
            ypow *= y;
        }
        CHECK(direct == expanded);
    }
    CHECK(IntPoly{0, 0, 0, 1}.taylor_coefficient(2) == IntPoly{0, 3});
}

TEST_CASE("root bound dominates the largest root") {
    IntPoly p{550, -116, -5, 1};
    CHECK(p.root_bound() >= 12);  // largest root is 11
    CHECK(IntPoly{-4, 0, 1}.root_bound() >= 3);
}

TEST_CASE("printing") {
    CHECK(IntPoly{88, -21, 1}.to_string() == "x^2 - 21x + 88");
    CHECK(IntPoly{}.to_string() == "0");
    CHECK(IntPoly{0, -1}.to_string() == "-x");
}
