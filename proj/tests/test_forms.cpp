#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/form.hpp"

#include <random>

using namespace binform;

namespace {

BinaryForm F(std::initializer_list<long long> c) {
    std::vector<Int> v;
    for (auto x : c) v.emplace_back(x);
    return BinaryForm(v);
}

Mat2 M(long long a, long long b, long long c, long long d) {
    return Mat2(Rat(a), Rat(b), Rat(c), Rat(d));
}

// cubic discriminant by the classical closed formula (test oracle)
Int cubic_disc(const BinaryForm& f) {
    const Int& b3 = f.coeffs[0];
    const Int& b2 = f.coeffs[1];
    const Int& b1 = f.coeffs[2];
    const Int& b0 = f.coeffs[3];
    return 18 * b3 * b2 * b1 * b0 - 4 * b2 * b2 * b2 * b0 + b2 * b2 * b1 * b1 - 4 * b3 * b1 * b1 * b1
         - 27 * b3 * b3 * b0 * b0;
}

std::mt19937_64 rng(20260826);

long long rnd(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

} // namespace

TEST_CASE("parsing and text round-trip") {
    auto f = parse_form("1 0 0 1");
    CHECK(f.degree() == 3);
    CHECK(f.coeffs == std::vector<Int>{1, 0, 0, 1});
    CHECK(parse_form(f.text()) == f);
    CHECK(parse_form("  -3\t0 \n 5 7 ") == F({-3, 0, 5, 7}));
    CHECK_THROWS_AS(parse_form(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("1 two 3 4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("0 0 0 0"), std::invalid_argument);
}

TEST_CASE("evaluate") {
    auto cube = F({1, 0, 0, 1});
    CHECK(evaluate(cube, Int(1), Int(12)) == 1729);
    CHECK(evaluate(cube, Int(0), Int(0)) == 0);
    CHECK(evaluate(F({1, 0, 0, 0, 16}), Int(1), Int(1)) == 17);
    CHECK(evaluate(F({2, -1, 3}), Int(5), Int(7)) == 2 * 25 - 35 + 3 * 49);
}

TEST_CASE("act: known images") {
    auto cube = F({1, 0, 0, 1});
    CHECK(act(cube, M(0, 1, 1, 0)) == cube.rational());
    auto shear = act(cube, M(1, 1, 0, 1));
    CHECK(shear == FormQ{{Rat(1), Rat(3), Rat(3), Rat(2)}});
    CHECK_THROWS(act(cube, M(1, 2, 2, 4)));
}

TEST_CASE("act is a right action: act(act(F,A),B) = act(F,A*B)") {
    for (int trial = 0; trial < 30; ++trial) {
        int d = static_cast<int>(rnd(3, 6));
        std::vector<Int> c;
        for (int i = 0; i <= d; ++i) c.emplace_back(rnd(-9, 9));
        if (c[0] == 0) c[0] = 1;
        BinaryForm f(c);
        Mat2 a = M(rnd(-5, 5), rnd(-5, 5), rnd(-5, 5), rnd(-5, 5));
        Mat2 b = M(rnd(-5, 5), rnd(-5, 5), rnd(-5, 5), rnd(-5, 5));
        if (a.det() == 0 || b.det() == 0) continue;
        CHECK(act(act(f, a), b) == act(f, a * b));
    }
}

TEST_CASE("discriminant: pinned values") {
    CHECK(discriminant(F({1, 0, 0, 1})) == -27);
    CHECK(discriminant(F({1, 0, -3, -1})) == 81);
    CHECK(discriminant(F({1, 0, 0, 2})) == -108);
    CHECK(discriminant(F({1, 0, 0, 0, 1})) == 256);
    CHECK(discriminant(F({1, 0, 0, 0, 16})) == 1048576); // 4^4 * 1 * 16^3
}

TEST_CASE("discriminant agrees with the cubic closed formula") {
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> c{rnd(-20, 20), rnd(-20, 20), rnd(-20, 20), rnd(-20, 20)};
        if (c[0] == 0) c[0] = 1;
        BinaryForm f(c);
        CHECK(discriminant(f) == cubic_disc(f));
    }
}

TEST_CASE("discriminant covariance under act") {
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rnd(3, 5));
        std::vector<Int> c;
        for (int i = 0; i <= d; ++i) c.emplace_back(rnd(-9, 9));
        if (c[0] == 0) c[0] = 2;
        BinaryForm f(c);
        Mat2 a = M(rnd(-4, 4), rnd(-4, 4), rnd(-4, 4), rnd(-4, 4));
        if (a.det() == 0) continue;
        Rat scale = 1;
        for (int i = 0; i < d * (d - 1); ++i) scale *= a.det();
        CHECK(discriminant(act(f, a)) == scale * Rat(discriminant(f)));
    }
}

TEST_CASE("hessian: pinned values and B^2-4AC identity") {
    auto h = hessian(F({1, 0, -3, -1}));
    CHECK(h.a == 9);
    CHECK(h.b == 9);
    CHECK(h.c == 9);
    h = hessian(F({1, 0, -12, -8}));
    CHECK(h.a == 36);
    CHECK(h.b == 72);
    CHECK(h.c == 144);
    h = hessian(F({1, 0, 0, 1}));
    CHECK(h.a == 0);
    CHECK(h.b == -9);
    CHECK(h.c == 0);
    CHECK_THROWS(hessian(F({1, 0, 0, 0, 1})));
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> c{rnd(-15, 15), rnd(-15, 15), rnd(-15, 15), rnd(-15, 15)};
        if (c[0] == 0) c[0] = 1;
        BinaryForm f(c);
        auto hc = hessian(f);
        CHECK(hc.b * hc.b - 4 * hc.a * hc.c == -3 * discriminant(f));
    }
}

TEST_CASE("splitting type") {
    auto s = splitting_type(F({1, 0, 0, 1}));
    CHECK(s.has_real_linear_factor);
    CHECK(s.reducible_over_q);
    s = splitting_type(F({1, 0, 0, 0, 1}));
    CHECK_FALSE(s.has_real_linear_factor);
    s = splitting_type(F({1, 0, -3, -1}));
    CHECK(s.has_real_linear_factor);
    CHECK_FALSE(s.reducible_over_q);
    CHECK(s.irreducible_cubic);
    // indefinite quartic
    CHECK(splitting_type(F({1, 0, 0, 0, -2})).has_real_linear_factor);
    // odd degree always has a real factor
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> c;
        for (int i = 0; i <= 5; ++i) c.emplace_back(rnd(-9, 9));
        if (c[0] == 0) c[0] = 1;
        BinaryForm f(c);
        if (discriminant(f) == 0) continue;
        CHECK(splitting_type(f).has_real_linear_factor);
    }
}

TEST_CASE("sturm real root counting") {
    CHECK(sturm_real_root_count({1, 0, -2}) == 2);       // x^2-2
    CHECK(sturm_real_root_count({1, 0, 2}) == 0);        // x^2+2
    CHECK(sturm_real_root_count({1, 0, -3, -1}) == 3);
    CHECK(sturm_real_root_count({1, 0, 0, 1}) == 1);
    CHECK(sturm_real_root_count_in({1, 0, -2}, Rat(0), Rat(2)) == 1);
}

TEST_CASE("beta exponent tables") {
    auto b = beta_exponent(F({1, 0, -3, -1})); // irreducible cubic
    CHECK(b.is_rational);
    CHECK(b.exact == Rat(12, 19));
    b = beta_exponent(F({1, 0, 0, 1})); // reducible cubic
    CHECK(b.exact == Rat(1, 2));
    b = beta_exponent(F({1, 0, 0, 0, 1})); // definite quartic
    CHECK(b.exact == Rat(3, 8));
    b = beta_exponent(F({1, 0, 0, 0, -2})); // indefinite quartic: 3/((4-2)*2+3)
    CHECK(b.is_rational);
    CHECK(b.exact == Rat(3, 7));
    b = beta_exponent(F({1, 0, 0, 0, 0, 2})); // quintic: 3/((5-2)*sqrt(5)+3)
    CHECK_FALSE(b.is_rational);
    CHECK(abs(b.approx - Real(3) / (3 * sqrt(Real(5)) + 3)) < Real("1e-30"));
    b = beta_exponent(F({1, 0, 0, 0, 0, 0, 1})); // definite sextic: 1/(2 sqrt 6)
    CHECK_FALSE(b.is_rational);
    CHECK(abs(b.approx - 1 / (2 * sqrt(Real(6)))) < Real("1e-30"));
    b = beta_exponent(F({1, 0, 0, 0, 0, 0, 0, 0, 1})); // definite octic: 1/(d-1)
    CHECK(b.exact == Rat(1, 7));
    b = beta_exponent(F({1, 1, 0, 0, 0, 0, 0, 0, 0, 1})); // d=9: 1/(d-1)
    CHECK(b.exact == Rat(1, 8));
}
