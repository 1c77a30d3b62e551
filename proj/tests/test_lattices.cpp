#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/lattice.hpp"

#include <numeric>
#include <random>

using namespace binform;

namespace {

BinaryForm F(std::initializer_list<long long> c) {
    std::vector<Int> v;
    for (auto x : c) v.emplace_back(x);
    return BinaryForm(v);
}

Mat2 M(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return Mat2(a, b, c, d);
}

std::mt19937_64 rng(1357924680);

long long rnd(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Mat2 random_integral_invertible(long long bound) {
    for (;;) {
        Mat2 t = M(Rat(rnd(-bound, bound)), Rat(rnd(-bound, bound)), Rat(rnd(-bound, bound)),
                   Rat(rnd(-bound, bound)));
        if (t.det() != 0) return t;
    }
}

// random rational matrix with |det| = 1: conjugate a lattice-point rotation
Mat2 random_det1(long long bound) {
    const Mat2 seeds[] = {M(0, 1, 1, 0), M(0, 1, -1, 0), M(0, 1, -1, -1), M(1, 0, 0, -1)};
    Mat2 t = random_integral_invertible(bound);
    const Mat2& s = seeds[rnd(0, 3)];
    return t.inverse() * s * t;
}

} // namespace

TEST_CASE("HNF canonical form") {
    auto l = Lattice2::from_generators({{Int(2), Int(0)}, {Int(0), Int(3)}});
    CHECK(l == Lattice2{2, 0, 3});
    CHECK(l.det() == 6);
    // generators in general position
    l = Lattice2::from_generators({{Int(4), Int(6)}, {Int(6), Int(10)}});
    CHECK(l.det() == 4); // |4*10-6*6|
    CHECK(l.contains(Int(4), Int(6)));
    CHECK(l.contains(Int(6), Int(10)));
    CHECK(l.contains(Int(2), Int(4))); // (6,10)-(4,6)
    CHECK_FALSE(l.contains(Int(1), Int(0)));
    // negative generators normalize to positive diagonal
    l = Lattice2::from_generators({{Int(-2), Int(1)}, {Int(0), Int(-5)}});
    CHECK(l.a > 0);
    CHECK(l.c > 0);
    CHECK(l.b >= 0);
    CHECK(l.b < l.c);
}

TEST_CASE("lattice_of: pinned examples") {
    CHECK(lattice_of(M(1, 0, 0, 1)) == Lattice2::full());
    // (0 1/2; 2 0): integral image iff v even
    auto l = lattice_of(M(0, Rat(1, 2), 2, 0));
    CHECK(l.det() == 2);
    CHECK(l.contains(Int(0), Int(2)));
    CHECK(l.contains(Int(1), Int(0)));
    CHECK_FALSE(l.contains(Int(0), Int(1)));
    // (1/2)(0 4; -1 -2): u even
    l = lattice_of(M(0, 2, Rat(-1, 2), -1));
    CHECK(l.det() == 2);
    CHECK(l.contains(Int(2), Int(0)));
    CHECK(l.contains(Int(0), Int(1)));
    CHECK_FALSE(l.contains(Int(1), Int(0)));
    CHECK_THROWS(lattice_of(M(2, 0, 0, 1))); // |det| != 1
}

TEST_CASE("lattice_of determinant equals primitive denominator (Lemma 3.1)") {
    for (int trial = 0; trial < 100; ++trial) {
        Mat2 a = random_det1(8);
        REQUIRE(abs(a.det()) == 1);
        auto pd = primitive_decomposition(a);
        CHECK(lattice_of(a).det() == pd.a);
    }
}

TEST_CASE("intersect") {
    auto v_even = lattice_of(M(0, Rat(1, 2), 2, 0));
    auto u_even = lattice_of(M(0, 2, Rat(-1, 2), -1));
    CHECK(intersect(Lattice2::full(), v_even) == v_even);
    CHECK(intersect(v_even, v_even) == v_even);
    auto both = intersect(u_even, v_even);
    CHECK(both == Lattice2{2, 0, 2});
    CHECK(both.det() == 4);
}

TEST_CASE("fixed lattice") {
    auto g = compute_aut(F({1, 0, 0, 0, 1}));
    CHECK(fixed_lattice(g).m == 1);
    g = compute_aut(F({1, 0, 0, 8}));
    CHECK(fixed_lattice(g).m == 2);
    g = compute_aut(F({1, 0, -12, -8}));
    CHECK(g.label == GroupLabel::C3);
    CHECK(fixed_lattice(g).m == 2);
}

TEST_CASE("dihedral invariants") {
    auto g = compute_aut(F({1, 0, 0, 0, 16}));
    auto inv = dihedral_invariants(g);
    REQUIRE(inv.m123.size() == 3);
    CHECK(inv.m123 == std::vector<Int>{1, 2, 2});
    CHECK(fixed_lattice(g).m == 2);
    g = compute_aut(F({1, 0, 0, 0, 1}));
    inv = dihedral_invariants(g);
    CHECK(inv.m123 == std::vector<Int>{1, 1, 1});
    g = compute_aut(F({1, 0, 1, 0, 1}));
    inv = dihedral_invariants(g);
    CHECK(inv.m123 == std::vector<Int>{1, 1, 1});
    CHECK_THROWS(dihedral_invariants(compute_aut(F({1, 0, 0, 1})))); // D1
}

TEST_CASE("order-3 identity Lambda(A) = Lambda(A^2) (Lemma 3.2)") {
    CHECK(check_order3_identity(M(0, 1, -1, -1)));
    CHECK(check_order3_identity(M(0, 2, Rat(-1, 2), -1)));
    int done = 0;
    while (done < 50) {
        Mat2 t = random_integral_invertible(7);
        if (abs(num(t.det())) > 50) continue;
        Mat2 a = t.inverse() * M(0, 1, -1, -1) * t;
        CHECK(check_order3_identity(a));
        ++done;
    }
    CHECK_THROWS(check_order3_identity(M(0, 1, 1, 0))); // order 2
}

TEST_CASE("lcm and pairwise intersection relations (Lemma 3.2)") {
    CHECK(check_lcm_relations(compute_aut(F({1, 0, 0, 0, 1}))));
    CHECK(check_lcm_relations(compute_aut(F({1, 0, 0, 0, 16}))));
    CHECK(check_lcm_relations(compute_aut(F({2, 6, 11, 12, 11, 6, 2})))); // D6
    CHECK(check_lcm_relations(compute_aut(F({0, 1, 1, 0}))));             // D3
    int done = 0;
    while (done < 20) {
        Mat2 t = random_integral_invertible(4);
        const BinaryForm& base = (done % 2) ? F({1, 0, 0, 0, 1}) : F({0, 1, 1, 0});
        FormQ fq = act(base, t);
        if (!fq.is_integral()) continue;
        std::vector<Int> c;
        for (const auto& q : fq.coeffs) c.push_back(num(q));
        auto g = compute_aut(BinaryForm(c));
        REQUIRE((g.label == GroupLabel::D4 || g.label == GroupLabel::D3));
        CHECK(check_lcm_relations(g));
        ++done;
    }
}

TEST_CASE("hooley m") {
    CHECK(hooley_m(F({1, 0, -3, -1})) == 1);
    CHECK(hooley_m(F({1, 0, -12, -8})) == 2);
    CHECK(hooley_m(F({1, 1, -2, -1})) == 1); // Delta = 49, hessian gcd 7
    CHECK_THROWS(hooley_m(F({1, 0, 0, 1}))); // Delta = -27 not a positive square
}

TEST_CASE("hooley m equals fixed-lattice m on C3 conjugates") {
    const BinaryForm base = F({1, 0, -3, -1});
    int done = 0;
    while (done < 10) {
        Mat2 t = random_integral_invertible(5);
        FormQ fq = act(base, t);
        if (!fq.is_integral()) continue;
        std::vector<Int> c;
        for (const auto& q : fq.coeffs) c.push_back(num(q));
        BinaryForm f2(c);
        auto g = compute_aut(f2);
        if (g.label != GroupLabel::C3) continue;
        CHECK(hooley_m(f2) == Rat(fixed_lattice(g).m));
        ++done;
    }
}
