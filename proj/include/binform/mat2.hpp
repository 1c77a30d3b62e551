#ifndef BINFORM_MAT2_HPP
#define BINFORM_MAT2_HPP

#include "binform/numeric.hpp"

#include <array>
#include <compare>
#include <vector>

namespace binform {

// 2x2 matrix over the rationals, row-major entries (a1 a2; a3 a4).
struct Mat2 {
    std::array<Rat, 4> e{};

    Mat2() = default;
    Mat2(Rat a1, Rat a2, Rat a3, Rat a4) : e{std::move(a1), std::move(a2), std::move(a3), std::move(a4)} {}

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }

    Rat det() const { return e[0] * e[3] - e[1] * e[2]; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const; // throws std::domain_error on det == 0
    Mat2 operator-() const { return Mat2(-e[0], -e[1], -e[2], -e[3]); }

    bool operator==(const Mat2& o) const { return e == o.e; }
    // lexicographic on entries, used for deterministic output ordering
    std::strong_ordering operator<=>(const Mat2& o) const;

    // image of a column vector
    std::array<Rat, 2> apply(const Rat& x, const Rat& y) const {
        return {e[0] * x + e[1] * y, e[2] * x + e[3] * y};
    }
    bool is_integral() const;
};

// A = (1/a)(a1 a2; a3 a4) with a > 0 the least common denominator of the
// entries. When |det A| = 1 the four integers are automatically coprime.
struct PrimitiveDecomposition {
    Int a;
    std::array<Int, 4> entries;
};

PrimitiveDecomposition primitive_decomposition(const Mat2& m);

// multiplicative order, or 0 if it exceeds max_order
int matrix_order(const Mat2& m, int max_order = 12);

} // namespace binform

#endif
