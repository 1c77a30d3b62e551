#include "binform/mat2.hpp"

#include <stdexcept>

namespace binform {

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2(e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]);
}

Mat2 Mat2::inverse() const {
    Rat d = det();
    if (d == 0) throw std::domain_error("Mat2::inverse: singular matrix");
    return Mat2(e[3] / d, -e[1] / d, -e[2] / d, e[0] / d);
}

std::strong_ordering Mat2::operator<=>(const Mat2& o) const {
    for (int i = 0; i < 4; ++i) {
        if (e[i] < o.e[i]) return std::strong_ordering::less;
        if (e[i] > o.e[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool Mat2::is_integral() const {
    for (const auto& x : e)
        if (den(x) != 1) return false;
    return true;
}

PrimitiveDecomposition primitive_decomposition(const Mat2& m) {
    Int a = 1;
    for (const auto& x : m.e) a = boost::multiprecision::lcm(a, den(x));
    PrimitiveDecomposition pd;
    pd.a = a;
    for (int i = 0; i < 4; ++i) pd.entries[i] = num(m.e[i]) * (a / den(m.e[i]));
    return pd;
}

int matrix_order(const Mat2& m, int max_order) {
    Mat2 p = m;
    const Mat2 id = Mat2::identity();
    for (int k = 1; k <= max_order; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    return 0;
}

} // namespace binform
