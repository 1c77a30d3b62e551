#ifndef BINFORM_ROOTS_HPP
#define BINFORM_ROOTS_HPP

#include "binform/form.hpp"

#include <stdexcept>
#include <vector>

namespace binform {

// All roots of a squarefree polynomial (descending complex coefficients)
// by Durand-Kerner iteration at the precision of the complex type C.
template <class C>
std::vector<C> durand_kerner(const std::vector<C>& coeffs) {
    using R = typename C::value_type;
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    std::vector<C> c(coeffs);
    for (auto& ci : c) ci /= coeffs[0];
    std::vector<C> w(n);
    const C seed(R("0.4"), R("0.9"));
    C p(1, 0);
    for (int i = 0; i < n; ++i) {
        p *= seed;
        w[i] = p;
    }
    const R eps = pow(R(10), -static_cast<int>(std::numeric_limits<R>::digits10) + 6);
    for (int iter = 0; iter < 5000; ++iter) {
        R worst(0);
        for (int i = 0; i < n; ++i) {
            C num(c[0]);
            for (int k = 1; k <= n; ++k) num = num * w[i] + c[k];
            C den(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (w[i] - w[j]);
            C delta = num / den;
            w[i] -= delta;
            R a = abs(delta);
            if (a > worst) worst = a;
        }
        if (worst < eps) return w;
    }
    throw std::runtime_error("durand_kerner: no convergence (repeated roots?)");
}

// Root of F in P^1: (x : y), normalized to y = 1 or to (1, 0).
template <class C>
struct ProjRoot {
    C x, y;
    bool at_infinity() const { return y == C(0, 0); }
};

// The d distinct projective roots of a form with nonzero discriminant.
template <class C>
std::vector<ProjRoot<C>> projective_roots(const BinaryForm& f) {
    using R = typename C::value_type;
    std::vector<ProjRoot<C>> out;
    std::vector<C> c;
    size_t lead = 0;
    while (lead < f.coeffs.size() && f.coeffs[lead] == 0) ++lead;
    for (size_t i = lead; i < f.coeffs.size(); ++i) c.emplace_back(R(f.coeffs[i].str()), R(0));
    // each leading zero contributes a root at infinity; disc != 0 allows one
    for (size_t i = 0; i < lead; ++i) out.push_back({C(1, 0), C(0, 0)});
    // trailing zeros are roots at the origin of F(x,1)
    for (const auto& r : durand_kerner(c)) out.push_back({r, C(1, 0)});
    return out;
}

} // namespace binform

#endif
