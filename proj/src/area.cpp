#include "binform/area.hpp"

#include "binform/roots.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binform {

namespace {

using boost::math::constants::pi;

Real gamma_r(const Real& x) { return boost::math::tgamma(x); }

std::vector<Int> dehomogenized(const BinaryForm& f, size_t& leading_zeros) {
    leading_zeros = 0;
    while (leading_zeros < f.coeffs.size() && f.coeffs[leading_zeros] == 0) ++leading_zeros;
    return {f.coeffs.begin() + leading_zeros, f.coeffs.end()};
}

Real newton_polish(const std::vector<Int>& p, Real x) {
    const int n = static_cast<int>(p.size()) - 1;
    for (int it = 0; it < 8; ++it) {
        Real v = 0, dv = 0;
        for (int i = 0; i <= n; ++i) {
            if (i < n) dv = dv * x + to_real(p[i]) * (n - i);
            v = v * x + to_real(p[i]);
        }
        if (dv == 0) break;
        x -= v / dv;
    }
    return x;
}

} // namespace

std::vector<Real> singular_angles(const BinaryForm& f) {
    size_t lead = 0;
    auto p = dehomogenized(f, lead);
    std::vector<Real> angles;
    if (lead > 0) angles.push_back(Real(0)); // root at infinity: direction (1,0)
    const int real_count = sturm_real_root_count(p);
    if (real_count > 0) {
        using C = boost::multiprecision::cpp_complex<64>;
        std::vector<C> cp;
        for (const auto& c : p) cp.emplace_back(to_real(c), Real(0));
        auto roots = durand_kerner(cp);
        std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) { return abs(a.imag()) < abs(b.imag()); });
        for (int i = 0; i < real_count; ++i) {
            if (abs(roots[i].imag()) > Real("1e-20"))
                throw std::logic_error("singular_angles: real/complex root mismatch");
            Real x0 = newton_polish(p, roots[i].real());
            angles.push_back(atan2(Real(1), x0)); // direction (x0, 1), angle in (0, pi)
        }
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

AreaEstimate a_f_quadrature(const BinaryForm& f, const Real& tol) {
    const int d = f.degree();
    if (d < 3) throw std::domain_error("a_f_quadrature: degree >= 3 required");
    if (discriminant(f) == 0) throw std::domain_error("a_f_quadrature: zero discriminant");
    if (tol <= 0) throw std::domain_error("a_f_quadrature: tol must be positive");

    AreaEstimate est;
    est.method = "quadrature";
    est.singular_angles = singular_angles(f);

    std::vector<Real> cuts{Real(0)};
    for (const auto& a : est.singular_angles)
        if (a > 0 && a < pi<Real>()) cuts.push_back(a);
    cuts.push_back(pi<Real>());

    const Real expo = Real(-2) / d;
    auto integrand = [&](const Real& t) {
        Real v = abs(evaluate(f, cos(t), sin(t)));
        return pow(v, expo);
    };

    boost::math::quadrature::tanh_sinh<Real> quad(14);
    Real total = 0, err_abs = 0;
    const Real term_tol = tol / (10 * static_cast<int>(cuts.size()));
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Real err = 0;
        Real part = quad.integrate(integrand, cuts[i], cuts[i + 1], term_tol, &err);
        total += part;
        err_abs += err * abs(part); // err is a relative estimate
    }
    if (!(err_abs <= tol))
        throw std::runtime_error("a_f_quadrature: tolerance unreachable; best estimate " + total.str(20));
    est.value = total;
    est.abs_error_bound = err_abs;
    return est;
}

Real a_f_closed_cubic(const Int& delta) {
    if (delta == 0) throw std::domain_error("a_f_closed_cubic: zero discriminant");
    const Real third = Real(1) / 3;
    Real base = gamma_r(third) * gamma_r(third) / gamma_r(2 * third);
    Real scale = delta > 0 ? Real(3) : sqrt(Real(3));
    return scale * base / pow(to_real(Int(abs(delta))), Real(1) / 6);
}

Real a_f_closed_binomial(const Int& a, const Int& b, int d) {
    if (a == 0 || b == 0 || d < 3) throw std::domain_error("a_f_closed_binomial: need a,b != 0 and d >= 3");
    const Real dd(d);
    const Real scale = pow(to_real(Int(abs(a * b))), Real(1) / d);
    if (d % 2 == 1) {
        Real t = 2 * gamma_r(1 - 2 / dd) * gamma_r(1 / dd) / gamma_r(1 - 1 / dd)
               + gamma_r(1 / dd) * gamma_r(1 / dd) / gamma_r(2 / dd);
        return t / (dd * scale);
    }
    if (a * b > 0) return 2 * gamma_r(1 / dd) * gamma_r(1 / dd) / gamma_r(2 / dd) / (dd * scale);
    return 4 * gamma_r(1 / dd) * gamma_r(1 - 2 / dd) / gamma_r(1 - 1 / dd) / (dd * scale);
}

Real circle_min_abs(const BinaryForm& f) {
    if (splitting_type(f).has_real_linear_factor)
        throw std::domain_error("circle_min_abs: form has a real linear factor");
    const int d = f.degree();
    std::vector<double> c;
    double sum_abs = 0;
    for (const auto& ci : f.coeffs) {
        double v = to_real(ci).convert_to<double>();
        c.push_back(v);
        sum_abs += std::abs(v);
    }
    const double lipschitz = d * sum_abs; // |d/dt F(cos t, sin t)| <= d * sum |c_i|
    const double pi_d = 3.14159265358979323846;
    double lb = -1, minval = 0;
    for (long n = 1 << 13; n <= (1L << 22); n *= 4) {
        minval = std::numeric_limits<double>::infinity();
        for (long i = 0; i < n; ++i) {
            double t = pi_d * (i + 0.5) / n;
            double x = std::cos(t), y = std::sin(t);
            double acc = 0, yp = 1;
            for (size_t k = 0; k < c.size(); ++k) {
                acc = acc * x + c[k] * yp;
                if (k + 1 < c.size()) yp *= y;
            }
            minval = std::min(minval, std::abs(acc));
        }
        lb = (minval - lipschitz * pi_d / (2 * n)) * (1 - 1e-9) - 1e-12;
        if (lb > 0.5 * minval) break;
    }
    if (lb <= 0) throw std::runtime_error("circle_min_abs: could not certify a positive minimum");
    return Real(lb);
}

} // namespace binform
