#include "binform/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace binform {

namespace {

bool all_zero(const std::vector<Int>& c) {
    return std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
}

// determinant by exact Gaussian elimination over Q
Rat det_rational(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    Rat d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

// product of homogeneous coefficient vectors
std::vector<Rat> conv(const std::vector<Rat>& p, const std::vector<Rat>& q) {
    std::vector<Rat> r(p.size() + q.size() - 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    std::vector<Int> divs{1};
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    if (n > 1) {
        size_t base = divs.size();
        for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
    }
    return divs;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<Rat> trim_leading(std::vector<Rat> p) {
    size_t k = 0;
    while (k + 1 < p.size() && p[k] == 0) ++k;
    p.erase(p.begin(), p.begin() + k);
    return p;
}

// Sturm chain of a univariate polynomial (descending coefficients).
std::vector<std::vector<Rat>> sturm_chain(std::vector<Rat> p0) {
    std::vector<std::vector<Rat>> chain;
    p0 = trim_leading(std::move(p0));
    if (p0.size() == 1 && p0[0] == 0) return chain;
    chain.push_back(p0);
    if (p0.size() > 1) {
        std::vector<Rat> p1(p0.size() - 1);
        int n = static_cast<int>(p0.size()) - 1;
        for (int i = 0; i < n; ++i) p1[i] = p0[i] * (n - i);
        chain.push_back(trim_leading(std::move(p1)));
    }
    while (chain.back().size() > 1) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        // remainder of a by b
        std::vector<Rat> r = trim_leading(a);
        while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
            Rat f = r[0] / b[0];
            for (size_t i = 0; i < b.size(); ++i) r[i] -= f * b[i];
            r = trim_leading(std::move(r));
        }
        if (r.size() == 1 && r[0] == 0) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

Rat eval_poly(const std::vector<Rat>& p, const Rat& x) {
    Rat acc = 0;
    for (const auto& c : p) acc = acc * x + c;
    return acc;
}

} // namespace

bool FormQ::is_integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return den(c) == 1; });
}

BinaryForm::BinaryForm(std::vector<Int> c) : coeffs(std::move(c)) {
    if (coeffs.size() < 2) throw std::invalid_argument("binary form needs degree >= 1");
    if (all_zero(coeffs)) throw std::invalid_argument("binary form must be nonzero");
}

FormQ BinaryForm::rational() const {
    FormQ f;
    f.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) f.coeffs.emplace_back(c);
    return f;
}

std::string BinaryForm::text() const {
    std::ostringstream os;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ' ';
        os << coeffs[i];
    }
    return os.str();
}

BinaryForm parse_form(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tokens;
    std::string t;
    while (is >> t) tokens.push_back(t);
    return parse_form(tokens);
}

BinaryForm parse_form(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw std::invalid_argument("empty coefficient list");
    std::vector<Int> c;
    c.reserve(tokens.size());
    for (const auto& tok : tokens) {
        try {
            c.emplace_back(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient: " + tok);
        }
    }
    return BinaryForm(std::move(c));
}

Int evaluate(const BinaryForm& f, const Int& x, const Int& y) {
    Int acc = 0, yp = 1;
    // Horner in x with coefficients c_i y^i
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        acc = acc * x + f.coeffs[i] * yp;
        if (i + 1 < f.coeffs.size()) yp *= y;
    }
    return acc;
}

Rat evaluate(const FormQ& f, const Rat& x, const Rat& y) {
    Rat acc = 0, yp = 1;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        acc = acc * x + f.coeffs[i] * yp;
        if (i + 1 < f.coeffs.size()) yp *= y;
    }
    return acc;
}

Real evaluate(const BinaryForm& f, const Real& x, const Real& y) {
    Real acc = 0, yp = 1;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        acc = acc * x + to_real(f.coeffs[i]) * yp;
        if (i + 1 < f.coeffs.size()) yp *= y;
    }
    return acc;
}

FormQ act(const FormQ& f, const Mat2& a) {
    if (a.det() == 0) throw std::domain_error("act: singular matrix");
    const int d = f.degree();
    // powers of the two image linear forms
    std::vector<std::vector<Rat>> pow1(d + 1), pow2(d + 1);
    pow1[0] = {Rat(1)};
    pow2[0] = {Rat(1)};
    const std::vector<Rat> l1{a.e[0], a.e[1]}, l2{a.e[2], a.e[3]};
    for (int k = 1; k <= d; ++k) {
        pow1[k] = conv(pow1[k - 1], l1);
        pow2[k] = conv(pow2[k - 1], l2);
    }
    FormQ out;
    out.coeffs.assign(d + 1, Rat(0));
    for (int i = 0; i <= d; ++i) {
        if (f.coeffs[i] == 0) continue;
        auto term = conv(pow1[d - i], pow2[i]);
        for (int j = 0; j <= d; ++j) out.coeffs[j] += f.coeffs[i] * term[j];
    }
    return out;
}

FormQ act(const BinaryForm& f, const Mat2& a) { return act(f.rational(), a); }

Rat discriminant(const FormQ& f) {
    const int d = f.degree();
    if (d < 2) throw std::domain_error("discriminant needs degree >= 2");
    // partial derivatives as degree d-1 binary forms
    std::vector<Rat> fx(d), fy(d);
    for (int i = 0; i < d; ++i) fx[i] = f.coeffs[i] * (d - i);
    for (int i = 0; i < d; ++i) fy[i] = f.coeffs[i + 1] * (i + 1);
    // Sylvester matrix of two degree d-1 forms, size 2(d-1)
    const int n = 2 * (d - 1);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int r = 0; r < d - 1; ++r)
        for (int i = 0; i < d; ++i) m[r][r + i] = fx[i];
    for (int r = 0; r < d - 1; ++r)
        for (int i = 0; i < d; ++i) m[d - 1 + r][r + i] = fy[i];
    Rat res = det_rational(std::move(m));
    Rat dpow = 1;
    for (int i = 0; i < d - 2; ++i) dpow *= d;
    Rat disc = res / dpow;
    if ((Int(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

Int discriminant(const BinaryForm& f) {
    Rat d = discriminant(f.rational());
    if (den(d) != 1) throw std::logic_error("integer form with non-integer discriminant");
    return num(d);
}

HessianCoeffs hessian(const BinaryForm& f) {
    if (f.degree() != 3) throw std::domain_error("hessian: cubic forms only");
    const Int &b3 = f.coeffs[0], &b2 = f.coeffs[1], &b1 = f.coeffs[2], &b0 = f.coeffs[3];
    return {b2 * b2 - 3 * b3 * b1, b2 * b1 - 9 * b3 * b0, b1 * b1 - 3 * b2 * b0};
}

int sturm_real_root_count(const std::vector<Int>& poly) {
    std::vector<Rat> p(poly.begin(), poly.end());
    auto chain = sturm_chain(p);
    if (chain.empty()) return 0;
    std::vector<int> at_minf, at_pinf;
    for (const auto& q : chain) {
        int lead = sign_of(q[0]);
        int deg = static_cast<int>(q.size()) - 1;
        at_pinf.push_back(lead);
        at_minf.push_back(deg % 2 == 0 ? lead : -lead);
    }
    return sign_variations(at_minf) - sign_variations(at_pinf);
}

int sturm_real_root_count_in(const std::vector<Int>& poly, const Rat& lo, const Rat& hi) {
    std::vector<Rat> p(poly.begin(), poly.end());
    auto chain = sturm_chain(p);
    if (chain.empty()) return 0;
    std::vector<int> at_lo, at_hi;
    for (const auto& q : chain) {
        at_lo.push_back(sign_of(eval_poly(q, lo)));
        at_hi.push_back(sign_of(eval_poly(q, hi)));
    }
    return sign_variations(at_lo) - sign_variations(at_hi);
}

SplittingType splitting_type(const BinaryForm& f) {
    if (discriminant(f) == 0) throw std::domain_error("splitting_type: zero discriminant");
    const int d = f.degree();
    SplittingType st;
    if (d % 2 == 1) {
        st.has_real_linear_factor = true;
    } else if (f.coeffs[0] == 0) {
        st.has_real_linear_factor = true; // root at infinity
    } else {
        st.has_real_linear_factor = sturm_real_root_count(f.coeffs) > 0;
    }
    if (d == 3) {
        st.reducible_over_q = false;
        if (f.coeffs[0] == 0 || f.coeffs[3] == 0) {
            st.reducible_over_q = true; // divisible by y or by x
        } else {
            // rational root test on the primitive part of F(x,1)
            Int content = 0;
            for (const auto& c : f.coeffs) content = boost::multiprecision::gcd(content, c);
            std::vector<Int> p;
            for (const auto& c : f.coeffs) p.push_back(c / content);
            for (const auto& pn : positive_divisors(p[3])) {
                if (st.reducible_over_q) break;
                for (const auto& qn : positive_divisors(p[0])) {
                    if (boost::multiprecision::gcd(pn, qn) != 1) continue;
                    Rat r(pn, qn);
                    std::vector<Rat> pr(p.begin(), p.end());
                    if (eval_poly(pr, r) == 0 || eval_poly(pr, -r) == 0) {
                        st.reducible_over_q = true;
                        break;
                    }
                }
            }
        }
        st.irreducible_cubic = !st.reducible_over_q;
    }
    return st;
}

BetaValue beta_exponent(const BinaryForm& f) {
    const int d = f.degree();
    if (d < 3) throw std::domain_error("beta_exponent: degree >= 3 required");
    SplittingType st = splitting_type(f); // checks disc != 0
    BetaValue b;
    auto set_rational = [&b](const Rat& q) {
        b.is_rational = true;
        b.exact = q;
        b.symbolic = rat_string(q);
        b.approx = to_real(q);
    };
    if (st.has_real_linear_factor) {
        if (d == 3) {
            set_rational(st.reducible_over_q ? Rat(1, 2) : Rat(12, 19));
        } else if (d <= 8) {
            auto rd = exact_sqrt(Int(d));
            if (rd) {
                set_rational(Rat(3, (d - 2) * (*rd) + 3));
            } else {
                b.is_rational = false;
                b.symbolic = "3/(" + std::to_string(d - 2) + "*sqrt(" + std::to_string(d) + ")+3)";
                b.approx = Real(3) / ((d - 2) * sqrt(Real(d)) + 3);
            }
        } else {
            set_rational(Rat(1, d - 1));
        }
    } else {
        if (d == 4) {
            set_rational(Rat(3, 8));
        } else if (d == 6) {
            b.is_rational = false;
            b.symbolic = "1/(2*sqrt(6))";
            b.approx = Real(1) / (2 * sqrt(Real(6)));
        } else {
            set_rational(Rat(1, d - 1));
        }
    }
    return b;
}

} // namespace binform
