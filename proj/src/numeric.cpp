#include "binform/numeric.hpp"

#include <sstream>

namespace binform {

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Int> exact_root(const Int& n, unsigned d) {
    if (n < 0) return std::nullopt;
    if (n == 0 || n == 1 || d == 1) return n;
    // bracket by bit length, then binary search
    Int lo = 1, hi = Int(1) << (boost::multiprecision::msb(n) / d + 2);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, d) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (boost::multiprecision::pow(lo, d) == n) return lo;
    return std::nullopt;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto p = exact_sqrt(num(q));
    auto d = exact_sqrt(den(q));
    if (p && d) return Rat(*p, *d);
    return std::nullopt;
}

std::optional<Rat> rational_reconstruct(const Real& x, const Int& max_den, const Real& tol) {
    // continued fraction convergents p_k/q_k until q exceeds max_den
    Real xi = x;
    Int p_prev = 1, q_prev = 0, p = 0, q = 1; // p/q starts as 0/1 after first step
    bool first = true;
    Int pk = 0, qk = 1;
    for (int iter = 0; iter < 200; ++iter) {
        Real fl = floor(xi);
        Int a = fl.convert_to<Int>();
        Int pn = first ? a : a * pk + p_prev;
        Int qn = first ? Int(1) : a * qk + q_prev;
        if (!first && qn > max_den) break;
        p_prev = first ? Int(1) : pk;
        q_prev = first ? Int(0) : qk;
        pk = pn;
        qk = qn;
        first = false;
        Real frac = xi - fl;
        if (frac < Real("1e-60")) break;
        xi = 1 / frac;
    }
    if (qk == 0) return std::nullopt;
    Rat cand(pk, qk);
    if (abs(to_real(cand) - x) <= tol) return cand;
    return std::nullopt;
}

std::string rat_string(const Rat& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << "/" << den(q);
    return os.str();
}

std::string real_string(const Real& x, int digits) {
    return x.str(digits);
}

} // namespace binform
