#ifndef BINFORM_NUMERIC_HPP
#define BINFORM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>
#include <string>

namespace binform {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Working real type: 64 decimal digits, enough headroom for a 1e-10
// quadrature tolerance and for rational reconstruction at 192-bit roots.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Real to_real(const Int& n) { return Real(n); }
inline Real to_real(const Rat& q) { return Real(num(q)) / Real(den(q)); }

// Integer square root if n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

// Integer d-th root if n is a perfect d-th power (n >= 0).
std::optional<Int> exact_root(const Int& n, unsigned d);

// Square root of a nonnegative rational, exact or nothing.
std::optional<Rat> exact_sqrt(const Rat& q);

// Best rational approximation p/q to x with q <= max_den (continued
// fractions). Returns nothing when no approximant with q <= max_den gets
// within tol of x.
std::optional<Rat> rational_reconstruct(const Real& x, const Int& max_den, const Real& tol);

std::string rat_string(const Rat& q);
std::string real_string(const Real& x, int digits = 20);

} // namespace binform

#endif
