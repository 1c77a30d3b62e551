#ifndef BINFORM_AREA_HPP
#define BINFORM_AREA_HPP

#include "binform/form.hpp"
#include "binform/numeric.hpp"

#include <string>
#include <vector>

namespace binform {

struct AreaEstimate {
    Real value = 0;
    Real abs_error_bound = 0;
    std::string method; // quadrature | closed_cubic | closed_binomial
    std::vector<Real> singular_angles; // radians, in [0, pi)
};

// A_F = area of {|F| <= 1}, by the polar reduction
// A_F = integral over [0,pi) of |F(cos t, sin t)|^(-2/d) dt,
// split at the angles of the real linear factors where the integrand has
// an algebraic singularity of exponent 2/d < 1.
AreaEstimate a_f_quadrature(const BinaryForm& f, const Real& tol = Real("1e-10"));

// Cubic closed form scaled by |disc|^(-1/6).
Real a_f_closed_cubic(const Int& delta);

// Closed form for a*x^d + b*y^d (three branches by parity and sign of ab).
Real a_f_closed_binomial(const Int& a, const Int& b, int d);

// Rigorous positive lower bound for min |F| on the unit circle; requires
// F without real linear factor. Used to size exact enumeration boxes.
Real circle_min_abs(const BinaryForm& f);

// Angles in [0, pi) where F vanishes on the unit circle.
std::vector<Real> singular_angles(const BinaryForm& f);

} // namespace binform

#endif
