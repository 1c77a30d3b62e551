#ifndef BINFORM_FORM_HPP
#define BINFORM_FORM_HPP

#include "binform/mat2.hpp"
#include "binform/numeric.hpp"

#include <string>
#include <vector>

namespace binform {

// Homogeneous polynomial in x,y with rational coefficients, stored in
// descending powers of x: coeffs[i] multiplies x^(d-i) y^i.
struct FormQ {
    std::vector<Rat> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_integral() const;
    bool operator==(const FormQ& o) const = default;
};

// Integer binary form F(x,y), coefficient of x^d first.
struct BinaryForm {
    std::vector<Int> coeffs;

    explicit BinaryForm(std::vector<Int> c);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    FormQ rational() const;
    std::string text() const; // whitespace-separated coefficient list

    bool operator==(const BinaryForm& o) const = default;
};

// Parses the whitespace-separated integer coefficient list, leading
// coefficient (of x^d) first. Throws std::invalid_argument on bad input.
BinaryForm parse_form(const std::string& text);
BinaryForm parse_form(const std::vector<std::string>& tokens);

Int evaluate(const BinaryForm& f, const Int& x, const Int& y);
Rat evaluate(const FormQ& f, const Rat& x, const Rat& y);
Real evaluate(const BinaryForm& f, const Real& x, const Real& y);

// F_A(x,y) = F(a1 x + a2 y, a3 x + a4 y). Rejects singular A.
FormQ act(const FormQ& f, const Mat2& a);
FormQ act(const BinaryForm& f, const Mat2& a);

// Exact discriminant via the Sylvester resultant of the partial
// derivatives: disc = (-1)^(d(d-1)/2) Res(F_x, F_y) / d^(d-2).
// Normalized so that the classical cubic formula holds.
Rat discriminant(const FormQ& f);
Int discriminant(const BinaryForm& f);

// Hessian covariant coefficients (A, B, C) of a cubic.
struct HessianCoeffs {
    Int a, b, c;
};
HessianCoeffs hessian(const BinaryForm& f); // requires d == 3

struct SplittingType {
    bool has_real_linear_factor = false;
    bool reducible_over_q = false; // meaningful for d == 3 only
    bool irreducible_cubic = false;
};
SplittingType splitting_type(const BinaryForm& f); // requires disc != 0

// Error exponent beta_F; exact rational when the table entry is rational,
// otherwise a surd kept symbolically alongside a decimal rendering.
struct BetaValue {
    bool is_rational = true;
    Rat exact;          // valid when is_rational
    std::string symbolic; // e.g. "3/(2*sqrt(5)+3)"
    Real approx;
};
BetaValue beta_exponent(const BinaryForm& f); // requires disc != 0, d >= 3

// Number of distinct real roots of the (possibly non-monic) integer
// polynomial given by descending coefficients, by Sturm's theorem.
int sturm_real_root_count(const std::vector<Int>& poly);
int sturm_real_root_count_in(const std::vector<Int>& poly, const Rat& lo, const Rat& hi);

} // namespace binform

#endif
