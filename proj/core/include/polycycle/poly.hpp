#pragma once

#include "polycycle/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polycycle::maps {

using gf::Elem;
using gf::Field;

// Dense polynomial over F_q, coefficients indexed by power (constant term
// first).  The zero polynomial is the empty vector; nonzero polynomials keep
// a nonzero leading coefficient, so degree() is coeffs.size() - 1 and -1
// stands in for the zero polynomial's undefined degree.
struct Poly {
    std::vector<Elem> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    Elem leading() const { return coeffs.back(); }
    Elem coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    bool operator==(const Poly&) const = default;
};

// Trims leading zeros and validates coefficient range.
Poly poly_from_coeffs(const Field& F, std::vector<Elem> coeffs);
Poly poly_constant(const Field& F, Elem c);
inline Poly poly_zero() { return {}; }

Elem eval_poly(const Field& F, const Poly& f, Elem x);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, Elem c);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);

Poly make_monic(const Field& F, const Poly& a);

// Greatest monic common divisor; the constant 1 when coprime.  Throws when
// both arguments are zero.
Poly monic_gcd(const Field& F, const Poly& a, const Poly& b);

// Unique polynomial of degree < points.size() through the given points.
// x-values must be distinct.
Poly interpolate(const Field& F, const std::vector<std::pair<Elem, Elem>>& points);

// JSON array of coefficient indices, constant term first.
std::string poly_to_json(const Poly& f);

}  // namespace polycycle::maps
