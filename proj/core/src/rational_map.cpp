#include "polycycle/rational_map.hpp"

#include <json.hpp>

#include <stdexcept>

namespace polycycle::maps {

RationalMap make_rational_map(const Field& F, Poly num, Poly den) {
    if (num.is_zero() || den.is_zero()) {
        throw std::invalid_argument("rational map needs nonzero numerator and denominator");
    }
    if (num.degree() != den.degree()) {
        throw std::invalid_argument("numerator and denominator degrees must match");
    }
    if (den.leading() != 1) throw std::invalid_argument("denominator must be monic");
    if (monic_gcd(F, num, den).degree() != 0) {
        throw std::invalid_argument("numerator and denominator must be coprime");
    }
    return RationalMap{std::move(num), std::move(den)};
}

ExtPoint eval_rational(const Field& F, const RationalMap& R, ExtPoint x) {
    if (x.is_infinity()) return ExtPoint::finite(R.num.leading());
    const Elem g = eval_poly(F, R.den, x.value());
    if (g == 0) return ExtPoint::infinity();
    const Elem f = eval_poly(F, R.num, x.value());
    return ExtPoint::finite(F.mul(f, F.inv(g)));
}

std::string rational_to_json(const RationalMap& R) {
    nlohmann::json j;
    j["num"] = R.num.coeffs;
    j["den"] = R.den.coeffs;
    return j.dump();
}

}  // namespace polycycle::maps
