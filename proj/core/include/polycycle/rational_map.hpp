#pragma once

#include "polycycle/poly.hpp"

#include <cstdint>
#include <string>

namespace polycycle::maps {

// A point of F_q ∪ {∞}.
class ExtPoint {
public:
    static ExtPoint finite(Elem v) { return ExtPoint(v, false); }
    static ExtPoint infinity() { return ExtPoint(0, true); }

    bool is_infinity() const { return infinite_; }
    Elem value() const { return value_; }  // meaningful only when finite

    bool operator==(const ExtPoint&) const = default;

private:
    ExtPoint(Elem v, bool inf) : value_(v), infinite_(inf) {}
    Elem value_;
    bool infinite_;
};

// f/g with deg f = deg g = d, g monic, and monic_gcd(f, g) = 1; the pair
// determines the map on F_q ∪ {∞} uniquely.
struct RationalMap {
    Poly num;
    Poly den;

    std::int64_t degree() const { return num.degree(); }
    bool operator==(const RationalMap&) const = default;
};

// Validates the invariants; throws std::invalid_argument otherwise.
RationalMap make_rational_map(const Field& F, Poly num, Poly den);

// Total on F_q ∪ {∞}: finite x with den(x)=0 maps to ∞, and ∞ maps to the
// leading coefficient of the numerator.
ExtPoint eval_rational(const Field& F, const RationalMap& R, ExtPoint x);

// {"num":[...],"den":[...]} with coefficient indices, constant term first.
std::string rational_to_json(const RationalMap& R);

}  // namespace polycycle::maps
