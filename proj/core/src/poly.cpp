#include "polycycle/poly.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace polycycle::maps {

namespace {
void trim(std::vector<Elem>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}
}  // namespace

Poly poly_from_coeffs(const Field& F, std::vector<Elem> coeffs) {
    for (Elem c : coeffs) {
        if (c >= F.order()) throw std::invalid_argument("coefficient out of range for field");
    }
    trim(coeffs);
    return Poly{std::move(coeffs)};
}

Poly poly_constant(const Field& F, Elem c) {
    return poly_from_coeffs(F, {c});
}

Elem eval_poly(const Field& F, const Poly& f, Elem x) {
    if (f.is_zero()) return 0;
    Elem acc = f.coeffs.back();
    for (std::size_t i = f.coeffs.size() - 1; i-- > 0;) {
        acc = F.add(F.mul(acc, x), f.coeffs[i]);
    }
    return acc;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    trim(out);
    return Poly{std::move(out)};
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
    trim(out);
    return Poly{std::move(out)};
}

Poly poly_scale(const Field& F, const Poly& a, Elem c) {
    if (c == 0) return poly_zero();
    std::vector<Elem> out(a.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.coeffs[i], c);
    return Poly{std::move(out)};
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero();
    std::vector<Elem> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            out[i + j] = F.add(out[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return Poly{std::move(out)};
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {poly_zero(), a};
    const Elem lead_inv = F.inv(b.leading());
    std::vector<Elem> rem = a.coeffs;
    std::vector<Elem> quot(a.coeffs.size() - b.coeffs.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Elem factor = F.mul(rem[i + b.coeffs.size() - 1], lead_inv);
        quot[i] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            rem[i + j] = F.sub(rem[i + j], F.mul(factor, b.coeffs[j]));
        }
    }
    trim(quot);
    trim(rem);
    return {Poly{std::move(quot)}, Poly{std::move(rem)}};
}

Poly make_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    if (a.leading() == 1) return a;
    return poly_scale(F, a, F.inv(a.leading()));
}

Poly monic_gcd(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("gcd of two zero polynomials");
    }
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(F, x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(F, x);
}

Poly interpolate(const Field& F, const std::vector<std::pair<Elem, Elem>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    std::set<Elem> seen;
    for (const auto& [x, y] : points) {
        (void)y;
        if (!seen.insert(x).second) throw std::invalid_argument("duplicate interpolation node");
    }

    // Master product N(x) = prod (x - x_i); each basis numerator is N/(x - x_i).
    Poly master = poly_constant(F, 1);
    for (const auto& [x, y] : points) {
        (void)y;
        master = poly_mul(F, master, poly_from_coeffs(F, {F.neg(x), 1}));
    }

    Poly result = poly_zero();
    for (const auto& [x, y] : points) {
        if (y == 0) continue;
        const Poly basis = poly_divmod(F, master, poly_from_coeffs(F, {F.neg(x), 1})).first;
        const Elem denom = eval_poly(F, basis, x);
        result = poly_add(F, result, poly_scale(F, basis, F.mul(y, F.inv(denom))));
    }
    return result;
}

std::string poly_to_json(const Poly& f) {
    return nlohmann::json(f.coeffs).dump();
}

}  // namespace polycycle::maps
