#include "polycycle/spaces.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polycycle::maps {

MapSpace::MapSpace(Field field, std::uint32_t degree, SpaceKind kind)
    : field_(std::move(field)), degree_(degree), kind_(kind) {
    if (degree_ < 1) throw std::invalid_argument("space degree must be >= 1");
}

BigInt MapSpace::cardinality() const {
    const BigInt q = field_.order();
    if (kind_ == SpaceKind::Polynomial) return big_pow(q, degree_) * (q - 1);
    return big_pow(q, 2 * std::uint64_t(degree_) - 1) * (q - 1) * (q - 1);
}

BigInt MapSpace::raw_size() const {
    const BigInt q = field_.order();
    const BigInt omega = big_pow(q, degree_) * (q - 1);
    if (kind_ == SpaceKind::Polynomial) return omega;
    return big_pow(q, degree_) * omega;
}

std::uint64_t MapSpace::raw_size_checked(std::uint64_t cap) const {
    const BigInt n = raw_size();
    if (n > cap) throw std::length_error("space exceeds enumeration cap");
    return n.convert_to<std::uint64_t>();
}

std::optional<Poly> MapSpace::poly_at(std::uint64_t raw) const {
    const std::uint64_t q = field_.order();
    std::vector<Elem> coeffs(degree_ + 1);
    for (std::uint32_t j = 0; j < degree_; ++j) {
        coeffs[j] = static_cast<Elem>(raw % q);
        raw /= q;
    }
    coeffs[degree_] = static_cast<Elem>(1 + raw);  // raw < q-1 by range contract
    return Poly{std::move(coeffs)};
}

std::optional<RationalMap> MapSpace::rational_at(std::uint64_t raw) const {
    const std::uint64_t q = field_.order();
    std::uint64_t num_count = 1;
    for (std::uint32_t j = 0; j < degree_; ++j) num_count *= q;
    num_count *= (q - 1);

    const std::uint64_t num_idx = raw % num_count;
    std::uint64_t den_idx = raw / num_count;

    std::vector<Elem> den(degree_ + 1);
    for (std::uint32_t j = 0; j < degree_; ++j) {
        den[j] = static_cast<Elem>(den_idx % q);
        den_idx /= q;
    }
    den[degree_] = 1;

    Poly g{std::move(den)};
    Poly f = *poly_at(num_idx);
    if (monic_gcd(field_, f, g).degree() != 0) return std::nullopt;
    return RationalMap{std::move(f), std::move(g)};
}

Poly MapSpace::sample_poly(SplitMix64& rng) const {
    const std::uint64_t q = field_.order();
    std::vector<Elem> coeffs(degree_ + 1);
    for (std::uint32_t j = 0; j < degree_; ++j) coeffs[j] = static_cast<Elem>(rng.below(q));
    coeffs[degree_] = static_cast<Elem>(1 + rng.below(q - 1));
    return Poly{std::move(coeffs)};
}

RationalMap MapSpace::sample_rational(SplitMix64& rng) const {
    const std::uint64_t q = field_.order();
    for (;;) {
        Poly f = sample_poly(rng);
        std::vector<Elem> den(degree_ + 1);
        for (std::uint32_t j = 0; j < degree_; ++j) den[j] = static_cast<Elem>(rng.below(q));
        den[degree_] = 1;
        Poly g{std::move(den)};
        if (monic_gcd(field_, f, g).degree() == 0) {
            return RationalMap{std::move(f), std::move(g)};
        }
    }
}

std::vector<Poly> enumerate_polynomials(const MapSpace& space, std::uint64_t cap) {
    if (space.kind() != SpaceKind::Polynomial) {
        throw std::invalid_argument("polynomial enumeration on a rational space");
    }
    const std::uint64_t n = space.raw_size_checked(cap);
    std::vector<Poly> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(*space.poly_at(i));
    return out;
}

std::vector<RationalMap> enumerate_rationals(const MapSpace& space, std::uint64_t cap) {
    if (space.kind() != SpaceKind::Rational) {
        throw std::invalid_argument("rational enumeration on a polynomial space");
    }
    const std::uint64_t n = space.raw_size_checked(cap);
    std::vector<RationalMap> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (auto r = space.rational_at(i)) out.push_back(std::move(*r));
    }
    return out;
}

PartialPermutation make_partial_permutation(const Field& F, std::vector<Elem> support,
                                            std::vector<Elem> images) {
    if (support.empty()) throw std::invalid_argument("permutation support must be nonempty");
    if (support.size() != images.size()) {
        throw std::invalid_argument("support and image lengths differ");
    }
    std::set<Elem> sup(support.begin(), support.end());
    if (sup.size() != support.size()) throw std::invalid_argument("support has duplicates");
    std::set<Elem> img(images.begin(), images.end());
    if (img != sup) throw std::invalid_argument("images are not a permutation of the support");
    for (Elem a : support) {
        if (a >= F.order()) throw std::invalid_argument("support element out of range");
    }
    return PartialPermutation{std::move(support), std::move(images)};
}

PartialPermutation random_partial_permutation(const Field& F, std::uint32_t size,
                                              SplitMix64& rng) {
    const std::uint64_t q = F.order();
    if (size < 1 || size > q) throw std::invalid_argument("bad permutation support size");

    // Floyd's subset sampling, then an in-place Fisher-Yates for the images.
    std::set<Elem> chosen;
    for (std::uint64_t j = q - size; j < q; ++j) {
        const Elem t = static_cast<Elem>(rng.below(j + 1));
        chosen.insert(chosen.count(t) ? static_cast<Elem>(j) : t);
    }
    std::vector<Elem> support(chosen.begin(), chosen.end());
    std::vector<Elem> images = support;
    for (std::size_t i = images.size(); i > 1; --i) {
        std::swap(images[i - 1], images[rng.below(i)]);
    }
    return PartialPermutation{std::move(support), std::move(images)};
}

std::uint64_t count_extensions(const MapSpace& space, const PartialPermutation& sigma,
                               std::uint64_t cap) {
    if (space.kind() != SpaceKind::Polynomial) {
        throw std::invalid_argument("extension counting is over polynomial spaces");
    }
    const Field& F = space.field();
    const std::uint64_t n = space.raw_size_checked(cap);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const Poly f = *space.poly_at(i);
        bool extends = true;
        for (std::size_t j = 0; j < sigma.support.size(); ++j) {
            if (eval_poly(F, f, sigma.support[j]) != sigma.images[j]) {
                extends = false;
                break;
            }
        }
        if (extends) ++count;
    }
    return count;
}

BigInt count_monic_without_roots(const Field& F, std::uint32_t d,
                                 const std::vector<Elem>& roots) {
    std::set<Elem> distinct(roots.begin(), roots.end());
    const std::uint64_t a = distinct.size();
    const BigInt q = F.order();
    BigInt total = 0;
    const std::uint64_t jmax = std::min<std::uint64_t>(a, d);
    for (std::uint64_t j = 0; j <= jmax; ++j) {
        const BigInt term = binomial(BigInt(a), j) * big_pow(q, d - j);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace polycycle::maps
