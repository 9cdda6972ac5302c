#pragma once

#include "polycycle/bigint.hpp"
#include "polycycle/poly.hpp"
#include "polycycle/rational_map.hpp"
#include "polycycle/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace polycycle::maps {

enum class SpaceKind { Polynomial, Rational };

// Default per-run cap on raw enumeration indices.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1ULL << 28;

// The space of all degree-d polynomials over F_q (cardinality q^d (q-1)), or
// of rational maps f/g with deg f = deg g = d, g monic, gcd(f,g) = 1
// (cardinality q^(2d+1) (1-1/q)^2).
//
// Members are addressed through a fixed raw index range so runs can be split
// into deterministic, independently iterable sub-ranges.  Order is
// lexicographic with the constant coefficient fastest; rational maps are
// denominator-major, and raw indices whose (num, den) pair is not coprime
// decode to nullopt.
class MapSpace {
public:
    MapSpace(Field field, std::uint32_t degree, SpaceKind kind);

    const Field& field() const { return field_; }
    std::uint32_t degree() const { return degree_; }
    SpaceKind kind() const { return kind_; }

    BigInt cardinality() const;

    // Size of the raw index range (equals cardinality for polynomial spaces,
    // the numerator x denominator grid for rational spaces).
    BigInt raw_size() const;

    // raw_size() if it fits the cap, otherwise throws std::length_error.
    std::uint64_t raw_size_checked(std::uint64_t cap = kDefaultEnumerationCap) const;

    std::optional<Poly> poly_at(std::uint64_t raw) const;
    std::optional<RationalMap> rational_at(std::uint64_t raw) const;

    // Exactly uniform draws.  Polynomials: uniform coefficients with uniform
    // nonzero leading coefficient.  Rational maps: rejection on coprimality;
    // acceptance probability is (1-1/q), within the (1-1/q)^2 >= 1/4 budget.
    Poly sample_poly(SplitMix64& rng) const;
    RationalMap sample_rational(SplitMix64& rng) const;

private:
    Field field_;
    std::uint32_t degree_;
    SpaceKind kind_;
};

// Materialized enumeration for desk-scale spaces (tests, oracles).
std::vector<Poly> enumerate_polynomials(const MapSpace& space,
                                        std::uint64_t cap = kDefaultEnumerationCap);
std::vector<RationalMap> enumerate_rationals(const MapSpace& space,
                                             std::uint64_t cap = kDefaultEnumerationCap);

// A permutation sigma of a set A of distinct field elements: images[i] is
// sigma(support[i]).
struct PartialPermutation {
    std::vector<Elem> support;
    std::vector<Elem> images;
};

// Validates distinctness and bijectivity; throws std::invalid_argument.
PartialPermutation make_partial_permutation(const Field& F, std::vector<Elem> support,
                                            std::vector<Elem> images);

// Uniform random permutation of a uniform random |size|-subset of F_q.
PartialPermutation random_partial_permutation(const Field& F, std::uint32_t size,
                                              SplitMix64& rng);

// Brute-force count of degree-d polynomials extending sigma, i.e. f(x) =
// sigma(x) on the support.  Counts by full enumeration of the space.
std::uint64_t count_extensions(const MapSpace& space, const PartialPermutation& sigma,
                               std::uint64_t cap = kDefaultEnumerationCap);

// Number of monic degree-d polynomials with no root in A, by truncated
// inclusion-exclusion: sum_{j<=min(|A|,d)} (-1)^j C(|A|,j) q^(d-j).  Equals
// q^(d-|A|) (q-1)^|A| whenever |A| <= d.
BigInt count_monic_without_roots(const Field& F, std::uint32_t d,
                                 const std::vector<Elem>& roots);

}  // namespace polycycle::maps
