#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polycycle::gf {

// Canonical element encoding: the integer index in [0, q).  For q = p^k the
// index is the base-p value of the coefficient vector, constant term first:
// index = sum c_i * p^i.  Element 0 has index 0, element 1 has index 1.
using Elem = std::uint32_t;

// Description of F_q, q = p^k.  Immutable after construction; all operations
// are pure, so one Field can be shared freely across threads.
class Field {
public:
    // Orders are capped so every intermediate product fits comfortably in
    // 64-bit arithmetic and exhaustive runs stay desk-scale.
    static constexpr std::uint64_t kMaxOrder = 1ULL << 20;

    std::uint64_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return k_; }
    std::uint64_t order() const { return q_; }

    // Monic degree-k modulus as coefficient indices over F_p, constant term
    // first, length k+1.  Empty for prime fields (k == 1).
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws std::domain_error on a == 0
    Elem pow(Elem a, std::uint64_t e) const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    // All q elements in index order 0, 1, ..., q-1.
    std::vector<Elem> elements() const;

    // Base-p coefficient vector of length k (constant coefficient first).
    std::vector<Elem> to_digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& digits) const;

    std::string to_json() const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    friend Field make_field(std::uint64_t, std::uint32_t,
                            const std::optional<std::vector<Elem>>&);

    Field(std::uint64_t p, std::uint32_t k, std::vector<Elem> modulus);

    std::uint64_t p_ = 0;
    std::uint32_t k_ = 1;
    std::uint64_t q_ = 0;
    std::vector<Elem> modulus_;      // empty iff k == 1
    std::vector<Elem> fold_;         // x^k mod modulus, length k (k > 1 only)
};

// Validates p prime, k >= 1, q <= kMaxOrder.  When k > 1 and no modulus is
// given, selects the lexicographically smallest monic irreducible of degree k
// (coefficient vectors compared from the constant term up), so the field is
// reproducible across runs.
Field make_field(std::uint64_t p, std::uint32_t k,
                 const std::optional<std::vector<Elem>>& modulus = std::nullopt);

// Irreducibility of a monic polynomial over F_p (coefficients constant term
// first, indices < p) by the distinct-degree criterion: x^(p^m) == x mod f
// plus gcd checks at the maximal proper prime-index steps.
bool is_irreducible(std::uint64_t p, const std::vector<Elem>& f);

}  // namespace polycycle::gf
