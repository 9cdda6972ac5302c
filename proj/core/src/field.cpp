#include "polycycle/field.hpp"

#include "polycycle/primes.hpp"

#include <json.hpp>

#include <cassert>
#include <stdexcept>

namespace polycycle::gf {

namespace {

// Minimal F_p[x] arithmetic on coefficient vectors (constant term first),
// used only for modulus validation and selection.
using PVec = std::vector<std::uint64_t>;

void trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic. In-place long division discarding the quotient.
void reduce(PVec& a, const PVec& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    while (a.size() > m) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - m;
        if (lead != 0) {
            for (std::size_t j = 0; j < m; ++j) {
                const std::uint64_t s = (lead * (p - f[j])) % p;
                a[shift + j] = (a[shift + j] + s) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    trim(a);
}

PVec mulmod(const PVec& a, const PVec& b, const PVec& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    reduce(prod, f, p);
    return prod;
}

PVec powmod(PVec base, std::uint64_t e, const PVec& f, std::uint64_t p) {
    PVec out{1};
    while (e > 0) {
        if (e & 1) out = mulmod(out, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return out;
}

PVec poly_gcd(PVec a, PVec b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b needs b monic; scale by the inverse of b's leading coeff.
        PVec bm = b;
        const std::uint64_t lead = bm.back();
        if (lead != 1) {
            std::uint64_t linv = 1, x = lead, e = p - 2;
            while (e > 0) {
                if (e & 1) linv = (linv * x) % p;
                x = (x * x) % p;
                e >>= 1;
            }
            for (auto& c : bm) c = (c * linv) % p;
        }
        reduce(a, bm, p);  // remainder is unchanged by the monic rescale
        std::swap(a, b);   // (a, b) <- (b, a mod b)
    }
    return a;
}

PVec sub_x(PVec u, std::uint64_t p) {  // u - x
    if (u.size() < 2) u.resize(2, 0);
    u[1] = (u[1] + p - 1) % p;
    trim(u);
    return u;
}

}  // namespace

bool is_irreducible(std::uint64_t p, const std::vector<Elem>& f) {
    if (f.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1");
    if (f.back() != 1) throw std::invalid_argument("polynomial must be monic");
    for (Elem c : f) {
        if (c >= p) throw std::invalid_argument("coefficient out of range for F_p");
    }
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;

    PVec fp(f.begin(), f.end());

    // frob[j] = x^(p^j) mod f, built by repeated p-th powering.
    std::vector<PVec> frob(m + 1);
    frob[0] = PVec{0, 1};
    reduce(frob[0], fp, p);
    for (std::size_t j = 1; j <= m; ++j) {
        frob[j] = powmod(frob[j - 1], p, fp, p);
    }

    PVec x{0, 1};
    if (frob[m] != x) return false;
    for (auto [t, e] : factorize(m)) {
        (void)e;
        PVec g = poly_gcd(sub_x(frob[m / t], p), fp, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Field::Field(std::uint64_t p, std::uint32_t k, std::vector<Elem> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
    if (k_ > 1) {
        fold_.resize(k_);
        for (std::uint32_t j = 0; j < k_; ++j) {
            fold_[j] = static_cast<Elem>((p_ - modulus_[j]) % p_);
        }
    }
}

Field make_field(std::uint64_t p, std::uint32_t k,
                 const std::optional<std::vector<Elem>>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q > Field::kMaxOrder / p) throw std::invalid_argument("field order exceeds cap 2^20");
        q *= p;
    }
    if (q > Field::kMaxOrder) throw std::invalid_argument("field order exceeds cap 2^20");

    if (k == 1) {
        if (modulus && !modulus->empty()) {
            throw std::invalid_argument("prime fields take no modulus");
        }
        return Field(p, k, {});
    }

    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != static_cast<std::size_t>(k) + 1 || m.back() != 1) {
            throw std::invalid_argument("modulus must be monic of degree k");
        }
        for (Elem c : m) {
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        }
        if (!is_irreducible(p, m)) throw std::invalid_argument("modulus is reducible over F_p");
        return Field(p, k, m);
    }

    // Lexicographic scan over the k low coefficients, constant term most
    // significant, last coordinate fastest; first irreducible hit wins.
    std::vector<Elem> cand(k + 1, 0);
    cand[k] = 1;
    for (;;) {
        if (cand[0] != 0 && is_irreducible(p, cand)) return Field(p, k, cand);
        std::int64_t pos = k - 1;
        while (pos >= 0) {
            if (++cand[pos] < p) break;
            cand[pos] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("no irreducible of degree k found");
    }
}

std::vector<Elem> Field::to_digits(Elem a) const {
    std::vector<Elem> d(k_);
    std::uint64_t v = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        d[i] = static_cast<Elem>(v % p_);
        v /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<Elem>& digits) const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
    return static_cast<Elem>(v);
}

Elem Field::add(Elem a, Elem b) const {
    assert(a < q_ && b < q_);
    if (k_ == 1) return static_cast<Elem>((std::uint64_t(a) + b) % p_);
    std::uint64_t out = 0, pw = 1;
    std::uint64_t va = a, vb = b;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((va % p_ + vb % p_) % p_) * pw;
        va /= p_;
        vb /= p_;
        pw *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::neg(Elem a) const {
    assert(a < q_);
    if (k_ == 1) return static_cast<Elem>((p_ - a) % p_);
    std::uint64_t out = 0, pw = 1, va = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((p_ - va % p_) % p_) * pw;
        va /= p_;
        pw *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    assert(a < q_ && b < q_);
    if (k_ == 1) return static_cast<Elem>((std::uint64_t(a) * b) % p_);
    const auto da = to_digits(a);
    const auto db = to_digits(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j) {
            prod[i + j] += std::uint64_t(da[i]) * db[j];
        }
    }
    // Fold x^i (i >= k) down via x^k = fold_, highest power first.
    for (std::uint32_t i = 2 * k_ - 2; i >= k_; --i) {
        const std::uint64_t t = prod[i] % p_;
        if (t != 0) {
            for (std::uint32_t j = 0; j < k_; ++j) {
                prod[i - k_ + j] = (prod[i - k_ + j] + t * fold_[j]) % p_;
            }
        }
    }
    std::vector<Elem> digits(k_);
    for (std::uint32_t i = 0; i < k_; ++i) digits[i] = static_cast<Elem>(prod[i] % p_);
    return from_digits(digits);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem out = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return pow(a, q_ - 2);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::string Field::to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["k"] = k_;
    j["modulus"] = modulus_;
    j["q"] = q_;
    return j.dump();
}

}  // namespace polycycle::gf
