#include "mrm/field.hpp"

#include <algorithm>

namespace mrm {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense univariate polynomials over GF(p), coefficient vectors with
// trailing zeros allowed.  Used only during field construction.
using PPoly = std::vector<std::uint32_t>;

bool ppoly_is_zero(const PPoly& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// a mod b over GF(p); b monic of degree db.
PPoly ppoly_mod(PPoly a, const PPoly& b, std::size_t db, std::uint32_t p) {
    if (a.size() < db + 1) return a;
    for (std::size_t i = a.size(); i-- > db;) {
        std::uint32_t c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            std::uint64_t v = a[i - db + j] + static_cast<std::uint64_t>(p - 1) * c % p * b[j];
            a[i - db + j] = static_cast<std::uint32_t>(v % p);
        }
    }
    a.resize(db);
    return a;
}

// Trial division against every monic polynomial of degree <= t/2.
bool is_irreducible(const PPoly& f, std::uint32_t t, std::uint32_t p) {
    for (std::uint32_t e = 1; 2 * e <= t; ++e) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < e; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            PPoly div(e + 1, 0);
            std::uint64_t v = c;
            for (std::uint32_t i = 0; i < e; ++i) {
                div[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            div[e] = 1;
            if (ppoly_is_zero(ppoly_mod(f, div, e, p))) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t t) : p_(p), t_(t) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (t < 1) throw UnsupportedSize("extension degree must be at least 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        q *= p;
        if (q > kMaxOrder) throw UnsupportedSize("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    // Lexicographically smallest monic irreducible of degree t: scan the
    // candidates x^t + c in base-p integer order of c.
    for (std::uint64_t c = 0;; ++c) {
        PPoly f(t + 1, 0);
        std::uint64_t v = c;
        for (std::uint32_t i = 0; i < t; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[t] = 1;
        if (is_irreducible(f, t, p)) {
            modulus_ = f;
            break;
        }
    }

    pow_p_.resize(t + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 0; i < t; ++i) pow_p_[i + 1] = pow_p_[i] * p;

    digits_.resize(static_cast<std::size_t>(q_) * t);
    for (std::uint32_t i = 0; i < q_; ++i) {
        std::uint32_t v = i;
        for (std::uint32_t l = 0; l < t; ++l) {
            digits_[static_cast<std::size_t>(i) * t + l] = static_cast<std::uint16_t>(v % p);
            v /= p;
        }
    }

    neg_.resize(q_);
    for (std::uint32_t i = 0; i < q_; ++i) {
        std::uint32_t r = 0;
        for (std::uint32_t l = 0; l < t; ++l) {
            std::uint32_t d = digits_[static_cast<std::size_t>(i) * t + l];
            r += ((p - d) % p) * pow_p_[l];
        }
        neg_[i] = r;
    }

    if (q_ <= 1024) {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t r = 0;
                for (std::uint32_t l = 0; l < t; ++l) {
                    std::uint32_t d = digits_[static_cast<std::size_t>(a) * t + l] +
                                      digits_[static_cast<std::size_t>(b) * t + l];
                    if (d >= p) d -= p;
                    r += d * pow_p_[l];
                }
                add_tab_[static_cast<std::size_t>(a) * q_ + b] = r;
            }
    }

    // Product of element indices by direct polynomial arithmetic, used only
    // to bootstrap the log/antilog tables.
    auto mul_direct = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        std::vector<std::uint32_t> prod(2 * t - 1, 0);
        for (std::uint32_t i = 0; i < t; ++i) {
            std::uint32_t da = digits_[static_cast<std::size_t>(a) * t + i];
            if (da == 0) continue;
            for (std::uint32_t j = 0; j < t; ++j)
                prod[i + j] = (prod[i + j] + da * digits_[static_cast<std::size_t>(b) * t + j]) % p;
        }
        for (std::size_t i = prod.size(); i-- > t;) {
            std::uint32_t c = prod[i];
            if (c == 0) continue;
            for (std::uint32_t j = 0; j < t; ++j)
                prod[i - t + j] = (prod[i - t + j] + (p - modulus_[j] % p) * c) % p;
            prod[i] = 0;
        }
        std::uint32_t r = 0;
        for (std::uint32_t l = 0; l < t; ++l) r += prod[l] * pow_p_[l];
        return r;
    };

    auto pow_direct = [&](std::uint32_t a, std::uint32_t e) -> std::uint32_t {
        std::uint32_t r = 1, b = a;
        while (e) {
            if (e & 1) r = mul_direct(r, b);
            b = mul_direct(b, b);
            e >>= 1;
        }
        return r;
    };

    // Find a generator of the multiplicative group: order q-1 means
    // g^((q-1)/r) != 1 for every prime factor r of q-1.
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t n = q_ - 1;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_factors.push_back(n);
    }
    std::uint32_t g = 1;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint32_t r : prime_factors)
            if (pow_direct(cand, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }

    exp_.resize(q_ - 1 > 0 ? q_ - 1 : 1);
    log_.assign(q_, 0);
    std::uint32_t b = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
        exp_[k] = b;
        log_[b] = k;
        b = mul_direct(b, g);
    }
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t t) {
    return std::shared_ptr<const Field>(new Field(p, t));
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (std::uint32_t l = 0; l < t_; ++l) {
        std::uint32_t d = digits_[static_cast<std::size_t>(a) * t_ + l] +
                          digits_[static_cast<std::size_t>(b) * t_ + l];
        if (d >= p_) d -= p_;
        r += d * pow_p_[l];
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t r = log_[a] * (e % (q_ - 1)) % (q_ - 1);
    return exp_[r];
}

FieldElement Field::element(std::uint32_t index) const {
    if (index >= q_) throw InvalidParameter("element index out of range");
    return {*this, index};
}

FieldElement Field::zero() const { return {*this, 0}; }

FieldElement Field::one() const { return {*this, 1}; }

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(*this, i);
    return out;
}

std::vector<std::uint32_t> Field::coefficients(std::uint32_t index) const {
    std::vector<std::uint32_t> out(t_);
    for (std::uint32_t l = 0; l < t_; ++l) out[l] = digits_[static_cast<std::size_t>(index) * t_ + l];
    return out;
}

}  // namespace mrm
