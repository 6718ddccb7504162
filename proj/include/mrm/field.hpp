#ifndef MRM_FIELD_HPP
#define MRM_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mrm/errors.hpp"

namespace mrm {

class FieldElement;

// The finite field GF(p^t), q = p^t <= 2^16.
//
// Elements are identified with the integers 0..q-1: element i is the
// polynomial in the field generator whose GF(p) coefficient vector is the
// base-p digit expansion of i.  This fixes the enumeration alpha_0..alpha_{q-1}
// with alpha_0 = 0 and alpha_1 = 1, reproducibly across runs and platforms.
//
// The reduction modulus is the lexicographically smallest monic irreducible
// polynomial of degree t over GF(p), coefficient vectors compared as base-p
// integers, found by exhaustive search with trial division.  Two Field
// objects with equal (p, t) therefore behave identically.
//
// A Field is immutable after construction; all operations are pure and safe
// to call concurrently.
class Field {
  public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    // Throws NonPrimeCharacteristic / UnsupportedSize.
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t t);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return t_; }
    std::uint32_t order() const { return q_; }

    // Monic reduction modulus, degree t, coefficients c[0..t] with c[t] = 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_field(const Field& other) const {
        return p_ == other.p_ && t_ == other.t_;
    }

    // --- arithmetic on element indices (the hot path) ---
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
        return add_slow(a, b);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // n mod p embedded into the prime subfield.
    std::uint32_t from_int(std::uint64_t n) const { return static_cast<std::uint32_t>(n % p_); }

    // --- element views ---
    FieldElement element(std::uint32_t index) const;
    FieldElement zero() const;
    FieldElement one() const;

    // alpha_0..alpha_{q-1} in enumeration order.
    std::vector<FieldElement> enumerate() const;

    // Base-p digits of an element index, length t (digit l is the
    // coefficient of the l-th power of the generator).
    std::vector<std::uint32_t> coefficients(std::uint32_t index) const;

  private:
    Field(std::uint32_t p, std::uint32_t t);
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_, t_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;      // exp_[k] = g^k, k in [0, q-1)
    std::vector<std::uint32_t> log_;      // log_[exp_[k]] = k; log_[0] unused
    std::vector<std::uint32_t> neg_;      // additive inverses
    std::vector<std::uint32_t> add_tab_;  // full addition table when q is small
    std::vector<std::uint16_t> digits_;   // base-p digits, q*t entries
    std::vector<std::uint32_t> pow_p_;    // p^0..p^t
};

// A value of GF(p^t).  Holds a non-owning pointer to its field; the field
// must outlive the element (codes and polynomials keep their field alive
// through a shared_ptr).
class FieldElement {
  public:
    FieldElement() : field_(nullptr), index_(0) {}
    FieldElement(const Field& field, std::uint32_t index) : field_(&field), index_(index) {}

    std::uint32_t index() const { return index_; }
    const Field& field() const { return *field_; }
    bool valid() const { return field_ != nullptr; }
    bool is_zero() const { return index_ == 0; }

    std::vector<std::uint32_t> coefficients() const { return field_->coefficients(index_); }

    FieldElement operator-() const { return {*field_, field_->neg(index_)}; }
    FieldElement inverse() const { return {*field_, field_->inv(index_)}; }
    FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(index_, e)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.field_, a.field_->add(a.index_, b.index_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.field_, a.field_->sub(a.index_, b.index_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.field_, a.field_->mul(a.index_, b.index_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.field_, a.field_->div(a.index_, b.index_)};
    }
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.field_ == nullptr || b.field_ == nullptr) return a.field_ == b.field_;
        return a.field_->same_field(*b.field_) && a.index_ == b.index_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (a.field_ == nullptr || b.field_ == nullptr || !a.field_->same_field(*b.field_))
            throw FieldMismatch("operands belong to different fields");
    }

    const Field* field_;
    std::uint32_t index_;
};

}  // namespace mrm

#endif
