#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "formcode/error.hpp"

namespace formcode {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Arithmetic context for F_q, q = p^m, q <= 2^16.
///
/// Elements are canonical codes in [0, q): the residue itself for prime
/// fields, and the base-p encoding of the coefficient vector (low degree
/// first) for extension fields. Prime fields use modular arithmetic;
/// extension fields use a polynomial basis with exp/log tables built at
/// construction. Immutable and safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Build F_{p^m}. For m > 1, `modulus` is the defining irreducible as
    /// monic coefficients low degree first (length m + 1); when omitted, the
    /// first irreducible in lexicographic coefficient order is selected.
    static FieldPtr make(uint32_t p, uint32_t m = 1, std::vector<uint32_t> modulus = {});

    [[nodiscard]] uint32_t p() const { return p_; }
    [[nodiscard]] uint32_t m() const { return m_; }
    [[nodiscard]] uint32_t q() const { return q_; }
    [[nodiscard]] const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// Structural identity: same (p, m, modulus).
    [[nodiscard]] bool same_as(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

    // arithmetic on canonical codes
    [[nodiscard]] uint32_t add(uint32_t a, uint32_t b) const;
    [[nodiscard]] uint32_t sub(uint32_t a, uint32_t b) const;
    [[nodiscard]] uint32_t neg(uint32_t a) const;
    [[nodiscard]] uint32_t mul(uint32_t a, uint32_t b) const;
    [[nodiscard]] uint32_t inv(uint32_t a) const;
    [[nodiscard]] uint32_t pow(uint32_t a, uint64_t k) const;

    [[nodiscard]] FieldElement element(uint64_t code) const;

    /// Decimal for prime fields, comma-separated coefficients (low degree
    /// first) for extension fields.
    [[nodiscard]] std::string elem_to_string(uint32_t a) const;
    [[nodiscard]] uint32_t elem_from_string(std::string_view s) const;

private:
    Field() = default;

    [[nodiscard]] uint32_t mul_slow(uint32_t a, uint32_t b) const;
    [[nodiscard]] uint32_t pow_slow(uint32_t a, uint64_t k) const;
    void build_tables();

    uint32_t p_ = 0, m_ = 1, q_ = 0;
    std::vector<uint32_t> modulus_;       // empty when m == 1
    std::vector<uint32_t> exp_, log_;     // extension fields only
};

/// Checked scalar: a canonical code bound to its field.
class FieldElement {
public:
    FieldElement(FieldPtr field, uint32_t value) : field_(std::move(field)), value_(value) {}

    [[nodiscard]] uint32_t value() const { return value_; }
    [[nodiscard]] const FieldPtr& field() const { return field_; }

    [[nodiscard]] bool is_zero() const { return value_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);

    bool operator==(const FieldElement& o) const {
        return value_ == o.value_ && field_->same_as(*o.field_);
    }

private:
    FieldPtr field_;
    uint32_t value_;
};

[[nodiscard]] FieldElement inv(const FieldElement& a);
[[nodiscard]] FieldElement pow(const FieldElement& a, uint64_t k);

/// Throws unless both operands live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

/// Decompose a prime power q = p^m (unique); throws otherwise.
[[nodiscard]] std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q);

}  // namespace formcode
