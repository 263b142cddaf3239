#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace formcode {

/// Arbitrary-precision unsigned integer, base 2^32 little-endian.
/// Covers exactly what the counting formulas need: +, -, *, division by a
/// machine word, comparison, decimal I/O and a double-precision log2.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_zero() const { return limbs_.empty(); }
    [[nodiscard]] bool fits_u64() const { return limbs_.size() <= 2; }
    [[nodiscard]] uint64_t as_u64() const;  // throws if too large

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);  // throws on underflow
    BigUint& operator*=(const BigUint& o);
    BigUint& operator*=(uint32_t s);
    BigUint& operator+=(uint32_t s);

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);
    friend BigUint operator*(BigUint a, uint32_t s) { return a *= s; }

    /// Quotient and remainder by a nonzero word.
    [[nodiscard]] std::pair<BigUint, uint32_t> divmod(uint32_t d) const;
    /// Exact division by a nonzero word; throws if a remainder is left.
    [[nodiscard]] BigUint div_exact(uint32_t d) const;

    [[nodiscard]] std::strong_ordering operator<=>(const BigUint& o) const;
    [[nodiscard]] bool operator==(const BigUint& o) const = default;

    [[nodiscard]] static BigUint pow(uint64_t base, uint64_t exp);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] static BigUint from_string(const std::string& s);

    /// log2 of the value in double precision (value must be nonzero).
    [[nodiscard]] double log2d() const;

private:
    void trim();
    std::vector<uint32_t> limbs_;  // empty means zero
};

}  // namespace formcode
