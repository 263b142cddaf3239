#include "formcode/bigint.hpp"

#include <cctype>
#include <cmath>

#include "formcode/error.hpp"

namespace formcode {

BigUint::BigUint(uint64_t v) {
    if (v) limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t BigUint::as_u64() const {
    if (!fits_u64()) throw Error(errs::out_of_range, "value exceeds 64 bits");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator+=(uint32_t s) { return *this += BigUint(static_cast<uint64_t>(s)); }

BigUint& BigUint::operator-=(const BigUint& o) {
    if (*this < o) throw Error(errs::out_of_range, "BigUint underflow");
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                    (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
        borrow = d < 0;
        if (d < 0) d += (1LL << 32);
        limbs_[i] = static_cast<uint32_t>(d);
    }
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + carry +
                           static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint& BigUint::operator*=(const BigUint& o) { return *this = *this * o; }

BigUint& BigUint::operator*=(uint32_t s) {
    if (s == 0) {
        limbs_.clear();
        return *this;
    }
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        uint64_t cur = static_cast<uint64_t>(limb) * s + carry;
        limb = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

std::pair<BigUint, uint32_t> BigUint::divmod(uint32_t d) const {
    if (d == 0) throw Error(errs::division_by_zero, "BigUint division by zero");
    BigUint q;
    q.limbs_.assign(limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        q.limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    q.trim();
    return {q, static_cast<uint32_t>(rem)};
}

BigUint BigUint::div_exact(uint32_t d) const {
    auto [q, r] = divmod(d);
    if (r != 0) throw Error(errs::out_of_range, "inexact BigUint division");
    return q;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    return std::strong_ordering::equal;
}

BigUint BigUint::pow(uint64_t base, uint64_t exp) {
    BigUint r(1), b(base);
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint t = *this;
    std::string out;
    while (!t.is_zero()) {
        auto [q, r] = t.divmod(1000000000u);
        std::string chunk = std::to_string(r);
        t = q;
        if (t.is_zero())
            out = chunk + out;
        else
            out = std::string(9 - chunk.size(), '0') + chunk + out;
    }
    return out;
}

BigUint BigUint::from_string(const std::string& s) {
    if (s.empty()) throw Error(errs::parse_error, "empty integer literal");
    BigUint r;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(errs::parse_error, "bad digit in integer literal");
        r *= 10u;
        r += static_cast<uint32_t>(c - '0');
    }
    return r;
}

double BigUint::log2d() const {
    if (is_zero()) throw Error(errs::out_of_range, "log2 of zero");
    // top 64 bits as mantissa, rest as exponent
    size_t top = limbs_.size() - 1;
    uint64_t mant = limbs_[top];
    int shift = static_cast<int>(top) * 32;
    if (top >= 1) {
        mant = (mant << 32) | limbs_[top - 1];
        shift -= 32;
    }
    return std::log2(static_cast<double>(mant)) + shift;
}

}  // namespace formcode
