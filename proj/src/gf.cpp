#include "formcode/gf.hpp"

#include <algorithm>

namespace formcode {

namespace {

constexpr uint32_t kMaxQ = 1u << 16;

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// dense low-degree-first F_p polynomials, used only for modulus handling

std::vector<uint32_t> poly_rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                               uint32_t p) {
    // b monic
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        uint32_t lead = a.back();
        if (lead != 0) {
            int shift = static_cast<int>(a.size()) - 1 - db;
            for (int i = 0; i <= db; ++i) {
                uint64_t sub = static_cast<uint64_t>(lead) * b[i] % p;
                a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool modulus_is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    int m = static_cast<int>(f.size()) - 1;
    if (m < 1) return false;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2
    for (int k = 1; 2 * k <= m; ++k) {
        uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (uint64_t t = 0; t < count; ++t) {
            std::vector<uint32_t> g(k + 1);
            uint64_t v = t;
            for (int i = 0; i < k; ++i) {
                g[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            g[k] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m) {
    // first irreducible in lexicographic order of (c_0, ..., c_{m-1})
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t t = 0; t < count; ++t) {
        std::vector<uint32_t> f(m + 1);
        uint64_t v = t;
        for (uint32_t i = 0; i < m; ++i) {
            f[m - 1 - i] = static_cast<uint32_t>(v % p);  // c_0 most significant in t
            v /= p;
        }
        f[m] = 1;
        if (modulus_is_irreducible(f, p)) return f;
    }
    throw Error(errs::invalid_field, "no irreducible modulus found");  // unreachable
}

std::vector<uint32_t> to_digits(uint32_t code, uint32_t p, uint32_t m) {
    std::vector<uint32_t> d(m);
    for (uint32_t i = 0; i < m; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

uint32_t from_digits(const std::vector<uint32_t>& d, uint32_t p, uint32_t m) {
    uint32_t code = 0;
    for (uint32_t i = m; i-- > 0;) code = code * p + d[i];
    return code;
}

}  // namespace

FieldPtr Field::make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) throw Error(errs::invalid_field, "characteristic must be prime");
    if (m < 1) throw Error(errs::invalid_field, "extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw Error(errs::invalid_field, "field order exceeds 2^16 cap");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<uint32_t>(q);
    if (m > 1) {
        if (modulus.empty()) {
            f->modulus_ = default_modulus(p, m);
        } else {
            if (modulus.size() != m + 1 || modulus.back() != 1)
                throw Error(errs::invalid_field, "modulus must be monic of degree m");
            for (uint32_t c : modulus)
                if (c >= p) throw Error(errs::invalid_field, "modulus coefficient out of range");
            if (!modulus_is_irreducible(modulus, p))
                throw Error(errs::reducible_modulus, "supplied modulus is reducible");
            f->modulus_ = std::move(modulus);
        }
        f->build_tables();
    }
    return f;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    auto da = to_digits(a, p_, m_), db = to_digits(b, p_, m_);
    for (uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da, p_, m_);
}

uint32_t Field::neg(uint32_t a) const {
    if (m_ == 1) return a ? p_ - a : 0;
    if (p_ == 2) return a;
    auto d = to_digits(a, p_, m_);
    for (auto& c : d) c = c ? p_ - c : 0;
    return from_digits(d, p_, m_);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    auto da = to_digits(a, p_, m_), db = to_digits(b, p_, m_);
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<uint32_t>(
                (prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_);
    }
    auto rem = poly_rem(std::move(prod), modulus_, p_);
    rem.resize(m_, 0);
    return from_digits(rem, p_, m_);
}

uint32_t Field::pow_slow(uint32_t a, uint64_t k) const {
    uint32_t r = 1, base = a;
    while (k) {
        if (k & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        k >>= 1;
    }
    return r;
}

void Field::build_tables() {
    // find a generator of the multiplicative group
    uint32_t order = q_ - 1;
    std::vector<uint32_t> prime_factors;
    uint32_t rest = order;
    for (uint32_t d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            prime_factors.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) prime_factors.push_back(rest);

    uint32_t gen = 0;
    for (uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (uint32_t r : prime_factors)
            if (pow_slow(cand, order / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw Error(errs::invalid_field, "no multiplicative generator found");

    exp_.resize(order);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_slow(cur, gen);
    }
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw Error(errs::division_by_zero, "inverse of zero");
    if (m_ == 1) {
        // extended Euclid on (a, p)
        int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            int64_t quot = r / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            r = std::exchange(new_r, r - quot * new_r);
        }
        return static_cast<uint32_t>(t < 0 ? t + p_ : t);
    }
    uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

uint32_t Field::pow(uint32_t a, uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    if (m_ == 1) {
        uint64_t r = 1, base = a, e = k % (p_ - 1);
        if (k != 0 && e == 0) e = p_ - 1;
        while (e) {
            if (e & 1) r = r * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }
    uint64_t e = (static_cast<uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    return exp_[e];
}

FieldElement Field::element(uint64_t code) const {
    if (code >= q_) throw Error(errs::out_of_range, "element code out of range");
    return FieldElement(shared_from_this(), static_cast<uint32_t>(code));
}

std::string Field::elem_to_string(uint32_t a) const {
    if (m_ == 1) return std::to_string(a);
    auto d = to_digits(a, p_, m_);
    std::string s;
    for (uint32_t i = 0; i < m_; ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

uint32_t Field::elem_from_string(std::string_view s) const {
    if (s.empty()) throw Error(errs::parse_error, "empty field element");
    std::vector<uint32_t> digits;
    uint64_t cur = 0;
    bool have = false;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            cur = cur * 10 + static_cast<uint64_t>(c - '0');
            if (cur > kMaxQ) throw Error(errs::parse_error, "field element literal too large");
            have = true;
        } else if (c == ',') {
            if (!have) throw Error(errs::parse_error, "malformed field element");
            digits.push_back(static_cast<uint32_t>(cur % p_));
            cur = 0;
            have = false;
        } else {
            throw Error(errs::parse_error, "bad character in field element");
        }
    }
    if (!have) throw Error(errs::parse_error, "malformed field element");
    digits.push_back(static_cast<uint32_t>(cur % p_));
    if (m_ == 1) {
        if (digits.size() != 1) throw Error(errs::parse_error, "prime field element is a single integer");
        return digits[0];
    }
    if (digits.size() > m_) throw Error(errs::parse_error, "too many coefficients for field element");
    digits.resize(m_, 0);
    return from_digits(digits, p_, m_);
}

std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
    if (q < 2) throw Error(errs::invalid_field, "field order must be at least 2");
    uint32_t p = q;
    for (uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t m = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw Error(errs::invalid_field, "field order is not a prime power");
    return {p, m};
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field()->same_as(*b.field()))
        throw Error(errs::mixed_fields, "operands belong to different fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.field()->add(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.field()->sub(a.value(), b.value())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.field()->mul(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a) { return {a.field(), a.field()->neg(a.value())}; }

FieldElement inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.value())}; }

FieldElement pow(const FieldElement& a, uint64_t k) {
    return {a.field(), a.field()->pow(a.value(), k)};
}

}  // namespace formcode
