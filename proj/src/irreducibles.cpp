#include "formcode/irreducibles.hpp"

#include <algorithm>

#include "formcode/error.hpp"
#include "formcode/util.hpp"

namespace formcode {

BigUint count_normalized(uint32_t q, int n, int e) {
    if (e < 1) throw Error(errs::out_of_range, "degree must be at least 1");
    (void)factor_prime_power(q);  // rejects non-prime-power orders
    uint64_t dim = binom_u64(n + e, n);
    BigUint numer = BigUint::pow(q, dim);
    numer -= BigUint(1);
    return numer.div_exact(q - 1);
}

BigUint multiset_count(const BigUint& set_size, uint64_t picks) {
    BigUint r(1);
    for (uint64_t j = 1; j <= picks; ++j) {
        BigUint factor = set_size;
        factor += static_cast<uint32_t>(j - 1);
        r *= factor;
        r = r.div_exact(static_cast<uint32_t>(j));
    }
    return r;
}

void for_each_partition(int total, int max_part,
                        const std::function<void(const std::vector<int>&)>& fn) {
    if (total == 0) {
        std::vector<int> none(1, 0);
        fn(none);
        return;
    }
    if (max_part < 1) return;
    std::vector<int> mult(total + 1, 0);
    auto descend = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            fn(mult);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            ++mult[part];
            self(self, remaining - part, part);
            --mult[part];
        }
    };
    descend(descend, total, std::min(total, max_part));
}

namespace {

// counts of irreducibles for degrees 1..e
std::vector<BigUint> irreducible_table(uint32_t q, int n, int e) {
    std::vector<BigUint> irr(e + 1);
    for (int s = 1; s <= e; ++s) {
        BigUint reducible(0);
        for_each_partition(s, s - 1, [&](const std::vector<int>& mult) {
            BigUint term(1);
            for (int part = 1; part < s; ++part)
                if (mult[part] > 0) term *= multiset_count(irr[part], mult[part]);
            reducible += term;
        });
        irr[s] = count_normalized(q, n, s);
        irr[s] -= reducible;
    }
    return irr;
}

uint64_t guarded_count(uint32_t q, int n, int e, bool override_capacity) {
    auto count = normalized_count_u64(q, n, e);
    if (!count || (*count > kEnumerationGuard && !override_capacity))
        throw Error(errs::capacity_exceeded,
                    "enumeration of " + count_normalized(q, n, e).to_string() +
                        " forms exceeds the guard (set FORMCODE_CAPACITY_OVERRIDE=1)");
    return *count;
}

}  // namespace

BigUint count_irreducible(uint32_t q, int n, int e) {
    if (e < 1) throw Error(errs::out_of_range, "degree must be at least 1");
    return irreducible_table(q, n, e)[e];
}

Census census(uint32_t q, int n, int e) {
    return {q, n, e, count_normalized(q, n, e), count_irreducible(q, n, e), std::nullopt};
}

Census census_enumerated(const FieldPtr& field, int n, int e, bool override_capacity) {
    Census c = census(field->q(), n, e);
    c.members = sieve_irreducible(field, n, e, override_capacity);
    if (BigUint(c.members->size()) != c.irreducible)
        throw Error(errs::verify_failed, "sieve cardinality disagrees with the recursion");
    return c;
}

std::vector<bool> reducible_marks(const FieldPtr& field, int n, int e, bool override_capacity) {
    uint32_t q = field->q();
    uint64_t total = guarded_count(q, n, e, override_capacity);
    std::vector<bool> marks(total, false);
    for (int k = 1; 2 * k <= e; ++k) {
        uint64_t count_a = *normalized_count_u64(q, n, k);
        std::vector<NormalizedPoly> low;
        low.reserve(count_a);
        for (uint64_t i = 0; i < count_a; ++i) low.push_back(unrank(field, n, k, i));
        uint64_t count_b = *normalized_count_u64(q, n, e - k);
        for (uint64_t j = 0; j < count_b; ++j) {
            NormalizedPoly b = unrank(field, n, e - k, j);
            for (const auto& a : low) {
                // products of normalized forms are normalized (leading
                // monomials multiply)
                NormalizedPoly prod(poly_mul(a.poly(), b.poly()));
                marks[rank(prod)] = true;
            }
        }
    }
    return marks;
}

void for_each_irreducible(const FieldPtr& field, int n, int e,
                          const std::function<void(const NormalizedPoly&)>& fn,
                          bool override_capacity) {
    auto marks = reducible_marks(field, n, e, override_capacity);
    for (uint64_t i = 0; i < marks.size(); ++i)
        if (!marks[i]) fn(unrank(field, n, e, i));
}

std::vector<NormalizedPoly> sieve_irreducible(const FieldPtr& field, int n, int e,
                                              bool override_capacity) {
    std::vector<NormalizedPoly> out;
    for_each_irreducible(
        field, n, e, [&](const NormalizedPoly& p) { out.push_back(p); }, override_capacity);
    return out;
}

std::vector<NormalizedPoly> linear_powers(const FieldPtr& field, int n, int e,
                                          bool override_capacity) {
    if (e < 1) throw Error(errs::out_of_range, "degree must be at least 1");
    uint64_t lines = guarded_count(field->q(), n, 1, override_capacity);
    std::vector<NormalizedPoly> out;
    out.reserve(lines);
    for (uint64_t i = 0; i < lines; ++i) {
        NormalizedPoly line = unrank(field, n, 1, i);
        HomogeneousPoly power = line.poly();
        for (int k = 1; k < e; ++k) power = poly_mul(power, line.poly());
        out.push_back(normalize(power));
    }
    return out;
}

CoprimeReport pairwise_coprime(const std::vector<NormalizedPoly>& family,
                               bool override_capacity) {
    if (family.empty()) return {};
    const FieldPtr& field = family.front().poly().field();
    int n = family.front().poly().vars_minus_one();
    int e = family.front().poly().degree();
    for (const auto& p : family)
        if (!p.poly().field()->same_as(*field) || p.poly().vars_minus_one() != n ||
            p.poly().degree() != e)
            throw Error(errs::mixed_parameters, "family members have mixed (q, n, e)");

    // duplicates
    std::vector<size_t> order(family.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return normalized_less(family[a], family[b]);
    });
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (family[order[i]] == family[order[i + 1]]) {
            auto [lo, hi] = std::minmax(order[i], order[i + 1]);
            return {false, lo, hi, std::nullopt};
        }

    // a shared non-constant divisor implies a shared irreducible divisor of
    // degree 1..e-1
    for (int k = 1; k < e; ++k) {
        auto candidates = sieve_irreducible(field, n, k, override_capacity);
        for (const auto& candidate : candidates) {
            size_t hit = family.size();
            for (size_t i = 0; i < family.size(); ++i) {
                if (!divides(candidate.poly(), family[i].poly())) continue;
                if (hit == family.size())
                    hit = i;
                else
                    return {false, hit, i, candidate};
            }
        }
    }
    return {};
}

}  // namespace formcode
