#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "formcode/bigint.hpp"
#include "formcode/homopoly.hpp"

namespace formcode {

/// Materialization guard: operations touching more normalized forms than
/// this refuse unless explicitly overridden.
inline constexpr uint64_t kEnumerationGuard = 1ULL << 26;

struct Census {
    uint32_t q = 0;
    int n = 0;
    int e = 0;
    BigUint normalized;    // all normalized degree-e forms
    BigUint irreducible;   // the irreducible ones
    std::optional<std::vector<NormalizedPoly>> members;  // set when enumerated
};

/// (q^binom(n+e,n) - 1)/(q - 1), exactly.
[[nodiscard]] BigUint count_normalized(uint32_t q, int n, int e);

/// Size of the irreducible family, by the bottom-up recursion: the count of
/// all forms minus the multiset products of lower-degree irreducibles over
/// the partitions of e with no part equal to e.
[[nodiscard]] BigUint count_irreducible(uint32_t q, int n, int e);

[[nodiscard]] Census census(uint32_t q, int n, int e);

/// Census with the irreducible family materialized (guarded); the member
/// count is checked against the recursion before returning.
[[nodiscard]] Census census_enumerated(const FieldPtr& field, int n, int e,
                                       bool override_capacity = false);

/// Multisets of size `picks` from a set of `set_size` elements:
/// binom(set_size + picks - 1, picks).
[[nodiscard]] BigUint multiset_count(const BigUint& set_size, uint64_t picks);

/// Calls fn once per partition of `total` with all parts <= max_part;
/// the argument holds multiplicities indexed by part size (entry i = number
/// of parts equal to i, entry 0 unused).
void for_each_partition(int total, int max_part,
                        const std::function<void(const std::vector<int>&)>& fn);

/// Reducibility table over rank space [0, N(e)): entry set iff the form of
/// that rank is a product of two lower-degree forms.
[[nodiscard]] std::vector<bool> reducible_marks(const FieldPtr& field, int n, int e,
                                                bool override_capacity = false);

/// The irreducible normalized degree-e forms, in rank order.
[[nodiscard]] std::vector<NormalizedPoly> sieve_irreducible(const FieldPtr& field, int n, int e,
                                                            bool override_capacity = false);

/// Streaming variant of the sieve (rank order).
void for_each_irreducible(const FieldPtr& field, int n, int e,
                          const std::function<void(const NormalizedPoly&)>& fn,
                          bool override_capacity = false);

/// { L^e : L a normalized linear form }, in the order of L's rank.
[[nodiscard]] std::vector<NormalizedPoly> linear_powers(const FieldPtr& field, int n, int e,
                                                        bool override_capacity = false);

struct CoprimeReport {
    bool ok = true;
    size_t first = 0, second = 0;                  // offending pair when !ok
    std::optional<NormalizedPoly> common_divisor;  // absent for duplicates
};

/// Certifies that no two distinct members share a non-constant divisor, by
/// divisibility checks against the irreducible forms of every degree below e
/// (an irreducible common divisor exists whenever any common divisor does).
/// Duplicate members are rejected too.
[[nodiscard]] CoprimeReport pairwise_coprime(const std::vector<NormalizedPoly>& family,
                                             bool override_capacity = false);

}  // namespace formcode
