#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "formcode/gf.hpp"
#include "formcode/util.hpp"

namespace formcode {

/// An l-dimensional subspace of F_q^N held as its reduced-row-echelon basis,
/// so equality of subspaces is equality of representations. Rows are
/// bit-packed with word-wide XOR elimination when q = 2 and stored densely
/// otherwise; the interface is identical either way. The zero-dimensional
/// subspace (empty basis) is valid.
class Subspace {
public:
    /// Canonical span of the given vectors (each of length `ambient`); the
    /// result is independent of their order and scaling.
    static Subspace from_vectors(const FieldPtr& field, int ambient,
                                 const std::vector<std::vector<uint32_t>>& vectors);

    static Subspace zero(const FieldPtr& field, int ambient);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] int ambient() const { return ambient_; }
    [[nodiscard]] int dim() const { return dim_; }

    /// Basis row as plain field-element values.
    [[nodiscard]] std::vector<uint32_t> row_values(int i) const;
    [[nodiscard]] std::vector<std::vector<uint32_t>> basis_rows() const;

    [[nodiscard]] bool contains(const std::vector<uint32_t>& v) const;

    bool operator==(const Subspace& o) const;

    friend int stacked_rank(const Subspace& a, const Subspace& b);

private:
    Subspace() = default;

    FieldPtr field_;
    int ambient_ = 0;
    int dim_ = 0;
    std::vector<std::vector<uint64_t>> bit_rows_;     // q == 2
    std::vector<std::vector<uint32_t>> dense_rows_;   // q > 2
    [[nodiscard]] bool packed() const { return field_->q() == 2; }
};

/// dim(V1 + V2) - dim(V1 ∩ V2), the subspace metric.
[[nodiscard]] int dist(const Subspace& a, const Subspace& b);
[[nodiscard]] int sum_dim(const Subspace& a, const Subspace& b);
[[nodiscard]] int intersect_dim(const Subspace& a, const Subspace& b);

/// V1 ∩ V2 as a canonical subspace (Zassenhaus).
[[nodiscard]] Subspace intersection(const Subspace& a, const Subspace& b);

/// Uniformly random l-dimensional subspace of F_q^ambient.
[[nodiscard]] Subspace random_subspace(const FieldPtr& field, int ambient, int l,
                                       SplitMix64& rng);

/// Text format: header "q N l", then l rows of N whitespace-separated field
/// elements.
void write_subspace(std::ostream& os, const Subspace& s);

struct LoadedSubspace {
    Subspace subspace;
    bool rank_deficient = false;
};

/// Reads the text format, re-canonicalizing the rows. Rank-deficient input is
/// rejected unless `allow_deficient` is set, in which case the loaded span is
/// returned with the flag raised.
LoadedSubspace read_subspace(std::istream& is, bool allow_deficient = false);

}  // namespace formcode
