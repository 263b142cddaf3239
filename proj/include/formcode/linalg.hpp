#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "formcode/gf.hpp"

namespace formcode::linalg {

/// Reduced row echelon form in place over an arbitrary field; zero rows are
/// dropped. Returns the rank. Canonical: any two bases of the same row space
/// reduce to identical arrays.
int rref(const Field& f, std::vector<std::vector<uint32_t>>& rows, int cols);

[[nodiscard]] int rank(const Field& f, std::vector<std::vector<uint32_t>> rows, int cols);

/// RREF for bit-packed GF(2) rows (64 columns per word, column c in word
/// c / 64 at bit c % 64).
int rref_bits(std::vector<std::vector<uint64_t>>& rows, int cols);

[[nodiscard]] int rank_bits(std::vector<std::vector<uint64_t>> rows, int cols);

/// Solve A x = b where `rows` holds the augmented matrix [A | b] with
/// `unknowns` columns of A. Returns nullopt when inconsistent; throws if the
/// system is consistent but underdetermined (callers here always present
/// full-column-rank systems).
[[nodiscard]] std::optional<std::vector<uint32_t>> solve_unique(
    const Field& f, std::vector<std::vector<uint32_t>> rows, int unknowns);

}  // namespace formcode::linalg
