#pragma once

#include <string>
#include <vector>

#include "formcode/bigint.hpp"

namespace formcode {

/// One (e, d) cell of the parameter grid for the irreducible-family codes.
/// `erratum` marks the d == 2e boundary cells, where the distance follows
/// the d - e >= e formula (the intersection is one-dimensional, not zero).
struct TableRow {
    int e = 0, d = 0;
    int N = 0, l = 0;
    BigUint size;
    int D = 0;
    double lambda = 0.0, delta = 0.0, rate = 0.0;
    bool erratum = false;
};

/// Grid for e = 1..e_max, d = e..d_max. Sizes come from the counting
/// recursion, never from enumeration.
[[nodiscard]] std::vector<TableRow> table_rows(uint32_t q, int n, int e_max, int d_max);

[[nodiscard]] std::string table_csv_header();
[[nodiscard]] std::string table_csv_row(const TableRow& row);

}  // namespace formcode
