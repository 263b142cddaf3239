#include "formcode/table.hpp"

#include <cmath>
#include <sstream>

#include "formcode/codes.hpp"
#include "formcode/irreducibles.hpp"
#include "formcode/util.hpp"

namespace formcode {

std::vector<TableRow> table_rows(uint32_t q, int n, int e_max, int d_max) {
    std::vector<TableRow> rows;
    double log2q = std::log2(static_cast<double>(q));
    for (int e = 1; e <= e_max; ++e) {
        BigUint size = count_irreducible(q, n, e);
        double logq_size = size.log2d() / log2q;
        for (int d = e; d <= d_max; ++d) {
            TableRow row;
            row.e = e;
            row.d = d;
            row.N = static_cast<int>(binom_u64(n + d, n));
            row.l = static_cast<int>(binom_u64(n + d - e, n));
            row.size = size;
            row.D = theoretical_distance(n, d, e);
            row.lambda = static_cast<double>(row.l) / row.N;
            row.delta = static_cast<double>(row.D) / (2.0 * row.l);
            row.rate = logq_size / (static_cast<double>(row.N) * row.l);
            row.erratum = d == 2 * e;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string table_csv_header() { return "e,d,N,l,size,D,lambda,delta,R,erratum_flag"; }

std::string table_csv_row(const TableRow& row) {
    std::ostringstream os;
    os << row.e << ',' << row.d << ',' << row.N << ',' << row.l << ',' << row.size.to_string()
       << ',' << row.D << ',' << format3_ratio(row.l, row.N) << ','
       << format3_ratio(row.D, 2ULL * row.l) << ',' << format3(row.rate) << ','
       << (row.erratum ? 1 : 0);
    return os.str();
}

}  // namespace formcode
