#include "formcode/linalg.hpp"

#include <utility>

namespace formcode::linalg {

int rref(const Field& f, std::vector<std::vector<uint32_t>>& rows, int cols) {
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        uint32_t scale = f.inv(rows[r][c]);
        if (scale != 1)
            for (int j = c; j < cols; ++j) rows[r][j] = f.mul(rows[r][j], scale);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            uint32_t factor = rows[i][c];
            for (int j = c; j < cols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

int rank(const Field& f, std::vector<std::vector<uint32_t>> rows, int cols) {
    return rref(f, rows, cols);
}

int rref_bits(std::vector<std::vector<uint64_t>>& rows, int cols) {
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t word = static_cast<size_t>(c) >> 6;
        uint64_t mask = 1ULL << (c & 63);
        size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot][word] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || !(rows[i][word] & mask)) continue;
            for (size_t w = 0; w < rows[i].size(); ++w) rows[i][w] ^= rows[r][w];
        }
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

int rank_bits(std::vector<std::vector<uint64_t>> rows, int cols) {
    return rref_bits(rows, cols);
}

std::optional<std::vector<uint32_t>> solve_unique(const Field& f,
                                                  std::vector<std::vector<uint32_t>> rows,
                                                  int unknowns) {
    size_t r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < unknowns && r < rows.size(); ++c) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        uint32_t scale = f.inv(rows[r][c]);
        if (scale != 1)
            for (int j = c; j <= unknowns; ++j) rows[r][j] = f.mul(rows[r][j], scale);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            uint32_t factor = rows[i][c];
            for (int j = c; j <= unknowns; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    // rows beyond the last pivot are zero in all unknown columns
    for (size_t i = r; i < rows.size(); ++i)
        if (rows[i][unknowns] != 0) return std::nullopt;
    if (static_cast<int>(r) != unknowns)
        throw Error("internal_error", "underdetermined system in solve_unique");
    std::vector<uint32_t> x(unknowns, 0);
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = rows[i][unknowns];
    return x;
}

}  // namespace formcode::linalg
