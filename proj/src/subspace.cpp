#include "formcode/subspace.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "formcode/error.hpp"
#include "formcode/linalg.hpp"

namespace formcode {

namespace {

int words_for(int cols) { return (cols + 63) / 64; }

std::vector<uint64_t> pack_row(const std::vector<uint32_t>& v) {
    std::vector<uint64_t> w(words_for(static_cast<int>(v.size())), 0);
    for (size_t c = 0; c < v.size(); ++c)
        if (v[c]) w[c >> 6] |= 1ULL << (c & 63);
    return w;
}

std::vector<uint32_t> unpack_row(const std::vector<uint64_t>& w, int cols) {
    std::vector<uint32_t> v(cols, 0);
    for (int c = 0; c < cols; ++c) v[c] = (w[c >> 6] >> (c & 63)) & 1;
    return v;
}

void check_compatible(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !a.field()->same_as(*b.field()))
        throw Error(errs::ambient_mismatch, "subspaces live in different ambient spaces");
}

}  // namespace

Subspace Subspace::from_vectors(const FieldPtr& field, int ambient,
                                const std::vector<std::vector<uint32_t>>& vectors) {
    if (ambient < 0) throw Error(errs::out_of_range, "negative ambient dimension");
    Subspace s;
    s.field_ = field;
    s.ambient_ = ambient;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw Error(errs::shape_mismatch, "vector length does not match ambient dimension");
        for (uint32_t x : v)
            if (x >= field->q()) throw Error(errs::out_of_range, "entry out of field range");
    }
    if (field->q() == 2) {
        s.bit_rows_.reserve(vectors.size());
        for (const auto& v : vectors) s.bit_rows_.push_back(pack_row(v));
        s.dim_ = linalg::rref_bits(s.bit_rows_, ambient);
    } else {
        s.dense_rows_ = vectors;
        s.dim_ = linalg::rref(*field, s.dense_rows_, ambient);
    }
    return s;
}

Subspace Subspace::zero(const FieldPtr& field, int ambient) {
    return from_vectors(field, ambient, {});
}

std::vector<uint32_t> Subspace::row_values(int i) const {
    if (i < 0 || i >= dim_) throw Error(errs::out_of_range, "basis row index out of range");
    if (packed()) return unpack_row(bit_rows_[i], ambient_);
    return dense_rows_[i];
}

std::vector<std::vector<uint32_t>> Subspace::basis_rows() const {
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(dim_);
    for (int i = 0; i < dim_; ++i) rows.push_back(row_values(i));
    return rows;
}

bool Subspace::contains(const std::vector<uint32_t>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw Error(errs::shape_mismatch, "vector length does not match ambient dimension");
    if (packed()) {
        auto w = pack_row(v);
        for (const auto& row : bit_rows_) {
            // pivot = lowest set bit of the basis row
            int pivot = -1;
            for (size_t k = 0; k < row.size(); ++k)
                if (row[k]) {
                    pivot = static_cast<int>(k) * 64 + __builtin_ctzll(row[k]);
                    break;
                }
            if (pivot >= 0 && ((w[pivot >> 6] >> (pivot & 63)) & 1))
                for (size_t k = 0; k < w.size(); ++k) w[k] ^= row[k];
        }
        for (uint64_t word : w)
            if (word) return false;
        return true;
    }
    const Field& f = *field_;
    std::vector<uint32_t> r = v;
    for (const auto& row : dense_rows_) {
        int pivot = -1;
        for (int c = 0; c < ambient_; ++c)
            if (row[c]) {
                pivot = c;
                break;
            }
        if (pivot >= 0 && r[pivot] != 0) {
            uint32_t factor = r[pivot];
            for (int c = 0; c < ambient_; ++c) r[c] = f.sub(r[c], f.mul(factor, row[c]));
        }
    }
    for (uint32_t x : r)
        if (x) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && dim_ == o.dim_ && field_->same_as(*o.field_) &&
           bit_rows_ == o.bit_rows_ && dense_rows_ == o.dense_rows_;
}

int stacked_rank(const Subspace& a, const Subspace& b) {
    if (a.packed()) {
        std::vector<std::vector<uint64_t>> rows = a.bit_rows_;
        rows.insert(rows.end(), b.bit_rows_.begin(), b.bit_rows_.end());
        return linalg::rank_bits(std::move(rows), a.ambient_);
    }
    std::vector<std::vector<uint32_t>> rows = a.dense_rows_;
    rows.insert(rows.end(), b.dense_rows_.begin(), b.dense_rows_.end());
    return linalg::rank(*a.field_, std::move(rows), a.ambient_);
}

int dist(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    int r = stacked_rank(a, b);
    return 2 * r - a.dim() - b.dim();
}

int sum_dim(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    return stacked_rank(a, b);
}

int intersect_dim(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    return a.dim() + b.dim() - stacked_rank(a, b);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    const Field& f = *a.field();
    int n = a.ambient();
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& r : a.basis_rows()) {
        std::vector<uint32_t> row(2 * n, 0);
        for (int c = 0; c < n; ++c) row[c] = row[n + c] = r[c];
        rows.push_back(std::move(row));
    }
    for (const auto& r : b.basis_rows()) {
        std::vector<uint32_t> row(2 * n, 0);
        for (int c = 0; c < n; ++c) row[c] = r[c];
        rows.push_back(std::move(row));
    }
    linalg::rref(f, rows, 2 * n);
    std::vector<std::vector<uint32_t>> inter;
    for (const auto& row : rows) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c) left_zero = row[c] == 0;
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::from_vectors(a.field(), n, inter);
}

Subspace random_subspace(const FieldPtr& field, int ambient, int l, SplitMix64& rng) {
    if (l < 0 || l > ambient) throw Error(errs::out_of_range, "dimension out of range");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<uint32_t>> vecs(l, std::vector<uint32_t>(ambient));
        for (auto& v : vecs)
            for (auto& x : v) x = static_cast<uint32_t>(rng.below(field->q()));
        Subspace s = Subspace::from_vectors(field, ambient, vecs);
        if (s.dim() == l) return s;
    }
    throw Error("internal_error", "random subspace sampling failed to reach full rank");
}

void write_subspace(std::ostream& os, const Subspace& s) {
    os << s.field()->q() << ' ' << s.ambient() << ' ' << s.dim() << '\n';
    for (int i = 0; i < s.dim(); ++i) {
        auto row = s.row_values(i);
        for (int c = 0; c < s.ambient(); ++c) {
            if (c) os << ' ';
            os << s.field()->elem_to_string(row[c]);
        }
        os << '\n';
    }
}

LoadedSubspace read_subspace(std::istream& is, bool allow_deficient) {
    uint32_t q = 0;
    int ambient = 0, l = 0;
    if (!(is >> q >> ambient >> l))
        throw Error(errs::parse_error, "malformed subspace header");
    if (ambient < 0 || l < 0 || l > ambient)
        throw Error(errs::parse_error, "inconsistent subspace header");
    auto [p, m] = factor_prime_power(q);
    FieldPtr field = Field::make(p, m);
    std::vector<std::vector<uint32_t>> rows(l, std::vector<uint32_t>(ambient));
    for (auto& row : rows)
        for (auto& x : row) {
            std::string tok;
            if (!(is >> tok)) throw Error(errs::parse_error, "truncated subspace body");
            x = field->elem_from_string(tok);
        }
    Subspace s = Subspace::from_vectors(field, ambient, rows);
    bool deficient = s.dim() < l;
    if (deficient && !allow_deficient)
        throw Error(errs::rank_deficient, "rows span only " + std::to_string(s.dim()) +
                                              " of the declared " + std::to_string(l) +
                                              " dimensions");
    return {std::move(s), deficient};
}

}  // namespace formcode
