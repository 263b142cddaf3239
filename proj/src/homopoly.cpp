#include "formcode/homopoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "formcode/error.hpp"
#include "formcode/linalg.hpp"
#include "formcode/util.hpp"

namespace formcode {

namespace {

constexpr uint64_t kBasisCap = 1ULL << 26;

void check_operands(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (!a.field()->same_as(*b.field()))
        throw Error(errs::mixed_fields, "polynomials over different fields");
    if (a.vars_minus_one() != b.vars_minus_one())
        throw Error(errs::shape_mismatch, "polynomials in different variable counts");
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0) throw Error(errs::out_of_range, "negative basis parameters");
    uint64_t size = binom_u64(n + d, n);
    if (size > kBasisCap) throw Error(errs::capacity_exceeded, "monomial basis too large");
    monomials_.reserve(size);
    // descending lexicographic exponent vectors of fixed total degree
    std::vector<int> exps(n + 1, 0);
    auto emit = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            exps[pos] = remaining;
            monomials_.push_back(Monomial{exps});
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    emit(emit, 0, d);
}

const MonomialBasis& MonomialBasis::get(int n, int d) {
    static std::map<std::pair<int, int>, MonomialBasis> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find({n, d});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(n, d), MonomialBasis(n, d)).first;
    return it->second;
}

size_t MonomialBasis::index_of(const int* exps) const {
    size_t idx = 0;
    int remaining = d_;
    for (int pos = 0; pos < n_; ++pos) {
        int vars_after = n_ - pos;  // variables strictly after this position
        for (int t = remaining; t > exps[pos]; --t)
            idx += binom_u64(remaining - t + vars_after - 1, vars_after - 1);
        remaining -= exps[pos];
    }
    return idx;
}

const std::vector<Monomial>& monomial_basis(int n, int d) {
    return MonomialBasis::get(n, d).monomials();
}

HomogeneousPoly::HomogeneousPoly(FieldPtr field, int n, int e, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), n_(n), e_(e), coeffs_(std::move(coeffs)) {
    size_t expect = MonomialBasis::get(n, e).size();
    if (coeffs_.size() != expect)
        throw Error(errs::shape_mismatch, "coefficient vector has wrong length");
    for (uint32_t c : coeffs_)
        if (c >= field_->q()) throw Error(errs::out_of_range, "coefficient out of field range");
}

HomogeneousPoly HomogeneousPoly::zero(FieldPtr field, int n, int e) {
    return {std::move(field), n, e, std::vector<uint32_t>(MonomialBasis::get(n, e).size(), 0)};
}

bool HomogeneousPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

size_t HomogeneousPoly::leading_index() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    throw Error(errs::zero_polynomial, "zero polynomial has no leading coefficient");
}

NormalizedPoly::NormalizedPoly(HomogeneousPoly poly) : poly_(std::move(poly)) {
    if (poly_.coeff(poly_.leading_index()) != 1)
        throw Error(errs::out_of_range, "leading coefficient is not 1");
}

HomogeneousPoly poly_add(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    check_operands(a, b);
    if (a.degree() != b.degree())
        throw Error(errs::degree_mismatch, "sum of forms of different degrees");
    const Field& f = *a.field();
    std::vector<uint32_t> out(a.coeffs());
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], b.coeff(i));
    return {a.field(), a.vars_minus_one(), a.degree(), std::move(out)};
}

HomogeneousPoly poly_scale(const HomogeneousPoly& a, uint32_t c) {
    const Field& f = *a.field();
    std::vector<uint32_t> out(a.coeffs());
    for (auto& x : out) x = f.mul(x, c);
    return {a.field(), a.vars_minus_one(), a.degree(), std::move(out)};
}

HomogeneousPoly poly_mul(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    check_operands(a, b);
    const Field& f = *a.field();
    int n = a.vars_minus_one();
    const auto& basis_a = MonomialBasis::get(n, a.degree());
    const auto& basis_b = MonomialBasis::get(n, b.degree());
    const auto& basis_out = MonomialBasis::get(n, a.degree() + b.degree());
    std::vector<uint32_t> out(basis_out.size(), 0);
    std::vector<int> exps(n + 1);
    for (size_t i = 0; i < basis_a.size(); ++i) {
        if (a.coeff(i) == 0) continue;
        const auto& ma = basis_a.monomials()[i].exponents;
        for (size_t j = 0; j < basis_b.size(); ++j) {
            if (b.coeff(j) == 0) continue;
            const auto& mb = basis_b.monomials()[j].exponents;
            for (int v = 0; v <= n; ++v) exps[v] = ma[v] + mb[v];
            size_t k = basis_out.index_of(exps.data());
            out[k] = f.add(out[k], f.mul(a.coeff(i), b.coeff(j)));
        }
    }
    return {a.field(), n, a.degree() + b.degree(), std::move(out)};
}

NormalizedPoly normalize(const HomogeneousPoly& f) {
    size_t lead = f.leading_index();  // throws on zero
    uint32_t c = f.coeff(lead);
    if (c == 1) return NormalizedPoly(f);
    return NormalizedPoly(poly_scale(f, f.field()->inv(c)));
}

std::optional<HomogeneousPoly> divides(const HomogeneousPoly& g, const HomogeneousPoly& h) {
    check_operands(g, h);
    if (g.is_zero()) throw Error(errs::zero_polynomial, "divisor is zero");
    if (h.degree() < g.degree())
        throw Error(errs::degree_mismatch, "dividend degree below divisor degree");
    const Field& f = *g.field();
    int n = g.vars_minus_one();
    int dq = h.degree() - g.degree();
    const auto& basis_q = MonomialBasis::get(n, dq);
    const auto& basis_h = MonomialBasis::get(n, h.degree());
    const auto& basis_g = MonomialBasis::get(n, g.degree());

    // augmented system: column j is g * (j-th quotient monomial)
    size_t rows_n = basis_h.size(), cols_n = basis_q.size();
    std::vector<std::vector<uint32_t>> aug(rows_n, std::vector<uint32_t>(cols_n + 1, 0));
    std::vector<int> exps(n + 1);
    for (size_t j = 0; j < cols_n; ++j) {
        const auto& mq = basis_q.monomials()[j].exponents;
        for (size_t i = 0; i < basis_g.size(); ++i) {
            if (g.coeff(i) == 0) continue;
            const auto& mg = basis_g.monomials()[i].exponents;
            for (int v = 0; v <= n; ++v) exps[v] = mg[v] + mq[v];
            aug[basis_h.index_of(exps.data())][j] = g.coeff(i);
        }
    }
    for (size_t r = 0; r < rows_n; ++r) aug[r][cols_n] = h.coeff(r);

    auto x = linalg::solve_unique(f, std::move(aug), static_cast<int>(cols_n));
    if (!x) return std::nullopt;
    return HomogeneousPoly(g.field(), n, dq, std::move(*x));
}

std::optional<uint64_t> normalized_count_u64(uint32_t q, int n, int e) {
    uint64_t m = binom_u64(n + e, n);
    uint64_t total = 0, power = 1;
    for (uint64_t i = 0; i < m; ++i) {
        if (__builtin_add_overflow(total, power, &total)) return std::nullopt;
        if (i + 1 < m && __builtin_mul_overflow(power, static_cast<uint64_t>(q), &power))
            return std::nullopt;
    }
    return total;
}

namespace {

// q^0 .. q^(m-1); only called once the total count is known to fit
std::vector<uint64_t> power_table(uint32_t q, size_t m) {
    std::vector<uint64_t> pw(m);
    uint64_t p = 1;
    for (size_t i = 0; i < m; ++i) {
        pw[i] = p;
        if (i + 1 < m) p *= q;
    }
    return pw;
}

}  // namespace

uint64_t rank(const NormalizedPoly& np) {
    const HomogeneousPoly& p = np.poly();
    uint32_t q = p.field()->q();
    size_t m = p.coeffs().size();
    auto count = normalized_count_u64(q, p.vars_minus_one(), p.degree());
    if (!count) throw Error(errs::capacity_exceeded, "rank space exceeds 64 bits");
    auto pw = power_table(q, m);
    size_t lead = p.leading_index();
    uint64_t r = 0;
    for (size_t t = 0; t < lead; ++t) r += pw[m - 1 - t];
    for (size_t i = lead + 1; i < m; ++i) r += p.coeff(i) * pw[m - 1 - i];
    return r;
}

NormalizedPoly unrank(const FieldPtr& field, int n, int e, uint64_t index) {
    uint32_t q = field->q();
    auto count = normalized_count_u64(q, n, e);
    if (!count) throw Error(errs::capacity_exceeded, "rank space exceeds 64 bits");
    if (index >= *count) throw Error(errs::out_of_range, "rank index out of range");
    size_t m = MonomialBasis::get(n, e).size();
    auto pw = power_table(q, m);
    std::vector<uint32_t> coeffs(m, 0);
    size_t lead = 0;
    while (index >= pw[m - 1 - lead]) {
        index -= pw[m - 1 - lead];
        ++lead;
    }
    coeffs[lead] = 1;
    for (size_t i = lead + 1; i < m; ++i) {
        uint64_t div = pw[m - 1 - i];
        coeffs[i] = static_cast<uint32_t>(index / div);
        index %= div;
    }
    return NormalizedPoly(HomogeneousPoly(field, n, e, std::move(coeffs)));
}

bool normalized_less(const NormalizedPoly& a, const NormalizedPoly& b) {
    size_t la = a.poly().leading_index(), lb = b.poly().leading_index();
    if (la != lb) return la < lb;
    return a.poly().coeffs() < b.poly().coeffs();
}

std::string poly_to_string(const HomogeneousPoly& f) {
    if (f.is_zero()) return "0";
    const auto& basis = MonomialBasis::get(f.vars_minus_one(), f.degree());
    std::string out;
    for (size_t i = 0; i < basis.size(); ++i) {
        uint32_t c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        const auto& exps = basis.monomials()[i].exponents;
        std::string factors;
        for (size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += 'X' + std::to_string(v);
            if (exps[v] > 1) factors += '^' + std::to_string(exps[v]);
        }
        if (factors.empty()) {
            out += f.field()->elem_to_string(c);  // degree-0 form
        } else if (c == 1) {
            out += factors;
        } else {
            out += f.field()->elem_to_string(c) + '*' + factors;
        }
    }
    return out;
}

HomogeneousPoly poly_from_string(const FieldPtr& field, int n, int e, const std::string& text) {
    const Field& f = *field;
    const auto& basis = MonomialBasis::get(n, e);
    std::vector<uint32_t> coeffs(basis.size(), 0);

    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw Error(errs::parse_error, "empty polynomial");
    if (text[pos] == '0' && [&] {
            size_t look = pos + 1;
            while (look < text.size() && std::isspace(static_cast<unsigned char>(text[look])))
                ++look;
            return look == text.size();
        }())
        return HomogeneousPoly::zero(field, n, e);

    bool any_term = false;
    while (pos < text.size()) {
        // one term: '*'-separated coefficient and variable atoms
        uint32_t coeff = 1;
        std::vector<int> exps(n + 1, 0);
        int term_degree = 0;
        bool any_atom = false;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c == 'X' || c == 'x') {
                ++pos;
                size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (start == pos) throw Error(errs::parse_error, "variable index expected");
                int var = std::stoi(text.substr(start, pos - start));
                if (var > n) throw Error(errs::parse_error, "variable index out of range");
                int power = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    start = pos;
                    while (pos < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    if (start == pos) throw Error(errs::parse_error, "exponent expected");
                    power = std::stoi(text.substr(start, pos - start));
                }
                exps[var] += power;
                term_degree += power;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
                    ++pos;
                coeff = f.mul(coeff, f.elem_from_string(text.substr(start, pos - start)));
            } else {
                throw Error(errs::parse_error, std::string("unexpected character '") + c + "'");
            }
            any_atom = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any_atom) throw Error(errs::parse_error, "empty term");
        if (term_degree != e)
            throw Error(errs::degree_mismatch, "term degree differs from polynomial degree");
        size_t idx = basis.index_of(exps.data());
        coeffs[idx] = f.add(coeffs[idx], coeff);
        any_term = true;

        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw Error(errs::parse_error, "'+' expected between terms");
        ++pos;
        skip_ws();
        if (pos >= text.size()) throw Error(errs::parse_error, "trailing '+'");
    }
    if (!any_term) throw Error(errs::parse_error, "no terms found");
    return {field, n, e, std::move(coeffs)};
}

}  // namespace formcode
