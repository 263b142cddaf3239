#include "formcode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "formcode/error.hpp"
#include "formcode/irreducibles.hpp"
#include "formcode/util.hpp"

namespace formcode {

const char* family_name(Family f) {
    switch (f) {
        case Family::irreducible: return "irr";
        case Family::linear: return "linear";
        case Family::custom: return "custom";
    }
    return "custom";
}

Family family_from_name(const std::string& s) {
    if (s == "irr") return Family::irreducible;
    if (s == "linear") return Family::linear;
    if (s == "custom") return Family::custom;
    throw Error(errs::parse_error, "unknown family '" + s + "'");
}

SubspaceCode::SubspaceCode(FieldPtr field, int n, int e, int d, Family family,
                           std::vector<NormalizedPoly> generators,
                           std::vector<Subspace> codewords)
    : field_(std::move(field)),
      n_(n),
      e_(e),
      d_(d),
      family_(family),
      generators_(std::move(generators)),
      codewords_(std::move(codewords)) {
    if (generators_.size() != codewords_.size())
        throw Error(errs::shape_mismatch, "generator and codeword counts differ");
}

int SubspaceCode::ambient() const { return static_cast<int>(binom_u64(n_ + d_, n_)); }

int SubspaceCode::codeword_dim() const {
    return static_cast<int>(binom_u64(n_ + d_ - e_, n_));
}

Subspace build_codeword(const NormalizedPoly& g, int d) {
    const HomogeneousPoly& gp = g.poly();
    int n = gp.vars_minus_one();
    int e = gp.degree();
    if (d < e) throw Error(errs::degree_mismatch, "form degree below generator degree");
    const auto& factors = monomial_basis(n, d - e);
    std::vector<std::vector<uint32_t>> vectors;
    vectors.reserve(factors.size());
    for (const auto& mono : factors) {
        std::vector<uint32_t> coeffs(monomial_basis(n, d - e).size(), 0);
        coeffs[MonomialBasis::get(n, d - e).index_of(mono.exponents.data())] = 1;
        HomogeneousPoly m(gp.field(), n, d - e, std::move(coeffs));
        vectors.push_back(poly_mul(gp, m).coeffs());
    }
    Subspace s = Subspace::from_vectors(gp.field(), static_cast<int>(binom_u64(n + d, n)),
                                        vectors);
    if (s.dim() != static_cast<int>(binom_u64(n + d - e, n)))
        throw Error("internal_error", "codeword dimension disagrees with the construction");
    return s;
}

SubspaceCode build_code(std::vector<NormalizedPoly> generators, int d, Family family,
                        CoprimePolicy policy, bool override_capacity) {
    if (generators.empty()) throw Error(errs::empty_family, "no generators given");
    int e = generators.front().poly().degree();
    int n = generators.front().poly().vars_minus_one();
    if (d < e) throw Error(errs::degree_mismatch, "form degree below generator degree");

    std::sort(generators.begin(), generators.end(), normalized_less);

    if (policy == CoprimePolicy::certify) {
        auto report = pairwise_coprime(generators, override_capacity);
        if (!report.ok) {
            std::string what = "generators " + poly_to_string(generators[report.first].poly()) +
                               " and " + poly_to_string(generators[report.second].poly());
            what += report.common_divisor
                        ? " share " + poly_to_string(report.common_divisor->poly())
                        : " are equal";
            throw Error(errs::non_coprime_family, what);
        }
    } else {
        // structural families still must not contain duplicates
        for (size_t i = 0; i + 1 < generators.size(); ++i)
            if (generators[i] == generators[i + 1])
                throw Error(errs::non_coprime_family, "duplicate generator");
    }

    std::vector<Subspace> codewords;
    codewords.reserve(generators.size());
    for (const auto& g : generators) codewords.push_back(build_codeword(g, d));

    // coprime generators induce distinct codewords
    std::unordered_set<uint64_t> seen;
    for (const auto& w : codewords) {
        uint64_t h = 1469598103934665603ULL;
        for (const auto& row : w.basis_rows())
            for (uint32_t x : row) h = (h ^ x) * 1099511628211ULL;
        seen.insert(h);
    }
    if (seen.size() != codewords.size()) {
        for (size_t i = 0; i < codewords.size(); ++i)
            for (size_t j = i + 1; j < codewords.size(); ++j)
                if (codewords[i] == codewords[j])
                    throw Error("internal_error", "coprime generators produced equal codewords");
    }

    return {generators.front().poly().field(), n, e, d, family, std::move(generators),
            std::move(codewords)};
}

int theoretical_distance(int n, int d, int e) {
    if (e < 1 || d < e) throw Error(errs::degree_mismatch, "need d >= e >= 1");
    uint64_t l = binom_u64(n + d - e, n);
    if (d - e < e) return static_cast<int>(2 * l);
    return static_cast<int>(2 * (l - binom_u64(n + d - 2 * e, n)));
}

CodeParameters code_params_from_counts(uint32_t q, int n, int e, int d, BigUint size) {
    if (size.is_zero()) throw Error(errs::empty_family, "family has no members");
    CodeParameters p;
    p.N = static_cast<int>(binom_u64(n + d, n));
    p.l = static_cast<int>(binom_u64(n + d - e, n));
    p.logq_size = size.log2d() / std::log2(static_cast<double>(q));
    p.lambda = static_cast<double>(p.l) / p.N;
    p.rate = p.logq_size / (static_cast<double>(p.N) * p.l);
    p.erratum = d == 2 * e;
    if (size > BigUint(1)) {
        p.D = theoretical_distance(n, d, e);
        p.delta = static_cast<double>(*p.D) / (2.0 * p.l);
    }
    p.size = std::move(size);
    return p;
}

CodeParameters code_params(const SubspaceCode& code, bool verify) {
    CodeParameters p =
        code_params_from_counts(code.field()->q(), code.vars_minus_one(),
                                code.generator_degree(), code.form_degree(),
                                BigUint(code.size()));
    if (verify && p.D) {
        const auto& words = code.codewords();
        uint64_t pairs = static_cast<uint64_t>(words.size()) * (words.size() - 1) / 2;
        if (pairs > 10000000ULL)
            throw Error(errs::budget_exceeded, "pairwise verification over " +
                                                   std::to_string(pairs) + " pairs");
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i + 1; j < words.size(); ++j) {
                int got = dist(words[i], words[j]);
                if (got != *p.D)
                    throw Error(errs::verify_failed,
                                "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") at distance " + std::to_string(got) + ", formula says " +
                                    std::to_string(*p.D));
            }
    }
    return p;
}

int min_distance_bruteforce(const SubspaceCode& code) {
    const auto& words = code.codewords();
    if (words.size() < 2)
        throw Error(errs::out_of_range, "minimum distance needs at least two codewords");
    uint64_t pairs = static_cast<uint64_t>(words.size()) * (words.size() - 1) / 2;
    if (pairs > 10000000ULL)
        throw Error(errs::budget_exceeded,
                    "exhaustive search over " + std::to_string(pairs) + " pairs");
    int best = -1;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            int d = dist(words[i], words[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

std::string params_csv_header() {
    return "e,d,N,l,size,logq_size,D,lambda,delta,R,erratum_flag";
}

std::string params_csv_row(int e, int d, const CodeParameters& p) {
    std::ostringstream os;
    os << e << ',' << d << ',' << p.N << ',' << p.l << ','
       << p.size.to_string() << ',' << format3(p.logq_size) << ',';
    if (p.D) os << *p.D;
    os << ',' << format3_ratio(p.l, p.N) << ',';
    if (p.D) os << format3_ratio(*p.D, 2ULL * p.l);
    os << ',' << format3(p.rate) << ',' << (p.erratum ? 1 : 0);
    return os.str();
}

void write_code(std::ostream& os, const SubspaceCode& code) {
    os << code.field()->q() << ' ' << code.vars_minus_one() << ' ' << code.generator_degree()
       << ' ' << code.form_degree() << ' ' << family_name(code.family()) << ' ' << code.size()
       << '\n';
    for (size_t i = 0; i < code.size(); ++i) {
        os << poly_to_string(code.generators()[i].poly()) << '\n';
        write_subspace(os, code.codewords()[i]);
    }
}

SubspaceCode read_code(std::istream& is) {
    uint32_t q = 0;
    int n = 0, e = 0, d = 0;
    std::string family_str;
    uint64_t size = 0;
    if (!(is >> q >> n >> e >> d >> family_str >> size))
        throw Error(errs::parse_error, "malformed code header");
    Family family = family_from_name(family_str);
    std::string rest;
    std::getline(is, rest);

    auto [p, m] = factor_prime_power(q);
    FieldPtr field = Field::make(p, m);

    std::vector<NormalizedPoly> generators;
    std::vector<Subspace> codewords;
    for (uint64_t i = 0; i < size; ++i) {
        std::string poly_line;
        if (!std::getline(is, poly_line)) throw Error(errs::parse_error, "truncated code file");
        generators.push_back(NormalizedPoly(poly_from_string(field, n, e, poly_line)));
        auto loaded = read_subspace(is, false);
        std::getline(is, rest);  // consume the trailing newline of the block
        codewords.push_back(std::move(loaded.subspace));
    }
    return {field, n, e, d, family, std::move(generators), std::move(codewords)};
}

}  // namespace formcode
