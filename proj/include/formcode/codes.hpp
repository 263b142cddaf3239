#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "formcode/bigint.hpp"
#include "formcode/homopoly.hpp"
#include "formcode/subspace.hpp"

namespace formcode {

enum class Family { irreducible, linear, custom };

[[nodiscard]] const char* family_name(Family f);
[[nodiscard]] Family family_from_name(const std::string& s);

/// How build_code establishes the pairwise-coprimality precondition.
enum class CoprimePolicy {
    certify,     // run the divisibility certification
    structural,  // guaranteed by construction (distinct irreducibles of equal
                 // degree, or powers of distinct lines)
};

/// A constant-dimension subspace code: one codeword G * R_{d-e} per
/// generator, inside the degree-d coefficient space F_q^binom(n+d,n).
/// Codewords are aligned with the generators, which are kept in rank order.
class SubspaceCode {
public:
    SubspaceCode(FieldPtr field, int n, int e, int d, Family family,
                 std::vector<NormalizedPoly> generators, std::vector<Subspace> codewords);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] int vars_minus_one() const { return n_; }
    [[nodiscard]] int generator_degree() const { return e_; }
    [[nodiscard]] int form_degree() const { return d_; }
    [[nodiscard]] Family family() const { return family_; }
    [[nodiscard]] size_t size() const { return codewords_.size(); }
    [[nodiscard]] const std::vector<NormalizedPoly>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<Subspace>& codewords() const { return codewords_; }
    [[nodiscard]] int ambient() const;           // binom(n+d, n)
    [[nodiscard]] int codeword_dim() const;      // binom(n+d-e, n)

private:
    FieldPtr field_;
    int n_, e_, d_;
    Family family_;
    std::vector<NormalizedPoly> generators_;
    std::vector<Subspace> codewords_;
};

/// The span of G * (every degree-(d-e) monomial): the codeword attached to G.
[[nodiscard]] Subspace build_codeword(const NormalizedPoly& g, int d);

/// Assembles the code for a coprime family of degree-e generators.
[[nodiscard]] SubspaceCode build_code(std::vector<NormalizedPoly> generators, int d,
                                      Family family = Family::custom,
                                      CoprimePolicy policy = CoprimePolicy::certify,
                                      bool override_capacity = false);

/// Pairwise distance of the construction: 2*binom(n+d-e,n) when d - e < e,
/// else 2*(binom(n+d-e,n) - binom(n+d-2e,n)).
[[nodiscard]] int theoretical_distance(int n, int d, int e);

struct CodeParameters {
    int N = 0;                 // packet length (ambient dimension)
    int l = 0;                 // codeword dimension
    BigUint size;              // number of codewords
    double logq_size = 0.0;    // log_q size
    std::optional<int> D;      // minimum distance; absent for a single codeword
    double lambda = 0.0;       // l / N
    std::optional<double> delta;  // D / (2l)
    double rate = 0.0;         // logq_size / (N*l)
    bool erratum = false;      // d == 2e boundary cell (see README)
};

/// Parameters from the construction; with `verify` set, every pairwise
/// distance is recomputed with the subspace oracle and checked against the
/// formula (throws verify_failed on any mismatch).
[[nodiscard]] CodeParameters code_params(const SubspaceCode& code, bool verify = false);

/// Same parameters straight from (q, n, e, d) and a family size, with no
/// codewords materialized.
[[nodiscard]] CodeParameters code_params_from_counts(uint32_t q, int n, int e, int d,
                                                     BigUint size);

/// Exact minimum pairwise distance by exhaustive search (independent of
/// theoretical_distance). Guarded at 10^7 pairs.
[[nodiscard]] int min_distance_bruteforce(const SubspaceCode& code);

[[nodiscard]] std::string params_csv_header();
[[nodiscard]] std::string params_csv_row(int e, int d, const CodeParameters& p);

/// Serialization: header "q n e d family size", then per codeword the
/// generator in polynomial text followed by its subspace block.
void write_code(std::ostream& os, const SubspaceCode& code);
[[nodiscard]] SubspaceCode read_code(std::istream& is);

}  // namespace formcode
