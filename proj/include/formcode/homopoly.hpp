#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "formcode/gf.hpp"

namespace formcode {

/// Exponent vector of a power product in X_0..X_n.
struct Monomial {
    std::vector<int> exponents;

    [[nodiscard]] int degree() const {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }

    bool operator==(const Monomial&) const = default;
};

/// The degree-d monomials in n + 1 variables, graded-lex ordered with
/// X_0 > X_1 > ... > X_n (X_0^d first). Instances are cached and shared.
class MonomialBasis {
public:
    static const MonomialBasis& get(int n, int d);

    [[nodiscard]] int vars_minus_one() const { return n_; }
    [[nodiscard]] int degree() const { return d_; }
    [[nodiscard]] size_t size() const { return monomials_.size(); }
    [[nodiscard]] const std::vector<Monomial>& monomials() const { return monomials_; }

    /// Position of an exponent vector (length n + 1, summing to d).
    [[nodiscard]] size_t index_of(const int* exps) const;

private:
    MonomialBasis(int n, int d);
    int n_, d_;
    std::vector<Monomial> monomials_;
};

/// monomial_basis(n, d): the ordered list backing MonomialBasis.
[[nodiscard]] const std::vector<Monomial>& monomial_basis(int n, int d);

/// Degree-e form in X_0..X_n as a dense coefficient vector over the
/// graded-lex monomial order.
class HomogeneousPoly {
public:
    HomogeneousPoly(FieldPtr field, int n, int e, std::vector<uint32_t> coeffs);

    [[nodiscard]] static HomogeneousPoly zero(FieldPtr field, int n, int e);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] int vars_minus_one() const { return n_; }
    [[nodiscard]] int degree() const { return e_; }
    [[nodiscard]] const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    [[nodiscard]] uint32_t coeff(size_t i) const { return coeffs_[i]; }

    [[nodiscard]] bool is_zero() const;
    /// Index of the leading (first nonzero) coefficient; throws on zero.
    [[nodiscard]] size_t leading_index() const;

    bool operator==(const HomogeneousPoly& o) const {
        return n_ == o.n_ && e_ == o.e_ && coeffs_ == o.coeffs_ && field_->same_as(*o.field_);
    }

private:
    FieldPtr field_;
    int n_, e_;
    std::vector<uint32_t> coeffs_;
};

/// Nonzero form whose leading coefficient is 1: the canonical representative
/// of its scalar class. Constructor validates.
class NormalizedPoly {
public:
    explicit NormalizedPoly(HomogeneousPoly poly);

    [[nodiscard]] const HomogeneousPoly& poly() const { return poly_; }
    bool operator==(const NormalizedPoly& o) const { return poly_ == o.poly_; }

private:
    HomogeneousPoly poly_;
};

[[nodiscard]] HomogeneousPoly poly_add(const HomogeneousPoly& a, const HomogeneousPoly& b);
[[nodiscard]] HomogeneousPoly poly_scale(const HomogeneousPoly& a, uint32_t c);
[[nodiscard]] HomogeneousPoly poly_mul(const HomogeneousPoly& a, const HomogeneousPoly& b);

/// Scale a nonzero form so its leading coefficient becomes 1.
[[nodiscard]] NormalizedPoly normalize(const HomogeneousPoly& f);

/// Unique quotient F with G * F = H, if H lies in the image of
/// multiplication by G (solved as a linear system); nullopt otherwise.
[[nodiscard]] std::optional<HomogeneousPoly> divides(const HomogeneousPoly& g,
                                                     const HomogeneousPoly& h);

/// Number of normalized degree-e forms, (q^binom(n+e,n) - 1)/(q - 1), when it
/// fits in 64 bits.
[[nodiscard]] std::optional<uint64_t> normalized_count_u64(uint32_t q, int n, int e);

/// Position of a normalized form in the enumeration ordered by leading index
/// (ascending), then by the trailing coefficients read as a base-q integer,
/// most significant first.
[[nodiscard]] uint64_t rank(const NormalizedPoly& p);
[[nodiscard]] NormalizedPoly unrank(const FieldPtr& field, int n, int e, uint64_t index);

/// Same ordering as rank(), without the 64-bit range restriction.
[[nodiscard]] bool normalized_less(const NormalizedPoly& a, const NormalizedPoly& b);

/// Text form, e.g. "X0^2 + X0*X1 + 2*X2^2" (terms in basis order, unit
/// coefficients omitted). The zero form prints as "0".
[[nodiscard]] std::string poly_to_string(const HomogeneousPoly& f);

/// Parse the printer's grammar; terms may appear in any order and repeat.
[[nodiscard]] HomogeneousPoly poly_from_string(const FieldPtr& field, int n, int e,
                                               const std::string& text);

}  // namespace formcode
