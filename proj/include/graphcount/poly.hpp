#pragma once

// Exact univariate polynomials over Z and Q, and truncated power series
// over Z. Dense coefficient vectors, GMP scalars, no floating point.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace graphcount {

/// Polynomial in Z[z], dense ascending coefficients, no trailing zeros
/// (the zero polynomial has an empty vector and degree -1).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, unsigned power);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^i (0 outside the stored range).
    const mpz_class& coeff(size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const mpz_class& scalar) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly&) const = default;

    /// Multiply in place by (1 + z^k).
    void mul_one_plus_power(unsigned k);
    /// Multiply in place by (1 - z^k).
    void mul_one_minus_power(unsigned k);

    mpz_class eval(const mpz_class& x) const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// (1 + z^step)^count expanded with binomial coefficients.
IntPoly binomial_power(unsigned step, unsigned count);

/// prod_k (1 + sign * z^{stretch*k})^{j_k} for a cycle type.
/// sign must be +1 or -1. With sign=-1, stretch=1 this is the
/// characteristic-style product prod (1 - z^k)^{j_k}.
IntPoly cycle_factor_product(const class CycleType& lambda, int sign, unsigned stretch);

/// Polynomial long division in Z[z]. Whenever num = q * den holds for
/// some q in Z[z], the division runs to completion and finds it; returns
/// false if a leading-coefficient division fails or a remainder is left.
bool try_divide(const IntPoly& num, const IntPoly& den, IntPoly& quotient);

/// As try_divide, but a failed division is a ConsistencyError: callers
/// use this only where exactness is guaranteed by an identity.
IntPoly exact_quotient(const IntPoly& num, const IntPoly& den);

/// Polynomial in Q[z], used for rational averages before they are shown
/// to be integral. Same conventions as IntPoly.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);
    static RatPoly from_int(const IntPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(size_t i) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    RatPoly operator+(const RatPoly& rhs) const;
    RatPoly operator*(const RatPoly& rhs) const;
    RatPoly operator*(const mpq_class& scalar) const;
    bool operator==(const RatPoly&) const = default;

    /// this += scalar * p, without building temporaries.
    void add_scaled(const mpq_class& scalar, const RatPoly& p);

private:
    void normalize();
    std::vector<mpq_class> coeffs_;
};

/// Power series over Z truncated at degree `max_degree` (inclusive).
/// Always stores exactly max_degree+1 coefficients.
class TruncSeries {
public:
    explicit TruncSeries(unsigned max_degree);
    static TruncSeries one(unsigned max_degree);

    unsigned max_degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const mpz_class& coeff(size_t i) const { return coeffs_[i]; }
    mpz_class& coeff(size_t i) { return coeffs_[i]; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    void add(const TruncSeries& rhs);
    /// this += scalar * rhs, coefficientwise.
    void add_scaled(const mpz_class& scalar, const TruncSeries& rhs);
    /// Multiply in place by a polynomial, dropping terms above the cap.
    void mul_poly(const IntPoly& p);
    /// Multiply in place by 1/(1 - z^k) via stride-k prefix sums.
    void mul_geometric(unsigned k);

    bool operator==(const TruncSeries&) const = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// Truncation of prod_k (1 - z^k)^{-j_k}: the fixed-point series of one
/// group element acting on multisets of edge slots.
TruncSeries inverse_cycle_product(const class CycleType& lambda, unsigned max_degree);

/// Divide every coefficient by `denom`, insisting on exact integer
/// results; a remainder anywhere is a ConsistencyError tagged `what`.
IntPoly scale_and_assert_integer(const IntPoly& accum, const mpz_class& denom,
                                 const char* what);
IntPoly scale_and_assert_integer(const RatPoly& accum, const char* what);
std::vector<mpz_class> scale_and_assert_integer(const std::vector<mpz_class>& accum,
                                                const mpz_class& denom, const char* what);

} // namespace graphcount
