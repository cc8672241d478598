#include "graphcount/poly.hpp"

#include <stdexcept>
#include <string>

#include "graphcount/errors.hpp"
#include "graphcount/perm.hpp"

namespace graphcount {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) {
    return IntPoly(std::vector<mpz_class>{c});
}

IntPoly IntPoly::monomial(const mpz_class& c, unsigned power) {
    std::vector<mpz_class> v(power + 1);
    v[power] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(size_t i) const {
    static const mpz_class zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - rhs.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<mpz_class> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const mpz_class& scalar) const {
    std::vector<mpz_class> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * scalar;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return IntPoly(std::move(v));
}

void IntPoly::mul_one_plus_power(unsigned k) {
    if (is_zero()) return;
    size_t old = coeffs_.size();
    coeffs_.resize(old + k);
    for (size_t i = old; i-- > 0;) coeffs_[i + k] += coeffs_[i];
}

void IntPoly::mul_one_minus_power(unsigned k) {
    if (is_zero()) return;
    size_t old = coeffs_.size();
    coeffs_.resize(old + k);
    for (size_t i = old; i-- > 0;) coeffs_[i + k] -= coeffs_[i];
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

IntPoly binomial_power(unsigned step, unsigned count) {
    std::vector<mpz_class> v(static_cast<size_t>(step) * count + 1);
    for (unsigned r = 0; r <= count; ++r) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), count, r);
        v[static_cast<size_t>(step) * r] = b;
    }
    return IntPoly(std::move(v));
}

IntPoly cycle_factor_product(const CycleType& lambda, int sign, unsigned stretch) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (stretch == 0) throw std::invalid_argument("stretch must be positive");
    IntPoly p = IntPoly::constant(1);
    for (unsigned k = 1; k <= lambda.degree(); ++k) {
        for (unsigned r = 0; r < lambda.count(k); ++r) {
            if (sign > 0) {
                p.mul_one_plus_power(stretch * k);
            } else {
                p.mul_one_minus_power(stretch * k);
            }
        }
    }
    return p;
}

bool try_divide(const IntPoly& num, const IntPoly& den, IntPoly& quotient) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (num.is_zero()) {
        quotient = IntPoly();
        return true;
    }
    if (num.degree() < den.degree()) return false;
    std::vector<mpz_class> rem = num.coeffs();
    std::vector<mpz_class> q(num.degree() - den.degree() + 1);
    const mpz_class& lead = den.coeff(den.degree());
    for (size_t qi = q.size(); qi-- > 0;) {
        mpz_class& top = rem[qi + den.degree()];
        if (top == 0) continue;
        mpz_class c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return false;
        q[qi] = c;
        for (int di = 0; di <= den.degree(); ++di) {
            rem[qi + di] -= c * den.coeff(di);
        }
    }
    for (const mpz_class& c : rem) {
        if (c != 0) return false;
    }
    quotient = IntPoly(std::move(q));
    return true;
}

IntPoly exact_quotient(const IntPoly& num, const IntPoly& den) {
    IntPoly q;
    if (!try_divide(num, den, q)) {
        throw ConsistencyError("polynomial division expected to be exact left a remainder");
    }
    return q;
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<mpq_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    RatPoly r;
    r.coeffs_ = std::move(v);
    return r;
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpq_class& RatPoly::coeff(size_t i) const {
    static const mpq_class zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
    std::vector<mpq_class> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
    RatPoly r;
    r.coeffs_ = std::move(v);
    r.normalize();
    return r;
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return RatPoly();
    std::vector<mpq_class> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    RatPoly r;
    r.coeffs_ = std::move(v);
    r.normalize();
    return r;
}

RatPoly RatPoly::operator*(const mpq_class& scalar) const {
    std::vector<mpq_class> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * scalar;
    RatPoly r;
    r.coeffs_ = std::move(v);
    r.normalize();
    return r;
}

void RatPoly::add_scaled(const mpq_class& scalar, const RatPoly& p) {
    if (p.coeffs_.size() > coeffs_.size()) coeffs_.resize(p.coeffs_.size());
    for (size_t i = 0; i < p.coeffs_.size(); ++i) coeffs_[i] += scalar * p.coeffs_[i];
    normalize();
}

TruncSeries::TruncSeries(unsigned max_degree) : coeffs_(max_degree + 1) {}

TruncSeries TruncSeries::one(unsigned max_degree) {
    TruncSeries s(max_degree);
    s.coeffs_[0] = 1;
    return s;
}

void TruncSeries::add(const TruncSeries& rhs) {
    if (rhs.coeffs_.size() != coeffs_.size()) {
        throw std::invalid_argument("adding series with different truncation degrees");
    }
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
}

void TruncSeries::add_scaled(const mpz_class& scalar, const TruncSeries& rhs) {
    if (rhs.coeffs_.size() != coeffs_.size()) {
        throw std::invalid_argument("adding series with different truncation degrees");
    }
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += scalar * rhs.coeffs_[i];
}

void TruncSeries::mul_poly(const IntPoly& p) {
    std::vector<mpz_class> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        size_t top = std::min(coeffs_.size() - i,
                              static_cast<size_t>(p.degree() + 1));
        for (size_t j = 0; j < top; ++j) v[i + j] += coeffs_[i] * p.coeff(j);
    }
    coeffs_ = std::move(v);
}

void TruncSeries::mul_geometric(unsigned k) {
    if (k == 0) throw std::invalid_argument("geometric factor needs positive exponent step");
    for (size_t i = k; i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - k];
}

TruncSeries inverse_cycle_product(const CycleType& lambda, unsigned max_degree) {
    TruncSeries s = TruncSeries::one(max_degree);
    for (unsigned k = 1; k <= lambda.degree(); ++k) {
        for (unsigned r = 0; r < lambda.count(k); ++r) s.mul_geometric(k);
    }
    return s;
}

namespace {

mpz_class divide_exact_or_throw(const mpz_class& num, const mpz_class& denom,
                                const char* what, size_t index) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    if (r != 0) {
        throw ConsistencyError(std::string(what) + ": coefficient of z^" +
                               std::to_string(index) + " is not divisible by the group order");
    }
    return q;
}

} // namespace

IntPoly scale_and_assert_integer(const IntPoly& accum, const mpz_class& denom,
                                 const char* what) {
    std::vector<mpz_class> v(accum.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] = divide_exact_or_throw(accum.coeff(i), denom, what, i);
    }
    return IntPoly(std::move(v));
}

IntPoly scale_and_assert_integer(const RatPoly& accum, const char* what) {
    std::vector<mpz_class> v(accum.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        const mpq_class& c = accum.coeff(i);
        if (c.get_den() != 1) {
            throw ConsistencyError(std::string(what) + ": coefficient of z^" +
                                   std::to_string(i) + " is not an integer");
        }
        v[i] = c.get_num();
    }
    return IntPoly(std::move(v));
}

std::vector<mpz_class> scale_and_assert_integer(const std::vector<mpz_class>& accum,
                                                const mpz_class& denom, const char* what) {
    std::vector<mpz_class> v(accum.size());
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] = divide_exact_or_throw(accum[i], denom, what, i);
    }
    return v;
}

} // namespace graphcount
