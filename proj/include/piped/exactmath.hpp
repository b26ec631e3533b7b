#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace piped {

// Arbitrary-precision integers and rationals. Degree-6 forms at
// |m|,|n| ~ 1e6 reach ~1e38, so fixed-width types are never enough.
using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign_of(const BigInt& v) { return sgn(v); }

// Nonnegative gcd of all inputs; empty or all-zero input yields 0.
BigInt gcd_many(const std::vector<BigInt>& values);

// Parse a base-10 integer string. Always decimal: leading zeros never switch
// the base, unlike the mpz_class string constructor. Throws on junk.
BigInt bigint_from_string(const std::string& text);

// Parse a plain decimal literal like "-0.81999264776" into an exact rational.
Rational rational_from_decimal(std::string_view text);

// Sparse exact polynomial in (m, n): a map from exponent pairs to nonzero
// coefficients. Equality is coefficient-map equality.
class BivariatePoly {
public:
    // (m exponent, n exponent)
    using Key = std::pair<int, int>;

    struct Term {
        int m_exp;
        int n_exp;
        long coeff;
    };

    BivariatePoly() = default;
    BivariatePoly(std::initializer_list<Term> terms);
    explicit BivariatePoly(const std::vector<Term>& terms);

    static BivariatePoly constant(long c);

    void add_term(int m_exp, int n_exp, const BigInt& coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigInt>& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous(int degree) const;

    BigInt eval(const BigInt& m, const BigInt& n) const;

    BivariatePoly operator-() const;
    friend BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q);
    friend BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q);
    friend BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q);
    BivariatePoly operator*(long scalar) const;

    bool operator==(const BivariatePoly& other) const { return terms_ == other.terms_; }

    std::string to_string() const;

private:
    std::map<Key, BigInt> terms_;
};

// Dense degree-4 univariate polynomial; every range bound radicand in the
// families is a quartic.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    // c0 + c1 t + c2 t^2 + c3 t^3 + c4 t^4
    UnivariatePoly(long c0, long c1, long c2, long c3, long c4)
        : coeffs_{BigInt(c0), BigInt(c1), BigInt(c2), BigInt(c3), BigInt(c4)} {}

    const std::array<BigInt, 5>& coeffs() const { return coeffs_; }

    // Exact sign of q(t): denominators are cleared, so the computation is one
    // multiprecision dot product with no intermediate reductions.
    int sign_at(const Rational& t) const;

    BigInt eval_homogenized(const BigInt& num, const BigInt& den) const;

private:
    std::array<BigInt, 5> coeffs_{};
};

}  // namespace piped
