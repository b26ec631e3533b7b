#include "piped/exactmath.hpp"

#include <sstream>
#include <stdexcept>

namespace piped {

BigInt gcd_many(const std::vector<BigInt>& values) {
    BigInt g = 0;
    for (const BigInt& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BigInt bigint_from_string(const std::string& text) {
    BigInt out;
    if (text.empty() || mpz_set_str(out.get_mpz_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("malformed integer: " + text);
    }
    return out;
}

Rational rational_from_decimal(std::string_view text) {
    bool negative = false;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    bool seen_digit = false;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal: " + std::string(text));
            seen_dot = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed decimal: " + std::string(text));
    BigInt num = bigint_from_string(digits);
    if (negative) num = -num;
    BigInt den = 1;
    for (long i = 0; i < frac_digits; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BivariatePoly::BivariatePoly(std::initializer_list<Term> terms) {
    for (const Term& t : terms) add_term(t.m_exp, t.n_exp, BigInt(t.coeff));
}

BivariatePoly::BivariatePoly(const std::vector<Term>& terms) {
    for (const Term& t : terms) add_term(t.m_exp, t.n_exp, BigInt(t.coeff));
}

BivariatePoly BivariatePoly::constant(long c) {
    BivariatePoly p;
    p.add_term(0, 0, BigInt(c));
    return p;
}

void BivariatePoly::add_term(int m_exp, int n_exp, const BigInt& coeff) {
    if (coeff == 0) return;
    Key key{m_exp, n_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int BivariatePoly::total_degree() const {
    int deg = -1;
    for (const auto& [key, coeff] : terms_) deg = std::max(deg, key.first + key.second);
    return deg;
}

bool BivariatePoly::is_homogeneous(int degree) const {
    for (const auto& [key, coeff] : terms_) {
        if (key.first + key.second != degree) return false;
    }
    return true;
}

BigInt BivariatePoly::eval(const BigInt& m, const BigInt& n) const {
    BigInt total = 0;
    BigInt mp, np;
    for (const auto& [key, coeff] : terms_) {
        mpz_pow_ui(mp.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(key.first));
        mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(key.second));
        total += coeff * mp * np;
    }
    return total;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
    return out;
}

BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly out = p;
    for (const auto& [key, coeff] : q.terms_) out.add_term(key.first, key.second, coeff);
    return out;
}

BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) {
    return p + (-q);
}

BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly out;
    for (const auto& [pk, pc] : p.terms_) {
        for (const auto& [qk, qc] : q.terms_) {
            out.add_term(pk.first + qk.first, pk.second + qk.second, pc * qc);
        }
    }
    return out;
}

BivariatePoly BivariatePoly::operator*(long scalar) const {
    BivariatePoly out;
    if (scalar == 0) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * scalar);
    return out;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest m-degree first reads closest to handwritten order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, coeff] = *it;
        if (!first) os << (coeff > 0 ? " + " : " - ");
        else if (coeff < 0) os << "-";
        first = false;
        BigInt mag = abs(coeff);
        bool has_vars = key.first > 0 || key.second > 0;
        if (mag != 1 || !has_vars) os << mag.get_str();
        if (key.first > 0) {
            os << "m";
            if (key.first > 1) os << "^" << key.first;
        }
        if (key.second > 0) {
            os << "n";
            if (key.second > 1) os << "^" << key.second;
        }
    }
    return os.str();
}

int UnivariatePoly::sign_at(const Rational& t) const {
    return sgn(eval_homogenized(t.get_num(), t.get_den()));
}

BigInt UnivariatePoly::eval_homogenized(const BigInt& num, const BigInt& den) const {
    // sum_k c_k num^k den^(4-k); den^4 > 0 preserves the sign of q(num/den).
    BigInt total = 0;
    BigInt np = 1;
    std::array<BigInt, 5> num_pows;
    for (int k = 0; k <= 4; ++k) {
        num_pows[k] = np;
        np *= num;
    }
    BigInt dp = 1;
    for (int k = 4; k >= 0; --k) {
        total += coeffs_[k] * num_pows[k] * dp;
        dp *= den;
    }
    return total;
}

}  // namespace piped
