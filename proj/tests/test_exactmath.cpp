#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "piped/exactmath.hpp"

using namespace piped;

namespace {

BivariatePoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_terms(0, 5);
    std::uniform_int_distribution<int> exp(0, 4);
    std::uniform_int_distribution<long> coeff(-9, 9);
    BivariatePoly p;
    int k = n_terms(rng);
    for (int i = 0; i < k; ++i) p.add_term(exp(rng), exp(rng), BigInt(coeff(rng)));
    return p;
}

const UnivariatePoly kQ1(-3, 4, 16, 24, 12);  // 12t^4 + 24t^3 + 16t^2 + 4t - 3

}  // namespace

TEST_CASE("poly_add") {
    BivariatePoly m_plus_n{{1, 0, 1}, {0, 1, 1}};
    BivariatePoly m_minus_n{{1, 0, 1}, {0, 1, -1}};
    CHECK(m_plus_n + m_minus_n == BivariatePoly{{1, 0, 2}});

    BivariatePoly p{{2, 1, 7}, {0, 0, -3}};
    CHECK(p + BivariatePoly{} == p);

    BivariatePoly f1{{0, 2, 1}, {2, 0, -2}};  // n^2 - 2m^2
    BivariatePoly f2{{0, 2, 1}, {2, 0, 2}};   // n^2 + 2m^2
    CHECK(f1 + f2 == BivariatePoly{{0, 2, 2}});
}

TEST_CASE("poly_mul") {
    BivariatePoly m_plus_n{{1, 0, 1}, {0, 1, 1}};
    BivariatePoly m_minus_n{{1, 0, 1}, {0, 1, -1}};
    CHECK(m_plus_n * m_minus_n == BivariatePoly{{2, 0, 1}, {0, 2, -1}});

    BivariatePoly p{{3, 1, 5}, {1, 1, -2}};
    CHECK(p * BivariatePoly::constant(1) == p);

    BivariatePoly q1{{0, 2, 1}, {1, 1, 2}, {2, 0, 2}};  // n^2 + 2mn + 2m^2
    BivariatePoly q2{{0, 2, 1}, {1, 1, 4}, {2, 0, 2}};  // n^2 + 4mn + 2m^2
    BivariatePoly expanded{{0, 4, 1}, {1, 3, 6}, {2, 2, 12}, {3, 1, 12}, {4, 0, 4}};
    CHECK(q1 * q2 == expanded);
}

TEST_CASE("poly_eval") {
    BivariatePoly f1{{0, 2, 1}, {2, 0, -2}};
    CHECK(f1.eval(1, 4) == 14);

    BivariatePoly p{{2, 1, 7}, {1, 0, 3}, {0, 0, -11}};
    CHECK(p.eval(0, 0) == -11);

    BivariatePoly q1{{0, 2, 1}, {1, 1, 2}, {2, 0, 2}};
    CHECK(q1.eval(1, 4) == 26);
}

TEST_CASE("quartic_sign_at") {
    CHECK(kQ1.sign_at(Rational(1, 4)) == -1);
    CHECK(kQ1.eval_homogenized(1, 4) == -148);
    CHECK(kQ1.sign_at(Rational(1, 3)) == 1);
    CHECK(kQ1.eval_homogenized(1, 3) == 93);

    UnivariatePoly with_rational_root(-1, 0, 0, 0, 1);  // t^4 - 1
    CHECK(with_rational_root.sign_at(Rational(1)) == 0);
    CHECK(with_rational_root.sign_at(Rational(-1)) == 0);
}

TEST_CASE("gcd_many") {
    CHECK(gcd_many({BigInt(8), BigInt(12)}) == 4);
    CHECK(gcd_many({BigInt(0), BigInt(0)}) == 0);
    CHECK(gcd_many({}) == 0);
    CHECK(gcd_many({BigInt(49504), BigInt(37128), BigInt(49920), BigInt(61880),
                    BigInt(70304), BigInt(85272), BigInt(21672), BigInt(98600),
                    BigInt(54040)}) == 8);
}

TEST_CASE("gcd_many output divides inputs and reduction is coprime") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> val(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> vals;
        for (int i = 0; i < 5; ++i) vals.push_back(BigInt(val(rng)));
        BigInt g = gcd_many(vals);
        if (g == 0) continue;
        std::vector<BigInt> reduced;
        for (const BigInt& v : vals) {
            CHECK(v % g == 0);
            reduced.push_back(v / g);
        }
        CHECK(gcd_many(reduced) == 1);
    }
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> point(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        BivariatePoly p = random_poly(rng);
        BivariatePoly q = random_poly(rng);
        BigInt m(point(rng)), n(point(rng));
        CHECK((p * q).eval(m, n) == p.eval(m, n) * q.eval(m, n));
        CHECK((p + q).eval(m, n) == p.eval(m, n) + q.eval(m, n));
    }
}

TEST_CASE("add and mul are commutative and associative") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        BivariatePoly p = random_poly(rng);
        BivariatePoly q = random_poly(rng);
        BivariatePoly r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("quartic sign agrees with a high-precision float oracle") {
    // 256-bit floats are used only here, as a test oracle.
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> num(-3000, 3000);
    std::uniform_int_distribution<long> den(1, 1000);
    const UnivariatePoly quartics[3] = {
        kQ1,
        UnivariatePoly(213, 848, 1256, 832, 208),
        UnivariatePoly(31, 660, 1296, 1080, 324),
    };
    for (int trial = 0; trial < 1000; ++trial) {
        Rational t(num(rng), den(rng));
        t.canonicalize();
        const UnivariatePoly& q = quartics[trial % 3];
        mpf_class tf(t, 256);
        mpf_class acc(0, 256);
        for (int k = 4; k >= 0; --k) acc = acc * tf + mpf_class(q.coeffs()[static_cast<size_t>(k)], 256);
        int oracle = sgn(acc);
        // The float oracle cannot certify an exact zero; skip ties.
        if (oracle == 0) continue;
        CHECK(q.sign_at(t) == oracle);
    }
}

TEST_CASE("rational_from_decimal") {
    CHECK(rational_from_decimal("0.25") == Rational(1, 4));
    CHECK(rational_from_decimal("-0.5") == Rational(-1, 2));
    CHECK(rational_from_decimal("3") == Rational(3));
    Rational r = rational_from_decimal("0.28126795021");
    CHECK(r.get_num() == BigInt("28126795021"));
    CHECK(r.get_den() == BigInt("100000000000"));
    CHECK_THROWS_AS(rational_from_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_decimal("abc"), std::invalid_argument);
}
