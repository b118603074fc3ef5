#include "oracles.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace riordan;

namespace {

const Field Q = Field::rational();
const Field F7 = Field::modular(7);

Scalar r(long a, long b = 1) { return Q.from_fraction(a, b); }

}  // namespace

TEST(Scalar, RationalArithmetic) {
    EXPECT_EQ(r(1, 2) + r(1, 3), r(5, 6));
    EXPECT_EQ(r(1, 2) - r(1, 3), r(1, 6));
    EXPECT_EQ(r(2, 3) * r(3, 4), r(1, 2));
    EXPECT_EQ(r(2, 3) / r(4), r(1, 6));
    EXPECT_EQ((r(6, -4)).to_string(), "-3/2");
}

TEST(Scalar, ModularArithmetic) {
    EXPECT_EQ(F7.from_int(3) * F7.from_int(5), F7.one());
    EXPECT_EQ(F7.from_int(-1).residue(), 6u);
    EXPECT_EQ(F7.from_int(3).inverse(), F7.from_int(5));
    EXPECT_EQ(F7.from_int(4).to_string(), "4 mod 7");
}

TEST(Scalar, Errors) {
    try {
        (void)(r(2, 3) / Q.zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::division_by_zero);
    }
    try {
        (void)(r(1) + F7.one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::backend_mismatch);
    }
    EXPECT_THROW(Field::modular(8), Error);
    EXPECT_THROW(Field::modular(1), Error);
    EXPECT_NE(r(1), F7.one());
}

TEST(Scalar, Parsing) {
    EXPECT_EQ(parse_scalar("3/4"), r(3, 4));
    EXPECT_EQ(parse_scalar("-6/8"), r(-3, 4));
    EXPECT_EQ(parse_scalar("12"), r(12));
    EXPECT_EQ(parse_scalar("10 mod 7"), F7.from_int(3));
    EXPECT_EQ(parse_scalar("1/2", F7), F7.from_int(4));
    for (const char* bad : {"", "x", "1/", "/2", "1//2", "3 mod", "3 mod 8"}) {
        EXPECT_THROW(parse_scalar(bad), Error) << bad;
    }
    try {
        (void)parse_scalar("3 mod 5", F7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::backend_mismatch);
    }
    // formatting mirrors parsing
    gen::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        Scalar a = gen::scalar(rng, Q, 50);
        EXPECT_EQ(parse_scalar(a.to_string()), a);
        Scalar b = gen::scalar(rng, F7);
        EXPECT_EQ(parse_scalar(b.to_string()), b);
    }
}

TEST(Scalar, FactorialInverse) {
    EXPECT_EQ(factorial_inv(4, Q), r(1, 24));
    EXPECT_EQ(factorial_inv(3, F7), F7.from_int(6));
    EXPECT_EQ(factorial_inv(0, F7), F7.one());
    try {
        (void)factorial_inv(7, F7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_invertible);
    }
}

TEST(Scalar, ExtendedBinomial) {
    // oracle: (1/2)(1/2 - 1)/2!
    const mpq_class half(1, 2);
    const mpq_class expect = half * (half - 1) / 2;
    EXPECT_EQ(expect, mpq_class(-1, 8));
    EXPECT_EQ(extended_binomial(r(1, 2), 2), Scalar::rational(expect));
    EXPECT_EQ(extended_binomial(r(5), 2), r(10));
    EXPECT_EQ(extended_binomial(r(7, 3), 0), r(1));
    for (long n = 0; n <= 9; ++n)
        for (long k = 0; k <= 11; ++k)
            EXPECT_EQ(extended_binomial(r(n), static_cast<unsigned>(k)), Scalar::rational(mpq_class(oracle::binom(n, k))));
}

TEST(Scalar, QBinomial) {
    // oracle: (1 - 2^2) / (1 - 2)
    EXPECT_EQ(mpq_class(1 - 4) / mpq_class(1 - 2), mpq_class(3));
    EXPECT_EQ(q_binomial(2, 1, r(2)), r(3));
    EXPECT_EQ(q_binomial(5, 0, r(2)), r(1));
    EXPECT_EQ(q_binomial(5, 5, r(2)), r(1));
    try {
        (void)q_binomial(3, 1, r(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::root_of_unity);
    }
    // 3 has order 6 in GF(7): q^j != 1 for j < 6
    EXPECT_NO_THROW((void)q_binomial(5, 2, F7.from_int(3)));
    EXPECT_THROW((void)q_binomial(6, 0, F7.from_int(3)), Error);
    EXPECT_THROW((void)q_binomial(2, 3, r(2)), Error);
}

TEST(Scalar, QBinomialAgreesWithPascalRecurrence) {
    // [l,k]_q = [l-1,k-1]_q + q^k [l-1,k]_q, an independent route
    for (long qv : {2L, -3L, 5L}) {
        const Scalar qs = r(qv);
        for (std::uint64_t l = 1; l <= 8; ++l)
            for (std::uint64_t k = 1; k < l; ++k)
                EXPECT_EQ(q_binomial(l, k, qs), q_binomial(l - 1, k - 1, qs) + pow(qs, k) * q_binomial(l - 1, k, qs));
    }
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
    gen::Rng rng(3);
    for (const Field& f : {Q, F7, Field::modular(1000003)}) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = gen::scalar(rng, f, 30), b = gen::scalar(rng, f, 30), c = gen::scalar(rng, f, 30);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a + f.zero(), a);
            EXPECT_EQ(a * f.one(), a);
            EXPECT_TRUE((a + (-a)).is_zero());
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
            }
        }
    }
}

TEST(Scalar, VandermondeAndPascal) {
    gen::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const Scalar xi = gen::scalar(rng, Q, 9), eta = gen::scalar(rng, Q, 9);
        const std::uint64_t n = rng() % 13;
        Scalar sum = Q.zero();
        for (std::uint64_t s = 0; s <= n; ++s) sum += extended_binomial(xi, s) * extended_binomial(eta, n - s);
        EXPECT_EQ(sum, extended_binomial(xi + eta, n));
        if (n >= 1) {
            EXPECT_EQ(extended_binomial(xi + Q.one(), n), extended_binomial(xi, n) + extended_binomial(xi, n - 1));
        }
    }
}
