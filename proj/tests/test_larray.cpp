#include "oracles.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace riordan;

namespace {

const Field Q = Field::rational();

TriMatrix pascal(std::size_t order) {
    TriMatrix a(order, Q);
    for (std::size_t n = 0; n < order; ++n)
        for (std::size_t k = 0; k <= n; ++k) a(n, k) = Scalar::rational(mpq_class(oracle::binom(n, k)));
    return a;
}

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Scalar> v;
    for (long x : c) v.push_back(Q.from_int(x));
    return Polynomial(v, Q);
}

std::vector<Polynomial> monomials(std::size_t order) {
    std::vector<Polynomial> out;
    for (std::size_t n = 0; n < order; ++n) out.push_back(Polynomial::monomial(n, Q));
    return out;
}

}  // namespace

TEST(Polynomial, Basics) {
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(poly({0, 0}).degree(), -1);
    EXPECT_TRUE(Polynomial(Q).is_zero());
    EXPECT_EQ(poly({1, 2, 1})(Q.from_int(3)), Q.from_int(16));
    EXPECT_EQ(poly({1, 1}) * poly({1, 1}), poly({1, 2, 1}));
    EXPECT_EQ(poly({-1, 0, 3}).to_string(), "3*x^2 - 1");
    EXPECT_EQ(poly({0, -1}).to_string(), "-x");
}

TEST(LArray, MatrixToPolys) {
    auto id = matrix_to_polys(TriMatrix::identity(5, Q));
    EXPECT_EQ(id, monomials(5));
    auto ps = matrix_to_polys(pascal(5));
    Polynomial x1 = poly({1, 1}), acc = poly({1});
    for (std::size_t n = 0; n < 5; ++n) {
        EXPECT_EQ(ps[n], acc);
        acc = acc * x1;
    }
    TriMatrix z = TriMatrix::identity(4, Q);
    z(1, 1) = Q.zero();
    auto zs = matrix_to_polys(z);
    EXPECT_TRUE(zs[1].is_zero());
    EXPECT_FALSE(is_graded(z));
}

TEST(LArray, PolysToMatrix) {
    EXPECT_EQ(polys_to_matrix(monomials(6), Q), TriMatrix::identity(6, Q));
    EXPECT_EQ(polys_to_matrix(matrix_to_polys(pascal(6)), Q), pascal(6));
    auto bad = monomials(4);
    bad[2] = Polynomial::monomial(3, Q);
    try {
        (void)polys_to_matrix(bad, Q);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degree_too_high);
    }
}

TEST(LArray, Products) {
    const TriMatrix p = pascal(6);
    EXPECT_EQ(p * TriMatrix::identity(6, Q), p);
    // brute-force product oracle, then the closed form binom(n,k) 2^{n-k}
    const oracle::Mat sq = oracle::mul(oracle::raw(p), oracle::raw(p));
    for (std::size_t n = 0; n < 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(sq[n][k], mpq_class(oracle::binom(n, k) << (n - k)));
    EXPECT_EQ(p * p, oracle::to_matrix(sq));

    gen::Rng rng(2);
    TriMatrix s1 = gen::graded(rng, 6, Q), s2 = gen::graded(rng, 6, Q);
    for (std::size_t n = 0; n < 6; ++n) {
        s1(n, n) = Q.zero();
        s2(n, n) = Q.zero();
    }
    const TriMatrix s = s1 * s2;
    for (std::size_t n = 0; n < 6; ++n) {
        EXPECT_TRUE(s(n, n).is_zero());
        if (n >= 1) {
            EXPECT_TRUE(s(n, n - 1).is_zero());
        }
    }
    EXPECT_THROW(p * TriMatrix::identity(5, Q), Error);
}

TEST(LArray, Inverse) {
    EXPECT_EQ(inverse(TriMatrix::identity(6, Q)), TriMatrix::identity(6, Q));
    const oracle::Mat inv = oracle::inv(oracle::raw(pascal(6)));
    for (std::size_t n = 0; n < 6; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            EXPECT_EQ(inv[n][k], mpq_class(((n - k) % 2 ? -1 : 1) * oracle::binom(n, k)));
    EXPECT_EQ(inverse(pascal(6)), oracle::to_matrix(inv));
    TriMatrix bad = TriMatrix::identity(4, Q);
    bad(1, 1) = Q.zero();
    try {
        (void)inverse(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::singular_diagonal);
    }
}

TEST(LArray, UmbralCompose) {
    const auto m = monomials(6);
    const auto ps = matrix_to_polys(pascal(6));
    EXPECT_EQ(umbral_compose(m, ps), ps);
    EXPECT_EQ(umbral_compose(ps, m), ps);
    const auto twice = umbral_compose(ps, ps);
    const auto expect = matrix_to_polys(oracle::to_matrix(oracle::mul(oracle::raw(pascal(6)), oracle::raw(pascal(6)))));
    EXPECT_EQ(twice, expect);
    Polynomial x2 = poly({2, 1}), acc = poly({1});
    for (std::size_t n = 0; n < 6; ++n) {
        EXPECT_EQ(twice[n], acc);
        acc = acc * x2;
    }
    auto bad = m;
    bad[1] = Polynomial::monomial(2, Q);
    EXPECT_THROW((void)umbral_compose(bad, m), Error);
}

TEST(LArray, ApplyMatrixToPoly) {
    const auto p = poly({5, 0, -2, 1});
    EXPECT_EQ(apply(TriMatrix::identity(5, Q), p), p);
    TriMatrix d(5, Q);  // usual derivative on the monomial basis
    for (std::size_t n = 1; n < 5; ++n) d(n, n - 1) = Q.from_int(static_cast<long>(n));
    EXPECT_EQ(apply(d, Polynomial::monomial(3, Q)), poly({0, 0, 3}));
    EXPECT_TRUE(apply(TriMatrix(5, Q), p).is_zero());
}

TEST(LArray, IsGraded) {
    EXPECT_TRUE(is_graded(TriMatrix::identity(4, Q)));
    EXPECT_TRUE(is_graded(pascal(4)));
    TriMatrix z = pascal(4);
    z(2, 2) = Q.zero();
    EXPECT_FALSE(is_graded(z));
}

TEST(LArray, GroupAxiomsAndRoundTrips) {
    gen::Rng rng(29);
    for (const Field& f : {Q, Field::modular(7)}) {
        for (int i = 0; i < 30; ++i) {
            const TriMatrix a = gen::graded(rng, 8, f), b = gen::graded(rng, 8, f), c = gen::graded(rng, 8, f);
            const TriMatrix id = TriMatrix::identity(8, f);
            EXPECT_TRUE(is_graded(a * b));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * id, a);
            EXPECT_EQ(a * inverse(a), id);
            EXPECT_EQ(inverse(a) * a, id);
            EXPECT_EQ(polys_to_matrix(matrix_to_polys(a), f), a);
            EXPECT_EQ(umbral_compose(matrix_to_polys(a), matrix_to_polys(b)), matrix_to_polys(a * b));
        }
    }
}
