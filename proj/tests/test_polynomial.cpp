#include "fibcheb/polynomial.hpp"
#include "fibcheb/serialize.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fibcheb;

namespace {

const Polynomial kX2p1{1, 0, 1};

}  // namespace

TEST(Polynomial, Arithmetic) {
    EXPECT_EQ(add(kX2p1, Polynomial{-1}), Polynomial::monomial(1, 2));
    EXPECT_EQ(mul(Polynomial::x(), Polynomial{1, 1}), (Polynomial{0, 1, 1}));
    EXPECT_EQ(scale(kX2p1, Rational(1, 2)), (Polynomial{Rational(1, 2), 0, Rational(1, 2)}));
    EXPECT_EQ(scale(kX2p1, 0), Polynomial{});
}

TEST(Polynomial, ZeroHasDegreeMinusOne) {
    EXPECT_EQ(Polynomial{}.degree(), -1);
    EXPECT_EQ((Polynomial{0, 0, 0}).degree(), -1);
    EXPECT_TRUE((kX2p1 - kX2p1).is_zero());
    EXPECT_EQ(kX2p1.degree(), 2);
}

TEST(Polynomial, Derivative) {
    EXPECT_EQ(derivative(Polynomial{0, 2, 0, 1}, 1), (Polynomial{2, 0, 3}));
    EXPECT_EQ(derivative(kX2p1, 2), Polynomial{2});
    EXPECT_TRUE(derivative(kX2p1, 3).is_zero());
    EXPECT_EQ(derivative(kX2p1, 0), kX2p1);
}

TEST(Polynomial, Evaluate) {
    EXPECT_EQ(evaluate(kX2p1, Rational(1)), 2);
    EXPECT_EQ(evaluate(kX2p1, Rational(5, 4)), Rational(41, 16));
    const Gaussian half_i(Rational(0), Rational(1, 2));
    EXPECT_EQ(evaluate(Polynomial{-1, 0, 4}, half_i), Gaussian(-2));
    EXPECT_EQ(evaluate(Polynomial{}, Rational(3)), 0);
}

TEST(Polynomial, RandomizedLaws) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = oracle::random_polynomial(rng);
        const Polynomial q = oracle::random_polynomial(rng);
        const Rational x0 = oracle::random_rational(rng, 9);
        if (!p.is_zero() && !q.is_zero()) ASSERT_EQ((p * q).degree(), p.degree() + q.degree());
        ASSERT_EQ(evaluate(p * q, x0), evaluate(p, x0) * evaluate(q, x0));
        ASSERT_EQ(evaluate(p + q, x0), evaluate(p, x0) + evaluate(q, x0));
        ASSERT_EQ(derivative(p * q), derivative(p) * q + p * derivative(q));
        ASSERT_EQ(p.shifted(3), p * Polynomial::monomial(1, 3));
    }
}

TEST(Polynomial, ApproxEvaluationTracksExact) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = oracle::random_polynomial(rng);
        const Rational x0 = oracle::random_rational(rng, 5);
        const double exact = evaluate(p, x0).convert_to<double>();
        EXPECT_NEAR(evaluate_approx(p, x0.convert_to<double>()), exact, 1e-9 * (1 + std::fabs(exact)));
    }
}

TEST(Polynomial, TextAndJson) {
    EXPECT_EQ(to_string(Polynomial{}), "0");
    EXPECT_EQ(to_string(Polynomial{Rational(1, 2), 0, -3}), "1/2 + -3*x^2");
    const Json j = to_json(Polynomial{Rational(1, 2), 0, -3});
    EXPECT_EQ(j.dump(), R"(["1/2","0","-3"])");
    EXPECT_EQ(polynomial_from_json(j), (Polynomial{Rational(1, 2), 0, -3}));
}
