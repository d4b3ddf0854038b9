#include "fibcheb/hypergeom.hpp"
#include "fibcheb/sequences.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fibcheb;

TEST(Eval2F1, SpotValues) {
    EXPECT_EQ(eval_2f1(0, Rational(7, 3), Rational(-5, 2), 9), 1);
    EXPECT_EQ(eval_2f1(-1, 2, 3, -4), Rational(11, 3));
    EXPECT_EQ(eval_2f1(-1, Rational(-1, 2), -2, -4), 2);
}

TEST(Eval2F1, Errors) {
    EXPECT_THROW(eval_2f1(Rational(1, 2), 3, 1, 2), NonTerminating);
    EXPECT_THROW(eval_2f1(-3, 1, -1, 2), ZeroDenominator);
    // K = 1 stops before (c)_k reaches zero at k = 2.
    EXPECT_NO_THROW(eval_2f1(-1, 1, -1, 2));
}

TEST(Eval2F1, TerminationIndexTakesTheSmallerDepth) {
    EXPECT_EQ(termination_index({-2, -5, 1, 1}), 2);
    EXPECT_EQ(termination_index({Rational(1, 2), -4, 1, 1}), 4);
    EXPECT_FALSE(termination_index({Rational(1, 2), 3, 1, 1}).has_value());
}

TEST(Eval2F1, MatchesTermwiseOracle) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> depth(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a(-depth(rng));
        const Rational b = oracle::random_rational(rng, 10);
        Rational c = oracle::random_rational(rng, 10);
        if (is_integer(c) && c <= 0) c = Rational(1, 3);
        const Rational z = oracle::random_rational(rng, 6);
        const int upper = static_cast<int>(-numerator(a));
        ASSERT_EQ(eval_2f1(a, b, c, z), oracle::hyp2f1_sum(a, b, c, z, upper));
        ASSERT_EQ(eval_2f1(a, b, c, z), eval_2f1(b, a, c, z));
    }
}

TEST(FibAs2F1, SpotValues) {
    EXPECT_EQ(fib_as_2f1(3, FibRepresentation::ArgMinus4), 2);
    EXPECT_EQ(fib_as_2f1(3, FibRepresentation::Arg5), 2);
    EXPECT_EQ(fib_as_2f1(1, FibRepresentation::Arg5), 1);
    EXPECT_THROW(fib_as_2f1(0, FibRepresentation::Arg5), std::invalid_argument);
}

TEST(FibAs2F1, AllIndicesUpTo100) {
    for (int n = 1; n <= 100; ++n) {
        const Rational fn(fibonacci_number(n));
        ASSERT_EQ(fib_as_2f1(n, FibRepresentation::ArgMinus4), fn) << n;
        ASSERT_EQ(fib_as_2f1(n, FibRepresentation::Arg5), fn) << n;
    }
}

TEST(Pfaff, SpotValues) {
    const PfaffResult r = pfaff_transform({-1, 2, 3, -4});
    EXPECT_EQ(r.prefactor, 5);
    EXPECT_EQ(r.spec, (Hypergeom2F1Spec{-1, 1, 3, Rational(4, 5)}));
    EXPECT_EQ(r.prefactor * eval_2f1(r.spec), Rational(11, 3));

    const PfaffResult t = pfaff_transform({0, 7, 2, 3});
    EXPECT_EQ(t.prefactor, 1);
    EXPECT_EQ(eval_2f1(t.spec), 1);

    const PfaffResult u = pfaff_transform({-1, Rational(-1, 2), Rational(3, 2), 5});
    EXPECT_EQ(u.prefactor, -4);
    EXPECT_EQ(u.spec, (Hypergeom2F1Spec{-1, 2, Rational(3, 2), Rational(5, 4)}));
    EXPECT_EQ(u.prefactor * eval_2f1(u.spec), Rational(8, 3));
}

TEST(Pfaff, RejectsUnsupportedArguments) {
    EXPECT_THROW(pfaff_transform({Rational(1, 2), -1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(pfaff_transform({-1, 2, 3, 1}), std::invalid_argument);
}

TEST(Pfaff, RoundTripOnConnectionGrids) {
    for (int j = 0; j <= 60; ++j) {
        for (int m = 0; m <= j / 2; ++m) {
            for (const Hypergeom2F1Spec& s :
                 {Hypergeom2F1Spec{-m, j - m + 1, j - 2 * m + 1, Rational(-1, 4)}, Hypergeom2F1Spec{-m, -j + m - 1, -j, -4}}) {
                const PfaffResult r = pfaff_transform(s);
                ASSERT_EQ(eval_2f1(s), r.prefactor * eval_2f1(r.spec)) << to_string(s);
            }
        }
    }
}
