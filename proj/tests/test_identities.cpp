#include "fibcheb/identities.hpp"

#include <gtest/gtest.h>

using namespace fibcheb;

namespace {

bool acceptable(const IdentityReport& r) { return r.status == Status::Pass || r.status == Status::PaperErratum; }

const IdentityReport& by_id(const std::vector<IdentityReport>& rs, const std::string& id) {
    for (const auto& r : rs) {
        if (r.id == id) return r;
    }
    throw std::out_of_range("no record " + id);
}

}  // namespace

TEST(SumT, PrintedFormMissesTheFactorJ) {
    const auto r1 = verify_cor_sum_T(1);
    EXPECT_EQ(r1.status, Status::Pass);
    EXPECT_EQ(std::get<Rational>(r1.lhs), 1);

    const auto r2 = verify_cor_sum_T(2);
    EXPECT_EQ(r2.status, Status::PaperErratum);
    EXPECT_EQ(std::get<Rational>(r2.lhs), Rational(1, 2));
    EXPECT_EQ(std::get<Rational>(r2.residual), Rational(-1, 2));
    EXPECT_EQ(std::get<Rational>(r2.reference_residual), 0);

    for (int j = 1; j <= 60; ++j) {
        const auto r = verify_cor_sum_T(j);
        ASSERT_EQ(Rational(j) * std::get<Rational>(r.lhs), 1) << j;
        ASSERT_EQ(r.status, j == 1 ? Status::Pass : Status::PaperErratum) << j;
    }
    EXPECT_THROW(verify_cor_sum_T(0), std::invalid_argument);
}

TEST(SumU, ExactUpTo60) {
    EXPECT_EQ(std::get<Rational>(verify_cor_sum_U(1).lhs), 2);
    EXPECT_EQ(std::get<Rational>(verify_cor_sum_U(2).lhs), 3);
    for (int j = 1; j <= 60; ++j) ASSERT_EQ(verify_cor_sum_U(j).status, Status::Pass) << j;
    EXPECT_THROW(verify_cor_sum_U(0), std::invalid_argument);
}

TEST(FibExpressions, ExactUpTo60) {
    for (int j = 0; j <= 60; ++j) {
        for (const auto& r : verify_fib_expressions(j)) ASSERT_EQ(r.status, Status::Pass) << r.id << ' ' << j;
    }
    EXPECT_EQ(std::get<Rational>(verify_fib_expressions(3)[0].rhs), 3);
    EXPECT_EQ(std::get<Rational>(verify_fib_expressions(2)[1].rhs), 2);
}

TEST(Chain, MemberValues) {
    const ChainValues v2 = chain_values(2);
    EXPECT_EQ(v2.fib_neg4, 2);
    EXPECT_EQ(v2.sum_quarter, 2);
    EXPECT_EQ(v2.sum_neg4, 2);
    EXPECT_EQ(v2.fib_arg5, Rational(8, 3));
    EXPECT_EQ(v2.sum_fifth, Rational(8, 3));
    EXPECT_EQ(v2.sum_four_fifths, 2);

    const ChainValues v1 = chain_values(1);
    for (const Rational* x : {&v1.fib_neg4, &v1.sum_quarter, &v1.sum_neg4, &v1.fib_arg5, &v1.sum_fifth, &v1.sum_four_fifths}) {
        EXPECT_EQ(*x, 1);
    }

    const ChainValues v5 = chain_values(5);
    EXPECT_EQ(v5.fib_neg4, 8);
    EXPECT_EQ(v5.sum_neg4, 8);
    EXPECT_EQ(v5.sum_four_fifths, 8);
    EXPECT_EQ(v5.fib_arg5, Rational(128, 3));
}

TEST(Chain, LastLinkIsAnErratumFromJ2) {
    for (int j = 0; j <= 60; ++j) {
        const auto rs = verify_2f1_chain(j);
        ASSERT_EQ(rs.size(), 4U);
        for (const auto& r : rs) {
            const Status expected =
                (r.id == "chain-fifth-fourfifths" && j >= 2) ? Status::PaperErratum : Status::Pass;
            ASSERT_EQ(r.status, expected) << r.id << ' ' << j;
        }
        ASSERT_EQ(chain_values(j).fib_neg4, Rational(fibonacci_number(j + 1)));
    }
}

TEST(Complex, SpotValues) {
    const Gaussian half_i(Rational(0), Rational(1, 2));
    EXPECT_EQ(evaluate(chebyshev_u(2), half_i), Gaussian(-2));
    EXPECT_EQ(evaluate(chebyshev_u(1), Gaussian(Rational(0), Rational(-2))), Gaussian(Rational(0), Rational(-4)));
    const auto r0 = verify_complex_identities(0);
    EXPECT_EQ(std::get<Gaussian>(by_id(r0, "complex-2").lhs), Gaussian(1));
}

TEST(Complex, ExactUpTo40) {
    for (int n = 0; n <= 40; ++n) {
        const auto rs = verify_complex_identities(n);
        ASSERT_EQ(rs.size(), 4U);
        for (const auto& r : rs) ASSERT_EQ(r.status, Status::Pass) << r.id << ' ' << n;
    }
}

TEST(Laurent, SpotValues) {
    const auto r = verify_laurent_identity(2, 2);
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_EQ(std::get<Rational>(r.lhs), Rational(41, 16));
    EXPECT_EQ(std::get<Rational>(verify_laurent_identity(0, Rational(-7, 3)).lhs), 1);
    EXPECT_EQ(std::get<Rational>(verify_laurent_identity(3, 1).rhs), 3);
    EXPECT_THROW(verify_laurent_identity(2, 0), std::invalid_argument);
}

TEST(Laurent, ExactUpTo40) {
    for (int j = 0; j <= 40; ++j) {
        for (const Rational& x0 : {Rational(1), Rational(2), Rational(-3), Rational(1, 2), Rational(7, 5)}) {
            ASSERT_EQ(verify_laurent_identity(j, x0).status, Status::Pass) << j << ' ' << x0;
        }
    }
}

TEST(Trig, Residuals) {
    EXPECT_LT(trig_identity_residual(2, 0.0), 1e-14);
    EXPECT_LT(trig_identity_residual(4, M_PI / 3), 1e-12);
    EXPECT_LT(trig_identity_residual(0, 1.234), 1e-15);
    for (int j = 0; j <= 30; ++j) {
        for (int s = 0; s < 16; ++s) ASSERT_EQ(verify_trig_identity(j, Rational(2 * s, 16)).status, Status::Pass) << j << ' ' << s;
    }
}

TEST(Derivatives, UFormSpotValue) {
    const auto rs = verify_derivative_corollaries(2, 1);
    const auto& u = by_id(rs, "deriv-U");
    EXPECT_EQ(u.status, Status::Pass);
    EXPECT_EQ(std::get<Rational>(u.lhs), 2);
    EXPECT_EQ(gamma_half_ratio(1, HalfOffset::ThreeHalves) / pow2(4), Rational(1, 12));
}

TEST(Derivatives, FirstIndex) {
    // F_2 = x, so F'_2(1) = 1.
    const auto rs = verify_derivative_corollaries(1, 1);
    EXPECT_EQ(rs.size(), 4U);
    for (const auto& r : rs) EXPECT_EQ(r.status, Status::Pass) << r.id;
    EXPECT_EQ(std::get<Rational>(by_id(rs, "deriv-T").lhs), 1);
    EXPECT_EQ(std::get<Rational>(by_id(verify_derivative_corollaries(2, 1), "deriv-T-sum").lhs),
              cheb_deriv_at1(SequenceKind::ChebyshevT, 1, 2) / 2);
    EXPECT_EQ(verify_derivative_corollaries(0, 1).size(), 3U);
}

TEST(Derivatives, SecondDerivativeSequence) {
    const Rational expected[] = {0, 2, 6, 18, 44, 102};
    for (int j = 1; j <= 6; ++j) {
        EXPECT_EQ(std::get<Rational>(by_id(verify_derivative_corollaries(j, 2), "deriv-T").lhs), expected[j - 1]) << j;
    }
}

TEST(Derivatives, SweepQ5J30) {
    for (int q = 1; q <= 5; ++q) {
        for (int j = 0; j <= 30; ++j) {
            for (const auto& r : verify_derivative_corollaries(j, q)) {
                ASSERT_TRUE(acceptable(r)) << r.id << " j=" << j << " q=" << q;
                if (r.id != "deriv-U") {
                    ASSERT_EQ(r.status, Status::Pass) << r.id << " j=" << j << " q=" << q;
                }
            }
            if (q == 1) {
                ASSERT_EQ(by_id(verify_derivative_corollaries(j, q), "deriv-U").status, Status::Pass);
            }
        }
    }
    EXPECT_EQ(by_id(verify_derivative_corollaries(4, 2), "deriv-U").status, Status::PaperErratum);
}

TEST(Report, StatusRules) {
    EXPECT_EQ(make_report("x", {}, Rational(1), Rational(1)).status, Status::Pass);
    EXPECT_EQ(make_report("x", {}, Rational(1), Rational(2)).status, Status::Fail);
    EXPECT_EQ(make_report("x", {}, Rational(1), Rational(2), Rational(1)).status, Status::PaperErratum);
    EXPECT_EQ(make_report("x", {}, Rational(1), Rational(1), Rational(2)).status, Status::Fail);
    EXPECT_EQ(make_report("x", {}, Rational(1), std::monostate{}).status, Status::Unevaluable);
    EXPECT_EQ(make_report("x", {}, Rational(1), Rational(1, 2) * 2).status, Status::Pass);
}
