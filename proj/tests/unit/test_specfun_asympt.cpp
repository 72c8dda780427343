// Special functions, exact arithmetic, Taylor jets and the uniform expansion.
#include "frozen.hpp"

#include "zetacap/asympt.hpp"
#include "zetacap/quadrature.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zetacap;
using R = real50;

namespace {

double dabs(const R& x) { return static_cast<double>(abs(x)); }

}  // namespace

// ---------------------------------------------------------------------------
// rational

TEST(Rational, StringRoundTrip)
{
    EXPECT_EQ(q_str(q_from_string("-6/8")), "-3/4");
    EXPECT_EQ(q_str(q_from_string("17")), "17");
    EXPECT_EQ(binomial_z(10, 3), 120);
    EXPECT_EQ(factorial_z(6), 720);
}

TEST(Rational, BiPolyArithmetic)
{
    const BiPoly s2 = BiPoly::monomial(1, 0), S = BiPoly::monomial(0, 1);
    const BiPoly p = (BiPoly::constant(1) - s2.scaled(4)) * S;
    EXPECT_EQ(p.coeff(1, 1), Q(-4));
    EXPECT_EQ(p.coeff(0, 1), Q(1));
    EXPECT_TRUE((p - p).c.empty());
    EXPECT_EQ(p.theta_dependent().c.size(), 2u);
    EXPECT_NEAR(static_cast<double>(p.eval(R("0.25"), R("0.5"))), 0.0, 1e-40);
}

// ---------------------------------------------------------------------------
// jets

TEST(Jet, LogExpRoundTrip)
{
    const auto x = Jet<R>::variable(6, R("0.3"));
    const auto y = exp(log(x * x + R(1)));
    // (x^2 + 1) around 0.3: 1.09 + 0.6 h + h^2
    EXPECT_LT(dabs(y[0] - R("1.09")), 1e-45);
    EXPECT_LT(dabs(y[1] - R("0.6")), 1e-45);
    EXPECT_LT(dabs(y[2] - R(1)), 1e-45);
    for (std::size_t k = 3; k <= 6; ++k)
        EXPECT_LT(dabs(y[k]), 1e-45);
}

TEST(Jet, QuotientTaylorCoefficients)
{
    // 1/(1 - h) = sum h^k
    const auto h = Jet<R>::variable(8, R(0));
    const auto q = Jet<R>(8, R(1)) / (Jet<R>(8, R(1)) - h);
    for (std::size_t k = 0; k <= 8; ++k)
        EXPECT_LT(dabs(q[k] - R(1)), 1e-45);
}

// ---------------------------------------------------------------------------
// Bernoulli, Hurwitz, Riemann

TEST(Specfun, BernoulliNumbers)
{
    EXPECT_EQ(specfun::bernoulli_number(1), Q(-1, 2));
    EXPECT_EQ(specfun::bernoulli_number(2), Q(1, 6));
    EXPECT_EQ(specfun::bernoulli_number(4), Q(-1, 30));
    EXPECT_EQ(specfun::bernoulli_number(12), Q(-691, 2730));
    EXPECT_EQ(specfun::bernoulli_number(7), Q(0));
    EXPECT_EQ(specfun::riemann_zeta_neg_int(1), Q(-1, 12));
    EXPECT_EQ(specfun::riemann_zeta_neg_int(3), Q(1, 120));
}

TEST(Specfun, HurwitzHalfIntegerIdentity)
{
    // zeta_H(s, 1/2) = (2^s - 1) zeta_R(s)
    for (const char* s : {"3", "2.5", "-1.5", "0.3"}) {
        const R x(s);
        const R lhs = specfun::hurwitz_zeta(x, R(1) / 2);
        const R rhs = (pow(R(2), x) - 1) * specfun::riemann_zeta(x);
        EXPECT_LT(dabs(lhs - rhs), 1e-40) << s;
    }
}

TEST(Specfun, HurwitzShiftPropertyRandom)
{
    std::mt19937 gen(1234);
    std::uniform_real_distribution<double> ds(-6.0, 6.0), da(0.1, 5.0);
    for (int i = 0; i < 40; ++i) {
        const R s(ds(gen)), a(da(gen));
        if (abs(s - 1) < R("1e-3"))
            continue;
        const R diff = specfun::hurwitz_zeta(s, a) - specfun::hurwitz_zeta(s, a + 1);
        EXPECT_LT(dabs(diff - pow(a, -s)) / std::max(1.0, dabs(diff)), 1e-38) << "s=" << s << " a=" << a;
    }
}

TEST(Specfun, HurwitzErrors)
{
    EXPECT_THROW(specfun::hurwitz_zeta(R(1), R(2)), PoleAtOne);
    EXPECT_THROW(specfun::hurwitz_zeta(R(2), R(0)), DomainError);
}

TEST(Specfun, RiemannDerivativesAtNegativeIntegers)
{
    for (int p = 1; p <= 5; ++p) {
        const R want = frozen::value<R>("riemann_zeta_prime_neg" + std::to_string(p));
        EXPECT_LT(dabs(specfun::riemann_zeta_deriv_at_neg<R>(p) - want), 1e-38) << p;
    }
    const R pi = pi_v<R>();
    EXPECT_LT(dabs(specfun::riemann_zeta_deriv_at_neg<R>(2) + specfun::riemann_zeta(R(3)) / (4 * pi * pi)), 1e-45);
}

TEST(Specfun, HurwitzDerivativeReductions)
{
    for (int al : {0, 3})
        for (int d : {2, 5}) {
            const R want = frozen::value<R>("hurwitz_prime_neg" + std::to_string(al) + "_d" + std::to_string(d));
            EXPECT_LT(dabs(specfun::hurwitz_zeta_deriv_at_neg<R>(al, d) - want), 1e-36) << al << " " << d;
        }
}

TEST(Specfun, LogGammaAndBinet)
{
    EXPECT_LT(dabs(specfun::log_gamma(R(5)) - log(R(24))), 1e-45);
    // Binet J(x) = ln Gamma(x) - (x - 1/2) ln x + x - ln(2 pi)/2 ~ 1/(12 x)
    const R x(40);
    EXPECT_LT(dabs(specfun::binet_j(x) - (R(1) / (12 * x) - R(1) / (360 * x * x * x))), 1e-9);
}

// ---------------------------------------------------------------------------
// hypergeometric and Ferrers

TEST(Specfun, ConicalHypergeometricMatchesMpmath)
{
    struct P {
        const char* tag;
        R sig, lam, mu, th;
    };
    const R pi = pi_v<R>();
    for (const auto& p : {P{"a", R("1.3"), R(0), R("0.5"), 2 * pi / 5}, P{"b", R("1.3"), R(10), R("3.5"), 2 * pi / 5},
                          P{"c", R("0.8"), R(-50), R("7.5"), R("2.5")}, P{"d", R(2), R(3), R(1), R(1)}}) {
        const R S = pow(sin(p.th / 2), 2);
        const R got = specfun::conical_2f1<R>(p.sig * p.sig + p.lam, p.mu + 1, S);
        const R want = frozen::value<R>(std::string("conical_2f1_") + p.tag);
        EXPECT_LT(dabs((got - want) / want), 1e-35) << p.tag;
    }
}

TEST(Specfun, ConicalDerivativeInW2)
{
    const R w2("1.7"), c("2.5"), x("0.6"), h("1e-12");
    const auto [f, df] = specfun::conical_2f1_with_dw2(w2, c, x);
    const R fd = (specfun::conical_2f1<R>(w2 + h, c, x) - specfun::conical_2f1<R>(w2 - h, c, x)) / (2 * h);
    EXPECT_LT(dabs(f - specfun::conical_2f1<R>(w2, c, x)), 1e-45);
    EXPECT_LT(dabs(df - fd), 1e-20);
}

TEST(Specfun, LogFerrersMatchesMpmath)
{
    EXPECT_LT(dabs(specfun::log_ferrers_p(R("2.3"), R("1.5"), R("1.1")) - frozen::value<R>("log_ferrers_a")), 1e-35);
    EXPECT_LT(dabs(specfun::log_ferrers_p(R("7.25"), R(4), R("0.4")) - frozen::value<R>("log_ferrers_b")), 1e-35);
}

// ---------------------------------------------------------------------------
// quadrature wrapper

TEST(Quadrature, EndpointSingularities)
{
    EXPECT_LT(dabs(quad::integrate<R>([](const R& x) { return log(x); }, R(0), R(1), "ln") + 1), 1e-35);
    // left endpoint away from 0: abscissae must not collapse onto a
    const R v = quad::integrate<R>([](const R& x) { return log(x - 1); }, R(1), R(2), "log shifted");
    EXPECT_LT(dabs(v + 1), 1e-35);
    // algebraic singularity: the complement argument keeps x - 1 exact
    const R w = quad::tanh_sinh<R>([](const R& x, const R& xc) { return 1 / sqrt(xc < 0 ? -xc : x - 1); },
                                   R(1), R(2), quad_tol<R>(), "inverse sqrt")
                    .value;
    EXPECT_LT(dabs(w - 2), 1e-38);
    const R e = quad::exp_sinh<R>([](const R& x) { return exp(-x); }, R(3), quad_tol<R>(), "exp").value;
    EXPECT_LT(dabs(e - exp(R(-3))), 1e-35);
}

TEST(Quadrature, DivergentIntegralIsReported)
{
    EXPECT_THROW(quad::integrate<R>([](const R& x) { return 1 / x; }, R(0), R(1), "1/x"), QuadratureFailure);
}

// ---------------------------------------------------------------------------
// uniform expansion

TEST(Asympt, GeometryAtZeroU)
{
    const R th("1.1");
    const auto g = asympt::geometry_point(R(0), th);
    EXPECT_LT(dabs(g.t - 1), 1e-45);
    EXPECT_LT(dabs(g.nu - cos(th)), 1e-45);
}

TEST(Asympt, LimitCumulantsAtSmallAngleAreZetaConstants)
{
    // a_n(sigma, S = 0) = zeta_R(-n)/n for every sigma
    const auto polys = asympt::limit_cumulant_polys(8);
    for (int n = 1; n <= 8; ++n) {
        BiPoly at0;
        for (const auto& [k, v] : polys[n - 1].c)
            if (k.second == 0)
                at0.add_term(k.first, 0, v);
        EXPECT_EQ(at0.coeff(0, 0), specfun::riemann_zeta_neg_int(n) / n) << n;
        EXPECT_EQ(at0.c.size(), at0.coeff(0, 0) == 0 ? 0u : 1u) << n;
    }
}

TEST(Asympt, ConformalFirstCumulant)
{
    // at sigma = 1/2 the S-dependence of a_1 drops out
    const auto a1 = asympt::limit_cumulant_polys(1)[0];
    R v = a1.eval(R(1) / 4, R("0.37"));
    EXPECT_LT(dabs(v + R(1) / 12), 1e-45);
}

TEST(Asympt, OrderRangeChecked)
{
    EXPECT_THROW(asympt::limit_cumulant_polys(9), DomainError);
    EXPECT_THROW(asympt::limit_cumulant_polys(0), DomainError);
}

TEST(Asympt, GenericCumulantsApproachLimit)
{
    const R sig("1.3"), th("1.2");
    const auto lim = asympt::cumulant_values(4, R(0), sig, th);
    const auto near = asympt::cumulant_values(4, R("1e-5"), sig, th);
    for (int n = 0; n < 4; ++n)
        EXPECT_LT(dabs(near[n] - lim[n]), 1e-7) << n + 1;
}

TEST(Asympt, UniformExpansionAgainstDirect)
{
    const R sig("1.3"), th = 2 * pi_v<R>() / 5;
    for (const char* u : {"0.01", "0.7", "30"}) {
        const R e = asympt::log_p_uniform(R(40), R(u), sig, th, 6) - asympt::log_p_direct(R(40), R(u), sig, th);
        EXPECT_LT(dabs(e), 1e-11) << u;
    }
}

TEST(Asympt, NumericCumulantExtractionMatchesRecurrence)
{
    const R sig("0.9"), th("1.0"), u("0.8");
    const auto exact = asympt::cumulant_values(3, u, sig, th);
    const auto num = asympt::extract_cumulants_numeric(3, u, sig, th);
    for (int n = 0; n < 3; ++n)
        EXPECT_LT(dabs(num[n] - exact[n]) / std::max(1.0, dabs(exact[n])), 1e-4) << n + 1;
}
