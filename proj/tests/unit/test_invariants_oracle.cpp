// Spectral invariants, the independent oracles, and serialization.
#include "frozen.hpp"

#include "zetacap/io.hpp"
#include "zetacap/oracle.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace zetacap;
using R = real50;

namespace {

double dabs(const R& x) { return static_cast<double>(abs(x)); }

const basezeta::BaseSpectralData<R>& base(int d)
{
    static std::map<int, basezeta::BaseSpectralData<R>> cache;
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, basezeta::make_base_data<R>(d)).first;
    return it->second;
}

R half_pi() { return pi_v<R>() / 2; }

struct HemiCase {
    int D;
    const char* sigma;
    const char* tag;
};

const HemiCase kHemi[] = {
    {3, "0.5", "D3_sigma1_2"},
    {3, "1.3", "D3_sigma13_10"},
    {4, "1.3", "D4_sigma13_10"},
    {5, "0.7", "D5_sigma7_10"},
};

}  // namespace

// ---------------------------------------------------------------------------
// zeta(0)

TEST(Zeta0, HemisphereExactValues)
{
    for (const auto& h : kHemi) {
        const R want = frozen::value<R>(std::string("hemisphere_zeta0_") + h.tag);
        EXPECT_LT(dabs(invariants::zeta0_general(base(h.D - 1), R(h.sigma), half_pi()) - want), 1e-45) << h.tag;
    }
}

TEST(Zeta0, ConformalHemisphere)
{
    EXPECT_LT(dabs(invariants::zeta0_general(base(2), R(1) / 2, half_pi()) + R(1) / 48), 1e-45);
}

TEST(Zeta0, PrintedPolynomialsForThreeAndFour)
{
    EXPECT_TRUE(invariants::zeta0_printed_poly(3) == invariants::zeta0_general_poly(base(2)));
    EXPECT_TRUE(invariants::zeta0_printed_poly(4) == invariants::zeta0_general_poly(base(3)));
}

TEST(Zeta0, PrintedFiveDiffersByKnownPolynomial)
{
    // printed - general = (1/192 - sigma^2/48) S + (-1/192 + sigma^2/48) S^2
    const BiPoly want = BiPoly::monomial(0, 1, Q(1, 192)) + BiPoly::monomial(1, 1, Q(-1, 48)) +
                        BiPoly::monomial(0, 2, Q(-1, 192)) + BiPoly::monomial(1, 2, Q(1, 48));
    EXPECT_TRUE(invariants::zeta0_printed_poly(5) - invariants::zeta0_general_poly(base(4)) == want);
    const auto r = invariants::compare_zeta0(5, R("1.3"), half_pi());
    EXPECT_FALSE(r.agree);
}

TEST(Zeta0, PolynomialMatchesTermSum)
{
    for (int d = 2; d <= 6; ++d) {
        const R sig("0.9"), th("1.7");
        const R S = pow(sin(th / 2), 2);
        EXPECT_LT(dabs(invariants::zeta0_general_poly(base(d)).eval(sig * sig, S) -
                       invariants::zeta0_general(base(d), sig, th)),
                  1e-44)
            << d;
    }
}

// ---------------------------------------------------------------------------
// zeta'(0)

TEST(ZetaPrime0, HemisphereAgainstExactSpectrum)
{
    for (const auto& h : kHemi) {
        if (h.D > 4)
            continue;
        const R want = frozen::value<R>(std::string("hemisphere_zeta_prime0_") + h.tag);
        const R got = invariants::zeta_prime0_general(base(h.D - 1), R(h.sigma), half_pi()).value;
        EXPECT_LT(dabs(got - want), 1e-30) << h.tag;
    }
}

TEST(ZetaPrime0, RegressionPoint)
{
    const auto z = invariants::zeta_prime0_general(base(2), R("1.3"), 2 * pi_v<R>() / 5);
    EXPECT_LT(dabs(z.value - R("-0.223774340403634831763081186097")), 1e-28);
    EXPECT_EQ(z.terms.size(), 8u);
    EXPECT_LT(dabs(invariants::sum_terms(z.terms) - z.value), 1e-48);
}

TEST(ZetaPrime0, PrintedThreeHasKnownElementaryOffset)
{
    const R sig("0.8"), th("1.0");
    const auto r = invariants::compare_zeta_prime0(3, sig, th);
    const R want = -log(1 + cos(th)) / 12 + R("0.0577622650466621");
    EXPECT_LT(dabs(r.diff - want), 1e-14);
    EXPECT_NE(r.note.find("(-1/12) ln(1 + cos(theta0))"), std::string::npos) << r.note;
}

TEST(LogDet, ScaleDependence)
{
    const R sig("1.1"), th("1.3");
    const auto a = invariants::logdet(base(2), sig, th);
    EXPECT_LT(dabs(a.logdet + a.zeta_prime0), 1e-48);
    EXPECT_LT(dabs(a.logdet - 2 * a.gamma), 1e-48);
    const auto b = invariants::logdet(base(2), sig, th, R(3));
    EXPECT_LT(dabs(b.logdet - a.logdet + 2 * log(R(3)) * a.zeta0), 1e-45);
    EXPECT_EQ(b.term_ledger.size(), 3u + 8u);
    EXPECT_THROW(invariants::logdet(base(2), sig, th, R(0)), DomainError);
}

// ---------------------------------------------------------------------------
// Oracles

TEST(Roots, SineCaseAndHemisphere)
{
    // k = 0 on S^2 is P^{-1/2}: roots w theta0 = n pi
    const auto g = CapGeometry<double>::from_sigma(2, 2 * M_PI / 5, 1.3);
    const auto r = oracle::eigen_roots(g, 0, 5);
    ASSERT_EQ(r.size(), 5u);
    for (int n = 1; n <= 5; ++n)
        EXPECT_NEAR(r[n - 1].omega, 2.5 * n, 1e-10);
    const auto h = oracle::eigen_roots(CapGeometry<double>::from_sigma(2, M_PI / 2, 0.5), 0, 3);
    for (int n = 1; n <= 3; ++n)
        EXPECT_NEAR(h[n - 1].omega, 2.0 * n, 1e-10);
    EXPECT_NEAR(h[0].alpha2, 4 - 0.25, 1e-9);
    std::ostringstream os;
    oracle::write_roots_csv(os, r);
    EXPECT_EQ(os.str().substr(0, 17), "k,n,omega,alpha2\n");
    EXPECT_THROW(oracle::eigen_roots(g, 0, 0), DomainError);
}

TEST(DirectSum, HemisphereZetaThree)
{
    const auto g = CapGeometry<double>::from_sigma(2, M_PI / 2, 0.5);
    const auto z = oracle::zeta_direct(g, 3.0);
    const double want = static_cast<double>(frozen::value<R>("hemisphere_zeta3_D3_sigma1_2"));
    EXPECT_NEAR(z.value / want, 1.0, 1e-5);
    EXPECT_LT(z.error, 1e-4 * z.value);
    EXPECT_THROW(oracle::zeta_direct(g, 1.0), DomainError);
    // lowest eigenvalue 4 - 6.25 < 0
    EXPECT_THROW(oracle::zeta_direct(CapGeometry<double>::from_sigma(2, M_PI / 2, 2.5), 3.0), NonPositiveValue);
}

TEST(DirectSum, FourDimensionalHemisphere)
{
    // d = 3: the Weyl tail integrand must stay finite out to the exp-sinh range
    const auto z = oracle::zeta_direct(CapGeometry<double>::from_sigma(3, M_PI / 2, 1.3), 3.0);
    const double want = static_cast<double>(frozen::value<R>("hemisphere_zeta3_D4_sigma13_10"));
    EXPECT_NEAR(z.value / want, 1.0, 1e-4);
}

TEST(ContourSum, IntegerOrderAgainstHemisphere)
{
    for (const auto& h : kHemi) {
        if (h.D > 4)
            continue;
        const auto g = CapGeometry<R>::from_sigma(h.D - 1, half_pi(), R(h.sigma));
        const auto z = oracle::zeta_contour(g, R(3));
        const R want = frozen::value<R>(std::string("hemisphere_zeta3_") + h.tag);
        EXPECT_LT(dabs(z.value - want) / dabs(want), 1e-14) << h.tag;
        EXPECT_LT(dabs(z.tail - z.tail_check), 1e-12 * dabs(want)) << h.tag;
    }
}

TEST(ContourSum, NonIntegerOrderAgainstDirect)
{
    const auto g = CapGeometry<R>::from_sigma(2, R("1.2"), R("0.9"));
    const auto z = oracle::zeta_contour(g, R("3.5"), 60);
    const auto gd = CapGeometry<double>::from_sigma(2, 1.2, 0.9);
    const auto d = oracle::zeta_direct(gd, 3.5);
    EXPECT_NEAR(static_cast<double>(z.value) / d.value, 1.0, 1e-5);
}

TEST(Hemisphere, BinomialSeriesAgainstFrozen)
{
    for (const auto& h : kHemi) {
        const auto v = oracle::hemisphere_zeta(h.D - 1, R(h.sigma));
        EXPECT_LT(dabs(v.zeta0 - frozen::value<R>(std::string("hemisphere_zeta0_") + h.tag)), 1e-40) << h.tag;
        EXPECT_LT(dabs(v.zeta_prime0 - frozen::value<R>(std::string("hemisphere_zeta_prime0_") + h.tag)), 1e-38)
            << h.tag;
    }
    EXPECT_THROW(oracle::hemisphere_zeta(2, R(2)), DomainError);
}

TEST(Subtraction, AgreesWithMasterFormula)
{
    const auto g = CapGeometry<R>::from_sigma(3, R("1.0"), R("0.8"));
    const auto s = oracle::zeta_prime0_subtraction(g);
    const R m = invariants::zeta_prime0_general(base(3), g.sigma, g.theta0).value;
    EXPECT_LT(dabs(s.value - m), 1e-12);
    EXPECT_LT(dabs(s.mode_sum + s.analytic + s.nonlocal - s.value), 1e-45);
}

TEST(PfLambda0, DirectSummation)
{
    EXPECT_LT(dabs(oracle::pf_lambda0_direct<R>(2) - frozen::value<R>("pf_lambda0_d2")), 1e-25);
}

// ---------------------------------------------------------------------------
// Serialization, cache and validation

TEST(Io, BaseDataRoundTrip)
{
    const auto& b = base(3);
    const auto j = io::to_json(b);
    const auto c = io::base_from_json<R>(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(c.d, 3);
    EXPECT_EQ(c.D_coeffs, b.D_coeffs);
    EXPECT_EQ(c.beta.c, b.beta.c);
    EXPECT_EQ(c.residues, b.residues);
    EXPECT_EQ(c.zeta_at_0, b.zeta_at_0);
    EXPECT_EQ(c.zeta_np1_at0, b.zeta_np1_at0);
    EXPECT_EQ(c.zeta_np1_prime0, b.zeta_np1_prime0);
    EXPECT_EQ(c.deriv_at_0, b.deriv_at_0);
    for (const auto& [n, v] : b.pf_values)
        EXPECT_EQ(c.pf_values.at(n), v);
    auto bad = j;
    bad["format"] = 99;
    EXPECT_THROW(io::base_from_json<R>(bad), DomainError);
}

TEST(Io, CacheWritesAndReuses)
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("zetacap_cache_test_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    const auto a = io::load_base<R>(2, dir);
    const fs::path file = dir / ("base_d2_p" + std::to_string(digits10_v<R>) + ".json");
    ASSERT_TRUE(fs::exists(file));
    const auto b = io::load_base<R>(2, dir);
    EXPECT_EQ(a.deriv_at_0, b.deriv_at_0);
    // a corrupt file is rebuilt, not fatal
    std::ofstream(file) << "{ not json";
    const auto c = io::load_base<R>(2, dir);
    EXPECT_EQ(c.zeta_np1_prime0, a.zeta_np1_prime0);
    fs::remove_all(dir);
}

TEST(Io, ResultJsonShape)
{
    const auto g = CapGeometry<R>::from_sigma(2, half_pi(), R(1) / 2);
    const auto z = invariants::logdet(base(2), g.sigma, g.theta0);
    const auto j = io::to_json(g, z, true);
    EXPECT_EQ(j.at("D"), 3);
    EXPECT_EQ(j.at("digits"), digits10_v<R>);
    EXPECT_EQ(from_string<R>(j.at("zeta0").get<std::string>()), z.zeta0);
    EXPECT_EQ(j.at("term_ledger").size(), z.term_ledger.size());
    EXPECT_FALSE(io::to_json(g, z, false).contains("term_ledger"));
}

TEST(Validation, GeometryBounds)
{
    EXPECT_THROW(CapGeometry<R>::from_sigma(9, R(1), R(1)), UnsupportedDimension);
    EXPECT_THROW(CapGeometry<R>::from_sigma(1, R(1), R(1)), UnsupportedDimension);
    EXPECT_THROW(CapGeometry<R>::from_sigma(2, R(0), R(1)), DomainError);
    EXPECT_THROW(CapGeometry<R>::from_sigma(2, pi_v<R>(), R(1)), DomainError);
    EXPECT_THROW(CapGeometry<R>::from_sigma(2, R(1), R(0)), DomainError);
    EXPECT_THROW(CapGeometry<R>::from_mass(2, R(1), R(-1)), DomainError);
    EXPECT_EQ(CapGeometry<R>::from_mass(2, R(1), R(0)).sigma, R(1));
}
