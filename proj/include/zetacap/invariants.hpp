// zetacap/invariants.hpp
#pragma once

#include "zetacap/continuation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zetacap::invariants {

using Ledger = std::vector<std::pair<std::string, std::string>>;

template <class Real>
using TermList = std::vector<std::pair<std::string, Real>>;

template <class Real>
Real sum_terms(const TermList<Real>& t)
{
    Real r = 0;
    for (const auto& [k, v] : t)
        r += v;
    return r;
}

// ---------------------------------------------------------------------------
// zeta(0)

/// -(1/4) zetaN(0) - (1/2) zetaN(-1/2) - sum_n a_n(sigma, theta0) Res zetaN(n/2), exactly.
template <class Real>
BiPoly zeta0_general_poly(const basezeta::BaseSpectralData<Real>& base)
{
    if (base.res_at_minus_half != 0)
        throw SingularDeterminant("Res zeta_N(-1/2) != 0");
    return BiPoly::constant(-base.zeta_at_0 / 4 - base.zeta_at_minus_half / 2) -
           continuation::g_p_zero_poly(base);
}

template <class Real>
TermList<Real> zeta0_terms(const basezeta::BaseSpectralData<Real>& base, const Real& sigma, const Real& theta0)
{
    if (base.res_at_minus_half != 0)
        throw SingularDeterminant("Res zeta_N(-1/2) != 0");
    return {
        {"-(1/4) zetaN(0)", to_real<Real>(-base.zeta_at_0 / 4)},
        {"-(1/2) zetaN(-1/2)", to_real<Real>(-base.zeta_at_minus_half / 2)},
        {"-sum a_n Res zetaN(n/2)", -continuation::g_p_zero(base, sigma, theta0)},
    };
}

template <class Real>
Real zeta0_general(const basezeta::BaseSpectralData<Real>& base, const Real& sigma, const Real& theta0)
{
    return sum_terms(zeta0_terms(base, sigma, theta0));
}

/// The printed D = 3, 4, 5 polynomials as exact (sigma^2, S) polynomials; sin^2 theta0 = 4 S (1 - S).
inline BiPoly zeta0_printed_poly(int D)
{
    auto c = [](long n, long m = 1) { return BiPoly::constant(Q(n, m)); };
    const BiPoly s2 = BiPoly::monomial(1, 0);
    const BiPoly S = BiPoly::monomial(0, 1);
    const BiPoly m1 = c(-1) + s2.scaled(4);  // -1 + 4 sigma^2
    auto Sp = [&](int j) { return BiPoly::monomial(0, j); };
    switch (D) {
    case 3:
        return c(-1, 48) - (m1 * S * (c(1) - S)).scaled(Q(4, 16));
    case 4: {
        const BiPoly f = c(-25) + s2.scaled(4);
        return c(-1, 180) + (m1 * Sp(1)).scaled(Q(1, 8)) + (m1 * f * Sp(2)).scaled(Q(1, 64)) -
               (m1 * f * Sp(3)).scaled(Q(1, 96));
    }
    case 5: {
        const BiPoly f = c(-59) + s2.scaled(16);
        const BiPoly g = c(-13) + s2.scaled(4);
        return c(17, 11520) - (m1 * Sp(1)).scaled(Q(7, 192)) - (m1 * f * Sp(2)).scaled(Q(1, 192)) +
               (m1 * g * Sp(3)).scaled(Q(1, 24)) - (m1 * g * Sp(4)).scaled(Q(1, 48));
    }
    default:
        throw UnsupportedDimension("printed zeta(0) exists for D = 3, 4, 5 only");
    }
}

/// Literal transcription of the printed D = 3, 4, 5 expressions.
template <class Real>
Real zeta0_printed(int D, const Real& sigma, const Real& theta0)
{
    using std::pow;
    using std::sin;
    const Real m1 = -1 + 4 * sigma * sigma;
    const Real sh = sin(theta0 / 2);
    auto S = [&](int j) { return pow(sh, 2 * j); };
    switch (D) {
    case 3: {
        const Real st = sin(theta0);
        return -Real(1) / 48 - m1 * st * st / 16;
    }
    case 4: {
        const Real f = -25 + 4 * sigma * sigma;
        return -Real(1) / 180 + m1 * S(1) / 8 + m1 * f * S(2) / 64 - m1 * f * S(3) / 96;
    }
    case 5: {
        const Real f = -59 + 16 * sigma * sigma;
        const Real g = -13 + 4 * sigma * sigma;
        return Real(17) / 11520 - Real(7) / 192 * m1 * S(1) - m1 * f * S(2) / 192 + m1 * g * S(3) / 24 -
               m1 * g * S(4) / 48;
    }
    default:
        throw UnsupportedDimension("printed zeta(0) exists for D = 3, 4, 5 only");
    }
}

// ---------------------------------------------------------------------------
// zeta'(0)

/**
 * @brief The elementary (integral-free) part of zeta'(0):
 * A ln sin theta0 + B ln(1 + cos theta0) + constant.
 */
template <class Real>
struct ElementaryPart {
    Q ln_sin = 0;
    Q ln_one_plus_cos = 0;
    Real constant = 0;

    Real value(const Real& theta0) const
    {
        using std::cos;
        using std::log;
        using std::sin;
        return to_real<Real>(ln_sin) * log(sin(theta0)) + to_real<Real>(ln_one_plus_cos) * log(1 + cos(theta0)) +
               constant;
    }
};

template <class Real>
ElementaryPart<Real> elementary_general(const basezeta::BaseSpectralData<Real>& base)
{
    ElementaryPart<Real> e;
    e.ln_sin = -(base.zeta_at_0 / 2 + base.zeta_at_minus_half);
    e.ln_one_plus_cos = base.zeta_at_minus_half;
    e.constant = base.zeta_np1_prime0 + to_real<Real>(continuation::harmonic_residue_sum(base));
    return e;
}

template <class Real>
ElementaryPart<Real> elementary_printed(int D)
{
    using specfun::riemann_zeta_deriv_at_neg;
    ElementaryPart<Real> e;
    auto zp = [](int a) { return riemann_zeta_deriv_at_neg<Real>(a); };
    switch (D) {
    case 3:
        e.ln_sin = Q(-1, 24);
        e.ln_one_plus_cos = Q(-1, 12);
        e.constant = zp(1) / 2 - 3 * zp(2) / 4;
        break;
    case 4:
        e.ln_sin = Q(-1, 90);
        e.ln_one_plus_cos = Q(1, 120);
        e.constant = Real(1) / 240 + zp(1) / 6 - zp(2) / 2 + zp(3) / 3;
        break;
    case 5:
        e.ln_sin = Q(17, 5760);
        e.ln_one_plus_cos = Q(17, 2880);
        e.constant = -5 * zp(4) / 64 + 7 * zp(3) / 48 - zp(2) / 32 - zp(1) / 48;
        break;
    default:
        throw UnsupportedDimension("printed zeta'(0) exists for D = 3, 4, 5 only");
    }
    return e;
}

template <class Real>
struct ZetaPrime {
    Real value;
    TermList<Real> terms;
    continuation::ContinuationParts<Real> parts;  // the integrals behind the terms
};

/**
 * @brief Master formula for zeta'(0), every additive term recorded.
 *
 * -[zN(0)/2 + zN(-1/2)] ln sin + zN(-1/2) ln(1 + cos) + zeta'_{N+1}(0)
 * + 2 sum C_n H_{n-1} Res - sum Res NL_n - phi(0)/2 - AP - PF int phi.
 */
template <class Real>
ZetaPrime<Real> zeta_prime0_general(const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
                                    const Real& theta0)
{
    using std::cos;
    using std::log;
    using std::sin;
    if (base.res_at_minus_half != 0)
        throw SingularDeterminant("Res zeta_N(-1/2) != 0");
    const auto parts = continuation::continuation_parts(base, sigma, theta0);
    const auto e = elementary_general(base);
    ZetaPrime<Real> z;
    z.terms = {
        {"-[zetaN(0)/2 + zetaN(-1/2)] ln sin(theta0)", to_real<Real>(e.ln_sin) * log(sin(theta0))},
        {"zetaN(-1/2) ln(1 + cos(theta0))", to_real<Real>(e.ln_one_plus_cos) * log(1 + cos(theta0))},
        {"zeta'_{N+1}(0)", base.zeta_np1_prime0},
        {"2 sum C_n H_{n-1} Res zetaN(n/2)", to_real<Real>(continuation::harmonic_residue_sum(base))},
        {"-sum Res zetaN(n/2) NL_n", -parts.nonlocal},
        {"-(1/2) phi(0)", -parts.half_phi0},
        {"-Abel-Plana", -parts.abel_plana},
        {"-PF int phi", -parts.pf_phi},
    };
    z.value = sum_terms(z.terms);
    z.parts = parts;
    // the same number through G_R(0): zeta'(0) = -G_R(0) + [G_R]_reg - sum Res NL
    const Real alt = -parts.g_r_at_0 + parts.g_r_reg - parts.nonlocal;
    using std::abs;
    using std::max;
    if (abs(alt - z.value) > Real(1e-20) * max(Real(1), abs(z.value)))
        throw InvariantViolation("zeta'(0): master formula and G_R(0) assembly disagree");
    return z;
}

/**
 * @brief Printed D = 3, 4, 5 zeta'(0), residual integrals by the continuation module.
 *
 * The phi-hat pieces are taken in their integration-by-parts form; the
 * nonlocal and Abel-Plana integrals are the same operations as the master route.
 */
template <class Real>
ZetaPrime<Real> zeta_prime0_printed(int D, const Real& sigma, const Real& theta0,
                                    const continuation::ContinuationParts<Real>* shared = nullptr)
{
    const auto e = elementary_printed<Real>(D);
    const auto base = basezeta::make_base_data<Real>(D - 1);
    const bool conformal = sigma == Real(1) / 2;
    ZetaPrime<Real> z;
    // nonlocal and Abel-Plana integrals may be taken over from a general-route evaluation
    const Real nl = shared ? shared->nonlocal : continuation::nonlocal_integral(base, sigma, theta0).total;
    const Real ap = shared ? shared->abel_plana : continuation::abel_plana_imaginary_term(base, sigma, theta0);
    z.terms = {
        {"printed elementary terms", e.value(theta0)},
        {"-sum Res zetaN(n/2) NL_n", -nl},
        {"-(1/2) phi(0)", conformal ? Real(0) : -continuation::phi_of_x(Real(0), base, sigma, theta0) / 2},
        {"-Abel-Plana", -ap},
        {"-PF int phi (by parts)", -continuation::pf_integral_phi_ibp(base, sigma, theta0)},
    };
    z.value = sum_terms(z.terms);
    return z;
}

/// Machine-readable record of a printed-vs-general comparison.
template <class Real>
struct Discrepancy {
    std::string quantity;
    int D = 0;
    Real sigma, theta0;
    Real general, printed, diff;
    bool agree = false;
    Real tolerance;
    std::string note;
};

template <class Real>
Discrepancy<Real> compare_zeta_prime0(int D, const Real& sigma, const Real& theta0, const Real& tol = Real(1e-6))
{
    using std::abs;
    using std::max;
    const auto base = basezeta::make_base_data<Real>(D - 1);
    Discrepancy<Real> r;
    r.quantity = "zeta_prime0";
    r.D = D;
    r.sigma = sigma;
    r.theta0 = theta0;
    const auto g = zeta_prime0_general(base, sigma, theta0);
    r.general = g.value;
    r.printed = zeta_prime0_printed(D, sigma, theta0, &g.parts).value;
    r.diff = r.printed - r.general;
    r.tolerance = tol;
    r.agree = abs(r.diff) <= tol * max(Real(1), abs(r.general));
    const auto eg = elementary_general(base);
    const auto ep = elementary_printed<Real>(D);
    r.note = "printed - general elementary part: (" + q_str(ep.ln_sin - eg.ln_sin) + ") ln sin(theta0) + (" +
             q_str(ep.ln_one_plus_cos - eg.ln_one_plus_cos) + ") ln(1 + cos(theta0)) + " +
             to_string_full(Real(ep.constant - eg.constant));
    return r;
}

template <class Real>
Discrepancy<Real> compare_zeta0(int D, const Real& sigma, const Real& theta0, const Real& tol = Real(1e-10))
{
    using std::abs;
    const auto base = basezeta::make_base_data<Real>(D - 1);
    Discrepancy<Real> r;
    r.quantity = "zeta0";
    r.D = D;
    r.sigma = sigma;
    r.theta0 = theta0;
    r.general = zeta0_general(base, sigma, theta0);
    r.printed = zeta0_printed(D, sigma, theta0);
    r.diff = r.printed - r.general;
    r.tolerance = tol;
    r.agree = abs(r.diff) <= tol;
    r.note = "printed - general = " + (zeta0_printed_poly(D) - zeta0_general_poly(base)).str() +
             "  (S = sin^2(theta0/2))";
    return r;
}

// ---------------------------------------------------------------------------
// Determinant.

template <class Real>
struct ZetaInvariants {
    Real zeta0;
    Real zeta_prime0;
    Real gamma;   // -(1/2) zeta'(0) - (1/2) zeta(0) ln mu^2
    Real logdet;  // -zeta'(0) - zeta(0) ln mu^2 = 2 Gamma
    Real mu_scale = 1;
    TermList<Real> term_ledger;  // names prefixed zeta0: / zeta_prime0:
};

template <class Real>
ZetaInvariants<Real> logdet(const basezeta::BaseSpectralData<Real>& base, const Real& sigma, const Real& theta0,
                            const Real& mu_scale = Real(1))
{
    using std::log;
    if (!(mu_scale > 0))
        throw DomainError("mu_scale must be positive");
    ZetaInvariants<Real> z;
    z.mu_scale = mu_scale;
    const auto z0 = zeta0_terms(base, sigma, theta0);
    const auto zp = zeta_prime0_general(base, sigma, theta0);
    z.zeta0 = sum_terms(z0);
    z.zeta_prime0 = zp.value;
    const Real lmu2 = 2 * log(mu_scale);
    z.gamma = -z.zeta_prime0 / 2 - z.zeta0 * lmu2 / 2;
    z.logdet = -z.zeta_prime0 - z.zeta0 * lmu2;
    for (const auto& [k, v] : z0)
        z.term_ledger.emplace_back("zeta0: " + k, v);
    for (const auto& [k, v] : zp.terms)
        z.term_ledger.emplace_back("zeta_prime0: " + k, v);
    return z;
}

}  // namespace zetacap::invariants
