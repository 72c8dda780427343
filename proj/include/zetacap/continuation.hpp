// zetacap/continuation.hpp
#pragma once

#include "zetacap/asympt.hpp"
#include "zetacap/basezeta.hpp"
#include "zetacap/jet.hpp"
#include "zetacap/quadrature.hpp"
#include "zetacap/specfun.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace zetacap::continuation {

// ---------------------------------------------------------------------------
// The continuation Lemma.

template <class Real>
struct PowerTerm {
    Real rho;       // exponent, > 0
    Real coeff;     // f_k x^rho
    Real log_coeff; // fbar_k x^rho ln x
};

/// Large-x behaviour f(x) ~ sum (f_k + fbar_k ln x) x^rho_k + [f]_log ln x + [f]_reg + o(1).
template <class Real>
struct AsymptoticDescriptor {
    std::vector<PowerTerm<Real>> power_terms;
    Real log_coeff = 0;
    Real reg_part = 0;
    Real x_cal = 1e6;
    Real tolerance = 1e-4;

    Real tail(const Real& x) const
    {
        using std::log;
        using std::pow;
        const Real lx = log(x);
        Real r = log_coeff * lx + reg_part;
        for (const auto& p : power_terms)
            r += (p.coeff + p.log_coeff * lx) * pow(x, p.rho);
        return r;
    }
};

template <class Real>
struct LemmaResult {
    Real pole_coeff;
    Real constant;
};

/**
 * @brief Continuation of int_eps^inf x^{-s} f'(x) dx to s = 0.
 *
 * Returns the 1/s coefficient [f]_log and the finite part [f]_reg - f(eps).
 * The descriptor is checked at x_cal and 1000 x_cal: the residual
 * f - tail must be small there and must not grow.
 */
template <class Real>
LemmaResult<Real> lemma_continue(const std::function<Real(const Real&)>& f,
                                 const AsymptoticDescriptor<Real>& desc, const Real& eps)
{
    using std::abs;
    if (!(eps > 0))
        throw DomainError("lemma_continue: eps must be positive");
    for (const auto& p : desc.power_terms)
        if (!(p.rho > 0))
            throw DomainError("lemma_continue: power exponents must be positive");
    const Real x1 = desc.x_cal, x2 = desc.x_cal * 1000;
    const Real r1 = abs(f(x1) - desc.tail(x1));
    const Real r2 = abs(f(x2) - desc.tail(x2));
    if (!(r2 <= desc.tolerance) || !(r2 <= r1 + desc.tolerance * Real(1e-6)))
        throw DescriptorMismatch("f minus descriptor tail does not decay: residual " + to_string_full(r2) +
                                 " at x = " + to_string_full(x2));
    return {desc.log_coeff, desc.reg_part - f(eps)};
}

// ---------------------------------------------------------------------------
// Logarithmic, regular and polar pieces.

template <class Real>
struct LogParts {
    Real g_r_log;
    Real g_p_log;
};

template <class Real>
LogParts<Real> g_log_parts(const basezeta::BaseSpectralData<Real>& base)
{
    if (base.res_at_minus_half != 0)
        throw SingularDeterminant("Res zeta_N(-1/2) != 0: zeta(s) has a pole at s = 0");
    const Q v = -(base.zeta_at_0 + 2 * base.zeta_at_minus_half) / 4;
    return {to_real<Real>(v), Real(0)};
}

template <class Real>
struct RegParts {
    Real g_r_reg;
    Real g_p_reg;
};

template <class Real>
RegParts<Real> g_reg(const basezeta::BaseSpectralData<Real>& base, const Real& theta0)
{
    using std::log;
    using std::sin;
    const Real z0 = to_real<Real>(base.zeta_at_0);
    if (z0 == 0)
        return {Real(0), Real(0)};
    return {-log(2 * pi_v<Real>() * sin(theta0)) * z0 / 2, Real(0)};
}

/// Residue-weighted cumulants sum_n a_n(nu(u)) Res zeta_N(n/2), n = 1..d.
template <class Real>
Real g_p(const Real& u, const basezeta::BaseSpectralData<Real>& base, const Real& sigma, const Real& theta0)
{
    const auto a = asympt::cumulant_values(base.d, u, sigma, theta0);
    Real r = 0;
    for (int n = 1; n <= base.d; ++n)
        r += a[n - 1] * to_real<Real>(base.residue(n));
    return r;
}

template <class Real>
Real g_p_zero(const basezeta::BaseSpectralData<Real>& base, const Real& sigma, const Real& theta0)
{
    return g_p(Real(0), base, sigma, theta0);
}

/// Same combination as an exact polynomial in (sigma^2, S).
template <class Real>
BiPoly g_p_zero_poly(const basezeta::BaseSpectralData<Real>& base)
{
    const auto& polys = asympt::limit_cumulant_polys(base.d);
    BiPoly r;
    for (int n = 1; n <= base.d; ++n)
        r = r + polys[n - 1].scaled(base.residue(n));
    return r;
}

/// C_n H_{n-1} Res zeta_N(n/2) summed with weight 2.
template <class Real>
Q harmonic_residue_sum(const basezeta::BaseSpectralData<Real>& base)
{
    Q r = 0;
    for (int n = 1; n <= base.d; ++n)
        r += 2 * specfun::riemann_zeta_neg_int(n) / n * specfun::harmonic(n - 1) * base.residue(n);
    return r;
}

/// Finite part of Lambda(s) at 0, in closed form through the base data.
template <class Real>
Real pf_lambda0(const basezeta::BaseSpectralData<Real>& base)
{
    return base.zeta_np1_prime0 + base.deriv_at_0 / 4 + base.deriv_at_minus_half / 2 +
           to_real<Real>(base.zeta_at_minus_half + harmonic_residue_sum(base));
}

// ---------------------------------------------------------------------------
// phi(x) = d(x) ln 2F1(1/2 - sigma, 1/2 + sigma; mu_x + 1; S).

template <class Real>
Real log_f21_mu(const Real& c, const Real& sigma, const Real& theta0)
{
    using std::log;
    using std::sin;
    const Real s = sin(theta0 / 2);
    const Real F = specfun::conical_2f1<Real>(sigma * sigma, c, s * s);
    if (!(F > 0))
        throw NonPositiveValue("2F1 at lambda = 0 is not positive: the spectrum has a non-positive eigenvalue");
    return log(F);
}

template <class Real>
Real phi_of_x(const Real& x, const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
              const Real& theta0)
{
    const Real mu = x + Real(base.d - 1) / 2;
    return base.beta.eval(mu) * log_f21_mu(mu + 1, sigma, theta0);
}

namespace detail {

template <class Real>
Cx<Real> conical_2f1_complex(const Real& w2, const Cx<Real>& c, const Real& x)
{
    using std::abs;
    Cx<Real> sum(1), term(1);
    int small = 0;
    for (long n = 0; n < specfun::detail::kMaxSeriesTerms; ++n) {
        const Real h = Real(n) + Real(1) / 2;
        term = term * Cx<Real>((h * h - w2) * x / Real(n + 1)) / (c + Cx<Real>(Real(n)));
        sum += term;
        if (term.abs() <= series_eps<Real>() * sum.abs()) {
            if (++small >= 2)
                return sum;
        } else {
            small = 0;
        }
    }
    throw Divergence("complex 2F1 series did not converge");
}

template <class Real>
Cx<Real> beta_complex(const QPoly& beta, const Cx<Real>& mu)
{
    Cx<Real> r(0);
    for (int i = beta.degree(); i >= 0; --i)
        r = r * mu + Cx<Real>(to_real<Real>(beta.coeff(i)));
    return r;
}

}  // namespace detail

/// phi at x = i y (principal log of the hypergeometric factor).
template <class Real>
Cx<Real> phi_imaginary(const Real& y, const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
                       const Real& theta0)
{
    using std::sin;
    const Real s = sin(theta0 / 2);
    const Cx<Real> mu(Real(base.d - 1) / 2, y);
    const Cx<Real> F = detail::conical_2f1_complex(sigma * sigma, mu + Cx<Real>(Real(1)), s * s);
    if (!(F.re > 0))
        throw Divergence("phi(iy): 2F1 leaves the right half plane, principal log not continuous");
    return detail::beta_complex(base.beta, mu) * log(F);
}

/**
 * @brief Abel-Plana correction -2 int_0^inf Im phi(iy) / (e^{2 pi y} - 1) dy.
 *
 * The integrand is damped by e^{-2 pi y}; the upper limit is where the
 * damping alone drops below 10^{-digits}.
 */
template <class Real>
Real abel_plana_imaginary_term(const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
                               const Real& theta0)
{
    using std::exp;
    using std::log;
    if (sigma == Real(1) / 2 || theta0 == 0)
        return 0;
    const Real two_pi = 2 * pi_v<Real>();
    const Real ymax = Real(digits10_v<Real> + 5) * log(Real(10)) / two_pi + Real(base.d);
    auto f = [&](const Real& y) -> Real {
        if (y == 0)
            return 0;
        return phi_imaginary(y, base, sigma, theta0).im / boost::multiprecision::expm1(two_pi * y);
    };
    return -2 * quad::tanh_sinh(f, Real(0), ymax, quad_tol<Real>(), "abel_plana").value;
}

// ---------------------------------------------------------------------------
// phi-hat(y) = sum_alpha beta_alpha y^{d - alpha} ln F(1/y + 1), mu = 1/y.

template <class Real>
Real phi_hat(const Real& y, const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
             const Real& theta0)
{
    using std::pow;
    const Real lf = log_f21_mu(1 / y + 1, sigma, theta0);
    Real r = 0;
    for (int a = 0; a <= base.beta.degree(); ++a)
        if (base.beta.coeff(a) != 0)
            r += to_real<Real>(base.beta.coeff(a)) * pow(y, base.d - a);
    return r * lf;
}

/**
 * @brief Taylor coefficients of phi-hat at y = 0 through y^order.
 *
 * Term n of the hypergeometric series in mu = 1/y is
 * (a)_n (b)_n S^n / n! * y^n / prod_{k=1}^n (1 + k y), an exact rational
 * function of y, so the coefficients come out without differencing.
 * The expansion is asymptotic (poles at y = -1/k accumulate at 0).
 */
template <class Real>
std::vector<Real> phi_hat_taylor(int order, const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
                                 const Real& theta0)
{
    using std::sin;
    const std::size_t M = static_cast<std::size_t>(order);
    const Real s = sin(theta0 / 2), S = s * s, w2 = sigma * sigma;
    Jet<Real> F(M, Real(1));
    std::vector<Real> p(M + 1, Real(0));  // y^n / prod (1 + k y)
    p[0] = 1;
    Real c = 1;
    for (std::size_t n = 1; n <= M; ++n) {
        const Real h = Real(n - 1) + Real(1) / 2;
        c *= (h * h - w2) * S / Real(n);
        for (std::size_t k = M; k >= 1; --k)  // multiply by y
            p[k] = p[k - 1];
        p[0] = 0;
        for (std::size_t k = 1; k <= M; ++k)  // divide by 1 + n y
            p[k] -= Real(n) * p[k - 1];
        for (std::size_t k = n; k <= M; ++k)
            F[k] += c * p[k];
    }
    Jet<Real> L = log(F);
    std::vector<Real> out(M + 1, Real(0));
    for (int a = 0; a <= base.beta.degree(); ++a) {
        const Q b = base.beta.coeff(a);
        if (b == 0)
            continue;
        const std::size_t shift = static_cast<std::size_t>(base.d - a);
        for (std::size_t k = 0; k + shift <= M; ++k)
            out[k + shift] += to_real<Real>(b) * L[k];
    }
    return out;
}

/// Taylor coefficients of phi-hat about y0 > 0 (for derivatives of any order there).
template <class Real>
std::vector<Real> phi_hat_jet(const Real& y0, int order, const basezeta::BaseSpectralData<Real>& base,
                              const Real& sigma, const Real& theta0)
{
    using std::abs;
    using std::sin;
    const std::size_t M = static_cast<std::size_t>(order);
    const Real s = sin(theta0 / 2), S = s * s, w2 = sigma * sigma;
    const Jet<Real> y = Jet<Real>::variable(M, y0);
    const Jet<Real> c = Jet<Real>(M, Real(1)) / y + Real(1);
    Jet<Real> F(M, Real(1)), term(M, Real(1));
    int small = 0;
    for (long n = 0; n < specfun::detail::kMaxSeriesTerms; ++n) {
        const Real h = Real(n) + Real(1) / 2;
        term = term * ((h * h - w2) * S / Real(n + 1)) / (c + Real(n));
        F += term;
        Real tmax = 0, fmax = 0;
        for (std::size_t k = 0; k <= M; ++k) {
            tmax = std::max<Real>(tmax, abs(term[k]));
            fmax = std::max<Real>(fmax, abs(F[k]));
        }
        if (tmax <= series_eps<Real>() * fmax) {
            if (++small >= 2)
                break;
        } else {
            small = 0;
        }
    }
    Jet<Real> L = log(F);
    Jet<Real> poly(M, Real(0));
    for (int a = 0; a <= base.beta.degree(); ++a) {
        const Q b = base.beta.coeff(a);
        if (b == 0)
            continue;
        Jet<Real> yp(M, Real(1));
        for (int k = 0; k < base.d - a; ++k)
            yp = yp * y;
        poly += yp * to_real<Real>(b);
    }
    return (poly * L).coeffs();
}

template <class Real>
struct PfIntegral {
    Real pf_value;
    Real pole_coeff;
};

namespace detail {

template <class Real>
Real series_eval(const std::vector<Real>& c, std::size_t from, const Real& y)
{
    Real r = 0;
    for (std::size_t k = c.size(); k-- > from;)
        r = r * y + c[k];
    for (std::size_t k = 0; k < from; ++k)
        r *= y;
    return r;
}

inline constexpr double kSeriesRegion = 0.01;

}  // namespace detail

/**
 * @brief Finite part at s = 0 of int_0^Y y^{2s-d-2} phi-hat(y) dy, Y = 2/(d-1).
 *
 * Split at c: on (0, c) the Taylor part through y^{d+1} is subtracted and
 * integrated in closed form (its y^{d+1} piece carries the pole
 * phi-hat_{d+1}/(2s)); the rest is integrated numerically. Below 0.01 the
 * remainder uses the Taylor series directly, integrated termwise.
 */
template <class Real>
PfIntegral<Real> pf_integral_phi(const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
                                 const Real& theta0, const Real& split = Real(1))
{
    using std::log;
    using std::pow;
    if (!(split > 0))
        throw DomainError("pf_integral_phi: split point must be positive");
    if (sigma == Real(1) / 2)
        return {Real(0), Real(0)};
    const int d = base.d;
    const int M = d + 40;
    const auto c = phi_hat_taylor(M, base, sigma, theta0);
    const Real Y = Real(2) / (d - 1);
    const Real ys = std::min<Real>(Real(detail::kSeriesRegion), split);

    Real pf = 0;
    // closed-form Taylor part on (0, split)
    for (int j = 1; j <= d; ++j)
        pf += c[j] * pow(split, j - d - 1) / Real(j - d - 1);
    pf += c[d + 1] * log(split);
    // remainder on (0, ys) from the series
    for (int j = d + 2; j <= M; ++j)
        pf += c[j] * pow(ys, j - d - 1) / Real(j - d - 1);
    // remainder on (ys, split)
    if (split > ys) {
        auto rem = [&](const Real& y) {
            Real t = 0;
            for (int j = d + 1; j >= 1; --j)
                t = (t + c[j]) * y;
            return (phi_hat(y, base, sigma, theta0) - t) * pow(y, -d - 2);
        };
        pf += quad::tanh_sinh(rem, ys, split, quad_tol<Real>(), "pf_integral_phi remainder").value;
    }
    // plain integrand between split and Y (either orientation)
    if (split != Y) {
        auto full = [&](const Real& y) { return phi_hat(y, base, sigma, theta0) * pow(y, -d - 2); };
        if (split < Y)
            pf += quad::tanh_sinh(full, split, Y, quad_tol<Real>(), "pf_integral_phi outer").value;
        else
            pf -= quad::tanh_sinh(full, Y, split, quad_tol<Real>(), "pf_integral_phi outer").value;
    }
    return {pf, c[d + 1] / 2};
}

/**
 * @brief Same finite part through the integration-by-parts form.
 *
 * H_{d+1} phi-hat^{(d+1)}(0)/(d+1)! - (1/(d+1)!) int_0^inf ln y phi-hat^{(d+2)}(y) dy
 * - int_Y^inf y^{-d-2} phi-hat(y) dy.
 */
template <class Real>
Real pf_integral_phi_ibp(const basezeta::BaseSpectralData<Real>& base, const Real& sigma, const Real& theta0)
{
    using std::log;
    using std::pow;
    if (sigma == Real(1) / 2)
        return 0;
    const int d = base.d;
    const int M = d + 40;
    const auto c = phi_hat_taylor(M, base, sigma, theta0);
    const Real Y = Real(2) / (d - 1);
    Real fact = 1, harm = 0;
    for (int k = 1; k <= d + 1; ++k) {
        fact *= k;
        harm += Real(1) / k;
    }
    const Real ys = Real(detail::kSeriesRegion);
    // the jets about y0 lose digits to cancellation, so this route runs at
    // half the working digits: it is a cross-check, not the primary value
    using std::sqrt;
    const Real tol = sqrt(quad_tol<Real>());
    // (d+2)-th derivative / (d+1)!: from the series near 0, from jets elsewhere
    auto deriv = [&](const Real& y) -> Real {
        if (y <= ys) {
            Real r = 0, yp = 1;
            for (int j = d + 2; j <= M; ++j) {
                Real ff = 1;
                for (int i = 0; i < d + 2; ++i)
                    ff *= Real(j - i);
                r += c[j] * ff * yp;
                yp *= y;
            }
            return r / fact;
        }
        const auto jet = phi_hat_jet(y, d + 2, base, sigma, theta0);
        return jet[d + 2] * Real(d + 2);
    };
    Real r = harm * c[d + 1];
    auto inner = [&](const Real& y) { return log(y) * deriv(y); };
    r -= quad::tanh_sinh(inner, Real(0), Real(1), tol, "ibp inner").value;
    r -= quad::exp_sinh(inner, Real(1), tol, "ibp tail").value;
    auto outer = [&](const Real& y) { return phi_hat(y, base, sigma, theta0) * pow(y, -d - 2); };
    r -= quad::exp_sinh(outer, Y, tol, "ibp outer").value;
    return r;
}

// ---------------------------------------------------------------------------
// Nonlocal integral.

/**
 * @brief NL_n = int_0^inf dv ln v (d/dv) a_n(nu(v)), v = u^2, weighted by Res zeta_N(n/2).
 *
 * After integrating by parts around v = 1:
 * NL_n = -2 [ int_0^1 (a_n(u) - a_n(0)) du/u + int_1^inf a_n(u) du/u ]
 * (a_n -> 0 as u -> inf). (0, 0.3) is integrated termwise from the small-u
 * series; the rest in t = ln u with the generic-u recurrence, up to
 * u = 1e12, and the power-law tail beyond from the local decay rate.
 */
template <class Real>
struct NonlocalResult {
    Real total;                // sum_n Res_n NL_n
    std::map<int, Real> per_n; // NL_n for n with nonzero residue
    Real tail;                 // tail beyond the cutoff (already included)
};

template <class Real>
NonlocalResult<Real> nonlocal_integral(const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
                                       const Real& theta0)
{
    using std::abs;
    using std::exp;
    using std::log;
    NonlocalResult<Real> out{Real(0), {}, Real(0)};
    std::vector<int> ns;
    for (int n = 1; n <= base.d; ++n)
        if (base.residue(n) != 0)
            ns.push_back(n);
    // no shortcut at sigma = 1/2: a_n(nu(u)) still depends on u there
    if (ns.empty())
        return out;
    const int N = ns.back();
    const Real uc = Real(asympt::SmallUCumulants<Real>::kRadius);
    asympt::SmallUCumulants<Real> su(N, sigma, theta0);
    const auto a0 = asympt::cumulant_values(N, Real(0), sigma, theta0);

    // memoize cumulant vectors by node, shared by all n
    std::map<Real, std::vector<Real>> memo;
    auto values = [&](const Real& t) -> const std::vector<Real>& {
        auto it = memo.find(t);
        if (it != memo.end())
            return it->second;
        return memo.emplace(t, asympt::cumulant_values(N, exp(t), sigma, theta0)).first->second;
    };
    const Real tmax = log(Real(1e12));
    for (int n : ns) {
        Real I = su.log_moment(n, uc);
        auto near = [&](const Real& t) { return values(t)[n - 1] - a0[n - 1]; };
        auto far = [&](const Real& t) { return values(t)[n - 1]; };
        I += quad::tanh_sinh(near, log(uc), Real(0), quad_tol<Real>(), "nonlocal (0.3, 1)").value;
        I += quad::tanh_sinh(far, Real(0), tmax, quad_tol<Real>(), "nonlocal (1, 1e12)").value;
        // tail: a_n ~ A u^{-p}, int_U^inf = a_n(U)/p
        const Real f1 = values(tmax)[n - 1], f2 = values(tmax + log(Real(2)))[n - 1];
        Real tail = 0;
        if (f1 != 0) {
            const Real p = -log(abs(f2 / f1)) / log(Real(2));
            if (!(p > Real(1) / 2))
                throw QuadratureFailure("nonlocal integral: cumulant does not decay at large u");
            tail = f1 / p;
        }
        I += tail;
        const Real nl = -2 * I;
        out.per_n[n] = nl;
        out.total += to_real<Real>(base.residue(n)) * nl;
        out.tail += -2 * tail * to_real<Real>(base.residue(n));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Assembly of G_R(0).

template <class Real>
struct ContinuationParts {
    Real g_r_log = 0, g_p_log = 0;
    Real g_r_reg = 0, g_p_reg = 0;
    Real g_p_at_0 = 0, g_r_at_0 = 0;
    Real nonlocal = 0;
    Real pf_lambda0 = 0;
    // pieces of the hypergeometric sum
    Real half_phi0 = 0, abel_plana = 0, pf_phi = 0, pole_phi = 0;
    std::vector<std::pair<std::string, Real>> g_r_terms;  // additive terms of G_R(0)
};

/**
 * @brief G_R(0) term by term, with the lnGamma / PF Lambda(0) cancellation checked.
 */
template <class Real>
ContinuationParts<Real> continuation_parts(const basezeta::BaseSpectralData<Real>& base, const Real& sigma,
                                           const Real& theta0)
{
    using std::abs;
    using std::log;
    using std::max;
    using std::tan;
    ContinuationParts<Real> p;
    const auto lp = g_log_parts(base);
    p.g_r_log = lp.g_r_log;
    p.g_p_log = lp.g_p_log;
    const auto rp = g_reg(base, theta0);
    p.g_r_reg = rp.g_r_reg;
    p.g_p_reg = rp.g_p_reg;
    p.g_p_at_0 = g_p_zero(base, sigma, theta0);
    p.nonlocal = nonlocal_integral(base, sigma, theta0).total;
    p.pf_lambda0 = pf_lambda0(base);

    const bool conformal = sigma == Real(1) / 2;
    p.half_phi0 = conformal ? Real(0) : phi_of_x(Real(0), base, sigma, theta0) / 2;
    p.abel_plana = abel_plana_imaginary_term(base, sigma, theta0);
    const auto pfi = pf_integral_phi(base, sigma, theta0);
    p.pf_phi = pfi.pf_value;
    p.pole_phi = pfi.pole_coeff;

    const Real zm = to_real<Real>(base.zeta_at_minus_half), z0 = to_real<Real>(base.zeta_at_0);
    const Real ltan = log(tan(theta0 / 2)), l2pi = log(2 * pi_v<Real>());
    const Real hsum = to_real<Real>(harmonic_residue_sum(base));
    p.g_r_terms = {
        {"zetaN(-1/2) ln tan(theta0/2)", zm * ltan},
        {"-(1/2) zetaN(0) ln 2pi", -z0 * l2pi / 2},
        {"-zeta'_{N+1}(0)", -base.zeta_np1_prime0},
        {"-2 sum C_n H_{n-1} Res", -hsum},
        {"PF int phi", p.pf_phi},
        {"Abel-Plana", p.abel_plana},
        {"(1/2) phi(0)", p.half_phi0},
    };
    for (const auto& [k, v] : p.g_r_terms)
        p.g_r_at_0 += v;

    // long form: lnGamma expansion terms minus PF Lambda(0)
    const Real pf_sum = p.half_phi0 + p.abel_plana + p.pf_phi;
    const Real long_form = base.deriv_at_0 / 2 + ltan * zm -
                           (-base.deriv_at_minus_half / 2 + base.deriv_at_0 / 4 - zm + l2pi * z0 / 2 + p.pf_lambda0) +
                           pf_sum;
    const Real scale = max(Real(1), abs(p.g_r_at_0));
    if (abs(long_form - p.g_r_at_0) > Real(1e-20) * scale)
        throw InvariantViolation("G_R(0): zeta'_N terms do not cancel between lnGamma and PF Lambda(0)");
    return p;
}

}  // namespace zetacap::continuation
