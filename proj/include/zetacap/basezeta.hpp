// zetacap/basezeta.hpp
#pragma once

#include "zetacap/core.hpp"
#include "zetacap/rational.hpp"
#include "zetacap/specfun.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace zetacap::basezeta {

/// Finite parts are tabulated for n/2 with n up to this order.
inline constexpr int kPfOrders = 10;

inline void check_dimension(int d)
{
    if (d < 2 || d > 8)
        throw UnsupportedDimension("base dimension d=" + std::to_string(d) + " outside [2, 8]");
}

struct MuDeg {
    Q mu;
    Z deg;
};

/// mu_k = k + (d-1)/2, d(k) = (2k+d-1)(k+d-2)!/(k!(d-1)!).
inline MuDeg mu_and_degeneracy(int d, long k)
{
    if (k < 0)
        throw DomainError("mu_and_degeneracy: k < 0");
    Z num = Z(2 * k + d - 1);
    for (long i = 1; i <= d - 2; ++i)
        num *= (k + i);
    return {Q(2 * k + d - 1, 2), num / factorial_z(d - 1)};
}

/// D_nu^{(d-1)}: nu! times the Taylor coefficients of (y/sinh y)^{d-1}.
inline std::vector<Q> d_coefficients(int d, int up_to)
{
    if (up_to < 0)
        throw DomainError("d_coefficients: up_to < 0");
    const int n = up_to + 1;
    // sinh y / y
    std::vector<Q> s(n, Q(0));
    for (int j = 0; 2 * j < n; ++j)
        s[2 * j] = Q(1) / Q(factorial_z(2 * j + 1));
    // reciprocal series
    std::vector<Q> r(n, Q(0));
    r[0] = 1;
    for (int k = 1; k < n; ++k) {
        Q acc = 0;
        for (int j = 1; j <= k; ++j)
            acc += s[j] * r[k - j];
        r[k] = -acc;
    }
    std::vector<Q> p(n, Q(0));
    p[0] = 1;
    for (int e = 0; e < d - 1; ++e) {
        std::vector<Q> t(n, Q(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; i + j < n; ++j)
                t[i + j] += p[i] * r[j];
        p = std::move(t);
    }
    for (int k = 0; k < n; ++k)
        p[k] *= Q(factorial_z(k));
    return p;
}

/// Degeneracy as a polynomial in mu: d(k) = sum_alpha beta_alpha mu^alpha.
inline QPoly degeneracy_in_mu(int d)
{
    // 2 mu prod_{i=1}^{d-2} (mu + i - (d-1)/2) / (d-1)!
    QPoly p({Q(0), Q(2)});
    for (int i = 1; i <= d - 2; ++i)
        p = p * QPoly::x_plus(Q(2 * i - d + 1, 2));
    return p.scaled(Q(1) / Q(factorial_z(d - 1)));
}

/// e(k) = (2k+d)(k+d-1)!/(k! d!) in powers of m = k + (d+1)/2.
inline QPoly e_alpha(int d)
{
    QPoly p({Q(-1), Q(2)});
    for (int i = 1; i <= d - 1; ++i)
        p = p * QPoly::x_plus(Q(2 * i - d - 1, 2));
    return p.scaled(Q(1) / Q(factorial_z(d)));
}

/// sum_alpha beta_alpha zeta_H(-m - alpha, a) exactly (m >= 0).
inline Q hurwitz_combination_at_neg(const QPoly& p, int m, const Q& a)
{
    Q r = 0;
    for (int al = 0; al <= p.degree(); ++al)
        if (p.c[al] != 0)
            r += p.c[al] * (-specfun::bernoulli_poly(m + al + 1, a) / Q(m + al + 1));
    return r;
}

template <class Real>
Real base_zeta(int d, const Real& s)
{
    check_dimension(d);
    const QPoly beta = degeneracy_in_mu(d);
    const Real a = Real(d - 1) / 2;
    Real r = 0;
    for (int al = 0; al <= beta.degree(); ++al) {
        if (beta.c[al] == 0)
            continue;
        const Real arg = 2 * s - al;
        if (arg == 1)
            throw PoleHit("base_zeta: s = " + std::to_string(static_cast<double>(s)) +
                          " is a pole");
        r += to_real<Real>(beta.c[al]) * specfun::hurwitz_zeta(arg, a);
    }
    return r;
}

/// Res zeta_N(n/2) from the Hurwitz decomposition: beta_{n-1}/2.
inline Q base_zeta_residue(int d, int n)
{
    check_dimension(d);
    if (n < 1 || n > d)
        throw DomainError("base_zeta_residue: n outside [1, d]");
    return degeneracy_in_mu(d).coeff(n - 1) / 2;
}

/// The closed residue formula, valid for 2 <= m <= d; kept as a cross-check.
inline Q base_zeta_residue_formula(int d, int m)
{
    if (m < 2 || m > d)
        throw DomainError("residue formula needs 2 <= m <= d");
    const auto D = d_coefficients(d, d);
    Q pow2 = (m >= d) ? Q(Z(1) << (m - d)) : Q(1) / Q(Z(1) << (d - m));
    return pow2 * D[d - m] / (Q(d - 1) * Q(factorial_z(m - 2)) * Q(factorial_z(d - m)));
}

struct SpecialValues {
    Q zeta0;
    Q zeta_minus_half;
};

inline SpecialValues base_zeta_special_values(int d)
{
    check_dimension(d);
    const QPoly beta = degeneracy_in_mu(d);
    const Q a(d - 1, 2);
    return {hurwitz_combination_at_neg(beta, 0, a), hurwitz_combination_at_neg(beta, 1, a)};
}

/// The closed special-value formulas; cross-check only.
inline SpecialValues base_zeta_special_values_formula(int d)
{
    const auto D = d_coefficients(d, d + 1);
    const Q p = Q(1) / Q(Z(1) << (d - 1));
    return {-p * D[d] / (Q(d - 1) * Q(factorial_z(d))),
            p * D[d + 1] / (Q(d - 1) * Q(factorial_z(d + 1)))};
}

template <class Real>
struct PfDeriv {
    Real pf;
    Real deriv;
    bool is_pole = false;
};

/**
 * @brief Finite part and derivative at s = point.
 *
 * At a pole s = n/2 the derivative is not defined; deriv is NaN there.
 */
template <class Real>
PfDeriv<Real> base_zeta_pf_and_deriv(int d, const Real& point)
{
    check_dimension(d);
    const QPoly beta = degeneracy_in_mu(d);
    const Real a = Real(d - 1) / 2;
    PfDeriv<Real> out{Real(0), Real(0), false};
    for (int al = 0; al <= beta.degree(); ++al) {
        if (beta.c[al] == 0)
            continue;
        const Real b = to_real<Real>(beta.c[al]);
        const Real arg = 2 * point - al;
        if (arg == 1) {
            out.is_pole = true;
            out.pf -= b * specfun::digamma_half<Real>(d - 1);
            continue;
        }
        out.pf += b * specfun::hurwitz_zeta(arg, a);
        if (arg <= 0 && specfun::detail::is_integer(arg))
            out.deriv += 2 * b * specfun::hurwitz_zeta_deriv_neg_half<Real>(
                                     static_cast<int>(-arg), d - 1);
        else
            out.deriv += 2 * b * specfun::hurwitz_zeta_ds(arg, a);
    }
    if (out.is_pole)
        out.deriv = std::numeric_limits<Real>::quiet_NaN();
    return out;
}

template <class Real>
Real zeta_N_plus_1(int d, const Real& s)
{
    check_dimension(d);
    const QPoly e = e_alpha(d);
    const Real a = Real(d + 1) / 2;
    Real r = 0;
    for (int al = 0; al <= e.degree(); ++al) {
        if (e.c[al] == 0)
            continue;
        if (s - al == 1)
            throw PoleHit("zeta_N_plus_1: pole");
        r += to_real<Real>(e.c[al]) * specfun::hurwitz_zeta(s - al, a);
    }
    return r;
}

template <class Real>
Real zeta_N_plus_1_prime0(int d)
{
    check_dimension(d);
    const QPoly e = e_alpha(d);
    Real r = 0;
    for (int al = 0; al <= e.degree(); ++al)
        if (e.c[al] != 0)
            r += to_real<Real>(e.c[al]) * specfun::hurwitz_zeta_deriv_at_neg<Real>(al, d);
    return r;
}

/// zeta_{N+1}(0) from the Hurwitz values.
inline Q zeta_N_plus_1_at0(int d)
{
    check_dimension(d);
    return hurwitz_combination_at_neg(e_alpha(d), 0, Q(d + 1, 2));
}

/// The sum-rule right-hand side -zeta_N(-1/2) - zeta_N(0)/2 - 2 sum C_n Res_n.
inline Q zeta_N_plus_1_sum_rule(int d)
{
    const auto sv = base_zeta_special_values(d);
    Q r = -sv.zeta_minus_half - sv.zeta0 / 2;
    for (int n = 1; n <= d; ++n)
        r -= 2 * specfun::riemann_zeta_neg_int(n) / Q(n) * base_zeta_residue(d, n);
    return r;
}

/**
 * @brief Coefficients of K^{1/2}(t) = sum d(k) e^{-t mu_k} ~ sum_k A_k t^{k-d}.
 *
 * k < d: 2 Gamma(d-k) Res zeta_N((d-k)/2); k >= d: (-1)^{k-d}/(k-d)! zeta_N((d-k)/2).
 */
inline std::vector<Q> heat_half_coefficients(int d, int k_max)
{
    check_dimension(d);
    const QPoly beta = degeneracy_in_mu(d);
    const Q a(d - 1, 2);
    std::vector<Q> out;
    for (int k = 0; k <= k_max; ++k) {
        if (k < d) {
            const int n = d - k;
            Q res = (n - 1 <= beta.degree()) ? beta.coeff(n - 1) / 2 : Q(0);
            out.push_back(2 * Q(factorial_z(d - k - 1)) * res);
        } else {
            const int m = k - d;  // zeta_N(-m/2) = sum beta zeta_H(-m - alpha, a)
            Q v = hurwitz_combination_at_neg(beta, m, a);
            Q sgn = (m % 2 == 0) ? Q(1) : Q(-1);
            out.push_back(sgn * v / Q(factorial_z(m)));
        }
    }
    return out;
}

/// Everything downstream needs about the d-sphere base, computed once per d.
template <class Real>
struct BaseSpectralData {
    int d = 2;
    std::vector<Q> D_coeffs;
    QPoly beta;      // degeneracy in powers of mu
    QPoly e;         // e(k) in powers of k + (d+1)/2
    std::map<int, Q> residues;
    Q zeta_at_0, zeta_at_minus_half;
    Q res_at_minus_half = 0;
    std::map<int, Real> pf_values;
    Real deriv_at_0, deriv_at_minus_half;
    Real zeta_np1_prime0;
    Q zeta_np1_at0;

    Q residue(int n) const { return residues.at(n); }
};

template <class Real>
BaseSpectralData<Real> make_base_data(int d)
{
    check_dimension(d);
    BaseSpectralData<Real> b;
    b.d = d;
    b.D_coeffs = d_coefficients(d, d + 2);
    b.beta = degeneracy_in_mu(d);
    b.e = e_alpha(d);
    for (int n = 1; n <= d; ++n)
        b.residues[n] = base_zeta_residue(d, n);
    const auto sv = base_zeta_special_values(d);
    b.zeta_at_0 = sv.zeta0;
    b.zeta_at_minus_half = sv.zeta_minus_half;
    // a pole at s = -1/2 would need 2s - alpha = 1 with alpha = -2
    b.res_at_minus_half = 0;
    for (int n = 1; n <= kPfOrders; ++n)
        b.pf_values[n] = base_zeta_pf_and_deriv<Real>(d, Real(n) / 2).pf;
    b.deriv_at_0 = base_zeta_pf_and_deriv<Real>(d, Real(0)).deriv;
    b.deriv_at_minus_half = base_zeta_pf_and_deriv<Real>(d, Real(-1) / 2).deriv;
    b.zeta_np1_prime0 = zeta_N_plus_1_prime0<Real>(d);
    b.zeta_np1_at0 = zeta_N_plus_1_at0(d);
    return b;
}

}  // namespace zetacap::basezeta
