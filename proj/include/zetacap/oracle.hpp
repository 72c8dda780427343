// zetacap/oracle.hpp
#pragma once

#include "zetacap/basezeta.hpp"
#include "zetacap/continuation.hpp"
#include "zetacap/quadrature.hpp"
#include "zetacap/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <ostream>
#include <vector>

namespace zetacap::oracle {

// ---------------------------------------------------------------------------
// Dirichlet roots, double precision.

struct EigenRoot {
    long k = 0;
    int n = 0;
    double omega = 0;   // w: degree -1/2 + w
    double alpha2 = 0;  // eigenvalue w^2 - sigma^2
    double lo = 0, hi = 0;
};

namespace detail {

/**
 * Dirichlet function in w for fixed mu, up to a w-independent positive factor:
 * F(-nu, nu + 1; mu + 1; S), nu = -1/2 + w. The series is used for w < 2 and
 * the degree recurrence (nu + mu + 1) F_{nu+1} = (2nu + 1) x F_nu - (nu - mu) F_{nu-1}
 * above, starting from w mod 1 and w mod 1 + 1. Scaled against overflow,
 * so only the sign and zeros are meaningful.
 */
inline double dirichlet_function(double w, double mu, double theta0)
{
    const double s = std::sin(theta0 / 2), S = s * s, x = std::cos(theta0);
    if (w < 2)
        return specfun::conical_2f1<double>(w * w, mu + 1, S);
    const double w0 = w - std::floor(w);
    const int steps = static_cast<int>(std::lround(w - w0)) - 1;
    double fm = specfun::conical_2f1<double>(w0 * w0, mu + 1, S);
    double f = specfun::conical_2f1<double>((w0 + 1) * (w0 + 1), mu + 1, S);
    double nu = w0 + 0.5;  // degree of f
    for (int i = 0; i < steps; ++i) {
        const double fn = ((2 * nu + 1) * x * f - (nu - mu) * fm) / (nu + mu + 1);
        fm = f;
        f = fn;
        nu += 1;
        if (std::abs(f) > 1e200) {
            f *= 1e-200;
            fm *= 1e-200;
        }
    }
    return f;
}

/// All sign changes of the Dirichlet function on (0, wmax] at grid step 1/m.
inline std::vector<std::pair<double, double>> scan_brackets(double mu, double theta0, double wmax, int m)
{
    const double h = 1.0 / m;
    const long n = static_cast<long>(std::ceil(wmax * m));
    std::vector<signed char> sign(n + 1);
    auto sg = [](double v) -> signed char { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    // one recurrence sweep per lattice offset; only signs are kept
    const double s = std::sin(theta0 / 2), S = s * s, x = std::cos(theta0);
    for (int i = 0; i < m && i <= n; ++i) {
        const double w0 = i * h;
        double fm = specfun::conical_2f1<double>(w0 * w0, mu + 1, S);
        double f = specfun::conical_2f1<double>((w0 + 1) * (w0 + 1), mu + 1, S);
        sign[i] = sg(fm);
        if (i + m <= n)
            sign[i + m] = sg(f);
        double nu = w0 + 0.5;
        for (long j = i + 2 * static_cast<long>(m); j <= n; j += m) {
            const double fn = ((2 * nu + 1) * x * f - (nu - mu) * fm) / (nu + mu + 1);
            fm = f;
            f = fn;
            nu += 1;
            if (std::abs(f) > 1e200) {
                f *= 1e-200;
                fm *= 1e-200;
            }
            sign[j] = sg(f);
        }
    }
    std::vector<std::pair<double, double>> br;
    for (long j = 1; j <= n; ++j)
        if (sign[j - 1] != sign[j] && sign[j - 1] != 0)
            br.emplace_back((j - 1) * h, j * h);
    return br;
}

}  // namespace detail

/**
 * @brief Roots w of P^{-mu_k}_{-1/2+w}(cos theta0) = 0 with w <= wmax (at most `count`).
 *
 * Sign-change scan at step 1/16, halved until two successive scans agree on
 * the root count (BracketFailure after 10 halvings); bisection to 1e-12.
 */
inline std::vector<EigenRoot> eigen_roots_upto(const CapGeometry<double>& geom, long k, double wmax,
                                               int count = 1 << 30)
{
    const double mu = k + (geom.d - 1) / 2.0;
    int m = 16;
    auto br = detail::scan_brackets(mu, geom.theta0, wmax, m);
    for (int level = 0;; ++level) {
        if (level == 10)
            throw BracketFailure("eigen_roots: root count not stable under step halving");
        auto br2 = detail::scan_brackets(mu, geom.theta0, wmax, 2 * m);
        m *= 2;
        const bool same = br2.size() == br.size();
        br = std::move(br2);
        if (same)
            break;
    }
    std::vector<EigenRoot> out;
    for (const auto& [lo0, hi0] : br) {
        if (static_cast<int>(out.size()) >= count)
            break;
        double lo = lo0, hi = hi0;
        double flo = detail::dirichlet_function(lo, mu, geom.theta0);
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double fm = detail::dirichlet_function(mid, mu, geom.theta0);
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        EigenRoot r;
        r.k = k;
        r.n = static_cast<int>(out.size()) + 1;
        r.omega = 0.5 * (lo + hi);
        r.alpha2 = r.omega * r.omega - geom.sigma * geom.sigma;
        r.lo = lo0;
        r.hi = hi0;
        out.push_back(r);
    }
    return out;
}

/// First `count` roots for base index k (scan range grown until enough are found).
inline std::vector<EigenRoot> eigen_roots(const CapGeometry<double>& geom, long k, int count)
{
    if (count < 1)
        throw DomainError("eigen_roots: count must be >= 1");
    const double mu = k + (geom.d - 1) / 2.0;
    double wmax = mu + 4 + count * 4 / geom.theta0;
    for (;;) {
        auto r = eigen_roots_upto(geom, k, wmax, count);
        if (static_cast<int>(r.size()) >= count)
            return r;
        wmax *= 1.5;
    }
}

inline void write_roots_csv(std::ostream& os, const std::vector<EigenRoot>& roots)
{
    os << "k,n,omega,alpha2\n";
    char buf[128];
    for (const auto& r : roots) {
        std::snprintf(buf, sizeof buf, "%ld,%d,%.15g,%.15g\n", r.k, r.n, r.omega, r.alpha2);
        os << buf;
    }
}

// ---------------------------------------------------------------------------
// zeta(s) by root summation.

struct DirectSum {
    double value = 0;
    double tail = 0;         // Weyl estimate of eigenvalues above the cutoff
    double error = 0;        // |value(W) - value(0.8 W)|, both with tails
    long roots_used = 0;
};

namespace detail {

/// Two-term Weyl counting function in w, eigenvalue E = w^2 - d^2/4.
inline double weyl_density(double w, int d, double theta0)
{
    const int D = d + 1;
    const double pi = M_PI;
    auto ball = [&](int n) { return std::pow(pi, n / 2.0) / std::tgamma(n / 2.0 + 1); };
    const double sphere_d = 2 * std::pow(pi, (d + 1) / 2.0) / std::tgamma((d + 1) / 2.0);
    const double area = sphere_d * std::pow(std::sin(theta0), d);
    const double vol = sphere_d * quad::tanh_sinh([&](double t) { return std::pow(std::sin(t), d); }, 0.0, theta0,
                                                  1e-12, "cap volume")
                                      .value;
    const double A = ball(D) * vol / std::pow(2 * pi, D);
    const double B = 0.25 * ball(D - 1) * area / std::pow(2 * pi, D - 1);
    const double E = w * w - d * d / 4.0;
    // dN/dw = dN/dE * 2w
    return (A * D / 2.0 * std::pow(E, D / 2.0 - 1) - B * (D - 1) / 2.0 * std::pow(E, (D - 1) / 2.0 - 1)) * 2 * w;
}

}  // namespace detail

/**
 * @brief sum d(k) (w^2 - sigma^2)^{-s} over roots with w <= wmax, plus a Weyl tail.
 *
 * Requires s > D/2. The error estimate is the change when the cutoff drops to 0.8 wmax.
 */
inline DirectSum zeta_direct(const CapGeometry<double>& geom, double s, double wmax = 200, double max_rel_error = 1e-4)
{
    const int d = geom.d;
    if (!(s > (d + 1) / 2.0))
        throw DomainError("zeta_direct: s outside the convergent region");
    const double w2 = 0.8 * wmax;
    double sum_all = 0, sum_low = 0;
    long used = 0;
    for (long k = 0; k + (d - 1) / 2.0 < wmax; ++k) {
        const double deg = static_cast<double>(basezeta::mu_and_degeneracy(d, k).deg);
        for (const auto& r : eigen_roots_upto(geom, k, wmax)) {
            if (!(r.alpha2 > 0))
                throw NonPositiveValue("zeta_direct: non-positive eigenvalue, zeta(s) is not a positive sum");
            const double t = deg * std::pow(r.alpha2, -s);
            sum_all += t;
            if (r.omega <= w2)
                sum_low += t;
            ++used;
        }
    }
    auto tail = [&](double W) {
        return quad::exp_sinh(
                   [&](double w) {
                       // 2s > d + 1: the power underflows before the ~w^d density overflows
                       const double p = std::pow(w * w - geom.sigma * geom.sigma, -s);
                       return p == 0 ? 0.0 : p * detail::weyl_density(w, d, geom.theta0);
                   },
                   W, 1e-10, "weyl tail")
            .value;
    };
    DirectSum out;
    out.tail = tail(wmax);
    out.value = sum_all + out.tail;
    out.error = std::abs(out.value - (sum_low + tail(w2)));
    out.roots_used = used;
    if (out.error > max_rel_error * std::abs(out.value))
        throw TailBoundTooLarge("zeta_direct: tail error estimate above bound");
    return out;
}

// ---------------------------------------------------------------------------
// zeta(s) from the contour representation.

namespace detail {

/// Taylor coefficients in lambda of ln F_k(lambda), w^2 = sigma^2 + lambda.
template <class Real>
std::vector<Real> log_f_taylor(const Real& mu, const Real& sigma, const Real& theta0, int order)
{
    using std::sin;
    const Real s = sin(theta0 / 2);
    const Jet<Real> w2 = Jet<Real>::variable(order, Real(0)) + sigma * sigma;
    const Jet<Real> F = specfun::conical_2f1<Real>(w2, mu + 1, s * s);
    return log(F).coeffs();
}

/**
 * Per-mode zeta_k(s) for non-integer s:
 * (sin pi s / pi) int_0^inf l^{-s} G'(l) dl, G(l) = ln F(-l). On (0, mu^2/4)
 * the Taylor series of G' is integrated term by term (continued in s); the
 * middle range is quadrature; beyond 400 mu^2 the two-term power form
 * A l^{-1/2} + B l^{-1} of G' is integrated exactly.
 */
template <class Real>
Real zeta_mode_quadrature(const Real& mu, const Real& sigma, const Real& theta0, const Real& s)
{
    using std::pow;
    using std::sin;
    using std::sqrt;
    using std::abs;
    const Real sh = sin(theta0 / 2), S = sh * sh;
    // Below lc the Taylor series of G'(l) converges geometrically (the
    // nearest zero of F sits at l = -lambda_1 with lambda_1 > mu^2), so the
    // piece on (0, lc) is summed term by term, continued in s.
    constexpr int M = 48;
    const auto L = log_f_taylor(mu, sigma, theta0, M + 1);
    auto gprime = [&](const Real& l) {
        const auto [F, dF] = specfun::conical_2f1_with_dw2(sigma * sigma - l, mu + 1, S);
        return -dF / F;
    };
    const Real lc = mu * mu / 4, lmax = 400 * mu * mu;
    const Real tol = Real(1e-12);
    Real I = 0;
    for (int j = 0; j < M; ++j) {
        // G'(l) = sum_j g_j l^j with g_j = (j+1) (-1)^{j+1} L_{j+1}
        const Real gj = Real(j + 1) * ((j + 1) % 2 ? -L[j + 1] : L[j + 1]);
        const Real term = gj * pow(lc, j + 1 - s) / (j + 1 - s);
        I += term;
        if (j > 4 && abs(term) < std::numeric_limits<Real>::epsilon() * abs(I))
            break;
    }
    auto upper = [&](const Real& l) { return pow(l, -s) * gprime(l); };
    I += quad::tanh_sinh(upper, lc, lmax, tol, "contour mode (mu^2/4, 400 mu^2)").value;
    const Real l1 = lmax / 4, l2 = lmax;
    const Real g1 = gprime(l1), g2 = gprime(l2);
    // A l^{-1/2} + B l^{-1} through both points
    const Real B = (g2 * sqrt(l2) - g1 * sqrt(l1)) / (1 / sqrt(l2) - 1 / sqrt(l1));
    const Real A = g2 * sqrt(l2) - B / sqrt(l2);
    I += A * pow(lmax, Real(1) / 2 - s) / (s - Real(1) / 2) + B * pow(lmax, -s) / s;
    return sin(pi_v<Real>() * s) / pi_v<Real>() * I;
}

}  // namespace detail

template <class Real>
struct ContourSum {
    Real value;
    Real tail;       // fitted contribution of modes k > K
    Real tail_check; // same tail from a fit one order shorter
};

/**
 * @brief zeta(s) = sum_k d(k) zeta_k(s) with zeta_k from the contour integral.
 *
 * Integer s: the u-integral collapses to a Taylor coefficient,
 * zeta_k(s) = -s [lambda^s] ln F_k(lambda). Otherwise by quadrature.
 * Modes k > K: zeta_k ~ sum_j c_j mu^{1-2s-j} fitted on geometrically spread
 * modes in [K/4, K] and summed with Hurwitz zeta functions.
 */
template <class Real>
ContourSum<Real> zeta_contour(const CapGeometry<Real>& geom, const Real& s, long K = 240, int J = 10)
{
    using std::abs;
    using std::pow;
    const int d = geom.d;
    if (!(s > Real(d + 1) / 2))
        throw DomainError("zeta_contour: s outside the convergent region");
    const bool integer = specfun::detail::is_integer(s);
    const int si = integer ? static_cast<int>(std::lround(static_cast<double>(s))) : 0;
    auto mode = [&](long k) {
        const Real mu = to_real<Real>(basezeta::mu_and_degeneracy(d, k).mu);
        if (integer) {
            const auto L = detail::log_f_taylor(mu, geom.sigma, geom.theta0, si);
            return -Real(si) * L[si];
        }
        return detail::zeta_mode_quadrature(mu, geom.sigma, geom.theta0, s);
    };
    std::vector<Real> zk(K + 1);
    Real sum = 0;
    for (long k = 0; k <= K; ++k) {
        zk[k] = mode(k);
        sum += to_real<Real>(Q(basezeta::mu_and_degeneracy(d, k).deg)) * zk[k];
    }
    const QPoly beta = basezeta::degeneracy_in_mu(d);
    auto fit_tail = [&](int terms) {
        std::vector<std::vector<Real>> A(terms, std::vector<Real>(terms));
        std::vector<Real> rhs(terms);
        for (int i = 0; i < terms; ++i) {
            const long k = static_cast<long>(K / 4 * pow(4.0, double(i) / (terms - 1)));
            const Real mu = to_real<Real>(basezeta::mu_and_degeneracy(d, std::min(k, K)).mu);
            rhs[i] = zk[std::min(k, K)];
            for (int j = 0; j < terms; ++j)
                A[i][j] = pow(mu, 1 - 2 * s - j);
        }
        const auto c = solve_dense(std::move(A), std::move(rhs));
        const Real a = to_real<Real>(basezeta::mu_and_degeneracy(d, K + 1).mu);
        Real t = 0;
        for (int al = 0; al <= beta.degree(); ++al) {
            if (beta.coeff(al) == 0)
                continue;
            for (int j = 0; j < terms; ++j)
                t += to_real<Real>(beta.coeff(al)) * c[j] * specfun::hurwitz_zeta(2 * s - 1 + j - al, a);
        }
        return t;
    };
    ContourSum<Real> out;
    out.tail = fit_tail(J);
    out.tail_check = fit_tail(J - 1);
    out.value = sum + out.tail;
    return out;
}

// ---------------------------------------------------------------------------
// zeta'(0) by asymptotic subtraction.

template <class Real>
struct SubtractionResult {
    Real value;
    Real error;            // size of the neglected mode tail
    Real mode_sum;         // -sum_k d(k) S_k
    Real analytic;         // base-zeta continuation of the subtracted orders
    Real nonlocal;         // -sum Res NL_n
};

/**
 * @brief zeta'(0) with the first 8 orders of the uniform expansion subtracted mode by mode.
 *
 * S_k = ln F_k(0) - J(mu_k) - sum_{n<=8} a_n(sigma, theta0) mu_k^{-n} decays like mu^{-9};
 * the subtracted orders are continued through PF zeta_N(n/2) and the
 * special values of zeta_N, and the u-dependence of the pole orders is the
 * nonlocal integral.
 */
template <class Real>
SubtractionResult<Real> zeta_prime0_subtraction(const CapGeometry<Real>& geom, long K = 300)
{
    using std::abs;
    using std::log;
    using std::pow;
    using std::sin;
    using std::tan;
    constexpr int N = asympt::kMaxOrder;
    const int d = geom.d;
    const auto base = basezeta::make_base_data<Real>(d);
    const auto a = asympt::cumulant_values(N, Real(0), geom.sigma, geom.theta0);
    Real sum = 0, last = 0;
    for (long k = 0; k <= K; ++k) {
        const auto md = basezeta::mu_and_degeneracy(d, k);
        const Real mu = to_real<Real>(md.mu);
        Real Sk = continuation::log_f21_mu(mu + 1, geom.sigma, geom.theta0) - specfun::binet_j(mu);
        Real mp = 1;
        for (int n = 1; n <= N; ++n) {
            mp /= mu;
            Sk -= a[n - 1] * mp;
        }
        last = to_real<Real>(Q(md.deg)) * Sk;
        sum += last;
    }
    SubtractionResult<Real> r;
    r.mode_sum = -sum;
    const Real z0 = to_real<Real>(base.zeta_at_0), zm = to_real<Real>(base.zeta_at_minus_half);
    r.analytic = -base.deriv_at_0 / 4 - log(sin(geom.theta0)) * z0 / 2 - base.deriv_at_minus_half / 2 -
                 (1 + log(tan(geom.theta0 / 2))) * zm;
    for (int n = 1; n <= N; ++n)
        r.analytic -= a[n - 1] * base.pf_values.at(n);
    r.nonlocal = -continuation::nonlocal_integral(base, geom.sigma, geom.theta0).total;
    r.value = r.mode_sum + r.analytic + r.nonlocal;
    // terms fall like k^{d-1-9}: tail ~ last * K / (9 - d)
    r.error = abs(last) * Real(K) / Real(std::max(1, 9 - d));
    return r;
}

// ---------------------------------------------------------------------------
// Exact hemisphere spectrum (theta0 = pi/2): eigenvalues w^2 - sigma^2,
// w = l + d/2, multiplicity binom(l + d - 1, d), l >= 1.

template <class Real>
struct HemisphereValues {
    Real zeta0;
    Real zeta_prime0;
};

/**
 * @brief zeta(0), zeta'(0) of the hemisphere by binomial expansion in sigma^2.
 *
 * zeta(s) = sum_j binom(-s, j) (-sigma^2)^j Z(2s + 2j), Z(z) = sum m(w) w^{-z}
 * a Hurwitz combination; converges for sigma < 1 + d/2.
 */
template <class Real>
HemisphereValues<Real> hemisphere_zeta(int d, const Real& sigma)
{
    using std::abs;
    using std::pow;
    const Real a0 = Real(d + 2) / 2;
    if (!(sigma < a0))
        throw DomainError("hemisphere_zeta: needs sigma < 1 + d/2");
    // m(w) = prod_{i=0}^{d-1} (w + d/2 - 1 - i) / d!
    QPoly m = QPoly::constant(Q(1));
    for (int i = 0; i < d; ++i)
        m = m * QPoly::x_plus(Q(d, 2) - 1 - i);
    m = m.scaled(Q(1) / Q(factorial_z(d)));
    HemisphereValues<Real> h{0, 0};
    for (int p = 0; p <= m.degree(); ++p) {
        const Real mp = to_real<Real>(m.coeff(p));
        h.zeta0 += mp * specfun::hurwitz_zeta(Real(-p), a0);
        h.zeta_prime0 += 2 * mp * specfun::hurwitz_zeta_ds(Real(-p), a0);
    }
    const Real psi = specfun::digamma_half<Real>(d + 2);
    const Real s2 = sigma * sigma;
    Real s2j = 1;
    for (int j = 1; j < 100000; ++j) {
        s2j *= s2;
        Real fp = 0, res = 0;
        for (int p = 0; p <= m.degree(); ++p) {
            const Real mp = to_real<Real>(m.coeff(p));
            if (2 * j - p == 1) {
                fp -= mp * psi;
                res = mp;
            } else {
                fp += mp * specfun::hurwitz_zeta(Real(2 * j - p), a0);
            }
        }
        h.zeta0 += s2j * res / (2 * j);
        const Real term = s2j * (fp / j + to_real<Real>(specfun::harmonic(j - 1)) * res / (2 * j));
        h.zeta_prime0 += term;
        if (res == 0 && abs(term) < series_eps<Real>() * (1 + abs(h.zeta_prime0)))
            break;
    }
    return h;
}

// ---------------------------------------------------------------------------
// PF Lambda(0) by direct summation over base modes.

/**
 * sum_k d(k) [J(mu_k) + sum_{n<=M} C_n mu_k^{-n}] - sum_n C_n PF zeta_N(n/2),
 * C_n = zeta_R(-n)/n, J the Binet remainder of ln Gamma.
 */
template <class Real>
Real pf_lambda0_direct(int d, long K = 400, int M = 14)
{
    std::vector<Real> C(M + 1);
    for (int n = 1; n <= M; ++n)
        C[n] = to_real<Real>(specfun::riemann_zeta_neg_int(n) / n);
    Real sum = 0;
    for (long k = 0; k <= K; ++k) {
        const auto md = basezeta::mu_and_degeneracy(d, k);
        const Real mu = to_real<Real>(md.mu);
        Real t = specfun::binet_j(mu), mp = 1;
        for (int n = 1; n <= M; ++n) {
            mp /= mu;
            t += C[n] * mp;
        }
        sum += to_real<Real>(Q(md.deg)) * t;
    }
    for (int n = 1; n <= M; ++n)
        if (C[n] != 0)
            sum -= C[n] * basezeta::base_zeta_pf_and_deriv<Real>(d, Real(n) / 2).pf;
    return sum;
}

}  // namespace zetacap::oracle
