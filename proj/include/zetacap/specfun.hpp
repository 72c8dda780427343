// zetacap/specfun.hpp
#pragma once

#include "zetacap/core.hpp"
#include "zetacap/jet.hpp"
#include "zetacap/rational.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <mutex>
#include <vector>

namespace zetacap::specfun {

// ---------------------------------------------------------------------------
// Bernoulli numbers, B_1 = -1/2. Filled on first use under a mutex; readers
// after the fill see an immutable prefix.

inline Q bernoulli_number(int n)
{
    if (n < 0)
        throw DomainError("bernoulli_number: n < 0");
    static std::mutex mtx;
    static std::vector<Q> table{Q(1)};
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(table.size()) <= n) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        const int m = static_cast<int>(table.size());
        Q acc = 0;
        for (int k = 0; k < m; ++k)
            acc += Q(binomial_z(m + 1, k)) * table[k];
        table.push_back(-acc / Q(m + 1));
    }
    return table[n];
}

inline Q bernoulli_poly(int n, const Q& q)
{
    Q r = 0, qp = 1;
    // sum_k C(n,k) B_k q^{n-k}, built from the top power down
    std::vector<Q> powers(n + 1);
    for (int i = 0; i <= n; ++i) {
        powers[i] = qp;
        qp *= q;
    }
    for (int k = 0; k <= n; ++k)
        r += Q(binomial_z(n, k)) * bernoulli_number(k) * powers[n - k];
    return r;
}

template <class Real>
Real bernoulli_poly(int n, const Real& q)
{
    using std::pow;
    Real r = 0;
    for (int k = 0; k <= n; ++k)
        r += to_real<Real>(Q(binomial_z(n, k)) * bernoulli_number(k)) * pow(q, n - k);
    return r;
}

inline Q harmonic(int n)
{
    Q h = 0;
    for (int k = 1; k <= n; ++k)
        h += Q(1, k);
    return h;
}

template <class Real>
Real digamma_positive_integer(int n)
{
    if (n < 1)
        throw DomainError("digamma_positive_integer: n < 1");
    return -euler_gamma_v<Real>() + to_real<Real>(harmonic(n - 1));
}

/// psi(m/2) for positive integer m, via the integer and half-integer identities.
template <class Real>
Real digamma_half(int twice_a)
{
    if (twice_a < 1)
        throw DomainError("digamma_half: argument must be positive");
    if (twice_a % 2 == 0)
        return digamma_positive_integer<Real>(twice_a / 2);
    const int n = (twice_a - 1) / 2;
    Q s = 0;
    for (int k = 1; k <= n; ++k)
        s += Q(2, 2 * k - 1);
    return -euler_gamma_v<Real>() - 2 * ln2_v<Real>() + to_real<Real>(s);
}

namespace detail {

template <class Real>
bool is_integer(const Real& s)
{
    using std::round;
    return s == round(s);
}

template <class Real>
int em_terms(const Real& s)
{
    using std::abs;
    return digits10_v<Real> + 10 + static_cast<int>(abs(static_cast<double>(s)));
}

// Rising product s (s+1) ... (s+2j-2), and its s-derivative.
template <class Real>
void rising(const Real& s, int j, Real& val, Real& der)
{
    val = 1;
    der = 0;
    for (int i = 0; i <= 2 * j - 2; ++i) {
        der = der * (s + i) + val;
        val *= (s + i);
    }
}

}  // namespace detail

/// Hurwitz zeta; exact Bernoulli value at nonpositive integers.
template <class Real>
Real hurwitz_zeta(const Real& s, const Real& a)
{
    using std::log;
    using std::pow;
    if (!(a > 0))
        throw DomainError("hurwitz_zeta: a must be positive");
    if (s == 1)
        throw PoleAtOne("hurwitz_zeta at s = 1");
    if (s <= 0 && detail::is_integer(s)) {
        const int n = static_cast<int>(-s);
        return -bernoulli_poly<Real>(n + 1, a) / (n + 1);
    }
    const int N = detail::em_terms(s);
    const int M = digits10_v<Real> / 2 + 8;
    Real sum = 0;
    for (int k = 0; k < N; ++k)
        sum += pow(a + k, -s);
    const Real x = a + N;
    const Real xs = pow(x, -s);
    sum += x * xs / (s - 1) + xs / 2;
    Real xp = xs / x;  // x^{-s-1}
    const Real x2 = x * x;
    Real fact = 2;     // (2j)!
    for (int j = 1; j <= M; ++j) {
        Real val, der;
        detail::rising(s, j, val, der);
        sum += to_real<Real>(bernoulli_number(2 * j)) / fact * val * xp;
        xp /= x2;
        fact *= Real((2 * j + 1) * (2 * j + 2));
    }
    return sum;
}

/// d/ds zeta_H(s, a) by the differentiated Euler-Maclaurin formula.
template <class Real>
Real hurwitz_zeta_ds(const Real& s, const Real& a)
{
    using std::log;
    using std::pow;
    if (!(a > 0))
        throw DomainError("hurwitz_zeta_ds: a must be positive");
    if (s == 1)
        throw PoleAtOne("hurwitz_zeta_ds at s = 1");
    const int N = detail::em_terms(s);
    const int M = digits10_v<Real> / 2 + 8;
    Real sum = 0;
    for (int k = 0; k < N; ++k) {
        const Real ak = a + k;
        sum -= log(ak) * pow(ak, -s);
    }
    const Real x = a + N;
    const Real lx = log(x);
    const Real xs = pow(x, -s);
    sum += -lx * x * xs / (s - 1) - x * xs / ((s - 1) * (s - 1)) - lx * xs / 2;
    Real xp = xs / x;
    const Real x2 = x * x;
    Real fact = 2;
    for (int j = 1; j <= M; ++j) {
        Real val, der;
        detail::rising(s, j, val, der);
        sum += to_real<Real>(bernoulli_number(2 * j)) / fact * (der - lx * val) * xp;
        xp /= x2;
        fact *= Real((2 * j + 1) * (2 * j + 2));
    }
    return sum;
}

/// zeta_R(-n) exactly, -B_{n+1}(1)/(n+1); differs from -B_{n+1}/(n+1) only at n = 0.
inline Q riemann_zeta_neg_int(int n)
{
    if (n == 0)
        return Q(-1, 2);
    return -bernoulli_number(n + 1) / Q(n + 1);
}

template <class Real>
Real riemann_zeta(const Real& s)
{
    if (s == 1)
        throw PoleAtOne("riemann_zeta at s = 1");
    if (s <= 0 && detail::is_integer(s)) {
        return to_real<Real>(riemann_zeta_neg_int(static_cast<int>(-s)));
    }
    return hurwitz_zeta(s, Real(1));
}

enum class Parity { even, odd };

/**
 * @brief Reflection-derived closed forms.
 *
 * even: zeta'(-2p) = (-1)^p (2p)! zeta(2p+1) / (2 (2 pi)^{2p})
 * odd:  zeta'(1-2p) = (B_{2p}/2p)[psi(2p) - ln 2pi]
 *                     + (-1)^{p+1} 2 (2p-1)! zeta'(2p) / (2 pi)^{2p}
 */
template <class Real>
Real riemann_zeta_deriv_neg(int p, Parity parity)
{
    using std::log;
    using std::pow;
    if (p < 1)
        throw DomainError("riemann_zeta_deriv_neg: p < 1");
    const Real twopi = 2 * pi_v<Real>();
    if (parity == Parity::even) {
        Real v = to_real<Real>(Q(factorial_z(2 * p))) * riemann_zeta(Real(2 * p + 1)) /
                 (2 * pow(twopi, 2 * p));
        return (p % 2 == 0) ? v : -v;
    }
    Real first = to_real<Real>(bernoulli_number(2 * p) / Q(2 * p)) *
                 (digamma_positive_integer<Real>(2 * p) - log(twopi));
    Real second = 2 * to_real<Real>(Q(factorial_z(2 * p - 1))) *
                  hurwitz_zeta_ds(Real(2 * p), Real(1)) / pow(twopi, 2 * p);
    return (p % 2 == 1) ? first + second : first - second;
}

/// zeta_R'(-alpha) for integer alpha >= 0.
template <class Real>
Real riemann_zeta_deriv_at_neg(int alpha)
{
    using std::log;
    if (alpha == 0)
        return -log(2 * pi_v<Real>()) / 2;
    if (alpha % 2 == 0)
        return riemann_zeta_deriv_neg<Real>(alpha / 2, Parity::even);
    return riemann_zeta_deriv_neg<Real>((alpha + 1) / 2, Parity::odd);
}

/// zeta_H'(-alpha, m/2) for integer m >= 1 via the even/odd reductions.
template <class Real>
Real hurwitz_zeta_deriv_neg_half(int alpha, int twice_a)
{
    using std::log;
    using std::pow;
    if (twice_a < 1)
        throw DomainError("hurwitz_zeta_deriv_neg_half: a must be positive");
    const int m = twice_a - 1;
    const Real zp = riemann_zeta_deriv_at_neg<Real>(alpha);
    if (m % 2 == 1) {
        // a = q + 1
        const int q = (m - 1) / 2;
        Real s = zp;
        for (int n = 2; n <= q; ++n)
            s += pow(Real(n), alpha) * log(Real(n));
        return s;
    }
    // a = q + 1/2
    const int q = m / 2;
    const Real two_a = pow(Real(2), -alpha);
    Real pow_sum = 0, log_sum = 0, low_log_sum = 0;
    for (int n = 1; n <= 2 * q - 1; ++n) {
        const Real na = pow(Real(n), alpha);
        pow_sum += na;
        log_sum += na * log(Real(n));
    }
    for (int n = 1; n <= q - 1; ++n)
        low_log_sum += pow(Real(n), alpha) * log(Real(n));
    return ln2_v<Real>() * two_a * (to_real<Real>(riemann_zeta_neg_int(alpha)) - pow_sum) +
           (two_a - 1) * zp + two_a * log_sum - low_log_sum;
}

/// zeta_H'(-alpha, (d+1)/2).
template <class Real>
Real hurwitz_zeta_deriv_at_neg(int alpha, int d)
{
    if (alpha < 0 || d < 2)
        throw DomainError("hurwitz_zeta_deriv_at_neg: need alpha >= 0, d >= 2");
    return hurwitz_zeta_deriv_neg_half<Real>(alpha, d + 1);
}

// ---------------------------------------------------------------------------
// Gamma family.

template <class Real>
Real log_gamma(const Real& x)
{
    if (!(x > 0))
        throw NonPositiveValue("log_gamma: x <= 0");
    if (x == 1 || x == 2)
        return Real(0);
    return boost::math::lgamma(x);
}

/// Binet remainder J(x) = ln Gamma(x) - (x - 1/2) ln x + x - ln(2 pi)/2.
template <class Real>
Real binet_j(const Real& x)
{
    using std::abs;
    using std::log;
    using std::pow;
    if (!(x > 0))
        throw NonPositiveValue("binet_j: x <= 0");
    if (x >= Real(digits10_v<Real> + 5)) {
        Real sum = 0, xp = 1 / x;
        const Real x2 = x * x;
        for (int k = 1; k <= digits10_v<Real>; ++k) {
            Real t = to_real<Real>(bernoulli_number(2 * k) / Q(2 * k * (2 * k - 1))) * xp;
            sum += t;
            if (abs(t) < series_eps<Real>() * abs(sum))
                break;
            xp /= x2;
        }
        return sum;
    }
    return log_gamma(x) - (x - Real(1) / 2) * log(x) + x - log(2 * pi_v<Real>()) / 2;
}

template <class Real>
Real rgamma(const Real& x)
{
    if (x <= 0 && detail::is_integer(x))
        return Real(0);
    return 1 / boost::math::tgamma(x);
}

// ---------------------------------------------------------------------------
// Gauss hypergeometric function.

namespace detail {

inline constexpr long kMaxSeriesTerms = 2'000'000;

template <class Real>
bool nonpositive_integer(const Real& a)
{
    return a <= 0 && is_integer(a);
}

template <class Real>
Real f21_series(const Real& a, const Real& b, const Real& c, const Real& x)
{
    using std::abs;
    Real sum = 1, term = 1;
    int small = 0;
    for (long n = 0; n < kMaxSeriesTerms; ++n) {
        term *= (a + n) * (b + n) * x / ((c + n) * Real(n + 1));
        sum += term;
        if (term == 0)
            return sum;
        if (abs(term) <= series_eps<Real>() * abs(sum)) {
            if (++small >= 2)
                return sum;
        } else {
            small = 0;
        }
    }
    throw Divergence("gauss_2f1: series did not converge within the term budget");
}

}  // namespace detail

template <class Real>
Real gauss_2f1(const Real& a, const Real& b, const Real& c, const Real& x)
{
    using std::pow;
    if (detail::nonpositive_integer(c))
        throw DomainError("gauss_2f1: c is a nonpositive integer");
    if (!(x >= 0) || !(x < 1))
        throw DomainError("gauss_2f1: x outside [0, 1)");
    if (x == 0 || a == 0 || b == 0)
        return Real(1);
    if (detail::nonpositive_integer(a) || detail::nonpositive_integer(b) || x <= Real(1) / 2)
        return detail::f21_series(a, b, c, x);
    const Real e = c - a - b;
    if (detail::is_integer(e))
        return detail::f21_series(a, b, c, x);
    // 1 - x connection formula
    const Real y = 1 - x;
    Real t1 = boost::math::tgamma(c) * boost::math::tgamma(e) * rgamma(c - a) * rgamma(c - b);
    Real t2 = boost::math::tgamma(c) * boost::math::tgamma(-e) * rgamma(a) * rgamma(b);
    Real r = 0;
    if (t1 != 0)
        r += t1 * detail::f21_series(a, b, 1 - e, y);
    if (t2 != 0)
        r += t2 * pow(y, e) * detail::f21_series(c - a, c - b, 1 + e, y);
    return r;
}

/**
 * @brief 2F1(1/2 - w, 1/2 + w; c; x) parametrized by w^2.
 *
 * (a)_n (b)_n = prod_k ((k + 1/2)^2 - w^2) is real for real w^2 of either
 * sign, so the oscillatory (imaginary w) case needs no complex arithmetic.
 * T may be Real or a Jet over Real (Taylor coefficients in a parameter).
 */
template <class Real, class T>
T conical_2f1(const T& w2, const Real& c, const Real& x)
{
    using std::abs;
    if constexpr (std::is_same_v<T, Real>) {
        using std::sqrt;
        // real w, large x, noninteger c - 1: the connection formula is much faster
        if (x > Real(9) / 10 && w2 >= 0 && !detail::is_integer(c)) {
            const Real w = sqrt(w2);
            return gauss_2f1(Real(1) / 2 - w, Real(1) / 2 + w, c, x);
        }
    }
    T sum = w2 * Real(0) + Real(1);
    T term = sum;
    int small = 0;
    for (long n = 0; n < detail::kMaxSeriesTerms; ++n) {
        const Real h = Real(n) + Real(1) / 2;
        const Real scale = x / ((c + n) * Real(n + 1));
        if constexpr (std::is_same_v<T, Real>) {
            term *= (h * h - w2) * scale;
            sum += term;
            if (abs(term) <= series_eps<Real>() * abs(sum)) {
                if (++small >= 2)
                    return sum;
            } else {
                small = 0;
            }
        } else {
            term = term * ((w2 * Real(-1)) + h * h) * scale;
            sum += term;
            Real tmax = 0, smax = 0;
            for (std::size_t k = 0; k <= term.order(); ++k) {
                tmax = std::max<Real>(tmax, abs(term[k]));
                smax = std::max<Real>(smax, abs(sum[k]));
            }
            if (tmax <= series_eps<Real>() * smax) {
                if (++small >= 2)
                    return sum;
            } else {
                small = 0;
            }
        }
    }
    throw Divergence("conical_2f1: series did not converge within the term budget");
}

/// 2F1 together with its derivative in w^2, by the same series.
template <class Real>
std::pair<Real, Real> conical_2f1_with_dw2(const Real& w2, const Real& c, const Real& x)
{
    Jet<Real> j = Jet<Real>::variable(1, w2);
    Jet<Real> f = conical_2f1<Real>(j, c, x);
    return {f[0], f[1]};
}

// ---------------------------------------------------------------------------
// Ferrers functions of the first kind.

namespace detail {

template <class Real>
Real log_prefactor(const Real& mu, const Real& theta)
{
    using std::log;
    using std::tan;
    if (mu == 0)
        return Real(0);
    return mu * log(tan(theta / 2)) - log_gamma(mu + 1);
}

template <class Real>
Real half_angle_x(const Real& theta)
{
    using std::sin;
    const Real h = sin(theta / 2);
    return h * h;
}

template <class Real>
void check_ferrers_args(const Real& mu, const Real& theta)
{
    if (mu < 0)
        throw DomainError("ferrers: mu < 0");
    if (!(theta > 0) || !(theta < pi_v<Real>()))
        throw DomainError("ferrers: theta outside (0, pi)");
}

template <class Real>
Real checked_exp(const Real& lp)
{
    using std::exp;
    using std::log;
    if (lp > log(std::numeric_limits<Real>::max()) / 2)
        throw Overflow("ferrers_p: prefactor exceeds exponent range; use log_ferrers_p");
    return exp(lp);
}

}  // namespace detail

/// P_nu^{-mu}(cos theta).
template <class Real>
Real ferrers_p(const Real& nu, const Real& mu, const Real& theta)
{
    detail::check_ferrers_args(mu, theta);
    const Real F = gauss_2f1(-nu, nu + 1, mu + 1, detail::half_angle_x(theta));
    return detail::checked_exp(detail::log_prefactor(mu, theta)) * F;
}

template <class Real>
Real log_ferrers_p(const Real& nu, const Real& mu, const Real& theta)
{
    using std::log;
    detail::check_ferrers_args(mu, theta);
    const Real F = gauss_2f1(-nu, nu + 1, mu + 1, detail::half_angle_x(theta));
    if (!(F > 0))
        throw NonPositiveValue("log_ferrers_p: hypergeometric factor <= 0");
    return detail::log_prefactor(mu, theta) + log(F);
}

/// P^{-mu}_{-1/2 + w}(cos theta) with w given through w^2 (either sign).
template <class Real>
Real ferrers_p_conical(const Real& w2, const Real& mu, const Real& theta)
{
    detail::check_ferrers_args(mu, theta);
    const Real F = conical_2f1(w2, mu + 1, detail::half_angle_x(theta));
    return detail::checked_exp(detail::log_prefactor(mu, theta)) * F;
}

template <class Real>
Real log_ferrers_p_conical(const Real& w2, const Real& mu, const Real& theta)
{
    using std::log;
    detail::check_ferrers_args(mu, theta);
    const Real F = conical_2f1(w2, mu + 1, detail::half_angle_x(theta));
    if (!(F > 0))
        throw NonPositiveValue("log_ferrers_p: hypergeometric factor <= 0");
    return detail::log_prefactor(mu, theta) + log(F);
}

}  // namespace zetacap::specfun
