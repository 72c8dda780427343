// zetacap/asympt.hpp
#pragma once

#include "zetacap/core.hpp"
#include "zetacap/rational.hpp"
#include "zetacap/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace zetacap::asympt {

inline constexpr int kMaxOrder = 8;

/// Next wider working type; NuSeries coefficients cancel like u^{-2n}.
template <class Real>
struct wider {
    using type = boost::multiprecision::number<
        boost::multiprecision::cpp_bin_float<2 * digits10_v<Real> + 10>,
        boost::multiprecision::et_off>;
};
template <>
struct wider<double> {
    using type = real50;
};
template <class Real>
using wider_t = typename wider<Real>::type;

template <class To, class From>
To convert(const From& x)
{
    if constexpr (std::is_same_v<To, From>)
        return x;
    else if constexpr (std::is_floating_point_v<To>)
        return static_cast<To>(x);
    else
        return To(x);
}

// ---------------------------------------------------------------------------
// Geometry of the uniform expansion.

template <class Real>
struct GeometryPoint {
    Real u;
    Real t;
    Real nu;
    Real tau;                // -inf encoded by tau_finite == false
    Real tau_minus_log_u;    // finite at u = 0
    bool tau_finite = true;
};

template <class Real>
GeometryPoint<Real> geometry_point(const Real& u, const Real& theta0)
{
    using std::atan;
    using std::atan2;
    using std::cos;
    using std::log;
    using std::sin;
    using std::sqrt;
    if (u < 0)
        throw DomainError("geometry_point: u < 0");
    if (!(theta0 > 0) || !(theta0 < pi_v<Real>()))
        throw DomainError("geometry_point: theta0 outside (0, pi)");
    const Real s = sin(theta0), c = cos(theta0);
    const Real r = sqrt(1 + u * u * s * s);
    GeometryPoint<Real> g;
    g.u = u;
    g.t = 1 / r;
    g.nu = c / r;
    Real arc = 0;
    if (u > 0)
        arc = u * (atan(1 / u) - atan2(Real(1), u * g.t * c));
    g.tau_minus_log_u = 1 + log(s / (r + c)) - arc;
    g.tau_finite = u > 0;
    g.tau = g.tau_finite ? g.tau_minus_log_u + log(u) : Real(0);
    return g;
}

/// 1/2 ln(t / 2 pi mu) + mu tau - mu ln(mu u).
template <class Real>
Real uniform_leading(const Real& mu, const GeometryPoint<Real>& g)
{
    using std::log;
    return log(g.t / (2 * pi_v<Real>() * mu)) / 2 + mu * g.tau_minus_log_u - mu * log(mu);
}

// ---------------------------------------------------------------------------
// NuSeries: sum of coeff * nu^j * arctan^p(u nu) * ln^q(1 + u^2 nu^2).

using NuKey = std::array<int, 3>;

template <class Real>
class NuSeries {
public:
    NuSeries() = default;
    NuSeries(Real u, Real sigma2) : u_(std::move(u)), sigma2_(std::move(sigma2)) {}

    static NuSeries one(const Real& u, const Real& sigma2)
    {
        NuSeries s(u, sigma2);
        s.terms_[{0, 0, 0}] = 1;
        return s;
    }

    const std::map<NuKey, Real>& terms() const { return terms_; }
    const Real& u() const { return u_; }
    const Real& sigma2() const { return sigma2_; }

    void add(const NuKey& k, const Real& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Real operator()(const Real& nu) const
    {
        using std::atan;
        using std::log1p;
        using std::pow;
        const Real A = atan(u_ * nu);
        const Real L = log1p(u_ * u_ * nu * nu);
        Real r = 0;
        for (auto& [k, c] : terms_)
            r += c * pow(nu, k[0]) * pow(A, k[1]) * pow(L, k[2]);
        return r;
    }

    friend NuSeries operator*(const NuSeries& a, const NuSeries& b)
    {
        NuSeries r(a.u_, a.sigma2_);
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_)
                r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        return r;
    }
    friend NuSeries operator+(NuSeries a, const NuSeries& b)
    {
        for (auto& [k, c] : b.terms_)
            a.add(k, c);
        return a;
    }
    NuSeries scaled(const Real& s) const
    {
        NuSeries r(u_, sigma2_);
        for (auto& [k, c] : terms_)
            r.add(k, c * s);
        return r;
    }

    int max_poly_degree() const
    {
        int m = 0;
        for (auto& [k, c] : terms_)
            m = std::max(m, k[0]);
        return m;
    }

private:
    Real u_ = 0, sigma2_ = 0;
    std::map<NuKey, Real> terms_;
};

namespace detail {

template <class Real>
using TermMap = std::map<NuKey, Real>;

template <class Real>
void acc(TermMap<Real>& m, const NuKey& k, const Real& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh)
        it->second += c;
}

// Move nu^j/(1+u^2 nu^2), j >= 2, into the polynomial part.
template <class Real>
void reduce_rational(TermMap<Real>& P, TermMap<Real>& R, const Real& u)
{
    const Real iu2 = 1 / (u * u);
    for (;;) {
        auto it = std::find_if(R.begin(), R.end(), [](auto& kv) { return kv.first[0] >= 2; });
        if (it == R.end())
            return;
        NuKey k = it->first;
        Real c = it->second;
        R.erase(it);
        acc(P, {k[0] - 2, k[1], k[2]}, c * iu2);
        acc(R, {k[0] - 2, k[1], k[2]}, -c * iu2);
    }
}

/// Antiderivative of P + R/(1+u^2 nu^2) inside the basis.
template <class Real>
TermMap<Real> antiderivative(TermMap<Real> P, TermMap<Real> R, const Real& u)
{
    using std::abs;
    TermMap<Real> F;
    reduce_rational(P, R, u);
    for (;;) {
        auto best = P.end();
        for (auto it = P.begin(); it != P.end(); ++it) {
            const NuKey& k = it->first;
            if (k[1] + k[2] == 0 || it->second == 0)
                continue;
            if (best == P.end() ||
                std::make_pair(k[1] + k[2], k[0]) >
                    std::make_pair(best->first[1] + best->first[2], best->first[0]))
                best = it;
        }
        if (best == P.end())
            break;
        const auto [j, p, q] = best->first;
        const Real c = best->second;
        P.erase(best);
        acc(F, {j + 1, p, q}, c / (j + 1));
        if (p)
            acc(R, {j + 1, p - 1, q}, -c * p * u / (j + 1));
        if (q)
            acc(R, {j + 2, p, q - 1}, -c * 2 * u * u * q / (j + 1));
        reduce_rational(P, R, u);
    }
    for (auto& [k, c] : P)
        acc(F, {k[0] + 1, 0, 0}, c / (k[0] + 1));

    Real scale = 1;
    for (auto& [k, c] : R)
        scale = std::max<Real>(scale, abs(c));
    std::map<std::pair<int, int>, Real> c0;
    for (auto& [k, c] : R)
        if (k[0] == 0)
            c0[{k[1], k[2]}] += c;
    for (auto& [k, c] : R) {
        if (k[0] != 1)
            continue;
        const int p = k[1], q = k[2];
        const Real kk = c / (2 * u * u * (q + 1));
        acc(F, {0, p, q + 1}, kk);
        if (p)
            c0[{p - 1, q + 1}] -= u * p * kk;
    }
    using std::pow;
    const Real tol = scale * pow(Real(10), -(digits10_v<Real> - 15));
    for (auto& [pq, c] : c0) {
        if (pq.second == 0)
            acc(F, {0, pq.first + 1, 0}, c / (u * (pq.first + 1)));
        else if (abs(c) > tol)
            throw BasisOverflow("antiderivative of arctan^" + std::to_string(pq.first) +
                                " ln^" + std::to_string(pq.second) +
                                " / (1 + u^2 nu^2) is outside the basis catalogue");
    }
    return F;
}

}  // namespace detail

/**
 * @brief One step of the recurrence for the A_n(nu) at fixed (u, sigma).
 *
 * A_{n+1} = (1-nu^2)(1+u^2 nu^2)/(2(1+u^2)) A_n'
 *           - u^2/(8(1+u^2)) int_1^nu (5x^2 + 1/u^2 - 1 - 4 sigma^2 (1+u^2)/(u^2 (1+u^2 x^2))) A_n
 */
template <class Real>
NuSeries<Real> curly_a_next(const NuSeries<Real>& prev)
{
    const Real& u = prev.u();
    const Real& s2 = prev.sigma2();
    if (!(u > 0))
        throw DomainError("curly_a_next: generic mode needs u > 0; use the limit recurrence");
    const Real u2 = u * u;
    const Real g = 1 / (1 + u2);

    // (1 + u^2 nu^2) f'
    detail::TermMap<Real> D;
    for (auto& [k, c] : prev.terms()) {
        const auto [j, p, q] = k;
        if (j) {
            detail::acc(D, {j - 1, p, q}, c * j);
            detail::acc(D, {j + 1, p, q}, c * j * u2);
        }
        if (p)
            detail::acc(D, {j, p - 1, q}, c * p * u);
        if (q)
            detail::acc(D, {j + 1, p, q - 1}, c * q * 2 * u2);
    }
    NuSeries<Real> out(u, s2);
    for (auto& [k, c] : D) {
        out.add(k, c * g / 2);
        out.add({k[0] + 2, k[1], k[2]}, -c * g / 2);
    }

    detail::TermMap<Real> P, R;
    for (auto& [k, c] : prev.terms()) {
        detail::acc(P, {k[0] + 2, k[1], k[2]}, 5 * c);
        detail::acc(P, k, (1 / u2 - 1) * c);
        detail::acc(R, k, -4 * s2 * (1 + u2) / u2 * c);
    }
    auto F = detail::antiderivative(std::move(P), std::move(R), u);
    NuSeries<Real> Fs(u, s2);
    for (auto& [k, c] : F)
        Fs.add(k, c);
    const Real F1 = Fs(Real(1));
    Fs.add({0, 0, 0}, -F1);
    const Real w = -u2 * g / 8;
    for (auto& [k, c] : Fs.terms())
        out.add(k, c * w);
    return out;
}

// ---------------------------------------------------------------------------
// Exact u -> 0 limit: A_n as polynomials in nu with BiPoly coefficients.

using LimitPoly = std::vector<BiPoly>;

inline LimitPoly limit_a_next(const LimitPoly& A)
{
    const BiPoly one_m4s2 = BiPoly::constant(1) - BiPoly::monomial(1, 0, 4);
    LimitPoly out(A.size() + 2);
    // (1 - nu^2)/2 A'
    for (std::size_t j = 1; j < A.size(); ++j) {
        BiPoly t = A[j].scaled(Q(static_cast<int>(j), 2));
        out[j - 1] = out[j - 1] + t;
        out[j + 1] = out[j + 1] - t;
    }
    // -(1/8)(1 - 4 sigma^2) int_1^nu A
    LimitPoly I(A.size() + 1);
    for (std::size_t j = 0; j < A.size(); ++j) {
        BiPoly t = A[j].scaled(Q(1, static_cast<int>(j + 1)));
        I[j + 1] = I[j + 1] + t;
        I[0] = I[0] - t;
    }
    for (std::size_t j = 0; j < I.size(); ++j)
        out[j] = out[j] - (one_m4s2 * I[j]).scaled(Q(1, 8));
    while (!out.empty() && out.back().c.empty())
        out.pop_back();
    return out;
}

/// nu -> cos(theta0) = 1 - 2S.
inline BiPoly limit_at_cos(const LimitPoly& A)
{
    const BiPoly nu = BiPoly::constant(1) - BiPoly::monomial(0, 1, 2);
    BiPoly r;
    for (int j = static_cast<int>(A.size()) - 1; j >= 0; --j)
        r = r * nu + A[j];
    return r;
}

/// Bernoulli tail coefficient added to the n-th cumulant: -B_{n+1}/(n(n+1)) for odd n.
inline Q bernoulli_tail(int n)
{
    if (n % 2 == 0)
        return 0;
    return -specfun::bernoulli_number(n + 1) / Q(n * (n + 1));
}

/// log(1 + sum c_n e^n) coefficients, generic over a ring with +, *, scaled.
template <class T, class Scale>
std::vector<T> log_series(const std::vector<T>& c, Scale scale)
{
    const int N = static_cast<int>(c.size()) - 1;
    std::vector<T> l(N + 1);
    for (int n = 1; n <= N; ++n) {
        T acc = c[n];
        for (int k = 1; k < n; ++k)
            acc = acc + scale(l[k] * c[n - k], -k, n);
        l[n] = acc;
    }
    return l;
}

template <class Real>
struct CumulantSet {
    enum class Mode { generic, limit };
    Mode mode = Mode::generic;
    int order = 0;
    Real u = 0, sigma = 0, theta0 = 0;
    std::vector<NuSeries<Real>> a;   // generic: a[n-1]
    std::vector<BiPoly> a_limit;     // limit:   a_limit[n-1]

    /// a_n at nu(u), or the limit polynomial at (sigma^2, S).
    Real value(int n) const
    {
        if (mode == Mode::limit) {
            using std::sin;
            const Real h = sin(theta0 / 2);
            return a_limit.at(n - 1).eval(sigma * sigma, h * h);
        }
        return a.at(n - 1)(geometry_point(u, theta0).nu);
    }
};

inline std::vector<BiPoly> limit_cumulant_polys(int N)
{
    if (N < 1 || N > kMaxOrder)
        throw DomainError("cumulant order must lie in [1, 8]");
    static std::mutex mtx;
    static std::vector<BiPoly> cache;
    std::lock_guard<std::mutex> lock(mtx);
    if (static_cast<int>(cache.size()) < N) {
        std::vector<BiPoly> c(N + 1);
        LimitPoly A{BiPoly::constant(1)};
        c[0] = BiPoly::constant(1);
        for (int n = 1; n <= N; ++n) {
            A = limit_a_next(A);
            c[n] = limit_at_cos(A);
        }
        auto l = log_series(c, [](const BiPoly& p, int num, int den) {
            return p.scaled(Q(num, den));
        });
        cache.clear();
        for (int n = 1; n <= N; ++n)
            cache.push_back(l[n] + BiPoly::constant(bernoulli_tail(n)));
    }
    return {cache.begin(), cache.begin() + N};
}

template <class Real>
CumulantSet<Real> cumulants_limit_u0(int N, const Real& sigma, const Real& theta0)
{
    CumulantSet<Real> cs;
    cs.mode = CumulantSet<Real>::Mode::limit;
    cs.order = N;
    cs.sigma = sigma;
    cs.theta0 = theta0;
    cs.a_limit = limit_cumulant_polys(N);
    return cs;
}

template <class Real>
std::vector<NuSeries<Real>> curly_a_series(int N, const Real& u, const Real& sigma)
{
    std::vector<NuSeries<Real>> A{NuSeries<Real>::one(u, sigma * sigma)};
    for (int n = 1; n <= N; ++n)
        A.push_back(curly_a_next(A.back()));
    return A;
}

template <class Real>
CumulantSet<Real> cumulants(int N, const Real& u, const Real& sigma, const Real& theta0)
{
    if (N < 1 || N > kMaxOrder)
        throw DomainError("cumulant order must lie in [1, 8]");
    if (u == 0) {
        auto cs = cumulants_limit_u0(N, sigma, theta0);
        cs.u = 0;
        return cs;
    }
    CumulantSet<Real> cs;
    cs.order = N;
    cs.u = u;
    cs.sigma = sigma;
    cs.theta0 = theta0;
    auto A = curly_a_series(N, u, sigma);
    auto l = log_series(A, [](const NuSeries<Real>& p, int num, int den) {
        return p.scaled(Real(num) / den);
    });
    for (int n = 1; n <= N; ++n) {
        NuSeries<Real> s = l[n];
        s.add({0, 0, 0}, to_real<Real>(bernoulli_tail(n)));
        cs.a.push_back(std::move(s));
    }
    return cs;
}

// ---------------------------------------------------------------------------
// Small-u mode: A_n as polynomials in nu whose coefficients are truncated
// power series in u^2. No 1/u^2 appears, so nothing cancels as u -> 0.

template <class Real>
class SmallUCumulants {
public:
    static constexpr double kRadius = 0.3;

    SmallUCumulants(int N, const Real& sigma, const Real& theta0)
        : N_(N), K_(series_length()), sigma_(sigma), theta0_(theta0)
    {
        build();
    }

    int order() const { return N_; }
    int length() const { return K_; }

    /// Coefficient of u^{2k} in a_n(nu(u), u).
    const Real& coeff(int n, int k) const { return b_.at(n - 1).at(k); }

    Real value(int n, const Real& u) const
    {
        const Real u2 = u * u;
        Real r = 0;
        for (int k = K_; k >= 0; --k)
            r = r * u2 + b_[n - 1][k];
        return r;
    }

    /// int_0^{uc} (a_n(u) - a_n(0)) / u du, termwise.
    Real log_moment(int n, const Real& uc) const
    {
        using std::pow;
        const Real u2 = uc * uc;
        Real r = 0, p = u2;
        for (int k = 1; k <= K_; ++k) {
            r += b_[n - 1][k] * p / (2 * k);
            p *= u2;
        }
        return r;
    }

private:
    using Grid = std::vector<std::vector<Real>>;  // [j][k]

    static int series_length()
    {
        const double digits = digits10_v<Real> + 6;
        return static_cast<int>(std::ceil(digits * std::log(10.0) / (-2 * std::log(kRadius)))) + 2;
    }

    Grid zero(int J) const { return Grid(J + 1, std::vector<Real>(K_ + 1, Real(0))); }

    // series product truncated at K
    void mul_add(std::vector<Real>& out, const std::vector<Real>& a, const std::vector<Real>& b,
                 const Real& w) const
    {
        for (int i = 0; i <= K_; ++i) {
            if (a[i] == 0)
                continue;
            for (int j = 0; i + j <= K_; ++j)
                out[i + j] += w * a[i] * b[j];
        }
    }

    std::vector<Real> geometric(const Real& x) const
    {
        // 1/(1 + x u^2) as a series in u^2
        std::vector<Real> g(K_ + 1);
        Real p = 1;
        for (int k = 0; k <= K_; ++k) {
            g[k] = p;
            p *= -x;
        }
        return g;
    }

    Grid next(const Grid& A) const
    {
        const int J = static_cast<int>(A.size()) - 1;
        const Real s2 = sigma_ * sigma_;
        const auto g = geometric(Real(1));
        // derivative, times (1 + u^2 nu^2), times (1 - nu^2)/2
        Grid d = zero(J + 2);
        for (int j = 1; j <= J; ++j)
            for (int k = 0; k <= K_; ++k) {
                const Real c = A[j][k] * j;
                if (c == 0)
                    continue;
                d[j - 1][k] += c;
                if (k + 1 <= K_)
                    d[j + 1][k + 1] += c;
            }
        Grid e = zero(J + 4);
        for (int j = 0; j <= J + 2; ++j)
            for (int k = 0; k <= K_; ++k) {
                if (d[j][k] == 0)
                    continue;
                e[j][k] += d[j][k] / 2;
                e[j + 2][k] -= d[j][k] / 2;
            }
        // h(x) A(x), h = 5u^2x^2 + 1 - u^2 - 4 sigma^2 (1+u^2) sum_m (-u^2 x^2)^m
        const int Jh = J + 2 * K_ + 2;
        Grid h = zero(Jh);
        for (int j = 0; j <= J; ++j)
            for (int k = 0; k <= K_; ++k) {
                const Real c = A[j][k];
                if (c == 0)
                    continue;
                if (k + 1 <= K_) {
                    h[j + 2][k + 1] += 5 * c;
                    h[j][k + 1] -= c;
                }
                h[j][k] += c;
                // -4 sigma^2 (1 + u^2) (-u^2 x^2)^m = -4 s2 [(-1)^m u^{2m} + (-1)^m u^{2m+2}] x^{2m}
                Real sgn = -4 * s2 * c;
                for (int m = 0; k + m <= K_; ++m) {
                    h[j + 2 * m][k + m] += sgn;
                    if (k + m + 1 <= K_)
                        h[j + 2 * m][k + m + 1] += sgn;
                    sgn = -sgn;
                }
            }
        // int_1^nu, then times -g/8
        Grid I = zero(Jh + 1);
        for (int j = 0; j <= Jh; ++j)
            for (int k = 0; k <= K_; ++k) {
                if (h[j][k] == 0)
                    continue;
                const Real t = h[j][k] / (j + 1);
                I[j + 1][k] += t;
                I[0][k] -= t;
            }
        const int Jout = std::max(J + 4, Jh + 1);
        Grid out = zero(Jout);
        for (int j = 0; j <= J + 4; ++j)
            mul_add(out[j], e[j], g, Real(1));
        for (int j = 0; j <= Jh + 1; ++j)
            mul_add(out[j], I[j], g, Real(-1) / 8);
        while (out.size() > 1) {
            bool z = true;
            for (auto& v : out.back())
                z = z && v == 0;
            if (!z)
                break;
            out.pop_back();
        }
        return out;
    }

    void build()
    {
        using std::cos;
        using std::sin;
        const Real c = cos(theta0_), s = sin(theta0_);
        // nu(u) = c (1 + s^2 u^2)^{-1/2}
        std::vector<Real> nu(K_ + 1);
        Real coef = c, s2p = 1;
        for (int m = 0; m <= K_; ++m) {
            nu[m] = coef * s2p;
            coef *= -(Real(2 * m + 1) / (2 * m + 2));
            s2p *= s * s;
        }
        Grid A = zero(0);
        A[0][0] = 1;
        std::vector<std::vector<Real>> cval(N_ + 1, std::vector<Real>(K_ + 1, Real(0)));
        cval[0][0] = 1;
        for (int n = 1; n <= N_; ++n) {
            A = next(A);
            std::vector<Real> r(K_ + 1, Real(0));
            for (int j = static_cast<int>(A.size()) - 1; j >= 0; --j) {
                std::vector<Real> t(K_ + 1, Real(0));
                mul_add(t, r, nu, Real(1));
                for (int k = 0; k <= K_; ++k)
                    t[k] += A[j][k];
                r = std::move(t);
            }
            cval[n] = std::move(r);
        }
        // log series over u^2-series
        std::vector<std::vector<Real>> l(N_ + 1, std::vector<Real>(K_ + 1, Real(0)));
        for (int n = 1; n <= N_; ++n) {
            l[n] = cval[n];
            for (int k = 1; k < n; ++k)
                mul_add(l[n], l[k], cval[n - k], Real(-k) / n);
        }
        b_.clear();
        for (int n = 1; n <= N_; ++n) {
            l[n][0] += to_real<Real>(bernoulli_tail(n));
            b_.push_back(l[n]);
        }
    }

    int N_, K_;
    Real sigma_, theta0_;
    std::vector<std::vector<Real>> b_;
};

/**
 * @brief Point values a_1..a_N at nu(u), choosing the stable route.
 *
 * u = 0: exact limit polynomials; u below the small-u radius: u^2 series;
 * otherwise the NuSeries recurrence in doubled precision.
 */
template <class Real>
std::vector<Real> cumulant_values(int N, const Real& u, const Real& sigma, const Real& theta0)
{
    std::vector<Real> out(N);
    if (u == 0) {
        auto cs = cumulants_limit_u0(N, sigma, theta0);
        for (int n = 1; n <= N; ++n)
            out[n - 1] = cs.value(n);
        return out;
    }
    if (u < Real(SmallUCumulants<Real>::kRadius)) {
        SmallUCumulants<Real> su(N, sigma, theta0);
        for (int n = 1; n <= N; ++n)
            out[n - 1] = su.value(n, u);
        return out;
    }
    using W = wider_t<Real>;
    const W uw = convert<W>(u), sw = convert<W>(sigma), tw = convert<W>(theta0);
    auto cs = cumulants(N, uw, sw, tw);
    const W nu = geometry_point(uw, tw).nu;
    for (int n = 1; n <= N; ++n)
        out[n - 1] = convert<Real>(cs.a[n - 1](nu));
    return out;
}

/// Truncated uniform approximation of ln P^{-mu}_{-1/2 + sqrt(u^2 mu^2 + sigma^2)}(cos theta0).
template <class Real>
Real log_p_uniform(const Real& mu, const Real& u, const Real& sigma, const Real& theta0, int N,
                   const std::vector<Real>* a_values = nullptr)
{
    using std::pow;
    if (!(mu > 0))
        throw DomainError("log_p_uniform: mu must be positive");
    const auto g = geometry_point(u, theta0);
    std::vector<Real> a = a_values ? *a_values : cumulant_values(N, u, sigma, theta0);
    Real r = uniform_leading(mu, g);
    Real mp = 1;
    for (int n = 1; n <= N; ++n) {
        mp /= mu;
        r += a[n - 1] * mp;
    }
    return r;
}

/// Direct value of the same function through the hypergeometric series.
template <class Real>
Real log_p_direct(const Real& mu, const Real& u, const Real& sigma, const Real& theta0)
{
    return specfun::log_ferrers_p_conical(sigma * sigma - u * u * mu * mu, mu, theta0);
}

template <class Real>
struct LargeRhoTerms {
    Real coeff_log_rho2;
    Real const_term;
};

/// ln rho^2 coefficient and rho^0 constant of ln P as rho = u mu -> infinity.
template <class Real>
LargeRhoTerms<Real> large_rho_log_expansion(const Real& mu, const Real& /*sigma*/,
                                            const Real& theta0)
{
    using std::log;
    using std::sin;
    return {-(1 + 2 * mu) / 4, -log(2 * pi_v<Real>() * sin(theta0)) / 2};
}

/**
 * @brief Fallback: fit a_n(nu(u)) from direct evaluations at mu_j = 32 * 2^j.
 *
 * Accuracy is limited by the truncation of the fit (roughly mu_min^{-N-1}).
 */
template <class Real>
std::vector<Real> extract_cumulants_numeric(int N, const Real& u, const Real& sigma,
                                            const Real& theta0)
{
    using std::abs;
    using std::pow;
    using W = wider_t<Real>;
    const int M = std::max(N, 5);
    const W uw = convert<W>(u), sw = convert<W>(sigma), tw = convert<W>(theta0);
    const auto g = geometry_point(uw, tw);
    std::vector<std::vector<W>> A(M, std::vector<W>(M));
    std::vector<W> rhs(M);
    for (int i = 0; i < M; ++i) {
        const W mu = W(32) * pow(W(2), i);
        rhs[i] = log_p_direct(mu, uw, sw, tw) - uniform_leading(mu, g);
        W p = 1;
        for (int n = 0; n < M; ++n) {
            p /= mu;
            A[i][n] = p;
        }
    }
    const std::vector<W> x = solve_dense(std::move(A), std::move(rhs));
    std::vector<Real> out(N);
    for (int n = 0; n < N; ++n)
        out[n] = convert<Real>(x[n]);
    return out;
}

}  // namespace zetacap::asympt
