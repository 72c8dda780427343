// zetacap/verify.hpp
#pragma once

#include "zetacap/io.hpp"
#include "zetacap/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace zetacap::verify {

/// Outcome of one acceptance criterion.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double measured = 0;   // worst observed deviation in the criterion's own metric
    double tolerance = 0;
    double seconds = 0;
    std::string detail;
    io::json report = io::json::object();
};

struct Options {
    int D = 3;                // cap dimension used by the D-parameterised criteria
    std::vector<int> zeta0_dims = {3, 4, 5};  // dimensions of the zeta(0) route identity
    std::set<int> only;       // empty: all ten
    int jobs = 1;
};

namespace detail {

inline std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

template <class Real>
double dbl(const Real& x)
{
    return static_cast<double>(x);
}

template <class Real>
double rel(const Real& a, const Real& b)
{
    using std::abs;
    using std::max;
    return dbl(abs(a - b) / max(abs(b), Real(1e-300)));
}

inline BiPoly sig2() { return BiPoly::monomial(1, 0); }
inline BiPoly Sp(int j) { return BiPoly::monomial(0, j); }
inline BiPoly cq(long p, long q = 1) { return BiPoly::constant(Q(p, q)); }

/// a_1..a_4 as tabulated, typed in term by term.
inline std::vector<BiPoly> tabulated_a()
{
    const BiPoly s2 = sig2(), s4 = sig2() * sig2();
    const BiPoly one_m = cq(1) - s2.scaled(4);
    const BiPoly p25 = cq(25) - s2.scaled(104) + s4.scaled(16);
    const BiPoly p15 = cq(15) - s2.scaled(64) + s4.scaled(16);
    const BiPoly p13 = cq(13) - s2.scaled(56) + s4.scaled(16);
    BiPoly a1 = cq(-1, 12) + (one_m * Sp(1)).scaled(Q(1, 4));
    BiPoly a2 = (one_m * Sp(1)).scaled(Q(-1, 4)) + (one_m * Sp(2)).scaled(Q(1, 4));
    BiPoly a3 = cq(1, 360) + (one_m * Sp(1)).scaled(Q(1, 4)) - (p25 * Sp(2)).scaled(Q(1, 32)) +
                (p25 * Sp(3)).scaled(Q(1, 48));
    BiPoly a4 = (one_m * Sp(1)).scaled(Q(-1, 4)) + (p15 * Sp(2)).scaled(Q(1, 8)) -
                (p13 * Sp(3)).scaled(Q(1, 4)) + (p13 * Sp(4)).scaled(Q(1, 8));
    return {a1, a2, a3, a4};
}

inline std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(a + (b - a) * i / (n - 1));
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Tabulated small-u cumulants.

template <class Real>
CriterionResult criterion1()
{
    CriterionResult r{1, "u->0 cumulants a1..a4 equal the tabulated polynomials exactly"};
    r.tolerance = 0;
    const auto want = detail::tabulated_a();
    const auto cs = asympt::cumulants_limit_u0(4, Real(1), Real(1));
    int bad = 0;
    std::ostringstream os;
    for (int n = 0; n < 4; ++n) {
        const BiPoly diff = cs.a_limit[n] - want[n];
        if (!diff.c.empty()) {
            ++bad;
            os << "a" << n + 1 << " differs by " << diff.str() << "; ";
        }
    }
    r.measured = bad;
    r.pass = bad == 0;
    r.detail = bad ? os.str() : "4 of 4 identical as polynomials in (sigma^2, S)";
    return r;
}

// ---------------------------------------------------------------------------
// 2. Conformal values.

template <class Real>
CriterionResult criterion2()
{
    CriterionResult r{2, "conformal zeta(0): -1/48, -1/180, 17/11520, theta0-independent"};
    r.tolerance = 1e-12;
    const std::vector<std::pair<int, Q>> expect = {{3, Q(-1, 48)}, {4, Q(-1, 180)}, {5, Q(17, 11520)}};
    const std::vector<Real> thetas = {Real("0.2"), Real(1), pi_v<Real>() / 2, Real("2.5")};
    double worst = 0;
    for (const auto& [D, q] : expect) {
        const auto base = basezeta::make_base_data<Real>(D - 1);
        for (const auto& th : thetas) {
            const Real z = invariants::zeta0_general(base, Real(1) / 2, th);
            using std::abs;
            worst = std::max(worst, detail::dbl(abs(z - to_real<Real>(q))));
        }
    }
    r.measured = worst;
    r.pass = worst <= r.tolerance;
    r.detail = "max |zeta0 - exact| over D=3,4,5 x 4 angles = " + detail::sci(worst);
    return r;
}

// ---------------------------------------------------------------------------
// 3. zeta(0) route identity on a 5x5 grid.

template <class Real>
CriterionResult criterion3(const std::vector<int>& dims = {3, 4, 5})
{
    std::string dl;
    for (int D : dims)
        dl += (dl.empty() ? "" : ",") + std::to_string(D);
    CriterionResult r{3, "zeta0_general vs printed polynomials, 5x5 grid, D=" + dl};
    r.tolerance = 1e-10;
    double worst = 0;
    io::json reps = io::json::array();
    std::ostringstream os;
    for (int D : dims) {
        double wD = 0;
        std::string note;
        for (double s : detail::linspace(0.5, 2.5, 5))
            for (double th : detail::linspace(0.2, 2.9, 5)) {
                const auto c = invariants::compare_zeta0(D, Real(s), Real(th), Real(r.tolerance));
                using std::abs;
                const double e = detail::dbl(abs(c.diff));
                if (e > wD) {
                    wD = e;
                    note = c.note;
                }
                if (!c.agree && reps.size() < 3)
                    reps.push_back(io::to_json(c));
            }
        worst = std::max(worst, wD);
        os << "D=" << D << " max|diff|=" << detail::sci(wD);
        if (wD > r.tolerance) {
            // Referee for the disagreement: the exact hemisphere spectrum.
            const auto base = basezeta::make_base_data<Real>(D - 1);
            const Real sg("1.3"), hp = pi_v<Real>() / 2;
            const auto h = oracle::hemisphere_zeta<Real>(D - 1, sg);
            using std::abs;
            os << " [" << note << "; at theta0=pi/2, sigma=1.3: |general - exact spectrum| = "
               << detail::sci(detail::dbl(abs(invariants::zeta0_general(base, sg, hp) - h.zeta0)))
               << ", |printed - exact spectrum| = "
               << detail::sci(detail::dbl(abs(invariants::zeta0_printed(D, sg, hp) - h.zeta0))) << "]";
        }
        os << "; ";
    }
    r.measured = worst;
    r.pass = worst <= r.tolerance;
    r.detail = os.str();
    r.report = {{"discrepancies", reps}};
    return r;
}

// ---------------------------------------------------------------------------
// 4. Convergence order of the uniform expansion.

template <class Real>
CriterionResult criterion4(int d = 2)
{
    using std::abs;
    using std::pow;
    CriterionResult r{4, "uniform expansion N=4: error ratio per mu doubling in [16, 64]"};
    r.tolerance = 1;  // |log2 ratio - 5| <= 1
    (void)d;  // the expansion of ln P does not see the base dimension
    const Real sig("1.3"), th = 2 * pi_v<Real>() / 5;
    std::vector<Real> us;
    for (int i = 0; i < 50; ++i)
        us.push_back(pow(Real(10), Real(-2) + Real(4) * i / 49));
    std::vector<std::vector<Real>> av;
    for (const auto& u : us)
        av.push_back(asympt::cumulant_values(4, u, sig, th));
    std::vector<double> err;
    for (int mu : {10, 20, 40}) {
        Real m = 0;
        for (std::size_t i = 0; i < us.size(); ++i) {
            const Real e = abs(asympt::log_p_uniform(Real(mu), us[i], sig, th, 4, &av[i]) -
                               asympt::log_p_direct(Real(mu), us[i], sig, th));
            m = std::max(m, e);
        }
        err.push_back(detail::dbl(m));
    }
    const double r1 = err[0] / err[1], r2 = err[1] / err[2];
    auto ok = [](double x) { return x >= 16 && x <= 64; };
    r.pass = ok(r1) && ok(r2);
    r.measured = std::max(std::abs(std::log2(r1) - 5), std::abs(std::log2(r2) - 5));
    std::ostringstream os;
    os << "max err mu=10,20,40: " << detail::sci(err[0]) << ", " << detail::sci(err[1]) << ", "
       << detail::sci(err[2]) << "; ratios " << r1 << ", " << r2;
    r.detail = os.str();
    return r;
}

// ---------------------------------------------------------------------------
// 5. Base zeta against its defining sum, and the zeta_{N+1}(0) sum rule.

template <class Real>
CriterionResult criterion5()
{
    using std::abs;
    using std::pow;
    CriterionResult r{5, "base_zeta vs truncated spectral sums (K=1e5) and zeta_{N+1}(0) sum rule"};
    r.tolerance = 1e-10;
    const long K = 100000;
    double worst = 0;
    std::ostringstream os;
    for (int d : {2, 3, 4})
        for (int s : {2, 3}) {
            if (2 * s <= d) {
                // s = d/2 is the leading pole; the defining sum diverges there.
                // Check instead that the pole is reported and that its residue
                // matches (s - d/2) zeta_N(s) on both sides.
                bool hit = false;
                try {
                    (void)basezeta::base_zeta<Real>(d, Real(s));
                } catch (const PoleHit&) {
                    hit = true;
                }
                const Real h("1e-12");
                const Real left = -h * basezeta::base_zeta<Real>(d, Real(s) - h);
                const Real right = h * basezeta::base_zeta<Real>(d, Real(s) + h);
                const Real res = to_real<Real>(basezeta::base_zeta_residue(d, 2 * s));
                const double e = detail::dbl(abs((left + right) / 2 - res));
                worst = std::max(worst, hit ? e : 1.0);
                os << "d=" << d << " s=" << s << ": pole " << (hit ? "reported" : "NOT reported")
                   << ", residue err " << detail::sci(e) << "; ";
                continue;
            }
            Real partial = 0;
            const QPoly beta = basezeta::degeneracy_in_mu(d);
            for (long k = K; k >= 0; --k) {
                const auto md = basezeta::mu_and_degeneracy(d, k);
                const Real mu = to_real<Real>(md.mu);
                const Real mu2 = mu * mu;
                Real p = 1;
                for (int i = 0; i < s; ++i)
                    p *= mu2;
                partial += to_real<Real>(Q(md.deg)) / p;
            }
            // sum_{k > K} f(mu_k) ~ int_{mu_K + 1/2}^inf f  (midpoint rule; error ~ f''/24)
            const Real a = to_real<Real>(basezeta::mu_and_degeneracy(d, K).mu) + Real(1) / 2;
            Real tail = 0;
            for (int al = 0; al <= beta.degree(); ++al) {
                const int p = al - 2 * s;  // beta_al mu^p, p < -1
                tail += to_real<Real>(beta.coeff(al)) * pow(a, p + 1) / Real(-(p + 1));
            }
            const Real bound = Real(d * d) * pow(a, beta.degree() - 2 * s - 1) / 24;
            const double e = detail::dbl(abs(basezeta::base_zeta<Real>(d, Real(s)) - partial - tail));
            worst = std::max(worst, e);
            os << "d=" << d << " s=" << s << ": |diff| " << detail::sci(e) << " (tail " << detail::sci(detail::dbl(tail))
               << ", midpoint bound " << detail::sci(detail::dbl(bound)) << "); ";
        }
    for (int d = 2; d <= 6; ++d) {
        const Real lhs = basezeta::zeta_N_plus_1<Real>(d, Real(0));
        Real rhs = -basezeta::base_zeta<Real>(d, Real(-1) / 2) - basezeta::base_zeta<Real>(d, Real(0)) / 2;
        for (int n = 1; n <= d; ++n)
            rhs -= 2 * to_real<Real>(specfun::riemann_zeta_neg_int(n)) / n *
                   to_real<Real>(basezeta::base_zeta_residue(d, n));
        const double e = detail::dbl(abs(lhs - rhs));
        worst = std::max(worst, e);
        os << "sum rule d=" << d << " " << detail::sci(e) << (d < 6 ? ", " : "");
    }
    r.measured = worst;
    r.pass = worst <= r.tolerance;
    r.detail = os.str();
    return r;
}

// ---------------------------------------------------------------------------
// 6. Hurwitz derivative reductions.

template <class Real>
CriterionResult criterion6()
{
    using std::abs;
    CriterionResult r{6, "zeta_H'(-alpha, (d+1)/2) closed forms vs finite differences; zeta_R'(-2)"};
    r.tolerance = 1e-8;
    double worst = 0;
    const Real h("1e-5");
    for (int d = 2; d <= 6; ++d)
        for (int al = 0; al <= 5; ++al) {
            const Real a = Real(d + 1) / 2, s = Real(-al);
            auto z = [&](const Real& x) { return specfun::hurwitz_zeta(x, a); };
            const Real fd = (-z(s + 2 * h) + 8 * z(s + h) - 8 * z(s - h) + z(s - 2 * h)) / (12 * h);
            worst = std::max(worst, detail::dbl(abs(specfun::hurwitz_zeta_deriv_at_neg<Real>(al, d) - fd)));
        }
    const Real zr = specfun::riemann_zeta_deriv_at_neg<Real>(2);
    const Real refl = -specfun::riemann_zeta(Real(3)) / (4 * pi_v<Real>() * pi_v<Real>());
    const double er = detail::dbl(abs(zr - refl));
    r.measured = worst;
    r.pass = worst <= r.tolerance && er <= 1e-12;
    r.detail = "max |closed - FD| over alpha=0..5, d=2..6: " + detail::sci(worst) +
               "; |zeta_R'(-2) + zeta(3)/(4 pi^2)| = " + detail::sci(er) + " (tol 1e-12)";
    return r;
}

// ---------------------------------------------------------------------------
// 7. zeta(3) by eigenvalue sum and by contour.

template <class Real>
CriterionResult criterion7(int D = 3)
{
    using std::abs;
    // s = 3 for D <= 4; above that s = 3 is too close to the abscissa D/2 for a direct sum
    const int si = D <= 4 ? 3 : D / 2 + 2;
    CriterionResult r{7, "zeta(" + std::to_string(si) + ") direct eigenvalue sum vs contour representation"};
    r.tolerance = 1e-6;
    const int d = D - 1;
    const double s = si;
    // the cutoff error falls like wmax^{D - 2s}: slower for D = 4 and 5
    const double wmax = D <= 3 ? 200 : 450;
    double worst = 0;
    std::ostringstream os;
    io::json pts = io::json::array();
    const std::vector<std::pair<double, Real>> points = {{1.3, 2 * pi_v<Real>() / 5}, {0.5, pi_v<Real>() / 2}};
    for (const auto& [sg, th] : points) {
        const auto zd = oracle::zeta_direct(CapGeometry<double>{d, detail::dbl(th), sg}, s, wmax);
        const auto zc = oracle::zeta_contour(CapGeometry<Real>{d, th, Real(sg)}, Real(s));
        const double c = detail::dbl(zc.value);
        const double diff = std::abs(zd.value - c) / std::abs(c);
        const double budget = (zd.error + zd.tail * 1e-2 + std::abs(detail::dbl(zc.tail - zc.tail_check))) / std::abs(c);
        worst = std::max({worst, diff, budget});
        os << std::setprecision(15) << "(sigma=" << sg << ", theta0=" << detail::dbl(th) << "): direct "
           << zd.value << ", contour " << c << std::setprecision(6) << ", rel diff " << detail::sci(diff) << ", budget "
           << detail::sci(budget) << "; ";
        pts.push_back({{"sigma", sg}, {"theta0", detail::dbl(th)}, {"direct", zd.value},
                       {"contour", to_string_full(zc.value)}, {"rel_diff", diff}, {"budget", budget}});
    }
    r.measured = worst;
    r.pass = worst <= r.tolerance;
    r.detail = os.str();
    r.report = {{"points", pts}};
    return r;
}

// ---------------------------------------------------------------------------
// 8. Continuation Lemma suite and split independence.

namespace detail {

/// Laurent constant of g at s = 0 after removing pole/s: symmetric average at +-h.
template <class Real, class G>
Real laurent_constant(G g, const Real& pole)
{
    const Real h("1e-12");
    return ((g(h) - pole / h) + (g(-h) + pole / h)) / 2;
}

}  // namespace detail

template <class Real>
CriterionResult criterion8()
{
    using std::abs;
    using std::log;
    using std::sin;
    using std::sqrt;
    using boost::math::tgamma;
    CriterionResult r{8, "continuation Lemma on closed forms; pf integral independent of split point"};
    r.tolerance = 1e-12;
    const Real pi = pi_v<Real>(), eps("0.5");
    double lemma_worst = 0;
    std::ostringstream os;
    {
        // f = ln(1+x):  int_0^inf x^{-s}/(1+x) = pi / sin(pi s)
        continuation::AsymptoticDescriptor<Real> ds;
        ds.log_coeff = 1;
        auto f = [](const Real& x) { return log(1 + x); };
        const auto L = continuation::lemma_continue<Real>(f, ds, eps);
        const Real c = detail::laurent_constant<Real>([&](const Real& s) { return pi / sin(pi * s); }, Real(1)) -
                       log(1 + eps);
        lemma_worst = std::max({lemma_worst, detail::dbl(abs(L.constant - c)), detail::dbl(abs(L.pole_coeff - 1))});
    }
    {
        // f = sqrt(1+x^2): int_0^inf x^{1-s}(1+x^2)^{-1/2} = B(1 - s/2, (s-1)/2)/2
        continuation::AsymptoticDescriptor<Real> ds;
        ds.power_terms.push_back({Real(1), Real(1), Real(0)});
        auto f = [](const Real& x) { return sqrt(1 + x * x); };
        const auto L = continuation::lemma_continue<Real>(f, ds, eps);
        const Real a = Real(1), b = Real(-1) / 2;
        const Real beta = tgamma(a) * tgamma(b) / tgamma(a + b);
        const Real c = beta / 2 - (sqrt(1 + eps * eps) - 1);
        lemma_worst = std::max({lemma_worst, detail::dbl(abs(L.constant - c)), detail::dbl(abs(L.pole_coeff))});
    }
    {
        // f = (1+x) ln(1+x): int_0^inf x^{-s} ln(1+x) = pi / ((1-s) sin(pi s)); the
        // constant piece int_eps^inf x^{-s} continues to -eps.
        continuation::AsymptoticDescriptor<Real> ds;
        ds.power_terms.push_back({Real(1), Real(0), Real(1)});
        ds.log_coeff = 1;
        ds.reg_part = 1;
        ds.x_cal = Real(1e8);
        ds.tolerance = Real(1e-6);
        auto f = [](const Real& x) { return (1 + x) * log(1 + x); };
        const auto L = continuation::lemma_continue<Real>(f, ds, eps);
        const Real c = detail::laurent_constant<Real>([&](const Real& s) { return pi / ((1 - s) * sin(pi * s)); },
                                                      Real(1)) -
                       ((1 + eps) * log(1 + eps) - eps) - eps;
        lemma_worst = std::max({lemma_worst, detail::dbl(abs(L.constant - c)), detail::dbl(abs(L.pole_coeff - 1))});
    }
    bool mismatch_caught = false;
    {
        continuation::AsymptoticDescriptor<Real> ds;  // wrong on purpose: misses the ln x
        try {
            (void)continuation::lemma_continue<Real>([](const Real& x) { return log(1 + x); }, ds, eps);
        } catch (const DescriptorMismatch&) {
            mismatch_caught = true;
        }
    }
    os << "Lemma: 3 closed forms, max err " << detail::sci(lemma_worst) << ", wrong descriptor "
       << (mismatch_caught ? "rejected" : "ACCEPTED") << "; ";

    double split_worst = 0;
    for (const auto& [d, sg, th] : {std::tuple<int, Real, Real>{2, Real("1.3"), 2 * pi / 5},
                                    std::tuple<int, Real, Real>{3, Real("0.8"), Real(1)}}) {
        const auto base = basezeta::make_base_data<Real>(d);
        const Real ref = continuation::pf_integral_phi(base, sg, th, Real(1)).pf_value;
        for (const Real sp : {Real("0.5"), Real(2)})
            split_worst = std::max(split_worst,
                                   detail::dbl(abs(continuation::pf_integral_phi(base, sg, th, sp).pf_value - ref)));
    }
    os << "pf split moves 1 -> 0.5, 2 (d=2,3): max change " << detail::sci(split_worst) << " (tol 1e-10)";
    r.measured = lemma_worst;
    r.pass = lemma_worst <= r.tolerance && mismatch_caught && split_worst <= 1e-10;
    r.detail = os.str();
    return r;
}

// ---------------------------------------------------------------------------
// 9. Pole bookkeeping.

template <class Real>
CriterionResult criterion9()
{
    using std::abs;
    using std::sin;
    CriterionResult r{9, "pf_integral_phi pole coefficient = residue-weighted theta0-dependent cumulants"};
    r.tolerance = 1e-8;
    double worst = 0;
    for (int d : {2, 3}) {
        const auto base = basezeta::make_base_data<Real>(d);
        const BiPoly p = continuation::g_p_zero_poly(base).theta_dependent();
        for (const char* sg : {"0.5", "1.0", "1.5"})
            for (const char* th : {"0.5", "1.2", "1.8"}) {
                const Real s(sg), t(th);
                const Real h = sin(t / 2);
                const Real want = p.eval(s * s, h * h);
                const Real got = continuation::pf_integral_phi(base, s, t).pole_coeff;
                worst = std::max(worst, detail::dbl(abs(got - want) / std::max(Real(1), abs(want))));
            }
    }
    r.measured = worst;
    r.pass = worst <= r.tolerance;
    r.detail = "max rel deviation over d=2,3 x 3x3 grid: " + detail::sci(worst);
    return r;
}

// ---------------------------------------------------------------------------
// 10. zeta'(0) cross-method.

template <class Real>
CriterionResult criterion10(int D = 3)
{
    using std::abs;
    CriterionResult r{10, "zeta'(0): master formula vs mode-by-mode subtraction; printed formula report"};
    r.tolerance = 1e-6;
    const int d = D - 1;
    const auto base = basezeta::make_base_data<Real>(d);
    double worst = 0;
    std::ostringstream os;
    io::json pts = io::json::array(), reps = io::json::array();
    const std::vector<std::pair<Real, Real>> points = {
        {Real("1.3"), 2 * pi_v<Real>() / 5}, {Real("0.5"), Real(1)}, {Real(1), Real(2)}};
    for (const auto& [sg, th] : points) {
        std::optional<invariants::Discrepancy<Real>> cmp;
        if (D >= 3 && D <= 5)
            cmp = invariants::compare_zeta_prime0(D, sg, th, Real(r.tolerance));
        const Real g = cmp ? cmp->general : invariants::zeta_prime0_general(base, sg, th).value;
        const auto sub = oracle::zeta_prime0_subtraction(CapGeometry<Real>{d, th, sg});
        const double e = detail::rel(g, sub.value);
        worst = std::max(worst, e);
        os << std::setprecision(6) << "(" << detail::dbl(sg) << ", " << detail::dbl(th) << "): general "
           << std::setprecision(16) << detail::dbl(g) << " subtraction " << detail::dbl(sub.value)
           << " rel " << detail::sci(e) << "; ";
        pts.push_back({{"sigma", io::real_json(sg)}, {"theta0", io::real_json(th)}, {"general", io::real_json(g)},
                       {"subtraction", io::real_json(sub.value)}, {"subtraction_error", io::real_json(sub.error)},
                       {"rel_diff", e}});
        if (cmp)
            reps.push_back(io::to_json(*cmp));
    }
    int agree = 0;
    for (const auto& x : reps)
        agree += x["agree"].get<bool>();
    os << "printed formula: " << agree << "/" << reps.size() << " agree";
    if (!reps.empty() && agree < static_cast<int>(reps.size()))
        os << ", discrepancy report: " << reps[0]["note"].get<std::string>();
    r.measured = worst;
    r.pass = worst <= r.tolerance;
    r.detail = os.str();
    r.report = {{"points", pts}, {"printed_comparison", reps}};
    return r;
}

// ---------------------------------------------------------------------------

template <class Real>
CriterionResult run_one(int id, const Options& opt)
{
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
        case 1: r = criterion1<Real>(); break;
        case 2: r = criterion2<Real>(); break;
        case 3: r = criterion3<Real>(opt.zeta0_dims); break;
        case 4: r = criterion4<Real>(opt.D - 1); break;
        case 5: r = criterion5<Real>(); break;
        case 6: r = criterion6<Real>(); break;
        case 7: r = criterion7<Real>(opt.D); break;
        case 8: r = criterion8<Real>(); break;
        case 9: r = criterion9<Real>(); break;
        case 10: r = criterion10<Real>(opt.D); break;
        default: throw DomainError("no criterion " + std::to_string(id));
        }
    } catch (const Error& e) {
        r.id = id;
        r.pass = false;
        r.detail = std::string("raised ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Runs the selected criteria, at most opt.jobs at a time; results in id order.
template <class Real>
std::vector<CriterionResult> run(const Options& opt, const std::function<void(const CriterionResult&)>& on_done = {})
{
    basezeta::check_dimension(opt.D - 1);
    std::vector<int> ids;
    for (int i = 1; i <= 10; ++i)
        if (opt.only.empty() || opt.only.count(i))
            ids.push_back(i);
    std::vector<CriterionResult> out(ids.size());
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
    for (std::size_t start = 0; start < ids.size(); start += jobs) {
        std::vector<std::future<CriterionResult>> fs;
        for (std::size_t i = start; i < std::min(ids.size(), start + jobs); ++i)
            fs.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                    [&, id = ids[i]] { return run_one<Real>(id, opt); }));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            out[start + i] = fs[i].get();
            if (on_done)
                on_done(out[start + i]);
        }
    }
    return out;
}

inline io::json to_json(const CriterionResult& r)
{
    return {{"id", r.id},           {"title", r.title},     {"pass", r.pass},
            {"measured", r.measured}, {"tolerance", r.tolerance}, {"seconds", r.seconds},
            {"detail", r.detail},   {"report", r.report}};
}

inline std::string line(const CriterionResult& r)
{
    std::ostringstream os;
    os << "criterion " << (r.id < 10 ? " " : "") << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title
       << "  [" << std::fixed;
    os.precision(1);
    os << r.seconds << " s]\n    " << r.detail;
    return os.str();
}

}  // namespace zetacap::verify
