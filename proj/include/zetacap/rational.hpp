// zetacap/rational.hpp
#pragma once

#include "zetacap/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace zetacap {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

template <class Real>
Real to_real(const Q& q)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<Real>(q.template convert_to<double>());
    } else {
        return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
    }
}

inline std::string q_str(const Q& q)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1)
        os << '/' << boost::multiprecision::denominator(q);
    return os.str();
}

inline Q q_from_string(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Q(Z(s));
    return Q(Z(s.substr(0, slash)), Z(s.substr(slash + 1)));
}

inline Z factorial_z(int n)
{
    Z r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Z binomial_z(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Z r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomial with rational coefficients, c[i] x^i.

struct QPoly {
    std::vector<Q> c;

    QPoly() = default;
    explicit QPoly(std::vector<Q> coeffs) : c(std::move(coeffs)) { trim(); }

    static QPoly constant(const Q& a) { return QPoly({a}); }
    static QPoly x_plus(const Q& a) { return QPoly({a, Q(1)}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    Q coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Q(0); }

    void trim()
    {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b)
    {
        if (a.c.empty() || b.c.empty())
            return {};
        std::vector<Q> r(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r[i + j] += a.c[i] * b.c[j];
        return QPoly(std::move(r));
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b)
    {
        std::vector<Q> r(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return QPoly(std::move(r));
    }

    QPoly scaled(const Q& s) const
    {
        QPoly r = *this;
        for (auto& v : r.c)
            v *= s;
        r.trim();
        return r;
    }

    /// p(x + a) re-expanded in powers of x.
    QPoly shifted(const Q& a) const
    {
        QPoly r;
        QPoly xa = x_plus(a);
        for (int i = degree(); i >= 0; --i)
            r = r * xa + constant(c[i]);
        return r;
    }

    template <class Real>
    Real eval(const Real& x) const
    {
        Real r = 0;
        for (int i = degree(); i >= 0; --i)
            r = r * x + to_real<Real>(c[i]);
        return r;
    }

    Q eval(const Q& x) const
    {
        Q r = 0;
        for (int i = degree(); i >= 0; --i)
            r = r * x + c[i];
        return r;
    }
};

// ---------------------------------------------------------------------------
// Sparse bivariate polynomial in (sigma^2, S), key (i, j) -> sigma^{2i} S^j.
// Used for the exact u -> 0 cumulants.

struct BiPoly {
    std::map<std::pair<int, int>, Q> c;

    static BiPoly constant(const Q& a)
    {
        BiPoly p;
        if (a != 0)
            p.c[{0, 0}] = a;
        return p;
    }
    static BiPoly monomial(int i, int j, const Q& a = 1)
    {
        BiPoly p;
        if (a != 0)
            p.c[{i, j}] = a;
        return p;
    }

    void add_term(int i, int j, const Q& a)
    {
        if (a == 0)
            return;
        auto& v = c[{i, j}];
        v += a;
        if (v == 0)
            c.erase({i, j});
    }

    Q coeff(int i, int j) const
    {
        auto it = c.find({i, j});
        return it == c.end() ? Q(0) : it->second;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b)
    {
        for (auto& [k, v] : b.c)
            a.add_term(k.first, k.second, v);
        return a;
    }
    friend BiPoly operator-(BiPoly a, const BiPoly& b)
    {
        for (auto& [k, v] : b.c)
            a.add_term(k.first, k.second, -v);
        return a;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        BiPoly r;
        for (auto& [ka, va] : a.c)
            for (auto& [kb, vb] : b.c)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    BiPoly scaled(const Q& s) const
    {
        BiPoly r;
        for (auto& [k, v] : c)
            r.add_term(k.first, k.second, v * s);
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c == b.c; }

    template <class Real>
    Real eval(const Real& sigma2, const Real& S) const
    {
        using std::pow;
        Real r = 0;
        for (auto& [k, v] : c)
            r += to_real<Real>(v) * pow(sigma2, k.first) * pow(S, k.second);
        return r;
    }

    Q eval(const Q& sigma2, const Q& S) const
    {
        Q r = 0;
        for (auto& [k, v] : c) {
            Q t = v;
            for (int i = 0; i < k.first; ++i)
                t *= sigma2;
            for (int j = 0; j < k.second; ++j)
                t *= S;
            r += t;
        }
        return r;
    }

    /// Drop the S^0 part (the theta0-independent constants).
    BiPoly theta_dependent() const
    {
        BiPoly r;
        for (auto& [k, v] : c)
            if (k.second > 0)
                r.c[k] = v;
        return r;
    }

    /// Rendered grouped by powers of S, each coefficient a polynomial in sigma^2.
    std::string str() const
    {
        if (c.empty())
            return "0";
        std::map<int, std::map<int, Q>> by_s;
        for (auto& [k, v] : c)
            by_s[k.second][k.first] = v;
        std::ostringstream os;
        bool first_group = true;
        for (auto& [j, inner] : by_s) {
            std::ostringstream g;
            bool first = true;
            for (auto& [i, v] : inner) {
                Q a = v;
                if (!first)
                    g << (a < 0 ? " - " : " + ");
                else if (a < 0)
                    g << "-";
                if (a < 0)
                    a = -a;
                bool unit = (a == 1) && i > 0;
                if (!unit)
                    g << q_str(a);
                if (i > 0)
                    g << (unit ? "" : "*") << "sigma^" << 2 * i;
                first = false;
            }
            std::string body = g.str();
            if (!first_group)
                os << " + ";
            first_group = false;
            if (j == 0) {
                os << body;
            } else {
                os << "(" << body << ")*S";
                if (j > 1)
                    os << "^" << j;
            }
        }
        return os.str();
    }
};

}  // namespace zetacap
