// zetacap/jet.hpp
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zetacap {

/**
 * @brief Truncated Taylor series a_0 + a_1 e + ... + a_n e^n.
 *
 * Arithmetic is exact up to the truncation order, so derivatives of
 * composite expressions come out without finite differencing.
 */
template <class Real>
class Jet {
public:
    Jet() = default;
    Jet(std::size_t order, const Real& value) : a_(order + 1, Real(0)) { a_[0] = value; }

    static Jet variable(std::size_t order, const Real& at)
    {
        Jet j(order, at);
        if (order >= 1)
            j.a_[1] = 1;
        return j;
    }

    std::size_t order() const { return a_.size() - 1; }
    const Real& operator[](std::size_t k) const { return a_[k]; }
    Real& operator[](std::size_t k) { return a_[k]; }
    const std::vector<Real>& coeffs() const { return a_; }

    Jet& operator+=(const Jet& o)
    {
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o)
    {
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    Jet& operator+=(const Real& s)
    {
        a_[0] += s;
        return *this;
    }
    Jet& operator*=(const Real& s)
    {
        for (auto& v : a_)
            v *= s;
        return *this;
    }

    friend Jet operator+(Jet x, const Jet& y) { return x += y; }
    friend Jet operator-(Jet x, const Jet& y) { return x -= y; }
    friend Jet operator+(Jet x, const Real& s) { return x += s; }
    friend Jet operator*(Jet x, const Real& s) { return x *= s; }
    friend Jet operator*(const Real& s, Jet x) { return x *= s; }

    friend Jet operator*(const Jet& x, const Jet& y)
    {
        const std::size_t n = x.a_.size();
        Jet r(n - 1, Real(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (x.a_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j < n; ++j)
                r.a_[i + j] += x.a_[i] * y.a_[j];
        }
        return r;
    }

    friend Jet operator/(const Jet& x, const Jet& y)
    {
        const std::size_t n = x.a_.size();
        Jet r(n - 1, Real(0));
        for (std::size_t k = 0; k < n; ++k) {
            Real acc = x.a_[k];
            for (std::size_t j = 1; j <= k; ++j)
                acc -= y.a_[j] * r.a_[k - j];
            r.a_[k] = acc / y.a_[0];
        }
        return r;
    }

    friend Jet log(const Jet& x)
    {
        using std::log;
        if (!(x.a_[0] > 0))
            throw std::domain_error("Jet log of non-positive constant term");
        const std::size_t n = x.a_.size();
        Jet r(n - 1, log(x.a_[0]));
        for (std::size_t k = 1; k < n; ++k) {
            Real acc = x.a_[k] * Real(k);
            for (std::size_t j = 1; j < k; ++j)
                acc -= Real(j) * r.a_[j] * x.a_[k - j];
            r.a_[k] = acc / (Real(k) * x.a_[0]);
        }
        return r;
    }

    friend Jet exp(const Jet& x)
    {
        using std::exp;
        const std::size_t n = x.a_.size();
        Jet r(n - 1, exp(x.a_[0]));
        for (std::size_t k = 1; k < n; ++k) {
            Real acc = 0;
            for (std::size_t j = 1; j <= k; ++j)
                acc += Real(j) * x.a_[j] * r.a_[k - j];
            r.a_[k] = acc / Real(k);
        }
        return r;
    }

private:
    std::vector<Real> a_;
};

/// Minimal complex number over a multiprecision Real.
template <class Real>
struct Cx {
    Real re = 0, im = 0;

    Cx() = default;
    Cx(const Real& r, const Real& i = Real(0)) : re(r), im(i) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(const Cx& a, const Cx& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator/(const Cx& a, const Cx& b)
    {
        Real den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    Cx& operator+=(const Cx& b) { return *this = *this + b; }
    Cx& operator*=(const Cx& b) { return *this = *this * b; }

    Real abs() const
    {
        using std::sqrt;
        return sqrt(re * re + im * im);
    }
    friend Cx log(const Cx& z)
    {
        using std::atan2;
        using std::log;
        return {log(z.abs()), atan2(z.im, z.re)};
    }
};

}  // namespace zetacap
