// zetacap/quadrature.hpp
#pragma once

#include "zetacap/core.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <string>
#include <type_traits>

namespace zetacap::quad {

/// Result of one integration: value, error estimate and L1 norm.
template <class Real>
struct Estimate {
    Real value;
    Real error;
    Real l1;
};

/**
 * @brief Finite-interval double-exponential quadrature.
 *
 * Endpoint singularities of log or algebraic type are absorbed by the
 * tanh-sinh change of variables. Throws QuadratureFailure when the error
 * estimate misses `tol` relative to the L1 norm by more than a factor 1e3.
 */
template <class Real, class F>
Estimate<Real> tanh_sinh(F f, const Real& a, const Real& b, const Real& tol, const std::string& what)
{
    using std::abs;
    using std::max;
    static thread_local boost::math::quadrature::tanh_sinh<Real> integrator(15);
    Estimate<Real> e{0, 0, 0};
    try {
        // The two-argument form builds abscissae from the endpoint complement;
        // the one-argument wrapper in Boost 1.74 can round them onto `a`.
        // Integrands taking (x, xc) get the signed distance to the nearer endpoint
        // (a - x on the left half, b - x on the right) for singular factors.
        if constexpr (std::is_invocable_v<F&, const Real&, const Real&>) {
            e.value = integrator.integrate(f, a, b, tol, &e.error, &e.l1);
        } else {
            auto g = [&](const Real& x, const Real&) -> Real {
                if (!(x > a) || !(x < b)) return Real(0);
                return f(x);
            };
            e.value = integrator.integrate(g, a, b, tol, &e.error, &e.l1);
        }
    } catch (const std::exception& ex) {
        throw QuadratureFailure(what + ": " + ex.what());
    }
    if (!(e.error <= Real(1000) * tol * max(e.l1, Real(1))))
        throw QuadratureFailure(what + ": error estimate " + to_string_full(e.error) + " above tolerance");
    return e;
}

/// Half-infinite interval [a, inf) for integrands decaying at infinity.
template <class Real, class F>
Estimate<Real> exp_sinh(F f, const Real& a, const Real& tol, const std::string& what)
{
    using std::max;
    static thread_local boost::math::quadrature::exp_sinh<Real> integrator(12);
    Estimate<Real> e{0, 0, 0};
    try {
        e.value = integrator.integrate([&](const Real& x) { return f(x + a); }, tol, &e.error, &e.l1);
    } catch (const std::exception& ex) {
        throw QuadratureFailure(what + ": " + ex.what());
    }
    if (!(e.error <= Real(1000) * tol * max(e.l1, Real(1))))
        throw QuadratureFailure(what + ": error estimate " + to_string_full(e.error) + " above tolerance");
    return e;
}

template <class Real, class F>
Real integrate(F f, const Real& a, const Real& b, const std::string& what)
{
    return tanh_sinh(f, a, b, quad_tol<Real>(), what).value;
}

}  // namespace zetacap::quad
