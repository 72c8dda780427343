// zetacap/core.hpp
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>
#include <ios>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace zetacap {

using real50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                             boost::multiprecision::et_off>;
using real100 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                              boost::multiprecision::et_off>;

// ---------------------------------------------------------------------------
// Errors. Every failure carries a short machine name so the CLI can map it to
// an exit code and name the failing term.

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ZETACAP_ERROR(Name)                                                    \
    struct Name : Error {                                                      \
        explicit Name(const std::string& w) : Error(#Name, w) {}               \
    }

ZETACAP_ERROR(DomainError);
ZETACAP_ERROR(PoleAtOne);
ZETACAP_ERROR(PoleHit);
ZETACAP_ERROR(Divergence);
ZETACAP_ERROR(NonPositiveValue);
ZETACAP_ERROR(Overflow);
ZETACAP_ERROR(BasisOverflow);
ZETACAP_ERROR(DescriptorMismatch);
ZETACAP_ERROR(SingularDeterminant);
ZETACAP_ERROR(QuadratureFailure);
ZETACAP_ERROR(DifferentiationUnstable);
ZETACAP_ERROR(BracketFailure);
ZETACAP_ERROR(TailBoundTooLarge);
ZETACAP_ERROR(UnsupportedDimension);
ZETACAP_ERROR(InvariantViolation);

#undef ZETACAP_ERROR

/// Working precision context. Tolerances elsewhere are derived from it.
struct Precision {
    int working_digits = 50;
    double target_rel_tol = 1e-40;

    void validate() const
    {
        if (working_digits < 30)
            throw DomainError("working_digits must be >= 30");
        if (target_rel_tol < std::pow(10.0, 8 - working_digits))
            throw DomainError("target_rel_tol below 10^(8 - working_digits)");
    }
};

template <class Real>
inline constexpr int digits10_v = std::numeric_limits<Real>::digits10;

template <class Real>
Real pi_v()
{
    return boost::math::constants::pi<Real>();
}

template <class Real>
Real euler_gamma_v()
{
    return boost::math::constants::euler<Real>();
}

template <class Real>
Real ln2_v()
{
    return boost::math::constants::ln_two<Real>();
}

/// Relative tolerance used internally for series truncation.
template <class Real>
Real series_eps()
{
    return std::numeric_limits<Real>::epsilon() / 16;
}

/// Tolerance for quadratures: a few digits short of full precision.
template <class Real>
Real quad_tol()
{
    using std::pow;
    return pow(Real(10), -(digits10_v<Real> - 8));
}

template <class Real>
Real from_string(const std::string& s)
{
    return Real(s);
}

/// Lossless decimal string at the full precision of Real.
template <class Real>
std::string to_string_full(const Real& x)
{
    if constexpr (std::is_floating_point_v<Real>) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
        return buf;
    } else {
        return x.str(digits10_v<Real> + 2, std::ios_base::scientific);
    }
}

/// Dense linear solve by Gaussian elimination with partial pivoting.
template <class Real>
std::vector<Real> solve_dense(std::vector<std::vector<Real>> A, std::vector<Real> rhs)
{
    using std::abs;
    const int M = static_cast<int>(rhs.size());
    for (int c = 0; c < M; ++c) {
        int piv = c;
        for (int r = c + 1; r < M; ++r)
            if (abs(A[r][c]) > abs(A[piv][c]))
                piv = r;
        std::swap(A[c], A[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (int r = c + 1; r < M; ++r) {
            const Real f = A[r][c] / A[c][c];
            for (int k = c; k < M; ++k)
                A[r][k] -= f * A[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    std::vector<Real> x(M);
    for (int r = M - 1; r >= 0; --r) {
        Real t = rhs[r];
        for (int k = r + 1; k < M; ++k)
            t -= A[r][k] * x[k];
        x[r] = t / A[r][r];
    }
    return x;
}

/// Problem instance. sigma^2 = mass^2 + d^2/4 when built from a mass.
template <class Real>
struct CapGeometry {
    int d = 2;
    Real theta0;
    Real sigma;

    static CapGeometry from_sigma(int d, Real theta0, Real sigma)
    {
        CapGeometry g{d, theta0, sigma};
        g.validate();
        return g;
    }

    static CapGeometry from_mass(int d, Real theta0, Real mass)
    {
        using std::sqrt;
        if (mass < 0)
            throw DomainError("mass must be >= 0");
        return from_sigma(d, theta0, sqrt(mass * mass + Real(d * d) / 4));
    }

    int D() const { return d + 1; }
    Real S() const
    {
        using std::sin;
        Real h = sin(theta0 / 2);
        return h * h;
    }

    void validate() const
    {
        if (d < 2 || d > 8)
            throw UnsupportedDimension("base dimension d=" + std::to_string(d) +
                                       " outside [2, 8]");
        if (!(theta0 > 0) || !(theta0 < pi_v<Real>() - Real(1) / 1000))
            throw DomainError("theta0 must lie in (0, pi - 1e-3)");
        if (!(sigma > 0))
            throw DomainError("sigma must be positive");
    }
};

}  // namespace zetacap
