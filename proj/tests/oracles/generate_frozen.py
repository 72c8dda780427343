#!/usr/bin/env python3
"""Independent reference values for the unit tests, computed with mpmath/sympy.

Nothing here calls the C++ library. Each entry records how it was obtained.
Regenerate with

    python3 tests/oracles/generate_frozen.py > tests/data/frozen_values.json
"""
import json

import sympy as sp
from mpmath import (mp, mpf, zeta, log, psi, harmonic, nsum, inf, hyp2f1, legenp, cos, sin, pi,
                    loggamma, sqrt)

mp.dps = 45
out = {}


def put(key, value, how):
    out[key] = {"value": mp.nstr(value, 40, min_fixed=1, max_fixed=0), "source": how}


# ---------------------------------------------------------------------------
# d-sphere base: degeneracy as a polynomial in mu, e(k) as a polynomial in k + (d+1)/2

def beta(d):
    m = sp.symbols("m")
    k = m - sp.Rational(d - 1, 2)
    poly = sp.Poly(sp.expand((2 * k + d - 1) * sp.ff(k + d - 2, d - 2) / sp.factorial(d - 1)), m)
    return {a: poly.coeff_monomial(m**a) for a in range(d)}


def eco(d):
    m = sp.symbols("m")
    k = m - sp.Rational(d + 1, 2)
    poly = sp.Poly(sp.expand((2 * k + d) * sp.ff(k + d - 1, d - 1) / sp.factorial(d)), m)
    return {a: poly.coeff_monomial(m**a) for a in range(d + 1)}


def deg(d, k):
    return int(sp.factorial(k + d - 2) * (2 * k + d - 1) / (sp.factorial(k) * sp.factorial(d - 1)))


for d, s in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3)]:
    val = nsum(lambda k: deg(d, int(k)) * (k + mpf(d - 1) / 2) ** (-2 * s), [0, inf])
    put(f"base_zeta_d{d}_s{s}", val, "nsum of d(k) mu_k^(-2s)")

for d in [2, 3, 4]:
    a = mpf(d + 1) / 2
    put(f"zeta_np1_prime0_d{d}", sum(mpf(e) * zeta(-al, a, 1) for al, e in eco(d).items()),
        "mpmath Hurwitz derivatives of the e(k) re-expansion")
put("zeta_np1_prime0_d2_riemann",
    zeta(-1, 1, 1) / 2 - 3 * zeta(-2, 1, 1) / 4 - log(2) / 12,
    "(1/2) zeta_R'(-1) - (3/4) zeta_R'(-2) - (1/12) ln 2")

for p in [1, 2, 3, 4, 5]:
    put(f"riemann_zeta_prime_neg{p}", zeta(-p, 1, 1), "mpmath zeta(s, 1, derivative=1)")
for al in [0, 3]:
    for d in [2, 5]:
        put(f"hurwitz_prime_neg{al}_d{d}", zeta(-al, mpf(d + 1) / 2, 1), "mpmath Hurwitz derivative")


# ---------------------------------------------------------------------------
# Special functions

def conical(sig, lam, mu, th):
    w = sqrt(mpf(sig) ** 2 + lam + 0j)
    return hyp2f1(mpf(1) / 2 - w, mpf(1) / 2 + w, mu + 1, sin(th / 2) ** 2).real


for tag, (sig, lam, mu, th) in {
    "a": (mpf("1.3"), mpf(0), mpf("0.5"), 2 * pi / 5),
    "b": (mpf("1.3"), mpf(10), mpf("3.5"), 2 * pi / 5),
    "c": (mpf("0.8"), mpf(-50), mpf("7.5"), mpf("2.5")),
    "d": (mpf("2.0"), mpf(3), mpf("1"), mpf("1.0")),
}.items():
    put(f"conical_2f1_{tag}", conical(sig, lam, mu, th), "mpmath hyp2f1")

for tag, (nu, mu, th) in {"a": (mpf("2.3"), mpf("1.5"), mpf("1.1")),
                          "b": (mpf("7.25"), mpf("4"), mpf("0.4"))}.items():
    put(f"log_ferrers_{tag}", log(legenp(nu, -mu, cos(th), type=2)), "mpmath legenp type 2")


# ---------------------------------------------------------------------------
# Hemisphere (theta0 = pi/2): eigenvalues (l + d/2)^2 - sigma^2, l >= 1,
# multiplicity binom(l + d - 1, d).

def hemisphere(D, sig):
    """zeta(0) exactly (sympy) and zeta'(0) numerically, by expanding ln(W^2 - sigma^2)."""
    w = sp.Symbol("w")
    a0s = 1 + sp.Rational(D - 1, 2)
    P = sp.Poly(sp.expand_func(sp.binomial(w - sp.Rational(D - 1, 2) + D - 2, D - 1)), w)
    s2s = sp.nsimplify(sig) ** 2
    z0 = sum(P.coeff_monomial(w**p) * (-sp.bernoulli(p + 1, a0s) / (p + 1)) for p in range(P.degree() + 1))
    z0 += sum(s2s**j * P.coeff_monomial(w ** (2 * j - 1)) / (2 * j) for j in range(1, P.degree() // 2 + 2))
    Pc = [mpf(sp.Rational(P.coeff_monomial(w**p))) for p in range(P.degree() + 1)]
    s2 = mpf(sig) ** 2
    a0 = mpf(a0s)
    J = P.degree() // 2 + 6

    def rem(W):
        return sum(c * W**p for p, c in enumerate(Pc)) * (
            -log(1 - s2 / W**2) - sum(s2**j / (j * W ** (2 * j)) for j in range(1, J + 1)))

    part = nsum(rem, [a0, inf])
    h0 = 2 * sum(c * zeta(-p, a0, 1) for p, c in enumerate(Pc))
    hj = 0
    for j in range(1, J + 1):
        pf = sum(c * zeta(2 * j - p, a0) for p, c in enumerate(Pc) if p != 2 * j - 1)
        r = 0
        if 2 * j - 1 < len(Pc):
            pf -= Pc[2 * j - 1] * psi(0, a0)
            r = Pc[2 * j - 1] / 2
        hj += s2**j / j * (pf + r * harmonic(j - 1))
    z3 = nsum(lambda W: sum(c * W**p for p, c in enumerate(Pc)) * (W * W - s2) ** -3, [a0, inf])
    return sp.Rational(z0), part + h0 + hj, z3


for D, sig in [(3, "1/2"), (3, "13/10"), (4, "13/10"), (5, "7/10")]:
    z0, zp, z3 = hemisphere(D, sp.Rational(sig))
    tag = f"D{D}_sigma{sig.replace('/', '_')}"
    out[f"hemisphere_zeta0_{tag}"] = {"value": str(z0), "source": "exact: Hurwitz values of the hemisphere spectrum"}
    put(f"hemisphere_zeta_prime0_{tag}", zp, "nsum of the ln(1 - sigma^2/W^2) remainder plus Hurwitz pieces")
    put(f"hemisphere_zeta3_{tag}", z3, "nsum over the hemisphere spectrum")


# ---------------------------------------------------------------------------
# PF Lambda(0) by direct summation of the Stirling remainder over base modes.

def pf_lambda0_direct(d, N=14, K=3000):
    B = beta(d)
    a = mpf(d - 1) / 2

    def C(n):
        return zeta(-n) / n

    def PF(n):
        s = sum(mpf(b) * zeta(n - al, a) for al, b in B.items() if al != n - 1)
        return s - mpf(B.get(n - 1, 0)) * psi(0, a)

    def J(m):
        return loggamma(m) - (m - mpf(1) / 2) * log(m) + m - log(2 * pi) / 2

    tot = mpf(0)
    for k in range(K):
        m = k + a
        dm = sum(mpf(b) * m**al for al, b in B.items())
        tot += dm * (J(m) + sum(C(n) / m**n for n in range(1, N + 1)))
    return tot - sum(C(n) * PF(n) for n in range(1, N + 1))


for d in [2, 3]:
    put(f"pf_lambda0_d{d}", pf_lambda0_direct(d), "sum_k d(k) [ln Gamma(mu) - Stirling] with 14 subtracted orders")

print(json.dumps(out, indent=1, sort_keys=True))
