"""Independent reference computations for the test suite.

``erf_oracle`` evaluates (2/sqrt(pi)) * int_0^z exp(-u^2) du by adaptive
Gauss-Kronrod quadrature along the straight segment from 0 to z. It never
touches the series or continued-fraction kernels it is used to check; the
only shared machinery is the generic interval integrator. The integrand
carries its argument -(t z)^2 as an exact double-double product and folds
the low part into the exponential and the phase, which keeps the oracle's
relative error at a few ulps even where |erf| reaches 1e3 (necessary for
the 1e-12 absolute comparisons on the |z| <= 3 disk).

``simpson_leg2`` is a brute-force composite-Simpson evaluation of the
substituted second-leg integrand used to pin expected values for the
contour module, deliberately independent of the adaptive integrator.
"""

from __future__ import annotations

import math

from erfsector._dd import dd_mul, dd_sub, two_prod
from erfsector.quadrature import QuadConfig, integrate

_TWO_OVER_SQRT_PI_HI = 1.1283791670955126
_TWO_OVER_SQRT_PI_LO = 1.533545961316588e-17

_ORACLE_QCFG = QuadConfig(abs_tol=1e-15, rel_tol=1e-14, max_subdivisions=4000)


def erf_oracle(z: complex, qcfg: QuadConfig = _ORACLE_QCFG) -> complex:
    """Straight-segment quadrature value of erf(z)."""
    zz = complex(z)
    if zz == 0:
        return complex(0.0, 0.0)
    x, y = zz.real, zz.imag
    # z^2 as an exact complex double-double
    re_dd = dd_sub(two_prod(x, x), two_prod(y, y))
    p = two_prod(x, y)
    im_dd = (2.0 * p[0], 2.0 * p[1])

    def f(t: float) -> complex:
        t2 = two_prod(t, t)
        ar = dd_mul(t2, re_dd)  # Re(t^2 z^2)
        ai = dd_mul(t2, im_dd)  # Im(t^2 z^2)
        # exp(-(ar + i ai)) with first-order corrections for the low parts
        m = math.exp(-ar[0]) * (1.0 - ar[1])
        c, s = math.cos(ai[0]), math.sin(ai[0])
        return complex(m * (c - s * ai[1]), -m * (s + c * ai[1]))

    res = integrate(f, 0.0, 1.0, qcfg)
    if not res.converged:
        raise RuntimeError(f"oracle quadrature failed to converge at z={z!r}")
    w = complex(res.value) * zz
    return w * _TWO_OVER_SQRT_PI_HI + w * _TWO_OVER_SQRT_PI_LO


def erfc_oracle_real(x: float, upper: float = 42.0) -> float:
    """Quadrature value of erfc(x) for real x, truncating at ``upper``.

    The dropped tail is below exp(-upper^2)/upper, far under double
    resolution for the default cutoff.
    """

    def f(t: float) -> float:
        t2 = two_prod(t, t)
        return math.exp(-t2[0]) * (1.0 - t2[1])

    res = integrate(f, float(x), upper, _ORACLE_QCFG)
    if not res.converged:
        raise RuntimeError(f"oracle quadrature failed to converge at x={x!r}")
    return res.value * _TWO_OVER_SQRT_PI_HI + res.value * _TWO_OVER_SQRT_PI_LO


def simpson_leg2(a: float, x: float, panels: int = 200000) -> float:
    """Composite-Simpson value of the substituted second-leg real part.

    Evaluates (2 exp(-a^2)/sqrt(pi)) * int_0^L [cos(2sT) s/T + sin(2sT)] ds
    with T = sqrt(s^2 + a^2), L = sqrt(x^2 - a^2), on a uniform grid with
    ``panels`` panels (panels must be even).
    """
    if panels % 2:
        raise ValueError("panels must be even")
    L = math.sqrt((x - a) * (x + a))
    if L == 0.0:
        return 0.0
    h = L / panels

    def g(s: float) -> float:
        t = math.hypot(s, a)
        ph = 2.0 * s * t
        ratio = 1.0 if a == 0.0 else s / t
        return math.cos(ph) * ratio + math.sin(ph)

    odd = math.fsum(g((2 * i + 1) * h) for i in range(panels // 2))
    even = math.fsum(g((2 * i) * h) for i in range(1, panels // 2))
    simpson = (h / 3.0) * (g(0.0) + g(L) + 4.0 * odd + 2.0 * even)
    return (2.0 * math.exp(-(a * a)) / math.sqrt(math.pi)) * simpson
