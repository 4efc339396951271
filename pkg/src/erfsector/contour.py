"""Two-leg contour for erf over the sector 0 <= Arg z <= pi/4.

For a target x + iy with 0 <= y <= x, put a = sqrt(x^2 - y^2) and connect
the origin to the target by the real segment [0, a] followed by the branch
of the hyperbola t^2 - s^2 = a^2 parametrized as t + i*sqrt(t^2 - a^2) for
t in [a, x]. Along that path

    (2/sqrt(pi)) * int_0^a exp(-u^2) du = erf(a)          (first leg)

and the second leg contributes, after substituting s = sqrt(t^2 - a^2),

    (2 exp(-a^2)/sqrt(pi)) * int_0^sqrt(x^2-a^2)
        [ cos(2 s T) * s/T + sin(2 s T) ] ds,    T = sqrt(s^2 + a^2)

as its real part, with the imaginary part sharing the same substitution.
The substitution removes the integrable 1/sqrt endpoint singularity of the
raw t-variable integrand exactly, so the quadrature only ever sees a
smooth function.

The oscillation phase 2 t sqrt(t^2 - a^2) is increasing in t; its maximum
over the leg is the closed form 2 x sqrt(x^2 - a^2), which stays below
pi/2 whenever x <= sqrt(2/pi). On that range both cosine and sine are
non-negative, which is what makes the second leg's real part non-negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cerf import EvalConfig, erf
from .errors import AccuracyError, DomainError
from .quadrature import QuadConfig, integrate

__all__ = [
    "GammaPath",
    "Fold",
    "LegDecomposition",
    "make_gamma",
    "fold_into_T",
    "easy_part",
    "real_part_integral",
    "integrate_along_gamma",
    "phase_max",
]

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


@dataclass(frozen=True)
class GammaPath:
    """Segment-plus-hyperbola contour from 0 to x + iy (0 <= y <= x).

    ``a`` is the junction abscissa sqrt(x^2 - y^2) where the path leaves
    the real axis; x == y collapses the first leg (a == 0) and the path
    degenerates to the straight segment onto the diagonal.
    """

    x: float
    y: float
    a: float


@dataclass(frozen=True)
class Fold:
    """Result of folding a point into the closed upper half of the sector.

    ``point`` has a non-negative imaginary part; ``conjugated`` records
    whether the fold actually conjugated, so callers can reconstruct
    signed quantities. Real parts are never touched.
    """

    point: complex
    conjugated: bool


@dataclass(frozen=True)
class LegDecomposition:
    """Leg-by-leg value of (2/sqrt(pi)) * int_path exp(-u^2) du.

    ``total.real == easy_part + real_part_leg2`` holds by construction.
    """

    easy_part: float
    real_part_leg2: float
    imag_part_leg2: float
    total: complex


def make_gamma(x: float, y: float) -> GammaPath:
    """Build the contour for the target x + iy.

    Requires x >= 0 and 0 <= y <= x; anything else raises
    :class:`DomainError` rather than being clamped, so sector bugs in
    callers surface immediately.
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError("path target must be finite")
    if x < 0.0 or y < 0.0 or y > x:
        raise DomainError(f"point not in folded sector T: x={x!r}, y={y!r}")
    # (x-y)(x+y) keeps the junction accurate when x and y nearly coincide
    a = math.sqrt((x - y) * (x + y))
    return GammaPath(x, y, a)


def fold_into_T(z: complex) -> Fold:
    """Fold a point of the sector |Arg z| <= pi/4 onto its upper half.

    Returns the folded point (x, |y|) and whether conjugation was applied.
    Points outside the closed sector raise :class:`DomainError`; the
    origin folds to itself.
    """
    zz = complex(z)
    if not (math.isfinite(zz.real) and math.isfinite(zz.imag)):
        raise DomainError("point must be finite")
    x, y = zz.real, zz.imag
    if zz != 0 and (x < 0.0 or abs(y) > x):
        raise DomainError(f"point not in folded sector T: {z!r}")
    conjugated = y < 0.0
    return Fold(complex(x, abs(y)), conjugated)


def easy_part(a: float, cfg: EvalConfig | None = None) -> float:
    """First-leg value (2/sqrt(pi)) * int_0^a exp(-u^2) du, i.e. erf(a)."""
    if not math.isfinite(a) or a < 0.0:
        raise DomainError(f"junction abscissa must be finite and >= 0, got {a!r}")
    return erf(a, cfg).value.real


def _leg2_real_integrand(a: float):
    if a == 0.0:
        # T == s on the degenerate diagonal, so s/T == 1 identically
        return lambda s: math.cos(2.0 * s * s) + math.sin(2.0 * s * s)

    def g(s: float) -> float:
        t = math.hypot(s, a)
        ph = 2.0 * s * t
        return math.cos(ph) * (s / t) + math.sin(ph)

    return g


def _leg2_complex_integrand(a: float):
    if a == 0.0:
        def g0(s: float) -> complex:
            ph = 2.0 * s * s
            return complex(math.cos(ph) + math.sin(ph), math.cos(ph) - math.sin(ph))

        return g0

    def g(s: float) -> complex:
        t = math.hypot(s, a)
        ph = 2.0 * s * t
        ratio = s / t
        c, sn = math.cos(ph), math.sin(ph)
        return complex(c * ratio + sn, c - sn * ratio)

    return g


def real_part_integral(a: float, x: float, qcfg: QuadConfig | None = None) -> float:
    """Real part of the second-leg integral, computed in the s variable.

    Equals (2 exp(-a^2)/sqrt(pi)) * int_a^x [cos(2 t sqrt(t^2-a^2)) +
    sin(2 t sqrt(t^2-a^2)) * t/sqrt(t^2-a^2)] dt with the singularity
    removed by s = sqrt(t^2 - a^2). Non-negative (up to quadrature noise)
    whenever x <= sqrt(2/pi).
    """
    if not (math.isfinite(a) and math.isfinite(x)) or a < 0.0 or a > x:
        raise DomainError(f"need 0 <= a <= x, got a={a!r}, x={x!r}")
    upper = math.sqrt((x - a) * (x + a))
    if upper == 0.0:
        return 0.0
    res = integrate(_leg2_real_integrand(a), 0.0, upper, qcfg)
    if not res.converged:
        raise AccuracyError(
            f"second-leg quadrature did not converge on [0, {upper!r}] (a={a!r})",
            value=res.value,
            err_estimate=res.err_estimate,
        )
    pref = _TWO_OVER_SQRT_PI * math.exp(-(a * a))
    return pref * res.value


def integrate_along_gamma(path: GammaPath, qcfg: QuadConfig | None = None) -> LegDecomposition:
    """Contour value of erf at the path target, leg by leg.

    The real and imaginary parts of the second leg share one quadrature
    pass (same abscissae, same subdivisions). The total agrees with the
    direct erf evaluation at x + iy within the combined error budgets;
    that cross-check is the module's central test surface.
    """
    easy = easy_part(path.a)
    upper = math.sqrt((path.x - path.a) * (path.x + path.a))
    if upper == 0.0:
        leg2 = complex(0.0, 0.0)
    else:
        res = integrate(_leg2_complex_integrand(path.a), 0.0, upper, qcfg)
        if not res.converged:
            raise AccuracyError(
                f"second-leg quadrature did not converge for path {path!r}",
                value=res.value,
                err_estimate=res.err_estimate,
            )
        pref = _TWO_OVER_SQRT_PI * math.exp(-(path.a * path.a))
        leg2 = pref * complex(res.value)
    return LegDecomposition(
        easy_part=easy,
        real_part_leg2=leg2.real,
        imag_part_leg2=leg2.imag,
        total=complex(easy + leg2.real, leg2.imag),
    )


def phase_max(a: float, x: float) -> float:
    """Maximum of the oscillation phase 2 t sqrt(t^2 - a^2) over t in [a, x].

    The phase increases with t, so the maximum is the closed form
    2 x sqrt(x^2 - a^2); no search is performed.
    """
    if not (math.isfinite(a) and math.isfinite(x)) or a < 0.0 or a > x:
        raise DomainError(f"need 0 <= a <= x, got a={a!r}, x={x!r}")
    return 2.0 * x * math.sqrt((x - a) * (x + a))
