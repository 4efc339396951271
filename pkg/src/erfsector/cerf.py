"""Complex error function and complementary error function.

Evaluates erf(z) = (2/sqrt(pi)) * integral of exp(-u^2) from 0 to z and
erfc(z) = 1 - erf(z) for arbitrary finite complex arguments, with an
absolute error estimate attached to every result.

Two independent kernels cover the plane, both restricted to the closed
first quadrant and extended everywhere else through exact symmetries:

* a Maclaurin series, accumulated in double-double precision so that the
  large alternating terms at moderate radius cannot erode the absolute
  accuracy target;
* a continued fraction (modified Lentz) for the scaled function
  exp(z^2)*erfc(z), multiplied by exp(-z^2) with the exponent split into
  magnitude and phase to dodge overflow and cancellation.

Symmetry routing is a hard contract, not an approximation: erf(-z) is the
exact bitwise negation of erf(z), and erfc(conj(z)) is the exact bitwise
conjugate of erfc(z), because every evaluation funnels through one kernel
call at a folded argument.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import _dd
from .errors import AccuracyError, DomainError

__all__ = [
    "Method",
    "EvalConfig",
    "EvalResult",
    "erf",
    "erfc",
    "reflect",
    "conjugate",
]

_EPS = math.ulp(1.0)
_SQRT_PI = math.sqrt(math.pi)
# 2/sqrt(pi) as a double-double constant
_TWO_OVER_SQRT_PI = (1.1283791670955126, 1.533545961316588e-17)

# exp(y^2 - x^2) overflows IEEE doubles past this point
_LOG_OVERFLOW_LIMIT = 700.0

# Below this real part the continued fraction stalls near the imaginary
# axis at moderate radius (tens of thousands of Lentz iterations), while
# the double-double series stays accurate and cheap out to radius ~7 with
# the default term budget. Measured, not theoretical.
_CF_MIN_REAL = 1.0
_SERIES_WEDGE_LIMIT = 7.0

_CF_MAX_ITER = 30000
_CF_TINY = 1e-300
_CF_TOL = 1e-15

# Relative floor for the deliverability gate: past |value| ~ 1e1 the
# absolute target cannot beat representation error, so the commitment
# becomes relative at this level.
_REL_FLOOR = 1e-13


class Method(str, enum.Enum):
    """Which evaluation path produced a result."""

    SERIES = "series"
    CONTINUED_FRACTION = "continued_fraction"
    REFLECTION = "reflection"
    CONJUGATION = "conjugation"
    CONTOUR = "contour"


@dataclass(frozen=True)
class EvalConfig:
    """Accuracy knobs for erf/erfc evaluation."""

    target_abs_tol: float = 1e-14
    max_series_terms: int = 200
    series_cf_switch_radius: float = 4.0

    def __post_init__(self):
        if not math.isfinite(self.target_abs_tol) or self.target_abs_tol <= 0.0:
            raise DomainError("target_abs_tol must be finite and positive")
        if self.target_abs_tol < 1e-16:
            raise DomainError("target_abs_tol below 1e-16 is not deliverable in double precision")
        if self.max_series_terms < 1:
            raise DomainError("max_series_terms must be >= 1")
        if not math.isfinite(self.series_cf_switch_radius) or self.series_cf_switch_radius <= 0.0:
            raise DomainError("series_cf_switch_radius must be finite and positive")


@dataclass(frozen=True)
class EvalResult:
    """A computed function value with its committed error bound.

    ``abs_err_estimate`` is a heuristic upper bound on the absolute error,
    validated empirically against an independent quadrature oracle by the
    test suite. ``method`` records the evaluation path actually taken;
    a symmetry fold outranks the kernel tag.
    """

    value: complex
    abs_err_estimate: float
    method: Method


_DEFAULT_CFG = EvalConfig()


def reflect(z: complex) -> complex:
    """Odd-symmetry map z -> -z.

    The library guarantees erf(reflect(z)) == -erf(z) bit for bit, because
    both evaluations route through one kernel call at the same folded
    argument.
    """
    return -complex(z)


def conjugate(z: complex) -> complex:
    """Conjugation map z -> conj(z).

    The library guarantees erfc(conjugate(z)) == conj(erfc(z)) bit for
    bit, by the same single-kernel routing.
    """
    return complex(z).conjugate()


def _require_finite(z: complex) -> complex:
    zz = complex(z)
    if not (math.isfinite(zz.real) and math.isfinite(zz.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return zz


def _check_overflow(x: float, y: float) -> float:
    """Return y^2 - x^2, refusing arguments whose exp() overflows."""
    m_arg = (y - x) * (y + x)
    if m_arg > _LOG_OVERFLOW_LIMIT:
        raise AccuracyError(
            f"exp(Im(z)^2 - Re(z)^2) = exp({m_arg!r}) exceeds the double range",
        )
    return m_arg


def _remap_best_value(exc: AccuracyError, transform) -> AccuracyError:
    """Rebuild an accuracy error so the carried best value matches the
    operation the caller actually invoked (sign flips, conjugation,
    complement). A missing value stays missing."""
    value = exc.value if exc.value is None else transform(exc.value)
    return AccuracyError(str(exc), value=value, err_estimate=exc.err_estimate)


def _erf_series(z: complex, cfg: EvalConfig) -> tuple[complex, float]:
    """Maclaurin series 2/sqrt(pi) * sum (-1)^n z^(2n+1) / (n! (2n+1)).

    Terms and the running sum are carried in double-double precision.
    Stops once two consecutive contributions fall below a quarter of the
    target tolerance; the estimate is four times the last contribution,
    floored at representation scale for large values.
    """
    x, y = z.real, z.imag
    tol_quarter = 0.25 * cfg.target_abs_tol

    # w = -z^2, exactly, as a complex double-double
    x2 = _dd.two_prod(x, x)
    y2 = _dd.two_prod(y, y)
    w_re = _dd.dd_sub(y2, x2)
    pxy = _dd.two_prod(x, y)
    w_im = (-2.0 * pxy[0], -2.0 * pxy[1])

    t_re, t_im = (x, 0.0), (y, 0.0)  # term = z
    s_re, s_im = t_re, t_im          # sum, n = 0 contribution
    last_mag = math.hypot(x, y)
    streak = 0
    for n in range(1, cfg.max_series_terms + 1):
        a_re, a_im = t_re, t_im
        t_re = _dd.dd_sub(_dd.dd_mul(a_re, w_re), _dd.dd_mul(a_im, w_im))
        t_im = _dd.dd_add(_dd.dd_mul(a_re, w_im), _dd.dd_mul(a_im, w_re))
        t_re = _dd.dd_div_int(t_re, n)
        t_im = _dd.dd_div_int(t_im, n)
        c_re = _dd.dd_div_int(t_re, 2 * n + 1)
        c_im = _dd.dd_div_int(t_im, 2 * n + 1)
        s_re = _dd.dd_add(s_re, c_re)
        s_im = _dd.dd_add(s_im, c_im)
        last_mag = math.hypot(c_re[0], c_im[0])
        if last_mag <= tol_quarter:
            streak += 1
            if streak >= 2:
                break
        else:
            streak = 0
    v_re = _dd.dd_mul(s_re, _TWO_OVER_SQRT_PI)
    v_im = _dd.dd_mul(s_im, _TWO_OVER_SQRT_PI)
    value = complex(_dd.dd_to_float(v_re), _dd.dd_to_float(v_im))
    est = max(4.0 * last_mag, 4.0 * _EPS * abs(value))
    if streak < 2:
        raise AccuracyError(
            f"series did not meet tol={cfg.target_abs_tol!r} within "
            f"{cfg.max_series_terms} terms at z={z!r}",
            value=value,
            err_estimate=est,
        )
    return value, est


def _erfcx_lentz(z: complex, max_iter: int = _CF_MAX_ITER) -> tuple[complex, int]:
    """exp(z^2)*erfc(z) via the continued fraction

        sqrt(pi) * exp(z^2) * erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))

    evaluated by the modified Lentz forward scheme (tiny-denominator guard
    1e-300). Valid for Re z > 0; convergence degrades toward the imaginary
    axis, which the dispatcher avoids.
    """
    f = z if z != 0 else complex(_CF_TINY, 0.0)
    c = f
    d = 0.0 + 0.0j
    for j in range(1, max_iter + 1):
        a = 0.5 * j
        d = z + a * d
        if d == 0:
            d = complex(_CF_TINY, 0.0)
        c = z + a / c
        if c == 0:
            c = complex(_CF_TINY, 0.0)
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < _CF_TOL:
            return 1.0 / (_SQRT_PI * f), j
    raise AccuracyError(
        f"continued fraction did not converge within {max_iter} iterations at z={z!r}",
        value=1.0 / (_SQRT_PI * f),
        err_estimate=float("inf"),
    )


def _erfc_cf(z: complex, cfg: EvalConfig) -> tuple[complex, float]:
    """erfc via the scaled continued fraction, for the folded quadrant.

    erfc(z) = exp(-z^2) * erfcx(z); the exponential is assembled from
    magnitude exp(y^2-x^2) and phase exp(-2ixy) separately so that large
    imaginary parts cannot overflow intermediates.
    """
    x, y = z.real, z.imag
    m_arg = _check_overflow(x, y)
    erfcx, iters = _erfcx_lentz(z)
    mag = math.exp(m_arg)
    ph = 2.0 * x * y
    efac = complex(mag * math.cos(ph), -mag * math.sin(ph))
    value = erfcx * efac
    # Lentz termination + exp magnitude + phase argument reduction, each at
    # relative eps scale proportional to the quantity it perturbs
    rel = (
        (8.0 + math.sqrt(iters)) * _EPS
        + 2.0 * (1.0 + abs(m_arg) + abs(ph)) * _EPS
        + 2.0 * _CF_TOL
    )
    # deep in the underflow tail the value is subnormal and quantization
    # dominates; keep the estimate above a few subnormal ulps
    est = max(abs(value) * rel, 1e-322)
    return value, est


def _erfc_kernel(z: complex, cfg: EvalConfig) -> tuple[complex, float, Method]:
    """erfc on the folded quadrant Re z >= 0, Im z >= 0."""
    x, y = z.real, z.imag
    _check_overflow(x, y)
    if x < _CF_MIN_REAL:
        if abs(z) <= max(cfg.series_cf_switch_radius, _SERIES_WEDGE_LIMIT):
            try:
                ev, e_est = _erf_series(z, cfg)
            except AccuracyError as exc:
                raise _remap_best_value(
                    exc, lambda v: complex(1.0 - v.real, -v.imag)
                ) from None
            value = complex(1.0 - ev.real, -ev.imag)
            return value, e_est + _EPS * max(1.0, abs(value)), Method.SERIES
        if x <= 0.0:
            # Lentz needs Re z > 0; the series budget is exhausted out here
            raise AccuracyError(
                f"z={z!r} is too close to the imaginary axis for the continued "
                f"fraction and beyond the series term budget",
            )
    value, est = _erfc_cf(z, cfg)
    return value, est, Method.CONTINUED_FRACTION


def _erf_kernel(z: complex, cfg: EvalConfig) -> tuple[complex, float, Method]:
    """erf on the folded quadrant Re z >= 0, Im z >= 0."""
    if abs(z) <= cfg.series_cf_switch_radius:
        value, est = _erf_series(z, cfg)
        return value, est, Method.SERIES
    try:
        cv, c_est, meth = _erfc_kernel(z, cfg)
    except AccuracyError as exc:
        raise _remap_best_value(
            exc, lambda v: complex(1.0 - v.real, -v.imag)
        ) from None
    value = complex(1.0 - cv.real, -cv.imag)
    return value, c_est + _EPS * max(1.0, abs(value)), meth


def _gate(value: complex, est: float, cfg: EvalConfig, what: str) -> None:
    # the absolute target switches to a relative commitment once the value
    # itself dwarfs the representable resolution
    allowance = max(cfg.target_abs_tol, _REL_FLOOR * abs(value))
    allowance += 16.0 * _EPS * max(1.0, abs(value))
    if est > allowance:
        raise AccuracyError(
            f"{what}: achieved estimate {est!r} misses tolerance {cfg.target_abs_tol!r}",
            value=value,
            err_estimate=est,
        )


def erf(z: complex, cfg: EvalConfig | None = None) -> EvalResult:
    """Error function of a finite complex argument.

    Dispatch: Maclaurin series for |z| <= cfg.series_cf_switch_radius
    (and throughout the near-imaginary-axis wedge where the continued
    fraction stalls), otherwise 1 - erfc(z) through the continued
    fraction, after folding the argument into the first quadrant by the
    exact symmetries erf(-z) = -erf(z) and erf(conj z) = conj(erf z).

    Raises :class:`DomainError` for non-finite input and
    :class:`AccuracyError` (carrying the best value and achieved
    estimate) when the target tolerance is unreachable.
    """
    if cfg is None:
        cfg = _DEFAULT_CFG
    zz = _require_finite(z)
    neg = zz.real < 0.0
    if neg:
        zz = -zz
    conj = zz.imag < 0.0
    if conj:
        zz = zz.conjugate()

    def unfold(v: complex) -> complex:
        if conj:
            v = v.conjugate()
        return -v if neg else v

    try:
        value, est, meth = _erf_kernel(zz, cfg)
    except AccuracyError as exc:
        raise _remap_best_value(exc, unfold) from None
    value = unfold(value)
    _gate(value, est, cfg, "erf")
    tag = Method.REFLECTION if neg else (Method.CONJUGATION if conj else meth)
    return EvalResult(value, est, tag)


def erfc(z: complex, cfg: EvalConfig | None = None) -> EvalResult:
    """Complementary error function erfc(z) = 1 - erf(z).

    For Re z >= 1 the scaled continued fraction is used directly, which
    keeps erfc relatively accurate where 1 - erf(z) would cancel. The
    argument is folded into the upper half plane first, so
    erfc(conj z) == conj(erfc(z)) holds bit for bit.
    """
    if cfg is None:
        cfg = _DEFAULT_CFG
    zz = _require_finite(z)
    conj = zz.imag < 0.0
    if conj:
        zz = zz.conjugate()
    try:
        if zz.real >= 0.0:
            value, est, meth = _erfc_kernel(zz, cfg)
        else:
            # erfc(z) = 1 + erf(-z), with -zz folded onto the first quadrant
            try:
                kv, k_est, meth = _erf_kernel(complex(-zz.real, zz.imag), cfg)
            except AccuracyError as exc:
                raise _remap_best_value(
                    exc, lambda v: complex(1.0 + v.real, -v.imag)
                ) from None
            value = complex(1.0 + kv.real, -kv.imag)
            est = k_est + _EPS * max(1.0, abs(value))
            meth = Method.REFLECTION
    except AccuracyError as exc:
        if conj:
            raise _remap_best_value(exc, lambda v: v.conjugate()) from None
        raise
    if conj:
        value = value.conjugate()
        meth = Method.CONJUGATION  # outermost transform wins the tag
    _gate(value, est, cfg, "erfc")
    return EvalResult(value, est, meth)
