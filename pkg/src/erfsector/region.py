"""Numerical certification of Re(erfc(z)) >= 1 on the sector |Arg z| >= 3pi/4.

The sector S = {z : |Arg z| >= 3pi/4} and its reflection T = -S =
{z : |Arg z| <= pi/4} are membership-tested with the principal argument on
(-pi, pi]. For a point z in S the verdict records Re(erfc(z)) and the
margin Re(erfc(z)) - 1, plus which of two regimes certified the reflected
point w = -z in T:

* ``strand_shortcut`` when Re w > sqrt(2/pi): the pointwise bound
  |erfc(x+iy)| < exp(y^2-x^2) * sqrt(1+y^2/x^2) / (x sqrt(pi)) is then
  itself below 1, forcing |1 - erf(w)| < 1;
* ``contour_decomposition`` when Re w <= sqrt(2/pi): Re(erf(w)) splits
  into erf(a) plus a non-negative oscillatory integral along the
  hyperbola leg, both parts carried on the verdict;
* ``direct`` for the few cases neither regime covers exactly (the
  negative real axis beyond the threshold, where the bound above is not
  stated at y = 0, and boundary-ray points admitted by the angle
  tolerance whose reflection misses T by a few ulps).

Scans evaluate a deterministic sample stream (grid or seeded
Mersenne-Twister uniforms) intersected with the sector and report the
minimum margin, its argmin, and any margins below -tolerance.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field

from .cerf import EvalConfig, erfc
from .contour import easy_part, make_gamma, real_part_integral
from .errors import DomainError
from .quadrature import QuadConfig

__all__ = [
    "Sector",
    "SectorSpec",
    "SECTOR_S",
    "SECTOR_T",
    "ANGLE_TOL_ULPS",
    "SHORTCUT_X",
    "VERIFY_TOLERANCE",
    "MethodNote",
    "PointVerdict",
    "GridMode",
    "RandomMode",
    "SamplePlan",
    "ScanReport",
    "in_sector",
    "strand_bound",
    "StrandCheck",
    "check_strand",
    "verify_point",
    "iter_verdicts",
    "summarize",
    "scan",
    "StrandSample",
    "strand_sweep",
]

_SQRT_PI = math.sqrt(math.pi)

# Abscissa sqrt(2/pi) separating the two certification regimes on T.
SHORTCUT_X = math.sqrt(2.0 / math.pi)

# Angle comparisons at the sector boundary allow this many ulps so that
# exact boundary rays survive floating-point Arg. Surfaced in reports.
ANGLE_TOL_ULPS = 4

# Default pass threshold for margins; roughly 100x the evaluation error
# budget, separating genuine counterexamples from roundoff.
VERIFY_TOLERANCE = 1e-12


class Sector(str, enum.Enum):
    S = "S"
    T = "T"


_BOUNDARY = {
    Sector.S: 0.75 * math.pi,
    Sector.T: 0.25 * math.pi,
}


@dataclass(frozen=True)
class SectorSpec:
    """One of the two sectors, with its boundary angle fixed by kind."""

    kind: Sector
    boundary_angle: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "boundary_angle", _BOUNDARY[Sector(self.kind)])


SECTOR_S = SectorSpec(Sector.S)
SECTOR_T = SectorSpec(Sector.T)


class MethodNote(str, enum.Enum):
    STRAND_SHORTCUT = "strand_shortcut"
    CONTOUR_DECOMPOSITION = "contour_decomposition"
    DIRECT = "direct"


@dataclass(frozen=True)
class PointVerdict:
    """Margin of the sector inequality at one point of S.

    ``margin == re_erfc - 1`` exactly. The bound fields are populated on
    the shortcut route, the decomposition fields on the contour route.
    """

    z: complex
    re_erfc: float
    margin: float
    strand_bound_value: float | None
    strand_ok: bool | None
    method_note: MethodNote
    easy_part: float | None = None
    real_part_leg2: float | None = None


@dataclass(frozen=True)
class GridMode:
    nx: int
    ny: int


@dataclass(frozen=True)
class RandomMode:
    count: int
    seed: int


@dataclass(frozen=True)
class SamplePlan:
    """Axis-aligned box plus sampling mode plus sector filter."""

    box: tuple[float, float, float, float]  # xmin, xmax, ymin, ymax
    mode: GridMode | RandomMode
    sector: SectorSpec = SECTOR_S

    def __post_init__(self):
        xmin, xmax, ymin, ymax = self.box
        if not all(math.isfinite(v) for v in self.box):
            raise DomainError("plan box must be finite")
        if not (xmin < xmax and ymin < ymax):
            raise DomainError(f"plan box is degenerate: {self.box!r}")
        if isinstance(self.mode, GridMode):
            if self.mode.nx < 2 or self.mode.ny < 2:
                raise DomainError("grid counts must be >= 2")
        elif isinstance(self.mode, RandomMode):
            if self.mode.count < 1:
                raise DomainError("random count must be >= 1")
        else:
            raise DomainError(f"unknown sampling mode: {self.mode!r}")


@dataclass(frozen=True)
class ScanReport:
    """Aggregate verdict over the sampled region.

    ``min_margin`` is +inf and ``argmin`` is None when no sample landed in
    the sector; ``violations`` collects every verdict whose margin fell
    below -tolerance, in sample order. ``violations`` is empty exactly
    when ``min_margin >= -tolerance``.
    """

    points_tested: int
    min_margin: float
    argmin: complex | None
    violations: tuple[PointVerdict, ...]
    tolerance: float

    @property
    def empty_intersection(self) -> bool:
        return self.points_tested == 0


def in_sector(z: complex, spec: SectorSpec) -> bool:
    """Membership in S or T, boundary rays included.

    Uses the principal argument on (-pi, pi]. The origin belongs to both
    sectors (the argument is undefined there, and the equality case of the
    inequality needs 0 in S). Boundary comparisons carry a tolerance of
    ``ANGLE_TOL_ULPS`` ulps so exact-ray grid points are not lost to
    rounding in atan2.
    """
    zz = complex(z)
    if not (math.isfinite(zz.real) and math.isfinite(zz.imag)):
        raise DomainError(f"non-finite point {z!r}")
    if zz == 0:
        return True
    ang = abs(math.atan2(zz.imag, zz.real))
    boundary = _BOUNDARY[spec.kind]
    tol = ANGLE_TOL_ULPS * math.ulp(boundary)
    if spec.kind is Sector.S:
        return ang >= boundary - tol
    return ang <= boundary + tol


def strand_bound(x: float, y: float) -> float:
    """Pointwise bound exp(y^2-x^2) * sqrt(1 + y^2/x^2) / (x sqrt(pi)).

    Dominates |erfc(x+iy)| strictly for x > 0 and y != 0, and is symmetric
    under y -> -y. Stated only off the real axis, so y == 0 is rejected
    instead of extrapolated.
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError("bound arguments must be finite")
    if x <= 0.0:
        raise DomainError(f"bound requires x > 0, got x={x!r}")
    if y == 0.0:
        raise DomainError("bound stated for y != 0")
    m_arg = (y - x) * (y + x)
    try:
        mag = math.exp(m_arg)
    except OverflowError:
        return math.inf
    return mag * math.sqrt(1.0 + (y * y) / (x * x)) / (x * _SQRT_PI)


@dataclass(frozen=True)
class StrandCheck:
    bound: float
    modulus: float
    ok: bool


def check_strand(z: complex, cfg: EvalConfig | None = None) -> StrandCheck:
    """Compare |erfc(z)| against its pointwise bound at z = x + iy.

    Requires x > 0 and y != 0. When additionally z lies in T with
    x > sqrt(2/pi), the bound itself is below 1 (y^2 <= x^2 kills the
    exponential and sqrt(1+y^2/x^2) <= sqrt(2), leaving at most
    sqrt(2)/(x sqrt(pi)) < 1), which is the shortcut the verifier uses.
    """
    zz = complex(z)
    bound = strand_bound(zz.real, zz.imag)
    if zz.real > SHORTCUT_X and in_sector(zz, SECTOR_T):
        # y^2 <= x^2 plus x past the threshold force this analytically; a
        # failure here would mean the bound evaluation itself is broken
        assert bound < 1.0, f"shortcut bound >= 1 at {zz!r}"
    modulus = abs(erfc(zz, cfg).value)
    return StrandCheck(bound=bound, modulus=modulus, ok=modulus < bound)


def verify_point(
    z: complex,
    cfg: EvalConfig | None = None,
    qcfg: QuadConfig | None = None,
) -> PointVerdict:
    """Verdict for one point of S.

    Computes Re(erfc(z)) and the margin, then records which certification
    regime applies to the reflected point w = -z in T: the bound shortcut
    for Re w > sqrt(2/pi) (bound value and comparison carried on the
    verdict), the contour decomposition for Re w <= sqrt(2/pi) (both parts
    carried, each expected >= -tolerance), or the direct evaluation for
    the y = 0 tail and ulp-grade boundary spill. Points outside S raise
    :class:`DomainError`.
    """
    zz = complex(z)
    if not in_sector(zz, SECTOR_S):
        raise DomainError(f"point {z!r} is not in sector S")
    re_erfc = erfc(zz, cfg).value.real
    margin = re_erfc - 1.0

    if zz == 0:
        return PointVerdict(
            z=zz,
            re_erfc=re_erfc,
            margin=margin,
            strand_bound_value=None,
            strand_ok=None,
            method_note=MethodNote.CONTOUR_DECOMPOSITION,
            easy_part=0.0,
            real_part_leg2=0.0,
        )

    xw = -zz.real  # Re(-z) > 0 everywhere on S except the origin
    yw = abs(zz.imag)
    if xw > SHORTCUT_X:
        if yw == 0.0:
            return PointVerdict(zz, re_erfc, margin, None, None, MethodNote.DIRECT)
        bound = strand_bound(xw, yw)
        modulus = abs(erfc(complex(xw, yw), cfg).value)
        return PointVerdict(
            z=zz,
            re_erfc=re_erfc,
            margin=margin,
            strand_bound_value=bound,
            strand_ok=modulus < bound,
            method_note=MethodNote.STRAND_SHORTCUT,
        )
    if yw <= xw:
        path = make_gamma(xw, yw)
        easy = easy_part(path.a, cfg)
        leg2 = real_part_integral(path.a, path.x, qcfg)
        return PointVerdict(
            z=zz,
            re_erfc=re_erfc,
            margin=margin,
            strand_bound_value=None,
            strand_ok=None,
            method_note=MethodNote.CONTOUR_DECOMPOSITION,
            easy_part=easy,
            real_part_leg2=leg2,
        )
    # admitted into S by the angle tolerance but the reflection misses the
    # folded sector by a few ulps; certify by the direct evaluation alone
    return PointVerdict(zz, re_erfc, margin, None, None, MethodNote.DIRECT)


def _samples(plan: SamplePlan):
    xmin, xmax, ymin, ymax = plan.box
    if isinstance(plan.mode, GridMode):
        nx, ny = plan.mode.nx, plan.mode.ny
        dx = (xmax - xmin) / (nx - 1)
        dy = (ymax - ymin) / (ny - 1)
        for iy in range(ny):
            y = ymin + iy * dy
            for ix in range(nx):
                yield complex(xmin + ix * dx, y)
    else:
        rng = random.Random(plan.mode.seed)
        for _ in range(plan.mode.count):
            x = rng.uniform(xmin, xmax)
            y = rng.uniform(ymin, ymax)
            yield complex(x, y)


def iter_verdicts(
    plan: SamplePlan,
    cfg: EvalConfig | None = None,
    qcfg: QuadConfig | None = None,
):
    """Yield the verdict for every in-sector sample, in sample order.

    Sample order is fixed (grid rows by increasing y, x fastest; or the
    seeded uniform stream), so consumers see a reproducible stream. For
    sector T the equivalent reflected inequality is verified: each sample
    w in T is checked as -w in S and the verdict carries z = -w.
    """
    for w in _samples(plan):
        if not in_sector(w, plan.sector):
            continue
        z = -w if plan.sector.kind is Sector.T else w
        if z is not w and not in_sector(z, SECTOR_S):
            # T admitted the sample inside its ulp window but the
            # reflection fell just outside S's; skip rather than crash
            continue
        yield verify_point(z, cfg, qcfg)


def summarize(verdicts, tolerance: float = VERIFY_TOLERANCE) -> ScanReport:
    """Reduce a verdict stream to a report; ties keep the earliest sample."""
    if not (math.isfinite(tolerance) and tolerance >= 0.0):
        raise DomainError(f"tolerance must be finite and >= 0, got {tolerance!r}")
    points_tested = 0
    min_margin = math.inf
    argmin: complex | None = None
    violations: list[PointVerdict] = []
    for verdict in verdicts:
        points_tested += 1
        if verdict.margin < min_margin:
            min_margin = verdict.margin
            argmin = verdict.z
        if verdict.margin < -tolerance:
            violations.append(verdict)
    return ScanReport(
        points_tested=points_tested,
        min_margin=min_margin,
        argmin=argmin,
        violations=tuple(violations),
        tolerance=tolerance,
    )


def scan(
    plan: SamplePlan,
    cfg: EvalConfig | None = None,
    qcfg: QuadConfig | None = None,
    tolerance: float = VERIFY_TOLERANCE,
) -> ScanReport:
    """Verify every sample of the plan's box that lands in its sector."""
    return summarize(iter_verdicts(plan, cfg, qcfg), tolerance)


@dataclass(frozen=True)
class StrandSample:
    """One grid point of a bound-validity sweep; slack = bound - modulus."""

    x: float
    y: float
    modulus: float
    bound: float
    slack: float


def strand_sweep(
    box: tuple[float, float, float, float],
    nx: int,
    ny: int,
    cfg: EvalConfig | None = None,
):
    """Yield bound-vs-modulus samples over a grid, skipping the y = 0 row.

    Requires xmin > 0 (the bound is only stated there). Grid order matches
    :func:`iter_verdicts`: rows by increasing y, x fastest.
    """
    xmin, xmax, ymin, ymax = box
    if not all(math.isfinite(v) for v in box):
        raise DomainError("sweep box must be finite")
    if not (xmin < xmax and ymin < ymax):
        raise DomainError(f"sweep box is degenerate: {box!r}")
    if xmin <= 0.0:
        raise DomainError("sweep requires xmin > 0")
    if nx < 2 or ny < 2:
        raise DomainError("grid counts must be >= 2")
    dx = (xmax - xmin) / (nx - 1)
    dy = (ymax - ymin) / (ny - 1)
    for iy in range(ny):
        y = ymin + iy * dy
        if y == 0.0:
            continue
        for ix in range(nx):
            x = xmin + ix * dx
            chk = check_strand(complex(x, y), cfg)
            yield StrandSample(x, y, chk.modulus, chk.bound, chk.bound - chk.modulus)
