"""Complex error function toolkit with a sector verification harness.

Evaluates erf/erfc for arbitrary finite complex arguments, integrates the
Gaussian kernel along a segment-plus-hyperbola contour, and numerically
certifies the inequality Re(erfc(z)) >= 1 on the sector |Arg z| >= 3pi/4
(with equality only at the origin) via point verdicts and region scans.

Interfaces: this package (import ``erfsector``), a command line front end
(``erfsector`` console script, see :mod:`erfsector.cli`) and a FastAPI
service wrapping the same core (:mod:`erfsector.service`).
"""

from .cerf import EvalConfig, EvalResult, Method, conjugate, erf, erfc, reflect
from .contour import (
    Fold,
    GammaPath,
    LegDecomposition,
    easy_part,
    fold_into_T,
    integrate_along_gamma,
    make_gamma,
    phase_max,
    real_part_integral,
)
from .errors import AccuracyError, DomainError
from .quadrature import QuadConfig, QuadResult, integrate
from .region import (
    ANGLE_TOL_ULPS,
    SECTOR_S,
    SECTOR_T,
    SHORTCUT_X,
    VERIFY_TOLERANCE,
    GridMode,
    MethodNote,
    PointVerdict,
    RandomMode,
    SamplePlan,
    ScanReport,
    Sector,
    SectorSpec,
    StrandCheck,
    StrandSample,
    check_strand,
    in_sector,
    iter_verdicts,
    scan,
    strand_bound,
    strand_sweep,
    summarize,
    verify_point,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "DomainError",
    "EvalConfig",
    "EvalResult",
    "Method",
    "erf",
    "erfc",
    "reflect",
    "conjugate",
    "QuadConfig",
    "QuadResult",
    "integrate",
    "GammaPath",
    "Fold",
    "LegDecomposition",
    "make_gamma",
    "fold_into_T",
    "easy_part",
    "real_part_integral",
    "integrate_along_gamma",
    "phase_max",
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
    "StrandCheck",
    "StrandSample",
    "in_sector",
    "strand_bound",
    "check_strand",
    "verify_point",
    "iter_verdicts",
    "summarize",
    "scan",
    "strand_sweep",
    "__version__",
]
