"""Error-free float transforms and minimal double-double arithmetic.

The Maclaurin kernel accumulates its series in double-double (hi, lo)
precision so that the cancellation inherent in summing an alternating
series with terms far larger than the result does not eat into the
absolute accuracy budget. The straight-segment quadrature oracle in the
test suite reuses the same primitives to keep exp(-u^2) arguments exact.

Only the handful of operations needed for those two jobs live here; this
is deliberately not a general double-double library. TwoSum is Knuth's
branch-free form, TwoProd uses Dekker splitting (exact as long as the
product does not overflow, which holds for every magnitude this package
produces).
"""

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    aa = _SPLITTER * a
    a_hi = aa - (aa - a)
    a_lo = a - a_hi
    bb = _SPLITTER * b
    b_hi = bb - (bb - b)
    b_lo = b - b_hi
    err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, err


def dd_add(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return quick_two_sum(s, e)


def dd_neg(x: tuple[float, float]) -> tuple[float, float]:
    return -x[0], -x[1]


def dd_sub(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    return dd_add(x, (-y[0], -y[1]))


def dd_mul(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def dd_div_int(x: tuple[float, float], n: int) -> tuple[float, float]:
    q1 = x[0] / n
    p, e = two_prod(q1, float(n))
    q2 = (((x[0] - p) - e) + x[1]) / n
    return quick_two_sum(q1, q2)


def dd_to_float(x: tuple[float, float]) -> float:
    return x[0] + x[1]
