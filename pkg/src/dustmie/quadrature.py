"""Adaptive Simpson quadrature with interval bisection."""
from __future__ import annotations

from typing import Callable

from .errors import QuadratureError

_DEFAULT_RTOL = 1e-6
_MAX_DEPTH = 40


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6 * (fa + 4 * fm + fb)


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     rel_tol: float = _DEFAULT_RTOL,
                     max_depth: int = _MAX_DEPTH) -> float:
    """Integrate f over [a, b] to the given relative tolerance.

    Smooth integrands only; raises QuadratureError if the bisection depth
    limit is reached before the local error estimate falls under tolerance.
    """
    if b == a:
        return 0.0
    if b < a:
        return -adaptive_simpson(f, b, a, rel_tol, max_depth)

    fa, fm, fb = f(a), f((a + b) / 2), f(b)
    whole = _simpson(fa, fm, fb, b - a)
    return _refine(f, a, b, fa, fm, fb, whole, rel_tol, max_depth)


def _refine(f, a, b, fa, fm, fb, whole, rel_tol, depth):
    m = (a + b) / 2
    flm = f((a + m) / 2)
    frm = f((m + b) / 2)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    err = left + right - whole
    # 1e-300 floor keeps identically-zero integrands from recursing forever
    if abs(err) <= 15 * rel_tol * max(abs(left + right), 1e-300):
        return left + right + err / 15
    if depth <= 0:
        raise QuadratureError(
            f"adaptive Simpson did not converge on [{a}, {b}]"
        )
    return (_refine(f, a, m, fa, flm, fm, left, rel_tol, depth - 1)
            + _refine(f, m, b, fm, frm, fb, right, rel_tol, depth - 1))
