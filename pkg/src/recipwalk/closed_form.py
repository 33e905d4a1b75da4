"""Exact MFPT to the hub trap as a function of (g, theta), with no matrices.

Every closed form here is paired with the recursion it solves; with
``SELF_CHECK`` on (the default unless Python runs with ``-O``) each call
iterates the recursion too and raises if the two disagree.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

SELF_CHECK = __debug__
RECURSION_RTOL = 1e-12


class ClosedFormMismatch(AssertionError):
    """A closed form disagreed with the recursion it was derived from."""


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta) or theta <= 0:
        raise ValueError(f"theta must be a positive real, got {theta!r}")
    return theta


def _check_g(g: int, minimum: int) -> int:
    if isinstance(g, bool) or int(g) != g or g < minimum:
        raise ValueError(f"g must be an integer >= {minimum}, got {g!r}")
    return int(g)


def _agree(closed: float, iterated: float, what: str) -> None:
    if abs(closed - iterated) > RECURSION_RTOL * abs(closed):
        raise ClosedFormMismatch(f"{what}: closed form {closed!r} vs recursion {iterated!r}")


def first_step_system(theta: float) -> tuple[float, float, float]:
    """Solve the linear system for (A, B, C).

    ``A`` is the FPT from a node to any of its old neighbours one generation
    later; ``B`` and ``C`` are the same from a new internal / external
    neighbour.
    """
    theta = _check_theta(theta)
    p = theta / (theta + 1.0)
    q = 1.0 / (theta + 1.0)
    # A - p C - q B = 1,  B - A/2 = 1,  C - A = 1
    lhs = np.array([[1.0, -q, -p], [-0.5, 1.0, 0.0], [-1.0, 0.0, 1.0]])
    rhs = np.array([1.0, 1.0, 1.0])
    a, b, c = np.linalg.solve(lhs, rhs)
    return float(a), float(b), float(c)


def growth_factor(theta: float) -> float:
    """Per-generation multiplier of every first-passage time, ``4(theta + 1)``."""
    theta = _check_theta(theta)
    a = 4.0 * (theta + 1.0)
    solved, _, _ = first_step_system(theta)
    if abs(solved - a) > 1e-12 * a:
        raise ClosedFormMismatch(f"first-step system gave A={solved!r}, expected {a!r}")
    return a


def t_ext_recursion(g: int, theta: float) -> float:
    """Iterate ``X(n+1) = 16(theta+1) X(n) - (4 theta + 2) 4**n`` from n = 2."""
    theta = _check_theta(theta)
    g = _check_g(g, 2)
    x = 48.0 * theta**2 + 80.0 * theta + 40.0
    for n in range(2, g):
        x = 16.0 * (theta + 1.0) * x - (4.0 * theta + 2.0) * 4.0**n
    return x


def t_ext_closed(g: int, theta: float) -> float:
    """Sum of trapping times over the external nodes born at generation ``g``."""
    theta = _check_theta(theta)
    g = _check_g(g, 2)
    lead = (12.0 * theta**2 + 17.0 * theta + 7.0) / ((theta + 1.0) * (4.0 * theta + 3.0))
    value = lead * 2.0 ** (4 * g - 4) * (theta + 1.0) ** g + (2.0 * theta + 1.0) / (
        4.0 * theta + 3.0
    ) * 2.0 ** (2 * g - 1)
    if SELF_CHECK:
        _agree(value, t_ext_recursion(g, theta), "external-node sum")
    return value


def t_new_closed(g: int, theta: float) -> float:
    """Sum over all nodes born at generation ``g >= 2`` (internal + external)."""
    theta = _check_theta(theta)
    g = _check_g(g, 2)
    lead = (36.0 * theta**2 + 51.0 * theta + 21.0) / ((theta + 1.0) * (4.0 * theta + 3.0))
    return lead * 2.0 ** (4 * g - 5) * (theta + 1.0) ** g + (6.0 * theta + 3.0) / (
        4.0 * theta + 3.0
    ) * 2.0 ** (2 * g - 2)


def t_tot_recursion(g: int, theta: float) -> float:
    """Iterate ``T(n) = 4(theta+1) T(n-1) + new(n)`` from ``T(1) = 8 theta + 6``."""
    theta = _check_theta(theta)
    g = _check_g(g, 1)
    total = 8.0 * theta + 6.0
    for n in range(2, g + 1):
        total = 4.0 * (theta + 1.0) * total + t_new_closed(n, theta)
    return total


def t_tot_closed(g: int, theta: float) -> float:
    """Sum of trapping times over every non-trap node of generation ``g``."""
    theta = _check_theta(theta)
    g = _check_g(g, 1)
    den = theta * (theta + 1.0) * (4.0 * theta + 3.0)
    c1 = ((12.0 * theta + 17.0) * theta + 7.0) * theta / den
    c2 = (((16.0 * theta + 28.0) * theta + 20.0) * theta + 6.0) / den
    c3 = 3.0 * (theta + 1.0) * (2.0 * theta + 1.0) / den
    growth = (theta + 1.0) ** g
    value = c1 * 2.0 ** (4 * g - 3) * growth + c2 * 2.0 ** (2 * g - 3) * growth - c3 * 2.0 ** (2 * g - 2)
    if SELF_CHECK:
        _agree(value, t_tot_recursion(g, theta), "total trapping time")
    return value


def mfpt_coefficients(theta: float) -> tuple[float, float, float]:
    """``(c1, c2, c3)`` in ``<T> = c1 4**g (theta+1)**g + c2 (theta+1)**g - c3``."""
    theta = _check_theta(theta)
    den = theta * (theta + 1.0) * (4.0 * theta + 3.0)
    c1 = ((12.0 * theta + 17.0) * theta + 7.0) * theta / (8.0 * den)
    c2 = (((16.0 * theta + 28.0) * theta + 20.0) * theta + 6.0) / (8.0 * den)
    c3 = 3.0 * (theta + 1.0) * (2.0 * theta + 1.0) / (4.0 * den)
    return c1, c2, c3


def mfpt_three_term(g: int, theta: float) -> float:
    theta = _check_theta(theta)
    g = _check_g(g, 1)
    c1, c2, c3 = mfpt_coefficients(theta)
    growth = (theta + 1.0) ** g
    return c1 * 4.0**g * growth + c2 * growth - c3


def mfpt_closed(g: int, theta: float) -> float:
    """Mean first-passage time to the hub over all non-trap start nodes.

    Returned as ``t_tot_closed(g) / 4**g``; division by a power of two is
    exact, so it equals the total over ``N_g - 1`` bit for bit.  The
    three-term expansion is cross-checked when ``SELF_CHECK`` is on.

    >>> mfpt_closed(1, 1.0), mfpt_closed(2, 1.0)
    (3.5, 22.75)
    """
    value = t_tot_closed(g, theta) / 4.0**g
    if SELF_CHECK:
        _agree(value, mfpt_three_term(g, theta), "three-term MFPT")
    return value


def scaling_exponent(theta: float) -> float:
    """Exponent of ``<T> ~ N**eta``: ``1 + log4(theta + 1)``."""
    theta = _check_theta(theta)
    return 1.0 + math.log(theta + 1.0, 4)


@dataclass(frozen=True)
class ClosedFormBreakdown:
    g: int
    theta: float
    growth_factor: float
    t_ext: float | None
    t_int: float | None
    t_tot_new: float | None
    t_tot: float
    mfpt: float
    exponent: float

    def to_json_dict(self) -> dict:
        return asdict(self)


def breakdown(g: int, theta: float) -> ClosedFormBreakdown:
    """All intermediate quantities at generation ``g``.

    The sums over newly born nodes start at ``g = 2``: at ``g = 1`` the only
    new internal node is the trap itself, so they are reported as ``None``.
    """
    theta = _check_theta(theta)
    g = _check_g(g, 1)
    if g >= 2:
        t_ext = t_ext_closed(g, theta)
        t_int = t_ext / 2.0
        t_new = t_ext + t_int
    else:
        t_ext = t_int = t_new = None
    t_tot = t_tot_closed(g, theta)
    return ClosedFormBreakdown(
        g=g,
        theta=theta,
        growth_factor=growth_factor(theta),
        t_ext=t_ext,
        t_int=t_int,
        t_tot_new=t_new,
        t_tot=t_tot,
        mfpt=t_tot / 4.0**g,
        exponent=scaling_exponent(theta),
    )
