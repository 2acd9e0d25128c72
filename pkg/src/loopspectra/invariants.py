"""Scalar invariants: energies, Zagreb indices, degree deviation, trace
identities, interlacing checks, and the closed-form complement-energy bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .construct import adjacency
from .graphcore import LoopedGraph, SimpleGraph, make_looped
from .numerics import NumericIntegrityError, QuadExt, Spectrum, eig_sym


@dataclass(frozen=True)
class EnergyValue:
    """Sum of eigenvalue distances from the center sigma/n."""

    value: float
    center: Fraction
    spectrum: Spectrum


def energy(gs: LoopedGraph) -> EnergyValue:
    """Energy of a looped graph: sum |lambda_i - sigma/n|.

    With no loops the center is 0 and this is the classical energy.
    """
    if gs.n < 1:
        raise ValueError("energy needs at least one vertex")
    spec = eig_sym(adjacency(gs))
    center = Fraction(gs.sigma, gs.n)
    c = float(center)
    return EnergyValue(sum(abs(x - c) for x in spec.values), center, spec)


def trace_identities(gs: LoopedGraph) -> tuple[float, float]:
    """(sum of eigenvalues, sum of squares); must equal (sigma, 2m + sigma).

    A violation beyond 1e-9 * n signals an eigensolver or construction bug
    and raises NumericIntegrityError.
    """
    spec = eig_sym(adjacency(gs))
    s1 = sum(spec.values)
    s2 = sum(x * x for x in spec.values)
    tol = 1e-9 * gs.n
    if abs(s1 - gs.sigma) > tol or abs(s2 - (2 * gs.m + gs.sigma)) > tol:
        raise NumericIntegrityError(
            f"trace identities violated: sum={s1!r} (want {gs.sigma}), "
            f"sumsq={s2!r} (want {2 * gs.m + gs.sigma})"
        )
    return s1, s2


@dataclass(frozen=True)
class ZagrebPair:
    m1_base: int
    m1_looped: int


def zagreb(gs: LoopedGraph) -> ZagrebPair:
    """First Zagreb indices of the base graph and of the looped graph."""
    return ZagrebPair(
        sum(d * d for d in gs.base.degrees),
        sum(d * d for d in gs.degrees),
    )


def degree_deviation(g: SimpleGraph) -> Fraction:
    """s(G) = sum |d(v) - 2m/n|, kept rational so regular graphs give exactly 0."""
    if g.n < 1:
        raise ValueError("degree deviation needs at least one vertex")
    mean = Fraction(2 * g.m, g.n)
    return sum((abs(Fraction(d) - mean) for d in g.degrees), Fraction(0))


# ---------------------------------------------------------------------------
# Interlacing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InterlacingReport:
    ok: bool
    worst_slack: float


def check_interlacing(
    g: Union[SimpleGraph, LoopedGraph], induced_vertices: Iterable[int], tol: float = 1e-9
) -> InterlacingReport:
    """Eigenvalues of the induced subgraph must interlace those of the host."""
    gs = g if isinstance(g, LoopedGraph) else make_looped(g, ())
    sub = gs.induced(induced_vertices)
    if sub.n < 1:
        raise ValueError("induced subgraph must be nonempty")
    host = eig_sym(adjacency(gs)).values
    part = eig_sym(adjacency(sub)).values
    n, k = len(host), len(part)
    worst = math.inf
    for i in range(k):
        worst = min(worst, host[i] - part[i], part[i] - host[n - k + i])
    return InterlacingReport(worst >= -tol, worst)


@dataclass(frozen=True)
class ShiftInterlacingReport:
    ok: bool
    worst_slack: float
    left_chain_exact: bool    # lambda_i(G) == lambda_i(G_S), asserted at sigma=0
    right_chain_exact: bool   # lambda_i(G_S) == lambda_i(G)+1, asserted at sigma=n


def check_shift_interlacing(
    g: SimpleGraph, loops: Iterable[int], tol: float = 1e-9
) -> ShiftInterlacingReport:
    """Adding loops moves every eigenvalue by an amount in [0, 1]."""
    gs = make_looped(g, loops)
    base = eig_sym(adjacency(make_looped(g, ()))).values
    looped = eig_sym(adjacency(gs)).values
    worst = math.inf
    left_gap = 0.0
    right_gap = 0.0
    for lo, hi in zip(base, looped):
        worst = min(worst, hi - lo, lo + 1 - hi)
        left_gap = max(left_gap, abs(hi - lo))
        right_gap = max(right_gap, abs(lo + 1 - hi))
    exact = 1e-12 * max(1.0, gs.n)
    left_exact = gs.sigma == 0 and left_gap <= exact
    right_exact = gs.sigma == gs.n and right_gap <= exact
    ok = worst >= -tol
    if gs.sigma == 0 and not left_exact:
        ok = False
    if gs.sigma == gs.n and not right_exact:
        ok = False
    return ShiftInterlacingReport(ok, worst, left_exact, right_exact)


# ---------------------------------------------------------------------------
# Closed-form two-sided bound for E(G_S) + E(complement)
# ---------------------------------------------------------------------------


def ng_lower_bound_exact(n: int, sigma: int) -> QuadExt:
    """Exact lower endpoint: the absolute eigenvalue sum of the shifted
    all-ones matrix, written in Q adjoined sqrt((n-2)^2 + 8*sigma)."""
    if n < 2 or not 0 <= sigma <= n:
        raise ValueError("need n >= 2 and 0 <= sigma <= n")
    d = (n - 2) ** 2 + 8 * sigma
    t = Fraction(n) - Fraction(4 * sigma, n)
    x1 = QuadExt(d, t / 2, Fraction(1, 2))
    x2 = QuadExt(d, t / 2, Fraction(-1, 2))
    inner = abs(Fraction(1) - Fraction(2 * sigma, n))
    outer = Fraction(1) + Fraction(2 * sigma, n)
    rational_part = (sigma - 1) * inner + (n - sigma - 1) * outer
    return abs(x1) + abs(x2) + QuadExt(d, rational_part, Fraction(0))


def ng_lower_bound_remark_exact(n: int, sigma: int) -> QuadExt:
    """The simplified form of the lower endpoint on its sigma range.

    For 2*sigma > n every absolute value opens with a fixed sign and the
    endpoint collapses to n - 4*sigma/n + sqrt((n-2)^2 + 8*sigma); for
    2*sigma <= n one absolute value survives.
    """
    if n < 2 or not 0 <= sigma <= n:
        raise ValueError("need n >= 2 and 0 <= sigma <= n")
    d = (n - 2) ** 2 + 8 * sigma
    t = Fraction(n) - Fraction(4 * sigma, n)
    if 2 * sigma > n:
        return QuadExt(d, t, Fraction(1))
    x2 = QuadExt(d, t / 2, Fraction(-1, 2))
    rational = (
        Fraction(3 * n, 2)
        - 2
        + 2 * sigma * (Fraction(1) - Fraction(1, n) - Fraction(2 * sigma, n))
    )
    return QuadExt(d, rational, Fraction(1, 2)) + abs(x2)


@dataclass(frozen=True)
class NGEnergyBounds:
    lower: float
    upper: float
    x1: float
    x2: float


def ng_energy_closed_forms(n: int, sigma: int) -> NGEnergyBounds:
    """Evaluate the two-sided closed-form bound for E(G_S) + E(complement).

    The general lower endpoint is cross-checked, exactly in rational
    arithmetic, against its range-specific simplification before returning.
    """
    lower = ng_lower_bound_exact(n, sigma)
    remark = ng_lower_bound_remark_exact(n, sigma)
    if lower != remark:
        raise NumericIntegrityError(
            f"lower-endpoint simplification mismatch at n={n}, sigma={sigma}"
        )
    upper = 2.0 * math.sqrt(2.0 * (2 * sigma * (n - 1) * (n - sigma) + (n * n - n) ** 2))
    d = (n - 2) ** 2 + 8 * sigma
    t = Fraction(n) - Fraction(4 * sigma, n)
    x1 = QuadExt(d, t / 2, Fraction(1, 2))
    x2 = QuadExt(d, t / 2, Fraction(-1, 2))
    return NGEnergyBounds(float(lower), upper, float(x1), float(x2))
