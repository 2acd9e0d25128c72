"""The bound catalog: every eigenvalue/energy inequality as a
hypothesis-guarded evaluator producing a structured verdict.

Bound ids B1-B18 are a stable public contract (they key the JSON reports).
An unmet hypothesis is a skip, never a violation; strict inequalities get a
separate near-tie flag instead of a fabricated positive gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional

from .construct import adjacency, complement, line_graph
from .graphcore import (
    DegreeClassification,
    LoopedGraph,
    classify_bidegreed,
    detect_regular_complete_multipartite,
    family,
    instance_digest,
    is_clique,
    is_connected,
    is_independent_set,
    make_looped,
    multipartite_parts,
)
from .invariants import degree_deviation, energy, ng_energy_closed_forms
from .numerics import Spectrum, eig_sym

VIOLATION_MARGIN = 1e-7


class CertificationError(RuntimeError):
    """An equality family failed to certify within tolerance."""


@dataclass(frozen=True)
class BoundReport:
    bound: str
    instance: str
    hypotheses: tuple[tuple[str, bool], ...]
    lhs: Optional[float]
    rhs: Optional[float]
    slack: Optional[float]
    verdict: str  # holds | equality | violated | skipped-hypothesis
    near_tie: bool = False
    detail: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "bound": self.bound,
            "instance": self.instance,
            "hypotheses": {name: ok for name, ok in self.hypotheses},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "verdict": self.verdict,
            "near_tie": self.near_tie,
            "detail": self.detail,
        }


class InstanceContext:
    """Per-instance cache so one instance feeds all 18 bounds with a single
    spectrum/line-graph computation each."""

    def __init__(self, gs: LoopedGraph):
        self.gs = gs
        self.n = gs.n
        self.m = gs.m
        self.sigma = gs.sigma

    @cached_property
    def digest(self) -> str:
        return instance_digest(self.gs)

    @cached_property
    def spectrum(self) -> Spectrum:
        return eig_sym(adjacency(self.gs))

    @cached_property
    def base_spectrum(self) -> Spectrum:
        return eig_sym(adjacency(make_looped(self.gs.base, ())))

    @cached_property
    def comp(self) -> LoopedGraph:
        return complement(self.gs)

    @cached_property
    def comp_spectrum(self) -> Spectrum:
        return eig_sym(adjacency(self.comp))

    @cached_property
    def energy_gs(self) -> float:
        return energy(self.gs).value

    @cached_property
    def energy_base(self) -> float:
        return energy(make_looped(self.gs.base, ())).value

    @cached_property
    def energy_comp(self) -> float:
        return energy(self.comp).value

    @cached_property
    def line_full(self):
        return line_graph(self.gs)

    @cached_property
    def line_full_spectrum(self) -> Spectrum:
        return eig_sym(adjacency(self.line_full.graph))

    @cached_property
    def energy_line_full(self) -> float:
        return energy(self.line_full.graph).value

    @cached_property
    def energy_line_base(self) -> float:
        plain = line_graph(make_looped(self.gs.base, ()))
        return energy(plain.graph).value

    @cached_property
    def energy_deleted(self) -> float:
        rest = sorted(set(range(self.n)) - self.gs.loops)
        return energy(make_looped(self.gs.base.induced(rest), ())).value

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.gs.base)

    @cached_property
    def comp_connected(self) -> bool:
        return is_connected(self.gs.base.complement())

    @cached_property
    def classification(self) -> DegreeClassification:
        return classify_bidegreed(self.gs)

    @cached_property
    def m1_base(self) -> int:
        return sum(d * d for d in self.gs.base.degrees)

    @cached_property
    def max_degree(self) -> int:
        return max(self.gs.base.degrees)

    @cached_property
    def min_degree(self) -> int:
        return min(self.gs.base.degrees)

    @cached_property
    def deviation(self) -> float:
        return float(degree_deviation(self.gs.base))

    @cached_property
    def loops_independent(self) -> bool:
        return is_independent_set(self.gs.base, self.gs.loops)

    @cached_property
    def loops_clique(self) -> bool:
        return is_clique(self.gs.base, self.gs.loops)

    @cached_property
    def rcm(self) -> Optional[tuple[int, int]]:
        return detect_regular_complete_multipartite(self.gs.base)

    @cached_property
    def parts(self) -> Optional[tuple[int, ...]]:
        return multipartite_parts(self.gs.base)


Hypothesis = tuple[str, Callable[[InstanceContext], bool]]
Evaluator = Callable[[InstanceContext], tuple[float, float, dict]]


@dataclass(frozen=True)
class BoundSpec:
    id: str
    kind: str  # lower | upper | sandwich | strict
    summary: str
    hypotheses: tuple[Hypothesis, ...]
    evaluate: Evaluator


# --- closed-form right-hand sides reused by the degeneration checks --------


def radius_moment_bound(n: int, m: int, sigma: int) -> float:
    """Upper bound on the spectral radius from the first two spectral moments."""
    return sigma / n + math.sqrt(
        sigma * (n - 1) * (n - sigma) / n**2 + 2 * m * (n - 1) / n
    )


def nosal_radius_bound(n: int, m: int) -> float:
    """Classical loopless specialization of :func:`radius_moment_bound`."""
    return math.sqrt(2 * m * (n - 1) / n)


def ng_radius_upper_bound(n: int, sigma: int) -> float:
    """Upper endpoint for the radius sum of a looped graph and its complement."""
    return 2 * sigma / n + math.sqrt(2.0) * math.sqrt(
        2 * sigma * (n - 1) * (n - sigma) / n**2 + (n - 1) ** 2
    )


def ng_radius_lower_bound(n: int, sigma: int) -> float:
    """Lower endpoint for the radius sum."""
    return n - 1 + 2 * sigma / n


# --- per-bound evaluators ---------------------------------------------------


def _b1(ctx: InstanceContext):
    return ctx.spectrum.radius, (1 + math.sqrt(1 + 8 * ctx.m)) / 2, {}


def _b2(ctx: InstanceContext):
    cls = ctx.classification
    detail = {"equality_family": "bidegreed_aligned" if cls.s_aligned else None}
    return (2 * ctx.m + ctx.sigma) / ctx.n, ctx.spectrum.radius, detail


def _b3(ctx: InstanceContext):
    return ctx.spectrum.radius, radius_moment_bound(ctx.n, ctx.m, ctx.sigma), {}


def _b4(ctx: InstanceContext):
    cls = ctx.classification
    if ctx.m == ctx.n * (ctx.n - 1) // 2 and ctx.sigma == ctx.n:
        fam = "full_loop_complete"
    elif ctx.m == 0 and ctx.sigma == ctx.n:
        fam = "edgeless_full_loop"
    elif cls.s_aligned and cls.bipartite:
        fam = "semiregular_aligned"
    else:
        fam = None
    lhs = math.sqrt(ctx.m1_base / ctx.n + ctx.sigma * (2 * ctx.min_degree + 1) / ctx.n)
    return lhs, ctx.spectrum.radius, {"equality_family": fam}


def _sandwich(low: float, mid: float, high: float) -> tuple[float, float, dict]:
    slack_low = mid - low
    slack_high = high - mid
    detail = {"lower": low, "middle": mid, "upper": high}
    if slack_low <= slack_high:
        detail["binding"] = "lower"
        return low, mid, detail
    detail["binding"] = "upper"
    return mid, high, detail


def _b5(ctx: InstanceContext):
    mid = ctx.spectrum.radius + ctx.comp_spectrum.radius
    return _sandwich(ng_radius_lower_bound(ctx.n, ctx.sigma), mid, ng_radius_upper_bound(ctx.n, ctx.sigma))


def _b6(ctx: InstanceContext):
    lhs = ctx.spectrum.radius + ctx.comp_spectrum.radius
    return lhs, ctx.n + 1 + (ctx.max_degree - ctx.min_degree), {}


def _b7(ctx: InstanceContext):
    return 2 * ctx.spectrum.radius - 2 * ctx.sigma / ctx.n, ctx.energy_gs, {}


def _b8(ctx: InstanceContext):
    return 4 * ctx.m / ctx.n, ctx.energy_gs, {}


def _b9(ctx: InstanceContext):
    return 2 * ctx.spectrum.radius, ctx.energy_gs, {}


def _b10(ctx: InstanceContext):
    branch = "regular" if _b10_regular(ctx) else "multipartite"
    return ctx.energy_base, ctx.energy_gs, {"branch": branch}


def _b10_regular(ctx: InstanceContext) -> bool:
    rcm = ctx.rcm
    return rcm is not None and rcm[0] >= 2


def _b10_general(ctx: InstanceContext) -> bool:
    return (
        ctx.parts is not None
        and ctx.n >= 4
        and 1 <= ctx.sigma
        and 2 * ctx.sigma <= ctx.n
        and not ctx.loops_clique
    )


def _b11(ctx: InstanceContext):
    return ctx.energy_deleted, ctx.energy_gs, {}


def _b12(ctx: InstanceContext):
    return ctx.energy_deleted, ctx.energy_gs, {}


def _b13(ctx: InstanceContext):
    return ctx.energy_line_base, ctx.energy_line_full, {}


def _b14(ctx: InstanceContext):
    return -2.0, ctx.line_full_spectrum.smallest, {}


def _b15(ctx: InstanceContext):
    bound = -1.0 if ctx.sigma == 0 else 1.0
    vals = ctx.spectrum.values
    comp = ctx.comp_spectrum.values
    worst_j, worst = None, math.inf
    for j in range(2, ctx.n + 1):
        v = vals[j - 1] + comp[ctx.n - j + 1]
        if bound - v < worst:
            worst, worst_j = bound - v, j
    return bound - worst, bound, {"worst_j": worst_j, "branch": "sigma=0" if ctx.sigma == 0 else "sigma>0"}


def _b16(ctx: InstanceContext):
    bound = -1.0 - 2.0 * math.sqrt(2.0 * ctx.deviation)
    vals = ctx.spectrum.values
    comp = ctx.comp_spectrum.values
    worst_j, worst = None, math.inf
    for j in range(2, ctx.n + 1):
        v = vals[j - 1] + comp[ctx.n - j + 1]
        if v - bound < worst:
            worst, worst_j = v - bound, j
    return bound, bound + worst, {"worst_j": worst_j}


def _b17(ctx: InstanceContext):
    forms = ng_energy_closed_forms(ctx.n, ctx.sigma)
    mid = ctx.energy_gs + ctx.energy_comp
    return _sandwich(forms.lower, mid, forms.upper)


def _b18(ctx: InstanceContext):
    base = ctx.base_spectrum.values
    looped = ctx.spectrum.values
    worst_i, worst, side = None, math.inf, None
    for i, (lo, hi) in enumerate(zip(base, looped), start=1):
        if hi - lo < worst:
            worst, worst_i, side = hi - lo, i, "lower"
        if lo + 1 - hi < worst:
            worst, worst_i, side = lo + 1 - hi, i, "upper"
    return -worst, 0.0, {"worst_i": worst_i, "side": side, "note": "slack is min over both chains"}


def _hyp(name: str, fn: Callable[[InstanceContext], bool]) -> Hypothesis:
    return (name, fn)


CATALOG: dict[str, BoundSpec] = {
    spec.id: spec
    for spec in [
        BoundSpec(
            "B1", "upper", "radius <= (1 + sqrt(1 + 8m)) / 2",
            (), _b1,
        ),
        BoundSpec(
            "B2", "lower", "radius >= (2m + sigma) / n",
            (_hyp("connected", lambda c: c.connected),), _b2,
        ),
        BoundSpec(
            "B3", "upper", "radius <= sigma/n + sqrt(sigma(n-1)(n-sigma)/n^2 + 2m(n-1)/n)",
            (_hyp("order>=2", lambda c: c.n >= 2), _hyp("size>=1", lambda c: c.m >= 1)), _b3,
        ),
        BoundSpec(
            "B4", "lower", "radius >= sqrt(M1/n + sigma(2*delta + 1)/n)",
            (_hyp("connected", lambda c: c.connected),), _b4,
        ),
        BoundSpec(
            "B5", "sandwich", "n-1+2sigma/n <= radius + comp_radius <= closed form",
            (
                _hyp("order>=2", lambda c: c.n >= 2),
                _hyp("size>=1", lambda c: c.m >= 1),
                _hyp("connected", lambda c: c.connected),
                _hyp("complement_connected", lambda c: c.comp_connected),
            ),
            _b5,
        ),
        BoundSpec(
            "B6", "upper", "radius + comp_radius <= n + 1 + (Delta - delta)",
            (), _b6,
        ),
        BoundSpec(
            "B7", "lower", "energy >= 2*radius - 2*sigma/n",
            (_hyp("order>=2", lambda c: c.n >= 2),), _b7,
        ),
        BoundSpec(
            "B8", "lower", "energy >= 4m/n",
            (_hyp("order>=2", lambda c: c.n >= 2), _hyp("connected", lambda c: c.connected)), _b8,
        ),
        BoundSpec(
            "B9", "lower", "energy >= 2*radius when loops avoid a clique",
            (
                _hyp("order>=4", lambda c: c.n >= 4),
                _hyp("1<=sigma<=n/2", lambda c: 1 <= c.sigma and 2 * c.sigma <= c.n),
                _hyp("loop_set_not_clique", lambda c: not c.loops_clique),
            ),
            _b9,
        ),
        BoundSpec(
            "B10", "lower", "looped energy >= base energy on complete multipartite graphs",
            (_hyp("multipartite_branch", lambda c: _b10_regular(c) or _b10_general(c)),), _b10,
        ),
        BoundSpec(
            "B11", "strict", "deleting an independent loop set loses energy",
            (
                _hyp("order>=2", lambda c: c.n >= 2),
                _hyp("loops_independent", lambda c: c.loops_independent),
                _hyp("1<=sigma<=n-1", lambda c: 1 <= c.sigma <= c.n - 1),
            ),
            _b11,
        ),
        BoundSpec(
            "B12", "strict", "deleting a clique loop set loses energy",
            (
                _hyp("order>=2", lambda c: c.n >= 2),
                _hyp("loops_clique", lambda c: c.loops_clique),
                _hyp("1<=sigma<=n-1", lambda c: 1 <= c.sigma <= c.n - 1),
            ),
            _b12,
        ),
        BoundSpec(
            "B13", "strict", "line-graph energy grows when loops are added",
            (
                _hyp("sigma>=1", lambda c: c.sigma >= 1),
                _hyp("size>=1", lambda c: c.m >= 1),
            ),
            _b13,
        ),
        BoundSpec(
            "B14", "lower", "every line-graph eigenvalue is at least -2",
            (_hyp("line_graph_nonempty", lambda c: c.m + c.sigma >= 1),), _b14,
        ),
        BoundSpec(
            "B15", "upper", "paired eigenvalue sums with the complement are capped",
            (_hyp("order>=2", lambda c: c.n >= 2),), _b15,
        ),
        BoundSpec(
            "B16", "lower", "paired eigenvalue sums are at least -1 - 2*sqrt(2 s(G))",
            (_hyp("order>=2", lambda c: c.n >= 2),), _b16,
        ),
        BoundSpec(
            "B17", "sandwich", "closed two-sided bound for energy + complement energy",
            (_hyp("order>=2", lambda c: c.n >= 2), _hyp("size>=1", lambda c: c.m >= 1)), _b17,
        ),
        BoundSpec(
            "B18", "sandwich", "eigenvalues shift by an amount in [0, 1] under loops",
            (), _b18,
        ),
    ]
}

CATALOG_IDS: tuple[str, ...] = tuple(CATALOG)


def _verdict(slack: float, margin: float, strict: bool) -> tuple[str, bool]:
    if slack < -margin:
        return "violated", False
    if abs(slack) <= margin:
        return "equality", strict
    return "holds", False


def evaluate_bound(
    bound_id: str, gs: LoopedGraph, margin: float = VIOLATION_MARGIN,
    _ctx: InstanceContext | None = None,
) -> BoundReport:
    """Evaluate one catalog bound; an unmet hypothesis yields a skip."""
    try:
        spec = CATALOG[bound_id]
    except KeyError:
        raise ValueError(f"unknown bound id {bound_id!r}") from None
    ctx = _ctx if _ctx is not None else InstanceContext(gs)
    hyps = tuple((name, bool(fn(ctx))) for name, fn in spec.hypotheses)
    if not all(ok for _, ok in hyps):
        return BoundReport(bound_id, ctx.digest, hyps, None, None, None, "skipped-hypothesis")
    lhs, rhs, detail = spec.evaluate(ctx)
    slack = rhs - lhs
    verdict, near = _verdict(slack, margin, spec.kind == "strict")
    return BoundReport(bound_id, ctx.digest, hyps, lhs, rhs, slack, verdict, near, detail)


def evaluate_all(
    gs: LoopedGraph, only: Iterable[str] | None = None, margin: float = VIOLATION_MARGIN
) -> list[BoundReport]:
    """Evaluate the catalog (or a subset) on one instance, in catalog order."""
    ids = list(CATALOG_IDS) if only is None else [i for i in CATALOG_IDS if i in set(only)]
    if only is not None:
        unknown = set(only) - set(CATALOG_IDS)
        if unknown:
            raise ValueError(f"unknown bound ids: {sorted(unknown)}")
    ctx = InstanceContext(gs)
    return [evaluate_bound(i, gs, margin, _ctx=ctx) for i in ids]


EQUALITY_FAMILIES: dict[str, frozenset[str]] = {
    "B2": frozenset({"k32_s", "kn_hat"}),
    "B4": frozenset({"k32_s", "kn_hat", "edgeless_full_loop"}),
    "B7": frozenset({"kn_sigma"}),
}


def certify_equality_family(
    bound_id: str, family_name: str, margin: float = VIOLATION_MARGIN, **params
) -> BoundReport:
    """Build the named family and check the bound is tight on it.

    The hypothesis gate is bypassed on purpose: some equality families
    (the edgeless full-loop graph) fail the theorem's hypotheses yet still
    attain the bound.  Raises CertificationError when |slack| > margin.
    """
    allowed = EQUALITY_FAMILIES.get(bound_id)
    if allowed is None or family_name.lower() not in allowed:
        raise ValueError(f"bound {bound_id} has no equality family {family_name!r}")
    gs = family(family_name, **params)
    ctx = InstanceContext(gs)
    spec = CATALOG[bound_id]
    hyps = tuple((name, bool(fn(ctx))) for name, fn in spec.hypotheses)
    lhs, rhs, detail = spec.evaluate(ctx)
    slack = rhs - lhs
    if abs(slack) > margin:
        raise CertificationError(
            f"{bound_id} not tight on {family_name} {params}: slack={slack!r}"
        )
    return BoundReport(bound_id, ctx.digest, hyps, lhs, rhs, slack, "equality", False, detail)
