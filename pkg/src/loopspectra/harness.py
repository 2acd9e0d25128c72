"""Instance generation, fuzz campaigns, exhaustive enumeration, and oracle
cross-checks.

Randomness is counter-based: every instance is derived from
sha256(seed, index), so campaigns are reproducible and order-independent.
Hard gates (trace identities, the line-graph eigenvalue floor, the
eigenvalue shift chains, and the incidence-matrix identities) abort the
campaign with a replayable witness on the first violation.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from .bounds import CATALOG_IDS, InstanceContext, evaluate_bound
from .construct import adjacency, incidence, line_graph, ng_energy_aux_matrix, signless_laplacian
from .graphcore import LoopedGraph, SimpleGraph, canonical_key, instance_digest, make_looped
from .invariants import trace_identities
from .numerics import NumericIntegrityError, QuadExt, eig_sym

EXHAUSTIVE_N_CAP = 7
FULL_LOOP_SUBSET_CAP = 5  # all 2^n loop sets up to here, sampled beyond


class HardGateViolation(RuntimeError):
    """A theorem that must never fail did; carries a replayable witness."""

    def __init__(self, gate: str, witness: str, detail: str = ""):
        super().__init__(f"hard gate {gate} violated on {witness}" + (f": {detail}" if detail else ""))
        self.gate = gate
        self.witness = witness
        self.detail = detail


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 0
    n_min: int = 1
    n_max: int = 8
    edge_probs: tuple[float, ...] = (0.5,)
    sigma_policy: str = "uniform"  # uniform | bernoulli | fixed
    sigma_param: Optional[float] = None
    count: int = 100
    bounds: Optional[tuple[str, ...]] = None  # None = full catalog
    exhaustive: bool = False

    def __post_init__(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.sigma_policy not in ("uniform", "bernoulli", "fixed"):
            raise ValueError(f"unknown sigma policy {self.sigma_policy!r}")
        if self.sigma_policy in ("bernoulli", "fixed") and self.sigma_param is None:
            raise ValueError(f"sigma policy {self.sigma_policy!r} needs sigma_param")
        if not self.exhaustive and (not self.edge_probs or self.count < 0):
            raise ValueError("random campaigns need edge probabilities and count >= 0")
        if self.bounds is not None:
            unknown = set(self.bounds) - set(CATALOG_IDS)
            if unknown:
                raise ValueError(f"unknown bound ids: {sorted(unknown)}")

    def bound_ids(self) -> tuple[str, ...]:
        if self.bounds is None:
            return CATALOG_IDS
        keep = set(self.bounds)
        return tuple(i for i in CATALOG_IDS if i in keep)

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "edge_probs": list(self.edge_probs),
            "sigma_policy": self.sigma_policy,
            "sigma_param": self.sigma_param,
            "count": self.count,
            "bounds": list(self.bound_ids()),
            "exhaustive": self.exhaustive,
        }


def _instance_rng(seed: int, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{index}".encode("ascii")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _draw_loops(rng: random.Random, n: int, policy: str, param: Optional[float]) -> frozenset[int]:
    if policy == "uniform":
        size = rng.randint(0, n)
        return frozenset(rng.sample(range(n), size))
    if policy == "bernoulli":
        return frozenset(v for v in range(n) if rng.random() < float(param))
    size = min(int(param), n)
    return frozenset(rng.sample(range(n), size))


def gen_random(config: CampaignConfig) -> Iterator[LoopedGraph]:
    """Erdos-Renyi bases with a loop set drawn per the configured policy."""
    for index in range(config.count):
        rng = _instance_rng(config.seed, index)
        n = rng.randint(config.n_min, config.n_max)
        p = rng.choice(config.edge_probs)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
        base = SimpleGraph.from_edges(n, edges)
        yield make_looped(base, _draw_loops(rng, n, config.sigma_policy, config.sigma_param))


def gen_exhaustive_layer(n: int, loop_subset_cap: int = 32, seed: int = 0) -> Iterator[LoopedGraph]:
    """All labeled graphs on exactly n vertices, crossed with loop subsets.

    Every one of the 2^n loop subsets is used for n <= 5; beyond that a
    deterministic sample (always containing the empty and the full set) of
    ``loop_subset_cap`` subsets keeps the stream tractable.
    """
    if not 1 <= n <= EXHAUSTIVE_N_CAP:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_N_CAP}")
    pairs = list(combinations(range(n), 2))
    if n <= FULL_LOOP_SUBSET_CAP:
        subsets = list(range(1 << n))
    else:
        rng = _instance_rng(seed, n)
        pool = list(range(1 << n))
        subsets = sorted({0, (1 << n) - 1} | set(rng.sample(pool, min(loop_subset_cap, len(pool)))))
    for mask in range(1 << len(pairs)):
        base = SimpleGraph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        for loop_mask in subsets:
            yield make_looped(base, (v for v in range(n) if loop_mask >> v & 1))


def gen_exhaustive(n_max: int, loop_subset_cap: int = 32, seed: int = 0) -> Iterator[LoopedGraph]:
    """All labeled graphs of every order up to n_max, crossed with loop subsets."""
    if not 1 <= n_max <= EXHAUSTIVE_N_CAP:
        raise ValueError(f"exhaustive enumeration supports 1 <= n_max <= {EXHAUSTIVE_N_CAP}")
    for n in range(1, n_max + 1):
        yield from gen_exhaustive_layer(n, loop_subset_cap, seed)


# ---------------------------------------------------------------------------
# Hard gates
# ---------------------------------------------------------------------------


def _witness(gs: LoopedGraph) -> str:
    from . import shell  # local import: shell imports this module at top level

    return shell.print_loopline(gs)


def check_hard_gates(gs: LoopedGraph, ctx: InstanceContext | None = None) -> None:
    """Raise HardGateViolation if any always-true identity fails on gs."""
    ctx = ctx if ctx is not None else InstanceContext(gs)
    try:
        trace_identities(gs)
    except NumericIntegrityError as exc:
        raise HardGateViolation("trace_identities", _witness(gs), str(exc)) from exc

    b = incidence(gs)
    gram = b.T @ b
    np.fill_diagonal(gram[: gs.m, : gs.m], gram.diagonal()[: gs.m] - 2)
    if gs.m + gs.sigma >= 1:
        lg = ctx.line_full
        if not np.array_equal(gram, adjacency(lg.graph)):
            raise HardGateViolation("incidence_line_graph_identity", _witness(gs))
    if not np.array_equal(b @ b.T, signless_laplacian(gs)):
        raise HardGateViolation("incidence_signless_laplacian_identity", _witness(gs))

    if gs.m + gs.sigma >= 1:
        smallest = ctx.line_full_spectrum.smallest
        if smallest < -2 - 1e-9:
            raise HardGateViolation(
                "line_graph_eigenvalue_floor", _witness(gs), f"min eigenvalue {smallest!r}"
            )

    base = ctx.base_spectrum.values
    looped = ctx.spectrum.values
    for lo, hi in zip(base, looped):
        if hi - lo < -1e-7 or lo + 1 - hi < -1e-7:
            raise HardGateViolation(
                "eigenvalue_shift_chain", _witness(gs), f"pair ({lo!r}, {hi!r})"
            )


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------


@dataclass
class BoundTally:
    holds: int = 0
    equality: int = 0
    skipped: int = 0
    violated: int = 0
    near_tie: int = 0

    def to_json_dict(self) -> dict:
        return {
            "holds": self.holds,
            "equality": self.equality,
            "skipped": self.skipped,
            "violated": self.violated,
            "near_tie": self.near_tie,
        }


@dataclass
class CampaignReport:
    config: dict
    instances: int
    corpus_hash: str
    tallies: dict[str, BoundTally]
    min_slack: dict[str, dict]
    hard_gate_checks: int
    violations: int
    runtime_seconds: float
    violation_witnesses: list[dict] = field(default_factory=list)

    def to_json_dict(self, include_runtime: bool = True) -> dict:
        out = {
            "schema_version": 1,
            "config": self.config,
            "instances": self.instances,
            "corpus_hash": self.corpus_hash,
            "tallies": {k: v.to_json_dict() for k, v in self.tallies.items()},
            "min_slack": self.min_slack,
            "hard_gate_checks": self.hard_gate_checks,
            "violations": self.violations,
            "violation_witnesses": self.violation_witnesses,
        }
        if include_runtime:
            out["runtime_seconds"] = self.runtime_seconds
        return out


def run_campaign(config: CampaignConfig, margin: float = 1e-7) -> CampaignReport:
    """Stream the configured corpus through the bound catalog and hard gates.

    Bound violations are tallied (with witnesses); a hard-gate violation
    aborts immediately since it means the implementation itself is wrong.
    """
    start = time.perf_counter()
    ids = config.bound_ids()
    tallies = {i: BoundTally() for i in ids}
    min_slack: dict[str, dict] = {}
    hasher = hashlib.sha256()
    instances = 0
    gates = 0
    violations = 0
    witnesses: list[dict] = []

    stream = gen_exhaustive(config.n_max) if config.exhaustive else gen_random(config)
    for gs in stream:
        instances += 1
        hasher.update(canonical_key(gs).encode("ascii"))
        hasher.update(b"\n")
        ctx = InstanceContext(gs)
        check_hard_gates(gs, ctx)
        gates += 1
        for bound_id in ids:
            report = evaluate_bound(bound_id, gs, margin, _ctx=ctx)
            tally = tallies[bound_id]
            if report.verdict == "skipped-hypothesis":
                tally.skipped += 1
                continue
            if report.verdict == "violated":
                tally.violated += 1
                violations += 1
                witnesses.append(
                    {"bound": bound_id, "loopline": _witness(gs), "slack": report.slack}
                )
            elif report.verdict == "equality":
                tally.equality += 1
            else:
                tally.holds += 1
            if report.near_tie:
                tally.near_tie += 1
            if report.slack is not None:
                best = min_slack.get(bound_id)
                if best is None or report.slack < best["slack"]:
                    min_slack[bound_id] = {
                        "slack": report.slack,
                        "witness": instance_digest(gs),
                        "loopline": _witness(gs),
                    }
    return CampaignReport(
        config=config.to_json_dict(),
        instances=instances,
        corpus_hash=hasher.hexdigest(),
        tallies=tallies,
        min_slack=min_slack,
        hard_gate_checks=gates,
        violations=violations,
        runtime_seconds=time.perf_counter() - start,
        violation_witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# Closed-form oracle for the shifted all-ones matrix
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleReport:
    ok: bool
    checked: int
    failures: tuple[tuple[int, int], ...]


def oracle_ng_aux(n_max: int = 40, tol: float = 1e-9) -> OracleReport:
    """Replay the closed-form spectrum of the shifted all-ones matrix.

    For every n <= n_max and sigma the numerically computed spectrum must
    match the multiset {1 - 2s/n (x s-1), -1 - 2s/n (x n-s-1), x1, x2}; the
    extreme multiplicities are signed, which cancels the degenerate entries
    at sigma = 0 and sigma = n exactly.
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    failures: list[tuple[int, int]] = []
    checked = 0
    for n in range(2, n_max + 1):
        for sigma in range(0, n + 1):
            checked += 1
            d = (n - 2) ** 2 + 8 * sigma
            t = Fraction(n) - Fraction(4 * sigma, n)
            counts: dict[QuadExt, int] = {}
            for value, mult in (
                (QuadExt(0, Fraction(n - 2 * sigma, n), Fraction(0)), sigma - 1),
                (QuadExt(0, Fraction(-n - 2 * sigma, n), Fraction(0)), n - sigma - 1),
                (QuadExt(d, t / 2, Fraction(1, 2)), 1),
                (QuadExt(d, t / 2, Fraction(-1, 2)), 1),
            ):
                counts[value] = counts.get(value, 0) + mult
            expected: list[float] = []
            for value, mult in counts.items():
                if mult < 0:
                    failures.append((n, sigma))
                    break
                expected.extend([float(value)] * mult)
            else:
                actual = eig_sym(ng_energy_aux_matrix(n, sigma)).values
                if len(expected) != n or any(
                    abs(a - b) > tol for a, b in zip(sorted(expected), sorted(actual))
                ):
                    failures.append((n, sigma))
    return OracleReport(not failures, checked, tuple(failures))
