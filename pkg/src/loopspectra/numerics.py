"""Symmetric eigensolver wrappers, exact characteristic polynomials, and
integer polynomial algebra.

The eigensolver is LAPACK's tridiagonalize-then-iterate path via numpy;
every spectrum is sanity-checked against the trace and Frobenius moments so
a silently broken solve surfaces as a NumericIntegrityError rather than a
wrong verdict downstream.

Characteristic polynomials are exact: a Faddeev-LeVerrier recurrence over
Python big integers for small orders, and the same recurrence modulo a set
of word-sized primes with CRT reconstruction for larger ones.  Both routes
produce identical results; the modular route exists purely for speed on
exhaustive corpora.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .construct import adjacency, line_graph
from .graphcore import LoopedGraph, SimpleGraph, make_looped


class NumericIntegrityError(RuntimeError):
    """An eigen/polynomial result failed an internal consistency check."""


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted in descending order."""

    values: tuple[float, ...]
    tol: float

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    @property
    def radius(self) -> float:
        return self.values[0]

    @property
    def smallest(self) -> float:
        return self.values[-1]


def default_tolerance(order: int, inf_norm: float = 1.0) -> float:
    """1e-9 absolute up to order 64, scaled by the matrix norm beyond."""
    if order <= 64:
        return 1e-9
    return 1e-9 * max(1.0, inf_norm)


def _as_float_matrix(mat: np.ndarray) -> np.ndarray:
    a = np.asarray(mat)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if a.shape[0] == 0:
        raise ValueError("empty matrix has no spectrum")
    return a.astype(np.float64)


def eig_sym(mat: np.ndarray, verify: bool = False) -> Spectrum:
    """Full spectrum of a dense symmetric matrix, descending.

    With ``verify=True`` the eigenvectors are computed as well and the
    residual of every eigenpair is checked against 1e-9 * max(1, |A|_inf).
    """
    a = _as_float_matrix(mat)
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    inf_norm = float(np.abs(a).sum(axis=1).max()) if n else 0.0
    try:
        if verify:
            w, vecs = np.linalg.eigh(a)
        else:
            w = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericIntegrityError(f"eigensolver failed to converge: {exc}") from exc
    if verify:
        resid = np.abs(a @ vecs - vecs * w[None, :]).max()
        cap = 1e-9 * max(1.0, inf_norm)
        if resid > cap:
            raise NumericIntegrityError(f"eigenpair residual {resid:.3e} exceeds {cap:.3e}")
    atol = default_tolerance(n, inf_norm) * max(1.0, inf_norm) * n
    trace = float(np.trace(a))
    fro2 = float((a * a).sum())
    if abs(float(w.sum()) - trace) > atol or abs(float((w * w).sum()) - fro2) > max(atol, atol * fro2):
        raise NumericIntegrityError("spectrum violates trace/Frobenius identities")
    return Spectrum(tuple(float(x) for x in sorted(w, reverse=True)), default_tolerance(n, inf_norm))


def spectral_radius(mat: np.ndarray) -> float:
    return eig_sym(mat).radius


def min_eigenvalue(mat: np.ndarray) -> float:
    return eig_sym(mat).smallest


def multiset_distance(a: Sequence[float], b: Sequence[float]) -> float:
    """Max pairwise gap after sorting both multisets; inf on length mismatch."""
    if len(a) != len(b):
        return math.inf
    if not a:
        return 0.0
    return max(abs(x - y) for x, y in zip(sorted(a), sorted(b)))


# ---------------------------------------------------------------------------
# Integer polynomials (ascending coefficient tuples)
# ---------------------------------------------------------------------------

IntPoly = tuple[int, ...]


def poly_trim(p: Iterable[int]) -> IntPoly:
    coeffs = [int(c) for c in p]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (0,)


def poly_add(p: Iterable[int], q: Iterable[int]) -> IntPoly:
    a, b = list(p), list(q)
    if len(a) < len(b):
        a, b = b, a
    for i, c in enumerate(b):
        a[i] += c
    return poly_trim(a)


def poly_mul(p: Iterable[int], q: Iterable[int]) -> IntPoly:
    a, b = poly_trim(p), poly_trim(q)
    if a == (0,) or b == (0,):
        return (0,)
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_trim(out)


def poly_pow(p: Iterable[int], e: int) -> IntPoly:
    if e < 0:
        raise ValueError("negative exponent")
    result: IntPoly = (1,)
    base = poly_trim(p)
    while e:
        if e & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        e >>= 1
    return result


def poly_compose_rational(
    p: Iterable[int], num: Iterable[int], den: Iterable[int], clear_degree: int | None = None
) -> IntPoly:
    """den^k * p(num/den) as an exact integer polynomial (k = deg p by default)."""
    pp, nn, dd = poly_trim(p), poly_trim(num), poly_trim(den)
    if dd == (0,):
        raise ValueError("zero denominator polynomial")
    deg = len(pp) - 1
    k = deg if clear_degree is None else int(clear_degree)
    if k < deg:
        raise ValueError("clear_degree must be at least deg(p)")
    out: IntPoly = (0,)
    for i, c in enumerate(pp):
        if c == 0:
            continue
        term = poly_mul((c,), poly_mul(poly_pow(nn, i), poly_pow(dd, k - i)))
        out = poly_add(out, term)
    return out


def poly_eval_float(p: Sequence[int], x: float) -> float:
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + float(c)
    return acc


# ---------------------------------------------------------------------------
# Exact characteristic polynomial
# ---------------------------------------------------------------------------

_BIGINT_CUTOFF = 10
_MODULAR_PRIME_CEILING = 1 << 25
_prime_pool: list[int] = []


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    i = 2
    while i * i <= x:
        if x % i == 0:
            return False
        i += 1 if i == 2 else 2
    return True


def _primes(count: int) -> list[int]:
    candidate = _prime_pool[-1] - 2 if _prime_pool else _MODULAR_PRIME_CEILING - 1
    while len(_prime_pool) < count:
        if _is_prime(candidate):
            _prime_pool.append(candidate)
        candidate -= 2
    return _prime_pool[:count]


def _int_matrix(mat: np.ndarray) -> list[list[int]]:
    a = np.asarray(mat)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    rows = []
    for row in a.tolist():
        out = []
        for x in row:
            xi = int(x)
            if xi != x:
                raise ValueError("characteristic polynomial needs integer entries")
            out.append(xi)
        rows.append(out)
    return rows


def _charpoly_bigint(a: list[list[int]]) -> IntPoly:
    # Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
    # The divisions are exact over the integers.
    n = len(a)
    mat = np.array(a, dtype=object)
    mk = mat.copy()
    coeffs = [1]  # descending: coefficient of x^n first
    for k in range(1, n + 1):
        tr = sum(mk[i, i] for i in range(n))
        ck, rem = divmod(-tr, k)
        if rem:
            raise NumericIntegrityError("Faddeev-LeVerrier division left a remainder")
        coeffs.append(ck)
        if k < n:
            step = mk.copy()
            for i in range(n):
                step[i, i] += ck
            mk = mat @ step
    return tuple(reversed(coeffs))


def _charpoly_mod(a_mod: np.ndarray, p: int) -> list[int]:
    n = a_mod.shape[0]
    mk = a_mod.copy()
    coeffs = [1]
    for k in range(1, n + 1):
        tr = int(np.trace(mk)) % p
        ck = (-tr * pow(k, -1, p)) % p
        coeffs.append(ck)
        if k < n:
            step = mk.copy()
            step[np.arange(n), np.arange(n)] = (step.diagonal() + ck) % p
            mk = (a_mod @ step) % p
    return coeffs


def _charpoly_modular(a: list[list[int]]) -> IntPoly:
    n = len(a)
    bound_entry = max((abs(x) for row in a for x in row), default=0)
    # |c_k| <= C(n,k) (B sqrt(n))^k <= (1 + B ceil(sqrt(n)))^n via Hadamard on minors
    coeff_bound = (1 + bound_entry * math.isqrt(max(n - 1, 0)) + bound_entry) ** n
    target = 2 * coeff_bound + 1
    primes: list[int] = []
    prod = 1
    idx = 0
    while prod < target:
        idx += 1
        primes = _primes(idx)
        prod = math.prod(primes)
    arr = np.array(a, dtype=np.int64)
    residue_sets = []
    for p in primes:
        residue_sets.append(_charpoly_mod(np.mod(arr, p), p))
    # CRT per coefficient, lifted to the symmetric range
    out = []
    for pos in range(n + 1):
        x, mod = 0, 1
        for p, residues in zip(primes, residue_sets):
            r = residues[pos]
            t = ((r - x) * pow(mod, -1, p)) % p
            x += mod * t
            mod *= p
        if x > mod // 2:
            x -= mod
        out.append(x)
    return tuple(reversed(out))


def charpoly_exact(mat: np.ndarray) -> IntPoly:
    """Monic integer characteristic polynomial, ascending coefficients."""
    a = _int_matrix(mat)
    n = len(a)
    if n == 0:
        return (1,)
    if n <= _BIGINT_CUTOFF:
        return _charpoly_bigint(a)
    return _charpoly_modular(a)


# ---------------------------------------------------------------------------
# Line-graph characteristic polynomial identity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineGraphIdentity:
    """Both cleared sides of the full-loop line-graph polynomial identity."""

    equal: bool
    lhs: IntPoly
    rhs: IntPoly
    n: int
    m: int


def verify_linegraph_identity(g: SimpleGraph) -> LineGraphIdentity:
    """Check, exactly over the integers, that the characteristic polynomial of
    the line graph of the fully looped graph factors through the one of the
    plain line graph under x -> (x^2 - x - 2)/x, up to (x-1) powers.

    Both sides are cleared of denominators and negative (x-1) exponents, so
    the comparison is a plain tuple equality of big-integer coefficients.
    """
    if g.m == 0:
        raise ValueError("identity needs at least one edge (the plain line graph is empty)")
    n, m = g.n, g.m
    p_plain = charpoly_exact(adjacency(line_graph(make_looped(g, ())).graph))
    p_full = charpoly_exact(adjacency(line_graph(make_looped(g, range(n))).graph))
    rhs = poly_mul(
        poly_pow((-1, 1), max(n - m, 0)),
        poly_compose_rational(p_plain, (-2, -1, 1), (0, 1)),
    )
    lhs = poly_mul(poly_pow((-1, 1), max(m - n, 0)), p_full)
    return LineGraphIdentity(lhs == rhs, lhs, rhs, n, m)


# ---------------------------------------------------------------------------
# Closed-form spectrum of looped complete graphs
# ---------------------------------------------------------------------------


def closed_form_Kn_sigma_spectrum(n: int, sigma: int) -> Spectrum:
    """Spectrum of the complete graph on n vertices with sigma loops.

    sigma = 0 gives {n-1, (-1)^(n-1)}; sigma = n gives {n, 0^(n-1)}; in
    between the two extreme eigenvalues move to (n-1 +/- sqrt((n-1)^2 +
    4 sigma))/2 with 0 and -1 filling the rest.
    """
    if n < 1 or not 0 <= sigma <= n:
        raise ValueError("need n >= 1 and 0 <= sigma <= n")
    if sigma == 0:
        vals = [float(n - 1)] + [-1.0] * (n - 1)
    elif sigma == n:
        vals = [float(n)] + [0.0] * (n - 1)
    else:
        root = math.sqrt((n - 1) ** 2 + 4 * sigma)
        x1 = ((n - 1) + root) / 2.0
        x2 = ((n - 1) - root) / 2.0
        # x2 lies in [-1, 0), so the descending order is fixed
        vals = [x1] + [0.0] * (sigma - 1) + [x2] + [-1.0] * (n - sigma - 1)
    return Spectrum(tuple(vals), default_tolerance(n))


# ---------------------------------------------------------------------------
# Exact arithmetic in Q adjoined sqrt(d)
# ---------------------------------------------------------------------------

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class QuadExt:
    """Exact number a + b*sqrt(d) with rational a, b and fixed integer d >= 0.

    Perfect-square radicands are folded into the rational part on
    construction, so equality is plain component equality.  Only the
    operations needed by the closed-form energy bounds are provided.
    """

    d: int
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("radicand must be nonnegative")
        a, b, d = Fraction(self.a), Fraction(self.b), self.d
        root = math.isqrt(d)
        if root * root == d:
            a, b, d = a + b * root, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def _coerce(self, other: "QuadExt | Rat") -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d and other.d != 0 and self.d != 0:
                raise ValueError("mixed radicands")
            return other
        return QuadExt(self.d, Fraction(other), Fraction(0))

    def __add__(self, other: "QuadExt | Rat") -> "QuadExt":
        o = self._coerce(other)
        return QuadExt(max(self.d, o.d), self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: "QuadExt | Rat") -> "QuadExt":
        return self + (-self._coerce(other))

    def __neg__(self) -> "QuadExt":
        return QuadExt(self.d, -self.a, -self.b)

    def scaled(self, c: Rat) -> "QuadExt":
        c = Fraction(c)
        return QuadExt(self.d, self.a * c, self.b * c)

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs, rhs = a * a, b * b * d
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if rhs > lhs else (-1 if rhs < lhs else 0)

    def __abs__(self) -> "QuadExt":
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)
