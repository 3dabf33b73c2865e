"""Principal eigenpairs of the adjacency tensor of a uniform hypergraph.

The eigenvalue equation used throughout is the homogeneous one:

    sum_{e : j in e} prod_{u in e, u != j} x_u  =  lambda * x_j^{m-1}

whose left side is `tensor_apply`.  For a connected hypergraph the principal
eigenpair is positive and unique up to scale, and for any positive vector the
componentwise ratios give certified lower and upper bounds on lambda
(Collatz-Wielandt).  The solver is a shifted power iteration driven by those
brackets; `oracle_radius` is a deliberately independent second route that
maximizes the generating polynomial on the unit m-norm sphere by projected
gradient ascent and returns m times the maximum, which equals lambda by the
Euler identity.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

import numpy as np

from .hypergraph import Hypergraph, UnknownVertexError


class NotConnectedError(ValueError):
    """The hypergraph is not connected (or leaves some vertex uncovered)."""


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    tolerance: float = 1e-12
    max_iterations: int = 1_000_000
    shift: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.shift < 0:
            raise ValueError(f"shift must be >= 0, got {self.shift}")


@dataclass
class EigenPair:
    """Converged (or best-effort) principal eigenpair with certified brackets.

    `value` is the midpoint of [value_lo, value_hi]; the brackets come from
    Collatz-Wielandt ratios at `vector` and are valid even before convergence.
    The vector is positive and normalized in the m-norm, indexed like
    `vertices`.
    """

    value: float
    value_lo: float
    value_hi: float
    vector: np.ndarray
    vertices: tuple[int, ...]
    residual: float
    iterations: int
    converged: bool = True
    message: str = ""
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def entry(self, vertex: int) -> float:
        try:
            return float(self.vector[self._index[vertex]])
        except KeyError:
            raise UnknownVertexError(vertex) from None

    def as_dict(self) -> dict[int, float]:
        return {v: float(val) for v, val in zip(self.vertices, self.vector)}


@lru_cache(maxsize=128)
def _edge_positions(hypergraph: Hypergraph) -> np.ndarray:
    index = {v: i for i, v in enumerate(hypergraph.vertices)}
    if not hypergraph.edges:
        return np.zeros((0, hypergraph.rank), dtype=np.int64)
    return np.array([[index[v] for v in e] for e in hypergraph.edges], dtype=np.int64)


def _as_vector(hypergraph: Hypergraph, values: Union[Sequence[float], Mapping[int, float], np.ndarray]) -> np.ndarray:
    if isinstance(values, Mapping):
        try:
            return np.array([float(values[v]) for v in hypergraph.vertices])
        except KeyError as exc:
            raise UnknownVertexError(exc.args[0]) from None
    arr = np.asarray(values, dtype=float)
    if arr.shape != (len(hypergraph.vertices),):
        raise DimensionMismatchError(
            f"expected a vector of length {len(hypergraph.vertices)}, got shape {arr.shape}")
    return arr


def tensor_apply(hypergraph: Hypergraph, values) -> np.ndarray:
    """Left side of the eigenvalue equation at `values`, ordered like vertices."""
    arr = _as_vector(hypergraph, values)
    return _apply_positions(_edge_positions(hypergraph), arr, len(hypergraph.vertices))


def _apply_positions(epos: np.ndarray, arr: np.ndarray, nv: int) -> np.ndarray:
    out = np.zeros(nv)
    if epos.shape[0] == 0:
        return out
    m = epos.shape[1]
    cols = [arr[epos[:, t]] for t in range(m)]
    for t in range(m):
        w = None
        for s in range(m):
            if s == t:
                continue
            w = cols[s] if w is None else w * cols[s]
        out += np.bincount(epos[:, t], weights=w, minlength=nv)
    return out


def lagrangian_value(hypergraph: Hypergraph, values) -> float:
    arr = _as_vector(hypergraph, values)
    epos = _edge_positions(hypergraph)
    if epos.shape[0] == 0:
        return 0.0
    prod = arr[epos[:, 0]]
    for t in range(1, epos.shape[1]):
        prod = prod * arr[epos[:, t]]
    return float(prod.sum())


def degree(hypergraph: Hypergraph, vertex: int) -> int:
    if vertex not in set(hypergraph.vertices):
        raise UnknownVertexError(vertex)
    return sum(1 for e in hypergraph.edges if vertex in e)


def codegree(hypergraph: Hypergraph, u: int, v: int) -> int:
    vset = set(hypergraph.vertices)
    for w in (u, v):
        if w not in vset:
            raise UnknownVertexError(w)
    if u == v:
        raise ValueError("codegree needs two distinct vertices")
    return sum(1 for e in hypergraph.edges if u in e and v in e)


def is_connected(hypergraph: Hypergraph) -> bool:
    """Connected in the edge-overlap sense, with every vertex in some edge."""
    if not hypergraph.vertices:
        return False
    adjacency: dict[int, set[int]] = {v: set() for v in hypergraph.vertices}
    for e in hypergraph.edges:
        for a in e:
            adjacency[a].update(e)
    start = hypergraph.vertices[0]
    if not adjacency[start]:
        return len(hypergraph.vertices) == 1 and bool(hypergraph.edges)
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in adjacency[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(hypergraph.vertices)


def _lm_norm(arr: np.ndarray, m: int) -> float:
    return float((arr ** m).sum() ** (1.0 / m))


def collatz_wielandt_bracket(hypergraph: Hypergraph, values) -> tuple[float, float]:
    """Certified [lo, hi] for the principal eigenvalue from any positive vector."""
    arr = _as_vector(hypergraph, values)
    if np.any(arr <= 0):
        raise ValueError("Collatz-Wielandt brackets need a strictly positive vector")
    ratios = tensor_apply(hypergraph, arr) / arr ** (hypergraph.rank - 1)
    return float(ratios.min()), float(ratios.max())


def _to_fraction(value) -> Fraction:
    """Exact rational of an int, float, Fraction, or mpmath float."""
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    ratio = getattr(value, "as_integer_ratio", None)
    if ratio is not None:
        return Fraction(*ratio())
    raw = getattr(value, "_mpf_", None)
    if raw is not None:
        sign, man, exp, _ = raw
        if man == 0 and exp != 0:
            raise ValueError(f"cannot convert non-finite value {value!r}")
        frac = Fraction(man) * Fraction(2) ** exp
        return -frac if sign else frac
    return Fraction(value)


def rational_bracket(hypergraph: Hypergraph, values
                     ) -> tuple[Fraction, Fraction, Fraction]:
    """Exact Collatz-Wielandt bracket plus residual at a positive vector.

    Entries may be ints, floats, Fractions, or mpmath floats; each is taken
    at its exact rational value, so the returned (lo, hi) provably contain
    the principal eigenvalue no matter how the vector was produced.  The
    residual is max_j |apply_j - mid * x_j^{m-1}| at the bracket midpoint.
    """
    if isinstance(values, Mapping):
        try:
            point = [_to_fraction(values[v]) for v in hypergraph.vertices]
        except KeyError as exc:
            raise UnknownVertexError(exc.args[0]) from None
    else:
        seq = list(values)
        if len(seq) != len(hypergraph.vertices):
            raise DimensionMismatchError(
                f"vector of length {len(seq)} against {len(hypergraph.vertices)} vertices")
        point = [_to_fraction(t) for t in seq]
    if any(t <= 0 for t in point):
        raise ValueError("Collatz-Wielandt brackets need a strictly positive vector")
    index = {v: i for i, v in enumerate(hypergraph.vertices)}
    m = hypergraph.rank
    numer = [Fraction(0) for _ in point]
    for e in hypergraph.edges:
        pos = [index[v] for v in e]
        full = Fraction(1)
        for p in pos:
            full *= point[p]
        for p in pos:
            numer[p] += full / point[p]
    powered = [point[i] ** (m - 1) for i in range(len(point))]
    ratios = [numer[i] / powered[i] for i in range(len(point))]
    lo, hi = min(ratios), max(ratios)
    mid = (lo + hi) / 2
    residual = max(abs(numer[i] - mid * powered[i]) for i in range(len(point)))
    return lo, hi, residual


def exact_bracket(hypergraph: Hypergraph, values) -> tuple[Fraction, Fraction]:
    """Same brackets evaluated in exact rational arithmetic (floats taken exactly)."""
    lo, hi, _ = rational_bracket(hypergraph, values)
    return lo, hi


def refined_eigenvector(hypergraph: Hypergraph, *, digits: int = 60,
                        start: Sequence[float] | None = None, shift: float = 1.0,
                        max_iterations: int = 20_000) -> tuple[list[Fraction], int]:
    """Shifted power iteration carried out in `digits`-decimal arithmetic.

    The separation of some eigenvalue pairs sits far below double precision,
    so the double-precision solver cannot split their brackets; this refines
    a (warm-start) vector until the Collatz-Wielandt spread drops under
    10^(10 - digits) or the iteration budget runs out.  Returns the exact
    dyadic rationals of the last iterate together with the iteration count;
    feed them to rational_bracket for the certificate, which stays valid
    even on a non-converged iterate.
    """
    import mpmath

    if digits < 20:
        raise ValueError(f"digits must be >= 20, got {digits}")
    if not is_connected(hypergraph):
        raise NotConnectedError("principal eigenpair needs a connected hypergraph")
    m = hypergraph.rank
    nv = len(hypergraph.vertices)
    rows = [tuple(int(t) for t in row) for row in _edge_positions(hypergraph)]
    with mpmath.workdps(digits):
        tol = mpmath.mpf(10) ** (10 - digits)
        sh = mpmath.mpf(shift)
        root = mpmath.mpf(1) / (m - 1)
        if start is None:
            vec = [mpmath.mpf(1)] * nv
        else:
            seq = [float(t) for t in start]
            if len(seq) != nv:
                raise DimensionMismatchError(
                    f"start of length {len(seq)} against {nv} vertices")
            if min(seq) <= 0:
                raise ValueError("start vector must be strictly positive")
            vec = [mpmath.mpf(t) for t in seq]
        norm = sum(t ** m for t in vec) ** (mpmath.mpf(1) / m)
        vec = [t / norm for t in vec]
        iterations = 0
        for iterations in range(1, max_iterations + 1):
            applied = [mpmath.mpf(0)] * nv
            for row in rows:
                prod = vec[row[0]]
                for t in row[1:]:
                    prod = prod * vec[t]
                for t in row:
                    applied[t] += prod / vec[t]
            powered = [t ** (m - 1) for t in vec]
            ratios = [a / p for a, p in zip(applied, powered)]
            if max(ratios) - min(ratios) < tol:
                break
            nxt = [(a + sh * p) ** root for a, p in zip(applied, powered)]
            norm = sum(t ** m for t in nxt) ** (mpmath.mpf(1) / m)
            vec = [t / norm for t in nxt]
        return [_to_fraction(t) for t in vec], iterations


def principal_eigenpair(hypergraph: Hypergraph, config: SolverConfig | None = None) -> EigenPair:
    """Shifted power iteration to the positive principal eigenpair.

    Each step applies the tensor, adds shift * x^{m-1}, takes the (m-1)-th
    root, and renormalizes; the eigenvalue brackets are the min and max
    Collatz-Wielandt ratios at the current iterate.  Convergence means the
    bracket width and the residual both drop below the tolerance.  On
    max_iterations the best iterate is returned with converged=False.
    """
    cfg = config or SolverConfig()
    if not is_connected(hypergraph):
        raise NotConnectedError("principal eigenpair needs a connected hypergraph")
    m = hypergraph.rank
    nv = len(hypergraph.vertices)
    epos = _edge_positions(hypergraph)

    arr = np.ones(nv)
    if cfg.seed:
        arr = arr + np.random.default_rng(cfg.seed).uniform(0.0, 0.5, nv)
    arr /= _lm_norm(arr, m)

    lo = hi = mid = res = 0.0
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        applied = _apply_positions(epos, arr, nv)
        powered = arr ** (m - 1)
        ratios = applied / powered
        lo, hi = float(ratios.min()), float(ratios.max())
        mid = 0.5 * (lo + hi)
        res = float(np.max(np.abs(applied - mid * powered)))
        if hi - lo < cfg.tolerance and res < cfg.tolerance:
            return EigenPair(mid, lo, hi, arr, hypergraph.vertices, res, iterations)
        nxt = (applied + cfg.shift * powered) ** (1.0 / (m - 1))
        arr = nxt / _lm_norm(nxt, m)

    return EigenPair(mid, lo, hi, arr, hypergraph.vertices, res, iterations,
                     converged=False,
                     message=f"bracket width {hi - lo:.3e} after {iterations} iterations")


def oracle_radius(hypergraph: Hypergraph, *, restarts: int = 8, seed: int = 0,
                  tolerance: float = 1e-10, max_steps: int = 50_000) -> float:
    """m * max of the generating polynomial on the unit m-norm sphere.

    Multi-start projected gradient ascent with a backtracking step size.
    Kept free of the power-iteration code on purpose: this is the oracle the
    solver is checked against.
    """
    if not is_connected(hypergraph):
        raise NotConnectedError("oracle_radius needs a connected hypergraph")
    m = hypergraph.rank
    nv = len(hypergraph.vertices)
    epos = _edge_positions(hypergraph)
    rng = np.random.default_rng(seed)

    def value(arr: np.ndarray) -> float:
        prod = arr[epos[:, 0]]
        for t in range(1, m):
            prod = prod * arr[epos[:, t]]
        return float(prod.sum())

    best = 0.0
    for trial in range(restarts):
        if trial == 0:
            arr = np.ones(nv)
        else:
            arr = rng.uniform(0.05, 1.0, nv)
        arr /= _lm_norm(arr, m)
        fval = value(arr)
        step = 0.5
        stall = 0
        for _ in range(max_steps):
            grad = _apply_positions(epos, arr, nv)
            powered = arr ** (m - 1)
            # ascent direction tangent to the constraint surface; the raw
            # Euclidean gradient followed by renormalization is not an
            # ascent direction for m > 2
            mult = float(grad @ powered) / float(powered @ powered)
            direction = grad - mult * powered
            defect = float(np.max(np.abs(direction)))
            if defect <= tolerance * max(1.0, m * fval):
                break
            cand = arr
            cval = fval
            while step > 1e-18:
                cand = np.maximum(arr + step * direction, 0.0)
                norm = _lm_norm(cand, m)
                if norm > 0.0:
                    cand /= norm
                    cval = value(cand)
                    if cval >= fval:
                        break
                step *= 0.5
            if step <= 1e-18:
                break
            if cval - fval <= 1e-15 * max(1.0, fval):
                stall += 1
            else:
                stall = 0
            arr, fval = cand, cval
            if stall >= 50:
                break
            step = min(step * 1.5, 4.0)
        best = max(best, fval)
    return m * best


def residual_at(hypergraph: Hypergraph, values, value: float) -> float:
    """Max-norm defect of the eigen equation at a candidate (vector, value)."""
    arr = _as_vector(hypergraph, values)
    applied = tensor_apply(hypergraph, arr)
    return float(np.max(np.abs(applied - value * arr ** (hypergraph.rank - 1))))


def vector_digest(vector: Sequence[float]) -> str:
    """Hash of the canonical 12-digit decimal rendering of the vector."""
    rendered = ",".join(format(float(t), ".12e") for t in vector)
    return hashlib.sha256(rendered.encode("ascii")).hexdigest()


def report_record(pair: EigenPair, family: str, n: int | None) -> dict:
    """Flat JSON-ready record of a solved eigenpair."""
    return {
        "family": family,
        "n": n,
        "lambda_lo": pair.value_lo,
        "lambda_hi": pair.value_hi,
        "residual": pair.residual,
        "iterations": pair.iterations,
        "vector_digest": vector_digest(pair.vector),
    }
