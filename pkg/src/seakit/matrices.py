"""Hermitian-matrix effects with the square-root sequential product.

An effect is a Hermitian matrix with spectrum inside [0, 1].  The sequential
product is a o b = sqrt(a) b sqrt(a); compressions are the maps
a -> p a p for projections p.  Eigensystems are cached on the wrapper
objects because nearly every operation here goes through the spectral
theorem.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from .config import DEFAULT, Tolerances
from .linalg import (
    EigenDecomposition,
    cluster_indices,
    decomposition_from,
    eigh,
    frobenius,
    hermitian_part,
    require_hermitian,
)


class DimensionMismatchError(ValueError):
    """Operands live on spaces of different dimension."""


class NotAnEffectError(ValueError):
    """Matrix has an eigenvalue outside [0, 1]."""

    def __init__(self, message: str, eigenvalue: float | None = None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NotAProjectionError(ValueError):
    """Matrix is not idempotent within tolerance."""


class NotAStateError(ValueError):
    """Matrix is not a positive trace-one state."""


class NotCommutingError(ValueError):
    """Operation requires a commuting pair."""


class CommutationMismatchError(RuntimeError):
    """The two commutation tests disagreed near the tolerance boundary."""


def _same_dim(a: "Effect", b: "Effect") -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimensions differ: {a.dim} vs {b.dim}")


class Effect:
    """Hermitian matrix with spectrum in [0, 1] (within the psd slack)."""

    __slots__ = ("matrix", "tol", "_decomp", "_sqrt")

    def __init__(self, matrix: np.ndarray, *, tol: Tolerances = DEFAULT,
                 validate: bool = True,
                 decomposition: EigenDecomposition | None = None):
        self.tol = tol
        mat = require_hermitian(matrix) if validate else hermitian_part(matrix)
        mat.flags.writeable = False
        self.matrix = mat
        self._decomp = decomposition
        self._sqrt = None
        if validate:
            self._check_range()

    def _check_range(self) -> None:
        vals = self.decomposition.values
        if vals[0] < -self.tol.psd:
            raise NotAnEffectError(
                f"eigenvalue {vals[0]:.6g} below 0", eigenvalue=float(vals[0]))
        if vals[-1] > 1.0 + self.tol.psd:
            raise NotAnEffectError(
                f"eigenvalue {vals[-1]:.6g} above 1", eigenvalue=float(vals[-1]))

    @classmethod
    def from_eigensystem(cls, values: np.ndarray, vectors: np.ndarray,
                         tol: Tolerances = DEFAULT) -> "Effect":
        """Trusted constructor: builds the matrix and caches its eigensystem."""
        decomp = decomposition_from(values, vectors, tol)
        mat = decomp.reconstruct()
        return cls(mat, tol=tol, validate=False, decomposition=decomp)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def decomposition(self) -> EigenDecomposition:
        if self._decomp is None:
            self._decomp = eigh(self.matrix, self.tol)
        return self._decomp

    def eigenvalues(self) -> np.ndarray:
        return self.decomposition.values

    def clamped_values(self) -> np.ndarray:
        return np.clip(self.decomposition.values, 0.0, 1.0)

    def sqrt_matrix(self) -> np.ndarray:
        if self._sqrt is None:
            d = self.decomposition
            vals = np.sqrt(np.clip(d.values, 0.0, 1.0))
            self._sqrt = hermitian_part((d.vectors * vals) @ d.vectors.conj().T)
        return self._sqrt

    def complement(self) -> "Effect":
        """The orthosupplement 1 - a."""
        mat = np.eye(self.dim) - self.matrix
        decomp = None
        if self._decomp is not None:
            decomp = decomposition_from(1.0 - self._decomp.values,
                                        self._decomp.vectors, self.tol)
        return Effect(mat, tol=self.tol, validate=False, decomposition=decomp)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


class Projection(Effect):
    """Effect that is idempotent within tolerance."""

    def __init__(self, matrix: np.ndarray, *, tol: Tolerances = DEFAULT,
                 validate: bool = True,
                 decomposition: EigenDecomposition | None = None):
        super().__init__(matrix, tol=tol, validate=validate,
                         decomposition=decomposition)
        if validate:
            defect = frobenius(self.matrix @ self.matrix - self.matrix)
            if defect > tol.proj:
                raise NotAProjectionError(
                    f"not idempotent: ||P^2 - P|| = {defect:.3e}")

    @classmethod
    def from_columns(cls, cols: np.ndarray, dim: int,
                     tol: Tolerances = DEFAULT) -> "Projection":
        """Orthogonal projection onto the span of orthonormal columns."""
        n = dim
        if cols.shape[1] == 0:
            mat = np.zeros((n, n), dtype=np.complex128)
            values = np.zeros(n)
            vectors = np.eye(n, dtype=np.complex128)
            return cls(mat, tol=tol, validate=False,
                       decomposition=decomposition_from(values, vectors, tol))
        mat = hermitian_part(cols @ cols.conj().T)
        return cls(mat, tol=tol, validate=False)

    @property
    def rank(self) -> int:
        return int(round(float(np.real(np.trace(self.matrix)))))

    def complement(self) -> "Projection":
        mat = np.eye(self.dim) - self.matrix
        decomp = None
        if self._decomp is not None:
            decomp = decomposition_from(1.0 - self._decomp.values,
                                        self._decomp.vectors, self.tol)
        return Projection(mat, tol=self.tol, validate=False, decomposition=decomp)


class TraceState:
    """Density matrix: positive semidefinite with unit trace."""

    __slots__ = ("matrix", "tol")

    def __init__(self, matrix: np.ndarray, *, tol: Tolerances = DEFAULT,
                 validate: bool = True):
        mat = require_hermitian(matrix)
        if validate:
            tr = float(np.real(np.trace(mat)))
            if abs(tr - 1.0) > tol.trace:
                raise NotAStateError(f"trace is {tr:.12g}, expected 1")
            lo = float(eigh(mat, tol).values[0])
            if lo < -tol.psd:
                raise NotAStateError(f"negative eigenvalue {lo:.6g}")
        mat.flags.writeable = False
        self.matrix = mat
        self.tol = tol


def as_effect(x, tol: Tolerances = DEFAULT) -> Effect:
    if isinstance(x, Effect):
        return x
    return Effect(np.asarray(x), tol=tol)


def as_matrix(x) -> np.ndarray:
    if isinstance(x, Effect):
        return x.matrix
    if isinstance(x, TraceState):
        return x.matrix
    return np.asarray(x, dtype=np.complex128)


def validate_effect(matrix, tol: Tolerances = DEFAULT) -> Effect:
    """Check 0 <= M <= 1 and wrap the matrix as an Effect."""
    return Effect(np.asarray(matrix), tol=tol, validate=True)


def validate_projection(matrix, tol: Tolerances = DEFAULT) -> Projection:
    return Projection(np.asarray(matrix), tol=tol, validate=True)


def sqrt_effect(a, tol: Tolerances = DEFAULT) -> Effect:
    """Positive square root, through the spectral theorem."""
    a = as_effect(a, tol)
    d = a.decomposition
    vals = np.sqrt(np.clip(d.values, 0.0, 1.0))
    return Effect(a.sqrt_matrix(), tol=a.tol, validate=False,
                  decomposition=decomposition_from(vals, d.vectors, a.tol))


def seq_product(a, b, tol: Tolerances = DEFAULT) -> Effect:
    """Sequential product sqrt(a) b sqrt(a)."""
    a = as_effect(a, tol)
    b = as_effect(b, tol)
    _same_dim(a, b)
    s = a.sqrt_matrix()
    return Effect(hermitian_part(s @ b.matrix @ s), tol=a.tol, validate=False)


def jordan_product(a, b, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Symmetrized ordinary product (a b + b a) / 2.

    Not a sequential product; kept as a deliberately broken control for the
    verifier.  The result need not be an effect, so it is a bare matrix.
    """
    am = as_matrix(a)
    bm = as_matrix(b)
    return hermitian_part(am @ bm + bm @ am) / 2.0


def compression(p, a, tol: Tolerances = DEFAULT) -> Effect:
    """The map a -> p a p for a projection p."""
    if not isinstance(p, Projection):
        p = validate_projection(as_matrix(p), tol)
    a = as_effect(a, tol)
    _same_dim(p, a)
    return Effect(hermitian_part(p.matrix @ a.matrix @ p.matrix),
                  tol=a.tol, validate=False)


def _kernel_projection(decomp: EigenDecomposition, dim: int, keep: np.ndarray,
                       tol: Tolerances) -> Projection:
    cols = decomp.vectors[:, keep]
    othr = decomp.vectors[:, ~keep]
    k = cols.shape[1]
    values = np.concatenate([np.zeros(dim - k), np.ones(k)])
    vectors = np.concatenate([othr, cols], axis=1)
    mat = hermitian_part(cols @ cols.conj().T) if k else np.zeros((dim, dim),
                                                                  dtype=complex)
    return Projection(mat, tol=tol, validate=False,
                      decomposition=EigenDecomposition(
                          values, vectors,
                          cluster_indices(values, tol.cluster)))


def rickart(v, tol: Tolerances = DEFAULT) -> Projection:
    """Projection onto the kernel: eigenvalues with |lambda| <= kernel tol."""
    if isinstance(v, Effect):
        d = v.decomposition
        dim = v.dim
    else:
        m = require_hermitian(np.asarray(v))
        d = eigh(m, tol)
        dim = m.shape[0]
    keep = np.abs(d.values) <= tol.kernel
    return _kernel_projection(d, dim, keep, tol)


def projection_cover(a, tol: Tolerances = DEFAULT) -> Projection:
    """Support projection: the least projection above the effect."""
    if isinstance(a, Effect):
        d = a.decomposition
        dim = a.dim
        if d.values[0] < -tol.psd:
            raise NotAnEffectError("support is defined for positive elements",
                                   eigenvalue=float(d.values[0]))
    else:
        m = require_hermitian(np.asarray(a))
        d = eigh(m, tol)
        dim = m.shape[0]
        if d.values[0] < -tol.psd:
            raise NotAnEffectError("support is defined for positive elements",
                                   eigenvalue=float(d.values[0]))
    keep = d.values > tol.kernel
    return _kernel_projection(d, dim, keep, tol)


def floor(a, tol: Tolerances = DEFAULT) -> Projection:
    """Largest projection below the effect: the eigenspace at 1.

    Computed as the kernel projection of a - 1, which re-diagonalizes the
    shifted matrix rather than reusing the effect's cached eigensystem.
    """
    a = as_effect(a, tol)
    shifted = a.matrix - np.eye(a.dim)
    return rickart(shifted, tol)


def floor_iterates(a, count: int, tol: Tolerances = DEFAULT) -> list[Effect]:
    """The sequence a, a o a, ..., up to the count-th sequential power."""
    if count < 1:
        raise ValueError("count must be at least 1")
    a = as_effect(a, tol)
    d = a.decomposition
    base = np.clip(d.values, 0.0, 1.0)
    out = [a]
    cur = a
    power = base.copy()
    for _ in range(count - 1):
        s = cur.sqrt_matrix()
        nxt_mat = hermitian_part(s @ a.matrix @ s)
        power = power * base
        # The product of commuting effects keeps the eigenbasis; seeding the
        # known eigensystem avoids re-diagonalizing every iterate.
        nxt = Effect(nxt_mat, tol=a.tol, validate=False,
                     decomposition=decomposition_from(power, d.vectors, a.tol))
        out.append(nxt)
        cur = nxt
    return out


def commutation_residuals(a, b, tol: Tolerances = DEFAULT) -> tuple[float, float]:
    """Residuals of the two commutation tests: sequential and ordinary."""
    a = as_effect(a, tol)
    b = as_effect(b, tol)
    _same_dim(a, b)
    seq_res = frobenius(seq_product(a, b).matrix - seq_product(b, a).matrix)
    lie_res = frobenius(a.matrix @ b.matrix - b.matrix @ a.matrix)
    return seq_res, lie_res


def commutes_seq(a, b, tol: Tolerances = DEFAULT) -> bool:
    """Whether a o b = b o a; both tests are computed and must agree."""
    seq_res, lie_res = commutation_residuals(a, b, tol)
    seq_ok = seq_res <= tol.comm
    lie_ok = lie_res <= tol.comm
    if seq_ok != lie_ok:
        raise CommutationMismatchError(
            f"sequential residual {seq_res:.3e} and matrix residual "
            f"{lie_res:.3e} straddle the tolerance {tol.comm:.1e}")
    return seq_ok


def bicommutant_projections(a, tol: Tolerances = DEFAULT) -> list[Projection]:
    """Cluster eigenprojections; their sub-sums generate all projections
    commuting with everything that commutes with the effect."""
    a = as_effect(a, tol)
    d = a.decomposition
    out = []
    for k in range(len(d.clusters)):
        keep = np.zeros(a.dim, dtype=bool)
        keep[list(d.clusters[k])] = True
        out.append(_kernel_projection(d, a.dim, keep, tol))
    return out


def subsum_projections(projections: list[Projection], limit: int | None = None):
    """All sums of subsets of pairwise orthogonal projections, as matrices.

    Subsets are enumerated in bitmask order, so the empty sum (zero) comes
    first and the full sum last.
    """
    k = len(projections)
    total = 2 ** k
    if limit is not None:
        total = min(total, limit)
    dim = projections[0].dim if projections else 0
    for mask in range(total):
        acc = np.zeros((dim, dim), dtype=np.complex128)
        for i in range(k):
            if mask >> i & 1:
                acc = acc + projections[i].matrix
        yield acc


def state_eval(s: TraceState, a, tol: Tolerances = DEFAULT) -> float:
    """Evaluate tr(rho a); the result is a probability."""
    a = as_effect(a, tol)
    if s.matrix.shape[0] != a.dim:
        raise DimensionMismatchError("state and effect dimensions differ")
    val = float(np.real(np.trace(s.matrix @ a.matrix)))
    if val < -tol.check or val > 1.0 + tol.check:
        raise ValueError(f"state evaluation {val:.6g} escapes [0, 1]")
    return min(1.0, max(0.0, val))


def min_eig(x, tol: Tolerances = DEFAULT) -> float:
    m = as_matrix(x)
    return float(eigh(m, tol).values[0])


def psd(x, slack: float | None = None, tol: Tolerances = DEFAULT) -> bool:
    if slack is None:
        slack = tol.check
    return min_eig(x, tol) >= -slack


def leq(a, b, slack: float | None = None, tol: Tolerances = DEFAULT) -> bool:
    """Effect order: b - a is positive semidefinite."""
    return psd(as_matrix(b) - as_matrix(a), slack, tol)


def joint_eigenbasis(x, y, tol: Tolerances = DEFAULT
                     ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Common eigenbasis of a commuting Hermitian pair.

    Returns (vectors, x values, y values) with one value pair per column.
    Raises NotCommutingError when the ordinary commutator is not negligible.
    """
    xm = as_matrix(x)
    ym = as_matrix(y)
    if frobenius(xm @ ym - ym @ xm) > tol.comm:
        raise NotCommutingError("matrices do not commute")
    dx = x.decomposition if isinstance(x, Effect) else eigh(xm, tol)
    n = xm.shape[0]
    vectors = np.zeros((n, n), dtype=np.complex128)
    xvals = np.zeros(n)
    yvals = np.zeros(n)
    reps = dx.cluster_values()
    col = 0
    for k, idx in enumerate(dx.clusters):
        cols = dx.vectors[:, list(idx)]
        block = hermitian_part(cols.conj().T @ ym @ cols)
        db = eigh(block, tol)
        refined = cols @ db.vectors
        m = len(idx)
        vectors[:, col:col + m] = refined
        xvals[col:col + m] = reps[k]
        yvals[col:col + m] = db.values
        col += m
    return vectors, xvals, yvals


def commuting_apply(x, y, fn, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Apply a two-argument spectral function to a commuting pair."""
    vectors, xvals, yvals = joint_eigenbasis(x, y, tol)
    vals = fn(xvals, yvals)
    return hermitian_part((vectors * vals) @ vectors.conj().T)


def commuting_meet(x, y, tol: Tolerances = DEFAULT) -> np.ndarray:
    return commuting_apply(x, y, np.minimum, tol)


def commuting_join(x, y, tol: Tolerances = DEFAULT) -> np.ndarray:
    return commuting_apply(x, y, np.maximum, tol)


def scale_effect(a: Effect, lam: float) -> Effect:
    """The convex action lam * a for lam in [0, 1]."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError("scalar must lie in [0, 1]")
    decomp = None
    if a._decomp is not None:
        decomp = decomposition_from(lam * a._decomp.values,
                                    a._decomp.vectors, a.tol)
    return Effect(lam * a.matrix, tol=a.tol, validate=False,
                  decomposition=decomp)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Product of plane rotations with random angles and phases."""
    q = np.eye(n, dtype=np.complex128)
    for _ in range(2):
        for p in range(n - 1):
            for r in range(p + 1, n):
                theta = rng.uniform(0.0, 2.0 * math.pi)
                phi = rng.uniform(0.0, 2.0 * math.pi)
                c = math.cos(theta)
                s = math.sin(theta)
                ph = complex(math.cos(phi), math.sin(phi))
                colp = q[:, p].copy()
                colr = q[:, r].copy()
                q[:, p] = c * ph * colp - s * colr
                q[:, r] = s * ph * colp + c * colr
    phases = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, n))
    return q * phases


class EffectSampler:
    """Deterministic random matrices for tests and verifier suites.

    Unitaries are products of plane rotations with random angles and phases;
    effects and projections are built from a sampled unitary and explicit
    eigenvalue lists, so their eigensystems are known up front.
    """

    def __init__(self, seed: int | np.random.SeedSequence, dim: int,
                 tol: Tolerances = DEFAULT):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if not isinstance(seed, np.random.SeedSequence):
            seed = np.random.SeedSequence(seed)
        self.rng = np.random.Generator(np.random.PCG64(seed))
        self.dim = dim
        self.tol = tol

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return float(self.rng.uniform(lo, hi))

    def dyadic(self, bits: int = 8) -> float:
        return float(self.rng.integers(0, 2 ** bits + 1)) / 2 ** bits

    def unitary(self) -> np.ndarray:
        return random_unitary(self.rng, self.dim)

    def effect(self, values: np.ndarray | None = None,
               unitary: np.ndarray | None = None) -> Effect:
        if values is None:
            values = self.rng.uniform(0.0, 1.0, self.dim)
        if unitary is None:
            unitary = self.unitary()
        return Effect.from_eigensystem(np.asarray(values, dtype=float),
                                       unitary, self.tol)

    def projection(self, rank: int | None = None,
                   unitary: np.ndarray | None = None) -> Projection:
        n = self.dim
        if rank is None:
            rank = int(self.rng.integers(1, n)) if n > 1 else 1
        if unitary is None:
            unitary = self.unitary()
        values = np.zeros(n)
        values[:rank] = 1.0
        values = self.rng.permutation(values)
        decomp = decomposition_from(values, unitary, self.tol)
        return Projection(decomp.reconstruct(), tol=self.tol, validate=False,
                          decomposition=decomp)

    def separated_values(self, count: int, gap: float = 0.1,
                         lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
        """Ascending values on a jittered grid with pairwise gaps >= 0.6*gap."""
        grid = np.arange(lo, hi + 1e-12, gap)
        if count > len(grid):
            raise ValueError("not enough grid room for requested separation")
        picks = np.sort(self.rng.choice(len(grid), size=count, replace=False))
        vals = grid[picks] + self.rng.uniform(-gap / 5.0, gap / 5.0, count)
        return np.clip(vals, lo, hi)

    def simple_effect(self, max_levels: int = 5, gap: float = 0.12) -> Effect:
        """Effect with few well-separated eigenvalue levels."""
        n = self.dim
        k = int(self.rng.integers(1, min(n, max_levels) + 1))
        levels = self.separated_values(k, gap)
        counts = np.ones(k, dtype=int)
        for _ in range(n - k):
            counts[self.rng.integers(0, k)] += 1
        values = np.repeat(levels, counts)
        return self.effect(values=values)

    def commuting(self, count: int = 2,
                  values: list[np.ndarray] | None = None) -> tuple[Effect, ...]:
        u = self.unitary()
        out = []
        for i in range(count):
            vals = (values[i] if values is not None
                    else self.rng.uniform(0.0, 1.0, self.dim))
            out.append(self.effect(values=vals, unitary=u))
        return tuple(out)

    def commuting_projection_effect(self, rank: int | None = None
                                    ) -> tuple[Projection, Effect]:
        u = self.unitary()
        p = self.projection(rank=rank, unitary=u)
        a = self.effect(unitary=u)
        return p, a

    def orthogonal_pair(self) -> tuple[Effect, Effect]:
        """Two effects with orthogonal supports (their product vanishes)."""
        n = self.dim
        u = self.unitary()
        k = int(self.rng.integers(1, n)) if n > 1 else 1
        va = np.zeros(n)
        vb = np.zeros(n)
        va[:k] = self.rng.uniform(0.05, 1.0, k)
        vb[k:] = self.rng.uniform(0.05, 1.0, n - k)
        return (self.effect(values=va, unitary=u),
                self.effect(values=vb, unitary=u))

    def effect_with_top(self, ones: int = 1, ceiling: float = 0.95) -> Effect:
        """Effect with an exact eigenvalue-one cluster and a spectral gap."""
        n = self.dim
        ones = min(ones, n)
        values = np.concatenate([
            np.ones(ones),
            self.rng.uniform(0.0, ceiling, n - ones),
        ])
        return self.effect(values=values)

    def hermitian(self, lo: float = -1.0, hi: float = 1.0,
                  zeros: int = 0) -> np.ndarray:
        """Random Hermitian matrix, optionally with an exact kernel."""
        n = self.dim
        zeros = min(zeros, n)
        values = np.concatenate([
            np.zeros(zeros),
            self.rng.uniform(lo, hi, n - zeros),
        ])
        u = self.unitary()
        return hermitian_part((u * values) @ u.conj().T)

    def state(self) -> TraceState:
        weights = self.rng.dirichlet(np.ones(self.dim))
        u = self.unitary()
        mat = hermitian_part((u * weights) @ u.conj().T)
        return TraceState(mat, tol=self.tol)

    def refined_commuting(self, hi: float = 1.0
                          ) -> tuple[Effect, Effect, Effect]:
        """Triple (c, a, b) where a and b both commute with c.

        c has constant blocks in a shared basis; a and b refine those
        blocks independently, so they rarely commute with each other.
        """
        n = self.dim
        if n == 1:
            c = self.effect(values=[self.uniform()])
            a = self.effect(values=[self.uniform(0.0, hi)])
            b = self.effect(values=[self.uniform(0.0, hi)])
            return c, a, b
        k = int(self.rng.integers(2, min(n, 3) + 1))
        sizes = np.ones(k, dtype=int)
        for _ in range(n - k):
            sizes[self.rng.integers(0, k)] += 1
        u = self.unitary()
        levels = self.separated_values(k, gap=0.15)
        c = self.effect(values=np.repeat(levels, sizes), unitary=u)

        def refined() -> Effect:
            cols = []
            vals = []
            start = 0
            for m in sizes:
                q = random_unitary(self.rng, int(m))
                cols.append(u[:, start:start + m] @ q)
                vals.append(self.rng.uniform(0.0, hi, int(m)))
                start += m
            vecs = np.concatenate(cols, axis=1)
            return Effect.from_eigensystem(np.concatenate(vals), vecs,
                                           self.tol)

        return c, refined(), refined()
