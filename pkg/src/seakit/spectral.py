"""Spectral machinery over an abstract context.

A context is any model handle exposing addition, scalar action, order,
compression, and a Rickart map (kernel projection).  The engine builds
spectral families as exact step functions, reconstructs elements from
them, produces dyadic simple approximations, orthogonal decompositions,
and comparability witnesses.  The matrix context lives here; the fuzzy
context is registered from its own module.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, Tolerances
from .linalg import cluster_indices, eigh, frobenius, hermitian_part
from . import matrices as mx


class UnsupportedContextError(ValueError):
    """Input type has no registered context or the context lacks a
    Rickart map."""


def _raw_of(p) -> np.ndarray:
    if hasattr(p, "matrix"):
        return p.matrix
    if hasattr(p, "values"):
        return p.values
    return np.asarray(p)


class MatrixContext:
    """Hermitian matrices with p a p compressions and kernel projections."""

    model = "matrix"
    has_rickart = True

    def __init__(self, tol: Tolerances = DEFAULT):
        self.tol = tol

    def raw(self, v) -> np.ndarray:
        if isinstance(v, mx.Effect):
            return v.matrix
        return hermitian_part(np.asarray(v))

    def decomposition(self, v):
        if isinstance(v, mx.Effect):
            return v.decomposition
        return eigh(self.raw(v), self.tol)

    def one_like(self, v) -> np.ndarray:
        n = self.raw(v).shape[0]
        return np.eye(n, dtype=np.complex128)

    def zero_like(self, v) -> np.ndarray:
        n = self.raw(v).shape[0]
        return np.zeros((n, n), dtype=np.complex128)

    def wrap_projection(self, raw: np.ndarray) -> mx.Projection:
        return mx.Projection(raw, tol=self.tol, validate=False)

    def zero_proj(self, v) -> mx.Projection:
        return self.wrap_projection(self.zero_like(v))

    def shift(self, v, lam: float) -> np.ndarray:
        m = self.raw(v)
        return m - lam * np.eye(m.shape[0])

    def positive_part(self, v) -> np.ndarray:
        d = eigh(self.raw(v), self.tol)
        return d.apply(lambda x: np.clip(x, 0.0, None))

    def rickart(self, v) -> mx.Projection:
        return mx.rickart(v if isinstance(v, mx.Effect) else self.raw(v),
                          self.tol)

    def support(self, v) -> mx.Projection:
        return mx.projection_cover(v if isinstance(v, mx.Effect)
                                   else self.raw(v), self.tol)

    def complement(self, p) -> np.ndarray:
        raw = _raw_of(p)
        return np.eye(raw.shape[0]) - raw

    def spectral_values(self, v) -> np.ndarray:
        return np.asarray(self.decomposition(v).cluster_values())

    def add(self, a, b) -> np.ndarray:
        return _raw_of(a) + _raw_of(b)

    def sub(self, a, b) -> np.ndarray:
        return _raw_of(a) - _raw_of(b)

    def scale(self, lam: float, v) -> np.ndarray:
        return lam * _raw_of(v)

    def norm(self, v) -> float:
        vals = eigh(self.raw(v), self.tol).values
        return float(max(abs(vals[0]), abs(vals[-1])))

    def residual(self, a, b) -> float:
        return frobenius(_raw_of(a) - _raw_of(b))

    def leq(self, a, b, slack: float | None = None) -> bool:
        return mx.psd(self.sub(b, a), slack, self.tol)

    def commutes(self, a, b) -> bool:
        am, bm = _raw_of(a), _raw_of(b)
        return frobenius(am @ bm - bm @ am) <= self.tol.comm

    def compress(self, p, a) -> np.ndarray:
        praw = _raw_of(p)
        return hermitian_part(praw @ _raw_of(a) @ praw)

    def joint_clusters(self, e, f) -> list[tuple[float, float, mx.Projection]]:
        vectors, xvals, yvals = mx.joint_eigenbasis(e, f, self.tol)
        n = vectors.shape[0]
        width = self.tol.cluster * max(1.0, float(np.max(np.abs(xvals)) +
                                                  np.max(np.abs(yvals))))
        out = []
        for xidx in cluster_indices(xvals, width):
            sub = list(xidx)
            for yrel in cluster_indices(yvals[sub], width):
                cols = [sub[i] for i in yrel]
                block = vectors[:, cols]
                mat = hermitian_part(block @ block.conj().T)
                proj = mx.Projection(mat, tol=self.tol, validate=False)
                out.append((float(np.mean(xvals[cols])),
                            float(np.mean(yvals[cols])), proj))
        return out

    def proj_rank(self, p) -> int:
        return int(round(float(np.real(np.trace(_raw_of(p))))))

    def proj_json(self, p) -> dict:
        raw = _raw_of(p)
        out = {"dim": raw.shape[0], "re": np.real(raw).tolist()}
        im = np.imag(raw)
        if np.any(im != 0.0):
            out["im"] = im.tolist()
        return out


def resolve_context(v, context=None, tol: Tolerances = DEFAULT):
    """Pick the model context for an element, or validate a given one."""
    if context is None:
        arr = None
        if isinstance(v, mx.Effect):
            context = MatrixContext(tol)
        elif hasattr(v, "values") and getattr(v, "space", None) is not None:
            from .fuzzy import FuzzyContext
            context = FuzzyContext(tol)
        else:
            arr = np.asarray(v)
            if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
                context = MatrixContext(tol)
            elif arr.ndim == 1:
                from .fuzzy import FuzzyContext
                context = FuzzyContext(tol)
            else:
                raise UnsupportedContextError(
                    f"no spectral context for input of type {type(v).__name__}")
    if not getattr(context, "has_rickart", False):
        raise UnsupportedContextError(
            "context does not expose a Rickart map")
    return context


@dataclass(frozen=True)
class SpectralFamily:
    """Right-continuous step function of projections.

    `projections[0]` is the zero projection (the value below the lowest
    breakpoint) and `projections[k]` is the value on
    [breakpoints[k-1], breakpoints[k]).
    """

    breakpoints: tuple[float, ...]
    projections: tuple
    model: str

    @property
    def L(self) -> float:
        return self.breakpoints[0]

    @property
    def U(self) -> float:
        return self.breakpoints[-1]

    def at(self, lam: float):
        idx = bisect.bisect_right(self.breakpoints, lam)
        return self.projections[idx]

    def jump(self, k: int) -> np.ndarray:
        """Raw jump at breakpoint k (1-based): p(k) - p(k-1)."""
        if not 1 <= k <= len(self.breakpoints):
            raise IndexError("jump index out of range")
        return _raw_of(self.projections[k]) - _raw_of(self.projections[k - 1])

    def _rank(self, p) -> int:
        raw = _raw_of(p)
        if raw.ndim == 2:
            return int(round(float(np.real(np.trace(raw)))))
        return int(round(float(np.sum(raw))))

    def to_json_dict(self) -> dict:
        projs = []
        for p in self.projections:
            raw = _raw_of(p)
            if raw.ndim == 2:
                doc = {"dim": raw.shape[0], "re": np.real(raw).tolist()}
                im = np.imag(raw)
                if np.any(im != 0.0):
                    doc["im"] = im.tolist()
            else:
                doc = {"space": int(raw.shape[0]), "values": raw.tolist()}
            projs.append(doc)
        return {
            "model": self.model,
            "L": self.L,
            "U": self.U,
            "breakpoints": list(self.breakpoints),
            "projections": projs,
        }

    def csv_lines(self, points: int = 101, lo: float = 0.0,
                  hi: float = 1.0) -> list[str]:
        lines = ["lambda,rank"]
        for i in range(points):
            lam = lo + (hi - lo) * i / (points - 1) if points > 1 else lo
            lines.append(f"{lam:.6f},{self._rank(self.at(lam))}")
        return lines


@dataclass(frozen=True)
class SpectralBounds:
    L: float
    U: float


@dataclass(frozen=True)
class OrthogonalDecomposition:
    """Split v = v_plus - v_minus through a commuting projection p."""

    v_plus: np.ndarray
    v_minus: np.ndarray
    p: object


@dataclass(frozen=True)
class ComparabilityWitness:
    """Projection comparing a commuting pair sidewise.

    `degenerate` marks ties between the paired values, where more than
    one witness exists and the tie-break put the tied part under p.
    """

    p: object
    degenerate: bool = False


@dataclass(frozen=True)
class ReducedRepresentation:
    """Strictly increasing coefficients with orthogonal projections
    summing to one."""

    coefficients: tuple[float, ...]
    projections: tuple


def spectral_family(v, context=None, tol: Tolerances = DEFAULT
                    ) -> SpectralFamily:
    """Family of kernel projections of the shifted positive parts.

    Each step is computed from the definition (Rickart map of the positive
    part) and cross-checked against the running sum of eigenprojections;
    disagreement raises ArithmeticError.
    """
    ctx = resolve_context(v, context, tol)
    values = ctx.spectral_values(v)
    raw = ctx.raw(v)
    steps = [ctx.zero_proj(v)]
    cum = ctx.zero_like(v)
    for lam in values:
        shifted = ctx.shift(raw, float(lam))
        step = ctx.rickart(ctx.positive_part(shifted))
        cum = ctx.add(cum, ctx.rickart(shifted))
        gap = ctx.residual(step, cum)
        if gap > ctx.tol.check:
            raise ArithmeticError(
                f"spectral family routes disagree at {lam:.6g}: {gap:.3e}")
        steps.append(step)
    top = ctx.residual(steps[-1], ctx.one_like(v))
    if top > ctx.tol.check:
        raise ArithmeticError(f"family does not reach one: {top:.3e}")
    return SpectralFamily(tuple(float(x) for x in values), tuple(steps),
                          ctx.model)


def family_from_representation(coefficients, projections, model: str
                               ) -> SpectralFamily:
    """Closed-form family: cumulative sums of the given projections.

    Independent of the Rickart route; used to cross-check engine output
    against representations obtained elsewhere.
    """
    raws = [_raw_of(p) for p in projections]
    if not raws:
        raise ValueError("at least one projection required")
    steps = [np.zeros_like(raws[0])]
    for r in raws:
        steps.append(steps[-1] + r)
    return SpectralFamily(tuple(float(c) for c in coefficients),
                          tuple(steps), model)


def family_from_json(doc: dict) -> SpectralFamily:
    """Inverse of SpectralFamily.to_json_dict."""
    model = doc["model"]
    projs = []
    for p in doc["projections"]:
        if "values" in p:
            projs.append(np.asarray(p["values"], dtype=float))
        else:
            re = np.asarray(p["re"], dtype=float)
            im = np.asarray(p.get("im", np.zeros_like(re)), dtype=float)
            projs.append(re + 1j * im)
    return SpectralFamily(tuple(float(b) for b in doc["breakpoints"]),
                          tuple(projs), model)


def eigenprojection(v, lam: float, context=None, tol: Tolerances = DEFAULT):
    """Kernel projection of v - lam; zero unless lam is an eigenvalue."""
    ctx = resolve_context(v, context, tol)
    return ctx.rickart(ctx.shift(ctx.raw(v), lam))


def spectral_bounds(v, context=None, tol: Tolerances = DEFAULT
                    ) -> SpectralBounds:
    """Least and greatest spectral values, cross-checked two ways."""
    ctx = resolve_context(v, context, tol)
    values = ctx.spectral_values(v)
    lo, hi = float(values[0]), float(values[-1])
    one = ctx.one_like(v)
    if not (ctx.leq(ctx.scale(lo, one), v) and ctx.leq(v, ctx.scale(hi, one))):
        raise ArithmeticError("order-unit bounds failed the sandwich check")
    fam = spectral_family(v, ctx, tol)
    fam_hi = None
    for k, step in enumerate(fam.projections):
        if k >= 1 and ctx.residual(step, one) <= ctx.tol.check:
            fam_hi = fam.breakpoints[k - 1]
            break
    if fam_hi is None or abs(fam_hi - hi) > ctx.tol.check \
            or abs(fam.L - lo) > ctx.tol.check:
        raise ArithmeticError("family characterization disagrees with bounds")
    return SpectralBounds(lo, hi)


def reconstruct(family: SpectralFamily, mesh: float | None = None):
    """Stieltjes sum over a partition with right-endpoint tags.

    With mesh=None the partition is exactly the breakpoints and the sum
    telescopes to the element; with a positive mesh the partition covers
    [L - mesh, U] with step `mesh` and the error is at most `mesh`.
    """
    bps = family.breakpoints
    jumps = [family.jump(k) for k in range(1, len(bps) + 1)]
    if mesh is None:
        tags = list(bps)
    else:
        if mesh <= 0:
            raise ValueError("mesh must be positive")
        lo, hi = bps[0], bps[-1]
        count = max(1, math.ceil((hi - lo + mesh) / mesh - 1e-12))
        points = [hi - (count - i) * mesh for i in range(count + 1)]
        tags = []
        for b in bps:
            idx = bisect.bisect_left(points, b)
            tags.append(points[min(idx, count)])
    acc = np.zeros_like(jumps[0])
    for tag, jump in zip(tags, jumps):
        acc = acc + tag * jump
    return acc


def simple_approximation(a, n: int, context=None, tol: Tolerances = DEFAULT):
    """Dyadic lower staircase: floor the spectral values at 2^-n.

    The eigenprojections carry the largest multiple of 2^-n below their
    value, so the results ascend with n and sit within 2^-n of a.
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    ctx = resolve_context(a, context, tol)
    values = np.clip(ctx.spectral_values(a), 0.0, 1.0)
    raw = ctx.raw(a)
    scale = 2.0 ** n
    acc = ctx.zero_like(a)
    for lam in values:
        coeff = math.floor(float(lam) * scale + 1e-12) / scale
        proj = ctx.rickart(ctx.shift(raw, float(lam)))
        acc = ctx.add(acc, ctx.scale(coeff, proj))
    return acc


def orthogonal_decomposition(v, context=None, tol: Tolerances = DEFAULT
                             ) -> OrthogonalDecomposition:
    """Unique split v = v_plus - v_minus with orthogonal positive parts."""
    ctx = resolve_context(v, context, tol)
    raw = ctx.raw(v)
    p = ctx.support(ctx.positive_part(raw))
    comp = ctx.complement(p)
    v_plus = ctx.compress(p, raw)
    v_minus = ctx.scale(-1.0, ctx.compress(comp, raw))
    checks = (
        ctx.residual(ctx.sub(raw, ctx.sub(v_plus, v_minus)),
                     ctx.zero_like(v)),
        ctx.residual(ctx.compress(p, v_minus), ctx.zero_like(v)),
        ctx.residual(ctx.compress(comp, v_plus), ctx.zero_like(v)),
    )
    worst = max(checks)
    if worst > ctx.tol.check:
        raise ArithmeticError(f"decomposition identities failed: {worst:.3e}")
    return OrthogonalDecomposition(v_plus, v_minus, p)


def sign_witness_projections(v, context=None, tol: Tolerances = DEFAULT,
                             limit: int = 64) -> list[np.ndarray]:
    """Projections q with the whole positive part under q and the negative
    part under its complement; one per subset of the kernel clusters."""
    ctx = resolve_context(v, context, tol)
    raw = ctx.raw(v)
    values = ctx.spectral_values(v)
    pos = ctx.zero_like(v)
    zero_projs = []
    for lam in values:
        proj = ctx.rickart(ctx.shift(raw, float(lam)))
        if lam > ctx.tol.kernel:
            pos = ctx.add(pos, proj)
        elif abs(lam) <= ctx.tol.kernel:
            zero_projs.append(_raw_of(proj))
    out = []
    for mask in range(2 ** len(zero_projs)):
        if len(out) >= limit:
            break
        q = pos.copy()
        for i, zp in enumerate(zero_projs):
            if mask >> i & 1:
                q = q + zp
        out.append(q)
    return out


def comparability_witness(e, f, context=None, tol: Tolerances = DEFAULT
                          ) -> ComparabilityWitness:
    """Projection p with the e-part below the f-part under p and the
    reverse under its complement.

    Built from joint eigenprojections: p collects the joint clusters where
    the e-value does not exceed the f-value (ties included, flagged as
    degenerate).  Raises NotCommutingError for non-commuting input.
    """
    ctx = resolve_context(e, context, tol)
    clusters = ctx.joint_clusters(e, f)
    width = ctx.tol.cluster * max(
        1.0, max(abs(ev) + abs(fv) for ev, fv, _ in clusters))
    raw_p = None
    degenerate = False
    for ev, fv, proj in clusters:
        if abs(ev - fv) <= width:
            degenerate = True
        if ev <= fv + width:
            raw_p = _raw_of(proj) if raw_p is None else raw_p + _raw_of(proj)
    if raw_p is None:
        raw_p = ctx.zero_like(e)
    p = ctx.wrap_projection(raw_p)
    comp = ctx.complement(p)
    ok = (ctx.leq(ctx.compress(p, e), ctx.compress(p, f))
          and ctx.leq(ctx.compress(comp, f), ctx.compress(comp, e)))
    if not ok:
        raise ArithmeticError("constructed witness failed its defining order")
    return ComparabilityWitness(p, degenerate)


def reduced_representation(a, context=None, tol: Tolerances = DEFAULT
                           ) -> ReducedRepresentation:
    """Distinct spectral values with their eigenprojections."""
    ctx = resolve_context(a, context, tol)
    raw = ctx.raw(a)
    values = ctx.spectral_values(a)
    projs = [ctx.rickart(ctx.shift(raw, float(lam))) for lam in values]
    total = ctx.zero_like(a)
    for p in projs:
        total = ctx.add(total, p)
    gap = ctx.residual(total, ctx.one_like(a))
    if gap > ctx.tol.check:
        raise ArithmeticError(f"eigenprojections do not sum to one: {gap:.3e}")
    return ReducedRepresentation(tuple(float(x) for x in values),
                                 tuple(projs))
