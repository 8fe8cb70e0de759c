"""Property suites: instance checks of the algebraic laws on the models.

Each suite samples deterministic random inputs, evaluates one statement
per check, and reports integer pass counts with a first witness for any
failure.  Suites accept a deliberately broken configuration (wrong
product, soft focus, wrong floor, merged clusters, corrupted tables) so
that negative controls can prove the checks are not vacuous.
"""
from __future__ import annotations

import math
import zlib
from fractions import Fraction

import numpy as np

from .config import DEFAULT, Tolerances
from .linalg import eigh, frobenius, operator_norm
from .report import CheckResult, SuiteReport
from . import fuzzy as fz
from . import matrices as mx
from . import spectral as sp
from . import tables as tb

ARCHIMEDEAN_RESOLUTION = 1_000_000
FLOOR_POWER = 50
APPROX_LEVELS = 10
MESHES = (0.1, 0.01, 0.001)

REQUIRED_STATEMENTS = (
    "E1", "E2", "E3", "E4",
    "S1", "S2", "S3", "S4", "S5",
    "convex:C1", "convex:C2", "convex:C3", "convex:C4",
    "de:compr", "cb:C1", "cb:C2p", "cb:C3",
    "le:comE",
    "le:sharp.i", "le:sharp.ii", "le:sharp.iii",
    "le:sharp.iv", "le:sharp.v", "le:sharp.vi",
    "le:aff",
    "lemma:projcover", "lemma:floor", "lemma:covex_floor",
    "de:projcov", "de:b-compar",
    "prop:decomp", "prop:commut", "coro:limit",
    "eq:spectresV", "thm:contexts", "propertyA",
)


def covered_statements(reports: list[SuiteReport]) -> set[str]:
    return {r.statement_id for rep in reports for r in rep.results}


def _seed_for(seed: int, suite: str, sid: str) -> np.random.SeedSequence:
    key = zlib.crc32(f"{suite}/{sid}".encode())
    return np.random.SeedSequence(entropy=int(seed), spawn_key=(key,))


class _Tally:
    """Per-statement accumulator; keeps the first failing witness."""

    __slots__ = ("samples", "passed", "max_residual", "witness")

    def __init__(self):
        self.samples = 0
        self.passed = 0
        self.max_residual = 0.0
        self.witness = None

    def tally(self, ok: bool, residual: float = 0.0, witness=None) -> None:
        self.samples += 1
        res = float(residual)
        if res > self.max_residual:
            self.max_residual = res
        if ok:
            self.passed += 1
        elif self.witness is None:
            self.witness = witness if witness is not None else {}


def _run_statement(report: SuiteReport, sid: str, model: str, body) -> None:
    t = _Tally()
    try:
        body(t)
    except Exception as exc:  # noqa: BLE001 - a crashing check is a failure
        t.tally(False, witness={"error": f"{type(exc).__name__}: {exc}"})
    report.add(CheckResult(sid, model, t.samples, t.passed,
                           t.max_residual, t.witness))


def _mat(m) -> dict:
    arr = np.asarray(mx.as_matrix(m))
    out = {"re": np.real(arr).round(12).tolist()}
    im = np.imag(arr)
    if np.any(im != 0.0):
        out["im"] = im.round(12).tolist()
    return out


def _vals(v) -> list:
    return np.asarray(v.values if isinstance(v, fz.FuzzySet) else v).tolist()


def _res(m, dim: int) -> float:
    return frobenius(np.asarray(m)) / dim


# ---------------------------------------------------------------------------
# sequential products, standard and broken


def _matrix_product(product: str, tol: Tolerances):
    if product == "standard":
        return lambda x, y: mx.seq_product(x, y, tol).matrix
    if product == "jordan":
        return lambda x, y: mx.jordan_product(x, y, tol)
    raise ValueError(f"unknown product {product!r}")


def _mv_product(product: str):
    if product == "standard":
        return lambda x, y: x.values * y.values
    if product == "lukasiewicz":
        return lambda x, y: np.maximum(0.0, x.values + y.values - 1.0)
    raise ValueError(f"unknown product {product!r}")


# ---------------------------------------------------------------------------
# matrix SEA suite


def five_way_statements(p: mx.Projection, a: mx.Effect,
                        tol: Tolerances = DEFAULT) -> dict:
    """The five equivalent compatibility statements for a projection and
    an effect, each evaluated independently.

    Returns booleans keyed by statement plus the largest residual among
    the equality-shaped clauses.
    """
    n = a.dim
    pm = p.matrix
    am = a.matrix
    eye = np.eye(n)
    comp = eye - pm
    inside = pm @ am @ pm
    outside = comp @ am @ comp
    residual = 0.0

    compress_below = mx.psd(am - inside, tol=tol)
    r_block = _res(am - inside - outside, n)
    block_sum = r_block <= tol.check
    r_off = _res(pm @ am @ comp, n)
    interval_sum = r_off <= tol.check
    mackey = (mx.psd(am - inside, tol=tol)
              and mx.psd(eye - am - pm + inside, tol=tol))
    residual = max(residual, min(r_block, tol.check),
                   min(r_off, tol.check))

    lie = frobenius(pm @ am - am @ pm)
    if lie <= tol.comm:
        meet_mat = mx.commuting_meet(p, a, tol)
        r_meet = _res(inside - meet_mat, n)
        meet = r_meet <= tol.check
        residual = max(residual, min(r_meet, tol.check))
    else:
        meet = False

    return {
        "compress_below": compress_below,
        "block_sum": block_sum,
        "interval_sum": interval_sum,
        "mackey": mackey,
        "meet": meet,
        "residual": residual,
    }


def _sharp_defect(a: mx.Effect) -> float:
    return _res(a.matrix @ a.matrix - a.matrix, a.dim)


def _sea_matrix(report: SuiteReport, dim: int, samples: int, seed: int,
                tol: Tolerances, product: str) -> None:
    prod = _matrix_product(product, tol)
    thr = tol.check
    eye = np.eye(dim)
    one = mx.Effect(eye, tol=tol, validate=False)

    def smp_for(sid: str) -> mx.EffectSampler:
        return mx.EffectSampler(_seed_for(seed, "sea", sid), dim, tol)

    def wrap(matrix) -> mx.Effect:
        return mx.Effect(matrix, tol=tol, validate=False)

    def s1(t: _Tally) -> None:
        smp = smp_for("S1")
        for k in range(samples):
            a = smp.effect()
            b = smp.effect(values=smp.rng.uniform(0.0, 0.5, dim))
            c = smp.effect(values=smp.rng.uniform(0.0, 0.5, dim))
            bc = wrap(b.matrix + c.matrix)
            r = _res(prod(a, bc) - prod(a, b) - prod(a, c), dim)
            t.tally(r <= thr, r, {"sample": k, "a": _mat(a), "b": _mat(b),
                                  "c": _mat(c)})

    def s2(t: _Tally) -> None:
        smp = smp_for("S2")
        for k in range(samples):
            a = smp.effect()
            r = max(_res(prod(one, a) - a.matrix, dim),
                    _res(prod(a, one) - a.matrix, dim))
            t.tally(r <= thr, r, {"sample": k, "a": _mat(a)})

    def s3(t: _Tally) -> None:
        smp = smp_for("S3")
        for k in range(samples):
            if k % 2 == 0:
                a, b = smp.orthogonal_pair()
                r_ab = _res(prod(a, b), dim)
                r_ba = _res(prod(b, a), dim)
                ok = (r_ab <= thr) == (r_ba <= thr)
                t.tally(ok, max(r_ab, r_ba) if not ok else 0.0,
                        {"sample": k, "a": _mat(a), "b": _mat(b),
                         "forward": r_ab, "backward": r_ba})
            else:
                a = smp.effect()
                b = smp.effect()
                spectrum = eigh(np.asarray(prod(a, b)), tol).values
                lo = float(spectrum[0])
                hi = float(spectrum[-1])
                escape = max(0.0, -lo, hi - 1.0)
                t.tally(escape <= tol.psd + thr, escape,
                        {"sample": k, "a": _mat(a), "b": _mat(b),
                         "min_eigenvalue": lo, "max_eigenvalue": hi})

    def s4(t: _Tally) -> None:
        smp = smp_for("S4")
        for k in range(samples):
            a, b = smp.commuting()
            c = smp.effect()
            premise = _res(prod(a, b) - prod(b, a), dim) <= tol.comm
            if not premise:
                t.tally(True)
                continue
            bperp = b.complement()
            r1 = _res(prod(a, bperp) - prod(bperp, a), dim)
            inner = wrap(np.asarray(prod(b, c)))
            outer = wrap(np.asarray(prod(a, b)))
            r2 = _res(prod(a, inner) - prod(outer, c), dim)
            r = max(r1, r2)
            t.tally(r <= thr, r, {"sample": k, "a": _mat(a), "b": _mat(b),
                                  "c": _mat(c), "complement": r1,
                                  "associativity": r2})

    def s5(t: _Tally) -> None:
        smp = smp_for("S5")
        for k in range(samples):
            c, a, b = smp.refined_commuting(hi=0.5)
            pa = _res(prod(c, a) - prod(a, c), dim)
            pb = _res(prod(c, b) - prod(b, c), dim)
            if pa > tol.comm or pb > tol.comm:
                t.tally(True)
                continue
            ab = wrap(np.asarray(prod(a, b)))
            asum = wrap(a.matrix + b.matrix)
            r1 = _res(prod(c, ab) - prod(ab, c), dim)
            r2 = _res(prod(c, asum) - prod(asum, c), dim)
            r = max(r1, r2)
            t.tally(r <= tol.comm, r, {"sample": k, "c": _mat(c),
                                       "a": _mat(a), "b": _mat(b)})

    def aff(t: _Tally) -> None:
        smp = smp_for("le:aff")
        for k in range(samples):
            a = smp.effect()
            b = smp.effect()
            lam = smp.uniform()
            la = mx.scale_effect(a, lam)
            lb = mx.scale_effect(b, lam)
            r1 = _res(np.asarray(prod(a, lb)) - lam * np.asarray(prod(a, b)),
                      dim)
            r2 = _res(np.asarray(prod(la, b)) - lam * np.asarray(prod(a, b)),
                      dim)
            ca, cb = smp.commuting()
            clb = mx.scale_effect(cb, lam)
            r3 = _res(prod(ca, clb) - prod(clb, ca), dim)
            r = max(r1, r2, min(r3, tol.comm) if r3 <= tol.comm else r3)
            t.tally(r1 <= thr and r2 <= thr and r3 <= tol.comm, r,
                    {"sample": k, "lambda": lam, "a": _mat(a), "b": _mat(b)})

    def convex_c1(t: _Tally) -> None:
        smp = smp_for("convex:C1")
        for k in range(samples):
            a = smp.effect()
            lam = smp.uniform()
            mu = smp.uniform()
            r = _res(mx.scale_effect(mx.scale_effect(a, lam), mu).matrix
                     - mx.scale_effect(a, lam * mu).matrix, dim)
            t.tally(r <= thr, r, {"sample": k, "lambda": lam, "mu": mu})

    def convex_c2(t: _Tally) -> None:
        smp = smp_for("convex:C2")
        for k in range(samples):
            a = smp.effect()
            lam = smp.uniform()
            mu = smp.uniform(0.0, 1.0 - lam)
            r = _res(mx.scale_effect(a, lam).matrix
                     + mx.scale_effect(a, mu).matrix
                     - mx.scale_effect(a, lam + mu).matrix, dim)
            t.tally(r <= thr, r, {"sample": k, "lambda": lam, "mu": mu})

    def convex_c3(t: _Tally) -> None:
        smp = smp_for("convex:C3")
        for k in range(samples):
            a = smp.effect(values=smp.rng.uniform(0.0, 0.5, dim))
            b = smp.effect(values=smp.rng.uniform(0.0, 0.5, dim))
            lam = smp.uniform()
            s = wrap(a.matrix + b.matrix)
            r = _res(mx.scale_effect(s, lam).matrix
                     - mx.scale_effect(a, lam).matrix
                     - mx.scale_effect(b, lam).matrix, dim)
            t.tally(r <= thr, r, {"sample": k, "lambda": lam})

    def convex_c4(t: _Tally) -> None:
        smp = smp_for("convex:C4")
        for k in range(samples):
            a = smp.effect()
            r = _res(mx.scale_effect(a, 1.0).matrix - a.matrix, dim)
            t.tally(r <= thr, r, {"sample": k})

    def sharp_i(t: _Tally) -> None:
        smp = smp_for("le:sharp.i")
        for k in range(samples):
            a = smp.projection() if k % 2 == 0 else smp.effect()
            sharp = _sharp_defect(a) <= thr
            s1b = _res(prod(a, a.complement()), dim) <= thr
            s2b = _res(np.asarray(prod(a, a)) - a.matrix, dim) <= thr
            t.tally(sharp == s1b == s2b, 0.0,
                    {"sample": k, "a": _mat(a), "sharp": sharp,
                     "kills_complement": s1b, "idempotent": s2b})

    def sharp_ii(t: _Tally) -> None:
        smp = smp_for("le:sharp.ii")
        for k in range(samples):
            if k % 2 == 0:
                p = smp.projection()
                d = p.decomposition
                vals = np.where(d.values > 0.5, 1.0,
                                smp.rng.uniform(0.0, 1.0, dim))
                a = mx.Effect.from_eigensystem(vals, d.vectors, tol)
            else:
                p = smp.projection()
                a = smp.effect()
            below = mx.leq(p, a, tol=tol)
            rp = max(_res(np.asarray(prod(p, a)) - p.matrix, dim),
                     _res(np.asarray(prod(a, p)) - p.matrix, dim))
            t.tally(below == (rp <= thr), 0.0,
                    {"sample": k, "p": _mat(p), "a": _mat(a),
                     "order": below, "product_residual": rp})

    def sharp_iii(t: _Tally) -> None:
        smp = smp_for("le:sharp.iii")
        for k in range(samples):
            if k % 2 == 0:
                p = smp.projection()
                d = p.decomposition
                vals = np.where(d.values > 0.5,
                                smp.rng.uniform(0.0, 1.0, dim), 0.0)
                a = mx.Effect.from_eigensystem(vals, d.vectors, tol)
            else:
                p = smp.projection()
                a = smp.effect()
            below = mx.leq(a, p, tol=tol)
            rp = max(_res(np.asarray(prod(p, a)) - a.matrix, dim),
                     _res(np.asarray(prod(a, p)) - a.matrix, dim))
            t.tally(below == (rp <= thr), 0.0,
                    {"sample": k, "p": _mat(p), "a": _mat(a),
                     "order": below, "product_residual": rp})

    def sharp_iv(t: _Tally) -> None:
        smp = smp_for("le:sharp.iv")
        for k in range(samples):
            if k % 2 == 0:
                ea, eb = smp.orthogonal_pair()
                p = mx.projection_cover(ea, tol)
                a = eb if k % 4 == 0 else mx.projection_cover(eb, tol)
            else:
                p = smp.projection()
                a = smp.effect()
            vanish = _res(prod(p, a), dim) <= thr
            summable = mx.leq(wrap(p.matrix + a.matrix), one, tol=tol)
            ok = vanish == summable
            if ok and vanish:
                join = mx.commuting_join(p, a, tol)
                r_join = _res(p.matrix + a.matrix - join, dim)
                sharp_sum = _sharp_defect(wrap(p.matrix + a.matrix)) <= thr
                sharp_a = _sharp_defect(a) <= thr
                ok = r_join <= thr and sharp_sum == sharp_a
                t.tally(ok, r_join, {"sample": k, "p": _mat(p), "a": _mat(a),
                                     "join_residual": r_join})
            else:
                t.tally(ok, 0.0, {"sample": k, "p": _mat(p), "a": _mat(a),
                                  "vanishes": vanish, "summable": summable})

    def sharp_v(t: _Tally) -> None:
        smp = smp_for("le:sharp.v")
        for k in range(samples):
            if k % 2 == 0:
                p, a = smp.commuting_projection_effect()
            else:
                p = smp.projection()
                a = smp.effect()
            commute = _res(prod(p, a) - prod(a, p), dim) <= tol.comm
            inside = p.matrix @ a.matrix @ p.matrix
            mackey = (mx.psd(a.matrix - inside, tol=tol)
                      and mx.psd(eye - a.matrix - p.matrix + inside, tol=tol))
            t.tally(commute == mackey, 0.0,
                    {"sample": k, "p": _mat(p), "a": _mat(a),
                     "commutes": commute, "mackey": mackey})

    def sharp_vi(t: _Tally) -> None:
        smp = smp_for("le:sharp.vi")
        for k in range(samples):
            p, a = smp.commuting_projection_effect()
            meet_mat = mx.commuting_meet(p, a, tol)
            r = _res(np.asarray(prod(p, a)) - meet_mat, dim)
            t.tally(r <= thr, r, {"sample": k, "p": _mat(p), "a": _mat(a)})
        oracle = mx.EffectSampler(_seed_for(seed, "sea", "le:sharp.vi/oracle"),
                                  dim, tol)
        for k in range(min(samples, 24)):
            pvals = (oracle.rng.integers(0, 2, dim)).astype(float)
            if not pvals.any():
                pvals[0] = 1.0
            avals = oracle.rng.uniform(0.0, 1.0, dim)
            cand = np.minimum(pvals, avals)
            worst = 0.0
            for probe in range(dim):
                lo_t, hi_t = 0.0, 1.0
                for _ in range(30):
                    mid = (lo_t + hi_t) / 2.0
                    trial = cand.copy()
                    trial[probe] += mid
                    if np.all(trial <= pvals + tol.psd) \
                            and np.all(trial <= avals + tol.psd):
                        lo_t = mid
                    else:
                        hi_t = mid
                worst = max(worst, lo_t)
            t.tally(worst <= 1e-6, worst,
                    {"oracle_sample": k, "p": pvals.tolist(),
                     "a": avals.round(12).tolist(), "slack": worst})

    def strongarch(t: _Tally) -> None:
        smp = smp_for("de:strongarch")
        bound = 2.0 / ARCHIMEDEAN_RESOLUTION
        for k in range(samples):
            a = smp.effect()
            b = smp.effect()
            m = mx.min_eig(b.matrix - a.matrix, tol)
            if m >= -bound:
                t.tally(True)
                continue
            n = min(ARCHIMEDEAN_RESOLUTION, 2 * math.ceil(1.0 / (-m)))
            gap = mx.min_eig(b.matrix + eye / n - a.matrix, tol)
            t.tally(gap < 0.0, 0.0,
                    {"sample": k, "n": n, "min_eigenvalue": m,
                     "shifted_min_eigenvalue": gap})

    _run_statement(report, "S1", "matrix", s1)
    _run_statement(report, "S2", "matrix", s2)
    _run_statement(report, "S3", "matrix", s3)
    _run_statement(report, "S4", "matrix", s4)
    _run_statement(report, "S5", "matrix", s5)
    _run_statement(report, "le:aff", "matrix", aff)
    _run_statement(report, "convex:C1", "matrix", convex_c1)
    _run_statement(report, "convex:C2", "matrix", convex_c2)
    _run_statement(report, "convex:C3", "matrix", convex_c3)
    _run_statement(report, "convex:C4", "matrix", convex_c4)
    _run_statement(report, "le:sharp.i", "matrix", sharp_i)
    _run_statement(report, "le:sharp.ii", "matrix", sharp_ii)
    _run_statement(report, "le:sharp.iii", "matrix", sharp_iii)
    _run_statement(report, "le:sharp.iv", "matrix", sharp_iv)
    _run_statement(report, "le:sharp.v", "matrix", sharp_v)
    _run_statement(report, "le:sharp.vi", "matrix", sharp_vi)
    _run_statement(report, "de:strongarch", "matrix", strongarch)


# ---------------------------------------------------------------------------
# mv SEA suite


def _sea_mv(report: SuiteReport, size: int, samples: int, seed: int,
            tol: Tolerances, product: str) -> None:
    prod = _mv_product(product)
    one = fz.one(size)

    def smp_for(sid: str) -> fz.FuzzySampler:
        return fz.FuzzySampler(_seed_for(seed, "sea", sid), size)

    def dy(smp: fz.FuzzySampler) -> float:
        return float(smp.rng.integers(0, smp.denom + 1)) / smp.denom

    def split_pair(smp: fz.FuzzySampler) -> tuple[fz.FuzzySet, fz.FuzzySet]:
        mask = smp.rng.integers(0, 2, size).astype(float)
        va = smp.fuzzy().values * mask
        vb = smp.fuzzy().values * (1.0 - mask)
        return fz.FuzzySet(va), fz.FuzzySet(vb)

    def s1(t: _Tally) -> None:
        smp = smp_for("S1")
        for k in range(samples):
            a = smp.fuzzy()
            b, c = smp.summable_pair()
            bc = fz.mv_oplus(b, c)
            lhs = prod(a, bc)
            rhs = prod(a, b) + prod(a, c)
            ok = bool(np.array_equal(lhs, rhs))
            t.tally(ok, 0.0 if ok else float(np.max(np.abs(lhs - rhs))),
                    {"sample": k, "a": _vals(a), "b": _vals(b), "c": _vals(c)})

    def s2(t: _Tally) -> None:
        smp = smp_for("S2")
        for k in range(samples):
            a = smp.fuzzy()
            ok = (np.array_equal(prod(one, a), a.values)
                  and np.array_equal(prod(a, one), a.values))
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a)})

    def s3(t: _Tally) -> None:
        smp = smp_for("S3")
        for k in range(samples):
            if k % 2 == 0:
                a, b = split_pair(smp)
            else:
                a, b = smp.summable_pair()
            forward = bool(np.all(prod(a, b) == 0.0))
            backward = bool(np.all(prod(b, a) == 0.0))
            inside = bool(np.all(prod(a, b) >= 0.0)
                          and np.all(prod(a, b) <= 1.0))
            t.tally(forward == backward and inside, 0.0,
                    {"sample": k, "a": _vals(a), "b": _vals(b)})

    def s4(t: _Tally) -> None:
        smp = smp_for("S4")
        for k in range(samples):
            a, b, c = smp.fuzzy(), smp.fuzzy(), smp.fuzzy()
            if not np.array_equal(prod(a, b), prod(b, a)):
                t.tally(True)
                continue
            bperp = fz.mv_neg(b)
            ok = (np.array_equal(prod(a, bperp), prod(bperp, a))
                  and np.array_equal(prod(fz.FuzzySet(prod(a, b)), c),
                                     prod(a, fz.FuzzySet(prod(b, c)))))
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a),
                                    "b": _vals(b), "c": _vals(c)})

    def s5(t: _Tally) -> None:
        smp = smp_for("S5")
        for k in range(samples):
            a, b, c = smp.summable_triple()
            if not (np.array_equal(prod(c, a), prod(a, c))
                    and np.array_equal(prod(c, b), prod(b, c))):
                t.tally(True)
                continue
            ab = fz.FuzzySet(prod(a, b))
            asum = fz.mv_oplus(a, b)
            ok = (np.array_equal(prod(c, ab), prod(ab, c))
                  and np.array_equal(prod(c, asum), prod(asum, c)))
            t.tally(bool(ok), 0.0, {"sample": k})

    def aff(t: _Tally) -> None:
        smp = smp_for("le:aff")
        for k in range(samples):
            a, b = smp.fuzzy(), smp.fuzzy()
            lam = dy(smp)
            la = fz.FuzzySet(lam * a.values)
            lb = fz.FuzzySet(lam * b.values)
            ok = (np.array_equal(prod(a, lb), lam * prod(a, b))
                  and np.array_equal(prod(la, b), lam * prod(a, b))
                  and np.array_equal(prod(a, lb), prod(lb, a)))
            t.tally(bool(ok), 0.0, {"sample": k, "lambda": lam,
                                    "a": _vals(a), "b": _vals(b)})

    def convex_c1(t: _Tally) -> None:
        smp = smp_for("convex:C1")
        for k in range(samples):
            a = smp.fuzzy()
            lam, mu = dy(smp), dy(smp)
            ok = np.array_equal(mu * (lam * a.values), (lam * mu) * a.values)
            t.tally(bool(ok), 0.0, {"sample": k, "lambda": lam, "mu": mu})

    def convex_c2(t: _Tally) -> None:
        smp = smp_for("convex:C2")
        for k in range(samples):
            a = smp.fuzzy()
            klam = int(smp.rng.integers(0, smp.denom + 1))
            kmu = int(smp.rng.integers(0, smp.denom + 1 - klam))
            lam, mu = klam / smp.denom, kmu / smp.denom
            ok = np.array_equal(lam * a.values + mu * a.values,
                                (lam + mu) * a.values)
            t.tally(bool(ok), 0.0, {"sample": k, "lambda": lam, "mu": mu})

    def convex_c3(t: _Tally) -> None:
        smp = smp_for("convex:C3")
        for k in range(samples):
            a, b = smp.summable_pair()
            lam = dy(smp)
            s = fz.mv_oplus(a, b)
            ok = np.array_equal(lam * s.values,
                                lam * a.values + lam * b.values)
            t.tally(bool(ok), 0.0, {"sample": k, "lambda": lam})

    def convex_c4(t: _Tally) -> None:
        smp = smp_for("convex:C4")
        for k in range(samples):
            a = smp.fuzzy()
            t.tally(bool(np.array_equal(1.0 * a.values, a.values)), 0.0,
                    {"sample": k})

    def sharp_i(t: _Tally) -> None:
        smp = smp_for("le:sharp.i")
        for k in range(samples):
            a = smp.sharp() if k % 2 == 0 else smp.fuzzy()
            sharp = fz.mv_is_sharp(a)
            s1b = bool(np.all(prod(a, fz.mv_neg(a)) == 0.0))
            s2b = bool(np.array_equal(prod(a, a), a.values))
            t.tally(sharp == s1b == s2b, 0.0,
                    {"sample": k, "a": _vals(a)})

    def sharp_ii(t: _Tally) -> None:
        smp = smp_for("le:sharp.ii")
        for k in range(samples):
            p = smp.sharp()
            a = (fz.FuzzySet(np.maximum(p.values, smp.fuzzy().values))
                 if k % 2 == 0 else smp.fuzzy())
            below = fz.mv_leq(p, a)
            holds = (np.array_equal(prod(p, a), p.values)
                     and np.array_equal(prod(a, p), p.values))
            t.tally(below == bool(holds), 0.0,
                    {"sample": k, "p": _vals(p), "a": _vals(a)})

    def sharp_iii(t: _Tally) -> None:
        smp = smp_for("le:sharp.iii")
        for k in range(samples):
            p = smp.sharp()
            a = (fz.FuzzySet(p.values * smp.fuzzy().values)
                 if k % 2 == 0 else smp.fuzzy())
            below = fz.mv_leq(a, p)
            holds = (np.array_equal(prod(p, a), a.values)
                     and np.array_equal(prod(a, p), a.values))
            t.tally(below == bool(holds), 0.0,
                    {"sample": k, "p": _vals(p), "a": _vals(a)})

    def sharp_iv(t: _Tally) -> None:
        smp = smp_for("le:sharp.iv")
        for k in range(samples):
            p = smp.sharp()
            if k % 2 == 0:
                a = fz.FuzzySet((1.0 - p.values) * smp.fuzzy().values)
            else:
                a = smp.fuzzy()
            vanish = bool(np.all(prod(p, a) == 0.0))
            summable = bool(np.all(p.values + a.values <= 1.0))
            ok = vanish == summable
            if ok and vanish:
                total = p.values + a.values
                ok = (np.array_equal(total, np.maximum(p.values, a.values))
                      and (fz.mv_is_sharp(fz.FuzzySet(total))
                           == fz.mv_is_sharp(a)))
            t.tally(bool(ok), 0.0, {"sample": k, "p": _vals(p),
                                    "a": _vals(a)})

    def sharp_v(t: _Tally) -> None:
        smp = smp_for("le:sharp.v")
        for k in range(samples):
            p = smp.sharp()
            a = smp.fuzzy()
            commute = bool(np.array_equal(prod(p, a), prod(a, p)))
            c = prod(p, a)
            mackey = (bool(np.all(a.values - c >= 0.0))
                      and bool(np.all(1.0 - a.values - p.values + c >= 0.0)))
            t.tally(commute == mackey, 0.0,
                    {"sample": k, "p": _vals(p), "a": _vals(a)})

    def sharp_vi(t: _Tally) -> None:
        smp = smp_for("le:sharp.vi")
        for k in range(samples):
            p = smp.sharp()
            a = smp.fuzzy()
            ok = np.array_equal(prod(p, a),
                                np.minimum(p.values, a.values))
            t.tally(bool(ok), 0.0, {"sample": k, "p": _vals(p),
                                    "a": _vals(a)})

    def strongarch(t: _Tally) -> None:
        smp = smp_for("de:strongarch")
        bound = 2.0 / ARCHIMEDEAN_RESOLUTION
        for k in range(samples):
            a, b = smp.fuzzy(), smp.fuzzy()
            m = float(np.min(b.values - a.values))
            if m >= -bound:
                t.tally(True)
                continue
            n = min(ARCHIMEDEAN_RESOLUTION, 2 * math.ceil(1.0 / (-m)))
            gap = float(np.min(b.values + 1.0 / n - a.values))
            t.tally(gap < 0.0, 0.0, {"sample": k, "n": n,
                                     "min_difference": m})

    _run_statement(report, "S1", "mv", s1)
    _run_statement(report, "S2", "mv", s2)
    _run_statement(report, "S3", "mv", s3)
    _run_statement(report, "S4", "mv", s4)
    _run_statement(report, "S5", "mv", s5)
    _run_statement(report, "le:aff", "mv", aff)
    _run_statement(report, "convex:C1", "mv", convex_c1)
    _run_statement(report, "convex:C2", "mv", convex_c2)
    _run_statement(report, "convex:C3", "mv", convex_c3)
    _run_statement(report, "convex:C4", "mv", convex_c4)
    _run_statement(report, "le:sharp.i", "mv", sharp_i)
    _run_statement(report, "le:sharp.ii", "mv", sharp_ii)
    _run_statement(report, "le:sharp.iii", "mv", sharp_iii)
    _run_statement(report, "le:sharp.iv", "mv", sharp_iv)
    _run_statement(report, "le:sharp.v", "mv", sharp_v)
    _run_statement(report, "le:sharp.vi", "mv", sharp_vi)
    _run_statement(report, "de:strongarch", "mv", strongarch)


def run_sea_suite(model: str = "matrix", dim_or_size: int = 4,
                  samples: int = 200, seed: int = 42,
                  tol: Tolerances = DEFAULT,
                  product: str = "standard") -> SuiteReport:
    """Sequential-product axioms, affinity, sharpness, archimedeanity."""
    if samples < 1:
        raise ValueError("samples must be positive")
    report = SuiteReport(
        suite="sea", model=model, seed=seed,
        config={"dim_or_size": dim_or_size, "samples": samples,
                "product": product, "tolerances": tol.to_dict(),
                "archimedean_resolution": ARCHIMEDEAN_RESOLUTION})
    if product != "standard":
        report.metadata["negative_control"] = True
    if model == "matrix":
        _sea_matrix(report, dim_or_size, samples, seed, tol, product)
    elif model == "mv":
        _sea_mv(report, dim_or_size, samples, seed, tol, product)
    else:
        raise ValueError(f"unknown model {model!r}")
    return report


# ---------------------------------------------------------------------------
# compression suite


def _compression_matrix(report: SuiteReport, dim: int, samples: int,
                        seed: int, tol: Tolerances, focus: str) -> None:
    thr = tol.check
    eye = np.eye(dim)

    def smp_for(sid: str) -> mx.EffectSampler:
        return mx.EffectSampler(_seed_for(seed, "compression", sid), dim, tol)

    def wrap(matrix) -> mx.Effect:
        return mx.Effect(matrix, tol=tol, validate=False)

    def compr(t: _Tally) -> None:
        smp = smp_for("de:compr")
        for k in range(samples):
            u = smp.unitary()
            if focus == "projection":
                f = smp.projection(unitary=u)
            else:
                f = smp.effect(values=smp.rng.uniform(0.3, 0.7, dim),
                               unitary=u)
            fmat = f.matrix

            def jmap(x: mx.Effect) -> np.ndarray:
                s = f.sqrt_matrix()
                return np.asarray(
                    (s @ x.matrix @ s + (s @ x.matrix @ s).conj().T) / 2.0)

            a = smp.effect(values=smp.rng.uniform(0.0, 0.5, dim))
            b = smp.effect(values=smp.rng.uniform(0.0, 0.5, dim))
            r_add = _res(jmap(wrap(a.matrix + b.matrix))
                         - jmap(a) - jmap(b), dim)
            below = mx.seq_product(f, f, tol)
            r_retract = _res(jmap(below) - below.matrix, dim)
            d = f.decomposition
            inker = mx.Effect.from_eigensystem(
                np.where(d.values <= 0.5, smp.rng.uniform(0.0, 1.0, dim)
                         * (d.values < tol.kernel), 0.0), d.vectors, tol) \
                if focus == "projection" else wrap(
                    np.zeros((dim, dim), dtype=np.complex128))
            r_kernel = _res(jmap(inker), dim)
            kernel_ok = (r_kernel <= thr) == mx.leq(
                inker, wrap(eye - fmat), tol=tol)
            generic = smp.effect()
            van = _res(jmap(generic), dim) <= thr
            under = mx.leq(generic, wrap(eye - fmat), tol=tol)
            r = max(r_add, r_retract)
            ok = r <= thr and kernel_ok and van == under
            t.tally(ok, r, {"sample": k, "focus": _mat(f),
                            "additivity": r_add, "retraction": r_retract,
                            "kernel_clause": kernel_ok,
                            "generic_clause": bool(van == under)})

    def cb_c1(t: _Tally) -> None:
        smp = smp_for("cb:C1")
        for k in range(samples):
            p = smp.projection()
            r = _res(mx.compression(p, mx.Effect(eye, tol=tol,
                                                 validate=False), tol).matrix
                     - p.matrix, dim)
            t.tally(r <= thr, r, {"sample": k, "p": _mat(p)})

    def cb_c2p(t: _Tally) -> None:
        smp = smp_for("cb:C2p")
        for k in range(samples):
            u = smp.unitary()
            p = smp.projection(unitary=u)
            q = smp.projection(unitary=u)
            a = smp.effect()
            pq = p.matrix @ q.matrix
            x = p.matrix @ (q.matrix @ a.matrix @ q.matrix) @ p.matrix
            z = pq @ a.matrix @ pq.conj().T
            r = _res(x - z, dim)
            idem = _res(pq @ pq - pq, dim)
            t.tally(r <= tol.comm and idem <= tol.proj, max(r, idem),
                    {"sample": k, "p": _mat(p), "q": _mat(q)})

    def cb_c3(t: _Tally) -> None:
        smp = smp_for("cb:C3")
        for k in range(samples):
            u = smp.unitary()
            k1 = int(smp.rng.integers(1, dim)) if dim > 1 else 1
            k2 = int(smp.rng.integers(1, dim - k1 + 1)) if dim - k1 else 0
            k3 = int(smp.rng.integers(0, dim - k1 - k2 + 1))
            p = mx.Projection.from_columns(u[:, :k1], dim, tol)
            q = mx.Projection.from_columns(u[:, k1:k1 + k2], dim, tol)
            rr = mx.Projection.from_columns(u[:, k1 + k2:k1 + k2 + k3],
                                            dim, tol)
            a = smp.effect()
            outer = p.matrix + q.matrix
            inner = q.matrix + rr.matrix
            composed = outer @ (inner @ a.matrix @ inner) @ outer
            direct = q.matrix @ a.matrix @ q.matrix
            r = _res(composed - direct, dim)
            t.tally(r <= thr, r, {"sample": k, "sizes": [k1, k2, k3]})

    def com_e(t: _Tally) -> None:
        smp = smp_for("le:comE")
        for k in range(samples):
            if k % 2 == 0:
                p, a = smp.commuting_projection_effect()
            else:
                p = smp.projection()
                a = smp.effect()
            stmts = five_way_statements(p, a, tol)
            flags = [stmts[key] for key in ("compress_below", "block_sum",
                                            "interval_sum", "mackey", "meet")]
            agree = len(set(flags)) == 1
            t.tally(agree, stmts["residual"],
                    {"sample": k, "p": _mat(p), "a": _mat(a),
                     "statements": {key: stmts[key] for key in
                                    ("compress_below", "block_sum",
                                     "interval_sum", "mackey", "meet")}})

    def compat_i(t: _Tally) -> None:
        smp = smp_for("lemma:compatible_projs.i")
        for k in range(samples):
            if dim < 2:
                t.tally(True)
                continue
            u = smp.unitary()
            k1 = int(smp.rng.integers(1, dim))
            k2 = int(smp.rng.integers(1, dim - k1 + 1))
            p = mx.Projection.from_columns(u[:, :k1], dim, tol)
            q = mx.Projection.from_columns(u[:, k1:k1 + k2], dim, tol)
            qa = mx.random_unitary(smp.rng, k1)
            qb = mx.random_unitary(smp.rng, dim - k1)
            vecs = np.concatenate([u[:, :k1] @ qa, u[:, k1:] @ qb], axis=1)
            a = mx.Effect.from_eigensystem(smp.rng.uniform(0.0, 1.0, dim),
                                           vecs, tol)
            join = mx.commuting_join(p, q, tol)
            osum = p.matrix + q.matrix
            r_join = _res(join - osum, dim)
            lhs = osum @ a.matrix @ osum
            rhs = (p.matrix @ a.matrix @ p.matrix
                   + q.matrix @ a.matrix @ q.matrix)
            r = max(r_join, _res(lhs - rhs, dim))
            t.tally(r <= thr, r, {"sample": k, "p": _mat(p), "q": _mat(q),
                                  "a": _mat(a)})

    def compat_ii(t: _Tally) -> None:
        smp = smp_for("lemma:compatible_projs.ii")
        for k in range(samples):
            u = smp.unitary()
            p = smp.projection(unitary=u)
            q = smp.projection(unitary=u)
            a = smp.effect()
            meet = p.matrix @ q.matrix
            x = p.matrix @ (q.matrix @ a.matrix @ q.matrix) @ p.matrix
            y = q.matrix @ (p.matrix @ a.matrix @ p.matrix) @ q.matrix
            z = meet @ a.matrix @ meet.conj().T
            r_lattice = _res(meet - mx.commuting_meet(p, q, tol), dim)
            r = max(_res(x - y, dim), _res(x - z, dim), r_lattice)
            t.tally(r <= thr, r, {"sample": k, "p": _mat(p), "q": _mat(q)})

    _run_statement(report, "de:compr", "matrix", compr)
    _run_statement(report, "cb:C1", "matrix", cb_c1)
    _run_statement(report, "cb:C2p", "matrix", cb_c2p)
    _run_statement(report, "cb:C3", "matrix", cb_c3)
    _run_statement(report, "le:comE", "matrix", com_e)
    _run_statement(report, "lemma:compatible_projs.i", "matrix", compat_i)
    _run_statement(report, "lemma:compatible_projs.ii", "matrix", compat_ii)


def _compression_mv(report: SuiteReport, size: int, samples: int, seed: int,
                    tol: Tolerances, focus: str) -> None:
    def smp_for(sid: str) -> fz.FuzzySampler:
        return fz.FuzzySampler(_seed_for(seed, "compression", sid), size)

    def compr(t: _Tally) -> None:
        smp = smp_for("de:compr")
        for k in range(samples):
            if focus == "projection":
                f = smp.sharp().values
            else:
                f = smp.fuzzy().values * 0.5 + 0.25
            a, b = smp.summable_pair()
            ok = np.array_equal(f * (a.values + b.values),
                                f * a.values + f * b.values)
            below = f * f
            ok = ok and bool(np.array_equal(f * below, below))
            inker = (1.0 - f) * smp.fuzzy().values
            ok = ok and (bool(np.all(f * inker == 0.0))
                         == bool(np.all(inker <= 1.0 - f)))
            g = smp.fuzzy().values
            ok = ok and (bool(np.all(f * g == 0.0))
                         == bool(np.all(g <= 1.0 - f)))
            t.tally(bool(ok), 0.0, {"sample": k, "focus": f.tolist()})

    def cb_c1(t: _Tally) -> None:
        smp = smp_for("cb:C1")
        for k in range(samples):
            p = smp.sharp()
            ok = np.array_equal(p.values * np.ones(size), p.values)
            t.tally(bool(ok), 0.0, {"sample": k})

    def cb_c2p(t: _Tally) -> None:
        smp = smp_for("cb:C2p")
        for k in range(samples):
            p, q = smp.sharp(), smp.sharp()
            a = smp.fuzzy()
            ok = np.array_equal(p.values * (q.values * a.values),
                                (p.values * q.values) * a.values)
            t.tally(bool(ok), 0.0, {"sample": k})

    def cb_c3(t: _Tally) -> None:
        smp = smp_for("cb:C3")
        for k in range(samples):
            ctx = smp.context(min(3, size))
            parts = [np.zeros(size) for _ in range(3)]
            for i, blk in enumerate(ctx.blocks[:3]):
                parts[i][list(blk)] = 1.0
            p, q, rr = parts
            a = smp.fuzzy()
            ok = np.array_equal((p + q) * ((q + rr) * a.values) * (p + q),
                                q * a.values)
            t.tally(bool(ok), 0.0, {"sample": k})

    def com_e(t: _Tally) -> None:
        smp = smp_for("le:comE")
        for k in range(samples):
            p = smp.sharp()
            a = smp.fuzzy()
            pv, av = p.values, a.values
            s1 = bool(np.all(pv * av <= av))
            s2 = bool(np.array_equal(av, pv * av + (1.0 - pv) * av))
            s3 = bool(np.all((pv * av) * ((1.0 - pv) * av) == 0.0))
            c = pv * av
            s4 = bool(np.all(av - c >= 0.0)
                      and np.all(1.0 - av - pv + c >= 0.0))
            s5 = bool(np.array_equal(pv * av, np.minimum(pv, av)))
            t.tally(s1 == s2 == s3 == s4 == s5, 0.0,
                    {"sample": k, "p": _vals(p), "a": _vals(a)})

    def compat_i(t: _Tally) -> None:
        smp = smp_for("lemma:compatible_projs.i")
        for k in range(samples):
            ctx = smp.context(min(2, size))
            p = np.zeros(size)
            p[list(ctx.blocks[0])] = 1.0
            q = 1.0 - p if len(ctx.blocks) < 2 else np.zeros(size)
            if len(ctx.blocks) >= 2:
                q[list(ctx.blocks[1])] = 1.0
            a = smp.fuzzy().values
            join = np.maximum(p, q)
            ok = (np.array_equal(join * a, (p + q) * a)
                  and np.array_equal(join * a, p * a + q * a))
            t.tally(bool(ok), 0.0, {"sample": k})

    def compat_ii(t: _Tally) -> None:
        smp = smp_for("lemma:compatible_projs.ii")
        for k in range(samples):
            p, q = smp.sharp().values, smp.sharp().values
            a = smp.fuzzy().values
            ok = (np.array_equal(p * (q * a), q * (p * a))
                  and np.array_equal(p * (q * a), np.minimum(p, q) * a))
            t.tally(bool(ok), 0.0, {"sample": k})

    _run_statement(report, "de:compr", "mv", compr)
    _run_statement(report, "cb:C1", "mv", cb_c1)
    _run_statement(report, "cb:C2p", "mv", cb_c2p)
    _run_statement(report, "cb:C3", "mv", cb_c3)
    _run_statement(report, "le:comE", "mv", com_e)
    _run_statement(report, "lemma:compatible_projs.i", "mv", compat_i)
    _run_statement(report, "lemma:compatible_projs.ii", "mv", compat_ii)


def run_compression_suite(model: str = "matrix", dim_or_size: int = 4,
                          samples: int = 200, seed: int = 42,
                          tol: Tolerances = DEFAULT,
                          focus: str = "projection") -> SuiteReport:
    """Compression-base axioms and the compatibility equivalences."""
    if samples < 1:
        raise ValueError("samples must be positive")
    if focus not in ("projection", "soft"):
        raise ValueError(f"unknown focus {focus!r}")
    report = SuiteReport(
        suite="compression", model=model, seed=seed,
        config={"dim_or_size": dim_or_size, "samples": samples,
                "focus": focus, "tolerances": tol.to_dict()})
    if focus != "projection":
        report.metadata["negative_control"] = True
    if model == "matrix":
        _compression_matrix(report, dim_or_size, samples, seed, tol, focus)
    elif model == "mv":
        _compression_mv(report, dim_or_size, samples, seed, tol, focus)
    else:
        raise ValueError(f"unknown model {model!r}")
    return report


# ---------------------------------------------------------------------------
# spectrality suite


def _spectrality_matrix(report: SuiteReport, dim: int, samples: int,
                        seed: int, tol: Tolerances, floor_mode: str) -> None:
    thr = tol.check
    eye = np.eye(dim)
    ctx = sp.MatrixContext(tol)
    degenerate_ties = 0

    def smp_for(sid: str) -> mx.EffectSampler:
        return mx.EffectSampler(_seed_for(seed, "spectrality", sid), dim, tol)

    def floor_map(a: mx.Effect) -> mx.Projection:
        if floor_mode == "floor":
            return mx.floor(a, tol)
        return mx.projection_cover(a, tol)

    def projcov(t: _Tally) -> None:
        smp = smp_for("de:projcov")
        for k in range(samples):
            a = smp.simple_effect()
            cover = mx.projection_cover(a, tol)
            ok = mx.leq(a, cover, tol=tol)
            gens = mx.bicommutant_projections(a, tol)
            for q in mx.subsum_projections(gens, limit=16):
                qp = mx.Projection(q, tol=tol, validate=False)
                ok = ok and (mx.leq(a, qp, tol=tol)
                             == mx.leq(cover, qp, tol=tol))
            lam = smp.uniform(0.05, 1.0)
            scaled_cover = mx.projection_cover(mx.scale_effect(a, lam), tol)
            r = _res(scaled_cover.matrix - cover.matrix, dim)
            t.tally(ok and r <= thr, r,
                    {"sample": k, "a": _mat(a), "lambda": lam})

    def projcover_lemma(t: _Tally) -> None:
        smp = smp_for("lemma:projcover")
        for k in range(samples):
            if k % 2 == 0:
                a, b = smp.orthogonal_pair()
            else:
                a, b = smp.effect(), smp.effect()
            cover = mx.projection_cover(a, tol)
            r1 = _res(mx.seq_product(a, b, tol).matrix, dim)
            r2 = _res(mx.seq_product(cover, b, tol).matrix, dim)
            t.tally((r1 <= thr) == (r2 <= thr), 0.0,
                    {"sample": k, "a": _mat(a), "b": _mat(b),
                     "effect_product": r1, "cover_product": r2})

    def covex_floor(t: _Tally) -> None:
        smp = smp_for("lemma:covex_floor")
        for k in range(samples):
            ones = int(smp.rng.integers(0, dim)) if k % 2 == 0 else 0
            a = smp.effect_with_top(ones=ones) if ones else smp.effect(
                values=smp.rng.uniform(0.0, 0.95, dim))
            flr = floor_map(a)
            d = a.decomposition
            cols = d.vectors[:, d.values >= 1.0 - tol.cluster]
            direct = cols @ cols.conj().T if cols.size else np.zeros(
                (dim, dim), dtype=np.complex128)
            r1 = _res(flr.matrix - direct, dim)
            dual = mx.floor(a.complement(), tol)
            cover = mx.projection_cover(a, tol)
            r2 = _res(dual.matrix - (eye - cover.matrix), dim)
            r = max(r1, r2)
            t.tally(r <= thr, r, {"sample": k, "a": _mat(a),
                                  "cluster_route": r1, "duality": r2})

    def floor_lemma(t: _Tally) -> None:
        smp = smp_for("lemma:floor")
        for k in range(samples):
            ones = int(smp.rng.integers(1, dim + 1))
            a = smp.effect_with_top(ones=ones, ceiling=0.95)
            flr = floor_map(a)
            iters = mx.floor_iterates(a, FLOOR_POWER, tol)
            ok = True
            worst = 0.0
            for j in range(min(3, len(iters) - 1)):
                ok = ok and mx.psd(iters[j].matrix - iters[j + 1].matrix,
                                   tol=tol)
            ok = ok and mx.psd(iters[-1].matrix - flr.matrix, tol=tol)
            vals = a.clamped_values()
            below_one = vals[vals < 1.0 - tol.cluster]
            mu_max = float(below_one[-1]) if below_one.size else 0.0
            gap = operator_norm(iters[-1].matrix - flr.matrix, tol)
            bound = mu_max ** FLOOR_POWER + thr
            ok = ok and gap <= bound
            worst = max(worst, gap)
            t.tally(ok, worst, {"sample": k, "a": _mat(a),
                                "rate_gap": gap, "rate_bound": bound})

    def b_compar(t: _Tally) -> None:
        nonlocal degenerate_ties
        smp = smp_for("de:b-compar")
        for k in range(samples):
            if k % 4 == 3:
                e = smp.effect()
                f = smp.effect()
                try:
                    sp.comparability_witness(e, f, ctx, tol)
                    commuted = ctx.commutes(e, f)
                    t.tally(commuted, 0.0,
                            {"sample": k, "e": _mat(e), "f": _mat(f),
                             "note": "witness for a non-commuting pair"})
                except mx.NotCommutingError:
                    t.tally(True)
                continue
            e, f = smp.commuting()
            wit = sp.comparability_witness(e, f, ctx, tol)
            if wit.degenerate:
                degenerate_ties += 1
            p = wit.p
            comp = ctx.complement(p)
            ok = (ctx.leq(ctx.compress(p, e), ctx.compress(p, f))
                  and ctx.leq(ctx.compress(comp, f), ctx.compress(comp, e)))
            t.tally(ok, 0.0, {"sample": k, "e": _mat(e), "f": _mat(f)})

    def decomp(t: _Tally) -> None:
        smp = smp_for("prop:decomp")
        for k in range(samples):
            zeros = int(smp.rng.integers(0, min(2, dim - 1) + 1))
            v = smp.hermitian(zeros=zeros)
            dec = sp.orthogonal_decomposition(v, ctx, tol)
            ok = True
            worst = 0.0
            for q in sp.sign_witness_projections(v, ctx, tol, limit=8):
                comp = eye - q
                vp = q @ v @ q
                vm = -(comp @ v @ comp)
                r = max(_res(vp - np.asarray(dec.v_plus), dim),
                        _res(vm - np.asarray(dec.v_minus), dim))
                worst = max(worst, r)
                ok = ok and r <= thr
            t.tally(ok, worst, {"sample": k, "v": _mat(v)})

    def commut(t: _Tally) -> None:
        smp = smp_for("prop:commut")
        for k in range(samples):
            if k % 2 == 0:
                a, b = smp.commuting()
            else:
                a, b = smp.effect(), smp.effect()
            seq_res, lie_res = mx.commutation_residuals(a, b, tol)
            b1 = seq_res <= tol.comm
            b2 = lie_res <= tol.comm
            projs_ok = True
            for pa in mx.bicommutant_projections(a, tol):
                r = frobenius(pa.matrix @ b.matrix - b.matrix @ pa.matrix)
                projs_ok = projs_ok and r <= tol.comm
            t.tally(b1 == b2 == projs_ok, 0.0,
                    {"sample": k, "a": _mat(a), "b": _mat(b),
                     "sequential": b1, "ordinary": b2,
                     "projections": projs_ok})

    def limit(t: _Tally) -> None:
        smp = smp_for("coro:limit")
        for k in range(samples):
            a = smp.effect()
            prev = None
            ok = True
            worst = 0.0
            for n in range(1, APPROX_LEVELS + 1):
                an = np.asarray(sp.simple_approximation(a, n, ctx, tol))
                gap = operator_norm(a.matrix - an, tol)
                worst = max(worst, gap - 2.0 ** -n)
                ok = ok and gap <= 2.0 ** -n + thr
                ok = ok and mx.psd(a.matrix - an, tol=tol)
                if prev is not None:
                    ok = ok and mx.psd(an - prev, tol=tol)
                prev = an
            t.tally(ok, max(0.0, worst), {"sample": k, "a": _mat(a)})

    def spectprojs(t: _Tally) -> None:
        smp = smp_for("eq:spectprojs")
        for k in range(samples):
            a = smp.simple_effect()
            fam = sp.spectral_family(a, ctx, tol)
            ok = True
            worst = 0.0
            for j in range(1, len(fam.projections)):
                ok = ok and mx.psd(np.asarray(fam.projections[j].matrix)
                                   - np.asarray(fam.projections[j - 1].matrix),
                                   tol=tol)
                jump = fam.jump(j)
                eig = sp.eigenprojection(a, fam.breakpoints[j - 1], ctx, tol)
                r = _res(jump - np.asarray(eig.matrix), dim)
                worst = max(worst, r)
                ok = ok and r <= thr
            bounds = sp.spectral_bounds(a, ctx, tol)
            below = bounds.L - 0.25
            ok = ok and ctx.proj_rank(fam.at(below)) == 0
            ok = ok and ctx.proj_rank(fam.at(bounds.U)) == dim
            mid = [(fam.breakpoints[j] + fam.breakpoints[j + 1]) / 2.0
                   for j in range(len(fam.breakpoints) - 1)]
            for lam in mid:
                step = fam.at(lam)
                nxt = fam.at(lam + 1e-12)
                ok = ok and _res(np.asarray(step.matrix)
                                 - np.asarray(nxt.matrix), dim) <= thr
            t.tally(ok, worst, {"sample": k, "a": _mat(a)})

    def spectres(t: _Tally) -> None:
        smp = smp_for("eq:spectresV")
        for k in range(samples):
            a = smp.effect()
            fam = sp.spectral_family(a, ctx, tol)
            exact = sp.reconstruct(fam)
            r0 = operator_norm(a.matrix - np.asarray(exact), tol)
            ok = r0 <= thr
            worst = r0
            for mesh in MESHES:
                rec = sp.reconstruct(fam, mesh)
                gap = operator_norm(a.matrix - np.asarray(rec), tol)
                ok = ok and gap <= mesh + thr
                worst = max(worst, gap if gap > mesh else 0.0)
            t.tally(ok, worst, {"sample": k, "a": _mat(a),
                                "breakpoint_residual": r0})

    def property_a(t: _Tally) -> None:
        smp = smp_for("propertyA")
        for k in range(samples):
            u = smp.unitary()
            a = smp.effect(unitary=u)
            b = smp.effect(unitary=u)
            ok = True
            for n in range(1, 9):
                an = np.asarray(sp.simple_approximation(a, n, ctx, tol))
                ok = ok and ctx.commutes(an, b)
            ok = ok and ctx.commutes(a, b)
            comp_iters = mx.floor_iterates(a.complement(), 8, tol)
            chain = [eye - it.matrix for it in comp_iters]
            for step in chain:
                ok = ok and ctx.commutes(step, b)
            cover = mx.projection_cover(a, tol)
            ok = ok and ctx.commutes(cover, b)
            t.tally(ok, 0.0, {"sample": k, "a": _mat(a), "b": _mat(b)})

    _run_statement(report, "de:projcov", "matrix", projcov)
    _run_statement(report, "lemma:projcover", "matrix", projcover_lemma)
    _run_statement(report, "lemma:covex_floor", "matrix", covex_floor)
    _run_statement(report, "lemma:floor", "matrix", floor_lemma)
    _run_statement(report, "de:b-compar", "matrix", b_compar)
    _run_statement(report, "prop:decomp", "matrix", decomp)
    _run_statement(report, "prop:commut", "matrix", commut)
    _run_statement(report, "coro:limit", "matrix", limit)
    _run_statement(report, "eq:spectprojs", "matrix", spectprojs)
    _run_statement(report, "eq:spectresV", "matrix", spectres)
    _run_statement(report, "propertyA", "matrix", property_a)
    report.metadata["degenerate_comparability_ties"] = degenerate_ties


def _spectrality_mv(report: SuiteReport, size: int, samples: int, seed: int,
                    tol: Tolerances, floor_mode: str) -> None:
    ctx = fz.FuzzyContext(tol)

    def smp_for(sid: str) -> fz.FuzzySampler:
        return fz.FuzzySampler(_seed_for(seed, "spectrality", sid), size)

    def floor_vals(av: np.ndarray) -> np.ndarray:
        if floor_mode == "floor":
            return (av == 1.0).astype(float)
        return (av > 0.0).astype(float)

    def projcov(t: _Tally) -> None:
        smp = smp_for("de:projcov")
        for k in range(samples):
            a = smp.fuzzy()
            cover = ctx.support(a)
            ok = bool(np.all(a.values <= cover.values))
            for _ in range(8):
                q = smp.sharp()
                ok = ok and (bool(np.all(a.values <= q.values))
                             == bool(np.all(cover.values <= q.values)))
            lam = float(smp.rng.integers(1, smp.denom + 1)) / smp.denom
            ok = ok and np.array_equal(
                ctx.support(lam * a.values).values, cover.values)
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a)})

    def projcover_lemma(t: _Tally) -> None:
        smp = smp_for("lemma:projcover")
        for k in range(samples):
            a, b = smp.fuzzy(), smp.fuzzy()
            cover = ctx.support(a).values
            ok = (bool(np.all(a.values * b.values == 0.0))
                  == bool(np.all(cover * b.values == 0.0)))
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a),
                                    "b": _vals(b)})

    def covex_floor(t: _Tally) -> None:
        smp = smp_for("lemma:covex_floor")
        for k in range(samples):
            a = smp.fuzzy()
            flr = floor_vals(a.values)
            direct = ctx.rickart(a.values - 1.0).values
            ok = np.array_equal(flr, direct)
            dual = (1.0 - a.values == 1.0).astype(float)
            ok = ok and np.array_equal(dual,
                                       1.0 - ctx.support(a).values)
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a)})

    def floor_lemma(t: _Tally) -> None:
        smp = smp_for("lemma:floor")
        for k in range(samples):
            ticks = smp.rng.integers(0, smp.denom + 1, size)
            ticks[smp.rng.integers(0, size)] = smp.denom
            av = ticks / smp.denom
            below = av[av < 1.0]
            if below.size and below.max() > 0.95:
                av[av == below.max()] = 0.95
                below = av[av < 1.0]
            flr = floor_vals(av)
            power = av.copy()
            ok = True
            for _ in range(FLOOR_POWER - 1):
                nxt = power * av
                ok = ok and bool(np.all(nxt <= power))
                power = nxt
            ok = ok and bool(np.all(flr <= power))
            mu_max = float(below.max()) if below.size else 0.0
            gap = float(np.max(np.abs(power - flr)))
            ok = ok and gap <= mu_max ** FLOOR_POWER + tol.check
            t.tally(bool(ok), gap, {"sample": k, "a": av.tolist()})

    def b_compar(t: _Tally) -> None:
        smp = smp_for("de:b-compar")
        ties = 0
        for k in range(samples):
            e, f = smp.fuzzy(), smp.fuzzy()
            wit = sp.comparability_witness(e, f, ctx, tol)
            if wit.degenerate:
                ties += 1
            p = wit.p.values
            ok = (bool(np.all(p * e.values <= p * f.values))
                  and bool(np.all((1.0 - p) * f.values
                                  <= (1.0 - p) * e.values)))
            t.tally(bool(ok), 0.0, {"sample": k, "e": _vals(e),
                                    "f": _vals(f)})
        report.metadata["degenerate_comparability_ties"] = ties

    def decomp(t: _Tally) -> None:
        smp = smp_for("prop:decomp")
        for k in range(samples):
            v = smp.rng.integers(-smp.denom, smp.denom + 1, size) / smp.denom
            dec = sp.orthogonal_decomposition(v, ctx, tol)
            ok = True
            for q in sp.sign_witness_projections(v, ctx, tol, limit=8):
                vp = q * v
                vm = -((1.0 - q) * v)
                ok = ok and np.array_equal(vp, np.asarray(dec.v_plus))
                ok = ok and np.array_equal(vm, np.asarray(dec.v_minus))
            t.tally(bool(ok), 0.0, {"sample": k, "v": v.tolist()})

    def commut(t: _Tally) -> None:
        smp = smp_for("prop:commut")
        for k in range(samples):
            a, b = smp.fuzzy(), smp.fuzzy()
            ok = (np.array_equal(a.values * b.values, b.values * a.values)
                  and ctx.commutes(a, b))
            t.tally(bool(ok), 0.0, {"sample": k})

    def limit(t: _Tally) -> None:
        smp = smp_for("coro:limit")
        for k in range(samples):
            a = smp.fuzzy()
            prev = None
            ok = True
            for n in range(1, APPROX_LEVELS + 1):
                an = np.asarray(sp.simple_approximation(a, n, ctx, tol))
                ok = ok and bool(np.all(an <= a.values))
                ok = ok and float(np.max(a.values - an)) <= 2.0 ** -n
                if prev is not None:
                    ok = ok and bool(np.all(prev <= an))
                prev = an
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a)})

    def spectprojs(t: _Tally) -> None:
        smp = smp_for("eq:spectprojs")
        for k in range(samples):
            a = smp.fuzzy()
            fam = sp.spectral_family(a, ctx, tol)
            ok = True
            for j in range(1, len(fam.projections)):
                ok = ok and bool(np.all(fam.projections[j - 1].values
                                        <= fam.projections[j].values))
                jump = fam.jump(j)
                eig = sp.eigenprojection(a, fam.breakpoints[j - 1], ctx, tol)
                ok = ok and np.array_equal(jump, eig.values)
            ok = ok and np.array_equal(fam.at(fam.U).values, np.ones(size))
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a)})

    def spectres(t: _Tally) -> None:
        smp = smp_for("eq:spectresV")
        for k in range(samples):
            a = smp.fuzzy()
            fam = sp.spectral_family(a, ctx, tol)
            exact = np.asarray(sp.reconstruct(fam))
            ok = np.array_equal(exact, a.values)
            worst = 0.0
            for mesh in MESHES:
                rec = np.asarray(sp.reconstruct(fam, mesh))
                gap = float(np.max(np.abs(a.values - rec)))
                ok = ok and gap <= mesh + tol.check
                worst = max(worst, gap if gap > mesh else 0.0)
            t.tally(bool(ok), worst, {"sample": k, "a": _vals(a)})

    def property_a(t: _Tally) -> None:
        smp = smp_for("propertyA")
        for k in range(samples):
            a, b = smp.fuzzy(), smp.fuzzy()
            ok = True
            for n in range(1, 9):
                an = np.asarray(sp.simple_approximation(a, n, ctx, tol))
                ok = ok and np.array_equal(an * b.values, b.values * an)
            ok = ok and ctx.commutes(a, b)
            t.tally(bool(ok), 0.0, {"sample": k})

    _run_statement(report, "de:projcov", "mv", projcov)
    _run_statement(report, "lemma:projcover", "mv", projcover_lemma)
    _run_statement(report, "lemma:covex_floor", "mv", covex_floor)
    _run_statement(report, "lemma:floor", "mv", floor_lemma)
    _run_statement(report, "de:b-compar", "mv", b_compar)
    _run_statement(report, "prop:decomp", "mv", decomp)
    _run_statement(report, "prop:commut", "mv", commut)
    _run_statement(report, "coro:limit", "mv", limit)
    _run_statement(report, "eq:spectprojs", "mv", spectprojs)
    _run_statement(report, "eq:spectresV", "mv", spectres)
    _run_statement(report, "propertyA", "mv", property_a)


def run_spectrality_suite(model: str = "matrix", dim_or_size: int = 6,
                          samples: int = 100, seed: int = 7,
                          tol: Tolerances = DEFAULT,
                          floor_mode: str = "floor") -> SuiteReport:
    """Covers, floors, comparability, decompositions, reconstruction."""
    if samples < 1:
        raise ValueError("samples must be positive")
    if floor_mode not in ("floor", "cover"):
        raise ValueError(f"unknown floor mode {floor_mode!r}")
    report = SuiteReport(
        suite="spectrality", model=model, seed=seed,
        config={"dim_or_size": dim_or_size, "samples": samples,
                "floor_mode": floor_mode, "tolerances": tol.to_dict(),
                "floor_power": FLOOR_POWER, "approx_levels": APPROX_LEVELS,
                "meshes": list(MESHES)})
    report.metadata["property_a_coverage"] = (
        "constructed chains only: dyadic approximations and complements of "
        "sequential powers")
    if floor_mode != "floor":
        report.metadata["negative_control"] = True
    if model == "matrix":
        _spectrality_matrix(report, dim_or_size, samples, seed, tol,
                            floor_mode)
    elif model == "mv":
        _spectrality_mv(report, dim_or_size, samples, seed, tol, floor_mode)
    else:
        raise ValueError(f"unknown model {model!r}")
    return report


# ---------------------------------------------------------------------------
# context suite


def _lagrange_coefficients(nodes, i: int, conv=float) -> list:
    """Monomial coefficients of the i-th Lagrange basis polynomial."""
    xi = conv(nodes[i])
    coeffs = [conv(1)]
    for j, x in enumerate(nodes):
        if j == i:
            continue
        xj = conv(x)
        den = xi - xj
        new = [conv(0)] * (len(coeffs) + 1)
        for deg, ck in enumerate(coeffs):
            new[deg] -= ck * xj / den
            new[deg + 1] += ck / den
        coeffs = new
    return coeffs


def _merge_representation(rep: sp.ReducedRepresentation, delta: float,
                          raw_of) -> tuple[list[float], list[np.ndarray]]:
    coeffs: list[float] = []
    projs: list[np.ndarray] = []
    for mu, proj in zip(rep.coefficients, rep.projections):
        if coeffs and delta > 0.0 and mu - coeffs[-1] <= delta:
            projs[-1] = projs[-1] + raw_of(proj)
        else:
            coeffs.append(mu)
            projs.append(raw_of(proj))
    return coeffs, projs


def _context_matrix(report: SuiteReport, dim: int, samples: int, seed: int,
                    tol: Tolerances, merge_delta: float) -> None:
    thr = tol.check
    ctx = sp.MatrixContext(tol)

    def smp_for(sid: str) -> mx.EffectSampler:
        return mx.EffectSampler(_seed_for(seed, "context", sid), dim, tol)

    def closed_form(t: _Tally) -> None:
        smp = smp_for("thm:contexts")
        for k in range(samples):
            a = smp.simple_effect(gap=0.15)
            rep = sp.reduced_representation(a, ctx, tol)
            coeffs, projs = _merge_representation(rep, merge_delta,
                                                  lambda p: p.matrix)
            closed = sp.family_from_representation(coeffs, projs, "matrix")
            fam = sp.spectral_family(a, ctx, tol)
            ok = len(closed.projections) == len(fam.projections)
            worst = 0.0
            if ok:
                for cp, fp in zip(closed.projections, fam.projections):
                    r = _res(np.asarray(cp) - np.asarray(fp.matrix), dim)
                    worst = max(worst, r)
                    ok = ok and r <= thr
                ok = ok and all(
                    abs(x - y) <= thr
                    for x, y in zip(closed.breakpoints, fam.breakpoints))
            t.tally(ok, worst, {"sample": k, "a": _mat(a),
                                "closed_steps": len(closed.projections),
                                "family_steps": len(fam.projections)})

    def functions(t: _Tally) -> None:
        smp = smp_for("thm:contexts.functions")
        for k in range(samples):
            a = smp.simple_effect(gap=0.15)
            rep = sp.reduced_representation(a, ctx, tol)
            nodes = list(rep.coefficients)
            if merge_delta > 0.0:
                nodes = [mu for j, mu in enumerate(nodes)
                         if j == 0 or mu - nodes[j - 1] > merge_delta]
            spread = min((y - x for x, y in zip(nodes, nodes[1:])),
                         default=1.0)
            assert spread > tol.cluster, \
                "reduced representation carries duplicate coefficients"
            powers = [np.eye(dim, dtype=np.complex128)]
            for _ in range(len(nodes) - 1):
                powers.append(powers[-1] @ a.matrix)
            ok = True
            worst = 0.0
            for i, proj in enumerate(rep.projections[:len(nodes)]):
                coeffs = _lagrange_coefficients(nodes, i)
                poly = sum((c * m for c, m in zip(coeffs, powers)),
                           np.zeros((dim, dim), dtype=np.complex128))
                r = _res(poly - proj.matrix, dim)
                worst = max(worst, r)
                ok = ok and r <= thr
            t.tally(ok, worst, {"sample": k, "a": _mat(a),
                                "nodes": [float(x) for x in nodes]})

    def reduced(t: _Tally) -> None:
        smp = smp_for("thm:contexts.reduced")
        for k in range(samples):
            a = smp.simple_effect(gap=0.15)
            rep = sp.reduced_representation(a, ctx, tol)
            fam = sp.spectral_family(a, ctx, tol)
            ok = all(y - x > tol.cluster for x, y in
                     zip(rep.coefficients, rep.coefficients[1:]))
            worst = 0.0
            for j in range(1, len(fam.breakpoints) + 1):
                r = _res(fam.jump(j) - rep.projections[j - 1].matrix, dim)
                worst = max(worst, r)
                ok = ok and r <= thr
                ok = ok and abs(fam.breakpoints[j - 1]
                                - rep.coefficients[j - 1]) <= thr
            for i in range(len(rep.projections)):
                for j in range(i + 1, len(rep.projections)):
                    r = _res(rep.projections[i].matrix
                             @ rep.projections[j].matrix, dim)
                    worst = max(worst, r)
                    ok = ok and r <= thr
            t.tally(ok, worst, {"sample": k, "a": _mat(a)})

    _run_statement(report, "thm:contexts", "matrix", closed_form)
    _run_statement(report, "thm:contexts.functions", "matrix", functions)
    _run_statement(report, "thm:contexts.reduced", "matrix", reduced)


def _context_mv(report: SuiteReport, size: int, samples: int, seed: int,
                tol: Tolerances, merge_delta: float) -> None:
    ctx = fz.FuzzyContext(tol)

    def smp_for(sid: str) -> fz.FuzzySampler:
        return fz.FuzzySampler(_seed_for(seed, "context", sid), size)

    def closed_form(t: _Tally) -> None:
        smp = smp_for("thm:contexts")
        for k in range(samples):
            a = smp.fuzzy()
            _, part, mu = fz.mv_is_context_spectral(a, merge_delta)
            steps = [fz.zero(size).values]
            acc = np.zeros(size)
            for blk in part.blocks:
                acc = acc.copy()
                acc[list(blk)] = 1.0
                steps.append(acc)
            fam = sp.spectral_family(a, ctx, tol)
            ok = len(steps) == len(fam.projections)
            if ok:
                ok = all(np.array_equal(s, p.values)
                         for s, p in zip(steps, fam.projections))
                ok = ok and tuple(mu) == fam.breakpoints
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a),
                                    "closed_steps": len(steps),
                                    "family_steps": len(fam.projections)})

    def functions(t: _Tally) -> None:
        smp = smp_for("thm:contexts.functions")
        for k in range(samples):
            a = smp.fuzzy()
            rep = sp.reduced_representation(a, ctx, tol)
            nodes = list(rep.coefficients)
            if merge_delta > 0.0:
                nodes = [mu for j, mu in enumerate(nodes)
                         if j == 0 or mu - nodes[j - 1] > merge_delta]
            ok = True
            for i, proj in enumerate(rep.projections[:len(nodes)]):
                coeffs = _lagrange_coefficients(nodes, i, conv=Fraction)
                image = []
                for v in a.values:
                    acc = Fraction(0)
                    x = Fraction(v)
                    powv = Fraction(1)
                    for c in coeffs:
                        acc += c * powv
                        powv *= x
                    image.append(float(acc))
                ok = ok and np.array_equal(np.array(image), proj.values)
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a)})

    def reduced(t: _Tally) -> None:
        smp = smp_for("thm:contexts.reduced")
        for k in range(samples):
            a = smp.fuzzy()
            rep = sp.reduced_representation(a, ctx, tol)
            fam = sp.spectral_family(a, ctx, tol)
            ok = all(y > x for x, y in
                     zip(rep.coefficients, rep.coefficients[1:]))
            for j in range(1, len(fam.breakpoints) + 1):
                ok = ok and np.array_equal(fam.jump(j),
                                           rep.projections[j - 1].values)
                ok = ok and fam.breakpoints[j - 1] == rep.coefficients[j - 1]
            for i in range(len(rep.projections)):
                for j in range(i + 1, len(rep.projections)):
                    ok = ok and bool(np.all(rep.projections[i].values
                                            * rep.projections[j].values
                                            == 0.0))
            t.tally(bool(ok), 0.0, {"sample": k, "a": _vals(a)})

    _run_statement(report, "thm:contexts", "mv", closed_form)
    _run_statement(report, "thm:contexts.functions", "mv", functions)
    _run_statement(report, "thm:contexts.reduced", "mv", reduced)


def run_context_suite(model: str = "matrix", dim_or_size: int = 4,
                      samples: int = 200, seed: int = 42,
                      tol: Tolerances = DEFAULT,
                      merge_delta: float = 0.0) -> SuiteReport:
    """Reduced representations, closed-form families, functions of a."""
    if samples < 1:
        raise ValueError("samples must be positive")
    report = SuiteReport(
        suite="context", model=model, seed=seed,
        config={"dim_or_size": dim_or_size, "samples": samples,
                "merge_delta": merge_delta, "tolerances": tol.to_dict()})
    if merge_delta > 0.0:
        report.metadata["negative_control"] = True
    if model == "matrix":
        _context_matrix(report, dim_or_size, samples, seed, tol, merge_delta)
    elif model == "mv":
        _context_mv(report, dim_or_size, samples, seed, tol, merge_delta)
    else:
        raise ValueError(f"unknown model {model!r}")
    return report


# ---------------------------------------------------------------------------
# finite-table suite


def _broken_e1_table() -> tb.FiniteEffectAlgebra:
    alg = tb.lukasiewicz(3)
    table = alg.table.copy()
    table[0, 1] = 0
    return tb.FiniteEffectAlgebra(table, one=alg.one, labels=alg.labels)


def _broken_e4_table() -> tb.FiniteEffectAlgebra:
    alg = tb.lukasiewicz(3)
    table = alg.table.copy()
    table[alg.one, alg.one] = alg.one
    return tb.FiniteEffectAlgebra(table, one=alg.one, labels=alg.labels)


def run_table_suite(seed: int = 42, tol: Tolerances = DEFAULT,
                    corrupted: bool = False) -> SuiteReport:
    """Exhaustive axiom checks on the built-in Cayley tables, plus the
    cross-model oracle against the fuzzy embeddings."""
    report = SuiteReport(
        suite="tables", model="table", seed=seed,
        config={"tables": list(tb.BUILTIN_NAMES), "corrupted": corrupted,
                "tolerances": tol.to_dict()})
    if corrupted:
        report.metadata["negative_control"] = True
        for name, factory in (("broken-e1", _broken_e1_table),
                              ("broken-e4", _broken_e4_table)):
            for result in tb.check_ea_axioms(factory(), name).results:
                report.add(result)
        return report

    for name in tb.BUILTIN_NAMES:
        alg = tb.builtin_table(name)
        for result in tb.check_ea_axioms(alg, name).results:
            report.add(result)

    def oracle(t: _Tally) -> None:
        for name in tb.BUILTIN_NAMES:
            alg = tb.builtin_table(name)
            image = tb.fuzzy_embedding(name)
            for i in alg.elements():
                ok = (not alg.is_principal(i)) or alg.is_sharp(i)
                t.tally(ok, 0.0, {"table": name, "element": alg.label(i),
                                  "clause": "principal implies sharp"})
            if image is None:
                continue
            for i in alg.elements():
                comp = alg.orthosupplement(i)
                ok = image[comp] == fz.mv_neg(image[i])
                t.tally(bool(ok), 0.0, {"table": name,
                                        "element": alg.label(i),
                                        "clause": "orthosupplement"})
                ok = alg.is_sharp(i) == fz.mv_is_sharp(image[i])
                t.tally(bool(ok), 0.0, {"table": name,
                                        "element": alg.label(i),
                                        "clause": "sharpness"})
            for i in alg.elements():
                for j in alg.elements():
                    s = alg.oplus(i, j)
                    mv_sum = fz.mv_oplus(image[i], image[j])
                    ok = ((s is None) == (mv_sum is None)
                          and (s is None or image[s] == mv_sum))
                    t.tally(bool(ok), 0.0,
                            {"table": name, "a": alg.label(i),
                             "b": alg.label(j), "clause": "sum"})
                    ok = alg.leq(i, j) == fz.mv_leq(image[i], image[j])
                    t.tally(bool(ok), 0.0,
                            {"table": name, "a": alg.label(i),
                             "b": alg.label(j), "clause": "order"})
                    inf = alg.brute_inf([i, j])
                    meet = fz.mv_meet(image[i], image[j])
                    ok = inf is not None and image[inf] == meet
                    t.tally(bool(ok), 0.0,
                            {"table": name, "a": alg.label(i),
                             "b": alg.label(j), "clause": "infimum"})
                    ok = alg.mackey_compatible(i, j)
                    t.tally(bool(ok), 0.0,
                            {"table": name, "a": alg.label(i),
                             "b": alg.label(j), "clause": "compatibility"})

    def diamond_shape(t: _Tally) -> None:
        alg = tb.builtin_table("diamond")
        t.tally(tb.incompatible_pairs(alg) == [(1, 2)], 0.0,
                {"clause": "incompatible pair a,b"})
        t.tally(tb.non_sharp_elements(alg) == [1, 2], 0.0,
                {"clause": "a and b are not sharp"})
        t.tally(tb.non_principal_elements(alg) == [1, 2], 0.0,
                {"clause": "a and b are not principal"})
        t.tally(alg.brute_inf([1, 2]) == 0
                and alg.brute_sup([1, 2]) == 3, 0.0,
                {"clause": "lattice bounds of a,b"})

    _run_statement(report, "tables:oracle", "table", oracle)
    _run_statement(report, "tables:diamond", "table", diamond_shape)
    return report


# ---------------------------------------------------------------------------
# all suites


def run_all(model: str = "matrix", dim_or_size: int = 4, samples: int = 200,
            seed: int = 42, tol: Tolerances = DEFAULT) -> list[SuiteReport]:
    """Every suite plus its negative control, in a stable order."""
    control_samples = max(1, samples // 4)
    broken_product = "jordan" if model == "matrix" else "lukasiewicz"
    return [
        run_sea_suite(model, dim_or_size, samples, seed, tol),
        run_compression_suite(model, dim_or_size, samples, seed, tol),
        run_spectrality_suite(model, dim_or_size, samples, seed, tol),
        run_context_suite(model, dim_or_size, samples, seed, tol),
        run_table_suite(seed=seed, tol=tol),
        run_sea_suite(model, dim_or_size, control_samples, seed, tol,
                      product=broken_product),
        run_compression_suite(model, dim_or_size, control_samples, seed,
                              tol, focus="soft"),
        run_spectrality_suite(model, dim_or_size, control_samples, seed,
                              tol, floor_mode="cover"),
        run_context_suite(model, dim_or_size, control_samples, seed, tol,
                          merge_delta=0.25),
        run_table_suite(seed=seed, tol=tol, corrupted=True),
    ]
