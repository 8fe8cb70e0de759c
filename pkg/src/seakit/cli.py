"""Command-line front end.

Verbs: validate, spectrum, approx, decompose, witness, verify, mv.
Exit codes: 0 on success or a passing suite, 1 on a domain failure
(invalid element, failing suite, non-commuting pair), 2 on usage or
parse errors.  All JSON output is pretty-printed with sorted keys.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .config import DEFAULT, Tolerances
from .linalg import NotHermitianError, frobenius, operator_norm
from .report import merge_reports
from . import fuzzy as fz
from . import matrices as mx
from . import spectral as sp
from . import verify


class _UsageError(Exception):
    """Malformed input document or bad flag combination: exit code 2."""


class _DomainError(Exception):
    """Well-formed input that fails validation: exit code 1."""


# ---------------------------------------------------------------------------
# input and output helpers


def _load_doc(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from exc


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _parse_element(doc) -> tuple[str, np.ndarray]:
    """Tagged raw payload: ("matrix", 2-d complex) or ("fuzzy", 1-d real).

    Shape problems are usage errors; value-range checks belong to the
    individual commands.
    """
    if not isinstance(doc, dict):
        raise _UsageError("top-level JSON object expected")
    if "values" in doc:
        vals = doc["values"]
        if (not isinstance(vals, list) or not vals
                or not all(_is_number(x) for x in vals)):
            raise _UsageError("values must be a non-empty list of numbers")
        if "space" in doc and doc["space"] != len(vals):
            raise _UsageError("space field disagrees with the value count")
        return "fuzzy", np.asarray(vals, dtype=float)
    if "re" in doc:
        re = doc["re"]
        if (not isinstance(re, list) or not re
                or any(not isinstance(row, list) or len(row) != len(re)
                       or not all(_is_number(x) for x in row) for row in re)):
            raise _UsageError("re must be a square matrix of numbers")
        n = len(re)
        if "dim" in doc and doc["dim"] != n:
            raise _UsageError("dim field disagrees with the matrix size")
        arr = np.asarray(re, dtype=float).astype(np.complex128)
        if "im" in doc:
            im = doc["im"]
            if (not isinstance(im, list) or len(im) != n
                    or any(not isinstance(row, list) or len(row) != n
                           or not all(_is_number(x) for x in row)
                           for row in im)):
                raise _UsageError("im must match the shape of re")
            arr = arr + 1j * np.asarray(im, dtype=float)
        return "matrix", arr
    raise _UsageError('document needs either "re" (matrix) or "values" '
                      "(fuzzy set)")


def _load_element(path: str) -> tuple[str, np.ndarray]:
    return _parse_element(_load_doc(path))


def _element_json(raw: np.ndarray) -> dict:
    arr = np.asarray(raw) + 0.0
    if arr.ndim == 1:
        return {"space": int(arr.shape[0]), "values": arr.real.tolist()}
    doc = {"dim": int(arr.shape[0]), "re": (np.real(arr) + 0.0).tolist()}
    im = np.imag(arr)
    if np.any(im != 0.0):
        doc["im"] = (im + 0.0).tolist()
    return doc


def _write_json(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _tolerances(args: argparse.Namespace) -> Tolerances:
    changes = {}
    if args.tol_psd is not None:
        changes["psd"] = args.tol_psd
    if args.tol_comm is not None:
        changes["comm"] = args.tol_comm
    if args.tol_cluster is not None:
        changes["cluster"] = args.tol_cluster
    return DEFAULT.replace(**changes) if changes else DEFAULT


def _classify(kind: str, raw: np.ndarray, tol: Tolerances
              ) -> tuple[str, float | None]:
    """("effect"|"projection", None) or raises _DomainError."""
    if kind == "fuzzy":
        bad = raw[(raw < 0.0) | (raw > 1.0)]
        if bad.size:
            raise _DomainError(f"not an effect (λ={float(bad[0]):g})")
        if np.all((raw == 0.0) | (raw == 1.0)):
            return "projection", None
        return "effect", None
    try:
        eff = mx.validate_effect(raw, tol)
    except NotHermitianError as exc:
        raise _DomainError("not an effect (not hermitian)") from exc
    except mx.NotAnEffectError as exc:
        raise _DomainError(f"not an effect (λ={exc.eigenvalue:g})") from exc
    defect = frobenius(eff.matrix @ eff.matrix - eff.matrix)
    if defect <= tol.proj:
        return "projection", None
    return "effect", None


def _as_effect(kind: str, raw: np.ndarray, tol: Tolerances):
    _classify(kind, raw, tol)
    if kind == "fuzzy":
        return fz.FuzzySet(raw)
    return mx.validate_effect(raw, tol)


def _single_input(args: argparse.Namespace) -> str:
    if len(args.input) != 1:
        raise _UsageError("this command takes exactly one --input file")
    return args.input[0]


def _gap(kind: str, a: np.ndarray, b: np.ndarray, tol: Tolerances) -> float:
    if kind == "fuzzy":
        return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
    return operator_norm(np.asarray(a) - np.asarray(b), tol)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args: argparse.Namespace) -> int:
    kind, raw = _load_element(_single_input(args))
    tol = _tolerances(args)
    try:
        label, _ = _classify(kind, raw, tol)
    except _DomainError as exc:
        print(exc)
        if args.out:
            _write_json({"classification": "not-an-effect",
                         "detail": str(exc)}, args.out)
        return 1
    print(label)
    if args.out:
        _write_json({"classification": label}, args.out)
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    kind, raw = _load_element(_single_input(args))
    tol = _tolerances(args)
    if args.mesh <= 0.0:
        raise _UsageError("--mesh must be positive")
    effect = _as_effect(kind, raw, tol)
    fam = sp.spectral_family(effect, tol=tol)
    bounds = sp.spectral_bounds(effect, tol=tol)
    rep = sp.reduced_representation(effect, tol=tol)
    exact = sp.reconstruct(fam)
    meshed = sp.reconstruct(fam, args.mesh)
    doc = {
        "model": fam.model,
        "family": fam.to_json_dict(),
        "bounds": {"L": bounds.L, "U": bounds.U},
        "eigenvalues": [float(x) for x in rep.coefficients],
        "eigenprojections": [_element_json(np.asarray(
            p.matrix if isinstance(p, mx.Effect) else p.values))
            for p in rep.projections],
        "mesh": args.mesh,
        "reconstruction_residual": _gap(kind, raw, meshed, tol),
        "breakpoint_residual": _gap(kind, raw, exact, tol),
    }
    _write_json(doc, args.out)
    if args.out:
        csv_path = os.path.splitext(args.out)[0] + ".csv"
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(fam.csv_lines()) + "\n")
        print(f"wrote {args.out} and {csv_path}; reconstruction residual "
              f"{doc['reconstruction_residual']:.3g} at mesh {args.mesh:g}")
    return 0


def cmd_approx(args: argparse.Namespace) -> int:
    kind, raw = _load_element(_single_input(args))
    tol = _tolerances(args)
    if not 1 <= args.levels <= 24:
        raise _UsageError("--levels must be between 1 and 24")
    effect = _as_effect(kind, raw, tol)
    rows = []
    for n in range(1, args.levels + 1):
        an = np.asarray(sp.simple_approximation(effect, n, tol=tol))
        rows.append({"level": n, "bound": 2.0 ** -n,
                     "gap": _gap(kind, raw, an, tol),
                     "element": _element_json(an)})
    doc = {"model": "fuzzy" if kind == "fuzzy" else "matrix",
           "levels": rows}
    _write_json(doc, args.out)
    if args.out:
        print(f"wrote {args.out}; worst gap "
              f"{max(r['gap'] for r in rows):.3g}")
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    kind, raw = _load_element(_single_input(args))
    tol = _tolerances(args)
    if kind == "matrix":
        try:
            from .linalg import require_hermitian
            raw = require_hermitian(raw)
        except NotHermitianError as exc:
            raise _DomainError("input is not hermitian") from exc
    dec = sp.orthogonal_decomposition(raw, tol=tol)
    doc = {
        "model": "fuzzy" if kind == "fuzzy" else "matrix",
        "v_plus": _element_json(np.asarray(dec.v_plus)),
        "v_minus": _element_json(np.asarray(dec.v_minus)),
        "projection": _element_json(np.asarray(
            dec.p.matrix if isinstance(dec.p, mx.Effect) else dec.p.values)),
    }
    _write_json(doc, args.out)
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    if len(args.input) != 2:
        raise _UsageError("witness takes exactly two --input files")
    tol = _tolerances(args)
    kinds, effects = [], []
    for path in args.input:
        kind, raw = _load_element(path)
        kinds.append(kind)
        effects.append(_as_effect(kind, raw, tol))
    if kinds[0] != kinds[1]:
        raise _UsageError("witness inputs must share a model")
    try:
        wit = sp.comparability_witness(effects[0], effects[1], tol=tol)
    except mx.NotCommutingError as exc:
        raise _DomainError("elements do not commute") from exc
    except mx.DimensionMismatchError as exc:
        raise _DomainError(str(exc)) from exc
    except fz.SpaceMismatchError as exc:
        raise _DomainError(str(exc)) from exc
    p = wit.p
    doc = {
        "model": "fuzzy" if kinds[0] == "fuzzy" else "matrix",
        "p": _element_json(np.asarray(
            p.matrix if isinstance(p, mx.Effect) else p.values)),
        "degenerate": wit.degenerate,
    }
    _write_json(doc, args.out)
    return 0


def cmd_mv(args: argparse.Namespace) -> int:
    kind, raw = _load_element(_single_input(args))
    tol = _tolerances(args)
    effect = _as_effect(kind, raw, tol)
    if kind == "fuzzy":
        _, ctx, mu = fz.mv_is_context_spectral(effect)
        fam = fz.mv_spectral_family(effect)
        doc = {
            "space": effect.space,
            "mu": [float(x) for x in mu],
            "parts": [list(blk) for blk in ctx.blocks],
            "family": fam.to_json_dict(),
            "sharp": fz.mv_is_sharp(effect),
        }
    else:
        image, rep = fz.spectrum_representation(effect, tol=tol)
        doc = {
            "space": rep.space,
            "degree": rep.degree,
            "samples": rep.samples,
            "values": image.values.tolist(),
            "mult_residual": rep.mult_residual,
            "isometry_residual": rep.isometry_residual,
        }
    _write_json(doc, args.out)
    return 0


def _summarize(doc: dict) -> None:
    suites = doc["suites"] if "suites" in doc else [doc]
    for srep in suites:
        control = srep.get("metadata", {}).get("negative_control", False)
        tag = " [negative control]" if control else ""
        print(f"suite {srep['suite']} ({srep['model']}): "
              f"{srep['verdict']}{tag}")
        for r in srep["results"]:
            if r["passed"] == r["samples"]:
                continue
            witness = json.dumps(r.get("witness"), sort_keys=True)
            if len(witness) > 160:
                witness = witness[:157] + "..."
            print(f"  FAIL {r['statement_id']} ({r['model']}): "
                  f"{r['passed']}/{r['samples']} passed, "
                  f"max residual {r['max_residual']:.3g}, "
                  f"witness {witness}")
    print(f"verdict: {doc['verdict']}")


def cmd_verify(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    model = args.model
    dim_or_size = args.size if model == "mv" else args.dim
    if args.product != "standard":
        if args.suite != "sea":
            raise _UsageError("--product applies to the sea suite only")
        if model == "matrix" and args.product != "jordan":
            raise _UsageError("matrix model control product is 'jordan'")
        if model == "mv" and args.product != "lukasiewicz":
            raise _UsageError("mv model control product is 'lukasiewicz'")
    if args.suite == "all":
        reports = verify.run_all(model, dim_or_size, args.samples,
                                 args.seed, tol)
        doc = merge_reports(reports)
    elif args.suite == "sea":
        rep = verify.run_sea_suite(model, dim_or_size, args.samples,
                                   args.seed, tol, product=args.product)
        doc = rep.to_dict()
    elif args.suite == "compression":
        rep = verify.run_compression_suite(model, dim_or_size, args.samples,
                                           args.seed, tol)
        doc = rep.to_dict()
    elif args.suite == "spectrality":
        rep = verify.run_spectrality_suite(model, dim_or_size, args.samples,
                                           args.seed, tol)
        doc = rep.to_dict()
    else:
        rep = verify.run_context_suite(model, dim_or_size, args.samples,
                                       args.seed, tol)
        doc = rep.to_dict()
    _summarize(doc)
    if args.out:
        _write_json(doc, args.out)
    return 0 if doc["verdict"] == "pass" else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    io_flags = argparse.ArgumentParser(add_help=False)
    io_flags.add_argument("--input", nargs="+", required=True,
                          help="JSON element file(s)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here")
    common.add_argument("--tol-psd", type=float, default=None,
                        help="positive-semidefiniteness slack")
    common.add_argument("--tol-comm", type=float, default=None,
                        help="commutation residual threshold")
    common.add_argument("--tol-cluster", type=float, default=None,
                        help="eigenvalue clustering width")

    parser = argparse.ArgumentParser(
        prog="seakit",
        description="Effect-algebra toolkit: validation, spectral data, "
                    "property suites.")
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("validate", parents=[io_flags, common],
                   help="classify an element as effect, projection, or "
                        "neither").set_defaults(fn=cmd_validate)

    p = sub.add_parser("spectrum", parents=[io_flags, common],
                       help="spectral family, bounds, and reconstruction")
    p.add_argument("--mesh", type=float, default=0.01,
                   help="partition mesh for the reconstruction residual")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("approx", parents=[io_flags, common],
                       help="dyadic simple approximations")
    p.add_argument("--levels", type=int, default=8,
                   help="number of approximation levels")
    p.set_defaults(fn=cmd_approx)

    sub.add_parser("decompose", parents=[io_flags, common],
                   help="orthogonal positive/negative decomposition"
                   ).set_defaults(fn=cmd_decompose)

    sub.add_parser("witness", parents=[io_flags, common],
                   help="comparability witness for a commuting pair"
                   ).set_defaults(fn=cmd_witness)

    sub.add_parser("mv", parents=[io_flags, common],
                   help="context-spectral data (fuzzy input) or the "
                        "commutative spectrum representation (matrix input)"
                   ).set_defaults(fn=cmd_mv)

    p = sub.add_parser("verify", parents=[common],
                       help="run a property suite")
    p.add_argument("--suite", required=True,
                   choices=["sea", "compression", "spectrality", "context",
                            "all"])
    p.add_argument("--model", choices=["matrix", "mv"], default="matrix")
    p.add_argument("--dim", type=int, default=4,
                   help="matrix dimension (matrix model)")
    p.add_argument("--size", type=int, default=8,
                   help="point-set size (mv model)")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--product",
                   choices=["standard", "jordan", "lukasiewicz"],
                   default="standard",
                   help="sequential product for the sea suite; the "
                        "non-standard choices are failing controls")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DomainError as exc:
        print(exc)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
