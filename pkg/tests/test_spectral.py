"""Spectral families, reconstruction, approximations, decompositions."""
import numpy as np
import pytest

from seakit import fuzzy as fz
from seakit import matrices as mx
from seakit.config import DEFAULT
from seakit.linalg import operator_norm
from seakit.spectral import (
    MatrixContext,
    UnsupportedContextError,
    comparability_witness,
    eigenprojection,
    family_from_json,
    family_from_representation,
    orthogonal_decomposition,
    reconstruct,
    reduced_representation,
    resolve_context,
    simple_approximation,
    sign_witness_projections,
    spectral_bounds,
    spectral_family,
)


def effect(*values):
    return mx.validate_effect(np.diag(np.array(values, dtype=float)))


def raw(p):
    if isinstance(p, mx.Effect):
        return np.asarray(p.matrix)
    if isinstance(p, fz.FuzzySet):
        return np.asarray(p.values)
    return np.asarray(p)


def test_family_of_diagonal_effect():
    fam = spectral_family(effect(0.2, 0.7))
    assert fam.breakpoints == (0.2, 0.7)
    assert np.allclose(raw(fam.at(0.1)), np.zeros((2, 2)), atol=1e-10)
    assert np.allclose(raw(fam.at(0.3)), np.diag([1.0, 0.0]), atol=1e-10)
    assert np.allclose(raw(fam.at(0.7)), np.eye(2), atol=1e-10)
    bounds = spectral_bounds(effect(0.2, 0.7))
    assert bounds.L == pytest.approx(0.2)
    assert bounds.U == pytest.approx(0.7)


def test_family_of_projection_and_scalar():
    p = mx.Projection(np.diag([1.0, 0.0]))
    fam = spectral_family(p)
    assert fam.breakpoints == (0.0, 1.0)
    assert np.allclose(raw(fam.at(0.5)), np.diag([0.0, 1.0]), atol=1e-10)
    fam = spectral_family(effect(0.4, 0.4))
    assert fam.breakpoints == (0.4,)
    assert np.allclose(raw(fam.at(0.4)), np.eye(2), atol=1e-10)


def test_family_is_right_continuous_with_eigen_jumps():
    a = effect(0.2, 0.5, 0.5)
    fam = spectral_family(a)
    for k, b in enumerate(fam.breakpoints, start=1):
        eps = 1e-9
        assert np.allclose(raw(fam.at(b + eps)), raw(fam.at(b)), atol=1e-8)
        jump = fam.jump(k)
        proj = raw(eigenprojection(a, b))
        assert np.allclose(jump, proj, atol=1e-8)
    assert np.allclose(raw(eigenprojection(a, 0.3)), np.zeros((3, 3)),
                       atol=1e-10)


def test_reconstruction_error_tracks_mesh():
    sampler = mx.EffectSampler(13, 5)
    for _ in range(5):
        a = sampler.effect()
        fam = spectral_family(a)
        exact = reconstruct(fam)
        assert operator_norm(np.asarray(a.matrix) - exact) <= 1e-8
        for mesh in (0.1, 0.01, 0.001):
            approx = reconstruct(fam, mesh)
            assert operator_norm(np.asarray(a.matrix) - approx) <= mesh


def test_simple_approximation_dyadic_staircase():
    a = effect(0.2, 0.7)
    a1 = simple_approximation(a, 1)
    assert np.allclose(a1, np.diag([0.0, 0.5]), atol=1e-10)
    a3 = simple_approximation(a, 3)
    assert np.allclose(a3, np.diag([0.125, 0.625]), atol=1e-10)
    with pytest.raises(ValueError):
        simple_approximation(a, 0)


def test_orthogonal_decomposition_of_diagonal():
    dec = orthogonal_decomposition(np.diag([0.3, -0.4]))
    assert np.allclose(np.asarray(dec.v_plus), np.diag([0.3, 0.0]),
                       atol=1e-10)
    assert np.allclose(np.asarray(dec.v_minus), np.diag([0.0, 0.4]),
                       atol=1e-10)
    assert np.allclose(raw(dec.p), np.diag([1.0, 0.0]), atol=1e-10)


def test_sign_witnesses_agree():
    v = np.diag([0.5, -0.2, 0.0])
    splits = []
    for q in sign_witness_projections(v):
        ctx = MatrixContext(DEFAULT)
        plus = ctx.compress(q, v)
        minus = -ctx.compress(ctx.complement(q), v)
        splits.append((plus, minus))
    assert len(splits) >= 2
    for plus, minus in splits[1:]:
        assert np.allclose(plus, splits[0][0], atol=1e-8)
        assert np.allclose(minus, splits[0][1], atol=1e-8)


def test_comparability_witness_sidewise():
    e, f = effect(0.3, 0.6), effect(0.5, 0.4)
    wit = comparability_witness(e, f)
    assert np.allclose(raw(wit.p), np.diag([1.0, 0.0]), atol=1e-10)
    assert not wit.degenerate
    tie = comparability_witness(effect(0.3, 0.5), effect(0.3, 0.7))
    assert tie.degenerate


def test_comparability_needs_commutation():
    e = mx.validate_effect(np.array([[0.5, 0.1], [0.1, 0.5]]))
    f = effect(0.3, 0.8)
    with pytest.raises(mx.NotCommutingError):
        comparability_witness(e, f)


def test_reduced_representation_round_trip():
    a = effect(0.2, 0.2, 0.9)
    rep = reduced_representation(a)
    assert list(rep.coefficients) == pytest.approx([0.2, 0.9])
    fam = spectral_family(a)
    rebuilt = family_from_representation(rep.coefficients, rep.projections,
                                         "matrix")
    assert rebuilt.breakpoints == fam.breakpoints
    for lam in (0.1, 0.2, 0.5, 0.9):
        assert np.allclose(raw(rebuilt.at(lam)), raw(fam.at(lam)), atol=1e-8)


def test_family_json_round_trip():
    a = mx.EffectSampler(21, 3).effect()
    fam = spectral_family(a)
    back = family_from_json(fam.to_json_dict())
    assert back.breakpoints == fam.breakpoints
    assert back.model == fam.model
    for k in range(len(back.projections)):
        assert np.allclose(np.asarray(back.projections[k]),
                           raw(fam.projections[k]), atol=1e-12)
    mv = fz.mv_spectral_family(fz.FuzzySet(np.array([0.25, 0.75])))
    back = family_from_json(mv.to_json_dict())
    assert back.breakpoints == mv.breakpoints


def test_fuzzy_elements_use_the_same_engine():
    a = fz.FuzzySet(np.array([0.2, 0.2, 0.9]))
    fam = spectral_family(a)
    assert fam.breakpoints == (0.2, 0.9)
    assert np.array_equal(raw(fam.at(0.2)), [1.0, 1.0, 0.0])
    engine = reconstruct(fam)
    assert np.array_equal(engine, a.values)
    closed = fz.mv_spectral_family(a)
    assert closed.breakpoints == fam.breakpoints


def test_unsupported_inputs_are_rejected():
    with pytest.raises(UnsupportedContextError):
        resolve_context(np.zeros((2, 2, 2)))
    with pytest.raises(UnsupportedContextError):
        resolve_context("text")


def test_csv_lines_format():
    fam = spectral_family(effect(0.2, 0.7))
    lines = fam.csv_lines(points=5, lo=0.0, hi=1.0)
    assert lines[0] == "lambda,rank"
    assert len(lines) == 6
    assert lines[1].startswith("0.000000,")
    assert lines[-1].endswith(",2")
