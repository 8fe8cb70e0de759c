"""Numerical tolerances used across the package.

All magic constants live here so that the command line can override them in
one place and reports can record the exact configuration they ran under.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Tolerance bundle for the matrix model.

    psd      : slack allowed below zero when testing positive semidefiniteness
    proj     : Frobenius bound on ||P @ P - P|| for admissible projections
    eig      : relative bound on ||A - Q L Q*|| for the eigensolver output
    jacobi   : relative off-diagonal Frobenius target for Jacobi sweeps
    cluster  : eigenvalues closer than this (relative) share a cluster
    kernel   : absolute threshold below which an eigenvalue counts as zero
    comm     : Frobenius bound on commutation residuals
    check    : generic residual threshold for verifier statements
    trace    : bound on |tr(rho) - 1| for states
    """

    psd: float = 1e-9
    proj: float = 1e-8
    eig: float = 1e-10
    jacobi: float = 1e-12
    cluster: float = 1e-8
    kernel: float = 1e-8
    comm: float = 1e-9
    check: float = 1e-8
    trace: float = 1e-10

    def replace(self, **changes: float) -> "Tolerances":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


DEFAULT = Tolerances()
