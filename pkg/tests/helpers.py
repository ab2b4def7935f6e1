"""Shared random generators for the test suite."""

from __future__ import annotations

import numpy as np

from flipswitch.channels import KrausSet, PhaseCovParams


def random_valid_triple(rng: np.random.Generator, unital: bool = False) -> PhaseCovParams:
    """Sample a CPTP-valid parameter triple with margin from the boundary."""
    lam_z = rng.uniform(-0.95, 0.95)
    if unital:
        lam_star = 0.0
    else:
        lam_star = rng.uniform(-1.0, 1.0) * 0.97 * (1.0 - abs(lam_z))
    bound = 0.5 * np.sqrt(max((1.0 + lam_z) ** 2 - lam_star**2, 0.0))
    lam = rng.uniform(-1.0, 1.0) * 0.97 * bound
    return PhaseCovParams(lam, lam_z, lam_star)


def random_pure_ket(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def remix_kraus(k: KrausSet, rng: np.random.Generator, pad: int = 0) -> KrausSet:
    """Isometric remix of a Kraus set over the operator index."""
    ops = list(k.operators) + [np.zeros_like(k.operators[0]) for _ in range(pad)]
    v = random_unitary(rng, len(ops))
    mixed = tuple(
        sum(v[i, j] * ops[j] for j in range(len(ops))) for i in range(len(ops))
    )
    return KrausSet(mixed, k.label + "+remix")
