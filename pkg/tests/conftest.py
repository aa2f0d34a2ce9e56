"""Shared test helpers and hypothesis configuration."""

from __future__ import annotations

import numpy as np
from hypothesis import HealthCheck, settings

from svineq.randgen import prng_stream, sample

settings.register_profile(
    "svineq",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("svineq")


def mat(rows) -> np.ndarray:
    """Build a complex matrix from nested lists (test shorthand)."""
    return np.array(rows, dtype=np.complex128)


def draw(class_tag: str, dim: int, seed: int, index: int = 0, scale: float = 1.0):
    """One deterministic generator draw for property tests."""
    return sample(class_tag, dim, prng_stream(seed, index), scale)


# Small fixed matrices reused across test modules.
SHIFT_2 = mat([[0, 1], [0, 0]])          # rank-one nilpotent, not Hermitian
PAULI_X = mat([[0, 1], [1, 0]])
PAULI_Z = mat([[1, 0], [0, -1]])
