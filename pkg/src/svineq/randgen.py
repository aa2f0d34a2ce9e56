"""Seeded, reproducible random matrix generators.

Randomness comes from a counter-based stream: every draw is a pure
function of (seed, stream_index, position), built from a 64-bit avalanche
mix of the counter.  Distinct stream indices give statistically
independent streams, so parallel fuzz trials can each own index = trial
number without coordination.

Generator classes map onto the hypothesis classes the inequality catalog
needs: plain Ginibre matrices, Hermitian/PSD/unitary/normal samples,
PSD 2x2-block partitions, dominated Hermitian pairs (±A <= B by
construction), order-constrained normal matrices (Hermitian part plus
skew part PSD), and normal pairs sharing one eigenbasis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numkernel import MAX_DIM, abs_op

CLASS_ARITY: dict[str, int] = {
    "ginibre": 1,
    "hermitian": 1,
    "psd": 1,
    "unitary": 1,
    "normal": 1,
    "psd_block2": 3,
    "dominated_pair": 2,
    "normal_order_constrained": 1,
    "normal_pair_shared_basis": 2,
}

CLASS_TAGS = tuple(CLASS_ARITY)

_U64 = np.uint64
_GOLDEN = _U64(0x9E3779B97F4A7C15)
_SALT = _U64(0xD1B54A32D192ED03)
_MIX1 = _U64(0xBF58476D1CE4E5B9)
_MIX2 = _U64(0x94D049BB133111EB)


class InvalidSpec(ValueError):
    """Generator spec fields are out of range or inconsistent."""


def _check_u64(value: int, name: str) -> int:
    if not isinstance(value, (int, np.integer)) or not 0 <= int(value) < 2**64:
        raise InvalidSpec(f"{name} must be an unsigned 64-bit integer, got {value!r}")
    return int(value)


def _mix64(x: np.ndarray) -> np.ndarray:
    """SplitMix64-style avalanche of an array of uint64 counters."""
    x = (x ^ (x >> _U64(30))) * _MIX1
    x = (x ^ (x >> _U64(27))) * _MIX2
    return x ^ (x >> _U64(31))


class Stream:
    """Deterministic scalar stream keyed by (seed, stream_index).

    Word i of the stream is mix(key + (i+1)*GOLDEN) where the key itself
    is a mix of seed and index, so draws at any position can be computed
    independently; the object only tracks how many words were consumed.
    """

    def __init__(self, seed: int, stream_index: int):
        seed = _check_u64(seed, "seed")
        stream_index = _check_u64(stream_index, "stream_index")
        key = _mix64(np.array([seed], dtype=_U64) + _GOLDEN)
        key ^= _mix64(np.array([stream_index], dtype=_U64) + _SALT)
        self._key = _mix64(key)
        self._pos = 0

    def raw(self, count: int) -> np.ndarray:
        """Next ``count`` uint64 words."""
        idx = np.arange(self._pos + 1, self._pos + count + 1, dtype=_U64)
        self._pos += count
        return _mix64(self._key + idx * _GOLDEN)

    def uniforms(self, count: int) -> np.ndarray:
        """Uniform doubles in [0, 1) from the top 53 bits of each word."""
        return (self.raw(count) >> _U64(11)) * 2.0**-53

    def normals(self, count: int) -> np.ndarray:
        """Standard real Gaussians via the Box-Muller transform."""
        pairs = (count + 1) // 2
        u1 = self.uniforms(pairs)
        u2 = self.uniforms(pairs)
        # log(1-u1) is safe: u1 < 1 exactly, and log1p(0) = 0 maps to z = 0.
        radius = np.sqrt(-2.0 * np.log1p(-u1))
        angle = (2.0 * math.pi) * u2
        return np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])[:count]

    def complex_normals(self, count: int) -> np.ndarray:
        """Standard complex Gaussians (E|z|^2 = 1)."""
        z = self.normals(2 * count)
        return (z[:count] + 1j * z[count:]) * (2.0**-0.5)


def prng_stream(seed: int, stream_index: int) -> Stream:
    return Stream(seed, stream_index)


@dataclass(frozen=True)
class GeneratorSpec:
    class_tag: str
    dim: int
    seed: int
    scale: float = 1.0

    def __post_init__(self):
        if self.class_tag not in CLASS_ARITY:
            raise InvalidSpec(f"unknown class_tag {self.class_tag!r}")
        if not isinstance(self.dim, (int, np.integer)) or not 1 <= self.dim <= MAX_DIM:
            raise InvalidSpec(f"dim must be in 1..{MAX_DIM}, got {self.dim!r}")
        _check_u64(self.seed, "seed")
        if not (isinstance(self.scale, (int, float)) and math.isfinite(self.scale) and self.scale > 0):
            raise InvalidSpec(f"scale must be a positive finite real, got {self.scale!r}")


@dataclass(frozen=True)
class GeneratedInput:
    matrices: tuple[np.ndarray, ...]
    provenance: tuple[str, int, int]  # (class_tag, dim, seed)


def _ginibre(stream: Stream, n: int, scale: float) -> np.ndarray:
    return stream.complex_normals(n * n).reshape(n, n) * scale


def _hermitian(stream: Stream, n: int, scale: float) -> np.ndarray:
    g = _ginibre(stream, n, scale)
    return (g + g.conj().T) / 2.0


def _psd(stream: Stream, n: int, scale: float) -> np.ndarray:
    g = _ginibre(stream, n, scale)
    p = g.conj().T @ g
    return (p + p.conj().T) / 2.0


def _unitary(stream: Stream, n: int) -> np.ndarray:
    g = _ginibre(stream, n, 1.0)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    phases = np.where(d == 0, 1.0 + 0j, d / np.abs(d))
    return q * phases


def _conjugate_diag(u: np.ndarray, diag: np.ndarray) -> np.ndarray:
    return (u * diag) @ u.conj().T


def _sample(class_tag: str, dim: int, stream: Stream, scale: float) -> tuple[np.ndarray, ...]:
    n = dim
    if class_tag == "ginibre":
        return (_ginibre(stream, n, scale),)
    if class_tag == "hermitian":
        return (_hermitian(stream, n, scale),)
    if class_tag == "psd":
        return (_psd(stream, n, scale),)
    if class_tag == "unitary":
        return (_unitary(stream, n),)
    if class_tag == "normal":
        u = _unitary(stream, n)
        d = stream.complex_normals(n) * scale
        return (_conjugate_diag(u, d),)
    if class_tag == "psd_block2":
        g = _ginibre(stream, 2 * n, scale)
        p = g.conj().T @ g
        p = (p + p.conj().T) / 2.0
        return (p[:n, :n].copy(), p[:n, n:].copy(), p[n:, n:].copy())
    if class_tag == "dominated_pair":
        a = _hermitian(stream, n, scale)
        p = _psd(stream, n, scale)
        b = abs_op(a) + p
        return (a, (b + b.conj().T) / 2.0)
    if class_tag == "normal_order_constrained":
        u = _unitary(stream, n)
        d2 = stream.normals(n) * scale
        offset = np.abs(stream.normals(n)) * scale
        d1 = -d2 + offset
        return (_conjugate_diag(u, d1 + 1j * d2),)
    if class_tag == "normal_pair_shared_basis":
        u = _unitary(stream, n)
        da = stream.complex_normals(n) * scale
        db = stream.complex_normals(n) * scale
        return (_conjugate_diag(u, da), _conjugate_diag(u, db))
    raise InvalidSpec(f"unknown class_tag {class_tag!r}")


def sample(class_tag: str, dim: int, stream: Stream, scale: float = 1.0) -> tuple[np.ndarray, ...]:
    """Draw one input tuple for ``class_tag`` from an existing stream.

    This is the fuzzer's entry point; ``generate`` wraps it for
    standalone specs.
    """
    if class_tag not in CLASS_ARITY:
        raise InvalidSpec(f"unknown class_tag {class_tag!r}")
    if not 1 <= dim <= MAX_DIM:
        raise InvalidSpec(f"dim must be in 1..{MAX_DIM}, got {dim!r}")
    return _sample(class_tag, dim, stream, scale)


def generate(spec: GeneratorSpec) -> GeneratedInput:
    """Generate the input tuple described by ``spec`` (pure in the spec)."""
    stream = prng_stream(spec.seed, 0)
    mats = _sample(spec.class_tag, spec.dim, stream, spec.scale)
    return GeneratedInput(matrices=mats, provenance=(spec.class_tag, spec.dim, spec.seed))
