"""Embedded numeric fixtures with their published claimed values.

Each fixture bundles a concrete matrix with the values and order-check
outcomes claimed for it in the source material, so the ``repro`` command
can recompute everything and flag where the claims disagree with the
arithmetic.  Fixtures live in the package, not on disk: reproduction must
not depend on the working directory.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numkernel import as_matrix

FIXTURE_KEYS = ("ex-2.2", "ex-2.3")


@dataclass(frozen=True)
class OrderClaim:
    """A claimed Loewner-order outcome for a named comparison."""

    name: str
    lhs: str
    rhs: str
    claimed_holds: bool


@dataclass(frozen=True)
class ValueClaim:
    """A claimed (approximate) numeric value for a named quantity."""

    name: str
    claimed: float


@dataclass(frozen=True)
class Fixture:
    key: str
    matrix: np.ndarray
    claimed_a1: np.ndarray | None
    claimed_a2: np.ndarray | None
    order_claims: tuple[OrderClaim, ...]
    value_claims: tuple[ValueClaim, ...]


_EX_2_2 = Fixture(
    key="ex-2.2",
    matrix=as_matrix([[2 - 1j, 2j], [2j, 2j]]),
    claimed_a1=as_matrix([[2, 0], [0, 0]]),
    claimed_a2=as_matrix([[-1, 2], [2, 2]]),
    # The source displays the middle term of the left comparison as
    # |A1 + i*A1|; the splitting it just computed suggests A2 was meant.
    # Both readings are recomputed; the claim is that each side fails.
    order_claims=(
        OrderClaim(
            name="left-as-displayed",
            lhs="(1/sqrt2)|A1+A2|",
            rhs="|A1+i*A1|",
            claimed_holds=False,
        ),
        OrderClaim(
            name="left-corrected",
            lhs="(1/sqrt2)|A1+A2|",
            rhs="|A1+i*A2|",
            claimed_holds=False,
        ),
        OrderClaim(
            name="right",
            lhs="|A1+i*A2|",
            rhs="|A1|+|A2|",
            claimed_holds=False,
        ),
    ),
    value_claims=(),
)

_EX_2_3 = Fixture(
    key="ex-2.3",
    matrix=as_matrix([[1 + 1j, 1], [1, 1j]]),
    claimed_a1=as_matrix([[1, 1], [1, 0]]),
    claimed_a2=as_matrix([[1, 0], [0, 1]]),
    order_claims=(),
    value_claims=(
        ValueClaim(name="s2(A)", claimed=1.1756),
        ValueClaim(name="s2(|A1|+|A2|)", claimed=0.9591),
    ),
)

FIXTURES: dict[str, Fixture] = {f.key: f for f in (_EX_2_2, _EX_2_3)}


def fixture(key: str) -> Fixture:
    try:
        return FIXTURES[key]
    except KeyError:
        raise KeyError(f"unknown fixture {key!r}; known: {FIXTURE_KEYS}") from None
