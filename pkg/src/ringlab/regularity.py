"""Regularity classification on finite carriers by exhaustive search.

An element a is regular when a = a*t*a for some t, and unit regular when some
such middle term is a unit. The one-sided variants ask for a middle term with
a one-sided inverse; on a finite carrier they coincide with the two-sided
notion, but the searches are kept separate so that coincidence is something
the tests can observe rather than an assumption baked into the code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .rings import FiniteRing


class RegularityKind(enum.Enum):
    NOT_REGULAR = "not_regular"
    REGULAR = "regular"
    RIGHT_UNIT_REGULAR = "right_unit_regular"
    LEFT_UNIT_REGULAR = "left_unit_regular"
    UNIT_REGULAR = "unit_regular"


@dataclass(frozen=True)
class RegularityWitness:
    """Classification of one element with the middle term that proves it.

    t is a regularity middle term (a = a*t*a) when one exists. For the unit
    kinds u is a middle term that is a unit (or one-sided unit) and u_partner
    is its (one-sided) inverse.
    """

    kind: RegularityKind
    t: Optional[int] = None
    u: Optional[int] = None
    u_partner: Optional[int] = None


@dataclass(frozen=True)
class ZeroDivisorStatus:
    """Whether b kills some nonzero element on the left or on the right."""

    left: bool
    right: bool

    @property
    def clear(self) -> bool:
        return not self.left and not self.right


def regular_witness(ring: FiniteRing, a: int) -> Optional[int]:
    """First t with a = a*t*a in ascending code order, or None."""
    ring.check_element(a)
    for t in ring.elements():
        if ring.mul3(a, t, a) == a:
            return t
    return None


def unit_regular_witness(ring: FiniteRing, a: int) -> Optional[tuple[int, int]]:
    """First unit middle term (u, u_inverse) with a = a*u*a, or None."""
    ring.check_element(a)
    for u, u_inv in ring.units().items():
        if ring.mul3(a, u, a) == a:
            return (u, u_inv)
    return None


def one_sided_unit_regular_witness(ring: FiniteRing, a: int,
                                   side: str) -> Optional[tuple[int, int]]:
    """First middle term with an inverse on the given side.

    side "right" asks for u with a = a*u*a and u*v = 1 for some v; side
    "left" asks for v*u = 1. The search runs over all elements, not just the
    cached two-sided units, so it cannot silently inherit the pigeonhole
    collapse it is meant to witness.
    """
    ring.check_element(a)
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    one = ring.one
    for u in ring.elements():
        if ring.mul3(a, u, a) != a:
            continue
        for v in ring.elements():
            prod = ring.mul(u, v) if side == "right" else ring.mul(v, u)
            if prod == one:
                return (u, v)
    return None


def zero_divisor_status(ring: FiniteRing, b: int) -> ZeroDivisorStatus:
    """Left: b*c = 0 for some nonzero c. Right: c*b = 0 for some nonzero c."""
    ring.check_element(b)
    zero = ring.zero
    left = any(ring.mul(b, c) == zero for c in ring.elements() if c != zero)
    right = any(ring.mul(c, b) == zero for c in ring.elements() if c != zero)
    return ZeroDivisorStatus(left=left, right=right)


@lru_cache(maxsize=None)
def regular_set(ring: FiniteRing) -> tuple[int, ...]:
    return tuple(a for a in ring.elements() if regular_witness(ring, a) is not None)


@lru_cache(maxsize=None)
def unit_regular_set(ring: FiniteRing) -> tuple[int, ...]:
    return tuple(a for a in ring.elements() if unit_regular_witness(ring, a) is not None)


def is_unit_regular_ring(ring: FiniteRing) -> bool:
    return len(unit_regular_set(ring)) == ring.size


def classify(ring: FiniteRing, a: int) -> RegularityWitness:
    """Strongest regularity kind of a, with witnesses.

    Two-sided unit regularity is tried first, then each one-sided variant,
    then bare regularity. On finite carriers the one-sided branches are
    unreachable, which the property tests confirm; they are kept for the
    honesty of the classification, not for speed.
    """
    pair = unit_regular_witness(ring, a)
    if pair is not None:
        u, u_inv = pair
        return RegularityWitness(RegularityKind.UNIT_REGULAR, t=u, u=u, u_partner=u_inv)
    for side, kind in (("right", RegularityKind.RIGHT_UNIT_REGULAR),
                       ("left", RegularityKind.LEFT_UNIT_REGULAR)):
        pair = one_sided_unit_regular_witness(ring, a, side)
        if pair is not None:
            u, v = pair
            return RegularityWitness(kind, t=u, u=u, u_partner=v)
    t = regular_witness(ring, a)
    if t is not None:
        return RegularityWitness(RegularityKind.REGULAR, t=t)
    return RegularityWitness(RegularityKind.NOT_REGULAR)
