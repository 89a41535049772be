"""Idempotents, corner subrings, and the two-sided Peirce split.

For an idempotent e with complement f = 1 - e, the corner eRe is itself a
ring with identity e, carried here on the ambient codes so corner elements
can be mixed freely into ambient arithmetic. Every x in R splits uniquely as
exe + exf + fxe + fxf, and the diagonal corners embed as a direct product
inside R exactly when the off-diagonal parts of their sums vanish, which the
embedding report checks exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .rings import FiniteRing


@dataclass(frozen=True)
class Idempotent:
    """An idempotent e together with its complement f = 1 - e."""

    e: int
    f: int


def as_idempotent(ring: FiniteRing, e: int) -> Idempotent:
    ring.check_element(e)
    if ring.mul(e, e) != e:
        raise ValueError(f"{ring.element_repr(e)} is not idempotent in {ring.spec_string}")
    return Idempotent(e=e, f=ring.sub(ring.one, e))


def complement(ring: FiniteRing, idem: Idempotent) -> Idempotent:
    return as_idempotent(ring, idem.f)


@lru_cache(maxsize=None)
def idempotents(ring: FiniteRing) -> tuple[Idempotent, ...]:
    """All idempotents of the ring in ascending code order."""
    return tuple(Idempotent(e, ring.sub(ring.one, e))
                 for e in ring.elements() if ring.mul(e, e) == e)


class CornerRing(FiniteRing):
    """The corner eRe as a ring with identity e, on ambient codes.

    The carrier is the sorted image of x -> exe, which always contains the
    ambient zero. Arithmetic delegates to the ambient ring, so corner codes
    are ambient codes and no re-encoding is ever needed.
    """

    def __init__(self, ambient: FiniteRing, idem: Idempotent) -> None:
        e = idem.e
        carrier = sorted({ambient.mul3(e, x, e) for x in ambient.elements()})
        self.ambient = ambient
        self.idem = idem
        self._carrier = carrier
        self._carrier_set = frozenset(carrier)
        super().__init__(size=len(carrier), one=e,
                         commutative=ambient.is_commutative)

    def elements(self) -> Iterable[int]:
        return iter(self._carrier)

    def contains(self, x: int) -> bool:
        return x in self._carrier_set

    def add(self, a: int, b: int) -> int:
        return self.ambient.add(a, b)

    def neg(self, a: int) -> int:
        return self.ambient.neg(a)

    def mul(self, a: int, b: int) -> int:
        return self.ambient.mul(a, b)

    def element_repr(self, x: int) -> str:
        return self.ambient.element_repr(x)

    @property
    def spec_string(self) -> str:
        return f"{self.ambient.spec_string}[e={self.idem.e}]"


@lru_cache(maxsize=None)
def corner_ring(ring: FiniteRing, idem: Idempotent) -> CornerRing:
    """Corner eRe for a validated idempotent; cached per (ring, idempotent)."""
    ring.check_element(idem.e)
    if ring.mul(idem.e, idem.e) != idem.e:
        raise ValueError(f"{ring.element_repr(idem.e)} is not idempotent")
    if ring.sub(ring.one, idem.e) != idem.f:
        raise ValueError("complement does not match 1 - e")
    return CornerRing(ring, idem)


@dataclass(frozen=True)
class PeirceParts:
    """The four components exe, exf, fxe, fxf of one element."""

    ee: int
    ef: int
    fe: int
    ff: int


def peirce_decompose(ring: FiniteRing, idem: Idempotent, x: int) -> PeirceParts:
    ring.check_element(x)
    e, f = idem.e, idem.f
    parts = PeirceParts(
        ee=ring.mul3(e, x, e),
        ef=ring.mul3(e, x, f),
        fe=ring.mul3(f, x, e),
        ff=ring.mul3(f, x, f),
    )
    total = ring.add(ring.add(parts.ee, parts.ef), ring.add(parts.fe, parts.ff))
    if total != x:
        raise AssertionError(
            f"peirce parts of {ring.element_repr(x)} do not sum back in {ring.spec_string}")
    return parts


@dataclass
class CornerProductEmbedding:
    """Exhaustive check that (x, y) -> x + y embeds eRe x fRf into R."""

    ring: str
    e: int
    f: int
    pairs: list[tuple[int, int, int]]
    injective: bool
    additive: bool
    multiplicative: bool
    maps_identity_pair_to_one: bool
    image_closed: bool

    @property
    def ok(self) -> bool:
        return (self.injective and self.additive and self.multiplicative
                and self.maps_identity_pair_to_one and self.image_closed)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "e": self.e,
            "f": self.f,
            "pair_count": len(self.pairs),
            "injective": self.injective,
            "additive": self.additive,
            "multiplicative": self.multiplicative,
            "maps_identity_pair_to_one": self.maps_identity_pair_to_one,
            "image_closed": self.image_closed,
            "ok": self.ok,
        }


def corner_product_embedding(ring: FiniteRing, idem: Idempotent) -> CornerProductEmbedding:
    """Check x + y against componentwise arithmetic over all corner pairs.

    Multiplicativity holds because the cross terms xy', x'y with x in eRe and
    y in fRf vanish: ef = fe = 0 kills them. The sweep verifies that on the
    nose instead of trusting the algebra.
    """
    ee = corner_ring(ring, idem)
    ff = corner_ring(ring, complement(ring, idem))
    pairs = [(x, y, ring.add(x, y)) for x in ee.elements() for y in ff.elements()]
    images = [img for _, _, img in pairs]
    image_set = set(images)
    injective = len(image_set) == len(images)

    additive = True
    multiplicative = True
    closed = True
    for x1, y1, img1 in pairs:
        for x2, y2, img2 in pairs:
            total = ring.add(img1, img2)
            prod = ring.mul(img1, img2)
            if total != ring.add(ring.add(x1, x2), ring.add(y1, y2)):
                additive = False
            if prod != ring.add(ring.mul(x1, x2), ring.mul(y1, y2)):
                multiplicative = False
            if total not in image_set or prod not in image_set:
                closed = False

    maps_identity = ring.add(ee.one, ff.one) == ring.one
    return CornerProductEmbedding(
        ring=ring.spec_string, e=idem.e, f=idem.f, pairs=pairs,
        injective=injective, additive=additive, multiplicative=multiplicative,
        maps_identity_pair_to_one=maps_identity, image_closed=closed)
