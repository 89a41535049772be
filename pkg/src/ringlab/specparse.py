"""Parser for the textual ring descriptions used across the CLI and tests.

Grammar, case and whitespace insensitive:

    spec := term ("x" term)*
    term := "Z" nat | "M" nat "(" spec ")" | "T" nat "(" spec ")" | "(" spec ")"

Z names the integers mod n, M and T the full and upper-triangular square
matrix rings over the bracketed description, and x the direct product,
associating to the left. Cardinality is computed on the tree before any
carrier is allocated, so a description that blows past the size cap is
rejected without building anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .rings import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    MatrixRing,
    ProductRing,
    TriangularRing,
    ZmodRing,
    require_cap,
)


class RingSpecError(ValueError):
    """Syntax or range error in a ring description, with the offset."""

    def __init__(self, message: str, offset: int,
                 expected: Optional[str] = None) -> None:
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
        self.offset = offset
        self.expected = expected


@dataclass(frozen=True)
class ZmodSpec:
    n: int


@dataclass(frozen=True)
class MatrixSpec:
    k: int
    inner: "RingSpec"


@dataclass(frozen=True)
class TriangularSpec:
    k: int
    inner: "RingSpec"


@dataclass(frozen=True)
class ProductSpec:
    left: "RingSpec"
    right: "RingSpec"


RingSpec = Union[ZmodSpec, MatrixSpec, TriangularSpec, ProductSpec]


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_spec(self) -> RingSpec:
        node = self.parse_term()
        while self.peek().lower() == "x":
            self.pos += 1
            node = ProductSpec(left=node, right=self.parse_term())
        return node

    def parse_term(self) -> RingSpec:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.parse_spec()
            if self.peek() != ")":
                raise RingSpecError("unclosed group", self.pos, expected="')'")
            self.pos += 1
            return node
        kind = ch.lower()
        if kind == "z":
            self.pos += 1
            return ZmodSpec(n=self.parse_nat())
        if kind in ("m", "t"):
            self.pos += 1
            k = self.parse_nat()
            if self.peek() != "(":
                raise RingSpecError("matrix constructor needs a base ring",
                                    self.pos, expected="'('")
            self.pos += 1
            inner = self.parse_spec()
            if self.peek() != ")":
                raise RingSpecError("unclosed constructor", self.pos, expected="')'")
            self.pos += 1
            return MatrixSpec(k, inner) if kind == "m" else TriangularSpec(k, inner)
        raise RingSpecError(f"unexpected {ch!r}" if ch else "unexpected end of input",
                            self.pos, expected="'Z', 'M', 'T' or '('")

    def parse_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise RingSpecError("missing number", start, expected="a digit")
        value = int(self.text[start:self.pos])
        if value == 0:
            raise RingSpecError("size parameter must be positive", start)
        return value


def parse_ring_spec(text: str) -> RingSpec:
    parser = _Parser(text)
    node = parser.parse_spec()
    parser.skip_ws()
    if parser.pos != len(text):
        raise RingSpecError(f"trailing input {text[parser.pos:]!r}", parser.pos)
    return node


def spec_to_text(node: RingSpec) -> str:
    """Canonical text for a tree; parses back to an equal tree."""
    if isinstance(node, ZmodSpec):
        return f"Z{node.n}"
    if isinstance(node, MatrixSpec):
        return f"M{node.k}({spec_to_text(node.inner)})"
    if isinstance(node, TriangularSpec):
        return f"T{node.k}({spec_to_text(node.inner)})"
    if isinstance(node, ProductSpec):
        right = spec_to_text(node.right)
        if isinstance(node.right, ProductSpec):
            right = f"({right})"
        return f"{spec_to_text(node.left)}x{right}"
    raise TypeError(f"not a ring spec node: {node!r}")


def spec_cardinality(node: RingSpec) -> int:
    if isinstance(node, ZmodSpec):
        return node.n
    if isinstance(node, MatrixSpec):
        return spec_cardinality(node.inner) ** (node.k * node.k)
    if isinstance(node, TriangularSpec):
        return spec_cardinality(node.inner) ** (node.k * (node.k + 1) // 2)
    if isinstance(node, ProductSpec):
        return spec_cardinality(node.left) * spec_cardinality(node.right)
    raise TypeError(f"not a ring spec node: {node!r}")


def build_ring(spec_or_text: Union[RingSpec, str],
               size_cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    node = (parse_ring_spec(spec_or_text)
            if isinstance(spec_or_text, str) else spec_or_text)
    require_cap(spec_cardinality(node), size_cap)
    return _build(node, size_cap)


def _build(node: RingSpec, size_cap: int) -> FiniteRing:
    if isinstance(node, ZmodSpec):
        return ZmodRing(node.n, size_cap=size_cap)
    if isinstance(node, MatrixSpec):
        return MatrixRing(node.k, _build(node.inner, size_cap), size_cap=size_cap)
    if isinstance(node, TriangularSpec):
        return TriangularRing(node.k, _build(node.inner, size_cap), size_cap=size_cap)
    if isinstance(node, ProductSpec):
        return ProductRing(_build(node.left, size_cap),
                           _build(node.right, size_cap), size_cap=size_cap)
    raise TypeError(f"not a ring spec node: {node!r}")
