"""Operator expression trees over the primitive vector operators.

Expressions are written as s-expressions, e.g. ``(dot e0 (cross n sigma))``.
Evaluation order is right to left: in ``(dot A (cross B C))`` the operator C
acts on the field first, then B, then A.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = [
    "StructuralError",
    "OperatorExpr",
    "Atom",
    "Dot",
    "Cross",
    "Product",
    "VECTOR_ATOMS",
    "CONSTANT_VERSORS",
    "parse",
    "count_atoms",
]

SQRT1_2 = 1 / math.sqrt(2)

# Cartesian components of the cyclic versors; e_{+-1} = -+(e_x +- i e_y)/sqrt(2)
CONSTANT_VERSORS = {
    "e0": (0.0, 0.0, 1.0),
    "e+1": (-SQRT1_2, -1j * SQRT1_2, 0.0),
    "e-1": (SQRT1_2, -1j * SQRT1_2, 0.0),
}
VECTOR_ATOMS = frozenset({"n", "sigma", "L", "J", "nabla", *CONSTANT_VERSORS})
SCALAR_ATOMS = frozenset({"I"})


class StructuralError(ValueError):
    """A malformed operator expression."""


class OperatorExpr:
    is_vector: bool

    def to_sexpr(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.to_sexpr()


@dataclass(frozen=True)
class Atom(OperatorExpr):
    name: str

    def __post_init__(self):
        if self.name not in VECTOR_ATOMS and self.name not in SCALAR_ATOMS:
            raise StructuralError(f"unknown operator atom {self.name!r}")

    @property
    def is_vector(self) -> bool:
        return self.name in VECTOR_ATOMS

    def to_sexpr(self) -> str:
        return self.name


@dataclass(frozen=True)
class Dot(OperatorExpr):
    left: OperatorExpr
    right: OperatorExpr

    def __post_init__(self):
        if not (self.left.is_vector and self.right.is_vector):
            raise StructuralError(f"dot needs two vector operands: {self.left}, {self.right}")

    is_vector = False

    def to_sexpr(self) -> str:
        return f"(dot {self.left.to_sexpr()} {self.right.to_sexpr()})"


@dataclass(frozen=True)
class Cross(OperatorExpr):
    left: OperatorExpr
    right: OperatorExpr

    def __post_init__(self):
        if not (self.left.is_vector and self.right.is_vector):
            raise StructuralError(f"cross needs two vector operands: {self.left}, {self.right}")

    is_vector = True

    def to_sexpr(self) -> str:
        return f"(cross {self.left.to_sexpr()} {self.right.to_sexpr()})"


@dataclass(frozen=True)
class Product(OperatorExpr):
    """Composition of two scalar operators; ``right`` acts first."""

    left: OperatorExpr
    right: OperatorExpr

    def __post_init__(self):
        if self.left.is_vector or self.right.is_vector:
            raise StructuralError("mul composes scalar operators only")

    is_vector = False

    def to_sexpr(self) -> str:
        return f"(mul {self.left.to_sexpr()} {self.right.to_sexpr()})"


_COMBINATORS = {"dot": Dot, "cross": Cross, "mul": Product}
_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse(text: str) -> OperatorExpr:
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise StructuralError("empty expression")
    expr, pos = _parse_at(tokens, 0)
    if pos != len(tokens):
        raise StructuralError(f"trailing tokens in {text!r}")
    return expr


def _parse_at(tokens: list[str], pos: int) -> tuple[OperatorExpr, int]:
    if pos >= len(tokens):
        raise StructuralError("unexpected end of expression")
    tok = tokens[pos]
    if tok == ")":
        raise StructuralError("unexpected ')'")
    if tok != "(":
        return Atom(tok), pos + 1
    if pos + 1 >= len(tokens) or tokens[pos + 1] not in _COMBINATORS:
        raise StructuralError(f"expected one of {sorted(_COMBINATORS)} after '('")
    cls = _COMBINATORS[tokens[pos + 1]]
    left, pos = _parse_at(tokens, pos + 2)
    right, pos = _parse_at(tokens, pos)
    if pos >= len(tokens) or tokens[pos] != ")":
        raise StructuralError("missing ')'")
    return cls(left, right), pos + 1


def count_atoms(expr: OperatorExpr, name: str) -> int:
    if isinstance(expr, Atom):
        return int(expr.name == name)
    return count_atoms(expr.left, name) + count_atoms(expr.right, name)
