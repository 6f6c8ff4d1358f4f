"""Exact half-integer index algebra for spin-1/2 spinor labels."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "InvalidIndexError",
    "HalfInt",
    "SpinorIndex",
    "kappa_to_l",
    "kappa_to_j",
    "jl_to_kappa",
    "mu_range",
]


class InvalidIndexError(ValueError):
    """Raised for kappa = 0, an out-of-range mu, or an impossible (j, l) coupling."""


@dataclass(frozen=True, order=True)
class HalfInt:
    """A number of the form n/2, stored as the integer n."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError(f"twice must be int, got {type(self.twice).__name__}")

    @classmethod
    def of(cls, value) -> HalfInt:
        """Build from an int, Fraction, HalfInt, or a float that is exactly a half-integer."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        frac = Fraction(value)
        if (2 * frac).denominator != 1:
            raise InvalidIndexError(f"{value!r} is not an integer or half-integer")
        return cls(int(2 * frac))

    @classmethod
    def parse(cls, text: str) -> HalfInt:
        """Parse '1/2', '-3/2', '0.5', '-1.5' or '2' without going through float."""
        s = text.strip()
        m = re.fullmatch(r"([+-]?\d+)\s*/\s*2", s)
        if m:
            return cls(int(m.group(1)))
        m = re.fullmatch(r"([+-]?)(\d*)\.(5|50*|0*)", s)
        if m and (m.group(2) or m.group(3)):
            whole = int(m.group(2) or "0")
            half = 1 if m.group(3).startswith("5") else 0
            twice = 2 * whole + half
            return cls(-twice if m.group(1) == "-" else twice)
        if re.fullmatch(r"[+-]?\d+", s):
            return cls(2 * int(s))
        raise InvalidIndexError(f"cannot parse {text!r} as a half-integer")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self) -> float:
        return self.twice / 2

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def _check_kappa(kappa: int) -> None:
    if kappa == 0:
        raise InvalidIndexError("kappa must be nonzero")


def kappa_to_l(kappa: int) -> int:
    """Orbital quantum number: kappa for kappa > 0, -kappa - 1 for kappa < 0."""
    _check_kappa(kappa)
    return kappa if kappa > 0 else -kappa - 1


def kappa_to_j(kappa: int) -> HalfInt:
    _check_kappa(kappa)
    return HalfInt(2 * abs(kappa) - 1)


def jl_to_kappa(j, l: int) -> int:
    j = HalfInt.of(j)
    if l < 0 or j.twice < 1 or abs(2 * l - j.twice) != 1:
        raise InvalidIndexError(f"(j={j}, l={l}) is not a spin-1/2 coupling")
    # (l - j)(2j + 1) with l - j = +-1/2
    return (2 * l - j.twice) * (j.twice + 1) // 2


def mu_range(kappa: int) -> list[HalfInt]:
    _check_kappa(kappa)
    top = 2 * abs(kappa) - 1
    return [HalfInt(t) for t in range(-top, top + 1, 2)]


@dataclass(frozen=True, order=True)
class SpinorIndex:
    """The (kappa, mu) label of a spherical spinor."""

    kappa: int
    mu: HalfInt

    def __post_init__(self):
        _check_kappa(self.kappa)
        mu = HalfInt.of(self.mu)
        object.__setattr__(self, "mu", mu)
        if mu.is_integer:
            raise InvalidIndexError(f"mu must be a half-odd integer, got {mu}")
        if abs(mu.twice) > 2 * abs(self.kappa) - 1:
            raise InvalidIndexError(
                f"|mu| must not exceed |kappa| - 1/2 (kappa={self.kappa}, mu={mu})"
            )

    @staticmethod
    def is_valid(kappa: int, mu) -> bool:
        mu = HalfInt.of(mu)
        return kappa != 0 and not mu.is_integer and abs(mu.twice) <= 2 * abs(kappa) - 1

    @property
    def l(self) -> int:
        return kappa_to_l(self.kappa)

    @property
    def j(self) -> HalfInt:
        return kappa_to_j(self.kappa)

    def __str__(self):
        return f"({self.kappa}, {self.mu})"
