"""Catalog of recurrence and differential relations for spherical spinors.

Each relation expands ``LHS F(r) Omega_{kappa mu}`` as a finite sum of
``coefficient(kappa, mu) * radial(F) * Omega_{kappa', mu'}``. Coefficients are
kept as closed forms, phase * rational(kappa, mu) * sqrt(radicand(kappa, mu)),
evaluated in exact rational arithmetic until the final square root, so a term
whose radicand vanishes is exactly zero.

Relations written with a +- sign (those acting with e_{+-1}) are single catalog
entries with two variants; inside their formulas ``s`` is +1 or -1 and the
LHS atom ``e_s`` becomes ``e+1`` or ``e-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from .expr import OperatorExpr, parse
from .indices import HalfInt, SpinorIndex
from .spectral import RadialJet, SpectralField, field_from_spinor

__all__ = [
    "RadialOp",
    "ExpansionTerm",
    "RelationEntry",
    "catalog",
    "get_entry",
    "rhs_coefficient",
    "eval_rhs",
    "KAPPA_MAPS",
]

H = Fraction(1, 2)
KAPPA_MAPS = {
    "k": lambda k: k,
    "-k": lambda k: -k,
    "k+1": lambda k: k + 1,
    "k-1": lambda k: k - 1,
    "-k-1": lambda k: -k - 1,
}


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


_NAMES = {"abs": abs, "sgn": _sgn, "H": H}


@lru_cache(maxsize=None)
def _compile(form: str):
    return compile(form, f"<coefficient {form}>", "eval")


def _eval_form(form: str, k: int, mu: Fraction, s: int) -> Fraction:
    value = eval(_compile(form), {"__builtins__": {}}, {**_NAMES, "k": Fraction(k), "mu": mu, "s": s})
    if not isinstance(value, (int, Fraction)):
        raise TypeError(f"form {form!r} left exact arithmetic (got {type(value).__name__})")
    return Fraction(value)


@dataclass(frozen=True)
class RadialOp:
    """Radial sub-operator applied to F.

    kinds:
      multiply                  F
      d_dr_plus_c_over_r        F' + c F / r
      two_dr_plus_c_over_r      2 F' + c F / r
      second_order_bessel_form  (1/r)(d^2/dr^2 - c/r^2)(r F) = F'' + 2F'/r - c F/r^2
    ``c`` is a closed form in k (and s), like the coefficients.
    """

    kind: str = "multiply"
    c: str = "0"

    KINDS = ("multiply", "d_dr_plus_c_over_r", "two_dr_plus_c_over_r", "second_order_bessel_form")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown radial op kind {self.kind!r}")

    @property
    def order(self) -> int:
        return {"multiply": 0, "second_order_bessel_form": 2}.get(self.kind, 1)

    def constant(self, kappa: int, s: int = 1) -> Fraction:
        return _eval_form(self.c, kappa, Fraction(0), s)

    def apply(self, jet: RadialJet, kappa: int, s: int = 1) -> float:
        c = float(self.constant(kappa, s))
        r = jet.r
        if self.kind == "multiply":
            return jet.f
        if self.kind == "d_dr_plus_c_over_r":
            return jet.derivative(1) + c * jet.f / r
        if self.kind == "two_dr_plus_c_over_r":
            return 2 * jet.derivative(1) + c * jet.f / r
        return jet.derivative(2) + 2 * jet.derivative(1) / r - c * jet.f / r**2

    def describe(self) -> str:
        if self.kind == "multiply":
            return "F"
        if self.kind == "d_dr_plus_c_over_r":
            return f"(d/dr + ({self.c})/r) F"
        if self.kind == "two_dr_plus_c_over_r":
            return f"(2 d/dr + ({self.c})/r) F"
        return f"(1/r)(d2/dr2 - ({self.c})/r^2)(r F)"


MULT = RadialOp()
P_OP = RadialOp("d_dr_plus_c_over_r", "k+1")  # d/dr + (kappa+1)/r
M_OP = RadialOp("d_dr_plus_c_over_r", "-k")  # d/dr - kappa/r
BESSEL = RadialOp("second_order_bessel_form", "k*(k+1)")


@dataclass(frozen=True)
class ExpansionTerm:
    """coefficient = (i if imaginary else 1) * rational * sqrt(radicand)."""

    kappa_map: str
    mu_shift: str  # "0" or "s"
    rational: str
    radicand: str = "1"
    imaginary: bool = False
    radial: RadialOp = MULT

    def __post_init__(self):
        if self.kappa_map not in KAPPA_MAPS:
            raise ValueError(f"unknown kappa map {self.kappa_map!r}")
        if self.mu_shift not in ("0", "s"):
            raise ValueError(f"unknown mu shift {self.mu_shift!r}")

    def target(self, kappa: int, mu: HalfInt, s: int = 1) -> tuple[int, HalfInt]:
        shift = s if self.mu_shift == "s" else 0
        return KAPPA_MAPS[self.kappa_map](kappa), mu + HalfInt(2 * shift)

    def parts(self, kappa: int, mu: HalfInt, s: int = 1) -> tuple[Fraction, Fraction]:
        """Exact (rational, radicand) at (kappa, mu)."""
        m = mu.to_fraction()
        return _eval_form(self.rational, kappa, m, s), _eval_form(self.radicand, kappa, m, s)

    def coefficient(self, kappa: int, mu: HalfInt, s: int = 1) -> complex:
        rational, radicand = self.parts(kappa, mu, s)
        if radicand < 0:
            raise ValueError(f"negative radicand {radicand} for kappa={kappa}, mu={mu}")
        if rational == 0 or radicand == 0:
            return 0j
        value = float(rational) * (math.sqrt(radicand) if radicand != 1 else 1.0)
        return complex(0, value) if self.imaginary else complex(value, 0)

    def form(self) -> str:
        text = f"({self.rational})"
        if self.radicand != "1":
            text += f" * sqrt({self.radicand})"
        return ("i * " if self.imaginary else "") + text

    def flipped(self) -> ExpansionTerm:
        """Same term with the opposite overall sign (used for mutation tests)."""
        return replace(self, rational=f"-({self.rational})")


@dataclass(frozen=True)
class RelationEntry:
    id: str
    kind: str  # algebraic | first_kind | second_kind
    lhs_template: str
    terms: tuple[ExpansionTerm, ...]
    variants: tuple[str | None, ...] = (None,)
    _lhs_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def is_paired(self) -> bool:
        return self.variants != (None,)

    def lhs_text(self, variant: str | None = None) -> str:
        if self.is_paired:
            if variant not in ("+", "-"):
                raise ValueError(f"relation {self.id} needs variant '+' or '-'")
            return self.lhs_template.replace("e_s", "e+1" if variant == "+" else "e-1")
        return self.lhs_template

    def lhs(self, variant: str | None = None) -> OperatorExpr:
        if variant not in self._lhs_cache:
            self._lhs_cache[variant] = parse(self.lhs_text(variant))
        return self._lhs_cache[variant]

    @property
    def radial_order(self) -> int:
        return max(t.radial.order for t in self.terms)

    def with_term(self, index: int, term: ExpansionTerm) -> RelationEntry:
        terms = list(self.terms)
        terms[index] = term
        return RelationEntry(self.id, self.kind, self.lhs_template, tuple(terms), self.variants)


def variant_sign(variant: str | None) -> int:
    return -1 if variant == "-" else 1


# -- shorthand for the recurring radicands ------------------------------------
A0 = "(k+H)**2 - mu**2"  # targets kappa+1 / -kappa-1 at fixed mu
B0 = "(k-H)**2 - mu**2"  # target kappa-1 at fixed mu
C2 = "2*(k**2 - (mu + s*H)**2)"  # 2 x [kappa^2 - (mu +- 1/2)^2]
C_2 = "(k**2 - (mu + s*H)**2)/2"
D2 = "2*(k + s*mu + H)*(k + s*mu + 3*H)"
D_2 = "(k + s*mu + H)*(k + s*mu + 3*H)/2"
E_2 = "(k - s*mu - H)*(k - s*mu - 3*H)/2"

T = ExpansionTerm


def _i(*args, **kw) -> ExpansionTerm:
    return ExpansionTerm(*args, imaginary=True, **kw)


def _entry(id_, kind, lhs, *terms):
    paired = "e_s" in lhs
    return RelationEntry(id_, kind, lhs, tuple(terms), ("+", "-") if paired else (None,))


def _build() -> tuple[RelationEntry, ...]:
    alg, first, second = "algebraic", "first_kind", "second_kind"
    P, M = P_OP, M_OP
    return (
        # ---- algebraic recurrence relations
        _entry("3.1.1", alg, "(dot e0 n)",
               T("-k", "0", "-2*mu/(4*k**2-1)"),
               T("k+1", "0", "1/abs(2*k+1)", A0),
               T("k-1", "0", "1/abs(2*k-1)", B0)),
        _entry("3.1.2", alg, "(dot e_s n)",
               T("-k", "s", "s/(4*k**2-1)", C2),
               T("k+1", "s", "1/(2*k+1)", D_2),
               T("k-1", "s", "-1/(2*k-1)", E_2)),
        _entry("3.1.3", alg, "(dot n sigma)",
               T("-k", "0", "-1")),
        _entry("3.1.4", alg, "(dot e0 sigma)",
               T("k", "0", "-2*mu/(2*k+1)"),
               T("-k-1", "0", "-2/abs(2*k+1)", A0)),
        _entry("3.1.5", alg, "(dot e_s sigma)",
               T("k", "s", "s/(2*k+1)", C2),
               T("-k-1", "s", "-1/(2*k+1)", D2)),
        _entry("3.1.6", alg, "(dot e0 (cross n sigma))",
               _i("-k", "0", "4*mu*k/(4*k**2-1)"),
               _i("k+1", "0", "1/abs(2*k+1)", A0),
               _i("k-1", "0", "-1/abs(2*k-1)", B0)),
        _entry("3.1.7", alg, "(dot e_s (cross n sigma))",
               _i("-k", "s", "-s*2*k/(4*k**2-1)", C2),
               _i("k+1", "s", "1/(2*k+1)", D_2),
               _i("k-1", "s", "1/(2*k-1)", E_2)),
        # ---- differential relations of the first kind
        _entry("3.2.1", first, "(dot e0 L)",
               T("k", "0", "2*mu*(k+1)/(2*k+1)"),
               T("-k-1", "0", "1/abs(2*k+1)", A0)),
        _entry("3.2.2", first, "(dot e_s L)",
               T("k", "s", "-s*(k+1)/(2*k+1)", C2),
               T("-k-1", "s", "1/(2*k+1)", D_2)),
        _entry("3.2.3", first, "(dot sigma L)",
               T("k", "0", "-(k+1)")),
        _entry("3.2.4", first, "(dot n J)",
               T("-k", "0", "-H")),
        _entry("3.2.5", first, "(dot e0 J)",
               T("k", "0", "mu")),
        _entry("3.2.6", first, "(dot e_s J)",
               T("k", "s", "-s", C_2)),
        _entry("3.2.7", first, "(dot sigma J)",
               T("k", "0", "-(k-H)")),
        _entry("3.2.8", first, "(dot L L)",
               T("k", "0", "k*(k+1)")),
        _entry("3.2.9", first, "(dot J J)",
               T("k", "0", "k**2 - H*H")),
        _entry("3.2.10", first, "(dot L J)",
               T("k", "0", "(k-H)*(k+1)")),
        _entry("3.2.11", first, "(dot e0 (cross n L))",
               _i("-k", "0", "-2*mu*(k+1)/(4*k**2-1)"),
               _i("k+1", "0", "-k/abs(2*k+1)", A0),
               _i("k-1", "0", "(k+1)/abs(2*k-1)", B0)),
        _entry("3.2.12", first, "(dot e_s (cross n L))",
               _i("-k", "s", "s*(k+1)/(4*k**2-1)", C2),
               _i("k+1", "s", "-k/(2*k+1)", D_2),
               _i("k-1", "s", "-(k+1)/(2*k-1)", E_2)),
        _entry("3.2.13", first, "(dot e0 (cross L n))",
               _i("-k", "0", "2*mu*(k-1)/(4*k**2-1)"),
               _i("k+1", "0", "(k+2)/abs(2*k+1)", A0),
               _i("k-1", "0", "-(k-1)/abs(2*k-1)", B0)),
        _entry("3.2.14", first, "(dot e_s (cross L n))",
               _i("-k", "s", "-s*(k-1)/(4*k**2-1)", C2),
               _i("k+1", "s", "(k+2)/(2*k+1)", D_2),
               _i("k-1", "s", "(k-1)/(2*k-1)", E_2)),
        _entry("3.2.15", first, "(dot n (cross sigma L))",
               _i("-k", "0", "k+1")),
        _entry("3.2.16", first, "(dot e0 (cross sigma L))",
               _i("-k-1", "0", "sgn(k)", A0)),
        _entry("3.2.17", first, "(dot e_s (cross sigma L))",
               _i("-k-1", "s", "1", D_2)),
        _entry("3.2.18", first, "(dot (cross sigma L) n)",
               _i("-k", "0", "k-1")),
        _entry("3.2.19", first, "(dot e0 (cross n J))",
               _i("-k", "0", "-2*mu/(4*k**2-1)"),
               _i("k+1", "0", "-(k-H)/abs(2*k+1)", A0),
               _i("k-1", "0", "(k+H)/abs(2*k-1)", B0)),
        _entry("3.2.20", first, "(dot e_s (cross n J))",
               _i("-k", "s", "s/(4*k**2-1)", C2),
               _i("k+1", "s", "-(k-H)/(2*k+1)", D_2),
               _i("k-1", "s", "-(k+H)/(2*k-1)", E_2)),
        _entry("3.2.21", first, "(dot e0 (cross J n))",
               _i("-k", "0", "-2*mu/(4*k**2-1)"),
               _i("k+1", "0", "(k+3*H)/abs(2*k+1)", A0),
               _i("k-1", "0", "-(k-3*H)/abs(2*k-1)", B0)),
        _entry("3.2.22", first, "(dot e_s (cross J n))",
               _i("-k", "s", "s/(4*k**2-1)", C2),
               _i("k+1", "s", "(k+3*H)/(2*k+1)", D_2),
               _i("k-1", "s", "(k-3*H)/(2*k-1)", E_2)),
        _entry("3.2.23", first, "(dot n (cross sigma J))",
               _i("-k", "0", "k")),
        _entry("3.2.24", first, "(dot e0 (cross sigma J))",
               _i("k", "0", "-2*mu/(2*k+1)"),
               _i("-k-1", "0", "(2*k-1)/abs(2*k+1)", A0)),
        _entry("3.2.25", first, "(dot e_s (cross sigma J))",
               _i("k", "s", "s/(2*k+1)", C2),
               _i("-k-1", "s", "(2*k-1)/(2*k+1)", D_2)),
        _entry("3.2.26", first, "(dot (cross sigma J) n)",
               _i("-k", "0", "k-2")),
        _entry("3.2.27", first, "(dot n (cross J sigma))",
               _i("-k", "0", "-(k+2)")),
        _entry("3.2.28", first, "(dot e0 (cross J sigma))",
               _i("k", "0", "-2*mu/(2*k+1)"),
               _i("-k-1", "0", "-(2*k+3)/abs(2*k+1)", A0)),
        _entry("3.2.29", first, "(dot e_s (cross J sigma))",
               _i("k", "s", "s/(2*k+1)", C2),
               _i("-k-1", "s", "-(2*k+3)/(2*k+1)", D_2)),
        _entry("3.2.30", first, "(dot (cross J sigma) n)",
               _i("-k", "0", "-k")),
        _entry("3.2.31", first, "(dot n (cross L J))",
               _i("-k", "0", "-(k+1)*H")),
        _entry("3.2.32", first, "(dot e0 (cross L J))",
               _i("k", "0", "2*mu*(k+1)/(2*k+1)"),
               _i("-k-1", "0", "-(k-H)/abs(2*k+1)", A0)),
        _entry("3.2.33", first, "(dot e_s (cross L J))",
               _i("k", "s", "-s*(k+1)/(2*k+1)", C2),
               _i("-k-1", "s", "-(k-H)/(2*k+1)", D_2)),
        _entry("3.2.34", first, "(dot (cross L J) n)",
               _i("-k", "0", "-(k-1)*H")),
        _entry("3.2.35", first, "(dot (cross L J) sigma)",
               _i("k", "0", "-2*(k+1)")),
        _entry("3.2.36", first, "(dot n (cross J L))",
               _i("-k", "0", "(k+1)*H")),
        _entry("3.2.37", first, "(dot e0 (cross J L))",
               _i("k", "0", "2*mu*(k+1)/(2*k+1)"),
               _i("-k-1", "0", "(k+3*H)/abs(2*k+1)", A0)),
        _entry("3.2.38", first, "(dot e_s (cross J L))",
               _i("k", "s", "-s*(k+1)/(2*k+1)", C2),
               _i("-k-1", "s", "(k+3*H)/(2*k+1)", D_2)),
        _entry("3.2.39", first, "(dot sigma (cross J L))",
               _i("k", "0", "-2*(k+1)")),
        _entry("3.2.40", first, "(dot (cross J L) n)",
               _i("-k", "0", "(k-1)*H")),
        _entry("3.2.41", first, "(dot L (cross n J))",
               _i("-k", "0", "(k-1)*H")),
        _entry("3.2.42", first, "(dot J (cross n L))",
               _i("-k", "0", "-(k+1)*H")),
        _entry("3.2.43", first, "(dot sigma (cross J sigma))",
               _i("k", "0", "2*k+5")),
        _entry("3.2.44", first, "(dot J (cross n J))",
               _i("-k", "0", "-H")),
        _entry("3.2.45", first, "(dot J (cross sigma J))",
               _i("k", "0", "-(k-H)")),
        _entry("3.2.46", first, "(dot J (cross L J))",
               _i("k", "0", "(k-H)*(k+1)")),
        _entry("3.2.47", first, "(dot (cross L J) L)",
               _i("k", "0", "(k+H)*(k+1)")),
        # ---- differential relations of the second kind
        _entry("3.3.1", second, "(dot n nabla)",
               T("k", "0", "1", radial=RadialOp("d_dr_plus_c_over_r", "0"))),
        _entry("3.3.2", second, "(dot nabla n)",
               T("k", "0", "1", radial=RadialOp("d_dr_plus_c_over_r", "2"))),
        _entry("3.3.3", second, "(dot e0 nabla)",
               T("-k", "0", "-2*mu/(4*k**2-1)", radial=P),
               T("k+1", "0", "1/abs(2*k+1)", A0, radial=M),
               T("k-1", "0", "1/abs(2*k-1)", B0, radial=P)),
        _entry("3.3.4", second, "(dot e_s nabla)",
               T("-k", "s", "s/(4*k**2-1)", C2, radial=P),
               T("k+1", "s", "1/(2*k+1)", D_2, radial=M),
               T("k-1", "s", "-1/(2*k-1)", E_2, radial=P)),
        _entry("3.3.5", second, "(dot sigma nabla)",
               T("-k", "0", "-1", radial=P)),
        _entry("3.3.6", second, "(dot J nabla)",
               T("-k", "0", "-H", radial=P)),
        _entry("3.3.7", second, "(dot nabla J)",
               T("-k", "0", "-H", radial=P)),
        _entry("3.3.8", second, "(dot nabla nabla)",
               T("k", "0", "1", radial=BESSEL)),
        _entry("3.3.9", second, "(dot e0 (cross sigma nabla))",
               _i("-k", "0", "-4*mu*k/(4*k**2-1)", radial=P),
               _i("k+1", "0", "-1/abs(2*k+1)", A0, radial=M),
               _i("k-1", "0", "1/abs(2*k-1)", B0, radial=P)),
        _entry("3.3.10", second, "(dot e_s (cross sigma nabla))",
               _i("-k", "s", "s*2*k/(4*k**2-1)", C2, radial=P),
               _i("k+1", "s", "-1/(2*k+1)", D_2, radial=M),
               _i("k-1", "s", "-1/(2*k-1)", E_2, radial=P)),
        _entry("3.3.11", second, "(dot J (cross sigma nabla))",
               _i("-k", "0", "-k", radial=P)),
        _entry("3.3.12", second, "(dot n (cross L nabla))",
               _i("k", "0", "1", radial=RadialOp("two_dr_plus_c_over_r", "-k*(k+1)"))),
        _entry("3.3.13", second, "(dot e0 (cross L nabla))",
               _i("-k", "0", "2*mu*(k-1)/(4*k**2-1)", radial=P),
               _i("k+1", "0", "(k+2)/abs(2*k+1)", A0, radial=M),
               _i("k-1", "0", "-(k-1)/abs(2*k-1)", B0, radial=P)),
        _entry("3.3.14", second, "(dot e_s (cross L nabla))",
               _i("-k", "s", "-s*(k-1)/(4*k**2-1)", C2, radial=P),
               _i("k+1", "s", "(k+2)/(2*k+1)", D_2, radial=M),
               _i("k-1", "s", "(k-1)/(2*k-1)", E_2, radial=P)),
        _entry("3.3.15", second, "(dot sigma (cross L nabla))",
               _i("-k", "0", "k-1", radial=P)),
        _entry("3.3.16", second, "(dot J (cross L nabla))",
               _i("-k", "0", "(k-1)*H", radial=P)),
        _entry("3.3.17", second, "(dot e0 (cross nabla L))",
               _i("-k", "0", "-2*mu*(k+1)/(4*k**2-1)", radial=P),
               _i("k+1", "0", "-k/abs(2*k+1)", A0, radial=M),
               _i("k-1", "0", "(k+1)/abs(2*k-1)", B0, radial=P)),
        _entry("3.3.18", second, "(dot e_s (cross nabla L))",
               _i("-k", "s", "s*(k+1)/(4*k**2-1)", C2, radial=P),
               _i("k+1", "s", "-k/(2*k+1)", D_2, radial=M),
               _i("k-1", "s", "-(k+1)/(2*k-1)", E_2, radial=P)),
        _entry("3.3.19", second, "(dot sigma (cross nabla L))",
               _i("-k", "0", "-(k+1)", radial=P)),
        _entry("3.3.20", second, "(dot J (cross nabla L))",
               _i("-k", "0", "-(k+1)*H", radial=P)),
        _entry("3.3.21", second, "(dot (cross nabla L) n)",
               _i("k", "0", "1", radial=RadialOp("two_dr_plus_c_over_r", "k**2+k+4"))),
        _entry("3.3.22", second, "(dot (cross nabla L) J)",
               _i("-k", "0", "-(k+1)*H", radial=P)),
        _entry("3.3.23", second, "(dot n (cross J nabla))",
               _i("k", "0", "1", radial=RadialOp("two_dr_plus_c_over_r", "-(k+1)*(2*k-1)*H"))),
        _entry("3.3.24", second, "(dot e0 (cross J nabla))",
               _i("-k", "0", "-2*mu/(4*k**2-1)", radial=P),
               _i("k+1", "0", "(k+3*H)/abs(2*k+1)", A0, radial=M),
               _i("k-1", "0", "-(k-3*H)/abs(2*k-1)", B0, radial=P)),
        _entry("3.3.25", second, "(dot e_s (cross J nabla))",
               _i("-k", "s", "s/(4*k**2-1)", C2, radial=P),
               _i("k+1", "s", "(k+3*H)/(2*k+1)", D_2, radial=M),
               _i("k-1", "s", "(k-3*H)/(2*k-1)", E_2, radial=P)),
        _entry("3.3.26", second, "(dot sigma (cross J nabla))",
               _i("-k", "0", "k-2", radial=P)),
        _entry("3.3.27", second, "(dot L (cross J nabla))",
               _i("-k", "0", "-(k-1)*H", radial=P)),
        _entry("3.3.28", second, "(dot e0 (cross nabla J))",
               _i("-k", "0", "-2*mu/(4*k**2-1)", radial=P),
               _i("k+1", "0", "-(k-H)/abs(2*k+1)", A0, radial=M),
               _i("k-1", "0", "(k+H)/abs(2*k-1)", B0, radial=P)),
        _entry("3.3.29", second, "(dot e_s (cross nabla J))",
               _i("-k", "s", "s/(4*k**2-1)", C2, radial=P),
               _i("k+1", "s", "-(k-H)/(2*k+1)", D_2, radial=M),
               _i("k-1", "s", "-(k+H)/(2*k-1)", E_2, radial=P)),
        _entry("3.3.30", second, "(dot sigma (cross nabla J))",
               _i("-k", "0", "-k", radial=P)),
        _entry("3.3.31", second, "(dot L (cross nabla J))",
               _i("-k", "0", "(k-1)*H", radial=P)),
        _entry("3.3.32", second, "(dot J (cross nabla J))",
               _i("-k", "0", "-H", radial=P)),
        _entry("3.3.33", second, "(dot (cross nabla J) n)",
               _i("k", "0", "1", radial=RadialOp("two_dr_plus_c_over_r", "(2*k**2+k+7)*H"))),
        _entry("3.3.34", second, "(dot (cross nabla J) sigma)",
               _i("-k", "0", "-(k+2)", radial=P)),
        _entry("3.3.35", second, "(dot (cross nabla J) L)",
               _i("-k", "0", "(k+1)*H", radial=P)),
        _entry("3.3.36", second, "(dot nabla (cross L nabla))",
               _i("k", "0", "2", radial=BESSEL)),
        _entry("3.3.37", second, "(dot nabla (cross J nabla))",
               _i("k", "0", "2", radial=BESSEL)),
    )


_CATALOG = _build()
_BY_ID = {e.id: e for e in _CATALOG}


def catalog() -> list[RelationEntry]:
    return list(_CATALOG)


def get_entry(relation_id: str) -> RelationEntry:
    try:
        return _BY_ID[relation_id]
    except KeyError:
        raise KeyError(f"unknown relation id {relation_id!r}") from None


def rhs_coefficient(entry: RelationEntry, term_index: int, kappa: int, mu, variant: str | None = None) -> complex:
    return entry.terms[term_index].coefficient(kappa, HalfInt.of(mu), variant_sign(variant))


def eval_rhs(
    entry: RelationEntry,
    kappa: int,
    mu,
    jet: RadialJet,
    variant: str | None = None,
) -> SpectralField:
    """Right-hand side as a field whose coefficients are already folded at the jet."""
    mu = HalfInt.of(mu)
    SpinorIndex(kappa, mu)  # validates the source index
    s = variant_sign(variant)
    total: dict = {}
    for term in entry.terms:
        coeff = term.coefficient(kappa, mu, s)
        if coeff == 0:
            continue
        t_kappa, t_mu = term.target(kappa, mu, s)
        if not SpinorIndex.is_valid(t_kappa, t_mu):
            raise ValueError(
                f"relation {entry.id}: nonzero coefficient {coeff} on invalid target ({t_kappa}, {t_mu})"
            )
        weight = coeff * term.radial.apply(jet, kappa, s)
        for (s_, l, m, k, p), amp in field_from_spinor(SpinorIndex(t_kappa, t_mu)).terms.items():
            key = (s_, l, m, 0, 0)
            total[key] = total.get(key, 0j) + weight * amp
    # radial content is folded into the amplitudes; evaluate with F = 1
    return SpectralField(total, RadialJet(jet.r, 1.0, 0.0, 0.0))
