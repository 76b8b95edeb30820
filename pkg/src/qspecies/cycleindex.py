"""Cycle index series: sparse rational combinations of monomials x_{phi,i}.

A monomial of graded degree n is exactly the invariant data of an
Aut(E_n) conjugacy class, so the series is built class-by-class as
fix(class)/centralizer_order(class) on the class monomial.

The type specialisation substitutes x_{phi,i} -> x^(i*deg phi), i.e. every
class of dimension n lands on x^n.  The literal substitution x_{phi,i} ->
x^i stated alongside the definition only recovers the type series when all
irreducibles involved have degree 1; the degree-weighted exponent is the
one that makes Burnside's lemma (and hence the type series identity) hold,
and is therefore the default.  The literal rule is available for
comparison via ``literal=True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classes import enumerate_classes
from .field import FieldSpec
from .linalg import InvariantData
from .series import RATIONAL, PowerSeries, ring_zero


@dataclass(frozen=True)
class ZMonomial:
    """Product of x_{phi,i}^e factors; phi is never the polynomial z."""

    exponents: frozenset  # frozenset of ((Poly, int), int)

    @staticmethod
    def make(mapping: dict) -> "ZMonomial":
        return ZMonomial(frozenset((k, e) for k, e in mapping.items() if e))

    @staticmethod
    def from_invariant(inv: InvariantData) -> "ZMonomial":
        if not inv.is_automorphism():
            raise ValueError("cycle index monomials exclude the polynomial z")
        return ZMonomial(inv.entries)

    def to_invariant(self) -> InvariantData:
        return InvariantData(self.degree, self.exponents)

    @property
    def degree(self) -> int:
        """Graded degree: the dimension of the space the class acts on."""
        return sum(e * i * phi.degree for (phi, i), e in self.exponents)

    @property
    def literal_exponent(self) -> int:
        """Sum of i*e_{phi,i}, the exponent the substitution x_{phi,i}=x^i gives."""
        return sum(e * i for (phi, i), e in self.exponents)

    def sorted_items(self) -> list:
        return sorted(self.exponents, key=lambda kv: (kv[0][0].sort_key(), kv[0][1]))

    def sort_key(self) -> tuple:
        return (self.degree,
                tuple((phi.sort_key(), i, e) for (phi, i), e in self.sorted_items()))

    def mul(self, other: "ZMonomial") -> "ZMonomial":
        out = dict(self.exponents)
        for k, e in other.exponents:
            out[k] = out.get(k, 0) + e
        return ZMonomial.make(out)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        parts = []
        for (phi, i), e in self.sorted_items():
            base = f"x[{phi},{i}]"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)


class CycleIndexSeries:
    """Graded truncated series: map ZMonomial -> nonzero rational coefficient."""

    __slots__ = ("field", "order", "terms")

    def __init__(self, field: FieldSpec, order: int, terms: dict):
        self.field = field
        self.order = order
        self.terms = {m: Fraction(c) for m, c in terms.items()
                      if c and m.degree <= order}

    def _compat(self, other: "CycleIndexSeries") -> None:
        if self.field != other.field:
            raise ValueError("cycle index series over different fields")
        if self.order != other.order:
            raise ValueError("truncation order mismatch")

    def __add__(self, other: "CycleIndexSeries") -> "CycleIndexSeries":
        self._compat(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return CycleIndexSeries(self.field, self.order, out)

    def __mul__(self, other: "CycleIndexSeries") -> "CycleIndexSeries":
        self._compat(other)
        out: dict[ZMonomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            d1 = m1.degree
            for m2, c2 in other.terms.items():
                if d1 + m2.degree > self.order:
                    continue
                m = m1.mul(m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return CycleIndexSeries(self.field, self.order, out)

    def scale(self, c) -> "CycleIndexSeries":
        return CycleIndexSeries(self.field, self.order,
                                {m: v * c for m, v in self.terms.items()})

    def drop_constant(self) -> "CycleIndexSeries":
        return CycleIndexSeries(self.field, self.order,
                                {m: v for m, v in self.terms.items() if m.degree > 0})

    def __eq__(self, other) -> bool:
        return (isinstance(other, CycleIndexSeries)
                and (self.field, self.order) == (other.field, other.order)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.order, frozenset(self.terms.items())))

    def specialize_generating(self, order: int | None = None) -> PowerSeries:
        """Keep only monomials in the single variable x_{z-1,1}; x_{z-1,1}^n -> x^n."""
        F = self.field
        z_minus_1 = (F.neg(1), 1)
        n = self.order if order is None else order
        coeffs = [ring_zero(RATIONAL)] * (n + 1)
        for m, c in self.terms.items():
            items = list(m.exponents)
            if all(phi.coeffs == z_minus_1 and i == 1 for (phi, i), _e in items):
                deg = sum(e for _k, e in items)
                if deg <= n:
                    coeffs[deg] += c
        return PowerSeries(RATIONAL, n, coeffs)

    def specialize_type(self, order: int | None = None, literal: bool = False) -> PowerSeries:
        """Substitute x_{phi,i} -> x^(i*deg phi) (or x^i with literal=True)."""
        n = self.order if order is None else order
        coeffs = [ring_zero(RATIONAL)] * (n + 1)
        for m, c in self.terms.items():
            deg = m.literal_exponent if literal else m.degree
            if deg <= n:
                coeffs[deg] += c
        return PowerSeries(RATIONAL, n, coeffs)

    def render_lines(self) -> list[str]:
        lines = []
        for m in sorted(self.terms, key=ZMonomial.sort_key):
            c = self.terms[m]
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            lines.append(f"{cs} * {m}")
        return lines

    def to_json(self) -> list[dict]:
        out = []
        for m in sorted(self.terms, key=ZMonomial.sort_key):
            c = self.terms[m]
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append({"degree": m.degree, "monomial": str(m), "coeff": cs})
        return out

    def __str__(self) -> str:
        return " + ".join(self.render_lines()) if self.terms else "0"


def z_build(field: FieldSpec, fix, order: int) -> CycleIndexSeries:
    """Cycle index from a fix-count class function:
    sum over Aut classes of (fix(c)/centralizer_order(c)) * monomial(c)."""
    terms: dict[ZMonomial, Fraction] = {}
    for n in range(order + 1):
        for c in enumerate_classes(field, n, "aut"):
            v = Fraction(fix(c), c.centralizer_order)
            if v:
                terms[ZMonomial.from_invariant(c.invariant)] = v
    return CycleIndexSeries(field, order, terms)


def z_one(field: FieldSpec, order: int) -> CycleIndexSeries:
    return CycleIndexSeries(field, order, {ZMonomial.make({}): Fraction(1)})


def z_zero(field: FieldSpec, order: int) -> CycleIndexSeries:
    return CycleIndexSeries(field, order, {})
