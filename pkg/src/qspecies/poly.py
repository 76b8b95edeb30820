"""Monic polynomial arithmetic over F_q and irreducible enumeration.

Polynomials are immutable value types: a coefficient tuple (lowest degree
first, trailing zeros stripped) over a :class:`~qspecies.field.FieldSpec`.
The monic irreducibles are the index set of the cycle-index variables, so
their enumeration order matters: z-1 comes first among the degree-1
polynomials, then the rest by coefficient order, then increasing degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .field import FieldSpec


@dataclass(frozen=True)
class Poly:
    field: FieldSpec
    coeffs: tuple[int, ...]  # lowest degree first, no trailing zeros

    @staticmethod
    def make(field: FieldSpec, coeffs) -> "Poly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(field, tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- ring operations ----------------------------------------------------

    def _same_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly.make(F, [F.add(x, y) for x, y in zip(a, b)])

    def __sub__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly.make(F, [F.sub(x, y) for x, y in zip(a, b)])

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Poly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly.make(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly.make(F, [F.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        db = other.degree
        lead_inv = F.inv(other.coeffs[-1])
        q = [0] * max(0, len(r) - db)
        for shift in range(len(r) - db - 1, -1, -1):
            c = F.mul(r[shift + db], lead_inv)
            if c:
                q[shift] = c
                for i, bi in enumerate(other.coeffs):
                    r[shift + i] = F.sub(r[shift + i], F.mul(c, bi))
        return Poly.make(F, q), Poly.make(F, r)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __pow__(self, e: int) -> "Poly":
        out = Poly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def evaluate(self, x: int) -> int:
        F = self.field
        out = 0
        for c in reversed(self.coeffs):
            out = F.add(F.mul(out, x), c)
        return out

    # -- ordering and rendering ----------------------------------------------

    def sort_key(self) -> tuple:
        """Degree first, z-1 before other degree-1 polynomials, then
        coefficient order with the constant term last."""
        z_minus_1 = self.coeffs == (self.field.neg(1), 1)
        return (self.degree, 0 if z_minus_1 else 1, tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                v = "z" if e == 1 else f"z^{e}"
                terms.append(v if c == 1 else f"{c}*{v}")
        return "+".join(terms)


def poly_z(field: FieldSpec) -> Poly:
    return Poly(field, (0, 1))


def poly_one(field: FieldSpec) -> Poly:
    return Poly(field, (1,))


def poly_z_minus(field: FieldSpec, lam: int) -> Poly:
    """The linear polynomial z - lam."""
    return Poly.make(field, (field.neg(lam), 1))


def _all_monic(field: FieldSpec, d: int):
    for lower in product(range(field.q), repeat=d):
        yield Poly(field, tuple(lower) + (1,))


@lru_cache(maxsize=None)
def _irreducibles_cached(field: FieldSpec, d: int) -> tuple[Poly, ...]:
    if d == 1:
        polys = list(_all_monic(field, 1))
    else:
        divisors = [g for e in range(1, d // 2 + 1) for g in _irreducibles_cached(field, e)]
        polys = [f for f in _all_monic(field, d)
                 if all(not (f % g).is_zero for g in divisors)]
    polys.sort(key=Poly.sort_key)
    return tuple(polys)


def monic_irreducibles(field: FieldSpec, d: int, exclude_z: bool = False) -> list[Poly]:
    """All monic irreducibles of degree exactly d, in canonical order."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    polys = _irreducibles_cached(field, d)
    if exclude_z and d == 1:
        zp = poly_z(field)
        return [f for f in polys if f != zp]
    return list(polys)


def is_irreducible(f: Poly) -> bool:
    if not f.is_monic or f.degree < 1:
        raise ValueError("irreducibility is defined for monic polynomials of degree >= 1")
    if f.degree == 1:
        return True
    if f.degree <= 3:
        return all(f.evaluate(x) != 0 for x in f.field.elements())
    for e in range(1, f.degree // 2 + 1):
        for g in _irreducibles_cached(f.field, e):
            if (f % g).is_zero:
                return False
    return True


def _mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def irreducible_count(field: FieldSpec, d: int) -> int:
    """Necklace count (1/d) * sum_{e|d} mu(e) q^(d/e)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    q = field.q
    total = sum(_mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d
