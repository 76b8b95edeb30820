"""Conjugacy classes of Aut(E_n) and End(E_n) by invariant data.

A class is an assignment of a partition lambda_phi to each monic
irreducible phi with sum deg(phi)*|lambda_phi| = n; its centralizer order
is the standard product formula per irreducible, validated against
brute-force commutant counts in the test suite before being trusted at
dimensions where GL enumeration is impossible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .field import FieldSpec
from .linalg import InvariantData, Matrix, block_diagonal, companion_matrix, gl_order
from .poly import Poly, monic_irreducibles


@dataclass(frozen=True)
class ConjClass:
    invariant: InvariantData
    centralizer_order: int
    class_size: int

    @property
    def n(self) -> int:
        return self.invariant.n

    def representative(self, field: FieldSpec) -> Matrix:
        """Block diagonal of e_{phi,i} copies of the companion matrix of phi^i,
        blocks ordered by (phi, i)."""
        blocks = []
        for (phi, i), e in self.invariant.sorted_items():
            block = companion_matrix(phi**i)
            blocks.extend([block] * e)
        return block_diagonal(field, blocks)


@lru_cache(maxsize=None)
def _partitions(m: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of m as descending tuples; the empty partition for m = 0."""
    if m == 0:
        return ((),)
    out = []

    def rec(remaining: int, largest: int, acc: tuple[int, ...]):
        if remaining == 0:
            out.append(acc)
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, acc + (part,))

    rec(m, m, ())
    return tuple(out)


def centralizer_order(field: FieldSpec, inv: InvariantData) -> int:
    """Product over irreducibles phi of
    Q^(|l| + 2n(l)) * prod_i prod_{k=1}^{m_i(l)} (1 - Q^-k), Q = q^deg(phi)."""
    total = Fraction(1)
    for phi, parts in inv.partitions().items():
        Q = field.q ** phi.degree
        size = sum(parts)
        nl = sum(j * part for j, part in enumerate(parts))
        factor = Fraction(Q) ** (size + 2 * nl)
        mult: dict[int, int] = {}
        for part in parts:
            mult[part] = mult.get(part, 0) + 1
        for m in mult.values():
            for k in range(1, m + 1):
                factor *= 1 - Fraction(1, Q**k)
        total *= factor
    assert total.denominator == 1 and total > 0
    return total.numerator


@lru_cache(maxsize=None)
def enumerate_classes(field: FieldSpec, n: int, kind: str = "aut") -> tuple[ConjClass, ...]:
    """All conjugacy classes of Aut(E_n) (kind="aut") or End(E_n) (kind="end")."""
    if kind not in ("aut", "end"):
        raise ValueError("kind must be 'aut' or 'end'")
    if n < 0:
        raise ValueError("dimension must be >= 0")
    polys: list[Poly] = []
    for d in range(1, n + 1):
        polys.extend(monic_irreducibles(field, d, exclude_z=(kind == "aut")))
    polys.sort(key=lambda f: f.degree)  # ascending degree enables pruning

    assignments: list[dict] = []

    def rec(start: int, weight: int, acc: dict):
        if weight == 0:
            assignments.append(dict(acc))
            return
        for j in range(start, len(polys)):
            d = polys[j].degree
            if d > weight:
                break
            for m in range(1, weight // d + 1):
                for parts in _partitions(m):
                    for part in parts:
                        acc[(polys[j], part)] = acc.get((polys[j], part), 0) + 1
                    rec(j + 1, weight - m * d, acc)
                    for part in parts:
                        acc[(polys[j], part)] -= 1
                        if not acc[(polys[j], part)]:
                            del acc[(polys[j], part)]

    rec(0, n, {})
    order_n = gl_order(field, n)
    classes = []
    for mapping in assignments:
        inv = InvariantData.make(n, mapping)
        cent = centralizer_order(field, inv)
        # class size is the GL conjugation orbit size, for End classes too
        assert order_n % cent == 0
        classes.append(ConjClass(inv, cent, order_n // cent))
    classes.sort(key=lambda c: [ (phi.sort_key(), i, e) for (phi, i), e in c.invariant.sorted_items() ])
    return tuple(classes)


def class_weighted_sum(field: FieldSpec, n: int, kind: str, f):
    """Sum of class_size * f(class) over the conjugacy classes of weight n.

    Equals a sum over all of Aut(E_n) (or End) of a class function."""
    total = None
    for c in enumerate_classes(field, n, kind):
        term = f(c) * c.class_size
        total = term if total is None else total + term
    if total is None:
        total = 0
    return total
