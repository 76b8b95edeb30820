"""Ground truth by exhaustive enumeration.

Structures of a species expression on F_q^n are materialised as canonical
nested tuples, transported along automorphisms, and counted directly.
Sub-structures on a proper subspace W are represented in coordinates of
the RREF basis of W, so every species only ever enumerates on standard
spaces; transport conjugates through these coordinate charts.

Encodings (first element is a tag):
    ("vec", v)                 a vector, for Elem
    ("sub", rows)              a subspace, for Proj and Sub(k)
    ("mat", rows)              a matrix, for End / Aut / RepCyclic
    ("bas", (v_1, ..., v_n))   an ordered basis
    ("spc",)                   the unique structure of V / Vplus / One
    ("scl", c)                 a scalar, for Fscalar / Fstar
    ("prod", (rows1, s), (rows2, t))          an ordered 2-part split
    ("mset", ((rows, s), ...)) sorted          an unordered split (sym/assembly)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .field import FieldSpec
from .linalg import (BudgetExceededError, DEFAULT_BUDGET, Matrix, Subspace,
                     enumerate_decompositions, enumerate_matrices,
                     enumerate_subspaces, gl_order, invariant_data)
from .series import TPoly
from .cycleindex import CycleIndexSeries, ZMonomial
from .species import (Assembly, Builtin, Mark, Plus, Power, Product, SpeciesExpr,
                      Sum, SymPower, validate)

Structure = tuple  # canonical encoding
ORACLE_BUDGET = DEFAULT_BUDGET


def _all_vectors(field: FieldSpec, n: int):
    return iproduct(range(field.q), repeat=n)


def enumerate_structures(e: SpeciesExpr, field: FieldSpec, n: int,
                         budget: int = ORACLE_BUDGET) -> list[tuple[Structure, TPoly]]:
    """All structures of e on E_n as (encoding, weight) pairs, canonically ordered."""
    validate(e)
    out = _enum(e, field, n, budget)
    out.sort(key=lambda sw: sw[0])
    return out


def _enum(e: SpeciesExpr, field: FieldSpec, n: int, budget: int) -> list:
    one = TPoly.const(1)
    if isinstance(e, Builtin):
        return [(s, one) for s in _enum_builtin(e, field, n, budget)]
    if isinstance(e, Sum):
        # tag the two sides to keep a true disjoint union
        return ([(("L",) + (s,), w) for s, w in _enum(e.left, field, n, budget)]
                + [(("R",) + (s,), w) for s, w in _enum(e.right, field, n, budget)])
    if isinstance(e, Product):
        return _enum_product(e.left, e.right, field, n, budget)
    if isinstance(e, Power):
        if e.n == 0:
            return [(("spc",), one)] if n == 0 else []
        inner: SpeciesExpr = e.base
        for _ in range(e.n - 1):
            inner = Product(e.base, inner)
        return _enum(inner, field, n, budget)
    if isinstance(e, SymPower):
        return _enum_multiset(e.base, field, n, e.n, e.n, budget)
    if isinstance(e, Assembly):
        if n == 0:
            return [(("mset", ()), one)]
        return _enum_multiset(e.base, field, n, 1, n, budget)
    if isinstance(e, Plus):
        if n == 0:
            return []
        return _enum(e.base, field, n, budget)
    if isinstance(e, Mark):
        return [(s, w * TPoly.t()) for s, w in _enum(e.base, field, n, budget)]
    raise TypeError(f"unknown species node {e!r}")


def _enum_builtin(e: Builtin, field: FieldSpec, n: int, budget: int) -> list[Structure]:
    q = field.q
    name = e.name
    if name == "One":
        return [("spc",)] if n == 0 else []
    if name == "Zero":
        return []
    if name == "Elem":
        return [("vec", v) for v in _all_vectors(field, n)]
    if name == "Proj":
        return [("sub", s.basis) for s in enumerate_subspaces(field, n, 1, budget)] if n else []
    if name == "Sub":
        k = e.arg
        if k > n:
            return []
        return [("sub", s.basis) for s in enumerate_subspaces(field, n, k, budget)]
    if name == "End":
        if q ** (n * n) > budget:
            raise BudgetExceededError("endomorphism enumeration exceeds budget")
        return [("mat", m.entries) for m in enumerate_matrices(field, n, False, budget)]
    if name == "Aut":
        return [("mat", m.entries) for m in enumerate_matrices(field, n, True, budget)]
    if name == "Bases":
        if q ** (n * n) > budget:
            raise BudgetExceededError("basis enumeration exceeds budget")
        out = []
        for vs in iproduct(_all_vectors(field, n), repeat=n):
            if n == 0 or Matrix.make(field, vs).rank() == n:
                out.append(("bas", vs))
        return out
    if name == "V":
        return [("spc",)]
    if name == "Vplus":
        return [("spc",)] if n >= 1 else []
    if name == "Fscalar":
        return [("scl", c) for c in range(q)] if n == 1 else []
    if name == "Fstar":
        return [("scl", c) for c in range(1, q)] if n == 1 else []
    if name == "RepCyclic":
        m = e.arg
        out = []
        ident = Matrix.identity(field, n)
        for g in enumerate_matrices(field, n, True, budget):
            if g**m == ident:
                out.append(("mat", g.entries))
        return out
    raise ValueError(f"unknown builtin {name}")


def _enum_product(left: SpeciesExpr, right: SpeciesExpr, field: FieldSpec,
                  n: int, budget: int) -> list:
    out = []
    for k in range(n + 1):
        for v1, v2 in enumerate_decompositions(field, n, (k, n - k), budget):
            for s1, w1 in _enum(left, field, k, budget):
                for s2, w2 in _enum(right, field, n - k, budget):
                    out.append((("prod", (v1.basis, s1), (v2.basis, s2)), w1 * w2))
    return out


def _enum_multiset(base: SpeciesExpr, field: FieldSpec, n: int,
                   min_parts: int, max_parts: int, budget: int) -> list:
    """Unordered splittings into m nonzero parts, min_parts <= m <= max_parts,
    with a base-structure on each part, deduplicated as sorted multisets."""
    per_dim: dict[int, list] = {}
    for d in range(1, n + 1):
        per_dim[d] = _enum(base, field, d, budget)

    seen: dict[Structure, TPoly] = {}

    def rec(remaining_rows: tuple, used: int, parts: tuple, weight: TPoly, m: int):
        if used == n:
            if m >= min_parts:
                key = ("mset", tuple(sorted(parts)))
                if key not in seen:
                    seen[key] = weight
            return
        if m == max_parts:
            return
        for d in range(1, n - used + 1):
            if not per_dim[d]:
                continue
            for w_sub in enumerate_subspaces(field, n, d, budget):
                stacked = Matrix.make(field, remaining_rows + w_sub.basis)
                if stacked.rank() != used + d:
                    continue
                for s, ws in per_dim[d]:
                    rec(remaining_rows + w_sub.basis, used + d,
                        parts + ((w_sub.basis, s),), weight * ws, m + 1)

    if n == 0:
        if min_parts == 0:
            return [(("mset", ()), TPoly.const(1))]
        return []
    rec((), 0, (), TPoly.const(1), 0)
    return list(seen.items())


# -- transport -----------------------------------------------------------------

def _chart_map(field: FieldSpec, g: Matrix, w: Subspace, w_img: Subspace) -> Matrix:
    """The matrix of g restricted to w, in the RREF bases of w and g(w)."""
    cols = []
    for b in w.basis:
        img = g.matvec(b)
        cols.append(w_img.coords(img))
    return Matrix.make(field, tuple(zip(*cols))) if cols else Matrix(field, ())


def transport(e: SpeciesExpr, s: Structure, g: Matrix) -> Structure:
    """F[g](s) for an invertible g of the matching dimension."""
    if not g.is_invertible():
        raise ValueError("transport requires an invertible matrix")
    return _transport(e, s, g)


def _transport(e: SpeciesExpr, s: Structure, g: Matrix) -> Structure:
    field = g.field
    if isinstance(e, Builtin):
        tag = s[0]
        if tag == "vec":
            return ("vec", g.matvec(s[1]))
        if tag == "sub":
            sub = Subspace(field, g.ncols, s[1])
            return ("sub", sub.image(g).basis)
        if tag == "mat":
            a = Matrix(field, s[1])
            return ("mat", (g * a * g.inverse()).entries)
        if tag == "bas":
            return ("bas", tuple(g.matvec(v) for v in s[1]))
        if tag in ("spc", "scl"):
            return s
        raise ValueError(f"bad structure {s!r} for builtin {e.name}")
    if isinstance(e, Sum):
        side, inner = s[0], s[1]
        sub = e.left if side == "L" else e.right
        return (side, _transport(sub, inner, g))
    if isinstance(e, Product):
        return _transport_product(e.left, e.right, s, g)
    if isinstance(e, Power):
        if e.n == 0:
            return s
        inner: SpeciesExpr = e.base
        for _ in range(e.n - 1):
            inner = Product(e.base, inner)
        return _transport(inner, s, g)
    if isinstance(e, (SymPower, Assembly)):
        members = []
        for rows, enc in s[1]:
            w = Subspace(field, g.ncols, rows)
            w_img = w.image(g)
            h = _chart_map(field, g, w, w_img)
            members.append((w_img.basis, _transport(e.base, enc, h)))
        return ("mset", tuple(sorted(members)))
    if isinstance(e, (Plus, Mark)):
        return _transport(e.base, s, g)
    raise TypeError(f"unknown species node {e!r}")


def _transport_product(left, right, s, g):
    field = g.field
    (rows1, s1), (rows2, s2) = s[1], s[2]
    out_parts = []
    for rows, enc, sub_e in ((rows1, s1, left), (rows2, s2, right)):
        w = Subspace(field, g.ncols, rows)
        w_img = w.image(g)
        h = _chart_map(field, g, w, w_img)
        if w.dim == 0:
            out_parts.append((w_img.basis, enc))
        else:
            out_parts.append((w_img.basis, _transport(sub_e, enc, h)))
    return ("prod", out_parts[0], out_parts[1])


# -- counting ------------------------------------------------------------------

def structure_count_bf(e: SpeciesExpr, field: FieldSpec, n: int,
                       budget: int = ORACLE_BUDGET) -> int:
    return len(enumerate_structures(e, field, n, budget))


def inventory_bf(e: SpeciesExpr, field: FieldSpec, n: int,
                 budget: int = ORACLE_BUDGET) -> TPoly:
    total = TPoly()
    for _s, w in enumerate_structures(e, field, n, budget):
        total = total + w
    return total


def fix_count_bf(e: SpeciesExpr, field: FieldSpec, n: int, sigma: Matrix,
                 budget: int = ORACLE_BUDGET) -> int:
    structures = enumerate_structures(e, field, n, budget)
    return sum(1 for s, _w in structures if _transport(e, s, sigma) == s)


def fix_inventory_bf(e: SpeciesExpr, field: FieldSpec, n: int, sigma: Matrix,
                     budget: int = ORACLE_BUDGET) -> TPoly:
    total = TPoly()
    for s, w in enumerate_structures(e, field, n, budget):
        if _transport(e, s, sigma) == s:
            total = total + w
    return total


@lru_cache(maxsize=None)
def _gl_generators(field: FieldSpec, n: int) -> tuple[Matrix, ...]:
    """Elementary transvections and one-slot unit scalings; generates GL_n."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                for u in range(2, field.q):
                    rows = [list(r) for r in Matrix.identity(field, n).entries]
                    rows[i][i] = u
                    gens.append(Matrix.make(field, rows))
            else:
                for lam in range(1, field.q):
                    rows = [list(r) for r in Matrix.identity(field, n).entries]
                    rows[i][j] = lam
                    gens.append(Matrix.make(field, rows))
    return tuple(gens)


def orbit_partition(e: SpeciesExpr, field: FieldSpec, n: int,
                    budget: int = ORACLE_BUDGET) -> list[dict]:
    """Aut(E_n)-orbits on structures via BFS over GL generators.

    Returns one dict per orbit: representative (minimal encoding), size, weight."""
    structures = enumerate_structures(e, field, n, budget)
    weights = dict(structures)
    gens = _gl_generators(field, n)
    unseen = set(weights)
    orbits = []
    while unseen:
        start = min(unseen)
        frontier = [start]
        orbit = {start}
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = _transport(e, cur, g)
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        unseen -= orbit
        orbits.append({"rep": min(orbit), "size": len(orbit), "weight": weights[start]})
    return orbits


def orbit_count_bf(e: SpeciesExpr, field: FieldSpec, n: int,
                   budget: int = ORACLE_BUDGET) -> int:
    """Orbit count, by explicit partition and by Burnside average; both must agree."""
    orbits = orbit_partition(e, field, n, budget)
    if gl_order(field, n) * field.q ** (n * n) <= budget:
        total = 0
        for sigma in enumerate_matrices(field, n, True, budget):
            total += fix_count_bf(e, field, n, sigma, budget)
        assert total % gl_order(field, n) == 0
        burnside = total // gl_order(field, n)
        assert burnside == len(orbits), "orbit partition and Burnside disagree"
    return len(orbits)


def zindex_bf(e: SpeciesExpr, field: FieldSpec, order: int,
              budget: int = ORACLE_BUDGET) -> CycleIndexSeries:
    """Cycle index by literal summation over all of Aut(E_n), n <= order."""
    terms: dict[ZMonomial, Fraction] = {}
    for n in range(order + 1):
        gn = gl_order(field, n)
        structures = enumerate_structures(e, field, n, budget)
        for sigma in enumerate_matrices(field, n, True, budget):
            fix = sum(1 for s, _w in structures if _transport(e, s, sigma) == s)
            if fix:
                m = ZMonomial.from_invariant(invariant_data(sigma))
                terms[m] = terms.get(m, Fraction(0)) + Fraction(fix, gn)
    return CycleIndexSeries(field, order, terms)
