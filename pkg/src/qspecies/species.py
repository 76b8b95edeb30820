"""Built-in q-species and combinators, with their three series.

A species expression is a small immutable AST.  Builtins carry closed-form
structure counts and (where one exists) a fixed-point count per conjugacy
class; everything without a closed form is delegated to the exhaustive
oracle, which is also the independent check on every closed form here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classes import ConjClass, enumerate_classes
from .field import FieldSpec
from .linalg import gl_order, q_int, qbinomial
from .poly import poly_z_minus
from .series import POLY_T, RATIONAL, PowerSeries, TPoly, ring_one
from .cycleindex import CycleIndexSeries, z_build


class SpeciesExpr:
    """Base class for species AST nodes."""

    def __add__(self, other: "SpeciesExpr") -> "SpeciesExpr":
        return Sum(self, other)

    def __mul__(self, other: "SpeciesExpr") -> "SpeciesExpr":
        return Product(self, other)

    def __pow__(self, n: int) -> "SpeciesExpr":
        return Power(self, n)


@dataclass(frozen=True)
class Builtin(SpeciesExpr):
    name: str
    arg: int | None = None


@dataclass(frozen=True)
class Sum(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr


@dataclass(frozen=True)
class Product(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr


@dataclass(frozen=True)
class Power(SpeciesExpr):
    base: SpeciesExpr
    n: int


@dataclass(frozen=True)
class SymPower(SpeciesExpr):
    base: SpeciesExpr
    n: int


@dataclass(frozen=True)
class Assembly(SpeciesExpr):
    base: SpeciesExpr


@dataclass(frozen=True)
class Plus(SpeciesExpr):
    base: SpeciesExpr


@dataclass(frozen=True)
class Mark(SpeciesExpr):
    base: SpeciesExpr


# -- builtin semantics --------------------------------------------------------

def _count_one(field, n, arg):
    return 1 if n == 0 else 0


def _count_zero(field, n, arg):
    return 0


def _count_elem(field, n, arg):
    return field.q**n


def _count_proj(field, n, arg):
    return q_int(field.q, n)


def _count_end(field, n, arg):
    return field.q ** (n * n)


def _count_aut(field, n, arg):
    return gl_order(field, n)


def _count_sub(field, n, arg):
    return qbinomial(field, n, arg) if arg <= n else 0


def _count_v(field, n, arg):
    return 1


def _count_vplus(field, n, arg):
    return 1 if n >= 1 else 0


def _count_fscalar(field, n, arg):
    return field.q if n == 1 else 0


def _count_fstar(field, n, arg):
    return field.q - 1 if n == 1 else 0


def _parts_of(c: ConjClass, phi) -> tuple[int, ...]:
    return c.invariant.partitions().get(phi, ())


def _fix_one(field, c):
    return 1 if c.n == 0 else 0


def _fix_zero(field, c):
    return 0


def _fix_elem(field, c):
    """Fixed vectors of sigma: the kernel of sigma - 1, of dimension
    = number of parts of the partition at z-1."""
    ell = len(_parts_of(c, poly_z_minus(field, 1)))
    return field.q**ell


def _fix_proj(field, c):
    """Invariant lines lie in eigenspaces: sum over scalars of [dim eigenspace]_q."""
    total = 0
    for lam in range(1, field.q):
        ell = len(_parts_of(c, poly_z_minus(field, lam)))
        total += q_int(field.q, ell)
    return total


def _fix_end(field, c):
    """Matrices commuting with sigma: q^(dim of the commutant algebra)."""
    dim = 0
    for phi, parts in c.invariant.partitions().items():
        dim += phi.degree * sum(min(a, b) for a in parts for b in parts)
    return field.q**dim


def _fix_aut(field, c):
    return c.centralizer_order


def _fix_bases(field, c):
    ident = {(poly_z_minus(field, 1), 1): c.n}
    from .linalg import InvariantData
    is_identity = c.invariant == InvariantData.make(c.n, ident)
    return gl_order(field, c.n) if is_identity else 0


def _fix_count_equals(count):
    def fix(field, c):
        return count(field, c.n, None)
    return fix


@dataclass(frozen=True)
class BuiltinSpec:
    name: str
    count: object            # (field, n, arg) -> int
    fix: object | None       # (field, class) -> int; None means oracle-only
    empty_at_zero: bool
    needs_arg: bool = False


BUILTINS: dict[str, BuiltinSpec] = {
    "One": BuiltinSpec("One", _count_one, _fix_one, False),
    "Zero": BuiltinSpec("Zero", _count_zero, _fix_zero, True),
    "Elem": BuiltinSpec("Elem", _count_elem, _fix_elem, False),
    "Proj": BuiltinSpec("Proj", _count_proj, _fix_proj, True),
    "End": BuiltinSpec("End", _count_end, _fix_end, False),
    "Aut": BuiltinSpec("Aut", _count_aut, _fix_aut, False),
    "Bases": BuiltinSpec("Bases", _count_aut, _fix_bases, False),
    "V": BuiltinSpec("V", _count_v, _fix_count_equals(_count_v), False),
    "Vplus": BuiltinSpec("Vplus", _count_vplus, _fix_count_equals(_count_vplus), True),
    "Sub": BuiltinSpec("Sub", _count_sub, None, True, needs_arg=True),
    "Fscalar": BuiltinSpec("Fscalar", _count_fscalar, _fix_count_equals(_count_fscalar), True),
    "Fstar": BuiltinSpec("Fstar", _count_fstar, _fix_count_equals(_count_fstar), True),
    "RepCyclic": BuiltinSpec("RepCyclic", None, None, False, needs_arg=True),
}


class UnsupportedOperationError(RuntimeError):
    """No closed form exists and the oracle budget does not cover the request."""


def empty_at_zero(e: SpeciesExpr) -> bool:
    """Static analysis: does F[0] = empty hold for this expression?"""
    if isinstance(e, Builtin):
        spec = BUILTINS[e.name]
        if e.name == "Sub":
            return e.arg != 0
        if e.name == "RepCyclic":
            return False  # the trivial representation lives on the zero space
        return spec.empty_at_zero
    if isinstance(e, Sum):
        return empty_at_zero(e.left) and empty_at_zero(e.right)
    if isinstance(e, Product):
        return empty_at_zero(e.left) or empty_at_zero(e.right)
    if isinstance(e, Power):
        return e.n > 0 and empty_at_zero(e.base)
    if isinstance(e, SymPower):
        return e.n > 0
    if isinstance(e, Assembly):
        return False  # the empty assembly is a structure on the zero space
    if isinstance(e, Plus):
        return True
    if isinstance(e, Mark):
        return empty_at_zero(e.base)
    raise TypeError(f"unknown species node {e!r}")


def _check_operand(e: SpeciesExpr) -> None:
    if not empty_at_zero(e):
        from .parser import render
        raise ValueError(
            f"operand of E/sym may have structures in dimension 0: {render(e)}")


def validate(e: SpeciesExpr) -> None:
    """Enforce the F[0] = empty precondition on every sym/assembly operand."""
    if isinstance(e, (Sum, Product)):
        validate(e.left)
        validate(e.right)
    elif isinstance(e, (Power, Plus, Mark)):
        validate(getattr(e, "base"))
    elif isinstance(e, (SymPower, Assembly)):
        validate(e.base)
        _check_operand(e.base)


def contains_mark(e: SpeciesExpr) -> bool:
    if isinstance(e, Mark):
        return True
    if isinstance(e, (Sum, Product)):
        return contains_mark(e.left) or contains_mark(e.right)
    if isinstance(e, (Power, SymPower, Assembly, Plus)):
        return contains_mark(e.base)
    return False


def structure_count(e: SpeciesExpr, field: FieldSpec, n: int) -> int:
    """|F[E_n]| from closed forms (oracle-backed for oracle-only builtins)."""
    c = gen_series(e, field, n).coeffs[n] * gl_order(field, n)
    if isinstance(c, TPoly):
        c = c.subs_t(1)
    assert c.denominator == 1
    return c.numerator


# -- generating series ---------------------------------------------------------

def gen_series(e: SpeciesExpr, field: FieldSpec, order: int,
               ring: str = RATIONAL) -> PowerSeries:
    """The generating series sum f_n x^n / gamma_n, truncated."""
    validate(e)
    return _gen(e, field, order, ring)


def weighted_gen_series(e: SpeciesExpr, field: FieldSpec, order: int) -> PowerSeries:
    """Generating series over Q[t]; Mark nodes multiply weights by t."""
    return gen_series(e, field, order, POLY_T)


def _gen(e: SpeciesExpr, field: FieldSpec, order: int, ring: str) -> PowerSeries:
    if isinstance(e, Builtin):
        spec = BUILTINS[e.name]
        one = ring_one(ring)
        coeffs = []
        for n in range(order + 1):
            if spec.count is None:
                from . import oracle
                cnt = oracle.structure_count_bf(e, field, n)
            else:
                cnt = spec.count(field, n, e.arg)
            coeffs.append(one * Fraction(cnt, gl_order(field, n)))
        return PowerSeries(ring, order, coeffs)
    if isinstance(e, Sum):
        return _gen(e.left, field, order, ring) + _gen(e.right, field, order, ring)
    if isinstance(e, Product):
        return _gen(e.left, field, order, ring) * _gen(e.right, field, order, ring)
    if isinstance(e, Power):
        return _gen(e.base, field, order, ring) ** e.n
    if isinstance(e, SymPower):
        from math import factorial
        return (_gen(e.base, field, order, ring) ** e.n).scale(
            Fraction(1, factorial(e.n)))
    if isinstance(e, Assembly):
        return _gen(e.base, field, order, ring).exp()
    if isinstance(e, Plus):
        inner = _gen(e.base, field, order, ring)
        coeffs = list(inner.coeffs)
        coeffs[0] = coeffs[0] * 0
        return PowerSeries(ring, order, coeffs)
    if isinstance(e, Mark):
        if ring != POLY_T:
            raise ValueError("mark(...) requires the weighted coefficient ring")
        return _gen(e.base, field, order, ring).scale(TPoly.t())
    raise TypeError(f"unknown species node {e!r}")


# -- fix counts per class -------------------------------------------------------

def class_fix(e: SpeciesExpr, field: FieldSpec, c: ConjClass,
              budget: int | None = None) -> int:
    """fix F[sigma] for sigma in the given Aut conjugacy class (builtins only)."""
    if not isinstance(e, Builtin):
        raise TypeError("class_fix is defined for builtin species")
    spec = BUILTINS[e.name]
    if spec.fix is not None:
        return spec.fix(field, c)
    from . import oracle
    return oracle.fix_count_bf(e, field, c.n, c.representative(field),
                               **({"budget": budget} if budget else {}))


# -- type generating series ------------------------------------------------------

def type_series(e: SpeciesExpr, field: FieldSpec, order: int,
                ring: str = RATIONAL, oracle_budget: int | None = None) -> PowerSeries:
    """The type generating series sum ftilde_n x^n, truncated.

    Builtins go through Burnside's lemma over conjugacy classes; assemblies
    use the Euler product over the operand's type coefficients; symmetric
    powers have no closed form and fall back to oracle orbit counting."""
    validate(e)
    return _type(e, field, order, ring, oracle_budget)


def _burnside_types(e: Builtin, field: FieldSpec, order: int, budget) -> list[int]:
    out = []
    for n in range(order + 1):
        total = Fraction(0)
        for c in enumerate_classes(field, n, "aut"):
            total += Fraction(class_fix(e, field, c, budget), c.centralizer_order)
        assert total.denominator == 1 and total >= 0
        out.append(total.numerator)
    return out


def _type(e: SpeciesExpr, field: FieldSpec, order: int, ring: str, budget) -> PowerSeries:
    one = ring_one(ring)
    if isinstance(e, Builtin):
        ints = _burnside_types(e, field, order, budget)
        return PowerSeries(ring, order, [one * v for v in ints])
    if isinstance(e, Sum):
        return _type(e.left, field, order, ring, budget) + _type(e.right, field, order, ring, budget)
    if isinstance(e, Product):
        return _type(e.left, field, order, ring, budget) * _type(e.right, field, order, ring, budget)
    if isinstance(e, Power):
        return _type(e.base, field, order, ring, budget) ** e.n
    if isinstance(e, SymPower):
        from . import oracle
        coeffs = []
        for n in range(order + 1):
            try:
                coeffs.append(one * oracle.orbit_count_bf(e, field, n,
                                                          **({"budget": budget} if budget else {})))
            except Exception as exc:
                raise UnsupportedOperationError(
                    f"type series of a symmetric power has no closed form and the "
                    f"oracle budget does not reach dimension {n}") from exc
        return PowerSeries(ring, order, coeffs)
    if isinstance(e, Assembly):
        if contains_mark(e.base):
            raise UnsupportedOperationError(
                "type series of an assembly of a weighted species is not implemented")
        inner = _type(e.base, field, order, RATIONAL, budget)
        exponents = {}
        for m in range(1, order + 1):
            c = inner.coeffs[m]
            assert c.denominator == 1 and c >= 0
            exponents[m] = c.numerator
        from .series import euler_product
        return euler_product(exponents, order, ring)
    if isinstance(e, Plus):
        inner = _type(e.base, field, order, ring, budget)
        coeffs = list(inner.coeffs)
        coeffs[0] = coeffs[0] * 0
        return PowerSeries(ring, order, coeffs)
    if isinstance(e, Mark):
        if ring != POLY_T:
            raise ValueError("mark(...) requires the weighted coefficient ring")
        return _type(e.base, field, order, ring, budget).scale(TPoly.t())
    raise TypeError(f"unknown species node {e!r}")


# -- cycle index series -----------------------------------------------------------

def cycle_index(e: SpeciesExpr, field: FieldSpec, order: int,
                oracle_budget: int | None = None) -> CycleIndexSeries:
    """The cycle index series, truncated by graded degree.

    Sum/Product/Power have closed rules; SymPower and Assembly have none
    (open questions) and are computed by the oracle when within budget."""
    validate(e)
    return _zindex(e, field, order, oracle_budget)


def _zindex(e: SpeciesExpr, field: FieldSpec, order: int, budget) -> CycleIndexSeries:
    if isinstance(e, Builtin):
        return z_build(field, lambda c: class_fix(e, field, c, budget), order)
    if isinstance(e, Sum):
        return _zindex(e.left, field, order, budget) + _zindex(e.right, field, order, budget)
    if isinstance(e, Product):
        return _zindex(e.left, field, order, budget) * _zindex(e.right, field, order, budget)
    if isinstance(e, Power):
        from .cycleindex import z_one
        out = z_one(field, order)
        for _ in range(e.n):
            out = out * _zindex(e.base, field, order, budget)
        return out
    if isinstance(e, (SymPower, Assembly)):
        from . import oracle
        try:
            return oracle.zindex_bf(e, field, order,
                                    **({"budget": budget} if budget else {}))
        except Exception as exc:
            if isinstance(exc, (ValueError, TypeError)):
                raise
            raise UnsupportedOperationError(
                "cycle index of assemblies/symmetric powers has no closed form "
                "and the oracle budget does not cover this order") from exc
    if isinstance(e, Plus):
        return _zindex(e.base, field, order, budget).drop_constant()
    if isinstance(e, Mark):
        raise UnsupportedOperationError(
            "cycle index over the weighted ring is not implemented")
    raise TypeError(f"unknown species node {e!r}")
