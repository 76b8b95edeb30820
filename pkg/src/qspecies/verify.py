"""Oracle-vs-closed-form verification suite, shared by the CLI and the tests.

Each check compares an identity's closed-form side against the exhaustive
oracle and reports pass/fail with a short detail string.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import oracle
from .classes import enumerate_classes
from .field import FieldSpec, field_make
from .linalg import gl_order
from .parser import parse
from .series import aut_type_product
from .species import (Assembly, Builtin, Mark, Product, Sum, cycle_index,
                      gen_series, type_series, weighted_gen_series)


@dataclass
class CheckResult:
    identity: str
    status: str  # "pass" | "fail"
    detail: str

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"identity": self.identity, "status": self.status, "detail": self.detail}


def _check(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", detail)


CORPUS = ["Elem", "Proj", "End", "Aut", "Bases", "V", "Vplus", "One", "Zero", "Sub(1)"]

PRODUCT_PAIRS = [
    ("Vplus", "Vplus"), ("Elem", "Proj"), ("Proj", "Proj"), ("Aut", "V"),
    ("Elem", "Elem"), ("Vplus", "Proj"), ("One", "Aut"), ("Bases", "Vplus"),
    ("End", "One"), ("Proj", "Aut"),
]


def check_gen_series(field: FieldSpec, max_dim: int) -> list[CheckResult]:
    out = []
    for name in CORPUS:
        e = parse(name)
        series = gen_series(e, field, max_dim)
        ok, detail = True, []
        for n in range(max_dim + 1):
            closed = series.coeffs[n] * gl_order(field, n)
            bf = oracle.structure_count_bf(e, field, n)
            detail.append(str(bf))
            if closed != bf:
                ok = False
        out.append(_check(f"gen[{name}] counts q={field.q}", ok, ",".join(detail)))
    return out


def check_type_series(field: FieldSpec, max_dim: int) -> list[CheckResult]:
    out = []
    for name in CORPUS:
        e = parse(name)
        series = type_series(e, field, max_dim)
        ok, detail = True, []
        for n in range(max_dim + 1):
            bf = oracle.orbit_count_bf(e, field, n)
            detail.append(str(bf))
            if series.coeffs[n] != bf:
                ok = False
        out.append(_check(f"type[{name}] orbit counts q={field.q}", ok, ",".join(detail)))
    return out


def check_aut_type_product(field: FieldSpec, max_dim: int) -> CheckResult:
    prod = aut_type_product(field.q, max_dim)
    counts = [len(enumerate_classes(field, n, "aut")) for n in range(max_dim + 1)]
    ok = all(prod.coeffs[n] == counts[n] for n in range(max_dim + 1))
    return _check(f"type[Aut] = prod (1-x^r)/(1-qx^r) q={field.q}", ok,
                  ",".join(map(str, counts)))


def check_specializations(field: FieldSpec, max_dim: int) -> list[CheckResult]:
    out = []
    exprs = CORPUS + ["Proj*Proj", "Vplus*Vplus", "Elem + Aut", "plus(End)"]
    for text in exprs:
        e = parse(text)
        z = cycle_index(e, field, max_dim)
        gen_ok = z.specialize_generating() == gen_series(e, field, max_dim)
        typ_ok = z.specialize_type() == type_series(e, field, max_dim)
        out.append(_check(f"Z-specialize gen[{text}] q={field.q}", gen_ok, ""))
        out.append(_check(f"Z-specialize type[{text}] q={field.q}", typ_ok, ""))
    return out


def check_product_identities(field: FieldSpec, max_dim: int) -> list[CheckResult]:
    out = []
    for a, b in PRODUCT_PAIRS:
        e = Product(parse(a), parse(b))
        ga, gb = gen_series(parse(a), field, max_dim), gen_series(parse(b), field, max_dim)
        ta, tb = type_series(parse(a), field, max_dim), type_series(parse(b), field, max_dim)
        za, zb = cycle_index(parse(a), field, max_dim), cycle_index(parse(b), field, max_dim)
        ok = (gen_series(e, field, max_dim) == ga * gb
              and type_series(e, field, max_dim) == ta * tb
              and cycle_index(e, field, max_dim) == za * zb)
        # oracle structure counts against the convolution formula
        conv_ok = True
        for n in range(max_dim + 1):
            h = oracle.structure_count_bf(e, field, n)
            fa = [oracle.structure_count_bf(parse(a), field, k) for k in range(n + 1)]
            fb = [oracle.structure_count_bf(parse(b), field, k) for k in range(n + 1)]
            expected = sum(gl_order(field, n)
                           // (gl_order(field, k) * gl_order(field, n - k))
                           * fa[k] * fb[n - k] for k in range(n + 1))
            if h != expected:
                conv_ok = False
        out.append(_check(f"product identities {a}*{b} q={field.q}", ok and conv_ok, ""))
    return out


def check_exponential_formula(field: FieldSpec, max_dim: int) -> CheckResult:
    sp = Assembly(Builtin("Vplus"))
    counts = [oracle.structure_count_bf(sp, field, n) for n in range(max_dim + 1)]
    series = gen_series(sp, field, max_dim)
    ok = all(series.coeffs[n] * gl_order(field, n) == counts[n]
             for n in range(max_dim + 1))
    return _check(f"exp formula splitting counts q={field.q}", ok,
                  ",".join(map(str, counts)))


def check_assembly_type(field: FieldSpec, max_dim: int) -> CheckResult:
    sp = Assembly(Builtin("Vplus"))
    series = type_series(sp, field, max_dim)
    ok = all(series.coeffs[n] == oracle.orbit_count_bf(sp, field, n)
             for n in range(max_dim + 1))
    return _check(f"assembly type = partition numbers q={field.q}", ok,
                  str([str(c) for c in series.coeffs]))


def check_multiplicativity(field: FieldSpec, order: int) -> CheckResult:
    lhs = Assembly(Sum(Builtin("Fscalar"), Builtin("Vplus")))
    rhs = Product(Assembly(Builtin("Fscalar")), Assembly(Builtin("Vplus")))
    ok = (gen_series(lhs, field, order) == gen_series(rhs, field, order)
          and type_series(lhs, field, order) == type_series(rhs, field, order))
    return _check(f"E(F+G) = E(F)*E(G) q={field.q}", ok, f"order {order}")


def check_weighted(field: FieldSpec, max_dim: int) -> CheckResult:
    e = Assembly(Mark(Builtin("Vplus")))
    series = weighted_gen_series(e, field, max_dim)
    ok = True
    for n in range(max_dim + 1):
        inv = oracle.inventory_bf(e, field, n)
        if series.coeffs[n] * Fraction(gl_order(field, n)) != inv:
            ok = False
    plain = gen_series(Assembly(Builtin("Vplus")), field, max_dim)
    ok = ok and series.subs_t(1) == plain
    return _check(f"weighted splittings q={field.q}", ok, str(series))


def run_checks(q: int = 2, ext_k: int = 1, max_dim: int = 3) -> list[CheckResult]:
    field = field_make(q, ext_k)
    results: list[CheckResult] = []
    results += check_gen_series(field, max_dim)
    results += check_type_series(field, max_dim)
    results.append(check_aut_type_product(field, max_dim))
    results += check_specializations(field, min(max_dim, 3))
    results += check_product_identities(field, max_dim)
    results.append(check_exponential_formula(field, max_dim))
    results.append(check_assembly_type(field, max_dim))
    results.append(check_multiplicativity(field, min(max_dim, 3)))
    results.append(check_weighted(field, min(max_dim, 2)))
    return results
