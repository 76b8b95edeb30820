"""Dense linear algebra over F_q for small dimensions.

Matrices and subspaces are immutable values.  Subspaces are canonicalised
by the reduced row echelon form of a basis, which gives set semantics:
two Subspace values are equal iff they contain the same points.

Also here: the GL_n(F_q) order, q-binomial coefficients, companion
matrices, extraction of the primary cyclic invariants e_{phi,i} of an
endomorphism, and exhaustive enumeration of matrices, subspaces and
ordered direct-sum decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .field import FieldSpec
from .poly import Poly, monic_irreducibles

DEFAULT_BUDGET = 2**24


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive enumeration would be too large."""


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]  # row-major

    @staticmethod
    def make(field: FieldSpec, rows) -> "Matrix":
        return Matrix(field, tuple(tuple(r) for r in rows))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        return Matrix(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return Matrix(field, tuple((0,) * cols for _ in range(rows)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def _compat(self, other: "Matrix", mul: bool = False) -> None:
        if self.field != other.field:
            raise ValueError("matrices over different fields")
        if mul:
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch in matrix product")
        elif (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch in matrix sum")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        F = self.field
        return Matrix(self.field, tuple(
            tuple(F.add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        F = self.field
        return Matrix(self.field, tuple(
            tuple(F.sub(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._compat(other, mul=True)
        F = self.field
        bt = tuple(zip(*other.entries))
        out = []
        for row in self.entries:
            new = []
            for col in bt:
                s = 0
                for a, b in zip(row, col):
                    if a and b:
                        s = F.add(s, F.mul(a, b))
                new.append(s)
            out.append(tuple(new))
        return Matrix(self.field, tuple(out))

    def scale(self, c: int) -> "Matrix":
        F = self.field
        return Matrix(self.field, tuple(tuple(F.mul(c, a) for a in row) for row in self.entries))

    def matvec(self, v: tuple[int, ...]) -> tuple[int, ...]:
        F = self.field
        return tuple(
            # fold without building intermediates; rows are short
            _dot(F, row, v)
            for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.entries)))

    def __pow__(self, e: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.field, self.nrows)
        base = self
        if e < 0:
            base, e = base.inverse(), -e
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and its pivot columns."""
        F = self.field
        rows = [list(r) for r in self.entries]
        m, n = self.nrows, self.ncols
        pivots: list[int] = []
        r = 0
        for c in range(n):
            pr = next((i for i in range(r, m) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = F.inv(rows[r][c])
            rows[r] = [F.mul(inv, x) for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return Matrix(self.field, tuple(tuple(row) for row in rows)), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix(self.field, tuple(
            row + tuple(1 if i == j else 0 for j in range(n))
            for i, row in enumerate(self.entries)))
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(self.field, tuple(row[n:] for row in red.entries))

    def kernel_basis(self) -> "Subspace":
        """Right kernel {v : A v = 0} as a Subspace of F_q^ncols."""
        F = self.field
        red, pivots = self.rref()
        n = self.ncols
        free = [c for c in range(n) if c not in pivots]
        vecs = []
        for fc in free:
            v = [0] * n
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(red.entries[r][fc])
            vecs.append(tuple(v))
        return Subspace.from_vectors(self.field, n, vecs)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self.entries)


def _dot(F: FieldSpec, a, b) -> int:
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = F.add(s, F.mul(x, y))
    return s


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient: int
    basis: tuple[tuple[int, ...], ...]  # RREF rows, strictly increasing pivots

    @staticmethod
    def from_vectors(field: FieldSpec, ambient: int, vectors) -> "Subspace":
        vectors = list(vectors)
        if not vectors:
            return Subspace(field, ambient, ())
        red, pivots = Matrix.make(field, vectors).rref()
        return Subspace(field, ambient, red.entries[:len(pivots)])

    @staticmethod
    def full(field: FieldSpec, n: int) -> "Subspace":
        return Subspace(field, n, Matrix.identity(field, n).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def contains(self, v: tuple[int, ...]) -> bool:
        F = self.field
        w = list(v)
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x)
            if w[p]:
                c = w[p]
                w = [F.sub(x, F.mul(c, y)) for x, y in zip(w, row)]
        return not any(w)

    def coords(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Coordinates of v in the RREF basis (pivot entries read off)."""
        c = tuple(v[p] for p in self.pivots)
        return c

    def from_coords(self, c: tuple[int, ...]) -> tuple[int, ...]:
        F = self.field
        v = [0] * self.ambient
        for ci, row in zip(c, self.basis):
            if ci:
                v = [F.add(x, F.mul(ci, y)) for x, y in zip(v, row)]
        return tuple(v)

    def vectors(self) -> Iterator[tuple[int, ...]]:
        for c in product(range(self.field.q), repeat=self.dim):
            yield self.from_coords(c)

    def image(self, g: Matrix) -> "Subspace":
        return Subspace.from_vectors(self.field, self.ambient,
                                     [g.matvec(row) for row in self.basis])


# -- group orders and counts ------------------------------------------------

def gl_order(field: FieldSpec, n: int) -> int:
    """Order of GL_n(F_q); the empty product gives 1 at n = 0."""
    if n < 0:
        raise ValueError("dimension must be >= 0")
    q = field.q
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def q_int(q: int, n: int) -> int:
    """The q-analog [n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0."""
    return sum(q**i for i in range(n))


def qbinomial(field: FieldSpec, n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    num = gl_order(field, n)
    den = gl_order(field, k) * gl_order(field, n - k) * field.q ** (k * (n - k))
    assert num % den == 0
    return num // den


# -- companion matrices and polynomial evaluation ----------------------------

def companion_matrix(f: Poly) -> Matrix:
    if not f.is_monic or f.degree < 1:
        raise ValueError("companion matrix requires a monic polynomial of degree >= 1")
    F = f.field
    d = f.degree
    rows = []
    for i in range(d):
        row = [0] * d
        if i + 1 < d:
            row[i + 1] = 0
        rows.append(row)
    # subdiagonal of ones, last column from -coefficients
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = F.neg(f.coeffs[i])
    return Matrix.make(F, rows)


def mat_poly_eval(f: Poly, a: Matrix) -> Matrix:
    """f(a) by Horner's rule."""
    if a.nrows != a.ncols:
        raise ValueError("polynomial evaluation requires a square matrix")
    n = a.nrows
    out = Matrix.zero(a.field, n, n)
    ident = Matrix.identity(a.field, n)
    for c in reversed(f.coeffs):
        out = out * a + ident.scale(c)
    return out


def block_diagonal(field: FieldSpec, blocks: list[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[off + i][off + j] = b.entries[i][j]
        off += b.nrows
    return Matrix.make(field, rows)


# -- primary cyclic invariants ------------------------------------------------

@dataclass(frozen=True)
class InvariantData:
    """The conjugacy invariants of an endomorphism: (phi, i) -> e_{phi,i}."""

    n: int
    entries: frozenset  # frozenset of ((Poly, int), int)

    @staticmethod
    def make(n: int, mapping: dict) -> "InvariantData":
        return InvariantData(n, frozenset((k, v) for k, v in mapping.items() if v))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def partitions(self) -> dict[Poly, tuple[int, ...]]:
        """Per irreducible phi, the partition with e_{phi,i} parts equal to i."""
        out: dict[Poly, list[int]] = {}
        for (phi, i), e in self.entries:
            out.setdefault(phi, []).extend([i] * e)
        return {phi: tuple(sorted(parts, reverse=True)) for phi, parts in out.items()}

    def is_automorphism(self) -> bool:
        return all(phi.coeffs != (0, 1) for (phi, _i), _e in self.entries)

    def sorted_items(self) -> list:
        return sorted(self.entries, key=lambda kv: (kv[0][0].sort_key(), kv[0][1]))

    def __str__(self) -> str:
        if not self.entries:
            return "{}"
        parts = [f"({phi}, {i}) -> {e}" for (phi, i), e in self.sorted_items()]
        return "{" + ", ".join(parts) + "}"


def invariant_data(a: Matrix) -> InvariantData:
    """Primary cyclic multiplicities via the kernel-dimension ladder
    d_j = dim ker phi(a)^j / deg phi, e_{phi,i} = 2d_i - d_{i-1} - d_{i+1}."""
    if a.nrows != a.ncols:
        raise ValueError("invariants are defined for square matrices")
    field = a.field
    n = a.nrows
    found: dict[tuple[Poly, int], int] = {}
    accounted = 0
    for d in range(1, n + 1):
        if accounted == n:
            break
        for phi in monic_irreducibles(field, d):
            if accounted == n:
                break
            b = mat_poly_eval(phi, a)
            power = b
            dims = [0]
            while True:
                k = power.kernel_basis().dim
                assert k % d == 0
                dims.append(k // d)
                if dims[-1] == dims[-2]:
                    break
                power = power * b
            dims.append(dims[-1])
            for i in range(1, len(dims) - 1):
                e = 2 * dims[i] - dims[i - 1] - dims[i + 1]
                assert e >= 0
                if e:
                    found[(phi, i)] = e
                    accounted += e * i * d
    assert accounted == n
    return InvariantData.make(n, found)


# -- exhaustive enumeration ---------------------------------------------------

def enumerate_matrices(field: FieldSpec, n: int, invertible_only: bool = False,
                       budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    if field.q ** (n * n) > budget:
        raise BudgetExceededError(f"q^(n^2) = {field.q ** (n * n)} exceeds budget {budget}")
    for flat in product(range(field.q), repeat=n * n):
        m = Matrix(field, tuple(flat[i * n:(i + 1) * n] for i in range(n)))
        if invertible_only and not m.is_invertible():
            continue
        yield m


def enumerate_subspaces(field: FieldSpec, n: int, k: int,
                        budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """All k-dimensional subspaces of F_q^n, via canonical RREF matrices."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if qbinomial(field, n, k) > budget:
        raise BudgetExceededError("subspace enumeration exceeds budget")
    if k == 0:
        yield Subspace(field, n, ())
        return
    for pivots in combinations(range(n), k):
        free_cells = [(r, c) for r in range(k) for c in range(n)
                      if c > pivots[r] and c not in pivots]
        for vals in product(range(field.q), repeat=len(free_cells)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free_cells, vals):
                rows[r][c] = v
            yield Subspace(field, n, tuple(tuple(r) for r in rows))


def enumerate_decompositions(field: FieldSpec, n: int, dims: tuple[int, ...],
                             budget: int = DEFAULT_BUDGET) -> Iterator[tuple[Subspace, ...]]:
    """All ordered tuples (V_1, ..., V_m) of subspaces of the stated dimensions
    with V_1 + ... + V_m = F_q^n as a direct sum."""
    if sum(dims) != n:
        raise ValueError("dimensions must sum to the ambient dimension")
    if any(d < 0 for d in dims):
        raise ValueError("dimensions must be non-negative")

    def rec(idx: int, chosen: tuple[Subspace, ...], span_rows: tuple):
        if idx == len(dims):
            yield chosen
            return
        k = dims[idx]
        used = sum(dims[:idx])
        for w in enumerate_subspaces(field, n, k, budget):
            stacked = Matrix.make(field, span_rows + w.basis)
            if stacked.entries and stacked.rank() != used + k:
                continue
            yield from rec(idx + 1, chosen + (w,), span_rows + w.basis)

    yield from rec(0, (), ())
