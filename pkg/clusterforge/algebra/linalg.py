"""
Exact linear algebra over the rationals and prime fields.

Vectors are rows; a linear map V -> W is a dim V x dim W matrix applied as
``v @ M``, so composition "first F then G" is ``F @ G``. Subspaces are stored
by their reduced row echelon basis, which makes equality a plain comparison.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import GF, QQ, Poly, Symbol, isprime
from sympy.polys.matrices import DomainMatrix

from ..core.errors import DimensionMismatchError, FieldError, InputError

Element = Any
Vector = Tuple[Element, ...]


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: QQ for characteristic 0, GF(p) otherwise."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c < 0 or (c != 0 and not isprime(c)):
            raise FieldError(f"characteristic must be 0 or a prime, got {c}")

    @cached_property
    def domain(self):
        if self.characteristic == 0:
            return QQ
        return GF(self.characteristic)

    @property
    def zero(self) -> Element:
        return self.domain.zero

    @property
    def one(self) -> Element:
        return self.domain.one

    def element(self, value: Union[int, str, Fraction, Element]) -> Element:
        """Convert an int, a Fraction or a "p/q" string into a field element."""
        K = self.domain
        if isinstance(value, bool):
            raise InputError(f"not a field element: {value!r}")
        if isinstance(value, (int, str, Fraction)):
            try:
                fr = Fraction(value) if not isinstance(value, Fraction) else value
            except (ValueError, ZeroDivisionError) as e:
                raise InputError(f"not a rational literal: {value!r} ({e})")
            if self.characteristic == 0:
                return K(fr.numerator, fr.denominator)
            den = fr.denominator % self.characteristic
            if den == 0:
                raise InputError(f"{value!r} has no value in GF({self.characteristic})")
            return K(fr.numerator) / K(den)
        return K.convert(value)

    def format(self, a: Element) -> str:
        """Serialize an element: "p/q" over QQ, an integer in [0, p) over GF(p)."""
        K = self.domain
        if self.characteristic == 0:
            n, d = int(K.numer(a)), int(K.denom(a))
            return str(n) if d == 1 else f"{n}/{d}"
        return str(int(K.to_int(a)) % self.characteristic)

    def random_element(self, rng: random.Random, bound: int) -> Element:
        return self.domain(rng.randint(-bound, bound))

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


RATIONALS = FieldSpec(0)


class Matrix:
    """Immutable dense matrix over a FieldSpec."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable[Element]], ncols: Optional[int] = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError(f"row of length {len(r)} in a matrix with {ncols} columns")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = rows

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_values(cls, field: FieldSpec, rows: Sequence[Sequence[Union[int, str, Fraction]]],
                    ncols: Optional[int] = None) -> "Matrix":
        return cls(field, [[field.element(x) for x in r] for r in rows], ncols)

    @classmethod
    def unit_rows(cls, field: FieldSpec, n: int, indices: Sequence[int]) -> "Matrix":
        """Rows e_i of the standard basis of field^n for i in indices."""
        z, o = field.zero, field.one
        return cls(field, [[o if j == i else z for j in range(n)] for i in indices], n)

    @classmethod
    def random(cls, field: FieldSpec, nrows: int, ncols: int, rng: random.Random, bound: int = 5) -> "Matrix":
        return cls(field, [[field.random_element(rng, bound) for _ in range(ncols)]
                           for _ in range(nrows)], ncols)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> Tuple[Vector, ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def entry(self, i: int, j: int) -> Element:
        return self._rows[i][j]

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for r in self._rows for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(r) for r in self._rows], self.shape, self.field.domain)

    @classmethod
    def from_domain_matrix(cls, field: FieldSpec, dm: DomainMatrix) -> "Matrix":
        nrows, ncols = dm.shape
        if nrows == 0 or ncols == 0:
            return cls.zeros(field, nrows, ncols)
        return cls(field, dm.to_list(), ncols)

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        if self.nrows == 0 or other.ncols == 0 or self.ncols == 0:
            return Matrix.zeros(self.field, self.nrows, other.ncols)
        product = self.to_domain_matrix() * other.to_domain_matrix()
        return Matrix.from_domain_matrix(self.field, product)

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in r] for r in self._rows], self.ncols)

    def scale(self, c: Element) -> "Matrix":
        return Matrix(self.field, [[c * a for a in r] for r in self._rows], self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [self._rows[i] for i in indices], self.ncols)

    def select_cols(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[r[j] for j in indices] for r in self._rows], len(indices))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[self._rows[i][j] for j in cols] for i in rows], len(cols))

    # -- elimination --------------------------------------------------------

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        if self.nrows == 0 or self.ncols == 0:
            return self, ()
        dm, pivots = self.to_domain_matrix().rref()
        return Matrix.from_domain_matrix(self.field, dm), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatchError(f"cannot invert a {self.shape} matrix")
        if self.nrows == 0:
            return self
        return Matrix.from_domain_matrix(self.field, self.to_domain_matrix().inv())

    def charpoly(self) -> List[Element]:
        """Coefficients of det(tI - M), leading coefficient first."""
        if self.nrows == 0:
            return [self.field.one]
        return list(self.to_domain_matrix().charpoly())

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self._rows)
        return f"Matrix<{self.nrows}x{self.ncols}>[{body}]"

    def to_strings(self) -> List[List[str]]:
        return [[self.field.format(x) for x in r] for r in self._rows]


def hstack(field: FieldSpec, nrows: int, blocks: Sequence[Matrix]) -> Matrix:
    """Horizontal concatenation; ``nrows`` fixes the shape of an empty list."""
    rows: List[List[Element]] = [[] for _ in range(nrows)]
    for b in blocks:
        if b.nrows != nrows:
            raise DimensionMismatchError(f"hstack of a {b.shape} block into {nrows} rows")
        for i, r in enumerate(b.rows):
            rows[i].extend(r)
    return Matrix(field, rows, sum(b.ncols for b in blocks))


def vstack(field: FieldSpec, ncols: int, blocks: Sequence[Matrix]) -> Matrix:
    """Vertical concatenation; ``ncols`` fixes the shape of an empty list."""
    rows: List[Vector] = []
    for b in blocks:
        if b.ncols != ncols:
            raise DimensionMismatchError(f"vstack of a {b.shape} block into {ncols} columns")
        rows.extend(b.rows)
    return Matrix(field, rows, ncols)


def block_diagonal(field: FieldSpec, blocks: Sequence[Matrix]) -> Matrix:
    nrows = sum(b.nrows for b in blocks)
    ncols = sum(b.ncols for b in blocks)
    z = field.zero
    rows = []
    col = 0
    for b in blocks:
        for r in b.rows:
            rows.append([z] * col + list(r) + [z] * (ncols - col - b.ncols))
        col += b.ncols
    return Matrix(field, rows, ncols) if rows else Matrix.zeros(field, nrows, ncols)


# =============================================================================
# SUBSPACES
# =============================================================================

@dataclass(frozen=True)
class Subspace:
    """Subspace of field^ambient held by its reduced row echelon basis."""

    field: FieldSpec
    ambient: int
    basis: Matrix
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient: int, vectors: Union[Matrix, Sequence[Sequence[Element]]]) -> "Subspace":
        m = vectors if isinstance(vectors, Matrix) else Matrix(field, vectors, ambient)
        if m.ncols != ambient:
            raise DimensionMismatchError(f"vectors of length {m.ncols} in ambient dimension {ambient}")
        r, pivots = m.rref()
        return cls(field, ambient, r.select_rows(range(len(pivots))), pivots)

    @classmethod
    def zero(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix.zeros(field, 0, ambient), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix.identity(field, ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def reduce(self, v: Sequence[Element]) -> Vector:
        """Normal form of v modulo the subspace (zero at every pivot)."""
        out = list(v)
        z = self.field.zero
        for row, p in zip(self.basis.rows, self.pivots):
            c = out[p]
            if c != z:
                out = [a - c * b for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Sequence[Element]) -> bool:
        z = self.field.zero
        return all(x == z for x in self.reduce(v))

    def contains_all(self, m: Matrix) -> bool:
        return all(self.contains(r) for r in m.rows)

    def coordinates(self, v: Sequence[Element]) -> Vector:
        """Coefficients of v in the echelon basis; v must lie in the subspace."""
        return tuple(v[p] for p in self.pivots)

    def complement_indices(self) -> Tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in piv)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient,
                             vstack(self.field, self.ambient, [self.basis, other.basis]))

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        stacked = vstack(self.field, self.ambient, [self.basis, -other.basis])
        ker = kernel_basis(stacked)
        coeffs = ker.basis.select_cols(range(self.dim))
        return Subspace.span(self.field, self.ambient, coeffs @ self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_all(self.basis)


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of {v : v·m = 0}."""
    n = m.nrows
    field = m.field
    if n == 0:
        return Subspace.zero(field, 0)
    if m.ncols == 0:
        return Subspace.full(field, n)
    r, pivots = m.transpose().rref()
    pivot_set = set(pivots)
    z, o = field.zero, field.one
    vectors = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [z] * n
        v[f] = o
        for i, p in enumerate(pivots):
            v[p] = -r.entry(i, f)
        vectors.append(v)
    return Subspace.span(field, n, Matrix(field, vectors, n))


def image_basis(m: Matrix) -> Subspace:
    """Canonical basis of the row space of m."""
    return Subspace.span(m.field, m.ncols, m)


def quotient_map(ambient_dim: int, sub: Subspace) -> Matrix:
    """
    Surjection field^ambient -> field^ambient / sub with kernel exactly ``sub``.

    Quotient coordinates are the non-pivot coordinates of the normal form.
    """
    if sub.ambient != ambient_dim:
        raise DimensionMismatchError(
            f"subspace of ambient dimension {sub.ambient} used in dimension {ambient_dim}"
        )
    field = sub.field
    free = sub.complement_indices()
    position = {c: k for k, c in enumerate(free)}
    pivot_row = {p: i for i, p in enumerate(sub.pivots)}
    z, o = field.zero, field.one
    rows = []
    for j in range(ambient_dim):
        if j in pivot_row:
            b = sub.basis.row(pivot_row[j])
            rows.append([-b[c] for c in free])
        else:
            row = [z] * len(free)
            row[position[j]] = o
            rows.append(row)
    return Matrix(field, rows, len(free))


def solve_left(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """
    Some X with X·a = b, or None when b's rows are not in the row space of a.
    """
    if a.ncols != b.ncols:
        raise DimensionMismatchError(f"solve_left with {a.shape} and {b.shape}")
    field = a.field
    n, m = a.nrows, a.ncols
    if n == 0:
        return Matrix.zeros(field, b.nrows, 0) if b.is_zero() else None
    augmented = hstack(field, n, [a, Matrix.identity(field, n)])
    r, pivots = augmented.rref()
    k = sum(1 for p in pivots if p < m)
    row_basis = r.submatrix(range(k), range(m))
    transform = r.submatrix(range(k), range(m, m + n))
    lead = pivots[:k]
    y = b.select_cols(lead)
    if y @ row_basis != b:
        return None
    return y @ transform


def greedy_independent(field: FieldSpec, vectors: Sequence[Sequence[Element]], ambient: int,
                       start: Optional[Subspace] = None) -> List[int]:
    """
    Indices of the vectors kept by a left-to-right greedy scan, each kept vector
    independent of ``start`` and of the previously kept ones.
    """
    kept: List[int] = []
    basis_rows: List[Sequence[Element]] = list(start.basis.rows) if start is not None else []
    current = start if start is not None else Subspace.zero(field, ambient)
    for i, v in enumerate(vectors):
        if not current.contains(v):
            kept.append(i)
            basis_rows.append(v)
            current = Subspace.span(field, ambient, Matrix(field, basis_rows, ambient))
    return kept


# =============================================================================
# POLYNOMIALS OF MATRICES
# =============================================================================

_t = Symbol("t")


def factor_charpoly(m: Matrix) -> List[Tuple[List[Element], int]]:
    """Irreducible factors of the characteristic polynomial with multiplicities."""
    domain = m.field.domain
    poly = Poly([domain.to_sympy(c) for c in m.charpoly()], _t, domain=domain)
    _, factors = poly.factor_list()
    return [([domain.from_sympy(c) for c in f.all_coeffs()], k) for f, k in factors]


def matrix_polynomial(m: Matrix, coeffs: Sequence[Element]) -> Matrix:
    """f(m) for f given by coefficients, leading first (Horner)."""
    n = m.nrows
    result = Matrix.zeros(m.field, n, n)
    identity = Matrix.identity(m.field, n)
    for c in coeffs:
        result = result @ m + identity.scale(c)
    return result


def linear_root(coeffs: Sequence[Element]) -> Element:
    """Root of a degree-one polynomial c1·t + c0."""
    c1, c0 = coeffs
    return -c0 / c1
