"""Exact dense linear algebra over Q or Q(t).

Everything is small (n <= ~10) and exact, so elimination picks the first
nonzero pivot in column order: the reduced forms are identical on every
platform and subspace equality is plain representation equality.
"""

from __future__ import annotations

from . import exact
from .errors import DimensionMismatch, SingularMatrix


class Matrix:
    """Dense matrix with entries in Q or Q(t), row-major."""

    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, data, field=exact.FIELD_Q):
        data = [[exact.coerce(x, field) for x in row] for row in data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(row) != self.cols for row in data):
            raise DimensionMismatch("ragged matrix rows")
        self.data = data
        self.field = field

    @classmethod
    def zeros(cls, rows, cols, field=exact.FIELD_Q):
        z = exact.zero(field)
        return cls([[z] * cols for _ in range(rows)], field)

    @classmethod
    def identity(cls, n, field=exact.FIELD_Q):
        z, o = exact.zero(field), exact.one(field)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_cols(cls, cols, field=exact.FIELD_Q):
        rows = len(cols[0]) if cols else 0
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(rows)], field)

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)], self.field)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shape mismatch")
        z = exact.zero(self.field)
        out = [[z] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            arow = self.data[i]
            orow = out[i]
            for k in range(self.cols):
                a = arow[k]
                if a == 0:
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    b = brow[j]
                    if b != 0:
                        orow[j] = orow[j] + a * b
        return Matrix(out, self.field)

    __matmul__ = mul

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        z = exact.zero(self.field)
        out = [z] * self.rows
        for j, x in enumerate(vec):
            if x == 0:
                continue
            for i in range(self.rows):
                a = self.data[i][j]
                if a != 0:
                    out[i] = out[i] + a * x
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.field) == (other.rows, other.cols, other.field) \
            and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.field, tuple(tuple(r) for r in self.data)))

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.data) + "]"

    __repr__ = __str__


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form by exact Gauss-Jordan; returns (form, rank)."""
    a = [row[:] for row in m.data]
    nr, nc = m.rows, m.cols
    r = 0
    for c in range(nc):
        pivot = None
        for i in range(r, nr):
            if a[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        if p != exact.one(m.field):
            a[r] = [x / p for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    return Matrix(a, m.field), r


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrix below full rank."""
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices invert")
    n = m.rows
    ident = Matrix.identity(n, m.field)
    aug = Matrix([m.data[i] + ident.data[i] for i in range(n)], m.field)
    red, rank = rref(aug)
    if any(red.data[i][i] != exact.one(m.field) for i in range(n)):
        raise SingularMatrix(f"matrix of rank < {n} has no inverse")
    _ = rank
    return Matrix([red.data[i][n:] for i in range(n)], m.field)


class Subspace:
    """Subspace of field^n, held as an RREF basis matrix (no zero rows)."""

    __slots__ = ("ambient_dim", "basis", "field")

    def __init__(self, ambient_dim, basis: Matrix, field):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.field = field

    @classmethod
    def zero(cls, ambient_dim, field=exact.FIELD_Q):
        return cls(ambient_dim, Matrix([], field), field)

    @classmethod
    def full(cls, ambient_dim, field=exact.FIELD_Q):
        return cls(ambient_dim, Matrix.identity(ambient_dim, field), field)

    @classmethod
    def from_vectors(cls, vectors, ambient_dim, field=exact.FIELD_Q):
        vectors = [v for v in vectors if any(x != 0 for x in v)]
        if not vectors:
            return cls.zero(ambient_dim, field)
        if any(len(v) != ambient_dim for v in vectors):
            raise DimensionMismatch("vector length != ambient dimension")
        red, rank = rref(Matrix(vectors, field))
        return cls(ambient_dim, Matrix(red.data[:rank], field), field)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, vec) -> bool:
        if len(vec) != self.ambient_dim:
            raise DimensionMismatch("vector length != ambient dimension")
        v = [exact.coerce(x, self.field) for x in vec]
        for row in self.basis.data:
            p = next(i for i, x in enumerate(row) if x != 0)
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return all(x == 0 for x in v)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim, self.field) == (other.ambient_dim, other.field) \
            and self.basis.data == other.basis.data

    def __hash__(self):
        return hash((self.ambient_dim, self.field, tuple(tuple(r) for r in self.basis.data)))

    def __str__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"

    __repr__ = __str__


def solve_homogeneous(m: Matrix) -> Subspace:
    """Null space {v : m v = 0}, dimension cols - rank."""
    red, rank = rref(m)
    n = m.cols
    pivots = []
    c = 0
    for r in range(rank):
        while red.data[r][c] == 0:
            c += 1
        pivots.append(c)
        c += 1
    free = [c for c in range(n) if c not in pivots]
    z, o = exact.zero(m.field), exact.one(m.field)
    vecs = []
    for f in free:
        v = [z] * n
        v[f] = o
        for r, p in enumerate(pivots):
            if red.data[r][f] != 0:
                v[p] = -red.data[r][f]
        vecs.append(v)
    return Subspace.from_vectors(vecs, n, m.field)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionMismatch("subspace sum needs a common ambient space")
    return Subspace.from_vectors(a.basis.data + b.basis.data, a.ambient_dim, a.field)
