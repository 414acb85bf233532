"""Exact dense linear algebra over the rationals.

The kernel/image/solve/quotient engine underneath the cohomology and
deformation machinery.  Everything is Fraction-exact and deterministic:
pivoting always takes the first nonzero entry scanning left to right (no
magnitude heuristics are needed without rounding), so reduced row-echelon
forms, kernel bases, solution vectors and quotient representatives are
canonical and reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(values) -> list:
    return [frac(x) for x in values]


def zero_vector(n) -> list:
    return [ZERO] * n


def is_zero_vector(v) -> bool:
    return all(x == 0 for x in v)


def add_scaled(u, v, c):
    """u + c*v, componentwise."""
    return [a + c * b for a, b in zip(u, v)]


def dot(u, v) -> Fraction:
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


class Matrix:
    """Dense rational matrix; rows of Fractions.  Treated as immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = [[frac(x) for x in row] for row in data]
        if data:
            ncols = len(data[0])
            for row in data:
                if len(row) != ncols:
                    raise ValueError("ragged matrix rows")
            if cols is not None and cols != ncols:
                raise ValueError("explicit column count disagrees with data")
        else:
            ncols = 0 if cols is None else cols
        self.rows = len(data)
        self.cols = ncols
        self.data = data

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns, rows=None):
        if not columns:
            return cls([], cols=0) if rows is None else cls([[] for _ in range(rows)], cols=0)
        nrows = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(nrows)])

    def column(self, j):
        return [row[j] for row in self.data]

    def transpose(self):
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      cols=self.rows)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        for i in range(self.rows):
            row = self.data[i]
            out.append([dot(row, other.column(j)) for j in range(other.cols)])
        return Matrix(out, cols=other.cols)

    def apply(self, v):
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return [dot(row, v) for row in self.data]

    def is_square(self):
        return self.rows == self.cols

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.data]
        det = ONE
        for c in range(n):
            piv = None
            for r in range(c, n):
                if m[r][c] != 0:
                    piv = r
                    break
            if piv is None:
                return ZERO
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            inv = ONE / m[c][c]
            for r in range(c + 1, n):
                f = m[r][c]
                if f == 0:
                    continue
                f *= inv
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
        return det

    def is_invertible(self):
        return self.is_square() and self.det() != 0

    def inverse(self):
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.data[i]) + [ONE if i == j else ZERO for j in range(n)]
               for i in range(n)]
        reduced, pivots = _rref_rows(aug)
        if list(pivots) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in reduced], cols=n)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def _rref_rows(rows):
    """In-place reduced row echelon form of a list of row lists.

    Returns (rows, pivot_columns).  The input list is consumed.
    """
    if not rows:
        return rows, ()
    nrows = len(rows)
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, tuple(pivots)


def rref(m: Matrix):
    """Reduced row-echelon form.  Returns (Matrix, pivot-columns)."""
    rows, pivots = _rref_rows([list(row) for row in m.data])
    return Matrix(rows, cols=m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class SolveContext:
    """Factorized linear system a*x = b, reusable across many right-hand sides.

    Solutions are the canonical ones: zero in every non-pivot coordinate,
    so repeated solves are deterministic.
    """

    def __init__(self, a: Matrix):
        self.a = a
        n = a.rows
        aug = [list(a.data[i]) + [ONE if i == j else ZERO for j in range(n)]
               for i in range(n)]
        reduced, pivots = _rref_rows(aug)
        self.pivots = tuple(p for p in pivots if p < a.cols)
        self.rank = len(self.pivots)
        # row operations matrix T with T*a in rref
        self.transform = [row[a.cols:] for row in reduced]

    def solve(self, b):
        """Some x with a*x = b (zeros in non-pivot coordinates), or None."""
        if len(b) != self.a.rows:
            raise ValueError("right-hand side has wrong length")
        y = [dot(trow, b) for trow in self.transform]
        for i in range(self.rank, self.a.rows):
            if y[i] != 0:
                return None
        x = zero_vector(self.a.cols)
        for i, p in enumerate(self.pivots):
            x[p] = y[i]
        return x

    def in_image(self, b) -> bool:
        return self.solve(b) is not None


def solve(a: Matrix, b):
    """Some x with a*x = b, or None when the system is inconsistent."""
    return SolveContext(a).solve(b)


class Subspace:
    """A subspace of Q^n held as a canonical rref row basis.

    Two equal subspaces have identical representations, so golden values
    and quotient constructions are stable.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis_rows, pivots):
        self.ambient_dim = ambient_dim
        self.basis = basis_rows
        self.pivots = pivots

    @classmethod
    def from_spanning(cls, ambient_dim, vectors):
        vectors = [vec(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("spanning vector has wrong length")
        rows, pivots = _rref_rows(vectors)
        rows = rows[:len(pivots)]
        return cls(ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, [], ())

    @classmethod
    def full(cls, ambient_dim):
        return cls.from_spanning(ambient_dim,
                                 Matrix.identity(ambient_dim).data)

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, v):
        """Residual of v after elimination against the basis rows."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f != 0:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def coordinates(self, v):
        """Expansion of v in the basis rows, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector has wrong length")
        coords = [v[p] for p in self.pivots]
        if is_zero_vector(self.reduce(v)):
            return coords
        return None

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def is_subspace_of(self, other) -> bool:
        return all(other.contains(row) for row in self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel_basis(m: Matrix) -> Subspace:
    """Null space of m, canonical basis.  dim = cols - rank."""
    reduced, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    gens = []
    for f in free:
        v = zero_vector(m.cols)
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced.data[i][f]
        gens.append(v)
    return Subspace.from_spanning(m.cols, gens)


def image_basis(m: Matrix) -> Subspace:
    """Column space of m as a Subspace (columns viewed as vectors)."""
    return Subspace.from_spanning(m.rows, [m.column(j) for j in range(m.cols)])


def quotient_data(sub: Subspace, whole: Subspace):
    """Quotient whole/sub: representatives plus a linear reduction map.

    Representatives are rref rows of `whole` completing a basis of `sub`,
    picked greedily in row order (deterministic).  The returned `reduce`
    maps a vector of `whole` to its coordinates in the quotient: it kills
    `sub` exactly and sends the i-th representative to the i-th unit.
    Raises ValueError when sub is not contained in whole.
    """
    if sub.ambient_dim != whole.ambient_dim:
        raise ValueError("ambient dimensions disagree")
    if not sub.is_subspace_of(whole):
        raise ValueError("first subspace is not contained in the second")
    reps = []
    acc = [list(row) for row in sub.basis]
    for row in whole.basis:
        trial = acc + [list(row)]
        _, pivots = _rref_rows([list(r) for r in trial])
        if len(pivots) > len(acc):
            reps.append(list(row))
            acc = trial
    # solve coordinates against the combined (sub + reps) basis
    combined = Matrix(sub.basis + reps, cols=whole.ambient_dim).transpose()
    ctx = SolveContext(combined)
    k = sub.dim

    def reduce(v):
        coords = ctx.solve(v)
        if coords is None:
            raise ValueError("vector not in the ambient subspace")
        return coords[k:]

    return reps, reduce
