"""Jacobi-Jordan algebras as exact structure-constant data.

An algebra of dimension m is stored by the products of basis vectors:
e_i * e_j = sum_k c(i,j)_k e_k with only i <= j kept, so commutativity is
structural.  The Jacobi identity x(yz) + y(zx) + z(xy) = 0 is verified,
never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Matrix, ZERO, frac, is_zero_vector, rank, Subspace, kernel_basis


def _canonical_products(dim, products):
    """Normalize a {(i,j): coeffs} mapping into a sorted tuple-of-tuples.

    coeffs may be a full length-dim sequence or a sparse {k: coeff} dict,
    all 1-based.
    """
    table = {}
    for (i, j), coeffs in products.items():
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"basis index out of range in product ({i},{j})")
        if i > j:
            i, j = j, i
        if isinstance(coeffs, dict):
            v = [ZERO] * dim
            for k, c in coeffs.items():
                if not 1 <= k <= dim:
                    raise ValueError(f"target index {k} out of range")
                v[k - 1] = frac(c)
        else:
            v = [frac(c) for c in coeffs]
            if len(v) != dim:
                raise ValueError("product vector has wrong length")
        if (i, j) in table:
            raise ValueError(f"duplicate product entry ({i},{j})")
        if not is_zero_vector(v):
            table[(i, j)] = tuple(v)
    return tuple(sorted(table.items()))


@dataclass(frozen=True)
class JJAlgebra:
    dim: int
    products: tuple  # sorted (((i,j), coeffs), ...) with i <= j, coeffs nonzero
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_table", dict(self.products))

    @classmethod
    def build(cls, dim, products, name="", check=True):
        alg = cls(dim, _canonical_products(dim, products), name)
        if check:
            bad = verify_jj(alg)
            if bad:
                raise ValueError(f"Jacobi identity fails at triples {bad}")
        return alg

    def basis_product(self, i, j):
        """e_i * e_j as a coefficient list."""
        if i > j:
            i, j = j, i
        v = self._table.get((i, j))
        return list(v) if v is not None else [ZERO] * self.dim

    def product(self, x, y):
        """Bilinear symmetric extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector has wrong length for this algebra")
        out = [ZERO] * self.dim
        for (i, j), coeffs in self.products:
            xi, xj = x[i - 1], x[j - 1]
            yi, yj = y[i - 1], y[j - 1]
            s = xi * yj if (xi and yj) else ZERO
            if i != j and xj and yi:
                s += xj * yi
            if s:
                for k, c in enumerate(coeffs):
                    if c:
                        out[k] += c * s
        return out

    def product_basis(self, i, vector):
        """e_i * v for a coordinate vector v."""
        out = [ZERO] * self.dim
        for l, c in enumerate(vector):
            if c:
                w = self.basis_product(i, l + 1)
                for k, a in enumerate(w):
                    if a:
                        out[k] += c * a
        return out

    def basis_vector(self, i):
        v = [ZERO] * self.dim
        v[i - 1] = Fraction(1)
        return v

    def is_trivial(self):
        return not self.products

    def __repr__(self):
        label = self.name or f"dim-{self.dim} JJ algebra"
        return f"JJAlgebra({label})"


def verify_jj(alg: JJAlgebra):
    """Jacobi report: the list of basis triples i <= j <= k where
    e_i(e_j e_k) + e_j(e_k e_i) + e_k(e_i e_j) != 0.  Empty means the
    identity holds everywhere (multilinearity plus symmetry of the
    Jacobiator make the ordered triples redundant)."""
    bad = []
    m = alg.dim
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            for k in range(j, m + 1):
                s = alg.product_basis(i, alg.basis_product(j, k))
                for t, c in enumerate(alg.product_basis(j, alg.basis_product(k, i))):
                    s[t] += c
                for t, c in enumerate(alg.product_basis(k, alg.basis_product(i, j))):
                    s[t] += c
                if not is_zero_vector(s):
                    bad.append((i, j, k))
    return bad


def trivial_algebra(m, name=None):
    return JJAlgebra.build(m, {}, name=name if name is not None else f"F^{m}")


def direct_sum(a: JJAlgebra, b: JJAlgebra, name=None) -> JJAlgebra:
    """Block direct sum; cross products vanish."""
    products = {}
    for (i, j), coeffs in a.products:
        products[(i, j)] = list(coeffs) + [ZERO] * b.dim
    off = a.dim
    for (i, j), coeffs in b.products:
        products[(i + off, j + off)] = [ZERO] * a.dim + list(coeffs)
    if name is None:
        name = f"{a.name}+{b.name}" if a.name and b.name else ""
    return JJAlgebra.build(a.dim + b.dim, products, name=name)


def heisenberg(m: int) -> JJAlgebra:
    """Dimension 2m+1 with x_i y_i = z; all triple products vanish."""
    if m < 1:
        raise ValueError("heisenberg algebra needs m >= 1")
    dim = 2 * m + 1
    products = {(i, m + i): {dim: 1} for i in range(1, m + 1)}
    return JJAlgebra.build(dim, products, name=f"H_{m}")


def left_mult(alg: JJAlgebra, x) -> Matrix:
    """Matrix of L_x: y -> x*y (column j is x*e_j)."""
    cols = [alg.product(x, alg.basis_vector(j)) for j in range(1, alg.dim + 1)]
    return Matrix.from_columns(cols, rows=alg.dim)


def apply_basis_change(alg: JJAlgebra, p: Matrix) -> JJAlgebra:
    """Transport constants so that p is an isomorphism new -> old.

    Column j of p is the old-coordinates image of the new e_j.
    """
    if p.rows != alg.dim or p.cols != alg.dim:
        raise ValueError("basis change has wrong shape")
    pinv = p.inverse()  # raises on singular p
    products = {}
    for i in range(1, alg.dim + 1):
        for j in range(i, alg.dim + 1):
            w = alg.product(p.column(i - 1), p.column(j - 1))
            products[(i, j)] = pinv.apply(w)
    name = f"{alg.name}'" if alg.name else ""
    return JJAlgebra.build(alg.dim, products, name=name)


def is_isomorphism(p: Matrix, a: JJAlgebra, b: JJAlgebra) -> bool:
    """True iff p is invertible and p(x *_a y) = p(x) *_b p(y)."""
    if a.dim != b.dim or p.rows != a.dim or p.cols != a.dim:
        return False
    if not p.is_invertible():
        return False
    for i in range(1, a.dim + 1):
        for j in range(i, a.dim + 1):
            lhs = p.apply(a.basis_product(i, j))
            rhs = b.product(p.column(i - 1), p.column(j - 1))
            if lhs != rhs:
                return False
    return True


def square_subspace(alg: JJAlgebra) -> Subspace:
    """Span of all products, i.e. the subspace J^2."""
    gens = [list(coeffs) for _, coeffs in alg.products]
    return Subspace.from_spanning(alg.dim, gens)


def annihilator(alg: JJAlgebra) -> Subspace:
    """{x : x * J = 0}."""
    rows = []
    for j in range(1, alg.dim + 1):
        for k in range(alg.dim):
            rows.append([alg.basis_product(i, j)[k] for i in range(1, alg.dim + 1)])
    return kernel_basis(Matrix(rows, cols=alg.dim))


def fingerprint(alg: JJAlgebra, with_h2=False):
    """Isomorphism-invariant screen: (dim, dim J^2, dim annihilator[, dim H^2])."""
    fp = (alg.dim, square_subspace(alg).dim, annihilator(alg).dim)
    if with_h2:
        from .cohomology import h2

        fp = fp + (h2(alg).dim_h2,)
    return fp


@dataclass(frozen=True)
class Representation:
    dim_v: int
    pi: tuple  # one dim_v x dim_v Matrix per basis vector of the algebra


def verify_representation(alg: JJAlgebra, rep: Representation) -> bool:
    """Check pi(x)pi(y) + pi(y)pi(x) = -pi(x*y) on basis pairs."""
    if len(rep.pi) != alg.dim:
        raise ValueError("one matrix per algebra basis vector is required")
    for p in rep.pi:
        if p.rows != rep.dim_v or p.cols != rep.dim_v:
            raise ValueError("representation matrix has wrong shape")
    for i in range(1, alg.dim + 1):
        for j in range(i, alg.dim + 1):
            pi_i, pi_j = rep.pi[i - 1], rep.pi[j - 1]
            lhs = pi_i.mul(pi_j)
            lhs2 = pi_j.mul(pi_i)
            prod = alg.basis_product(i, j)
            for r in range(rep.dim_v):
                for c in range(rep.dim_v):
                    val = lhs.data[r][c] + lhs2.data[r][c]
                    rhs = -sum((ck * rep.pi[k].data[r][c] for k, ck in enumerate(prod) if ck),
                               ZERO)
                    if val != rhs:
                        return False
    return True


def adjoint_rep(alg: JJAlgebra) -> Representation:
    """pi(e_i) = L_{e_i}; verifies exactly when the Jacobi identity holds."""
    mats = tuple(left_mult(alg, alg.basis_vector(i)) for i in range(1, alg.dim + 1))
    return Representation(alg.dim, mats)


def is_leibniz(alg: JJAlgebra) -> bool:
    """Left Leibniz identity x(yz) = (xy)z + y(xz) on all basis triples."""
    m = alg.dim
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            for k in range(1, m + 1):
                lhs = alg.product_basis(i, alg.basis_product(j, k))
                rhs = alg.product(alg.basis_product(i, j), alg.basis_vector(k))
                for t, c in enumerate(alg.product_basis(j, alg.basis_product(i, k))):
                    rhs[t] += c
                if lhs != rhs:
                    return False
    return True
