"""Symplectic and pseudo-euclidean structures, and double extensions.

A symplectic form is nondegenerate, skew, and cyclically compatible:
w(xy,z) + w(yz,x) + w(zx,y) = 0.  A pseudo-euclidean form is
nondegenerate, symmetric, and invariant: B(xy,z) = B(x,yz).  Existence
is decided exactly: the compatible forms are a linear space, and the
determinant of its generic element is expanded as a polynomial - it
vanishes identically iff no nondegenerate compatible form exists, and
otherwise a rational witness is found by variable-by-variable
substitution keeping the polynomial nonzero.

The double extension of a symplectic algebra (J, w) by a special
admissible pair (D, A0) is F e + J + F e* with

    e^2 = A0,   e * x = D(x) + 1/2 w(A0, x) e*,
    x * y = x.y + w((D - D*)(x), y) e*,

where D* is the w-adjoint of D; the extension is again symplectic for
w~ = w on J, w~(e, e*) = 1.  Both conclusions are re-verified on every
constructed extension rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .algebra import JJAlgebra, is_isomorphism, left_mult
from .linalg import Matrix, Subspace, ZERO, frac, kernel_basis
from .polys import Poly, det_poly

SYMPLECTIC = "symplectic"
PSEUDO_EUCLIDEAN = "pseudo_euclidean"


@dataclass(frozen=True)
class BilinearForm:
    kind: str
    matrix: Matrix

    def value(self, x, y):
        return sum((a * b for a, b in zip(self.matrix.apply(list(y)), x)
                    if a and b), ZERO)


def is_anti_derivation(alg: JJAlgebra, d: Matrix) -> bool:
    """D(xy) = -D(x)y - xD(y), checked on basis pairs."""
    if d.rows != alg.dim or d.cols != alg.dim:
        raise ValueError("map has wrong shape for this algebra")
    for i in range(1, alg.dim + 1):
        for j in range(i, alg.dim + 1):
            lhs = d.apply(alg.basis_product(i, j))
            rhs = [-c for c in alg.product(d.column(i - 1), alg.basis_vector(j))]
            for t, c in enumerate(alg.product(alg.basis_vector(i), d.column(j - 1))):
                rhs[t] -= c
            if lhs != rhs:
                return False
    return True


def _entry(i, j, m):
    return m * i + j


def compatible_form_space(alg: JJAlgebra, kind: str) -> Subspace:
    """Solutions of the linear compatibility constraints, as flattened
    m x m matrices.  Nondegeneracy is NOT yet imposed."""
    m = alg.dim
    rows = []

    def row():
        return [ZERO] * (m * m)

    for i in range(m):
        for j in range(i, m):
            if kind == SYMPLECTIC:
                r = row()
                r[_entry(i, j, m)] += 1
                r[_entry(j, i, m)] += 1
                rows.append(r)  # w_ij + w_ji = 0 (includes w_ii = 0)
            elif kind == PSEUDO_EUCLIDEAN:
                if i != j:
                    r = row()
                    r[_entry(i, j, m)] += 1
                    r[_entry(j, i, m)] -= 1
                    rows.append(r)
            else:
                raise ValueError(f"unknown form kind {kind!r}")

    if kind == SYMPLECTIC:
        # cyclic sum w(e_i e_j, e_k) over i <= j <= k; fully symmetric
        for i in range(1, m + 1):
            for j in range(i, m + 1):
                for k in range(j, m + 1):
                    r = row()
                    for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                        v = alg.basis_product(x, y)
                        for a, c in enumerate(v):
                            if c:
                                r[_entry(a, z - 1, m)] += c
                    if any(c for c in r):
                        rows.append(r)
    else:
        # B(e_i e_j, e_k) = B(e_i, e_j e_k) on all ordered triples
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for k in range(1, m + 1):
                    r = row()
                    for a, c in enumerate(alg.basis_product(i, j)):
                        if c:
                            r[_entry(a, k - 1, m)] += c
                    for a, c in enumerate(alg.basis_product(j, k)):
                        if c:
                            r[_entry(i - 1, a, m)] -= c
                    if any(c for c in r):
                        rows.append(r)

    if not rows:
        return Subspace.full(m * m)
    return kernel_basis(Matrix(rows, cols=m * m))


def generic_determinant(space: Subspace) -> Poly:
    """det of the generic element of a space of flattened square matrices,
    as a polynomial in the space coordinates (variable a+1 scales the
    a-th basis vector)."""
    m = isqrt(space.ambient_dim)
    if m * m != space.ambient_dim:
        raise ValueError("space is not made of square matrices")
    if m == 0:
        return Poly.constant(1)
    entries = [[Poly.zero() for _ in range(m)] for _ in range(m)]
    for a, basis_vec in enumerate(space.basis):
        for i in range(m):
            for j in range(m):
                c = basis_vec[_entry(i, j, m)]
                if c:
                    entries[i][j] = entries[i][j] + Poly({(a + 1,): c})
    return det_poly(entries)


def find_nondegenerate(space: Subspace, kind: str):
    """A nondegenerate element of the space, or None.

    None is a certificate: the determinant of the generic element is the
    zero polynomial, so every element of the space is singular.  The
    witness search substitutes small integers variable by variable,
    keeping the determinant polynomial nonzero, hence is deterministic.
    """
    m = isqrt(space.ambient_dim)
    p = generic_determinant(space)
    if p.is_zero():
        return None
    point = {}
    for var in range(1, space.dim + 1):
        bound = p.degree_in(var) + 1
        for value in range(bound + 1):
            q = p.substitute(var, value)
            if not q.is_zero():
                point[var] = value
                p = q
                break
    flat = [ZERO] * (m * m)
    for a, basis_vec in enumerate(space.basis):
        c = frac(point.get(a + 1, 0))
        if c:
            flat = [x + c * y for x, y in zip(flat, basis_vec)]
    matrix = Matrix([flat[i * m:(i + 1) * m] for i in range(m)], cols=m)
    return BilinearForm(kind, matrix)


def verify_form(alg: JJAlgebra, form: BilinearForm) -> bool:
    """(Skew)symmetry, nondegeneracy, and the compatibility identity."""
    w = form.matrix
    if w.rows != alg.dim or w.cols != alg.dim:
        return False
    for i in range(alg.dim):
        for j in range(alg.dim):
            if form.kind == SYMPLECTIC and w.data[i][j] != -w.data[j][i]:
                return False
            if form.kind == PSEUDO_EUCLIDEAN and w.data[i][j] != w.data[j][i]:
                return False
    if alg.dim and w.det() == 0:
        return False
    flat = [c for row in w.data for c in row]
    space = compatible_form_space(alg, form.kind)
    return space.contains(flat)


def adjoint_map(form: BilinearForm, g: Matrix) -> Matrix:
    """g* with w(g(x), y) = w(x, g*(y)); needs w nondegenerate."""
    w = form.matrix
    if w.det() == 0:
        raise ValueError("adjoint needs a nondegenerate form")
    gstar = w.inverse().mul(g.transpose()).mul(w)
    # defining identity on basis pairs, cheap enough to always confirm
    assert g.transpose().mul(w) == w.mul(gstar)
    return gstar


@dataclass(frozen=True)
class SpecialAdmissiblePair:
    d_map: Matrix
    a0: tuple

    @classmethod
    def of(cls, d_map, a0):
        return cls(d_map, tuple(frac(x) for x in a0))


def is_special_admissible(alg: JJAlgebra, omega: BilinearForm,
                          pair: SpecialAdmissiblePair) -> bool:
    """All four clauses: D an anti-derivation, A0 in Ker D,
    D^2 = -1/2 L_{A0}, and w(A0, Im D) = 0."""
    d, a0 = pair.d_map, list(pair.a0)
    if len(a0) != alg.dim:
        raise ValueError("A0 has wrong length")
    if not is_anti_derivation(alg, d):
        return False
    if any(c != 0 for c in d.apply(a0)):
        return False
    la0 = left_mult(alg, a0)
    dd = d.mul(d)
    half = Fraction(1, 2)
    for i in range(alg.dim):
        for j in range(alg.dim):
            if dd.data[i][j] != -half * la0.data[i][j]:
                return False
    for j in range(alg.dim):
        if omega.value(a0, d.column(j)) != 0:
            return False
    return True


def double_extension(alg: JJAlgebra, omega: BilinearForm,
                     pair: SpecialAdmissiblePair):
    """The symplectic double extension (F e + J + F e*, w~).

    Basis order: e, then the base algebra, then e*.  The output is
    re-verified: it must satisfy the Jacobi identity and carry w~ as a
    symplectic form.
    """
    if not is_special_admissible(alg, omega, pair):
        raise ValueError("not a special admissible pair for this form")
    m = alg.dim
    d, a0 = pair.d_map, list(pair.a0)
    dstar = adjoint_map(omega, d) if m else d
    ddiff = Matrix([[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(d.data, dstar.data)], cols=m)
    half = Fraction(1, 2)

    products = {}

    def emb(vector, estar=ZERO):
        return [ZERO] + list(vector) + [estar]

    products[(1, 1)] = emb(a0)
    for x in range(1, m + 1):
        ex = alg.basis_vector(x)
        products[(1, x + 1)] = emb(d.column(x - 1), half * omega.value(a0, ex))
        for y in range(x, m + 1):
            ey = alg.basis_vector(y)
            products[(x + 1, y + 1)] = emb(alg.basis_product(x, y),
                                           omega.value(ddiff.apply(ex), ey))
    name = f"double_ext({alg.name})" if alg.name else "double_ext"
    out = JJAlgebra.build(m + 2, products, name=name)

    wt = [[ZERO] * (m + 2) for _ in range(m + 2)]
    for i in range(m):
        for j in range(m):
            wt[i + 1][j + 1] = omega.matrix.data[i][j]
    wt[0][m + 1] = Fraction(1)
    wt[m + 1][0] = Fraction(-1)
    form = BilinearForm(SYMPLECTIC, Matrix(wt, cols=m + 2))
    if not verify_form(out, form):
        raise AssertionError("double extension failed to verify as symplectic")
    return out, form


def i_isometry_check(p: Matrix, source, target) -> bool:
    """Isometric isomorphism: p an algebra isomorphism with
    g(p(x), p(y)) = f(x, y) for the given forms f on source, g on target."""
    a, f = source
    b, g = target
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    if not is_isomorphism(p, a, b):
        return False
    return p.transpose().mul(g.matrix).mul(p) == f.matrix


def structure_survey(names, kind: str):
    """Per-algebra existence of a nondegenerate compatible form.

    Rows (name, exists, witness-or-None); a None witness is backed by
    the determinant-polynomial certificate.
    """
    from .catalog import catalog

    rows = []
    for name in names:
        alg = catalog(name)
        space = compatible_form_space(alg, kind)
        witness = find_nondegenerate(space, kind)
        if witness is not None and not verify_form(alg, witness):
            raise AssertionError(f"witness failed re-verification for {name}")
        rows.append((name, witness is not None, witness))
    return rows
