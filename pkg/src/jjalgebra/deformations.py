"""Truncated formal one-parameter deformations and their obstructions.

A deformation of order N is the family (x y)_t = x y + sum t^n phi_n(x,y)
with degree-2 cochains phi_1..phi_N.  It is a deformation exactly when

    d(phi_n) + 1/2 sum_{i+j=n, i,j>0} [phi_i, phi_j] = 0

holds at each order; with zero terms beyond N the bracket sums can reach
order 2N, which is what makes "defines a genuine polynomial deformation"
a decidable statement.  classify_infinitesimal runs the order-by-order
analysis for a single cocycle: real ([phi,phi] = 0), extension to order
2 (the bracket is a coboundary), and the exact order-3 sweep over all
possible second-order corrections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import JJAlgebra, is_isomorphism
from .cochains import SymCochain, bracket, differential, zero_cochain
from .cohomology import coboundary3_modulo, is_coboundary3, is_cocycle, _data
from .linalg import Matrix, ZERO, frac

REAL = "real"
OBSTRUCTED_AT_2 = "obstructed_at_2"
ORDER2_THEN_OBSTRUCTED = "order2_then_obstructed"
EXTENDS_TO_ORDER_3 = "extends_to_order_3"


@dataclass(frozen=True)
class FormalDeformation1:
    base: JJAlgebra
    terms: tuple  # phi_1 .. phi_N, degree-2 SymCochains

    def __post_init__(self):
        for phi in self.terms:
            if phi.degree != 2 or phi.dim != self.base.dim:
                raise ValueError("deformation terms must be degree-2 cochains "
                                 "over the base algebra")

    @property
    def order(self):
        return len(self.terms)

    def term(self, n):
        """phi_n, with phi_0 the base multiplication and 0 beyond the order."""
        if n == 0:
            from .cochains import mult_cochain

            return mult_cochain(self.base)
        if 1 <= n <= self.order:
            return self.terms[n - 1]
        return zero_cochain(self.base.dim, 2)


def deformation(base, terms) -> FormalDeformation1:
    return FormalDeformation1(base, tuple(terms))


def _order_residual(d: FormalDeformation1, n: int) -> SymCochain:
    """d(phi_n) + 1/2 sum_{i+j=n} [phi_i, phi_j] as a degree-3 cochain."""
    res = differential(d.base, d.term(n)) if n <= d.order else \
        zero_cochain(d.base.dim, 3)
    half = Fraction(1, 2)
    for i in range(1, n):
        j = n - i
        if i > d.order or j > d.order:
            continue
        res = res + half * bracket(d.term(i), d.term(j))
    return res


def check_deformation(d: FormalDeformation1, through_order=None):
    """Failing orders with their residual 3-cochains; empty means valid.

    By default orders 1..N are checked.  Passing through_order=2N proves
    that the truncated family is a polynomial deformation on the nose.
    """
    top = d.order if through_order is None else through_order
    failures = []
    for n in range(1, top + 1):
        res = _order_residual(d, n)
        if not res.is_zero():
            failures.append((n, res))
    return failures


def is_polynomial_deformation(d: FormalDeformation1) -> bool:
    """True when the equation holds at every order (brackets reach 2N)."""
    return not check_deformation(d, through_order=2 * d.order)


def obstruction(d: FormalDeformation1, n: int) -> SymCochain:
    """omega_n = 1/2 sum_{i+j=n, i,j>0} [phi_i, phi_j].

    Extension to order n is possible iff omega_n is a coboundary.
    Demands that the deformation equation holds below n.
    """
    below = [f for f in check_deformation(d, through_order=n - 1)]
    if below:
        raise ValueError(f"deformation equation already fails at orders "
                         f"{[k for k, _ in below]}")
    half = Fraction(1, 2)
    res = zero_cochain(d.base.dim, 3)
    for i in range(1, n):
        j = n - i
        res = res + half * bracket(d.term(i), d.term(j))
    return res


@dataclass(frozen=True)
class InfinitesimalClass:
    kind: str
    witness: SymCochain | None = None  # order-2 term when one exists

    @property
    def bracket_is_coboundary(self):
        return self.kind != OBSTRUCTED_AT_2

    @property
    def extendible(self):
        """Extends past every computed obstruction (order 3 sweep included)."""
        return self.kind in (REAL, EXTENDS_TO_ORDER_3)


def classify_infinitesimal(alg: JJAlgebra, phi: SymCochain) -> InfinitesimalClass:
    """Order-by-order analysis of the deformation with first term phi.

    real: [phi,phi] = 0, so phi alone is a polynomial deformation.
    obstructed_at_2: [phi,phi] is not a coboundary.
    Otherwise a second-order witness chi (d chi = -1/2 [phi,phi]) exists,
    and the order-3 obstruction [phi, chi + r] is swept over all cocycle
    corrections r at once: it can be killed iff [phi, chi] lies in
    B^3 + span{[phi, z] : z a Z^2 basis vector}, an exact linear question.
    """
    if not is_cocycle(alg, phi):
        raise ValueError("classification expects a cocycle")
    br = bracket(phi, phi)
    if br.is_zero():
        return InfinitesimalClass(REAL)
    chi = is_coboundary3(alg, Fraction(-1, 2) * br)
    if chi is None:
        return InfinitesimalClass(OBSTRUCTED_AT_2)
    data = _data(alg)
    z2_cochains = [SymCochain.from_vector(alg.dim, 2, v) for v in data.z2.basis]
    sweep = [bracket(phi, z) for z in z2_cochains]
    if coboundary3_modulo(alg, bracket(phi, chi), sweep):
        return InfinitesimalClass(EXTENDS_TO_ORDER_3, witness=chi)
    return InfinitesimalClass(ORDER2_THEN_OBSTRUCTED, witness=chi)


@dataclass(frozen=True)
class EquivalenceMap:
    """psi_hat_t = id + psi_1 t + ... + psi_N t^N, an invertible series."""

    maps: tuple  # degree-1 SymCochains

    @property
    def order(self):
        return len(self.maps)

    def matrix(self, n, dim) -> Matrix:
        """Matrix of the coefficient of t^n (identity at n = 0)."""
        if n == 0:
            return Matrix.identity(dim)
        if n > self.order:
            return Matrix.zero(dim, dim)
        phi = self.maps[n - 1]
        cols = [phi.at_basis((j,)) for j in range(1, dim + 1)]
        return Matrix.from_columns(cols, rows=dim)


def _series_inverse(e: EquivalenceMap, dim, order):
    """Coefficients of psi_hat^{-1} through t^order."""
    inv = [Matrix.identity(dim)]
    for n in range(1, order + 1):
        acc = Matrix.zero(dim, dim)
        for k in range(1, n + 1):
            prod = e.matrix(k, dim).mul(inv[n - k])
            acc = Matrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(acc.data, prod.data)])
        inv.append(Matrix([[-x for x in row] for row in acc.data]))
    return inv


def apply_equivalence(d: FormalDeformation1, e: EquivalenceMap) -> FormalDeformation1:
    """Transport d through psi_hat_t, truncated at the order of d.

    The result d' satisfies psi_hat_t (x y)_t = (psi_hat_t x . psi_hat_t y)'_t,
    which is re-checked on basis pairs order by order.
    """
    alg = d.base
    m = alg.dim
    order = d.order
    inv = _series_inverse(e, m, order)
    fwd = [e.matrix(n, m) for n in range(order + 1)]

    new_terms = []
    for n in range(1, order + 1):
        terms = {}
        for (i, j) in _pairs(m):
            total = [ZERO] * m
            for a in range(0, n + 1):
                for b in range(0, n - a + 1):
                    for c in range(0, n - a - b + 1):
                        kk = n - a - b - c
                        x = inv[c].column(i - 1)
                        y = inv[kk].column(j - 1)
                        val = d.term(b).evaluate(x, y)
                        val = fwd[a].apply(val)
                        for t, v in enumerate(val):
                            total[t] += v
            for t, v in enumerate(total):
                if v:
                    terms[((i, j), t + 1)] = v
        new_terms.append(SymCochain(m, 2, terms))
    out = FormalDeformation1(alg, tuple(new_terms))
    _assert_equivalent(d, out, e)
    return out


def _pairs(m):
    return [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]


def _assert_equivalent(d, dprime, e):
    """Verify psi_hat (x y)_t = (psi_hat x . psi_hat y)'_t through order N."""
    m = d.base.dim
    order = d.order
    fwd = [e.matrix(n, m) for n in range(order + 1)]
    for (i, j) in _pairs(m):
        ei = [Fraction(1) if t == i - 1 else ZERO for t in range(m)]
        ej = [Fraction(1) if t == j - 1 else ZERO for t in range(m)]
        for n in range(0, order + 1):
            lhs = [ZERO] * m
            for a in range(0, n + 1):
                val = fwd[a].apply(d.term(n - a).evaluate(ei, ej))
                for t, v in enumerate(val):
                    lhs[t] += v
            rhs = [ZERO] * m
            for b in range(0, n + 1):
                for c in range(0, n - b + 1):
                    val = dprime.term(n - b - c).evaluate(fwd[b].column(i - 1),
                                                          fwd[c].column(j - 1))
                    for t, v in enumerate(val):
                        rhs[t] += v
            if lhs != rhs:
                raise AssertionError("equivalence transport failed to verify")


def specialize(d: FormalDeformation1, t0) -> JJAlgebra:
    """The algebra at a rational parameter value; re-verified Jacobi.

    A failed verification signals a truncation inconsistency and raises.
    """
    t0 = frac(t0)
    alg = d.base
    products = {}
    for (i, j) in _pairs(alg.dim):
        v = alg.basis_product(i, j)
        power = t0
        for n in range(1, d.order + 1):
            w = d.term(n).at_basis((i, j))
            for t, c in enumerate(w):
                if c:
                    v[t] += power * c
            power *= t0
        products[(i, j)] = v
    name = f"{alg.name}@t={t0}" if alg.name else ""
    try:
        return JJAlgebra.build(alg.dim, products, name=name)
    except ValueError as exc:
        raise ValueError(f"specialization at t={t0} is not a JJ algebra "
                         f"(truncation inconsistency): {exc}") from exc


def verify_jump(d: FormalDeformation1, t0, p: Matrix, target: JJAlgebra) -> bool:
    """Does p realize target ~ specialization at t0 =/= 0?

    p follows the basis-change convention: column j is the specialized
    coordinates of the target's j-th basis vector.
    """
    t0 = frac(t0)
    if t0 == 0:
        raise ValueError("jump verification needs a nonzero parameter")
    return is_isomorphism(p, target, specialize(d, t0))


def jump_graph(dim: int):
    """Jump-deformation edges in one dimension, with witness status.

    Returns records (source, target, status) where status is "verified"
    when a bundled rational witness has been checked live, else
    "asserted" (the edge is reference data; a basic consistency check
    still runs: equal dimensions, distinct algebras).
    """
    from . import refdata
    from .catalog import catalog

    if dim not in (3, 4, 5):
        raise ValueError("jump graphs cover dimensions 3, 4 and 5")
    edges = []
    for source, target in refdata.JUMP_EDGES[dim]:
        witness = refdata.JUMP_WITNESSES.get((source, target))
        if witness is not None:
            cocycle, t0, matrix = witness
            d = deformation(catalog(source), [cocycle])
            if not verify_jump(d, t0, matrix, catalog(target)):
                raise AssertionError(f"bundled jump witness fails for "
                                     f"{source} -> {target}")
            status = "verified"
        else:
            a, b = catalog(source), catalog(target)
            if a.dim != b.dim or a == b:
                raise AssertionError(f"inconsistent jump edge {source} -> {target}")
            status = "asserted"
        edges.append((source, target, status))
    return edges
