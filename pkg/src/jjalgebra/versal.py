"""Versal deformations: the universal infinitesimal object and its
second-order extension.

The universal infinitesimal deformation of an algebra with dim H^2 = n
lives over F[t_1..t_n]/m^2 and multiplies by mu_t = mu_0 + sum t_i mu_i,
the mu_i being cocycle representatives of an H^2 basis.  Extending to
order 2 over F[t_1..t_n]/I means finding corrections phi_ij with

    -2 sum d(phi_ij) t_i t_j  =  sum [mu_i, mu_j] t_i t_j   mod I,

so the ideal I is generated by the quadratics recording which bracket
classes survive modulo B^3, and the corrections absorb the coboundary
parts.  Collapsing the double sum onto unordered monomials puts
[mu_i,mu_i] on the diagonal and 2[mu_i,mu_j] off it; each correction
solves d(phi_ij) = -1/2 (bracket part with its class removed), with the
class removed along deterministic pivot lifts so the whole construction
is reproducible.

Massey cubes <f1,f2,f3> are decided in the same exact terms: defined
when all pairwise brackets are coboundaries, represented by
[w12,f3] + [w23,f1] + [w13,f2], trivial when that representative lies in
B^3 + sum_i [f_i, Z^2].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import JJAlgebra
from .cochains import SymCochain, bracket, differential, zero_cochain
from .cohomology import (_data, class_coordinates, is_coboundary2,
                         is_coboundary3, is_cocycle, coboundary3_modulo,
                         verify_representatives)
from .linalg import Matrix, Subspace, ZERO, frac
from .polys import (Poly, primitive_integer_scale, quadratic_monomials,
                    quadratic_to_vector, vector_to_quadratic)

ORDER1 = "m^2=0"
ORDER2 = "m^3<=I"


@dataclass(frozen=True)
class MultiParamDeformation:
    base: JJAlgebra
    first_order: tuple        # cocycles mu_1..mu_n, classes a basis of H^2
    corrections: dict = field(default_factory=dict)  # (i,j) i<=j -> SymCochain
    relations: tuple = ()     # canonical quadratic generators of I
    truncation: str = ORDER1

    @property
    def n_params(self):
        return len(self.first_order)


def _checked_first_order(alg, first_order):
    if first_order is None:
        first_order = tuple(_data(alg).summary().representatives)
    else:
        first_order = tuple(first_order)
        if not verify_representatives(alg, first_order):
            raise ValueError("given cocycles do not represent a basis of H^2")
    return first_order


def universal_infinitesimal(alg: JJAlgebra, first_order=None) -> MultiParamDeformation:
    """The order-1 versal object over F + H^2', one parameter per class."""
    return MultiParamDeformation(alg, _checked_first_order(alg, first_order),
                                 {}, (), ORDER1)


def _monomial_brackets(first_order):
    """Total bracket cochain per unordered monomial t_i t_j."""
    n = len(first_order)
    out = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            b = bracket(first_order[i - 1], first_order[j - 1])
            out[(i, j)] = b if i == j else 2 * b
    return out


def second_order_extension(alg: JJAlgebra, first_order=None) -> MultiParamDeformation:
    """Extend the universal infinitesimal deformation to order 2.

    Returns the relations ideal generators (canonical: rref over the
    quadratic-monomial basis, scaled to primitive integers) and the
    correction cochains, solved with the canonical minimal solve so the
    output is reproducible.
    """
    first_order = _checked_first_order(alg, first_order)
    data = _data(alg)
    n = len(first_order)
    brackets = _monomial_brackets(first_order)

    # classes modulo B^3, with deterministic pivot lifts
    lifts = []           # the first bracket cochain realizing each new class
    lift_residues = []   # canonical class vectors of the lifts
    coeffs = {}          # monomial -> coordinates of its class over the lifts
    for mono in sorted(brackets):
        res = data.b3.reduce(brackets[mono].to_vector())
        coords = _coordinates_in(lift_residues, res)
        if coords is None:
            lifts.append(brackets[mono])
            lift_residues.append(res)
            coords = [ZERO] * (len(lifts) - 1) + [Fraction(1)]
        coeffs[mono] = coords

    corrections = {}
    for mono in sorted(brackets):
        target = brackets[mono]
        for k, c in enumerate(coeffs[mono]):
            if c:
                target = target - c * lifts[k]
        if target.is_zero():
            continue
        chi = is_coboundary3(alg, Fraction(-1, 2) * target)
        if chi is None:
            raise AssertionError("class-free bracket part must be a coboundary")
        corrections[mono] = chi

    relations = []
    for k in range(len(lifts)):
        q = Poly.zero()
        for (i, j), coords in coeffs.items():
            c = coords[k] if k < len(coords) else ZERO
            if c:
                q = q + Poly({(i, j): c})
        relations.append(q)
    relations = _canonical_quadratics(relations, n)
    return MultiParamDeformation(alg, first_order, corrections,
                                 tuple(relations), ORDER2)


def _coordinates_in(rows, v):
    """Coordinates of v in the span of rows, or None."""
    if not rows:
        return [] if all(x == 0 for x in v) else None
    mat = Matrix(rows).transpose()
    from .linalg import solve

    return solve(mat, list(v))


def _canonical_quadratics(polys, n):
    vectors = [quadratic_to_vector(q, n) for q in polys if not q.is_zero()]
    span = Subspace.from_spanning(len(quadratic_monomials(n)), vectors)
    return [vector_to_quadratic(primitive_integer_scale(row), n)
            for row in span.basis]


def relations_span(m: MultiParamDeformation) -> Subspace:
    """The relation quadratics as a subspace of monomial coordinates."""
    n = m.n_params
    return Subspace.from_spanning(len(quadratic_monomials(n)),
                                  [quadratic_to_vector(q, n) for q in m.relations])


def versal_multiplication_table(m: MultiParamDeformation):
    """Products (e_a e_b)_v as polynomial coordinate vectors.

    Each entry is reduced modulo the relations ideal (and m^3, since only
    terms through degree 2 are carried): quadratic parts are eliminated
    against the rref relation pivots.  Returns {(a, b): [Poly, ...]}.
    """
    alg = m.base
    n = m.n_params
    span = relations_span(m)
    table = {}
    for a in range(1, alg.dim + 1):
        for b in range(a, alg.dim + 1):
            polys = [Poly.constant(c) if c else Poly.zero()
                     for c in alg.basis_product(a, b)]
            for i, mu in enumerate(m.first_order, start=1):
                for k, c in enumerate(mu.at_basis((a, b))):
                    if c:
                        polys[k] = polys[k] + Poly({(i,): c})
            for (i, j), chi in m.corrections.items():
                for k, c in enumerate(chi.at_basis((a, b))):
                    if c:
                        polys[k] = polys[k] + Poly({(i, j): c})
            table[(a, b)] = [_reduce_quadratic_part(p, span, n) for p in polys]
    return table


def _reduce_quadratic_part(p: Poly, span: Subspace, n):
    quad = {mo: c for mo, c in p.terms.items() if len(mo) == 2}
    rest = Poly({mo: c for mo, c in p.terms.items() if len(mo) != 2})
    if not quad:
        return rest
    v = quadratic_to_vector(Poly(quad), n)
    reduced = span.reduce(v)
    return rest + vector_to_quadratic(reduced, n)


@dataclass(frozen=True)
class MasseyCube:
    kind: str                 # "undefined" | "trivial" | "nontrivial"
    undefined_pairs: tuple = ()
    representative: SymCochain | None = None


def massey3(alg: JJAlgebra, f1, f2, f3, witnesses=None) -> MasseyCube:
    """The third-order Massey operation <f1, f2, f3>.

    Defined only when every pairwise bracket [f_a, f_b] is a coboundary;
    otherwise the offending pairs are reported.  Witnesses w_ab with
    d(w_ab) = [f_a, f_b] may be supplied as a mapping {(a,b): cochain}
    (checked exactly); missing ones are solved canonically.  The verdict
    is taken in H^3 modulo sum_i [f_i, H^2]: trivial iff the
    representative [w12,f3] + [w23,f1] + [w13,f2] lies in
    B^3 + span{[f_i, z] : z over a Z^2 basis}.
    """
    fs = {1: f1, 2: f2, 3: f3}
    for f in fs.values():
        if not is_cocycle(alg, f):
            raise ValueError("Massey cube arguments must be cocycles")
    witnesses = dict(witnesses or {})
    solved = {}
    missing = []
    for (a, b) in ((1, 2), (2, 3), (1, 3)):
        br = bracket(fs[a], fs[b])
        if (a, b) in witnesses:
            w = witnesses[(a, b)]
            if differential(alg, w) != br:
                raise ValueError(f"witness for pair {(a, b)} fails d(w) = [f{a}, f{b}]")
        else:
            w = is_coboundary3(alg, br)
            if w is None:
                missing.append((a, b))
                continue
        solved[(a, b)] = w
    if missing:
        return MasseyCube("undefined", undefined_pairs=tuple(missing))
    rep = (bracket(solved[(1, 2)], fs[3]) + bracket(solved[(2, 3)], fs[1])
           + bracket(solved[(1, 3)], fs[2]))
    data = _data(alg)
    sweep = []
    for f in fs.values():
        for zrow in data.z2.basis:
            sweep.append(bracket(f, SymCochain.from_vector(alg.dim, 2, zrow)))
    if coboundary3_modulo(alg, rep, sweep):
        return MasseyCube("trivial", representative=rep)
    return MasseyCube("nontrivial", representative=rep)


@dataclass(frozen=True)
class InfinitesimalWithBase:
    """An infinitesimal deformation over a finite base with r parameters,
    recorded by its order-1 cochains alpha_1..alpha_r (one per dual basis
    vector of the maximal ideal)."""

    base: JJAlgebra
    alphas: tuple

    @property
    def r(self):
        return len(self.alphas)


def alpha_cocycle(lam: InfinitesimalWithBase, xi: int) -> SymCochain:
    """The order-1 cochain attached to the xi-th dual basis vector.

    Raises when it is not a cocycle, which signals malformed input: for a
    genuine deformation these cochains are cocycles automatically.
    """
    if not 1 <= xi <= lam.r:
        raise ValueError("dual-basis index out of range")
    a = lam.alphas[xi - 1]
    if not is_cocycle(lam.base, a):
        raise ValueError("order-1 cochain is not a cocycle: not a deformation")
    return a


def infinitesimal_equivalent(lam: InfinitesimalWithBase,
                             lam2: InfinitesimalWithBase) -> bool:
    """Equivalence over the same base: all classes of the alphas agree."""
    if lam.base != lam2.base or lam.r != lam2.r:
        raise ValueError("deformations live over different bases")
    for i in range(1, lam.r + 1):
        c1 = class_coordinates(lam.base, alpha_cocycle(lam, i))
        c2 = class_coordinates(lam2.base, alpha_cocycle(lam2, i))
        if c1 != c2:
            return False
    return True


def pushout_order1(m: MultiParamDeformation, mapping: Matrix) -> InfinitesimalWithBase:
    """Push the order-1 universal object out along H^2' -> m_B.

    Column j of `mapping` holds the m_B-coordinates of the image of the
    j-th parameter, so alpha_i = sum_j mapping[i][j] mu_j.
    """
    if m.truncation != ORDER1:
        raise ValueError("push-out is defined on the order-1 object")
    if mapping.cols != m.n_params:
        raise ValueError("mapping has wrong number of columns")
    alphas = []
    for i in range(mapping.rows):
        total = zero_cochain(m.base.dim, 2)
        for j, mu in enumerate(m.first_order):
            c = mapping.data[i][j]
            if c:
                total = total + c * mu
        alphas.append(total)
    return InfinitesimalWithBase(m.base, tuple(alphas))


def representative_independence_check(alg: JJAlgebra, mu, mu2) -> bool:
    """Changing cocycle lifts gives an isomorphic infinitesimal object.

    mu and mu2 must lift the same classes (mu2_i - mu_i a coboundary with
    witness gamma_i; otherwise ValueError).  The automorphism
    rho(x, phi) = (x, phi + gamma(.)(x)) of J + Hom(H^2, J) is then
    checked to intertwine the two multiplications exactly.
    """
    mu = list(mu)
    mu2 = list(mu2)
    if len(mu) != len(mu2):
        raise ValueError("lift families have different lengths")
    gammas = []
    for a, b in zip(mu, mu2):
        g = is_coboundary2(alg, b - a)
        if g is None:
            raise ValueError("lifts are not cohomologous")
        gammas.append(g)

    m, n = alg.dim, len(mu)
    dim_big = m + n * m

    def multiply(lifts, u, v):
        x1, x2 = u[:m], v[:m]
        out = alg.product(x1, x2) + [ZERO] * (n * m)
        for i in range(n):
            blk = m + i * m
            psi = lifts[i].evaluate(x1, x2)
            f2 = v[blk:blk + m]
            f1 = u[blk:blk + m]
            for k, c in enumerate(alg.product(x1, f2)):
                psi[k] += c
            for k, c in enumerate(alg.product(x2, f1)):
                psi[k] += c
            for k, c in enumerate(psi):
                out[blk + k] = c
        return out

    def rho(u):
        out = list(u)
        x = u[:m]
        for i in range(n):
            blk = m + i * m
            g = gammas[i].evaluate(x)
            for k, c in enumerate(g):
                out[blk + k] += c
        return out

    basis = [[Fraction(1) if t == s else ZERO for t in range(dim_big)]
             for s in range(dim_big)]
    for s in range(dim_big):
        for t in range(s, dim_big):
            lhs = rho(multiply(mu, basis[s], basis[t]))
            rhs = multiply(mu2, rho(basis[s]), rho(basis[t]))
            if lhs != rhs:
                return False
    return True
