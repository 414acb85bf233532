"""Symmetric multilinear cochains and the graded composition bracket.

S^n(J,J) is the space of fully symmetric n-linear maps J x ... x J -> J,
supported here for n = 1..4.  A cochain is stored sparsely over the basis
e^{i..j}_k: the symmetric indicator sending the basis tuple with index
multiset {i..j} to e_k.  Keys are nondecreasing index tuples, so each
multiset appears exactly once.

The composition (phi psi)(x_1..x_{p+q-1}) sums phi over all choices of
p-1 of the arguments, feeding psi the rest; the bracket is
[phi,psi] = phi psi - (-1)^{(p-1)(q-1)} psi phi.  The graded degree of a
degree-n cochain is n-1.  For the multiplication cochain phi0 of an
algebra, d(phi) = [phi0, phi] on graded degree >= 1; that identity is the
basis for extending the differential to S^3.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb

from .algebra import JJAlgebra
from .linalg import Matrix, ZERO, frac

MAX_DEGREE = 4


@lru_cache(maxsize=None)
def multisets(m, n):
    """Nondecreasing n-tuples over 1..m, in lexicographic order."""
    return tuple(combinations_with_replacement(range(1, m + 1), n))


def cochain_space_dim(m, n):
    """dim S^n = m * C(m+n-1, n)."""
    return m * comb(m + n - 1, n)


@lru_cache(maxsize=None)
def basis_keys(m, n):
    """Canonical (multiset, target) enumeration of the S^n basis."""
    return tuple((args, k) for args in multisets(m, n) for k in range(1, m + 1))


@lru_cache(maxsize=None)
def basis_index(m, n):
    return {key: idx for idx, key in enumerate(basis_keys(m, n))}


class SymCochain:
    """A symmetric n-linear map, sparse over the e^{i..j}_k basis."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim, degree, terms=None):
        if not 1 <= degree <= MAX_DEGREE:
            raise ValueError(f"cochain degree {degree} outside supported range 1..4")
        clean = {}
        for (args, k), c in (terms or {}).items():
            args = tuple(sorted(args))
            if len(args) != degree:
                raise ValueError("term arity disagrees with cochain degree")
            if args and not (1 <= args[0] and args[-1] <= dim):
                raise ValueError("argument index out of range")
            if not 1 <= k <= dim:
                raise ValueError("target index out of range")
            c = frac(c)
            if c != 0:
                key = (args, k)
                clean[key] = clean.get(key, ZERO) + c
        self.dim = dim
        self.degree = degree
        self.terms = {k: c for k, c in clean.items() if c != 0}

    @property
    def graded_degree(self):
        return self.degree - 1

    def is_zero(self):
        return not self.terms

    def at_basis(self, args):
        """Value on a basis tuple, as a coefficient list."""
        key = tuple(sorted(args))
        out = [ZERO] * self.dim
        for k in range(1, self.dim + 1):
            c = self.terms.get((key, k))
            if c:
                out[k - 1] = c
        return out

    def evaluate(self, *vectors):
        """Full multilinear symmetric evaluation on coordinate vectors."""
        if len(vectors) != self.degree:
            raise ValueError(f"expected {self.degree} arguments")
        for v in vectors:
            if len(v) != self.dim:
                raise ValueError("argument vector has wrong length")
        out = [ZERO] * self.dim
        for (args, k), c in self.terms.items():
            s = ZERO
            for perm in set(permutations(args)):
                term = c
                for v, idx in zip(vectors, perm):
                    term *= v[idx - 1]
                    if term == 0:
                        break
                s += term
            if s:
                out[k - 1] += s
        return out

    def to_vector(self):
        index = basis_index(self.dim, self.degree)
        v = [ZERO] * len(index)
        for key, c in self.terms.items():
            v[index[key]] = c
        return v

    @classmethod
    def from_vector(cls, dim, degree, vector):
        keys = basis_keys(dim, degree)
        if len(vector) != len(keys):
            raise ValueError("coordinate vector has wrong length")
        return cls(dim, degree, {key: c for key, c in zip(keys, vector) if c})

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, ZERO) + c
        return SymCochain(self.dim, self.degree, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymCochain(self.dim, self.degree,
                          {key: -c for key, c in self.terms.items()})

    def __mul__(self, scalar):
        c = frac(scalar)
        return SymCochain(self.dim, self.degree,
                          {key: c * v for key, v in self.terms.items()})

    __rmul__ = __mul__

    def _check_compatible(self, other):
        if not isinstance(other, SymCochain):
            raise TypeError("expected a SymCochain")
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("cochains live in different spaces")

    def __eq__(self, other):
        return (isinstance(other, SymCochain) and self.dim == other.dim
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"SymCochain({format_cochain(self)})"


def zero_cochain(dim, degree) -> SymCochain:
    return SymCochain(dim, degree, {})


def basis_cochain(dim, args, k) -> SymCochain:
    """The indicator cochain e^{args}_k."""
    return SymCochain(dim, len(tuple(args)), {(tuple(args), k): Fraction(1)})


def format_cochain(phi: SymCochain) -> str:
    if phi.is_zero():
        return "0"
    parts = []
    for (args, k) in sorted(phi.terms):
        c = phi.terms[(args, k)]
        sym = "e^{%s}_%d" % (",".join(map(str, args)), k)
        if c == 1:
            piece = sym
        elif c == -1:
            piece = "-" + sym
        else:
            piece = f"{c}*{sym}"
        if parts and not piece.startswith("-"):
            parts.append("+ " + piece)
        elif parts:
            parts.append("- " + piece[1:])
        else:
            parts.append(piece)
    return " ".join(parts)


def mult_cochain(alg: JJAlgebra) -> SymCochain:
    """The degree-2 cochain phi0 given by the multiplication itself."""
    terms = {}
    for (i, j), coeffs in alg.products:
        for k, c in enumerate(coeffs):
            if c:
                terms[((i, j), k + 1)] = c
    return SymCochain(alg.dim, 2, terms)


def compose(phi: SymCochain, psi: SymCochain) -> SymCochain:
    """The insertion composition phi psi of degree p+q-1.

    Computed term by term: a phi-term e^A_a composes with a psi-term
    e^B_b exactly when b occurs in A; the result lands on the multiset
    M = (A - {b}) + B with the binomial weight counting which of the
    p+q-1 arguments are routed to phi directly.
    """
    if phi.dim != psi.dim:
        raise ValueError("cochains live over different algebras")
    p, q = phi.degree, psi.degree
    n = p + q - 1
    if n > MAX_DEGREE:
        raise ValueError(f"composition degree {n} exceeds supported range")
    acc = {}
    for (A, a), ca in phi.terms.items():
        for (B, b), cb in psi.terms.items():
            if b not in A:
                continue
            R = list(A)
            R.remove(b)
            M = tuple(sorted(R + list(B)))
            weight = 1
            seen = set()
            for x in M:
                if x in seen:
                    continue
                seen.add(x)
                weight *= comb(M.count(x), R.count(x))
            key = (M, a)
            acc[key] = acc.get(key, ZERO) + ca * cb * weight
    return SymCochain(phi.dim, n, acc)


def bracket(phi: SymCochain, psi: SymCochain) -> SymCochain:
    """[phi, psi] = phi psi - (-1)^{(p-1)(q-1)} psi phi."""
    sign = (-1) ** (phi.graded_degree * psi.graded_degree)
    left = compose(phi, psi)
    right = compose(psi, phi)
    return left - right if sign > 0 else left + right


def differential(alg: JJAlgebra, phi: SymCochain) -> SymCochain:
    """The complex differential S^1 -> S^2 -> S^3.

    d(phi)(x,y)   = phi(xy) - x phi(y) - y phi(x)
    d(phi)(x,y,z) = phi(x,yz) + phi(y,zx) + phi(z,xy)
                    + x phi(y,z) + y phi(z,x) + z phi(x,y)

    Degree 3 is delegated to extended_differential.
    """
    if phi.dim != alg.dim:
        raise ValueError("cochain dimension disagrees with the algebra")
    if phi.degree == 1:
        return _differential1(alg, phi)
    if phi.degree == 2:
        return _differential2(alg, phi)
    if phi.degree == 3:
        raise ValueError("use extended_differential for degree-3 cochains")
    raise ValueError(f"no differential out of degree {phi.degree}")


def _apply1(phi, vector):
    """phi(v) for a degree-1 cochain."""
    out = [ZERO] * phi.dim
    for c, i in ((c, i) for i, c in enumerate(vector) if c):
        w = phi.at_basis((i + 1,))
        for k, a in enumerate(w):
            if a:
                out[k] += c * a
    return out


def _apply2_basis(phi, i, vector):
    """phi(e_i, v) for a degree-2 cochain."""
    out = [ZERO] * phi.dim
    for l, c in enumerate(vector):
        if c:
            w = phi.at_basis((i, l + 1))
            for k, a in enumerate(w):
                if a:
                    out[k] += c * a
    return out


def _differential1(alg, phi):
    m = alg.dim
    terms = {}
    for (i, j) in multisets(m, 2):
        v = _apply1(phi, alg.basis_product(i, j))
        for t, c in enumerate(alg.product_basis(i, phi.at_basis((j,)))):
            v[t] -= c
        for t, c in enumerate(alg.product_basis(j, phi.at_basis((i,)))):
            v[t] -= c
        for k, c in enumerate(v):
            if c:
                terms[((i, j), k + 1)] = c
    return SymCochain(m, 2, terms)


def _differential2(alg, phi):
    m = alg.dim
    terms = {}
    for (i, j, k) in multisets(m, 3):
        v = _apply2_basis(phi, i, alg.basis_product(j, k))
        for t, c in enumerate(_apply2_basis(phi, j, alg.basis_product(k, i))):
            v[t] += c
        for t, c in enumerate(_apply2_basis(phi, k, alg.basis_product(i, j))):
            v[t] += c
        for t, c in enumerate(alg.product_basis(i, phi.at_basis((j, k)))):
            v[t] += c
        for t, c in enumerate(alg.product_basis(j, phi.at_basis((k, i)))):
            v[t] += c
        for t, c in enumerate(alg.product_basis(k, phi.at_basis((i, j)))):
            v[t] += c
        for t, c in enumerate(v):
            if c:
                terms[((i, j, k), t + 1)] = c
    return SymCochain(m, 3, terms)


def extended_differential(alg: JJAlgebra, phi: SymCochain) -> SymCochain:
    """d on S^3, defined as [phi0, .] so that d of d vanishes on S^2.

    This matches the lower differentials (where d = [phi0, .] is a
    theorem, not a definition) and is used only for consistency checks,
    never to build quotient spaces.
    """
    if phi.degree != 3:
        raise ValueError("extended differential is defined on degree 3")
    return bracket(mult_cochain(alg), phi)


@lru_cache(maxsize=None)
def d1_matrix(alg: JJAlgebra) -> Matrix:
    """Matrix of d: S^1 -> S^2 over the canonical bases."""
    cols = [differential(alg, basis_cochain(alg.dim, args, k)).to_vector()
            for (args, k) in basis_keys(alg.dim, 1)]
    return Matrix.from_columns(cols, rows=cochain_space_dim(alg.dim, 2))


@lru_cache(maxsize=None)
def d2_matrix(alg: JJAlgebra) -> Matrix:
    """Matrix of d: S^2 -> S^3 over the canonical bases."""
    cols = [differential(alg, basis_cochain(alg.dim, args, k)).to_vector()
            for (args, k) in basis_keys(alg.dim, 2)]
    return Matrix.from_columns(cols, rows=cochain_space_dim(alg.dim, 3))
