"""Small exact multivariate polynomials with Fraction coefficients.

A monomial is a sorted tuple of 1-based variable indices, so t1^2*t3 is
stored as (1, 1, 3) and the empty tuple is the constant monomial.  This
is just enough arithmetic for two jobs: expanding the determinant of a
matrix of linear forms (deciding nondegenerate-form existence), and the
quadratic relation ideals cutting out deformation base spaces.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import ZERO, frac


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = frac(c)
            if c != 0:
                clean[tuple(sorted(mono))] = c
        self.terms = clean

    @classmethod
    def constant(cls, c):
        return cls({(): frac(c)})

    @classmethod
    def variable(cls, i):
        return cls({(i,): Fraction(1)})

    @classmethod
    def zero(cls):
        return cls({})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def variables(self):
        out = set()
        for m in self.terms:
            out.update(m)
        return out

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, ZERO) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly.constant(-frac(other)))

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = frac(other)
            return Poly({m: v * c for m, v in self.terms.items()})
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                terms[m] = terms.get(m, ZERO) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def substitute(self, var, value):
        """Plug a rational value into one variable; a Poly in the rest."""
        value = frac(value)
        terms = {}
        for m, c in self.terms.items():
            k = m.count(var)
            rest = tuple(x for x in m if x != var)
            c2 = c * value**k
            if c2 != 0:
                terms[rest] = terms.get(rest, ZERO) + c2
        return Poly(terms)

    def evaluate(self, point):
        """point maps variable index -> rational."""
        total = ZERO
        for m, c in self.terms.items():
            for i in m:
                c = c * frac(point[i])
            total += c
        return total

    def degree_in(self, var):
        return max((m.count(var) for m in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_poly(self)

    __repr__ = __str__


def _format_monomial(mono, var="t"):
    if not mono:
        return ""
    parts = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        power = j - i
        parts.append(f"{var}{mono[i]}" + (f"^{power}" if power > 1 else ""))
        i = j
    return "*".join(parts)


def _format_coeff(c):
    return str(c)


def format_poly(p: Poly, var="t") -> str:
    if p.is_zero():
        return "0"
    out = []
    for mono in sorted(p.terms, key=lambda m: (len(m), m)):
        c = p.terms[mono]
        ms = _format_monomial(mono, var)
        if not ms:
            piece = _format_coeff(c)
        elif c == 1:
            piece = ms
        elif c == -1:
            piece = "-" + ms
        else:
            piece = f"{_format_coeff(c)}*{ms}"
        if out and not piece.startswith("-"):
            out.append("+ " + piece)
        elif out:
            out.append("- " + piece[1:])
        else:
            out.append(piece)
    return " ".join(out)


def quadratic_monomials(n):
    """All degree-2 monomials t_i t_j, i <= j, in index order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def quadratic_to_vector(p: Poly, n):
    """Coordinates of a homogeneous quadratic over the monomial basis."""
    monos = quadratic_monomials(n)
    index = {m: k for k, m in enumerate(monos)}
    v = [ZERO] * len(monos)
    for m, c in p.terms.items():
        if len(m) != 2:
            raise ValueError("not a homogeneous quadratic")
        v[index[m]] = c
    return v


def vector_to_quadratic(v, n) -> Poly:
    monos = quadratic_monomials(n)
    return Poly({m: c for m, c in zip(monos, v)})


def primitive_integer_scale(v):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    from math import gcd

    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return [Fraction(x) for x in ints]


def det_poly(entries):
    """Determinant of a square matrix of Poly entries, by cofactor expansion."""
    n = len(entries)
    if n == 0:
        return Poly.constant(1)
    if n == 1:
        return entries[0][0]
    total = Poly.zero()
    sign = 1
    for j in range(n):
        e = entries[0][j]
        if not e.is_zero():
            minor = [[entries[r][c] for c in range(n) if c != j] for r in range(1, n)]
            total = total + (e * det_poly(minor)) * sign
        sign = -sign
    return total
