"""Second cohomology with adjoint coefficients.

Z^2 = Ker(d: S^2 -> S^3), B^2 = Im(d: S^1 -> S^2), H^2 = Z^2/B^2, and
B^3 = Im(d: S^2 -> S^3) for obstruction tests.  Representatives of H^2
are chosen deterministically (rref-pivot completion of B^2 inside Z^2),
so a different but cohomologous list can be checked against them with
verify_representatives.  All per-algebra data is cached: repeated
queries against the same algebra reuse one factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import JJAlgebra
from .cochains import (SymCochain, cochain_space_dim, d1_matrix, d2_matrix,
                       differential)
from .linalg import SolveContext, Subspace, kernel_basis, quotient_data


@dataclass
class CohomologySummary:
    name: str
    dim_z2: int
    dim_b2: int
    dim_h2: int
    representatives: list


class _Cohomology:
    """Cached kernel/image data for one algebra."""

    def __init__(self, alg: JJAlgebra):
        self.alg = alg
        self.d1 = d1_matrix(alg)
        self.d2 = d2_matrix(alg)
        self.d1_solver = SolveContext(self.d1)
        self.d2_solver = SolveContext(self.d2)
        self.z2 = kernel_basis(self.d2)
        self.b2 = _image(self.d1)
        self.b3 = _image(self.d2)
        self.h2_reps, self.h2_reduce = quotient_data(self.b2, self.z2)

    def summary(self):
        reps = [SymCochain.from_vector(self.alg.dim, 2, v) for v in self.h2_reps]
        return CohomologySummary(self.alg.name, self.z2.dim, self.b2.dim,
                                 self.z2.dim - self.b2.dim, reps)


def _image(mat):
    return Subspace.from_spanning(mat.rows, [mat.column(j) for j in range(mat.cols)])


@lru_cache(maxsize=None)
def _data(alg: JJAlgebra) -> _Cohomology:
    return _Cohomology(alg)


def z2(alg: JJAlgebra) -> Subspace:
    return _data(alg).z2


def b2(alg: JJAlgebra) -> Subspace:
    return _data(alg).b2


def b3(alg: JJAlgebra) -> Subspace:
    return _data(alg).b3


def h2(alg: JJAlgebra) -> CohomologySummary:
    return _data(alg).summary()


def is_cocycle(alg: JJAlgebra, phi: SymCochain) -> bool:
    if phi.degree != 2:
        raise ValueError("cocycle test expects a degree-2 cochain")
    return differential(alg, phi).is_zero()


def is_coboundary2(alg: JJAlgebra, phi: SymCochain):
    """A degree-1 witness psi with d(psi) = phi, or None.

    The witness is the canonical solution (zeros in non-pivot
    coordinates), so repeated calls agree.
    """
    if phi.degree != 2:
        raise ValueError("expected a degree-2 cochain")
    x = _data(alg).d1_solver.solve(phi.to_vector())
    if x is None:
        return None
    return SymCochain.from_vector(alg.dim, 1, x)


def is_coboundary3(alg: JJAlgebra, omega: SymCochain):
    """A degree-2 witness chi with d(chi) = omega, or None."""
    if omega.degree != 3:
        raise ValueError("expected a degree-3 cochain")
    x = _data(alg).d2_solver.solve(omega.to_vector())
    if x is None:
        return None
    return SymCochain.from_vector(alg.dim, 2, x)


def class_coordinates(alg: JJAlgebra, phi: SymCochain):
    """Coordinates of the class of a cocycle in the canonical H^2 basis."""
    data = _data(alg)
    v = phi.to_vector()
    if not data.z2.contains(v):
        raise ValueError("not a cocycle")
    return data.h2_reduce(v)


def verify_representatives(alg: JJAlgebra, cochains) -> bool:
    """Do the given cochains represent a basis of H^2?

    True iff each is a cocycle, their classes are linearly independent
    modulo B^2, and their number equals dim H^2.
    """
    data = _data(alg)
    vectors = []
    for phi in cochains:
        if not is_cocycle(alg, phi):
            return False
        vectors.append(phi.to_vector())
    if len(vectors) != data.z2.dim - data.b2.dim:
        return False
    stacked = Subspace.from_spanning(cochain_space_dim(alg.dim, 2),
                                     [list(r) for r in data.b2.basis] + vectors)
    return stacked.dim == data.b2.dim + len(vectors)


def h2_table(names):
    """Rows (name, dim H^2) for the given catalog names."""
    from .catalog import catalog

    return [(name, h2(catalog(name)).dim_h2) for name in names]


def coboundary3_modulo(alg: JJAlgebra, omega: SymCochain, extra_cochains) -> bool:
    """Is omega in B^3 + span(extras)?  Decides obstruction sweeps exactly."""
    data = _data(alg)
    rows = [list(r) for r in data.b3.basis]
    rows += [chi.to_vector() for chi in extra_cochains]
    span = Subspace.from_spanning(cochain_space_dim(alg.dim, 3), rows)
    return span.contains(omega.to_vector())
