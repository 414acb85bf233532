"""Exact rational computations with Jacobi-Jordan algebras.

Structure constants, the symmetric cochain complex and its graded
bracket, second cohomology, formal one-parameter deformations with
obstruction analysis, versal deformation bases, and symplectic /
pseudo-euclidean structure theory with double extensions.
"""

from .algebra import (JJAlgebra, Representation, adjoint_rep, annihilator,
                      apply_basis_change, direct_sum, fingerprint, heisenberg,
                      is_isomorphism, is_leibniz, left_mult, square_subspace,
                      trivial_algebra, verify_jj, verify_representation)
from .catalog import catalog, catalog_names, is_indecomposable, normalize_name
from .cochains import (SymCochain, basis_cochain, bracket, compose,
                       cochain_space_dim, differential, extended_differential,
                       format_cochain, mult_cochain, zero_cochain)
from .cohomology import (CohomologySummary, b2, b3, class_coordinates, h2,
                         h2_table, is_coboundary2, is_coboundary3, is_cocycle,
                         verify_representatives, z2)
from .linalg import Matrix, Subspace, kernel_basis, quotient_data, rank, rref, solve

__all__ = [name for name in dir() if not name.startswith("_")]
