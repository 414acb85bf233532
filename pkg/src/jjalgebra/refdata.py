"""Curated reference data for the catalog algebras.

Three data sets, all machine-checked by the test suite rather than
trusted: representative 2-cocycles spanning H^2 for every nontrivial
catalog algebra, the subsets whose deformations extend past every
computed obstruction (each of these is a jump deformation), and the
jump-deformation graphs in dimensions 3-5.  Graph edges carry a rational
witness where one exists over Q: a cocycle, a parameter value t0 and a
basis change realizing target ~ specialization; edges whose witnesses
need a genuine field extension (for instance a square root of -1) ship
as "asserted".
"""

from fractions import Fraction

from .cochains import basis_cochain
from .linalg import Matrix


def _maker(m):
    def e(i, j, k):
        return basis_cochain(m, (i, j), k)

    return e


def _representatives():
    R = {"J_1_2": []}

    e = _maker(3)
    R["J_1_2+F"] = [e(1, 3, 1) - 2 * e(2, 3, 2), e(1, 3, 3), e(3, 3, 2), e(3, 3, 3)]
    R["J_1_3"] = [e(1, 3, 1) - 2 * e(2, 3, 2) + 2 * e(3, 3, 3),
                  e(1, 3, 3) - 2 * e(3, 3, 1)]

    e = _maker(4)
    R["J_1_2+F2"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2), e(1, 4, 1) - 2 * e(2, 4, 2),
        e(1, 3, 3), e(1, 3, 4), e(1, 4, 3), e(1, 4, 4),
        e(3, 3, 2), e(3, 3, 3), e(3, 3, 4), e(3, 4, 2), e(3, 4, 3), e(3, 4, 4),
        e(4, 4, 2), e(4, 4, 3), e(4, 4, 4),
    ]
    R["J_1_3+F"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2) + 2 * e(3, 3, 3),
        e(1, 4, 1) - 2 * e(2, 4, 2) + e(3, 4, 3),
        e(1, 3, 3) - 2 * e(3, 3, 1),
        e(1, 4, 3) - e(3, 4, 1),
        e(1, 1, 4), e(1, 3, 4), e(1, 4, 4), e(3, 4, 4), e(4, 4, 2), e(4, 4, 4),
    ]
    R["J_1_2^2"] = [e(1, 3, 1) - 2 * e(2, 3, 2), e(1, 3, 3) - 2 * e(1, 4, 4)]
    R["J_1_4"] = [
        e(1, 4, 2) - 2 * e(2, 3, 2), e(1, 4, 4) - 2 * e(2, 3, 4),
        2 * e(3, 3, 3) - e(3, 4, 4), e(3, 3, 2),
    ]
    R["J_2_4"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2) + 2 * e(3, 4, 4),
        e(1, 4, 1) - 2 * e(2, 4, 2) + 4 * e(4, 4, 4),
        e(1, 3, 3) - e(3, 4, 1),
        e(1, 3, 4) - 2 * e(3, 3, 1),
        e(1, 4, 3) - 2 * e(4, 4, 1),
        e(1, 4, 4) - e(3, 4, 1),
        2 * e(3, 3, 3) - e(3, 4, 4),
        e(3, 4, 3) - 2 * e(4, 4, 4),
    ]

    e = _maker(5)
    R["J_1_2+F3"] = (
        [e(1, 4, 1) - 2 * e(2, 4, 2), e(1, 3, 1) - 2 * e(2, 3, 2),
         e(1, 5, 1) - 2 * e(2, 5, 2)]
        + [e(1, i1, i2) for i1 in (3, 4, 5) for i2 in (3, 4, 5)]
        + [e(j1, j2, j) for j1 in (3, 4, 5) for j2 in (3, 4, 5) if j1 <= j2
           for j in (2, 3, 4, 5)]
    )
    R["J_1_3+F2"] = (
        [e(1, 3, 1) - 2 * e(2, 3, 2) + 2 * e(3, 3, 3),
         e(1, 4, 1) - 2 * e(2, 4, 2) + e(3, 4, 3),
         e(1, 5, 1) - 2 * e(2, 5, 2) + e(3, 5, 3),
         e(1, 3, 3) - 2 * e(3, 3, 1),
         e(1, 4, 3) - e(3, 4, 1),
         e(1, 5, 3) - e(3, 5, 1)]
        + [e(1, 1, j1) for j1 in (4, 5)]
        + [e(1, 3, j1) for j1 in (4, 5)]
        + [e(1, j1, j2) for j1 in (4, 5) for j2 in (4, 5)]
        + [e(3, j1, j2) for j1 in (4, 5) for j2 in (4, 5)]
        + [e(j1, j2, i) for (j1, j2) in ((4, 4), (4, 5), (5, 5))
           for i in (2, 4, 5)]
    )
    R["J_1_2^2+F"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2), e(1, 3, 3) - 2 * e(1, 4, 4),
        e(1, 5, 1) - 2 * e(2, 5, 2), e(3, 5, 3) - 2 * e(4, 5, 4),
        e(1, 3, 5), e(1, 5, 4), e(1, 5, 5), e(3, 5, 2), e(3, 5, 5),
        e(5, 5, 2), e(5, 5, 4), e(5, 5, 5),
    ]
    R["J_1_4+F"] = [
        e(1, 5, 1) - 2 * e(2, 5, 2) - e(4, 5, 4),
        e(1, 4, 2) - 2 * e(2, 3, 2),
        e(1, 4, 4) - 2 * e(2, 3, 4),
        e(1, 4, 5) - 2 * e(2, 3, 5),
        e(1, 5, 3) - 2 * e(2, 5, 4),
        e(3, 4, 4) - 2 * e(3, 3, 3),
        e(3, 5, 3) - e(4, 5, 4),
        e(1, 5, 2), e(1, 5, 5), e(3, 3, 2), e(3, 3, 5), e(3, 5, 2),
        e(3, 5, 5), e(5, 5, 2), e(5, 5, 4), e(5, 5, 5),
    ]
    R["J_2_4+F"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2) + 2 * e(3, 4, 4),
        e(1, 4, 1) - 2 * e(2, 4, 2) + 4 * e(4, 4, 4),
        e(1, 5, 1) - 2 * e(2, 5, 2) + 2 * e(4, 5, 4),
        e(1, 3, 3) - e(3, 4, 1),
        e(1, 3, 4) - 2 * e(3, 3, 1),
        e(1, 4, 3) - 2 * e(4, 4, 1),
        e(1, 4, 4) - e(3, 4, 1),
        e(1, 5, 3) - e(4, 5, 1),
        e(1, 5, 4) - e(3, 5, 1),
        e(3, 4, 4) - 2 * e(3, 3, 3),
        e(3, 4, 3) - 2 * e(4, 4, 4),
        e(3, 5, 3) - e(4, 5, 4),
        e(1, 1, 5), e(1, 3, 5), e(1, 4, 5), e(1, 5, 5), e(3, 3, 5),
        e(3, 5, 5), e(4, 4, 5), e(4, 5, 5), e(5, 5, 2), e(5, 5, 5),
    ]
    R["J_1_2+J_1_3"] = [
        e(1, 3, 3) - 2 * e(1, 4, 4) + e(1, 5, 5),
        e(3, 5, 3) - 2 * e(4, 5, 4) + 2 * e(5, 5, 5),
        e(1, 3, 1) - 2 * e(2, 3, 2),
        e(1, 3, 5) - e(1, 5, 3),
        e(1, 5, 1) - 2 * e(2, 5, 2),
        e(3, 5, 5) - 2 * e(5, 5, 3),
        e(3, 3, 2), e(3, 5, 2),
    ]
    R["J_1_5"] = [
        e(3, 5, 2) - 2 * e(1, 4, 2), e(3, 5, 4) - 2 * e(1, 4, 4),
        e(3, 5, 5) - 2 * e(1, 4, 5), e(1, 5, 2) - 2 * e(2, 3, 2),
        e(1, 5, 4) - 2 * e(2, 3, 4), e(1, 5, 5) - 2 * e(2, 3, 5),
    ]
    R["J_2_5"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2) - e(3, 4, 4),
        e(1, 3, 3) - 2 * e(1, 5, 5) + 4 * e(2, 4, 5),
        e(1, 4, 1) - 2 * e(2, 4, 2) - 2 * e(4, 4, 4),
        e(3, 4, 3) + 4 * e(4, 4, 4) - 2 * e(4, 5, 5),
        e(1, 3, 4) - 2 * e(2, 3, 5),
        e(1, 4, 3) - e(3, 4, 4),
        e(1, 4, 4) - 2 * e(2, 4, 5),
        e(1, 4, 2), e(3, 4, 2), e(4, 4, 2),
    ]
    R["J_3_5"] = [
        (e(1, 3, 1) - 2 * e(2, 3, 2) + 2 * e(3, 4, 1) - 2 * e(3, 4, 3)
         - e(3, 4, 4) - 2 * e(3, 5, 2) - 12 * e(4, 4, 4) + 6 * e(4, 5, 5)),
        (e(1, 3, 3) + 2 * e(3, 3, 1) - 2 * e(3, 3, 4) - 3 * e(3, 4, 4)
         + 2 * e(3, 5, 5)),
        (e(1, 5, 2) - 2 * e(2, 4, 2) - e(3, 3, 1) - e(3, 4, 1) + e(3, 4, 3)
         + 2 * e(4, 4, 4) - e(4, 5, 5)),
        (e(3, 3, 3) - e(3, 4, 1) + e(3, 4, 3) + e(3, 4, 4) + e(3, 5, 2)
         - e(3, 5, 5) + 6 * e(4, 4, 4) - 3 * e(4, 5, 5)),
        e(1, 3, 4) - 2 * e(2, 3, 5) - 2 * e(3, 3, 4),
        (e(1, 5, 5) - 2 * e(2, 4, 5) - e(3, 3, 4) - 2 * e(3, 4, 4)
         + e(3, 5, 5)),
        e(4, 4, 2), e(4, 4, 5),
    ]
    R["J_4_5"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2) + e(3, 5, 5) - 2 * e(5, 5, 3),
        e(1, 3, 3) - 2 * e(1, 4, 4) + e(1, 5, 5) + 2 * e(5, 5, 1),
        e(1, 3, 5) - e(1, 5, 3) + e(3, 5, 1),
        e(1, 5, 1) - 2 * e(2, 5, 2) + e(3, 5, 3) - 2 * e(4, 5, 4) + 2 * e(5, 5, 5),
    ]
    R["J_5_5"] = [
        (e(1, 3, 1) - 2 * e(2, 3, 2) - 2 * e(3, 5, 3) - 4 * e(4, 5, 2)
         + 4 * e(4, 5, 4) - 4 * e(5, 5, 5)),
        e(1, 5, 1) - 2 * e(2, 5, 2) + e(3, 5, 3) - 2 * e(4, 5, 4) + 2 * e(5, 5, 5),
        e(1, 3, 3) - 2 * e(1, 4, 4) + e(1, 5, 5) + 2 * e(3, 5, 1),
        e(1, 3, 5) + 2 * e(1, 4, 2) - 2 * e(1, 4, 4) + 2 * e(1, 5, 5),
        e(3, 5, 5) + 2 * e(4, 5, 2) - 2 * e(4, 5, 4) + 4 * e(5, 5, 5),
        e(5, 5, 2),
    ]
    R["J_6_5"] = [
        e(1, 4, 1) - 2 * e(2, 4, 2) + 2 * e(4, 4, 4) - e(4, 5, 5),
        e(1, 4, 3) - 2 * e(2, 4, 5) + 4 * e(4, 4, 3),
        e(1, 4, 4) - 2 * e(2, 4, 2) + 4 * e(4, 4, 4),
        e(1, 5, 2) - 2 * e(2, 3, 2) + 2 * e(4, 5, 2),
        e(1, 5, 5) - 2 * e(2, 3, 5) + 2 * e(4, 5, 5),
        e(3, 5, 5) - 2 * e(3, 3, 3),
        e(3, 5, 2) - 2 * e(3, 3, 4),
        e(3, 4, 3) - e(4, 5, 5),
        e(3, 4, 4) - e(4, 5, 2),
        e(3, 3, 2), e(3, 3, 5), e(4, 4, 2), e(4, 4, 5),
    ]
    R["J_7_5"] = [
        e(1, 3, 1) - 2 * e(2, 3, 2) + 2 * e(3, 3, 3) + 2 * e(4, 5, 3),
        e(1, 4, 1) - 2 * e(2, 4, 2) + e(3, 4, 3) + 2 * e(4, 5, 5),
        e(1, 5, 1) - 2 * e(2, 5, 2) + e(3, 5, 3) + 4 * e(5, 5, 5),
        e(1, 3, 4) - e(3, 5, 1),
        e(1, 3, 5) - e(3, 4, 1),
        e(1, 4, 3) - e(3, 4, 1),
        e(1, 4, 4) - e(4, 5, 1),
        e(1, 5, 3) - e(3, 5, 1),
        e(1, 5, 5) - e(4, 5, 1),
        e(3, 4, 4) - e(4, 5, 3),
        e(3, 5, 5) - e(4, 5, 3),
        e(1, 3, 3) - 2 * e(3, 3, 1),
        e(1, 4, 5) - 2 * e(4, 4, 1),
        e(1, 5, 4) - 2 * e(5, 5, 1),
        e(3, 5, 3) - 2 * e(3, 3, 4),
        e(3, 4, 3) - 2 * e(3, 3, 5),
        e(3, 4, 5) - 2 * e(4, 4, 3),
        e(3, 5, 4) - 2 * e(5, 5, 3),
        e(4, 5, 5) - 2 * e(4, 4, 4),
        e(4, 5, 4) - 2 * e(5, 5, 5),
    ]
    R["J_8_5"] = [e(3, 4, 3) - 2 * e(4, 4, 4) + e(4, 5, 5) + 2 * e(5, 5, 3)]
    return R


def _extendible():
    X = {}

    e = _maker(3)
    X["J_1_2+F"] = [e(3, 3, 2)]
    X["J_1_3"] = []

    e = _maker(4)
    X["J_1_2+F2"] = [e(1, 3, 4), e(1, 4, 3), e(3, 3, 2), e(3, 3, 4),
                     e(3, 4, 2), e(4, 4, 2), e(4, 4, 3)]
    X["J_1_3+F"] = [e(1, 1, 4), e(1, 3, 4), e(4, 4, 2)]
    X["J_1_4"] = [e(3, 3, 2)]
    X["J_1_2^2"] = []
    X["J_2_4"] = []

    e = _maker(5)
    X["J_1_2+F3"] = (
        [e(1, i1, i2) for i1 in (3, 4, 5) for i2 in (3, 4, 5) if i1 != i2]
        + [e(j1, j2, j) for j1 in (3, 4, 5) for j2 in (3, 4, 5) if j1 <= j2
           for j in (2, 3, 4, 5) if j not in (j1, j2)]
    )
    X["J_1_3+F2"] = (
        [e(1, 1, j1) for j1 in (4, 5)]
        + [e(1, 3, j1) for j1 in (4, 5)]
        + [e(1, 4, 5), e(1, 5, 4), e(3, 4, 5), e(3, 5, 4)]
        + [e(4, 4, 2), e(5, 5, 2), e(4, 4, 5), e(5, 5, 4), e(4, 5, 2)]
    )
    X["J_1_2^2+F"] = [e(1, 3, 5), e(1, 5, 4), e(3, 5, 2), e(5, 5, 2), e(5, 5, 4)]
    X["J_1_4+F"] = [e(1, 4, 5) - 2 * e(2, 3, 5), e(1, 5, 3) - 2 * e(2, 5, 4),
                    e(1, 5, 2), e(3, 3, 2), e(3, 3, 5), e(3, 5, 2),
                    e(5, 5, 2), e(5, 5, 4)]
    X["J_2_4+F"] = [e(1, 1, 5), e(1, 3, 5), e(1, 4, 5), e(3, 3, 5),
                    e(4, 4, 5), e(5, 5, 2)]
    X["J_1_2+J_1_3"] = [e(3, 3, 2), e(3, 5, 2)]
    X["J_1_5"] = [e(3, 5, 2) - 2 * e(1, 4, 2), e(1, 5, 4) - 2 * e(2, 3, 4)]
    X["J_2_5"] = [e(1, 3, 4) - 2 * e(2, 3, 5), e(1, 4, 2), e(3, 4, 2), e(4, 4, 2)]
    X["J_3_5"] = [e(1, 3, 4) - 2 * e(2, 3, 5) - 2 * e(3, 3, 4),
                  e(4, 4, 2), e(4, 4, 5)]
    X["J_4_5"] = []
    X["J_5_5"] = [e(5, 5, 2)]
    X["J_6_5"] = [e(1, 4, 3) - 2 * e(2, 4, 5) + 4 * e(4, 4, 3),
                  e(3, 5, 2) - 2 * e(3, 3, 4),
                  e(3, 3, 2), e(3, 3, 5), e(4, 4, 2), e(4, 4, 5)]
    X["J_7_5"] = []
    X["J_8_5"] = []
    X["J_1_2"] = []
    return X


REPRESENTATIVE_COCYCLES = _representatives()
EXTENDIBLE_COCYCLES = _extendible()


JUMP_EDGES = {
    3: [("J_1_2+F", "J_1_3")],
    4: [
        ("J_1_2+F2", "J_1_4"),
        ("J_1_2+F2", "J_1_3+F"),
        ("J_1_4", "J_1_2^2"),
        ("J_1_3+F", "J_1_2^2"),
        ("J_1_3+F", "J_2_4"),
    ],
    5: [
        ("J_1_2+F3", "J_1_4+F"),
        ("J_1_2+F3", "J_1_3+F2"),
        ("J_1_4+F", "J_1_2^2+F"),
        ("J_1_4+F", "J_6_5"),
        ("J_1_3+F2", "J_1_2^2+F"),
        ("J_1_3+F2", "J_2_4+F"),
        ("J_1_2^2+F", "J_1_5"),
        ("J_1_2^2+F", "J_2_5"),
        ("J_1_2^2+F", "J_1_2+J_1_3"),
        ("J_2_4+F", "J_1_2+J_1_3"),
        ("J_2_4+F", "J_2_5"),
        ("J_2_4+F", "J_3_5"),
        ("J_2_4+F", "J_7_5"),
        ("J_6_5", "J_5_5"),
        ("J_6_5", "J_3_5"),
        ("J_1_5", "J_8_5"),
        ("J_2_5", "J_8_5"),
        ("J_2_5", "J_5_5"),
        ("J_1_2+J_1_3", "J_4_5"),
        ("J_5_5", "J_4_5"),
        ("J_3_5", "J_4_5"),
        ("J_3_5", "J_8_5"),
    ],
}


def _cols(*columns):
    return Matrix.from_columns([list(c) for c in columns])


def _unit(m, i):
    return [Fraction(1) if t == i - 1 else Fraction(0) for t in range(m)]


def _witnesses():
    h = Fraction(1, 2)
    W = {}

    e = _maker(3)
    W[("J_1_2+F", "J_1_3")] = (e(3, 3, 2), 1, Matrix.identity(3))

    e = _maker(4)
    u = lambda i: _unit(4, i)
    split4 = _cols([1, 0, 1, 0], [0, 2, 0, 2], [1, 0, -1, 0], [0, 2, 0, -2])
    W[("J_1_2+F2", "J_1_4")] = (e(1, 3, 4), 1, Matrix.identity(4))
    W[("J_1_2+F2", "J_1_3+F")] = (e(3, 3, 2), 1, Matrix.identity(4))
    W[("J_1_4", "J_1_2^2")] = (e(3, 3, 2), 1, split4)
    W[("J_1_3+F", "J_1_2^2")] = (e(1, 3, 4), 1, split4)
    W[("J_1_3+F", "J_2_4")] = (e(4, 4, 2), -1,
                               _cols(u(1), u(2), [0, 0, 1, 1], [0, 0, h, -h]))

    e = _maker(5)
    u = lambda i: _unit(5, i)
    split5 = _cols([1, 0, 1, 0, 0], [0, 2, 0, 2, 0], [1, 0, -1, 0, 0],
                   [0, 2, 0, -2, 0], u(5))
    swap45 = _cols(u(1), u(2), u(3), u(5), u(4))
    W[("J_1_2+F3", "J_1_4+F")] = (e(1, 3, 4), 1, Matrix.identity(5))
    W[("J_1_2+F3", "J_1_3+F2")] = (e(3, 3, 2), 1, Matrix.identity(5))
    W[("J_1_4+F", "J_1_2^2+F")] = (e(3, 3, 2), 1, split5)
    W[("J_1_4+F", "J_6_5")] = (e(1, 5, 2), 1, swap45)
    W[("J_1_3+F2", "J_1_2^2+F")] = (e(1, 3, 4), 1, split5)
    W[("J_1_3+F2", "J_2_4+F")] = (e(4, 4, 2), -1,
                                  _cols(u(1), u(2), [0, 0, 1, 1, 0],
                                        [0, 0, h, -h, 0], u(5)))
    W[("J_1_2^2+F", "J_1_5")] = (e(1, 3, 5), 1, Matrix.identity(5))
    W[("J_1_2^2+F", "J_2_5")] = (e(1, 5, 4), 1, swap45)
    W[("J_1_2^2+F", "J_1_2+J_1_3")] = (e(5, 5, 4), 1, Matrix.identity(5))
    W[("J_2_4+F", "J_2_5")] = (e(3, 3, 5), 1,
                               _cols([-1, 0, 1, -1, 0], [0, -1, 0, 0, 1],
                                     [1, 0, 0, 1, 0], u(4), u(2)))
    W[("J_1_2+J_1_3", "J_4_5")] = (e(3, 5, 2), 1,
                                   _cols(u(1), u(2), [0, 0, h, 0, h],
                                         [0, h, 0, h, 0], [0, 0, -h, 0, h]))
    return W


JUMP_WITNESSES = _witnesses()
