"""The catalog of Jacobi-Jordan algebras of dimension at most 5.

Covers every nontrivial algebra up to isomorphism (there are 22; from
dimension 6 on there are infinitely many isomorphism classes), the
trivial algebras F^m, and direct sums with trivial summands.  Names use
ASCII identifiers like "J_1_2", "J_1_3+F2", "J_1_2^2"; the subscript
style "J_{1,2}" and unicode direct sums are accepted as aliases.
"""

from __future__ import annotations

import re

from .algebra import JJAlgebra, direct_sum, trivial_algebra


def _alg(dim, products, name):
    return JJAlgebra.build(dim, products, name=name)


def _build_catalog():
    J12 = _alg(2, {(1, 1): {2: 1}}, "J_1_2")
    J13 = _alg(3, {(1, 1): {2: 1}, (3, 3): {2: 1}}, "J_1_3")
    J14 = _alg(4, {(1, 1): {2: 1}, (1, 3): {4: 1}}, "J_1_4")
    J24 = _alg(4, {(1, 1): {2: 1}, (3, 4): {2: 1}}, "J_2_4")
    J15 = _alg(5, {(1, 1): {2: 1}, (1, 3): {5: 1}, (3, 3): {4: 1}}, "J_1_5")
    J25 = _alg(5, {(1, 1): {2: 1}, (1, 4): {5: 1}, (3, 3): {5: 1}}, "J_2_5")
    J35 = _alg(5, {(1, 1): {2: 1}, (1, 4): {5: 1}, (3, 4): {5: 1},
                   (3, 3): {2: -1, 5: 1}}, "J_3_5")
    J45 = _alg(5, {(1, 1): {2: 1}, (3, 3): {4: 1}, (5, 5): {2: -1, 4: 1}}, "J_4_5")
    J55 = _alg(5, {(1, 1): {2: 1}, (3, 3): {4: 1}, (3, 5): {2: -1, 4: 1}}, "J_5_5")
    J65 = _alg(5, {(1, 1): {2: 1}, (1, 4): {2: 1}, (1, 3): {5: 1}}, "J_6_5")
    J75 = _alg(5, {(1, 1): {2: 1}, (3, 3): {2: 1}, (4, 5): {2: 1}}, "J_7_5")
    J85 = _alg(5, {(1, 1): {2: 1}, (1, 4): {5: 1}, (2, 4): {3: 2},
                   (1, 5): {3: -1}}, "J_8_5")

    def plus_f(alg, k, name):
        return direct_sum(alg, trivial_algebra(k), name=name)

    cat = {}
    for a in (J12, J13, J14, J24, J15, J25, J35, J45, J55, J65, J75, J85):
        cat[a.name] = a
    cat["J_1_2+F"] = plus_f(J12, 1, "J_1_2+F")
    cat["J_1_2+F2"] = plus_f(J12, 2, "J_1_2+F2")
    cat["J_1_2+F3"] = plus_f(J12, 3, "J_1_2+F3")
    cat["J_1_3+F"] = plus_f(J13, 1, "J_1_3+F")
    cat["J_1_3+F2"] = plus_f(J13, 2, "J_1_3+F2")
    cat["J_1_2^2"] = direct_sum(J12, J12, name="J_1_2^2")
    cat["J_1_2^2+F"] = plus_f(cat["J_1_2^2"], 1, "J_1_2^2+F")
    cat["J_1_4+F"] = plus_f(J14, 1, "J_1_4+F")
    cat["J_2_4+F"] = plus_f(J24, 1, "J_2_4+F")
    cat["J_1_2+J_1_3"] = direct_sum(J12, J13, name="J_1_2+J_1_3")
    return cat


_CATALOG = _build_catalog()

# nontrivial algebras in classification order: dimension, then list position
CATALOG_NAMES = (
    "J_1_2",
    "J_1_2+F", "J_1_3",
    "J_1_2+F2", "J_1_3+F", "J_1_2^2", "J_1_4", "J_2_4",
    "J_1_2+F3", "J_1_3+F2", "J_1_2^2+F", "J_1_4+F", "J_2_4+F",
    "J_1_2+J_1_3", "J_1_5", "J_2_5", "J_3_5", "J_4_5", "J_5_5",
    "J_6_5", "J_7_5", "J_8_5",
)

# the summand-free entries; direct sums are decomposable by construction
INDECOMPOSABLE_NAMES = frozenset(
    n for n in CATALOG_NAMES if "+" not in n and "^" not in n
)

_TRIVIAL_RE = re.compile(r"^F(\d*)$")


def normalize_name(name: str) -> str:
    """Map accepted spellings onto catalog identifiers.

    "J_{1,2}" -> "J_1_2", "J_{1,3}⊕F^2"/"J_1_3+F^2" -> "J_1_3+F2",
    "F^3"/"F3" -> "F3".
    """
    t = name.strip().replace(" ", "")
    t = t.replace("⊕", "+")  # direct sum sign
    t = t.replace("{", "").replace("}", "").replace(",", "_")
    t = t.replace("F^", "F")
    if t.endswith("+F1"):
        t = t[:-1]
    if t == "F1":
        t = "F"
    return t


def catalog_names(dim=None):
    """Nontrivial catalog names, optionally restricted to one dimension."""
    if dim is None:
        return list(CATALOG_NAMES)
    return [n for n in CATALOG_NAMES if _CATALOG[n].dim == dim]


def catalog(name: str) -> JJAlgebra:
    """Look up an algebra by name; trivial algebras via "F", "F2", "F^3", ..."""
    key = normalize_name(name)
    if key in _CATALOG:
        return _CATALOG[key]
    m = _TRIVIAL_RE.match(key)
    if m:
        k = int(m.group(1) or "1")
        return trivial_algebra(k, name=f"F^{k}")
    raise KeyError(f"unknown algebra name: {name!r}")


def is_catalog_name(name: str) -> bool:
    try:
        catalog(name)
        return True
    except KeyError:
        return False


def is_indecomposable(name: str) -> bool:
    return normalize_name(name) in INDECOMPOSABLE_NAMES
