"""JSON wire formats.

Rationals are "p/q" strings (or "p" when integral) so nothing is ever
rounded.  Formats:

  algebra     {"name": str, "dim": int,
               "products": [{"i": i, "j": j, "coeffs": [rat, ...]}]}
              with 1-based i <= j; omitted pairs multiply to zero.
  cochain     {"degree": n, "dim": m,
               "terms": [{"args": [i, ...] sorted, "k": k, "coeff": rat}]}
  deformation {"base": algebra, "order": N, "terms": [cochain, ...]}
  form        {"kind": "symplectic"|"pseudo_euclidean",
               "matrix": [[rat, ...], ...]}
  linear map  {"matrix": [[rat, ...], ...]}   (column j = image of e_j)
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import JJAlgebra
from .bilinear import BilinearForm
from .cochains import SymCochain
from .deformations import FormalDeformation1
from .linalg import Matrix


def rational_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s) -> Fraction:
    return Fraction(s)


def algebra_to_json(alg: JJAlgebra) -> dict:
    return {
        "name": alg.name,
        "dim": alg.dim,
        "products": [
            {"i": i, "j": j, "coeffs": [rational_to_str(c) for c in coeffs]}
            for (i, j), coeffs in alg.products
        ],
    }


def algebra_from_json(doc: dict) -> JJAlgebra:
    products = {}
    for entry in doc.get("products", []):
        products[(entry["i"], entry["j"])] = [rational_from_str(c)
                                              for c in entry["coeffs"]]
    return JJAlgebra.build(doc["dim"], products, name=doc.get("name", ""))


def cochain_to_json(phi: SymCochain) -> dict:
    return {
        "degree": phi.degree,
        "dim": phi.dim,
        "terms": [
            {"args": list(args), "k": k, "coeff": rational_to_str(c)}
            for (args, k), c in sorted(phi.terms.items())
        ],
    }


def cochain_from_json(doc: dict) -> SymCochain:
    terms = {}
    for entry in doc.get("terms", []):
        key = (tuple(entry["args"]), entry["k"])
        terms[key] = terms.get(key, 0) + rational_from_str(entry["coeff"])
    return SymCochain(doc["dim"], doc["degree"], terms)


def deformation_to_json(d: FormalDeformation1) -> dict:
    return {
        "base": algebra_to_json(d.base),
        "order": d.order,
        "terms": [cochain_to_json(phi) for phi in d.terms],
    }


def deformation_from_json(doc: dict) -> FormalDeformation1:
    base = algebra_from_json(doc["base"])
    terms = tuple(cochain_from_json(t) for t in doc.get("terms", []))
    if doc.get("order", len(terms)) != len(terms):
        raise ValueError("order field disagrees with the number of terms")
    return FormalDeformation1(base, terms)


def matrix_to_json(m: Matrix) -> list:
    return [[rational_to_str(c) for c in row] for row in m.data]


def matrix_from_json(rows, cols=None) -> Matrix:
    return Matrix([[rational_from_str(c) for c in row] for row in rows],
                  cols=cols)


def form_to_json(form: BilinearForm) -> dict:
    return {"kind": form.kind, "matrix": matrix_to_json(form.matrix)}


def form_from_json(doc: dict) -> BilinearForm:
    return BilinearForm(doc["kind"], matrix_from_json(doc["matrix"]))
