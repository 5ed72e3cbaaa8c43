"""JSON documents in and out.

Rationals are written as ints when integral and as ``"p/q"`` strings
otherwise; floats are rejected on input. Roots, simple indices and torus
coordinates are 1-based in every emitted document.
"""

from __future__ import annotations

from fractions import Fraction

from .chars import CharacterOfT
from .errors import InputError
from .involution import InvolutionSpec
from .pairs import PairSpec, galois_split_pair, identity_pair
from .rootsys import build_root_system


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"{x!r} is not an exact rational; use an int or a 'p/q' string")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse rational {x!r}") from None
    raise InputError(f"cannot parse rational {x!r}")


def rational(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vector(v) -> list:
    return [rational(x) for x in v]


def _require(doc, key, what):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"{what} needs a {key!r} field")
    return doc[key]


def root_system_from_doc(doc):
    if isinstance(doc, str):
        return build_root_system(doc)
    if not isinstance(doc, dict):
        raise InputError("root system must be a label string or an object")
    realization = doc.get("realization", "standard")
    n = doc.get("n")
    if "cartan_matrix" in doc:
        spec = [[parse_rational(v) for v in row] for row in doc["cartan_matrix"]]
    elif "family" in doc:
        spec = (str(doc["family"]), int(_require(doc, "rank", "root system")))
    elif "label" in doc:
        spec = str(doc["label"])
    elif realization == "gl_n" and n is not None:
        spec = ("A", int(n) - 1)
    else:
        raise InputError("root system needs 'family'+'rank', 'cartan_matrix' or 'label'")
    return build_root_system(spec, realization=realization, n=n)


def root_system_to_doc(rs) -> dict:
    doc = {"label": rs.label, "cartan_matrix": [list(r) for r in rs.cartan]}
    if rs.realization == "gl_n":
        doc.update(realization="gl_n", n=rs.ambient_dim)
    return doc


def involution_from_doc(doc, rs) -> InvolutionSpec:
    if doc is None or doc == "galois-split":
        return galois_split_pair(rs).theta
    if doc == "identity":
        return identity_pair(rs).theta
    matrix = [[parse_rational(v) for v in row] for row in _require(doc, "matrix", "involution")]
    return InvolutionSpec(matrix, int(doc.get("epsilon", -1)), doc.get("mode", "semilinear"))


def involution_to_doc(theta: InvolutionSpec) -> dict:
    return {"matrix": [vector(r) for r in theta.matrix], "epsilon": theta.epsilon, "mode": theta.mode}


def pair_from_doc(doc) -> PairSpec:
    if not isinstance(doc, dict):
        raise InputError("pair must be an object")
    rs = root_system_from_doc(_require(doc, "root_system", "pair"))
    inv = doc.get("involution")
    theta = involution_from_doc(inv, rs)
    label = doc.get("label") or (inv if isinstance(inv, str) else "galois-split" if inv is None else "")
    return PairSpec(rs, theta, label)


def character_from_doc(doc, dim: int | None = None) -> CharacterOfT:
    if not isinstance(doc, dict):
        raise InputError("character must be an object")
    re = [parse_rational(x) for x in _require(doc, "lambda_re", "character")]
    im = doc.get("lambda_im")
    m = doc.get("m")
    chi = CharacterOfT(
        re,
        None if im is None else [parse_rational(x) for x in im],
        None if m is None else [parse_rational(x) for x in m],
    )
    if dim is not None and chi.dim != dim:
        raise InputError(f"character has dimension {chi.dim}, root system ambient_dim is {dim}")
    return chi


def character_to_doc(chi: CharacterOfT, dominant: bool | None = None) -> dict:
    doc = {"lambda_re": vector(chi.lambda_re), "lambda_im": vector(chi.lambda_im), "m": list(chi.m)}
    if dominant is not None:
        doc["dominant"] = dominant
    return doc


def weyl_element_to_doc(w) -> dict:
    return {
        "word": list(w.word),
        "length": w.length,
        "root_permutation": [k + 1 for k in w.perm],
    }


def root_to_doc(rs, k: int) -> dict:
    return {
        "index": k + 1,
        "coords": vector(rs.roots[k]),
        "simple": list(rs.coefficients[k]),
    }
