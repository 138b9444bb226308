"""JSON encodings of subspaces, models, type tags and 2-jets.

Subspace:  {"n": int, "vectors": [[[re, im], ... n entries], ...]}
Model:     {"kind": "grassmannian2" | "cpn", "n": int, "sign": 1 | -1}
TypeTag:   {"variant": str, "k": int, "l": int, "phi": float, "n": int,
            "payload": {frame key: [column, ...], "Ip": [[row], ...], "u": vector}}
TwoJet:    {"model": model, "W": subspace, "h": [[vector, ...], ...]}
Operators are 2n x 2n row-major nested lists.
"""
import json

import numpy as np

from . import linalg as la
from .catalog import TypeTag
from .curvature import CurvatureModel


class SchemaError(ValueError):
    pass


def vector_to_json(z):
    z = np.asarray(z, dtype=complex)
    return [[float(c.real), float(c.imag)] for c in z]


def vector_from_json(obj, n=None):
    try:
        a = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad vector: {exc}") from None
    if a.ndim != 2 or a.shape[1] != 2:
        raise SchemaError("a vector is a list of [re, im] pairs")
    if n is not None and a.shape[0] != n:
        raise SchemaError(f"vector has {a.shape[0]} entries, expected {n}")
    if not np.all(np.isfinite(a)):
        raise SchemaError("non-finite coordinate")
    return a[:, 0] + 1j * a[:, 1]


def subspace_to_json(S):
    return {"n": S.n, "vectors": [vector_to_json(z) for z in S.vectors]}


def subspace_from_json(obj):
    if not isinstance(obj, dict) or "n" not in obj or "vectors" not in obj:
        raise SchemaError("subspace needs keys 'n' and 'vectors'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("'n' must be a positive integer")
    vecs = [vector_from_json(v, n) for v in obj["vectors"]]
    return la.span_orthonormal(vecs, n=n)


def model_to_json(m):
    return {"kind": m.kind, "n": m.n, "sign": m.sign}


def model_from_json(obj):
    try:
        return CurvatureModel(obj["kind"], obj["n"], obj.get("sign", 1))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad model: {exc}") from None


def tag_to_json(t):
    p = {}
    for key, val in t.payload.items():
        if key == "u":
            p[key] = vector_to_json(val)
        elif key == "Ip":
            p[key] = np.asarray(val).tolist()
        else:
            p[key] = np.asarray(val).T.tolist()
    return {"variant": t.variant, "k": int(t.k), "l": int(t.l), "phi": float(t.phi),
            "n": int(t.n), "payload": p}


def tag_from_json(obj):
    try:
        n = int(obj["n"])
        p = {}
        for key, val in obj["payload"].items():
            if key == "u":
                p[key] = vector_from_json(val, n)
            elif key == "Ip":
                p[key] = np.asarray(val, dtype=float).reshape(n, n)
            else:
                cols = np.asarray(val, dtype=float).reshape(-1, n)
                p[key] = cols.T
        return TypeTag(obj["variant"], int(obj.get("k", 0)), int(obj.get("l", 0)),
                       float(obj.get("phi", 0.0)), p)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad type tag: {exc}") from None


def operator_to_json(A):
    return np.asarray(A, dtype=float).tolist()


def operator_from_json(obj):
    A = np.asarray(obj, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] % 2:
        raise SchemaError("operator must be a 2n x 2n array")
    return A


def jet_to_json(j):
    d = j.W.dim
    h = [[vector_to_json(la.complexify(j.h[a, b])) for b in range(d)] for a in range(d)]
    return {"model": model_to_json(j.model), "W": subspace_to_json(j.W), "h": h}


def jet_from_json(obj):
    from .jets import TwoJet

    try:
        m = model_from_json(obj["model"])
        W = subspace_from_json(obj["W"])
        rows = obj["h"]
        h = np.array([[la.realify(vector_from_json(v, m.n)) for v in row] for row in rows])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad jet: {exc}") from None
    if h.size == 0:
        h = np.zeros((W.dim, W.dim, 2 * m.n))
    return TwoJet(m, W, h)


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
