"""Regenerate src/cilab/data/table1.json, the canonical instance of every table row.

Each row uses the smallest n its payload needs.  Run from the repo root:
    python3 scripts/make_table1.py
"""
import json
import sys
from pathlib import Path

import numpy as np
from scipy.linalg import expm

from cilab import linalg as la
from cilab.catalog import TypeTag, hermitian_from_frame
from cilab.pairs import PairRecord, construct_pair, record_to_json

OUT = Path(__file__).resolve().parents[1] / "src" / "cilab" / "data" / "table1.json"


def e(n, *idx):
    """Real vector sum of standard basis vectors (1-based), normalized."""
    v = np.zeros(n)
    for i in idx:
        v[abs(i) - 1] += np.sign(i)
    return v / np.linalg.norm(v)


def cols(n, *vecs):
    if not vecs:
        return np.zeros((n, 0))
    return np.stack(vecs, axis=1)


def c_k(n, *vecs, phi=0.0):
    return TypeTag("c_k", len(vecs), 0, phi, {"W0": cols(n, *vecs)})


def tr(n, W1, W2, phi=0.0):
    return TypeTag("tr_kl", len(W1), len(W2), phi, {"W1": cols(n, *W1), "W2": cols(n, *W2)})


def c_prime(n, F, Ip=None, phi=0.0):
    F = cols(n, *F)
    Ip = hermitian_from_frame(F) if Ip is None else Ip
    return TypeTag("c_k_prime", F.shape[1] // 2, 0, phi, {"Wp": F, "Ip": Ip})


def tr_prime(n, W0, Ip, Wp, phi=0.0):
    W0 = cols(n, *W0)
    return TypeTag("tr_k_prime", W0.shape[1], 0, phi, {"Wp": Wp, "Ip": Ip, "W0p": W0})


def line(u):
    u = np.asarray(u, dtype=complex)
    return TypeTag("tr1", 1, 0, 0.0, {"u": u / np.linalg.norm(u)})


def standard_tr2(n, phi=0.0):
    """tr_2' on span{e1..e4} with I' = e1^e2 + e3^e4 and W0' = span{e1, e3}."""
    F = cols(n, e(n, 1), e(n, 3), e(n, 2), e(n, 4))
    Ip = hermitian_from_frame(F)
    return tr_prime(n, [e(n, 1), e(n, 3)], Ip, F, phi), Ip, F


def second_structure_row():
    n = 4
    W, Ip, F = standard_tr2(n)
    f1, f2 = e(n, 1), e(n, 3)
    It = la.outer_wedge(f1, f2) + la.outer_wedge(Ip @ f1, Ip @ f2)
    # complex basis of (W', It): b1 = f1, b2 = I' f1
    b = [f1, Ip @ f1]
    t, w = 0.6, 0.8 * np.exp(0.5j)
    M = np.array([[1j * t, -np.conj(w)], [w, -1j * t]])
    real_basis = []
    for j in range(2):
        real_basis += [(j, 1.0), (j, 1j)]
    Jt = np.zeros((n, n))
    for j, c in real_basis:
        z = M[:, j] * c
        img = sum(z[i].real * b[i] + z[i].imag * (It @ b[i]) for i in range(2))
        src = b[j] if c == 1.0 else It @ b[j]
        Jt += np.outer(img, src)
    U0 = Jt @ cols(n, f1, f2)
    Jp = Jt @ Ip @ Jt.T
    U = TypeTag("tr_k_prime", 2, 0, 0.0, {"Wp": F, "Ip": Jp, "W0p": U0})
    return PairRecord("tr_2',tr_2'/*", W, U, {"Itilde": It, "Jtilde": Jt, "t": t,
                                             "w": [float(w.real), float(w.imag)]})


def rows():
    r = []
    n = 2
    r.append(PairRecord("c_k,c_l", c_k(n, e(n, 1)), c_k(n, e(n, 2)), v_invariant=True))
    n = 4
    r.append(PairRecord("tr_ij,tr_kl/phi", tr(n, [e(n, 1)], [e(n, 2)], phi=0.3),
                        tr(n, [e(n, 3)], [e(n, 4)]), {"phi": 0.3}))
    r.append(PairRecord("tr_ij,tr_kl/phi=0", tr(n, [e(n, 1)], [e(n, 2)]),
                        tr(n, [e(n, 3)], [e(n, 4)]), {"phi": 0.0}, v_invariant=True))
    n = 3
    r.append(PairRecord("tr_jk,tr_lj", tr(n, [e(n, 1)], [e(n, 2)]), tr(n, [e(n, 3)], [e(n, 1)])))
    n = 2
    r.append(PairRecord("tr_kl,tr_lk", tr(n, [e(n, 1)], [e(n, 2)]), tr(n, [e(n, 2)], [e(n, 1)]),
                        v_invariant=True))
    n = 5
    r.append(PairRecord("tr_1k,tr_l1/perp", tr(n, [e(n, 1)], [e(n, 2), e(n, 3)]),
                        tr(n, [e(n, 4)], [e(n, 1, 5)])))
    n = 4
    r.append(PairRecord("tr_1k,tr_l1/eq", tr(n, [e(n, 1)], [e(n, 2), e(n, 3)]),
                        tr(n, [e(n, 2), e(n, 3)], [e(n, 1, 4)])))
    n = 3
    r.append(PairRecord("tr_11,tr_11", tr(n, [e(n, 1)], [e(n, 2)]), tr(n, [e(n, 2, 3)], [e(n, 1)])))
    r.append(PairRecord("tr_kl,tr1", tr(n, [e(n, 1), e(n, 2)], []), line(np.exp(0.4j) * e(n, 3))))
    n = 4
    r.append(PairRecord("tr_1k,tr1", tr(n, [e(n, 1)], [e(n, 2), e(n, 3)]), line(1j * e(n, 1) + e(n, 4))))
    n = 2
    r.append(PairRecord("tr_11,tr1", tr(n, [e(n, 1)], [e(n, 2)]), line(e(n, 2) + 1j * e(n, 1))))
    n = 3
    r.append(PairRecord("c_k,c_l'", c_k(n, e(n, 1)), c_prime(n, [e(n, 2), e(n, 3)]), blocked=True))
    n = 4
    r.append(PairRecord("c_k',c_l'", c_prime(n, [e(n, 1), e(n, 2)]), c_prime(n, [e(n, 3), e(n, 4)]),
                        v_invariant=True))
    n = 2
    W = c_prime(n, [e(n, 1), e(n, 2)])
    r.append(PairRecord("c_k',c_k'", W, c_prime(n, [e(n, 1), e(n, 2)], -W.payload["Ip"]),
                        v_invariant=True))
    r.append(PairRecord("c_1',tr1", W, line(np.exp(0.7j) * (e(n, 1) + 1j * e(n, 2)))))
    n = 6
    W, Ip, F = standard_tr2(n)
    r.append(PairRecord("tr_j',tr_kl", W, tr(n, [e(n, 5)], [e(n, 6)]), blocked=True))
    n = 8
    W, Ip, F = standard_tr2(n)
    G = cols(n, e(n, 5), e(n, 7), e(n, 6), e(n, 8))
    U = tr_prime(n, [e(n, 5), e(n, 7)], hermitian_from_frame(G), G)
    r.append(PairRecord("tr_k',tr_l'", W, U, v_invariant=True))
    n = 4
    W, Ip, F = standard_tr2(n)
    U = TypeTag("tr_k_prime", 2, 0, 0.0, {"Wp": F, "Ip": Ip, "W0p": Ip @ W.payload["W0p"]})
    r.append(PairRecord("tr_k',tr_k'/J'=I'", W, U, v_invariant=True))
    theta = 0.3
    U = TypeTag("tr_k_prime", 2, 0, 0.0, {"Wp": F, "Ip": -Ip, "W0p": expm(theta * Ip) @ W.payload["W0p"]})
    r.append(PairRecord("tr_k',tr_k'/J'=-I'", W, U, {"theta": theta}))
    r.append(second_structure_row())
    n = 5
    W, Ip, F = standard_tr2(n)
    r.append(PairRecord("tr_k',tr1", W, line(np.exp(0.3j) * e(n, 5))))
    n = 2
    ex3 = TypeTag("ex3", 0, 0, 0.0, {"frame": cols(n, e(n, 1), e(n, 2))})
    r.append(PairRecord("ex3,tr1", ex3, line(e(n, 2) - 1j * e(n, 1)), v_invariant=True))
    r.append(PairRecord("tr1,tr1", line(e(n, 1) + 1j * e(n, 2)), line(1j * e(n, 1) + e(n, 2))))
    return r


def main():
    out = []
    for rec in rows():
        construct_pair(rec)
        out.append(record_to_json(rec))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"schema_version": 1, "rows": out}, indent=1) + "\n")
    print(f"wrote {len(out)} rows to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
