"""Orthogonal curvature-invariant pairs: checks, the shipped table of rows,
mutation probes and randomized searches for forbidden type pairs."""
import json
from dataclasses import dataclass, field
from importlib import resources

import numpy as np
from scipy.linalg import expm

from . import linalg as la
from .catalog import (
    SQRT3, TypeTag, construct_type, support_dim, validate_tag,
)
from .curvature import CurvatureModel, Verdict, curvature_apply, is_curvature_invariant

HIT_TOL = 1e-9
CONDITION_TOL = 1e-10
CLAUSES = ("WWW", "WWU", "UUU", "UUW", "orth")


# ------------------------------------------------------------------ pair check

def _outside_batch(S, T):
    """Norms of T (..., 2n) off the row span of S (B, d, 2n); batch axis first."""
    if S.shape[1] == 0:
        return np.linalg.norm(T, axis=-1)
    shape = T.shape
    Tf = T.reshape(shape[0], -1, shape[-1])
    C = np.einsum("bix,bsx->bis", Tf, S)
    P = Tf - np.einsum("bis,bsx->bix", C, S)
    return np.linalg.norm(P, axis=-1).reshape(shape[:-1])


def _max_outside(m, X, Y, Z, S):
    """max over rows of |R(x, y) z off S| for batched row stacks (B, d, 2n)."""
    B = X.shape[0]
    if X.shape[1] == 0 or Y.shape[1] == 0 or Z.shape[1] == 0:
        return np.zeros(B)
    T = curvature_apply(m, X[:, :, None, None, :], Y[:, None, :, None, :], Z[:, None, None, :, :])
    return _outside_batch(S, T).reshape(B, -1).max(axis=1)


def pair_residuals_batch(m, BW, BU):
    """Clause residuals for stacks of orthonormal rows BW (B, dW, 2n), BU (B, dU, 2n)."""
    res = {
        "WWW": _max_outside(m, BW, BW, BW, BW),
        "WWU": _max_outside(m, BW, BW, BU, BU),
        "UUU": _max_outside(m, BU, BU, BU, BU),
        "UUW": _max_outside(m, BU, BU, BW, BW),
    }
    if BW.shape[1] and BU.shape[1]:
        res["orth"] = np.abs(np.einsum("bix,bjx->bij", BW, BU)).reshape(BW.shape[0], -1).max(axis=1)
    else:
        res["orth"] = np.zeros(BW.shape[0])
    return res


def is_ci_pair(m, W, U, tol=la.RANK_TOL):
    """Orthogonal curvature-invariant pair test with per-clause residuals."""
    if W.n != U.n or W.n != m.n:
        raise ValueError("W, U and the model must share n")
    res = pair_residuals_batch(m, W.basis.T[None], U.basis.T[None])
    res = {k: float(v[0]) for k, v in res.items()}
    worst = max(res.values())
    return Verdict(worst <= tol, worst, res)


# ------------------------------------------------------------------ table rows

@dataclass(frozen=True, eq=False)
class PairRecord:
    row_id: str
    tagW: TypeTag
    tagU: TypeTag
    extra: dict = field(default_factory=dict)
    v_invariant: bool = False
    blocked: bool = False

    @property
    def n(self):
        return max(self.tagW.n, self.tagU.n)


class ConditionError(ValueError):
    pass


def _dist(A, B):
    """Distance between the column spans of two real frames."""
    if A.shape[1] != B.shape[1]:
        return 1.0
    if A.shape[1] == 0:
        return 0.0
    return float(np.linalg.norm(A @ A.T - B @ B.T, 2))


def _perp(A, B):
    if A.shape[1] == 0 or B.shape[1] == 0:
        return 0.0
    return float(np.max(np.abs(A.T @ B)))


def _phase(a, b):
    d = np.mod(a - b, np.pi)
    return float(min(d, np.pi - d))


def _cspan_part(F, u):
    """Norm of the component of u in the complex span of the real frame F."""
    if F.shape[1] == 0:
        return 0.0
    Q = la.span_orthonormal(list(F.T.astype(complex)), n=F.shape[0])
    return float(np.linalg.norm(Q.project(la.realify(u))))


def _real_imag(u, phi):
    return la.split_real_imag(u, phi)


def row_conditions(r):
    """Residuals of the row's conditions column, keyed by condition."""
    W, U, x = r.tagW, r.tagU, r.extra
    pW, pU = W.payload, U.payload
    rid = r.row_id.split("/")[0]
    out = {}
    same_form = _phase(W.phi, U.phi)
    if rid == "c_k,c_l":
        out = {"same_form": same_form, "W0_perp_U0": _perp(pW["W0"], pU["W0"])}
    elif rid == "tr_ij,tr_kl":
        out = {"form_shift": _phase(W.phi, U.phi + x["phi"]),
               "W_perp_U": _perp(np.hstack([pW["W1"], pW["W2"]]), np.hstack([pU["W1"], pU["W2"]]))}
    elif rid == "tr_jk,tr_lj":
        out = {"same_form": same_form, "W1_eq_U2": _dist(pW["W1"], pU["W2"]),
               "W2_perp_U1": _perp(pW["W2"], pU["W1"])}
    elif rid == "tr_kl,tr_lk":
        out = {"same_form": same_form, "W1_eq_U2": _dist(pW["W1"], pU["W2"]),
               "W2_eq_U1": _dist(pW["W2"], pU["W1"])}
    elif rid == "tr_1k,tr_l1":
        out = {"same_form": same_form, "shape": float(W.k != 1 or U.l != 1),
               "W1_perp_U1": _perp(pW["W1"], pU["W1"]), "W2_perp_U2": _perp(pW["W2"], pU["W2"])}
        if r.row_id.endswith("perp"):
            out["W2_perp_U1"] = _perp(pW["W2"], pU["W1"])
        else:
            out["W2_eq_U1"] = _dist(pW["W2"], pU["W1"])
    elif rid == "tr_11,tr_11":
        out = {"same_form": same_form, "shape": float((W.k, W.l, U.k, U.l) != (1, 1, 1, 1)),
               "W1_perp_U1": _perp(pW["W1"], pU["W1"]), "W2_perp_U2": _perp(pW["W2"], pU["W2"])}
    elif rid == "tr_kl,tr1":
        out = {"u_perp_CW": _cspan_part(np.hstack([pW["W1"], pW["W2"]]), pU["u"])}
    elif rid == "tr_1k,tr1":
        a, _ = _real_imag(pU["u"], W.phi)
        out = {"shape": float(W.k != 1), "Re_u_perp_W1": float(np.linalg.norm(pW["W1"].T @ a)),
               "u_perp_CW2": _cspan_part(pW["W2"], pU["u"])}
    elif rid == "tr_11,tr1":
        a, b = _real_imag(pU["u"], W.phi)
        out = {"shape": float((W.k, W.l) != (1, 1)),
               "Re_u_perp_W1": float(np.linalg.norm(pW["W1"].T @ a)),
               "Im_u_perp_W2": float(np.linalg.norm(pW["W2"].T @ b))}
    elif rid == "c_k,c_l'":
        out = {"same_form": same_form, "W0_perp_Up": _perp(pW["W0"], pU["Wp"])}
    elif rid in ("c_k',c_l'", "tr_k',tr_l'"):
        out = {"same_form": same_form, "Wp_perp_Up": _perp(pW["Wp"], pU["Wp"])}
    elif rid == "c_k',c_k'":
        out = {"same_form": same_form, "Wp_eq_Up": _dist(pW["Wp"], pU["Wp"]),
               "Ip_eq_minus_Jp": float(np.max(np.abs(pW["Ip"] + pU["Ip"])))}
    elif rid == "c_1',tr1":
        Wbar = la.conjugate(construct_type(W), W.phi)
        out = {"shape": float(W.k != 1), "u_in_conj_W": float(Wbar.residual(la.realify(pU["u"])))}
    elif rid == "tr_j',tr_kl":
        out = {"same_form": same_form,
               "Wp_perp_U": _perp(pW["Wp"], np.hstack([pU["W1"], pU["W2"]]))}
    elif rid == "tr_k',tr_k'":
        out = {"same_form": same_form, "Wp_eq_Up": _dist(pW["Wp"], pU["Wp"])}
        Ip, Jp = pW["Ip"], pU["Ip"]
        if r.row_id.endswith("J'=I'"):
            out["U0_eq_IW0"] = _dist(pU["W0p"], Ip @ pW["W0p"])
            out["Jp_eq_Ip"] = float(np.max(np.abs(Jp - Ip)))
        elif r.row_id.endswith("J'=-I'"):
            out["U0_eq_expW0"] = _dist(pU["W0p"], expm(x["theta"] * Ip) @ pW["W0p"])
            out["Jp_eq_minus_Ip"] = float(np.max(np.abs(Jp + Ip)))
    elif rid == "tr_2',tr_2'":
        out = {"same_form": same_form, "Wp_eq_Up": _dist(pW["Wp"], pU["Wp"])}
        out.update(_second_structure_conditions(W, U, x))
    elif rid == "tr_k',tr1":
        out = {"u_perp_CWp": _cspan_part(pW["Wp"], pU["u"])}
    elif rid == "ex3,tr1":
        e1, e2 = pW["frame"].T
        target = np.exp(1j * W.phi) * (e2 - 1j * e1) / np.sqrt(2)
        u = pU["u"]
        out = {"u_is_special": float(min(np.linalg.norm(u - target), np.linalg.norm(u + target)))}
    elif rid == "tr1,tr1":
        out = {"u_perp_v": abs(la.inner(pW["u"], pU["u"]))}
    else:
        raise ConditionError(f"unknown row {r.row_id!r}")
    return {k: float(v) for k, v in out.items()}


def _second_structure_conditions(W, U, x):
    """Footnote structure: It built from W0', Jt in SU(W', It) and skew, U0' = Jt W0', J' = Jt I' Jt^T."""
    pW, pU = W.payload, U.payload
    Ip, W0p, Wp = pW["Ip"], pW["W0p"], pW["Wp"]
    It = np.asarray(x["Itilde"], dtype=float)
    Jt = np.asarray(x["Jtilde"], dtype=float)
    f1, f2 = W0p.T
    expect = la.outer_wedge(f1, f2) + la.outer_wedge(Ip @ f1, Ip @ f2)
    P = Wp @ Wp.T
    out = {"Itilde_form": float(np.max(np.abs(It - expect)))}
    out["Jt_skew"] = float(np.max(np.abs(Jt + Jt.T)))
    out["Jt_on_Wp"] = float(np.max(np.abs(Jt - P @ Jt @ P)))
    out["Jt_orthogonal"] = float(np.max(np.abs(Jt.T @ Jt - P)))
    out["Jt_commutes_It"] = float(np.max(np.abs(Jt @ It - It @ Jt)))
    # complex determinant over (W', It) in the complex basis f1, I' f1
    basis = [f1, Ip @ f1]
    M = np.empty((2, 2), dtype=complex)
    for j in range(2):
        img = Jt @ basis[j]
        for i in range(2):
            M[i, j] = img @ basis[i] + 1j * (img @ (It @ basis[i]))
    out["Jt_det_one"] = float(abs(np.linalg.det(M) - 1.0))
    out["U0_eq_JtW0"] = _dist(pU["W0p"], Jt @ W0p)
    out["Jp_eq_conj"] = float(np.max(np.abs(pU["Ip"] - Jt @ Ip @ Jt.T)))
    return out


def check_conditions(r, tol=CONDITION_TOL):
    res = row_conditions(r)
    bad = {k: v for k, v in res.items() if v > tol}
    if bad:
        raise ConditionError(f"row {r.row_id}: conditions violated {bad}")
    return res


def construct_pair(r, n=None, m=None):
    """(W, U) for a row; the pair test is run and must pass."""
    n = r.n if n is None else n
    check_conditions(r)
    validate_tag(r.tagW, n)
    validate_tag(r.tagU, n)
    W = construct_type(r.tagW, n)
    U = construct_type(r.tagU, n)
    m = CurvatureModel("grassmannian2", n, 1) if m is None else m
    v = is_ci_pair(m, W, U)
    if not v:
        raise ConditionError(f"row {r.row_id}: pair test failed {v.details}")
    return W, U


def record_from_json(obj):
    from .serialize import tag_from_json

    extra = dict(obj.get("extra", {}))
    for key in ("Itilde", "Jtilde"):
        if key in extra:
            extra[key] = np.asarray(extra[key], dtype=float)
    return PairRecord(obj["row_id"], tag_from_json(obj["W"]), tag_from_json(obj["U"]), extra,
                      bool(obj.get("v_invariant", False)), bool(obj.get("blocked", False)))


def record_to_json(r):
    from .serialize import tag_to_json

    extra = {k: (np.asarray(v).tolist() if isinstance(v, np.ndarray) else v) for k, v in r.extra.items()}
    return {"row_id": r.row_id, "n": int(r.n), "W": tag_to_json(r.tagW), "U": tag_to_json(r.tagU),
            "extra": extra, "v_invariant": r.v_invariant, "blocked": r.blocked}


def load_table(path=None):
    if path is None:
        text = resources.files("cilab").joinpath("data/table1.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return [record_from_json(o) for o in json.loads(text)["rows"]]


# ------------------------------------------------------------------ mutations

def _random_isotropy(rng, n, eps):
    """e^{i a} exp(X) with X in so(n) acting componentwise, scaled by eps."""
    A = rng.standard_normal((n, n))
    X = (A - A.T) / 2
    X /= max(np.linalg.norm(X), 1e-12)
    R = expm(eps * X)
    a = eps * rng.uniform(-1.0, 1.0)
    return R, a


def mutate_record(r, rng, tries=10):
    """Move U off the row's conditions, keeping its type.

    U is moved by a random isotropy element (or, for a line, by a generic
    nudge).  If no try moves the subspace U while breaking a condition, the
    Hermitian structure of U is reversed instead.  Returns (record, description).
    """
    n = r.n
    U = r.tagU
    for _ in range(tries):
        eps = rng.uniform(0.3, 1.0)
        if U.variant == "tr1":
            xi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            u = U.payload["u"] + eps * xi / np.linalg.norm(xi)
            Un = TypeTag("tr1", 1, 0, 0.0, {"u": u / np.linalg.norm(u)})
            how = f"nudge u by {eps:.3f}"
        else:
            R, a = _random_isotropy(rng, n, eps)
            Un = U.rotated(R, a)
            how = f"isotropy move of U, eps={eps:.3f}"
        cand = PairRecord(r.row_id, r.tagW, Un, r.extra, r.v_invariant, r.blocked)
        moved = la.subspace_distance(construct_type(U, n), construct_type(Un, n)) > 1e-3
        if moved and max(row_conditions(cand).values()) > 1e-6:
            return cand, how
    if "Ip" in U.payload:
        p = dict(U.payload)
        p["Ip"] = -p["Ip"]
        Un = TypeTag(U.variant, U.k, U.l, U.phi, p)
        cand = PairRecord(r.row_id, r.tagW, Un, r.extra, r.v_invariant, r.blocked)
        return cand, "reverse Hermitian structure of U"
    return cand, how


@dataclass
class RowResult:
    row_id: str
    n: int
    ok: bool
    residuals: dict
    conditions: dict
    mutations_failed: int
    mutations_total: int
    mutation_min_residual: float
    v_invariant: object = None

    @property
    def max_residual(self):
        return max(self.residuals.values())


def verify_row(r, n=None, sign=1, mutations=20, rng=None):
    n = r.n if n is None else n
    rng = np.random.default_rng(0) if rng is None else rng
    m = CurvatureModel("grassmannian2", n, sign)
    cond = row_conditions(r)
    W = construct_type(r.tagW, n)
    U = construct_type(r.tagU, n)
    v = is_ci_pair(m, W, U)
    failed = 0
    min_res = np.inf
    for _ in range(mutations):
        rm, _how = mutate_record(r, rng)
        Um = construct_type(rm.tagU, n)
        vm = is_ci_pair(m, W, Um)
        failed += int(not vm.ok)
        min_res = min(min_res, vm.residual)
    vinv = None
    if r.v_invariant:
        vinv = bool(is_curvature_invariant(m, la.sum_subspaces(W, U)))
    ok = v.ok and max(cond.values()) <= CONDITION_TOL and failed == mutations and vinv is not False
    return RowResult(r.row_id, n, bool(ok), v.details, cond, failed, mutations,
                     float(min_res if mutations else 0.0), vinv)


def verify_table(n=None, sign=1, seed=24601, mutations=20, rows=None):
    """Check every row fitting in C^n (each at its own n when n is None)."""
    rows = load_table() if rows is None else rows
    out = []
    for idx, r in enumerate(rows):
        if n is not None and r.n > n:
            continue
        rng = np.random.default_rng([seed, idx])
        out.append(verify_row(r, n, sign, mutations, rng))
    return out


# ------------------------------------------------------------------ randomized search

def parse_label(label):
    """'c_2', 'tr_1,1', "c_1'", "tr_2'", 'ex3', 'ex2', 'tr1' -> (variant, k, l)."""
    s = label.strip()
    if s in ("ex3", "ex2", "tr1"):
        return s, (1 if s == "tr1" else 0), 0
    if s.endswith("'"):
        base, k = s[:-1].split("_")
        return {"c": "c_k_prime", "tr": "tr_k_prime"}[base], int(k), 0
    base, rest = s.split("_", 1)
    if base == "c":
        return "c_k", int(rest), 0
    if base == "tr":
        k, l = rest.split(",")
        return "tr_kl", int(k), int(l)
    raise ValueError(f"cannot parse type label {label!r}")


def _frames(rng, B, n, s, Q=None):
    """Batch of orthonormal n x s frames, optionally inside the range of projectors Q."""
    G = rng.standard_normal((B, n, s))
    if Q is not None:
        G = Q @ G
    if s == 0:
        return G
    F, R = np.linalg.qr(G)
    return F * np.sign(np.diagonal(R, axis1=1, axis2=2))[:, None, :]


def _spanning_batch(variant, k, l, F, phi):
    """Complex spanning vectors (B, n, d) of a family from frames F (B, n, s)."""
    if variant == "c_k":
        Z = np.concatenate([F, 1j * F], axis=2)
    elif variant == "tr_kl":
        Z = np.concatenate([F[:, :, :k], 1j * F[:, :, k:]], axis=2).astype(complex)
    elif variant == "c_k_prime":
        v = F[:, :, :k] - 1j * F[:, :, k:]
        Z = np.concatenate([v, 1j * v], axis=2)
    elif variant == "tr_k_prime":
        Z = F[:, :, :k] - 1j * F[:, :, k:]
    elif variant == "ex3":
        e1, e2 = F[:, :, 0], F[:, :, 1]
        Z = np.stack([e1 - 1j * e2, 1j * (e1 - 1j * e2), e1 + 1j * e2], axis=2)
    elif variant == "ex2":
        e1, e2, e3 = F[:, :, 0], F[:, :, 1], F[:, :, 2]
        Z = np.stack([2 * e1 + 1j * e2, e2 + 1j * (e1 + SQRT3 * e3)], axis=2)
    else:
        raise ValueError(variant)
    Z = np.exp(1j * phi)[:, None, None] * Z
    return Z / np.linalg.norm(Z, axis=1, keepdims=True)


def _rows(Z):
    """Realified rows (B, d, 2n) from complex columns (B, n, d)."""
    return np.concatenate([Z.real, Z.imag], axis=1).transpose(0, 2, 1)


def _complement_projector(M, tol=la.RANK_TOL):
    """Projectors onto the orthogonal complement of the column span of each M (B, n, c)."""
    B, n, _ = M.shape
    Uu, s, _ = np.linalg.svd(M, full_matrices=True)
    smax = np.maximum(s[:, :1], 1e-300)
    keep = np.zeros((B, n), dtype=bool)
    keep[:, : s.shape[1]] = s > tol * smax
    Qc = Uu * (~keep)[:, None, :]
    return Qc @ Qc.transpose(0, 2, 1), n - keep.sum(axis=1)


def _sample_first(rng, spec, n, B):
    variant, k, l = spec
    if variant == "tr1":
        u = rng.standard_normal((B, n)) + 1j * rng.standard_normal((B, n))
        Z = (u / np.linalg.norm(u, axis=1, keepdims=True))[:, :, None]
        return Z, {"u": Z[:, :, 0]}
    F = _frames(rng, B, n, support_dim(variant, k, l))
    phi = rng.uniform(0.0, np.pi, B)
    return _spanning_batch(variant, k, l, F, phi), {"frame": F, "phi": phi}


def _sample_second(rng, spec, n, ZW):
    """U samples; the payload is projected so that U is orthogonal to W where room allows."""
    variant, k, l = spec
    B = ZW.shape[0]
    if variant == "tr1":
        u = rng.standard_normal((B, n)) + 1j * rng.standard_normal((B, n))
        x = np.concatenate([u.real, u.imag], axis=1)
        BW = _rows(ZW)
        x = x - np.einsum("bi,bix->bx", np.einsum("bx,bix->bi", x, BW), BW)
        u = x[:, :n] + 1j * x[:, n:]
        nrm = np.linalg.norm(u, axis=1, keepdims=True)
        u = u / np.maximum(nrm, 1e-300)
        return u[:, :, None], {"u": u}
    s = support_dim(variant, k, l)
    phi = rng.uniform(0.0, np.pi, B)
    rot = np.exp(-1j * phi)[:, None, None] * ZW
    M = np.concatenate([rot.real, rot.imag], axis=2)
    Q, room = _complement_projector(M)
    Q = np.where((room >= s)[:, None, None], Q, np.eye(n)[None])
    F = _frames(rng, B, n, s, Q)
    return _spanning_batch(variant, k, l, F, phi), {"frame": F, "phi": phi}


def search_dimension(specA, specB):
    a = support_dim(*specA)
    b = support_dim(*specB)
    nmin = 3 if "ex2" in (specA[0], specB[0]) else 2
    return max(nmin, a + b + 1)


@dataclass
class SearchResult:
    typeA: str
    typeB: str
    n: int
    budget: int
    seed: int
    hits: list
    closest: float
    closest_clauses: dict

    @property
    def n_hits(self):
        return len(self.hits)


def search_pairs(m, typeA, typeB, budget, seed, batch=2000, keep=10):
    """Random orthogonal candidates of two families; returns the pairs passing every clause.

    Hits need all residuals <= 1e-9.  ``closest`` is the smallest worst-clause
    residual seen, a measure of how near the sampler came to a pair.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    specA = parse_label(typeA) if isinstance(typeA, str) else tuple(typeA)
    specB = parse_label(typeB) if isinstance(typeB, str) else tuple(typeB)
    n = m.n
    rng = np.random.default_rng(seed)
    hits = []
    closest = np.inf
    closest_clauses = {}
    done = 0
    while done < budget:
        B = min(batch, budget - done)
        ZW, _ = _sample_first(rng, specA, n, B)
        ZU, _ = _sample_second(rng, specB, n, ZW)
        BW, BU = _rows(ZW), _rows(ZU)
        res = pair_residuals_batch(m, BW, BU)
        worst = np.max(np.stack([res[c] for c in CLAUSES]), axis=0)
        i = int(np.argmin(worst))
        if worst[i] < closest:
            closest = float(worst[i])
            closest_clauses = {c: float(res[c][i]) for c in CLAUSES}
        for j in np.flatnonzero(worst <= HIT_TOL):
            if len(hits) < keep:
                hits.append({
                    "sample": done + int(j),
                    "W": la.span_orthonormal(list(ZW[j].T), n=n),
                    "U": la.span_orthonormal(list(ZU[j].T), n=n),
                    "residuals": {c: float(res[c][j]) for c in CLAUSES},
                })
            else:
                hits.append({"sample": done + int(j)})
        done += B
    return SearchResult(str(typeA), str(typeB), n, budget, seed, hits, closest, closest_clauses)


# types named in the nonexistence statements, both orders covered by symmetry
FORBIDDEN_PAIRS = (
    ("c_1", "tr_1,1"), ("c_2", "tr_2,0"), ("c_1", "tr_2'"), ("c_1", "ex3"), ("c_1", "ex2"),
    ("c_1", "tr1"),
    ("tr_1,1", "c_1'"), ("c_2'", "tr1"), ("tr_2'", "c_1'"),
    ("ex3", "c_1'"), ("ex3", "tr_2'"), ("ex3", "tr_1,1"), ("ex3", "ex3"),
    ("ex2", "c_1"), ("ex2", "tr_1,1"), ("ex2", "c_1'"), ("ex2", "tr_2'"), ("ex2", "ex3"),
    ("ex2", "ex2"), ("ex2", "tr1"),
)


def forbidden_search(typeA, typeB, budget=10_000, seed=1, sign=1, n=None):
    specA, specB = parse_label(typeA), parse_label(typeB)
    n = search_dimension(specA, specB) if n is None else n
    m = CurvatureModel("grassmannian2", n, sign)
    return search_pairs(m, typeA, typeB, budget, seed)


__all__ = [
    "is_ci_pair", "pair_residuals_batch", "PairRecord", "row_conditions", "check_conditions",
    "construct_pair", "load_table", "mutate_record", "verify_row", "verify_table", "RowResult",
    "parse_label", "search_pairs", "search_dimension", "SearchResult", "FORBIDDEN_PAIRS",
    "forbidden_search",
]
