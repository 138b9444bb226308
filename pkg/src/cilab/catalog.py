"""The seven families of curvature-invariant subspaces of the 2-plane Grassmannian.

A TypeTag holds the family name, its integer parameters, a real-form angle
phi and real coordinate data in R^n; ``construct_type`` turns it into a
subspace of C^n and ``classify`` goes back.
"""
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import linalg as la
from .curvature import (
    CurvatureModel, curvature_matrices, graded_stabilizer, is_curvature_invariant, pair_matrices,
)

VARIANTS = ("c_k", "tr_kl", "c_k_prime", "tr_k_prime", "ex3", "ex2", "tr1")
B_TOL = 1e-8
PAYLOAD_TOL = 1e-10


class TypeTagError(ValueError):
    pass


class ClassificationError(RuntimeError):
    pass


class NotInvariantError(ValueError):
    def __init__(self, residual):
        super().__init__(f"not curvature invariant (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True, eq=False)
class TypeTag:
    """Family name, parameters and payload of a curvature-invariant subspace.

    Payload keys (real arrays with n rows, columns are vectors):
      c_k        W0
      tr_kl      W1, W2
      c_k_prime  Wp (n x 2k), Ip (n x n, a Hermitian structure on span Wp)
      tr_k_prime Wp, Ip, W0p (n x k, with Wp = W0p + Ip W0p)
      ex3        frame (n x 2)
      ex2        frame (n x 3)
      tr1        u (complex n-vector)
    """
    variant: str
    k: int = 0
    l: int = 0
    phi: float = 0.0
    payload: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise TypeTagError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "phi", float(np.mod(self.phi, np.pi)))
        p = {}
        for key, val in self.payload.items():
            if key == "u":
                p[key] = np.array(val, dtype=complex)
            else:
                a = np.array(val, dtype=float)
                p[key] = a[:, None] if a.ndim == 1 else a
        for v in p.values():
            v.setflags(write=False)
        object.__setattr__(self, "payload", p)

    @property
    def n(self):
        if self.variant == "tr1":
            return self.payload["u"].shape[0]
        for key in ("W0", "W1", "Wp", "frame"):
            if key in self.payload:
                return self.payload[key].shape[0]
        raise TypeTagError("empty payload")

    @property
    def params(self):
        return (self.variant, self.k, self.l)

    def label(self):
        if self.variant == "tr_kl":
            return f"tr_{self.k},{self.l}"
        if self.variant == "c_k":
            return f"c_{self.k}"
        if self.variant == "c_k_prime":
            return f"c_{self.k}'"
        if self.variant == "tr_k_prime":
            return f"tr_{self.k}'"
        return self.variant

    def canonical(self):
        """Normal form: tr_{k,l} is stored with k >= l, and phi < pi/2 when k = l."""
        if self.variant != "tr_kl":
            return self
        swap = self.k < self.l or (self.k == self.l and self.phi >= np.pi / 2)
        if not swap:
            return self
        p = self.payload
        return TypeTag("tr_kl", self.l, self.k, self.phi + np.pi / 2,
                       {"W1": p["W2"], "W2": p["W1"]})

    def rotated(self, R, dphi=0.0):
        """Apply the componentwise rotation R (n x n orthogonal) and shift phi."""
        p = {}
        for key, val in self.payload.items():
            if key == "Ip":
                p[key] = R @ val @ R.T
            elif key == "u":
                p[key] = np.exp(1j * dphi) * (R @ val)
            else:
                p[key] = R @ val
        phi = self.phi if self.variant == "tr1" else self.phi + dphi
        return TypeTag(self.variant, self.k, self.l, phi, p)

    def padded(self, n):
        """Same tag with the payload embedded in R^n (n >= current n)."""
        n0 = self.n
        if n < n0:
            raise TypeTagError(f"payload needs n >= {n0}")
        if n == n0:
            return self
        p = {}
        for key, val in self.payload.items():
            if key == "u":
                p[key] = np.concatenate([val, np.zeros(n - n0, dtype=complex)])
            elif key == "Ip":
                M = np.zeros((n, n))
                M[:n0, :n0] = val
                p[key] = M
            else:
                M = np.zeros((n, val.shape[1]))
                M[:n0] = val
                p[key] = M
        return TypeTag(self.variant, self.k, self.l, self.phi, p)


# ------------------------------------------------------------------ validation

def _ortho_residual(F):
    if F.shape[1] == 0:
        return 0.0
    return float(np.max(np.abs(F.T @ F - np.eye(F.shape[1]))))


def _frame_of(t, key, cols):
    if key not in t.payload:
        raise TypeTagError(f"payload for {t.variant} needs {key!r}")
    F = t.payload[key]
    if F.ndim != 2 or F.shape[1] != cols:
        raise TypeTagError(f"{key!r} must have {cols} columns, got shape {F.shape}")
    if _ortho_residual(F) > PAYLOAD_TOL:
        raise TypeTagError(f"{key!r} is not orthonormal")
    return F


def _check_hermitian(Ip, Wp):
    if Ip.shape != (Wp.shape[0], Wp.shape[0]):
        raise TypeTagError("Ip must be n x n")
    if np.max(np.abs(Ip + Ip.T)) > PAYLOAD_TOL:
        raise TypeTagError("Ip is not skew")
    if np.max(np.abs(Ip @ Ip @ Wp + Wp)) > PAYLOAD_TOL:
        raise TypeTagError("Ip does not square to -1 on Wp")
    P = Wp @ Wp.T
    if np.max(np.abs(Ip - P @ Ip @ P)) > PAYLOAD_TOL:
        raise TypeTagError("Ip does not live on Wp")


def validate_tag(t, n=None):
    v, k, l = t.variant, t.k, t.l
    nn = t.n
    if n is not None and n < nn:
        raise TypeTagError(f"payload needs n >= {nn}")
    n = nn if n is None else n
    if v == "c_k":
        if k < 1:
            raise TypeTagError("c_k needs k >= 1")
        _frame_of(t, "W0", k)
    elif v == "tr_kl":
        if k < 0 or l < 0 or k + l < 2:
            raise TypeTagError("tr_kl needs k + l >= 2")
        W1 = _frame_of(t, "W1", k)
        W2 = _frame_of(t, "W2", l)
        if k and l and np.max(np.abs(W1.T @ W2)) > PAYLOAD_TOL:
            raise TypeTagError("W1 and W2 must be orthogonal")
    elif v in ("c_k_prime", "tr_k_prime"):
        if k < 1 or (v == "tr_k_prime" and k < 2):
            raise TypeTagError(f"{v} needs k >= {1 if v == 'c_k_prime' else 2}")
        Wp = _frame_of(t, "Wp", 2 * k)
        if "Ip" not in t.payload:
            raise TypeTagError("payload needs 'Ip'")
        _check_hermitian(t.payload["Ip"], Wp)
        if v == "tr_k_prime":
            W0p = _frame_of(t, "W0p", k)
            Ip = t.payload["Ip"]
            if np.max(np.abs(W0p.T @ Ip @ W0p)) > PAYLOAD_TOL:
                raise TypeTagError("W0p is not a real form of (Wp, Ip)")
            F = np.hstack([W0p, Ip @ W0p])
            if np.max(np.abs(F @ F.T - Wp @ Wp.T)) > PAYLOAD_TOL:
                raise TypeTagError("Wp != W0p + Ip W0p")
    elif v == "ex3":
        _frame_of(t, "frame", 2)
    elif v == "ex2":
        if n < 3:
            raise TypeTagError("ex2 needs n >= 3")
        _frame_of(t, "frame", 3)
    elif v == "tr1":
        u = t.payload.get("u")
        if u is None or abs(np.linalg.norm(u) - 1.0) > PAYLOAD_TOL:
            raise TypeTagError("tr1 needs a unit vector 'u'")
    if v != "tr1" and n < 2:
        raise TypeTagError("n must be >= 2")
    return True


# ------------------------------------------------------------------ constructors

SQRT3 = np.sqrt(3.0)


def spanning_vectors(t):
    """Complex vectors spanning the subspace of a tag (before orthonormalizing)."""
    p = t.payload
    v = t.variant
    if v == "c_k":
        vecs = [w.astype(complex) for w in p["W0"].T] + [1j * w for w in p["W0"].T]
    elif v == "tr_kl":
        vecs = [w.astype(complex) for w in p["W1"].T] + [1j * w for w in p["W2"].T]
    elif v == "c_k_prime":
        vecs = [w - 1j * (p["Ip"] @ w) for w in p["Wp"].T]
    elif v == "tr_k_prime":
        vecs = [w - 1j * (p["Ip"] @ w) for w in p["W0p"].T]
    elif v == "ex3":
        e1, e2 = p["frame"].T
        vecs = [e1 - 1j * e2, e2 + 1j * e1, e1 + 1j * e2]
    elif v == "ex2":
        e1, e2, e3 = p["frame"].T
        vecs = [2 * e1 + 1j * e2, e2 + 1j * (e1 + SQRT3 * e3)]
    else:
        return [p["u"]]
    rot = np.exp(1j * t.phi)
    return [rot * w for w in vecs]


def construct_type(t, n=None):
    """Subspace of C^n described by a tag."""
    n = t.n if n is None else n
    validate_tag(t, n)
    t = t.padded(n)
    return la.span_orthonormal(spanning_vectors(t), n=n)


def random_frame(rng, n, k):
    if k == 0:
        return np.zeros((n, 0))
    Q, R = np.linalg.qr(rng.standard_normal((n, k)))
    return Q * np.sign(np.diag(R))


def hermitian_from_frame(F):
    """Ip with Ip F[:, j] = F[:, k + j] for an orthonormal frame F of width 2k."""
    k = F.shape[1] // 2
    A, B = F[:, :k], F[:, k:]
    return B @ A.T - A @ B.T


def support_dim(variant, k=0, l=0):
    """Number of real directions of R^n a family member occupies."""
    return {"c_k": k, "tr_kl": k + l, "c_k_prime": 2 * k, "tr_k_prime": 2 * k,
            "ex3": 2, "ex2": 3, "tr1": 1}[variant]


def admissible_params(variant, n):
    """All (k, l) allowed for a family at complex dimension n."""
    out = []
    if variant == "c_k":
        out = [(k, 0) for k in range(1, n + 1)]
    elif variant == "tr_kl":
        out = [(k, l) for k in range(n + 1) for l in range(n + 1 - k) if k + l >= 2]
    elif variant == "c_k_prime":
        out = [(k, 0) for k in range(1, n // 2 + 1)]
    elif variant == "tr_k_prime":
        out = [(k, 0) for k in range(2, n // 2 + 1)]
    elif variant == "ex3":
        out = [(0, 0)] if n >= 2 else []
    elif variant == "ex2":
        out = [(0, 0)] if n >= 3 else []
    elif variant == "tr1":
        out = [(1, 0)] if n >= 1 else []
    return out


def random_tag(variant, n, rng, k=None, l=None, phi=None):
    """Random member of a family with i.i.d. normal payload entries, orthonormalized."""
    if k is None:
        opts = admissible_params(variant, n)
        if not opts:
            raise TypeTagError(f"{variant} is not admissible at n={n}")
        k, l = opts[rng.integers(len(opts))]
    l = 0 if l is None else l
    if phi is None:
        phi = rng.uniform(0.0, np.pi)
    if variant == "c_k":
        return TypeTag(variant, k, 0, phi, {"W0": random_frame(rng, n, k)})
    if variant == "tr_kl":
        F = random_frame(rng, n, k + l)
        return TypeTag(variant, k, l, phi, {"W1": F[:, :k], "W2": F[:, k:]})
    if variant == "c_k_prime":
        F = random_frame(rng, n, 2 * k)
        return TypeTag(variant, k, 0, phi, {"Wp": F, "Ip": hermitian_from_frame(F)})
    if variant == "tr_k_prime":
        F = random_frame(rng, n, 2 * k)
        return TypeTag(variant, k, 0, phi, {"Wp": F, "Ip": hermitian_from_frame(F), "W0p": F[:, :k]})
    if variant == "ex3":
        return TypeTag(variant, 0, 0, phi, {"frame": random_frame(rng, n, 2)})
    if variant == "ex2":
        return TypeTag(variant, 0, 0, phi, {"frame": random_frame(rng, n, 3)})
    if variant == "tr1":
        u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        return TypeTag(variant, 1, 0, 0.0, {"u": u / np.linalg.norm(u)})
    raise TypeTagError(variant)


# ------------------------------------------------------------------ classifier

def _real_parts(S, phi=0.0):
    """Real coordinate vectors of a subspace contained in e^{i phi} R^n."""
    Z = np.exp(-1j * phi) * S.vectors
    return Z.real.T


def _orth_cols(A, tol=la.RANK_TOL):
    U, s, _ = np.linalg.svd(A, full_matrices=False)
    r = int(np.sum(s > tol * max(float(s[0]) if s.size else 0.0, 1e-300)))
    return U[:, :r]


def _features(W):
    n = W.n
    J = la.complex_structure(n)
    JW = la.apply_operator(J, W)
    c = la.intersect(W, JW).dim
    G = W.basis.T @ J @ W.basis
    totally_real = bool(np.max(np.abs(G), initial=0.0) <= la.RANK_TOL)
    Z = W.vectors
    Bm = Z @ Z.T
    return c, totally_real, Bm


def _hermitian_from_parts(A, Bim):
    """Real frame V of span(A) and Ip with Ip a_j = -b_j (a_j, b_j columns)."""
    V = _orth_cols(A)
    IV = -Bim @ np.linalg.pinv(A) @ V
    return V, IV


def _classify_complex(W, bzero):
    d = W.dim
    k = d // 2
    if not bzero:
        W0 = _real_parts(la.intersect(W, la.real_form(W.n)))
        return TypeTag("c_k", k, 0, 0.0, {"W0": W0})
    Z = W.vectors
    V, IV = _hermitian_from_parts(Z.real.T, Z.imag.T)
    Ip = IV @ V.T
    Ip = 0.5 * (Ip - Ip.T)
    return TypeTag("c_k_prime", k, 0, 0.0, {"Wp": V, "Ip": Ip})


def _classify_totally_real(W, Bm, bzero):
    d = W.dim
    n = W.n
    if bzero:
        Z = W.vectors
        V, IV = _hermitian_from_parts(Z.real.T, Z.imag.T)
        # re-orthonormalize the pair (V, IV) jointly
        F = np.linalg.qr(np.hstack([V, IV]))[0]
        F = F * np.sign(np.sum(F * np.hstack([V, IV]), axis=0))
        V, IV = F[:, :d], F[:, d:]
        Ip = IV @ V.T - V @ IV.T
        return TypeTag("tr_k_prime", d, 0, 0.0, {"Wp": np.hstack([V, IV]), "Ip": Ip, "W0p": V})
    idx = np.unravel_index(np.argmax(np.abs(Bm)), Bm.shape)
    phi0 = float(np.mod(np.angle(Bm[idx]) / 2.0, np.pi))
    best = None
    for phi in sorted({phi0, float(np.mod(phi0 + np.pi / 2, np.pi))}):
        R1 = la.intersect(W, la.real_form(n, phi))
        R2 = la.intersect(W, la.real_form(n, phi + np.pi / 2))
        if R1.dim + R2.dim != d:
            continue
        if best is None or R1.dim > best[1].dim:
            best = (phi, R1, R2)
    if best is None:
        raise ClassificationError("no real form splits the totally real subspace")
    phi, R1, R2 = best
    W1 = _real_parts(R1, phi)
    W2 = _real_parts(R2, phi + np.pi / 2)
    return TypeTag("tr_kl", R1.dim, R2.dim, phi, {"W1": W1, "W2": W2})


def _classify_ex3(W):
    n = W.n
    C = la.intersect(W, la.apply_operator(la.complex_structure(n), W))
    R = W.basis - C.basis @ (C.basis.T @ W.basis)
    j = int(np.argmax(np.linalg.norm(R, axis=0)))
    x3 = la.complexify(R[:, j] / np.linalg.norm(R[:, j]))
    F = np.sqrt(2.0) * np.stack([x3.real, x3.imag], axis=1)
    Q, Rq = np.linalg.qr(F)
    F = Q * np.sign(np.diag(Rq))
    return TypeTag("ex3", 0, 0, 0.0, {"frame": F})


def _classify_ex2(m, W):
    n = W.n
    b1, b2 = W.basis.T
    G = curvature_matrices(CurvatureModel("grassmannian2", n, 1), b1, b2)
    J = la.complex_structure(n)
    c = np.sum(G * J) / np.sum(J * J)
    A = (G[:n, :n] / c)
    # A = e1^e2 + sqrt3 e2^e3 = 2 f ^ e2 with f = (e1 - sqrt3 e3) / 2
    w, Q = np.linalg.eigh(A.T @ A)
    f = Q[:, -1]
    e2 = A @ f / 2.0
    l = f + 1j * e2
    z0 = la.complexify(b1)
    z = np.vdot(l, z0) / 2.0
    r = z0 - z * l
    q = r / (SQRT3 * np.conj(z))
    phi = float(np.angle(np.sum(q * q)) / 4.0)
    g = np.real(np.exp(-2j * phi) * q)
    g = g - (g @ f) * f - (g @ e2) * e2
    g = g / np.linalg.norm(g)
    e1 = (f + SQRT3 * g) / 2.0
    e3 = (-SQRT3 * f + g) / 2.0
    frame = np.stack([e1, e2, e3], axis=1)
    return TypeTag("ex2", 0, 0, phi, {"frame": frame})


def classify(m, W, check=True):
    """Type tag of a curvature-invariant subspace of the Grassmannian model.

    Features: d = dim W, c = dim(W cap JW), whether W is totally real and
    whether the complex bilinear form vanishes on W.
    """
    if m.kind != "grassmannian2":
        raise ValueError("classify needs the grassmannian2 model")
    if check:
        v = is_curvature_invariant(m, W)
        if not v.ok:
            raise NotInvariantError(v.residual)
    d = W.dim
    if d == 0:
        raise ClassificationError("the zero subspace has no type")
    if d == 1:
        t = TypeTag("tr1", 1, 0, 0.0, {"u": W.vectors[0]})
    else:
        c, totally_real, Bm = _features(W)
        bzero = bool(np.max(np.abs(Bm)) <= B_TOL)
        if c == d:
            t = _classify_complex(W, bzero)
        elif totally_real:
            t = _classify_totally_real(W, Bm, bzero)
        elif d == 3 and c == 2:
            t = _classify_ex3(W)
        elif d == 2 and c == 0:
            t = _classify_ex2(m, W)
        else:
            raise ClassificationError(f"no family matches (d={d}, c={c}, totally_real={totally_real})")
    back = construct_type(t, W.n)
    if not la.subspace_equal(back, W, 1e-7):
        raise ClassificationError("reconstructed subspace differs from the input")
    return t


# ------------------------------------------------------------------ curvature algebras

def expected_algebra_dim(variant, k=0, l=0):
    return {
        "c_k": 1 + comb(k, 2),
        "tr_kl": comb(k, 2) + comb(l, 2),
        "c_k_prime": k * k,
        "tr_k_prime": comb(k, 2),
        "ex3": 1,
        "ex2": 1,
        "tr1": 0,
    }[variant]


def curvature_span(m, W):
    """Orthonormal basis of span{R_{x,y} : x, y in W}."""
    d = W.dim
    N = 2 * W.n
    if d < 2:
        return np.zeros((0, N, N))
    R = pair_matrices(m, W)
    iu = np.triu_indices(d, 1)
    return la.operator_span(R[iu], dim=N)


def curvature_algebra(m, W):
    """h_W; closing the curvature span under brackets must not enlarge it."""
    span = curvature_span(m, W)
    alg = la.algebra_closure(list(span), n=W.n)
    if alg.dim != span.shape[0]:
        raise la.ClosureError("curvature span of W is not bracket closed")
    return alg


def complex_matrix(A):
    """Complex-linear operator (n x n) of a real operator commuting with J."""
    n = A.shape[0] // 2
    return A[:n, :n] + 1j * A[n:, :n]


# ------------------------------------------------------------------ J_theta

class JThetaCheckError(AssertionError):
    pass


def jtheta_operator(t, theta):
    """J_theta on C^n: zero off the complex span of Wp, see ``jtheta_structure``."""
    t = t.padded(t.n)
    p = t.payload
    v = p["W0p"]
    Iv = p["Ip"] @ v
    minus = v - 1j * Iv
    plus = v + 1j * Iv
    X = np.hstack([minus, plus])
    Y = np.hstack([np.exp(-1j * theta) * plus, -np.exp(1j * theta) * minus])
    return la.complex_to_real_matrix(Y @ np.linalg.pinv(X))


def jtheta_structure(t, theta, m=None, strict=True):
    """Checks on the complex structure J_theta attached to a (tr_k') subspace.

    With W from the tag, U = e^{-i theta} conj(W) and V = W + U, the report
    records J_theta^2 = -1 on C Wp, J_theta(W) = U, J_theta(U) = W, the
    graded stabilizer of V (dimension k(k-1), split evenly), and whether its
    even part commutes and its odd part anticommutes with J_theta on V.
    """
    if t.variant != "tr_k_prime":
        raise TypeTagError("jtheta_structure needs a tr_k_prime tag")
    theta = float(np.mod(theta, 2 * np.pi))
    n = t.n
    if n < 2 * t.k:
        raise TypeTagError("need n >= 2k")
    m = CurvatureModel("grassmannian2", n, 1) if m is None else m
    k = t.k
    W = construct_type(t, n)
    U = la.span_real(la.realify(np.exp(-1j * theta) * la.conjugate(W, t.phi).vectors).T, n)
    V = la.sum_subspaces(W, U)
    Jt = jtheta_operator(t, theta)
    Wp = t.payload["Wp"].astype(complex)
    CW = la.span_orthonormal(list(Wp.T) + list(1j * Wp.T), n=n)

    res = {}
    res["square"] = float(np.linalg.norm(Jt @ Jt @ CW.basis + CW.basis, 2))
    res["W_to_U"] = float(np.linalg.norm(Jt @ W.basis - U.project(Jt @ W.basis), 2))
    res["U_to_W"] = float(np.linalg.norm(Jt @ U.basis - W.project(Jt @ U.basis), 2))
    res["onto"] = float(la.subspace_distance(la.apply_operator(Jt, W), U))
    res["orthogonal"] = float(np.max(np.abs(W.basis.T @ U.basis)))

    stab = graded_stabilizer(m, W, U)
    P = V.projector
    JV = P @ Jt @ P
    res["plus_commute"] = max([float(np.linalg.norm(K @ JV - JV @ K, 2)) for K in stab.plus], default=0.0)
    res["minus_anticommute"] = max([float(np.linalg.norm(K @ JV + JV @ K, 2)) for K in stab.minus], default=0.0)

    half = comb(k, 2)
    dims = {"plus": stab.dims[0], "minus": stab.dims[1], "total": stab.total.shape[0]}
    dims_ok = dims["plus"] == half and dims["minus"] == half and dims["total"] == 2 * half

    # the odd part of the centralizer of h = h_W|V + h_U|V
    hW = curvature_span(m, W)
    hU = curvature_span(m, U)
    gens = [P @ A @ P for A in list(hW) + list(hU)]
    h = la.algebra_closure(gens, n=n)
    Z = la.centralizer_in_so(h, V, (W, U))
    zres = la.span_residual(Z, JV / np.linalg.norm(JV)) if Z.shape[0] else 1.0

    report = {
        "k": k,
        "theta": theta,
        "residuals": res,
        "stabilizer_dims": dims,
        "centralizer_minus_dim": int(Z.shape[0]),
        "jtheta_in_centralizer": float(zres),
    }
    ok = dims_ok and all(r <= 1e-8 for r in res.values())
    report["ok"] = bool(ok)
    if strict and not ok:
        raise JThetaCheckError(f"J_theta checks failed: {report}")
    return report
