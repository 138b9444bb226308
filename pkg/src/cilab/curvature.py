"""Curvature rules of the 2-plane Grassmannian and of complex projective space.

Everything lives at a fixed base point with T_pN = C^n.  Vectors are
realified (length 2n) inside the batched kernels; the public functions also
accept complex n-vectors.
"""
from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    RANK_TOL, OperatorAlgebra, Subspace, as_real, complex_structure, componentwise,
    operator_span, outer_wedge, span_residual,
)

KIND_ALIASES = {
    "grassmannian2": "grassmannian2",
    "grassmannian": "grassmannian2",
    "cpn": "cpn",
    "complex_projective": "cpn",
}


@dataclass(frozen=True)
class CurvatureModel:
    """Curvature rule at the base point; sign -1 gives the non-compact dual."""
    kind: str = "grassmannian2"
    n: int = 2
    sign: int = 1

    def __post_init__(self):
        if self.kind not in KIND_ALIASES:
            raise ValueError(f"unknown model kind {self.kind!r}")
        object.__setattr__(self, "kind", KIND_ALIASES[self.kind])
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        nmin = 2 if self.kind == "grassmannian2" else 1
        if int(self.n) != self.n or self.n < nmin:
            raise ValueError(f"n must be an integer >= {nmin} for {self.kind}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "sign", int(self.sign))

    def flipped(self):
        return CurvatureModel(self.kind, self.n, -self.sign)


@dataclass
class Verdict:
    ok: bool
    residual: float
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.ok)


def _vec(m, v):
    v = as_real(v, m.n)
    if v.shape[-1] != 2 * m.n:
        raise ValueError("dimension mismatch")
    return v


def _dot(a, b):
    return np.sum(a * b, axis=-1)


# ------------------------------------------------------------------ kernels

def curvature_matrices(m, X, Y, phi=0.0):
    """R_{x,y} for realified x, y (batched over leading axes)."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    n = m.n
    J = complex_structure(n)
    if m.kind == "grassmannian2":
        if phi:
            # split along e^{i phi} R^n; the result must not depend on phi
            c, s = np.cos(phi), np.sin(phi)
            rot = np.block([[c * np.eye(n), s * np.eye(n)], [-s * np.eye(n), c * np.eye(n)]])
            X = X @ rot.T
            Y = Y @ rot.T
        ax, bx = X[..., :n], X[..., n:]
        ay, by = Y[..., :n], Y[..., n:]
        coef = _dot(ay, bx) - _dot(ax, by)
        A = outer_wedge(ax, ay) + outer_wedge(bx, by)
        Z = np.zeros_like(A)
        C = np.concatenate([np.concatenate([A, Z], -1), np.concatenate([Z, A], -1)], -2)
        if phi:
            # componentwise operators of the rotated real form, in phi = 0 coordinates
            C = rot.T @ C @ rot
        R = coef[..., None, None] * J - C
    else:
        JX = X @ J.T
        JY = Y @ J.T
        omega = _dot(JX, Y)
        R = -outer_wedge(X, Y) - outer_wedge(JX, JY) - 2.0 * omega[..., None, None] * J
    return m.sign * R


def curvature_apply(m, X, Y, Z):
    """R(x, y) z for realified vectors without forming matrices (batched)."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    Z = np.asarray(Z, dtype=float)
    n = m.n

    def J(v):
        return np.concatenate([-v[..., n:], v[..., :n]], axis=-1)

    def w(x, y, z):
        # (x ^ y) z = <x,z> y - <y,z> x
        return _dot(x, z)[..., None] * y - _dot(y, z)[..., None] * x

    if m.kind == "grassmannian2":
        ax, bx = X[..., :n], X[..., n:]
        ay, by = Y[..., :n], Y[..., n:]
        p, q = Z[..., :n], Z[..., n:]
        coef = _dot(ay, bx) - _dot(ax, by)
        re = w(ax, ay, p) + w(bx, by, p)
        im = w(ax, ay, q) + w(bx, by, q)
        out = coef[..., None] * J(Z) - np.concatenate([re, im], axis=-1)
    else:
        JX, JY = J(X), J(Y)
        omega = _dot(JX, Y)
        out = -w(X, Y, Z) - w(JX, JY, Z) - 2.0 * omega[..., None] * J(Z)
    return m.sign * out


# ------------------------------------------------------------------ public operations

def curvature_endomorphism(m, u, v, phi=0.0):
    """The skew operator R_{u,v} as a real 2n x 2n matrix."""
    return curvature_matrices(m, _vec(m, u), _vec(m, v), phi)


def curvature_tensor(m, u, v, w):
    """R(u, v) w, returned realified."""
    return curvature_apply(m, _vec(m, u), _vec(m, v), _vec(m, w))


def sectional_curvature(m, u, v):
    u, v = _vec(m, u), _vec(m, v)
    gram = _dot(u, u) * _dot(v, v) - _dot(u, v) ** 2
    if gram <= 1e-12:
        raise ValueError("vectors are linearly dependent")
    return float(_dot(curvature_apply(m, u, v, v), u) / gram)


def pair_matrices(m, W):
    """R_{b_i,b_j} for all basis pairs of W, shape (d, d, 2n, 2n)."""
    B = W.basis.T
    return curvature_matrices(m, B[:, None, :], B[None, :, :])


def triple_images(m, A, B, C):
    """R(a_i, b_j) c_k for rows of A, B, C, shape (|A|, |B|, |C|, 2n)."""
    return curvature_apply(m, A[:, None, None, :], B[None, :, None, :], C[None, None, :, :])


def _outside(S, V):
    """Norms of the components of the vectors V (last axis) orthogonal to S."""
    if S.dim == 0:
        return np.linalg.norm(V, axis=-1)
    P = V - (V @ S.basis) @ S.basis.T
    return np.linalg.norm(P, axis=-1)


def is_curvature_invariant(m, W):
    """R(W, W, W) in W, checked on basis triples; residual is the max outside norm."""
    if W.dim <= 1:
        return Verdict(True, 0.0)
    B = W.basis.T
    T = triple_images(m, B, B, B)
    res = float(np.max(_outside(W, T)))
    return Verdict(res <= RANK_TOL, res)


def is_curvature_isotropic(m, W):
    """All R_{x,y} vanish on W; cross-checked against sectional curvatures of basis pairs."""
    d = W.dim
    if d <= 1:
        return Verdict(True, 0.0)
    R = pair_matrices(m, W)
    norms = np.linalg.norm(R, 2, axis=(-2, -1))
    res = float(np.max(norms))
    ok = res <= RANK_TOL
    B = W.basis.T
    iu = np.triu_indices(d, 1)
    X, Y = B[iu[0]], B[iu[1]]
    K = _dot(curvature_apply(m, X, Y, Y), X)
    flat_by_k = bool(np.max(np.abs(K)) <= RANK_TOL)
    if flat_by_k != ok:
        raise AssertionError("curvature endomorphisms and sectional curvatures disagree")
    return Verdict(ok, res, {"max_sectional": float(np.max(np.abs(K)))})


def isotropy_generators(m):
    """Spanning set of the isotropy image acting on T_pN."""
    n = m.n
    J = complex_structure(n)
    gens = []
    for a in range(n):
        for b in range(a + 1, n):
            E = np.zeros((n, n))
            E[b, a] = 1.0
            E[a, b] = -1.0
            gens.append(componentwise(E))
    if m.kind == "grassmannian2":
        return np.array([J] + gens)
    # u(n): [[A, -S], [S, A]] with A skew, S symmetric
    for a in range(n):
        for b in range(a, n):
            S = np.zeros((n, n))
            S[a, b] = S[b, a] = 1.0
            Z = np.zeros((n, n))
            gens.append(np.block([[Z, -S], [S, Z]]))
    return np.array(gens)


def isotropy_algebra(m):
    gens = isotropy_generators(m)
    return OperatorAlgebra(m.n, operator_span(gens), tuple(gens))


def isotropy_residual(m, A):
    """Least-squares residual of A against the isotropy algebra."""
    return span_residual(isotropy_algebra(m).basis, A)


@dataclass
class GradedStabilizer:
    plus: np.ndarray
    minus: np.ndarray
    total: np.ndarray

    @property
    def dims(self):
        return self.plus.shape[0], self.minus.shape[0]

    @property
    def is_graded(self):
        return self.plus.shape[0] + self.minus.shape[0] == self.total.shape[0]


def _solve_constraints(gens, blocks):
    """Coefficient vectors c with sum c_g (1 - P_T) g B_S = 0 for each (S, T) block."""
    cols = []
    for g in gens:
        parts = []
        for S, T in blocks:
            if S.dim == 0:
                continue
            img = g @ S.basis
            if T.dim:
                img = img - T.basis @ (T.basis.T @ img)
            parts.append(img.ravel())
        cols.append(np.concatenate(parts) if parts else np.zeros(0))
    M = np.array(cols).T
    if M.size == 0:
        return np.eye(len(gens))
    _, s, Vt = np.linalg.svd(M)
    r = int(np.sum(s > RANK_TOL * max(1.0, float(s[0]) if s.size else 1.0)))
    return Vt[r:]


def graded_stabilizer(m, W, U):
    """Isotropy elements preserving V = W + U, restricted to V.

    ``plus`` preserves W and U, ``minus`` swaps them, ``total`` is every
    restriction of a stabilizing element.  All are ambient operators
    compressed to V.
    """
    if np.max(np.abs(W.basis.T @ U.basis), initial=0.0) > RANK_TOL:
        raise ValueError("W and U must be orthogonal")
    n = m.n
    gens = isotropy_algebra(m).basis
    V = Subspace(n, np.hstack([W.basis, U.basis]))
    P = V.projector

    def restricted(coeffs):
        if coeffs.shape[0] == 0:
            return np.zeros((0, 2 * n, 2 * n))
        ops = np.tensordot(coeffs, gens, axes=1)
        ops = P @ ops @ P
        return operator_span(ops, dim=2 * n)

    total = restricted(_solve_constraints(gens, [(V, V)]))
    plus = restricted(_solve_constraints(gens, [(W, W), (U, U)]))
    minus = restricted(_solve_constraints(gens, [(W, U), (U, W)]))
    return GradedStabilizer(plus, minus, total)
