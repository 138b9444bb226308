"""Real/complex linear algebra on C^n viewed as the real space R^{2n}.

A tangent vector z in C^n is stored either as a complex array of length n or
in realified form x = [Re z, Im z].  Subspaces carry a real orthonormal basis
of realified columns, skew operators are real 2n x 2n matrices.
"""
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

RANK_TOL = 1e-8
ORTHO_TOL = 1e-10
INTERSECT_TOL = 1e-9


class InvarianceError(ValueError):
    pass


class ClosureError(RuntimeError):
    pass


# --------------------------------------------------------------- vectors

def realify(z):
    z = np.asarray(z, dtype=complex)
    return np.concatenate([z.real, z.imag], axis=-1)


def complexify(x):
    x = np.asarray(x, dtype=float)
    n = x.shape[-1] // 2
    return x[..., :n] + 1j * x[..., n:]


def as_real(v, n=None):
    """Accept a complex n-vector or a realified 2n-vector, return realified.

    A real array of length n (when n is given) is read as a complex vector
    with zero imaginary part.
    """
    v = np.asarray(v)
    if np.iscomplexobj(v):
        return realify(v)
    if n is not None and v.shape[-1] == n:
        return realify(v)
    return v.astype(float)


def unit(n, a, imag=False):
    """Standard basis vector e_a (0-based), optionally multiplied by i."""
    z = np.zeros(n, dtype=complex)
    z[a] = 1j if imag else 1.0
    return z


def inner(u, v):
    """Real inner product Re sum u conj(v)."""
    return float(np.real(np.vdot(np.asarray(v, dtype=complex), np.asarray(u, dtype=complex))))


def complex_bilinear(u, v):
    """B(u, v) = sum u_a v_a, no conjugation."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError("dimension mismatch")
    return complex(np.sum(u * v))


def split_real_imag(u, phi, embedded=False):
    """Split u along the real form e^{i phi} R^n.

    Returns real coordinate vectors (a, b) with u = e^{i phi} (a + i b).
    With ``embedded=True`` the parts e^{i phi} a and e^{i phi} b are returned
    instead; they lie in the real form and satisfy u = re + i im.
    """
    u = np.asarray(u, dtype=complex)
    w = np.exp(-1j * phi) * u
    a, b = w.real.copy(), w.imag.copy()
    if embedded:
        rot = np.exp(1j * phi)
        return rot * a, rot * b
    return a, b


# --------------------------------------------------------------- operators

def complex_structure(n):
    """Multiplication by i in realified coordinates."""
    I = np.eye(n)
    Z = np.zeros((n, n))
    return np.block([[Z, -I], [I, Z]])


def componentwise(A):
    """Real n x n matrix acting on Re and Im parts separately."""
    A = np.asarray(A, dtype=float)
    Z = np.zeros_like(A)
    return np.block([[A, Z], [Z, A]])


def complex_to_real_matrix(M):
    """Realification of a complex-linear map of C^n."""
    M = np.asarray(M, dtype=complex)
    return np.block([[M.real, -M.imag], [M.imag, M.real]])


def outer_wedge(x, y):
    """(x ^ y) z = <x,z> y - <y,z> x for realified x, y (batched)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return y[..., :, None] * x[..., None, :] - x[..., :, None] * y[..., None, :]


def wedge(x, y):
    """Wedge of two tangent vectors as a skew operator of R^{2n}."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise ValueError("dimension mismatch")
    return outer_wedge(realify(x), realify(y))


def real_wedge(a, b):
    """Wedge of real vectors of R^n acting componentwise on C^n."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError("dimension mismatch")
    return componentwise(outer_wedge(a, b))


def bracket(A, B):
    return A @ B - B @ A


def is_skew(A, tol=ORTHO_TOL):
    A = np.asarray(A)
    return bool(np.max(np.abs(A + A.T), initial=0.0) <= tol)


# --------------------------------------------------------------- subspaces

def _canonical_basis(M, tol=RANK_TOL):
    """Orthonormal basis of the column span of M (realified columns).

    The rank is read off the singular values, the basis is then fixed by a
    column-pivoted QR of the orthogonal projector so that equal subspaces get
    the same basis up to rounding.
    """
    M = np.asarray(M, dtype=float)
    dim = M.shape[0]
    if M.size == 0:
        return np.zeros((dim, 0))
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    if s.size == 0 or s[0] <= 1e-300:
        return np.zeros((dim, 0))
    r = int(np.sum(s > tol * s[0]))
    if r == 0:
        return np.zeros((dim, 0))
    Ur = U[:, :r]
    P = Ur @ Ur.T
    Q, R, piv = scipy.linalg.qr(P, pivoting=True)
    Q = Q[:, :r]
    sgn = np.sign(np.diag(R)[:r])
    sgn[sgn == 0] = 1.0
    return Q * sgn


@dataclass(frozen=True, eq=False)
class Subspace:
    """Real-linear subspace of C^n with realified orthonormal basis columns."""
    n: int
    basis: np.ndarray = field(repr=False)

    def __post_init__(self):
        B = np.asarray(self.basis, dtype=float).reshape(2 * self.n, -1)
        B.setflags(write=False)
        object.__setattr__(self, "basis", B)

    @property
    def dim(self):
        return self.basis.shape[1]

    @property
    def vectors(self):
        """Basis as complex row vectors, shape (dim, n)."""
        return complexify(self.basis.T)

    @property
    def projector(self):
        return self.basis @ self.basis.T

    def project(self, v):
        v = np.asarray(v, dtype=float)
        return self.basis @ (self.basis.T @ v)

    def residual(self, v):
        v = as_real(v, self.n)
        return float(np.linalg.norm(v - self.project(v)))

    def contains(self, v, tol=RANK_TOL):
        v = as_real(v, self.n)
        return self.residual(v) <= tol * max(1.0, float(np.linalg.norm(v)))

    def coords(self, v):
        return self.basis.T @ as_real(v, self.n)

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def span_real(M, n=None, tol=RANK_TOL):
    """Subspace spanned by realified columns of M."""
    M = np.asarray(M, dtype=float)
    if M.ndim == 1:
        M = M[:, None]
    if n is None:
        n = M.shape[0] // 2
    return Subspace(n, _canonical_basis(M, tol))


def span_orthonormal(vectors, n=None, tol=RANK_TOL):
    """Orthonormal basis of the real span of complex vectors.

    ``vectors`` is a list of complex n-vectors (or an array of shape (m, n)).
    An empty list gives the zero subspace; then ``n`` is required.
    """
    vs = [np.asarray(v, dtype=complex) for v in vectors]
    if not vs:
        if n is None:
            raise ValueError("n is required for an empty list")
        return Subspace(n, np.zeros((2 * n, 0)))
    n0 = vs[0].shape[-1]
    if any(v.shape[-1] != n0 for v in vs):
        raise ValueError("dimension mismatch")
    if n is not None and n != n0:
        raise ValueError("dimension mismatch")
    M = realify(np.vstack(vs)).T
    return span_real(M, n0, tol)


def zero_subspace(n):
    return Subspace(n, np.zeros((2 * n, 0)))


def full_space(n):
    return Subspace(n, np.eye(2 * n))


def real_form(n, phi=0.0):
    """The real form e^{i phi} R^n."""
    return span_orthonormal([np.exp(1j * phi) * unit(n, a) for a in range(n)])


def sum_subspaces(*spaces):
    n = spaces[0].n
    M = np.hstack([S.basis for S in spaces])
    return span_real(M, n)


def apply_operator(A, S):
    """Image A(S) of a subspace under a real operator."""
    return span_real(np.asarray(A) @ S.basis, S.n)


def conjugate(S, phi=0.0):
    """Complex conjugation with respect to the real form e^{i phi} R^n."""
    n = S.n
    Z = S.vectors
    Zc = np.exp(2j * phi) * np.conj(Z)
    if Zc.shape[0] == 0:
        return zero_subspace(n)
    return span_orthonormal(list(Zc))


def intersect(W1, W2, tol=INTERSECT_TOL):
    """Real intersection, read off principal angles with cos > 1 - tol."""
    if W1.n != W2.n:
        raise ValueError("dimension mismatch")
    if W1.dim == 0 or W2.dim == 0:
        return zero_subspace(W1.n)
    U, s, _ = np.linalg.svd(W1.basis.T @ W2.basis)
    k = int(np.sum(s > 1.0 - tol))
    return span_real(W1.basis @ U[:, :k], W1.n)


def orth_complement(W):
    n = W.n
    if W.dim == 0:
        return full_space(n)
    N = scipy.linalg.null_space(W.basis.T)
    return span_real(N, n)


def contains(W, v, tol=RANK_TOL):
    return W.contains(v, tol)


def contains_subspace(W, S, tol=RANK_TOL):
    if S.dim == 0:
        return True
    R = S.basis - W.project(S.basis)
    return bool(np.linalg.norm(R, 2) <= tol)


def principal_angles(W1, W2):
    if W1.dim == 0 or W2.dim == 0:
        return np.zeros(0)
    return scipy.linalg.subspace_angles(W1.basis, W2.basis)


def subspace_distance(W1, W2):
    """Spectral norm of the projector difference (sine of the largest angle)."""
    if W1.n != W2.n:
        raise ValueError("dimension mismatch")
    return float(np.linalg.norm(W1.projector - W2.projector, 2))


def subspace_equal(W1, W2, tol=1e-7):
    if W1.dim != W2.dim:
        return False
    if W1.dim == 0:
        return True
    return bool(np.max(principal_angles(W1, W2)) <= tol)


def is_orthogonal(W1, W2, tol=RANK_TOL):
    if W1.dim == 0 or W2.dim == 0:
        return True
    return bool(np.max(np.abs(W1.basis.T @ W2.basis)) <= tol)


def restrict(A, S):
    """Matrix of A compressed to S in the stored basis of S."""
    A = np.asarray(A, dtype=float)
    return S.basis.T @ A @ S.basis


def embed(M, S):
    """Inverse of ``restrict``: coordinates on S back to an ambient operator."""
    return S.basis @ np.asarray(M) @ S.basis.T


def invariance_residual(A, S):
    """max_k |(1 - P_S) A_k B_S| for a single operator or a stack."""
    A = np.asarray(A, dtype=float)
    if S.dim == 0:
        return 0.0
    if A.ndim == 2:
        A = A[None]
    if A.shape[0] == 0:
        return 0.0
    img = A @ S.basis
    out = img - S.basis @ (S.basis.T @ img)
    return float(np.max(np.linalg.norm(out, 2, axis=(-2, -1))))


# --------------------------------------------------------------- operator algebras

def operator_span(ops, dim=None, tol=RANK_TOL):
    """Orthonormal basis (Frobenius = trace form on skew operators) of span(ops)."""
    ops = np.asarray(ops, dtype=float)
    if ops.size == 0:
        if dim is None:
            raise ValueError("dim is required for an empty list")
        return np.zeros((0, dim, dim))
    m, N, _ = ops.shape
    flat = ops.reshape(m, -1)
    norms = np.linalg.norm(flat, axis=1)
    keep = norms > 1e-10 * max(1.0, float(norms.max()))
    if not np.any(keep):
        return np.zeros((0, N, N))
    flat = flat[keep] / norms[keep, None]
    _, s, Vt = np.linalg.svd(flat, full_matrices=False)
    r = int(np.sum(s > tol * s[0]))
    basis = Vt[:r]
    # fix signs so that the largest entry of each element is positive
    idx = np.argmax(np.abs(basis), axis=1)
    sgn = np.sign(basis[np.arange(r), idx])
    basis = basis * sgn[:, None]
    return basis.reshape(r, N, N)


def span_residual(basis, A):
    """Norm of the part of A outside the span of an orthonormal operator basis."""
    A = np.asarray(A, dtype=float)
    if basis.shape[0] == 0:
        return float(np.linalg.norm(A))
    c = np.tensordot(basis, A, axes=([1, 2], [0, 1]))
    return float(np.linalg.norm(A - np.tensordot(c, basis, axes=(0, 0))))


@dataclass(frozen=True, eq=False)
class OperatorAlgebra:
    """Span of skew operators, orthonormal for the trace form -tr(AB)."""
    n: int
    basis: np.ndarray = field(repr=False)
    generators: tuple = field(default=(), repr=False)

    def __post_init__(self):
        B = np.asarray(self.basis, dtype=float).reshape(-1, 2 * self.n, 2 * self.n)
        B.setflags(write=False)
        object.__setattr__(self, "basis", B)

    @property
    def dim(self):
        return self.basis.shape[0]

    def residual(self, A):
        return span_residual(self.basis, A)

    def contains(self, A, tol=RANK_TOL):
        return self.residual(A) <= tol * max(1.0, float(np.linalg.norm(A)))

    def coordinates(self, A):
        return np.tensordot(self.basis, np.asarray(A, dtype=float), axes=([1, 2], [0, 1]))

    def restricted(self, S):
        """Basis elements compressed to S, shape (dim, S.dim, S.dim)."""
        if self.dim == 0:
            return np.zeros((0, S.dim, S.dim))
        return np.einsum("ai,kab,bj->kij", S.basis, self.basis, S.basis)

    def bracket_residual(self):
        res = 0.0
        B = self.basis
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                res = max(res, self.residual(bracket(B[i], B[j])))
        return res

    def __repr__(self):
        return f"OperatorAlgebra(n={self.n}, dim={self.dim})"


def operator_algebra(ops, n):
    ops = list(ops)
    basis = operator_span(np.array(ops) if ops else np.zeros((0, 2 * n, 2 * n)), dim=2 * n)
    return OperatorAlgebra(n, basis, tuple(ops))


def algebra_closure(generators, n=None, max_rounds=10, tol=RANK_TOL):
    """Lie algebra generated by skew operators.

    The span is enlarged by all brackets of basis pairs until its dimension
    is stable; a set that has not closed after ``max_rounds`` rounds raises.
    """
    gens = [np.asarray(g, dtype=float) for g in generators]
    if n is None:
        if not gens:
            raise ValueError("n is required for an empty generator list")
        n = gens[0].shape[0] // 2
    N = 2 * n
    if any(g.shape != (N, N) for g in gens):
        raise ValueError("dimension mismatch")
    basis = operator_span(np.array(gens) if gens else np.zeros((0, N, N)), dim=N, tol=tol)
    for _ in range(max_rounds):
        m = basis.shape[0]
        if m < 2:
            return OperatorAlgebra(n, basis, tuple(gens))
        prod = np.einsum("aij,bjk->abik", basis, basis)
        br = prod - prod.transpose(1, 0, 2, 3)
        iu = np.triu_indices(m, 1)
        new = operator_span(np.concatenate([basis, br[iu]]), dim=N, tol=tol)
        if new.shape[0] == m:
            return OperatorAlgebra(n, basis, tuple(gens))
        basis = new
    raise ClosureError(f"bracket span did not stabilise after {max_rounds} rounds")


# --------------------------------------------------------------- commutants and intertwiners

def _null_space(M, tol=RANK_TOL):
    if M.shape[0] == 0:
        return np.eye(M.shape[1])
    _, s, Vt = np.linalg.svd(M)
    scale = max(1.0, float(s[0])) if s.size else 1.0
    r = int(np.sum(s > tol * scale))
    return Vt[r:].T


def _restricted_mats(A, S):
    if isinstance(A, OperatorAlgebra):
        return A.restricted(S)
    A = np.asarray(A, dtype=float)
    if A.ndim == 2:
        A = A[None]
    if A.shape[0] == 0:
        return np.zeros((0, S.dim, S.dim))
    return np.einsum("ai,kab,bj->kij", S.basis, A, S.basis)


def _ops(A):
    if isinstance(A, OperatorAlgebra):
        return A.basis
    A = np.asarray(A, dtype=float)
    return A[None] if A.ndim == 2 else A


def _check_invariant(A, S, tol=RANK_TOL):
    res = invariance_residual(_ops(A), S)
    if res > tol:
        raise InvarianceError(f"subspace is not invariant (residual {res:.3e})")
    return res


def _intertwiner_coords(mats_w, mats_u, tol=RANK_TOL):
    """Basis of {L : L a_W = a_U L}, L of shape (dU, dW)."""
    dW = mats_w.shape[-1]
    dU = mats_u.shape[-1]
    if dW == 0 or dU == 0:
        return np.zeros((0, dU, dW))
    rows = [np.kron(np.eye(dU), aw.T) - np.kron(au, np.eye(dW))
            for aw, au in zip(mats_w, mats_u)]
    M = np.vstack(rows) if rows else np.zeros((0, dU * dW))
    N = _null_space(M, tol)
    return N.T.reshape(-1, dU, dW)


def commutant(mats, tol=RANK_TOL):
    """Basis of matrices commuting with every matrix in ``mats`` (shape (m,d,d))."""
    return _intertwiner_coords(mats, mats, tol)


def intertwiner_space(A, W, U, tol=RANK_TOL):
    """Basis of Hom_A(W, U) as ambient operators mapping W into U (zero on W^perp)."""
    _check_invariant(A, W)
    _check_invariant(A, U)
    L = _intertwiner_coords(_restricted_mats(A, W), _restricted_mats(A, U), tol)
    if L.shape[0] == 0:
        return np.zeros((0, 2 * W.n, 2 * W.n))
    return np.einsum("ai,kij,bj->kab", U.basis, L, W.basis)


def centralizer_in_so(A, V, grading=None, tol=RANK_TOL):
    """Skew operators on V commuting with A|_V, optionally swapping W and U.

    Returned as ambient operators vanishing on V^perp.
    """
    _check_invariant(A, V)
    n = V.n
    if grading is not None:
        W, U = grading
        if not is_orthogonal(W, U) or W.dim + U.dim != V.dim:
            raise ValueError("grading is not an orthogonal splitting of V")
        adapted = span_real(np.hstack([W.basis, U.basis]), n)
        if not subspace_equal(adapted, V):
            raise ValueError("grading does not span V")
        Bv = np.hstack([W.basis, U.basis])
        dW, dU = W.dim, U.dim
        gens = []
        for i in range(dU):
            for j in range(dW):
                X = np.zeros((dW + dU, dW + dU))
                X[dW + i, j] = 1.0
                X[j, dW + i] = -1.0
                gens.append(X)
    else:
        Bv = V.basis
        d = V.dim
        gens = []
        for i in range(d):
            for j in range(i + 1, d):
                X = np.zeros((d, d))
                X[i, j] = -1.0
                X[j, i] = 1.0
                gens.append(X)
    if not gens:
        return np.zeros((0, 2 * n, 2 * n))
    gens = np.array(gens)
    mats = np.einsum("ai,kab,bj->kij", Bv, _ops(A), Bv) if _ops(A).shape[0] else np.zeros((0,) + gens.shape[1:])
    if mats.shape[0] == 0:
        coeffs = np.eye(len(gens))
    else:
        cols = []
        for X in gens:
            cols.append(np.concatenate([(X @ a - a @ X).ravel() for a in mats]))
        N = _null_space(np.array(cols).T, tol)
        coeffs = N.T
    out = np.einsum("kg,gij->kij", coeffs, gens)
    out = np.einsum("ai,kij,bj->kab", Bv, out, Bv)
    if out.shape[0] == 0:
        return out
    return operator_span(out, dim=2 * n)


# --------------------------------------------------------------- isotypic decomposition

KINDS = {1: "real", 2: "complex", 4: "quaternionic"}


@dataclass(frozen=True, eq=False)
class IsotypicComponent:
    """An isotypic component together with the data parameterizing its members.

    ``maps[j]`` sends coordinates on the first irreducible to the j-th one
    (a 2n x r matrix, an A-isomorphism), ``units`` is a basis of the
    self-intertwiners of the first irreducible starting with the identity.
    """
    subspace: Subspace
    kind: str
    irreducibles: tuple = field(repr=False)
    maps: tuple = field(repr=False)
    units: np.ndarray = field(repr=False)

    @property
    def multiplicity(self):
        return len(self.irreducibles)

    def __iter__(self):
        return iter((self.subspace, self.kind))


def _unit_basis(selfmaps, r):
    """Identity followed by orthonormal imaginary units of a division algebra."""
    I = np.eye(r)
    if len(selfmaps) <= 1:
        return I[None]
    rest = []
    for X in selfmaps:
        X = X - np.trace(X) / r * I
        for Y in rest:
            X = X - np.sum(X * Y) / np.sum(Y * Y) * Y
        if np.linalg.norm(X) > 1e-8:
            rest.append(X)
    units = [I]
    for X in rest:
        c = -np.trace(X @ X) / r
        units.append(X / np.sqrt(c))
    if len(units) == 4:
        # make the third unit the product of the first two
        units[3] = units[1] @ units[2]
    return np.array(units)


def _split_irreducibles(mats, d, rng, tries=8):
    comm = commutant(mats)
    for _ in range(tries):
        c = rng.standard_normal(comm.shape[0])
        X = np.tensordot(c, comm, axes=1)
        X = 0.5 * (X + X.T)
        w, Q = np.linalg.eigh(X)
        scale = max(1.0, float(np.max(np.abs(w))))
        groups = [[0]]
        for i in range(1, d):
            if w[i] - w[i - 1] > 1e-6 * scale:
                groups.append([i])
            else:
                groups[-1].append(i)
        pieces = [Q[:, g] for g in groups]
        ok = True
        for P in pieces:
            sub = np.einsum("ai,kab,bj->kij", P, mats, P) if mats.shape[0] else np.zeros((0, P.shape[1], P.shape[1]))
            if commutant(sub).shape[0] not in KINDS:
                ok = False
                break
        if ok:
            return pieces
    raise RuntimeError("could not split into irreducibles")


def isotypic_decomposition(A, S, seed=24601):
    """Isotypic components of S under the operators of A.

    Irreducibles are the eigenspaces of a random symmetric element of the
    commutant; they are grouped by the existence of nonzero intertwiners.
    """
    _check_invariant(A, S)
    n = S.n
    d = S.dim
    if d == 0:
        return []
    rng = np.random.default_rng(seed)
    mats = _restricted_mats(A, S)
    pieces = _split_irreducibles(mats, d, rng)

    def sub(P, Q=None):
        Q = P if Q is None else Q
        if mats.shape[0] == 0:
            return np.zeros((0, P.shape[1], Q.shape[1]))
        return np.einsum("ai,kab,bj->kij", P, mats, Q)

    groups = []
    for idx, P in enumerate(pieces):
        for g in groups:
            P0 = pieces[g[0]]
            if P0.shape[1] == P.shape[1] and _intertwiner_coords(sub(P0), sub(P)).shape[0] > 0:
                g.append(idx)
                break
        else:
            groups.append([idx])

    comps = []
    for g in groups:
        P0 = pieces[g[0]]
        r = P0.shape[1]
        a0 = sub(P0)
        selfmaps = commutant(a0)
        if a0.shape[0] == 0 or np.max(np.abs(a0), initial=0.0) <= RANK_TOL:
            kind = "trivial"
        else:
            kind = KINDS[selfmaps.shape[0]]
        irreps = []
        maps = []
        for idx in g:
            P = pieces[idx]
            irreps.append(span_real(S.basis @ P, n))
            if idx == g[0]:
                L = np.eye(r)
            else:
                L = _intertwiner_coords(a0, sub(P))[0]
                L = L / np.sqrt(np.trace(L.T @ L) / r)
            maps.append(S.basis @ P @ L)
        total = span_real(S.basis @ np.hstack([pieces[i] for i in g]), n)
        comps.append(IsotypicComponent(total, kind, tuple(irreps), tuple(maps),
                                       _unit_basis(selfmaps, r)))
    return comps


def isotypic_family_member(component, coefficients):
    """Irreducible member of an isotypic component for a coefficient vector.

    Coefficients are real (shape (m,)), complex (shape (m,)) for complex kind,
    or quaternions as rows (shape (m, 4)) for quaternionic kind.
    """
    c = np.asarray(coefficients)
    m = component.multiplicity
    units = component.units
    if c.ndim == 1:
        if c.shape[0] != m:
            raise ValueError("need one coefficient per irreducible")
        if np.iscomplexobj(c):
            if units.shape[0] < 2:
                raise ValueError("complex coefficients need a complex commutant")
            c = np.stack([c.real, c.imag], axis=1)
        else:
            c = c.astype(float)[:, None]
    if c.shape[0] != m or c.shape[1] > units.shape[0]:
        raise ValueError("coefficient shape does not match the component")
    if np.max(np.abs(c), initial=0.0) == 0.0:
        raise ValueError("zero coefficient vector")
    n = component.subspace.n
    L = np.zeros_like(component.maps[0])
    for j in range(m):
        scal = np.tensordot(c[j], units[: c.shape[1]], axes=1)
        L = L + component.maps[j] @ scal
    return span_real(L, n)
