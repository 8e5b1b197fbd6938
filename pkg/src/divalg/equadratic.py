"""e-quadratic algebras: central idempotents, imaginary hyperplanes.

An algebra with a nonzero commuting idempotent e is e-quadratic when
every square x^2 lies in span{e, ex}.  Such an algebra splits as the
line through e plus the hyperplane Im_e = {v outside the line with
v^2 in the line} union {0}, and for dimensions 4 and 8 the idempotent
is unique.  functor_g turns the splitting into a decoration, which is
compatible with the (kappa, kappa)-isotope: applying the (1,1) isotope
functor to the decoration of A gives exactly the decoration of the
(kappa, kappa)-isotope of A.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .core import Algebra, commutant, left_mult, right_mult
from .decorated import DecoratedAlgebra, decorate
from .errors import (
    CenterTooLarge,
    NoHyperplane,
    NonUniqueIdempotent,
    NotEQuadratic,
    NotIdempotent,
)
from .matkit import DEFAULT_TOL

# eigenvalues of a factored quadratic form below this (relative) size
# are treated as numerically zero when reading off its rank
_FACTOR_EIG_TOL = 1e-8


def central_idempotents(alg: Algebra, tol: float = DEFAULT_TOL
                        ) -> list[np.ndarray]:
    """All nonzero idempotents inside the commuting subspace.

    The commuting subspace {a : L_a = R_a} has dimension at most 2 for
    the algebras in scope (CenterTooLarge otherwise).  Within it the
    equation z o z = z is solved exactly: for a line this is a scalar
    quadratic; for a plane the polynomial system is reduced by
    resultants.  Solutions are verified against the full equation and
    returned in a deterministic order.
    """
    basis = commutant(alg, tol)
    d = basis.shape[1]
    if d == 0:
        return []
    if d > 2:
        raise CenterTooLarge(f"commuting subspace has dimension {d}")
    if d == 1:
        sols = _idempotents_on_line(alg, basis[:, 0], tol)
    else:
        sols = _idempotents_in_plane(alg, basis, tol)
    out = []
    for z in sols:
        if np.linalg.norm(z) <= tol:
            continue
        if np.linalg.norm(alg.mul(z, z) - z) <= max(tol, 1e-10):
            out.append(z)
    out.sort(key=lambda z: tuple(np.round(z, 8)))
    return out


def _idempotents_on_line(alg, c0, tol):
    w = alg.mul(c0, c0)
    lam = float(w @ c0) / float(c0 @ c0)
    perp = w - lam * c0
    if np.linalg.norm(perp) > max(tol, 1e-10) * max(1.0, np.linalg.norm(w)):
        return []
    if abs(lam) <= tol:
        return []
    return [c0 / lam]


def _conic_coeffs(alg, basis):
    """Equations t^T Q_k t - (basis t)_k = 0 as conic coefficient rows.

    Each row is (a, b, c, d, e, f) for a t1^2 + b t1 t2 + c t2^2
    + d t1 + e t2 + f.
    """
    q = np.einsum("ip,jq,ijk->kpq", basis, basis, alg.c)
    q = 0.5 * (q + q.transpose(0, 2, 1))
    rows = []
    for k in range(alg.dim):
        rows.append([q[k, 0, 0], 2.0 * q[k, 0, 1], q[k, 1, 1],
                     -basis[k, 0], -basis[k, 1], 0.0])
    return np.array(rows)


def _quad_roots(a, b, c):
    """Real roots of a y^2 + b y + c, handling the degenerate cases."""
    if abs(a) < 1e-13:
        if abs(b) < 1e-13:
            return []
        return [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < -1e-12 * max(b * b, abs(4 * a * c), 1.0):
        return []
    disc = max(disc, 0.0)
    r = np.sqrt(disc)
    return [(-b + r) / (2 * a), (-b - r) / (2 * a)]


def _idempotents_in_plane(alg, basis, tol):
    """Common zeros of the idempotent equations on a 2-dim subspace.

    Treats each coordinate equation as a conic in (t1, t2), eliminates
    t2 between pairs of conics with the classical quadratic resultant,
    and keeps the candidate points that satisfy every equation.
    """
    conics = _conic_coeffs(alg, basis)
    scale = max(1.0, float(np.max(np.abs(conics))))
    candidates = [np.zeros(2)]

    def as_y_quad(row):
        a, b, c, d, e, f = row
        # coefficients in y = t2, polynomial in x = t1
        return (np.array([c]),                      # y^2
                np.array([b, e]),                   # y
                np.array([a, d, f]))                # 1

    def polymul(p, q):
        return np.convolve(p, q)

    for k, l in combinations(range(len(conics)), 2):
        r1, r2 = conics[k], conics[l]
        if np.max(np.abs(r1)) < tol * scale or np.max(np.abs(r2)) < tol * scale:
            continue
        a1, b1, c1 = as_y_quad(r1)
        a2, b2, c2 = as_y_quad(r2)
        # resultant of two quadratics in y:
        # (a1 c2 - c1 a2)^2 - (a1 b2 - b1 a2)(b1 c2 - c1 b2)
        t1_ = polymul(a1, c2) - _pad(polymul(c1, a2), len(polymul(a1, c2)))
        u_ = polymul(a1, b2) - _pad(polymul(b1, a2), len(polymul(a1, b2)))
        v_ = polymul(b1, c2) - _pad(polymul(c1, b2), len(polymul(b1, c2)))
        res = _polysub(polymul(t1_, t1_), polymul(u_, v_))
        if np.max(np.abs(res)) <= 1e-12 * scale * scale:
            continue
        for x in np.roots(res):
            if abs(x.imag) > 1e-8:
                continue
            x = float(x.real)
            ys = set()
            for row in (r1, r2):
                a, b, c, d, e, f = row
                ys.update(_quad_roots(c, b * x + e, a * x * x + d * x + f))
            for y in ys:
                candidates.append(np.array([x, float(y)]))

    # verify candidates against the full system and dedupe
    good = []
    for t in candidates:
        if not np.all(np.isfinite(t)) or np.max(np.abs(t)) > 1e8:
            continue
        z = basis @ t
        if np.linalg.norm(alg.mul(z, z) - z) <= max(tol, 1e-9) * max(
                1.0, float(np.linalg.norm(z)) ** 2):
            good.append(z)
    out = []
    for z in good:
        if not any(np.linalg.norm(z - w) < 1e-6 for w in out):
            out.append(z)
    return out


def _pad(p, n):
    if len(p) >= n:
        return p
    return np.concatenate([np.zeros(n - len(p)), p])


def _polysub(p, q):
    n = max(len(p), len(q))
    return _pad(p, n) - _pad(q, n)


def is_e_quadratic(alg: Algebra, e, tol: float = DEFAULT_TOL) -> bool:
    """Whether every square lies in span{e, e x}.

    Checks that all 3 x 3 minors of the n x 3 matrix [e | L_e x | x^2]
    vanish identically in x, by expanding each minor into the
    symmetrized coefficient tensor of a cubic form.  In dimension 2
    there are no such minors and the answer is vacuously true.
    Raises NotIdempotent when e o e != e.
    """
    e = np.asarray(e, dtype=float)
    if np.linalg.norm(alg.mul(e, e) - e) > max(tol, 1e-9):
        raise NotIdempotent("e is not an idempotent at tolerance")
    n = alg.dim
    if n < 3:
        return True
    le = left_mult(alg, e)
    csym = 0.5 * (alg.c + alg.c.transpose(1, 0, 2))
    quad = csym.transpose(2, 0, 1)          # quad[k] is the form of (x^2)_k

    def cubic(row, k):
        # coefficient tensor of (le[row] . x) * (x^T quad[k] x)
        return np.einsum("i,jk->ijk", le[row], quad[k])

    scale = max(1.0, float(np.max(np.abs(alg.c))) ** 2)
    for p, q, r in combinations(range(n), 3):
        t = (e[p] * (cubic(q, r) - cubic(r, q))
             + e[q] * (cubic(r, p) - cubic(p, r))
             + e[r] * (cubic(p, q) - cubic(q, p)))
        t = _symmetrize3(t)
        if np.max(np.abs(t)) > tol * scale:
            return False
    return True


def _symmetrize3(t: np.ndarray) -> np.ndarray:
    return (t + t.transpose(0, 2, 1) + t.transpose(1, 0, 2)
            + t.transpose(1, 2, 0) + t.transpose(2, 0, 1)
            + t.transpose(2, 1, 0)) / 6.0


def _unit_covector(f: np.ndarray) -> np.ndarray:
    """Normalize a covector to unit length with a fixed sign convention."""
    f = f / np.linalg.norm(f)
    nz = np.nonzero(np.abs(f) > 1e-12)[0]
    if nz.size and f[nz[0]] < 0:
        f = -f
    return f


def _kernel_basis(f: np.ndarray) -> np.ndarray:
    """Deterministic orthonormal basis of the hyperplane f . x = 0."""
    _, _, vt = np.linalg.svd(f[None, :])
    return vt[1:].T


def im_e(alg: Algebra, e, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Column basis of the hyperplane {v : v^2 in span e}.

    Projects the squaring map onto a complement of the e-line; each
    component is then a quadratic form vanishing on the hyperplane, so
    it factors through a linear form.  The factor is read off from the
    eigendecomposition of a rank <= 2 symmetric matrix, and a candidate
    is accepted only if every component form vanishes on its kernel
    (checked on all polarized pairs) and e stays outside the kernel.
    """
    e = np.asarray(e, dtype=float)
    n = alg.dim
    # orthonormal complement of the e-line
    _, _, vt = np.linalg.svd((e / np.linalg.norm(e))[None, :])
    z = vt[1:]                               # (n-1, n), rows span e-perp
    csym = 0.5 * (alg.c + alg.c.transpose(1, 0, 2))
    forms = np.einsum("ijk,tk->tij", csym, z)   # (n-1, n, n) symmetric
    norms = np.linalg.norm(forms.reshape(n - 1, -1), axis=1)
    scale = max(1.0, float(norms.max()) if norms.size else 1.0)

    if norms.size == 0 or norms.max() <= tol * scale:
        # every square already lies on the e-line; any complement works
        return _coordinate_complement(e)

    def kernel_ok(w):
        for t in range(n - 1):
            if np.max(np.abs(w.T @ forms[t] @ w)) > max(tol, 1e-9) * scale:
                return False
        return True

    for t in np.argsort(-norms):
        m = forms[t]
        if norms[t] <= tol * scale:
            continue
        w, vecs = np.linalg.eigh(m)
        order = np.argsort(-np.abs(w))
        w, vecs = w[order], vecs[:, order]
        if np.any(np.abs(w[2:]) > _FACTOR_EIG_TOL * abs(w[0])):
            continue                        # rank above 2, not factorable
        if abs(w[1]) <= _FACTOR_EIG_TOL * abs(w[0]):
            cands = [vecs[:, 0]]            # rank 1: form = +-(f.x)^2
        else:
            if w[0] * w[1] > 0:
                continue                    # definite rank 2, no real factor
            lp, lm = abs(w[0]), abs(w[1])
            f1 = np.sqrt(lp) * vecs[:, 0] + np.sqrt(lm) * vecs[:, 1]
            f2 = np.sqrt(lp) * vecs[:, 0] - np.sqrt(lm) * vecs[:, 1]
            cands = [f1, f2]
        cands.sort(key=lambda f: -abs(float(f @ e)) / np.linalg.norm(f))
        for f in cands:
            f = _unit_covector(f)
            if abs(float(f @ e)) <= max(tol, 1e-9):
                continue                    # e would lie inside the kernel
            w_basis = _kernel_basis(f)
            if kernel_ok(w_basis):
                return w_basis
    raise NoHyperplane("no factor cuts out the imaginary hyperplane")


def _coordinate_complement(e: np.ndarray) -> np.ndarray:
    n = e.shape[0]
    drop = int(np.argmax(np.abs(e)))
    cols = []
    for i in range(n):
        if i == drop:
            continue
        v = np.zeros(n)
        v[i] = 1.0
        v = v - (v @ e) / (e @ e) * e
        cols.append(v / np.linalg.norm(v))
    return np.array(cols).T


def functor_g(alg: Algebra, tol: float = DEFAULT_TOL) -> DecoratedAlgebra:
    """Decorate an e-quadratic algebra with (span e, Im_e).

    Defined for dimensions 4 and 8, where the qualifying central
    idempotent is unique.  Raises NotEQuadratic when no commuting
    idempotent passes the quadraticity test and NonUniqueIdempotent
    when more than one does.
    """
    if alg.dim not in (4, 8):
        raise ValueError("the decoration functor applies to dims 4 and 8")
    cands = [e for e in central_idempotents(alg, tol)
             if is_e_quadratic(alg, e, tol)]
    if not cands:
        raise NotEQuadratic("no central idempotent with quadratic squares")
    if len(cands) > 1:
        raise NonUniqueIdempotent(f"{len(cands)} qualifying idempotents")
    e = cands[0]
    im = im_e(alg, e, tol)
    return decorate(alg, e[:, None], im, tol)


def idempotent_residual(alg: Algebra, e) -> float:
    """Combined defect of e as a commuting idempotent."""
    e = np.asarray(e, dtype=float)
    r1 = float(np.linalg.norm(alg.mul(e, e) - e))
    r2 = float(np.max(np.abs(left_mult(alg, e) - right_mult(alg, e))))
    return max(r1, r2)
