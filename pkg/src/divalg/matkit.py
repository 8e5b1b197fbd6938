"""Small dense-matrix toolkit used by every other module.

Matrices are plain ``numpy`` arrays of floats, row-major, sizes 1 to 8.
Everything here is deterministic: random constructions take an integer
seed (or an already-built ``numpy.random.Generator``) and the
decompositions call fixed LAPACK routines.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateSign, SingularInput

DEFAULT_TOL = 1e-9


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite square float matrix."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def sign_det(m, tol: float = DEFAULT_TOL) -> int:
    """Sign of det(m) as +1 or -1.

    Raises DegenerateSign when |det| <= tol, so a sign is never reported
    for a matrix that is singular at working precision.
    """
    d = float(np.linalg.det(as_matrix(m)))
    if abs(d) <= tol:
        raise DegenerateSign(f"|det| = {abs(d):.3e} <= tol = {tol:.3e}")
    return 1 if d > 0 else -1


def sign_det_many(ms: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorized sign_det over a stack of matrices (batch, n, n)."""
    d = np.linalg.det(ms)
    small = np.abs(d) <= tol
    if np.any(small):
        i = int(np.argmax(small))
        raise DegenerateSign(
            f"|det| = {abs(d[i]):.3e} <= tol = {tol:.3e} at batch index {i}"
        )
    return np.where(d > 0, 1, -1).astype(int)


def polar_decompose(m, tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Left polar decomposition m = p @ o with p SPD and o orthogonal.

    Computed from the SVD m = u s v^T as p = u s u^T, o = u v^T.
    Raises SingularInput when the smallest singular value is below
    tol times the largest.
    """
    a = as_matrix(m)
    u, s, vt = np.linalg.svd(a)
    if s[-1] <= tol * max(s[0], 1.0):
        raise SingularInput(f"singular values span {s[0]:.3e}..{s[-1]:.3e}")
    p = (u * s) @ u.T
    o = u @ vt
    return 0.5 * (p + p.T), o


def is_spd1(m, tol: float = DEFAULT_TOL) -> bool:
    """True when m is symmetric positive definite with det 1, at tol."""
    a = as_matrix(m)
    if np.max(np.abs(a - a.T)) > tol:
        return False
    w = np.linalg.eigvalsh(0.5 * (a + a.T))
    if w[0] <= tol:
        return False
    if abs(float(np.linalg.det(a)) - 1.0) > tol:
        return False
    return True


def random_spd1(n: int, seed=0) -> np.ndarray:
    """Seeded random symmetric positive definite matrix with det 1.

    Draws W with uniform entries in [-1, 1], forms W W^T + I/4 (the
    shift keeps the condition number moderate) and rescales to unit
    determinant.  ``seed`` may be an int or a numpy Generator.
    """
    rng = np.random.default_rng(seed)
    w = rng.uniform(-1.0, 1.0, size=(n, n))
    m = w @ w.T + 0.25 * np.eye(n)
    m /= float(np.linalg.det(m)) ** (1.0 / n)
    return 0.5 * (m + m.T)


def random_rotation(n: int, seed=0) -> np.ndarray:
    """Seeded random special orthogonal matrix (QR with sign fixing)."""
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_invertible(n: int, seed=0, min_det: float = 1e-3,
                      max_cond: float = 50.0) -> np.ndarray:
    """Seeded random invertible matrix with bounded condition number.

    Standard normal entries, redrawn until |det| >= min_det and the
    condition number stays below max_cond.  The conditioning bound keeps
    downstream float error well under the package tolerances.
    """
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        m = rng.standard_normal((n, n))
        if abs(np.linalg.det(m)) < min_det:
            continue
        if np.linalg.cond(m) > max_cond:
            continue
        return m
    raise SingularInput("could not draw a well-conditioned invertible matrix")


def gram(f: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Congruence transform f @ s @ f^T."""
    return f @ s @ f.T
