"""Finite-dimensional real algebras given by structure constants.

An algebra of dimension n (n in {1, 2, 4, 8}) is stored as the tensor
c with e_i e_j = sum_k c[i, j, k] e_k, the left factor indexed first.
Around that sit the two multiplication operators, the double-sign
invariant (sign of det of the left and right multiplications, constant
on the nonzero vectors of a division algebra), isotopes, opposites,
transports along linear isomorphisms, and the classical algebras C, H
and O.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionOne,
    ModeMismatch,
    SignInconsistent,
    SingularOperator,
    ZeroMap,
)
from .matkit import DEFAULT_TOL, sign_det_many

_ALLOWED_DIMS = (1, 2, 4, 8)


@dataclass(frozen=True, eq=False)
class Algebra:
    """A real algebra presented by its structure-constant tensor."""

    c: np.ndarray
    label: str = ""

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        if c.ndim != 3 or len(set(c.shape)) != 1:
            raise ValueError(f"structure tensor must be cubic, got {c.shape}")
        if c.shape[0] not in _ALLOWED_DIMS:
            raise ValueError(f"dimension must be one of {_ALLOWED_DIMS}")
        if not np.all(np.isfinite(c)):
            raise ValueError("structure constants must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def mul(self, x, y) -> np.ndarray:
        """Product of two coordinate vectors."""
        return np.einsum("ijk,i,j->k", self.c, x, y)

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"<Algebra dim={self.dim}{tag}>"


class SignPair(NamedTuple):
    """The pair (sign det L, sign det R), each +1 or -1."""

    ell: int
    r: int

    @property
    def block(self) -> str:
        return ("+" if self.ell > 0 else "-") + ("+" if self.r > 0 else "-")


def left_mult(alg: Algebra, a) -> np.ndarray:
    """Matrix of x -> a x."""
    return np.einsum("ijk,i->kj", alg.c, np.asarray(a, dtype=float))


def right_mult(alg: Algebra, a) -> np.ndarray:
    """Matrix of x -> x a."""
    return np.einsum("ijk,j->ki", alg.c, np.asarray(a, dtype=float))


def left_mult_many(alg: Algebra, batch: np.ndarray) -> np.ndarray:
    """Stack of left-multiplication matrices, one per row of batch."""
    return np.einsum("ijk,bi->bkj", alg.c, batch)


def right_mult_many(alg: Algebra, batch: np.ndarray) -> np.ndarray:
    """Stack of right-multiplication matrices, one per row of batch."""
    return np.einsum("ijk,bj->bki", alg.c, batch)


def _sample_points(alg: Algebra, samples: int, seed) -> np.ndarray:
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((samples, alg.dim)) if samples else \
        np.empty((0, alg.dim))
    pts = np.vstack([np.eye(alg.dim), pts])
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def sign_pair(alg: Algebra, samples: int = 100, tol: float = DEFAULT_TOL,
              seed=0) -> SignPair:
    """Double sign of a division algebra.

    Evaluates sign det L_a and sign det R_a at the basis vectors plus
    ``samples`` seeded random unit vectors and demands that each family
    is single-valued.  Disagreement raises SignInconsistent (the input
    cannot be a division algebra), and any near-zero determinant raises
    DegenerateSign.
    """
    if alg.dim == 1:
        raise DimensionOne("the double sign needs dimension at least 2")
    pts = _sample_points(alg, samples, seed)
    ls = sign_det_many(left_mult_many(alg, pts), tol)
    rs = sign_det_many(right_mult_many(alg, pts), tol)
    if ls.min() != ls.max() or rs.min() != rs.max():
        raise SignInconsistent("determinant signs vary over nonzero points")
    return SignPair(int(ls[0]), int(rs[0]))


def block_of(alg: Algebra, samples: int = 100, tol: float = DEFAULT_TOL,
             seed=0) -> str:
    """Block label '++', '+-', '-+' or '--' from the double sign."""
    return sign_pair(alg, samples, tol, seed).block


def isotope(alg: Algebra, s_op, t_op, tol: float = DEFAULT_TOL) -> Algebra:
    """Isotope with multiplication x o y = (S x)(T y).

    S and T must be invertible; the isotope of a division algebra is
    again division, and iterating isotopes composes the operators:
    the (S', T')-isotope of the (S, T)-isotope is the (SS', TT')-isotope.
    """
    s = np.asarray(s_op, dtype=float)
    t = np.asarray(t_op, dtype=float)
    for name, m in (("S", s), ("T", t)):
        if m.shape != (alg.dim, alg.dim):
            raise ValueError(f"{name} has shape {m.shape}, need "
                             f"({alg.dim}, {alg.dim})")
        if abs(np.linalg.det(m)) <= tol:
            raise SingularOperator(f"{name} is singular at tol {tol:.1e}")
    c = np.einsum("pi,qj,pqk->ijk", s, t, alg.c)
    return Algebra(c, label=_tag(alg.label, "isotope"))


def opposite(alg: Algebra) -> Algebra:
    """Opposite algebra: x o y = y x (swap the factor indices)."""
    return Algebra(alg.c.transpose(1, 0, 2),
                   label=_tag(alg.label, "opposite"))


def transport(alg: Algebra, f, tol: float = DEFAULT_TOL) -> Algebra:
    """Carry the multiplication along an invertible F.

    The result B satisfies x *_B y = F(F^-1 x *_A F^-1 y), so F is an
    isomorphism from alg to the transported copy by construction.
    """
    fm = np.asarray(f, dtype=float)
    if abs(np.linalg.det(fm)) <= tol:
        raise SingularOperator("transport map is singular")
    g = np.linalg.inv(fm)
    c = np.einsum("pi,qj,pqr,kr->ijk", g, g, alg.c, fm)
    return Algebra(c, label=_tag(alg.label, "transport"))


def morphism_residual(f, a: Algebra, b: Algebra) -> float:
    """max over basis pairs of || F(e_i e_j)_A - (F e_i)(F e_j)_B ||."""
    fm = np.asarray(f, dtype=float)
    lhs = np.einsum("ijk,lk->ijl", a.c, fm)
    rhs = np.einsum("pi,qj,pql->ijl", fm, fm, b.c)
    return float(np.max(np.linalg.norm(lhs - rhs, axis=2)))


def is_morphism(f, a: Algebra, b: Algebra, tol: float = DEFAULT_TOL) -> bool:
    """Whether F is an algebra morphism from a to b, at tolerance.

    Nonzero morphisms between division algebras of equal dimension are
    automatically injective, hence isomorphisms.  The zero map is
    rejected with ZeroMap rather than reported as a (vacuous) morphism.
    """
    fm = np.asarray(f, dtype=float)
    if fm.shape != (b.dim, a.dim):
        raise ValueError("morphism shape does not match the algebras")
    if np.max(np.abs(fm)) <= tol:
        raise ZeroMap("candidate morphism is numerically zero")
    return morphism_residual(fm, a, b) <= tol


def is_division(alg: Algebra, mode: str = "sampled", samples: int = 1000,
                tol: float = DEFAULT_TOL, seed=0) -> str:
    """Division check; returns one of 'division', 'not_division',
    'probably_division'.

    mode='exact2d' (dimension 2 only): det L_a and det R_a are binary
    quadratic forms in a; the algebra is division exactly when both are
    definite, decided by the eigenvalues of their coefficient matrices.

    mode='sampled': evaluates both determinants at seeded random unit
    vectors; a near-zero value gives 'not_division', otherwise
    'probably_division' ('division' for dimension 1).
    """
    if mode == "exact2d":
        if alg.dim != 2:
            raise ModeMismatch("exact2d applies to dimension 2 only")
        for op in (left_mult_many, right_mult_many):
            mats = op(alg, np.eye(2))
            d1 = float(np.linalg.det(mats[0]))
            d2 = float(np.linalg.det(mats[1]))
            dm = float(np.linalg.det(mats[0] + mats[1]))
            beta = dm - d1 - d2
            coeff = np.array([[d1, beta / 2.0], [beta / 2.0, d2]])
            w = np.linalg.eigvalsh(coeff)
            if not (w[0] > tol or w[1] < -tol):
                return "not_division"
        return "division"
    if mode != "sampled":
        raise ModeMismatch(f"unknown mode {mode!r}")
    if alg.dim == 1:
        return "division" if abs(alg.c[0, 0, 0]) > tol else "not_division"
    pts = _sample_points(alg, samples, seed)
    dl = np.abs(np.linalg.det(left_mult_many(alg, pts)))
    dr = np.abs(np.linalg.det(right_mult_many(alg, pts)))
    if min(dl.min(), dr.min()) <= tol:
        return "not_division"
    return "probably_division"


def find_unities(alg: Algebra, tol: float = DEFAULT_TOL) -> dict:
    """Solve L_e = I, R_e = I and both at once.

    Returns {'left': [...], 'right': [...], 'two_sided': [...]}; each
    list is empty or holds the (for division algebras unique) solution.
    """
    n = alg.dim
    # row (k, j) of the left system: sum_i e_i c[i, j, k] = delta_kj
    ml = alg.c.transpose(2, 1, 0).reshape(n * n, n)
    mr = alg.c.transpose(2, 0, 1).reshape(n * n, n)
    target = np.eye(n).reshape(n * n)

    def solve(mat, rhs):
        e, *_ = np.linalg.lstsq(mat, rhs, rcond=None)
        if np.max(np.abs(mat @ e - rhs)) <= max(tol, 1e-12) * n:
            return [e]
        return []

    out = {
        "left": solve(ml, target),
        "right": solve(mr, target),
        "two_sided": solve(np.vstack([ml, mr]), np.concatenate([target,
                                                                target])),
    }
    return out


def _nullspace(mat: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis of the null space, columns of the result."""
    if mat.size == 0:
        return np.eye(mat.shape[1]) if mat.ndim == 2 else np.empty((0, 0))
    u, s, vt = np.linalg.svd(mat)
    scale = s[0] if s.size and s[0] > 0 else 1.0
    rank = int(np.sum(s > tol * max(scale, 1.0)))
    return vt[rank:].T


def commutant(alg: Algebra, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Basis (columns) of {a : L_a = R_a}, the commuting elements."""
    n = alg.dim
    # constraint rows over (k, m): sum_t a_t (c[t, m, k] - c[m, t, k]) = 0
    diff = alg.c - alg.c.transpose(1, 0, 2)
    rows = diff.transpose(2, 1, 0).reshape(n * n, n)
    return _nullspace(rows, tol)


def center(alg: Algebra, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Basis (columns) of the commuting and fully associating elements.

    An element a is central here when L_a = R_a and all three associator
    slots vanish: (a, x, y), (x, a, y) and (x, y, a) are zero for all
    x, y.  For C, H and O this is C itself, span{1} and span{1}.
    """
    n = alg.dim
    c = alg.c
    blocks = [
        (c - c.transpose(1, 0, 2)).transpose(2, 1, 0).reshape(n * n, n),
    ]
    # (a, x, y): (a e_p) e_q - a (e_p e_q);  coefficient of a_i:
    #   sum_r c[i, p, r] c[r, q, k] - sum_r c[p, q, r] c[i, r, k]
    t1 = np.einsum("ipr,rqk->ipqk", c, c) - np.einsum("pqr,irk->ipqk", c, c)
    # (x, a, y): (e_p a) e_q - e_p (a e_q)
    t2 = np.einsum("pir,rqk->ipqk", c, c) - np.einsum("iqr,prk->ipqk", c, c)
    # (x, y, a): (e_p e_q) a - e_p (e_q a)
    t3 = np.einsum("pqr,rik->ipqk", c, c) - np.einsum("qir,prk->ipqk", c, c)
    for t in (t1, t2, t3):
        blocks.append(t.transpose(1, 2, 3, 0).reshape(n * n * n, n))
    return _nullspace(np.vstack(blocks), tol)


def _tag(label: str, op: str) -> str:
    return f"{op}({label})" if label else op


# --- the classical algebras ---

def _complex_tensor() -> np.ndarray:
    c = np.zeros((2, 2, 2))
    c[0, 0, 0] = 1.0
    c[0, 1, 1] = 1.0
    c[1, 0, 1] = 1.0
    c[1, 1, 0] = -1.0
    return c


def _quaternion_tensor() -> np.ndarray:
    # basis 1, i, j, k with i j = k, j k = i, k i = j
    c = np.zeros((4, 4, 4))
    table = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    for (i, j), (k, s) in table.items():
        c[i, j, k] = float(s)
    return c


def _octonion_tensor() -> np.ndarray:
    # double the quaternions: treat an octonion as a pair (a, b) of
    # quaternions with (a, b)(c, d) = (a c - conj(d) b, d a + b conj(c))
    h = _quaternion_tensor()

    def qmul(x, y):
        return np.einsum("ijk,i,j->k", h, x, y)

    def qconj(x):
        return x * np.array([1.0, -1.0, -1.0, -1.0])

    c = np.zeros((8, 8, 8))
    basis = np.eye(8)
    for i in range(8):
        for j in range(8):
            a, b = basis[i][:4], basis[i][4:]
            cc, d = basis[j][:4], basis[j][4:]
            first = qmul(a, cc) - qmul(qconj(d), b)
            second = qmul(d, a) + qmul(b, qconj(cc))
            c[i, j, :4] = first
            c[i, j, 4:] = second
    return c


def classical(name: str) -> Algebra:
    """The complex numbers, quaternions or octonions ('C', 'H', 'O')."""
    if name == "C":
        return Algebra(_complex_tensor(), label="C")
    if name == "H":
        return Algebra(_quaternion_tensor(), label="H")
    if name == "O":
        return Algebra(_octonion_tensor(), label="O")
    raise ValueError(f"unknown classical algebra {name!r}")
