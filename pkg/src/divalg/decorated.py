"""Algebras decorated with a splitting into an odd and an even part.

A decoration of an n-dimensional algebra is a pair of subspaces U, V
with dim U odd and below n, and U + V the whole space.  The reflection
kappa fixes U pointwise and negates V; det kappa = (-1)^(n - dim U),
which is -1 in every admissible case here (n even, dim U odd), so
kappa always reverses orientation.

The four isotope functors send (A, U, V) to (A_{kappa^i, kappa^j}, U, V)
for i, j in {0, 1} and compose like the Klein four-group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Algebra, isotope
from .errors import BadSplit
from .matkit import DEFAULT_TOL

@dataclass(frozen=True, eq=False)
class DecoratedAlgebra:
    """An algebra with a chosen odd/even splitting (column bases u, v)."""

    alg: Algebra
    u: np.ndarray
    v: np.ndarray

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def m(self) -> int:
        return self.u.shape[1]

    def __repr__(self):
        return f"<DecoratedAlgebra dim={self.dim} m={self.m}>"


def decorate(alg: Algebra, u, v, tol: float = DEFAULT_TOL) -> DecoratedAlgebra:
    """Attach the splitting (span u, span v) to an algebra.

    u and v are column bases (n x m and n x (n - m)).  Raises BadSplit
    when m is even, m >= n, or [u | v] fails to be invertible at tol.
    """
    n = alg.dim
    um = np.atleast_2d(np.asarray(u, dtype=float))
    vm = np.atleast_2d(np.asarray(v, dtype=float))
    if um.shape[0] != n:
        um = um.T
    if vm.shape[0] != n:
        vm = vm.T
    m = um.shape[1]
    if m % 2 == 0 or m >= n:
        raise BadSplit(f"U-block dimension {m} must be odd and below {n}")
    if vm.shape[1] != n - m:
        raise BadSplit("V-block dimension must complement U")
    w = np.hstack([um, vm])
    if abs(np.linalg.det(w)) <= tol:
        raise BadSplit("[U | V] is singular; the subspaces do not split")
    return DecoratedAlgebra(alg, um, vm)


def kappa(x: DecoratedAlgebra) -> np.ndarray:
    """The involution fixing U pointwise and negating V.

    Built as W diag(I_m, -I_{n-m}) W^-1 for W = [U | V]; its determinant
    is (-1)^(n-m) = -1 because n is even and m odd, so kappa always
    flips orientation.
    """
    n, m = x.dim, x.m
    w = np.hstack([x.u, x.v])
    d = np.ones(n)
    d[m:] = -1.0
    return (w * d) @ np.linalg.inv(w)


def functor_i(i: int, j: int, x: DecoratedAlgebra) -> DecoratedAlgebra:
    """The (i, j) isotope functor on decorated algebras.

    Returns (A_{kappa^i, kappa^j}, U, V).  On objects these four
    functors realize the Klein four-group: (0,0) is the identity,
    (1,0) and (0,1) are involutions, and their composite either way
    is (1,1).  Each application multiplies the sign pair by
    ((-1)^j, (-1)^i).
    """
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError("functor indices must be 0 or 1")
    if i == 0 and j == 0:
        return x
    k = kappa(x)
    n = x.dim
    s = k if i else np.eye(n)
    t = k if j else np.eye(n)
    return DecoratedAlgebra(isotope(x.alg, s, t), x.u, x.v)


def forget(x: DecoratedAlgebra) -> Algebra:
    """Drop the decoration."""
    return x.alg


def random_decorated(alg: Algebra, seed=0, max_cond: float = 20.0
                     ) -> DecoratedAlgebra:
    """Seeded random decoration of an algebra of even dimension.

    Chooses a random odd m < n and a random well-conditioned basis,
    splitting its first m columns into U and the rest into V.
    """
    rng = np.random.default_rng(seed)
    n = alg.dim
    odd = [m for m in range(1, n, 2)]
    m = int(odd[rng.integers(len(odd))])
    for _ in range(200):
        w = rng.standard_normal((n, n))
        if np.linalg.cond(w) <= max_cond:
            return decorate(alg, w[:, :m], w[:, m:])
    raise BadSplit("failed to draw a well-conditioned splitting")
