"""2-dimensional division algebras: normal forms over C and hom-sets.

Every 2-dimensional real division algebra is isomorphic to an isotope
C_{A K^i, B K^j} with A, B symmetric positive definite of determinant 1
and i, j in {0, 1}; for (i, j) = (1, 1) the K factors are written on
the left instead, C_{KA, KB}.  K is the conjugation of C and the block
of the normal form is ((-1)^j, (-1)^i).

Morphisms between normal forms are simultaneous congruences by the
two-element group {I, K} on the three blocks with a positive sign, and
by the six-element dihedral group generated by K and the rotation R by
2 pi / 3 on the (1, 1) block, so hom-sets are enumerated exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Algebra,
    SignPair,
    classical,
    is_division,
    is_morphism,
    isotope,
    left_mult,
    morphism_residual,
    right_mult,
)
from .errors import (
    BlockMismatch,
    NoImaginaryUnit,
    NonConvergence,
    NotDivision,
    SingularOperator,
)
from .matkit import DEFAULT_TOL, gram, is_spd1, polar_decompose

K2 = np.array([[1.0, 0.0], [0.0, -1.0]])
ROT3 = 0.5 * np.array([[-1.0, -np.sqrt(3.0)], [np.sqrt(3.0), -1.0]])


@dataclass(frozen=True, eq=False)
class GroupElement2D:
    """An element of C2 = <K> or D3 = <R, K> as a concrete 2x2 matrix."""

    matrix: np.ndarray
    group: str

    def __post_init__(self):
        if self.group not in ("C2", "D3"):
            raise ValueError("group must be 'C2' or 'D3'")
        m = np.asarray(self.matrix, dtype=float).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __repr__(self):
        return f"<{self.group} element {np.round(self.matrix, 6).tolist()}>"


def c2_elements() -> list[GroupElement2D]:
    return [GroupElement2D(np.eye(2), "C2"), GroupElement2D(K2, "C2")]


def d3_elements() -> list[GroupElement2D]:
    r2 = ROT3 @ ROT3
    mats = [np.eye(2), ROT3, r2, K2, ROT3 @ K2, r2 @ K2]
    return [GroupElement2D(m, "D3") for m in mats]


@dataclass(frozen=True, eq=False)
class NormalForm2D:
    """Exponents (i, j) plus the SPD determinant-1 pair (a, b)."""

    i: int
    j: int
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        if self.i not in (0, 1) or self.j not in (0, 1):
            raise ValueError("exponents must be 0 or 1")
        for name in ("a", "b"):
            m = np.asarray(getattr(self, name), dtype=float)
            if m.shape != (2, 2) or not is_spd1(m, 1e-7):
                raise ValueError(f"{name} must be 2x2 SPD with determinant 1")
            m = m.copy()
            m.setflags(write=False)
            object.__setattr__(self, name, m)

    @property
    def block(self) -> SignPair:
        return SignPair(-1 if self.j else 1, -1 if self.i else 1)

    def __repr__(self):
        return f"<NormalForm2D ({self.i},{self.j}) block={self.block.block}>"


def build2d(nf: NormalForm2D) -> Algebra:
    """The algebra the normal form encodes (an explicit isotope of C)."""
    cc = classical("C")
    if (nf.i, nf.j) == (1, 1):
        out = isotope(cc, K2 @ nf.a, K2 @ nf.b)
    else:
        s = nf.a @ K2 if nf.i else nf.a
        t = nf.b @ K2 if nf.j else nf.b
        out = isotope(cc, s, t)
    return Algebra(out.c, label=f"C[{nf.i}{nf.j}]")


def groupoid_hom(group: str, x, y, tol: float = DEFAULT_TOL
                 ) -> list[GroupElement2D]:
    """Elements g of the finite group with (g A g^t, g B g^t) = y.

    x and y are pairs of 2x2 matrices; the enumeration is exact (the
    groups have 2 and 6 elements), never a numerical search.
    """
    if group == "C2":
        elements = c2_elements()
    elif group == "D3":
        elements = d3_elements()
    else:
        raise ValueError("group must be 'C2' or 'D3'")
    a, b = (np.asarray(m, dtype=float) for m in x)
    c, d = (np.asarray(m, dtype=float) for m in y)
    out = []
    for g in elements:
        m = g.matrix
        if (np.max(np.abs(gram(m, a) - c)) <= tol
                and np.max(np.abs(gram(m, b) - d)) <= tol):
            out.append(g)
    return out


def hom2d(src: NormalForm2D, dst: NormalForm2D, tol: float = DEFAULT_TOL
          ) -> list[GroupElement2D]:
    """All isomorphisms src -> dst between normal forms.

    Raises BlockMismatch when the blocks differ (the hom-set is then
    empty for the structural reason that the block is an isomorphism
    invariant; an empty return value means same block, different
    congruence orbits).  Every returned element is double-checked as an
    algebra morphism between the built algebras.
    """
    if (src.i, src.j) != (dst.i, dst.j):
        raise BlockMismatch(
            f"blocks {src.block.block} and {dst.block.block} differ; "
            "no morphisms exist across blocks")
    group = "D3" if (src.i, src.j) == (1, 1) else "C2"
    cands = groupoid_hom(group, (src.a, src.b), (dst.a, dst.b), tol)
    a_src, a_dst = build2d(src), build2d(dst)
    return [g for g in cands
            if is_morphism(g.matrix, a_src, a_dst, max(tol, 1e-9))]


def automorphisms_2d(nf: NormalForm2D, tol: float = DEFAULT_TOL
                     ) -> list[GroupElement2D]:
    """The automorphism group of a normal form (hom2d to itself)."""
    return hom2d(nf, nf, tol)


def unitalize(alg: Algebra, a, tol: float = DEFAULT_TOL
              ) -> tuple[Algebra, np.ndarray]:
    """Remove the operator twist at a: the (R_a^-1, L_a^-1) isotope.

    For a division algebra the result has two-sided unity a*a (computed
    in the original algebra); both unit laws are verified before
    returning.
    """
    a = np.asarray(a, dtype=float)
    ra = right_mult(alg, a)
    la = left_mult(alg, a)
    for name, m in (("R_a", ra), ("L_a", la)):
        if abs(float(np.linalg.det(m))) <= tol:
            raise SingularOperator(f"{name} is singular; a is not invertible")
    out = isotope(alg, np.linalg.inv(ra), np.linalg.inv(la), tol)
    u = alg.mul(a, a)
    eye = np.eye(alg.dim)
    defect = max(np.max(np.abs(left_mult(out, u) - eye)),
                 np.max(np.abs(right_mult(out, u) - eye)))
    if defect > 100.0 * max(tol, 1e-12):
        raise NonConvergence(f"unit laws fail at {defect:.3e} after "
                             "removing the twist")
    return Algebra(out.c, label="unital"), u


def iso_to_c(alg: Algebra, u, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Basis change from a unital 2-dimensional division algebra onto C.

    Completes the square on w*w for a basis vector w independent of the
    unity u, producing v with v*v = -u; the map (u, v) -> (1, i) is then
    an isomorphism.  Both signs of v qualify; the one with positive
    second coordinate is chosen (positive first as the measure-zero
    tiebreak), which pins iso_to_c(C, 1) = I exactly.
    """
    u = np.asarray(u, dtype=float)
    w = np.eye(2)[int(np.argmin(np.abs(u)))]
    c0, c1 = np.linalg.solve(np.column_stack([u, w]), alg.mul(w, w))
    v0 = w - 0.5 * c1 * u
    mu = c0 + 0.25 * c1 * c1
    if mu >= -abs(tol):
        raise NoImaginaryUnit(f"w*w completes to {mu:+.3e} u, not negative")
    v = v0 / np.sqrt(-mu)
    if v[1] < -tol or (abs(v[1]) <= tol and v[0] < 0):
        v = -v
    return np.linalg.inv(np.column_stack([u, v]))


def _cnum(m_col) -> complex:
    return complex(m_col[0], m_col[1])


def _lmul(z: complex) -> np.ndarray:
    """Matrix of multiplication by the complex number z."""
    return np.array([[z.real, -z.imag], [z.imag, z.real]])


def split_scalar_spd(m, tol: float = DEFAULT_TOL
                     ) -> tuple[complex, np.ndarray]:
    """Factor m with det m > 0 as (complex scalar) * (SPD det 1).

    The rotation part of the polar decomposition is multiplication by a
    unit complex number w; pulling w out through the SPD part leaves a
    rotated SPD factor, and the determinant supplies the modulus.
    """
    p, o = polar_decompose(m)
    if float(np.linalg.det(o)) < 0:
        raise NotDivision("negative determinant; expected a rotation part")
    w = _cnum(o[:, 0])
    scale = float(np.sqrt(max(np.linalg.det(p), 0.0)))
    a = _lmul(1.0 / w) @ (p / scale) @ _lmul(w)
    return scale * w, 0.5 * (a + a.T)


def _absorbing_scalar(c: complex, i: int, j: int) -> complex:
    """The w with w * c * conj^i(1/w) * conj^j(1/w) = 1.

    Conjugating the pair by multiplication-with-w multiplies the
    residual scalar c by w^-1 (slots without K) or conj(w)^-1 (slots
    with K) on each side; the displayed closed forms solve the four
    cases exactly.
    """
    if (i, j) == (0, 0):
        return c
    if (i, j) == (1, 1):
        r, phi = abs(c), np.angle(c)
        return complex(r * np.cos(-phi / 3.0), r * np.sin(-phi / 3.0))
    return c.conjugate()


def normal_form_2d(alg: Algebra, tol: float = DEFAULT_TOL
                   ) -> tuple[NormalForm2D, np.ndarray]:
    """Reduce a 2-dimensional division algebra to its normal form.

    Returns (nf, iso) with iso a verified isomorphism from alg onto
    build2d(nf).  Pipeline: remove the twist at the first basis vector,
    map the unital quotient onto C, read the algebra as an isotope
    C_{S0, T0}, split each operator into complex scalar, SPD factor and
    K power, and absorb the residual scalar exactly with a single
    multiplication map (the four-case closed form above).
    """
    if alg.dim != 2:
        raise ValueError("normal forms are defined in dimension 2")
    if is_division(alg, mode="exact2d", tol=tol) != "division":
        raise NotDivision("the exact dimension-2 test rejects this algebra")
    a = np.array([1.0, 0.0])
    ra, la = right_mult(alg, a), left_mult(alg, a)
    unital, u = unitalize(alg, a, tol)
    phi1 = iso_to_c(unital, u, tol)
    phi1_inv = np.linalg.inv(phi1)
    s0 = phi1 @ ra @ phi1_inv
    t0 = phi1 @ la @ phi1_inv
    i = 1 if float(np.linalg.det(s0)) < 0 else 0
    j = 1 if float(np.linalg.det(t0)) < 0 else 0
    ki = K2 if i else np.eye(2)
    kj = K2 if j else np.eye(2)
    c1, a1 = split_scalar_spd(s0 @ ki, tol)
    c2, b1 = split_scalar_spd(t0 @ kj, tol)
    # the scalar freedom C_{S,T} = C_{zS, T/z} pools both scalars in S
    c = c1 * c2
    w = _absorbing_scalar(c, i, j)
    phi2 = _lmul(w)
    phi2_inv = _lmul(1.0 / w)
    s2 = phi2 @ _lmul(c) @ a1 @ ki @ phi2_inv
    t2 = b1 @ kj @ phi2_inv
    res_s, a2 = split_scalar_spd(s2 @ ki, tol)
    res_t, b2 = split_scalar_spd(t2 @ kj, tol)
    residual = res_s * res_t
    if abs(residual - 1.0) > 1e-6:
        raise NonConvergence(f"scalar absorption left {residual}, not 1")
    if (i, j) == (1, 1):
        nf = NormalForm2D(1, 1, K2 @ a2 @ K2, K2 @ b2 @ K2)
    else:
        nf = NormalForm2D(i, j, a2, b2)
    iso = phi2 @ phi1
    res = morphism_residual(iso, alg, build2d(nf))
    if res > max(tol, 1e-8):
        raise NonConvergence(
            f"normal-form isomorphism residual {res:.3e} exceeds "
            f"{max(tol, 1e-8):.1e}")
    return nf, iso
