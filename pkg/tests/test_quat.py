import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divalg.core import classical, isotope, left_mult, morphism_residual, \
    right_mult, sign_pair
from divalg.errors import NotSpecialOrthogonal, SingularOperator, \
    ZeroQuaternion
from divalg.matkit import random_rotation, sign_det
from divalg.quat import ZObject, functor_h, k_map, qconj, qinv, qmul, \
    quat_normal_form, rep_normalize, so4_factor, z_action
from divalg.samples import random_quat_pair, random_unit_quaternion, \
    random_z_object

E0, E1, E2, E3 = np.eye(4)


def test_qmul_table(H):
    assert np.allclose(qmul(E1, E2), E3)
    assert np.allclose(qmul(E2, E1), -E3)
    rng = np.random.default_rng(1)
    x, y = rng.standard_normal(4), rng.standard_normal(4)
    assert np.allclose(qmul(x, y), H.mul(x, y))


def test_qconj_and_qinv():
    q = np.array([1.0, 2.0, -1.0, 0.5])
    assert np.allclose(qconj(q), [1.0, -2.0, 1.0, -0.5])
    assert np.allclose(qmul(q, qinv(q)), E0, atol=1e-12)
    with pytest.raises(ZeroQuaternion):
        qinv(np.zeros(4))


def test_rep_normalize():
    q = np.array([0.0, -2.0, 0.0, 1.0])
    r = rep_normalize(q)
    assert abs(np.linalg.norm(r) - 1.0) <= 1e-12
    assert r[1] > 0                       # first nonzero made positive
    assert np.allclose(rep_normalize(-q), r)
    with pytest.raises(ZeroQuaternion):
        rep_normalize(np.zeros(4))


def test_k_map_basics():
    assert np.allclose(k_map(E0), np.eye(4), atol=1e-14)
    s = random_unit_quaternion(0)
    k = k_map(s)
    assert np.max(np.abs(k.T @ k - np.eye(4))) <= 1e-12
    assert np.allclose(k @ E0, E0, atol=1e-12)
    assert np.allclose(k_map(-s), k, atol=1e-14)
    with pytest.raises(ValueError):
        k_map(np.eye(4))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_k_map_is_multiplicative(seed):
    rng = np.random.default_rng(seed)
    s, t = rng.standard_normal(4), rng.standard_normal(4)
    assert np.allclose(k_map(qmul(s, t)), k_map(s) @ k_map(t), atol=1e-10)


def test_zobject_validation():
    x = ZObject(-2.0 * E0, E1, np.eye(4), np.eye(4))
    assert np.allclose(x.a, E0)           # representative normalization
    assert x.is_y
    with pytest.raises(ValueError):
        ZObject(E0, E0, np.diag([2.0, 1, 1, 1]), np.eye(4))
    with pytest.raises(ValueError):
        x.c[0, 0] = 5.0                   # stored arrays are frozen


def test_z_action_composes():
    x = random_z_object(4)
    s, t = random_unit_quaternion(5), random_unit_quaternion(6)
    once = z_action(t, z_action(s, x))
    both = z_action(qmul(t, s), x)
    assert np.allclose(once.a, both.a, atol=1e-10)
    assert np.allclose(once.b, both.b, atol=1e-10)
    assert np.allclose(once.c, both.c, atol=1e-10)
    assert np.allclose(once.d, both.d, atol=1e-10)


def test_z_action_preserves_y():
    x = random_z_object(7, trivial_spd=True)
    assert z_action(random_unit_quaternion(8), x).is_y


def test_functor_h_identity_object_is_quaternions(H):
    x = ZObject(E0, E0, np.eye(4), np.eye(4))
    assert np.allclose(functor_h(1, 1, x).c, H.c, atol=1e-14)


def test_functor_h_rejects_bad_signs():
    x = ZObject(E0, E0, np.eye(4), np.eye(4))
    with pytest.raises(ValueError):
        functor_h(0, 1, x)


def test_functor_h_minus_plus_row(H):
    # block (1,-1) multiplies via (conj(x) a)(y b): at x = y = 1 this is
    # a b, so the unit square lands on the product of the representatives
    x = ZObject(E1, E2, np.eye(4), np.eye(4))
    alg = functor_h(1, -1, x)
    assert np.allclose(alg.c[0, 0], qmul(E1, E2), atol=1e-12)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([(1, 1), (1, -1),
                                                (-1, 1), (-1, -1)]))
def test_functor_h_block(seed, block):
    alpha, beta = block
    alg = functor_h(alpha, beta, random_z_object(seed))
    assert sign_pair(alg, samples=16) == (alpha, beta)


def test_functoriality_of_k(H):
    s = random_unit_quaternion(12)
    x = random_z_object(13)
    x2 = z_action(s, x)
    for alpha in (1, -1):
        for beta in (1, -1):
            res = morphism_residual(k_map(s), functor_h(alpha, beta, x),
                                    functor_h(alpha, beta, x2))
            assert res <= 1e-10


def test_so4_factor_identity():
    a, b = so4_factor(np.eye(4))
    assert np.allclose(a, E0) and np.allclose(b, E0)


def test_so4_factor_recovers_conjugation():
    s = random_unit_quaternion(21)
    a, b = so4_factor(k_map(s))
    assert np.allclose(a, rep_normalize(s), atol=1e-10)
    h = classical("H")
    rec = left_mult(h, a) @ right_mult(h, b)
    assert np.max(np.abs(rec - k_map(s))) <= 1e-10


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_so4_factor_roundtrip(seed):
    o = random_rotation(4, seed)
    a, b = so4_factor(o)
    h = classical("H")
    assert np.linalg.norm(left_mult(h, a) @ right_mult(h, b) - o) <= 1e-10
    first = a[np.flatnonzero(np.abs(a) > 1e-12)[0]]
    assert first > 0


def test_so4_factor_rejects_non_rotation():
    with pytest.raises(NotSpecialOrthogonal):
        so4_factor(np.diag([1.0, 1.0, 1.0, -1.0]))
    with pytest.raises(NotSpecialOrthogonal):
        so4_factor(2.0 * np.eye(4))


def test_normal_form_identity_pair(H):
    alpha, beta, x, iso = quat_normal_form(np.eye(4), np.eye(4))
    assert (alpha, beta) == (1, 1)
    assert np.allclose(x.a, E0) and np.allclose(x.b, E0)
    assert x.is_y
    assert np.allclose(iso, np.eye(4), atol=1e-10)


def test_normal_form_left_multiplication(H):
    alpha, beta, x, iso = quat_normal_form(left_mult(H, E1), np.eye(4))
    assert (alpha, beta) == (1, 1)
    assert np.allclose(x.a, E1, atol=1e-10)
    assert np.allclose(x.b, E0, atol=1e-10)
    assert x.is_y
    assert np.allclose(iso, np.eye(4), atol=1e-10)


def test_normal_form_rejects_singular():
    with pytest.raises(SingularOperator):
        quat_normal_form(np.diag([1.0, 1.0, 1.0, 0.0]), np.eye(4))


def test_normal_form_all_four_blocks(H):
    flip = np.diag([-1.0, 1.0, 1.0, 1.0])
    base_s = random_rotation(4, 31)
    base_t = random_rotation(4, 32)
    for i_s in (0, 1):
        for i_t in (0, 1):
            s = flip @ base_s if i_s else base_s
            t = flip @ base_t if i_t else base_t
            alpha, beta, x, iso = quat_normal_form(s, t)
            assert (alpha, beta) == ((-1) ** i_t, (-1) ** i_s)
            res = morphism_residual(iso, isotope(H, s, t),
                                    functor_h(alpha, beta, x))
            assert res <= 1e-8


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_normal_form_random_pairs(seed):
    h = classical("H")
    s, t = random_quat_pair(seed)
    alpha, beta, x, iso = quat_normal_form(s, t)
    assert (alpha, beta) == (sign_det(t), sign_det(s))
    res = morphism_residual(iso, isotope(h, s, t),
                            functor_h(alpha, beta, x))
    assert res <= 1e-8
