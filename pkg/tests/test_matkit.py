import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divalg.errors import SingularInput
from divalg.matkit import gram, is_spd1, polar_decompose, random_invertible, \
    random_rotation, random_spd1, sign_det, sign_det_many


def test_sign_det_orientation():
    assert sign_det(np.eye(3)) == 1
    assert sign_det(np.diag([1.0, -1.0])) == -1
    assert sign_det_many(np.stack([np.eye(2), -np.eye(2)])).tolist() == [1, 1]
    assert sign_det_many(np.stack([np.eye(3), -np.eye(3)])).tolist() \
        == [1, -1]


def test_sign_det_rejects_near_singular():
    from divalg.errors import DegenerateSign
    with pytest.raises(DegenerateSign):
        sign_det(np.diag([1.0, 1e-15]))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 4, 8]))
def test_sign_det_multiplicative(seed, n):
    rng = np.random.default_rng(seed)
    m = random_invertible(n, rng)
    w = random_invertible(n, rng)
    assert sign_det(m @ w) == sign_det(m) * sign_det(w)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 4, 8]))
def test_polar_roundtrip(seed, n):
    m = random_invertible(n, seed)
    p, o = polar_decompose(m)
    assert np.linalg.norm(p @ o - m) <= 1e-10 * np.linalg.norm(m)
    assert np.max(np.abs(o.T @ o - np.eye(n))) <= 1e-10
    assert np.linalg.eigvalsh(p)[0] > 0
    assert np.allclose(p, p.T)


def test_polar_rejects_singular():
    with pytest.raises(SingularInput):
        polar_decompose(np.diag([1.0, 0.0]))


def test_is_spd1():
    assert is_spd1(np.eye(4))
    assert not is_spd1(np.diag([2.0, 1.0]))          # det 2
    assert not is_spd1(np.diag([1.0, -1.0]))         # not positive
    assert not is_spd1(np.array([[1.0, 0.5], [0.0, 1.0]]))  # not symmetric


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 4]))
def test_random_spd1_is_spd1(seed, n):
    assert is_spd1(random_spd1(n, seed), 1e-8)


def test_random_rotation_is_special_orthogonal():
    for seed in range(10):
        q = random_rotation(4, seed)
        assert np.max(np.abs(q.T @ q - np.eye(4))) <= 1e-12
        assert np.linalg.det(q) > 0


def test_gram_preserves_spd(rng):
    s = random_spd1(4, rng)
    f = random_invertible(4, rng)
    g = gram(f, s)
    assert np.allclose(g, g.T)
    assert np.linalg.eigvalsh(g)[0] > 0


def test_generators_are_seed_deterministic():
    assert np.array_equal(random_invertible(4, 7), random_invertible(4, 7))
    assert np.array_equal(random_spd1(4, 7), random_spd1(4, 7))
    assert np.array_equal(random_rotation(4, 7), random_rotation(4, 7))
