"""Permutation helpers: composition, sign, ridge-image completion."""

import pytest
from hypothesis import given, strategies as st

from triglue import permutation as pm


def perms(degree):
    return st.permutations(range(degree)).map(tuple)


@given(st.integers(2, 7).flatmap(lambda d: st.tuples(perms(d), perms(d))))
def test_sign_is_multiplicative(pair):
    p, q = pair
    assert pm.sign(pm.compose(p, q)) == pm.sign(p) * pm.sign(q)


@given(st.integers(1, 7).flatmap(perms))
def test_inverse_composes_to_identity(p):
    assert pm.compose(p, pm.invert(p)) == pm.identity(len(p))
    assert pm.compose(pm.invert(p), p) == pm.identity(len(p))


def test_sign_of_identity_and_transposition():
    assert pm.sign(pm.identity(5)) == 1
    assert pm.sign(pm.transposition(5, 1, 3)) == -1


def test_from_ridge_images_table_convention():
    # Entry "0 (0324)" in a gluing table row for the ridge opposite vertex 3:
    # corners (0,1,2,4) map to (0,3,2,4), and 3 goes to the leftover label 1.
    p = pm.from_ridge_images(4, 3, (0, 3, 2, 4))
    assert p == (0, 3, 2, 1, 4)
    assert pm.to_ridge_images(p, 3) == (0, 3, 2, 4)


def test_from_ridge_images_rejects_bad_input():
    with pytest.raises(ValueError):
        pm.from_ridge_images(4, 3, (0, 3, 2))       # wrong length
    with pytest.raises(ValueError):
        pm.from_ridge_images(4, 3, (0, 3, 3, 4))    # repeated label
    with pytest.raises(ValueError):
        pm.from_ridge_images(4, 5, (0, 1, 2, 3))    # ridge out of range


@given(st.integers(1, 6).flatmap(
    lambda d: st.tuples(st.just(d), st.integers(0, d), perms(d + 1))))
def test_ridge_images_round_trip(args):
    d, ridge, p = args
    images = pm.to_ridge_images(p, ridge)
    assert pm.from_ridge_images(d, ridge, images) == p
