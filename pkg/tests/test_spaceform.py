import math

import numpy as np
import pytest

from cmcgeo.errors import SizeMismatch
from cmcgeo.spaceform import AmbientSpace, bilinear_form, metric_weights, validate_point


def test_ambient_dimensions():
    assert AmbientSpace(0, 3).ambient_dim == 4
    assert AmbientSpace(1, 3).ambient_dim == 5
    assert AmbientSpace(-1, 2).ambient_dim == 4
    with pytest.raises(ValueError):
        AmbientSpace(2, 3)
    with pytest.raises(ValueError):
        AmbientSpace(0, 1)


def test_euclidean_dot():
    sp = AmbientSpace(0, 2)
    assert bilinear_form(sp, [1, 2, 3], [4, 5, 6]) == 32.0


def test_lorentzian_form_values():
    sp = AmbientSpace(-1, 2)
    e0 = np.array([1.0, 0, 0, 0])
    assert bilinear_form(sp, e0, e0) == -1.0
    v = np.array([1.0, 1, 0, 0])
    w = np.array([1.0, -1, 0, 0])
    assert bilinear_form(sp, v, w) == -2.0


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        bilinear_form(AmbientSpace(0, 2), [1, 2], [3, 4])
    with pytest.raises(SizeMismatch):
        validate_point(AmbientSpace(1, 2), [1, 0, 0], 1e-10)


def test_form_symmetric_bilinear_property():
    rng = np.random.default_rng(9)
    for c in (-1, 0, 1):
        sp = AmbientSpace(c, 3)
        d = sp.ambient_dim
        for _ in range(30):
            u, v, w = rng.uniform(-2, 2, (3, d))
            a, b = rng.uniform(-2, 2, 2)
            assert abs(bilinear_form(sp, u, v) - bilinear_form(sp, v, u)) <= 1e-12
            lhs = bilinear_form(sp, a * u + b * v, w)
            rhs = a * bilinear_form(sp, u, w) + b * bilinear_form(sp, v, w)
            assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_validate_point_sphere():
    sp = AmbientSpace(1, 2)
    e1 = np.zeros(4)
    e1[0] = 1.0
    assert validate_point(sp, e1, 1e-10)
    assert not validate_point(sp, 1.1 * e1, 1e-10)


def test_validate_point_hyperboloid():
    sp = AmbientSpace(-1, 2)
    up = np.array([1.0, 0, 0, 0])
    assert validate_point(sp, up, 1e-10)
    assert not validate_point(sp, -up, 1e-10)  # wrong sheet
    x = np.array([math.sqrt(2.0), 1.0, 0, 0])
    assert validate_point(sp, x, 1e-10)


def test_validate_point_flat_always_true():
    assert validate_point(AmbientSpace(0, 2), [5.0, 6.0, 7.0], 1e-12)


def test_metric_weights():
    assert np.array_equal(metric_weights(AmbientSpace(0, 2)), [1, 1, 1])
    assert np.array_equal(metric_weights(AmbientSpace(-1, 2)), [-1, 1, 1, 1])
