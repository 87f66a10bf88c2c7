import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from divbounds._numeric import DomainError
from divbounds.generators import (
    MEAN_GENERATORS,
    GeneratorSpec,
    Kind,
    convexity_check,
    custom_generator,
    derivative_selfcheck,
    get_generator,
    make_generator,
    parse_spec,
    registry,
)
from divbounds.means import MeanDivergence, mean_divergence

from conftest import random_pairs

MEAN_KIND = {
    "ah": MeanDivergence.AH,
    "ag": MeanDivergence.AG,
    "n2n1": MeanDivergence.N2N1,
    "n2g": MeanDivergence.N2G,
    "an2": MeanDivergence.AN2,
}


def test_phi1_at_one():
    g = get_generator("phi:1")
    assert (g(1.0), g.d1(1.0), g.d2(1.0)) == (0.0, 0.0, 1.0)


@pytest.mark.parametrize(
    "name, x, expected",
    [
        ("ah", 1.0, 0.5),
        ("n2n1", 1.0, 1 / 16),
        ("ag", 4.0, 1 / 32),
    ],
)
def test_second_derivative_anchors(name, x, expected):
    assert get_generator(name).d2(x) == pytest.approx(expected, rel=1e-14)


def test_printed_n2n1_derivative_formula():
    # f'' printed for the N2N1 generator, written with the (2x+2)^(3/2) factor
    x = np.geomspace(0.01, 100, 50)
    printed = (-2 * x - 2 * x**2.5 + x * (2 * x + 2) ** 1.5) / (8 * x**2.5 * (2 * x + 2) ** 1.5)
    np.testing.assert_allclose(get_generator("n2n1").d2(x), printed, rtol=1e-12)


@pytest.mark.parametrize("g", registry(), ids=lambda g: g.name)
def test_registry_selfcheck(g):
    rep = derivative_selfcheck(g, (0.05, 20), 200)
    assert rep.passed, rep


@pytest.mark.parametrize("name", ["phi:2", "n2n1"])
def test_selfcheck_wide_interval(name):
    assert derivative_selfcheck(get_generator(name), (0.1, 10), 100).passed


def test_selfcheck_negative_control():
    bad = custom_generator("bad", lambda x: x * x, lambda x: 3 * x, lambda x: 2 + 0 * x)
    assert not derivative_selfcheck(bad, (0.1, 10), 100).passed


def test_selfcheck_domain():
    with pytest.raises(DomainError):
        derivative_selfcheck(get_generator("ah"), (-1.0, 2.0), 10)
    with pytest.raises(ValueError):
        derivative_selfcheck(get_generator("ah"), (0.1, 2.0), 2)


def test_convexity():
    assert convexity_check(get_generator("fs:0.5"), (0.01, 100), 500)
    for name in MEAN_GENERATORS:
        assert convexity_check(get_generator(name), (0.01, 100), 500), name
    concave = custom_generator("neg-square", lambda x: -x * x, lambda x: -2 * x, lambda x: -2 + 0 * x)
    assert not convexity_check(concave, (0.01, 100), 50)


def test_fs_rejects_s_above_one():
    with pytest.raises(ValueError, match="convex"):
        make_generator(GeneratorSpec(Kind.FS, 1.5))


def test_custom_needs_all_maps():
    with pytest.raises(ValueError):
        GeneratorSpec(Kind.CUSTOM, value=lambda x: x)


@pytest.mark.parametrize("name", ["bogus", "fs", "phi:abc", "ah:2", "custom"])
def test_parse_errors(name):
    with pytest.raises(ValueError):
        parse_spec(name)


def test_domain_error_at_nonpositive():
    g = get_generator("phi:0")
    with pytest.raises(DomainError):
        g(0.0)
    with pytest.raises(DomainError):
        g.d1(np.array([1.0, -2.0]))


def test_normalization():
    for name in MEAN_GENERATORS:
        g = get_generator(name)
        assert abs(g(1.0)) <= 1e-14 and g.normalized
    for s in (-3, -1, 0, 0.3, 1, 2, 7.5):
        assert get_generator(f"phi:{s}").normalized


@given(st.floats(0.1, 10))
def test_phi_limit_continuity(x):
    for base in (0.0, 1.0):
        ref = get_generator(f"phi:{base:g}")(x)
        for eps in (1e-6, -1e-6):
            assert abs(get_generator(f"phi:{base + eps}")(x) - ref) <= 1e-4


@given(st.floats(0.1, 10))
def test_fs_limit_continuity(x):
    ref = get_generator("fs:0")(x)
    for eps in (1e-6, -1e-6):
        assert abs(make_generator(GeneratorSpec(Kind.FS, eps))(x) - ref) <= 1e-4


@pytest.mark.parametrize("name", MEAN_GENERATORS)
def test_f_divergence_reproduces_mean_divergence(name):
    g = get_generator(name)
    for P, Q in random_pairs(200, seed=3):
        cf = math.fsum(q * g(p / q) for p, q in zip(P.weights, Q.weights))
        assert cf == pytest.approx(mean_divergence(MEAN_KIND[name], P, Q), abs=1e-12)


def test_array_and_scalar_agree():
    g = get_generator("an2")
    x = np.array([0.2, 1.0, 5.0])
    assert [g(v) for v in x] == pytest.approx(g(x), rel=1e-15)
    assert isinstance(g(0.2), float)
