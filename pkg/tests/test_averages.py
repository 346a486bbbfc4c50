from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ofncandle import (
    EXPONENTIAL,
    LINEAR,
    SIMPLE,
    BadGamma,
    EmptySeries,
    TooFewPoints,
    WeightScheme,
    exponential_average,
    linear_weighted_average,
    scheme_from_name,
    simple_average,
    std_dev,
    weighted_average,
)


# -- independent oracles -------------------------------------------------


def lwa_oracle(values):
    n = len(values)
    return sum((i + 1) * x for i, x in enumerate(values)) / (n * (n + 1) / 2)


def ea_oracle_unnormalised(values, gamma):
    n = len(values)
    num = sum((1 - gamma) ** (n - 1 - i) * x for i, x in enumerate(values))
    den = sum((1 - gamma) ** (n - 1 - i) for i in range(n))
    return num / den


def ea_oracle_closed(values, gamma):
    n = len(values)
    return sum(gamma * (1 - gamma) ** (n - 1 - i) * x for i, x in enumerate(values)) / (
        1 - (1 - gamma) ** n
    )


def var_two_pass(values):
    m = sum(values) / len(values)
    return sum((x - m) ** 2 for x in values) / (len(values) - 1)


# -- simple ---------------------------------------------------------------


def test_simple_average():
    assert simple_average([1, 2, 3, 4, 5]) == 3.0
    assert simple_average([7]) == 7.0


def test_simple_average_empty():
    with pytest.raises(EmptySeries):
        simple_average([])


# -- linear ---------------------------------------------------------------


def test_linear_weighted_average_oracle():
    assert linear_weighted_average([1, 2, 3, 4, 5]) == pytest.approx(lwa_oracle([1, 2, 3, 4, 5]), abs=1e-14)
    assert linear_weighted_average([1, 2, 3, 4, 5]) == pytest.approx(55 / 15, abs=1e-14)
    assert linear_weighted_average([5, 4, 3, 2, 1]) == pytest.approx(35 / 15, abs=1e-14)


def test_linear_weighted_average_constant():
    assert linear_weighted_average([4.2] * 9) == pytest.approx(4.2, abs=1e-12)


# -- exponential ------------------------------------------------------------


def test_exponential_average_oracle():
    x = [1, 2, 3, 4, 5]
    assert exponential_average(x, 1 / 3) == pytest.approx(ea_oracle_unnormalised(x, 1 / 3), abs=1e-12)
    assert exponential_average(x, 1 / 3) == pytest.approx(3.7583, abs=5e-5)


def test_exponential_default_gamma_is_two_over_n_plus_one():
    x = [1, 2, 3, 4, 5]
    assert exponential_average(x) == exponential_average(x, 2 / 6)


def test_exponential_two_point():
    assert exponential_average([0, 10], 2 / 3) == pytest.approx(7.5, abs=1e-12)


def test_exponential_constant():
    assert exponential_average([3.14] * 7, 0.2) == pytest.approx(3.14, abs=1e-12)


def test_exponential_closed_forms_agree():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(2, 40))
        x = rng.normal(100, 10, n)
        g = float(rng.uniform(0.01, 0.99))
        a, b = ea_oracle_unnormalised(list(x), g), ea_oracle_closed(list(x), g)
        assert math.isclose(a, b, rel_tol=1e-12)
        assert math.isclose(exponential_average(x, g), a, rel_tol=1e-12)


def test_bad_gamma():
    for g in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(BadGamma):
            exponential_average([1, 2], g)
    with pytest.raises(BadGamma):
        WeightScheme("exponential", gamma=1.5)


# -- dispatch ---------------------------------------------------------------


def test_weighted_average_dispatch():
    assert weighted_average([1, 2, 3], SIMPLE) == 2.0
    assert weighted_average([1, 2, 3, 4, 5], LINEAR) == pytest.approx(3.6667, abs=5e-5)
    assert weighted_average([1, 2, 3, 4, 5], EXPONENTIAL) == pytest.approx(3.7583, abs=5e-5)
    assert weighted_average([1, 2], WeightScheme("exponential", gamma=2 / 3)) == pytest.approx(
        exponential_average([1, 2], 2 / 3)
    )


def test_scheme_from_name():
    assert scheme_from_name("sa") is SIMPLE
    assert scheme_from_name("LWA") is LINEAR
    assert scheme_from_name(" ea ") is EXPONENTIAL
    with pytest.raises(ValueError):
        scheme_from_name("wma")


def test_weights_are_nondecreasing():
    for scheme in (SIMPLE, LINEAR, EXPONENTIAL, WeightScheme("exponential", 0.9)):
        w = scheme.weights(17)
        assert np.all(np.diff(w) >= 0)


# -- std_dev -----------------------------------------------------------------


def test_std_dev_oracle():
    assert std_dev([1, 2, 3, 4, 5]) == pytest.approx(math.sqrt(var_two_pass([1, 2, 3, 4, 5])), abs=1e-14)
    assert std_dev([1, 2, 3, 4, 5]) == pytest.approx(1.58114, abs=5e-6)


def test_std_dev_constant_is_zero():
    assert std_dev([2.5] * 6) == 0.0


def test_std_dev_needs_two_points():
    with pytest.raises(TooFewPoints):
        std_dev([1.0])


# -- invariants ----------------------------------------------------------------

finite_series = st.lists(
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=40,
)


@given(finite_series)
def test_every_average_within_range(xs):
    lo, hi = min(xs), max(xs)
    for scheme in (SIMPLE, LINEAR, EXPONENTIAL):
        avg = weighted_average(xs, scheme)
        assert lo - 1e-9 * (1 + abs(lo)) <= avg <= hi + 1e-9 * (1 + abs(hi))


@given(
    finite_series.filter(lambda xs: len(xs) >= 2),
    st.floats(min_value=0.1, max_value=10, allow_nan=False),
    st.floats(min_value=-100, max_value=100, allow_nan=False),
)
@settings(max_examples=60)
def test_shift_scale_equivariance(xs, a, b):
    mapped = [a * x + b for x in xs]
    for scheme in (SIMPLE, LINEAR, EXPONENTIAL):
        left = weighted_average(mapped, scheme)
        right = a * weighted_average(xs, scheme) + b
        assert math.isclose(left, right, rel_tol=1e-9, abs_tol=1e-6)
    assert math.isclose(std_dev(mapped), a * std_dev(xs), rel_tol=1e-9, abs_tol=1e-6)


@given(
    st.lists(st.floats(min_value=-1e5, max_value=1e5, allow_nan=False), min_size=2, max_size=30)
)
@settings(max_examples=80)
def test_monotone_series_ordering(xs):
    """On sorted (monotone) series the weighted averages bound the plain mean."""
    inc = sorted(xs)
    if inc[0] == inc[-1]:
        return
    sa = simple_average(inc)
    for scheme in (LINEAR, EXPONENTIAL):
        assert sa <= weighted_average(inc, scheme) + 1e-9 * (1 + abs(sa))
    dec = inc[::-1]
    sa = simple_average(dec)
    for scheme in (LINEAR, EXPONENTIAL):
        assert sa >= weighted_average(dec, scheme) - 1e-9 * (1 + abs(sa))


def test_ordering_claim_fails_off_monotone_data():
    # the counterexample that keeps the ordering property restricted to
    # monotone series: first <= last yet the weighted average drops below
    xs = [0, 10, 0, 1]
    assert xs[0] <= xs[-1]
    assert linear_weighted_average(xs) < simple_average(xs)
