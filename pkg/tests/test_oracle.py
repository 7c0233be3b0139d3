import math

import pytest

from argand.directed_line import DirectedLine, from_polar, modulus
from argand.errors import OracleNoConvergeError
from argand.oracle import OracleConfig, durand_kerner
from argand.polynomial import Polynomial, evaluate, residual_scale
from argand.sampling import random_monic
from argand.solver import pair_root_sets


def L(a, b=0.0):
    return DirectedLine(a, b)


@pytest.mark.parametrize("coeffs, expected", [
    ([1, 0, -1], [L(1), L(-1)]),
    ([1, 0, 0, -1], [from_polar(1, 2 * math.pi * k / 3) for k in range(3)]),
    ([1, -2, 5], [L(1, 2), L(1, -2)]),
])
def test_oracle_examples(coeffs, expected):
    roots = durand_kerner(Polynomial(coeffs))
    _, dist = pair_root_sets(roots, expected)
    assert dist <= 1e-10


def test_oracle_residuals_on_ensemble(rng):
    for _ in range(100):
        p = random_monic(rng, int(rng.integers(1, 13)))
        for x in durand_kerner(p):
            assert modulus(evaluate(p, x)) <= 1e-8 * residual_scale(p, x)


def test_oracle_normalizes():
    roots = durand_kerner(Polynomial([3, 0, -12]))
    _, dist = pair_root_sets(roots, [L(2), L(-2)])
    assert dist <= 1e-10


def test_oracle_no_converge():
    with pytest.raises(OracleNoConvergeError):
        durand_kerner(Polynomial([1, -4, 6, -4, 1]), OracleConfig(max_iterations=5))


def test_oracle_linear():
    assert durand_kerner(Polynomial([1, L(-3, -4)])) == [L(3, 4)]
