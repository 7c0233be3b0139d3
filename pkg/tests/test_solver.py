import math

import pytest

from argand.descent import StepConfig
from argand.directed_line import DirectedLine, I, ONE, ZERO, from_polar, int_pow, modulus
from argand.errors import LengthMismatchError, MaxStepsError, NumericalFailure, StagnationError
from argand.oracle import durand_kerner
from argand.polynomial import Polynomial, cauchy_root_bound, evaluate, residual_scale
from argand.sampling import random_disk_point, random_monic
from argand.solver import SolverConfig, find_all_roots, find_one_root, pair_root_sets, polish_root

from conftest import close


def L(a, b=0.0):
    return DirectedLine(a, b)


def assert_same_roots(found, expected, tol):
    _, dist = pair_root_sets(list(found), list(expected))
    assert dist <= tol, dist


# -- find_one_root ----------------------------------------------------------------

def test_linear_one_step():
    root, steps = find_one_root(Polynomial([1, L(-3, -4)]))
    assert root == L(3, 4) and steps == 1


def test_quadratic_one_step():
    root, steps = find_one_root(Polynomial([1, 0, 1]))
    assert close(root, I, 1e-15) and steps == 1


def test_cubic_against_oracle():
    p = Polynomial([1, 0, -2, 2])
    root, _ = find_one_root(p)
    assert modulus(evaluate(p, root)) <= 1e-10
    oracle = durand_kerner(p)
    assert min(modulus(root - x) for x in oracle) <= 1e-9


def test_trajectory_strictly_decreasing(rng):
    for _ in range(20):
        p = random_monic(rng, int(rng.integers(2, 11)))
        seen = []
        find_one_root(p, on_step=lambda it, z, out: seen.append((it, out.old_modulus, out.new_modulus)))
        assert [it for it, _, _ in seen] == list(range(len(seen)))
        mods = [seen[0][1]] + [new for _, _, new in seen]
        assert all(b < a for a, b in zip(mods, mods[1:]))
        assert all(seen[k][2] == seen[k + 1][1] for k in range(len(seen) - 1))


def test_start_point_respected():
    p = Polynomial([1, 0, -1])
    root, _ = find_one_root(p, SolverConfig(start_point=L(0.9, 0.1)))
    assert close(root, ONE, 1e-10)
    root, _ = find_one_root(p, start=L(-0.9, 0.1))
    assert close(root, L(-1), 1e-10)


def test_already_at_root_takes_no_steps():
    root, steps = find_one_root(Polynomial([1, -1]), start=ONE)
    assert root == ONE and steps == 0


def test_max_steps_error():
    cfg = SolverConfig(max_steps_per_root=3)
    with pytest.raises(MaxStepsError):
        find_one_root(Polynomial([1, 0, -2, 2]), cfg)


def test_stagnation_error():
    # Lowest pivot only, beside the saddle of |x^2 + 1| at 0: each step
    # gains about one part in 1e6, far below the loosened ratio.
    cfg = SolverConfig(
        stagnation_window=3,
        stagnation_ratio=1 - 1e-3,
        step_config=StepConfig(fallback_ratio=1.0),
        start_point=L(1e-3),
    )
    with pytest.raises(StagnationError):
        find_one_root(Polynomial([1, 0, 1]), cfg)


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(root_tolerance=0)
    with pytest.raises(ValueError):
        SolverConfig(stagnation_ratio=1.0)
    with pytest.raises(ValueError):
        SolverConfig(max_steps_per_root=0)


# -- find_all_roots -----------------------------------------------------------------

def test_x2_plus_1():
    res = find_all_roots(Polynomial([1, 0, 1]))
    assert_same_roots(res.roots, [I, L(0, -1)], 1e-10)


def test_cube_roots_of_unity():
    res = find_all_roots(Polynomial([1, 0, 0, -1]))
    expected = [from_polar(1, 2 * math.pi * k / 3) for k in range(3)]
    assert_same_roots(res.roots, expected, 1e-10)


def test_random_degree_10_against_oracle(rng):
    p = random_monic(rng, 10)
    res = find_all_roots(p)
    assert_same_roots(res.roots, durand_kerner(p), 1e-6)


def test_non_monic_input_normalized():
    p = Polynomial([2, 0, -8])
    res = find_all_roots(p)
    assert_same_roots(res.roots, [L(2), L(-2)], 1e-10)


def test_result_shapes_and_residuals(rng):
    p = random_monic(rng, 7)
    cfg = SolverConfig()
    res = find_all_roots(p, cfg)
    n = p.degree
    assert len(res.roots) == len(res.residuals) == len(res.steps_per_root) == len(res.polished) == n
    for root, r in zip(res.roots, res.residuals):
        assert r == modulus(evaluate(p, root))
        assert r <= cfg.root_tolerance * residual_scale(p, root)
        assert modulus(root) <= cauchy_root_bound(p) + 1e-6
    assert res.polished == tuple(k > 0 for k in res.polish_steps)


def test_vieta_relations(rng):
    for _ in range(30):
        degree = int(rng.integers(2, 11))
        p = random_monic(rng, degree)
        res = find_all_roots(p)
        a = p.coefficients[1]
        g = p.coefficients[-1]
        total = ZERO
        prod = ONE
        for r in res.roots:
            total = total + r
            prod = prod * r
        assert modulus(total + a) <= 1e-6 * (1 + modulus(a))
        sign = -1.0 if degree % 2 else 1.0
        assert modulus(prod - sign * g) <= 1e-6 * (1 + modulus(g))


def test_deterministic(rng):
    p = random_monic(rng, 9)
    assert find_all_roots(p) == find_all_roots(p)


def test_failure_carries_root_index():
    cfg = SolverConfig(max_steps_per_root=3)
    with pytest.raises(NumericalFailure) as info:
        find_all_roots(Polynomial([1, -1, 0, -2, 2]), cfg)
    assert info.value.root_index is not None
    assert str(info.value).startswith(f"root {info.value.root_index}:")


def test_on_step_sees_root_indices():
    seen = []
    find_all_roots(Polynomial([1, 0, -2, 2]), on_step=lambda k, it, z, out: seen.append(k))
    assert sorted(set(seen)) == [0, 1, 2]
    assert seen == sorted(seen)


def test_polish_improves_perturbed_root():
    p = Polynomial([1, 0, -2])
    start = L(math.sqrt(2) + 1e-6)
    z, steps = polish_root(p, start)
    assert steps > 0
    assert abs(z.re - math.sqrt(2)) < 1e-14


def test_polish_never_raises_at_root():
    z, steps = polish_root(Polynomial([1, -1]), ONE)
    assert z == ONE and steps == 0


# -- pair_root_sets -------------------------------------------------------------------

def test_pair_identical():
    a = [L(1, 2), L(-3), L(0, 0.5)]
    pairing, dist = pair_root_sets(a, a)
    assert sorted(pairing) == [0, 1, 2] and dist == 0.0


def test_pair_crossed():
    pairing, dist = pair_root_sets([L(1), L(-1)], [L(-1.000001), L(1.000001)])
    assert pairing == [1, 0]
    assert dist == pytest.approx(1e-6, rel=1e-6)


def test_pair_shuffled(rng):
    a = [random_disk_point(rng) for _ in range(12)]
    order = list(rng.permutation(12))
    b = [a[k] for k in order]
    pairing, dist = pair_root_sets(a, b)
    assert dist == 0.0
    assert [b[k] for k in pairing] == a


def test_pair_length_mismatch():
    with pytest.raises(LengthMismatchError):
        pair_root_sets([ONE], [ONE, I])
