"""All-roots driver built on repeated descent steps and deflation.

Each root is found by iterating :func:`argand_step` from a fixed start
point until the residual drops below ``root_tolerance * residual_scale``.
The root is then polished on the original polynomial (deflation error is
otherwise uncontrolled), divided out, and the search moves to the
quotient.

Descent alone carries no convergence rate, so the loop watches for
stagnation and gives up with an explicit error rather than return a poor
answer.
"""

from dataclasses import dataclass, field

from .descent import StepConfig, argand_step
from .directed_line import ZERO, modulus
from .errors import MaxStepsError, NumericalFailure, StagnationError, LengthMismatchError
from .polynomial import deflate, evaluate, horner_error_bound, monic_normalize, residual_scale

__all__ = [
    "SolverConfig",
    "RootResult",
    "find_one_root",
    "polish_root",
    "find_all_roots",
    "pair_root_sets",
]


@dataclass(frozen=True)
class SolverConfig:
    root_tolerance: float = 1e-12
    max_steps_per_root: int = 10000
    stagnation_window: int = 50
    stagnation_ratio: float = 1.0 - 1e-12
    step_config: StepConfig = field(default_factory=StepConfig)
    start_point: object = ZERO

    def __post_init__(self):
        if self.root_tolerance <= 0:
            raise ValueError("root_tolerance must be positive")
        if self.max_steps_per_root < 1 or self.stagnation_window < 1:
            raise ValueError("step limits must be positive")
        if not 0.0 < self.stagnation_ratio < 1.0:
            raise ValueError("stagnation_ratio must lie in (0, 1)")


@dataclass(frozen=True)
class RootResult:
    """Roots of a polynomial with per-root diagnostics.

    ``residuals`` are ``|y(root)|`` on the original (normalized) polynomial.
    ``steps_per_root`` counts search steps; ``polish_steps`` the extra steps
    taken on the original polynomial afterwards, and ``polished`` is true
    when at least one of those was accepted.
    """

    roots: tuple
    residuals: tuple
    steps_per_root: tuple
    polished: tuple
    polish_steps: tuple = ()


def _converged(p, z, value_modulus, tolerance):
    return value_modulus <= tolerance * residual_scale(p, z)


def find_one_root(p, cfg=None, start=None, on_step=None):
    """Descend from ``start`` (default ``cfg.start_point``) to one root of ``p``.

    Returns ``(root, steps)``.  ``on_step(iteration, z, outcome)`` is called
    for every accepted step, ``z`` being the point the step left from.
    """
    cfg = cfg or SolverConfig()
    z = cfg.start_point if start is None else start
    current = modulus(evaluate(p, z))
    slow = 0
    steps = 0
    while not _converged(p, z, current, cfg.root_tolerance):
        if steps >= cfg.max_steps_per_root:
            raise MaxStepsError(
                f"|y| = {current:.3e} after {steps} steps (tolerance not reached)"
            )
        outcome = argand_step(p, z, cfg.step_config)
        if on_step is not None:
            on_step(steps, z, outcome)
        steps += 1
        slow = slow + 1 if outcome.new_modulus > cfg.stagnation_ratio * current else 0
        z = outcome.new_point
        current = outcome.new_modulus
        if slow >= cfg.stagnation_window and not _converged(p, z, current, cfg.root_tolerance):
            raise StagnationError(
                f"|y| = {current:.3e} barely moved over {slow} consecutive steps"
            )
    return z, steps


def polish_root(p, z, cfg=None, budget=None):
    """Keep descending on ``p`` from ``z`` until rounding noise is reached.

    Stops when ``|y|`` falls under the Horner rounding bound, when a step
    cannot be made, on stagnation or when ``budget`` steps are spent.  Never
    raises for those reasons; returns ``(best_point, accepted_steps)``.
    """
    cfg = cfg or SolverConfig()
    if budget is None:
        budget = max(1, cfg.max_steps_per_root // 10)
    current = modulus(evaluate(p, z))
    steps = 0
    slow = 0
    while steps < budget and current > horner_error_bound(p, z):
        try:
            outcome = argand_step(p, z, cfg.step_config)
        except NumericalFailure:
            break
        steps += 1
        slow = slow + 1 if outcome.new_modulus > cfg.stagnation_ratio * current else 0
        z = outcome.new_point
        current = outcome.new_modulus
        if slow >= cfg.stagnation_window:
            break
    return z, steps


def find_all_roots(p, cfg=None, on_step=None):
    """All ``degree`` roots of ``p`` by search, polish, deflate.

    ``on_step(root_index, iteration, z, outcome)`` sees every accepted
    search step.  Failures are re-raised with ``root_index`` set.
    """
    cfg = cfg or SolverConfig()
    if p.degree < 1:
        raise ValueError("find_all_roots needs degree >= 1")
    original = monic_normalize(p)
    current = original
    roots, residuals, steps, polished, polish_steps = [], [], [], [], []
    budget = max(1, cfg.max_steps_per_root // 10)

    for index in range(original.degree):
        callback = None
        if on_step is not None:
            callback = lambda it, z, out, _k=index: on_step(_k, it, z, out)
        try:
            root, n_steps = find_one_root(current, cfg, on_step=callback)
            root, n_polish = polish_root(original, root, cfg, budget)
            residual = modulus(evaluate(original, root))
            if not _converged(original, root, residual, cfg.root_tolerance):
                raise MaxStepsError(
                    f"residual {residual:.3e} on the original polynomial is above tolerance"
                )
        except NumericalFailure as exc:
            exc.root_index = index
            exc.args = (f"root {index}: {exc.args[0] if exc.args else exc}",)
            raise
        roots.append(root)
        residuals.append(residual)
        steps.append(n_steps)
        polish_steps.append(n_polish)
        polished.append(n_polish > 0)
        if current.degree > 1:
            current, _ = deflate(current, root)

    return RootResult(
        roots=tuple(roots),
        residuals=tuple(residuals),
        steps_per_root=tuple(steps),
        polished=tuple(polished),
        polish_steps=tuple(polish_steps),
    )


def pair_root_sets(a, b):
    """Greedy bijection between two root multisets, closest pairs first.

    Returns ``(pairing, max_distance)`` where ``pairing[j]`` is the index
    in ``b`` matched to ``a[j]``.
    """
    if len(a) != len(b):
        raise LengthMismatchError(f"cannot pair {len(a)} roots with {len(b)}")
    candidates = sorted(
        (modulus(u - v), j, k) for j, u in enumerate(a) for k, v in enumerate(b)
    )
    pairing = [None] * len(a)
    used = set()
    worst = 0.0
    for dist, j, k in candidates:
        if pairing[j] is None and k not in used:
            pairing[j] = k
            used.add(k)
            worst = max(worst, dist)
    return pairing, worst
