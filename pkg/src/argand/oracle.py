"""Durand-Kerner simultaneous iteration, kept only as a cross-check.

Shares the arithmetic and polynomial evaluation with the descent solver
but none of its stepping logic, so agreement between the two is
meaningful evidence.
"""

from dataclasses import dataclass
import math

from .directed_line import ONE, from_polar, modulus
from .errors import OracleNoConvergeError
from .polynomial import cauchy_root_bound, evaluate, monic_normalize

__all__ = ["OracleConfig", "durand_kerner"]


@dataclass(frozen=True)
class OracleConfig:
    max_iterations: int = 1000
    update_tolerance: float = 1e-13
    seed_angle: float = 0.4

    def __post_init__(self):
        if self.max_iterations < 1 or self.update_tolerance <= 0:
            raise ValueError("oracle limits must be positive")


def durand_kerner(p, cfg=None):
    """Approximate all roots of ``p`` at once.

    Starting points sit on the circle of radius ``0.9 * cauchy_root_bound``,
    spread evenly in angle from ``seed_angle`` with a small extra twist per
    index so no two starts are symmetric.
    """
    cfg = cfg or OracleConfig()
    p = monic_normalize(p)
    n = p.degree
    if n < 1:
        raise ValueError("durand_kerner needs degree >= 1")
    radius = 0.9 * cauchy_root_bound(p)
    xs = [
        from_polar(radius, cfg.seed_angle + 2.0 * math.pi * j / n + j * 1e-3)
        for j in range(n)
    ]
    for _ in range(cfg.max_iterations):
        biggest_update = 0.0
        for j in range(n):
            denom = ONE
            xj = xs[j]
            for k in range(n):
                if k != j:
                    denom = denom * (xj - xs[k])
            if denom.is_zero():
                # Coincident iterates: nudge instead of dividing by zero.
                update = from_polar(1e-8 * (1.0 + modulus(xj)), cfg.seed_angle + j)
            else:
                update = evaluate(p, xj) / denom
            xs[j] = xj - update
            biggest_update = max(biggest_update, modulus(update))
        if biggest_update <= cfg.update_tolerance * (1.0 + max(modulus(x) for x in xs)):
            return xs
    raise OracleNoConvergeError(
        f"Durand-Kerner did not settle in {cfg.max_iterations} iterations"
    )
