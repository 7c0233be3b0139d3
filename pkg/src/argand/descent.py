"""One minimum-modulus descent step.

Given ``z`` with ``y(z) != 0`` we expand ``y(z + i)`` about ``z``, keep the
nonvanishing terms ``y(z) + R*i**r + S*i**s + ... + i**n`` and build ``i``
in two stages:

1. direction: turn ``i`` so that ``R*i**r`` points exactly against ``y(z)``;
2. magnitude: shrink ``|i|`` until ``|R|*|i|**r`` is both smaller than
   ``|y(z)|`` and larger than the sum of the moduli of all later terms.

The broken line ``K -> P -> A -> ... -> H`` (K the origin, P = y(z),
each further segment one expansion term) then ends inside the circle about
A through P, so ``|KH| < |KP|``.  When only the top term survives, the
step ``i = (-y(z)/c_n) ** (1/n)`` lands on a root directly.

The same argument works with any term as the opposing segment, provided
it outweighs all the others at the chosen length; the lowest term is the
one for which such a length always exists.  Higher terms are only used
as a fallback when the lowest one makes negligible progress.
"""

from dataclasses import dataclass
import math

from .directed_line import ZERO, argument, from_polar, int_pow, modulus, principal_nth_root
from .errors import ShrinkFailureError, ZeroArgumentError, ZeroValueError
from .polynomial import ZERO_THRESHOLD, evaluate, taylor_shift

__all__ = ["StepConfig", "StepOutcome", "angle_for_opposition", "argand_step", "broken_line"]


@dataclass(frozen=True)
class StepConfig:
    """Tuning for :func:`argand_step`.

    ``initial_fraction`` sets the first trial length: ``|R|*t**r`` starts at
    that fraction of ``|y(z)|``.  Each failed trial halves ``t``.

    The lowest surviving term is always tried first.  If it cannot bring
    ``|y|`` below ``fallback_ratio * |y(z)|`` (typically near a saddle of
    ``|y|``, where ``R`` is tiny but not zero), each higher term is tried as
    the opposing segment as well and the best accepted step wins.  Setting
    ``fallback_ratio = 1`` disables this and leaves the lowest term only.
    """

    initial_fraction: float = 0.5
    max_halvings: int = 200
    zero_threshold: float = ZERO_THRESHOLD
    fallback_ratio: float = 0.9

    def __post_init__(self):
        if not 0.0 < self.initial_fraction < 1.0:
            raise ValueError("initial_fraction must lie in (0, 1)")
        if self.max_halvings < 1:
            raise ValueError("max_halvings must be at least 1")
        if not 0.0 < self.fallback_ratio <= 1.0:
            raise ValueError("fallback_ratio must lie in (0, 1]")
        if self.zero_threshold < 0:
            raise ValueError("zero_threshold must be non-negative")


@dataclass(frozen=True)
class StepOutcome:
    step: object
    new_point: object
    old_modulus: float
    new_modulus: float
    used_exponent: int
    halvings: int
    degenerate: bool
    vertices: tuple
    theta: float
    magnitude: float

    @property
    def branch(self):
        return "degenerate" if self.degenerate else "general"


def angle_for_opposition(y_value, R, r):
    """Direction of ``i`` that makes ``R * i**r`` point against ``y_value``.

    The result lies in ``(-pi, pi]`` and is the ``k = 0`` member of the
    ``r`` admissible angles.
    """
    if y_value.is_zero() or R.is_zero():
        raise ZeroArgumentError("opposition needs nonzero y and R")
    if r < 1:
        raise ValueError("exponent must be positive")
    theta = (argument(y_value) + math.pi - argument(R)) / r
    theta = math.remainder(theta, 2.0 * math.pi)
    if theta <= -math.pi:
        theta += 2.0 * math.pi
    return theta


def broken_line(base, terms, step):
    """Cumulative vertices K, P, A, ..., H for the given expansion and step."""
    vertices = [ZERO, base]
    point = base
    for k, c in terms:
        point = point + c * int_pow(step, k)
        vertices.append(point)
    return tuple(vertices)


def argand_step(p, z, cfg=None):
    """Take one strictly decreasing step from ``z`` on the polynomial ``p``.

    Raises :class:`ZeroValueError` if ``y(z)`` is exactly zero and
    :class:`ShrinkFailureError` if no accepted magnitude is found within
    ``cfg.max_halvings`` halvings.
    """
    cfg = cfg or StepConfig()
    shift = taylor_shift(p, z, cfg.zero_threshold)
    y = shift.base
    old = modulus(y)
    if old == 0.0:
        raise ZeroValueError(f"y(z) is already zero at z = {z}")

    if shift.is_degenerate():
        n, c = shift.terms[0]
        step = principal_nth_root(-y / c, n)
        new_point = z + step
        new = modulus(evaluate(p, new_point))
        if not new < old:
            raise ShrinkFailureError(
                f"one-step root at z = {z} did not decrease |y| ({new!r} >= {old!r})"
            )
        return StepOutcome(
            step=step,
            new_point=new_point,
            old_modulus=old,
            new_modulus=new,
            used_exponent=n,
            halvings=0,
            degenerate=True,
            vertices=broken_line(y, shift.terms, step),
            theta=argument(step) if not step.is_zero() else 0.0,
            magnitude=modulus(step),
        )

    best = _pivot_step(p, z, y, old, shift.terms, 0, cfg)
    if cfg.fallback_ratio < 1.0 and (best is None or best.new_modulus > cfg.fallback_ratio * old):
        for index in range(1, len(shift.terms)):
            candidate = _pivot_step(p, z, y, old, shift.terms, index, cfg)
            if candidate is not None and (best is None or candidate.new_modulus < best.new_modulus):
                best = candidate
    if best is None:
        raise ShrinkFailureError(
            f"no decreasing step from z = {z} after {cfg.max_halvings} halvings"
        )
    return best


def _pivot_step(p, z, y, old, terms, index, cfg):
    """Halving search with ``terms[index]`` as the segment opposing ``y``.

    Returns ``None`` when no accepted magnitude exists within the budget.
    """
    r, R = terms[index]
    R_mod = modulus(R)
    theta = angle_for_opposition(y, R, r)
    lower = [(k, modulus(c)) for k, c in terms[:index]]
    higher = [(k, modulus(c)) for k, c in terms[index + 1:]]
    t = min((cfg.initial_fraction * old / R_mod) ** (1.0 / r), 1.0)

    for halvings in range(cfg.max_halvings + 1):
        lead = R_mod * t**r
        below = sum(m * t**k for k, m in lower)
        if below >= lead:
            # Lower-order terms only gain on the pivot as t shrinks.
            return None
        if old > lead > below + sum(m * t**k for k, m in higher):
            step = from_polar(t, theta)
            new_point = z + step
            new = modulus(evaluate(p, new_point))
            if new < old:
                return StepOutcome(
                    step=step,
                    new_point=new_point,
                    old_modulus=old,
                    new_modulus=new,
                    used_exponent=r,
                    halvings=halvings,
                    degenerate=False,
                    vertices=broken_line(y, terms, step),
                    theta=theta,
                    magnitude=t,
                )
        t *= 0.5
    return None
