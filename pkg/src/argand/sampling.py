"""Reproducible random polynomial ensembles.

Draws come from numpy's PCG64 generator (a 128-bit-state permuted linear
congruential generator) seeded with the user's integer seed.  Each
coefficient ``c = rho * e^(i*phi)`` uses two consecutive uniform doubles
``u, v`` from ``Generator.random``: ``rho = radius * sqrt(u)`` and
``phi = 2*pi*v``, which is uniform on the disk.  The same seed therefore
gives the same polynomials on every platform numpy supports.
"""

import math

import numpy as np

from .directed_line import ONE, from_polar
from .polynomial import Polynomial

__all__ = ["make_rng", "random_disk_point", "random_monic"]


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def random_disk_point(rng, radius=2.0):
    u, v = rng.random(2)
    return from_polar(radius * math.sqrt(float(u)), 2.0 * math.pi * float(v))


def random_monic(rng, degree, radius=2.0):
    """Monic polynomial of the given degree with coefficients uniform in a disk."""
    return Polynomial([ONE] + [random_disk_point(rng, radius) for _ in range(degree)])
