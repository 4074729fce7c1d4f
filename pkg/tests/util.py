"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from gf2lights.gf2core import Gf2Matrix, Gf2Vector, matvec, random_matrix, \
    random_symmetric_matrix
from gf2lights.rowfinite import PeriodicSpec


def brute_solutions(a: Gf2Matrix, b: Gf2Vector) -> set[Gf2Vector]:
    """All x with A x = b, by trying every candidate vector."""
    return {
        Gf2Vector.from_int(a.cols, bits)
        for bits in range(1 << a.cols)
        if matvec(a, Gf2Vector.from_int(a.cols, bits)) == b
    }


def random_periodic_spec(rng: random.Random, max_cell: int = 3,
                         max_preamble: int = 2) -> PeriodicSpec:
    """A random valid periodic spec: symmetric cell, arbitrary coupling,
    and a self-consistent preamble that may reach into the first cell."""
    c = rng.randrange(1, max_cell + 1)
    diag = random_symmetric_matrix(rng, c)
    coupling = random_matrix(rng, c, c)
    p = rng.randrange(0, max_preamble + 1)
    supports = [set() for _ in range(p)]
    for q in range(1, p + 1):
        for _ in range(rng.randrange(0, 3)):
            supports[q - 1].add(rng.randrange(1, p + c + 1))
        if rng.random() < 0.5:
            supports[q - 1].add(q)
    for q in range(1, p + 1):
        for j in list(supports[q - 1]):
            if j <= p:
                supports[j - 1].add(q)
    return PeriodicSpec(c, diag, coupling,
                        tuple(tuple(sorted(s)) for s in supports))
