"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from cubicorbit.linearize import InitialPair
from cubicorbit.matrix import CaseTag, Mat2, SystemParams, classify

SMALL = [Fraction(k) for k in range(-3, 4)]
SMALL_NONZERO = [f for f in SMALL if f != 0]


def naive_power(p: SystemParams, n: int) -> Mat2:
    """n-fold repeated multiplication; the oracle for every power formula."""
    acc = Mat2.identity()
    step = Mat2.of(p)
    for _ in range(n):
        acc = acc * step
    return acc


def random_params(rng: random.Random, tag: CaseTag | None = None) -> SystemParams:
    """Small-entry parameters, optionally constructed to land in one case."""
    while True:
        if tag is CaseTag.REPEATED:
            # force (a-d)^2 + 4bc = 0 with b != 0
            a, d = rng.choice(SMALL), rng.choice(SMALL)
            b = rng.choice(SMALL_NONZERO)
            c = -((a - d) ** 2) / (4 * b)
            p = SystemParams(a, b, c, d)
        elif tag is CaseTag.ANTITRACE_DISTINCT:
            a = rng.choice(SMALL)
            b, c = rng.choice(SMALL), rng.choice(SMALL)
            p = SystemParams(a, b, c, -a)
        elif tag is CaseTag.RANK_DEFICIENT:
            a, b = rng.choice(SMALL), rng.choice(SMALL)
            t = rng.choice(SMALL_NONZERO)
            p = SystemParams(a, b, t * a, t * b)
        else:
            p = SystemParams(*(rng.choice(SMALL) for _ in range(4)))
        if p.is_degenerate:
            continue
        if tag is None or classify(p) is tag:
            return p


def random_init(rng: random.Random) -> InitialPair:
    choices = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2)]
    return InitialPair(rng.choice(choices), rng.choice(choices))


def first_orbit_zero(p: SystemParams, init: InitialPair, limit: int):
    """Least n <= limit with u_n = 0 or v_n = 0, else None.

    While the prefix is zero-free, x_n and y_n are nonzero multiples of u_n
    and v_n, so this is exactly the first vanishing index of the cubic
    orbit without expanding its triple-exponential terms.
    """
    u, v = init.x0, init.y0
    for n in range(limit + 1):
        if u == 0 or v == 0:
            return n
        u, v = p.a * u + p.b * v, p.c * u + p.d * v
    return None


def direct_orbit(p: SystemParams, init: InitialPair, n: int):
    """Plain Fraction iteration of the cubic system, no budget guard."""
    xs = [init.x0]
    ys = [init.y0]
    x, y = init.x0, init.y0
    for _ in range(n):
        x, y = p.a * x * x * y + p.b * x * y * y, p.c * x * x * y + p.d * x * y * y
        xs.append(x)
        ys.append(y)
    return xs, ys
