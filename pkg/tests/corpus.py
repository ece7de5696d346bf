"""Braid and lens-space cases shared by the property and acceptance tests."""

import math
import random

from lenslift.braid import braid, delta, power
from lenslift.diagram import LensSpace
from lenslift.search import build_cable_pair

# closures of Δ_t^k with their catalog names
GARSIDE_ROWS = [
    (1, 0, "0_1"),
    (2, 0, "0_1 ⊔ 0_1"),
    (2, 1, "0_1"),
    (2, 2, "L2a1"),
    (2, 3, "3_1"),
    (2, 4, "L4a1"),
    (2, 5, "5_1"),
    (2, 6, "L6a3"),
    (3, 0, "0_1 ⊔ 0_1 ⊔ 0_1"),
    (3, 1, "L2a1"),
    (3, 2, "L6n1"),
    (3, 3, "L9n15"),
    (4, 0, "0_1 ⊔ 0_1 ⊔ 0_1 ⊔ 0_1"),
    (4, 1, "L4a1"),
    (5, 0, "0_1 ⊔ 0_1 ⊔ 0_1 ⊔ 0_1 ⊔ 0_1"),
    (5, 1, "L8n3"),
]


def garside_braids():
    return [power(delta(t), k) for t, k, _ in GARSIDE_ROWS]


def random_braid(rng, t_max, length):
    t = rng.randint(1, t_max)
    if t == 1:
        return braid(1, [])
    return braid(t, [rng.choice([1, -1]) * rng.randint(1, t - 1) for _ in range(rng.randint(0, length))])


def random_lens(rng, p_max):
    p = rng.randint(2, p_max)
    return LensSpace(p, rng.choice([q for q in range(p) if math.gcd(p, q) == 1]))


def lens_cases():
    """(braid, lens) pairs: the named examples, small Δ powers, cables and seeded random words."""
    cases = [
        (braid(2, []), LensSpace(4, 1)),
        (braid(2, [1]), LensSpace(4, 1)),
        (braid(2, [1, 1]), LensSpace(4, 1)),
    ]
    for p in (3, 5, 7, 9):
        for q in ((p + 1) // 2, (p - 1) // 2):
            cases += [(braid(1, []), LensSpace(p, q)), (braid(2, []), LensSpace(p, q))]
    for t in (2, 3, 4):
        for k in (-1, 0, 1):
            for lens in (LensSpace(2, 1), LensSpace(3, 1), LensSpace(5, 2)):
                cases.append((power(delta(t), k), lens))
    for i in (2, 3):
        for j in (0, 1, 2):
            a, b, lens = build_cable_pair(i, j)
            cases += [(a, lens), (b, lens)]
    rng = random.Random(2024)
    for _ in range(40):
        cases.append((random_braid(rng, 4, 6), random_lens(rng, 7)))
    return cases
