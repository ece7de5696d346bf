"""
The lift equation k·p + 2q - p = h, and searches for pairs of distinct
lens-space links whose lifts share a fingerprint.

A closed braid Δ_t^k in L(p,q) lifts to the closure of Δ_t^(kp + 2q - p), so
for a target exponent h the solutions with 0 ≤ q < p come in three infinite
families (k = 1, 0, -1) plus finitely many sporadic ones with p ≤ |h|.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator

from .braid import BraidWord, braid, cable, delta, insert_pattern, power
from .diagram import LensSpace, from_braid, lens_link
from .errors import ResourceLimitError
from .invariants import LinkFingerprint, braid_fingerprint, default_catalog
from .lift import lift_braid

__all__ = [
    "LiftFamily",
    "LiftEquationSolution",
    "solve_lift_equation",
    "brute_force_solutions",
    "Separator",
    "CollisionReport",
    "collision_search",
    "build_cable_pair",
    "enumerate_braids",
    "SEARCH_LIMITS",
]


# --- lift equation -----------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class LiftFamily:
    """q = slope·p + offset for every p ≥ p_min with p ≡ parity (mod 2) when parity is set."""

    k: int
    slope: Fraction
    offset: Fraction
    parity: int | None
    p_min: int

    def q(self, p: int) -> int | None:
        if p < self.p_min or (self.parity is not None and p % 2 != self.parity):
            return None
        q = self.slope * p + self.offset
        return int(q) if q.denominator == 1 else None

    def instances(self, p_max: int) -> Iterator[tuple[int, int]]:
        for p in range(self.p_min, p_max + 1):
            q = self.q(p)
            if q is not None:
                yield p, q

    def describe(self) -> str:
        par = {None: "all p", 0: "p even", 1: "p odd"}[self.parity]
        if self.slope == 0:
            qs = f"{self.offset}"
        elif self.slope == 1:
            qs = f"p{'+' if self.offset >= 0 else '-'}{abs(self.offset)}" if self.offset else "p"
        else:
            num = self.offset * 2
            qs = f"(p{'+' if num >= 0 else '-'}{abs(num)})/2" if num else "p/2"
        return f"k={self.k}, {par}, p>={self.p_min}, q={qs}"


@dataclasses.dataclass(frozen=True)
class LiftEquationSolution:
    """Either one explicit (p, q) or a family; ``coprime_valid`` refers to the explicit case.

    For a family it is False when some instance up to the solver's p_max
    fails gcd(p,q) = 1; those p are listed in ``non_coprime``.
    """

    h: int
    k: int
    p: int | None = None
    q: int | None = None
    family: LiftFamily | None = None
    coprime_valid: bool = True
    non_coprime: tuple[int, ...] = ()

    @property
    def is_family(self) -> bool:
        return self.family is not None

    def to_dict(self) -> dict:
        if self.family is not None:
            return {"h": self.h, "k": self.k, "family": self.family.describe(),
                    "coprime_valid": self.coprime_valid, "non_coprime_p": list(self.non_coprime)}
        return {"h": self.h, "k": self.k, "p": self.p, "q": self.q, "coprime_valid": self.coprime_valid}


def _families(h: int) -> list[LiftFamily]:
    out = []
    if h >= 0 and h % 2 == 0:
        # q = h/2 needs p > h/2, and p ≥ 2
        out.append(LiftFamily(1, Fraction(0), Fraction(h, 2), None, max(2, h // 2 + 1)))
    # k = 0: q = (p + h)/2, 0 ≤ q < p  ⇔  p ≥ -h and p > h
    out.append(LiftFamily(0, Fraction(1, 2), Fraction(h, 2), h % 2, max(2, -h, h + 1)))
    if h < 0 and h % 2 == 0:
        # q = p + h/2 needs p ≥ -h/2
        out.append(LiftFamily(-1, Fraction(1), Fraction(h, 2), None, max(2, -h // 2)))
    return out


def _family_p_min(f: LiftFamily) -> int:
    p = f.p_min
    while f.parity is not None and p % 2 != f.parity:
        p += 1
    return p


def brute_force_solutions(h: int, p_max: int) -> list[tuple[int, int, int]]:
    """All (p, q, k) with 2 ≤ p ≤ p_max, 0 ≤ q < p, k·p + 2q - p = h."""
    out = []
    for p in range(2, p_max + 1):
        for q in range(p):
            num = h + p - 2 * q
            if num % p == 0:
                out.append((p, q, num // p))
    return out


def solve_lift_equation(h: int, p_max: int) -> list[LiftEquationSolution]:
    """Families first (k descending), then every explicit solution ordered by (p, q)."""
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    out = []
    for f in sorted(_families(h), key=lambda f: -f.k):
        f = dataclasses.replace(f, p_min=_family_p_min(f))
        bad = tuple(p for p, q in f.instances(p_max) if math.gcd(p, q) != 1)
        out.append(LiftEquationSolution(h, f.k, family=f, coprime_valid=not bad, non_coprime=bad))
    for p, q, k in brute_force_solutions(h, p_max):
        out.append(LiftEquationSolution(h, k, p, q, coprime_valid=math.gcd(p, q) == 1))
    return out


# --- collisions --------------------------------------------------------------


SEARCH_LIMITS = {"strand_max": 4, "wordlen_max": 8, "p_max": 16, "work_units": 400_000}


@dataclasses.dataclass(frozen=True, order=True)
class Separator:
    """What tells two lens-space links apart here: ν and the multiset of classes."""

    components: int
    classes: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"components": self.components, "classes": list(self.classes)}

    def __str__(self) -> str:
        return f"ν={self.components} δ={list(self.classes)}"


def separator(b: BraidWord, lens: LensSpace) -> Separator:
    link = lens_link(from_braid(b, lens))
    return Separator(link.nu, tuple(sorted(link.classes)))


@dataclasses.dataclass(frozen=True)
class CollisionReport:
    lens: LensSpace
    first: BraidWord
    second: BraidWord
    first_separator: Separator
    second_separator: Separator
    fingerprint: LinkFingerprint
    name: str | None

    @property
    def indistinguishable(self) -> bool:
        return self.first_separator == self.second_separator

    def to_dict(self) -> dict:
        return {
            "lens": [self.lens.p, self.lens.q],
            "first": str(self.first),
            "second": str(self.second),
            "first_separator": self.first_separator.to_dict(),
            "second_separator": self.second_separator.to_dict(),
            "lift_fingerprint": self.fingerprint.to_dict(),
            "lift_name": self.name,
            "indistinguishable": self.indistinguishable,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    def row(self) -> str:
        flag = "  indistinguishable by implemented invariants" if self.indistinguishable else ""
        return (f"{self.lens}  [{self.first}] {self.first_separator}  vs  "
                f"[{self.second}] {self.second_separator}  lift={self.name or '?'}{flag}")


def enumerate_braids(strand_max: int, wordlen_max: int) -> Iterator[BraidWord]:
    """Freely reduced words, ordered by strands, then length, then letters."""
    for t in range(1, strand_max + 1):
        gens = [x for i in range(1, t) for x in (i, -i)]
        gens.sort(key=lambda x: (abs(x), x < 0))
        for n in range(wordlen_max + 1 if t > 1 else 1):
            for word in itertools.product(gens, repeat=n):
                if any(word[k] == -word[k + 1] for k in range(n - 1)):
                    continue
                yield braid(t, word)


def _lenses(p_max: int) -> list[LensSpace]:
    return [LensSpace(p, q) for p in range(2, p_max + 1) for q in range(p) if math.gcd(p, q) == 1]


def _unit(args) -> list[tuple]:
    lens, words = args
    rows = []
    for w in words:
        _, red = lift_braid(w, lens)
        rows.append((w, separator(w, lens), braid_fingerprint(red)))
    return rows


def collision_search(strand_max: int = 3, wordlen_max: int = 6, p_max: int = 9,
                     threads: int = 1) -> list[CollisionReport]:
    """Pairs of braids whose lens-space closures share a lift fingerprint.

    Within one lens space and fingerprint class the first braid seen for each
    (strand count, separator) is kept.  Pairs of differing separators are
    reported as separated; pairs with equal separators but different strand
    counts are reported and flagged indistinguishable.
    """
    for name, value in (("strand_max", strand_max), ("wordlen_max", wordlen_max), ("p_max", p_max)):
        if value > SEARCH_LIMITS[name]:
            raise ResourceLimitError(f"{name}={value} exceeds the limit {SEARCH_LIMITS[name]}")
    if strand_max < 1 or wordlen_max < 0 or p_max < 2:
        raise ValueError("need strand_max >= 1, wordlen_max >= 0, p_max >= 2")
    words = list(enumerate_braids(strand_max, wordlen_max))
    lenses = _lenses(p_max)
    if len(words) * len(lenses) > SEARCH_LIMITS["work_units"]:
        raise ResourceLimitError(
            f"{len(words)} braids x {len(lenses)} lens spaces exceeds {SEARCH_LIMITS['work_units']} work units")
    units = [(lens, words) for lens in lenses]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_unit, units))
    else:
        results = [_unit(u) for u in units]
    catalog = default_catalog()
    reports = []
    for lens, rows in zip(lenses, results):
        groups: dict = {}
        for w, sep, fp in rows:
            reps = groups.setdefault(fp, {})
            reps.setdefault((w.strands, sep), w)
        for fp, reps in groups.items():
            items = list(reps.items())
            for ((ta, sa), wa), ((tb, sb), wb) in itertools.combinations(items, 2):
                if sa == sb and ta == tb:
                    continue
                reports.append(CollisionReport(lens, wa, wb, sa, sb, fp, catalog.name(fp)))
    reports.sort(key=lambda r: (r.lens.p, r.lens.q, _word_key(r.first), _word_key(r.second)))
    return reports


def _word_key(w: BraidWord) -> tuple:
    return (w.strands, len(w.letters), [(abs(x), x < 0) for x in w.letters])


# --- cables ------------------------------------------------------------------


def build_cable_pair(i: int, j: int) -> tuple[BraidWord, BraidWord, LensSpace]:
    """A_{i,j}, B_{i,j}: width-i cables of the trivial 2-braid and of Δ₂, with Δᵢ^j on both blocks."""
    if i < 1 or j < 0:
        raise ValueError("need i >= 1 and j >= 0")
    pattern = power(delta(i), j)
    out = []
    for base in (braid(2, []), braid(2, [1])):
        w = cable(base, i)
        for block in (1, 2):
            w = insert_pattern(w, block, pattern)
        out.append(w)
    return out[0], out[1], LensSpace(4, 1)
