"""
Braid words on t strands and the Garside solution to the word problem.

A braid word is a flat sequence of signed generator indices: ``i`` stands for
the Artin generator σ_i and ``-i`` for its inverse.  Words are never reduced
implicitly, so the literal words used to build diagrams (Δ_t powers, cabling
blocks) are preserved letter for letter; `free_reduce` is explicit.

Equality in the braid group is decided through the left normal form

    Δ^inf · x_1 · x_2 ··· x_k

where every x_i is a permutation braid different from 1 and Δ and each
consecutive pair is left-weighted.  Permutation braids are handled as tuples
``perm`` with ``perm[j]`` the (0-based) bottom position of the strand that
starts at top position ``j``.
"""

from __future__ import annotations

import dataclasses
import re
from functools import lru_cache
from typing import Iterable

__all__ = [
    "BraidWord",
    "Permutation",
    "NormalForm",
    "braid",
    "delta",
    "concat",
    "inverse",
    "power",
    "free_reduce",
    "underlying_permutation",
    "left_normal_form",
    "braid_equal",
    "flip",
    "reverse",
    "cable",
    "insert_pattern",
    "parse_braid",
    "format_braid",
]


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} is not a generator of B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, n: int) -> BraidWord:
        return power(self, n)

    def __str__(self) -> str:
        return format_braid(self)


def braid(strands: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def delta(t: int) -> BraidWord:
    """The Garside half twist (σ_{t-1}···σ_1)(σ_{t-1}···σ_2)···(σ_{t-1})."""
    if t < 1:
        raise ValueError("delta needs t >= 1")
    letters: list[int] = []
    for low in range(1, t):
        letters.extend(range(t - 1, low - 1, -1))
    return BraidWord(t, tuple(letters))


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-x for x in reversed(a.letters)))


def power(a: BraidWord, n: int) -> BraidWord:
    """n-fold concatenation; for n < 0 an inverse word is repeated.

    For a = delta(t) the inverse used is (σ_{t-1}^-1···σ_1^-1)···(σ_{t-1}^-1),
    the letterwise negation of delta's word, so emitted Δ^-k words keep the
    block structure of Δ^k.
    """
    base = a if n >= 0 else _delta_inverse_or_inverse(a)
    return BraidWord(a.strands, base.letters * abs(n))


def _delta_inverse_or_inverse(a: BraidWord) -> BraidWord:
    if a == delta(a.strands):
        return BraidWord(a.strands, tuple(-x for x in a.letters))
    return inverse(a)


def free_reduce(a: BraidWord) -> BraidWord:
    """Cancel adjacent pairs i, -i until none remain."""
    out: list[int] = []
    for x in a.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(a.strands, tuple(out))


def flip(a: BraidWord) -> BraidWord:
    """The automorphism σ_i -> σ_{t-i}, i.e. conjugation by Δ."""
    t = a.strands
    return BraidWord(t, tuple((t - abs(x)) * (1 if x > 0 else -1) for x in a.letters))


def reverse(a: BraidWord) -> BraidWord:
    """The reversal antihomomorphism: letters in the opposite order, signs kept."""
    return BraidWord(a.strands, tuple(reversed(a.letters)))


# --- permutations -----------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., size}; ``images[j-1]`` is the image of j.

    Products read left to right: ``(s * u)(j) == u(s(j))``, the order in which
    braid words are stacked.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(other(self(j)) for j in range(1, self.size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for j, x in enumerate(self.images, start=1):
            inv[x - 1] = j
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, fixed points included, each starting at its least element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def underlying_permutation(a: BraidWord) -> Permutation:
    pos = list(range(a.strands))  # pos[strand] = current position
    where = list(range(a.strands))  # where[position] = strand
    for x in a.letters:
        i = abs(x) - 1
        s, u = where[i], where[i + 1]
        where[i], where[i + 1] = u, s
        pos[s], pos[u] = i + 1, i
    return Permutation(tuple(p + 1 for p in pos))


# --- Garside normal form ----------------------------------------------------

Perm = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class NormalForm:
    strands: int
    infimum: int
    factors: tuple[Perm, ...]

    def to_word(self) -> BraidWord:
        t = self.strands
        d = delta(t)
        letters = list(power(d, self.infimum).letters)
        for f in self.factors:
            letters.extend(_perm_word(f))
        return BraidWord(t, tuple(letters))

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


def _swap(i: int, j: int) -> int:
    return i + 1 if j == i else i if j == i + 1 else j


def _perm_inverse(x: Perm) -> Perm:
    inv = [0] * len(x)
    for j, v in enumerate(x):
        inv[v] = j
    return tuple(inv)


def _finishing(x: Perm) -> frozenset[int]:
    inv = _perm_inverse(x)
    return frozenset(i for i in range(len(x) - 1) if inv[i] > inv[i + 1])


def _starting(y: Perm) -> frozenset[int]:
    return frozenset(i for i in range(len(y) - 1) if y[i] > y[i + 1])


def _right_mult(x: Perm, i: int) -> Perm:
    return tuple(_swap(i, v) for v in x)


def _left_divide(y: Perm, i: int) -> Perm:
    return tuple(y[_swap(i, j)] for j in range(len(y)))


def _tau(x: Perm) -> Perm:
    t = len(x)
    return tuple(t - 1 - x[t - 1 - j] for j in range(t))


def _perm_word(x: Perm) -> list[int]:
    word: list[int] = []
    while True:
        fin = _finishing(x)
        if not fin:
            break
        i = min(fin)
        word.append(i + 1)
        x = _right_mult(x, i)  # s_i is an involution, so this strips σ_i
    word.reverse()
    return word


@lru_cache(maxsize=None)
def _left_weight(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    while True:
        extra = _starting(y) - _finishing(x)
        if not extra:
            return x, y
        i = min(extra)
        x, y = _right_mult(x, i), _left_divide(y, i)


def left_normal_form(a: BraidWord) -> NormalForm:
    t = a.strands
    ident = tuple(range(t))
    full = tuple(range(t - 1, -1, -1))
    # σ_i^-1 = Δ^-1 (Δσ_i^-1); pushing every Δ^-1 to the front applies τ to the
    # factors it passes, so a factor is flipped once per negative letter after it.
    raw: list[Perm] = []
    negatives_after: list[int] = []
    count = 0
    for x in a.letters:
        i = abs(x) - 1
        if x > 0:
            raw.append(_right_mult(ident, i))
        else:
            count += 1
            raw.append(tuple(_swap(i, full[j]) for j in range(t)))
        negatives_after.append(count)
    total = count
    factors: list[Perm] = []
    for f, seen in zip(raw, negatives_after):
        if (total - seen) % 2:
            f = _tau(f)
        factors.append(f)
        k = len(factors) - 1
        while k > 0:
            left, right = _left_weight(factors[k - 1], factors[k])
            if (left, right) == (factors[k - 1], factors[k]):
                break
            factors[k - 1], factors[k] = left, right
            k -= 1
        factors = [g for g in factors if g != ident]
    inf = 0
    while factors and factors[0] == full:
        factors.pop(0)
        inf += 1
    return NormalForm(t, inf - total, tuple(factors))


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    _check_same(a, b)
    return left_normal_form(a) == left_normal_form(b)


# --- cabling ----------------------------------------------------------------


def _block_swap(i: int, n: int) -> list[int]:
    word: list[int] = []
    for r in range(1, n + 1):
        word.extend(range(i * n + r - 1, (i - 1) * n + r - 1, -1))
    return word


def cable(a: BraidWord, n: int) -> BraidWord:
    """Replace every strand by n parallel strands.

    Each letter ±i becomes the braid exchanging the i-th and (i+1)-th blocks
    of n strands, every crossing carrying the sign of the original letter.
    """
    if n < 1:
        raise ValueError("cable width must be >= 1")
    letters: list[int] = []
    for x in a.letters:
        block = _block_swap(abs(x), n)
        if x > 0:
            letters.extend(block)
        else:
            letters.extend(-y for y in reversed(block))
    return BraidWord(a.strands * n, tuple(letters))


def insert_pattern(a: BraidWord, block: int, pattern: BraidWord) -> BraidWord:
    """Append ``pattern`` acting on the ``block``-th group of pattern.strands strands."""
    n = pattern.strands
    if a.strands % n:
        raise ValueError(f"{a.strands} strands are not a cabling of width {n}")
    if not 1 <= block <= a.strands // n:
        raise ValueError(f"block {block} out of range 1..{a.strands // n}")
    shift = (block - 1) * n
    moved = tuple(x + shift if x > 0 else x - shift for x in pattern.letters)
    return BraidWord(a.strands, a.letters + moved)


# --- text format ------------------------------------------------------------

_HEADER = re.compile(r"t=(\d+)$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"t=<strands> <letter> <letter> ..."``."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty braid text; expected 't=<strands> ...'")
    m = _HEADER.match(tokens[0])
    if not m:
        raise ValueError(f"token 1 {tokens[0]!r}: expected header 't=<strands>'")
    t = int(m.group(1))
    if t < 1:
        raise ValueError(f"token 1 {tokens[0]!r}: strand count must be >= 1")
    letters = []
    for pos, tok in enumerate(tokens[1:], start=2):
        try:
            x = int(tok)
        except ValueError:
            raise ValueError(f"token {pos} {tok!r}: not a signed integer") from None
        if x == 0 or abs(x) >= t:
            raise ValueError(f"token {pos} {tok!r}: not a generator of B_{t}")
        letters.append(x)
    return BraidWord(t, tuple(letters))


def format_braid(a: BraidWord) -> str:
    return " ".join([f"t={a.strands}", *map(str, a.letters)])

