"""
Lifting links from L(p,q) to S³.

For a standard disk diagram D on t chords the lift is assembled from p
stacked copies of D:

* ``lift_diagram``: copies joined by Δ⁻¹ and closed by Δ^(2q-1);
* ``lift_diagram_reduced``: D and its reverse D̄ alternate, joined by trivial
  braids, and the stack is closed by Δ^(2q-p).

For a braid B the first form is the closure of (BΔ⁻¹)^p Δ^(2q).  Moving the
Δ⁻¹ factors to the right conjugates every other copy of B by Δ, which is the
flip, so the short form is B·flip(B)·B·flip(B)···Δ^(2q-p).  That is B^p Δ^(2q-p)
only when B commutes with Δ; ``lens_braid`` keeps the B^p form for comparison.
"""

from __future__ import annotations

import dataclasses
import json
import math
from typing import Sequence

from .braid import BraidWord, braid, concat, delta, flip, free_reduce, power
from .diagram import (
    DiskDiagram,
    LensSpace,
    OrientedLensLink,
    PlanarDiagram,
    _Assembler,
    from_braid,
    is_standard,
    reverse_diagram,
    standardize,
)
from .errors import NotStandardError
from .invariants import LinkFingerprint, braid_fingerprint, fingerprint

__all__ = [
    "LiftResult",
    "lift_component_count",
    "lift_diagram",
    "lift_diagram_reduced",
    "lift_standardized",
    "lift_braid",
    "lift_braid_result",
    "lens_braid",
    "torus_lens_check",
]


@dataclasses.dataclass(frozen=True)
class LiftResult:
    diagram: PlanarDiagram
    source: DiskDiagram
    construction: str  # "theorem" or "reduced"
    braid_form: BraidWord | None = None

    @property
    def lens(self) -> LensSpace:
        return self.source.lens

    def component_count(self) -> int:
        return self.diagram.component_count()

    def fingerprint(self) -> LinkFingerprint:
        # a braid form closes to exactly this diagram, so the TL evaluator applies
        if self.braid_form is not None:
            return braid_fingerprint(self.braid_form)
        return fingerprint(self.diagram)

    def to_dict(self) -> dict:
        out = self.diagram.to_dict()
        out["metadata"] = {
            "p": self.lens.p,
            "q": self.lens.q,
            "construction": self.construction,
            "braid": str(self.braid_form) if self.braid_form is not None else None,
        }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def lift_component_count(link: OrientedLensLink | Sequence[int], p: int | None = None) -> int:
    """Σ gcd(δᵢ, p); a class of 0 contributes p."""
    if isinstance(link, OrientedLensLink):
        classes, p = link.classes, link.lens.p
    else:
        classes = link
        if p is None:
            raise ValueError("p is required with a bare list of classes")
    return sum(math.gcd(d, p) for d in classes)


def _directions(d: DiskDiagram) -> list[bool]:
    out = {lab: o for lab, _, o in d.boundary}
    t = d.t
    # top position j carries +(t-j); a strand flows down there when it enters the disk
    return [not out[t - j] for j in range(t)]


def _assemble(d: DiskDiagram, pieces) -> PlanarDiagram:
    asm = _Assembler(_directions(d))
    for piece in pieces:
        if isinstance(piece, DiskDiagram):
            asm.tangle(piece)
        else:
            asm.word(piece.letters)
    return asm.close()


def _require_standard(d: DiskDiagram) -> None:
    if not is_standard(d):
        raise NotStandardError("the lift construction needs a standard disk diagram; standardize it first")


def lift_diagram(d: DiskDiagram, braid_form: BraidWord | None = None) -> LiftResult:
    """p copies of D chained by Δ⁻¹ and closed by Δ^(2q-1)."""
    _require_standard(d)
    p, q, t = d.lens.p, d.lens.q, d.t
    pieces: list = []
    if t == 0:
        pieces = [d] * p
    else:
        connector = power(delta(t), -1)
        for i in range(p):
            pieces.append(d)
            if i < p - 1:
                pieces.append(connector)
        pieces.append(power(delta(t), 2 * q - 1))
    return LiftResult(_assemble(d, pieces), d, "theorem", braid_form)


def lift_diagram_reduced(d: DiskDiagram, braid_form: BraidWord | None = None) -> LiftResult:
    """Alternating D, D̄ copies closed by Δ^(2q-p)."""
    _require_standard(d)
    p, q, t = d.lens.p, d.lens.q, d.t
    if t == 0:
        pieces: list = [d] * p
    else:
        rev = reverse_diagram(d)
        pieces = [d if i % 2 == 0 else rev for i in range(p)]
        pieces.append(power(delta(t), 2 * q - p))
    return LiftResult(_assemble(d, pieces), d, "reduced", braid_form)


def lift_standardized(d: DiskDiagram, reduced: bool = True) -> LiftResult:
    """Standardize by R6 moves, then lift."""
    d = standardize(d)
    return lift_diagram_reduced(d) if reduced else lift_diagram(d)


def lift_braid(b: BraidWord, lens: LensSpace) -> tuple[BraidWord, BraidWord]:
    """(BΔ⁻¹)^p Δ^(2q) and the freely reduced B·flip(B)···Δ^(2q-p)."""
    p, q, t = lens.p, lens.q, b.strands
    d = delta(t)
    literal = concat(power(concat(b, power(d, -1)), p), power(d, 2 * q))
    fb = flip(b)
    letters: list[int] = []
    for i in range(p):
        letters.extend((b if i % 2 == 0 else fb).letters)
    letters.extend(power(d, 2 * q - p).letters)
    return literal, free_reduce(braid(t, letters))


def lift_braid_result(b: BraidWord, lens: LensSpace, reduced: bool = True) -> LiftResult:
    """Lift of the braid's disk diagram, with the matching braid form attached."""
    d = from_braid(b, lens)
    if reduced:
        _, word = lift_braid(b, lens)
        res = lift_diagram_reduced(d)
    else:
        p, q, t = lens.p, lens.q, b.strands
        word = concat(
            concat(power(concat(b, power(delta(t), -1)), p - 1), b),
            power(delta(t), 2 * q - 1),
        )
        res = lift_diagram(d)
    return dataclasses.replace(res, braid_form=word)


def lens_braid(b: BraidWord, lens: LensSpace) -> BraidWord:
    """B^p Δ^(2q-p).  Presents the lift only when B commutes with Δ."""
    return concat(power(b, lens.p), power(delta(b.strands), 2 * lens.q - lens.p))


def torus_lens_check(n: int, m: int, lens: LensSpace) -> bool:
    """Whether the torus link T(n,m) arises as the lift of a closed braid Δₙ^k from L(p,q)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (m - n * lens.q) % lens.p == 0
