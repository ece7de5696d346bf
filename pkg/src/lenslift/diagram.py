"""
Combinatorial link diagrams.

`PlanarDiagram` is a PD code for a diagram in S³.  Each crossing is a 4-tuple
of arc ids listed counterclockwise starting from the incoming under-strand, so
position 0 is where the under-strand enters and position 2 where it leaves.
The over-strand passes from position 3 to 1 at a positive crossing and from 1
to 3 at a negative one; its direction is recovered by walking components.

`DiskDiagram` is a diagram of a link in L(p,q): a tangle in the equatorial
disk whose 2t boundary endpoints carry labels +1..+t, -1..-t (read
counterclockwise), with +i and -i identified.  A diagram built from a braid on
t strands puts the braid top-to-bottom on the page: top position j carries
+(t+1-j) and bottom position j carries -j, which is the only placement that
reads (+1..+t, -1..-t) counterclockwise.  Closing up in the lens space
therefore joins top j to bottom t+1-j.
"""

from __future__ import annotations

import dataclasses
import functools
import json
import math
from typing import Iterable, Sequence

from .braid import BraidWord, Permutation, underlying_permutation
from .errors import NotStandardError

__all__ = [
    "LensSpace",
    "PlanarDiagram",
    "DiskDiagram",
    "OrientedLensLink",
    "from_braid",
    "lens_link",
    "lens_closure_components",
    "homology_classes",
    "is_standard",
    "r6_swap",
    "standardize",
    "exchange_signs",
    "reverse_diagram",
    "disjoint_union",
    "connected_sum",
    "disk_connected_sum",
    "braid_tangle_closure",
]

Crossing = tuple[int, int, int, int]
# A slot is where an arc end sits: ("x", crossing index, position) or ("b", boundary index, 0).
Slot = tuple[str, int, int]


@dataclasses.dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p <= 1:
            raise ValueError(f"lens spaces here need p > 1, got p={self.p}")
        if not 0 <= self.q < self.p:
            raise ValueError(f"need 0 <= q < p, got q={self.q}, p={self.p}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


# --- orientation -------------------------------------------------------------


def _occurrences(crossings: Sequence[Crossing], boundary: Sequence[tuple[int, int, bool]] = ()):
    occ: dict[int, list[Slot]] = {}
    for ci, x in enumerate(crossings):
        for k, arc in enumerate(x):
            occ.setdefault(arc, []).append(("x", ci, k))
    for bi, (_, arc, _) in enumerate(boundary):
        occ.setdefault(arc, []).append(("b", bi, 0))
    for arc, slots in occ.items():
        if len(slots) != 2:
            raise ValueError(f"arc {arc} has {len(slots)} ends, expected 2")
    return occ


def _orient(crossings: Sequence[Crossing], boundary: Sequence[tuple[int, int, bool]] = ()):
    """Return head[arc] = slot where the arc ends (is entering).

    Under-strands fix direction (enter at 0, leave at 2) and boundary flags
    fix it at the disk boundary; purely-over closed strands get the direction
    that makes their smallest arc end at its first slot.  Raises ValueError if
    the constraints are contradictory.
    """
    occ = _occurrences(crossings, boundary)

    def arc_at(slot: Slot) -> int:
        kind, i, k = slot
        return crossings[i][k] if kind == "x" else boundary[i][1]

    def through(slot: Slot) -> Slot | None:
        kind, i, k = slot
        return ("x", i, (k + 2) % 4) if kind == "x" else None

    def other(arc: int, slot: Slot) -> Slot:
        a, b = occ[arc]
        return b if a == slot else a

    def forced(arc: int) -> Slot | None:
        for slot in occ[arc]:
            kind, i, k = slot
            if kind == "x":
                if k == 0:
                    return slot
                if k == 2:
                    return other(arc, slot)
            else:
                return slot if boundary[i][2] else other(arc, slot)
        return None

    head: dict[int, Slot] = {}
    for start in sorted(occ):
        if start in head:
            continue
        # collect the chain of arcs joined straight through crossings
        chain = [start]
        seen = {start}
        stack = [start]
        while stack:
            arc = stack.pop()
            for slot in occ[arc]:
                nxt = through(slot)
                if nxt is not None:
                    b = arc_at(nxt)
                    if b not in seen:
                        seen.add(b)
                        chain.append(b)
                        stack.append(b)
        seed, seed_head = None, None
        for arc in sorted(chain):
            h = forced(arc)
            if h is not None:
                seed, seed_head = arc, h
                break
        if seed is None:
            seed = min(chain)
            seed_head = min(occ[seed])
        # walk forward from the seed head, then backward from its tail
        arc, h = seed, seed_head
        while True:
            head[arc] = h
            nxt = through(h)
            if nxt is None:
                break
            arc = arc_at(nxt)
            if arc in head:
                break
            h = other(arc, nxt)
        h_tail = other(seed, seed_head)
        prev = through(h_tail)
        while prev is not None:
            arc = arc_at(prev)
            if arc in head:
                break
            head[arc] = prev
            prev = through(other(arc, prev))
    for arc, h in head.items():
        t = other(arc, h)
        kind, i, k = h
        if kind == "x" and k == 2:
            raise ValueError(f"arc {arc} would enter crossing {i} on the under-strand exit")
        if kind == "b" and not boundary[i][2]:
            raise ValueError(f"arc {arc} flows out at an inward boundary point")
        kind, i, k = t
        if kind == "x" and k == 0:
            raise ValueError(f"arc {arc} would leave crossing {i} on the under-strand entry")
        if kind == "b" and boundary[i][2]:
            raise ValueError(f"arc {arc} flows in at an outward boundary point")
        if h[0] == "x" and t[0] == "x":
            pass
    for arc, h in head.items():
        nxt = through(h)
        if nxt is not None and head.get(arc_at(nxt)) == nxt:
            raise ValueError(f"strand direction clash after arc {arc}")
    return head, occ


def _over_entry(crossings: Sequence[Crossing], head: dict[int, Slot]) -> list[int]:
    """Position (1 or 3) at which the over-strand enters each crossing."""
    out = []
    for ci, x in enumerate(crossings):
        if head.get(x[3]) == ("x", ci, 3):
            out.append(3)
        elif head.get(x[1]) == ("x", ci, 1):
            out.append(1)
        else:
            raise ValueError(f"crossing {ci}: over-strand direction inconsistent")
    return out


def _crossing_tuple(ccw: Sequence[int], under: tuple[int, int], incoming: int) -> Crossing:
    """Rotate the counterclockwise end list so it starts at the incoming under end."""
    assert incoming in under and (under[0] - under[1]) % 4 == 2
    return tuple(ccw[(incoming + k) % 4] for k in range(4))  # type: ignore[return-value]


# --- planar diagrams ---------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(a) for a in x) for x in self.crossings))
        for x in self.crossings:
            if len(x) != 4:
                raise ValueError(f"crossing {x} does not have 4 arcs")
        if self.free_loops < 0:
            raise ValueError("negative free loop count")

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def arcs(self) -> set[int]:
        return {a for x in self.crossings for a in x}

    @functools.cached_property
    def _head(self) -> dict[int, Slot]:
        return _orient(self.crossings)[0]

    def orientation(self) -> list[int]:
        """Over-strand entry position per crossing (3: positive, 1: negative)."""
        return _over_entry(self.crossings, self._head)

    def signs(self) -> list[int]:
        return [1 if k == 3 else -1 for k in self.orientation()]

    def writhe(self) -> int:
        return sum(self.signs())

    @functools.cached_property
    def _components(self) -> tuple[tuple[int, ...], ...]:
        head = self._head
        seen: set[int] = set()
        comps = []
        for start in sorted(head):
            if start in seen:
                continue
            cyc = []
            arc = start
            while arc not in seen:
                seen.add(arc)
                cyc.append(arc)
                _, ci, k = head[arc]
                arc = self.crossings[ci][(k + 2) % 4]
            comps.append(tuple(cyc))
        return tuple(comps)

    def components(self) -> list[list[int]]:
        """Closed components with crossings, as arc cycles in traversal order."""
        return [list(c) for c in self._components]

    def component_count(self) -> int:
        return len(self.components()) + self.free_loops

    def component_of_arc(self) -> dict[int, int]:
        return {a: i for i, comp in enumerate(self.components()) for a in comp}

    def self_writhe(self) -> int:
        """Sum of signs over crossings whose two strands lie on one component.

        Unlike the writhe it does not depend on how components are oriented.
        """
        comp = self.component_of_arc()
        return sum(s for x, s in zip(self.crossings, self.signs()) if comp[x[0]] == comp[x[1]])

    def linking_numbers(self) -> dict[tuple[int, int], int]:
        comp = self.component_of_arc()
        out: dict[tuple[int, int], int] = {}
        for x, s in zip(self.crossings, self.signs()):
            i, j = comp[x[0]], comp[x[1]]
            if i != j:
                key = (min(i, j), max(i, j))
                out[key] = out.get(key, 0) + s
        return {k: v // 2 for k, v in out.items()}

    def mirror(self) -> PlanarDiagram:
        """Exchange over and under at every crossing."""
        entries = self.orientation()
        out = []
        for (a, b, c, d), k in zip(self.crossings, entries):
            out.append((d, a, b, c) if k == 3 else (b, c, d, a))
        return PlanarDiagram(tuple(out), self.free_loops)

    def relabel(self, offset: int) -> PlanarDiagram:
        return PlanarDiagram(tuple(tuple(a + offset for a in x) for x in self.crossings), self.free_loops)

    def canonical(self) -> PlanarDiagram:
        """Arcs renumbered 0.. by first appearance, crossings sorted."""
        order: dict[int, int] = {}
        for comp in self.components():
            for a in comp:
                order.setdefault(a, len(order))
        xs = sorted(tuple(order[a] for a in x) for x in self.crossings)
        return PlanarDiagram(tuple(xs), self.free_loops)

    def check(self) -> None:
        """Raise ValueError unless every arc has two ends and orientation is consistent."""
        head, _ = _orient(self.crossings)
        _over_entry(self.crossings, head)

    def to_dict(self) -> dict:
        c = self.canonical()
        return {"crossings": [list(x) for x in c.crossings], "free_loops": c.free_loops}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> PlanarDiagram:
        pd = cls(tuple(tuple(x) for x in data.get("crossings", [])), int(data.get("free_loops", 0)))
        pd.check()
        return pd

    @classmethod
    def from_json(cls, text: str) -> PlanarDiagram:
        return cls.from_dict(json.loads(text))


def unknot(n: int = 1) -> PlanarDiagram:
    return PlanarDiagram((), n)


def disjoint_union(a: PlanarDiagram, b: PlanarDiagram) -> PlanarDiagram:
    offset = max(a.arcs(), default=-1) + 1 - min(b.arcs(), default=0)
    moved = b.relabel(offset)
    return PlanarDiagram(a.crossings + moved.crossings, a.free_loops + b.free_loops)


def _splice(slots_a, slots_b, arc_a: int, arc_b: int, new_arc: int):
    """Cross-splice two oriented arcs given as (head slot, tail slot) pairs.

    Returns the assignment slot -> arc for the four affected slots: the first
    arc keeps the tail of ``arc_a`` and takes the head of ``arc_b``; the new
    arc runs from the tail of ``arc_b`` to the head of ``arc_a``.
    """
    head_a, tail_a = slots_a
    head_b, tail_b = slots_b
    return {tail_a: arc_a, head_b: arc_a, tail_b: new_arc, head_a: new_arc}


def connected_sum(a: PlanarDiagram, arc_a: int | None, b: PlanarDiagram, arc_b: int | None) -> PlanarDiagram:
    """Cut ``arc_a`` of ``a`` and ``arc_b`` of ``b`` and join the loose ends.

    A crossingless side is summed along one of its free loops (pass None).
    """
    if not a.crossings or not b.crossings:
        if not a.crossings and not b.crossings:
            if a.free_loops < 1 or b.free_loops < 1:
                raise ValueError("connected sum needs a component on each side")
            return PlanarDiagram((), a.free_loops + b.free_loops - 1)
        if not a.crossings:
            a, arc_a, b, arc_b = b, arc_b, a, arc_a
        if b.free_loops < 1:
            raise ValueError("connected sum needs a component on each side")
        if arc_a not in a.arcs():
            raise ValueError(f"arc {arc_a} is not an arc of the diagram")
        return PlanarDiagram(a.crossings, a.free_loops + b.free_loops - 1)
    if arc_a not in a.arcs():
        raise ValueError(f"arc {arc_a} is not an arc of the first diagram")
    if arc_b not in b.arcs():
        raise ValueError(f"arc {arc_b} is not an arc of the second diagram")
    offset = max(a.arcs()) + 1 - min(b.arcs())
    b = b.relabel(offset)
    arc_b += offset
    new_arc = max(b.arcs()) + 1
    n = len(a.crossings)
    xs = [list(x) for x in a.crossings] + [list(x) for x in b.crossings]
    head_a, occ_a = _orient(a.crossings)
    head_b, occ_b = _orient(b.crossings)

    def pair(head, occ, arc, shift):
        h = head[arc]
        t = occ[arc][1] if occ[arc][0] == h else occ[arc][0]
        return (("x", h[1] + shift, h[2]), ("x", t[1] + shift, t[2]))

    assign = _splice(pair(head_a, occ_a, arc_a, 0), pair(head_b, occ_b, arc_b, n), arc_a, arc_b, new_arc)
    for (_, ci, k), arc in assign.items():
        xs[ci][k] = arc
    return PlanarDiagram(tuple(tuple(x) for x in xs), a.free_loops + b.free_loops)


# --- braid-shaped assembly ---------------------------------------------------


class _Assembler:
    """Stacks braid letters and standard disk tangles top to bottom.

    Each position carries (arc id, flows_down).  Arc identifications go
    through a union-find so that tangle endpoints can be glued.
    """

    def __init__(self, directions: Sequence[bool]):
        self.parent: dict[int, int] = {}
        self.crossings: list[list[int]] = []
        self.free_loops = 0
        self.top = [(self.new_arc(), down) for down in directions]
        self.cur = list(self.top)

    def new_arc(self) -> int:
        a = len(self.parent)
        self.parent[a] = a
        return a

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

    def letter(self, x: int) -> None:
        i = abs(x) - 1
        (nw, xdown), (ne, ydown) = self.cur[i], self.cur[i + 1]
        sw, se = self.new_arc(), self.new_arc()
        ccw = (nw, sw, se, ne)
        # positive σ_i: the strand from top i+1 to bottom i passes over
        if x > 0:
            tup = _crossing_tuple(ccw, (0, 2), 0 if xdown else 2)
        else:
            tup = _crossing_tuple(ccw, (3, 1), 3 if ydown else 1)
        self.crossings.append(list(tup))
        self.cur[i], self.cur[i + 1] = (sw, ydown), (se, xdown)

    def word(self, letters: Iterable[int]) -> None:
        for x in letters:
            self.letter(x)

    def tangle(self, d: DiskDiagram) -> None:
        t = d.t
        if t != len(self.cur):
            raise ValueError(f"tangle has {t} strands, stack has {len(self.cur)}")
        if not is_standard(d):
            raise NotStandardError("only standard disk diagrams can be stacked")
        fresh: dict[int, int] = {}

        def f(arc: int) -> int:
            if arc not in fresh:
                fresh[arc] = self.new_arc()
            return fresh[arc]

        by_label = {lab: (arc, out) for lab, arc, out in d.boundary}
        for j in range(t):
            arc, out = by_label[t - j]
            arc_above, down = self.cur[j]
            if out == down:
                raise ValueError("strand directions do not match across a gluing")
            self.union(f(arc), arc_above)
        for x in d.crossings:
            self.crossings.append([f(a) for a in x])
        self.free_loops += d.free_loops
        bottom = []
        for j in range(t):
            arc, out = by_label[-(j + 1)]
            bottom.append((f(arc), out))
        self.cur = bottom

    def _resolve(self) -> list[Crossing]:
        return [tuple(self.find(a) for a in x) for x in self.crossings]  # type: ignore[misc]

    def close(self) -> PlanarDiagram:
        for (a, da), (b, db) in zip(self.top, self.cur):
            if da != db:
                raise ValueError("closure joins strands of opposite direction")
            self.union(a, b)
        xs = self._resolve()
        used = {a for x in xs for a in x}
        classes = {self.find(a) for a in self.parent}
        loops = len(classes - used)
        return PlanarDiagram(tuple(xs), self.free_loops + loops)


def braid_tangle_closure(pieces: Iterable, t: int, directions: Sequence[bool] | None = None) -> PlanarDiagram:
    """Standard closure of a stack of braid words and standard disk tangles."""
    asm = _Assembler(directions if directions is not None else [True] * t)
    for piece in pieces:
        if isinstance(piece, DiskDiagram):
            asm.tangle(piece)
        else:
            letters = piece.letters if isinstance(piece, BraidWord) else piece
            asm.word(letters)
    return asm.close()


# --- disk diagrams -----------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class DiskDiagram:
    """A link diagram in the disk model of a lens space.

    ``boundary`` lists (label, arc, outward) counterclockwise; ``outward`` is
    True when the strand flows out of the disk through that point.
    """

    lens: LensSpace
    crossings: tuple[Crossing, ...] = ()
    boundary: tuple[tuple[int, int, bool], ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(a) for a in x) for x in self.crossings))
        object.__setattr__(self, "boundary", tuple((int(l), int(a), bool(o)) for l, a, o in self.boundary))
        labels = [l for l, _, _ in self.boundary]
        t = len(labels) // 2
        if sorted(labels) != sorted([*range(1, t + 1), *range(-t, 0)]):
            raise ValueError(f"boundary labels {labels} are not ±1..±{t} each once")
        for order in ([l for l in labels if l > 0], [-l for l in labels if l < 0]):
            if order and _cyclic_start(order, 1) != list(range(1, t + 1)):
                raise ValueError(f"boundary points of one sign are out of cyclic order: {labels}")
        out = {l: o for l, _, o in self.boundary}
        for i in range(1, t + 1):
            if out[i] == out[-i]:
                raise ValueError(f"points +{i} and -{i} must carry the strand in opposite senses")
        _orient(self.crossings, self.boundary)

    @property
    def t(self) -> int:
        return len(self.boundary) // 2

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def labels(self) -> list[int]:
        return [l for l, _, _ in self.boundary]

    def arcs(self) -> set[int]:
        return {a for x in self.crossings for a in x} | {a for _, a, _ in self.boundary}

    def orientation(self) -> list[int]:
        head, _ = _orient(self.crossings, self.boundary)
        return _over_entry(self.crossings, head)

    def canonical(self) -> DiskDiagram:
        """Arcs renumbered along strands walked from +1, +2, ..; crossings sorted."""
        head, occ = _orient(self.crossings, self.boundary)
        order: dict[int, int] = {}
        slot_of = {lab: ("b", bi, 0) for bi, (lab, _, _) in enumerate(self.boundary)}
        starts = [lab for lab in sorted(self.labels(), key=lambda l: (l < 0, abs(l)))]
        for lab in starts:
            slot = slot_of[lab]
            arc = self.boundary[slot[1]][1]
            while arc not in order:
                order[arc] = len(order)
                h = head[arc]
                if h[0] == "b":
                    break
                arc = self.crossings[h[1]][(h[2] + 2) % 4]
        for arc in sorted(self.arcs()):
            order.setdefault(arc, len(order))
        xs = tuple(sorted(tuple(order[a] for a in x) for x in self.crossings))
        bd = tuple((l, order[a], o) for l, a, o in _rotate_to_plus_one(self.boundary))
        return DiskDiagram(self.lens, xs, bd, self.free_loops)

    def to_dict(self) -> dict:
        c = self.canonical()
        return {
            "p": self.lens.p,
            "q": self.lens.q,
            "t": self.t,
            "crossings": [list(x) for x in c.crossings],
            "free_loops": c.free_loops,
            "boundary": [f"{l:+d}" for l, _, _ in c.boundary],
            "boundary_arcs": [a for _, a, _ in c.boundary],
            "outward": [o for _, _, o in c.boundary],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> DiskDiagram:
        labels = [int(s) for s in data["boundary"]]
        bd = tuple(zip(labels, data["boundary_arcs"], data["outward"]))
        return cls(
            LensSpace(int(data["p"]), int(data["q"])),
            tuple(tuple(x) for x in data.get("crossings", [])),
            bd,
            int(data.get("free_loops", 0)),
        )

    @classmethod
    def from_json(cls, text: str) -> DiskDiagram:
        return cls.from_dict(json.loads(text))


def _cyclic_start(seq: list[int], first) -> list[int]:
    k = seq.index(first)
    return seq[k:] + seq[:k]


def _rotate_to_plus_one(boundary):
    labels = [l for l, _, _ in boundary]
    k = labels.index(1) if 1 in labels else 0
    return list(boundary[k:]) + list(boundary[:k])


def is_standard(d: DiskDiagram) -> bool:
    t = d.t
    return [l for l, _, _ in _rotate_to_plus_one(d.boundary)] == [*range(1, t + 1), *range(-1, -t - 1, -1)]


def from_braid(b: BraidWord, lens: LensSpace) -> DiskDiagram:
    """The standard disk diagram in which ``b`` runs from the + points to the - points."""
    t = b.strands
    asm = _Assembler([True] * t)
    asm.word(b.letters)
    xs = asm._resolve()
    top = [asm.find(a) for a, _ in asm.top]
    bottom = [asm.find(a) for a, _ in asm.cur]
    boundary = [(i, top[t - i], False) for i in range(1, t + 1)]
    boundary += [(-j, bottom[j - 1], True) for j in range(1, t + 1)]
    return DiskDiagram(lens, tuple(xs), tuple(boundary), 0)


# --- lens-space closure ------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class OrientedLensLink:
    """A disk diagram together with its components in the lens space.

    ``passages[c]`` lists, in traversal order, the labels through which
    component c leaves the disk; ``classes[c]`` is its homology class up to sign.
    """

    diagram: DiskDiagram
    passages: tuple[tuple[int, ...], ...]
    classes: tuple[int, ...]

    @property
    def nu(self) -> int:
        return len(self.classes)

    @property
    def lens(self) -> LensSpace:
        return self.diagram.lens


def _reduce_class(delta: int, p: int) -> int:
    r = delta % p
    return min(r, p - r)


def lens_link(d: DiskDiagram) -> OrientedLensLink:
    head, occ = _orient(d.crossings, d.boundary)
    slot_of_label = {lab: bi for bi, (lab, _, _) in enumerate(d.boundary)}
    seen: set[int] = set()
    passages: list[tuple[int, ...]] = []
    # start every component at the arc leaving the lowest boundary point it uses
    starts = [d.boundary[slot_of_label[l]][1] for l in sorted(slot_of_label, key=lambda l: (l < 0, abs(l)))
              if not d.boundary[slot_of_label[l]][2]]
    starts += sorted(occ)
    for start in starts:
        if start in seen:
            continue
        exits: list[int] = []
        arc = start
        while arc not in seen:
            seen.add(arc)
            kind, i, k = head[arc]
            if kind == "x":
                arc = d.crossings[i][(k + 2) % 4]
            else:
                lab = d.boundary[i][0]
                exits.append(lab)
                arc = d.boundary[slot_of_label[-lab]][1]
        passages.append(tuple(exits))
    passages.extend(() for _ in range(d.free_loops))
    classes = tuple(_reduce_class(sum(1 if l > 0 else -1 for l in ex), d.lens.p) for ex in passages)
    return OrientedLensLink(d, tuple(passages), classes)


def homology_classes(link: OrientedLensLink | DiskDiagram) -> list[int]:
    if isinstance(link, DiskDiagram):
        link = lens_link(link)
    return list(link.classes)


def lens_closure_components(d: DiskDiagram) -> tuple[int, list[tuple[int, ...]]]:
    """Number of components and, per component, the sorted chord indices it uses."""
    link = lens_link(d)
    return link.nu, [tuple(sorted(abs(l) for l in ex)) for ex in link.passages]


# --- boundary moves ----------------------------------------------------------


def r6_swap(d: DiskDiagram, position: int) -> DiskDiagram:
    """Exchange the adjacent boundary points at ``position`` and ``position + 1``.

    The points must be of opposite sign and not a ±i pair.  One crossing is
    added next to the boundary; the arc from the upper hemisphere (the
    plus point) passes over.
    """
    n = len(d.boundary)
    k, k1 = position % n, (position + 1) % n
    (lx, x, ox), (ly, y, oy) = d.boundary[k], d.boundary[k1]
    if (lx > 0) == (ly > 0):
        raise ValueError("R6 exchanges a plus point with a minus point")
    if lx == -ly:
        raise ValueError(f"points {lx:+d} and {ly:+d} are identified and cannot pass")
    new = max(d.arcs(), default=-1) + 1
    x2, y2 = new, new + 1
    # local picture: boundary runs left to right below, interior above;
    # x comes down to the left slot and leaves through the right one.
    ccw = (x, y2, x2, y)
    if lx > 0:  # x is over, y is under
        tup = _crossing_tuple(ccw, (3, 1), 3 if oy else 1)
    else:
        tup = _crossing_tuple(ccw, (0, 2), 0 if ox else 2)
    bd = list(d.boundary)
    bd[k], bd[k1] = (ly, y2, oy), (lx, x2, ox)
    return DiskDiagram(d.lens, d.crossings + (tup,), tuple(bd), d.free_loops)


def _gap(labels: list[int], k: int) -> int:
    """Index g of the nearest plus point +g found walking clockwise from position k."""
    n = len(labels)
    for step in range(1, n + 1):
        lab = labels[(k - step) % n]
        if lab > 0:
            return lab
    raise ValueError("no plus points")


def standardize(d: DiskDiagram) -> DiskDiagram:
    """Bring the boundary to (+1..+t, -1..-t) by R6 moves.

    The plus points stay put and every minus point -j is carried into the
    gap between +t and +1.  It may not pass its own partner +j, so exactly
    one way round is open and the number of moves is forced: the result of
    first bringing +2 beside +1, then +3, and so on, once
    opposite moves of the same pair are cancelled.  A minus point blocked
    by another minus point waits for it to move.
    """
    t = d.t
    if t == 0 or is_standard(d):
        return d
    limit = 2 * t * t + 4
    steps = 0
    while True:
        labels = d.labels()
        n = len(labels)
        moved = False
        for k, lab in enumerate(labels):
            if lab > 0:
                continue
            j, g = -lab, _gap(labels, k)
            if g == t:
                continue
            if j <= g:
                nxt = labels[(k + 1) % n]  # move counterclockwise past +(g+1)
                if nxt > 0:
                    d = r6_swap(d, k)
                    moved = True
                    break
            else:
                prev = labels[(k - 1) % n]  # move clockwise past +g
                if prev > 0:
                    d = r6_swap(d, k - 1)
                    moved = True
                    break
        if not moved:
            break
        steps += 1
        if steps > limit:
            raise RuntimeError("standardize did not terminate")
    if not is_standard(d):
        raise ValueError(f"boundary order {d.labels()} cannot be standardized")
    return d


def exchange_signs(d: DiskDiagram, i: int) -> DiskDiagram:
    """Swap the labels +i and -i; a small isotopy through the equator, valid only in L(2,1)."""
    if d.lens.p != 2:
        raise ValueError("sign exchange is only an isotopy when p = 2")
    bd = tuple((-l if abs(l) == i else l, a, o) for l, a, o in d.boundary)
    return DiskDiagram(d.lens, d.crossings, bd, d.free_loops)


def reverse_diagram(d: DiskDiagram) -> DiskDiagram:
    """Reflect the disk in a line and exchange every over- and under-pass.

    Labels ±i become ±(t+1-i) so that the result is again standard; on a
    braid diagram this acts as σ_i -> σ_{t-i}.
    """
    if not is_standard(d):
        raise NotStandardError("reverse_diagram needs a standard disk diagram")
    t = d.t
    entries = d.orientation()
    xs = []
    for (a, b, c, e), k in zip(d.crossings, entries):
        # reflected ccw order is a, e, c, b; the former over-strand b-e goes under
        xs.append((e, c, b, a) if k == 3 else (b, a, e, c))
    bd = tuple(
        ((t + 1 - l) if l > 0 else -(t + 1 + l), arc, o) for l, arc, o in reversed(d.boundary)
    )
    return DiskDiagram(d.lens, tuple(xs), bd, d.free_loops)


def disk_connected_sum(d: DiskDiagram, arc: int, k: PlanarDiagram, arc_k: int | None) -> DiskDiagram:
    """Sum a diagram in S³ into the disk diagram along ``arc``, inside a small disk."""
    if not k.crossings:
        if k.free_loops < 1:
            raise ValueError("empty summand")
        return DiskDiagram(d.lens, d.crossings, d.boundary, d.free_loops + k.free_loops - 1)
    if arc not in d.arcs():
        raise ValueError(f"arc {arc} is not an arc of the disk diagram")
    if arc_k not in k.arcs():
        raise ValueError(f"arc {arc_k} is not an arc of the summand")
    offset = max(d.arcs()) + 1 - min(k.arcs())
    k = k.relabel(offset)
    arc_k += offset
    new_arc = max(k.arcs()) + 1
    n = len(d.crossings)
    xs = [list(x) for x in d.crossings] + [list(x) for x in k.crossings]
    bd = [list(b) for b in d.boundary]
    head_d, occ_d = _orient(d.crossings, d.boundary)
    head_k, occ_k = _orient(k.crossings)

    def pair(head, occ, a, shift):
        h = head[a]
        t = occ[a][1] if occ[a][0] == h else occ[a][0]
        sh = lambda s: (s[0], s[1] + shift, s[2]) if s[0] == "x" else s
        return sh(h), sh(t)

    assign = _splice(pair(head_d, occ_d, arc, 0), pair(head_k, occ_k, arc_k, n), arc, arc_k, new_arc)
    for (kind, i, pos), a in assign.items():
        if kind == "x":
            xs[i][pos] = a
        else:
            bd[i][1] = a
    return DiskDiagram(d.lens, tuple(tuple(x) for x in xs), tuple(tuple(b) for b in bd),
                       d.free_loops + k.free_loops)


def closure_matching(t: int) -> Permutation:
    """Top position j is joined to bottom position t+1-j in the lens space."""
    return Permutation(tuple(range(t, 0, -1)))


def braid_lens_cycles(b: BraidWord) -> list[tuple[int, ...]]:
    """Cycles of ρ∘perm(b), the permutation whose cycles are the lens components."""
    return (underlying_permutation(b) * closure_matching(b.strands)).cycles()
