"""
Invariants of links in S³: component count, writhe, Kauffman bracket,
Alexander polynomial and a fingerprint used to look links up in a small
catalog.

The bracket follows ⟨○⟩ = 1, ⟨D ⊔ ○⟩ = d⟨D⟩ with d = -A² - A⁻², and at a PD
crossing (a, b, c, d) the A-smoothing joins a-b and c-d.  With this choice
the closure of σ₁³ has Jones polynomial t + t³ - t⁴.
"""

from __future__ import annotations

import dataclasses
import json
import os
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .braid import BraidWord, braid, delta, power, underlying_permutation
from .diagram import PlanarDiagram, braid_tangle_closure
from .errors import ResourceLimitError
from .poly import LaurentPolynomial

__all__ = [
    "closure",
    "component_count",
    "writhe",
    "bracket_state_sum",
    "bracket_temperley_lieb",
    "bracket_sweep",
    "kauffman_bracket",
    "jones",
    "LinkFingerprint",
    "fingerprint",
    "braid_fingerprint",
    "alexander",
    "CatalogEntry",
    "Catalog",
    "default_catalog",
    "build_catalog",
    "identify_name",
    "identify",
    "STATE_SUM_LIMIT",
]

STATE_SUM_LIMIT = 22

Poly = dict  # exponent -> coefficient, used in the inner loops


def _padd(acc: dict, e_shift: int, poly: dict, scale: int = 1) -> None:
    for e, c in poly.items():
        k = e + e_shift
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            k = e1 + e2
            out[k] = out.get(k, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


_D = {2: -1, -2: -1}


@lru_cache(maxsize=None)
def _dpow(n: int) -> tuple:
    out = {0: 1}
    for _ in range(n):
        out = _pmul(out, _D)
    return tuple(sorted(out.items()))


def _loop_factor(poly: dict, loops: int) -> dict:
    """Multiply by d^(loops - 1); ``loops`` is at least 1."""
    return _pmul(poly, dict(_dpow(loops - 1)))


LOOP = LaurentPolynomial(_D)


# --- basic counts ------------------------------------------------------------


def closure(b: BraidWord) -> PlanarDiagram:
    """Standard closure in S³: top position j joined to bottom position j."""
    return braid_tangle_closure([b], b.strands)


def component_count(d: PlanarDiagram) -> int:
    return d.component_count()


def writhe(d: PlanarDiagram) -> int:
    return d.writhe()


# --- bracket evaluators ------------------------------------------------------


def bracket_state_sum(d: PlanarDiagram) -> LaurentPolynomial:
    """Sum over all 2^c smoothings."""
    n = len(d.crossings)
    if n > STATE_SUM_LIMIT:
        raise ResourceLimitError(f"state sum over {n} crossings refused (limit {STATE_SUM_LIMIT})")
    if n == 0:
        return LaurentPolynomial(dict(_dpow(d.free_loops - 1))) if d.free_loops else LaurentPolynomial({0: 1})
    arcs = sorted(d.arcs())
    index = {a: i for i, a in enumerate(arcs)}
    xs = [tuple(index[a] for a in x) for x in d.crossings]
    total: dict = {}
    for state in range(1 << n):
        parent = list(range(len(arcs)))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def join(u, v):
            u, v = find(u), find(v)
            if u != v:
                parent[u] = v

        a_count = 0
        for k, (a, b, c, e) in enumerate(xs):
            if state >> k & 1:
                join(a, e)
                join(b, c)
            else:
                a_count += 1
                join(a, b)
                join(c, e)
        loops = len({find(u) for u in range(len(arcs))}) + d.free_loops
        _padd(total, a_count - (n - a_count), dict(_dpow(loops - 1)))
    return LaurentPolynomial(total)


def _tl_word(letters: Sequence[int], t: int) -> dict:
    """Expand the braid in the Temperley-Lieb basis of noncrossing matchings.

    Points 0..t-1 are the top, t..2t-1 the bottom; a matching is the tuple of
    partners.  σ_i = A + A⁻¹e_i and σ_i⁻¹ = A⁻¹ + A e_i, multiplied on the bottom.
    """
    ident = tuple(list(range(t, 2 * t)) + list(range(t)))
    state: dict = {ident: {0: 1}}
    for x in letters:
        i = abs(x) - 1
        u, v = t + i, t + i + 1
        s_id, s_e = (1, -1) if x > 0 else (-1, 1)
        new: dict = {}
        for m, poly in state.items():
            acc = new.setdefault(m, {})
            _padd(acc, s_id, poly)
            if m[u] == v:
                # the cap closes a loop
                _padd(acc, s_e + 2, poly, -1)
                _padd(acc, s_e - 2, poly, -1)
                continue
            a, b = m[u], m[v]
            mm = list(m)
            mm[a], mm[b] = b, a
            mm[u], mm[v] = v, u
            key = tuple(mm)
            acc2 = new.setdefault(key, {})
            _padd(acc2, s_e, poly)
        state = {m: p for m, p in new.items() if p}
    return state


def _trace_loops(m: tuple, t: int) -> int:
    seen = [False] * (2 * t)
    loops = 0
    for s in range(2 * t):
        if seen[s]:
            continue
        loops += 1
        x = s
        while not seen[x]:
            seen[x] = True
            y = m[x]
            seen[y] = True
            x = y - t if y >= t else y + t
    return loops


def bracket_temperley_lieb(b: BraidWord) -> LaurentPolynomial:
    """Bracket of the standard closure of ``b`` by a Markov trace on TL_t."""
    t = b.strands
    state = _tl_word(b.letters, t)
    total: dict = {}
    for m, poly in state.items():
        for e, c in _loop_factor(poly, _trace_loops(m, t)).items():
            total[e] = total.get(e, 0) + c
    return LaurentPolynomial(total)


def _sweep_order(xs: list[tuple[int, ...]]) -> list[int]:
    """Greedy crossing order that keeps few arcs open."""
    remaining = set(range(len(xs)))
    seen: dict[int, int] = {}
    order = []
    by_arc: dict[int, list[int]] = {}
    for ci, x in enumerate(xs):
        for a in x:
            by_arc.setdefault(a, []).append(ci)
    while remaining:
        best, best_score = None, None
        candidates = {c for a, n in seen.items() if n == 1 for c in by_arc[a] if c in remaining}
        for ci in candidates or remaining:
            x = xs[ci]
            closing = sum(1 for a in x if seen.get(a, 0) == 1)
            score = (closing - (4 - closing), -ci)
            if best_score is None or score > best_score:
                best, best_score = ci, score
        order.append(best)
        remaining.discard(best)
        for a in xs[best]:
            seen[a] = seen.get(a, 0) + 1
    return order


def bracket_sweep(d: PlanarDiagram) -> LaurentPolynomial:
    """Bracket by sweeping crossings and tracking how open arcs are paired.

    The state is the pairing of arcs with one processed end; each closed loop
    contributes a factor d.  Cost depends on the largest number of open arcs,
    not on the crossing count.
    """
    n = len(d.crossings)
    if n == 0:
        return LaurentPolynomial(dict(_dpow(d.free_loops - 1))) if d.free_loops else LaurentPolynomial({0: 1})
    xs = list(d.crossings)
    states: dict = {(): {0: 1}}
    for ci in _sweep_order(xs):
        a, b, c, e = xs[ci]
        new: dict = {}
        for pairing, poly in states.items():
            for pairs, shift in ((((a, b), (c, e)), 1), (((a, e), (b, c)), -1)):
                partner = dict(pairing)
                loops = 0
                for u, v in pairs:
                    if u == v:
                        # both ends of one arc meet here: a closed loop
                        loops += 1
                        continue
                    pu = partner.pop(u, None)
                    pv = partner.pop(v, None)
                    if pu is not None:
                        partner.pop(pu, None)
                    if pv is not None:
                        partner.pop(pv, None)
                    end_u = u if pu is None else pu
                    end_v = v if pv is None else pv
                    if pu is not None and pv is not None and pu == v:
                        loops += 1
                        continue
                    partner[end_u] = end_v
                    partner[end_v] = end_u
                key = tuple(sorted(partner.items()))
                acc = new.setdefault(key, {})
                contrib = _pmul(poly, dict(_dpow(loops))) if loops else poly
                _padd(acc, shift, contrib)
        states = {k: v for k, v in new.items() if v}
    total = states.get((), {})
    assert len(states) <= 1, "unclosed arcs after the sweep"
    q = LaurentPolynomial(total).divmod_exact(LOOP)
    return q * LaurentPolynomial(dict(_dpow(d.free_loops))) if d.free_loops else q


def kauffman_bracket(d: PlanarDiagram | BraidWord) -> LaurentPolynomial:
    if isinstance(d, BraidWord):
        return bracket_temperley_lieb(d)
    if len(d.crossings) <= 12:
        return bracket_state_sum(d)
    return bracket_sweep(d)


def jones(bracket: LaurentPolynomial, w: int) -> LaurentPolynomial:
    """Jones polynomial in the variable t from a bracket and writhe (A = t^(-1/4))."""
    f = _normalize(bracket, w)
    if any(e % 4 for e, _ in f.items()):
        # links with an even number of components have half-integer powers of t
        return LaurentPolynomial({-e // 2: c for e, c in f.items()}, "s")
    return LaurentPolynomial({-e // 4: c for e, c in f.items()}, "t")


def _normalize(bracket: LaurentPolynomial, w: int) -> LaurentPolynomial:
    sign = -1 if w % 2 else 1
    return LaurentPolynomial({e - 3 * w: sign * c for e, c in bracket.items()})


# --- fingerprints ------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class LinkFingerprint:
    """Component count plus the mirror-resolved, writhe-normalized bracket.

    ``normalized_bracket`` is the bracket times (-A³)^(-w) where w sums the
    signs of crossings between a component and itself; that is unchanged by
    reversing any component, so the fingerprint is one of unoriented links.
    The price is that the shift carried by linking numbers is lost (the
    closures of Δ₃³ and σ₁² then share a bracket), so the sorted absolute
    pairwise linking numbers are kept alongside.
    """

    component_count: int
    normalized_bracket: LaurentPolynomial
    canonical_form: LaurentPolynomial
    chiral: bool
    is_mirrored: bool
    linking: tuple[int, ...] = ()

    def key(self) -> tuple:
        return (self.component_count, self.linking, self.canonical_form.key(), self.chiral)

    def __eq__(self, other):
        if not isinstance(other, LinkFingerprint):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def mirror(self) -> LinkFingerprint:
        return _make_fingerprint(self.component_count, self.normalized_bracket.mirror(), self.linking)

    def same_oriented_class(self, other: LinkFingerprint) -> bool:
        """Equal up to and including mirror handedness."""
        return self.key()[:2] == other.key()[:2] and self.normalized_bracket == other.normalized_bracket

    def to_dict(self) -> dict:
        return {
            "components": self.component_count,
            "linking": list(self.linking),
            "bracket": str(self.normalized_bracket),
            "canonical": str(self.canonical_form),
            "chiral": self.chiral,
        }

    def __str__(self) -> str:
        lk = f" |lk|={list(self.linking)}" if self.linking else ""
        return f"components={self.component_count}{lk} f={self.normalized_bracket}"


def _make_fingerprint(n: int, f: LaurentPolynomial, linking: Iterable[int] = ()) -> LinkFingerprint:
    m = f.mirror()
    canon = min(f, m, key=LaurentPolynomial.key)
    return LinkFingerprint(n, f, canon, f != m, f != canon, tuple(sorted(linking)))


def _abs_linking(d: PlanarDiagram) -> list[int]:
    lk = d.linking_numbers()
    n = len(d.components())
    out = [abs(lk.get((i, j), 0)) for i in range(n) for j in range(i + 1, n)]
    # free loops are split from everything
    total = n + d.free_loops
    out += [0] * (total * (total - 1) // 2 - len(out))
    return out


def fingerprint(d: PlanarDiagram, bracket: LaurentPolynomial | None = None) -> LinkFingerprint:
    if bracket is None:
        bracket = kauffman_bracket(d)
    return _make_fingerprint(d.component_count(), _normalize(bracket, d.self_writhe()), _abs_linking(d))


def _braid_writhe_data(b: BraidWord) -> tuple[int, int, list[int]]:
    """Components, self-writhe and |linking numbers| of the closure, read off the word."""
    t = b.strands
    comp_of_pos = [0] * t
    cycles = underlying_permutation(b).cycles()
    for ci, cyc in enumerate(cycles):
        for j in cyc:
            comp_of_pos[j - 1] = ci
    strand = list(range(t))  # strand[pos] = top position of the strand now at pos
    self_w = 0
    lk: dict[tuple[int, int], int] = {}
    for x in b.letters:
        i = abs(x) - 1
        s = 1 if x > 0 else -1
        ca, cb = comp_of_pos[strand[i]], comp_of_pos[strand[i + 1]]
        if ca == cb:
            self_w += s
        else:
            key = (min(ca, cb), max(ca, cb))
            lk[key] = lk.get(key, 0) + s
        strand[i], strand[i + 1] = strand[i + 1], strand[i]
    n = len(cycles)
    links = [abs(lk.get((i, j), 0)) // 2 for i in range(n) for j in range(i + 1, n)]
    return n, self_w, links


def braid_fingerprint(b: BraidWord) -> LinkFingerprint:
    """Fingerprint of the standard closure, with the bracket from the TL evaluator."""
    n, self_w, links = _braid_writhe_data(b)
    return _make_fingerprint(n, _normalize(bracket_temperley_lieb(b), self_w), links)


# --- Alexander polynomial ----------------------------------------------------


def _burau_letter(x: int, n: int):
    """Reduced Burau matrix (size n-1) for σ_i or its inverse, entries as poly dicts."""
    size = n - 1
    m = [[({0: 1} if r == c else {}) for c in range(size)] for r in range(size)]
    i = abs(x) - 1  # 0-based row of the -t entry
    if x > 0:
        m[i][i] = {1: -1}
        if i > 0:
            m[i - 1][i] = {1: 1}
        if i < size - 1:
            m[i + 1][i] = {0: 1}
    else:
        m[i][i] = {-1: -1}
        if i > 0:
            m[i - 1][i] = {0: 1}
        if i < size - 1:
            m[i + 1][i] = {-1: 1}
    return m


def _matmul(a, b):
    n = len(a)
    out = [[{} for _ in range(n)] for _ in range(n)]
    for r in range(n):
        for k in range(n):
            if not a[r][k]:
                continue
            for c in range(n):
                if b[k][c]:
                    _padd(out[r][c], 0, _pmul(a[r][k], b[k][c]))
    return out


def _det(m) -> LaurentPolynomial:
    """Bareiss fraction-free determinant over Z[t, t⁻¹]."""
    n = len(m)
    a = [[LaurentPolynomial(e, "t") for e in row] for row in m]
    sign = 1
    prev = LaurentPolynomial({0: 1}, "t")
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPolynomial({}, "t")
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divmod_exact(prev)
        prev = a[k][k]
    out = a[n - 1][n - 1]
    return out if sign > 0 else -out


def _normalize_alexander(p: LaurentPolynomial) -> LaurentPolynomial:
    if p.is_zero():
        return LaurentPolynomial({}, "t")
    p = p.shift(-p.min_degree())
    first = p.terms[0]
    return p if first > 0 else -p


def alexander(b: BraidWord) -> LaurentPolynomial:
    """Alexander polynomial of the closure from det(I - reduced Burau) / (1 + t + ... + t^(s-1))."""
    n = b.strands
    if n == 1:
        return LaurentPolynomial({0: 1}, "t")
    size = n - 1
    m = [[({0: 1} if r == c else {}) for c in range(size)] for r in range(size)]
    for x in b.letters:
        m = _matmul(m, _burau_letter(x, n))
    for r in range(size):
        for c in range(size):
            m[r][c] = {e: -v for e, v in m[r][c].items()}
        _padd(m[r][r], 0, {0: 1})
    det = _det(m)
    denom = LaurentPolynomial({k: 1 for k in range(n)}, "t")
    return _normalize_alexander(det.divmod_exact(denom))


# --- catalog -----------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    name: str
    fingerprint: LinkFingerprint
    presentation: BraidWord
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "components": self.fingerprint.component_count,
            "linking": list(self.fingerprint.linking),
            "bracket": str(self.fingerprint.normalized_bracket),
            "braid": str(self.presentation),
            "note": self.note,
        }


# Names and defining braids.  Each bracket is computed from the braid, never
# transcribed.  L4a1 is pinned to σ₁⁻⁴ so that σ₁⁴ and Δ₄ come out as its
# mirror, m(L4a1).
_DEFINITIONS = [
    ("0_1", braid(1, []), "unknot"),
    ("L2a1", braid(2, [1, 1]), "Hopf link"),
    ("3_1", braid(2, [1, 1, 1]), "trefoil"),
    ("L4a1", braid(2, [-1] * 4), "torus link T(2,4)"),
    ("5_1", braid(2, [1] * 5), "cinquefoil"),
    ("L6a3", braid(2, [1] * 6), "torus link T(2,6)"),
    ("L6n1", power(delta(3), 2), "torus link T(3,3)"),
    ("L8n3", delta(5), ""),
    ("L9n15", power(delta(3), 3), ""),
]


def _unlink_name(n: int) -> str:
    return " ⊔ ".join(["0_1"] * n)


class Catalog:
    def __init__(self, entries: Iterable[CatalogEntry]):
        self.entries = list(entries)
        self._by_key: dict = {}
        for e in self.entries:
            self._by_key.setdefault(e.fingerprint.key(), e)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def lookup(self, fp: LinkFingerprint) -> tuple[str, bool] | None:
        """Name of a link with this fingerprint and whether it is the mirror of the entry."""
        if not any(fp.linking) and fp.normalized_bracket == LaurentPolynomial(dict(_dpow(fp.component_count - 1))):
            # unlinks are recognized for any number of components
            n = fp.component_count
            return _unlink_name(n), False
        e = self._by_key.get(fp.key())
        if e is None:
            return None
        mirrored = fp.normalized_bracket != e.fingerprint.normalized_bracket
        return e.name, mirrored

    def name(self, fp: LinkFingerprint) -> str | None:
        hit = self.lookup(fp)
        if hit is None:
            return None
        name, mirrored = hit
        if not mirrored:
            return name
        if name.startswith("m(") and name.endswith(")"):
            return name[2:-1]
        return f"m({name})"

    def note(self, name: str) -> str:
        base = name[2:-1] if name.startswith("m(") else name
        for e in self.entries:
            if e.name == base or e.name == f"m({base})":
                return e.note
        return "unlink" if "⊔" in name else ""

    def to_json(self) -> str:
        return json.dumps([e.to_dict() for e in self.entries], indent=2, ensure_ascii=False, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Catalog:
        out = []
        for row in json.loads(text):
            b = _parse_braid_str(row["braid"])
            f = LaurentPolynomial.parse(row["bracket"])
            out.append(CatalogEntry(row["name"], _make_fingerprint(int(row["components"]), f, row.get("linking", ())), b, row.get("note", "")))
        return cls(out)

    def verify(self) -> list[str]:
        """Recompute every entry from its braid; return a list of problems."""
        problems = []
        keys = {}
        for e in self.entries:
            fp = braid_fingerprint(e.presentation)
            if not fp.same_oriented_class(e.fingerprint):
                problems.append(f"{e.name}: stored fingerprint differs from recomputed {fp}")
            if fp.key() in keys:
                problems.append(f"{e.name}: fingerprint coincides with {keys[fp.key()]}")
            keys[fp.key()] = e.name
        return problems


def _parse_braid_str(text: str) -> BraidWord:
    from .braid import parse_braid

    return parse_braid(text)


def build_catalog() -> Catalog:
    return Catalog(CatalogEntry(n, braid_fingerprint(b), b, note) for n, b, note in _DEFINITIONS)


CATALOG_ENV = "LENSLIFT_CATALOG"


@lru_cache(maxsize=4)
def _load_catalog(path: str | None) -> Catalog:
    if path:
        return Catalog.from_json(Path(path).read_text(encoding="utf-8"))
    return build_catalog()


def default_catalog() -> Catalog:
    """The built-in catalog, or the JSON file named by $LENSLIFT_CATALOG."""
    return _load_catalog(os.environ.get(CATALOG_ENV) or None)


def identify(d: PlanarDiagram | BraidWord | LinkFingerprint, catalog: Catalog | None = None) -> tuple[str, bool] | None:
    """Catalog name and mirror flag for a diagram, a braid closure or a fingerprint."""
    catalog = catalog or default_catalog()
    if isinstance(d, BraidWord):
        fp = braid_fingerprint(d)
    elif isinstance(d, LinkFingerprint):
        fp = d
    else:
        fp = fingerprint(d)
    return catalog.lookup(fp)


def identify_name(d, catalog: Catalog | None = None) -> str | None:
    """Like ``identify`` but folds the mirror flag into the name, e.g. ``m(3_1)``."""
    catalog = catalog or default_catalog()
    fp = d if isinstance(d, LinkFingerprint) else braid_fingerprint(d) if isinstance(d, BraidWord) else fingerprint(d)
    return catalog.name(fp)
