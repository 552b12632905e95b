"""The sl(N) state sum of a closed layered MOY graph.

Two evaluators share nothing but the diagram type:

* :func:`bracket` sweeps the layers bottom to top.  The DP state is the tuple
  of label subsets on the current profile (bitmasks), and each state carries
  the accumulated weight polynomial.  Every event multiplies by a monomial,
  so transitions are exponent shifts.
* :func:`bracket_naive` builds the abstract edge/vertex graph, enumerates
  every state by backtracking over edges, and traces each labeled circle to
  check that its rotation number really is +1 or -1.

Exponents are tracked in half units of q throughout.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from ..qalg import LaurentPoly
from .diagram import (
    Cap,
    Crossing,
    Cup,
    Diagnostic,
    DiagramError,
    Fork,
    Join,
    LayeredDiagram,
    Strand,
    step,
    validate,
)

__all__ = [
    "labels",
    "pi_count",
    "vertex_weight_exponent",
    "turning_contribution",
    "bracket",
    "bracket_naive",
    "colored_rotation_number",
    "SweepStats",
]


def labels(N: int) -> list[int]:
    """The label set {-N+1, -N+3, ..., N-1}."""
    return list(range(-N + 1, N, 2))


def pi_count(A: Iterable[int], B: Iterable[int]) -> int:
    """Number of pairs (a, b) in A x B with a > b."""
    B = list(B)
    return sum(1 for a in A for b in B if a > b)


def vertex_weight_exponent(c1: int, c2: int, A1, A2) -> Fraction:
    """Exponent of q in the weight of a vertex whose left edge e1 carries A1."""
    A1, A2 = set(A1), set(A2)
    if len(A1) != c1 or len(A2) != c2:
        raise ValueError("subset sizes must match the edge colors")
    if A1 & A2:
        raise ValueError("labels on the two split edges must be disjoint")
    return Fraction(c1 * c2, 2) - pi_count(A1, A2)


def turning_contribution(event) -> Fraction:
    """Turning of one passage through a cup or cap, in full turns (+-1/2)."""
    if not isinstance(event, (Cup, Cap)):
        raise TypeError("only cups and caps turn")
    return Fraction(1, 2) if event.up_side == "right" else Fraction(-1, 2)


def _turn_sign(event) -> int:
    return 1 if event.up_side == "right" else -1


# -- sweep DP --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _subsets(N: int, c: int) -> tuple[int, ...]:
    if c > N or c < 0:
        return ()
    return tuple(sum(1 << i for i in combo) for combo in combinations(range(N), c))


@lru_cache(maxsize=None)
def _submasks(mask: int, c: int) -> tuple[int, ...]:
    bits = [i for i in range(mask.bit_length()) if mask >> i & 1]
    return tuple(sum(1 << i for i in combo) for combo in combinations(bits, c))


@lru_cache(maxsize=None)
def _label_sum(mask: int, N: int) -> int:
    # sum of labels -N+1+2i over set bits i
    total = 0
    i = 0
    while mask:
        if mask & 1:
            total += 2 * i - N + 1
        mask >>= 1
        i += 1
    return total


@lru_cache(maxsize=None)
def _pi_mask(a: int, b: int) -> int:
    # bits order labels increasingly, so count bits of b strictly below each bit of a
    count = 0
    i = 0
    while a:
        if a & 1:
            count += bin(b & ((1 << i) - 1)).count("1")
        a >>= 1
        i += 1
    return count


def _vertex_half(c1: int, c2: int, m1: int, m2: int) -> int:
    return c1 * c2 - 2 * _pi_mask(m1, m2)


@dataclass
class SweepStats:
    layers: int = 0
    peak_states: int = 0
    final_states: int = 0
    seconds: float = 0.0


def _accumulate(target: dict, state: tuple, poly: dict, shift: int, factor: dict | None = None):
    bucket = target.get(state)
    if bucket is None:
        bucket = target[state] = {}
    if factor is None:
        for e, c in poly.items():
            k = e + shift
            v = bucket.get(k, 0) + c
            if v:
                bucket[k] = v
            else:
                del bucket[k]
    else:
        for fe, fc in factor.items():
            for e, c in poly.items():
                k = e + shift + fe
                v = bucket.get(k, 0) + c * fc
                if v:
                    bucket[k] = v
                else:
                    del bucket[k]


def _prune(states: dict) -> dict:
    return {s: p for s, p in states.items() if p}


# expand_crossing(m, n, sign) -> list of (coefficient LaurentPoly, events relative to the crossing pos)
CrossingExpander = Callable[[int, int, int], list]


def _apply(ev, prof: tuple[Strand, ...], states: dict, N: int, expand_crossing: CrossingExpander | None):
    out: dict = {}
    pos = ev.pos
    if isinstance(ev, Cup):
        turn = 1 if ev.up_side == "right" else -1
        choices = _subsets(N, ev.color)
        for s, poly in states.items():
            head, tail = s[:pos], s[pos:]
            for m in choices:
                _accumulate(out, head + (m, m) + tail, poly, turn * _label_sum(m, N))
    elif isinstance(ev, Cap):
        turn = 1 if ev.up_side == "right" else -1
        for s, poly in states.items():
            a = s[pos]
            if a != s[pos + 1]:
                continue
            _accumulate(out, s[:pos] + s[pos + 2 :], poly, turn * _label_sum(a, N))
    elif isinstance(ev, Join):
        left, right = prof[pos], prof[pos + 1]
        for s, poly in states.items():
            a, b = s[pos], s[pos + 1]
            if a & b:
                continue
            if left.up:
                shift = _vertex_half(left.color, right.color, a, b)
            else:
                # travelling downward, the edge on the traveller's left is the planar right one
                shift = _vertex_half(right.color, left.color, b, a)
            _accumulate(out, s[:pos] + (a | b,) + s[pos + 2 :], poly, shift)
    elif isinstance(ev, Fork):
        up = prof[pos].up
        lc, rc = ev.left_color, ev.right_color
        for s, poly in states.items():
            a = s[pos]
            for left in _submasks(a, lc):
                right = a ^ left
                shift = _vertex_half(lc, rc, left, right) if up else _vertex_half(rc, lc, right, left)
                _accumulate(out, s[:pos] + (left, right) + s[pos + 1 :], poly, shift)
    elif isinstance(ev, Crossing):
        if expand_crossing is None:
            raise DiagramError([Diagnostic(-1, "crossings need the link evaluator")])
        n, m = prof[pos].color, prof[pos + 1].color
        for coef, local in expand_crossing(m, n, ev.sign):
            sub, p = states, prof
            for lev in local:
                lev = _shift_event(lev, pos)
                sub = _apply(lev, p, sub, N, None)
                p = step(p, lev)
            factor = dict(coef.items())
            for s, poly in sub.items():
                _accumulate(out, s, poly, 0, factor)
    else:
        raise TypeError(type(ev).__name__)
    return _prune(out)


def _shift_event(ev, offset: int):
    if offset == 0:
        return ev
    if isinstance(ev, Cup):
        return Cup(ev.pos + offset, ev.color, ev.up_side)
    if isinstance(ev, Cap):
        return Cap(ev.pos + offset, ev.up_side)
    if isinstance(ev, Join):
        return Join(ev.pos + offset, ev.color)
    if isinstance(ev, Fork):
        return Fork(ev.pos + offset, ev.left_color, ev.right_color)
    if isinstance(ev, Crossing):
        return Crossing(ev.pos + offset, ev.sign)
    raise TypeError(type(ev).__name__)


def sweep(
    d: LayeredDiagram,
    N: int,
    expand_crossing: CrossingExpander | None = None,
    stats: SweepStats | None = None,
) -> LaurentPoly:
    """Run the layer sweep on a closed diagram (crossings need an expander)."""
    t0 = time.perf_counter()
    diags = validate(d)
    if diags:
        raise DiagramError(diags)
    if expand_crossing is None and d.crossings:
        raise DiagramError([Diagnostic(-1, "crossings need the link evaluator")])
    states: dict = {(): {0: 1}}
    prof: tuple[Strand, ...] = ()
    peak = 1
    for i, ev in enumerate(d.layers):
        states = _apply(ev, prof, states, N, expand_crossing)
        prof = step(prof, ev, i)
        peak = max(peak, len(states))
    result = LaurentPoly(states.get((), {}))
    if not result.is_integral():
        raise AssertionError(f"half-integer exponents survived the state sum: {result}")
    if stats is not None:
        stats.layers = len(d.layers)
        stats.peak_states = peak
        stats.final_states = len(states)
        stats.seconds = time.perf_counter() - t0
    return result


def bracket(d: LayeredDiagram, N: int, stats: SweepStats | None = None) -> LaurentPoly:
    """<d>_N by the memoized layer sweep."""
    if d.crossings:
        raise DiagramError([Diagnostic(-1, "crossings need the link evaluator")])
    return sweep(d, N, None, stats)


# -- naive oracle ------------------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
        return ra


@dataclass
class _Graph:
    colors: dict[int, int] = field(default_factory=dict)
    # (e1, e2, e): e1 is left of e2 relative to the direction of travel
    vertices: list[tuple[int, int, int]] = field(default_factory=list)
    # (edge, turn) for every cup/cap passage, turn = +-1 in half units
    passages: list[tuple[int, int]] = field(default_factory=list)


def _build_graph(d: LayeredDiagram) -> _Graph:
    uf = _UnionFind()
    colors: dict[int, int] = {}
    raw_vertices = []
    raw_passages = []
    strands: list[int] = []  # edge id per profile position
    up: list[bool] = []
    for ev in d.layers:
        p = ev.pos
        if isinstance(ev, Cup):
            e = uf.make()
            colors[e] = ev.color
            strands[p:p] = [e, e]
            left_up = ev.up_side == "left"
            up[p:p] = [left_up, not left_up]
            raw_passages.append((e, _turn_sign(ev)))
        elif isinstance(ev, Cap):
            e = uf.union(strands[p], strands[p + 1])
            raw_passages.append((e, _turn_sign(ev)))
            del strands[p : p + 2]
            del up[p : p + 2]
        elif isinstance(ev, Join):
            a, b = strands[p], strands[p + 1]
            e = uf.make()
            colors[e] = colors[uf.find(a)] + colors[uf.find(b)]
            raw_vertices.append((a, b, e) if up[p] else (b, a, e))
            strands[p : p + 2] = [e]
            up[p : p + 2] = [up[p]]
        elif isinstance(ev, Fork):
            a = strands[p]
            l, r = uf.make(), uf.make()
            colors[l], colors[r] = ev.left_color, ev.right_color
            raw_vertices.append((l, r, a) if up[p] else (r, l, a))
            strands[p : p + 1] = [l, r]
            up[p : p + 1] = [up[p], up[p]]
        else:
            raise DiagramError([Diagnostic(-1, "crossings need the link evaluator")])
    g = _Graph()
    for e, c in colors.items():
        g.colors.setdefault(uf.find(e), c)
    g.vertices = [(uf.find(a), uf.find(b), uf.find(c)) for a, b, c in raw_vertices]
    g.passages = [(uf.find(e), t) for e, t in raw_passages]
    return g


def _enumerate_states(g: _Graph, N: int):
    """Yield every state as a dict edge -> frozenset of labels."""
    edges = sorted(g.colors)
    values = labels(N)
    touching: dict[int, list[tuple[int, int, int]]] = {e: [] for e in edges}
    for v in g.vertices:
        for e in v:
            touching[e].append(v)
    order = {e: i for i, e in enumerate(edges)}
    sigma: dict[int, frozenset] = {}

    def ok(e):
        for e1, e2, e0 in touching[e]:
            if max(order[e1], order[e2], order[e0]) != order[e]:
                continue
            a1, a2 = sigma[e1], sigma[e2]
            if a1 & a2 or (a1 | a2) != sigma[e0]:
                return False
        return True

    def rec(i):
        if i == len(edges):
            yield dict(sigma)
            return
        e = edges[i]
        for combo in combinations(values, g.colors[e]):
            sigma[e] = frozenset(combo)
            if ok(e):
                yield from rec(i + 1)
        sigma.pop(e, None)

    yield from rec(0)


def _circle_rotations(g: _Graph, sigma: dict) -> int:
    """rot(sigma) in half units, checking every labeled circle turns once."""
    turning: dict[int, int] = {}
    for e, t in g.passages:
        turning[e] = turning.get(e, 0) + t
    total = 0
    all_labels = set().union(*sigma.values()) if sigma else set()
    for a in sorted(all_labels):
        carrying = [e for e, s in sigma.items() if a in s]
        uf = {e: e for e in carrying}

        def find(x):
            while uf[x] != x:
                x = uf[x]
            return x

        for e1, e2, e0 in g.vertices:
            if a in sigma[e0]:
                branch = e1 if a in sigma[e1] else e2
                r1, r2 = find(branch), find(e0)
                if r1 != r2:
                    uf[r2] = r1
        circles: dict[int, int] = {}
        for e in carrying:
            r = find(e)
            circles[r] = circles.get(r, 0) + turning.get(e, 0)
        for r, half_turns in circles.items():
            if half_turns not in (2, -2):
                raise AssertionError(f"labeled circle turns {half_turns}/2 times; diagram is not embedded")
            total += a * half_turns // 2
    return 2 * total


def bracket_naive(d: LayeredDiagram, N: int) -> LaurentPoly:
    """<d>_N by full enumeration of states (exponential; oracle only)."""
    diags = validate(d)
    if diags:
        raise DiagramError(diags)
    if d.crossings:
        raise DiagramError([Diagnostic(-1, "crossings need the link evaluator")])
    g = _build_graph(d)
    if any(c > N for c in g.colors.values()):
        return LaurentPoly()
    acc: dict[int, int] = {}
    for sigma in _enumerate_states(g, N):
        half = _circle_rotations(g, sigma)
        for e1, e2, _ in g.vertices:
            c1, c2 = g.colors[e1], g.colors[e2]
            half += c1 * c2 - 2 * pi_count(sigma[e1], sigma[e2])
        acc[half] = acc.get(half, 0) + 1
    result = LaurentPoly(acc)
    if not result.is_integral():
        raise AssertionError(f"half-integer exponents survived the state sum: {result}")
    return result


def colored_rotation_number(d: LayeredDiagram) -> int:
    """Total rotation of the 1-colored circles after splitting every edge."""
    diags = validate(d)
    if diags:
        raise DiagramError(diags)
    half = 0
    prof: tuple[Strand, ...] = ()
    for i, ev in enumerate(d.layers):
        if isinstance(ev, Cup):
            half += ev.color * _turn_sign(ev)
        elif isinstance(ev, Cap):
            half += prof[ev.pos].color * _turn_sign(ev)
        prof = step(prof, ev, i)
    if half % 2:
        raise AssertionError("colored rotation number is not an integer")
    return half // 2
