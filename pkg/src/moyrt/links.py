"""Colored link diagrams: crossing resolution, the bracket, RT normalization.

Crossings are stored with both strands pointing up.  Reading a crossing from
below, ``n`` is the color entering at the bottom left and ``m`` the color
entering at the bottom right; the colors trade places going through.  A
positive crossing has its over strand running bottom left to top right.

Both signs resolve into the same family of ladders Gamma_k (k from
max(0, m-n) to m): the bottom rung carries k from right to left, the top rung
carries n+k-m back from left to right.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .moy.diagram import (
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
from .moy.relations import Tangle, close, ladder_events, up
from .moy.state_sum import _shift_event, bracket, bracket_naive, colored_rotation_number, sweep
from .qalg import LaurentPoly, ONE

__all__ = [
    "Resolution",
    "resolve_crossing",
    "shift_factor",
    "crossing_colors",
    "resolutions",
    "bracket_link",
    "rt_polynomial",
    "total_color",
    "adjusted_rotation",
    "rotations_over_resolutions",
    "REIDEMEISTER_MOVES",
    "reidemeister_pairs",
    "reidemeister_grid",
    "random_link_diagram",
    "thread_count",
]

ENGINES = ("fused", "expand", "naive")


@dataclass(frozen=True)
class Resolution:
    k: int
    coefficient: LaurentPoly
    events: tuple  # ladder events relative to the crossing position


def resolve_crossing(m: int, n: int, sign: int) -> list[Resolution]:
    """The weighted ladders replacing a crossing (m bottom right, n bottom left)."""
    if m < 1 or n < 1:
        raise ValueError(f"crossing colors must be positive, got ({m}, {n})")
    if sign not in (1, -1):
        raise ValueError(f"crossing sign must be +1 or -1, got {sign}")
    out = []
    for k in range(max(0, m - n), m + 1):
        # (-1)^(m-k) and (-1)^(k-m) agree, only the q power flips with the sign
        coef = LaurentPoly.monomial(2 * sign * (k - m), (-1) ** (m - k))
        events, ends = ladder_events(n, m, [("to_left", k), ("to_right", n + k - m)])
        assert ends == (m, n)
        out.append(Resolution(k, coef, tuple(events)))
    return out


def shift_factor(m: int, n: int, sign: int, N: int) -> LaurentPoly:
    """Per-crossing normalization s(c); trivial unless both colors agree."""
    if m != n:
        return ONE
    return LaurentPoly.monomial(2 * sign * m * (N + 1 - m), (-1) ** m)


def _expander(m: int, n: int, sign: int):
    return [(r.coefficient, r.events) for r in resolve_crossing(m, n, sign)]


def _check_link(d: LayeredDiagram) -> None:
    diags = [x for x in validate(d) if x.reason != "crossing in a graph diagram"]
    if diags:
        raise DiagramError(diags)


def crossing_colors(d: LayeredDiagram) -> list[tuple[int, int, int, int]]:
    """(layer, m, n, sign) for every crossing, m being the bottom-right color."""
    _check_link(d)
    out = []
    prof: tuple[Strand, ...] = ()
    for i, ev in enumerate(d.layers):
        if isinstance(ev, Crossing):
            out.append((i, prof[ev.pos + 1].color, prof[ev.pos].color, ev.sign))
        prof = step(prof, ev, i)
    return out


def resolutions(d: LayeredDiagram) -> list[tuple[LaurentPoly, tuple[int, ...], LayeredDiagram]]:
    """Every complete resolution as (coefficient, chosen k per crossing, graph)."""
    cols = crossing_colors(d)
    per = [resolve_crossing(m, n, s) for _, m, n, s in cols]
    out = []
    for choice in itertools.product(*per):
        coef = ONE
        layers = []
        it = iter(choice)
        for ev in d.layers:
            if isinstance(ev, Crossing):
                r = next(it)
                coef = coef * r.coefficient
                layers += [_shift_event(x, ev.pos) for x in r.events]
            else:
                layers.append(ev)
        graph = LayeredDiagram(tuple(layers), kind="graph", N=d.N)
        out.append((coef, tuple(r.k for r in choice), graph))
    return out


def thread_count() -> int:
    """Worker cap from MOYRT_THREADS (default 1, i.e. sequential)."""
    raw = os.environ.get("MOYRT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map, run in worker processes when MOYRT_THREADS > 1."""
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _eval_graph(args):
    graph, N, naive = args
    return bracket_naive(graph, N) if naive else bracket(graph, N)


def bracket_link(d: LayeredDiagram, N: int, engine: str = "fused", stats=None) -> LaurentPoly:
    """<d>_N of a colored link diagram.

    ``expand`` sums over all complete resolutions, evaluating each graph with
    the layer sweep; ``naive`` does the same with the brute-force oracle;
    ``fused`` carries the crossing sums inside a single sweep.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    _check_link(d)
    if engine == "fused":
        return sweep(d.replace(kind="link"), N, _expander, stats)
    terms = resolutions(d)
    values = parallel_map(_eval_graph, [(g, N, engine == "naive") for _, _, g in terms])
    total = LaurentPoly()
    for (coef, _, _), v in zip(terms, values):
        total = total + coef * v
    return total


def shift_product(d: LayeredDiagram, N: int) -> LaurentPoly:
    total = ONE
    for _, m, n, s in crossing_colors(d):
        total = total * shift_factor(m, n, s, N)
    return total


def rt_polynomial(d: LayeredDiagram, N: int, engine: str = "fused") -> LaurentPoly:
    """RT_D(q) = <D>_N times the product of shift factors."""
    return bracket_link(d, N, engine) * shift_product(d, N)


def total_color(d: LayeredDiagram) -> int:
    """Sum over link components of the component color."""
    _check_link(d)
    parent: list[int] = []

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    color: dict[int, int] = {}
    ids: list[int] = []
    for i, ev in enumerate(d.layers):
        if isinstance(ev, (Join, Fork)):
            raise DiagramError([Diagnostic(i, "total color needs a link diagram without vertices")])
        if isinstance(ev, Cup):
            parent.append(len(parent))
            color[len(parent) - 1] = ev.color
            ids[ev.pos : ev.pos] = [len(parent) - 1] * 2
        elif isinstance(ev, Cap):
            a, b = find(ids[ev.pos]), find(ids[ev.pos + 1])
            parent[b] = a
            del ids[ev.pos : ev.pos + 2]
        elif isinstance(ev, Crossing):
            ids[ev.pos], ids[ev.pos + 1] = ids[ev.pos + 1], ids[ev.pos]
    return sum(color[r] for r in {find(x) for x in range(len(parent))})


def _adjustment(d: LayeredDiagram) -> int:
    return sum(m for _, m, n, _ in crossing_colors(d) if m == n)


def adjusted_rotation(d: LayeredDiagram) -> int:
    """cr of the minimal-index resolution plus m for every equal-colored crossing."""
    cols = crossing_colors(d)
    layers = []
    it = iter(cols)
    for ev in d.layers:
        if isinstance(ev, Crossing):
            _, m, n, s = next(it)
            r = resolve_crossing(m, n, s)[0]
            layers += [_shift_event(x, ev.pos) for x in r.events]
        else:
            layers.append(ev)
    graph = LayeredDiagram(tuple(layers))
    return colored_rotation_number(graph) + _adjustment(d)


def rotations_over_resolutions(d: LayeredDiagram) -> set[int]:
    """ĉr computed from every complete resolution; a singleton when well defined."""
    a = _adjustment(d)
    return {colored_rotation_number(g) + a for _, _, g in resolutions(d)}


# -- Reidemeister pairs ---------------------------------------------------------------

REIDEMEISTER_MOVES = ("R1+", "R1-", "R2a", "R2b", "R3")

# braid words (position, sign) on three strands; each pair differs by one triangle move
_R3_WORDS = (
    (((0, 1), (1, 1), (0, 1)), ((1, 1), (0, 1), (1, 1))),
    (((0, -1), (1, -1), (0, -1)), ((1, -1), (0, -1), (1, -1))),
    (((0, 1), (1, 1), (0, -1)), ((1, -1), (0, 1), (1, 1))),
    (((0, -1), (1, 1), (0, 1)), ((1, 1), (0, 1), (1, -1))),
    (((0, -1), (1, -1), (0, 1)), ((1, 1), (0, -1), (1, -1))),
    (((0, 1), (1, -1), (0, -1)), ((1, -1), (0, -1), (1, 1))),
)
_VARIANTS = {"R1+": 2, "R1-": 2, "R2a": 2, "R2b": 2, "R3": len(_R3_WORDS)}
_ARITY = {"R1+": 1, "R1-": 1, "R2a": 2, "R2b": 2, "R3": 3}


def _link(t: Tangle, N) -> LayeredDiagram:
    return close(t).replace(kind="link", N=N)


def reidemeister_pairs(move: str, colors: Sequence[int], N: int | None = None, variant: int = 0):
    """Two closed link diagrams that differ by one Reidemeister move.

    R1 variants: 0 is a curl to the right of the strand, 1 to the left.
    R2a variants choose the sign of the lower crossing; R2b variants choose
    which strand passes over.  R3 variants run through the sign patterns of
    the braid relation.  Everything is closed with nested arcs on the right.
    """
    if move not in REIDEMEISTER_MOVES:
        raise ValueError(f"unknown move {move!r}")
    colors = tuple(colors)
    if len(colors) != _ARITY[move] or any(c < 1 for c in colors):
        raise ValueError(f"{move} needs {_ARITY[move]} positive colors, got {colors}")
    if not 0 <= variant < _VARIANTS[move]:
        raise ValueError(f"{move} has variants 0..{_VARIANTS[move] - 1}")
    if move in ("R1+", "R1-"):
        (m,) = colors
        sign = 1 if move == "R1+" else -1
        if variant == 0:
            curl = (Cup(1, m, "left"), Crossing(0, sign), Cap(1, "left"))
        else:
            curl = (Cup(0, m, "right"), Crossing(1, sign), Cap(0, "right"))
        b = up(m)
        return _link(Tangle(b, curl), N), _link(Tangle(b), N)
    if move == "R2a":
        s = 1 if variant == 0 else -1
        b = up(*colors)
        return _link(Tangle(b, (Crossing(0, s), Crossing(0, -s))), N), _link(Tangle(b), N)
    if move == "R2b":
        a, c = colors
        s1, s2 = (1, -1) if variant == 0 else (-1, 1)
        b = (Strand(a, True), Strand(c, False))
        weave = (
            Cup(0, c, "right"),
            Crossing(1, s1),
            Cap(2, "left"),
            Cup(2, c, "left"),
            Crossing(1, s2),
            Cap(0, "right"),
        )
        return _link(Tangle(b, weave), N), _link(Tangle(b), N)
    lhs, rhs = _R3_WORDS[variant]
    # the half twist undoes the permutation so the closure matches colors
    suffix = (Crossing(0, 1), Crossing(1, 1), Crossing(0, 1))
    b = up(*colors)
    d0 = Tangle(b, tuple(Crossing(p, s) for p, s in lhs) + suffix)
    d1 = Tangle(b, tuple(Crossing(p, s) for p, s in rhs) + suffix)
    return _link(d0, N), _link(d1, N)


def reidemeister_grid(max_color: int, max_N: int, moves: Sequence[str] = REIDEMEISTER_MOVES):
    """(move, colors, N, variant) for every pair with colors <= max_color, N <= max_N."""
    out = []
    for move in moves:
        for N in range(1, max_N + 1):
            for colors in itertools.product(range(1, max_color + 1), repeat=_ARITY[move]):
                for v in range(_VARIANTS[move]):
                    out.append((move, colors, N, v))
    return out


# -- random corpus ------------------------------------------------------------------------


def _curl(pos: int, color: int, sign: int, left: bool):
    if left:
        return [Cup(pos, color, "right"), Crossing(pos + 1, sign), Cap(pos, "right")]
    return [Cup(pos + 1, color, "left"), Crossing(pos, sign), Cap(pos + 1, "left")]


def random_link_diagram(
    rng: random.Random,
    max_strands: int = 3,
    max_color: int = 3,
    max_crossings: int = 5,
    N: int | None = None,
) -> LayeredDiagram:
    """A closed braid with consistent component colors, decorated with curls.

    Components get independent random colors.  Curls of either sign and
    handedness are spliced in, and the closure side is random, so rotation
    numbers vary as well as crossing data.
    """
    k = rng.randint(1, max_strands)
    word = []
    if k > 1:
        word = [(rng.randrange(k - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, max_crossings))]
    # strand at bottom position i ends at top position perm[i]
    where = list(range(k))
    for p, _ in word:
        where[p], where[p + 1] = where[p + 1], where[p]
    perm = [0] * k
    for top_pos, start in enumerate(where):
        perm[start] = top_pos
    colors: list[int | None] = [None] * k
    for i in range(k):
        if colors[i] is None:
            c = rng.randint(1, max_color)
            j = i
            while colors[j] is None:
                colors[j] = c
                j = perm[j]
    events = []
    prof = list(colors)
    for p, s in word:
        if rng.random() < 0.3:
            q = rng.randrange(k)
            events += _curl(q, prof[q], rng.choice((1, -1)), rng.random() < 0.5)
        events.append(Crossing(p, s))
        prof[p], prof[p + 1] = prof[p + 1], prof[p]
    if rng.random() < 0.5:
        q = rng.randrange(k)
        events += _curl(q, prof[q], rng.choice((1, -1)), rng.random() < 0.5)
    t = Tangle(up(*colors), tuple(events))
    return close(t, rng.choice(("left", "right"))).replace(kind="link", N=N)
