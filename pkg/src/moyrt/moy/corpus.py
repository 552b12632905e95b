"""Small closed MOY graphs for cross-checking the two evaluators."""

from __future__ import annotations

import random

from .diagram import Cap, Cup, Fork, Join, LayeredDiagram, reverse_orientation
from .relations import RELATION_IDS, Tangle, build_relation, close, relation_grid, up

__all__ = ["random_graph", "relation_corpus", "oracle_corpus"]


def random_graph(rng: random.Random, max_events: int = 10, max_color: int = 3) -> LayeredDiagram:
    """A random closed graph built from forks and joins on upward strands.

    The tangle is closed with nested arcs (or the join-and-fork adapter when
    the colors at the top differ from the bottom), then possibly reversed.
    """
    while True:
        k = rng.randint(1, 2)
        bottom = [rng.randint(1, max_color) for _ in range(k)]
        prof = list(bottom)
        events = []
        for _ in range(rng.randint(0, 4)):
            moves = [("fork", i) for i, c in enumerate(prof) if c >= 2]
            moves += [("join", i) for i in range(len(prof) - 1)]
            if not moves:
                break
            kind, i = rng.choice(moves)
            if kind == "fork":
                a = rng.randint(1, prof[i] - 1)
                events.append(Fork(i, a, prof[i] - a))
                prof[i : i + 1] = [a, prof[i] - a]
            else:
                events.append(Join(i))
                prof[i : i + 2] = [prof[i] + prof[i + 1]]
        d = close(Tangle(up(*bottom), tuple(events)), rng.choice(("left", "right")))
        if len(d.layers) > max_events:
            continue
        if rng.random() < 0.5:
            d = reverse_orientation(d)
        if len(d.layers) + 2 <= max_events and rng.random() < 0.2:
            c = rng.randint(1, max_color)
            side = rng.choice(("left", "right"))
            d = d.replace(layers=d.layers + (Cup(0, c, side), Cap(0, side)))
        return d


def relation_corpus(max_N: int = 3, max_events: int = 10) -> list[LayeredDiagram]:
    """Every closed picture from the skein relations with at most max_events layers."""
    seen: dict = {}
    for rid in RELATION_IDS:
        for params, N in relation_grid(rid, max_N):
            lhs, rhs = build_relation(rid, params, N)
            for _, d in lhs + rhs:
                if 0 < len(d.layers) <= max_events:
                    seen.setdefault(d.layers, d)
    return list(seen.values())


def oracle_corpus(seed: int = 0, random_count: int = 30, max_events: int = 10) -> list[LayeredDiagram]:
    rng = random.Random(seed)
    return relation_corpus(3, max_events) + [random_graph(rng, max_events) for _ in range(random_count)]
