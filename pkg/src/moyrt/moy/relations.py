"""Local MOY pictures as tangles, their closures, and the skein relations.

A :class:`Tangle` is a layered fragment with a given bottom profile.  The
relations compare linear combinations of tangles with the same boundary;
closing every term with the same closure turns each relation into an
identity between brackets of closed graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..qalg import LaurentPoly, ONE, quantum_binomial, quantum_int
from .diagram import Cap, Cup, Fork, Join, LayeredDiagram, Strand, reverse_orientation, step
from .state_sum import bracket

__all__ = [
    "Tangle",
    "ladder_events",
    "close",
    "build_relation",
    "check_relation",
    "relation_grid",
    "RELATION_IDS",
]

RELATION_IDS = (1, 2, 3, 4, 5, 6, 7)


@dataclass(frozen=True)
class Tangle:
    bottom: tuple[Strand, ...]
    events: tuple = ()

    @property
    def top(self) -> tuple[Strand, ...]:
        prof = self.bottom
        for i, ev in enumerate(self.events):
            prof = step(prof, ev, i)
        return prof


def up(*colors: int) -> tuple[Strand, ...]:
    return tuple(Strand(c, True) for c in colors)


def ladder_events(left: int, right: int, rungs: Sequence[tuple[str, int]], pos: int = 0):
    """Events for two upward strands joined by horizontal rungs.

    ``rungs`` lists (direction, color) bottom to top, direction being
    "to_left" (flows from the right strand into the left one) or "to_right".
    Edges of color 0 are dropped, so a strand may vanish and reappear.
    Returns (events, (left, right)).
    """
    events = []
    for direction, k in rungs:
        if k < 0:
            raise ValueError(f"negative rung color {k}")
        if k == 0:
            continue
        if direction == "to_left":
            if right < k:
                raise ValueError(f"rung {k} exceeds right strand {right}")
            if left == 0 and right == k:
                pass
            elif left == 0:
                events.append(Fork(pos, k, right - k))
            elif right == k:
                events.append(Join(pos))
            else:
                events += [Fork(pos + 1, k, right - k), Join(pos)]
            left, right = left + k, right - k
        elif direction == "to_right":
            if left < k:
                raise ValueError(f"rung {k} exceeds left strand {left}")
            if right == 0 and left == k:
                pass
            elif right == 0:
                events.append(Fork(pos, left - k, k))
            elif left == k:
                events.append(Join(pos))
            else:
                events += [Fork(pos, left - k, k), Join(pos + 1)]
            left, right = left - k, right + k
        else:
            raise ValueError(f"unknown rung direction {direction!r}")
    return events, (left, right)


# -- closures ------------------------------------------------------------------------


def _shift(ev, k):
    from .state_sum import _shift_event

    return _shift_event(ev, k)


def _nested_right(bottom: tuple[Strand, ...], events, top: tuple[Strand, ...]):
    # return strands run down the right side; strand i's arc nests outside strand i+1's
    k = len(bottom)
    out = []
    for i, s in enumerate(bottom):
        out.append(Cup(i, s.color, "left" if s.up else "right"))
    out += list(events)
    for i in reversed(range(k)):
        out.append(Cap(i, "left" if top[i].up else "right"))
    return out


def _nested_left(bottom, events, top):
    k = len(bottom)
    out = []
    for j in range(k):
        s = bottom[k - 1 - j]
        out.append(Cup(j, s.color, "right" if s.up else "left"))
    out += [_shift(ev, k) for ev in events]
    for i in range(k):
        out.append(Cap(k - 1 - i, "right" if top[i].up else "left"))
    return out


def _upward_adapter(top: tuple[Strand, ...], bottom: tuple[Strand, ...]):
    # join every top strand into one, then fork into the bottom colors
    evs = [Join(0) for _ in range(len(top) - 1)]
    rest = sum(s.color for s in bottom)
    for i, s in enumerate(bottom[:-1]):
        rest -= s.color
        evs.append(Fork(i, s.color, rest))
    return evs


def _pairs_closable(prof: tuple[Strand, ...]) -> bool:
    if len(prof) % 2:
        return False
    return all(
        prof[i].color == prof[i + 1].color and prof[i].up != prof[i + 1].up for i in range(0, len(prof), 2)
    )


def close(t: Tangle, side: str = "right") -> LayeredDiagram:
    """Close a tangle into a graph.

    Matching bottom and top profiles get nested arcs around ``side``.
    All-upward tangles with different profiles first get a fixed adapter on top
    (join everything, fork back into the bottom colors).  Profiles made of
    adjacent opposite pairs are capped off directly.
    """
    bottom, top = t.bottom, t.top
    events = list(t.events)
    if bottom != top:
        if all(s.up for s in bottom + top) and sum(s.color for s in bottom) == sum(s.color for s in top):
            events += _upward_adapter(top, bottom)
            top = bottom
        elif _pairs_closable(bottom) and _pairs_closable(top):
            cups = [Cup(0, bottom[i].color, "left" if bottom[i].up else "right") for i in reversed(range(0, len(bottom), 2))]
            caps = [Cap(0, "left" if top[i].up else "right") for i in range(0, len(top), 2)]
            return LayeredDiagram(tuple(cups + events + caps))
        else:
            raise ValueError("no standard closure for this boundary")
    builder = _nested_right if side == "right" else _nested_left
    return LayeredDiagram(tuple(builder(bottom, events, top)))


# -- relation pictures -------------------------------------------------------------------

Side = list  # list of (LaurentPoly, Tangle)


def _circle(m: int) -> LayeredDiagram:
    return LayeredDiagram((Cup(0, m, "right"), Cap(0, "right")))


def _check_colors(*colors: int):
    if any(c < 0 for c in colors):
        raise ValueError(f"relation parameters give a negative color: {colors}")


def _relation_tangles(rid: int, params: dict, N: int) -> tuple[Side, Side]:
    if rid == 2:
        i, j, k = params["i"], params["j"], params["k"]
        if min(i, j, k) < 1:
            raise ValueError("relation 2 needs i, j, k >= 1")
        b = up(i + j + k)
        lhs = Tangle(b, (Fork(0, i, j + k), Fork(1, j, k)))
        rhs = Tangle(b, (Fork(0, i + j, k), Fork(0, i, j)))
        return [(ONE, lhs)], [(ONE, rhs)]
    if rid == 3:
        m, n = params["m"], params["n"]
        if m < 1 or n < 1:
            raise ValueError("relation 3 needs m, n >= 1")
        loop = Tangle(up(m), (Cup(1, n, "left"), Join(0), Fork(0, m, n), Cap(1, "left")))
        coef = quantum_binomial(N - m, n) if N >= m else LaurentPoly()
        return [(ONE, loop)], [(coef, Tangle(up(m)))]
    if rid == 4:
        m, n = params["m"], params["n"]
        if m < 1 or n < 1:
            raise ValueError("relation 4 needs m, n >= 1")
        digon = Tangle(up(m + n), (Fork(0, m, n), Join(0)))
        return [(ONE, digon)], [(quantum_binomial(m + n, n), Tangle(up(m + n)))]
    if rid == 5:
        m = params["m"]
        if m < 1 or m + 1 > N:
            raise ValueError("relation 5 needs 1 <= m and m + 1 <= N")
        bottom = (Strand(1, False), Strand(1, True))
        square = Tangle(
            bottom,
            (Cup(1, m, "right"), Join(0), Join(1), Fork(0, m, 1), Fork(2, 1, m), Cap(1, "right")),
        )
        straight = Tangle(bottom, (Cap(0, "right"), Cup(0, m, "right")))
        if m == 1:
            through = Tangle(bottom)
        else:
            through = Tangle(bottom, (Cup(1, m - 1, "right"), Join(0), Join(1)))
        return [(ONE, square)], [(ONE, straight), (quantum_int(N - m - 1), through)]
    if rid == 6:
        l, m, n = params["l"], params["m"], params["n"]
        if l < 1 or m < 1 or not 0 <= n <= m:
            raise ValueError("relation 6 needs l, m >= 1 and 0 <= n <= m")
        lhs, _ = ladder_events(1, m + l - 1, [("to_left", l + n - 1), ("to_right", n)])
        r0, _ = ladder_events(1, m + l - 1, [("to_left", l - 1)])
        r1, _ = ladder_events(1, m + l - 1, [("to_right", 1), ("to_left", l)])
        b = up(1, m + l - 1)
        return (
            [(ONE, Tangle(b, tuple(lhs)))],
            [
                (quantum_binomial(m - 1, n), Tangle(b, tuple(r0))),
                (quantum_binomial(m - 1, n - 1), Tangle(b, tuple(r1))),
            ],
        )
    if rid == 7:
        k, l, m, n = params["k"], params["l"], params["m"], params["n"]
        if m < 1 or n < 1 or l < 0:
            raise ValueError("relation 7 needs m, n >= 1 and l >= 0")
        _check_colors(k, n + k - m, m + l - k)
        b = up(n, m + l)
        lhs, _ = ladder_events(n, m + l, [("to_left", k), ("to_right", n + k - m)])
        rhs = []
        for j in range(max(m - n, 0), m + 1):
            coef = quantum_binomial(l, k - j)
            if coef.is_zero():
                continue
            evs, _ = ladder_events(n, m + l, [("to_right", n + j - m), ("to_left", j)])
            rhs.append((coef, Tangle(b, tuple(evs))))
        return [(ONE, Tangle(b, tuple(lhs)))], rhs
    raise ValueError(f"unknown relation {rid}")


def build_relation(rid: int, params: dict, N: int, side: str = "right"):
    """Both sides of relation ``rid`` as lists of (coefficient, closed diagram)."""
    if rid == 1:
        m = params["m"]
        if m < 1:
            raise ValueError("relation 1 needs m >= 1")
        coef = quantum_binomial(N, m) if m <= N else LaurentPoly()
        return [(ONE, _circle(m))], [(coef, LayeredDiagram())]
    lhs, rhs = _relation_tangles(rid, params, N)
    return [(c, close(t, side)) for c, t in lhs], [(c, close(t, side)) for c, t in rhs]


def _evaluate(side, N: int) -> LaurentPoly:
    total = LaurentPoly()
    for coef, d in side:
        total = total + coef * bracket(d, N)
    return total


def check_relation(rid: int, params: dict, N: int, reverse: bool = False, side: str = "right") -> bool:
    """Evaluate both sides with the sweep and compare exactly."""
    lhs, rhs = build_relation(rid, params, N, side)
    if reverse:
        lhs = [(c, reverse_orientation(d)) for c, d in lhs]
        rhs = [(c, reverse_orientation(d)) for c, d in rhs]
    return _evaluate(lhs, N) == _evaluate(rhs, N)


def relation_grid(rid: int, max_N: int) -> list[tuple[dict, int]]:
    """All parameter points for relation ``rid`` with N <= max_N."""
    out = []
    for N in range(1, max_N + 1):
        if rid == 1:
            out += [({"m": m}, N) for m in range(1, N + 1)]
        elif rid == 2:
            out += [
                ({"i": i, "j": j, "k": k}, N)
                for i in range(1, N + 1)
                for j in range(1, N + 1)
                for k in range(1, N + 1)
                if i + j + k <= N
            ]
        elif rid in (3, 4):
            out += [({"m": m, "n": n}, N) for m in range(1, N + 1) for n in range(1, N + 1) if m + n <= N]
        elif rid == 5:
            out += [({"m": m}, N) for m in range(1, N)]
        elif rid == 6:
            out += [
                ({"l": l, "m": m, "n": n}, N)
                for l in range(1, N + 2)
                for m in range(1, N + 1)
                for n in range(0, m + 1)
                if m + l - 1 <= N
            ]
        elif rid == 7:
            for l in range(0, N + 1):
                for m in range(1, N + 1):
                    for n in range(1, N + 1):
                        if m + l > N or n + l > N:
                            continue
                        for k in range(0, m + l + 1):
                            if n + k - m >= 0:
                                out.append(({"k": k, "l": l, "m": m, "n": n}, N))
        else:
            raise ValueError(f"unknown relation {rid}")
    return out
