"""Layered (Morse) presentation of colored MOY graphs and link diagrams.

A diagram is read bottom to top.  Between layers the horizontal level meets a
row of strands, the *profile*; each strand carries a color and a direction
(up or down).  Every event acts on one or two adjacent strands starting at
``pos``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "Cup",
    "Cap",
    "Join",
    "Fork",
    "Crossing",
    "Event",
    "Strand",
    "LayeredDiagram",
    "Diagnostic",
    "DiagramError",
    "validate",
    "profiles",
    "reverse_orientation",
    "mirror_crossings",
    "disjoint_union",
]

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class Cup:
    pos: int
    color: int
    up_side: str = RIGHT


@dataclass(frozen=True)
class Cap:
    pos: int
    up_side: str = RIGHT


@dataclass(frozen=True)
class Join:
    pos: int
    # optional claimed color of the merged strand, checked by validate()
    color: int | None = None


@dataclass(frozen=True)
class Fork:
    pos: int
    left_color: int
    right_color: int


@dataclass(frozen=True)
class Crossing:
    pos: int
    sign: int = 1  # +1 or -1


Event = Union[Cup, Cap, Join, Fork, Crossing]


@dataclass(frozen=True)
class Strand:
    color: int
    up: bool

    def reversed(self) -> "Strand":
        return Strand(self.color, not self.up)

    def __str__(self):
        return f"{self.color}{'^' if self.up else 'v'}"


@dataclass(frozen=True)
class LayeredDiagram:
    layers: tuple = ()
    kind: str = "graph"
    N: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))

    def __len__(self):
        return len(self.layers)

    @property
    def crossings(self) -> list[tuple[int, Crossing]]:
        return [(i, ev) for i, ev in enumerate(self.layers) if isinstance(ev, Crossing)]

    @property
    def has_vertices(self) -> bool:
        return any(isinstance(ev, (Join, Fork)) for ev in self.layers)

    def replace(self, **kw) -> "LayeredDiagram":
        data = {"layers": self.layers, "kind": self.kind, "N": self.N}
        data.update(kw)
        return LayeredDiagram(**data)


@dataclass(frozen=True)
class Diagnostic:
    layer: int  # -1 for whole-diagram problems
    reason: str
    detail: str = ""

    def __str__(self):
        where = "diagram" if self.layer < 0 else f"layer {self.layer}"
        return f"{where}: {self.reason}" + (f" ({self.detail})" if self.detail else "")


class DiagramError(ValueError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(map(str, diagnostics)))


def step(profile: tuple[Strand, ...], ev: Event, layer: int = 0) -> tuple[Strand, ...]:
    """Profile after applying one event; raises DiagramError on inconsistency."""

    def fail(reason, detail=""):
        raise DiagramError([Diagnostic(layer, reason, detail)])

    p = list(profile)
    pos = ev.pos
    if isinstance(ev, Cup):
        if not 0 <= pos <= len(p):
            fail("position out of range", f"cup at {pos} with {len(p)} strands")
        if ev.color < 1:
            fail("bad color", f"cup color {ev.color}")
        if ev.up_side not in (LEFT, RIGHT):
            fail("bad up_side", repr(ev.up_side))
        left_up = ev.up_side == LEFT
        p[pos:pos] = [Strand(ev.color, left_up), Strand(ev.color, not left_up)]
        return tuple(p)
    if not 0 <= pos or pos + (0 if isinstance(ev, Fork) else 1) >= len(p):
        fail("position out of range", f"{type(ev).__name__.lower()} at {pos} with {len(p)} strands")
    if isinstance(ev, Cap):
        a, b = p[pos], p[pos + 1]
        if ev.up_side not in (LEFT, RIGHT):
            fail("bad up_side", repr(ev.up_side))
        if a.color != b.color:
            fail("cap color mismatch", f"{a.color} vs {b.color}")
        if a.up != (ev.up_side == LEFT) or b.up != (ev.up_side == RIGHT):
            fail("cap orientation mismatch", f"strands {a}, {b} with up_side={ev.up_side}")
        del p[pos : pos + 2]
        return tuple(p)
    if isinstance(ev, Join):
        a, b = p[pos], p[pos + 1]
        if a.up != b.up:
            fail("join orientation mismatch", f"strands {a}, {b}")
        total = a.color + b.color
        if ev.color is not None and ev.color != total:
            fail("flow conservation", f"{a.color} + {b.color} != {ev.color}")
        p[pos : pos + 2] = [Strand(total, a.up)]
        return tuple(p)
    if isinstance(ev, Fork):
        a = p[pos]
        if ev.left_color < 1 or ev.right_color < 1:
            fail("bad color", f"fork colors {ev.left_color}, {ev.right_color}")
        if ev.left_color + ev.right_color != a.color:
            fail("flow conservation", f"{ev.left_color} + {ev.right_color} != {a.color}")
        p[pos : pos + 1] = [Strand(ev.left_color, a.up), Strand(ev.right_color, a.up)]
        return tuple(p)
    if isinstance(ev, Crossing):
        a, b = p[pos], p[pos + 1]
        if not (a.up and b.up):
            fail("crossing strands must point up", f"strands {a}, {b}")
        if ev.sign not in (1, -1):
            fail("bad crossing sign", repr(ev.sign))
        p[pos], p[pos + 1] = b, a
        return tuple(p)
    fail("unknown event", type(ev).__name__)


def profiles(d: LayeredDiagram, bottom: Iterable[Strand] = ()) -> list[tuple[Strand, ...]]:
    """Profiles at every level: entry i is the profile below layer i (len = layers + 1)."""
    prof = tuple(bottom)
    out = [prof]
    for i, ev in enumerate(d.layers):
        prof = step(prof, ev, i)
        out.append(prof)
    return out


def validate(d: LayeredDiagram, closed: bool = True) -> list[Diagnostic]:
    """Structured diagnostics; an empty list means the diagram is valid."""
    diags = []
    if d.kind not in ("graph", "link"):
        diags.append(Diagnostic(-1, "bad kind", repr(d.kind)))
    if d.N is not None and (not isinstance(d.N, int) or d.N < 1):
        diags.append(Diagnostic(-1, "bad N", repr(d.N)))
    prof: tuple[Strand, ...] = ()
    for i, ev in enumerate(d.layers):
        if isinstance(ev, Crossing) and d.kind == "graph":
            diags.append(Diagnostic(i, "crossing in a graph diagram"))
        try:
            prof = step(prof, ev, i)
        except DiagramError as exc:
            diags.extend(exc.diagnostics)
            return diags
    if closed and prof:
        diags.append(Diagnostic(len(d.layers), "not closed", f"{len(prof)} strands left at the top"))
    return diags


def check(d: LayeredDiagram) -> None:
    diags = validate(d)
    if diags:
        raise DiagramError(diags)


def reverse_orientation(d: LayeredDiagram) -> LayeredDiagram:
    """Reverse every strand; crossings cannot be reversed in upward form."""
    out = []
    for ev in d.layers:
        if isinstance(ev, Cup):
            out.append(Cup(ev.pos, ev.color, LEFT if ev.up_side == RIGHT else RIGHT))
        elif isinstance(ev, Cap):
            out.append(Cap(ev.pos, LEFT if ev.up_side == RIGHT else RIGHT))
        elif isinstance(ev, Crossing):
            raise ValueError("cannot reverse a diagram with upward crossings")
        else:
            out.append(ev)
    return d.replace(layers=tuple(out))


def mirror_crossings(d: LayeredDiagram) -> LayeredDiagram:
    """Switch over/under at every crossing."""
    return d.replace(
        layers=tuple(Crossing(ev.pos, -ev.sign) if isinstance(ev, Crossing) else ev for ev in d.layers)
    )


def disjoint_union(a: LayeredDiagram, b: LayeredDiagram) -> LayeredDiagram:
    """Stack b above a; both must be closed."""
    kind = "link" if "link" in (a.kind, b.kind) else "graph"
    return LayeredDiagram(a.layers + b.layers, kind=kind, N=a.N if a.N is not None else b.N)
