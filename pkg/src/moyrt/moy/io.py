"""Strict reader/writer for the ``moy-layered/1`` JSON diagram format."""

from __future__ import annotations

import json
from pathlib import Path

from .diagram import Cap, Crossing, Cup, Fork, Join, LayeredDiagram

FORMAT = "moy-layered/1"

_TOP_KEYS = ("format", "kind", "N", "layers")
_EVENT_KEYS = {
    "cup": ("event", "pos", "color", "up_side"),
    "cap": ("event", "pos", "up_side"),
    "join": ("event", "pos", "color"),
    "fork": ("event", "pos", "left_color", "right_color"),
    "crossing": ("event", "pos", "sign"),
}
_REQUIRED = {
    "cup": {"event", "pos", "color", "up_side"},
    "cap": {"event", "pos", "up_side"},
    "join": {"event", "pos"},
    "fork": {"event", "pos", "left_color", "right_color"},
    "crossing": {"event", "pos", "sign"},
}


class FormatError(ValueError):
    pass


def _int(rec, key, where):
    v = rec[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{where}: field {key!r} must be an integer, got {v!r}")
    return v


def _event_from_json(rec, i):
    where = f"layer {i}"
    if not isinstance(rec, dict):
        raise FormatError(f"{where}: event must be an object")
    name = rec.get("event")
    if name not in _EVENT_KEYS:
        raise FormatError(f"{where}: unknown event {name!r}")
    unknown = set(rec) - set(_EVENT_KEYS[name])
    if unknown:
        raise FormatError(f"{where}: unknown fields {sorted(unknown)}")
    missing = _REQUIRED[name] - set(rec)
    if missing:
        raise FormatError(f"{where}: missing fields {sorted(missing)}")
    pos = _int(rec, "pos", where)
    if name == "cup":
        side = rec["up_side"]
        if side not in ("left", "right"):
            raise FormatError(f"{where}: up_side must be 'left' or 'right'")
        return Cup(pos, _int(rec, "color", where), side)
    if name == "cap":
        side = rec["up_side"]
        if side not in ("left", "right"):
            raise FormatError(f"{where}: up_side must be 'left' or 'right'")
        return Cap(pos, side)
    if name == "join":
        return Join(pos, _int(rec, "color", where) if "color" in rec else None)
    if name == "fork":
        return Fork(pos, _int(rec, "left_color", where), _int(rec, "right_color", where))
    sign = rec["sign"]
    if sign not in ("+", "-"):
        raise FormatError(f"{where}: sign must be '+' or '-'")
    return Crossing(pos, 1 if sign == "+" else -1)


def from_json(data) -> LayeredDiagram:
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    unknown = set(data) - set(_TOP_KEYS)
    if unknown:
        raise FormatError(f"unknown top-level fields {sorted(unknown)}")
    if data.get("format") != FORMAT:
        raise FormatError(f"format must be {FORMAT!r}, got {data.get('format')!r}")
    kind = data.get("kind")
    if kind not in ("graph", "link"):
        raise FormatError(f"kind must be 'graph' or 'link', got {kind!r}")
    N = data.get("N")
    if N is not None and (isinstance(N, bool) or not isinstance(N, int) or N < 1):
        raise FormatError(f"N must be a positive integer, got {N!r}")
    layers = data.get("layers")
    if not isinstance(layers, list):
        raise FormatError("layers must be an array")
    return LayeredDiagram(tuple(_event_from_json(rec, i) for i, rec in enumerate(layers)), kind=kind, N=N)


def _event_to_json(ev) -> dict:
    if isinstance(ev, Cup):
        return {"event": "cup", "pos": ev.pos, "color": ev.color, "up_side": ev.up_side}
    if isinstance(ev, Cap):
        return {"event": "cap", "pos": ev.pos, "up_side": ev.up_side}
    if isinstance(ev, Join):
        rec = {"event": "join", "pos": ev.pos}
        if ev.color is not None:
            rec["color"] = ev.color
        return rec
    if isinstance(ev, Fork):
        return {"event": "fork", "pos": ev.pos, "left_color": ev.left_color, "right_color": ev.right_color}
    if isinstance(ev, Crossing):
        return {"event": "crossing", "pos": ev.pos, "sign": "+" if ev.sign > 0 else "-"}
    raise TypeError(type(ev).__name__)


def to_json(d: LayeredDiagram) -> dict:
    out = {"format": FORMAT, "kind": d.kind}
    if d.N is not None:
        out["N"] = d.N
    out["layers"] = [_event_to_json(ev) for ev in d.layers]
    return out


def dumps(d: LayeredDiagram) -> str:
    """Canonical text: fixed key order, one layer per line, trailing newline."""
    data = to_json(d)
    head = [f'  "format": {json.dumps(data["format"])}', f'  "kind": {json.dumps(data["kind"])}']
    if "N" in data:
        head.append(f'  "N": {data["N"]}')
    if data["layers"]:
        rows = ",\n".join("    " + json.dumps(rec) for rec in data["layers"])
        head.append(f'  "layers": [\n{rows}\n  ]')
    else:
        head.append('  "layers": []')
    return "{\n" + ",\n".join(head) + "\n}\n"


def loads(text: str) -> LayeredDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_json(data)


def load(path) -> LayeredDiagram:
    return loads(Path(path).read_text())


def dump(d: LayeredDiagram, path) -> None:
    Path(path).write_text(dumps(d))
