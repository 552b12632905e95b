"""Verification suites shared by the CLI and the acceptance tests.

Each suite expands its bounds into a list of cases, runs them (in worker
processes when MOYRT_THREADS > 1) and reports them sorted by case key, so the
report does not depend on the parallelism setting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import gdim, links, symfunc
from .links import parallel_map
from .moy.diagram import Cap, Cup, LayeredDiagram
from .moy.relations import RELATION_IDS, check_relation, relation_grid
from .moy.state_sum import bracket, colored_rotation_number
from .qalg import LaurentPoly, quantum_binomial, quantum_binomial_partition_sum

__all__ = ["CaseResult", "SuiteReport", "SUITES", "DEFAULT_BOUNDS", "run_suite"]


@dataclass(frozen=True)
class CaseResult:
    key: tuple
    label: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    name: str
    bounds: dict
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.ok]


# a colors bound of 0 means no color limit beyond the N bound
DEFAULT_BOUNDS = {
    "skein": {"N": 4, "circle_N": 5, "colors": 0},
    "symfunc": {"trials": 3, "qbinom": 6, "kostka": 6, "newton": 8, "pieri_k": 3, "pieri_size": 5, "grass_N": 6},
    "gdim": {"N": 6, "circle_N": 5},
    "reidemeister": {"colors": 2, "N": 3, "r1_colors": 3, "r1_N": 4},
    "parity": {"count": 100, "max_strands": 3, "max_color": 3, "max_crossings": 5, "engines": 1},
}
SUITES = tuple(DEFAULT_BOUNDS)


# -- skein ------------------------------------------------------------------------------


def _skein_case(args):
    rid, params, N = args
    bad = [
        f"{side}{' reversed' if rev else ''}"
        for rev in (False, True)
        for side in ("right", "left")
        if not check_relation(rid, params, N, reverse=rev, side=side)
    ]
    label = f"relation {rid} N={N} " + " ".join(f"{k}={v}" for k, v in sorted(params.items()))
    return CaseResult((rid, N, tuple(sorted(params.items()))), label, not bad, ", ".join(bad))


def _skein_cases(b):
    items = []
    for rid in RELATION_IDS:
        for params, N in relation_grid(rid, b["circle_N"] if rid == 1 else b["N"]):
            if b["colors"] and max(params.values()) > b["colors"]:
                continue
            items.append((rid, params, N))
    return parallel_map(_skein_case, items)


# -- symmetric functions ------------------------------------------------------------------


def _alphabet(rng, size):
    pts: set[Fraction] = set()
    while len(pts) < size:
        pts.add(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
    return sorted(pts)


def _symfunc_cases(b, seed):
    rng = random.Random(seed)
    out = []

    def add(key, label, ok, detail=""):
        out.append(CaseResult(key, label, bool(ok), detail))

    for m in range(b["qbinom"] + 1):
        for n in range(b["qbinom"] + 1):
            ok = quantum_binomial(m + n, n) == quantum_binomial_partition_sum(m, n)
            add((0, m, n), f"qbinom m={m} n={n}", ok)

    for t in range(b["trials"]):
        for size in (3, 4):
            a = _alphabet(rng, size)
            for lam in symfunc.partitions_in_box(3, 3):
                vals = {r: symfunc.schur_eval(lam, a, r) for r in ("bialternant", "jacobi_trudi_h", "jacobi_trudi_e")}
                add((1, t, size, lam.parts), f"schur routes {lam} size={size} trial={t}", len(set(vals.values())) == 1)
                if lam.parts and lam.parts[0] <= size:
                    neg = symfunc.schur_neg_eval(lam, a)
                    pos = (-1) ** lam.size * symfunc.schur_eval(symfunc.conjugate(lam), a)
                    add((2, t, size, lam.parts), f"schur negative alphabet {lam} size={size} trial={t}", neg == pos)

    alphabets = [_alphabet(rng, 4) for _ in range(b["trials"])]
    for k in range(b["kostka"] + 1):
        for lam in symfunc.partitions_of(k, 3):
            mus = symfunc.partitions_of(k)
            for t, a in enumerate(alphabets):
                h = Fraction(1)
                for part in lam.parts:
                    h *= symfunc.complete_eval(part, a)
                s = sum(symfunc.kostka(mu, lam) * symfunc.schur_eval(mu, a) for mu in mus if mu.length <= len(a))
                add((3, k, lam.parts, t), f"kostka expansion {lam} trial={t}", h == s)
            later = [mu for mu in mus if lam.dominates_lex(mu) and lam != mu]
            add((4, k, lam.parts), f"kostka vanishing {lam}", all(symfunc.kostka(mu, lam) == 0 for mu in later))

    for m in range(6):
        for n in range(6):
            acc: dict[int, int] = {}
            for lam in symfunc.partitions_in_box(m, n):
                acc[4 * lam.size] = acc.get(4 * lam.size, 0) + 1
            ok = LaurentPoly(acc) == quantum_binomial(m + n, n).shift(2 * m * n)
            add((5, m, n), f"box partition sum m={m} n={n}", ok)

    for l in range(1, b["newton"] + 1):
        for size in range(1, 6):
            a = _alphabet(rng, size)
            add((6, l, size), f"newton l={l} size={size}", symfunc.newton_identity_residual(l, a) == 0)

    a = _alphabet(rng, 4)
    for k in range(1, b["pieri_k"] + 1):
        for size in range(b["pieri_size"] + 1):
            for lam in symfunc.partitions_of(size):
                if lam.length + k > 8:
                    continue
                lhs = symfunc.elementary_eval(k, a) * symfunc.schur_eval(lam, a)
                rhs = sum(symfunc.schur_eval(mu, a) for mu in symfunc.pieri_e(k, lam) if mu.length <= len(a))
                add((7, k, lam.parts), f"pieri k={k} {lam}", lhs == rhs)

    for m in range(1, 4):
        for l in range(1, 6):
            for j in range(1, m + 1):
                add((8, m, l, j), f"power derivative m={m} l={l} j={j}", symfunc.power_derivative_check(m, l, j))

    for N in range(1, b["grass_N"] + 1):
        for m in range(0, N + 1):
            ok = symfunc.grassmannian_poincare(m, N) == quantum_binomial(N, m).shift(2 * m * (N - m))
            add((9, N, m), f"grassmannian poincare m={m} N={N}", ok)
            basis = symfunc.grassmannian_basis(m, N)
            rows = [[symfunc.grassmannian_trace(x, y, m, N) for y in basis] for x in basis]
            perm = all(sum(r) == 1 for r in rows) and all(sum(col) == 1 for col in zip(*rows))
            add((10, N, m), f"grassmannian pairing m={m} N={N}", perm)
    return out


# -- graded dimensions ---------------------------------------------------------------------


def _circle(m: int) -> LayeredDiagram:
    return LayeredDiagram((Cup(0, m, "right"), Cap(0, "right")))


def _gdim_cases(b):
    out = []
    for m, N in gdim.decomp3_grid(b["N"]):
        out.append(CaseResult((0, N, m), f"decomp3 m={m} N={N}", gdim.check_decomp3_identity(m, N)))
    for l, m, n, N in gdim.decomp4_grid(b["N"]):
        out.append(CaseResult((1, N, l, m, n), f"decomp4 l={l} m={m} n={n} N={N}", gdim.check_decomp4_identity(l, m, n, N)))
    for N in range(1, b["circle_N"] + 1):
        for m in range(1, N + 1):
            g = gdim.gdim_circle(m, N)
            ok = g.at_tau_one() == bracket(_circle(m), N)
            out.append(CaseResult((2, N, m), f"circle gdim at tau=1 m={m} N={N}", ok))
            cr = colored_rotation_number(_circle(m))
            out.append(CaseResult((3, N, m), f"circle tau parity m={m} N={N}", g.tau_parity == cr % 2))
    return out


# -- Reidemeister ---------------------------------------------------------------------------


def _reidemeister_case(args):
    move, colors, N, v = args
    d0, d1 = links.reidemeister_pairs(move, colors, N, v)
    r0, r1 = links.rt_polynomial(d0, N), links.rt_polynomial(d1, N)
    ok = r0 == r1
    detail = "" if ok else f"RT {r0} vs {r1}"
    if ok and not move.startswith("R1"):
        b0, b1 = links.bracket_link(d0, N), links.bracket_link(d1, N)
        ok = b0 == b1
        detail = "" if ok else f"bracket {b0} vs {b1}"
    label = f"{move} colors={','.join(map(str, colors))} N={N} variant={v}"
    return CaseResult((links.REIDEMEISTER_MOVES.index(move), N, colors, v), label, ok, detail)


def _reidemeister_cases(b):
    items = links.reidemeister_grid(b["colors"], b["N"])
    extra = links.reidemeister_grid(b["r1_colors"], b["r1_N"], ("R1+", "R1-"))
    items += [x for x in extra if x not in items]
    return parallel_map(_reidemeister_case, items)


# -- parity -------------------------------------------------------------------------------


def _parity_case(args):
    i, d, N, engines = args
    tc = links.total_color(d)
    cr = links.adjusted_rotation(d)
    crs = links.rotations_over_resolutions(d)
    problems = []
    if (cr - tc) % 2:
        problems.append(f"cr^={cr} tc={tc}")
    if crs != {cr}:
        problems.append(f"resolution dependent {sorted(crs)}")
    if engines:
        fused, expanded = links.bracket_link(d, N, "fused"), links.bracket_link(d, N, "expand")
        if fused != expanded:
            problems.append(f"fused {fused} vs expand {expanded}")
    label = f"diagram {i} crossings={len(d.crossings)} tc={tc} cr^={cr}"
    return CaseResult((i,), label, not problems, "; ".join(problems))


def parity_corpus(count: int, seed: int, max_strands=3, max_color=3, max_crossings=5):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = links.random_link_diagram(rng, max_strands, max_color, max_crossings)
        out.append((d, rng.randint(1, 3)))
    return out


def _parity_cases(b, seed):
    corpus = parity_corpus(b["count"], seed, b["max_strands"], b["max_color"], b["max_crossings"])
    items = [(i, d, N, b["engines"]) for i, (d, N) in enumerate(corpus)]
    return parallel_map(_parity_case, items)


def run_suite(name: str, bounds: dict | None = None, seed: int = 7) -> SuiteReport:
    """Run one suite; unknown bound keys are rejected."""
    if name not in DEFAULT_BOUNDS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    b = dict(DEFAULT_BOUNDS[name])
    for k, v in (bounds or {}).items():
        if k not in b:
            raise ValueError(f"suite {name!r} has no bound {k!r}; known: {', '.join(b)}")
        b[k] = int(v)
    if name == "skein":
        cases = _skein_cases(b)
    elif name == "symfunc":
        cases = _symfunc_cases(b, seed)
    elif name == "gdim":
        cases = _gdim_cases(b)
    elif name == "reidemeister":
        cases = _reidemeister_cases(b)
    else:
        cases = _parity_cases(b, seed)
    return SuiteReport(name, b, sorted(cases, key=lambda c: c.key))
