"""Acceptance criteria, one test each.  Every test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` to see the lines as
they happen; a normal run lists them in the terminal summary.
"""

import subprocess
import sys
import time
from pathlib import Path

from acceptance_log import record

from moyrt import links
from moyrt.gdim import check_decomp3_identity, check_decomp4_identity, decomp3_grid, decomp4_grid
from moyrt.moy import Cap, Cup, LayeredDiagram, bracket, bracket_naive
from moyrt.moy.corpus import oracle_corpus
from moyrt.moy.io import load
from moyrt.qalg import LaurentPoly, quantum_binomial, quantum_binomial_partition_sum
from moyrt.suites import run_suite
from moyrt.symfunc import box_complement, grassmannian_basis, grassmannian_poincare, grassmannian_trace

GOLDEN = Path(__file__).parent / "golden"


def _check(number, title, limit, body):
    t0 = time.perf_counter()
    ok, note = body()
    elapsed = time.perf_counter() - t0
    status = record(number, title, ok, elapsed, limit, note)
    assert status == "PASS", f"criterion {number}: {note or 'failed'} in {elapsed:.2f} s"


def test_criterion_01_circle_evaluation():
    def body():
        bad = []
        for N in range(0, 6):
            for m in range(0, N + 1):
                d = LayeredDiagram((Cup(0, m, "right"), Cap(0, "right"))) if m else LayeredDiagram()
                if N and bracket(d, N) != quantum_binomial(N, m):
                    bad.append((m, N))
        return not bad, f"{len(bad)} mismatches"

    _check(1, "circle brackets equal [N choose m] for 0 <= m <= N <= 5", 1.0, body)


def test_criterion_02_oracle_equivalence():
    def body():
        corpus = oracle_corpus(seed=0)
        too_long = [d for d in corpus if len(d.layers) > 10]
        bad = sum(bracket(d, N) != bracket_naive(d, N) for d in corpus for N in range(1, 5))
        ok = len(corpus) >= 30 and not too_long and bad == 0
        return ok, f"{len(corpus)} diagrams x N=1..4, {bad} mismatches"

    _check(2, "sweep DP equals brute-force enumeration", 60.0, body)


def test_criterion_03_skein_suite():
    def body():
        report = run_suite("skein")
        return report.ok, f"{len(report.cases)} parameter points x 4 closures/orientations, {len(report.failures)} failures"

    _check(3, "all seven skein relations and their reversals", 600.0, body)


def test_criterion_04_quantum_binomial():
    def body():
        bad = [(m, n) for m in range(7) for n in range(7)
               if quantum_binomial(m + n, n) != quantum_binomial_partition_sum(m, n)]
        return not bad, f"49 pairs, {len(bad)} mismatches"

    _check(4, "factorial quotient equals partition sum for m, n <= 6", None, body)


def test_criterion_05_symmetric_functions():
    def body():
        report = run_suite("symfunc", seed=5)
        return report.ok, f"{len(report.cases)} checks, {len(report.failures)} failures"

    _check(5, "Schur routes, Kostka, Newton, Pieri, power derivative", 60.0, body)


def test_criterion_06_grassmannian():
    def body():
        bad = []
        for N in range(0, 7):
            for m in range(0, N + 1):
                if grassmannian_poincare(m, N) != quantum_binomial(N, m).shift(2 * m * (N - m)):
                    bad.append(("poincare", m, N))
                basis = grassmannian_basis(m, N)
                for lam in basis:
                    partners = [mu for mu in basis if grassmannian_trace(lam, mu, m, N)]
                    if partners != [box_complement(lam, m, N - m)]:
                        bad.append(("pairing", m, N, str(lam)))
        return not bad, f"{len(bad)} failures"

    _check(6, "Grassmannian Poincare polynomial and perfect trace pairing", None, body)


def test_criterion_07_rt_invariance():
    def body():
        report = run_suite("reidemeister")
        return report.ok, f"{len(report.cases)} move pairs, {len(report.failures)} failures"

    _check(7, "RT invariant under R1-R3, bracket under R2/R3", 600.0, body)


def test_criterion_08_parity():
    def body():
        report = run_suite("parity", {"count": 100}, seed=7)
        small = run_suite("parity", {"count": 40, "max_strands": 2, "max_color": 2, "max_crossings": 3}, seed=11)
        ok = report.ok and small.ok and len(report.cases) >= 100
        return ok, f"{len(report.cases)} + {len(small.cases)} diagrams, {len(report.failures) + len(small.failures)} failures"

    _check(8, "adjusted rotation matches total color mod 2, independent of resolution", None, body)


def test_criterion_09_gdim_identities():
    def body():
        bad = [x for x in decomp3_grid(6) if not check_decomp3_identity(*x)]
        bad += [x for x in decomp4_grid(6) if not check_decomp4_identity(*x)]
        return not bad, f"{len(decomp3_grid(6)) + len(decomp4_grid(6))} points, {len(bad)} failures"

    _check(9, "graded-dimension decomposition identities for N <= 6", 5.0, body)


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "moyrt.cli", *map(str, args)], capture_output=True, text=True)


def test_criterion_10_golden_files():
    def body():
        problems = []
        theta = load(GOLDEN / "theta.json")
        if str(bracket(theta, 2)) != "q^-1 + q":
            problems.append("theta")
        hopf = load(GOLDEN / "hopf_11.json")
        oracle = LaurentPoly()
        for coef, _, graph in links.resolutions(hopf):
            oracle = oracle + coef * bracket_naive(graph, 2)
        golden = (GOLDEN / "expected" / "hopf_11_bracket.txt").read_text().strip()
        if str(oracle) != golden or str(links.bracket_link(hopf, 2)) != golden:
            problems.append("hopf")
        runs = [
            (("eval", GOLDEN / "circle_m2.json", "--n", 4), "eval_circle_m2.txt"),
            (("eval", GOLDEN / "theta.json", "--engine", "both"), "eval_theta.txt"),
            (("rt", GOLDEN / "hopf_11.json"), "rt_hopf_11.txt"),
        ]
        for args, name in runs:
            expected = (GOLDEN / "expected" / name).read_text()
            if not (_cli(*args).stdout == _cli(*args).stdout == expected):
                problems.append(name)
        return not problems, ", ".join(problems) or "theta, Hopf oracle and CLI outputs stable"

    _check(10, "golden files", None, body)
