import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moyrt.moy import (
    Cap,
    Crossing,
    Cup,
    DiagramError,
    Fork,
    Join,
    LayeredDiagram,
    SweepStats,
    bracket,
    bracket_naive,
    build_relation,
    check_relation,
    colored_rotation_number,
    disjoint_union,
    pi_count,
    profiles,
    relation_grid,
    reverse_orientation,
    turning_contribution,
    validate,
    vertex_weight_exponent,
)
from moyrt.moy.corpus import oracle_corpus, random_graph
from moyrt.moy.io import FormatError, dumps, load, loads
from moyrt.qalg import ONE, quantum_binomial, quantum_int

GOLDEN = Path(__file__).parent / "golden"


def circle(m, side="right"):
    return LayeredDiagram((Cup(0, m, side), Cap(0, side)))


THETA = LayeredDiagram((Cup(0, 2, "right"), Fork(1, 1, 1), Join(1), Cap(0, "right")))


def reasons(d, closed=True):
    return [x.reason for x in validate(d, closed)]


def test_validate_examples():
    assert validate(circle(3)) == []
    bad_join = LayeredDiagram((Cup(0, 3, "right"), Fork(1, 1, 2), Join(1, color=4)))
    assert "flow conservation" in reasons(bad_join)
    assert reasons(LayeredDiagram((Cup(0, 1, "right"),))) == ["not closed"]


@pytest.mark.parametrize(
    "layers, reason",
    [
        ((Cap(0, "right"),), "position out of range"),
        ((Cup(0, 0, "right"),), "bad color"),
        ((Cup(0, 1, "up"),), "bad up_side"),
        ((Cup(0, 1, "right"), Cup(0, 2, "right"), Cap(1, "right")), "cap color mismatch"),
        ((Cup(0, 1, "right"), Cap(0, "left")), "cap orientation mismatch"),
        ((Cup(0, 1, "right"), Join(0)), "join orientation mismatch"),
        ((Cup(0, 3, "right"), Fork(1, 1, 1)), "flow conservation"),
        ((Cup(0, 1, "right"), Crossing(0)), "crossing in a graph diagram"),
    ],
)
def test_validate_reports_layer_and_reason(layers, reason):
    diags = validate(LayeredDiagram(layers))
    assert reason in [d.reason for d in diags]
    assert all(d.layer >= -1 for d in diags)


def test_invalid_diagram_raises_with_diagnostics():
    with pytest.raises(DiagramError) as err:
        bracket(LayeredDiagram((Cup(0, 1, "right"),)), 2)
    assert err.value.diagnostics[0].reason == "not closed"


def test_pi_count_examples():
    assert pi_count({1}, {-1}) == 1
    assert pi_count({3, 1}, set()) == 0
    assert pi_count({3, 1}, {1, -1}) == 3


def test_vertex_weight_examples():
    assert vertex_weight_exponent(1, 1, {1}, {-1}) == -0.5
    assert vertex_weight_exponent(1, 1, {-1}, {1}) == 0.5
    assert vertex_weight_exponent(2, 0, {1, 3}, set()) == 0
    with pytest.raises(ValueError):
        vertex_weight_exponent(1, 1, {1}, {1})


def test_turning_contribution():
    assert turning_contribution(Cup(0, 1, "right")) == 0.5
    assert turning_contribution(Cap(0, "left")) == -0.5
    with pytest.raises(TypeError):
        turning_contribution(Join(0))


@pytest.mark.parametrize("N", range(1, 6))
@pytest.mark.parametrize("m", range(1, 6))
def test_circle_is_quantum_binomial(m, N):
    expected = quantum_binomial(N, m) if m <= N else 0
    for side in ("left", "right"):
        assert bracket(circle(m, side), N) == expected
        assert bracket_naive(circle(m, side), N) == expected


def test_small_examples():
    assert str(bracket_naive(circle(1), 3)) == "q^-2 + 1 + q^2"
    assert str(bracket(THETA, 2)) == "q^-1 + q"
    assert str(bracket_naive(THETA, 2)) == "q^-1 + q"
    assert bracket(LayeredDiagram(), 3) == ONE
    assert bracket_naive(LayeredDiagram(), 3) == ONE


def test_colored_rotation_examples():
    assert colored_rotation_number(circle(3, "right")) == 3
    assert colored_rotation_number(circle(3, "left")) == -3
    assert colored_rotation_number(THETA) == 2


@pytest.mark.parametrize("m", range(1, 6))
def test_circle_rotation_parity(m):
    assert colored_rotation_number(circle(m)) % 2 == m % 2


def test_disjoint_union_example():
    d = disjoint_union(circle(1), circle(2))
    expected = quantum_int(3) * quantum_binomial(3, 2)
    assert bracket(d, 3) == expected == bracket_naive(d, 3)


def test_sweep_stats_are_filled():
    stats = SweepStats()
    bracket(circle(2), 4, stats)
    assert stats.layers == 2
    assert stats.peak_states == 6


def test_oracle_equivalence_on_corpus():
    corpus = oracle_corpus(seed=3)
    assert len(corpus) >= 30
    for d in corpus:
        assert len(d.layers) <= 10
        for N in range(1, 5):
            assert bracket(d, N) == bracket_naive(d, N)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_random_graphs_agree_with_oracle(seed, N):
    d = random_graph(random.Random(seed))
    value = bracket(d, N)
    assert value == bracket_naive(d, N)
    assert value.is_integral()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(1, 4))
def test_bracket_is_multiplicative(s1, s2, N):
    a, b = random_graph(random.Random(s1), 8), random_graph(random.Random(s2), 8)
    assert bracket(disjoint_union(a, b), N) == bracket(a, N) * bracket(b, N)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_over_colored_graphs_vanish(seed, N):
    d = random_graph(random.Random(seed), max_color=5)
    widest = max((s.color for prof in profiles(d) for s in prof), default=0)
    if widest > N:
        assert bracket(d, N) == 0
        assert bracket_naive(d, N) == 0


def test_build_relation_shapes():
    lhs, rhs = build_relation(1, {"m": 2}, 3)
    assert lhs[0][0] == ONE and rhs == [(quantum_binomial(3, 2), LayeredDiagram())]
    lhs, rhs = build_relation(4, {"m": 1, "n": 2}, 4)
    assert rhs[0][0] == quantum_binomial(3, 2)
    lhs, rhs = build_relation(5, {"m": 1}, 3)
    assert [c for c, _ in rhs] == [ONE, quantum_int(1)]


def test_check_relation_examples():
    assert check_relation(1, {"m": 2}, 3)
    assert check_relation(3, {"m": 1, "n": 1}, 2)
    assert check_relation(7, {"k": 1, "m": 1, "n": 1, "l": 1}, 3)


@pytest.mark.parametrize("rid", range(1, 8))
def test_relations_hold_on_small_grid(rid):
    for params, N in relation_grid(rid, 3):
        for rev in (False, True):
            assert check_relation(rid, params, N, reverse=rev), (params, N, rev)


def test_relation_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_relation(5, {"m": 3}, 3)
    with pytest.raises(ValueError):
        build_relation(9, {}, 3)


def test_reverse_orientation_is_involutive():
    for d in oracle_corpus(seed=1, random_count=10):
        assert reverse_orientation(reverse_orientation(d)) == d


# -- file format ------------------------------------------------------------------


@pytest.mark.parametrize("name", ["theta", "circle_m2", "hopf_11", "kink_unknot_m2"])
def test_golden_files_round_trip_byte_for_byte(name):
    text = (GOLDEN / f"{name}.json").read_text()
    assert dumps(loads(text)) == text


def test_golden_theta_value():
    d = load(GOLDEN / "theta.json")
    assert d.N == 2
    assert str(bracket(d, d.N)) == "q^-1 + q"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("[]", "top level"),
        ('{"format": "moy-layered/2", "kind": "graph", "layers": []}', "format"),
        ('{"format": "moy-layered/1", "kind": "tangle", "layers": []}', "kind"),
        ('{"format": "moy-layered/1", "kind": "graph", "layers": [], "extra": 1}', "unknown top-level"),
        ('{"format": "moy-layered/1", "kind": "graph", "N": 0, "layers": []}', "N must be"),
        ('{"format": "moy-layered/1", "kind": "graph", "layers": [{"event": "cup", "pos": 0, "color": 1}]}', "missing"),
        ('{"format": "moy-layered/1", "kind": "graph", "layers": [{"event": "cap", "pos": 0, "up_side": "right", "x": 1}]}', "unknown fields"),
        ('{"format": "moy-layered/1", "kind": "graph", "layers": [{"event": "twist", "pos": 0}]}', "unknown event"),
        ('{"format": "moy-layered/1", "kind": "link", "layers": [{"event": "crossing", "pos": 0, "sign": "x"}]}', "sign"),
        ('{"format": "moy-layered/1", "kind": "graph", "layers": [{"event": "join", "pos": true}]}', "integer"),
        ("{not json", "invalid JSON"),
    ],
)
def test_parser_is_strict(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        loads(text)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_serialization_round_trip(seed):
    d = random_graph(random.Random(seed)).replace(N=3)
    assert loads(dumps(d)) == d
    assert dumps(loads(dumps(d))) == dumps(d)
