"""Smoke tests for the dichroma extension module."""

import pytest

import dichroma


def c5():
    return dichroma.Digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def test_digraph_basics():
    d = c5()
    assert d.n == 5
    assert d.arc_count == 5
    assert d.has_arc(0, 1)
    assert not d.has_arc(1, 0)
    assert d.out_neighbours(0) == [1]
    assert d.in_neighbours(0) == [4]

    with pytest.raises(ValueError):
        dichroma.Digraph(2, [(0, 0)])

    rev = dichroma.reverse(d)
    assert rev.has_arc(1, 0)
    assert dichroma.reverse(rev) == d


def test_structure_queries():
    d = c5()
    comps = dichroma.strong_components(d)
    assert comps == [[0, 1, 2, 3, 4]]

    kind, vertices = dichroma.topological_order(d)
    assert kind == "cycle"
    assert sorted(vertices) == [0, 1, 2, 3, 4]

    ls = dichroma.level_sets(d, [0], 2)
    assert ls.plus_levels[1] == [1]
    assert ls.minus_levels[1] == [4]
    assert ls.plus_witness_path(2) == [0, 1, 2]


def test_witness_finders():
    digon = dichroma.Digraph(2, [(0, 1), (1, 0)])
    w = dichroma.find_digon(digon)
    assert w is not None and w.kind == "digon" and w.vertices == [0, 1]

    assert dichroma.find_triangle(c5()) is None

    cyc = dichroma.min_odd_cycle(c5())
    assert cyc is not None and len(cyc) == 5 and cyc.minimal

    path6 = dichroma.Digraph(6, [(i, i + 1) for i in range(5)])
    w = dichroma.find_induced_p6(path6)
    assert w is not None and w.vertices == [0, 1, 2, 3, 4, 5]


def test_colouring_kernels():
    d = c5()
    kind, payload = dichroma.two_colour_no_odd(d)
    assert kind == "odd_cycle" and len(payload) == 5

    colours, k = dichroma.order_to_colouring(d, [0, 1, 2, 3, 4])
    assert k == 2
    assert dichroma.verify_colouring(d, colours) is None

    s_plus, s_minus = dichroma.is_dipolar(d, [0, 1, 2, 3, 4])
    assert s_plus == [0, 1, 2, 3, 4] and s_minus == [0, 1, 2, 3, 4]


def test_exact_and_pipeline():
    chi, witness = dichroma.exact_dichromatic(c5())
    assert chi == 2
    assert dichroma.verify_colouring(c5(), witness) is None
    assert dichroma.brute_force_dichromatic(c5()) == 2
    assert dichroma.exact_dichromatic(c5(), k_max=1) is None

    outcome = dichroma.colour_or_witness(c5())
    assert outcome.witness is None
    assert dichroma.verify_colouring(c5(), outcome.colours) is None
    assert len(set(outcome.colours)) <= dichroma.final_bound("outer") == 402

    tri = dichroma.Digraph(3, [(0, 1), (1, 2), (2, 0)])
    outcome = dichroma.colour_or_witness(tri)
    assert outcome.colours is None
    assert outcome.witness.kind == "triangle"


def test_generate_and_io():
    d = dichroma.generate("in_class_p6_trianglefree", n=30, p=0.15, seed=7)
    assert dichroma.find_triangle(d) is None
    assert dichroma.find_induced_p6(d) is None
    assert d == dichroma.generate("in_class_p6_trianglefree", n=30, p=0.15, seed=7)

    text = dichroma.serialize_digraph(d)
    assert dichroma.parse_digraph(text) == d

    outcome = dichroma.colour_or_witness(d)
    assert outcome.witness is None

    with pytest.raises(ValueError):
        dichroma.parse_digraph("p dgr 1 1\na 1 1\n")
