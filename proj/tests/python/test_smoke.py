import pytest

import nacpy


def test_prism_has_one_coloring():
    g = nacpy.fixtures.prism()
    colorings = nacpy.enumerate(g)
    assert len(colorings) == 1
    red, blue = colorings[0]
    assert sorted(red + blue) == list(range(9))
    assert nacpy.is_nac_coloring(g, red)


def test_counts_match_brute_force():
    for n in range(4, 9):
        g = nacpy.fixtures.cycle(n)
        assert nacpy.count(g) == 2 ** (n - 1) - n - 1
        assert nacpy.count(g, strategy="none", merge="shared-vertices") == len(nacpy.enumerate_brute_force(g))


def test_exists_and_classes():
    assert not nacpy.exists(nacpy.fixtures.complete(4))
    assert nacpy.exists(nacpy.fixtures.cycle(24))
    assert len(nacpy.monochromatic_classes(nacpy.fixtures.prism())) == 5
    assert len(nacpy.triangle_components(nacpy.fixtures.complete(4))) == 1


def test_lazy_stream_and_stats():
    stream = nacpy.iter_colorings(nacpy.fixtures.cycle(20))
    first = next(stream)
    assert len(first[0]) + len(first[1]) == 20
    assert stream.stats.found == 1
    assert stream.stats.full_checks < 1000


def test_graph_io():
    g = nacpy.from_graph6("Bw")
    assert (g.n, g.m) == (3, 3)
    assert g.to_graph6() == "Bw"
    h, ids = nacpy.parse_edge_list("10 20\n20 30\n")
    assert ids == [10, 20, 30]
    assert h.edges == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        nacpy.from_graph6("C~x")
    with pytest.raises(ValueError):
        nacpy.Graph(2, [(0, 0)])


def test_reduction_round_trip():
    f = nacpy.CnfFormula(2, [[1, -2, 2], [-1, -1, 2]])
    r = nacpy.build_reduction(f)
    assert r.graph.max_degree() == 5
    assert len(r.edge_labels) == r.graph.m
    assert set(r.gadgets) == {"A1", "A2", "B1", "B2", "C1", "C2"}
    red, _ = next(nacpy.iter_colorings(r.graph))
    assert f.satisfied_by(r.decode(red))
    x = r.extend_for_density(1, 4)
    assert 4 * x.graph.m <= 9 * x.graph.n

    unsat = nacpy.parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
    assert nacpy.sat_brute_force(unsat) is None
    assert not nacpy.exists(nacpy.build_reduction(unsat).graph)


def test_bad_config():
    with pytest.raises(ValueError):
        nacpy.count(nacpy.fixtures.prism(), strategy="magic")
    with pytest.raises(ValueError):
        nacpy.count(nacpy.fixtures.prism(), bag_size=0)
