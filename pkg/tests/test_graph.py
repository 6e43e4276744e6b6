import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import networkx as nx
import pytest

from acyclic_coloring.errors import GenerationError, GraphDomainError, GraphParseError, ParameterError
from acyclic_coloring.graph import (
    Graph,
    common_neighbor_count,
    dangerous_set,
    effective_delta,
    generate_family,
    load_graph,
    parse_graph,
    serialize_graph,
)
from acyclic_coloring.graph.generators import complete_bipartite_graph, cycle_graph, hypercube_graph
from acyclic_coloring.params import DEFAULT_KAPPA

# pytest tests/test_graph.py::TestGraphParsing -v -s
# pytest tests/test_graph.py::TestDangerousSets::test_k23_left_side_is_dangerous -v -s


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


class TestGraphParsing:
    def test_corpus_graphs_parse(self, corpus):
        for name, entry in corpus.items():
            g = parse_graph(entry['dimacs'])
            assert g.n == entry['n'], name
            assert g.m == entry['m'], name
            assert g.max_degree == entry['max_degree'], name

    def test_malformed_inputs_report_line(self):
        import json

        with open(Path(__file__).parent / 'mocks' / 'corpus.json', 'r', encoding='utf-8') as f:
            malformed = json.load(f)['malformed']
        for case in malformed:
            with pytest.raises(GraphParseError) as exc:
                parse_graph(case['dimacs'])
            assert exc.value.line_number == case['line']
            assert case['message'] in str(exc.value)

    def test_out_of_range_message(self):
        with pytest.raises(GraphParseError, match=r'line 3: vertex 3 out of range 1\.\.2'):
            parse_graph('p edge 2 1\ne 1 2\ne 1 3\n')

    def test_adjacency_sorted_and_one_based(self, corpus):
        g = parse_graph(corpus['k23']['dimacs'])
        assert g.adjacency[0] == ()
        assert g.neighbors(1) == (3, 4, 5)
        assert g.neighbors(4) == (1, 2)
        assert list(g.edges()) == [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]

    def test_serialize_then_parse_keeps_edges(self, corpus):
        g = parse_graph(corpus['c5']['dimacs'])
        assert parse_graph(serialize_graph(g)) == g

    def test_load_graph(self, tmp_path, corpus):
        path = tmp_path / 'k4.col'
        path.write_text(corpus['k4']['dimacs'], encoding='utf-8')
        assert load_graph(path).m == 6
        with pytest.raises(GraphParseError):
            load_graph(tmp_path / 'missing.col')

    def test_from_edges_rejects_bad_input(self):
        with pytest.raises(GraphDomainError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(GraphDomainError):
            Graph.from_edges(3, [(1, 4)])
        with pytest.raises(GraphDomainError):
            Graph.from_edges(-1, [])

    def test_vertex_queries(self, corpus):
        g = parse_graph(corpus['p3']['dimacs'])
        assert g.has_edge(1, 2) and not g.has_edge(1, 3)
        assert g.degree(2) == 2
        with pytest.raises(GraphDomainError):
            g.neighbors(4)

    def test_direct_construction_supports_edge_queries(self):
        g = Graph(n=3, adjacency=((), (2,), (1, 3), (2,)), m=2, max_degree=2)
        assert g.has_edge(2, 3) and g.has_edge(3, 2)
        assert not g.has_edge(1, 3)
        assert g == Graph.from_edges(3, [(1, 2), (2, 3)])

    def test_common_neighbor_count(self, corpus):
        g = parse_graph(corpus['k23']['dimacs'])
        assert common_neighbor_count(g, 1, 2) == 3
        assert common_neighbor_count(g, 3, 4) == 2
        assert common_neighbor_count(g, 1, 3) == 0
        with pytest.raises(GraphDomainError):
            common_neighbor_count(g, 2, 2)


class TestDangerousSets:
    def test_k23_left_side_is_dangerous(self):
        g = complete_bipartite_graph(2, 3)
        dsets = dangerous_set(g, DEFAULT_KAPPA)
        assert dsets[1] == (2,)
        assert dsets[2] == (1,)
        assert all(dsets[v] == () for v in (3, 4, 5))
        assert list(dsets.pairs()) == [(1, 2)]
        assert dsets.max_size() == 1

    def test_symmetric(self):
        g = hypercube_graph(4)
        dsets = dangerous_set(g, DEFAULT_KAPPA)
        for u in g.vertices:
            for v in dsets[u]:
                assert dsets.is_dangerous(v, u)

    def test_two_common_neighbors_below_threshold_on_c4(self):
        # 2 < (63/50) * 2^(2/3) by a hair
        g = cycle_graph(4)
        dsets = dangerous_set(g, Fraction(63, 50))
        assert dsets.max_size() == 0

    def test_large_kappa_empties_every_set(self):
        dsets = dangerous_set(complete_bipartite_graph(2, 3), Fraction(2))
        assert dsets.max_size() == 0

    def test_invalid_kappa_suggests_minimum(self):
        with pytest.raises(ParameterError) as exc:
            dangerous_set(cycle_graph(6), DEFAULT_KAPPA)
        assert exc.value.suggested_kappa == Fraction(63, 50)

    def test_effective_delta_of_empty_graph(self):
        assert effective_delta(generate_family('empty', {'n': 3})) == 1
        assert effective_delta(cycle_graph(5)) == 2


class TestGenerators:
    def test_deterministic_families(self):
        assert generate_family('cycle', {'n': 6}).m == 6
        assert generate_family('path', {'n': 5}).m == 4
        assert generate_family('complete', {'n': 5}).m == 10
        assert generate_family('complete_bipartite', {'a': 2, 'b': 3}).m == 6
        cube = generate_family('hypercube', {'dim': 3})
        assert (cube.n, cube.m, cube.max_degree) == (8, 12, 3)

    def test_hypercube_matches_networkx(self):
        g = hypercube_graph(4)
        assert nx.is_isomorphic(to_networkx(g), nx.hypercube_graph(4))

    def test_random_regular_is_regular_and_seeded(self):
        g = generate_family('random_regular', {'n': 20, 'd': 3}, seed=7)
        assert all(g.degree(v) == 3 for v in g.vertices)
        assert g == generate_family('random_regular', {'n': 20, 'd': 3}, seed=7)

    def test_random_regular_rejects_odd_degree_sum(self):
        with pytest.raises(GenerationError):
            generate_family('random_regular', {'n': 5, 'd': 3})

    def test_erdos_renyi_extremes(self):
        assert generate_family('erdos_renyi', {'n': 6, 'p': '0'}, seed=1).m == 0
        assert generate_family('erdos_renyi', {'n': 6, 'p': '1'}, seed=1).m == 15
        g = generate_family('erdos_renyi', {'n': 12, 'p': '1/3'}, seed=3)
        assert g == generate_family('erdos_renyi', {'n': 12, 'p': '1/3'}, seed=3)

    def test_missing_or_bad_parameters(self):
        with pytest.raises(GenerationError):
            generate_family('cycle', {})
        with pytest.raises(GenerationError):
            generate_family('cycle', {'n': 2})
        with pytest.raises(GenerationError):
            generate_family('erdos_renyi', {'n': 4})
        with pytest.raises(GenerationError):
            generate_family('erdos_renyi', {'n': 4, 'p': 'often'})
        with pytest.raises(ValueError):
            generate_family('wheel', {'n': 4})
