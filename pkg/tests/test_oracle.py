import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acyclic_coloring.engine.runner import run_until_colored
from acyclic_coloring.errors import OracleRefusal, VerificationInputError
from acyclic_coloring.graph import Graph, dangerous_set, effective_delta, generate_family, parse_graph
from acyclic_coloring.graph.generators import complete_graph, cycle_graph, path_graph
from acyclic_coloring.oracle.chromatic import brute_force_chi_a, find_acyclic_coloring, square_greedy_baseline
from acyclic_coloring.oracle.union_find import UnionFind
from acyclic_coloring.oracle.verify import as_full_coloring, verify_acyclic, verify_acyclic_dfs
from acyclic_coloring.params import make_params, resolve_kappa

# pytest tests/test_oracle.py::TestVerify -v -s
# pytest tests/test_oracle.py::TestChromatic::test_corpus_chi_a -v -s


def networkx_acyclic(g: Graph, colors) -> bool:
    """Proper, and every two color classes induce a forest."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    if any(colors[u - 1] == colors[v - 1] for u, v in h.edges):
        return False
    palette = sorted(set(colors))
    for i, x in enumerate(palette):
        for y in palette[i + 1:]:
            nodes = [v for v in h.nodes if colors[v - 1] in (x, y)]
            if not nx.is_forest(h.subgraph(nodes)):
                return False
    return True


class TestUnionFind:
    def test_union_and_find(self):
        uf = UnionFind()
        assert uf.union(1, 2)
        assert uf.union(3, 4)
        assert not uf.connected(1, 3)
        assert uf.union(2, 3)
        assert uf.connected(1, 4)
        assert not uf.union(4, 1)


class TestVerify:
    def test_two_colored_c4_is_rejected(self):
        report = verify_acyclic(cycle_graph(4), [1, 2, 1, 2])
        assert report.proper and not report.acyclic
        assert report.witness == [3, 2, 1, 4]
        assert report.colors_used == 2

    def test_improper_coloring(self):
        report = verify_acyclic(cycle_graph(4), [1, 1, 2, 3])
        assert not report.proper and not report.acyclic
        assert report.witness == [1, 2]

    def test_acyclic_coloring(self):
        report = verify_acyclic(cycle_graph(4), {1: 1, 2: 2, 3: 1, 4: 3})
        assert report.acyclic and report.witness is None
        assert report.to_dict() == {'proper': True, 'acyclic': True, 'witness': None, 'colors_used': 3}

    def test_rejects_partial_input(self):
        with pytest.raises(VerificationInputError):
            verify_acyclic(cycle_graph(4), [1, 2, None, 3])
        with pytest.raises(VerificationInputError):
            verify_acyclic(cycle_graph(4), [1, 2, 3])
        with pytest.raises(VerificationInputError):
            as_full_coloring(cycle_graph(4), [1, 2, 'red', 3])

    def test_witness_is_a_bichromatic_cycle(self):
        g = parse_graph('p edge 6 7\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 4 5\ne 5 6\ne 6 1\n')
        colors = [1, 3, 1, 2, 1, 2]
        report = verify_acyclic(g, colors)
        assert not report.acyclic
        cycle = report.witness
        assert len(set(colors[v - 1] for v in cycle)) == 2
        assert all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
        dfs = verify_acyclic_dfs(g, colors)
        assert not dfs.acyclic
        assert all(g.has_edge(dfs.witness[i], dfs.witness[(i + 1) % len(dfs.witness)]) for i in range(len(dfs.witness)))

    @settings(max_examples=150, deadline=None)
    @given(
        n=st.integers(min_value=1, max_value=9),
        data=st.data(),
    )
    def test_agrees_with_networkx(self, n, data):
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        colors = data.draw(st.lists(st.integers(min_value=1, max_value=4), min_size=n, max_size=n))
        g = Graph.from_edges(n, edges)
        expected = networkx_acyclic(g, colors)
        assert verify_acyclic(g, colors).acyclic == expected
        assert verify_acyclic_dfs(g, colors).acyclic == expected


class TestChromatic:
    def test_corpus_chi_a(self, corpus):
        for name, entry in corpus.items():
            assert brute_force_chi_a(parse_graph(entry['dimacs'])) == entry['chi_a'], name

    def test_small_values(self):
        assert brute_force_chi_a(complete_graph(4)) == 4
        assert brute_force_chi_a(cycle_graph(4)) == 3
        assert brute_force_chi_a(path_graph(3)) == 2
        assert brute_force_chi_a(generate_family('empty', {'n': 0})) == 0
        assert brute_force_chi_a(generate_family('empty', {'n': 3})) == 1

    def test_find_acyclic_coloring(self):
        assert find_acyclic_coloring(cycle_graph(4), 2) is None
        c = find_acyclic_coloring(cycle_graph(4), 3)
        assert verify_acyclic(cycle_graph(4), c).acyclic

    def test_refuses_large_graphs(self):
        with pytest.raises(OracleRefusal):
            brute_force_chi_a(cycle_graph(10))
        assert brute_force_chi_a(cycle_graph(10), max_n=10) == 3

    def test_square_greedy_baseline(self):
        c = square_greedy_baseline(cycle_graph(6))
        assert c.colors_used() == 3
        assert verify_acyclic(cycle_graph(6), c).acyclic
        cube = generate_family('hypercube', {'dim': 3})
        assert verify_acyclic(cube, square_greedy_baseline(cube)).acyclic

    def test_exact_value_bounds_the_algorithm_and_the_baseline(self, corpus):
        for name, entry in corpus.items():
            g = parse_graph(entry['dimacs'])
            h = nx.Graph()
            h.add_nodes_from(g.vertices)
            h.add_edges_from(g.edges())
            if g.n > 6 or not nx.is_connected(h):
                continue
            chi_a = brute_force_chi_a(g)
            baseline = verify_acyclic(g, square_greedy_baseline(g))
            assert baseline.acyclic, name
            assert chi_a <= baseline.colors_used, name

            delta = effective_delta(g)
            kappa = resolve_kappa(delta)
            params, dsets = make_params(delta, kappa), dangerous_set(g, kappa)
            for seed in range(8):
                result = run_until_colored(g, params, seed, dsets=dsets)
                assert result.terminated, (name, seed)
                report = verify_acyclic(g, result.coloring)
                assert report.acyclic, (name, seed)
                assert chi_a <= report.colors_used, (name, seed)
