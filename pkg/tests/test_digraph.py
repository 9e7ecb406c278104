import pytest

from propdigraph import (
    Digraph,
    OneWayCycleError,
    classify_edges,
    find_one_way_cycle,
    to_appropriate_pair,
)

from conftest import all_digraphs, brute_force_has_one_way_cycle


class TestDigraph:
    def test_rejects_self_loops(self):
        with pytest.raises(ValueError):
            Digraph(3, frozenset({(2, 2)}))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Digraph(2, frozenset({(1, 3)}))

    def test_empty(self):
        g = Digraph(0)
        assert g.edges == frozenset()


class TestClassifyEdges:
    def test_symmetric_pair(self):
        g = Digraph(2, frozenset({(1, 2), (2, 1)}))
        two_way, one_way = classify_edges(g)
        assert two_way == {frozenset({1, 2})}
        assert one_way == set()

    def test_running_example(self, running_example):
        two_way, one_way = classify_edges(running_example)
        assert two_way == {frozenset({1, 2}), frozenset({2, 3})}
        assert one_way == {(1, 3), (3, 4), (2, 4)}

    def test_empty_digraph(self):
        assert classify_edges(Digraph(3)) == (set(), set())

    def test_partitions_edge_set(self):
        for g in all_digraphs(3):
            two_way, one_way = classify_edges(g)
            rebuilt = set(one_way)
            for pair in two_way:
                u, v = sorted(pair)
                rebuilt |= {(u, v), (v, u)}
            assert rebuilt == set(g.edges)


class TestFindOneWayCycle:
    def test_pure_three_cycle(self):
        g = Digraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))
        assert find_one_way_cycle(g) == [1, 2, 3, 1]

    def test_running_example_has_none(self, running_example):
        assert find_one_way_cycle(running_example) is None

    def test_two_way_triangle_has_none(self):
        g = Digraph(3, frozenset({(1, 2), (2, 1), (2, 3), (3, 2), (3, 1), (1, 3)}))
        assert find_one_way_cycle(g) is None

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_agrees_with_brute_force(self, n):
        for g in all_digraphs(n):
            found = find_one_way_cycle(g)
            assert (found is not None) == brute_force_has_one_way_cycle(g)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_witness_is_genuine(self, n):
        for g in all_digraphs(n):
            cycle = find_one_way_cycle(g)
            if cycle is None:
                continue
            assert cycle[0] == cycle[-1]
            assert len(cycle) >= 3
            assert len(set(cycle[:-1])) == len(cycle) - 1
            for u, v in zip(cycle, cycle[1:]):
                assert (u, v) in g.edges
                assert (v, u) not in g.edges


class TestAppropriatePair:
    def test_running_example_identity_order(self, running_example):
        pair = to_appropriate_pair(running_example)
        assert pair.perm == (1, 2, 3, 4)
        assert pair.S == frozenset({frozenset({1, 2}), frozenset({2, 3})})
        assert pair.T == frozenset({(1, 3), (3, 4), (2, 4)})

    def test_single_vertex(self):
        pair = to_appropriate_pair(Digraph(1))
        assert pair.S == frozenset() and pair.T == frozenset()

    def test_reversed_edge_forces_relabel(self):
        pair = to_appropriate_pair(Digraph(2, frozenset({(2, 1)})))
        assert pair.T == frozenset({(1, 2)})
        assert pair.relabel(2) == 1 and pair.relabel(1) == 2

    def test_raises_with_witness_on_cycle(self):
        g = Digraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))
        with pytest.raises(OneWayCycleError) as excinfo:
            to_appropriate_pair(g)
        assert excinfo.value.cycle == [1, 2, 3, 1]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_reconstruction_round_trip(self, n):
        for g in all_digraphs(n):
            try:
                pair = to_appropriate_pair(g)
            except OneWayCycleError:
                continue
            relabeled = pair.to_digraph()
            original = frozenset(
                (pair.original(u), pair.original(v)) for u, v in relabeled.edges
            )
            assert original == g.edges

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_t_pairs_ascend(self, n):
        for g in all_digraphs(n):
            try:
                pair = to_appropriate_pair(g)
            except OneWayCycleError:
                continue
            for i, j in pair.T:
                assert i < j
                assert frozenset({i, j}) not in pair.S
