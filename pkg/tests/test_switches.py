import random

import pytest

from degmatch import (
    DegreeSequence,
    InvalidInput,
    InvariantViolation,
    LabeledGraph,
    Matching,
    SwitchMove,
    all_switches,
    build_graph,
    canonical_matching,
    classify_switch,
    complete_graph,
    degree_sequences,
    lift_switch,
    matching_from_text,
    matching_to_text,
    perfect_matchings,
    phi,
    realize_matching_oracle,
    realize_matching_switchwise,
    star_check,
    switch_path,
    switch_step,
)

M3 = canonical_matching(4, "plus")
M1 = canonical_matching(4, "minus")
M2 = Matching(4, {(1, 3), (2, 4)})


class TestClassify:
    def test_canonical_examples(self):
        assert classify_switch(M3, M2) == 1
        assert classify_switch(M2, M1) == 2
        assert classify_switch(M3, M1) == 3

    def test_identity_and_reversals(self):
        assert classify_switch(M2, M2) is None
        assert classify_switch(M2, M3) is None  # switches are directional
        assert classify_switch(M1, M3) is None

    def test_size_mismatch(self):
        with pytest.raises(InvalidInput):
            classify_switch(M3, canonical_matching(6, "plus"))

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_consistent_with_enumeration(self, n):
        for m in perfect_matchings(n):
            for nm, move in all_switches(m):
                assert classify_switch(m, nm) == move.kind


class TestSwitchStep:
    def test_plus_is_up_terminal(self):
        assert switch_step(canonical_matching(4, "plus"), "up") is None

    def test_plus_steps_down_by_type3(self):
        new, move = switch_step(M3, "down")
        assert new == M1 and move.kind == 3

    def test_nested_steps_up_by_reverse_type3(self):
        new, move = switch_step(M1, "up")
        assert new == M3 and move.kind == 3

    def test_crossing_steps_down_by_type2(self):
        new, move = switch_step(M2, "down")
        assert new == M1 and move.kind == 2

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_terminal_characterizations(self, n):
        plus, minus = canonical_matching(n, "plus"), canonical_matching(n, "minus")
        for m in perfect_matchings(n):
            assert (switch_step(m, "down") is None) == (m == minus)
            assert (switch_step(m, "up") is None) == (m == plus)

    def test_down_prefers_disjoint_pair(self):
        m = Matching(6, {(1, 3), (2, 4), (5, 6)})
        _, move = switch_step(m, "down")
        assert move.kind == 3  # the disjoint pair (1,3),(5,6) wins over the crossing


class TestSwitchPath:
    def test_trivial(self):
        assert switch_path(canonical_matching(4, "plus"), "plus") == []

    def test_single_moves(self):
        assert [m.kind for m in switch_path(M1, "plus")] == [3]
        assert [m.kind for m in switch_path(M2, "minus")] == [2]

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_walks_terminate_at_canonical(self, n):
        for m in perfect_matchings(n):
            down = switch_path(m, "minus")
            up = switch_path(m, "plus")
            assert len(down) <= n * n and len(up) <= n * n
            # replay the down walk forward
            cur = m
            for move in down:
                cur = cur.apply_move(move)
            assert cur == canonical_matching(n, "minus")
            # replay the up walk in reverse from the top
            cur = canonical_matching(n, "plus")
            for move in reversed(up):
                cur = cur.apply_move(move)
            assert cur == m


class TestPhiLemma:
    @pytest.mark.parametrize("n", [4, 6])
    def test_exhaustive(self, n):
        for m in perfect_matchings(n):
            for nm, move in all_switches(m):
                assert phi(nm) < phi(m)

    def test_randomized_n40(self):
        rng = random.Random(314)
        done = 0
        while done < 1500:
            verts = list(range(1, 41))
            rng.shuffle(verts)
            m = Matching(40, frozenset(
                (verts[2 * i], verts[2 * i + 1]) for i in range(20)
            ))
            options = all_switches(m)
            if not options:
                continue
            nm, _ = rng.choice(options)
            assert phi(nm) < phi(m)
            done += 1


class TestLiftSwitch:
    def test_neither_new_edge_present(self):
        g = build_graph(4, [(1, 2), (1, 3), (2, 4)])
        h = lift_switch(g, M2, SwitchMove(1, 2, 3, 4, 2))
        assert h.edge_list() == [(1, 2), (1, 4), (2, 3)]
        assert h.degree_vector() == (2, 2, 1, 1)

    def test_both_new_edges_present(self):
        k4 = complete_graph(4)
        for nm, move in all_switches(M3):
            assert lift_switch(k4, M3, move) == k4

    def test_matching_not_contained(self):
        g = build_graph(4, [(1, 3)])
        with pytest.raises(InvalidInput):
            lift_switch(g, M3, SwitchMove(1, 2, 3, 4, 1))

    @pytest.mark.parametrize("n", [4, 6])
    def test_exhaustive_supergraph_audit(self, n):
        """Monotone-degree hosts must lift; others may refuse, never lie."""
        full = complete_graph(n).edges
        for m in perfect_matchings(n):
            free = sorted(full - m.edges)
            switches = all_switches(m)
            cap = 1 << len(free) if n == 4 else 2048
            rng = random.Random(n)
            masks = (
                range(1 << len(free))
                if n == 4
                else (rng.randrange(1 << len(free)) for _ in range(cap))
            )
            for bits in masks:
                g = LabeledGraph(n, m.edges | {e for i, e in enumerate(free) if bits >> i & 1})
                degs = g.degree_vector()
                monotone = all(degs[i] >= degs[i + 1] for i in range(n - 1))
                for nm, move in switches:
                    try:
                        h = lift_switch(g, m, move)
                    except InvariantViolation:
                        assert not monotone
                        continue
                    assert h.degree_vector() == degs
                    assert nm.edges <= h.edges


class TestRealizeSwitchwise:
    def test_cycle_degrees_with_nested_matching(self):
        g = realize_matching_switchwise(DegreeSequence((2, 2, 2, 2)), M1)
        assert g.degree_vector() == (2, 2, 2, 2)
        assert M1.edges <= g.edges

    def test_forced_matching(self):
        g = realize_matching_switchwise(DegreeSequence((1, 1, 1, 1)), M2)
        assert g.edges == M2.edges

    def test_k4(self):
        g = realize_matching_switchwise(DegreeSequence((3, 3, 3, 3)), M1)
        assert g == complete_graph(4)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_cross_validation_with_oracle(self, n):
        for seq in degree_sequences(n):
            passes = star_check(seq).verdict
            for m in perfect_matchings(n):
                witness = realize_matching_oracle(seq, m)
                if passes:
                    g = realize_matching_switchwise(seq, m)
                    assert g.degree_vector() == seq.entries
                    assert m.edges <= g.edges
                    assert witness is not None
                if witness is not None:
                    assert witness.degree_vector() == seq.entries
                    assert m.edges <= witness.edges


class TestOracle:
    def test_cannot_realize_plus(self):
        assert realize_matching_oracle(DegreeSequence((2, 2, 1, 1)), M3) is None

    def test_witness_for_minus(self):
        g = realize_matching_oracle(DegreeSequence((3, 2, 2, 1)), M1)
        assert g is not None
        assert g.degree_vector() == (3, 2, 2, 1)
        assert M1.edges <= g.edges

    def test_forced(self):
        assert realize_matching_oracle(DegreeSequence((1, 1, 1, 1)), M2).edges == M2.edges


class TestMatchingText:
    def test_round_trip(self):
        m = Matching(6, {(1, 6), (2, 4), (3, 5)})
        assert matching_from_text(matching_to_text(m)) == m

    def test_format(self):
        assert matching_to_text(M1) == "1-4,2-3"

    def test_overlap_rejected(self):
        with pytest.raises(InvalidInput):
            matching_from_text("1-2,2-3")

    def test_malformed(self):
        with pytest.raises(InvalidInput):
            matching_from_text("1-2-3")
        with pytest.raises(InvalidInput):
            matching_from_text("")
