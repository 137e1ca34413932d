"""Pancake domain: gap heuristics, flip mechanics, parsing, generation."""
import pytest

from oracles import pancake_cost_to_goal

from beamkit.domains.pancake import (
    PancakeDomain,
    all_pancake_states,
    gap_h,
    gen_pancake,
    heavy_gap_h,
    parse_pancake_instances,
    serialize_pancake_instances,
)


class TestGapHeuristic:
    def test_sorted_stack_is_zero(self):
        assert gap_h((1, 2, 3, 4, 5)) == 0
        assert heavy_gap_h((1, 2, 3, 4, 5)) == 0.0

    def test_counts_plate_gap(self):
        # Gaps: (2,4), (4,1), (1,3) and the bottom pancake 3 against the
        # plate 5 (|3 - 5| > 1).
        assert gap_h((2, 4, 1, 3)) == 4

    def test_reversed_stack(self):
        # (3,2),(2,1) adjacent, no gaps; bottom 1 vs plate 4 is a gap.
        assert gap_h((3, 2, 1)) == 1

    def test_heavy_gap_sums_pair_minima(self):
        # Pairs (2,4),(4,1),(1,3) contribute 2,1,1; the plate gap
        # contributes the bottom pancake 3.
        assert heavy_gap_h((2, 4, 1, 3)) == 7.0

    def test_flip_changes_gap_by_at_most_one(self):
        for state in all_pancake_states(5):
            dom = PancakeDomain(state, "unit")
            for child, _ in dom.successors(state):
                assert abs(gap_h(state) - gap_h(child)) <= 1

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_gap_admissible_exhaustively(self, n):
        dist = pancake_cost_to_goal(n, heavy=False)
        for state, opt in dist.items():
            assert gap_h(state) <= opt

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_heavy_gap_admissible_exhaustively(self, n):
        dist = pancake_cost_to_goal(n, heavy=True)
        for state, opt in dist.items():
            assert heavy_gap_h(state) <= opt + 1e-9


class TestDomain:
    def test_goal_detection(self):
        dom = PancakeDomain((2, 1, 3), "unit")
        assert dom.is_goal((1, 2, 3))
        assert not dom.is_goal((2, 1, 3))

    def test_successor_count_and_order(self):
        state = (3, 1, 4, 2)
        dom = PancakeDomain(state, "unit")
        succ = dom.successors(state)
        assert len(succ) == 3  # k = 2, 3, 4
        assert succ[0][0] == (1, 3, 4, 2)
        assert succ[1][0] == (4, 1, 3, 2)
        assert succ[2][0] == (2, 4, 1, 3)

    def test_two_pancakes_have_one_flip(self):
        dom = PancakeDomain((2, 1), "unit")
        assert dom.successors((2, 1)) == [((1, 2), 1.0)]

    def test_heavy_cost_is_deepest_flipped(self):
        state = (5, 2, 4, 1, 3)
        dom = PancakeDomain(state, "heavy")
        costs = [c for _, c in dom.successors(state)]
        # flipping k pancakes costs state[k-1]
        assert costs == [2.0, 4.0, 1.0, 3.0]

    def test_unit_costs_all_one(self):
        dom = PancakeDomain((3, 1, 2), "unit")
        assert all(c == 1.0 for _, c in dom.successors((3, 1, 2)))

    def test_flips_are_self_inverse(self):
        state = (4, 2, 5, 1, 3)
        dom = PancakeDomain(state, "unit")
        for child, _ in dom.successors(state):
            assert state in [s for s, _ in dom.successors(child)]

    def test_h_and_d_by_model(self):
        state = (2, 4, 1, 3)
        unit = PancakeDomain(state, "unit")
        heavy = PancakeDomain(state, "heavy")
        assert unit.h(state) == gap_h(state)
        assert heavy.h(state) == heavy_gap_h(state)
        assert unit.d(state) == heavy.d(state) == gap_h(state)

    def test_construction_validation(self):
        with pytest.raises(ValueError):
            PancakeDomain((1,))
        with pytest.raises(ValueError):
            PancakeDomain((1, 1, 2))
        with pytest.raises(ValueError):
            PancakeDomain((1, 2, 3), "nope")


class TestParsingAndGeneration:
    def test_parse_simple(self):
        assert parse_pancake_instances("2 1 3\n1 2\n") == [(2, 1, 3), (1, 2)]

    def test_comments_and_blanks(self):
        assert parse_pancake_instances("# c\n\n3 2 1 # trailing\n") == [(3, 2, 1)]

    def test_parse_rejects_non_permutation(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_pancake_instances("1 1 2")

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError, match="malformed"):
            parse_pancake_instances("1 x 2")

    def test_round_trip(self):
        states = gen_pancake(8, 5, seed=3)
        assert parse_pancake_instances(serialize_pancake_instances(states)) == states

    def test_gen_deterministic(self):
        assert gen_pancake(20, 50, seed=42) == gen_pancake(20, 50, seed=42)
        assert gen_pancake(20, 50, seed=42) != gen_pancake(20, 50, seed=43)

    def test_gen_validation(self):
        with pytest.raises(ValueError):
            gen_pancake(1, 1, seed=0)
        with pytest.raises(ValueError):
            gen_pancake(4, 0, seed=0)

    def test_all_states_enumeration(self):
        states = all_pancake_states(4)
        assert len(states) == 24
        assert len(set(states)) == 24
        assert states[0] == (1, 2, 3, 4)
