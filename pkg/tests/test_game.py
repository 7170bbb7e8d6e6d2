import pytest
from hypothesis import given, settings, strategies as st

from csgames.core import shift_leq
from csgames.enumeration import compositions_of, enumerate_games
from csgames.game import (
    BoundViolation,
    ClassSeparationFailure,
    MonotonicityViolation,
    NotIncomparable,
    RowOrderViolation,
    ValidationError,
    is_winning,
    maximal_losing,
    minimal_winning,
    shift_maximal_losing,
    smw_from_winning_predicate,
    validate,
)

import oracles

EXAMPLE1 = ((2, 2, 1), [(1, 0, 0), (0, 2, 0)])


def all_games(max_n):
    for n in range(1, max_n + 1):
        for comp in compositions_of(n):
            yield from enumerate_games(comp)


SMALL_GAMES = list(all_games(5))
some_game = st.sampled_from(SMALL_GAMES)


class TestValidate:
    def test_valid(self):
        g = validate((2, 4), [(2, 0), (0, 4)])
        assert g.smw == ((2, 0), (0, 4)) and g.r == 2 and g.t == 2 and g.n == 6

    def test_class_separation(self):
        with pytest.raises(ClassSeparationFailure) as exc:
            validate((1, 3), [(0, 2)])
        assert exc.value.j == 1

    def test_row_order(self):
        with pytest.raises(RowOrderViolation):
            validate((2, 4), [(0, 4), (2, 0)])

    def test_bounds(self):
        with pytest.raises(BoundViolation) as exc:
            validate((2, 4), [(2, 0), (0, 5)])
        assert exc.value.row == 2

    def test_incomparable(self):
        with pytest.raises(NotIncomparable) as exc:
            validate((2, 4), [(2, 1), (2, 0)])
        assert (exc.value.i, exc.value.j) == (1, 2)

    def test_empty(self):
        with pytest.raises(ValidationError):
            validate((2, 2), [])

    def test_single_class_needs_positive_row(self):
        with pytest.raises(ClassSeparationFailure):
            validate((3,), [(0,)])
        validate((3,), [(2,)])

    def test_bounds_checked_first(self):
        # the out-of-range row would also break the order; bounds are reported first
        with pytest.raises(BoundViolation):
            validate((1, 1), [(0, 1), (3, 0)])


class TestSemantics:
    def test_example1_winning(self):
        g = validate(*EXAMPLE1)
        assert is_winning(g, (1, 1, 0))
        assert not is_winning(g, (0, 1, 1))
        with pytest.raises(ValueError):
            is_winning(g, (3, 0, 0))

    @given(some_game)
    def test_empty_loses_grand_wins(self, g):
        assert not is_winning(g, g.composition.zero())
        assert is_winning(g, g.composition.top())

    def test_example1_sml(self):
        assert shift_maximal_losing(validate(*EXAMPLE1)) == [(0, 1, 1)]

    def test_printed_losing_matrices(self):
        # the printed ℒ matrices are the SML sets; the unit-increment loop returns a superset
        a = validate((2, 4), [(2, 0), (0, 4)])
        assert shift_maximal_losing(a) == [(1, 2)]
        assert maximal_losing(a) == [(1, 2), (0, 3)]
        b = validate((3, 4), [(2, 2)])
        assert shift_maximal_losing(b) == [(3, 0), (1, 4)]
        assert maximal_losing(b) == [(3, 0), (2, 1), (1, 4)]

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_unanimity(self, n):
        g = validate((n,), [(n,)])
        assert maximal_losing(g) == shift_maximal_losing(g) == [(n - 1,)]

    @pytest.mark.parametrize("parts", [(1, 1), (2, 1), (1, 2, 1)])
    def test_unanimity_needs_one_class(self, parts):
        # only the grand coalition wins, so no two classes can be told apart
        with pytest.raises(ClassSeparationFailure):
            validate(parts, [parts])

    @settings(max_examples=100)
    @given(some_game)
    def test_sml_matches_brute_force(self, g):
        win = {v for v in g.composition.vectors() if is_winning(g, v)}
        assert shift_maximal_losing(g) == oracles.sml_brute(g.composition.parts, win)

    @given(some_game)
    def test_sml_subset_of_maximal_losing(self, g):
        assert set(shift_maximal_losing(g)) <= set(maximal_losing(g))

    @given(some_game)
    def test_closure_properties(self, g):
        vecs = list(g.composition.vectors())
        win = [v for v in vecs if is_winning(g, v)]
        lose = [v for v in vecs if not is_winning(g, v)]
        sml = shift_maximal_losing(g)
        for v in win:
            assert any(shift_leq(s, v) for s in g.smw)
            assert all(is_winning(g, u) for u in vecs if shift_leq(v, u))
        for v in lose:
            assert any(shift_leq(v, l) for l in sml)

    @given(some_game)
    def test_minimal_winning(self, g):
        vecs = list(g.composition.vectors())
        win = {v for v in vecs if is_winning(g, v)}
        brute = sorted((v for v in win if not any(u != v and all(a <= b for a, b in zip(u, v)) for u in win)),
                       reverse=True)
        assert minimal_winning(g) == brute
        assert set(g.smw) <= set(brute)


class TestPredicate:
    def test_example1_round_trip(self):
        g = validate(*EXAMPLE1)
        assert smw_from_winning_predicate(g.composition, lambda s: is_winning(g, s)) == g

    def test_unanimity(self):
        g = smw_from_winning_predicate((4,), lambda s: s == (4,))
        assert g.smw == ((4,),)

    @given(some_game)
    def test_round_trip(self, g):
        back = smw_from_winning_predicate(g.composition, lambda s: is_winning(g, s))
        assert back.smw == g.smw and back == g

    def test_not_up_closed(self):
        with pytest.raises(MonotonicityViolation):
            smw_from_winning_predicate((1, 1), lambda s: s in {(0, 1), (1, 1)})

    def test_empty_or_grand(self):
        with pytest.raises(MonotonicityViolation):
            smw_from_winning_predicate((1, 1), lambda s: True)
        with pytest.raises(MonotonicityViolation):
            smw_from_winning_predicate((1, 1), lambda s: False)

    def test_merged_classes_rejected(self):
        # agents of both classes are interchangeable here, so the composition is wrong
        with pytest.raises(ValidationError):
            smw_from_winning_predicate((1, 1), lambda s: sum(s) >= 1)
