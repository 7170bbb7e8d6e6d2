import itertools
from math import comb

import pytest

from csgames.constructions import StarFamily
from csgames.classification import many_types_game
from csgames.core import TypeComposition
from csgames.enumeration import (
    ALL,
    NONWEIGHTED,
    WEIGHTED,
    Budget,
    BudgetExceeded,
    EnumerationTask,
    compositions_of,
    count_games,
    count_weighted_by_family,
    enumerate_games,
    filtered_games,
    read_checkpoint,
)
from csgames.game import validate

import oracles


def test_compositions():
    assert compositions_of(1) == [TypeComposition.of(1)]
    assert [c.parts for c in compositions_of(3)] == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions_of(5)) == 16
    assert all(c.n == 7 for c in compositions_of(7))
    with pytest.raises(ValueError):
        compositions_of(0)


def test_examples_present():
    assert validate((2, 2, 1), [(1, 0, 0), (0, 2, 0)]) in list(enumerate_games(TypeComposition.of(2, 2, 1)))
    assert len(list(enumerate_games(TypeComposition.of(6)))) == 6
    assert many_types_game(6) in list(enumerate_games(TypeComposition((1,) * 6)))


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_upset_oracle(n):
    for comp in compositions_of(n):
        games = list(enumerate_games(comp))
        assert len({g.smw for g in games}) == len(games)
        for g in games:
            assert validate(comp, g.smw) == g
        assert {g.smw for g in games} == oracles.games_by_upsets(comp.parts)


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_boolean_function_oracle(n):
    # isomorphism classes of complete games on n labelled agents, found without any vector machinery
    found = oracles.complete_games_by_boolean_functions(n)
    ours = set()
    for comp in compositions_of(n):
        for g in enumerate_games(comp):
            win = frozenset(v for v in comp.vectors() if any(oracles.shift_le(r, v) for r in g.smw))
            ours.add((comp.parts, win))
    assert ours == found


def test_known_totals():
    assert [count_games(n).complete for n in range(1, 7)] == [1, 3, 8, 25, 117, 1171]
    report = count_games(6)
    assert report.weighted == 1111
    assert report.summary() == "complete=1171 weighted=1111"
    assert all(w <= c for c, w in report.per_composition.values())
    assert list(report.per_composition) == compositions_of(6)


def test_deterministic_stream():
    comp = TypeComposition.of(2, 1, 2)
    assert [g.smw for g in enumerate_games(comp)] == [g.smw for g in enumerate_games(comp)]


def test_rows_lex_descending():
    for g in enumerate_games(TypeComposition.of(1, 2, 2)):
        assert list(g.smw) == sorted(g.smw, reverse=True)


def test_filters():
    comp = TypeComposition.of(2, 4)
    everything = list(filtered_games(EnumerationTask(comp, ALL)))
    weighted = list(filtered_games(EnumerationTask(comp, WEIGHTED)))
    non = list(filtered_games(EnumerationTask(comp, NONWEIGHTED)))
    assert len(everything) == len(weighted) + len(non)
    assert validate((2, 4), [(2, 0), (0, 4)]) in non
    with pytest.raises(ValueError):
        EnumerationTask(comp, "some")
    with pytest.raises(ValueError):
        EnumerationTask(0)


def test_task_over_agent_count():
    assert len(list(filtered_games(EnumerationTask(4)))) == 25


def test_budget(empty_survey_cache):
    with pytest.raises(BudgetExceeded) as exc:
        list(enumerate_games(TypeComposition((1,) * 7), Budget(0)))
    assert exc.value.partial >= 1024
    with pytest.raises(BudgetExceeded) as exc:
        count_games(7, Budget(0.01))
    assert exc.value.partial.truncated


def test_checkpoint_resume(tmp_path):
    path = tmp_path / "counts.txt"
    first = count_games(5, checkpoint=path)
    lines = path.read_text().splitlines()
    assert len(lines) == 16
    assert read_checkpoint(path) == first.per_composition
    # a resumed run reads everything back and writes nothing new
    again = count_games(5, checkpoint=path)
    assert again.per_composition == first.per_composition
    assert path.read_text().splitlines() == lines


def test_parallel_counts_agree():
    assert count_games(5, jobs=2).per_composition == count_games(5).per_composition


def test_one_type_family():
    star = StarFamily.parse("*")
    assert [count_weighted_by_family(star, n) for n in range(1, 10)] == list(range(1, 10))


def test_one_star_exact_counts():
    # every (1,k) game is weighted; with n = k + 1 agents there are C(n,2) of them
    one_star = StarFamily.parse("1,*")
    assert [count_weighted_by_family(one_star, n) for n in range(2, 13)] == [comb(n, 2) for n in range(2, 13)]


def test_one_star_cumulative_formula():
    # summed over every total up to n, the (1,*) counts give (n^3 - n) / 6
    one_star = StarFamily.parse("1,*")
    for n in range(2, 13):
        total = sum(count_weighted_by_family(one_star, m) for m in range(2, n + 1))
        assert total == (n ** 3 - n) // 6


def test_grid_vectors_unique():
    comp = TypeComposition.of(2, 3)
    vs = list(comp.vectors())
    assert len(vs) == len(set(vs)) == comp.grid_size
    assert set(vs) == set(itertools.product(range(3), range(4)))


def test_recorded_eight_agent_counts():
    from pathlib import Path

    from csgames.enumeration import survey_composition

    recorded = read_checkpoint(Path(__file__).resolve().parent.parent / "data" / "counts8.txt")
    assert set(recorded) == set(compositions_of(8))
    assert sum(c for c, _ in recorded.values()) == 16175188
    assert sum(w for _, w in recorded.values()) == 2730164
    # spot-check cheap compositions against a fresh enumeration
    for parts in [(8,), (1, 7), (7, 1), (2, 6), (4, 4), (3, 2, 3), (2, 2, 2, 2)]:
        comp = TypeComposition(parts)
        s = survey_composition(comp)
        assert recorded[comp] == (s.complete, s.weighted), parts
