from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from csgames import io
from csgames.enumeration import compositions_of, enumerate_games
from csgames.game import ClassSeparationFailure, validate
from csgames.weightedness import SHIFT, Certificate, WeightedRepresentation, find_certificate, solve_separation

DATA = Path(__file__).resolve().parent.parent / "data"
SMALL = [g for n in range(1, 5) for c in compositions_of(n) for g in enumerate_games(c)]


@pytest.mark.parametrize("name", ["example1.json", "ex_csg.json", "ex_34.json"])
def test_data_files_are_canonical(name):
    text = (DATA / name).read_text()
    doc = io.loads(text)
    assert io.dumps(doc) == text
    game = io.game_from_doc(doc)
    assert io.game_from_doc(io.loads(io.dumps(io.game_to_doc(game)))) == game


def test_example_contents():
    g = io.game_from_doc(io.read(DATA / "example1.json"))
    assert g == validate((2, 2, 1), [(1, 0, 0), (0, 2, 0)])


@given(st.sampled_from(SMALL))
def test_game_round_trip(g):
    text = io.dumps(io.game_to_doc(g, name="g"))
    assert io.dumps(io.loads(text)) == text
    assert io.game_from_doc(io.loads(text)) == g


def test_format_shape():
    text = io.dumps(io.game_to_doc(validate((2, 4), [(2, 0), (0, 4)])))
    assert text.endswith("}\n")
    assert '  "composition": [2, 4],' in text
    assert "    [2, 0],\n    [0, 4]\n" in text


def test_rationals():
    rep = WeightedRepresentation(Fraction(3, 2), (Fraction(1), Fraction(1, 2), Fraction(0)))
    doc = io.representation_to_doc(rep)
    assert doc["quota"] == "3/2" and doc["weights"] == [1, "1/2", 0]
    assert io.representation_from_doc(io.loads(io.dumps(doc))) == rep
    assert io.fraction_from_text("4/6", "q") == Fraction(2, 3)


@pytest.mark.parametrize("value", [True, 1.5, None, "x", "1/0", [1]])
def test_bad_rationals(value):
    with pytest.raises(io.DocumentError) as exc:
        io.fraction_from_text(value, "quota")
    assert exc.value.field == "quota"


def test_certificate_round_trip():
    g = validate((3, 4), [(2, 2)])
    for cert in (find_certificate(g), solve_separation(g).certificate):
        back = io.certificate_from_doc(io.loads(io.dumps(io.certificate_to_doc(cert))))
        assert back == cert
    shift = solve_separation(g).certificate
    assert io.certificate_to_doc(shift)["mode"] == SHIFT


def test_certificate_with_fractions():
    cert = Certificate([(2, 2)], [(3, 0), (1, 4)], [Fraction(2, 3)], [Fraction(1, 3), Fraction(1, 3)])
    doc = io.certificate_to_doc(cert)
    assert doc["x"] == ["2/3"]
    assert io.certificate_from_doc(doc) == cert


@pytest.mark.parametrize("text,field", [
    ('{"schema": "csg/2"}', "schema"),
    ('{"schema": "csg/1", "kind": "game", "smw": []}', "composition"),
    ('{"schema": "csg/1", "kind": "game", "composition": [2, "a"], "smw": []}', "composition"),
    ('{"schema": "csg/1", "kind": "game", "composition": [2], "smw": [[1], 2]}', "smw[1]"),
    ('{"schema": "csg/1", "kind": "game", "composition": [0], "smw": [[0]]}', "composition"),
    ('{"schema": "csg/1", "kind": "certificate", "composition": [2], "smw": [[1]]}', "kind"),
])
def test_field_errors(text, field):
    with pytest.raises(io.DocumentError) as exc:
        io.game_from_doc(io.loads(text))
    assert exc.value.field == field


def test_certificate_field_errors():
    base = {"schema": "csg/1", "kind": "certificate", "winning": [[2, 2]], "losing": [[3, 0]], "x": [1], "y": [1]}
    for key, value, field in [("mode", "diagonal", "mode"), ("x", 3, "x"), ("y", ["a"], "y[0]")]:
        with pytest.raises(io.DocumentError) as exc:
            io.certificate_from_doc({**base, key: value})
        assert exc.value.field == field
    with pytest.raises(io.DocumentError):
        io.certificate_from_doc({k: v for k, v in base.items() if k != "losing"})


def test_negative_weight_rejected():
    doc = {"schema": "csg/1", "kind": "representation", "quota": 1, "weights": [-1]}
    with pytest.raises(io.DocumentError) as exc:
        io.representation_from_doc(doc)
    assert exc.value.field == "weights"


def test_json_syntax_position():
    with pytest.raises(io.DocumentError, match="line 2 column"):
        io.loads('{"schema": "csg/1",\n  oops}')
    with pytest.raises(io.DocumentError, match="object"):
        io.loads("[1, 2]")


def test_missing_file(tmp_path):
    with pytest.raises(io.DocumentError, match="cannot read"):
        io.read(tmp_path / "absent.json")


def test_validation_errors_propagate():
    doc = io.game_to_doc(validate((2, 4), [(2, 0), (0, 4)]))
    doc["smw"] = [[0, 2]]
    with pytest.raises(ClassSeparationFailure):
        io.game_from_doc(doc)
