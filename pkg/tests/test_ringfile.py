import pytest

from greenring import based_from_presented, make_ring
from greenring.ringfile import FileFormatError, dumps, load_ring, ring_from_dict, ring_to_dict, save_ring


@pytest.mark.parametrize("args", [("stable", 5, 1), ("radford", 3, 2), ("grothendieck", 4, 3)])
def test_round_trip(tmp_path, args):
    r = based_from_presented(make_ring(*args), involution=args[0] == "stable")
    path = tmp_path / "ring.json"
    save_ring(r, path)
    back = load_ring(path)
    assert back.labels == r.labels
    assert back.constants == r.constants
    assert back.involution == r.involution
    assert dumps(ring_to_dict(back)) == dumps(ring_to_dict(r))


def test_dumps_layout():
    assert dumps({"a": [1, 2], "b": None, "c": 0.5, "d": "x"}) == (
        '{\n  "a": [1, 2],\n  "b": null,\n  "c": 0.5,\n  "d": "x"\n}'
    )
    assert dumps({"rows": [[1, 2], [3]]}) == '{\n  "rows": [\n    [1, 2],\n    [3]\n  ]\n}'


@pytest.mark.parametrize("data", [
    [],
    {"format_version": 1, "labels": ["1"], "unit": 1, "constants": []},
    {"format_version": 1, "labels": ["1"], "unit": 0, "constants": [[0, 0, 0]]},
    {"format_version": 1, "labels": ["1"], "unit": 0, "constants": [[0, 0, 1, 1]]},
    {"format_version": 1, "labels": ["1"], "unit": 0, "constants": [[0, 0, 0, True]]},
    {"format_version": 1, "labels": ["1"], "unit": 0, "involution": [0, 0], "constants": []},
    {"format_version": 1, "labels": [1], "unit": 0, "constants": []},
])
def test_format_errors(data):
    with pytest.raises(FileFormatError):
        ring_from_dict(data)


def test_unvalidated_load_keeps_defects():
    data = {"format_version": 1, "labels": ["1", "a"], "unit": 0,
            "constants": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 0, 1]]}
    r = ring_from_dict(data, validate=False)
    assert r.rank == 2
