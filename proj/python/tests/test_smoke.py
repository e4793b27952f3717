import fsmaps
import pytest

LOOP = {"n": 2, "roots": [1, 2], "sigma0": [2, 1], "sigma1": [2, 1]}


def test_hurwitz_series():
    assert fsmaps.hurwitz("2", "1,1")["text"] == "h/2"
    assert fsmaps.hurwitz([3], [1, 1, 1])["text"] == "h^2/3"
    weak = fsmaps.hurwitz("2,1", "2,1", kind="weak", order=4)
    assert weak["text"] == "1/2 + 7*h^2/2 + 31*h^4/2"
    assert weak["hi"] == 4


def test_brute_matches_characters():
    assert fsmaps.hurwitz_brute("3", "1,1,1", 2) == "1/3"
    assert fsmaps.hurwitz_brute("2", "2", 2, kind="weak") == "1/2"


def test_enumeration():
    assert fsmaps.enumerate_maps("2", 1)["text"] == "h^-1"
    assert fsmaps.enumerate_maps("1,1", 1, fully_simple=True)["text"] == "0"
    assert fsmaps.enumerate_hypermaps("1", 1)["text"] == "h^-1*u1"
    assert fsmaps.count_dessins("2", "1,1", 1) == "1"


def test_census_and_bijection():
    maps = fsmaps.census(2)
    assert len(maps) == 48
    for m in maps:
        s = fsmaps.split(m)
        back = fsmaps.join(s["fully_simple"], s["dessin"])
        assert back == {k: v for k, v in m.items() if k != "aut"}


def test_simplify_loop():
    r = fsmaps.simplify(LOOP)
    assert r["k"] == 1
    assert r["simple_map"]["roots"] == [1]


def test_verify_suite():
    assert len(fsmaps.identities()) == 9
    reports = fsmaps.verify("lemma_2_5", d_max=4)
    assert [r["status"] for r in reports] == ["pass"] * 4


def test_invalid_input():
    with pytest.raises(fsmaps.InvalidInput):
        fsmaps.hurwitz("2", "1,1,1")
    with pytest.raises(ValueError):
        fsmaps.enumerate_maps("3", 1)
    with pytest.raises(ValueError):
        fsmaps.simplify("{not json")
