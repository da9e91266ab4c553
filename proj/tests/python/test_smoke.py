import json
import pathlib
from fractions import Fraction

import pytest

import priorforge as pf

EXAMPLES = pathlib.Path(__file__).resolve().parents[2] / "data" / "examples"


def example(name):
    return pf.load(EXAMPLES / name)


def test_structure_round_trip():
    T = example("ex_pl1.json")
    assert T.states == ["w1", "w2", "w3", "w4"]
    assert T.players == ["Anne", "Ben"]
    assert T.cells(0) == [["w1"], ["w2", "w3"], ["w4"]]
    assert T.type(0, 1) == [0, Fraction(1, 2), Fraction(1, 2), 0]
    assert pf.Structure.from_json(T.to_json()) == T


def test_components():
    T = example("ex_pl1.json")
    assert pf.minimal_components(T) == [["w1"], ["w4"]]
    assert pf.all_components(T) == [["w1"], ["w4"], ["w1", "w4"], ["w1", "w2", "w3", "w4"]]


def test_priors_are_fractions():
    T = example("ex_plbet4.json")
    w = pf.find_prior(T, "strong")
    assert w["prior"] == [Fraction(1, 4)] * 4
    assert all(isinstance(x, Fraction) for x in w["prior"])
    assert pf.find_prior(example("ex_pl2.json")) is None
    assert pf.find_prior(example("pl4.json"), "universal") is None


def test_classify_prior():
    T = example("intro.json")
    flags = pf.classify_prior(T, ["1/6", "1/6", "1/6", "1/4", "1/4"])
    assert flags["prior_for"] == [True, False]
    assert not flags["common"]
    assert pf.classify_prior(T, [Fraction(1, 5)] * 5)["common"]


def test_trades():
    T = example("ex_pl2.json")
    w = pf.find_trade(T, "agreeable")
    assert w is not None and w["objective"] > 0
    c = pf.classify_trade(T, [[2, -1, 4, -3], [-2, 1, -4, 3]])
    assert c["agreeable"] and c["is_trade"]
    assert c["expectations"] == [[Fraction(1, 2)] * 2, [Fraction(1, 2), 1]]
    assert pf.find_trade(example("ex_plbet4.json"), "acceptable") is None


def test_money_pump():
    T = example("pl.json")
    w = pf.find_money_pump(T, ["1/10", 0, "9/10"])
    assert w["deficit"] == Fraction(-1, 90)
    assert w["payoffs"] == [[Fraction(-1, 9), 1, 0]]
    v = pf.classify_distribution(example("pl4.json"), [0, 0, 1, 0])
    assert v["money_pump"] is not None and not v["maximal"] and not v["common_prior"]


def test_report_and_fuzz():
    doc = pf.report(example("pl4.json"), [Fraction(1, 4)] * 4)
    assert doc["minimal_components"] == [["w1", "w2"], ["w3", "w4"]]
    json.dumps(doc)
    for seed in range(1, 21):
        assert pf.cross_check(pf.random_structure(seed))["passed"]


def test_errors():
    T = example("pl4.json")
    with pytest.raises(pf.InputError):
        pf.classify_prior(T, [0.25, 0.25, 0.25, 0.25])
    with pytest.raises(ValueError):
        pf.classify_prior(T, [1, 0])
    with pytest.raises(ValueError):
        pf.find_prior(T, "bogus")
    with pytest.raises(ValueError):
        pf.Structure.from_json('{"states": []}')
