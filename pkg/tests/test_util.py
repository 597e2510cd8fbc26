import time

import pytest

from edgesquare.util import partial, partial_from_args, partial_to_dict, partial_from_dict, parse_value, dump, load, \
    Timeout, GraphTimeout
from edgesquare.verification import Verification


def test_parse_value():
    assert parse_value(int, "3") == 3
    assert parse_value(bool, "False") is False
    assert parse_value(tuple, "main_theorem, small_cases") == ("main_theorem", "small_cases")
    with pytest.raises(ValueError):
        parse_value(bool, "maybe")


def test_partial_from_args():
    p = partial_from_args(Verification, dict(max_n="5", which="main_theorem,small_cases", gallery="False"))
    assert p.keywords == dict(max_n=5, which=("main_theorem", "small_cases"), gallery=False)
    p = partial_from_args("edgesquare.verification:Verification", dict(jobs="4"))
    assert p.func is Verification and p.keywords == dict(jobs=4)
    with pytest.raises(ValueError):
        partial_from_args(Verification, dict(max_vertices="5"))


def test_partial_dict_roundtrip():
    spec = partial(Verification, max_n=4, which=("main_theorem",))
    d = partial_to_dict(spec)
    assert d["+"] == "edgesquare.verification:Verification"
    assert d["which"] == ["main_theorem"]
    assert partial_from_dict(d).keywords["which"] == ("main_theorem",)


def test_unknown_check_is_refused():
    with pytest.raises(ValueError):
        Verification(which=("no_such_check",))
    with pytest.raises(ValueError):
        Verification(char=6)


def test_dump_and_load(tmp_path):
    run = Verification(max_n=3)
    dump(run, str(tmp_path / "state"))
    assert load(str(tmp_path / "state")).epochs == run.epochs == 3


def test_timeout():
    with pytest.raises(GraphTimeout):
        with Timeout(0.05):
            time.sleep(2)
    with Timeout(0):
        time.sleep(0.01)
