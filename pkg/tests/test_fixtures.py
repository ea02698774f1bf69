import json
import random

import pytest

from polyoideal import fixtures
from polyoideal.geometry import (CellComplex, InputError, Polyocollection, ViolationList, closed_path,
                                 validate_polyocollection)


@pytest.mark.parametrize("name", fixtures.names())
def test_fixture_round_trip(name):
    data = fixtures.fixture_json(name)
    text = fixtures.dumps(data)
    obj = fixtures.parse_fixture(json.loads(text))
    again = fixtures.parse_fixture(json.loads(fixtures.dumps(data)))
    if isinstance(obj, ViolationList):
        assert obj == again
        return
    assert obj == again
    assert fixtures.parse_fixture(obj.to_json()) == obj


@pytest.mark.parametrize("bad", [
    [], {"cells": []}, {"type": "blob"}, {"type": "cells", "cells": [[0, 0], [0, 0]]},
    {"type": "cells", "cells": [[0, "a"]]}, {"type": "polyocollection", "intervals": [{"ll": [0, 0]}]},
    {"type": "polyocollection", "intervals": [{"ll": [1, 1], "ur": [0, 0]}]},
])
def test_malformed_fixtures(bad):
    with pytest.raises(InputError):
        fixtures.parse_fixture(bad)


def test_generator_is_deterministic():
    a = [fixtures.dumps(s.to_json()) for s in fixtures.generate_closed_paths(9, 16, rate=0.3)]
    b = [fixtures.dumps(s.to_json()) for s in fixtures.generate_closed_paths(9, 16, rate=0.3)]
    assert a == b and a
    c = [fixtures.dumps(s.to_json()) for s in fixtures.generate_closed_paths(10, 16, rate=0.3)]
    assert c != a


def test_generator_postconditions():
    seen = set()
    for s in fixtures.generate_closed_paths(1, 16):
        assert closed_path(s.cells).ok
        assert 6 <= len(s.cells) <= 16
        assert s.nonprime != s.structural_prime
        assert s.cells not in seen
        seen.add(s.cells)


def test_generator_finds_smallest_nonprime():
    found = [s for s in fixtures.generate_closed_paths(0, 16, kind="nonprime")]
    assert len(found) == 1 and len(found[0].cells) == 16
    shape = found[0].cells.normalized()
    assert shape == fixtures.load("nonprime16").normalized()
    assert not list(fixtures.generate_closed_paths(0, 15, kind="nonprime"))


def test_nonprime_prune_is_sound():
    full = {s.cells for s in fixtures.generate_closed_paths(2, 20) if s.nonprime}
    pruned = {s.cells for s in fixtures.generate_closed_paths(2, 20, kind="nonprime")}
    assert full == pruned and len(full) == 6


def test_generator_rejects_small_bound():
    with pytest.raises(InputError):
        list(fixtures.generate_closed_paths(0, 5))


def test_random_polyocollection_is_valid():
    rng = random.Random(0)
    for _ in range(50):
        C = fixtures.random_polyocollection(rng, 5)
        assert isinstance(C, Polyocollection) and C.members
        assert isinstance(validate_polyocollection(C.members), Polyocollection)


def test_walk4_fixture_is_closed_path():
    P = fixtures.load("walk4")
    assert isinstance(P, CellComplex) and len(P) == 26 and closed_path(P).ok
