from __future__ import annotations

import json

import pytest

from vsrep import catalog as cat
from vsrep.heart import heart
from vsrep.io import dumps
from vsrep.perm import group_order, is_two_transitive

from conftest import m11_path


def test_names_and_unknown():
    assert "sym" in cat.names() and "gl2f2_wreath" in cat.names()
    with pytest.raises(ValueError):
        cat.build("nope")
    with pytest.raises(ValueError):
        cat.build("sym")
    with pytest.raises(ValueError):
        cat.build("sym", 17)
    with pytest.raises(ValueError):
        cat.build("psl2", 6)


@pytest.mark.parametrize("name,params", [("sym", (7,)), ("psl2", (8,)), ("agl1", (9,)), ("gl2f2_wreath", ()), ("gl2f2_tensor", ())])
def test_builds_are_byte_deterministic(name, params):
    a = dumps(cat.build(name, *params).to_json())
    b = dumps(cat.build(name, *params).to_json())
    assert a == b


def test_documented_generators():
    assert [s.images for s in cat.sym(5).generators] == [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)]
    assert cat.cyclic(4).generators[0].images == (1, 2, 3, 0)
    nat = cat.gl2f2_natural()
    assert [g.tolist() for g in nat.gens] == [[[1, 1], [0, 1]], [[0, 1], [1, 0]]]
    # psl2: infinity is the last point and x -> x + 1 fixes it
    g = cat.psl2(8)
    assert g.degree == 9 and g.generators[0].images[8] == 8


@pytest.mark.parametrize(
    "g,order,two_trans",
    [
        (cat.sym(5), 120, True),
        (cat.psl2(8), 504, True),
        (cat.agl1(9), 72, True),
        (cat.psl2(7), 168, True),
        (cat.psl2(4), 60, True),
        (cat.agl1(8), 56, True),
        (cat.dihedral(5), 10, False),
    ],
)
def test_orders_and_transitivity(g, order, two_trans):
    assert group_order(g) == order
    assert is_two_transitive(g) == two_trans


@pytest.mark.parametrize("n", range(3, 13))
def test_alt_words_generate_alternating_group(n):
    import math

    from vsrep.perm import Permutation, PermGroup

    s = cat.sym(n)

    def ev(word):
        p = Permutation.identity(n)
        for i in word:
            g = s.generators[i if i >= 0 else ~i]
            p = p * (g if i >= 0 else g.inverse())
        return p

    sub = PermGroup(n, tuple(ev(w) for w in cat.alt_words_in_sym(n)))
    assert group_order(sub) == math.factorial(n) // 2


def test_load_external_round_trip(tmp_path):
    g = cat.sym(5)
    path = tmp_path / "s5.json"
    path.write_text(json.dumps(g.to_json()))
    assert cat.load_external(path, 120) == g
    with pytest.raises(cat.ExternalDataError):
        cat.load_external(path, 60)


@pytest.mark.parametrize("text", ["{", '{"degree": 3}', '{"degree": 3, "generators": [[0, 0, 1]]}', '{"degree": 3, "generators": [[0, 1]]}'])
def test_load_external_malformed(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(cat.ExternalDataError):
        cat.load_external(path)


def test_m11_external_data():
    path = m11_path()
    if path is None:
        pytest.skip("no M11 generator file (set VSREP_M11_FILE or add tests/data/m11.json)")
    g = cat.load_external(path, 7920)
    assert g.degree == 11 and heart(g).dim == 10
