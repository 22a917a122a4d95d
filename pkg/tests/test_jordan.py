import pytest

from orbitq.jordan import (JordanBlock, JordanCase, UnknownCaseError,
                           derived_vectors, lookup_case, sweep_case_ids,
                           validate_case)


def test_fixed_rows():
    c = lookup_case("E6:6")
    assert [(b.q, b.d, b.w) for b in c.blocks] == [(4, 1, 1)]
    assert c.m == 10
    g = lookup_case("G2:2")
    assert [(b.q, b.d, b.w) for b in g.blocks] == [(1, 0, 3), (1, 0, 1)]
    assert g.m == 2


def test_so_block_rules():
    c = lookup_case("SO:3,4")
    assert [(b.q, b.d, b.w) for b in c.blocks] == [(1, 0, 2), (1, 0, 1), (1, 0, 1)]
    assert c.m == 3
    c = lookup_case("SO:5,7")
    assert [(b.q, b.d, b.w) for b in c.blocks] == [(2, 1, 1), (2, 3, 1)]
    c = lookup_case("SO:4,4")
    assert [(b.q, b.d, b.w) for b in c.blocks] == [(1, 0, 1)] * 4


def test_sl_block_rules():
    assert [(b.q, b.d, b.w) for b in lookup_case("SL:3").blocks] == [(1, 0, 4)]
    assert [(b.q, b.d, b.w) for b in lookup_case("SL:4").blocks] == [(1, 0, 2)] * 2
    assert [(b.q, b.d, b.w) for b in lookup_case("SL:8").blocks] == [(2, 4, 2)]


def test_bad_ids():
    for bad in ("SO:2,5", "SL:2", "X:1", "SO:5,4", "SO:a,b", "SL:x"):
        with pytest.raises(UnknownCaseError):
            lookup_case(bad)
    with pytest.raises(ValueError):
        JordanBlock(5, 0, 1)


def test_derived_vectors():
    v, delta, offsets = derived_vectors(lookup_case("E6:6"))
    assert v == (1, 1, 1, 1)
    assert delta == (3, 2, 1, 0)
    assert offsets == (0,)
    assert sum(delta) == 10 - 4

    v, delta, offsets = derived_vectors(lookup_case("G2:2"))
    assert v == (3, 1) and delta == (0, 0) and offsets == (0, 1)

    v, delta, _ = derived_vectors(lookup_case("SL:8"))
    assert v == (2, 2) and delta == (4, 0)


def test_validate_sweep():
    for cid in sweep_case_ids(12, 12):
        case = lookup_case(cid)
        failed = [name for name, ok, _ in validate_case(case) if not ok]
        assert not failed, f"{cid}: {failed}"


def test_validate_specific():
    checks = dict((n, ok) for n, ok, _ in validate_case(lookup_case("E8:8")))
    assert all(checks.values())
    checks = dict((n, ok) for n, ok, _ in validate_case(lookup_case("SO:5,7")))
    assert all(checks.values())


def test_validate_negative_control():
    bad = JordanCase("bogus", (JordanBlock(2, 0, 2), JordanBlock(2, 0, 2)),
                     6, {"g": "so9"})
    results = dict((n, ok) for n, ok, _ in validate_case(bad))
    assert not results["degree-4 monomial"]


def test_lookup_pure():
    a, b = lookup_case("SO:6,8"), lookup_case("SO:6,8")
    assert a == b


def test_sweep_order_deterministic():
    ids = sweep_case_ids(5, 5)
    assert ids[:8] == ["E6:6", "E7:7", "E8:8", "F4:4", "E6:2", "E7:-5",
                       "E8:-24", "G2:2"]
    assert ids[8:14] == ["SO:3,3", "SO:3,4", "SO:3,5", "SO:4,4", "SO:4,5",
                         "SO:5,5"]
    assert ids[14:] == ["SL:3", "SL:4", "SL:5"]


def test_to_dict_roundtrip():
    d = lookup_case("F4:4").to_dict()
    assert d["blocks"] == [[3, 1, 1], [1, 0, 1]]
    assert d["m"] == 7
    assert d["labels"]["G"] == "F4(4)"
