from fractions import Fraction as Q

from orbitq.bundles import alpha_of, classify_bundles, pi1_component_order
from orbitq.catalog import TWIST_F0, TWIST_PLAIN
from orbitq.jordan import lookup_case, sweep_case_ids


def test_alpha_examples():
    assert alpha_of(lookup_case("E6:6")) == (5, (5,))
    assert alpha_of(lookup_case("SL:3")) == (1, (2,))
    assert alpha_of(lookup_case("G2:2")) == (2, (2, 2))
    assert alpha_of(lookup_case("E8:8")) == (14, (14,))


def test_classify_single_plain():
    (bm,) = classify_bundles(lookup_case("SO:3,6"))
    assert bm.twist == TWIST_PLAIN and bm.r0 == Q(2)


def test_classify_two_twists():
    out = classify_bundles(lookup_case("SL:4"))
    assert [(b.twist, b.r0) for b in out] == [(TWIST_PLAIN, Q(1, 2)),
                                              (TWIST_F0, Q(1))]


def test_classify_empty():
    assert classify_bundles(lookup_case("SO:4,5")) == []
    assert classify_bundles(lookup_case("SL:7")) == []


def test_r0_positive_and_halving():
    for cid in sweep_case_ids():
        case = lookup_case(cid)
        for bm in bundles_for(case):
            assert bm.r0 > 0
            expect = Q(bm.alpha, 2) if bm.twist == TWIST_PLAIN else Q(bm.alpha + 1, 2)
            assert bm.r0 == expect


def bundles_for(case):
    return classify_bundles(case)


def test_twists_never_coincide():
    # the two parity vectors differ by w, which cannot vanish mod 2 when
    # both parity tests pass
    for cid in sweep_case_ids():
        case = lookup_case(cid)
        out = classify_bundles(case, fill_spectral=False)
        if len(out) == 2:
            assert all(b.w % 2 == 0 for b in case.blocks)
            assert out[0].r0 != out[1].r0


def test_zeta0_exponents_even_nonnegative():
    for cid in sweep_case_ids():
        case = lookup_case(cid)
        for bm in classify_bundles(case, fill_spectral=False):
            assert all(e >= 0 and e % 2 == 0 for e in bm.zeta0_exponents)


def test_pi1_orders():
    assert pi1_component_order(lookup_case("E8:8")) == 1
    assert pi1_component_order(lookup_case("SL:5")) == 2
    assert pi1_component_order(lookup_case("SL:3")) == 4
    assert pi1_component_order(lookup_case("SO:3,3")) == 2
    assert pi1_component_order(lookup_case("SO:3,5")) == 1


def test_so33_sl4_agree():
    a = classify_bundles(lookup_case("SO:3,3"))
    b = classify_bundles(lookup_case("SL:4"))
    assert [(x.twist, x.r0, x.a, x.b, x.valid) for x in a] == \
           [(x.twist, x.r0, x.a, x.b, x.valid) for x in b]


def test_vacuum_labels_present():
    for cid in ("E6:6", "G2:2", "SO:3,6", "SL:4"):
        for bm in classify_bundles(lookup_case(cid)):
            assert bm.vacuum_label
