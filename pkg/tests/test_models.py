from fractions import Fraction as Q

import pytest

from orbitq.jordan import lookup_case
from orbitq.ladder import ladder_norms
from orbitq.models import (build_model, check_degree_contract, model_hw_norm,
                           solve_gram, verify_brackets)


@pytest.fixture(scope="module")
def so44():
    return build_model("so44")


@pytest.fixture(scope="module")
def g2():
    return build_model("g2")


def test_unknown_model():
    with pytest.raises(ValueError):
        build_model("e8")
    with pytest.raises(ValueError):
        build_model("oscillator", 0)


def test_operator_counts(so44, g2):
    assert len(so44.algebra_ops) == 28
    assert len(g2.algebra_ops) == 14
    for n in (1, 2, 3):
        osc = build_model("oscillator", n)
        assert len(osc.algebra_ops) == 2 * n * n + n


def test_level_bases(so44, g2):
    assert len(so44.level_basis(0)) == 1
    assert len(so44.level_basis(1)) == 16
    assert len(so44.level_basis(2)) == 81
    g0 = g2.level_basis(0)
    assert len(g0) == 3 and g2.hw_monomial(0) in g0
    assert len(g2.level_basis(1)) == 12
    assert g2.hw_monomial(1) == (5, 0, 1, 0)
    osc2 = build_model("oscillator", 2)
    assert len(osc2.level_basis(3)) == 4


def test_degree_contract(so44, g2):
    assert check_degree_contract(so44, 2)
    assert check_degree_contract(g2, 2)
    assert check_degree_contract(build_model("oscillator", 2), 3)


def test_raising_maps_levels(so44, g2):
    for model in (so44, g2):
        for gen in model.generators:
            for mono in model.level_basis(0):
                img = gen.raise_op.apply(Polynomial_of(model, mono))
                for m, c in img.terms.items():
                    assert model.level_of(m) == 1


def Polynomial_of(model, mono):
    from orbitq.exactalg import Polynomial
    return Polynomial(model.ctx, {mono: Q(1)})


def test_oscillator_brackets_and_sl2():
    for n, rank in ((1, 3), (2, 10)):
        model = build_model("oscillator", n)
        rep = verify_brackets(model, 3)
        assert rep.closed and rep.rank == rank and rep.stable and rep.sl2_ok


def test_so44_brackets(so44):
    rep = verify_brackets(so44, 3)
    assert rep.closed and rep.rank == 28
    assert rep.stable and rep.sl2_ok and rep.failures == []


def test_g2_brackets(g2):
    rep = verify_brackets(g2, 3)
    assert rep.closed and rep.rank == 14
    assert rep.stable and rep.sl2_ok and rep.failures == []


def test_oscillator_gram_norms():
    model = build_model("oscillator", 2)
    rep = solve_gram(model, 3)
    assert rep.well_defined and rep.symmetric and rep.positive_definite
    assert rep.adjoint_ok
    from math import factorial
    for lvl in range(4):
        basis = rep.bases[lvl]
        gram = rep.grams[lvl]
        for i, mono in enumerate(basis):
            expected = 1
            for a in mono:
                expected *= factorial(a)
            assert gram[(i, i)] == expected
            for j in range(i):
                assert gram.get((i, j), 0) == 0


def test_so44_gram(so44):
    rep = solve_gram(so44, 2)
    assert rep.well_defined and rep.symmetric
    assert rep.positive_definite and rep.adjoint_ok
    g1 = rep.grams[1]
    for i in range(16):
        assert g1[(i, i)] == Q(1, 2)
        for j in range(i):
            assert g1.get((i, j), 0) == 0
    # normalized hw norms follow the spectral ladder with r0=a=b=1
    case = lookup_case("SO:4,4")
    for n in (1, 2):
        _, want = ladder_norms(case, 1, 1, 1, n)
        assert model_hw_norm(so44, n, rep if n <= 2 else None) == want


def test_g2_gram(g2):
    rep = solve_gram(g2, 3)
    assert rep.well_defined and rep.symmetric
    assert rep.positive_definite and rep.adjoint_ok
    g0 = rep.grams[0]
    diag = [g0[(i, i)] for i in range(3)]
    assert sorted(diag) == [Q(1, 2), Q(1), Q(1)]
    case = lookup_case("G2:2")
    for n in (1, 2, 3):
        _, want = ladder_norms(case, 1, Q(4, 3), Q(5, 3), n)
        assert model_hw_norm(g2, n, rep) == want
    assert model_hw_norm(g2, 2, rep) == Q(280, 243)


def test_so44_hw_norm_values(so44):
    rep = solve_gram(so44, 3)
    for n in (1, 2, 3):
        assert model_hw_norm(so44, n, rep) == Q(1, n + 1)
