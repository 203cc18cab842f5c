"""Tests for the bigraded minimal model and loop-space Poincare series."""

from fractions import Fraction

import pytest

from veycalc import minimal_model
from veycalc.minimal_model import (
    FreeAlgebra,
    ModelBudgetError,
    build_model,
    loop_poincare,
    rank_table,
)


def test_free_algebra_words():
    alg = FreeAlgebra()
    x = alg.add_generator("x", 2, {})
    a = alg.add_generator("a", 3, {})
    b = alg.add_generator("b", 3, {})
    # odd generators anticommute and square to zero
    ab = alg.mul(alg.gen_element(a), alg.gen_element(b))
    ba = alg.mul(alg.gen_element(b), alg.gen_element(a))
    assert alg.add(ab, ba) == {}
    assert alg.mul(alg.gen_element(a), alg.gen_element(a)) == {}
    # basis enumeration
    assert [alg.word_label(w) for w in alg.basis(6)] == ["x^3", "ab"]


def test_free_algebra_differential_leibniz():
    alg = FreeAlgebra()
    x = alg.add_generator("x", 2, {})
    dw = {((x, 2),): Fraction(1)}  # d(w) = x^2
    w = alg.add_generator("w", 3, dw)
    # d(x w) = x * x^2 = x^3
    xw = alg.mul(alg.gen_element(x), alg.gen_element(w))
    assert alg.differential(xw) == {((x, 3),): Fraction(1)}
    # d(w * w) = 0 automatically (w odd, w^2 = 0)
    assert alg.differential(alg.differential(xw)) == {}


def test_model_q1():
    m = build_model(1, 8)
    assert m.generator_ranks() == {2: 1, 3: 1}
    assert all(m.quasi_iso_check.values())
    # the degree-3 generator kills the square of the degree-2 one
    (gid3,) = m.generators[3]
    d = m.differentials[gid3]
    assert [m.algebra.word_label(w) for w in d] == ["x2_0^2"]


def test_model_q2_degree6():
    m = build_model(2, 6)
    assert m.generator_ranks() == {2: 1, 4: 1, 5: 2}
    assert all(m.quasi_iso_check.values())


def test_model_q2_degree8():
    m = build_model(2, 8)
    ranks = m.generator_ranks()
    assert ranks[5] == 2
    assert ranks[7] == 1
    assert all(m.quasi_iso_check.values())


def test_model_q3():
    m = build_model(3, 10)
    assert all(m.quasi_iso_check.values())
    ranks = m.generator_ranks()
    assert ranks[2] == 1 and ranks[4] == 1 and ranks[6] == 1
    assert ranks[7] == 4


def test_model_trivial_cap():
    m = build_model(4, 3)
    assert m.generator_ranks() == {2: 1}


def test_minimality_no_linear_terms():
    for q, cap in [(1, 8), (2, 8), (3, 10)]:
        m = build_model(q, cap)
        for gid, d in m.differentials.items():
            for w in d:
                assert not (len(w) == 1 and w[0][1] == 1), (gid, q)


def test_d_squared_zero_in_model():
    m = build_model(2, 8)
    for gid, d in m.differentials.items():
        assert m.algebra.differential(d) == {}


def test_determinism():
    a = build_model(2, 8).to_json_obj()
    b = build_model(2, 8).to_json_obj()
    assert a == b


def test_budget_error():
    with pytest.raises(ModelBudgetError) as exc:
        build_model(3, 12, word_budget=2)
    assert exc.value.attempted_dimension > 2


def test_rank_table():
    m = build_model(2, 8)
    t = rank_table(m)
    assert t.q == 2
    assert t.ranks == m.generator_ranks()
    assert all(d >= 2 for d in t.ranks)


def test_loop_poincare_single_even():
    s = loop_poincare({3: 1}, 1, 10)
    assert s.coefficients == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_loop_poincare_single_odd():
    s = loop_poincare({5: 2}, 2, 9)
    assert s.coefficients == [1, 0, 0, 2, 0, 0, 1, 0, 0, 0]


def test_loop_poincare_empty_and_drops():
    assert loop_poincare({}, 0, 4).coefficients == [1, 0, 0, 0, 0]
    # a generator delooped to nonpositive degree is dropped
    assert loop_poincare({2: 1}, 3, 4).coefficients == [1, 0, 0, 0, 0]


def test_loop_poincare_mixed():
    # even in degree 2 and odd in degree 3: (1+t^3)/(1-t^2)
    s = loop_poincare({4: 1, 5: 1}, 2, 6)
    assert s.coefficients == [1, 0, 1, 1, 1, 1, 1]
