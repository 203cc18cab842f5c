"""Tests for Vey basis enumeration, classification, counts, validation."""

import pytest

from veycalc import vey


def _names(classes):
    return [c.name() for c in classes]


def test_vey_basis_wo1():
    assert _names(vey.vey_basis(1, "WO")) == ["y1c1"]


def test_vey_basis_w2_degrees():
    classes = vey.vey_basis(2, "W")
    assert _names([c for c in classes if c.degree == 5]) == ["y1c1^2", "y1c2"]
    # y2c1^2 excluded: i_1 = 2 > j_1 = 1
    assert _names([c for c in classes if c.degree == 7]) == ["y2c2"]


def test_vey_basis_wo3_degree7():
    classes = [c for c in vey.vey_basis(3, "WO") if c.degree == 7]
    assert _names(classes) == ["y1c1^3", "y1c1c2", "y1c3"]


def test_classification():
    classes = {c.name(): c for c in vey.vey_basis(2, "W")}
    gv = classes["y1c1^2"]
    assert gv.is_generalized_gv and gv.is_residual and not gv.is_rigid
    rigid = classes["y2c2"]
    assert rigid.is_rigid and rigid.is_residual and not rigid.is_generalized_gv
    assert not rigid.is_variable_candidate  # rigid classes cannot vary

    y1c3 = {c.name(): c for c in vey.vey_basis(3, "WO")}["y1c3"]
    assert y1c3.is_generalized_gv and y1c3.is_residual and not y1c3.is_rigid


def test_classify_idempotent():
    for c in vey.vey_basis(3, "WO"):
        assert vey.classify(c) == c


def test_variable_sets_and_counts():
    assert _names(vey.variable_set(1)) == ["y1c1"]
    assert _names(vey.variable_set(2)) == ["y1c1^2", "y1c2"]
    assert _names(vey.variable_set(3)) == ["y1c1^3", "y1c1c2", "y1c3"]
    assert [vey.v_count(q) for q in (1, 2, 3)] == [1, 2, 3]


def test_kappa():
    assert vey.kappa(3) == 1
    assert vey.kappa(7) == 2
    assert vey.kappa(2) == 0
    # monotone, and the defining inequalities hold
    prev = 0
    for q in range(1, 20):
        k = vey.kappa(q)
        assert k >= prev
        assert 4 * k <= q + 1 < 4 * (k + 1)
        prev = k


def test_extended_basis_q3():
    classes, counts = vey.extended_basis(3)
    assert counts[7] == 3  # empty I' reproduces the variable set
    assert counts[10] == 3
    deg10 = [e.name() for e in classes if e.degree == 10]
    assert deg10 == ["y1y2c1^3", "y1y2c1c2", "y1y2c3"]
    assert vey.extended_count(3, 10) == 3


def test_extended_basis_empty_iprime_is_variable_set():
    for q in (1, 2, 3):
        classes, counts = vey.extended_basis(q)
        base = [e for e in classes if not e.i_prime]
        assert [e.name() for e in base] == _names(vey.variable_set(q))
        assert counts[2 * q + 1] == vey.v_count(q)


def test_extended_basis_q7_allows_i_prime_4():
    classes, counts = vey.extended_basis(7)
    # 2*4 = 8 <= q+1 = 8, so I' = (2,4) and (4,) appear
    i_primes = {e.i_prime for e in classes}
    assert (4,) in i_primes and (2, 4) in i_primes


def test_extended_monomials_are_cocycles():
    from veycalc import complexes, gca

    cx = complexes.build_complex(3, "W")
    classes, _ = vey.extended_basis(3)
    for e in classes:
        el = gca.Element.monomial(cx.signature, e.monomial)
        assert complexes.is_cocycle(cx, el), e.name()


def test_degree_range_filter():
    classes, _ = vey.extended_basis(3, degree_range=(10, 10))
    assert all(e.degree == 10 for e in classes)


@pytest.mark.parametrize("q", [1, 2, 3])
@pytest.mark.parametrize("kind", ["W", "WO"])
def test_validate(q, kind):
    report = vey.validate_vey(q, kind)
    assert report.ok
    for check in report.per_degree:
        assert check.independent
        if check.degree > 2 * q:
            assert check.enumerated == check.oracle_dim


def test_validate_flags_w2_degree8():
    report = vey.validate_vey(2, "W")
    deg8 = next(c for c in report.per_degree if c.degree == 8)
    assert deg8.oracle_dim == 2
    assert any("classical generator tables" in n for n in deg8.notes)


def test_vey_cocycles_q4():
    from veycalc import complexes, gca

    for kind in ("W", "WO"):
        cx = complexes.build_complex(4, kind)
        for v in vey.vey_basis(4, kind):
            el = gca.Element.monomial(cx.signature, v.monomial)
            assert complexes.is_cocycle(cx, el), v.name()
