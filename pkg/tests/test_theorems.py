import pytest
from hypothesis import given, settings

from nakphi import Module, Status, from_kupisch, from_relations, verify_all
from nakphi import theorems as th
from nakphi.census import sharpness_family

from conftest import kupisch_series


def by_name(results):
    return {r.name: r for r in results}


@pytest.mark.parametrize("fixture", ["e5", "e8", "selfinj"])
def test_fixtures_pass_everything(fixture, request):
    a = request.getfixturevalue(fixture)
    bad = [r for r in verify_all(a) if not r.ok]
    assert not bad


def test_e5_theorem_evidence(e5):
    results = by_name(verify_all(e5))
    assert results["theorem_B_bound"].evidence == "phi_dim = 2 < 2r = 4"
    assert results["small_phi"].status is Status.PASS
    assert results["one_relation"].status is Status.NA


def test_small_phi_names_outside_delta(e8):
    result = th.check_small_phi(e8)
    assert result.ok and "Delta not periodic: 1:2" in result.evidence


def test_selfinj_small_phi(selfinj):
    result = th.check_small_phi(selfinj)
    assert result.status is Status.PASS and result.evidence == "phi_dim = 0"


def test_one_relation_projective_d():
    a = from_relations(3, [(1, 2)])
    assert a.kupisch == (2, 4, 3)
    result = th.check_one_relation(a)
    assert result.status is Status.PASS and "projective, gldim = 2" in result.evidence


def test_one_relation_infinite():
    a = from_relations(4, [(1, 5)])
    assert a.kupisch == (5, 8, 7, 6)
    result = th.check_one_relation(a)
    assert result.status is Status.PASS
    assert "not projective" in result.evidence and "phi_dim = 2" in result.evidence


def test_finite_gldim_is_not_applicable():
    a = from_kupisch(3, [3, 4, 4])
    results = by_name(verify_all(a))
    for name in ("theorem_A_even", "theorem_B_bound", "small_phi", "odd_rho_witness"):
        assert results[name].status is Status.NA
    assert results["gldim_bound"].status is Status.PASS


def test_delta_projective():
    a = from_kupisch(4, [2, 3, 2, 3])
    result = th.check_delta_projective(a)
    assert result.status is Status.PASS and "gldim = 2" in result.evidence


def test_gustafson_e8(e8):
    g = th.gustafson_d(e8)
    assert g.d == 2 and 2 * g.d + 2 == 6
    assert g.f == (3, 4, 4, 2)
    assert g.cycle_points == {2, 4}
    assert g.bound_ok


def test_gustafson_selfinj(selfinj):
    assert th.gustafson_d(selfinj).d == 0


def test_odd_rho_witness_e8(e8):
    result = th.check_odd_rho_witness(e8)
    assert result.ok
    assert result.evidence == "(1, 2:5, 2:4); (3, 1:1, 1:7); (5, 5:1, 1:4)"


def test_terminal_projective_types(e5):
    assert th.classify_terminal_projective(e5, Module(4, 5)) is th.ProjectiveType.TYPE2
    with pytest.raises(th.NotProjective):
        th.classify_terminal_projective(e5, Module(4, 4))
    assert th.ProjectiveType.NONE.value not in th.terminal_projective_types(e5)


@pytest.mark.parametrize("n", range(3, 9))
def test_sharpness_family(n):
    a = sharpness_family(n)
    result = th.check_theorem_B(a)
    assert result.ok and f"= 2r = {2 * n - 2}" in result.evidence
    assert th.gustafson_d(a).d == n - 2


def test_sharpness_family_rejects_small_n():
    with pytest.raises(ValueError):
        sharpness_family(2)


def test_checks_can_fail(e5, monkeypatch):
    # feed the checks a wrong phi_dim; the theorems must notice
    monkeypatch.setattr(th, "phi_dim", lambda a: 3)
    assert th.check_theorem_A(e5).status is Status.FAIL
    assert th.check_small_phi(e5).status is Status.FAIL
    monkeypatch.setattr(th, "phi_dim", lambda a: 6)
    assert th.check_theorem_B(e5).status is Status.FAIL
    assert "phi_dim = 6 > 2r = 4" in th.check_theorem_B(e5).evidence


@settings(max_examples=200, deadline=None)
@given(kupisch_series(max_n=8, max_c=18))
def test_random_algebras_pass(series):
    a = from_kupisch(len(series), series)
    bad = [f"{r.name}: {r.evidence}" for r in verify_all(a) if not r.ok]
    assert not bad
