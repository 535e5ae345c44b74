import pytest

from untwist.bounds import (
    bounds_report,
    lower_bound_twists,
    normalize_fields,
    upper_bound_twists,
    witness_family,
)
from untwist.errors import NonPrimeModulus
from untwist.generators import random_seifert, random_unimodular
from untwist.laurent import QQ, PrimeField
from untwist.seifert import basis_change, connected_sum, validate_seifert

F2, F3 = PrimeField(2), PrimeField(3)
GK1 = validate_seifert([[0, 1], [2, 0]])
TREFOIL = validate_seifert([[-1, 1], [0, -1]])
UNKNOT = validate_seifert([])


def test_lower_bound_gk1():
    assert lower_bound_twists(GK1, {F2, F3, QQ}) == 2


def test_lower_bound_depends_on_field():
    assert lower_bound_twists(GK1, {F2}) == 0


def test_lower_bound_trivial_cases():
    assert lower_bound_twists(UNKNOT, {F3}) == 0
    assert lower_bound_twists(GK1, set()) == 0


def test_lower_bound_rejects_composite():
    with pytest.raises(NonPrimeModulus):
        lower_bound_twists(GK1, ["F4"])


def test_field_names_accepted():
    assert normalize_fields(["Q", "F3", 2, F3]) == (F2, F3, QQ)


def test_upper_bound():
    assert upper_bound_twists(GK1) == 2
    assert upper_bound_twists(UNKNOT) == 0
    assert upper_bound_twists(witness_family(3)) == 6


def test_witness_family_shapes():
    assert witness_family(0).entries == ()
    assert witness_family(1).entries == ((0, 1), (2, 0))
    w4 = witness_family(4)
    assert w4.dim == 8
    assert lower_bound_twists(w4, {F3}) == 8 == upper_bound_twists(w4)


@pytest.mark.parametrize("g", range(0, 7))
def test_witness_family_tight(g):
    rep = bounds_report(witness_family(g), {F3})
    assert rep.lower_bound == rep.upper_bound == 2 * g
    assert rep.tight


def test_report_gk1():
    rep = bounds_report(GK1, {F3})
    assert (rep.genus, rep.lower_bound, rep.upper_bound, rep.tight) == (1, 2, 2, True)


def test_report_empty():
    rep = bounds_report(UNKNOT, set())
    assert (rep.genus, rep.lower_bound, rep.upper_bound, rep.tight) == (0, 0, 0, True)


def test_report_trefoil():
    rep = bounds_report(TREFOIL, {F2})
    assert (rep.genus, rep.lower_bound, rep.upper_bound, rep.tight) == (1, 1, 2, False)


def test_report_json_key_order():
    js = bounds_report(GK1, {F3, F2, QQ}).to_json()
    assert list(js) == ["genus", "alexander", "ranks", "lower_bound", "upper_bound", "upper_bound_scope", "tight"]
    assert list(js["ranks"]) == ["F2", "F3", "Q"]
    assert js["ranks"] == {"F2": 0, "F3": 2, "Q": 1}


def test_lower_bound_congruence_invariant(rng):
    for _ in range(30):
        v = random_seifert(rng, rng.randint(1, 3))
        w = basis_change(v, random_unimodular(rng, v.dim))
        assert lower_bound_twists(v, {F2, F3}) == lower_bound_twists(w, {F2, F3})


def test_monotone_under_witness_sum(rng):
    for _ in range(30):
        v = random_seifert(rng, rng.randint(0, 2))
        assert lower_bound_twists(connected_sum(v, witness_family(1)), {F3}) >= lower_bound_twists(v, {F3})


def test_lower_never_exceeds_upper(rng):
    for _ in range(30):
        v = random_seifert(rng, rng.randint(0, 3))
        rep = bounds_report(v, {F2, F3, PrimeField(5), QQ})
        assert rep.lower_bound <= rep.upper_bound
