import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from effbound.bounds import (
    DebarreParams,
    KobayashiParams,
    condition_codim,
    condition_diamond,
    condition_heart,
    condition_lozenge,
    condition_spade,
    condition_star,
    debarre_c0,
    debarre_degree_bound,
    debarre_r_bound,
    debarre_report,
    debarre_witness,
    demailly_bound,
    kobayashi_degree_bound,
    kobayashi_report,
    kobayashi_witness,
    m_infinity,
    prior_bounds,
    product_b,
)

from oracles import debarre_exhaustive_uniform, kobayashi_exhaustive


# ---------------------------------------------------------------- closed forms

def test_kobayashi_values():
    assert kobayashi_degree_bound(2) == 12338
    assert kobayashi_degree_bound(3) == 4147263


def test_debarre_values():
    assert [debarre_degree_bound(N) for N in (2, 3, 4)] == [117, 25015, 134477]
    assert [debarre_c0(N) for N in (2, 3, 4, 5)] == [1, 2, 2, 3]


def test_out_of_range():
    with pytest.raises(ValueError):
        kobayashi_degree_bound(1)
    with pytest.raises(ValueError):
        debarre_degree_bound(1)
    with pytest.raises(ValueError):
        prior_bounds(1)


def test_bounds_increase():
    ks = [kobayashi_degree_bound(n) for n in range(2, 13)]
    ds = [debarre_degree_bound(N) for N in range(2, 13)]
    assert ks == sorted(set(ks))
    assert ds == sorted(set(ds))


# ---------------------------------------------------------------- predicates

def test_star():
    # n=2, N=3, k=2, delta=6: 3*2 < binom(7, 6) = 7
    assert condition_star(2, 3, 2, 6, 2, 2)
    assert not condition_star(2, 3, 2, 6, 1, 2)
    assert not condition_star(2, 3, 3, 6, 2, 2)


def test_lozenge_is_strict():
    # m=36, k=2, eps=2, delta=6: 36*3*14 = 1512
    assert not condition_lozenge(36, 2, 2, 6, 1512)
    assert condition_lozenge(36, 2, 2, 6, 1513)


def test_spade_and_codim():
    assert condition_spade(4, 2) and not condition_spade(3, 2)
    assert condition_codim(6, 2, 2)
    assert not condition_codim(3, 2, 2)


def test_m_infinity():
    assert m_infinity(3, True) == 1
    assert m_infinity(3, False) == 3
    with pytest.raises(ValueError):
        m_infinity(0, False)


def test_heart_identity():
    b = product_b([2, 3])
    assert b == [18, 12]
    assert not condition_heart([1, 1], [2, 3], b, 204)
    assert condition_heart([1, 1], [2, 3], b, 205)
    with pytest.raises(ValueError):
        condition_heart([1], [2, 3], b, 300)


def test_diamond_boundaries():
    assert condition_diamond([3], 2)
    assert not condition_diamond([4, 7], 3)
    assert condition_diamond([5, 7], 3)


def test_r_bound_matches_heart_for_uniform_deltas():
    for deltas, eps in [((3,), (2,)), ((5, 5), (1, 4)), ((7, 7, 7), (3, 1, 2))]:
        rb = debarre_r_bound(deltas, eps)
        assert not condition_heart(eps, deltas, product_b(deltas), rb)
        assert condition_heart(eps, deltas, product_b(deltas), rb + 1)


# ---------------------------------------------------------------- Kobayashi witnesses

def test_witness_at_bound_n2():
    w = kobayashi_witness(2, 12338)
    assert (w.eps, w.r) == (2, 2054)
    assert all(w.conditions().values())


def test_no_witness_far_below():
    assert kobayashi_witness(2, 100) is None


def test_witness_one_below_bound():
    # the search finds room slightly below the closed form
    w = kobayashi_witness(2, 12337)
    assert (w.eps, w.r) == (7, 2053)


@pytest.mark.parametrize("n,step", [(2, 1), (3, 15)])
def test_witness_agrees_with_exhaustive_oracle(n, step):
    d0 = kobayashi_degree_bound(n)
    for t in range(0, 167, step):
        d = d0 + 6 * t
        w = kobayashi_witness(n, d)
        found = kobayashi_exhaustive(n, d)
        assert (w is not None) == bool(found)
        if w:
            assert (w.eps, w.r) in found


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 20000))
def test_witness_existence_matches_oracle_n2(d):
    w = kobayashi_witness(2, d)
    found = kobayashi_exhaustive(2, d)
    assert (w is not None) == bool(found)


def test_standard_choice_fields():
    p = KobayashiParams.standard_choice(2, 2, 2054)
    assert (p.N, p.k, p.delta, p.m, p.d) == (3, 2, 6, 36, 12338)


def test_kobayashi_report():
    rep = kobayashi_report(2)
    assert rep.bound == 12338 and rep.witness is not None
    assert rep.to_dict()["witness"]["r"] == 2054
    assert kobayashi_report(2, 100).verdicts == {"witness_found": False}


# ---------------------------------------------------------------- Debarre witnesses

def test_debarre_at_bound_n2():
    w = debarre_witness(2, 1, 117)
    assert (w.delta, w.eps, w.r, w.q) == ((3,), (3,), 37, 1)
    assert all(w.conditions().values())


def test_debarre_absent():
    assert debarre_witness(2, 1, 30) is None


@pytest.mark.parametrize("N", [2, 3, 4])
def test_debarre_agrees_with_exhaustive_oracle(N):
    c = debarre_c0(N)
    bound = debarre_degree_bound(N)
    for d in list(range(bound - 40, bound + 40)) + [10, 50]:
        w = debarre_witness(N, c, d)
        found = debarre_exhaustive_uniform(N, c, d)
        assert (w is not None) == bool(found)
        if w:
            assert (w.eps[0], w.r) in found


def test_debarre_search_delta_widens():
    # with delta = 3 alone d=120 still works; delta search must never lose a witness
    for d in range(100, 200):
        plain = debarre_witness(2, 1, d)
        wide = debarre_witness(2, 1, d, search_delta=True, delta_max=6)
        if plain is not None:
            assert wide is not None
        if wide is not None:
            assert all(wide.conditions().values())


def test_debarre_mixed_degrees():
    w = debarre_witness(3, 2, [30000, 30003])
    assert w is not None and w.d == (30000, 30003)
    with pytest.raises(ValueError):
        debarre_witness(3, 2, [25015])


def test_debarre_params_build():
    p = DebarreParams.build(2, [3], [3], 37)
    assert p.d == (117,) and p.b == (3,) and p.q == 1


def test_debarre_report():
    rep = debarre_report(3)
    assert rep.bound == 25015 and rep.witness is not None


# ---------------------------------------------------------------- prior bounds

def test_prior_bounds_values():
    p2 = prior_bounds(2)
    assert p2["diverio_merker_rousseau"] == 2
    assert p2["darondeau"] == 400
    assert p2["demailly"].value == 89
    assert prior_bounds(3)["diverio_merker_rousseau"] == 2**32


def test_demailly_interval_tag():
    c = demailly_bound(2)
    d = c.to_dict()
    assert d["type"] == "interval" and d["log"] == "natural"
    assert c.lo <= Fraction(89) + 1 and c.lo < c.hi
    assert math.floor(c.lo) == math.floor(c.hi) == 89


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_demailly_against_float(n):
    approx = n**4 / 3 * (n * math.log(n * math.log(24 * n))) ** n
    assert demailly_bound(n).value == math.floor(approx)
