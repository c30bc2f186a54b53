"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import pytest

from effbound.bounds import (
    condition_diamond,
    condition_heart,
    debarre_c0,
    debarre_degree_bound,
    debarre_witness,
    kobayashi_degree_bound,
    kobayashi_witness,
    product_b,
)
from effbound.grassmann import line_curve_spec, pluecker_of_curve, product_curve_degrees, verify_degree_one
from effbound.intersect import PolySystem, product_multiplicity_formula, quotient_dimension, verify_lemma31, \
    verify_lemma_product
from effbound.polyjet import CurveGerm, Poly
from effbound.wronskian import (
    check_alternating_multilinear,
    common_factor_suite,
    reparameterization_suite,
    span_zero_test,
    theorem21_suite,
    wronskian,
)


@contextmanager
def criterion(capsys, number, label, limit_s):
    start = time.perf_counter()
    ok, detail = False, ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < limit_s
        detail = f"{elapsed:.2f}s < {limit_s}s" if ok else f"{elapsed:.2f}s exceeds {limit_s}s"
    except AssertionError as exc:
        detail = f"assertion failed: {exc}"
        raise
    finally:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {label} ({detail})")
    assert ok, detail


def test_c1_bound_formulas(capsys):
    with criterion(capsys, 1, "closed-form degree bounds", 1):
        assert kobayashi_degree_bound(2) == 12338
        assert kobayashi_degree_bound(3) == 4147263
        assert debarre_degree_bound(2) == 117
        assert debarre_degree_bound(3) == 25015
        assert debarre_degree_bound(4) == 134477


def test_c2_kobayashi_witnesses(capsys):
    with criterion(capsys, 2, "Kobayashi witnesses on [d0, d0+1000]", 10):
        for n in (2, 3):
            N, k, delta = n + 1, n, n * (n + 1)
            d0 = kobayashi_degree_bound(n)
            for d in range(d0, d0 + 1001):
                w = kobayashi_witness(n, d)
                assert w is not None, (n, d)
                assert (w.N, w.k, w.delta, w.d) == (N, k, delta, d)
                assert d == n * (n + 1) * (w.r + n) + w.eps
                assert w.eps >= k
                assert (k + 1) * n < comb(N - n + delta, delta)
                assert w.m * (k + 1) * (w.eps + k * delta) < w.r
                assert delta >= n * n
                assert delta + 1 > n + (n - 1) * k
                assert all(w.conditions().values())


def test_c3_debarre_witnesses(capsys):
    with criterion(capsys, 3, "Debarre witnesses on [bound, bound+200]", 10):
        for N in (2, 3, 4):
            c = debarre_c0(N)
            bound = debarre_degree_bound(N)
            for d in range(bound, bound + 201):
                w = debarre_witness(N, c, d)
                assert w is not None, (N, d)
                assert w.delta == (2 * N - 1,) * c
                assert all(dp == de * (w.r + 1) + e for dp, de, e in zip(w.d, w.delta, w.eps))
                assert condition_heart(w.eps, w.delta, product_b(w.delta), w.r)
                assert condition_diamond(w.delta, N)
                assert all(w.conditions().values())


LEMMA31_CASES = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]


def test_c4_line_intersection_multiplicity(capsys):
    with criterion(capsys, 4, "unique point and multiplicity delta^(N-1)", 60):
        for N, delta in LEMMA31_CASES:
            rep = verify_lemma31(N, delta, chart="t0")
            assert rep.point == (0,) * (N - 1) + (-1, (-1) ** (delta + 1)), (N, delta)
            assert rep.unique, (N, delta)
            assert rep.multiplicity == delta ** (N - 1), (N, delta)


def test_c5_product_multiplicities(capsys):
    with criterion(capsys, 5, "product multiplicities (8,8) and (18,12)", 120):
        for deltas, expected in (((2, 2), (8, 8)), ((2, 3), (18, 12))):
            got = tuple(verify_lemma_product(2, 1, deltas, i).multiplicity for i in (1, 2))
            assert got == expected, (deltas, got)
            assert tuple(product_multiplicity_formula(deltas, 1, i) for i in (1, 2)) == expected


SUITE_PAIRS = [(1, 1), (1, 2), (1, 4), (2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)]


def test_c6_wronskian_identities(capsys):
    with criterion(capsys, 6, "Wronskian identity suites 200/200", 30):
        totals = {}
        for n, k in SUITE_PAIRS:
            for rep in (
                theorem21_suite(n, k, 20, seed=2026),
                check_alternating_multilinear(n, k, k + 1, 20, seed=2026),
                common_factor_suite(n, k, k + 1, 20, seed=2026),
                reparameterization_suite(n, k, k + 1, 20, seed=2026),
            ):
                for name, (passed, total) in rep.summary().items():
                    p0, t0 = totals.get(name, (0, 0))
                    totals[name] = (p0 + passed, t0 + total)
        for name in ("vanishing", "alternation", "multilinearity", "common_factor", "reparameterization"):
            assert totals[name] == (200, 200), (name, totals[name])


def test_c7_stabilization_zero_locus(capsys):
    with criterion(capsys, 7, "span-zero locus is a1 = 0 for delta 2, 3, 4", 30):
        grid = range(-10, 11)
        for a1 in grid:
            for a2 in grid:
                nu = CurveGerm.from_coefficients([(a1, a2)])
                verdicts = {span_zero_test(1, 2, delta, nu).all_vanish for delta in (2, 3, 4)}
                assert verdicts == {a1 == 0}, (a1, a2, verdicts)


def test_c8_pluecker_degree_one(capsys):
    with criterion(capsys, 8, "Pluecker degree one and product indicator", 5):
        for N, delta in ((2, 2), (3, 2), (3, 3)):
            v = pluecker_of_curve(line_curve_spec(N, delta))
            assert len(v.nonzero()) == 2
            assert verify_degree_one(v), (N, delta)
        for deltas in ((2, 2), (2, 3), (3, 5)):
            assert product_curve_degrees(2, 1, deltas, 1) == [1, 0]
            assert product_curve_degrees(2, 1, deltas, 2) == [0, 1]


def test_c9_oracle_cross_checks(capsys):
    with criterion(capsys, 9, "monomial quotients and 3x3 Wronskian closed form", 10):
        rng = random.Random(909)
        for _ in range(50):
            n = rng.randint(1, 4)
            exps = [rng.randint(1, 5) for _ in range(n)]
            gens = tuple(Poly.variable(n, i) ** e for i, e in enumerate(exps))
            expected = 1
            for e in exps:
                expected *= e
            assert quotient_dimension(PolySystem(tuple(f"v{i}" for i in range(n)), gens)) == expected
        one, z = Poly.constant(1, 1), Poly.variable(1, 0)
        for _ in range(50):
            a1 = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
            a2 = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
            nu = CurveGerm.from_coefficients([(a1, a2)])
            assert wronskian([one, z, z**2], nu) == 2 * a1**3
