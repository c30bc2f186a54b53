"""Wronskians of germs evaluated on k-jets of curves.

For f_0..f_k and a germ nu through the origin, the value is the determinant of
the (k+1)x(k+1) matrix whose (i, j) entry is d^i(f_j o nu)/dt^i at t = 0.  As a
jet differential it has weighted degree k(k+1)/2, which is what the
reparameterization check exercises.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import DimensionMismatch, ScaleGuardExceeded
from .polyjet import (
    CurveGerm,
    Jet,
    Poly,
    compose_germ,
    derivative_column,
    monomials_up_to,
    random_germ,
    random_poly,
    reparameterize,
)
from .report import SuiteReport

DEFAULT_SUBSET_CAP = 10**6


@dataclass(frozen=True)
class WronskianValue:
    value: Fraction
    k: int

    @property
    def weight(self) -> int:
        return self.k * (self.k + 1) // 2


@dataclass(frozen=True)
class SpanZeroReport:
    jet: CurveGerm
    all_vanish: bool
    witnesses: tuple  # (k+1)-subsets of exponent vectors with nonzero Wronskian
    regular: bool


def det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in matrix]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / p
                row_r, row_c = m[r], m[col]
                for c in range(col, n):
                    row_r[c] -= factor * row_c[c]
    return sign * result


def wronskian_matrix(fs: Sequence[Poly], nu: CurveGerm) -> list[list[Fraction]]:
    k = len(fs) - 1
    if k < 0:
        raise ValueError("need at least one function")
    if nu.order < k:
        raise DimensionMismatch(f"germ order {nu.order} is below the Wronskian order {k}")
    nu_k = nu.truncate(k) if nu.order > k else nu
    cols = [derivative_column(compose_germ(f, nu_k)) for f in fs]
    return [[cols[j][i] for j in range(k + 1)] for i in range(k + 1)]


def wronskian_value(fs: Sequence[Poly], nu: CurveGerm) -> WronskianValue:
    for f in fs:
        if f.nvars != nu.dim:
            raise DimensionMismatch(f"polynomial in {f.nvars} variables vs germ of dimension {nu.dim}")
    return WronskianValue(det(wronskian_matrix(fs, nu)), len(fs) - 1)


def wronskian(fs: Sequence[Poly], nu: CurveGerm) -> Fraction:
    """Shorthand for ``wronskian_value(fs, nu).value``."""
    return wronskian_value(fs, nu).value


def span_zero_test(n: int, k: int, delta: int, nu: CurveGerm, cap: int = DEFAULT_SUBSET_CAP) -> SpanZeroReport:
    """Evaluate the Wronskian on every (k+1)-subset of monomials of degree <= delta.

    By alternation and multilinearity these values span the evaluations at
    ``nu`` of all Wronskians of polynomials of degree <= delta.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if nu.dim != n:
        raise DimensionMismatch(f"germ dimension {nu.dim} != n = {n}")
    if nu.order < k:
        raise DimensionMismatch(f"germ order {nu.order} < k = {k}")
    basis = monomials_up_to(n, delta)
    n_subsets = comb(len(basis), k + 1)
    if n_subsets > cap:
        raise ScaleGuardExceeded(f"desk-scale exceeded: {n_subsets} subsets > cap {cap}")
    nu_k = nu.truncate(k)
    cols = {e: derivative_column(compose_germ(Poly.monomial(e), nu_k)) for e in basis}
    witnesses = []
    for subset in combinations(basis, k + 1):
        matrix = [[cols[e][i] for e in subset] for i in range(k + 1)]
        if det(matrix):
            witnesses.append(subset)
    return SpanZeroReport(nu, not witnesses, tuple(witnesses), nu.is_regular())


def check_common_factor(g: Poly, fs: Sequence[Poly], nu: CurveGerm) -> bool:
    """W(g f_0, ..., g f_k)(nu) == g(0)^(k+1) W(f_0, ..., f_k)(nu)."""
    k = len(fs) - 1
    left = wronskian([g * f for f in fs], nu)
    right = g.constant_term() ** (k + 1) * wronskian(fs, nu)
    return left == right


def check_reparameterization_weight(fs: Sequence[Poly], nu: CurveGerm, phi: Jet) -> bool:
    """W(f)(nu o phi) == phi'(0)^(k(k+1)/2) W(f)(nu)."""
    k = len(fs) - 1
    nu_k = nu.truncate(k)
    left = wronskian(fs, reparameterize(nu_k, phi))
    right = phi.coeffs[1] ** (k * (k + 1) // 2) * wronskian(fs, nu_k) if k >= 1 else wronskian(fs, nu_k)
    return left == right


def trial_rng(seed, label: str, trial: int) -> random.Random:
    # independent stream per (seed, suite, trial): results do not depend on execution order
    return random.Random(f"{seed}:{label}:{trial}")


def _random_tuple(rng, n, k, degree):
    return [random_poly(n, degree, rng) for _ in range(k + 1)]


def _nonzero_rational(rng, bound=7):
    num = rng.choice([c for c in range(-bound, bound + 1) if c])
    return Fraction(num, rng.randint(1, bound))


def check_alternating_multilinear(n: int, k: int, delta: int, trials: int, seed) -> SuiteReport:
    """Alternation, multilinearity and vanishing on dependent tuples, on random data."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rep = SuiteReport("alternating_multilinear")
    for t in range(trials):
        rng = trial_rng(seed, "altml", t)
        fs = _random_tuple(rng, n, k, delta)
        nu = random_germ(n, k, rng)
        base = wronskian(fs, nu)
        inputs = {"n": n, "k": k, "delta": delta, "trial": t}

        if k >= 1:
            i, j = sorted(rng.sample(range(k + 1), 2))
            swapped = list(fs)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            rep.add("alternation", inputs, -base, wronskian(swapped, nu))
        else:
            rep.add("alternation", inputs, base, base)

        slot = rng.randrange(k + 1)
        a = _nonzero_rational(rng)
        g = random_poly(n, delta, rng)
        mixed = list(fs)
        mixed[slot] = a * fs[slot] + g
        only_g = list(fs)
        only_g[slot] = g
        rep.add("multilinearity", inputs, a * base + wronskian(only_g, nu), wronskian(mixed, nu))

        if k >= 1:
            slot = rng.randrange(k + 1)
            dep = list(fs)
            combo = Poly(n)
            for idx, f in enumerate(fs):
                if idx != slot:
                    combo = combo + _nonzero_rational(rng) * f
            dep[slot] = combo
            rep.add("dependence", inputs, Fraction(0), wronskian(dep, nu))
    return rep


def common_factor_suite(n: int, k: int, delta: int, trials: int, seed) -> SuiteReport:
    rep = SuiteReport("common_factor")
    for t in range(trials):
        rng = trial_rng(seed, "common", t)
        fs = _random_tuple(rng, n, k, delta)
        nu = random_germ(n, k, rng, regular=rng.random() < 0.8)
        g = random_poly(n, delta, rng)
        if rng.random() < 0.25:
            g = g - g.constant_term()  # exercise g(0) = 0
        left = wronskian([g * f for f in fs], nu)
        right = g.constant_term() ** (k + 1) * wronskian(fs, nu)
        rep.add("common_factor", {"n": n, "k": k, "delta": delta, "trial": t}, right, left)
    return rep


def reparameterization_suite(n: int, k: int, delta: int, trials: int, seed) -> SuiteReport:
    rep = SuiteReport("reparameterization")
    for t in range(trials):
        rng = trial_rng(seed, "reparam", t)
        fs = _random_tuple(rng, n, k, delta)
        nu = random_germ(n, k, rng)
        phi = Jet((0,) + tuple(rng.randint(-5, 5) for _ in range(k)))
        scale = phi.coeffs[1] if k >= 1 else Fraction(1)
        expected = scale ** (k * (k + 1) // 2) * wronskian(fs, nu)
        got = wronskian(fs, reparameterize(nu, phi))
        rep.add("reparameterization", {"n": n, "k": k, "delta": delta, "trial": t}, expected, got)
    return rep


def theorem21_suite(n: int, k: int, trials: int, seed, extra_degree: int = 2) -> SuiteReport:
    """Vanishing of W(f_0, ..., f_k) whenever f_0 lies in m^(k+1)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rep = SuiteReport("vanishing")
    for t in range(trials):
        rng = trial_rng(seed, "vanish", t)
        f0 = random_poly(n, k + 1 + extra_degree, rng, in_m_power=k + 1)
        others = [random_poly(n, k + 1, rng) for _ in range(k)]
        nu = random_germ(n, k, rng, regular=True)
        got = wronskian([f0] + others, nu)
        rep.add("vanishing", {"n": n, "k": k, "trial": t}, Fraction(0), got)
    return rep


def stabilization_suite(deltas=(2, 3, 4), grid: int = 10, cap: int = DEFAULT_SUBSET_CAP) -> SuiteReport:
    """n = 1, k = 2: the common zero locus of the span is {nu'(0) = 0} for every delta.

    Jets run over nu = a1 t + a2 t^2 with a1, a2 in [-grid, grid].
    """
    rep = SuiteReport("stabilization")
    verdicts = {}
    for delta in deltas:
        for a1 in range(-grid, grid + 1):
            for a2 in range(-grid, grid + 1):
                nu = CurveGerm.from_coefficients([(a1, a2)])
                res = span_zero_test(1, 2, delta, nu, cap=cap)
                verdicts.setdefault((a1, a2), set()).add(res.all_vanish)
                rep.add("zero_locus", {"delta": delta, "a1": a1, "a2": a2}, a1 == 0, res.all_vanish)
    for (a1, a2), seen in verdicts.items():
        rep.add("delta_independence", {"a1": a1, "a2": a2}, 1, len(seen))
    return rep
