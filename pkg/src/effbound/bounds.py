"""Effective degree bounds, the inequalities behind them, and integer witnesses.

Kobayashi setting: a hypersurface of degree d = delta(r + k) + eps with the
parameter choice N = k + 1 = n + 1, delta = n(n+1).  Debarre setting: complete
intersections with d_p = delta_p (r + 1) + eps_p.  All strict inequalities are
strict here too.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, floor, prod
from typing import Sequence

import mpmath

from .errors import EffboundError

# ------------------------------------------------------------------ closed forms


def kobayashi_degree_bound(n: int) -> int:
    """d0 = n^(n+1) (n+1)^(n+2) (n^3 + 2n^2 + 2n - 1) + n^3 + 3n^2 + 3n."""
    if n < 2:
        raise ValueError("the Kobayashi bound is stated for n >= 2")
    return n ** (n + 1) * (n + 1) ** (n + 2) * (n**3 + 2 * n**2 + 2 * n - 1) + n**3 + 3 * n**2 + 3 * n


def debarre_c0(N: int) -> int:
    return (N + 1) // 2


def debarre_degree_bound(N: int) -> int:
    """4 c0 (2N-1)^(2 c0 + 1) + 6N - 3 with c0 = floor((N+1)/2)."""
    if N < 2:
        raise ValueError("the Debarre bound is stated for N >= 2")
    c0 = debarre_c0(N)
    return 4 * c0 * (2 * N - 1) ** (2 * c0 + 1) + 6 * N - 3


# -------------------------------------------------------------------- predicates


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def condition_star(n: int, N: int, k: int, delta: int, eps: int, m_inf: int) -> bool:
    """(k+1) n < binom(N - n + delta, delta) and eps >= m_inf."""
    return (k + 1) * n < _binom(N - n + delta, delta) and eps >= m_inf


def condition_lozenge(m: int, k: int, eps: int, delta: int, r: int) -> bool:
    """m (k+1) (eps + k delta) < r."""
    return m * (k + 1) * (eps + k * delta) < r


def condition_spade(delta: int, n: int) -> bool:
    return delta >= n * n


def condition_codim(delta: int, n: int, k: int) -> bool:
    """delta + 1 > n + (n-1) k, the dimension of the blown-up jet space."""
    return delta + 1 > n + (n - 1) * k


def m_infinity(k: int, generates_k_jets: bool) -> int:
    """Stabilization exponent of the Wronskian ideal: 1 with k-jet generation, else k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return 1 if generates_k_jets else k


def product_b(deltas: Sequence[int], k: int = 1) -> list[int]:
    """b_i = prod_j delta_j^(k+1) / delta_i; the Debarre setting uses k + 1 = 2."""
    total = prod(d ** (k + 1) for d in deltas)
    return [total // d for d in deltas]


def condition_heart(eps: Sequence[int], deltas: Sequence[int], b: Sequence[int], r: int) -> bool:
    """2 sum_p (eps_p + delta_p) b_p < r."""
    if not len(eps) == len(deltas) == len(b):
        raise ValueError("eps, delta and b must have equal length")
    return 2 * sum((e + d) * bp for e, d, bp in zip(eps, deltas, b)) < r


def condition_diamond(deltas: Sequence[int], N: int) -> bool:
    """min delta + 1 > 2N - 1 = dim P(Omega_M)."""
    return min(deltas) + 1 > 2 * N - 1


def debarre_r_bound(deltas: Sequence[int], eps: Sequence[int]) -> int:
    """2c prod delta^2 + 2 sum eps_i prod delta^2 / delta_i (the r-threshold, not strict)."""
    c = len(deltas)
    sq = prod(d * d for d in deltas)
    return 2 * c * sq + 2 * sum(e * sq // d for e, d in zip(eps, deltas))


# --------------------------------------------------------------------- witnesses


@dataclass(frozen=True)
class KobayashiParams:
    n: int
    N: int
    k: int
    delta: int
    eps: int
    r: int
    m: int
    d: int

    @classmethod
    def standard_choice(cls, n: int, eps: int, r: int) -> KobayashiParams:
        N, k, delta = n + 1, n, n * (n + 1)
        return cls(n, N, k, delta, eps, r, delta ** (N - 1), delta * (r + k) + eps)

    def conditions(self) -> dict:
        """Recompute every inequality from the raw fields."""
        m_inf = m_infinity(self.k, generates_k_jets=False)
        return {
            "decomposition": self.d == self.delta * (self.r + self.k) + self.eps,
            "star": condition_star(self.n, self.N, self.k, self.delta, self.eps, m_inf),
            "lozenge": condition_lozenge(self.m, self.k, self.eps, self.delta, self.r),
            "spade": condition_spade(self.delta, self.n),
            "codim": condition_codim(self.delta, self.n, self.k),
            "positive": min(self.n, self.N, self.k, self.delta, self.eps, self.r, self.m, self.d) > 0,
        }

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class DebarreParams:
    N: int
    c: int
    c0: int
    delta: tuple
    eps: tuple
    r: int
    d: tuple
    b: tuple
    q: int

    @classmethod
    def build(cls, N: int, deltas: Sequence[int], eps: Sequence[int], r: int) -> DebarreParams:
        deltas, eps = tuple(deltas), tuple(eps)
        b = tuple(product_b(deltas))
        d = tuple(dp * (r + 1) + ep for dp, ep in zip(deltas, eps))
        q = r - 2 * sum((e + dp) * bp for e, dp, bp in zip(eps, deltas, b))
        return cls(N, len(deltas), debarre_c0(N), deltas, eps, r, d, b, q)

    def conditions(self) -> dict:
        b = product_b(self.delta)
        return {
            "decomposition": all(
                dp == de * (self.r + 1) + e for dp, de, e in zip(self.d, self.delta, self.eps)
            ),
            "heart": condition_heart(self.eps, self.delta, b, self.r),
            "diamond": condition_diamond(self.delta, self.N),
            "r_bound": self.r > debarre_r_bound(self.delta, self.eps),
            "eps_positive": min(self.eps) >= 1,
        }

    def to_dict(self):
        return asdict(self)


@dataclass
class BoundReport:
    bound: int
    verdicts: dict = field(default_factory=dict)
    witness: object = None

    def __post_init__(self):
        if self.witness is not None and not all(self.verdicts.values()):
            raise EffboundError("a witness was attached to failing conditions")

    def to_dict(self):
        return {
            "bound": self.bound,
            "verdicts": self.verdicts,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


def kobayashi_threshold(n: int, eps: int) -> int:
    """r must exceed delta^(N-1) (k+1)(eps + k delta) = n^n (n+1)^(n+1) (eps + n^2 (n+1))."""
    return n**n * (n + 1) ** (n + 1) * (eps + n * n * (n + 1))


def kobayashi_witness(n: int, d: int) -> KobayashiParams | None:
    """Find eps >= n, r with d = n(n+1)(r+n) + eps and r above the threshold.

    Candidates run through eps = d mod n(n+1) lifted to [n, d].  Raising eps
    lowers r and raises the threshold, so the first failing candidate ends
    the search.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if d < 1:
        raise ValueError("d must be >= 1")
    delta = n * (n + 1)
    eps = n + (d - n) % delta
    while eps <= d:
        r = (d - eps) // delta - n
        if r < 1 or r <= kobayashi_threshold(n, eps):
            return None
        params = KobayashiParams.standard_choice(n, eps, r)
        if all(params.conditions().values()):
            return params
        eps += delta
    return None


def kobayashi_report(n: int, d: int | None = None) -> BoundReport:
    bound = kobayashi_degree_bound(n)
    w = kobayashi_witness(n, bound if d is None else d)
    verdicts = w.conditions() if w else {"witness_found": False}
    return BoundReport(bound, verdicts, w)


def debarre_witness(N: int, c: int, d, search_delta: bool = False,
                    delta_max: int | None = None) -> DebarreParams | None:
    """Find delta_p >= 2N-1, eps_p >= 1 and one shared r with d_p = delta_p (r+1) + eps_p.

    ``d`` is a list of c degrees or one int (uniform degrees).  By default
    delta_p = 2N-1; ``search_delta`` also tries delta_p up to ``delta_max``.
    For fixed deltas the largest feasible r gives the smallest eps_p (those
    with eps_p in [1, delta_p] first); any smaller r only raises the
    threshold, so one r per delta vector is enough.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if c < 1:
        raise ValueError("c must be >= 1")
    ds = [d] * c if isinstance(d, int) else list(d)
    if len(ds) != c:
        raise ValueError(f"expected {c} degrees, got {len(ds)}")
    base = 2 * N - 1
    if search_delta:
        top = delta_max if delta_max is not None else 2 * base
        candidates = product(range(base, top + 1), repeat=c)
    else:
        candidates = [(base,) * c]
    for deltas in candidates:
        r = min((dp - 1) // de for dp, de in zip(ds, deltas)) - 1
        if r < 1:
            continue
        eps = [dp - de * (r + 1) for dp, de in zip(ds, deltas)]
        if r <= debarre_r_bound(deltas, eps):
            continue
        params = DebarreParams.build(N, deltas, eps, r)
        if all(params.conditions().values()):
            return params
    return None


def debarre_report(N: int, d: int | None = None) -> BoundReport:
    bound = debarre_degree_bound(N)
    w = debarre_witness(N, debarre_c0(N), bound if d is None else d)
    verdicts = w.conditions() if w else {"witness_found": False}
    return BoundReport(bound, verdicts, w)


# ------------------------------------------------------------------ prior bounds


def _mpf_to_fraction(mpf_tuple) -> Fraction:
    sign, man, exp, _ = mpf_tuple
    v = Fraction(int(man)) * (Fraction(2) ** exp)
    return -v if sign else v


@dataclass(frozen=True)
class CertifiedFloor:
    value: int
    lo: Fraction
    hi: Fraction
    prec: int
    log_base: str = "e"

    def to_dict(self):
        return {
            "type": "interval",
            "floor": self.value,
            "lo": self.lo,
            "hi": self.hi,
            "precision_bits": self.prec,
            "log": "natural",
        }


def demailly_bound(n: int, width: Fraction = Fraction(1, 1000), max_prec: int = 4096) -> CertifiedFloor:
    """floor(n^4/3 * (n log(n log(24n)))^n), certified by interval arithmetic (natural log)."""
    prec = 64
    while prec <= max_prec:
        ctx = mpmath.ctx_iv.MPIntervalContext()  # private context: no shared precision state
        ctx.prec = prec
        x = ctx.mpf(n)
        val = (x**4 / 3) * (x * ctx.log(x * ctx.log(24 * x))) ** n
        lo_t, hi_t = val._mpi_
        lo, hi = _mpf_to_fraction(lo_t), _mpf_to_fraction(hi_t)
        if hi - lo < width and floor(lo) == floor(hi):
            return CertifiedFloor(floor(lo), lo, hi, prec)
        prec *= 2
    raise EffboundError(f"could not certify the floor of the Demailly bound for n={n} below {max_prec} bits")


def prior_bounds(n: int) -> dict:
    """Earlier degree bounds: Diverio-Merker-Rousseau, Demailly, Darondeau."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return {
        "diverio_merker_rousseau": 2 ** ((n - 1) ** 5),
        "demailly": demailly_bound(n),
        "darondeau": (5 * n) ** 2 * n**n,
    }
