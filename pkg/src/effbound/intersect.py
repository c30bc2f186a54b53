"""Zero-dimensional systems, a small Buchberger engine over Q, and local multiplicities.

The engine is meant for desk-scale systems (a handful of variables, low
degree) and favours plain exact arithmetic over speed.  Local multiplicity at
a point is the length of the local ring, computed as follows: translate the
point to the origin, eliminate generators of the form c*x + h (h free of x) by
substitution, which is a ring isomorphism, then count standard monomials.
The count is the local length only when the remaining ideal is supported at
the origin alone, so that is checked (every variable nilpotent modulo the
ideal) and reported as a failure otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable, Sequence

from .errors import (
    MultiplicityCheckFailed,
    NotASolution,
    NotZeroDimensional,
    ScaleGuardExceeded,
)
from .polyjet import Poly, as_rational

MAX_VARS = 6
MAX_DEGREE = 12


def lex_key(e: tuple):
    return e


def degrevlex_key(e: tuple):
    return (sum(e), tuple(-x for x in reversed(e)))


ORDERS: dict[str, Callable] = {"lex": lex_key, "degrevlex": degrevlex_key}


@dataclass(frozen=True)
class PolySystem:
    variables: tuple
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "generators", tuple(self.generators))
        n = len(self.variables)
        for g in self.generators:
            if g.nvars != n:
                raise ValueError(f"generator {g} uses {g.nvars} variables, system declares {n}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var(self, name: str) -> Poly:
        return Poly.variable(self.nvars, self.variables.index(name))

    def to_strings(self) -> list[str]:
        return [g.to_str(self.variables) for g in self.generators]


@dataclass(frozen=True)
class MultiplicityResult:
    point: tuple
    multiplicity: int
    standard_monomials: int
    eliminated: tuple = field(default=())

    def to_dict(self):
        return {
            "point": list(self.point),
            "multiplicity": self.multiplicity,
            "standard_monomials": self.standard_monomials,
            "eliminated": list(self.eliminated),
        }


# ---------------------------------------------------------------- Groebner core
# Polynomials are handled as plain dicts exponent -> Fraction inside the engine.

def _lead(p: dict, key):
    return max(p, key=key)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(p: dict, q: dict, c: Fraction, shift: tuple):
    """p -= c * x^shift * q, in place."""
    for e, v in q.items():
        m = tuple(a + b for a, b in zip(e, shift))
        s = p.get(m, 0) - c * v
        if s:
            p[m] = s
        else:
            p.pop(m, None)


def _monic(p: dict, key) -> dict:
    lc = p[_lead(p, key)]
    return {e: v / lc for e, v in p.items()}


def _normal_form(f: dict, basis: list, key) -> dict:
    p = dict(f)
    r: dict = {}
    leads = [(_lead(g, key), g) for g in basis]
    while p:
        lt = _lead(p, key)
        c = p[lt]
        for lm, g in leads:
            if _divides(lm, lt):
                shift = tuple(a - b for a, b in zip(lt, lm))
                _sub_scaled(p, g, c / g[lm], shift)
                break
        else:
            r[lt] = c
            del p[lt]
    return r


def _spoly(f: dict, g: dict, key) -> dict:
    lf, lg = _lead(f, key), _lead(g, key)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    out: dict = {}
    _sub_scaled(out, f, -1 / f[lf], tuple(a - b for a, b in zip(lcm, lf)))
    _sub_scaled(out, g, 1 / g[lg], tuple(a - b for a, b in zip(lcm, lg)))
    return out


def _buchberger(gens: list, key) -> list:
    basis = [_monic(g, key) for g in gens if g]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        li, lj = _lead(basis[i], key), _lead(basis[j], key)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        h = _normal_form(_spoly(basis[i], basis[j], key), basis, key)
        if h:
            basis.append(_monic(h, key))
            new = len(basis) - 1
            pairs.extend((m, new) for m in range(new))
    # minimal, then reduced
    leads = [_lead(g, key) for g in basis]
    keep = []
    for idx, lm in enumerate(leads):
        dominated = any(
            _divides(leads[o], lm) and (leads[o] != lm or o < idx)
            for o in range(len(basis)) if o != idx
        )
        if not dominated:
            keep.append(basis[idx])
    reduced = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        reduced.append(_monic(_normal_form(g, others, key), key))
    reduced.sort(key=lambda g: key(_lead(g, key)))
    return reduced


def _guard(sys: PolySystem, max_vars: int, max_degree: int):
    if not sys.generators:
        raise ValueError("empty generator list")
    if sys.nvars > max_vars:
        raise ScaleGuardExceeded(f"{sys.nvars} variables exceed the Groebner cap {max_vars}")
    deg = max(g.degree() for g in sys.generators)
    if deg > max_degree:
        raise ScaleGuardExceeded(f"generator degree {deg} exceeds the Groebner cap {max_degree}")


def groebner_basis(sys: PolySystem, order: str = "degrevlex",
                   max_vars: int = MAX_VARS, max_degree: int = MAX_DEGREE) -> PolySystem:
    """Reduced Groebner basis, generators sorted by ascending leading monomial."""
    key = ORDERS[order]
    _guard(sys, max_vars, max_degree)
    basis = _buchberger([dict(g.terms) for g in sys.generators], key)
    return PolySystem(sys.variables, tuple(Poly(sys.nvars, g) for g in basis))


def leading_monomial(p: Poly, order: str = "degrevlex") -> tuple:
    return _lead(dict(p.terms), ORDERS[order])


def reduce(f: Poly, basis: PolySystem, order: str = "degrevlex") -> Poly:
    """Normal form of f with respect to a Groebner basis."""
    key = ORDERS[order]
    return Poly(f.nvars, _normal_form(dict(f.terms), [dict(g.terms) for g in basis.generators], key))


def standard_monomials(sys: PolySystem, order: str = "degrevlex", basis: PolySystem | None = None,
                       max_vars: int = MAX_VARS, max_degree: int = MAX_DEGREE) -> list[tuple]:
    if basis is None:
        basis = groebner_basis(sys, order, max_vars, max_degree)
    n = sys.nvars
    leads = [leading_monomial(g, order) for g in basis.generators]
    start = (0,) * n
    if start in leads:
        return []  # unit ideal
    for i in range(n):
        if not any(lm[i] > 0 and sum(lm) == lm[i] for lm in leads):
            raise NotZeroDimensional(f"no pure power of {sys.variables[i]} among the leading monomials")
    # standard monomials form an order ideal; grow it from 1
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                e = m[:i] + (m[i] + 1,) + m[i + 1:]
                if e not in seen and not any(_divides(lm, e) for lm in leads):
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return sorted(seen, key=lambda e: (sum(e), e))


def quotient_dimension(sys: PolySystem, order: str = "degrevlex",
                       max_vars: int = MAX_VARS, max_degree: int = MAX_DEGREE) -> int:
    """dim_Q Q[x]/I, the total intersection multiplicity of a zero-dimensional system."""
    return len(standard_monomials(sys, order, max_vars=max_vars, max_degree=max_degree))


# ------------------------------------------------------------ local multiplicity

def _linear_elimination(gens: list, nvars: int):
    """Find (index, variable, image) with gens[index] = c*x + h, h free of x."""
    order = sorted(range(len(gens)), key=lambda i: len(gens[i].terms))
    for gi in order:
        g = gens[gi]
        for x in range(nvars):
            if g.degree_in(x) != 1:
                continue
            unit = tuple(1 if j == x else 0 for j in range(nvars))
            if any(e[x] and e != unit for e in g.terms):
                continue
            c = g.terms[unit]
            h = g - Poly(nvars, {unit: c})
            return gi, x, h * (Fraction(-1) / c)
    return None


def _drop_variables(p: Poly, dropped: set) -> Poly:
    keep = [i for i in range(p.nvars) if i not in dropped]
    return Poly(len(keep), {tuple(e[i] for i in keep): c for e, c in p.terms.items()})


def local_multiplicity(sys: PolySystem, point: Sequence, max_vars: int = MAX_VARS,
                       max_degree: int = MAX_DEGREE) -> MultiplicityResult:
    point = tuple(as_rational(x) for x in point)
    if len(point) != sys.nvars:
        raise ValueError(f"point has {len(point)} coordinates, system has {sys.nvars} variables")
    for g in sys.generators:
        if g.evaluate(point):
            raise NotASolution(f"{g.to_str(sys.variables)} does not vanish at {point}")

    gens = [g.translate(point) for g in sys.generators]
    eliminated = set()
    while True:
        gens = [g for g in gens if not g.is_zero()]
        found = _linear_elimination(gens, sys.nvars)
        if found is None:
            break
        gi, x, image = found
        eliminated.add(x)
        gens = [g.substitute({x: image}) for i, g in enumerate(gens) if i != gi]

    remaining = [i for i in range(sys.nvars) if i not in eliminated]
    names = tuple(sys.variables[i] for i in remaining)
    elim_names = tuple(sys.variables[i] for i in sorted(eliminated))
    gens = [_drop_variables(g, eliminated) for g in gens if not g.is_zero()]

    if not remaining:
        if gens:
            raise MultiplicityCheckFailed("nonzero constant left after elimination")
        return MultiplicityResult(point, 1, 1, elim_names)
    if not gens:
        raise MultiplicityCheckFailed(f"variables {names} are unconstrained: origin not isolated")
    reduced = PolySystem(names, tuple(gens))
    basis = groebner_basis(reduced, "degrevlex", max_vars, max_degree)
    try:
        std = standard_monomials(reduced, "degrevlex", basis=basis)
    except NotZeroDimensional as exc:
        raise MultiplicityCheckFailed(f"origin not isolated: {exc}") from exc
    dim = len(std)
    if dim == 0:
        raise MultiplicityCheckFailed("translated system has no solution at the origin")
    for i, name in enumerate(names):
        xpow = Poly.monomial(tuple(dim if j == i else 0 for j in range(len(names))))
        if not reduce(xpow, basis).is_zero():
            raise MultiplicityCheckFailed(f"{name} is not nilpotent: other solutions exist")
    return MultiplicityResult(point, dim, dim, elim_names)


# --------------------------------------------------------- intersection systems

@dataclass(frozen=True)
class LemmaReport:
    label: str
    params: dict
    system: PolySystem
    point: tuple
    expected: int
    result: MultiplicityResult | None
    unique: bool

    @property
    def multiplicity(self):
        return self.result.multiplicity if self.result else None

    @property
    def passed(self) -> bool:
        return self.unique and self.multiplicity == self.expected

    def to_dict(self):
        return {
            "label": self.label,
            "params": self.params,
            "variables": list(self.system.variables),
            "generators": self.system.to_strings(),
            "point": list(self.point),
            "expected": self.expected,
            "multiplicity": self.multiplicity,
            "unique": self.unique,
            "pass": self.passed,
        }


def build_lemma31_system(N: int, delta: int, chart: str = "t0") -> tuple[PolySystem, tuple]:
    """Intersection of the degree-1 line with the pullback of {z0 + zN = 0}.

    Chart z0 = 1.  With ``chart="t0"`` the pencil coordinate is t1 (t0 = 1);
    with ``chart="t1"`` it is t0 (t1 = 1).
    """
    if N < 2 or delta < 1:
        raise ValueError("need N >= 2 and delta >= 1")
    sign = (-1) ** (delta + 1)
    pencil = "t1" if chart == "t0" else "t0"
    if chart not in ("t0", "t1"):
        raise ValueError("chart must be 't0' or 't1'")
    names = tuple(f"z{i}" for i in range(1, N + 1)) + (pencil,)
    nv = N + 1

    def v(i):
        return Poly.variable(nv, i)

    zN, t = v(N - 1), v(N)
    gens = [v(i) ** delta for i in range(N - 1)]
    if chart == "t0":
        gens.append(zN ** delta + t)  # t0 zN^d + t1 z0^d
    else:
        gens.append(t * zN ** delta + 1)  # t0 zN^d + t1 z0^d with t1 = 1
    gens.append(zN + 1)
    point = (0,) * (N - 1) + (-1, sign)
    return PolySystem(names, tuple(gens)), tuple(Fraction(x) for x in point)


def _verify(label, params, sys, point, expected, max_vars, max_degree) -> LemmaReport:
    try:
        res = local_multiplicity(sys, point, max_vars, max_degree)
        unique = True
    except MultiplicityCheckFailed:
        res, unique = None, False
    return LemmaReport(label, params, sys, point, expected, res, unique)


def verify_lemma31(N: int, delta: int, chart: str = "t0", max_N: int = 4, max_delta: int = 6,
                   max_vars: int = MAX_VARS, max_degree: int = MAX_DEGREE) -> LemmaReport:
    """Local multiplicity of the unique intersection point equals delta^(N-1)."""
    if N > max_N or delta > max_delta:
        raise ScaleGuardExceeded(f"(N, delta) = ({N}, {delta}) outside the guard N <= {max_N}, delta <= {max_delta}")
    sys, point = build_lemma31_system(N, delta, chart)
    return _verify("lemma31", {"N": N, "delta": delta, "chart": chart}, sys, point,
                   delta ** (N - 1), max_vars, max_degree)


def product_multiplicity_formula(deltas: Sequence[int], k: int, i: int) -> int:
    """b_i = prod_j delta_j^(k+1) / delta_i."""
    num = prod(d ** (k + 1) for d in deltas)
    q, r = divmod(num, deltas[i - 1])
    assert r == 0
    return q


def build_product_system(c: int, k: int, deltas: Sequence[int], i: int) -> tuple[PolySystem, tuple]:
    """Intersection of C_i with the pullback of {z_i + z_0 = 0} in the product setting.

    Chart z0 = 1 and first pencil coordinate 1; variables z1..zN, t with N = c(k+1).
    """
    if len(deltas) != c:
        raise ValueError(f"expected {c} degrees, got {len(deltas)}")
    if not 1 <= i <= c:
        raise IndexError(f"pencil factor index {i} out of range 1..{c}")
    N = c * (k + 1)
    nv = N + 1
    names = tuple(f"z{j}" for j in range(1, N + 1)) + ("t",)

    def z(j):  # z_j for j >= 1
        return Poly.variable(nv, j - 1)

    t = Poly.variable(nv, N)
    gens = []
    for j in range(1, c + 1):
        d = deltas[j - 1]
        for l in range(k + 1):
            if j == i and l == 0:
                gens.append(z(i) ** d + t)  # t1 z_i^d + t2 z_0^d with t1 = 1, z0 = 1
            else:
                gens.append(z(l * c + j) ** d)
    gens.append(z(i) + 1)
    point = [Fraction(0)] * nv
    point[i - 1] = Fraction(-1)
    point[N] = Fraction((-1) ** (deltas[i - 1] + 1))
    return PolySystem(names, tuple(gens)), tuple(point)


def verify_lemma_product(c: int, k: int, deltas: Sequence[int], i: int, max_N: int = 5,
                         max_vars: int = MAX_VARS, max_degree: int = MAX_DEGREE) -> LemmaReport:
    N = c * (k + 1)
    if N > max_N:
        raise ScaleGuardExceeded(f"N = c(k+1) = {N} exceeds the guard {max_N}")
    sys, point = build_product_system(c, k, deltas, i)
    expected = product_multiplicity_formula(deltas, k, i)
    params = {"c": c, "k": k, "delta": list(deltas), "i": i}
    return _verify("lemma_product", params, sys, point, expected, max_vars, max_degree)
