"""Exact arithmetic substrate: rationals, sparse polynomials, truncated jets.

Scalars are :class:`fractions.Fraction` throughout.  Every identity checked in
this package is a polynomial identity with rational coefficients, so checking it
over Q certifies the corresponding statement over C.

Germs of holomorphic functions at p are represented by polynomials in a chart
where p is the origin; only their k-jets ever matter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DimensionMismatch, EffboundError

Rational = Fraction
MultiIndex = tuple  # tuple[int, ...]; Python tuple order is the lex order used everywhere
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "MultiIndex",
    "Poly",
    "Jet",
    "CurveGerm",
    "binomial",
    "compositions",
    "monomials_up_to",
    "compose_germ",
    "derivative_column",
    "reparameterize",
    "random_poly",
    "random_germ",
    "as_rational",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise TypeError(f"expected an exact integer or Fraction, got {type(x).__name__}")
    return Fraction(x)


def binomial(a: int, b: int) -> int:
    """Binomial coefficient; zero when ``b > a``."""
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be non-negative")
    return comb(a, b)


def compositions(nvars: int, degree: int) -> Iterator[tuple]:
    """Exponent vectors of length ``nvars`` summing to ``degree``, ascending lex."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in compositions(nvars - 1, degree - first):
            yield (first,) + rest


def monomials_up_to(nvars: int, max_degree: int) -> list[tuple]:
    """All exponent vectors of total degree <= max_degree, graded then lex."""
    out = []
    for d in range(max_degree + 1):
        out.extend(compositions(nvars, d))
    return out


class Poly:
    """Sparse polynomial in ``nvars`` variables with rational coefficients.

    Terms map exponent tuples to nonzero Fractions.  Instances are immutable.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, Scalar] | None = None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Poly:
        """The coordinate function z_{i+1} (0-based index ``i``)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1) -> Poly:
        return cls(len(exps), {tuple(exps): coeff})

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (vanishing order at the origin); -1 for zero."""
        return min((sum(e) for e in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        return Poly.constant(self.nvars, as_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_rational(other)
            if not c:
                return Poly(self.nvars)
            return Poly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == Poly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [as_rational(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    def substitute(self, images: Mapping[int, Poly]) -> Poly:
        """Replace variable ``i`` by ``images[i]`` (all images share this ring)."""
        for p in images.values():
            self._coerce(p)
        powers: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        result = Poly(self.nvars)
        for e, c in self._terms.items():
            keep = tuple(0 if i in images else k for i, k in enumerate(e))
            term = Poly._raw(self.nvars, {keep: c})
            for i, k in enumerate(e):
                if k and i in images:
                    term = term * power(i, k)
            result = result + term
        return result

    def translate(self, point: Sequence[Scalar]) -> Poly:
        """The polynomial z -> f(z + point)."""
        shifts = {
            i: Poly.variable(self.nvars, i) + as_rational(a)
            for i, a in enumerate(point)
            if as_rational(a)
        }
        return self.substitute(shifts) if shifts else self

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else [f"z{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.to_str()})"


@dataclass(frozen=True)
class Jet:
    """Truncated univariate power series c_0 + c_1 t + ... + c_k t^k over Q."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a jet needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    @classmethod
    def zero(cls, order: int) -> Jet:
        return cls((0,) * (order + 1))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> Jet:
        return cls((c,) + (0,) * order)

    @classmethod
    def identity(cls, order: int) -> Jet:
        """The jet of t itself."""
        if order < 1:
            return cls.zero(order)
        return cls((0, 1) + (0,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> Jet:
        if order > self.order:
            return Jet(self.coeffs + (0,) * (order - self.order))
        return Jet(self.coeffs[: order + 1])

    def _check(self, other: Jet):
        if not isinstance(other, Jet):
            raise TypeError("expected a Jet")
        if other.order != self.order:
            raise DimensionMismatch(f"jet orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, Jet):
            return self + Jet.constant(as_rational(other), self.order)
        self._check(other)
        return Jet(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Jet(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            c = as_rational(other)
            return Jet(tuple(a * c for a in self.coeffs))
        self._check(other)
        k = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (k + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(k + 1 - i):
                    out[i + j] += ai * b[j]
        return Jet(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Jet.constant(1, self.order)
        for _ in range(e):
            result = result * self
        return result

    def compose(self, inner: Jet) -> Jet:
        """The jet of t -> self(inner(t)); requires inner(0) = 0."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner jet must vanish at t = 0")
        inner = inner.truncate(self.order)
        result = Jet.constant(self.coeffs[-1], self.order)
        for c in reversed(self.coeffs[:-1]):
            result = result * inner + c
        return result

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order+1 for the zero jet."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1


@dataclass(frozen=True)
class CurveGerm:
    """k-jet of a germ of curve nu: (C, 0) -> (C^n, 0)."""

    components: tuple

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Jet) else Jet(tuple(c)) for c in self.components)
        if not comps:
            raise ValueError("a curve germ needs at least one component")
        if len({c.order for c in comps}) != 1:
            raise DimensionMismatch("germ components must share one jet order")
        if any(c.coeffs[0] != 0 for c in comps):
            raise ValueError("germ must pass through the origin (c_0 = 0 in every component)")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_coefficients(cls, rows: Iterable[Sequence[Scalar]]) -> CurveGerm:
        """Build from coefficient rows (c_1, ..., c_k); the zero constant term is implied."""
        return cls(tuple(Jet((0,) + tuple(r)) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def order(self) -> int:
        return self.components[0].order

    def is_regular(self) -> bool:
        return any(c.coeffs[1] != 0 for c in self.components) if self.order >= 1 else False

    def truncate(self, order: int) -> CurveGerm:
        return CurveGerm(tuple(c.truncate(order) for c in self.components))


def compose_germ(f: Poly, nu: CurveGerm) -> Jet:
    """k-jet of t -> f(nu(t)), k = nu.order."""
    if f.nvars != nu.dim:
        raise DimensionMismatch(f"polynomial has {f.nvars} variables, germ has dimension {nu.dim}")
    k = nu.order
    # powers[i][e] = nu_i^e; nu_i has valuation >= 1 so powers beyond k vanish
    powers = []
    for i, comp in enumerate(nu.components):
        top = min(f.degree_in(i), k) if not f.is_zero() else 0
        row = [Jet.constant(1, k)]
        for _ in range(max(top, 0)):
            row.append(row[-1] * comp)
        powers.append(row)
    acc = [Fraction(0)] * (k + 1)
    for exps, c in f.terms.items():
        if sum(exps) > k:
            continue
        term = Jet.constant(c, k)
        for i, e in enumerate(exps):
            if e:
                term = term * powers[i][e]
        for j, v in enumerate(term.coeffs):
            acc[j] += v
    return Jet(tuple(acc))


def derivative_column(j: Jet) -> list[Fraction]:
    """Values d^i j / dt^i at t = 0 for i = 0..k, i.e. i! * c_i."""
    return [factorial(i) * c for i, c in enumerate(j.coeffs)]


def reparameterize(nu: CurveGerm, phi: Jet) -> CurveGerm:
    """Componentwise composition nu o phi, truncated to nu's order."""
    if phi.coeffs[0] != 0:
        raise ValueError("reparameterization must fix the origin (phi(0) = 0)")
    if phi.order < nu.order:
        raise DimensionMismatch(f"phi has order {phi.order}, germ needs {nu.order}")
    phi = phi.truncate(nu.order)
    return CurveGerm(tuple(c.compose(phi) for c in nu.components))


def _rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_poly(n: int, degree: int, seed, in_m_power: int | None = None,
                coeff_range: int = 5, density: float = 0.5) -> Poly:
    """Random polynomial with small integer coefficients.

    ``seed`` is either a ``random.Random`` (consumed) or anything
    ``random.Random`` accepts.  With ``in_m_power=q`` every monomial has
    degree >= q, i.e. the result lies in m^q.  The result is never zero.
    """
    q = in_m_power or 0
    if q > degree:
        raise EffboundError(f"cannot build an element of m^{q} with degree bound {degree}")
    rng = _rng(seed)
    candidates = [e for d in range(q, degree + 1) for e in compositions(n, d)]
    terms = {}
    for e in candidates:
        if rng.random() < density:
            c = rng.randint(-coeff_range, coeff_range)
            if c:
                terms[e] = c
    if not terms:
        e = candidates[rng.randrange(len(candidates))]
        terms[e] = rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c])
    return Poly(n, terms)


def random_germ(n: int, k: int, seed, regular: bool = True, coeff_range: int = 5) -> CurveGerm:
    """Random k-jet of a curve germ through the origin of C^n."""
    rng = _rng(seed)
    rows = [[rng.randint(-coeff_range, coeff_range) for _ in range(k)] for _ in range(n)]
    if regular and k >= 1 and not any(r[0] for r in rows):
        rows[rng.randrange(n)][0] = rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c])
    return CurveGerm.from_coefficients(rows)
