"""Multi-indices, Pluecker coordinates of monomial spans, and curve degrees.

Monomials of degree delta in z_0..z_N are exponent tuples of length N+1,
ordered by ascending lexicographic order on the tuple (Python's own tuple
order): (0,...,0,delta) is smallest, (delta,0,...,0) largest.  Every sign in a
Pluecker coordinate follows from that one choice.

Pluecker coordinates of a curve [t0 : t1] -> Gr are homogeneous polynomials in
(t0, t1), stored as two-variable :class:`Poly` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .errors import ScaleGuardExceeded
from .polyjet import Poly, binomial, compositions

DEFAULT_INDEX_CAP = 10**6

T0 = Poly.monomial((1, 0))
T1 = Poly.monomial((0, 1))


def enumerate_multiindices(N: int, delta: int, cap: int = DEFAULT_INDEX_CAP) -> list[tuple]:
    """All degree-delta exponent vectors of length N+1 in ascending lex order."""
    if N < 0 or delta < 0:
        raise ValueError("N and delta must be non-negative")
    size = binomial(N + delta, delta)
    if size > cap:
        raise ScaleGuardExceeded(f"{size} multi-indices exceed the cap {cap}")
    return list(compositions(N + 1, delta))


def count_supported(s: int, delta: int) -> int:
    """Number of degree-delta monomials in s given variables."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return binomial(s - 1 + delta, delta)


def pure_power(nvars: int, i: int, delta: int) -> tuple:
    e = [0] * nvars
    e[i] = delta
    return tuple(e)


@dataclass(frozen=True)
class CurveSpec:
    """Span(z^F_1, ..., z^F_k, t0 z^A + t1 z^B) for [t0 : t1] in P^1."""

    fixed: tuple
    pencil: tuple

    def __post_init__(self):
        fixed = tuple(tuple(f) for f in self.fixed)
        a, b = (tuple(x) for x in self.pencil)
        object.__setattr__(self, "fixed", fixed)
        object.__setattr__(self, "pencil", (a, b))
        if len(set(fixed)) != len(fixed):
            raise ValueError("fixed monomials must be pairwise distinct")
        if a == b:
            raise ValueError("pencil monomials must differ")
        if a in fixed or b in fixed:
            raise ValueError("pencil monomials must not appear among the fixed monomials")
        sizes = {len(x) for x in fixed + (a, b)}
        degrees = {sum(x) for x in fixed + (a, b)}
        if len(sizes) != 1 or len(degrees) != 1:
            raise ValueError("all monomials must have the same length and degree")

    @property
    def k(self) -> int:
        return len(self.fixed)

    def generators(self) -> list[dict]:
        a, b = self.pencil
        gens = [{f: Poly.constant(2, 1)} for f in self.fixed]
        gens.append({a: T0, b: T1})
        return gens


@dataclass(frozen=True)
class PlueckerVector:
    k: int
    coords: Mapping  # strictly increasing (k+1)-tuple of multi-indices -> Poly in (t0, t1)

    def nonzero(self) -> dict:
        return {key: v for key, v in self.coords.items() if not v.is_zero()}

    def to_dict(self) -> dict:
        return {
            " ^ ".join(str(list(I)) for I in key): v.to_str(["t0", "t1"])
            for key, v in sorted(self.coords.items())
        }


def permutation_sign(seq: Sequence) -> int:
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def wedge(generators: Sequence[Mapping[tuple, Poly]]) -> PlueckerVector:
    """Pluecker coordinates of v_0 ^ ... ^ v_k in the sorted monomial basis.

    Each v_j maps multi-indices to coefficients.  Expands multilinearly, sorts
    each basis wedge and applies the sign of the sorting permutation.
    """
    coords: dict = {}
    for choice in product(*(list(g.items()) for g in generators)):
        idx = [c[0] for c in choice]
        if len(set(idx)) < len(idx):
            continue
        coeff = Poly.constant(2, permutation_sign(idx))
        for _, c in choice:
            coeff = coeff * c
        key = tuple(sorted(idx))
        coords[key] = coords.get(key, Poly(2)) + coeff
    return PlueckerVector(len(generators) - 1, {k: v for k, v in coords.items() if not v.is_zero()})


def pluecker_of_curve(spec: CurveSpec) -> PlueckerVector:
    return wedge(spec.generators())


def verify_degree_one(v: PlueckerVector) -> bool:
    """True iff v has exactly two nonzero coordinates, c*t0 and c'*t1."""
    nz = list(v.nonzero().values())
    if len(nz) != 2:
        return False
    shapes = set()
    for form in nz:
        if len(form.terms) != 1:
            return False
        (e,) = form.terms
        if e not in ((1, 0), (0, 1)):
            return False
        shapes.add(e)
    return shapes == {(1, 0), (0, 1)}


def curve_degree(v: PlueckerVector) -> int:
    """Degree of [t0 : t1] -> [coords] after removing a common monomial factor."""
    nz = list(v.nonzero().values())
    if not nz:
        raise ValueError("the zero vector defines no point of projective space")
    exps = [e for form in nz for e in form.terms]
    degrees = {sum(e) for e in exps}
    if len(degrees) != 1:
        raise ValueError("Pluecker coordinates are not homogeneous of one degree")
    shift = min(e[0] for e in exps) + min(e[1] for e in exps)
    return degrees.pop() - shift


def line_curve_spec(N: int, delta: int) -> CurveSpec:
    """Span(z_1^d, ..., z_{N-1}^d, t0 z_N^d + t1 z_0^d), the degree-1 line used with k+1 = N."""
    if N < 1 or delta < 1:
        raise ValueError("need N >= 1 and delta >= 1")
    fixed = tuple(pure_power(N + 1, i, delta) for i in range(1, N))
    return CurveSpec(fixed, (pure_power(N + 1, N, delta), pure_power(N + 1, 0, delta)))


def product_curve(c: int, k: int, deltas: Sequence[int], i: int) -> list[PlueckerVector]:
    """Per-factor Pluecker vectors of the curve C_i in a product of c Grassmannians.

    Uses N = c(k+1).  Factor j spans z_j^d_j, z_{c+j}^d_j, ..., z_{kc+j}^d_j;
    factor i has its first generator replaced by t0 z_i^d_i + t1 z_0^d_i.
    """
    if len(deltas) != c:
        raise ValueError(f"expected {c} degrees, got {len(deltas)}")
    if not 1 <= i <= c:
        raise IndexError(f"pencil factor index {i} out of range 1..{c}")
    N = c * (k + 1)
    vectors = []
    for j in range(1, c + 1):
        d = deltas[j - 1]
        mons = [pure_power(N + 1, l * c + j, d) for l in range(k + 1)]
        if j == i:
            spec = CurveSpec(tuple(mons[1:]), (mons[0], pure_power(N + 1, 0, d)))
            vectors.append(pluecker_of_curve(spec))
        else:
            vectors.append(wedge([{m: Poly.constant(2, 1)} for m in mons]))
    return vectors


def product_curve_degrees(c: int, k: int, deltas: Sequence[int], i: int) -> list[int]:
    """Plücker degree of C_i in each factor; L(a).C_i = sum a_j deg_j = a_i."""
    return [curve_degree(v) for v in product_curve(c, k, deltas, i)]
