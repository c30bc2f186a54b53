"""Independent reference computations used by the tests.

Nothing here calls the code paths it is used to check.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def series_compose(poly_terms, germ_rows, k):
    """k-jet of f(nu(t)) by naive truncated multiplication of coefficient lists.

    poly_terms: {exponent tuple: coefficient}; germ_rows: per variable, [c_1..c_k].
    """
    comps = [[Fraction(0)] + [Fraction(c) for c in row] for row in germ_rows]

    def mul(a, b):
        out = [Fraction(0)] * (k + 1)
        for i in range(k + 1):
            for j in range(k + 1 - i):
                out[i + j] += a[i] * b[j]
        return out

    acc = [Fraction(0)] * (k + 1)
    for exps, c in poly_terms.items():
        term = [Fraction(c)] + [Fraction(0)] * k
        for comp, e in zip(comps, exps):
            for _ in range(e):
                term = mul(term, comp)
        acc = [a + b for a, b in zip(acc, term)]
    return acc


def wronskian_by_hand(poly_terms_list, germ_rows, k):
    cols = []
    for terms in poly_terms_list:
        jet = series_compose(terms, germ_rows, k)
        cols.append([factorial(i) * c for i, c in enumerate(jet)])
    return leibniz_det([[cols[j][i] for j in range(k + 1)] for i in range(k + 1)])


def kobayashi_exhaustive(n, d):
    """Every (eps, r) with eps >= n, d = n(n+1)(r+n) + eps, r > delta^(N-1)(k+1)(eps+k delta)."""
    N, k, delta = n + 1, n, n * (n + 1)
    found = []
    for eps in range(n + (d - n) % delta, d + 1, delta):
        r = (d - eps) // delta - n
        if r > delta ** (N - 1) * (k + 1) * (eps + k * delta):
            found.append((eps, r))
    return found


def debarre_exhaustive_uniform(N, c, d):
    """All (eps, r) with delta = 2N-1 for every p, uniform degree d, eps >= 1 and the r-bound."""
    delta = 2 * N - 1
    found = []
    for eps in range(1, d + 1):
        if (d - eps) % delta:
            continue
        r = (d - eps) // delta - 1
        sq = delta ** (2 * c)
        bound = 2 * c * sq + 2 * c * eps * sq // delta
        if r > bound:
            found.append((eps, r))
    return found


def pluecker_by_minors(vectors, basis):
    """Pluecker coordinates as (k+1)-minors; entries of each vector are (alpha, beta) meaning alpha*t0 + beta*t1
    or plain constants.  Returns {key: (coef at t=(1,0), coef at t=(0,1), coef at t=(1,1))}.
    """
    def at(entry, t0, t1):
        if isinstance(entry, tuple):
            return entry[0] * t0 + entry[1] * t1
        return Fraction(entry)

    out = {}
    for key in combinations(basis, len(vectors)):
        vals = []
        for t0, t1 in ((1, 0), (0, 1), (1, 1)):
            m = [[at(v.get(I, 0), t0, t1) for I in key] for v in vectors]
            vals.append(leibniz_det(m))
        if any(vals):
            out[key] = tuple(vals)
    return out


def monomial_quotient_dim(exponents):
    return prod(exponents)
