"""Exact computations behind effective degree bounds for the Kobayashi and Debarre conjectures.

Modules: polyjet (rationals, polynomials, jets), wronskian, grassmann
(Pluecker coordinates), intersect (Groebner bases, local multiplicities),
bounds (closed forms and witnesses), cli.
"""

from .bounds import (
    debarre_degree_bound,
    debarre_witness,
    kobayashi_degree_bound,
    kobayashi_witness,
    prior_bounds,
)
from .polyjet import CurveGerm, Jet, Poly, compose_germ, derivative_column, reparameterize
from .wronskian import span_zero_test, wronskian_value

__version__ = "0.1.0"
