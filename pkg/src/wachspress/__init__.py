"""Exact toolkit for Wachspress coordinates of generic polygons.

Validates polygons over the rationals, builds the coordinate numerators and
the defining ideal of their image surface, certifies the ideal's Groebner,
Hilbert, and betti structure by independent computation, and serves a
floating-point coordinate and deformation evaluator over HTTP.
"""

__version__ = "0.1.0"

from .combinatorics import (
    BettiTable,
    betti_formula,
    gamma_complex,
    hilbert_polynomial_formula,
    hilbert_series_formula,
    hochster_betti,
    render_betti,
    stanley_reisner,
)
from .coordinates import (
    adjoint,
    deform,
    edge_forms,
    eval_exact,
    eval_numeric,
    fan_triangulation,
    linear_precision_check,
    numerators,
    pullback,
    snake_triangulation,
)
from .geometry import (
    DegenerateEdge,
    DuplicateVertex,
    GenericityFailure,
    Polygon,
    PolygonError,
    cone_data,
    external_vertices,
    polygon_from_json,
    polygon_to_json,
    proj_point,
    random_convex_polygon,
    regular_polygon_approx,
    validate_polygon,
)
from .ideals import (
    build_ideal,
    cubics,
    image_ideal_oracle,
    quadric_basis,
    quadrics,
    tau,
)
from .polyring import (
    GroebnerBasis,
    MonomialIdeal,
    Poly,
    PolyRing,
    ambient_ring,
    buchberger,
    initial_ideal,
    monomial_hilbert_function,
    normal_form,
    plane_ring,
)
from .verify import VerifyOptions, verify_polygon
