"""Exact computation of symbolic powers, generating-degree invariants and
containment certificates for Fermat point-configuration ideals in P^2."""

from .cyclo import (
    CycloField,
    CycloNumber,
    ConductorMismatch,
    cyclo_add,
    cyclo_inv,
    cyclo_mul,
    cyclotomic_coeffs,
    euler_phi,
    promote_pair,
    zeta,
)
from .fields import QQ, rat
from .groebner import (
    GBTimeout,
    GroebnerCache,
    Ideal,
    buchberger,
    get_cache,
    hilbert_dim,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    monomial_ideal_dimension,
    normal_form,
    set_cache_dir,
    spolynomial,
)
from .poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Poly,
    PolyRing,
    RingMismatch,
    elimination_order,
    graded_component_basis,
    monomials_of_degree,
)
from .textio import ParseError, parse_cyclo, parse_poly, render_cyclo, render_poly

__version__ = "0.1.0"


def cyclotomic_polynomial(n: int) -> Poly:
    """The n-th cyclotomic polynomial as a univariate polynomial in z."""
    ring = PolyRing(("z",), QQ)
    return ring.from_terms(((k,), c) for k, c in enumerate(cyclotomic_coeffs(n)) if c)
