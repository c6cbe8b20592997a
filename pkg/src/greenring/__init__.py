"""Exact computation in Green rings of Radford Hopf algebras.

Presented Green, Grothendieck and stable Green rings, the unit-coefficient
form and its radicals, Frobenius-Perron dimensions, and the group-like and
bi-Frobenius structure on the complexified stable Green algebra.
"""

__version__ = "0.1.0"

from .based import (  # noqa: E402
    BasedRing,
    FormReport,
    based_from_presented,
    check_transitive,
    detect_involution,
    fpdim,
    fusion_report,
    gram_and_radicals,
    unit_coeff_form,
)
from .bifrob import (  # noqa: E402
    BiFrobeniusData,
    GroupLikeData,
    bifrob_build,
    bifrob_verify,
    delta_monomial,
    grouplike_build,
    grouplike_verify,
    stable_antipode_monomial,
    stable_bifrobenius,
    stable_phi_monomial,
)
from .dickson import dickson_closed, dickson_f, monomial_to_f_basis, q_eval  # noqa: E402
from .errors import *  # noqa: E402,F401,F403
from .parser import parse_element, parse_poly  # noqa: E402
from .poly import Monomial, Poly  # noqa: E402
from .presented import (  # noqa: E402
    Mono,
    RingElement,
    RingKind,
    RingSpec,
    StableF,
    XGen,
    grothendieck_projection,
    make_ring,
    projective_kernel_basis,
    reduce,
    ring_mul,
    stable_mul_closed,
    stable_projection,
    to_f_basis,
    to_monomial_basis,
)
