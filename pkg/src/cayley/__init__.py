"""Exact Cayley-Hamilton kernel over commutative unital rings."""

from .rings import Z, Q, Zmod, Dual, PolyRing, RingDescriptor, RingElement, make_ring, parse_ring
from .poly import NEG_INF, MPoly, Poly, NonCommutingArguments
from .matrix import (
    Matrix,
    adjugate_cofactor,
    charpoly,
    det_cofactor,
    det_leibniz,
    identity,
    monic_charpoly,
    parse_matrix,
    random_matrix,
    render_matrix,
)
from .exterior import ExteriorVector, adjugate_exterior, det_exterior, wedge
from .transport import MatPoly, to_matpoly, to_polymat
from .action import act, left_subst, right_subst, t_of
from .theorems import (
    CHReport,
    GenInstance,
    HypothesisViolation,
    check_cayley_hamilton,
    check_generalized,
    general_P,
    generate_instance,
)

__version__ = "0.1.0"
