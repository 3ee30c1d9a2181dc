"""Algebraic invariants under hypothesis-generated inputs (wider entries than the fuzz draws)."""

from hypothesis import given, settings
from hypothesis import strategies as st

from cayley.action import act, right_subst, t_of
from cayley.exterior import adjugate_exterior, det_exterior
from cayley.matrix import adjugate_cofactor, charpoly, det_cofactor, det_leibniz, identity, mat_scale
from cayley.rings import make_ring
from cayley.theorems import check_cayley_hamilton, check_generalized, example_instance
from cayley.transport import MatPoly, matpoly_mul, to_matpoly, to_polymat

from conftest import RINGS, matrices

ring_descs = st.sampled_from(RINGS)


@st.composite
def square(draw, max_dim=4, count=1):
    desc = draw(ring_descs)
    n = draw(st.integers(1, max_dim))
    ms = [draw(matrices(desc, n)) for _ in range(count)]
    return ms[0] if count == 1 else ms


@st.composite
def matpoly_setup(draw):
    """(p, q, g, a) over one ring and dimension, degrees <= 3."""
    desc = draw(ring_descs)
    n = draw(st.integers(1, 3))
    R = make_ring(desc)

    def mp():
        return MatPoly(R, n, [draw(matrices(desc, n)) for _ in range(draw(st.integers(0, 4)))])

    return mp(), mp(), draw(matrices(desc, n)), draw(matrices(desc, n))


@settings(max_examples=150, deadline=None)
@given(square(max_dim=5))
def test_three_determinants_agree(a):
    assert det_cofactor(a) == det_leibniz(a) == det_exterior(a)


@settings(max_examples=100, deadline=None)
@given(square(count=2))
def test_det_is_multiplicative(ab):
    a, b = ab
    assert det_cofactor(a @ b) == det_cofactor(a) * det_cofactor(b)


@settings(max_examples=100, deadline=None)
@given(square())
def test_adjugate_both_sides(a):
    adj = adjugate_cofactor(a)
    dI = mat_scale(det_cofactor(a), identity(a.ring, a.dim))
    assert adj == adjugate_exterior(a)
    assert adj @ a == dI == a @ adj


@settings(max_examples=100, deadline=None)
@given(square())
def test_cayley_hamilton(a):
    rep = check_cayley_hamilton(a)
    assert rep.verdict and rep.factorization_holds
    chi = charpoly(a)
    assert chi.degree == a.dim


@settings(max_examples=100, deadline=None)
@given(matpoly_setup())
def test_action_is_a_left_module(setup):
    p, q, g, a = setup
    assert act(matpoly_mul(p, q), g, a) == act(p, act(q, g, a), a)
    assert act(MatPoly.unit(a.ring, a.dim), g, a) == g
    assert act(p, a.identity_like(), a) == right_subst(p, a)
    assert act(t_of(a), a.identity_like(), a).is_zero()


@settings(max_examples=100, deadline=None)
@given(matpoly_setup())
def test_transport_respects_products(setup):
    p, q, _, _ = setup
    pm, qm = to_polymat(p), to_polymat(q)
    assert to_matpoly(pm) == p
    assert to_polymat(matpoly_mul(p, q)) == pm @ qm


@settings(max_examples=60, deadline=None)
@given(square(max_dim=3), st.lists(st.integers(-3, 3), min_size=1, max_size=3),
       st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_example_for_polynomials_in_one_matrix(c, fa, fb):
    # a = fa(c), b = fb(c) commute, so bX - aY evaluates to zero at (a, b)
    R = c.ring

    def evaluate(coeffs):
        out, power = c.zeros_like(), c.identity_like()
        for k in coeffs:
            out, power = out + power.scale(R.from_int(k)), power @ c
        return out

    a, b = evaluate(fa), evaluate(fb)
    assert check_generalized(example_instance(a, b)).verdict
