"""Walk through the 2x2 integer instance a = [[1, 2], [3, 4]] step by step."""

from cayley.action import act, left_subst, right_subst, t_of
from cayley.matrix import Matrix, adjugate_cofactor, charpoly, identity, zero
from cayley.rings import Z, make_ring
from cayley.theorems import TRACE_STEPS, check_cayley_hamilton
from cayley.transport import MatPoly, matpoly_scalar, to_matpoly, to_polymat


def show(name, m):
    print(f"{name}:")
    for line in str(m).splitlines():
        print("   ", line)


def main():
    ZZ = make_ring(Z)
    a = Matrix(ZZ, [[1, 2], [3, 4]])
    t = t_of(a)
    tm = to_polymat(t)
    print("t = a - X as a matrix over Z[X]:")
    for row in tm.rows:
        print("   ", [str(tm.ring(x)) for x in row])
    adj_t = to_matpoly(adjugate_cofactor(tm))
    print("adj(t) coefficients:")
    for k, c in enumerate(adj_t.coeffs):
        show(f"  X^{k}", c)
    chi = charpoly(a)
    print("chi =", chi)
    rep = check_cayley_hamilton(a)
    print("adj(t) t == chi * I:", rep.factorization_holds)
    for name, value in zip(TRACE_STEPS, rep.proof_trace):
        print(f"  {name:22s} {'zero' if value.is_zero() else 'NONZERO'}")
    show("chi(a)", right_subst(matpoly_scalar(chi, 2), a))

    # Substituting a on the right and on the left differ once coefficients stop commuting with a.
    e12 = Matrix(ZZ, [[0, 1], [0, 0]])
    p = MatPoly(ZZ, 2, [zero(Z, 2), e12])
    show("right substitution of e12 X at a", right_subst(p, a))
    show("left substitution of e12 X at a", left_subst(p, a))
    show("e12 X acting on id", act(p, identity(Z, 2), a))


if __name__ == "__main__":
    main()
