from itertools import product

import pytest
from hypothesis import given, strategies as st

from algebras import gf3_pool
from dendri.algebra import (AssociativeAlgebra, DendriformAlgebra, check_dendriform, check_dendriform_hom,
                            direct_sum, sub_adjacent)
from dendri.bialgebra import TwoTensor, classify, double, dual_products
from dendri.field import QQ, Field
from dendri.fixtures import e1_algebra, e1_omega, e1_rb_operator
from dendri.linalg import Matrix, Tensor3, transpose
from dendri.representation import DendriformAction, check_action, regular_rep
from dendri.rotabaxter import (OMEGA_SHARP_FAMILIES, NotQuadraticError, NotRotaBaxterError, PreconditionError,
                               ZeroWeightError, check_connes, check_dual_to_descendent, check_quadratic,
                               check_quadratic_rb, check_rb, check_rb_connes, check_rb_representation,
                               check_relative_rb, coregular_action, coregular_rb_rep, dendriform_from_connes,
                               descendent, factorizable_to_qrb, J_from_omega, minus_products, omega_sharp_iso,
                               plus_products, qrb_to_factorizable, rb_semidirect, regular_rb_rep,
                               semidirect_connes, tilde)
from dendri.search import enumerate_rb

GF3 = Field.gf(3)
weights = st.sampled_from([1, 2, 3, -1, -5])


# --- Rota-Baxter operators -----------------------------------------------------------------------

@given(weights)
def test_trivial_operators(lam):
    A = e1_algebra()
    assert check_rb(A, Matrix.zeros(QQ, 2), lam).ok
    assert check_rb(A, Matrix.identity(QQ, 2) * (-lam), lam).ok
    assert check_rb(A, e1_rb_operator(lam), lam).ok


@given(weights)
def test_tilde_preserves_rb(lam):
    A = e1_algebra()
    P = e1_rb_operator(lam)
    assert check_rb(A, tilde(P, lam), lam).ok
    assert tilde(tilde(P, lam), lam) == P


def test_wrong_weight_fails(E1):
    rep = check_rb(E1, e1_rb_operator(1), 2)
    assert not rep.ok


def test_descendent_examples(E1):
    for lam in (1, 2):
        P = e1_rb_operator(lam)
        D = descendent(E1, P, lam)
        assert check_dendriform(D).ok
        assert D.prec_mul(1, 0) == (0, 0)                 # e2 <_P e1 = 0
        assert check_dendriform_hom(P, D, E1).ok
    scaled = descendent(E1, Matrix.zeros(QQ, 2), 3)
    assert scaled.prec == E1.prec * 3 and scaled.succ == E1.succ * 3
    with pytest.raises(NotRotaBaxterError):
        descendent(E1, Matrix.identity(QQ, 2), 1)


@given(st.sampled_from(gf3_pool()), st.sampled_from([1, 2]))
def test_descendents_over_gf3(A, lam):
    for P in enumerate_rb(A, lam):
        D = descendent(A, P, lam)
        assert check_dendriform(D).ok
        assert check_dendriform_hom(P, D, A).ok


# --- weight-1 structures from r ------------------------------------------------------------------

def test_plus_products_on_fixture(E1, r21):
    B = plus_products(E1, r21)
    assert B.succ_mul(0, 1) == (1, 0)                    # e1* >+ e2* = e1*
    assert B.succ_mul(1, 0) == (-1, 0)                   # e2* >+ e1* = -e1*
    assert B.prec_mul(1, 1) == (0, -1)                   # e2* <+ e2* = -e2*
    assert check_dendriform(B).ok
    assert check_dendriform(minus_products(E1, r21)).ok


def test_symmetric_r_gives_zero_products(E1):
    S = Matrix(QQ, [[1, 2], [2, 0]])
    assert plus_products(E1, S, check=False).prec.is_zero()
    assert minus_products(E1, S, check=False).succ.is_zero()


def test_plus_products_need_invariance(E1):
    # in dimension 2 every skew tensor is a multiple of e1^e2, which is invariant; go up one
    A = direct_sum(E1, DendriformAlgebra.zero(QQ, 1))
    r = Matrix(QQ, [[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(PreconditionError):
        plus_products(A, r)
    with pytest.raises(PreconditionError):
        minus_products(A, r)


def test_relative_rb(E1, r21):
    t = TwoTensor(E1, r21)
    plus = coregular_action(E1, plus_products(E1, r21))
    minus = coregular_action(E1, minus_products(E1, r21))
    assert check_action(plus).ok and check_action(minus).ok
    assert check_relative_rb(t.r_plus, plus, 1).ok
    assert check_relative_rb(t.r_minus, minus, 1).ok
    Z = DendriformAlgebra.zero(QQ, 2)
    assert check_relative_rb(Matrix.zeros(QQ, 2), DendriformAction(regular_rep(E1), Z), 1).ok
    assert not check_relative_rb(t.r_plus, plus, 2).ok


def test_relative_rb_for_every_quasi_triangular_r_over_gf3():
    checked = 0
    for A in [A for A in gf3_pool() if A.dim == 2][:6]:
        for digits in product(range(3), repeat=4):
            r = Matrix(GF3, [digits[:2], digits[2:]])
            if not classify(A, r).at_least("quasi-triangular"):
                continue
            t = TwoTensor(A, r)
            assert check_relative_rb(t.r_plus, coregular_action(A, plus_products(A, r)), 1).ok
            assert check_relative_rb(t.r_minus, coregular_action(A, minus_products(A, r)), 1).ok
            checked += 1
    assert checked > 20


# --- quadratic forms ------------------------------------------------------------------------------

def test_quadratic_and_connes_on_fixture(E1):
    W = e1_omega()
    assert check_quadratic(E1, W).ok
    assert check_connes(sub_adjacent(E1), W).ok


def test_zero_form_on_zero_algebra():
    Z = DendriformAlgebra.zero(QQ, 2)
    c = check_connes(sub_adjacent(Z), Matrix.zeros(QQ, 2))
    assert c.ok and c.evidence["nondegenerate"] is False
    q = check_quadratic(Z, Matrix.zeros(QQ, 2))
    assert q.failed() == ["nondegenerate"]


def test_invariance_fails_on_flipped_product():
    flipped = DendriformAlgebra.from_sparse(QQ, 2, prec=[(0, 0, 0, 1), (1, 0, 1, -1)],
                                            succ=[(0, 1, 1, 1), (1, 0, 1, -1)])
    rep = check_quadratic(flipped, e1_omega())
    assert rep.failed() == ["invariance"]
    assert rep.violations[0].where == (0, 0, 1)


def test_non_antisymmetric_form(E1):
    assert "antisymmetric" in check_quadratic(E1, Matrix.identity(QQ, 2)).failed()


def test_dendriform_from_connes_recovers_e1(E1):
    D = dendriform_from_connes(sub_adjacent(E1), e1_omega())
    assert (D.prec, D.succ) == (E1.prec, E1.succ)
    assert D.succ_mul(1, 0) == (0, -1)
    assert check_quadratic(D, e1_omega()).ok


def test_dendriform_from_connes_on_abelian_algebra():
    B = AssociativeAlgebra(QQ, Tensor3.zeros(QQ, 2))
    D = dendriform_from_connes(B, e1_omega())
    assert D.prec.is_zero() and D.succ.is_zero()
    with pytest.raises(NotQuadraticError):
        dendriform_from_connes(B, Matrix.zeros(QQ, 2))


def test_theorem_connes_equivalence_over_gf3():
    seen = 0
    for A in gf3_pool():
        if A.dim != 2:
            continue
        for w in (1, 2):
            W = Matrix(GF3, [[0, w], [-w, 0]])
            if not check_quadratic(A, W).ok:
                continue
            S = sub_adjacent(A)
            assert dendriform_from_connes(S, W).prec == A.prec
            for lam in (1, 2):
                for P in enumerate_rb(A, lam):
                    q = check_quadratic_rb(A, P, W, lam).ok
                    assert q == check_rb_connes(S, P, W, lam).ok
                    if q:
                        seen += 1
                        assert check_rb(dendriform_from_connes(S, W), P, lam).ok
    assert seen > 0


# --- quadratic Rota-Baxter data and the correspondence ------------------------------------------

@pytest.mark.parametrize("lam", [1, 2, 3, -1])
def test_quadratic_rb_fixture(E1, lam):
    assert check_quadratic_rb(E1, e1_rb_operator(lam), e1_omega(), lam).ok


def test_compatibility_failure(E1):
    P = Matrix(QQ, [[1, 0], [0, -1]])
    rep = check_quadratic_rb(E1, P, e1_omega(), 1)
    bad = [v for v in rep.violations if v.check == "omega compatibility"]
    assert bad[0].where == (0, 1)


@pytest.mark.parametrize("lam", [1, 2, -3])
def test_factorizable_to_qrb_fixture(E1, r21, lam):
    P, W = factorizable_to_qrb(E1, r21, lam)
    assert P == e1_rb_operator(lam)
    assert W == e1_omega()
    Pt, Wt = factorizable_to_qrb(E1, r21, lam, tilde_variant=True)
    assert Pt == tilde(P, lam) and Wt == W
    assert check_quadratic_rb(E1, Pt, W, lam).ok


def test_omega_orientation(E1, r21):
    # J_omega equals I of the corresponding factorizable r
    assert J_from_omega(e1_omega()) == TwoTensor(E1, r21).I


@pytest.mark.parametrize("lam", [1, 2, -3])
def test_qrb_to_factorizable_fixture(E1, r21, lam):
    t = qrb_to_factorizable(E1, e1_rb_operator(lam), e1_omega(), lam)
    assert t.R == r21
    assert classify(E1, t).kind == "factorizable"
    assert t.I == J_from_omega(e1_omega())
    assert check_dual_to_descendent(E1, e1_rb_operator(lam), e1_omega(), lam).ok


def test_correspondence_on_the_double(E1, r21):
    D, R = double(E1, dual_products(E1, r21))
    P, W = factorizable_to_qrb(D, R, 1)
    assert check_quadratic_rb(D, P, W, 1).ok
    assert qrb_to_factorizable(D, P, W, 1).R == R.R


def test_zero_weight_rejected(E1, r21):
    with pytest.raises(ZeroWeightError):
        factorizable_to_qrb(E1, r21, 0)
    with pytest.raises(ZeroWeightError):
        qrb_to_factorizable(E1, e1_rb_operator(1), e1_omega(), 0)


def test_correspondence_preconditions(E1):
    with pytest.raises(PreconditionError):
        factorizable_to_qrb(E1, Matrix.zeros(QQ, 2), 1)
    with pytest.raises(PreconditionError):
        qrb_to_factorizable(E1, Matrix.identity(QQ, 2), e1_omega(), 1)


def test_round_trip_over_gf3():
    count = 0
    for A in gf3_pool():
        if A.dim != 2:
            continue
        for digits in product(range(3), repeat=4):
            r = Matrix(GF3, [digits[:2], digits[2:]])
            if classify(A, r).kind != "factorizable":
                continue
            for lam in (1, 2):
                P, W = factorizable_to_qrb(A, r, lam)
                assert check_quadratic_rb(A, P, W, lam).ok
                assert qrb_to_factorizable(A, P, W, lam).R == r
                assert check_dual_to_descendent(A, P, W, lam).ok
                count += 1
    assert count > 10


# --- Connes semidirect bundle ------------------------------------------------------------------------

@pytest.mark.parametrize("lam,variant", [(1, "P1"), (1, "P2"), (2, "P1"), (2, "P2")])
def test_semidirect_connes(E1, lam, variant):
    b = semidirect_connes(E1, lam, variant)
    assert b.algebra.dim == 4
    assert b.report.ok


def test_semidirect_connes_zero_algebra():
    b = semidirect_connes(DendriformAlgebra.zero(QQ, 2), 1)
    assert b.report.ok and b.algebra.mult.is_zero()
    with pytest.raises(ValueError):
        semidirect_connes(DendriformAlgebra.zero(QQ, 2), 1, "P3")


# --- Rota-Baxter representations and omega-sharp --------------------------------------------------------

@pytest.mark.parametrize("lam", [1, 2, -1])
def test_rb_representations(E1, lam):
    P = e1_rb_operator(lam)
    reg = regular_rb_rep(E1, P)
    assert reg.T == P
    assert check_rb_representation(E1, P, lam, reg.rep, reg.T).ok
    co = coregular_rb_rep(E1, P, lam)
    assert co.T == tilde(transpose(P), lam)
    assert check_rb_representation(E1, P, lam, co.rep, co.T).ok
    S, PT = rb_semidirect(E1, P, lam, reg.rep, reg.T)
    assert S.dim == 4 and check_rb(S, PT, lam).ok and check_dendriform(S).ok


def test_rb_representation_failure(E1):
    P = e1_rb_operator(1)
    reg = regular_rep(E1)
    rep = check_rb_representation(E1, P, 1, reg, Matrix.identity(QQ, 2))
    assert not rep.ok
    with pytest.raises(PreconditionError):
        rb_semidirect(E1, P, 1, reg, Matrix.identity(QQ, 2))


@pytest.mark.parametrize("lam", [1, 2])
def test_omega_sharp(E1, lam):
    w, rep = omega_sharp_iso(E1, e1_rb_operator(lam), e1_omega(), lam)
    assert rep.ok
    assert tuple(rep.checks) == OMEGA_SHARP_FAMILIES
    assert w == transpose(e1_omega())


def test_omega_sharp_perturbed(E1):
    W = Matrix(QQ, [[1, 1], [-1, 0]])
    with pytest.raises(PreconditionError):
        omega_sharp_iso(E1, e1_rb_operator(1), W, 1)
    _, rep = omega_sharp_iso(E1, e1_rb_operator(1), W, 1, check=False)
    assert not rep.ok
    v = rep.violations[0]
    assert v.check in OMEGA_SHARP_FAMILIES and v.where == (0,)
