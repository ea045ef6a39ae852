import random

import pytest
from hypothesis import given, strategies as st

from conftest import gaussians, quaternions, small_int_gaussians
from orbitforge.linalg import Matrix
from orbitforge.scalars import I, Quaternion, QJ
from orbitforge.structures import (
    FAMILIES,
    AntiLinearMap,
    BadParity,
    BadSignatureParam,
    Form,
    InvalidStructure,
    StructuredSpace,
    WrongFamily,
    algebra_membership,
    check_compatibility,
    evaluate_form,
    group_membership,
    isotropy_membership,
    quaternionify,
    signature_matrix,
    signature_params,
    standard_sigma,
    standard_space,
)

STANDARD = [(f, n, p) for f in FAMILIES for n in (2, 4, 6) for p in signature_params(f, n)]


def test_evaluate_form_examples():
    e1, e2 = (1, 0), (0, 1)
    assert evaluate_form(Form(Matrix.identity(2), "symmetric"), e1, e1) == 1
    J = Form(Matrix([[0, 1], [-1, 0]]), "alternating")
    assert evaluate_form(J, e1, e2) == -evaluate_form(J, e2, e1) != 0
    H = Form(signature_matrix(2, 1), "hermitian")
    assert evaluate_form(H, (1, I), (1, I)) == 0


def test_standard_sigma_examples():
    s = standard_sigma("gl_sigma_plus", 3)
    assert s((I, 1, 2)) == (-I, 1, 2) and s.sign == 1
    s = standard_sigma("gl_sigma_minus", 4)
    z = (1, I, 2, 3 * I)
    assert s(z) == (-2, 3 * I, 1, -I)
    assert s(s(z)) == tuple(-x for x in z)
    s = standard_sigma("o_sigma_plus", 2, 1)
    assert s(s((I, 2))) == (I, 2)


@pytest.mark.parametrize("fam,n,p", STANDARD)
def test_standard_models_compatible(fam, n, p):
    sp = standard_space(fam, n, p)
    assert check_compatibility(sp)
    if sp.form is not None:
        assert sp.form.is_nondegenerate()
    if sp.sigma is not None:
        M = sp.sigma.matrix
        assert M @ M.conj() == Matrix.identity(n).scale(sp.info.sigma_sign)


def test_compatibility_failure_has_witness():
    sp = StructuredSpace(2, "o_sigma_plus", Form(Matrix([[1, I], [I, 1]]), "symmetric"), AntiLinearMap(Matrix.identity(2), 1))
    rep = check_compatibility(sp)
    assert not rep and rep.witness is not None


def test_plain_space_is_vacuously_compatible():
    assert check_compatibility(StructuredSpace(3, "gl_sigma_plus", None, AntiLinearMap(Matrix.identity(3), 1)))


def test_bad_parameters():
    with pytest.raises(BadParity):
        standard_space("sp_sigma_plus", 3)
    with pytest.raises(BadParity):
        standard_space("gl_sigma_minus", 3)
    with pytest.raises(BadSignatureParam):
        standard_space("gl_tau_star", 2, 2)
    with pytest.raises(InvalidStructure):
        Form(Matrix([[1, 2], [3, 1]]), "symmetric")
    with pytest.raises(InvalidStructure):
        AntiLinearMap(Matrix.identity(2), -1)


def test_algebra_membership_examples():
    for fam, n, p in STANDARD:
        assert algebra_membership(standard_space(fam, n, p), Matrix.zeros(n, n))
    sp = StructuredSpace(2, "sp_sigma_plus", Form(Matrix([[0, 1], [-1, 0]]), "alternating"), AntiLinearMap(Matrix.identity(2), 1))
    assert algebra_membership(sp, Matrix([[0, 1], [0, 0]]))
    assert not algebra_membership(standard_space("gl_sigma_plus", 2), Matrix.identity(2).scale(I))


def test_isotropy_membership_examples():
    sp = standard_space("gl_sigma_plus", 2)
    assert isotropy_membership(sp, Matrix.zeros(2, 2), (1, 0))
    assert not isotropy_membership(sp, Matrix([[0, 0], [1, 0]]), (1, 0))
    assert isotropy_membership(sp, Matrix([[0, 0], [1, 0]]), (0, 1))


def test_quaternionify_examples():
    Q = quaternionify(standard_space("o_sigma_minus", 2))
    assert Q.qdim == 1
    y = Q.qform[0][0]
    assert y.q() == y == Quaternion(1, 0)
    Q = quaternionify(standard_space("sp_sigma_minus", 2, 0))
    assert Q.qdim == 1 and Q.qform[0][0] in (QJ, -QJ)
    with pytest.raises(WrongFamily):
        quaternionify(standard_space("o_sigma_plus", 2))


QFAMS = [(f, n, p) for f, n, p in STANDARD if FAMILIES[f].sigma_sign == -1]


@pytest.mark.parametrize("fam,n,p", QFAMS)
@given(st.data())
def test_quaternionic_laws(fam, n, p, data):
    sp = standard_space(fam, n, p)
    Q = quaternionify(sp)
    vecs = st.lists(small_int_gaussians, min_size=n, max_size=n).map(tuple)
    u, v = data.draw(vecs), data.draw(vecs)
    lam, mu = data.draw(quaternions), data.draw(quaternions)
    x = Q.coordinates(u)
    assert Q.vector(x) == u
    assert Q.coordinates(Q.scalar_action(lam, u)) == tuple(lam * c for c in x)
    if sp.form is None:
        return
    assert Q.transported_form(Q.scalar_action(lam, u), Q.scalar_action(mu, v)) == lam * Q.transported_form(u, v) * mu.q()
    assert Q.evaluate(Q.coordinates(u), Q.coordinates(v)) == Q.transported_form(u, v)
    sign = 1 if sp.form.kind == "symmetric" else -1
    assert Q.transported_form(v, u) == Q.transported_form(u, v).q() * sign


@pytest.mark.parametrize("fam,n,p", [(f, n, p) for f, n, p in STANDARD if n <= 4])
def test_group_elements_preserve_structure(fam, n, p):
    from orbitforge.groups import random_group_element

    sp = standard_space(fam, n, p)
    rng = random.Random(7)
    for _ in range(3):
        P = random_group_element(sp, rng)
        assert group_membership(sp, P)
        assert check_compatibility(sp.change_basis(P))


@given(st.lists(gaussians, min_size=2, max_size=2), st.lists(gaussians, min_size=2, max_size=2))
def test_hermitian_symmetry(u, v):
    H = standard_space("gl_tau_star", 2, 1).form
    assert H(v, u) == H(u, v).conjugate()
