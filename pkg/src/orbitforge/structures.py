"""Spaces carrying a form and/or an anti-linear map, and their standard models.

Conventions used everywhere in the package:

* bilinear forms: ``tau(u, v) = v^T T u``, so ``T[i][j] = tau(e_j, e_i)``;
* hermitian forms: ``tau(u, v) = conj(u)^T T v``;
* an anti-linear map acts as ``sigma(v) = M conj(v)``;
* the signature matrix ``I_{n-p,p}`` is ``diag(-1 (n-p times), +1 (p times))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .linalg import (
    DimensionMismatch,
    Matrix,
    dot,
    inverse,
    solve,
    unit_vector,
    vconj,
    vec,
    Echelon,
)
from .scalars import ZERO, Gaussian, Quaternion, QZERO, QONE


class StructureError(Exception):
    pass


class BadParity(StructureError):
    pass


class BadSignatureParam(StructureError):
    pass


class WrongFamily(StructureError):
    pass


class InvalidStructure(StructureError):
    pass


@dataclass(frozen=True)
class FamilyInfo:
    name: str
    short: str
    sigma_sign: int | None  # +1, -1 or None when there is no anti-linear map
    form_kind: str | None  # symmetric / alternating / hermitian / None


FAMILIES = {
    "gl_sigma_plus": FamilyInfo("gl_sigma_plus", "gl+", 1, None),
    "gl_sigma_minus": FamilyInfo("gl_sigma_minus", "gl-", -1, None),
    "gl_tau_star": FamilyInfo("gl_tau_star", "gl*", None, "hermitian"),
    "o_sigma_plus": FamilyInfo("o_sigma_plus", "o+", 1, "symmetric"),
    "o_sigma_minus": FamilyInfo("o_sigma_minus", "o-", -1, "symmetric"),
    "sp_sigma_plus": FamilyInfo("sp_sigma_plus", "sp+", 1, "alternating"),
    "sp_sigma_minus": FamilyInfo("sp_sigma_minus", "sp-", -1, "alternating"),
}
SHORT_TO_FAMILY = {info.short: name for name, info in FAMILIES.items()}


def family_info(family: str) -> FamilyInfo:
    if family in FAMILIES:
        return FAMILIES[family]
    if family in SHORT_TO_FAMILY:
        return FAMILIES[SHORT_TO_FAMILY[family]]
    raise WrongFamily(f"unknown family {family!r}")


@dataclass
class Report:
    """Outcome of a verification: ``ok`` plus the failed conditions and a witness."""

    ok: bool
    failures: list = field(default_factory=list)
    witness: object = None
    info: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def fail(self, condition: str, witness=None) -> "Report":
        self.ok = False
        self.failures.append(condition)
        if witness is not None and self.witness is None:
            self.witness = witness
        return self


# anti-linear maps and forms ------------------------------------------------

class AntiLinearMap:
    """v -> M conj(v) with M conj(M) = sign * identity."""

    __slots__ = ("matrix", "sign")

    def __init__(self, matrix, sign: int):
        M = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
        if not M.is_square():
            raise DimensionMismatch("anti-linear map needs a square matrix")
        if sign not in (1, -1):
            raise InvalidStructure("sign must be +1 or -1")
        if M @ M.conj() != Matrix.identity(M.nrows).scale(sign):
            raise InvalidStructure(f"sigma^2 != {sign:+d} id")
        self.matrix = M
        self.sign = sign

    @property
    def dim(self):
        return self.matrix.nrows

    def __call__(self, v):
        return self.matrix @ vconj(vec(v))

    def conjugated_by(self, B: Matrix) -> "AntiLinearMap":
        """The same map written in the basis given by the columns of B."""
        return AntiLinearMap(inverse(B) @ self.matrix @ B.conj(), self.sign)

    def __eq__(self, other):
        return isinstance(other, AntiLinearMap) and self.sign == other.sign and self.matrix == other.matrix

    def __repr__(self):
        return f"AntiLinearMap(sign={self.sign:+d}, matrix={self.matrix.to_strings()})"


FORM_KINDS = ("symmetric", "alternating", "hermitian")


class Form:
    """Gram matrix plus kind; see the module docstring for the evaluation convention."""

    __slots__ = ("matrix", "kind")

    def __init__(self, matrix, kind: str):
        T = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
        if kind not in FORM_KINDS:
            raise InvalidStructure(f"unknown form kind {kind!r}")
        if not T.is_square():
            raise DimensionMismatch("Gram matrix must be square")
        if kind == "symmetric" and T.T != T:
            raise InvalidStructure("Gram matrix is not symmetric")
        if kind == "alternating" and T.T != -T:
            raise InvalidStructure("Gram matrix is not alternating")
        if kind == "hermitian" and T.H != T:
            raise InvalidStructure("Gram matrix is not hermitian")
        self.matrix = T
        self.kind = kind

    @property
    def dim(self):
        return self.matrix.nrows

    @property
    def hermitian(self) -> bool:
        return self.kind == "hermitian"

    def __call__(self, u, v) -> Gaussian:
        return evaluate_form(self, u, v)

    def is_nondegenerate(self) -> bool:
        return bool(self.matrix.det())

    def gram(self, vectors: Sequence) -> Matrix:
        """Matrix G with G[a][b] = tau(x_a, x_b)."""
        return Matrix([[self(a, b) for b in vectors] for a in vectors])

    def pullback(self, B: Matrix) -> "Form":
        """The form written in the basis given by the columns of B."""
        if self.hermitian:
            return Form(B.H @ self.matrix @ B, self.kind)
        return Form(B.T @ self.matrix @ B, self.kind)

    def __eq__(self, other):
        return isinstance(other, Form) and self.kind == other.kind and self.matrix == other.matrix

    def __repr__(self):
        return f"Form({self.kind}, {self.matrix.to_strings()})"


def evaluate_form(f: Form, u, v) -> Gaussian:
    u = vec(u)
    v = vec(v)
    if len(u) != f.dim or len(v) != f.dim:
        raise DimensionMismatch("vector length differs from form dimension")
    if f.hermitian:
        return dot(vconj(u), f.matrix @ v)
    return dot(v, f.matrix @ u)


# structured spaces ---------------------------------------------------------

class StructuredSpace:
    """A space C^dim with the optional form and anti-linear map of a family."""

    __slots__ = ("dim", "family", "form", "sigma")

    def __init__(self, dim: int, family: str, form: Form | None = None, sigma: AntiLinearMap | None = None):
        info = family_info(family)
        family = info.name
        if dim <= 0:
            raise DimensionMismatch("dimension must be positive")
        if info.form_kind is None and form is not None:
            raise InvalidStructure(f"{family} carries no form")
        if info.form_kind is not None:
            if form is None:
                raise InvalidStructure(f"{family} needs a {info.form_kind} form")
            if form.kind != info.form_kind:
                raise InvalidStructure(f"{family} needs a {info.form_kind} form, got {form.kind}")
            if form.dim != dim:
                raise DimensionMismatch("form dimension")
        if info.sigma_sign is None and sigma is not None:
            raise InvalidStructure(f"{family} carries no anti-linear map")
        if info.sigma_sign is not None:
            if sigma is None:
                raise InvalidStructure(f"{family} needs an anti-linear map")
            if sigma.sign != info.sigma_sign:
                raise InvalidStructure(f"{family} needs sigma^2 = {info.sigma_sign:+d} id")
            if sigma.dim != dim:
                raise DimensionMismatch("anti-linear map dimension")
        if info.sigma_sign == -1 and dim % 2:
            raise BadParity(f"{family} needs even dimension")
        if info.form_kind == "alternating" and dim % 2:
            raise BadParity("alternating forms need even dimension")
        self.dim = dim
        self.family = family
        self.form = form
        self.sigma = sigma

    @property
    def info(self) -> FamilyInfo:
        return FAMILIES[self.family]

    @property
    def short(self) -> str:
        return FAMILIES[self.family].short

    def change_basis(self, B: Matrix) -> "StructuredSpace":
        """The structure expressed in the basis given by the columns of B."""
        if B.shape != (self.dim, self.dim):
            raise DimensionMismatch("basis matrix shape")
        form = self.form.pullback(B) if self.form is not None else None
        sigma = self.sigma.conjugated_by(B) if self.sigma is not None else None
        return StructuredSpace(self.dim, self.family, form, sigma)

    def restrict(self, B: Matrix) -> "StructuredSpace":
        """Structure on the column span of B (assumed sigma-invariant, form nondegenerate)."""
        k = B.ncols
        form = None
        sigma = None
        if self.form is not None:
            form = self.form.pullback(B)
        if self.sigma is not None:
            images = Matrix.from_columns([self.sigma(c) for c in B.columns()])
            from .linalg import solve_many

            S = solve_many(B, images)
            if S is None:
                raise InvalidStructure("subspace is not sigma-invariant")
            sigma = AntiLinearMap(S, self.sigma.sign)
        return StructuredSpace(k, self.family, form, sigma)

    def __eq__(self, other):
        return (
            isinstance(other, StructuredSpace)
            and self.family == other.family
            and self.dim == other.dim
            and self.form == other.form
            and self.sigma == other.sigma
        )

    def __repr__(self):
        return f"StructuredSpace({self.short}, dim={self.dim})"


def signature_matrix(n: int, p: int) -> Matrix:
    """I_{n-p,p} = diag(-1 x (n-p), +1 x p)."""
    return Matrix.diag([-1] * (n - p) + [1] * p)


def standard_alternating(n: int) -> Matrix:
    """J_n = [[0, I_m], [-I_m, 0]]."""
    m = n // 2
    return Matrix(
        [[(1 if j == i + m else -1 if i == j + m else 0) for j in range(n)] for i in range(n)]
    )


def _p_range(family: str, n: int):
    if family in ("gl_tau_star", "o_sigma_plus"):
        return n // 2
    if family == "sp_sigma_minus":
        return n // 4
    return 0


def _check_params(family: str, n: int, p: int):
    info = family_info(family)
    if n <= 0:
        raise DimensionMismatch("dimension must be positive")
    if (info.sigma_sign == -1 or info.form_kind == "alternating") and n % 2:
        raise BadParity(f"{info.name} needs even n, got {n}")
    top = _p_range(info.name, n)
    if not 0 <= p <= top:
        raise BadSignatureParam(f"{info.name} with n={n} needs 0 <= p <= {top}, got {p}")


def standard_sigma(family: str, n: int, p: int = 0) -> AntiLinearMap:
    """The standard anti-linear map of the family on C^n."""
    info = family_info(family)
    _check_params(info.name, n, p)
    if info.sigma_sign is None:
        raise WrongFamily(f"{info.name} has no anti-linear map")
    if info.name == "o_sigma_plus":
        return AntiLinearMap(signature_matrix(n, p), 1)
    if info.sigma_sign == 1:
        return AntiLinearMap(Matrix.identity(n), 1)
    m = n // 2
    D = signature_matrix(m, p) if info.name == "sp_sigma_minus" else Matrix.identity(m)
    Z = Matrix.zeros(m, m)
    return AntiLinearMap(Matrix.blocks([[Z, -D], [D, Z]]), -1)


def standard_form(family: str, n: int, p: int = 0) -> Form | None:
    info = family_info(family)
    _check_params(info.name, n, p)
    if info.form_kind is None:
        return None
    if info.form_kind == "hermitian":
        return Form(signature_matrix(n, p), "hermitian")
    if info.form_kind == "symmetric":
        return Form(Matrix.identity(n), "symmetric")
    return Form(standard_alternating(n), "alternating")


def standard_space(family: str, n: int, p: int = 0) -> StructuredSpace:
    info = family_info(family)
    sigma = standard_sigma(info.name, n, p) if info.sigma_sign is not None else None
    return StructuredSpace(n, info.name, standard_form(info.name, n, p), sigma)


def signature_params(family: str, n: int) -> list:
    info = family_info(family)
    return list(range(_p_range(info.name, n) + 1))


# predicates ----------------------------------------------------------------

def check_compatibility(space: StructuredSpace) -> Report:
    """sigma^2 = sign id and tau(sigma u, sigma v) = conj(tau(u, v)) on basis pairs."""
    rep = Report(True)
    n = space.dim
    basis = [unit_vector(n, k) for k in range(n)]
    if space.sigma is not None:
        M = space.sigma.matrix
        if M @ M.conj() != Matrix.identity(n).scale(space.sigma.sign):
            rep.fail("sigma^2 != sign id")
    f = space.form
    if f is not None:
        for a in range(n):
            for b in range(n):
                u, v = basis[a], basis[b]
                t = f(u, v)
                if f.kind == "hermitian" and f(v, u) != t.conjugate():
                    rep.fail("hermitian symmetry", (u, v))
                if space.sigma is not None:
                    s = f(space.sigma(u), space.sigma(v))
                    if s != t.conjugate():
                        rep.fail("tau(sigma u, sigma v) != conj tau(u, v)", (u, v))
                        return rep
    return rep


def commutes_with_sigma(sigma: AntiLinearMap, X: Matrix) -> bool:
    M = sigma.matrix
    return X @ M == M @ X.conj()


def _infinitesimal_form_defect(form: Form, X: Matrix) -> Matrix:
    T = form.matrix
    if form.hermitian:
        return X.H @ T + T @ X
    return T @ X + X.T @ T


def algebra_membership(space: StructuredSpace, X: Matrix) -> Report:
    """X commutes with sigma and tau(Xu, v) + tau(u, Xv) = 0."""
    if X.shape != (space.dim, space.dim):
        raise DimensionMismatch("operator shape")
    rep = Report(True)
    if space.sigma is not None and not commutes_with_sigma(space.sigma, X):
        rep.fail("X does not commute with sigma")
    if space.form is not None and not _infinitesimal_form_defect(space.form, X).is_zero():
        rep.fail("tau(Xu, v) + tau(u, Xv) != 0")
    return rep


def group_membership(space: StructuredSpace, P: Matrix) -> Report:
    """P invertible, commutes with sigma and preserves tau."""
    if P.shape != (space.dim, space.dim):
        raise DimensionMismatch("matrix shape")
    rep = Report(True)
    if not P.det():
        return rep.fail("P is not invertible")
    if space.sigma is not None and not commutes_with_sigma(space.sigma, P):
        rep.fail("P does not commute with sigma")
    if space.form is not None and space.form.pullback(P).matrix != space.form.matrix:
        rep.fail("P does not preserve tau")
    return rep


def isotropy_membership(space: StructuredSpace, X: Matrix, v0) -> Report:
    """Algebra membership plus X v0 = 0; v0 must be special."""
    from .distinguished import NotSpecial, is_special_vector

    v0 = vec(v0)
    if not is_special_vector(space, v0):
        raise NotSpecial("v0 is not special")
    rep = algebra_membership(space, X)
    if any(X @ v0):
        rep.fail("X v0 != 0")
    return rep


# quaternionic structure ------------------------------------------------------

def qmat_mul(A, B):
    """Product of quaternion matrices given as tuples of rows."""
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = QZERO
            for t in range(k):
                if A[i][t] and B[t][j]:
                    s = s + A[i][t] * B[t][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def qmat_identity(n: int):
    return tuple(tuple(QONE if i == j else QZERO for j in range(n)) for i in range(n))


def qrow_times(x, Q):
    """Row vector x times quaternion matrix Q."""
    return qmat_mul((tuple(x),), Q)[0]


class QuaternionicSpace:
    """C^n with sigma^2 = -id viewed as a right-free quaternionic space H^m.

    Scalars act by (a + b j) . v = a v + b sigma(v).  Coordinates are taken
    against a basis b_1..b_m for which {b_l, sigma b_l} is a complex basis, so
    v = sum x_l . b_l with x_l quaternions.
    """

    def __init__(self, sigma: AntiLinearMap, basis, form: Form | None):
        self.sigma = sigma
        self.basis = tuple(vec(b) for b in basis)
        self.qdim = len(self.basis)
        n = sigma.dim
        cols = list(self.basis) + [sigma(b) for b in self.basis]
        self._B = Matrix.from_columns(cols)
        if len(cols) != n or not self._B.det():
            raise InvalidStructure("basis does not give a quaternionic basis")
        self.form = form
        self.parity = form.kind if form is not None else None
        self.qform = None
        if form is not None:
            self.qform = tuple(
                tuple(self.transported_form(bl, bk) for bk in self.basis) for bl in self.basis
            )

    @property
    def dim(self):
        return self.sigma.dim

    def scalar_action(self, lam: Quaternion, v):
        v = vec(v)
        s = self.sigma(v)
        return tuple(lam.a * x + lam.b * y for x, y in zip(v, s))

    def coordinates(self, v):
        """rho(v): the quaternion coordinate row of v."""
        x = solve(self._B, vec(v))
        m = self.qdim
        return tuple(Quaternion(x[k], x[m + k]) for k in range(m))

    def vector(self, coords):
        """Inverse of coordinates."""
        out = [ZERO] * self.dim
        for q, b in zip(coords, self.basis):
            w = self.scalar_action(q, b)
            out = [a + c for a, c in zip(out, w)]
        return tuple(out)

    def transported_form(self, u, v) -> Quaternion:
        """tau(u, v) + tau(u, sigma v) j."""
        if self.form is None:
            raise InvalidStructure("no form to transport")
        return Quaternion(self.form(u, v), self.form(u, self.sigma(v)))

    def evaluate(self, x, y) -> Quaternion:
        """Hamiltonian form on coordinate rows: sum x_l Q_lk y_k^q."""
        s = QZERO
        for l, xl in enumerate(x):
            if not xl:
                continue
            for k, yk in enumerate(y):
                if yk and self.qform[l][k]:
                    s = s + xl * self.qform[l][k] * yk.q()
        return s


def quaternionic_basis(sigma: AntiLinearMap) -> list:
    """Greedy basis b_1..b_m from the standard basis with {b, sigma b} independent."""
    n = sigma.dim
    ech = Echelon(n)
    out = []
    for k in range(n):
        e = unit_vector(n, k)
        if ech.contains(e):
            continue
        trial = Echelon(n, [r for r in ech._rows.values()])
        if trial.add(e) and trial.add(sigma(e)):
            ech.add(e)
            ech.add(sigma(e))
            out.append(e)
    return out


def quaternionify(space: StructuredSpace) -> QuaternionicSpace:
    if space.sigma is None or space.sigma.sign != -1:
        raise WrongFamily(f"{space.family} does not carry sigma with sigma^2 = -id")
    return QuaternionicSpace(space.sigma, quaternionic_basis(space.sigma), space.form)
