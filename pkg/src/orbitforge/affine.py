"""Real affine classical groups as isotropy groups of larger structured spaces.

Cases (affine family -> base family on the linear part):
  aff_gl_sigma_plus   gl+ on C^n,  extension C^n x C,           fixed e_{n+1}
  aff_o               o+ on C^n (sigma = conj, T = I_{n-p,p}),  C x C^n x C,  fixed e_{n+1}
  aff_sp              sp+ on C^n (sigma = conj, T = J_n),       C x C^n x C,  fixed e_{n+1}
  aff_gl_sigma_minus  gl- on C^2m, extension C^2m x C^2,        fixed e + i f (last pair)
  aff_o_sigma_minus   o- on C^2m,  C^2 x C^2m x C^2,            fixed e + i f (last pair)
  aff_sp_sigma_minus  sp- on C^2m, C^2 x C^2m x C^2,            fixed e + i f (last pair)

With a form, the extended Gram matrix is [[0,0,S],[0,T~,0],[S',0,0]] in the ordering
head; base; tail, and an affine map (A, d) goes to [[I,0,0],[D,A,0],[C,R,I]] with
D = d (or [d, sigma d]), R and C forced by form preservation.  Without a form the
isotropy group is {[[X,0],[C,I]]} and (A, d) goes to the inverse transpose of the
usual affine matrix [[A, D],[0, I]].

For aff_sp and the sigma_- cases with a form the isotropy group is a central
extension of the affine group, so embed is a section: project is a homomorphism,
project(embed(a)) = a, and embed(a) embed(b) differs from embed(ab) by a central
element that project forgets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .groups import algebra_basis, random_group_element
from .linalg import DimensionMismatch, Matrix, inverse, vec
from .scalars import I, ONE, ZERO, Gaussian
from .structures import (
    AntiLinearMap,
    BadParity,
    BadSignatureParam,
    Form,
    QuaternionicSpace,
    StructuredSpace,
    WrongFamily,
    group_membership,
    qmat_identity,
    quaternionic_basis,
    signature_matrix,
    standard_space,
)


class AffineError(Exception):
    pass


class NotInGroup(AffineError):
    pass


class NotInIsotropyGroup(AffineError):
    pass


@dataclass(frozen=True)
class AffineCase:
    name: str
    number: int
    base_family: str
    sigma_sign: int
    form_kind: str | None


AFFINE_CASES = {
    "aff_gl_sigma_plus": AffineCase("aff_gl_sigma_plus", 1, "gl_sigma_plus", 1, None),
    "aff_o": AffineCase("aff_o", 2, "o_sigma_plus", 1, "symmetric"),
    "aff_sp": AffineCase("aff_sp", 2, "sp_sigma_plus", 1, "alternating"),
    "aff_gl_sigma_minus": AffineCase("aff_gl_sigma_minus", 3, "gl_sigma_minus", -1, None),
    "aff_o_sigma_minus": AffineCase("aff_o_sigma_minus", 4, "o_sigma_minus", -1, "symmetric"),
    "aff_sp_sigma_minus": AffineCase("aff_sp_sigma_minus", 4, "sp_sigma_minus", -1, "alternating"),
}

_ALIASES = {
    "aff_gl+": "aff_gl_sigma_plus",
    "aff_o+": "aff_o",
    "aff_o_sigma_plus": "aff_o",
    "aff_sp+": "aff_sp",
    "aff_sp_sigma_plus": "aff_sp",
    "aff_gl-": "aff_gl_sigma_minus",
    "aff_o-": "aff_o_sigma_minus",
    "aff_sp-": "aff_sp_sigma_minus",
}


def affine_case(name: str) -> AffineCase:
    key = _ALIASES.get(name, name)
    if key not in AFFINE_CASES:
        raise WrongFamily(f"unknown affine family {name!r}")
    return AFFINE_CASES[key]


def exact_homomorphism(name: str) -> bool:
    """Whether embed is a group homomorphism (isotropy group equals the affine group)."""
    c = affine_case(name)
    return c.form_kind is None or (c.number == 2 and c.form_kind == "symmetric")


# contexts ---------------------------------------------------------------------------------

_R2 = Matrix([[0, -1], [1, 0]])


def base_space(name: str, n: int, p: int = 0) -> StructuredSpace:
    c = affine_case(name)
    if c.name == "aff_o":
        if n <= 0:
            raise DimensionMismatch("dimension must be positive")
        if not 0 <= p <= n // 2:
            raise BadSignatureParam(f"aff_o with n={n} needs 0 <= p <= {n // 2}, got {p}")
        return StructuredSpace(n, "o_sigma_plus", Form(signature_matrix(n, p), "symmetric"), AntiLinearMap(Matrix.identity(n), 1))
    return standard_space(c.base_family, n, p)


@dataclass(frozen=True)
class EmbeddingContext:
    family: str
    n: int
    p: int
    base: StructuredSpace
    extended_space: StructuredSpace
    fixed_vector: tuple
    k: int  # size of the head/tail blocks
    head: int  # 0 or k

    @property
    def case(self) -> AffineCase:
        return affine_case(self.family)

    @property
    def dim(self):
        return self.extended_space.dim

    def base_slice(self):
        return range(self.head, self.head + self.n)

    def tail_slice(self):
        return range(self.head + self.n, self.dim)


def build_context(family: str, n: int, p: int = 0) -> EmbeddingContext:
    c = affine_case(family)
    if c.sigma_sign == -1 and n % 2:
        raise BadParity(f"{c.name} needs even n, got {n}")
    if c.form_kind == "alternating" and n % 2:
        raise BadParity(f"{c.name} needs even n, got {n}")
    base = base_space(c.name, n, p)
    k = 1 if c.sigma_sign == 1 else 2
    Mb = base.sigma.matrix
    Mk = Matrix.identity(1) if k == 1 else _R2
    if c.form_kind is None:
        M = Matrix.block_diag(Mb, Mk)
        space = StructuredSpace(n + k, base.family, None, AntiLinearMap(M, c.sigma_sign))
        head = 0
    else:
        M = Matrix.block_diag(Mk, Mb, Mk)
        S, St = _corner_blocks(c)
        Zk = Matrix.zeros(k, k)
        Zkn = Matrix.zeros(k, n)
        T = Matrix.blocks([[Zk, Zkn, S], [Zkn.T, base.form.matrix, Zkn.T], [St, Zkn, Zk]])
        space = StructuredSpace(n + 2 * k, base.family, Form(T, c.form_kind), AntiLinearMap(M, c.sigma_sign))
        head = k
    d = space.dim
    v0 = [ZERO] * d
    if k == 1:
        v0[d - 1] = ONE
    else:
        v0[d - 2] = ONE
        v0[d - 1] = I
    ctx = EmbeddingContext(c.name, n, p, base, space, tuple(v0), k, head)
    from .distinguished import is_special_vector

    if not is_special_vector(space, ctx.fixed_vector):
        raise AffineError("fixed vector is not special")
    return ctx


def _corner_blocks(c: AffineCase):
    """Corner blocks S (head x tail) and S' (tail x head) of the extended Gram matrix."""
    if c.sigma_sign == 1:
        if c.form_kind == "symmetric":
            return Matrix([[1]]), Matrix([[1]])
        return Matrix([[-1]]), Matrix([[1]])
    if c.form_kind == "symmetric":
        return Matrix.identity(2), Matrix.identity(2)
    J = Matrix([[0, 1], [-1, 0]])
    return J, J


# affine elements ----------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineElement:
    linear: Matrix
    translation: tuple

    def __post_init__(self):
        object.__setattr__(self, "translation", vec(self.translation))
        if self.linear.shape != (len(self.translation), len(self.translation)):
            raise DimensionMismatch("linear part and translation sizes differ")

    @property
    def n(self):
        return len(self.translation)

    def __call__(self, v):
        return tuple(a + b for a, b in zip(self.linear @ vec(v), self.translation))

    def compose(self, other: "AffineElement") -> "AffineElement":
        """self after other."""
        t = tuple(a + b for a, b in zip(self.linear @ other.translation, self.translation))
        return AffineElement(self.linear @ other.linear, t)

    def inverse(self) -> "AffineElement":
        Ai = inverse(self.linear)
        return AffineElement(Ai, tuple(-x for x in Ai @ self.translation))

    @staticmethod
    def identity(n: int) -> "AffineElement":
        return AffineElement(Matrix.identity(n), (ZERO,) * n)


def check_affine(ctx: EmbeddingContext, a: AffineElement):
    if a.n != ctx.n:
        raise DimensionMismatch(f"affine element acts on dimension {a.n}, context has {ctx.n}")
    rep = group_membership(ctx.base, a.linear)
    if not rep:
        raise NotInGroup("; ".join(rep.failures))
    if ctx.k == 1 and ctx.base.sigma(a.translation) != a.translation:
        raise NotInGroup("translation is not fixed by sigma")


def _translation_block(ctx, d) -> Matrix:
    if ctx.k == 1:
        return Matrix.from_columns([d])
    return Matrix.from_columns([d, ctx.base.sigma(d)])


def embed(ctx: EmbeddingContext, a: AffineElement) -> Matrix:
    """Isotropy-group element attached to the affine map a (verified)."""
    check_affine(ctx, a)
    n, k = ctx.n, ctx.k
    A = a.linear
    D = _translation_block(ctx, a.translation)
    Ik = Matrix.identity(k)
    if ctx.extended_space.form is None:
        std = Matrix.blocks([[A, D], [Matrix.zeros(k, n), Ik]])
        g = inverse(std).T
    else:
        S, St = _corner_blocks(ctx.case)
        Tb = ctx.base.form.matrix
        R = -(inverse(St).T @ D.T @ Tb.T @ A)
        C = (inverse(S) @ D.T @ Tb @ D).scale(Fraction(-1, 2))
        Zk = Matrix.zeros(k, k)
        Zkn = Matrix.zeros(k, n)
        g = Matrix.blocks([[Ik, Zkn, Zk], [D, A, Zkn.T], [C, R, Ik]])
    rep = isotropy_report(ctx, g)
    if not rep:
        raise AffineError("embedded element failed verification: " + "; ".join(rep.failures))
    return g


def isotropy_report(ctx: EmbeddingContext, g: Matrix):
    rep = group_membership(ctx.extended_space, g)
    if tuple(g @ ctx.fixed_vector) != ctx.fixed_vector:
        rep.fail("g does not fix the marked vector")
    return rep


def project(ctx: EmbeddingContext, g: Matrix) -> AffineElement:
    """Affine map attached to an isotropy-group element; inverse of embed on its image."""
    if g.shape != (ctx.dim, ctx.dim):
        raise DimensionMismatch("matrix shape")
    rep = isotropy_report(ctx, g)
    if not rep:
        raise NotInIsotropyGroup("; ".join(rep.failures))
    n, k, h = ctx.n, ctx.k, ctx.head
    base = list(range(h, h + n))
    if ctx.extended_space.form is None:
        X = g.submatrix(base, base)
        C = g.submatrix(list(range(n, n + k)), base)
        Xi = inverse(X)
        A = Xi.T
        D = -(C @ Xi).T
    else:
        A = g.submatrix(base, base)
        D = g.submatrix(base, list(range(k)))
    return AffineElement(A, D.col(0))


def central_defect(ctx: EmbeddingContext, a: AffineElement, b: AffineElement) -> Matrix:
    """embed(a) embed(b) embed(ab)^-1; the identity exactly when embed is multiplicative on (a, b)."""
    return embed(ctx, a) @ embed(ctx, b) @ inverse(embed(ctx, a.compose(b)))


# random elements ------------------------------------------------------------------------------

def random_affine_element(ctx: EmbeddingContext, rng: random.Random, basis=None, size: int = 2) -> AffineElement:
    A = random_group_element(ctx.base, rng, (), 2, basis)
    d = []
    for _ in range(ctx.n):
        re = Fraction(rng.randint(-size, size), rng.randint(1, size))
        im = ZERO.re if ctx.k == 1 else Fraction(rng.randint(-size, size), rng.randint(1, size))
        d.append(Gaussian(re, im))
    if ctx.k == 1:
        d = [Gaussian(x.re) for x in d]
    return AffineElement(A, tuple(d))


def base_algebra_basis(ctx: EmbeddingContext):
    return algebra_basis(ctx.base)


# quaternionic model -----------------------------------------------------------------------------

def quaternionic_space(ctx: EmbeddingContext) -> QuaternionicSpace:
    space = ctx.extended_space
    if space.sigma is None or space.sigma.sign != -1:
        raise WrongFamily(f"{ctx.family} has no quaternionic structure")
    return QuaternionicSpace(space.sigma, quaternionic_basis(space.sigma), space.form)


def quaternionic_model(ctx: EmbeddingContext, g: Matrix, qspace: QuaternionicSpace | None = None):
    """Quaternion matrix Q with rho(g v) = rho(v) Q on coordinate rows.

    Rows act on the right, so the model of g h (h applied first) is model(h) model(g).
    """
    qs = qspace or quaternionic_space(ctx)
    space = ctx.extended_space
    if g.shape != (space.dim, space.dim):
        raise DimensionMismatch("matrix shape")
    if g @ space.sigma.matrix != space.sigma.matrix @ g.conj():
        raise NotInGroup("g does not commute with sigma")
    return tuple(qs.coordinates(g @ b) for b in qs.basis)


def quaternionic_identity(ctx: EmbeddingContext):
    return qmat_identity(ctx.dim // 2)
