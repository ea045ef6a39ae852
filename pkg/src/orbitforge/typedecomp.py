"""Pairs (Y, W; sigma, tau), their decomposition into indecomposable nilpotent
types, reduced pairs, index formulas and the semisimple zero types.

Chains are written top first: a block with top x has basis
``x, Yx, ..., Y^h x`` and Y acts as the lower shift.  For tops x_a the model
form is ``tau(Y^i x_a, Y^l x_b) = (-1)^i G[a][b]`` when ``i + l = h`` and 0
otherwise, where ``G[a][b] = tau(x_a, Y^h x_b)`` is the top Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .labels import (
    InvalidLabel,
    TypeLabel,
    expand_types,
    normalize_types,
    reduced_form_kind,
    top_sign,
    type_row,
)
from .linalg import (
    DimensionMismatch,
    Matrix,
    NotNilpotent,
    Subspace,
    congruence_index,
    extend_basis,
    inverse,
    kernel_vectors,
    lincomb,
    rank_of_vectors,
    restricted_kernel,
    solve,
    solve_many,
    unit_vector,
    uniform_chain_basis,
    vaxpy,
    vconj,
    vec,
    vscale,
)
from .scalars import I, ONE, ZERO, Gaussian
from .structures import (
    AntiLinearMap,
    Form,
    StructuredSpace,
    algebra_membership,
    family_info,
)


class DecompositionError(Exception):
    pass


class NotUniform(DecompositionError):
    pass


class NoIndexDefined(DecompositionError):
    pass


class InvalidPair(DecompositionError):
    pass


class ConstructionFailure(DecompositionError):
    """An internal consistency check failed (a bug, never expected on valid input)."""


def _check(cond, msg):
    if not cond:
        raise ConstructionFailure(msg)


# pairs -------------------------------------------------------------------------

@dataclass(frozen=True)
class Pair:
    space: StructuredSpace
    Y: Matrix
    carrier: Subspace | None = None

    def __post_init__(self):
        n = self.space.dim
        if self.Y.shape != (n, n):
            raise DimensionMismatch("operator shape differs from space dimension")
        if self.carrier is None:
            if not algebra_membership(self.space, self.Y):
                raise InvalidPair("Y is not in the Lie algebra of the structure")
            return
        C = self.carrier
        if C.ambient_dim != n or not C.basis:
            raise DimensionMismatch("carrier must be a nonzero subspace of the space")
        for v in C.basis:
            if not C.contains(self.Y @ v):
                raise InvalidPair("carrier is not Y-invariant")
            if self.space.sigma is not None and not C.contains(self.space.sigma(v)):
                raise InvalidPair("carrier is not sigma-invariant")
        sub, Yc, _ = self.restricted()
        if sub.form is not None and not sub.form.is_nondegenerate():
            raise InvalidPair("form is degenerate on the carrier")
        if not algebra_membership(sub, Yc):
            raise InvalidPair("Y restricted to the carrier is not in the Lie algebra")

    @property
    def family(self):
        return self.space.family

    @property
    def dim(self):
        return self.carrier.dim if self.carrier is not None else self.space.dim

    def restricted(self):
        """(space, Y, B) written in the carrier basis B (columns)."""
        if self.carrier is None:
            return self.space, self.Y, Matrix.identity(self.space.dim)
        B = self.carrier.matrix()
        sub = self.space.restrict(B)
        Yc = solve_many(B, self.Y @ B)
        return sub, Yc, B


@dataclass(frozen=True)
class ReducedPair:
    dim: int
    sigma_bar: AntiLinearMap | None
    tau_bar: Form | None
    height: int
    twisted: bool = False  # hermitian form stored as -i times the skew-hermitian one
    representatives: tuple = ()


# small helpers -------------------------------------------------------------------

def _tau(space, u, v):
    return space.form(u, v)


def _sigma(space, v):
    return space.sigma(v)


def chain(Y: Matrix, x, h: int) -> list:
    out = [vec(x)]
    for _ in range(h):
        out.append(Y @ out[-1])
    return out


def height_on(Y: Matrix, vectors) -> int:
    """Least h with Y^(h+1) killing all the vectors (which span a Y-invariant space)."""
    cur = [v for v in vectors if any(v)]
    if not cur:
        raise ValueError("height of the zero space")
    h = 0
    n = Y.nrows
    while True:
        cur = [Y @ v for v in cur]
        cur = [v for v in cur if any(v)]
        if not cur:
            return h
        h += 1
        if h > n:
            raise NotNilpotent("operator is not nilpotent on the subspace")


def realify(space, vectors) -> list:
    """Vectors fixed by sigma_+ spanning the same sigma-invariant span."""
    out = []
    for v in vectors:
        s = _sigma(space, v)
        a = tuple(x + y for x, y in zip(v, s))
        b = tuple(I * (x - y) for x, y in zip(v, s))
        for c in (a, b):
            if any(c):
                out.append(c)
    return out


def sigma_pairs(space, vectors) -> list:
    out = []
    for v in vectors:
        out.append(tuple(v))
        out.append(_sigma(space, v))
    return out


def perp_within(space, U, E) -> list:
    """Basis of {u in span U : tau(e, u) = 0 for e in E}."""
    n = space.dim
    if not U:
        return []
    if not E:
        return list(U)
    T = space.form.matrix
    rows = []
    for e in E:
        if space.form.hermitian:
            ce = vconj(e)
            rows.append(T.T @ ce)
        else:
            rows.append(T @ e)
    A = Matrix._from_trusted(rows) @ Matrix.from_columns(U)
    return [lincomb(k, U, n) for k in kernel_vectors(A)]


def top_gram(space, Yh: Matrix, tops) -> Matrix:
    """G[a][b] = tau(x_a, Y^h x_b)."""
    imgs = [Yh @ t for t in tops]
    return Matrix._from_trusted([[_tau(space, a, b) for b in imgs] for a in tops])


def _sign(x) -> int:
    x = x.re if isinstance(x, Gaussian) else x
    return 1 if x > 0 else -1


# exact square roots used for normalization ------------------------------------------

def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = _isqrt(n)
    return r if r * r == n else None


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)


def rational_sqrt(q: Fraction):
    q = Fraction(q)
    a = _isqrt_exact(q.numerator)
    b = _isqrt_exact(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def gaussian_sqrt(z: Gaussian):
    """Exact square root in Q(i), or None."""
    if not z:
        return ZERO
    mod = rational_sqrt(z.norm())
    if mod is None:
        return None
    re = rational_sqrt((z.re + mod) / 2)
    if re is None:
        return None
    if re:
        im = z.im / (2 * re)
    else:
        im = rational_sqrt((mod - z.re) / 2)
        if im is None:
            return None
    r = Gaussian(re, im)
    return r if r * r == z else None


_SEARCH_LIMIT = 10**10


def _two_squares(n: int):
    """(x, y) with x^2 + y^2 = n, or None (bounded search)."""
    if n < 0 or n > _SEARCH_LIMIT:
        return None
    x = _isqrt(n)
    while x >= 0 and 2 * x * x >= n:
        y = _isqrt_exact(n - x * x)
        if y is not None:
            return x, y
        x -= 1
    return None


def _four_squares(n: int):
    if n > _SEARCH_LIMIT:
        return None
    two = _two_squares(n)
    if two is not None:
        return two + (0, 0)
    a = _isqrt(n)
    for _ in range(400):
        if a < 0:
            break
        b = _isqrt(n - a * a)
        for _ in range(40):
            if b < 0:
                break
            rest = _two_squares(n - a * a - b * b)
            if rest is not None:
                return (a, b) + rest
            b -= 1
        a -= 1
    return None


def norm_preimage(t: Fraction, count: int):
    """Rationals (q_1..q_count) with sum q_k^2 = t (count 1, 2 or 4), or None."""
    t = Fraction(t)
    if t <= 0:
        return None
    num, den = t.numerator, t.denominator
    n = num * den
    rep = {1: lambda m: (lambda r: None if r is None else (r,))(_isqrt_exact(m)), 2: _two_squares, 4: _four_squares}[count](n)
    if rep is None:
        return None
    return tuple(Fraction(x, den) for x in rep)


# canonical top data ---------------------------------------------------------------------

def canonical_top_gram(family: str, h: int, kind: str, eps) -> Matrix | None:
    """Top Gram of the canonical model of an indecomposable type."""
    f = family_info(family)
    if f.form_kind is None:
        return None
    if kind == "single":
        if f.form_kind == "hermitian" and h % 2:
            return Matrix([[Gaussian(0, eps)]])
        return Matrix([[eps]])
    if f.sigma_sign == 1:
        return Matrix([[0, 1], [-1, 0]])
    if top_sign(f.name, h) == 1:
        return Matrix.identity(2)
    return Matrix([[0, eps], [-eps, 0]])


def chain_model(family: str, h: int, G: Matrix | None, chains: int):
    """(T, M, Y) for a block of `chains` chains of length h+1 with top Gram G.

    For sigma_- families the chains are (x, sigma x).
    """
    f = family_info(family)
    L = h + 1
    d = L * chains
    shift = Matrix([[1 if i == j + 1 else 0 for j in range(L)] for i in range(L)])
    Y = Matrix.block_diag(*([shift] * chains))
    T = None
    if f.form_kind is not None:
        V = [[ZERO] * d for _ in range(d)]
        for a in range(chains):
            for b in range(chains):
                g = G[a, b]
                if not g:
                    continue
                for i in range(L):
                    l = h - i
                    V[a * L + i][b * L + l] = g if i % 2 == 0 else -g
        V = Matrix._from_trusted(V)
        T = V if f.form_kind == "hermitian" else V.T
    M = None
    if f.sigma_sign == 1:
        M = Matrix.identity(d)
    elif f.sigma_sign == -1:
        Z = Matrix.zeros(L, L)
        Id = Matrix.identity(L)
        M = Matrix.blocks([[Z, -Id], [Id, Z]])
    return T, M, Y


def block_sum_space(family: str, parts):
    """Assemble (T, M, Y) block-diagonally into a space and operator."""
    f = family_info(family)
    Ts = [p[0] for p in parts]
    Ms = [p[1] for p in parts]
    Ys = [p[2] for p in parts]
    Y = Matrix.block_diag(*Ys)
    d = Y.nrows
    form = Form(Matrix.block_diag(*Ts), f.form_kind) if f.form_kind is not None else None
    sigma = AntiLinearMap(Matrix.block_diag(*Ms), f.sigma_sign) if f.sigma_sign is not None else None
    return StructuredSpace(d, f.name, form, sigma), Y


# blocks -----------------------------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    label: TypeLabel
    tops: tuple
    basis: tuple
    gram: Matrix | None  # top Gram in the block's top basis
    canonical: bool


@dataclass(frozen=True)
class Decomposition:
    labels: tuple  # normalized multiset of TypeLabel
    blocks: tuple
    witness: Matrix  # columns: block bases in canonical order, ambient coordinates

    def __iter__(self):
        return iter(self.labels)


def _top_candidates(space, U):
    s = space.info.sigma_sign
    if s == 1:
        return realify(space, U)
    if s == -1:
        return sigma_pairs(space, U)
    return list(U)


class _TopForm:
    """g(a, b) = tau(a, Y^h b) and the per-family normal form rules."""

    def __init__(self, space, Y, h):
        self.space = space
        self.family = space.family
        self.h = h
        self.Yh = Y.power(h)
        self.hermitian = space.form.hermitian
        self.r = top_sign(space.family, h)
        self.sigma_sign = space.info.sigma_sign

    def g(self, a, b):
        return _tau(self.space, a, self.Yh @ b)

    def gp(self, a, b):
        """g made hermitian/symmetric where possible (gl*, h odd: -i g)."""
        v = self.g(a, b)
        if self.hermitian and self.r == -1:
            return -I * v
        return v

    def gram(self, vs):
        return top_gram(self.space, self.Yh, vs)

    def sig(self, v):
        return _sigma(self.space, v)

    # block selection ---------------------------------------------------------
    def _combos(self, R):
        for x in R:
            yield x
        real = self.sigma_sign == 1
        for i in range(len(R)):
            for j in range(i + 1, len(R)):
                yield vaxpy(R[i], ONE, R[j])
                if not real:
                    yield vaxpy(R[i], I, R[j])

    def pick(self, R):
        """(tops, kind, eps) of one nondegenerate indecomposable top block from R."""
        s = self.sigma_sign
        if s != -1 and (self.r == 1 or self.hermitian):
            for x in self._combos(R):
                v = self.gp(x, x)
                if v:
                    return [x], "single", _sign(v)
            raise ConstructionFailure("no anisotropic top vector")
        if s == 1:
            x = R[0]
            for y in R[1:]:
                c = self.g(x, y)
                if c:
                    return [x, vscale(c.inverse(), y)], "double", None
            raise ConstructionFailure("degenerate alternating top form")
        for x in self._combos(R):
            sx = self.sig(x)
            b = self.g(x, sx)
            if self.r == 1:
                if b or self.g(x, x):
                    return [x, sx], "double", None
            elif b:
                return [x, sx], "double", _sign(b)
        raise ConstructionFailure("no nondegenerate quaternionic top line")

    # normalization ---------------------------------------------------------------
    def normalize(self, tops, kind, eps):
        """Rescale a block's tops toward the canonical top Gram when Q(i) allows."""
        target = canonical_top_gram(self.family, self.h, kind, eps)
        G = self.gram(tops)
        if G == target:
            return tops
        s = self.sigma_sign
        if kind == "single":
            val = self.gp(tops[0], tops[0]).re
            if self.hermitian:
                q = norm_preimage(1 / abs(val), 2)
                if q is not None:
                    return [vscale(Gaussian(q[0], q[1]), tops[0])]
            else:
                q = rational_sqrt(1 / abs(val))
                if q is not None:
                    return [vscale(q, tops[0])]
            return tops
        if s == -1:
            x = tops[0]
            if self.r == -1:
                b = self.g(x, self.sig(x)).re
                q = norm_preimage(1 / abs(b), 4)
                if q is not None:
                    x = self._quat_combo(x, Gaussian(q[0], q[1]), Gaussian(q[2], q[3]))
                    return [x, self.sig(x)]
                return tops
            small = [ONE, I, Gaussian(1, 1), Gaussian(1, -1), Gaussian(2), Gaussian(2, 1), Gaussian(1, 2)]
            trials = [(ONE, ZERO)] + [(a, ONE) for a in [ZERO] + small] + [(a, I) for a in small]
            for al, be in trials:
                y = self._quat_combo(x, al, be)
                sy = self.sig(y)
                if self.g(y, sy):
                    continue
                m = self.g(y, y)
                if not m:
                    continue
                c = gaussian_sqrt(m.inverse())
                if c is not None:
                    y = vscale(c, y)
                    return [y, self.sig(y)]
            return tops
        return tops

    def _quat_combo(self, x, al, be):
        return vaxpy(vscale(al, x), be, self.sig(x))


def orthogonalize_tops(space, Y, h, tops) -> list:
    """Correct tops by Y-images so that tau(x_a, Y^j x_b) = 0 for all j < h."""
    tops = [vec(t) for t in tops]
    if h == 0 or not tops:
        return tops
    herm = space.form.hermitian
    Gh = top_gram(space, Y.power(h), tops)
    Ghinv = inverse(Gh)
    powers = [Matrix.identity(Y.nrows)]
    for _ in range(h):
        powers.append(Y @ powers[-1])
    for j in range(h - 1, -1, -1):
        Gj = top_gram(space, powers[j], tops)
        if Gj.is_zero():
            continue
        k = h - j
        coef = Fraction(-1, 2) * (-1) ** k
        C = (Gj @ Ghinv).scale(coef)
        if herm:
            C = C.conj()
        shifted = [powers[k] @ t for t in tops]
        new = []
        for a, t in enumerate(tops):
            v = t
            for c, s in zip(C.row(a), shifted):
                if c:
                    v = vaxpy(v, c, s)
            new.append(v)
        tops = new
    for j in range(h):
        _check(top_gram(space, powers[j], tops).is_zero(), "orthogonalization left a lower Gram block")
    return tops


def _form_blocks(space, Y, U) -> list:
    """Orthogonal indecomposable blocks of a nilpotent Y on the invariant span U."""
    n = space.dim
    fam = space.family
    s = space.info.sigma_sign
    blocks = []
    U = list(U)
    while U:
        h = height_on(Y, U)
        tf = _TopForm(space, Y, h)
        Usub = Subspace(n, U, _trusted=True)
        ker = restricted_kernel(tf.Yh, Usub)
        R = extend_basis(ker, _top_candidates(space, U), n)
        picked = []
        base = list(ker)
        while R:
            tops, kind, eps = tf.pick(R)
            tops = tf.normalize(tops, kind, eps)
            G = tf.gram(tops)
            _check(bool(G.det()), "top block Gram is singular")
            picked.append((tops, kind, eps))
            Ginv = inverse(G)
            proj = []
            for x in R:
                rhs = [tf.g(t, x) for t in tops]
                c = Ginv @ rhs
                v = x
                for ci, t in zip(c, tops):
                    if ci:
                        v = vaxpy(v, -ci, t)
                proj.append(v)
            base.extend(tops)
            R = extend_basis(base, proj, n)
        flat = [t for tops, _, _ in picked for t in tops]
        flat = orthogonalize_tops(space, Y, h, flat)
        E = []
        pos = 0
        for tops, kind, eps in picked:
            ts = flat[pos : pos + len(tops)]
            pos += len(tops)
            if s == -1:
                _check(tf.sig(ts[0]) == ts[1], "sigma pairing lost in orthogonalization")
            if s == 1:
                _check(all(tf.sig(t) == t for t in ts), "real tops lost in orthogonalization")
            basis = [v for t in ts for v in chain(Y, t, h)]
            G = tf.gram(ts)
            label = TypeLabel(fam, h, kind, eps).validate()
            canon = G == canonical_top_gram(fam, h, kind, eps)
            blocks.append(Block(label, tuple(ts), tuple(basis), G, canon))
            E.extend(basis)
        Unew = perp_within(space, U, E)
        _check(len(Unew) + len(E) == len(U), "orthogonal complement has the wrong dimension")
        U = Unew
    return blocks


def _free_blocks(space, Y, U) -> list:
    """Blocks for the form-free families (chains of real vectors or sigma-pairs)."""
    n = space.dim
    fam = space.family
    if not U:
        return []
    Usub = Subspace(n, U, _trusted=True)
    if space.info.sigma_sign == 1:
        chains = uniform_chain_basis(Y, Usub, candidates=lambda layer: realify(space, layer))
        return [
            Block(TypeLabel(fam, len(c) - 1, "single").validate(), (c[0],), tuple(c), None, True)
            for c in chains
        ]
    chains = uniform_chain_basis(Y, Usub, candidates=lambda layer: sigma_pairs(space, layer))
    out = []
    for k in range(0, len(chains), 2):
        a, b = chains[k], chains[k + 1]
        _check(len(a) == len(b) and _sigma(space, a[0]) == b[0], "chains are not sigma-paired")
        out.append(Block(TypeLabel(fam, len(a) - 1, "double").validate(), (a[0], b[0]), tuple(a + b), None, True))
    return out


def nilpotent_blocks(space, Y, U) -> list:
    if space.form is None:
        return _free_blocks(space, Y, U)
    return _form_blocks(space, Y, U)


def sort_blocks(blocks) -> list:
    return sorted(blocks, key=lambda b: b.label.sort_key())


def decompose_nilpotent_pair(p: Pair) -> Decomposition:
    """Indecomposable nilpotent types of the pair plus an adapted basis."""
    sub, Y, B = p.restricted()
    n = sub.dim
    if not Y.power(n).is_zero():
        raise NotNilpotent("Y is not nilpotent on the carrier")
    U = [unit_vector(n, k) for k in range(n)]
    blocks = sort_blocks(nilpotent_blocks(sub, Y, U))
    cols = [v for b in blocks for v in b.basis]
    _check(len(cols) == n and rank_of_vectors(cols) == n, "blocks do not span the carrier")
    labels = normalize_types([b.label for b in blocks])
    if p.carrier is not None:
        blocks = [
            Block(b.label, tuple(B @ t for t in b.tops), tuple(B @ v for v in b.basis), b.gram, b.canonical)
            for b in blocks
        ]
        cols = [B @ v for v in cols]
    return Decomposition(labels, tuple(blocks), Matrix.from_columns(cols))


# synthesis -------------------------------------------------------------------------------

def type_block_model(label: TypeLabel):
    lab = label.validate()
    G = canonical_top_gram(lab.family, lab.h, lab.kind, lab.eps)
    return chain_model(lab.family, lab.h, G, lab.chains)


def synthesize_types(labels) -> Pair:
    labels = expand_types(labels)
    if not labels:
        raise InvalidLabel("empty type multiset")
    fams = {l.family for l in labels}
    if len(fams) != 1:
        raise InvalidLabel("labels from different families")
    space, Y = block_sum_space(labels[0].family, [type_block_model(l) for l in labels])
    return Pair(space, Y)


def synthesize_type(label: TypeLabel) -> Pair:
    """Canonical model of a type label (block sum when multiplicity > 1)."""
    return synthesize_types([label])


# reduced pairs ---------------------------------------------------------------------------

def reduced_pair(p: Pair) -> ReducedPair:
    sub, Y, _ = p.restricted()
    n = sub.dim
    if not Y.power(n).is_zero():
        raise NotNilpotent("Y is not nilpotent on the carrier")
    if Y.is_zero():
        h = 0
    else:
        h = height_on(Y, [unit_vector(n, k) for k in range(n)])
    kdim = n - Y.rank()
    if kdim * (h + 1) != n:
        raise NotUniform("Jordan blocks of Y have different sizes")
    YW = [c for c in (Y @ Matrix.identity(n)).columns() if any(c)]
    YW = extend_basis([], YW, n)
    tops = extend_basis(YW, [unit_vector(n, k) for k in range(n)], n)
    m = len(tops)
    sigma_bar = None
    if sub.sigma is not None:
        A = Matrix.from_columns(tops + YW)
        cols = []
        for t in tops:
            c = solve(A, sub.sigma(t))
            cols.append(c[:m])
        sigma_bar = AntiLinearMap(Matrix.from_columns(cols), sub.sigma.sign)
    tau_bar = None
    twisted = False
    if sub.form is not None:
        G = top_gram(sub, Y.power(h), tops)
        if sub.form.hermitian:
            if h % 2:
                G = G.scale(-I)
                twisted = True
            tau_bar = Form(G, "hermitian")
        else:
            tau_bar = Form(G.T, reduced_form_kind(sub.form.kind, h))
        if not tau_bar.is_nondegenerate():
            raise ConstructionFailure("reduced form is degenerate")
    return ReducedPair(m, sigma_bar, tau_bar, h, twisted, tuple(tops))


# indices -----------------------------------------------------------------------------------

def type_index(label: TypeLabel) -> int:
    """Number of negative eigenvalues of the relevant real/hermitian Gram form of one copy."""
    lab = label.one().validate()
    h = lab.h
    f = lab.family
    if f == "gl_tau_star":
        if h % 2:
            return (h + 1) // 2
        delta = (-1) ** (h // 2) * lab.eps
        return (h + 1 - delta) // 2
    if f == "o_sigma_plus":
        if h % 2:
            return h + 1
        delta = (-1) ** (h // 2) * lab.eps
        return (h + 1 - delta) // 2
    if f == "sp_sigma_minus":
        if h % 2:
            return h + 1
        delta = (-1) ** (h // 2) * lab.eps
        return h + 1 - delta
    raise NoIndexDefined(f"no index entry for {lab}")


def real_basis(space) -> list:
    """A basis of C^n made of sigma_+-fixed vectors."""
    n = space.dim
    return extend_basis([], realify(space, [unit_vector(n, k) for k in range(n)]), n)


def gram_index(space) -> int:
    """Index of the form whose signature the index formulas count."""
    f = space.family
    n = space.dim
    if f == "gl_tau_star":
        return congruence_index(space.form.matrix, hermitian=True)
    if f == "o_sigma_plus":
        R = real_basis(space)
        G = Matrix([[_tau(space, a, b) for b in R] for a in R])
        return congruence_index(G)
    if f == "sp_sigma_minus":
        # K(u, v) = tau(v, sigma u) is hermitian
        E = [unit_vector(n, k) for k in range(n)]
        S = [_sigma(space, e) for e in E]
        K = Matrix([[_tau(space, E[b], S[a]) for b in range(n)] for a in range(n)])
        return congruence_index(K, hermitian=True)
    raise NoIndexDefined(f"no index defined for {f}")


# semisimple zero types ----------------------------------------------------------------------

@dataclass(frozen=True)
class SemisimpleZeroType:
    family: str
    symbol: str
    kind: str
    has_eps: bool
    case: str | None
    complexification: str | None

    def type_labels(self) -> list:
        """The height-0 type labels of the family (signs expanded)."""
        kind, has_eps = type_row(self.family, 0)
        if has_eps:
            return [TypeLabel(self.family, 0, kind, e) for e in (1, -1)]
        return [TypeLabel(self.family, 0, kind)]


_ZERO_TYPES = {
    "gl_sigma_plus": ("D_0(0)", "single", False, "c", None),
    "gl_sigma_minus": ("D_0(0,0)", "double", False, "b", None),
    "gl_tau_star": ("D^eps_0(0)", "single", True, None, None),
    "o_sigma_plus": ("D^eps_0(0)", "single", True, None, "D_0(0)"),
    "o_sigma_minus": ("D^eps_0(0)", "single", True, "b", None),
    "sp_sigma_plus": ("D_0(0,0)", "double", False, "c", None),
    "sp_sigma_minus": ("D^eps_0(0,0)", "double", True, None, "D_0(0,0)"),
}


def semisimple_zero_types(space) -> list:
    """Indecomposable semisimple types with S = 0 for the family of `space`."""
    fam = space.family if isinstance(space, StructuredSpace) else family_info(space).name
    sym, kind, eps, case, cx = _ZERO_TYPES[fam]
    return [SemisimpleZeroType(fam, sym, kind, eps, case, cx)]
