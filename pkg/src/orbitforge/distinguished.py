"""Triples (Y, W, v0; sigma, tau): special vectors, distinguished height,
parameter sets, classification into a distinguished core plus nilpotent
types, synthesis of canonical models, and equivalence of triples.

Special vectors: with sigma_+ the vector must satisfy sigma(v) = +-v; with
sigma_- it must be an eigenvector of the matrix M of sigma (as a linear map)
with eigenvalue +-i; with a form it must be isotropic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import permutations

from .groups import algebra_basis, random_group_element
from .labels import (
    DistinguishedLabel,
    InvalidLabel,
    expand_types,
    format_classification,
    normalize_types,
    top_sign,
)
from .linalg import (
    DimensionMismatch,
    IrrationalSpectrum,
    Matrix,
    charpoly,
    extend_basis,
    inverse,
    jordan_blocks,
    kernel_vectors,
    lincomb,
    rank_of_vectors,
    solve,
    solve_many,
    vaxpy,
    vec,
    vscale,
)
from .scalars import I, ONE, ZERO, Gaussian
from .structures import Report, StructuredSpace, family_info, group_membership
from .typedecomp import (
    Block,
    ConstructionFailure,
    Pair,
    block_sum_space,
    chain,
    chain_model,
    nilpotent_blocks,
    norm_preimage,
    orthogonalize_tops,
    perp_within,
    rational_sqrt,
    realify,
    sort_blocks,
    top_gram,
    type_block_model,
)


class DistinguishedError(Exception):
    pass


class ZeroVector(DistinguishedError):
    pass


class NotSpecial(DistinguishedError):
    pass


class InvalidTriple(DistinguishedError):
    pass


class NoDistinguishedHeight(DistinguishedError):
    pass


class NoCoreRow(DistinguishedError):
    pass


class NotInIsotropyGroup(DistinguishedError):
    pass


class GenerationFailed(DistinguishedError):
    pass


class FamilyMismatch(DistinguishedError):
    pass


def _check(cond, msg):
    if not cond:
        raise ConstructionFailure(msg)


# special vectors and triples --------------------------------------------------------

def is_special_vector(space: StructuredSpace, v) -> Report:
    v = vec(v)
    if len(v) != space.dim:
        raise DimensionMismatch("vector length differs from space dimension")
    if not any(v):
        raise ZeroVector("special vectors are nonzero")
    rep = Report(True)
    eig = None
    if space.sigma is not None:
        if space.sigma.sign == 1:
            sv = space.sigma(v)
            if sv == v:
                eig = 1
            elif sv == tuple(-x for x in v):
                eig = -1
            else:
                rep.fail("sigma(v) is not +-v")
        else:
            Mv = space.sigma.matrix @ v
            if Mv == tuple(I * x for x in v):
                eig = I
            elif Mv == tuple(-I * x for x in v):
                eig = -I
            else:
                rep.fail("v is not an eigenvector of sigma's matrix for +-i")
    if space.form is not None and space.form(v, v):
        rep.fail("v is not isotropic")
    rep.info["eigenvalue"] = eig
    return rep


@dataclass(frozen=True)
class Triple:
    pair: Pair
    v0: tuple

    def __post_init__(self):
        v0 = vec(self.v0)
        object.__setattr__(self, "v0", v0)
        space = self.pair.space
        if len(v0) != space.dim:
            raise DimensionMismatch("v0 length differs from space dimension")
        if not any(v0):
            raise ZeroVector("v0 must be nonzero")
        if self.pair.carrier is not None and not self.pair.carrier.contains(v0):
            raise InvalidTriple("v0 is not in the carrier")
        rep = is_special_vector(space, v0)
        if not rep:
            raise NotSpecial("; ".join(rep.failures))
        if any(self.pair.Y @ v0):
            raise InvalidTriple("Y v0 != 0")

    @property
    def space(self):
        return self.pair.space

    @property
    def Y(self):
        return self.pair.Y

    @property
    def family(self):
        return self.pair.space.family

    @property
    def dim(self):
        return self.pair.dim

    def local(self):
        """(space, Y, B, v0) in the carrier basis B."""
        sub, Y, B = self.pair.restricted()
        v = solve(B, self.v0) if self.pair.carrier is not None else self.v0
        return sub, Y, B, v


@dataclass(frozen=True)
class ParameterSet:
    representative: Gaussian
    closure: str  # singleton / real_scale_class
    witness: tuple  # a special w realizing the representative


@dataclass(frozen=True)
class UnclassifiedResidual:
    dim: int
    jordan: tuple | None  # ((eigenvalue, (sizes...)), ...) when the spectrum is in Q(i)
    charpoly: tuple | None


@dataclass(frozen=True)
class ClassificationResult:
    core: DistinguishedLabel
    residual_types: tuple
    unclassified_residual: UnclassifiedResidual | None
    witness: Matrix
    parameter_set: ParameterSet
    sector: object
    core_tops: tuple = ()
    core_gram: Matrix | None = None
    blocks: tuple = ()

    @property
    def labels(self):
        return self.core, self.residual_types

    def label_string(self) -> str:
        return format_classification(self.core, self.residual_types)

    def same_labels(self, other) -> bool:
        return (
            self.core == other.core
            and self.residual_types == other.residual_types
            and self.sector_key() == other.sector_key()
            and self.unclassified_residual == other.unclassified_residual
        )

    def sector_key(self):
        """Sector of v0 as an invariant: only meaningful for sigma_+ (real vs imaginary v0)."""
        if family_info(self.core.family).sigma_sign == 1:
            return self.sector
        return None


# distinguished height and parameters ------------------------------------------------------

def _dht_local(Y: Matrix, v0) -> int:
    n = Y.nrows
    h = 0
    P = Matrix.identity(n)
    for k in range(1, n + 1):
        P = P @ Y
        if P.is_zero() or solve(P, v0) is None:
            break
        h = k
    return h


def distinguished_height(t: Triple) -> int:
    sub, Y, _, v0 = t.local()
    return _dht_local(Y, v0)


def _sector(space, v0):
    return is_special_vector(space, v0).info["eigenvalue"]


def _special_solution(space, Y, v0, h):
    w = solve(Y.power(h), v0)
    if w is None:
        raise NoDistinguishedHeight(f"no solution of Y^{h} w = v0")
    if space.info.sigma_sign == 1:
        s = _sector(space, v0)
        sw = space.sigma(w)
        w = tuple((a + s * b) / 2 for a, b in zip(w, sw))
    return w


@dataclass(frozen=True)
class _Core:
    label: DistinguishedLabel
    tops: tuple
    basis: tuple
    gram: Matrix | None
    params: ParameterSet
    sector: object


def _find_partner(space, Y, v0, h, sector):
    """z in ker Y^(h+1), in the sector of v0 for sigma_+, with tau(z, v0) != 0."""
    cands = kernel_vectors(Y.power(h + 1))
    if space.info.sigma_sign == 1:
        cands = realify(space, cands)
        if sector == -1:
            cands = [vscale(I, c) for c in cands]
    for z in cands:
        if space.form(z, v0):
            return z
    raise ConstructionFailure("no partner vector pairing with v0")


def _core_local(space, Y, v0) -> _Core:
    fam = space.family
    info = space.info
    s = info.sigma_sign
    h = _dht_local(Y, v0)
    sector = _sector(space, v0)
    w = _special_solution(space, Y, v0, h)
    if space.form is None:
        if s == 1:
            tops = [w]
            label = DistinguishedLabel(fam, h, "single")
        else:
            a = tuple((x - I * y) / 2 for x, y in zip(w, space.sigma(w)))
            tops = [a, space.sigma(a)]
            label = DistinguishedLabel(fam, h, "double")
        basis = tuple(v for t in tops for v in chain(Y, t, h))
        params = ParameterSet(ONE, "real_scale_class", w)
        return _Core(label.validate(), tuple(tops), basis, None, params, sector)

    Yh = Y.power(h)

    def g(a, b):
        return space.form(a, Yh @ b)

    hermitian = space.form.hermitian
    r = top_sign(fam, h)
    mu = space.form(w, v0)
    if s == -1:
        sw = space.sigma(w)
        beta = g(w, sw)
        a = tuple((x - I * y) / 2 for x, y in zip(w, sw))
        tops = orthogonalize_tops(space, Y, h, [a, space.sigma(a)])
        _check(space.sigma(tops[0]) == tops[1], "sigma pairing lost in the core")
        if r == 1:
            if not mu and not beta:
                raise NoCoreRow("degenerate reduced form: the core needs more than two chains")
            _check(not beta.re, "cross term is not imaginary")
            label = DistinguishedLabel(fam, h, "double", None, mu, beta.im)
        else:
            if not beta:
                raise NoCoreRow("degenerate reduced form: the core needs more than two chains")
            _check(not beta.im, "cross term is not real")
            label = DistinguishedLabel(fam, h, "double", 1 if beta.re > 0 else -1, Gaussian(abs(beta.re)))
        wit = tuple(x + I * y for x, y in zip(tops[0], tops[1]))
    elif mu:
        tops = orthogonalize_tops(space, Y, h, [w])
        val = -I * mu if hermitian and r == -1 else mu
        _check(not val.im, "top value is not real")
        label = DistinguishedLabel(fam, h, "single", 1 if val.re > 0 else -1, Gaussian(abs(val.re)))
        wit = tops[0]
    else:
        z = _find_partner(space, Y, v0, h, sector)
        z = vscale(g(w, z).inverse(), z)
        d = g(z, z)
        t = -d / 2 if hermitian and r == -1 else d / 2
        z = vaxpy(z, -t, w)
        tops = orthogonalize_tops(space, Y, h, [w, z])
        kind = "split" if (r == 1 or hermitian) else "double"
        label = DistinguishedLabel(fam, h, kind)
        wit = tops[0]
    try:
        label = label.validate()
    except InvalidLabel as exc:
        raise NoCoreRow(str(exc)) from exc
    basis = tuple(v for t in tops for v in chain(Y, t, h))
    G = top_gram(space, Yh, tops)
    params = ParameterSet(mu, "singleton", tuple(wit))
    return _Core(label, tuple(tops), basis, G, params, sector)


def parameter_set(t: Triple, h: int | None = None) -> ParameterSet:
    sub, Y, B, v0 = t.local()
    dht = _dht_local(Y, v0)
    if h is not None and h != dht:
        raise ValueError(f"h={h} is not the distinguished height {dht}")
    core = _core_local(sub, Y, v0)
    w = core.params.witness
    if t.pair.carrier is not None:
        w = B @ w
    return replace(core.params, witness=tuple(w))


# complements ------------------------------------------------------------------------------

def _free_complement(space, Y, h, tops, W0) -> list:
    """Y- and sigma-invariant complement of the core chains inside W0 (form-free families)."""
    n = space.dim
    M = space.sigma.matrix
    Yh1 = Y.power(h + 1)
    Yh = Y.power(h)
    heads = [Yh @ t for t in tops]
    rows = [list(c) for c in Yh1.columns()] + [list(x) for x in heads]
    A = Matrix._from_trusted(rows)
    rhs = [ZERO] * n + [ONE] + [ZERO] * (len(heads) - 1)
    f = solve(A, rhs)
    _check(f is not None, "no functional separating the core")

    def row_apply(fr, v):
        return sum((a * b for a, b in zip(fr, v)), ZERO)

    def twist(fr):
        # v -> conj(f(sigma v)) as a row vector
        return tuple(x.conjugate() for x in (Matrix._from_trusted([fr]) @ M).row(0))

    if space.sigma.sign == 1:
        fr = None
        for cand in (f, tuple(I * x for x in f)):
            g = tuple((a + b) / 2 for a, b in zip(cand, twist(cand)))
            val = row_apply(g, heads[0])
            if val:
                fr = tuple(x / val for x in g)
                break
        _check(fr is not None, "real functional vanishes on the core head")
        funcs = [fr]
    else:
        funcs = [f, twist(f)]
    cond = []
    P = Matrix.identity(n)
    for _ in range(h + 1):
        for fr in funcs:
            cond.append((Matrix._from_trusted([fr]) @ P).row(0))
        P = P @ Y
    C = Matrix._from_trusted(cond) @ Matrix.from_columns(W0)
    U = [lincomb(k, W0, n) for k in kernel_vectors(C)]
    return U


# classification ---------------------------------------------------------------------------

def _unclassified(Y, W1):
    if not W1:
        return None
    B = Matrix.from_columns(W1)
    Y1 = solve_many(B, Y @ B)
    try:
        jb = jordan_blocks(Y1)
        return UnclassifiedResidual(len(W1), tuple((lam, tuple(sizes)) for lam, sizes in jb), None)
    except IrrationalSpectrum:
        return UnclassifiedResidual(len(W1), None, tuple(charpoly(Y1)))


def classify(t: Triple) -> ClassificationResult:
    sub, Y, Bc, v0 = t.local()
    n = sub.dim
    Yn = Y.power(n)
    W0 = kernel_vectors(Yn)
    W1 = extend_basis([], [c for c in Yn.columns() if any(c)], n)
    core = _core_local(sub, Y, v0)
    k = len(core.tops)
    _check(k in (1, 2), "core must have one or two chains")
    _check(rank_of_vectors(list(core.basis)) == len(core.basis), "core chains are dependent")
    _check(all(not any(Y @ v) for v in (chain(Y, t0, core.label.h)[-1] for t0 in core.tops)), "core is not uniform")
    if sub.form is not None:
        _check(bool(sub.form.gram(list(core.basis)).det()), "core Gram matrix is singular")
        U = perp_within(sub, W0, list(core.basis))
    else:
        U = _free_complement(sub, Y, core.label.h, list(core.tops), W0)
    _check(len(U) + len(core.basis) == len(W0), "core complement has the wrong dimension")
    blocks = sort_blocks(nilpotent_blocks(sub, Y, U))
    residual = normalize_types([b.label for b in blocks])
    cols = list(core.basis) + [v for b in blocks for v in b.basis] + list(W1)
    _check(len(cols) == n and rank_of_vectors(cols) == n, "blocks do not span the space")
    witness = Matrix.from_columns(cols)
    params = core.params
    if t.pair.carrier is not None:
        witness = Bc @ witness
        params = replace(params, witness=tuple(Bc @ params.witness))
    return ClassificationResult(
        core.label,
        residual,
        _unclassified(Y, W1),
        witness,
        params,
        core.sector,
        core.tops,
        core.gram,
        tuple(blocks),
    )


# synthesis ------------------------------------------------------------------------------------

def core_model(label: DistinguishedLabel):
    """(T, M, Y, v0) of the canonical core of a distinguished label."""
    lab = label.validate()
    fam, h = lab.family, lab.h
    info = family_info(fam)
    L = h + 1
    if info.form_kind is None:
        chains = 1 if info.sigma_sign == 1 else 2
        T, M, Y = chain_model(fam, h, None, chains)
        v0 = [ZERO] * (L * chains)
        v0[h] = ONE
        if chains == 2:
            v0[2 * h + 1] = I
        return T, M, Y, tuple(v0)
    r = top_sign(fam, h)
    if info.sigma_sign == -1:
        if r == 1:
            m = Gaussian(lab.cross / 2, lab.modulus.im / 2)
            b = Gaussian(0, -lab.modulus.re / 2)
            G = Matrix([[m, b], [b, m.conjugate()]])
        else:
            b = Gaussian(lab.eps * lab.modulus.re / 2)
            G = Matrix([[0, b], [-b, 0]])
        T, M, Y = chain_model(fam, h, G, 2)
        v0 = [ZERO] * (2 * L)
        v0[h] = ONE
        v0[2 * h + 1] = I
        return T, M, Y, tuple(v0)
    if lab.kind == "single":
        val = lab.eps * lab.modulus.re
        if info.form_kind == "hermitian" and h % 2:
            G = Matrix([[Gaussian(0, val)]])
        else:
            G = Matrix([[val]])
        T, M, Y = chain_model(fam, h, G, 1)
        v0 = [ZERO] * L
        v0[h] = ONE
        return T, M, Y, tuple(v0)
    G = Matrix([[0, 1], [r, 0]])
    T, M, Y = chain_model(fam, h, G, 2)
    v0 = [ZERO] * (2 * L)
    v0[h] = ONE
    return T, M, Y, tuple(v0)


def synthesize_distinguished(label: DistinguishedLabel, residual=()) -> Triple:
    lab = label.validate()
    res = expand_types(residual)
    for r in res:
        r.validate()
        if r.family != lab.family:
            raise InvalidLabel("residual family differs from core family")
    T, M, Y, v0 = core_model(lab)
    parts = [(T, M, Y)] + [type_block_model(r) for r in res]
    space, Ytot = block_sum_space(lab.family, parts)
    v = list(v0) + [ZERO] * (space.dim - len(v0))
    return Triple(Pair(space, Ytot), tuple(v))


# models, conjugation and equivalence --------------------------------------------------------

def model_of(t: Triple, B: Matrix) -> Triple:
    """The triple written in the basis given by the columns of B (whole-space triples)."""
    Binv = inverse(B)
    space = t.space.change_basis(B)
    return Triple(Pair(space, Binv @ t.Y @ B), tuple(Binv @ t.v0))


def _same_model(a: Triple, b: Triple) -> bool:
    return a.space == b.space and a.Y == b.Y and a.v0 == b.v0


def verify_equivalence(a: Triple, b: Triple, P: Matrix) -> Report:
    """P Y P^-1 = Y', P v0 = v0', P sigma P^-1 = sigma', P* tau' = tau."""
    rep = Report(True)
    if P.shape != (b.space.dim, a.space.dim) or not P.det():
        return rep.fail("P is not an invertible map between the spaces")
    if P @ a.Y != b.Y @ P:
        rep.fail("P Y != Y' P")
    if tuple(P @ a.v0) != b.v0:
        rep.fail("P v0 != v0'")
    if a.space.sigma is not None and P @ a.space.sigma.matrix != b.space.sigma.matrix @ P.conj():
        rep.fail("P sigma != sigma' P")
    if a.space.form is not None and b.space.form.pullback(P).matrix != a.space.form.matrix:
        rep.fail("P does not carry tau' back to tau")
    return rep


def is_canonical(t: Triple, res: ClassificationResult | None = None) -> bool:
    """Whether the classification witness maps t onto the synthesized model."""
    if t.pair.carrier is not None:
        return False
    res = res or classify(t)
    if res.unclassified_residual is not None:
        return False
    target = synthesize_distinguished(res.core, res.residual_types)
    return _same_model(model_of(t, res.witness), target)


def _retarget_tops(space, Y, block: Block, target: Matrix):
    """New tops (combinations of the block's tops) whose top Gram equals target, or None."""
    h = block.label.h
    Yh = Y.power(h)
    G = block.gram
    if G == target:
        return list(block.tops)
    s = space.info.sigma_sign
    x = block.tops[0]
    if block.label.kind == "single":
        ratio = target[0, 0] / G[0, 0]
        if not ratio.re or ratio.im or ratio.re < 0:
            return None
        if space.form.hermitian:
            q = norm_preimage(ratio.re, 2)
            c = Gaussian(q[0], q[1]) if q is not None else None
        else:
            q = rational_sqrt(ratio.re)
            c = Gaussian(q) if q is not None else None
        if c is None:
            return None
        return [vscale(c, x)]
    if s == -1:
        if top_sign(space.family, h) == -1:
            ratio = target[0, 1] / G[0, 1]
            if ratio.im or ratio.re <= 0:
                return None
            q = norm_preimage(ratio.re, 4)
            if q is None:
                return None
            Q = _quaternion_matrix(Gaussian(q[0], q[1]), Gaussian(q[2], q[3]))
        else:
            Pb = _quaternion_factor(G)
            Pa = _quaternion_factor(target)
            if Pa is None or Pb is None:
                return None
            Q = inverse(Pb) @ Pa
        sx = space.sigma(x)
        y = vaxpy(vscale(Q[0, 0], x), Q[1, 0], sx)
        tops = [y, space.sigma(y)]
        return tops if top_gram(space, Yh, tops) == target else None
    return None


def _quaternion_matrix(al, be) -> Matrix:
    """Combination y = al x + be sigma(x), sigma(y) = -conj(be) x + conj(al) sigma(x)."""
    return Matrix([[al, -be.conjugate()], [be, al.conjugate()]])


def _quaternion_factor(G: Matrix):
    """Q of quaternion shape with Q^T Q = G = [[m, b], [b, conj m]], b imaginary; None if not rational."""
    m, b = G[0, 0], G[0, 1]
    X, Yv, Z = m.re, m.im, b.im
    N = rational_sqrt(X * X + Yv * Yv + Z * Z)
    if N is None or not N:
        return None
    for half, mode in (((N - X) / 2, 0), ((N + X) / 2, 1)):
        c = rational_sqrt(half) if half > 0 else None
        if c is None:
            continue
        if mode == 0:
            al, be = Gaussian(Z / (2 * c)), Gaussian(Yv / (2 * c), c)
        else:
            al, be = Gaussian(0, -Z / (2 * c)), Gaussian(c, Yv / (2 * c))
        Q = _quaternion_matrix(al, be)
        if Q.T @ Q == G:
            return Q
    return None


def _aligned_basis(tb: Triple, rb: ClassificationResult, ra: ClassificationResult):
    """Basis for b whose blocks carry a's top Grams, or None."""
    space, Y = tb.space, tb.Y
    cols = list(rb.witness.columns())
    ncore = sum(1 for _ in rb.core_tops) * (rb.core.h + 1)
    core_cols = cols[:ncore]
    tail = cols[ncore + sum(len(b.basis) for b in rb.blocks):]
    groups_a, groups_b = {}, {}
    for b in ra.blocks:
        groups_a.setdefault(b.label, []).append(b)
    for b in rb.blocks:
        groups_b.setdefault(b.label, []).append(b)
    new_cols = list(core_cols)
    for lab in sorted(groups_a, key=lambda l: l.sort_key()):
        A = groups_a[lab]
        Bs = groups_b.get(lab, [])
        if len(A) != len(Bs):
            return None
        chosen = None
        orders = permutations(range(len(Bs))) if len(Bs) <= 4 else [tuple(range(len(Bs)))]
        for order in orders:
            out = []
            for ba, j in zip(A, order):
                tops = list(Bs[j].tops)
                if space.form is not None:
                    tops = _retarget_tops(space, Y, Bs[j], ba.gram)
                    if tops is None:
                        break
                out.extend(v for t in tops for v in chain(Y, t, lab.h))
            else:
                chosen = out
                break
        if chosen is None:
            return None
        new_cols.extend(chosen)
    new_cols.extend(tail)
    return Matrix.from_columns(new_cols)


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    witness: Matrix | None
    reason: str = ""

    def __bool__(self):
        return self.equivalent


def triples_equivalent(a: Triple, b: Triple) -> Equivalence:
    if a.family != b.family:
        raise FamilyMismatch(f"{a.family} vs {b.family}")
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} vs {b.dim}")
    ra, rb = classify(a), classify(b)
    if not ra.same_labels(rb):
        if ra.core != rb.core:
            why = "core labels differ"
        elif ra.residual_types != rb.residual_types:
            why = "residual types differ"
        elif ra.sector_key() != rb.sector_key():
            why = "v0 lies in different sigma eigenspaces"
        else:
            why = "invertible parts differ"
        return Equivalence(False, None, why)
    if a.pair.carrier is not None or b.pair.carrier is not None:
        return Equivalence(True, None, "labels agree; witnesses are built for whole-space triples only")
    P = None
    Ba = ra.witness
    ma = model_of(a, Ba)
    if _same_model(ma, model_of(b, rb.witness)):
        P = rb.witness @ inverse(Ba)
    else:
        Bb = _aligned_basis(b, rb, ra)
        if Bb is not None and _same_model(ma, model_of(b, Bb)):
            P = Bb @ inverse(Ba)
    if P is None:
        return Equivalence(True, None, "labels agree; no rational witness found for the residual blocks")
    rep = verify_equivalence(a, b, P)
    _check(rep.ok, "composed witness failed verification: " + "; ".join(rep.failures))
    return Equivalence(True, P, "labels agree")


def conjugate_triple(t: Triple, P: Matrix) -> Triple:
    space = t.space
    if P.shape != (space.dim, space.dim):
        raise DimensionMismatch("matrix shape")
    rep = group_membership(space, P)
    if not rep:
        raise NotInIsotropyGroup("; ".join(rep.failures))
    if tuple(P @ t.v0) != t.v0:
        raise NotInIsotropyGroup("P does not fix v0")
    C = t.pair.carrier
    if C is not None and any(not C.contains(P @ v) for v in C.basis):
        raise NotInIsotropyGroup("P does not preserve the carrier")
    Y = P @ t.Y @ inverse(P)
    return Triple(Pair(space, Y, C), t.v0)


def random_isotropy_element(space: StructuredSpace, v0, seed=0, basis=None, factors: int = 2) -> Matrix:
    """Deterministic (given seed) element of the isotropy group of v0, verified before return."""
    v0 = vec(v0)
    if not is_special_vector(space, v0):
        raise NotSpecial("v0 is not special")
    if basis is None:
        basis = algebra_basis(space, [v0])
    rng = random.Random(seed)
    for _ in range(20):
        P = random_group_element(space, rng, [v0], factors, basis)
        if group_membership(space, P) and tuple(P @ v0) == v0:
            return P
    raise GenerationFailed("could not generate a verified isotropy element")
