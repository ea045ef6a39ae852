"""Real Lie algebras of the structures and random group elements via Cayley transforms."""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import Matrix, SingularMatrix, inverse, kernel_vectors, vec
from .scalars import I, ONE, ZERO, Gaussian
from .structures import StructuredSpace, group_membership


def _unit(n, j, k, c=ONE):
    rows = [[ZERO] * n for _ in range(n)]
    rows[j][k] = c
    return rows


def _add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _neg(a):
    return [[-x for x in r] for r in a]


def form_algebra_generators(space: StructuredSpace) -> list:
    """Matrices whose real span is the Lie algebra of the form alone (all matrices without a form)."""
    n = space.dim
    f = space.form
    out = []
    if f is None:
        for j in range(n):
            for k in range(n):
                out.append(_unit(n, j, k))
                out.append(_unit(n, j, k, I))
        return [Matrix._from_trusted(m) for m in out]
    S = []
    if f.kind == "hermitian":
        for j in range(n):
            S.append(_unit(n, j, j, I))
            for k in range(j + 1, n):
                S.append(_add(_unit(n, j, k), _neg(_unit(n, k, j))))
                S.append(_add(_unit(n, j, k, I), _unit(n, k, j, I)))
    else:
        sym = f.kind == "alternating"
        for j in range(n):
            if sym:
                S.append(_unit(n, j, j))
                S.append(_unit(n, j, j, I))
            for k in range(j + 1, n):
                other = _unit(n, k, j) if sym else _neg(_unit(n, k, j))
                S.append(_add(_unit(n, j, k), other))
                S.append([[I * x for x in r] for r in _add(_unit(n, j, k), other)])
    Tinv = inverse(f.matrix)
    return [Tinv @ Matrix._from_trusted(s) for s in S]


def _flatten_real(rows) -> list:
    out = []
    for r in rows:
        for x in r:
            out.append(x.re)
            out.append(x.im)
    return out


def algebra_basis(space: StructuredSpace, fixed=()) -> list:
    """A basis over Q of the real Lie algebra, restricted to X killing the `fixed` vectors."""
    gens = form_algebra_generators(space)
    fixed = [vec(v) for v in fixed]
    M = space.sigma.matrix if space.sigma is not None else None
    cols = []
    for X in gens:
        conds = []
        if M is not None:
            conds.extend(_flatten_real((X @ M - M @ X.conj()).rows))
        for v in fixed:
            conds.extend(_flatten_real([X @ v]))
        cols.append(conds)
    if not gens or not cols[0]:
        return gens
    A = Matrix._from_trusted([[Gaussian._raw(Fraction(c[i]), Fraction(0)) for c in cols] for i in range(len(cols[0]))])
    out = []
    for k in kernel_vectors(A):
        X = None
        for c, G in zip(k, gens):
            if c:
                X = G.scale(c) if X is None else X + G.scale(c)
        out.append(X)
    return out


def cayley(X: Matrix) -> Matrix:
    """(I + X)(I - X)^-1; maps the Lie algebra into the group."""
    Id = Matrix.identity(X.nrows)
    top = Id + X
    if not top.det():
        raise SingularMatrix("I + X is singular")
    return top @ inverse(Id - X)


def random_algebra_element(basis, rng: random.Random, terms: int = 3, size: int = 2) -> Matrix | None:
    if not basis:
        return None
    X = None
    for _ in range(terms):
        B = rng.choice(basis)
        c = Fraction(rng.randint(-size, size), rng.randint(1, size))
        if not c:
            continue
        X = B.scale(c) if X is None else X + B.scale(c)
    return X


def random_group_element(space: StructuredSpace, rng: random.Random, fixed=(), factors: int = 2, basis=None) -> Matrix:
    """Product of Cayley transforms of random algebra elements killing `fixed`."""
    if basis is None:
        basis = algebra_basis(space, fixed)
    n = space.dim
    P = Matrix.identity(n)
    for _ in range(factors):
        X = random_algebra_element(basis, rng)
        if X is None:
            continue
        try:
            P = P @ cayley(X)
        except SingularMatrix:
            continue
    return P


def is_group_element(space, P) -> bool:
    return bool(group_membership(space, P))
