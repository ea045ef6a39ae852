"""Dense exact linear algebra over Q(i).

Vectors are tuples of :class:`Gaussian`.  Matrices are immutable row-major
grids.  Elimination always pivots on the first nonzero entry in row order so
every result is reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Gaussian, as_gaussian, format_gaussian

Vector = tuple  # tuple[Gaussian, ...]


class LinalgError(Exception):
    pass


class DimensionMismatch(LinalgError):
    pass


class SingularMatrix(LinalgError):
    pass


class LinearDependence(LinalgError):
    pass


class NotNilpotent(LinalgError):
    pass


class IrrationalSpectrum(LinalgError):
    pass


class NotInvariant(LinalgError):
    pass


# vectors -------------------------------------------------------------------

def vec(entries: Iterable) -> Vector:
    return tuple(as_gaussian(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, k: int) -> Vector:
    return tuple(ONE if i == k else ZERO for i in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    c = as_gaussian(c)
    if not c:
        return (ZERO,) * len(v)
    return tuple(c * a for a in v)


def vconj(v: Vector) -> Vector:
    return tuple(a.conjugate() for a in v)


def vaxpy(u: Vector, c, v: Vector) -> Vector:
    """u + c*v"""
    if not c:
        return u
    return tuple(a + c * b if b else a for a, b in zip(u, v))


def dot(u: Sequence[Gaussian], v: Sequence[Gaussian]) -> Gaussian:
    """Plain bilinear dot product (no conjugation)."""
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def is_zero_vector(v: Vector) -> bool:
    return not any(v)


def lincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int | None = None) -> Vector:
    if n is None:
        n = len(vectors[0]) if vectors else 0
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                out[i] = out[i] + c * x
    return tuple(out)


# matrices ------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix with Gaussian rational entries."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_gaussian(x) for x in r) for r in rows)
        if not data or not data[0]:
            raise DimensionMismatch("matrices must have positive dimensions")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)

    @staticmethod
    def _from_trusted(rows) -> "Matrix":
        m = object.__new__(Matrix)
        data = tuple(tuple(r) for r in rows)
        object.__setattr__(m, "_rows", data)
        object.__setattr__(m, "nrows", len(data))
        object.__setattr__(m, "ncols", len(data[0]) if data else 0)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self._rows,))

    # constructors
    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._from_trusted([unit_vector(n, i) for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls._from_trusted([(ZERO,) * c for _ in range(r)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        cols = [vec(c) for c in cols]
        if not cols:
            raise DimensionMismatch("no columns")
        return cls._from_trusted(list(zip(*cols)))

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        entries = [as_gaussian(x) for x in entries]
        n = len(entries)
        return cls._from_trusted(
            [tuple(entries[i] if i == j else ZERO for j in range(n)) for i in range(n)]
        )

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = []
        c0 = 0
        for b in blocks:
            for r in b._rows:
                rows.append((ZERO,) * c0 + r + (ZERO,) * (m - c0 - b.ncols))
            c0 += b.ncols
        return cls._from_trusted(rows) if rows else cls.zeros(n, m)

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows = []
        for brow in grid:
            h = brow[0].nrows
            for i in range(h):
                r = ()
                for b in brow:
                    if b.nrows != h:
                        raise DimensionMismatch("block row heights differ")
                    r = r + b._rows[i]
                rows.append(r)
        return cls._from_trusted(rows)

    # access
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list:
        return [tuple(c) for c in zip(*self._rows)]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # algebra
    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._from_trusted(
            [tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._from_trusted(
            [tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix._from_trusted([tuple(-a for a in r) for r in self._rows])

    def scale(self, c) -> "Matrix":
        c = as_gaussian(c)
        return Matrix._from_trusted([tuple(c * a for a in r) for r in self._rows])

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return self @ c
        return self.scale(c)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            cols = list(zip(*other._rows))
            out = []
            for r in self._rows:
                nz = [(k, a) for k, a in enumerate(r) if a]
                row = []
                for c in cols:
                    s = ZERO
                    for k, a in nz:
                        b = c[k]
                        if b:
                            s = s + a * b
                    row.append(s)
                out.append(tuple(row))
            return Matrix._from_trusted(out)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(v)}")
        return tuple(dot(r, v) for r in self._rows)

    def apply(self, v: Sequence) -> Vector:
        return self @ v

    @property
    def T(self) -> "Matrix":
        return Matrix._from_trusted(list(zip(*self._rows)))

    def conj(self) -> "Matrix":
        return Matrix._from_trusted([tuple(a.conjugate() for a in r) for r in self._rows])

    @property
    def H(self) -> "Matrix":
        return self.conj().T

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def is_real(self) -> bool:
        return all(not a.im for r in self._rows for a in r)

    def trace(self) -> Gaussian:
        s = ZERO
        for i in range(min(self.nrows, self.ncols)):
            s = s + self._rows[i][i]
        return s

    def power(self, k: int) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    def inverse(self) -> "Matrix":
        return inverse(self)

    def det(self) -> Gaussian:
        return det(self)

    def rank(self) -> int:
        return rank(self)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._from_trusted([tuple(self._rows[i][j] for j in cols) for i in rows])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def to_strings(self) -> list:
        return [[format_gaussian(a) for a in r] for r in self._rows]

    def __repr__(self):
        return f"Matrix({self.to_strings()!r})"


def as_matrix(x) -> Matrix:
    return x if isinstance(x, Matrix) else Matrix(x)


# elimination -----------------------------------------------------------------

def _rref_rows(rows: list, ncols: int, limit: int | None = None):
    """In-place reduced row echelon form of a list of mutable rows.

    Returns the pivot columns.  ``limit`` restricts pivot search to the first
    ``limit`` columns (used for augmented systems).
    """
    if limit is None:
        limit = ncols
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        if r >= nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = pr[c].inverse()
        if inv != ONE:
            for k in range(c, ncols):
                if pr[k]:
                    pr[k] = pr[k] * inv
        nzk = [k for k in range(c, ncols) if pr[k]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                for k in nzk:
                    ri[k] = ri[k] - f * pr[k]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Matrix):
    rows = [list(r) for r in M.rows]
    pivots = _rref_rows(rows, M.ncols)
    return Matrix._from_trusted(rows), tuple(pivots)


def rank(M: Matrix) -> int:
    rows = [list(r) for r in M.rows]
    return len(_rref_rows(rows, M.ncols))


def rank_of_vectors(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    rows = [list(v) for v in vectors]
    return len(_rref_rows(rows, len(rows[0])))


def _kernel_from_rows(rows: list, ncols: int) -> list:
    pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            a = rows[i][f]
            if a:
                v[p] = -a
        basis.append(tuple(v))
    return basis


def kernel_vectors(M: Matrix) -> list:
    return _kernel_from_rows([list(r) for r in M.rows], M.ncols)


def kernel_basis(M: Matrix) -> "Subspace":
    """Basis of {v : Mv = 0}; dimension is cols - rank."""
    return Subspace(M.ncols, kernel_vectors(M), _trusted=True)


def solve(M: Matrix, b: Sequence) -> Vector | None:
    """One solution x of Mx = b (free variables set to zero), or None."""
    b = vec(b)
    if len(b) != M.nrows:
        raise DimensionMismatch("right-hand side length")
    n = M.ncols
    rows = [list(r) + [bi] for r, bi in zip(M.rows, b)]
    pivots = _rref_rows(rows, n + 1, limit=n)
    for i in range(len(pivots), len(rows)):
        if rows[i][n]:
            return None
    x = [ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = rows[i][n]
    return tuple(x)


def solve_many(M: Matrix, B: Matrix) -> Matrix | None:
    """Solve M X = B for X (all columns), or None if inconsistent."""
    n = M.ncols
    k = B.ncols
    rows = [list(r) + list(s) for r, s in zip(M.rows, B.rows)]
    pivots = _rref_rows(rows, n + k, limit=n)
    for i in range(len(pivots), len(rows)):
        if any(rows[i][n:]):
            return None
    X = [[ZERO] * k for _ in range(n)]
    for i, p in enumerate(pivots):
        X[p] = rows[i][n:]
    return Matrix._from_trusted(X)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = M.nrows
    rows = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(M.rows)]
    pivots = _rref_rows(rows, 2 * n, limit=n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    return Matrix._from_trusted([r[n:] for r in rows])


def det(M: Matrix) -> Gaussian:
    if not M.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = [list(r) for r in M.rows]
    n = M.nrows
    d = ONE
    for c in range(n):
        p = None
        for i in range(c, n):
            if rows[i][c]:
                p = i
                break
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        pr = rows[c]
        d = d * pr[c]
        inv = pr[c].inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                ri = rows[i]
                for k in range(c, n):
                    if pr[k]:
                        ri[k] = ri[k] - f * pr[k]
    return d


class Echelon:
    """Incrementally maintained echelon basis, for greedy basis extension."""

    def __init__(self, n: int, vectors: Iterable[Vector] = ()):
        self.n = n
        self._rows = {}  # pivot column -> normalized reduced row
        self.count = 0
        for v in vectors:
            self.add(v)

    def reduce(self, v: Vector) -> list:
        w = list(v)
        for p in sorted(self._rows):
            c = w[p]
            if c:
                r = self._rows[p]
                for k in range(p, self.n):
                    if r[k]:
                        w[k] = w[k] - c * r[k]
        return w

    def contains(self, v: Vector) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Vector) -> bool:
        w = self.reduce(v)
        for p, c in enumerate(w):
            if c:
                inv = c.inverse()
                w = [x * inv if x else x for x in w]
                # keep stored rows reduced at the new pivot
                for q, r in self._rows.items():
                    f = r[p]
                    if f:
                        self._rows[q] = [a - f * b if b else a for a, b in zip(r, w)]
                self._rows[p] = w
                self.count += 1
                return True
        return False


def extend_basis(base: Sequence[Vector], candidates: Iterable[Vector], n: int) -> list:
    """Greedily pick candidates that enlarge span(base); returns the picked ones."""
    ech = Echelon(n, base)
    picked = []
    for c in candidates:
        if ech.add(c):
            picked.append(c)
    return picked


class Subspace:
    """A subspace given by linearly independent column vectors."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Iterable[Sequence], _trusted: bool = False):
        vs = tuple(vec(b) for b in basis)
        if any(len(v) != ambient_dim for v in vs):
            raise DimensionMismatch("basis vector length differs from ambient dimension")
        if not _trusted and rank_of_vectors(vs) != len(vs):
            raise LinearDependence("basis vectors are linearly dependent")
        self.ambient_dim = ambient_dim
        self.basis = vs

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        if not self.basis:
            raise DimensionMismatch("zero subspace has no basis matrix")
        return Matrix.from_columns(self.basis)

    def contains(self, v: Sequence) -> bool:
        return Echelon(self.ambient_dim, self.basis).contains(vec(v))

    def coordinates(self, v: Sequence) -> Vector:
        x = solve(self.matrix(), v)
        if x is None:
            raise ValueError("vector is not in the subspace")
        return x

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def span(vectors: Sequence[Vector], n: int) -> Subspace:
    """Subspace spanned by possibly dependent vectors (first independent ones kept)."""
    return Subspace(n, extend_basis([], vectors, n), _trusted=True)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return Subspace(n, [], _trusted=True)
    # solve A x = B y
    cols = list(a.basis) + [vscale(-1, v) for v in b.basis]
    ker = kernel_vectors(Matrix.from_columns(cols))
    out = [lincomb(k[: a.dim], a.basis, n) for k in ker]
    return span(out, n)


# nilpotent structure ---------------------------------------------------------

def nilpotency_height(N: Matrix) -> int:
    """h with N^h != 0 and N^(h+1) = 0."""
    if not N.is_square():
        raise DimensionMismatch("height of a non-square matrix")
    P = N
    h = 0
    if N.is_zero():
        return 0
    for k in range(1, N.nrows + 1):
        if P.is_zero():
            return h
        h = k
        P = P @ N
    if P.is_zero():
        return h
    raise NotNilpotent("N^dim is not zero")


def generalized_zero_eigenspace(Y: Matrix) -> Subspace:
    """ker Y^dim."""
    return kernel_basis(Y.power(Y.nrows))


def restricted_kernel(A: Matrix, W: Subspace) -> list:
    """Vectors of W killed by A, as ambient vectors (a basis)."""
    if not W.basis:
        return []
    AB = A @ W.matrix()
    return [lincomb(c, W.basis, W.ambient_dim) for c in kernel_vectors(AB)]


def uniform_chain_basis(N: Matrix, W: Subspace | None = None, candidates=None) -> list:
    """Jordan chains [w, Nw, ..., N^k w] of N on the invariant subspace W.

    Chains come out longest first.  Tops are taken from ``candidates`` (by
    default the kernel bases) greedily in order, so the result is
    reproducible.  ``candidates`` may be a callable mapping a list of spanning
    vectors of a layer to the list of vectors to try, which lets callers
    impose extra structure (real vectors, conjugate pairs).
    """
    n = N.nrows
    if W is None:
        W = Subspace(n, [unit_vector(n, i) for i in range(n)], _trusted=True)
    if not W.basis:
        return []
    for v in W.basis:
        if not W.contains(N @ v):
            raise NotInvariant("N does not leave W invariant")
    kers = [[]]
    P = N
    h = 0
    while True:
        k = restricted_kernel(P, W)
        kers.append(k)
        if len(k) == W.dim:
            break
        h += 1
        if h > n:
            raise NotNilpotent("N is not nilpotent on W")
        P = P @ N
    # kers[j] = ker N^j on W, j = 0..top
    top = len(kers) - 1
    chains = []
    image_tops = []  # N applied to chain vectors from higher layers
    for j in range(top, 0, -1):
        base = list(kers[j - 1]) + image_tops
        layer = kers[j]
        cands = candidates(layer) if callable(candidates) else layer
        tops = extend_basis(base, cands, n)
        for w in tops:
            chain = [w]
            for _ in range(j - 1):
                chain.append(N @ chain[-1])
            chains.append(chain)
        # vectors that must be excluded from the next layer's complement
        image_tops = [N @ v for v in image_tops] + [N @ w for w in tops]
        image_tops = [v for v in image_tops if any(v)]
    chains.sort(key=lambda c: -len(c))
    return chains


# congruence diagonalization -------------------------------------------------

def congruence_diagonal(G: Matrix, hermitian: bool = False) -> list:
    """Diagonal entries of a congruence-diagonal form of a symmetric (or hermitian) G.

    For symmetric G this is a real symmetric reduction P^T G P; for hermitian G
    it is P^H G P.  Entries of a hermitian reduction are real.
    """
    n = G.nrows
    A = [list(r) for r in G.rows]
    out = []
    k = 0
    while k < n:
        if not A[k][k]:
            p = next((i for i in range(k + 1, n) if A[i][i]), None)
            if p is not None:
                _swap_sym(A, k, p)
            else:
                q = next((j for j in range(k + 1, n) if A[k][j]), None)
                if q is None:
                    out.append(ZERO)
                    k += 1
                    continue
                c = ONE
                if hermitian and not (A[k][q] + A[q][k]):
                    c = Gaussian(0, 1)
                _add_sym(A, k, q, c, hermitian)
        d = A[k][k]
        out.append(d)
        for j in range(k + 1, n):
            f = A[k][j]
            if f:
                t = f / d
                # column/row operation x_j <- x_j - t x_k
                _add_sym(A, j, k, -t, hermitian)
        k += 1
    return out


def _swap_sym(A, i, j):
    A[i], A[j] = A[j], A[i]
    for r in A:
        r[i], r[j] = r[j], r[i]


def _add_sym(A, i, j, c, hermitian):
    """Replace basis vector x_i by x_i + c x_j and update the Gram matrix A."""
    n = len(A)
    cb = c.conjugate() if hermitian else c
    # column i += c * column j
    for r in range(n):
        if A[r][j]:
            A[r][i] = A[r][i] + c * A[r][j]
    # row i += conj(c) * row j
    for s in range(n):
        if A[j][s]:
            A[i][s] = A[i][s] + cb * A[j][s]


def congruence_index(G: Matrix, hermitian: bool = False) -> int:
    """Number of negative entries after congruence diagonalization."""
    count = 0
    for d in congruence_diagonal(G, hermitian):
        if d.im:
            raise ValueError("form is not real on the diagonal")
        if d.re < 0:
            count += 1
    return count


# characteristic polynomial and Jordan decomposition ------------------------

def charpoly(M: Matrix) -> list:
    """Coefficients c_0..c_n (c_n = 1) of det(x I - M), via Faddeev-LeVerrier."""
    n = M.nrows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = Matrix.zeros(n, n)
    Id = Matrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ (Mk + Id.scale(coeffs[n - k + 1]))
        coeffs[n - k] = -(Mk.trace() / k)
    return coeffs


def _poly_eval(coeffs, x):
    s = ZERO
    for c in reversed(coeffs):
        s = s * x + c
    return s


def _poly_deflate(coeffs, r):
    """Divide by (x - r); returns the quotient coefficients."""
    n = len(coeffs) - 1
    q = [ZERO] * n
    acc = ZERO
    for k in range(n, 0, -1):
        acc = acc * r + coeffs[k]
        q[k - 1] = acc
    return q


def _gaussian_integer_divisors(z):
    """All Gaussian integers dividing the Gaussian integer z (z != 0)."""
    a, b = int(z.re), int(z.im)
    nz = a * a + b * b
    out = []
    # candidate norms are divisors of N(z)
    divs = set()
    d = 1
    while d * d <= nz:
        if nz % d == 0:
            divs.add(d)
            divs.add(nz // d)
        d += 1
    for m in sorted(divs):
        x = 0
        while x * x <= m:
            y2 = m - x * x
            y = _isqrt(y2)
            if y * y == y2:
                for sx in {x, -x}:
                    for sy in {y, -y}:
                        g = Gaussian(sx, sy)
                        q = z / g
                        if q.re.denominator == 1 and q.im.denominator == 1:
                            out.append(g)
            x += 1
    return out


def _isqrt(n):
    import math
    return math.isqrt(n)


_DIVISOR_LIMIT = 10**8


def _poly_trim(c):
    c = list(c)
    while len(c) > 1 and not c[-1]:
        c.pop()
    return c


def _poly_monic(c):
    c = _poly_trim(c)
    lead = c[-1]
    return [x / lead for x in c]


def _poly_mod(a, b):
    a = _poly_trim(a)
    b = _poly_trim(b)
    while len(a) >= len(b) and any(a):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for k, c in enumerate(b):
            a[k + shift] = a[k + shift] - f * c
        a.pop()
        a = _poly_trim(a)
    return a


def _poly_div(a, b):
    a = list(a)
    b = _poly_trim(b)
    q = [ZERO] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        f = a[shift + len(b) - 1] / b[-1]
        q[shift] = f
        for k, c in enumerate(b):
            a[k + shift] = a[k + shift] - f * c
    return q


def _poly_gcd(a, b):
    a, b = _poly_trim(a), _poly_trim(b)
    while any(b):
        a, b = b, _poly_mod(a, b)
    return _poly_monic(a)


def _squarefree(coeffs):
    d = [coeffs[k] * k for k in range(1, len(coeffs))]
    g = _poly_gcd(coeffs, d)
    return _poly_monic(_poly_div(coeffs, g)) if len(g) > 1 else _poly_monic(coeffs)


def _approx_roots(coeffs, iterations: int = 2000):
    """Durand-Kerner approximations of the roots of a monic polynomial with simple roots."""
    c = [complex(float(x.re), float(x.im)) for x in coeffs]
    n = len(c) - 1
    bound = 1 + max(abs(x) for x in c[:-1])
    z = [bound * complex(0.4, 0.9) ** k for k in range(n)]

    def ev(x):
        s = 0j
        for a in reversed(c):
            s = s * x + a
        return s

    for _ in range(iterations):
        moved = 0.0
        for k in range(n):
            den = 1 + 0j
            for j in range(n):
                if j != k:
                    den *= z[k] - z[j]
            if den == 0:
                den = 1e-12
            step = ev(z[k]) / den
            z[k] -= step
            moved = max(moved, abs(step))
        if moved < 1e-14 * bound:
            break
    return z


def _candidates_from_float(z, D):
    for rnd in (round, math.floor, math.ceil):
        re = Fraction(rnd(z.real * D), D)
        im = Fraction(rnd(z.imag * D), D)
        yield Gaussian(re, im)


def _simple_roots(sq):
    """Roots in Q(i) of a monic squarefree polynomial."""
    n = len(sq) - 1
    D = 1
    for c in sq:
        for part in (c.re, c.im):
            D = D * part.denominator // math.gcd(D, part.denominator)
    const = sq[0] * Fraction(D) ** n
    if const.re.numerator ** 2 + const.im.numerator ** 2 <= _DIVISOR_LIMIT:
        return [g / D for g in _gaussian_integer_divisors(const) if not _poly_eval(sq, g / D)]
    try:
        approx = _approx_roots(sq)
    except OverflowError:
        return []
    out = []
    for z in approx:
        for r in _candidates_from_float(z, D):
            if r not in out and not _poly_eval(sq, r):
                out.append(r)
                break
    return out


def gaussian_roots(coeffs) -> list:
    """Roots in Q(i), with multiplicity, of a monic polynomial over Q(i).

    Returns (roots, remaining_degree); remaining_degree > 0 means the rest of
    the polynomial has no roots in Q(i).  Every reported root is checked exactly;
    for large coefficients candidates come from a floating point root finder.
    """
    coeffs = list(coeffs)
    roots = []
    while len(coeffs) > 1 and not coeffs[0]:
        roots.append(ZERO)
        coeffs = coeffs[1:]
    if len(coeffs) == 1:
        return roots, 0
    for r in _simple_roots(_squarefree(coeffs)):
        while len(coeffs) > 1 and not _poly_eval(coeffs, r):
            roots.append(r)
            coeffs = _poly_deflate(coeffs, r)
    return roots, len(coeffs) - 1


def _gcd(a, b):
    import math
    return math.gcd(a, b)


def eigen_data(Y: Matrix):
    """Distinct eigenvalues in Q(i) with algebraic multiplicities.

    Raises IrrationalSpectrum when the characteristic polynomial does not split.
    """
    roots, rest = gaussian_roots(charpoly(Y))
    if rest:
        raise IrrationalSpectrum("characteristic polynomial does not split over Q(i)")
    mult = {}
    order = []
    for r in roots:
        if r not in mult:
            order.append(r)
            mult[r] = 0
        mult[r] += 1
    return [(r, mult[r]) for r in order]


def jordan_decomposition(Y: Matrix):
    """Additive decomposition Y = S + N with S semisimple, N nilpotent, SN = NS."""
    n = Y.nrows
    if Y.power(n).is_zero():
        return Matrix.zeros(n, n), Y
    data = eigen_data(Y)
    cols = []
    diag = []
    Id = Matrix.identity(n)
    for lam, m in data:
        ker = kernel_vectors((Y - Id.scale(lam)).power(m))
        cols.extend(ker)
        diag.extend([lam] * len(ker))
    B = Matrix.from_columns(cols)
    S = B @ Matrix.diag(diag) @ inverse(B)
    return S, Y - S


def jordan_blocks(Y: Matrix):
    """Eigenvalue -> list of Jordan block sizes (largest first), over Q(i)."""
    n = Y.nrows
    Id = Matrix.identity(n)
    out = []
    for lam, m in eigen_data(Y):
        A = Y - Id.scale(lam)
        dims = [0]
        P = Id
        for k in range(1, m + 1):
            P = P @ A
            dims.append(n - rank(P))
        # number of blocks of size >= k is dims[k] - dims[k-1]
        ge = [dims[k] - dims[k - 1] for k in range(1, m + 1)] + [0]
        sizes = []
        for k in range(m, 0, -1):
            cnt = ge[k - 1] - ge[k]
            sizes.extend([k] * cnt)
        out.append((lam, sizes))
    return out
