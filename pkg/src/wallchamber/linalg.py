"""Dense exact linear algebra on lists of lists over a field from :mod:`fields`.

Matrices are row-major ``list[list]``; a matrix with zero rows still needs
its column count passed explicitly where it matters (``nullspace``).
Subspaces are stored as reduced row echelon bases, which makes them
canonical and hashable once converted to tuples.
"""
from __future__ import annotations


def zeros(r, c, F):
    return [[F.zero] * c for _ in range(r)]


def identity(n, F):
    m = zeros(n, n, F)
    for i in range(n):
        m[i][i] = F.one
    return m


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A, B, F, inner=None):
    """A (r x k) times B (k x c).  ``inner`` only matters when k == 0."""
    if not A:
        return []
    k = len(A[0])
    if k == 0:
        c = len(B[0]) if B else (inner or 0)
        return zeros(len(A), c, F)
    c = len(B[0])
    norm = F.norm
    out = []
    Bt = list(zip(*B)) if c else []
    for row in A:
        nz = [(j, a) for j, a in enumerate(row) if a]
        if not nz:
            out.append([F.zero] * c)
            continue
        out.append([norm(sum(a * col[j] for j, a in nz)) for col in Bt])
    return out


def matvec(A, v, F):
    norm = F.norm
    return [norm(sum(a * b for a, b in zip(row, v))) for row in A]


def is_zero(A):
    return all(not x for row in A for x in row)


def rref(A, F, ncols=None):
    """Return (rows, pivots): the nonzero rows of the RREF and pivot columns."""
    if not A:
        return [], []
    m = [list(r) for r in A]
    n = len(m[0]) if ncols is None else ncols
    norm, inv = F.norm, F.inv
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        iv = inv(m[r][c])
        if iv != 1:
            m[r] = [norm(x * iv) for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                m[i] = [norm(x - f * y) if y else x for x, y in zip(mi, pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(A, F):
    return len(rref(A, F)[1])


def nullspace(A, ncols, F):
    """Basis of {x : A x = 0} as a list of vectors of length ncols."""
    if ncols == 0:
        return []
    rows, piv = rref(A, F, ncols) if A else ([], [])
    pivset = set(piv)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(rows, piv):
            if row[f]:
                v[pc] = F.norm(-row[f])
        basis.append(v)
    return basis


class Subspace:
    """Subspace of F^dim in canonical RREF form."""

    __slots__ = ("dim", "rows", "pivots", "F")

    def __init__(self, vectors, dim, F, _reduced=False):
        self.dim = dim
        self.F = F
        if _reduced:
            self.rows, self.pivots = vectors, [next(i for i, x in enumerate(r) if x) for r in vectors]
        else:
            vecs = [list(v) for v in vectors if any(v)]
            self.rows, self.pivots = rref(vecs, F, dim) if vecs else ([], [])

    @property
    def rank(self):
        return len(self.rows)

    def key(self):
        return tuple(tuple(r) for r in self.rows)

    def reduce(self, v):
        """Remainder of v modulo the subspace (supported off the pivots)."""
        v = list(v)
        norm = self.F.norm
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [norm(x - f * y) if y else x for x, y in zip(v, row)]
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def add(self, vectors):
        return Subspace(self.rows + [list(v) for v in vectors], self.dim, self.F)

    def complement_indices(self):
        ps = set(self.pivots)
        return [i for i in range(self.dim) if i not in ps]

    def complement_basis(self):
        out = []
        for i in self.complement_indices():
            e = [self.F.zero] * self.dim
            e[i] = self.F.one
            out.append(e)
        return out

    def __eq__(self, other):
        return self.dim == other.dim and self.key() == other.key()

    def __hash__(self):
        return hash((self.dim, self.key()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rank={self.rank})"


def column_space(A, nrows, F):
    """Subspace spanned by the columns of A (an nrows x k matrix)."""
    if not A or not A[0]:
        return Subspace([], nrows, F)
    return Subspace(transpose(A), nrows, F)


def coordinates(basis, v, F):
    """Coordinates of v in the (independent) list ``basis``; None if v not in span."""
    k = len(basis)
    if k == 0:
        return [] if not any(v) else None
    n = len(v)
    # augmented system: columns are basis vectors, last column v
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    rows, piv = rref(aug, F, k + 1)
    if piv and piv[-1] == k:
        return None
    x = [F.zero] * k
    for row, p in zip(rows, piv):
        x[p] = row[k]
    return x


def coordinate_matrix(basis, vectors, F):
    """Matrix whose columns are the coordinates of ``vectors`` in ``basis``."""
    cols = []
    for v in vectors:
        c = coordinates(basis, v, F)
        if c is None:
            raise ValueError("vector not in span")
        cols.append(c)
    if not cols:
        return [[] for _ in range(len(basis))]
    return transpose(cols)


def inverse(A, F):
    n = len(A)
    aug = [list(A[i]) + identity(n, F)[i] for i in range(n)]
    rows, piv = rref(aug, F, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows[:n]]


def mat_power(A, k, F):
    n = len(A)
    result = identity(n, F)
    base = A
    while k:
        if k & 1:
            result = matmul(result, base, F)
        base = matmul(base, base, F)
        k >>= 1
    return result


def block_diag(blocks, F):
    r = sum(len(b) for b in blocks)
    c = sum(len(b[0]) if b else 0 for b in blocks)
    m = zeros(r, c, F)
    i0 = j0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                m[i0 + i][j0 + j] = x
        i0 += len(b)
        j0 += len(b[0]) if b else 0
    return m


def enumerate_subspaces(dim, F, k=None):
    """Yield every subspace of F_p^dim (optionally only rank k) as RREF row lists."""
    if not F.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    from itertools import combinations, product

    ranks = range(dim + 1) if k is None else [k]
    for r in ranks:
        for piv in combinations(range(dim), r):
            # free entries: row i, column c > piv[i], c not a pivot
            free = [(i, c) for i in range(r) for c in range(piv[i] + 1, dim) if c not in piv]
            for vals in product(F.elements(), repeat=len(free)):
                rows = [[0] * dim for _ in range(r)]
                for i, p in enumerate(piv):
                    rows[i][p] = 1
                for (i, c), x in zip(free, vals):
                    rows[i][c] = x
                yield rows
