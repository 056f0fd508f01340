"""Lattice d-invariant of a negative-definite unimodular integral lattice.

d(L) is the maximum of (<x, x> + rank) / 4 over characteristic vectors x.
Writing x = x0 + 2y this is a closest-vector problem in the positive form
-G, solved exactly: the lattice is reduced and split into orthogonal pieces
(see :mod:`splice_d.reduction`) and each piece is searched by branch and
bound over its characteristic coset (see :mod:`splice_d.kernels`).
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import os
from typing import Optional

from . import kernels
from .errors import NonIntegerMuBar, NotNegativeDefinite, ParityViolation, Singular
from .reduction import decompose, integral_gram_schmidt


@dataclass(frozen=True)
class GramLattice:
    """Symmetric integer Gram matrix with vertex labels."""

    matrix: tuple
    labels: Optional[tuple] = None

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("Gram matrix must be square")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "matrix", m)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(n)))

    @property
    def rank(self):
        return len(self.matrix)

    def inner(self, x, y):
        m = self.matrix
        return sum(x[i] * m[i][j] * y[j] for i in range(len(m)) for j in range(len(m)) if m[i][j])

    def norm(self, x):
        return self.inner(x, x)

    def is_characteristic(self, x):
        m = self.matrix
        return all(
            (sum(m[j][k] * x[k] for k in range(len(m))) - m[j][j]) % 2 == 0
            for j in range(len(m))
        )

    def leading_minors(self):
        return leading_minors(self.matrix)

    @property
    def det(self):
        return determinant(self.matrix)

    @property
    def is_negative_definite(self):
        # the k-th leading minor of a negative-definite matrix has sign (-1)^k
        return all((m > 0) if k % 2 == 0 else (m < 0)
                   for k, m in enumerate(self.leading_minors()))

    def transformed(self, U):
        """Gram matrix of the basis given by the rows of ``U``."""
        m = self.matrix
        n = len(m)
        UG = [[sum(U[i][k] * m[k][j] for k in range(n)) for j in range(n)] for i in range(len(U))]
        return GramLattice(tuple(
            tuple(sum(UG[i][k] * U[j][k] for k in range(n)) for j in range(len(U)))
            for i in range(len(U))
        ))


def leading_minors(m):
    """[1, det of the 1x1, 2x2, ... leading blocks], by fraction-free elimination.

    Exact for any integer matrix whose leading minors are all nonzero; a zero
    minor truncates the list right after it.
    """
    n = len(m)
    a = [list(row) for row in m]
    out = [1]
    prev = 1
    for k in range(n):
        piv = a[k][k]
        out.append(piv)
        if piv == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = piv
    return out


def determinant(m):
    """Exact determinant by fraction-free elimination with row pivoting."""
    n = len(m)
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * prev if n else 1


def solve_mod2(matrix, rhs):
    """Unique x in {0,1}^n with matrix.x = rhs (mod 2), or Singular."""
    n = len(matrix)
    rows = []
    for i in range(n):
        bits = 0
        for j in range(n):
            if matrix[i][j] & 1:
                bits |= 1 << j
        rows.append([bits, rhs[i] & 1])
    where = [0] * n
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i][0] >> col & 1), None)
        if piv is None:
            raise Singular("Gram matrix is not invertible mod 2")
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i][0] >> col & 1:
                rows[i][0] ^= rows[r][0]
                rows[i][1] ^= rows[r][1]
        where[col] = r
        r += 1
    return tuple(rows[where[c]][1] for c in range(n))


def characteristic_rep(L: GramLattice):
    """A characteristic vector with 0/1 entries; the coset is this plus 2L."""
    m = L.matrix
    return solve_mod2(m, [m[j][j] for j in range(len(m))])


def _thread_count():
    raw = os.environ.get("SPLICE_D_THREADS")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"SPLICE_D_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise ValueError(f"SPLICE_D_THREADS must be a positive integer, got {raw!r}")
    return n


def _search_component(gram, backend):
    parity = solve_mod2(gram, [gram[i][i] for i in range(len(gram))])
    return parity, kernels.min_coset_norm(gram, parity, backend=backend)


def min_norm_char(L: GramLattice, *, backend=None, stats=None):
    """Characteristic vector of largest square and its square.

    ``stats``, if given a dict, receives enumeration counters.
    """
    n = L.rank
    if n == 0:
        return (), 0
    if not L.is_negative_definite:
        raise NotNegativeDefinite("Gram matrix is not negative definite")
    pos = [[-x for x in row] for row in L.matrix]
    units, comps = decompose(pos)

    chi = [0] * n
    for e in units:
        for k in range(n):
            chi[k] += e[k]
    total = len(units)

    threads = min(_thread_count(), max(1, len(comps)))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: _search_component(c[0], backend), comps))
    else:
        results = [_search_component(g, backend) for g, _ in comps]

    nodes = 0
    used = set()
    for (gram, basis), (parity, res) in zip(comps, results):
        for i, zi in enumerate(res.z):
            if zi:
                row = basis[i]
                for k in range(n):
                    chi[k] += zi * row[k]
        total += res.norm
        nodes += res.nodes
        used.add(res.backend)

    value = L.norm(chi)
    if not L.is_characteristic(chi) or value != -total:
        raise ParityViolation("reassembled vector failed the characteristic check")
    if stats is not None:
        stats.update(
            nodes=nodes,
            unit_summands=len(units),
            components=[len(g) for g, _ in comps],
            backend=",".join(sorted(used)) or "none",
        )
    return tuple(chi), value


def d_from_norm(norm, rank):
    q, r = divmod(norm + rank, 4)
    if r or q % 2:
        raise ParityViolation(f"(<x,x> + rank)/4 = ({norm} + {rank})/4 is not an even integer")
    return q


def d_invariant(L: GramLattice, *, backend=None, stats=None) -> int:
    return d_from_norm(min_norm_char(L, backend=backend, stats=stats)[1], L.rank)


def direct_sum(L1: GramLattice, L2: GramLattice) -> GramLattice:
    n1, n2 = L1.rank, L2.rank
    rows = [tuple(r) + (0,) * n2 for r in L1.matrix]
    rows += [(0,) * n1 + tuple(r) for r in L2.matrix]
    return GramLattice(tuple(rows))


def diagonal(entries) -> GramLattice:
    n = len(entries)
    return GramLattice(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class WuClass:
    coordinates: tuple
    mu_bar: int


def wu_mu_bar(L: GramLattice) -> WuClass:
    """Wu class in the plumbing basis and mu-bar = (signature - w.w) / 8.

    For a negative-definite form the signature is -rank.
    """
    if L.rank == 0:
        return WuClass((), 0)
    w = characteristic_rep(L)
    num = -L.rank - L.norm(w)
    if num % 8:
        raise NonIntegerMuBar(f"(-{L.rank} - {L.norm(w)}) is not divisible by 8")
    return WuClass(w, num // 8)


__all__ = [
    "GramLattice",
    "WuClass",
    "characteristic_rep",
    "d_from_norm",
    "d_invariant",
    "determinant",
    "diagonal",
    "direct_sum",
    "integral_gram_schmidt",
    "leading_minors",
    "min_norm_char",
    "solve_mod2",
    "wu_mu_bar",
]
