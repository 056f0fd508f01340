"""Exact basis reduction and orthogonal splitting of positive-definite forms.

Everything here works on integer Gram matrices with Python integers, so the
basis changes are exact and unimodular.  A basis is tracked as rows of
coordinates in the basis the caller started from.
"""

from fractions import Fraction
from math import isqrt


def integral_gram_schmidt(G):
    """Fraction-free Gram-Schmidt data of a positive-definite Gram matrix.

    Returns ``(D, lam)`` with ``D[0] = 1``, ``D[i + 1]`` the leading minor of
    size i + 1 and ``lam[j][i] = D[i + 1] * mu[j][i]`` for j > i, all integers.
    """
    n = len(G)
    D = [1] + [0] * n
    lam = [[0] * n for _ in range(n)]
    for k in range(n):
        for j in range(k + 1):
            u = G[k][j]
            for i in range(j):
                u = (D[i + 1] * u - lam[k][i] * lam[j][i]) // D[i]
            if j < k:
                lam[k][j] = u
            else:
                if u <= 0:
                    raise ValueError("Gram matrix is not positive definite")
                D[k + 1] = u
    return D, lam


def lll(G, delta=Fraction(3, 4)):
    """Integral LLL on a positive-definite Gram matrix.

    Returns ``(R, H)`` where the rows of ``H`` are the reduced basis in old
    coordinates and ``R = H G H^T``.  Uses only exact integer arithmetic.
    """
    n = len(G)
    G = [list(row) for row in G]
    H = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return G, H
    dn, dd = delta.numerator, delta.denominator
    # 1-based bookkeeping: d[0] = 1 and d[i] is the leading minor of size i
    d = [1] + [0] * n
    lam = [[0] * (n + 1) for _ in range(n + 1)]
    d[1] = G[0][0]

    def gram(i, j):
        return G[i - 1][j - 1]

    def redi(k, l):
        if 2 * abs(lam[k][l]) <= d[l]:
            return
        q = (2 * lam[k][l] + d[l]) // (2 * d[l])
        a, b = k - 1, l - 1
        H[a] = [x - q * y for x, y in zip(H[a], H[b])]
        G[a] = [x - q * y for x, y in zip(G[a], G[b])]
        for row in G:
            row[a] -= q * row[b]
        lam[k][l] -= q * d[l]
        for i in range(1, l):
            lam[k][i] -= q * lam[l][i]

    def swapi(k, kmax):
        a, b = k - 1, k - 2
        H[a], H[b] = H[b], H[a]
        G[a], G[b] = G[b], G[a]
        for row in G:
            row[a], row[b] = row[b], row[a]
        for j in range(1, k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        m = lam[k][k - 1]
        B = (d[k - 2] * d[k] + m * m) // d[k - 1]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k] * lam[i][k - 1] - m * t) // d[k - 1]
            lam[i][k - 1] = (B * t + m * lam[i][k]) // d[k]
        d[k - 1] = B

    k, kmax = 2, 1
    while k <= n:
        if k > kmax:
            kmax = k
            for j in range(1, k + 1):
                u = gram(k, j)
                for i in range(1, j):
                    u = (d[i] * u - lam[k][i] * lam[j][i]) // d[i - 1]
                if j < k:
                    lam[k][j] = u
                else:
                    if u <= 0:
                        raise ValueError("Gram matrix is not positive definite")
                    d[k] = u
        redi(k, k - 1)
        if dd * d[k] * d[k - 2] < dn * d[k - 1] ** 2 - dd * lam[k][k - 1] ** 2:
            swapi(k, kmax)
            k = max(2, k - 1)
        else:
            for l in range(k - 2, 0, -1):
                redi(k, l)
            k += 1
    return G, H


def find_norm_one(G):
    """Coordinates of a vector of norm 1, or None if there is none.

    Depth-first Fincke-Pohst search with radius 1 in exact rationals; any
    nonzero vector inside that radius has norm exactly 1.
    """
    n = len(G)
    if n == 0:
        return None
    D, lam = integral_gram_schmidt(G)
    B = [Fraction(D[i + 1], D[i]) for i in range(n)]
    z = [0] * n

    def centre(i):
        return -sum(Fraction(lam[j][i], D[i + 1]) * z[j] for j in range(i + 1, n))

    def visit(i, budget):
        c = centre(i)
        # integers x with (x - c)^2 * B[i] <= budget
        span = budget / B[i]
        lo = c - _ceil_sqrt(span) - 1
        for x in range(int(lo), int(c + _ceil_sqrt(span)) + 2):
            cost = (x - c) ** 2 * B[i]
            if cost > budget:
                continue
            z[i] = x
            if i == 0:
                if any(z):
                    return list(z)
            else:
                found = visit(i - 1, budget - cost)
                if found is not None:
                    return found
        z[i] = 0
        return None

    return visit(n - 1, Fraction(1))


def _ceil_sqrt(q):
    q = Fraction(q)
    if q <= 0:
        return 0
    return isqrt(q.numerator // q.denominator + 1) + 1


def _make_basis_vector(G, H, c):
    """Unimodular basis change making the vector with coefficients ``c`` a basis row.

    Returns its index.  ``c`` must be primitive.
    """
    c = list(c)
    n = len(c)
    while True:
        nz = [i for i in range(n) if c[i]]
        i = min(nz, key=lambda t: abs(c[t]))
        if len(nz) == 1:
            if c[i] == -1:
                H[i] = [-x for x in H[i]]
                G[i] = [-x for x in G[i]]
                for row in G:
                    row[i] = -row[i]
            elif c[i] != 1:
                raise ValueError("vector is not primitive")
            return i
        for j in nz:
            if j == i:
                continue
            q = c[j] // c[i]
            if not q:
                continue
            c[j] -= q * c[i]
            # b_i <- b_i + q b_j keeps the vector fixed
            H[i] = [x + q * y for x, y in zip(H[i], H[j])]
            G[i] = [x + q * y for x, y in zip(G[i], G[j])]
            for row in G:
                row[i] += q * row[j]


def _split_units(G, H, idx):
    """Remove the mutually orthogonal norm-1 rows ``idx``; project the rest."""
    keep = [i for i in range(len(G)) if i not in idx]
    units = [H[i] for i in idx]
    newH = []
    for j in keep:
        row = list(H[j])
        for i in idx:
            c = G[j][i]
            if c:
                row = [x - c * y for x, y in zip(row, H[i])]
        newH.append(row)
    newG = [[G[a][b] - sum(G[a][i] * G[b][i] for i in idx) for b in keep] for a in keep]
    return newG, newH, units


def _components(G):
    n = len(G)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if G[v][w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def decompose(G):
    """Split a positive-definite unimodular form as Z^k plus indecomposable-looking pieces.

    Returns ``(units, components)``: ``units`` are coordinate vectors of an
    orthonormal family spanning the Z^k summand, and each component is a pair
    ``(gram, basis)`` whose basis rows (in the input coordinates) span a
    summand orthogonal to everything else.  The direct sum of all pieces is
    the input lattice.
    """
    n = len(G)
    G = [list(row) for row in G]
    H = [[int(i == j) for j in range(n)] for i in range(n)]
    units = []
    while G:
        R, U = lll(G)
        H = [[sum(U[i][k] * H[k][j] for k in range(len(U))) for j in range(n)]
             for i in range(len(U))]
        G = R
        idx = [i for i in range(len(G)) if G[i][i] == 1]
        if not idx:
            c = find_norm_one(G)
            if c is None:
                break
            idx = [_make_basis_vector(G, H, c)]
        G, H, found = _split_units(G, H, idx)
        units.extend(found)
    comps = []
    for comp in _components(G):
        comps.append(([[G[a][b] for b in comp] for a in comp], [H[a] for a in comp]))
    return units, comps
