"""Independent brute-force references used to freeze and check expected values.

Nothing here imports the code paths it is used to check.
"""

from fractions import Fraction
from itertools import product
from math import gcd, isqrt, prod
import random

import numpy as np


def brute_normalize(a):
    """Search 0 <= b_j < a_j until a_1..a_n (sum b_j/a_j - e) = -1 has integer e."""
    P = prod(a)
    for b in product(*(range(x) for x in a)):
        e = sum(Fraction(bj, x) for bj, x in zip(b, a)) + Fraction(1, P)
        if e.denominator == 1:
            return int(e), tuple(b)
    raise AssertionError("no solution")


def eval_neg_cf(ks):
    v = Fraction(ks[-1])
    for k in reversed(ks[:-1]):
        v = k - 1 / v
    return v


def e8_negative():
    """Negative E8 Gram matrix written out from the Dynkin diagram.

    Nodes 0-1-2-3-4-5-6 form a chain, node 7 hangs off node 4.
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
    m = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        m[i][j] = m[j][i] = 1
    return m


def is_characteristic(G, x):
    G = np.asarray(G, dtype=np.int64)
    return bool(np.all((G @ np.asarray(x) - np.diag(G)) % 2 == 0))


def quad(G, x):
    x = np.asarray(x, dtype=np.int64)
    return int(x @ np.asarray(G, dtype=np.int64) @ x)


def brute_max_char(G, box=None):
    """Largest <x, x> over characteristic x with entries in [-box, box].

    Default box is 2 * rank.  Parity classes are found by trying all 2^n
    0/1 vectors directly.
    """
    G = np.asarray(G, dtype=np.int64)
    n = len(G)
    box = 2 * n if box is None else box
    classes = [p for p in product((0, 1), repeat=n) if is_characteristic(G, p)]
    assert len(classes) == 1
    p = classes[0]
    axes = [np.arange(-box + ((box + pi) % 2), box + 1, 2) for pi in p]
    best = None
    # chunk over the first coordinate to bound memory
    for x0 in axes[0]:
        grids = np.meshgrid(*axes[1:], indexing="ij") if n > 1 else []
        pts = np.stack([np.full(grids[0].shape if n > 1 else (1,), x0)] + [g for g in grids], -1)
        pts = pts.reshape(-1, n)
        vals = np.einsum("ij,jk,ik->i", pts, G, pts)
        m = int(vals.max())
        best = m if best is None else max(best, m)
    return best


def brute_min_coset(G, parity, bound=None):
    """min z^T G z over z = parity (mod 2), by enumeration in a provable box.

    ``bound`` must be the norm of some vector in the coset (default: the
    parity vector itself).  Any z with norm <= bound has
    |z_i| <= sqrt(bound * (G^{-1})_ii) by Cauchy-Schwarz, so the box holds
    every candidate.
    """
    n = len(G)
    inv = _inverse([[Fraction(x) for x in row] for row in G])
    pv = np.asarray(parity, dtype=np.int64)
    Gi = np.asarray(G, dtype=np.int64)
    if bound is None:
        bound = int(pv @ Gi @ pv)
    radii = [isqrt(int(bound * inv[i][i])) + 1 for i in range(n)]
    axes = [np.arange(-r - 1 + ((r + 1 + p) % 2), r + 2, 2) for r, p in zip(radii, parity)]
    best = None
    # chunk over the first coordinate to bound memory
    rest = np.stack(np.meshgrid(*axes[1:], indexing="ij"), -1).reshape(-1, n - 1) if n > 1 else None
    for x0 in axes[0]:
        if rest is None:
            pts = np.array([[x0]])
        else:
            pts = np.hstack([np.full((len(rest), 1), x0), rest])
        vals = np.einsum("ij,ij->i", pts @ Gi, pts)
        m = int(vals.min())
        best = m if best is None else min(best, m)
    assert best <= bound
    return best


def box_size(G, parity, bound=None):
    """Number of points brute_min_coset would visit."""
    inv = _inverse([[Fraction(x) for x in row] for row in G])
    pv = np.asarray(parity, dtype=np.int64)
    if bound is None:
        bound = int(pv @ np.asarray(G, dtype=np.int64) @ pv)
    return prod(isqrt(int(bound * inv[i][i])) + 2 for i in range(len(G)))


def greedy_coset_norm(G, parity):
    """Norm of a coset vector reached by steepest +-2 coordinate moves from parity."""
    Gi = np.asarray(G, dtype=np.int64)
    z = np.asarray(parity, dtype=np.int64).copy()
    q = int(z @ Gi @ z)
    while True:
        g = Gi @ z
        # q(z + 2 s e_i) - q(z) = 4 s g_i + 4 G_ii
        deltas = [(4 * s * int(g[i]) + 4 * int(Gi[i, i]), i, s) for i in range(len(z)) for s in (1, -1)]
        d, i, s = min(deltas)
        if d >= 0:
            return q
        z[i] += 2 * s
        q += d


def ellipsoid_min_coset(G, parity, bound):
    """min z^T G z over z = parity (mod 2) with z^T G z <= bound, or None.

    Lists every coset point of the fixed ellipsoid in exact rationals,
    last coordinate first, with no basis reduction and no shrinking
    radius: slow but simple.
    """
    n = len(G)
    # q(z) = sum_i B[i] * (z_i + sum_{j>i} mu[i][j] z_j)^2, from G = L D L^T
    a = [[Fraction(x) for x in row] for row in G]
    B = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        B[i] = a[i][i]
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / a[i][i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] -= a[r][i] * a[i][c] / a[i][i]
    best = [None]
    z = [0] * n

    def visit(i, used):
        if i < 0:
            if best[0] is None or used < best[0]:
                best[0] = used
            return
        c = -sum(mu[i][j] * z[j] for j in range(i + 1, n))
        r = isqrt(int((bound - used) / B[i])) + 1
        for x in range(int(c) - r - 1, int(c) + r + 2):
            if (x - parity[i]) % 2:
                continue
            t = used + B[i] * (x - c) ** 2
            if t <= bound:
                z[i] = x
                visit(i - 1, t)

    visit(n - 1, Fraction(0))
    return None if best[0] is None else int(best[0])


def oracle_max_char(M, bound=None):
    """max <x, x> over characteristic x of a negative-definite M.

    The coset is found by trying all 0/1 vectors; the search radius comes
    from a greedy descent unless ``bound`` (the norm of some characteristic
    vector) is given.
    """
    n = len(M)
    parity = next(p for p in product((0, 1), repeat=n) if is_characteristic(M, p))
    neg = [[-x for x in row] for row in M]
    radius = greedy_coset_norm(neg, parity) if bound is None else -bound
    best = ellipsoid_min_coset(neg, parity, radius)
    assert best is not None, "bound is below the coset minimum"
    return -best


def _inverse(M):
    n = len(M)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def random_unimodular(n, rng, steps=None, span=2):
    """Product of random elementary integer matrices (det = +-1)."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            U[i] = [-x for x in U[i]]
            continue
        c = rng.choice([x for x in range(-span, span + 1) if x])
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]
    if n > 1:
        perm = list(range(n))
        rng.shuffle(perm)
        U = [U[k] for k in perm]
    return U


def congruent(G, U):
    """U G U^T for a (possibly rectangular) integer matrix U."""
    n, m = len(G), len(U)
    UG = [[sum(U[i][k] * G[k][j] for k in range(n)) for j in range(n)] for i in range(m)]
    return [[sum(UG[i][k] * U[j][k] for k in range(n)) for j in range(m)] for i in range(m)]


def coprime_tuples(max_entry, length):
    out = []

    def rec(prefix, lo):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for x in range(lo, max_entry + 1):
            if all(gcd(x, y) == 1 for y in prefix):
                rec(prefix + [x], x + 1)

    rec([], 2)
    return out


def semigroup_v0(p, q):
    """V_0 of the positive torus knot T(p,q) from the gaps of the semigroup <p, q>.

    For an L-space knot of genus g, V_0 counts the gaps that are >= g.
    """
    if p == 1 or q == 1:
        return 0
    g = (p - 1) * (q - 1) // 2
    frob = p * q - p - q
    reach = [False] * (frob + 1)
    for a in range(0, frob // p + 1):
        for b in range(0, frob // q + 1):
            if a * p + b * q <= frob:
                reach[a * p + b * q] = True
    gaps = [n for n in range(frob + 1) if not reach[n]]
    assert len(gaps) == g
    return sum(1 for s in gaps if s >= g)


RNG = random.Random


def frac_det(M):
    """Determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in M]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def frac_leading_minors(M):
    """All leading principal minors from one rational elimination without pivoting."""
    a = [[Fraction(x) for x in row] for row in M]
    n = len(a)
    out, acc = [], Fraction(1)
    for c in range(n):
        acc *= a[c][c]
        out.append(int(acc))
        if a[c][c] == 0:
            break
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return out
