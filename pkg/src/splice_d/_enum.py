"""Pure-Python branch and bound over a parity coset.

Minimises z^T G z over integer z with z = parity (mod 2), for G positive
definite.  The norm is written through the fraction-free Gram-Schmidt data as

    W * z^T G z = sum_i wt[i] * (D[i+1] * z[i] + s_i)^2,
    s_i = sum_{j > i} lam[j][i] * z[j],

so every comparison is between Python integers.  Levels are fixed from the
last coordinate down, candidates at a level are visited in zigzag order of
increasing cost (Schnorr-Euchner), and a node is dropped as soon as its
partial sum is not strictly below the incumbent.
"""


def search(D, lam, wt, parity, best, best_z):
    """Return ``(best, best_z, nodes)``; ``best`` is in W-scaled units."""
    r = len(parity)
    best_z = list(best_z)
    z = [0] * r
    base = [0] * r
    off = [0] * r
    step = [0] * r
    s = [0] * r
    partial = [0] * (r + 1)
    nodes = 0

    def enter(i):
        acc = 0
        row_i = i
        for j in range(i + 1, r):
            acc += lam[j][row_i] * z[j]
        s[i] = acc
        c = D[i + 1]
        u = c * parity[i] + acc
        k = (c - u) // (2 * c)
        base[i] = parity[i] + 2 * k
        off[i] = 0
        step[i] = -1 if u + 2 * c * k > 0 else 1
        z[i] = base[i]

    def advance(i):
        o, d = off[i], step[i]
        off[i] = -o if o * d > 0 else -o + d
        z[i] = base[i] + 2 * off[i]

    i = r - 1
    enter(i)
    while True:
        nodes += 1
        t = D[i + 1] * z[i] + s[i]
        val = partial[i + 1] + t * t * wt[i]
        if val < best:
            if i == 0:
                best = val
                best_z = list(z)
                advance(0)
            else:
                partial[i] = val
                i -= 1
                enter(i)
        else:
            i += 1
            if i == r:
                break
            advance(i)
    return best, best_z, nodes
