"""Acceptance criteria, one test each, with one PASS/FAIL line per criterion.

Run standalone with ``python tests/test_acceptance.py`` or through pytest.
Caches are cleared before each criterion so runtimes are measured cold.
"""

import random
import sys
import time
from itertools import product
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from splice_d import GramLattice, SeifertData, d_invariant, direct_sum, min_norm_char, wu_mu_bar
from splice_d.errors import NotStabilized
from splice_d.plumbing import seifert_lattice
from splice_d.seifert import destabilize
from splice_d.splice import (
    GluingSpec,
    SeifertFiber,
    _positive_details,
    corollary13_upper,
    d_seifert,
    gluing_matrix,
    mu_bar_check,
    prop12,
    splice_d_stabilized,
    theorem11_bounds,
    v0_torus,
)

from lattice_corpus import plumbing_lattices
from oracles import congruent, is_characteristic, oracle_max_char, quad, random_unimodular

S = SeifertData


def _cold():
    _positive_details.cache_clear()


def _timed(fn):
    _cold()
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def criterion_1():
    worst = 0.0
    for a, want in (((2, 3, 5), 2), ((2, 5, 7), 0)):
        d, dt = _timed(lambda: d_seifert(S(a)))
        assert d == want, f"d{a} = {d}"
        assert dt < 1.0, f"d{a} took {dt:.2f}s"
        worst = max(worst, dt)
    return f"d(2,3,5)=2 d(2,5,7)=0, slowest {worst:.3f}s < 1s"


def criterion_2():
    def body():
        direct = {a: d_invariant(seifert_lattice(S(a))) for a in ((2, 5, 13), (2, 5, 17))}
        via = {
            (2, 5, 13): d_seifert(destabilize(S((2, 5, 13)), 13)),
            (2, 5, 17): d_seifert(destabilize(S((2, 5, 17)), 17)),
        }
        return direct, via

    (direct, via), dt = _timed(body)
    assert direct == {(2, 5, 13): 2, (2, 5, 17): 0}, direct
    assert via == direct, via
    assert direct[(2, 5, 13)] - direct[(2, 5, 17)] == d_seifert(S((2, 3, 5))) - d_seifert(S((2, 5, 7)))
    assert dt < 5.0, f"{dt:.2f}s"
    return f"direct {direct[(2, 5, 13)]},{direct[(2, 5, 17)]} = destabilized, {dt:.3f}s < 5s"


def criterion_3():
    def body():
        y1, y2 = S((2, 5, 13)), S((2, 5, 17), -1)
        exact = splice_d_stabilized(y1, 13, y2, 17)
        iv = theorem11_bounds(GluingSpec(SeifertFiber(y1, 13), SeifertFiber(y2, 17)))
        return exact, iv

    (exact, iv), dt = _timed(body)
    assert exact == 2
    assert (iv.lower, iv.upper) == (2, 2)
    assert dt < 10.0, f"{dt:.2f}s"
    return f"splice d = {exact}, theorem bounds [{iv.lower},{iv.upper}], {dt:.3f}s < 10s"


def criterion_4():
    def body():
        ds = [d_seifert(S(a)) for a in ((3, 11, 13, 20), (33, 13, 20), (3, 11, 260))]
        with pytest.raises(NotStabilized) as info:
            splice_d_stabilized(S((33, 13, 20)), 33, S((3, 11, 260)), 260)
        upper = corollary13_upper(S((33, 13, 20)), 33, S((3, 11, 260)), 260)
        return ds, str(info.value), upper

    (ds, message, upper), dt = _timed(body)
    assert ds == [2, 2, 2], ds
    assert ds[0] != ds[1] + ds[2] and upper == 4
    assert "Sigma(3,11,13,20)" in message
    assert dt < 60.0, f"{dt:.2f}s"
    return f"d = {ds}, non-additive 2 != 2 + 2 reported, {dt:.2f}s < 60s"


def _prop31_family():
    for q in range(2, 8):
        for p in range(1, q):
            if gcd(p, q) == 1:
                for m in range(0, 4):
                    yield p, q, m


def criterion_5():
    def body():
        bad = []
        n = 0
        for p, q, m in _prop31_family():
            n += 1
            lo, hi = S((p, q, p * q * m + 1)), S((p, q, p * q * (m + 1) + 1))
            if d_seifert(lo) != d_seifert(hi):
                bad.append((p, q, m))
        return n, bad

    (n, bad), dt = _timed(body)
    assert not bad, bad
    assert dt < 120.0, f"{dt:.2f}s"
    return f"{n} triples (p,q,m), 0 failures, {dt:.2f}s < 120s"


def criterion_6():
    rng = random.Random(6)
    pool = plumbing_lattices(6)
    sample = rng.sample(pool, 50)
    mismatches = []
    for a, L in sample:
        chi, norm = min_norm_char(L)
        ok = is_characteristic(L.matrix, chi) and quad(L.matrix, chi) == norm
        if not ok or oracle_max_char(L.matrix) != norm:
            mismatches.append(a)
    assert not mismatches, mismatches
    ranks = sorted({L.rank for _, L in sample})
    return f"50 plumbing lattices (ranks {ranks[0]}..{ranks[-1]}), 0 mismatches"


def criterion_7():
    rng = random.Random(7)
    pool = plumbing_lattices(8, max_entry=20)
    seen = []
    for _ in range(200):
        (_, L1), (_, L2) = rng.choice(pool), rng.choice(pool)
        d1, d2, d12 = d_invariant(L1), d_invariant(L2), d_invariant(direct_sum(L1, L2))
        assert d12 == d1 + d2, (L1, L2)
        seen += [d1, d2, d12]
    for _ in range(100):
        n = rng.randint(1, 10)
        U = random_unimodular(n, rng, steps=3 * n)
        M = congruent([[-int(i == j) for j in range(n)] for i in range(n)], U)
        d = d_invariant(GramLattice(M))
        assert d == 0, M
        seen.append(d)
    assert all(isinstance(d, int) and d % 2 == 0 for d in seen)
    return f"200 sums additive, 100 diagonal transforms d=0, {len(seen)} values all even"


def criterion_8():
    count = 0
    for n1, n2, sign in product(range(-10, 11), range(-10, 11), (1, -1)):
        (a, b), (c, d) = gluing_matrix(n1, n2, sign)
        assert a * d - b * c == -1, (n1, n2, sign)
        count += 1
    return f"{count} matrices with det -1"


def _eq4(v1, v2, n1, n2):
    total = 0
    for (v, vm), n in ((v1, n1), (v2, n2)):
        eps = 1 if n > 0 else -1
        total += -2 * eps * (v if eps > 0 else vm)
    return total


def criterion_9():
    rng = random.Random(9)
    checked = 0
    for _ in range(500):
        v1 = (rng.randint(0, 5), rng.randint(0, 5))
        v2 = (rng.randint(0, 5), rng.randint(0, 5))
        n1 = rng.choice([-1, 1]) * rng.randint(2, 20)
        n2 = rng.choice([-1, 1]) * rng.randint(2, 20)
        iv = prop12(v1, v2, n1, n2)
        want = _eq4(v1, v2, n1, n2)
        assert iv.lower == iv.upper == want, (v1, v2, n1, n2)
        checked += 1
    for n1, n2 in product(range(-6, 7), repeat=2):
        iv = prop12((0, 0), (0, 0), n1, n2)
        assert (iv.lower, iv.upper) == (0, 0)
    return f"{checked} point values match, vanishing V0 gives [0,0] on 169 (n1,n2)"


def criterion_10():
    assert v0_torus(2, 3, False) == 1
    assert d_seifert(S((2, 3, 5), -1)) == -2 == -2 * v0_torus(2, 3, False)
    pairs = [(p, q) for q in range(2, 8) for p in range(1, q) if gcd(p, q) == 1]
    nonzero = [(p, q) for p, q in pairs if v0_torus(p, q, True) != 0]
    assert not nonzero, nonzero
    return f"V0(T2,3)=1 = -d(-Sigma(2,3,5))/2, mirrored V0 = 0 on {len(pairs)} pairs"


def _seifert_corpus():
    corpus = {S(a) for a in [
        (2, 3, 5), (2, 5, 7), (2, 3, 1), (2, 5, 13), (2, 5, 17), (2, 3, 11), (2, 5, 23),
        (2, 3, 7), (3, 11, 13, 20), (33, 13, 20), (3, 11, 260), (2, 3, 5, 7), (2, 3, 35),
        (6, 5, 7), (3, 5, 7), (3, 5, 28), (13, 20, 227), (3, 11, 227), (13, 20, 293),
        (3, 11, 293), (2, 15), (3, 4, 5), (2, 7, 15),
    ]}
    for p, q, m in _prop31_family():
        corpus.add(S((p, q, p * q * m + 1)))
        if m:
            corpus.add(S((p, q, p * q * m - 1)))
    for a, _ in plumbing_lattices(8, max_entry=20):
        corpus.add(S(a))
    return sorted(corpus, key=lambda y: y.canonical())


def criterion_11():
    rep = mu_bar_check(S((2, 3, 5)), expect_equality=True)
    assert rep.d == 2 == -2 * rep.mu_bar
    corpus = _seifert_corpus()
    equal = 0
    for y in corpus:
        r = mu_bar_check(y)
        assert r.d >= -2 * r.mu_bar, y
        equal += r.equality
    w = wu_mu_bar(seifert_lattice(S((2, 3, 5))))
    assert w.mu_bar == -1
    return f"d = -2 mu-bar on Sigma(2,3,5); d >= -2 mu-bar on {len(corpus)} manifolds ({equal} equalities)"


CRITERIA = [
    (1, "Sigma(2,3,5) and Sigma(2,5,7)", criterion_1),
    (2, "stabilized pair two ways", criterion_2),
    (3, "Fig. 2 splice", criterion_3),
    (4, "non-additivity example", criterion_4),
    (5, "stabilization invariance family", criterion_5),
    (6, "oracle equivalence", criterion_6),
    (7, "lattice laws", criterion_7),
    (8, "gluing determinants", criterion_8),
    (9, "V0 gluing formula", criterion_9),
    (10, "torus-knot V0", criterion_10),
    (11, "mu-bar consistency", criterion_11),
]


def _run(num, name, fn):
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail, ok = f"{type(exc).__name__}: {exc}", False
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {num:2d} ({name}): {detail}"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(num, name, fn, capsys):
    ok, line = _run(num, name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
