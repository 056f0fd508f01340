"""d-invariants of splices and knot-exterior gluings.

Surgery along a singular fiber stays inside the Seifert world:
-1-surgery on the fiber of order a_f in a positive Sigma(a) stabilizes it
(a_f -> a_f + prod of the others) and +1-surgery destabilizes it.  On a
reversed manifold the signs swap, because eps-surgery on -Y is the reverse
of (-eps)-surgery on Y.  Together with d(Y(K; 1/m)) for knots in S^3
through V_0, this is enough to evaluate the sandwich bounds for gluings
along the matrices +-A.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional, Union

from .errors import (
    EqualityFailed,
    InequalityViolated,
    MissingData,
    NegativeOrientation,
    NegativeV,
    NotCoprime,
    NotStabilized,
    WrongOrientation,
)
from .lattice import d_from_norm, min_norm_char, wu_mu_bar
from .plumbing import gram_matrix, plumbing_graph
from .seifert import (
    FiberLike,
    FiberRef,
    SeifertData,
    destabilize,
    is_stabilized,
    resolve_fiber,
    stabilize,
)


@dataclass(frozen=True)
class DInterval:
    """Closed interval of even integers known to contain a d-invariant."""

    lower: int
    upper: int

    def __post_init__(self):
        if self.lower % 2 or self.upper % 2:
            raise ValueError(f"d-invariant bounds must be even, got [{self.lower}, {self.upper}]")
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    @property
    def exact(self):
        return self.lower == self.upper

    @property
    def value(self):
        return self.lower if self.exact else None

    def __contains__(self, d):
        return self.lower <= d <= self.upper


@dataclass(frozen=True, eq=False)
class SeifertFiber:
    """A singular fiber of a Seifert sphere; equal when manifold and fiber order agree."""

    data: SeifertData
    fiber: FiberLike

    def __post_init__(self):
        resolve_fiber(self.data, self.fiber)

    @property
    def order(self):
        return self.data.a[resolve_fiber(self.data, self.fiber)]

    def _key(self):
        return self.data, self.order

    def __eq__(self, other):
        return isinstance(other, SeifertFiber) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


@dataclass(frozen=True, eq=False)
class TorusKnot:
    p: int
    q: int
    mirrored: bool = False

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or gcd(self.p, self.q) != 1:
            raise NotCoprime(f"torus knot needs coprime positive p, q, got ({self.p}, {self.q})")

    def _key(self):
        return min(self.p, self.q), max(self.p, self.q), bool(self.mirrored)

    def __eq__(self, other):
        return isinstance(other, TorusKnot) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


@dataclass(frozen=True)
class AbstractKnot:
    """A knot known only through invariants the user supplies.

    Either ``d_plus``/``d_minus`` (d of the 1/(n+1) and 1/(n-1) surgeries for
    the gluing at hand) or ``v0``/``v0_mirror`` (V_0 of K and of its mirror,
    for a knot in S^3).
    """

    d_plus: Optional[int] = None
    d_minus: Optional[int] = None
    v0: Optional[int] = None
    v0_mirror: Optional[int] = None

    def __post_init__(self):
        for name in ("v0", "v0_mirror"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise NegativeV(f"{name} must be nonnegative, got {v}")
        for name in ("d_plus", "d_minus"):
            v = getattr(self, name)
            if v is not None and v % 2:
                raise ValueError(f"{name} must be even, got {v}")

    @property
    def has_v0(self):
        return self.v0 is not None and self.v0_mirror is not None


KnotSpec = Union[SeifertFiber, TorusKnot, AbstractKnot]


def gluing_matrix(n1: int, n2: int, sign: int = 1):
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    A = ((-sign * n1, sign), (sign * (1 - n1 * n2), sign * n2))
    assert A[0][0] * A[1][1] - A[0][1] * A[1][0] == -1
    return A


@dataclass(frozen=True)
class GluingSpec:
    side1: KnotSpec
    side2: KnotSpec
    n1: int = 0
    n2: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def matrix(self):
        return gluing_matrix(self.n1, self.n2, self.sign)

    @property
    def is_splice(self):
        return self.n1 == 0 and self.n2 == 0


# -- Seifert d-invariants -------------------------------------------------


@dataclass(frozen=True)
class SeifertD:
    d: int
    chi: tuple
    norm: int
    rank: int
    stats: dict


@lru_cache(maxsize=4096)
def _positive_details(canonical: tuple) -> SeifertD:
    data = SeifertData(canonical or (1,))
    if data.is_s3:
        return SeifertD(0, (), 0, 0, {})
    L = gram_matrix(plumbing_graph(data))
    stats = {}
    chi, norm = min_norm_char(L, stats=stats)
    return SeifertD(d_from_norm(norm, L.rank), chi, norm, L.rank, stats)


def seifert_details(data: SeifertData) -> SeifertD:
    """d of the positive representative plus the maximizing vector and counters."""
    return _positive_details(data.canonical())


def d_seifert(data: SeifertData) -> int:
    """d(Y); reversed orientation negates it."""
    return data.orientation * _positive_details(data.canonical()).d


# -- surgery along fibers ---------------------------------------------------


def fiber_surgery(data: SeifertData, f: FiberLike, eps: int, *, extended: bool = False):
    """eps-surgery (eps = +-1) on a singular fiber.

    On the positive orientation -1 stabilizes and +1 destabilizes.  +1 on a
    fiber that is not stabilized raises NotStabilized unless ``extended`` is
    set, in which case a_f - prod(others) < 0 is read as the reversed sphere
    with multiplicity prod(others) - a_f.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    i = resolve_fiber(data, f)
    eff = eps * data.orientation
    if eff == -1:
        return stabilize(data, FiberRef.at(i))
    if is_stabilized(data, FiberRef.at(i)) or not extended:
        return destabilize(data, FiberRef.at(i))
    rest = data.product // data.a[i]
    a = list(data.a)
    a[i] = rest - a[i]
    if a[i] == 0:
        raise NotStabilized("surgery produces a manifold that is not a homology sphere")
    return SeifertData(tuple(a), -data.orientation)


def surgery_one_over(data: SeifertData, f: FiberLike, m: int, *, extended: bool = False):
    """Y(K; 1/m) for K a singular fiber, as |m| successive sign(m)-surgeries."""
    i = resolve_fiber(data, f)
    eps = 1 if m > 0 else -1
    for _ in range(abs(m)):
        data = fiber_surgery(data, FiberRef.at(i), eps, extended=extended)
    return data


def _torus_v0_pair(k: TorusKnot):
    """(V_0(K), V_0(-K))."""
    pos, neg = v0_torus(k.p, k.q, False), v0_torus(k.p, k.q, True)
    return (neg, pos) if k.mirrored else (pos, neg)


def d_one_over_s3(v0_pair, m: int) -> int:
    """d(S^3(K; 1/m)) = -2 eps V_0(eps K) with eps the sign of m; 0 for m = 0."""
    if m == 0:
        return 0
    return -2 * v0_pair[0] if m > 0 else 2 * v0_pair[1]


def d_pm_surgeries(k: KnotSpec, n: int, *, extended: bool = False):
    """(d(Y(K; 1/(n+1))), d(Y(K; 1/(n-1))))."""
    if isinstance(k, SeifertFiber):
        return (
            d_seifert(surgery_one_over(k.data, k.fiber, n + 1, extended=extended)),
            d_seifert(surgery_one_over(k.data, k.fiber, n - 1, extended=extended)),
        )
    if isinstance(k, TorusKnot):
        pair = _torus_v0_pair(k)
        return d_one_over_s3(pair, n + 1), d_one_over_s3(pair, n - 1)
    if isinstance(k, AbstractKnot):
        if k.has_v0:
            pair = (k.v0, k.v0_mirror)
            return d_one_over_s3(pair, n + 1), d_one_over_s3(pair, n - 1)
        if k.d_plus is not None and k.d_minus is not None:
            return k.d_plus, k.d_minus
        raise MissingData("abstract knot needs d_plus and d_minus, or v0 and v0_mirror")
    raise TypeError(f"not a knot: {k!r}")


def theorem11_bounds(g: GluingSpec, *, extended: bool = False) -> DInterval:
    """Sandwich sum_i d(Y_i(K_i; 1/(n_i+1))) <= d <= sum_i d(Y_i(K_i; 1/(n_i-1))).

    The same interval holds for +A and -A.
    """
    p1, m1 = d_pm_surgeries(g.side1, g.n1, extended=extended)
    p2, m2 = d_pm_surgeries(g.side2, g.n2, extended=extended)
    return DInterval(p1 + p2, m1 + m2)


def corollary13_upper(y1: SeifertData, f1: FiberLike, y2: SeifertData, f2: FiberLike) -> int:
    """d(Y1) + d(Y2), an upper bound for d of the splice along the two fibers."""
    for side, y in ((1, y1), (2, y2)):
        if y.orientation != 1:
            raise WrongOrientation(f"side {side} must be positively oriented")
    resolve_fiber(y1, f1)
    resolve_fiber(y2, f2)
    return d_seifert(y1) + d_seifert(y2)


def splice_d_stabilized(y1: SeifertData, f1: FiberLike, y2: SeifertData, f2: FiberLike) -> int:
    """Exact d of the splice along two stabilized fibers: d(Y1) + d(Y2)."""
    for side, (y, f) in enumerate(((y1, f1), (y2, f2)), start=1):
        if not is_stabilized(y, f):
            i = resolve_fiber(y, f)
            raise NotStabilized(
                f"side {side}: fiber of order {y.a[i]} is not stabilized; "
                "splice additivity of d needs stabilized fibers and fails in general "
                "(d(Sigma(3,11,13,20)) = 2 while both pieces have d = 2)",
                side=side,
            )
    return d_seifert(y1) + d_seifert(y2)


# -- knots in S^3 ---------------------------------------------------------


def v0_torus(p: int, q: int, mirrored: bool = False) -> int:
    """V_0 of T(p,q) (or its mirror).

    Uses S^3(T(p,q); -1) = Sigma(p,q,pq+1) and S^3(T(p,q); +1) = -Sigma(p,q,pq-1).
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise NotCoprime(f"torus knot needs coprime positive p, q, got ({p}, {q})")
    if p == 1 or q == 1:
        return 0
    if mirrored:
        d = d_seifert(SeifertData((p, q, p * q + 1)))
        v = d // 2
    else:
        d = d_seifert(SeifertData((p, q, p * q - 1), -1))
        v = -d // 2
    if v < 0:
        raise NegativeV(f"computed V_0 = {v} < 0 for T({p},{q}); surgery identities violated")
    return v


def _sign(x):
    return (x > 0) - (x < 0)


def prop12(v1, v2, n1: int, n2: int) -> DInterval:
    """Bounds for gluing exteriors of two knots in S^3 from (V_0(K), V_0(-K)) pairs.

    A term whose n_i +- 1 vanishes contributes 0.
    """
    for v in (*v1, *v2):
        if v < 0:
            raise NegativeV(f"V_0 values must be nonnegative, got {v}")
    lower = d_one_over_s3(v1, n1 + 1) + d_one_over_s3(v2, n2 + 1)
    upper = d_one_over_s3(v1, n1 - 1) + d_one_over_s3(v2, n2 - 1)
    return DInterval(lower, upper)


def prop12_point(v1, v2, n1: int, n2: int) -> int:
    """-2 e1 V_0(e1 K1) - 2 e2 V_0(e2 K2), e_i the sign of n_i; for |n_i| >= 2."""
    total = 0
    for (vk, vm), n in ((v1, n1), (v2, n2)):
        e = _sign(n)
        total += -2 * e * (vk if e > 0 else vm)
    return total


# -- consistency checks ---------------------------------------------------


def monotonicity_check(z1: SeifertData, z2: SeifertData, eps: int) -> bool:
    """eps d(Z2) <= eps d(Z1) when Z2 is eps-surgery on a knot in Z1."""
    return eps * d_seifert(z2) <= eps * d_seifert(z1)


def casson_euler(d: int, lam: int) -> int:
    """Euler characteristic of HF_red from d and the Casson invariant."""
    if d % 2:
        raise ValueError(f"d must be even, got {d}")
    return d // 2 + lam


def splice_rank_check(dim_y: int, dim_y1: int, dim_y2: int) -> bool:
    """dim HF_red(Y) >= dim HF_red(Y1) + dim HF_red(Y2) on user-supplied ranks."""
    return dim_y >= dim_y1 + dim_y2


@dataclass(frozen=True)
class MuBarReport:
    d: int
    mu_bar: int
    wu: tuple

    @property
    def bound(self):
        return -2 * self.mu_bar

    @property
    def equality(self):
        return self.d == self.bound


def seifert_mu_bar(data: SeifertData):
    if data.orientation != 1:
        raise NegativeOrientation("mu-bar is computed on the positive orientation")
    return wu_mu_bar(gram_matrix(plumbing_graph(data)))


def mu_bar_check(data: SeifertData, expect_equality: bool = False) -> MuBarReport:
    """Check d(Y) >= -2 mu-bar(Y), and equality if asked."""
    w = seifert_mu_bar(data)
    rep = MuBarReport(d_seifert(data), w.mu_bar, w.coordinates)
    if rep.d < rep.bound:
        raise InequalityViolated(f"d = {rep.d} < -2 mu-bar = {rep.bound}")
    if expect_equality and not rep.equality:
        raise EqualityFailed(f"d = {rep.d} but -2 mu-bar = {rep.bound}")
    return rep


# -- reports ----------------------------------------------------------------


def report(interval: DInterval, method: str) -> dict:
    return {
        "d": interval.value,
        "lower": interval.lower,
        "upper": interval.upper,
        "exact": interval.exact,
        "method": method,
    }


def _in_s3_with_v0(k):
    return isinstance(k, TorusKnot) or (isinstance(k, AbstractKnot) and k.has_v0)


def v0_pair(k) -> tuple:
    if isinstance(k, TorusKnot):
        return _torus_v0_pair(k)
    return (k.v0, k.v0_mirror)


def bounds_report(g: GluingSpec, *, extended: bool = False) -> dict:
    """Best available interval for d of the gluing, with the method used."""
    if _in_s3_with_v0(g.side1) and _in_s3_with_v0(g.side2):
        return report(prop12(v0_pair(g.side1), v0_pair(g.side2), g.n1, g.n2), "prop-1.2")
    return report(theorem11_bounds(g, extended=extended), "theorem-1.1")


def splice_report(g: GluingSpec) -> dict:
    if not (g.is_splice and isinstance(g.side1, SeifertFiber) and isinstance(g.side2, SeifertFiber)):
        raise MissingData("stabilized additivity needs a splice of two marked Seifert spheres")
    d = splice_d_stabilized(g.side1.data, g.side1.fiber, g.side2.data, g.side2.fiber)
    return report(DInterval(d, d), "stabilized-additivity")
