"""Seifert fibered homology spheres given by their multiplicities.

``SeifertData((2, 3, 5))`` is the Poincare sphere with the orientation that
bounds a negative-definite plumbing; ``orientation=-1`` reverses it.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Optional, Union

from .errors import BadFiber, BadIndex, NotCoprime, NotStabilized


@dataclass(frozen=True, eq=False)
class SeifertData:
    a: tuple
    orientation: int = 1

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise BadIndex("at least one multiplicity is required")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        for x in a:
            if x < 1:
                raise NotCoprime(f"multiplicities must be positive, got {x}")
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if gcd(a[i], a[j]) != 1:
                    raise NotCoprime(
                        f"multiplicities {a[i]} and {a[j]} share the factor {gcd(a[i], a[j])}"
                    )

    def canonical(self):
        """Multiplicities sorted ascending with the 1's dropped."""
        return tuple(sorted(x for x in self.a if x > 1))

    def __eq__(self, other):
        if not isinstance(other, SeifertData):
            return NotImplemented
        return (self.canonical(), self.orientation) == (other.canonical(), other.orientation)

    def __hash__(self):
        return hash((self.canonical(), self.orientation))

    def __neg__(self):
        return SeifertData(self.a, -self.orientation)

    def reversed(self):
        return -self

    def positive(self):
        """The same multiplicities with positive Seifert orientation."""
        return SeifertData(self.a, 1)

    @property
    def is_s3(self):
        return len(self.canonical()) < 3

    @property
    def product(self):
        return prod(self.a)

    def __str__(self):
        from .parse import format_expression

        return format_expression(self)


@dataclass(frozen=True)
class NormalizedSeifert:
    e: int
    b: tuple


@dataclass(frozen=True)
class FiberRef:
    """A singular fiber, addressed by position or by its order.

    Plain integers passed where a ``FiberRef`` is expected are read as orders,
    matching the ``@13`` marking of the expression grammar.
    """

    order: Optional[int] = None
    index: Optional[int] = None

    def __post_init__(self):
        if (self.order is None) == (self.index is None):
            raise BadFiber("give exactly one of order or index")

    @classmethod
    def at(cls, index):
        return cls(index=index)

    @classmethod
    def of_order(cls, order):
        return cls(order=order)


FiberLike = Union[FiberRef, int]


def resolve_fiber(data: SeifertData, f: FiberLike) -> int:
    """Position of the referenced fiber in ``data.a``."""
    if not isinstance(f, FiberRef):
        f = FiberRef(order=int(f))
    if f.index is not None:
        if not 0 <= f.index < len(data.a):
            raise BadFiber(f"fiber index {f.index} out of range for {len(data.a)} multiplicities")
        return f.index
    if f.order < 2:
        raise BadFiber(f"order {f.order} is not a singular fiber")
    hits = [i for i, x in enumerate(data.a) if x == f.order]
    if len(hits) != 1:
        raise BadFiber(f"no singular fiber of order {f.order} in {tuple(data.a)}")
    return hits[0]


def _others(data, i):
    return prod(x for j, x in enumerate(data.a) if j != i)


def normalize(data: SeifertData) -> NormalizedSeifert:
    """Unique (e, b) with 0 <= b_j < a_j and a_1...a_n (sum b_j/a_j - e) = -1.

    Each b_j is fixed modulo a_j by reducing the equation mod a_j, which gives
    b_j = -(P/a_j)^{-1} mod a_j; e then follows by exact division.
    """
    a = data.a
    P = data.product
    b = tuple(0 if x == 1 else (-pow(P // x, -1, x)) % x for x in a)
    num = sum(bj * (P // x) for bj, x in zip(b, a)) + 1
    e, rem = divmod(num, P)
    assert rem == 0
    assert P * (sum(Fraction(bj, x) for bj, x in zip(b, a)) - e) == -1
    return NormalizedSeifert(e, b)


def stabilize(data: SeifertData, f: FiberLike) -> SeifertData:
    i = resolve_fiber(data, f)
    a = list(data.a)
    a[i] += _others(data, i)
    return SeifertData(tuple(a), data.orientation)


def is_stabilized(data: SeifertData, f: FiberLike) -> bool:
    i = resolve_fiber(data, f)
    return data.a[i] > _others(data, i)


def destabilize(data: SeifertData, f: FiberLike) -> SeifertData:
    i = resolve_fiber(data, f)
    rest = _others(data, i)
    if data.a[i] <= rest:
        raise NotStabilized(
            f"fiber of order {data.a[i]} is not stabilized ({data.a[i]} <= {rest})"
        )
    a = list(data.a)
    a[i] -= rest
    return SeifertData(tuple(a), data.orientation)


def pinch_decompose(data: SeifertData, k: int):
    """Split Sigma(a_1..a_n) as the splice of two Seifert spheres.

    Returns ``(Y1, Y2, f1, f2)`` with Y1 = Sigma(a_1..a_k, a_{k+1}...a_n) marked
    at its last fiber and Y2 = Sigma(a_1...a_k, a_{k+1}..a_n) marked at its
    first fiber.
    """
    a = data.a
    n = len(a)
    if n < 3:
        raise BadIndex("pinching needs at least three multiplicities")
    if not 1 <= k < n:
        raise BadIndex(f"k must satisfy 1 <= k < {n}, got {k}")
    head, tail = a[:k], a[k:]
    y1 = SeifertData(head + (prod(tail),), data.orientation)
    y2 = SeifertData((prod(head),) + tail, data.orientation)
    return y1, y2, FiberRef.at(k), FiberRef.at(0)
