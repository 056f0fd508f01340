"""Star-shaped negative-definite plumbing of a positive Seifert homology sphere."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadFraction, NegativeOrientation, NotNegativeDefinite, NotUnimodular
from .lattice import GramLattice
from .seifert import SeifertData, normalize


def neg_cont_frac(a: int, b: int) -> list:
    """[k1, ..., km] with a/b = k1 - 1/(k2 - 1/(... - 1/km)) and every ki >= 2."""
    if not (0 < b < a) or gcd(a, b) != 1:
        raise BadFraction(f"need 0 < b < a and gcd(a, b) = 1, got a={a}, b={b}")
    out = []
    p, q = a, b
    while q:
        k = -(-p // q)
        out.append(k)
        p, q = q, k * q - p
    if eval_neg_cont_frac(out) != Fraction(a, b):
        raise BadFraction(f"expansion of {a}/{b} failed to verify")
    return out


def eval_neg_cont_frac(ks) -> Fraction:
    value = Fraction(ks[-1])
    for k in reversed(ks[:-1]):
        value = k - 1 / value
    return value


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple  # (id, framing) pairs
    edges: tuple  # (id, id) pairs
    center: int
    legs: tuple  # vertex ids per leg, starting next to the center

    def framing(self, vid):
        return dict(self.vertices)[vid]

    def to_json(self):
        return {
            "vertices": [{"id": v, "framing": f} for v, f in self.vertices],
            "edges": [list(e) for e in self.edges],
            "center": self.center,
        }


def plumbing_graph(data: SeifertData) -> PlumbingGraph:
    """Center framed -e, one leg of framings -k1..-km per multiplicity > 1.

    Each leg realises -a_j/b_j surgery through the expansion of a_j/b_j and
    is attached to the center at its -k1 end.
    """
    if data.orientation != 1:
        raise NegativeOrientation(
            "plumbing is built for the positive orientation; use d(-Y) = -d(Y)"
        )
    norm = normalize(data)
    vertices = [(0, -norm.e)]
    edges = []
    legs = []
    nxt = 1
    for a, b in zip(data.a, norm.b):
        if a == 1:
            continue
        leg = []
        prev = 0
        for k in neg_cont_frac(a, b):
            vertices.append((nxt, -k))
            edges.append((prev, nxt))
            leg.append(nxt)
            prev = nxt
            nxt += 1
        legs.append(tuple(leg))
    return PlumbingGraph(tuple(vertices), tuple(edges), 0, tuple(legs))


def gram_matrix(g: PlumbingGraph, check: bool = True) -> GramLattice:
    """Intersection form in the vertex basis.

    With ``check`` the form must be negative definite and unimodular.
    """
    ids = [v for v, _ in g.vertices]
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    m = [[0] * n for _ in range(n)]
    for v, f in g.vertices:
        m[pos[v]][pos[v]] = f
    for u, v in g.edges:
        m[pos[u]][pos[v]] = m[pos[v]][pos[u]] = 1
    L = GramLattice(tuple(tuple(row) for row in m), tuple(ids))
    if check:
        if not L.is_negative_definite:
            raise NotNegativeDefinite("plumbing form is not negative definite")
        if abs(L.det) != 1:
            raise NotUnimodular(f"plumbing form has determinant {L.det}")
    return L


def seifert_lattice(data: SeifertData) -> GramLattice:
    return gram_matrix(plumbing_graph(data))
