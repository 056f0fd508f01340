"""Backend selection for the coset search.

The compiled extension is used when it imports; otherwise, or when
``SPLICE_D_BACKEND=python`` is set, the pure-Python search runs.  Both compute
the same exact minimum.  Inputs too large for the extension's fixed-width
arithmetic are retried on the Python backend automatically.
"""

from dataclasses import dataclass
from math import lcm
import os

from . import _enum
from .reduction import integral_gram_schmidt

try:
    from . import _enum_ext
except ImportError:  # pragma: no cover - depends on the build
    _enum_ext = None

_INT64_MAX = 2**63 - 1
_INT128_LIMIT = 2**126


def available_backends():
    return ("cython", "python") if _enum_ext is not None else ("python",)


def default_backend():
    forced = os.environ.get("SPLICE_D_BACKEND")
    if forced:
        if forced not in ("cython", "python"):
            raise ValueError(f"SPLICE_D_BACKEND must be 'cython' or 'python', got {forced!r}")
        if forced == "cython" and _enum_ext is None:
            raise ImportError("the compiled extension is not built")
        return forced
    return available_backends()[0]


BACKEND = default_backend()


@dataclass(frozen=True)
class CosetResult:
    z: tuple
    norm: int
    nodes: int
    backend: str


def prepare(G):
    """Scaled fraction-free data ``(D, lam, wt, W)`` for the search."""
    D, lam = integral_gram_schmidt(G)
    r = len(G)
    W = 1
    for i in range(r):
        W = lcm(W, D[i] * D[i + 1])
    wt = [W // (D[i] * D[i + 1]) for i in range(r)]
    return D, lam, wt, W


def _quad(G, z):
    return sum(z[i] * G[i][j] * z[j] for i in range(len(z)) for j in range(len(z)) if G[i][j])


def min_coset_norm(G, parity, *, backend=None, incumbent=None):
    """Minimum of z^T G z over z = parity (mod 2); G positive definite.

    The starting incumbent is ``parity`` itself unless one is supplied.
    """
    r = len(G)
    if r == 0:
        return CosetResult((), 0, 0, "none")
    backend = backend or BACKEND
    D, lam, wt, W = prepare(G)
    start = list(parity if incumbent is None else incumbent)
    best = _quad(G, start) * W
    used = backend
    if backend == "cython":
        if _enum_ext is None:
            raise ImportError("the compiled extension is not built")
        if best >= _INT128_LIMIT or max(D) > _INT64_MAX or W >= _INT128_LIMIT:
            used = "python"
        else:
            try:
                best_s, z, nodes = _enum_ext.search(D, lam, wt, parity, best, start)
            except OverflowError:
                used = "python"
    if used == "python":
        best_s, z, nodes = _enum.search(D, lam, wt, parity, best, start)
    elif used != "cython":
        raise ValueError(f"unknown backend {backend!r}")
    norm, rem = divmod(best_s, W)
    assert rem == 0 and norm == _quad(G, z)
    return CosetResult(tuple(z), norm, nodes, used)
