"""Exact d-invariants of Seifert fibered homology spheres and their splices."""

from .errors import SpliceDError
from .kernels import BACKEND
from .lattice import GramLattice, d_invariant, direct_sum, min_norm_char, wu_mu_bar
from .plumbing import gram_matrix, neg_cont_frac, plumbing_graph
from .seifert import (
    FiberRef,
    SeifertData,
    destabilize,
    is_stabilized,
    normalize,
    pinch_decompose,
    stabilize,
)
from .splice import d_seifert

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FiberRef",
    "GramLattice",
    "SeifertData",
    "SpliceDError",
    "d_invariant",
    "d_seifert",
    "destabilize",
    "direct_sum",
    "gram_matrix",
    "is_stabilized",
    "min_norm_char",
    "neg_cont_frac",
    "normalize",
    "pinch_decompose",
    "plumbing_graph",
    "stabilize",
    "wu_mu_bar",
]
