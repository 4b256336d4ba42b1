"""Exact Euler-characteristic tables and graph-complex homology for the Hodge splitting of long knots.

Two independent routes to the same numbers:

* generating functions (``genfun``, ``hodge``) with a cycle-index oracle (``cycleindex``);
* explicit graph complexes (``graphs``, ``homology``).
"""

from __future__ import annotations

from .exact import RATIONAL_BACKEND, Rational, ULaurent, USeries, XPoly
from .genfun import Parity, assemble
from .graphs import HalfEdgeGraph, GraphClass, enumerate_graphs, euler_table
from .hodge import EulerTable, homotopy_from_homology, homology_from_homotopy
from .homology import build_complex, homology_dims

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "RATIONAL_BACKEND",
    "XPoly",
    "USeries",
    "ULaurent",
    "Parity",
    "assemble",
    "EulerTable",
    "homotopy_from_homology",
    "homology_from_homotopy",
    "HalfEdgeGraph",
    "GraphClass",
    "enumerate_graphs",
    "euler_table",
    "build_complex",
    "homology_dims",
]
