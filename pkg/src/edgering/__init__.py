"""Normality of edge rings of signed and mixed signed, directed graphs."""
from .augment import AugmentedGraph, augment
from .cycles import CycleDesc, enumerate_odd_cycles, disjoint_odd_pairs
from .kernels import BACKEND
from .model import (
    DirectedEdge,
    EdgeRef,
    MixedGraph,
    SignedEdge,
    format_monomial,
    load_graph,
    parse_graph,
    parse_monomials,
    rho,
)
from .normality import NormalityReport, decide, non_normality_witness, normalization_generators

__version__ = "0.1.0"

__all__ = [
    "AugmentedGraph",
    "BACKEND",
    "CycleDesc",
    "DirectedEdge",
    "EdgeRef",
    "MixedGraph",
    "NormalityReport",
    "SignedEdge",
    "augment",
    "decide",
    "disjoint_odd_pairs",
    "enumerate_odd_cycles",
    "format_monomial",
    "load_graph",
    "non_normality_witness",
    "normalization_generators",
    "parse_graph",
    "parse_monomials",
    "rho",
]
