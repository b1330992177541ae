"""Optimal linear index codes for side-information graphs with circular
perfect complements, plus Nordhaus-Gaddum checks on complementary pairs."""

from .gf_linalg import GFMatrix, PrimeField, in_span, kron, rank
from .graphs import Rational, SideInfoGraph, complement, induced_subgraph
from .graph_params import CircularColoring, ParamReport
from .index_codes import LinearIndexCode, decode, encode, is_valid
from .construction import build_code, certified_code

__all__ = [
    "GFMatrix", "PrimeField", "in_span", "kron", "rank",
    "Rational", "SideInfoGraph", "complement", "induced_subgraph",
    "CircularColoring", "ParamReport",
    "LinearIndexCode", "decode", "encode", "is_valid",
    "build_code", "certified_code",
]
