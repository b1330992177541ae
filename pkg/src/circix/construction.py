"""Rate-k/d linear index codes from a (k, d) circular colouring of the complement.

Messages have length d. Symbol j of every message in colour class i is summed
into ``X[i][j]``; transmission l sends the sum of ``X[i][(l - i) mod k]`` over the
d colours i in the window {l-d+1, ..., l} (mod k). Colours in one window are
at circular distance < d, so their vertices are pairwise non-adjacent in the
complement, i.e. they all know each other's messages. Symbol (v, j) with v of
colour i appears only in transmission (i + j) mod k.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .gf_linalg import GFMatrix, PrimeField, as_field
from .graph_params import CircularColoring, circular_chromatic_number, circular_clique_number
from .graphs import SideInfoGraph, complement, require_undirected
from .index_codes import LinearIndexCode, is_valid, violations


@dataclass(frozen=True)
class ConstructionPlan:
    coloring: CircularColoring
    color_classes: tuple[tuple[int, ...], ...]
    window_sets: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return self.coloring.k

    @property
    def d(self) -> int:
        return self.coloring.d

    def transmission_of(self, v: int, j: int) -> int:
        """Index of the transmission carrying symbol j of message v."""
        return (self.coloring.assignment[v] + j) % self.k

    def summands(self, l: int) -> list[tuple[int, int]]:
        """(vertex, symbol) pairs summed into transmission l."""
        out = []
        for i in self.window_sets[l]:
            j = (self.k - i + l) % self.k
            out.extend((v, j) for v in self.color_classes[i])
        return sorted(out)


def plan(G: SideInfoGraph, coloring: CircularColoring) -> ConstructionPlan:
    require_undirected(G)
    Gbar = complement(G)
    if not coloring.is_valid_for(Gbar):
        raise ValueError(f"not a valid ({coloring.k},{coloring.d}) circular colouring of the complement")
    k, d = coloring.k, coloring.d
    classes = tuple(
        tuple(v for v in range(G.n) if coloring.assignment[v] == i) for i in range(k)
    )
    windows = tuple(tuple(sorted((l - s) % k for s in range(d))) for l in range(k))
    return ConstructionPlan(coloring, classes, windows)


def build_code(G: SideInfoGraph, coloring: CircularColoring, q: PrimeField | int) -> LinearIndexCode:
    field = as_field(q)
    p = plan(G, coloring)
    t, l = p.d, p.k
    rows = [[0] * (G.n * t) for _ in range(l)]
    for r in range(l):
        for v, j in p.summands(r):
            rows[r][v * t + j] = 1
    code = LinearIndexCode(field, G.n, t, l, GFMatrix.from_rows(field, rows, cols=G.n * t))
    bad = violations(code, G)
    if bad:
        raise AssertionError(f"constructed code fails validity at {bad[:5]}")
    return code


def decode_constructed(
    p: ConstructionPlan,
    T: Sequence[int],
    v: int,
    j: int,
    side: Mapping[int, Sequence[int]],
    q: PrimeField | int,
) -> int:
    """x_{v,j} from its transmission minus the other summands taken from side info."""
    field = as_field(q)
    l = p.transmission_of(v, j)
    value = T[l] % field.q
    for u, jj in p.summands(l):
        if u == v:
            if jj != j:
                raise AssertionError("a message appears twice in one transmission")
            continue
        if u not in side:
            raise ValueError(f"missing side information x_{u} needed for transmission {l}")
        value = (value - side[u][jj]) % field.q
    return value


@dataclass(frozen=True)
class CertifiedCode:
    code: LinearIndexCode
    coloring: CircularColoring
    chi_c: Fraction
    omega_c: Fraction

    @property
    def optimal(self) -> bool:
        """Rate meets the circular-clique lower bound, so it is the broadcast rate."""
        return self.code.rate() == self.omega_c


def certified_code(G: SideInfoGraph, q: PrimeField | int) -> CertifiedCode:
    """Code of rate chi_c(complement) with the omega_c(complement) lower bound attached."""
    Gbar = complement(G)
    chi_c, coloring = circular_chromatic_number(Gbar)
    code = build_code(G, coloring, q)
    assert code.rate() == chi_c and is_valid(code, G)
    return CertifiedCode(code, coloring, chi_c, circular_clique_number(Gbar))
