"""Exact clique and colouring parameters, ordinary and circular, by exhaustive
search, with perfectness tests built on top.

All searches are exponential and guarded by size limits. Every returned
witness is the lexicographically least one in the documented search order,
so results are reproducible.

chi_c is searched over k <= n only; this is enough because a graph on n
vertices always attains chi_c with some (k, d) where k <= n.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .graphs import SideInfoGraph, circular_clique, complement, induced_subgraph, require_undirected
from .limits import check_limit

MAX_CLIQUE_N = 24
MAX_CHROMATIC_N = 16
MAX_CIRCULAR_N = 12
MAX_CIRCULAR_PERFECT_N = 10
MAX_PERFECT_N = 12


@dataclass(frozen=True)
class CircularColoring:
    k: int
    d: int
    assignment: tuple[int, ...]

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.k, self.d)

    def is_valid_for(self, G: SideInfoGraph) -> bool:
        if len(self.assignment) != G.n or any(not (0 <= c < self.k) for c in self.assignment):
            return False
        f = self.assignment
        return all(self.d <= abs(f[u] - f[v]) <= self.k - self.d for u, v in G.edges())

    def to_json(self) -> dict:
        return {"k": self.k, "d": self.d, "assignment": list(self.assignment)}

    @classmethod
    def from_json(cls, obj: dict) -> "CircularColoring":
        for key in ("k", "d", "assignment"):
            if key not in obj:
                raise ValueError(f"coloring JSON missing field '{key}'")
        return cls(int(obj["k"]), int(obj["d"]), tuple(int(c) for c in obj["assignment"]))


@dataclass(frozen=True)
class ParamReport:
    omega: int
    chi: int
    omega_c: Fraction
    chi_c: Fraction


# --- maximum clique ---------------------------------------------------------

def _color_bound(P: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the vertex set P (bitmask).

    Returns the vertices in colour order together with the colour of each,
    which bounds the clique size reachable from that suffix."""
    order, bounds = [], []
    color = 0
    U = P
    while U:
        color += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            U &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def induced_masks(adj: list[int], vertices: list[int]) -> list[int]:
    """Neighbour bitmasks of the subgraph induced on ``vertices``, renumbered
    0..len(vertices)-1 in the given order."""
    n = len(adj)
    if not vertices:
        return []
    nbytes = (n + 7) // 8
    rows = np.frombuffer(b"".join(adj[v].to_bytes(nbytes, "little") for v in vertices), dtype=np.uint8)
    bits = np.unpackbits(rows.reshape(len(vertices), nbytes), axis=1, bitorder="little")[:, :n]
    sub = np.packbits(bits[:, vertices], axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in sub]


def max_clique(adj: list[int]) -> list[int]:
    """Maximum clique of a graph given as neighbour bitmasks.

    Branch and bound with greedy-colouring upper bounds (MCQ style). Vertices
    are renumbered by descending degree so colouring sees them in that order.
    """
    n = len(adj)
    if n == 0:
        return []
    perm = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    radj = induced_masks(adj, perm)

    # greedy initial clique
    best: list[int] = []
    P = (1 << n) - 1
    while P:
        low = P & -P
        v = low.bit_length() - 1
        best.append(v)
        P &= radj[v]

    root_order, root_bounds = _color_bound((1 << n) - 1, radj)
    if root_bounds[-1] > len(best):
        stack_clique: list[int] = []

        def expand(P: int, order: list[int], bounds: list[int]) -> None:
            nonlocal best
            for idx in range(len(order) - 1, -1, -1):
                if len(stack_clique) + bounds[idx] <= len(best):
                    return
                v = order[idx]
                stack_clique.append(v)
                NP = P & radj[v]
                if NP:
                    o, b = _color_bound(NP, radj)
                    expand(NP, o, b)
                elif len(stack_clique) > len(best):
                    best = list(stack_clique)
                stack_clique.pop()
                P &= ~(1 << v)

        expand((1 << n) - 1, root_order, root_bounds)
    return sorted(perm[v] for v in best)


def clique_number(G: SideInfoGraph) -> int:
    require_undirected(G)
    check_limit("n", G.n, MAX_CLIQUE_N)
    return len(max_clique(G.adj_masks()))


# --- chromatic number -------------------------------------------------------

def k_coloring(G: SideInfoGraph, k: int) -> tuple[int, ...] | None:
    """Lexicographically least proper k-colouring (vertex order 0..n-1)."""
    n = G.n
    adj = [sorted(u for u in G.side_info[v] if u < v) for v in range(n)]
    colors = [-1] * n

    def extend(v: int, used: int) -> bool:
        if v == n:
            return True
        taken = {colors[u] for u in adj[v]}
        # a colour beyond used+1 can always be renamed down, so stop there
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colors[v] = c
            if extend(v + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return tuple(colors) if extend(0, 0) else None


def chromatic_number(G: SideInfoGraph) -> int:
    require_undirected(G)
    check_limit("n", G.n, MAX_CHROMATIC_N)
    return len(set(optimal_coloring(G))) if G.n else 0


def optimal_coloring(G: SideInfoGraph) -> tuple[int, ...]:
    """Lexicographically least colouring with chi(G) colours (iterative deepening from omega)."""
    require_undirected(G)
    check_limit("n", G.n, MAX_CHROMATIC_N)
    if G.n == 0:
        return ()
    k = max(1, clique_number(G))
    while True:
        col = k_coloring(G, k)
        if col is not None:
            return col
        k += 1


# --- circular colourings ----------------------------------------------------

def has_circular_coloring(G: SideInfoGraph, k: int, d: int) -> CircularColoring | None:
    """Lexicographically least (k, d) circular colouring, or None.

    Vertices are coloured in order of descending degree (index breaks ties);
    "least" refers to the colour sequence in that order. The first vertex is
    pinned to colour 0, which loses nothing since colours can be rotated.
    """
    require_undirected(G)
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    n = G.n
    if not G.edges():
        return CircularColoring(k, d, (0,) * n)
    if k < 2 * d:
        return None
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    rank_of = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in G.side_info[v] if rank_of[u] < rank_of[v]] for v in order]
    f = [-1] * n
    lo, hi = d, k - d

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        choices = range(1) if i == 0 else range(k)
        for c in choices:
            if all(lo <= abs(c - f[u]) <= hi for u in earlier[i]):
                f[v] = c
                if extend(i + 1):
                    return True
        f[v] = -1
        return False

    return CircularColoring(k, d, tuple(f)) if extend(0) else None


def _reduced_fractions(k_max: int, lo: Fraction, hi: Fraction, hi_inclusive: bool = True) -> list[Fraction]:
    out = set()
    for k in range(1, k_max + 1):
        for d in range(1, k + 1):
            if gcd(k, d) != 1:
                continue
            r = Fraction(k, d)
            if lo <= r and (r <= hi if hi_inclusive else r < hi):
                out.add(r)
    return sorted(out)


def circular_chromatic_number(G: SideInfoGraph) -> tuple[Fraction, CircularColoring]:
    require_undirected(G)
    check_limit("n", G.n, MAX_CIRCULAR_N)
    if not G.edges():
        return Fraction(1), CircularColoring(1, 1, (0,) * G.n)
    omega, chi = clique_number(G), chromatic_number(G)
    for r in _reduced_fractions(G.n, Fraction(omega), Fraction(chi)):
        col = has_circular_coloring(G, r.numerator, r.denominator)
        if col is not None:
            return r, col
    raise AssertionError("unreachable: a proper chi-colouring is a (chi, 1) circular colouring")


def find_induced_circular_clique(G: SideInfoGraph, k: int, d: int) -> tuple[int, ...] | None:
    """Vertices of G inducing a copy of K_{k/d} (image of 0..k-1), or None.

    The circular clique is vertex-transitive, so the image of 0 is taken to
    be the smallest image; this prunes rotations without losing embeddings.
    """
    if k > G.n:
        return None
    target = circular_clique(k, d).adj_masks()
    gadj = G.adj_masks()
    image: list[int] = []
    used = 0

    def extend(c: int) -> bool:
        nonlocal used
        if c == k:
            return True
        start = image[0] + 1 if c else 0
        for w in range(start, G.n):
            if used >> w & 1:
                continue
            if all((target[c] >> b & 1) == (gadj[w] >> image[b] & 1) for b in range(c)):
                image.append(w)
                used |= 1 << w
                if extend(c + 1):
                    return True
                image.pop()
                used &= ~(1 << w)
        return False

    return tuple(image) if extend(0) else None


def circular_clique_number(G: SideInfoGraph) -> Fraction:
    require_undirected(G)
    check_limit("n", G.n, MAX_CIRCULAR_N)
    if not G.edges():
        return Fraction(1)
    omega = clique_number(G)
    # omega = floor(omega_c), so only [omega, omega + 1) needs searching
    for r in reversed(_reduced_fractions(G.n, Fraction(omega), Fraction(omega + 1), hi_inclusive=False)):
        if find_induced_circular_clique(G, r.numerator, r.denominator) is not None:
            return r
    raise AssertionError("unreachable: K_omega is an induced circular clique")


def params(G: SideInfoGraph) -> ParamReport:
    return ParamReport(
        omega=clique_number(G),
        chi=chromatic_number(G),
        omega_c=circular_clique_number(G),
        chi_c=circular_chromatic_number(G)[0],
    )


# --- perfectness ------------------------------------------------------------

def _ordered_subsets(n: int):
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def circular_perfect_witness(G: SideInfoGraph) -> tuple[int, ...] | None:
    """First vertex subset (by size, then lexicographically) whose induced
    subgraph has omega_c != chi_c; None when G is circular perfect."""
    require_undirected(G)
    check_limit("n", G.n, MAX_CIRCULAR_PERFECT_N)
    for S in _ordered_subsets(G.n):
        H = induced_subgraph(G, S)
        if not H.edges():
            continue
        # omega = chi squeezes omega_c = chi_c
        if clique_number(H) == chromatic_number(H):
            continue
        if circular_clique_number(H) != circular_chromatic_number(H)[0]:
            return S
    return None


def is_circular_perfect(G: SideInfoGraph) -> bool:
    return circular_perfect_witness(G) is None


def _is_cycle(H: SideInfoGraph) -> bool:
    if any(H.degree(v) != 2 for v in range(H.n)):
        return False
    seen, stack = {0}, [0]
    while stack:
        for u in H.side_info[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == H.n


def odd_hole_witness(G: SideInfoGraph) -> tuple[int, ...] | None:
    """Vertex set of an induced odd hole (length >= 5) or odd antihole, if any."""
    require_undirected(G)
    check_limit("n", G.n, MAX_PERFECT_N)
    for size in range(5, G.n + 1, 2):
        for S in itertools.combinations(range(G.n), size):
            H = induced_subgraph(G, S)
            m = len(H.edges())
            if (m == size and _is_cycle(H)) or (m == size * (size - 3) // 2 and _is_cycle(complement(H))):
                return S
    return None


def is_perfect(G: SideInfoGraph) -> bool:
    return odd_hole_witness(G) is None
