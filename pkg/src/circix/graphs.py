"""Side-information graphs, their complements, and generators for the graph families.

Vertices are always 0..n-1. ``side_info[i]`` is the set of messages receiver i
already holds; a directed edge j -> i exists iff j in side_info[i]. A graph is
undirected when the side information is symmetric, and then ``side_info[i]``
is just the neighbourhood of i.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .limits import check_limit

Rational = Fraction

MAX_ISO_N = 12
MAX_N = 64


def format_rational(r: Fraction) -> str:
    """Always ``num/den``, including integers ("3/1")."""
    return f"{r.numerator}/{r.denominator}"


def parse_rational(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass(frozen=True)
class SideInfoGraph:
    n: int
    side_info: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        if len(self.side_info) != self.n:
            raise ValueError(f"expected {self.n} side-information sets, got {len(self.side_info)}")
        for i, s in enumerate(self.side_info):
            if i in s:
                raise ValueError(f"receiver {i} lists its own message as side information")
            if any(not (0 <= j < self.n) for j in s):
                raise ValueError(f"side information of {i} references a vertex outside 0..{self.n - 1}")

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]]) -> "SideInfoGraph":
        return cls(len(sets), tuple(frozenset(s) for s in sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SideInfoGraph":
        sets = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop")
            sets[u].add(v)
            sets[v].add(u)
        return cls.from_sets(sets)

    def is_undirected(self) -> bool:
        return all(i in self.side_info[j] for i in range(self.n) for j in self.side_info[i])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.side_info[u]

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges (u < v), lexicographic."""
        return [(u, v) for u in range(self.n) for v in sorted(self.side_info[u]) if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        """Directed arcs (j, i) meaning receiver i knows message j."""
        return [(j, i) for i in range(self.n) for j in sorted(self.side_info[i])]

    def degree(self, v: int) -> int:
        return len(self.side_info[v])

    def adj_masks(self) -> list[int]:
        return [sum(1 << j for j in s) for s in self.side_info]

    def to_json(self) -> dict:
        return {"n": self.n, "side_info": [sorted(s) for s in self.side_info]}

    @classmethod
    def from_json(cls, obj: dict) -> "SideInfoGraph":
        for key in ("n", "side_info"):
            if key not in obj:
                raise ValueError(f"graph JSON missing field '{key}'")
        g = cls.from_sets([[int(j) for j in s] for s in obj["side_info"]])
        if g.n != int(obj["n"]):
            raise ValueError("graph JSON field 'n' disagrees with length of 'side_info'")
        return g

    def to_dot(self, name: str = "G") -> str:
        if not self.is_undirected():
            raise ValueError("DOT export is for undirected graphs")
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def require_undirected(G: SideInfoGraph) -> None:
    if not G.is_undirected():
        raise ValueError("operation requires an undirected side-information graph")


def complement(G: SideInfoGraph) -> SideInfoGraph:
    """Side-information complement: each receiver's new side information is
    exactly what it was missing. Agrees with the usual complement on
    undirected graphs."""
    everyone = frozenset(range(G.n))
    return SideInfoGraph(G.n, tuple(everyone - s - {i} for i, s in enumerate(G.side_info)))


def induced_subgraph(G: SideInfoGraph, S: Iterable[int]) -> SideInfoGraph:
    S = sorted(set(S))
    if not S:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if S[0] < 0 or S[-1] >= G.n:
        raise ValueError("vertex set not contained in the graph")
    pos = {v: k for k, v in enumerate(S)}
    return SideInfoGraph.from_sets([[pos[j] for j in G.side_info[v] if j in pos] for v in S])


def is_isomorphic(G: SideInfoGraph, H: SideInfoGraph) -> bool:
    """Backtracking isomorphism test for small undirected graphs."""
    require_undirected(G)
    require_undirected(H)
    check_limit("n", max(G.n, H.n), MAX_ISO_N)
    if G.n != H.n or len(G.edges()) != len(H.edges()):
        return False
    dg = [G.degree(v) for v in range(G.n)]
    dh = [H.degree(v) for v in range(H.n)]
    if sorted(dg) != sorted(dh):
        return False
    ga, ha = G.adj_masks(), H.adj_masks()
    # most constrained first: high degree, then index
    order = sorted(range(G.n), key=lambda v: (-dg[v], v))
    image = [-1] * G.n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == G.n:
            return True
        v = order[k]
        for w in range(H.n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            ok = True
            for u in order[:k]:
                if (ga[v] >> u & 1) != (ha[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)


# --- generators -------------------------------------------------------------

def complete(n: int) -> SideInfoGraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return SideInfoGraph.from_sets([[j for j in range(n) if j != i] for i in range(n)])


def edgeless(n: int) -> SideInfoGraph:
    if n < 1:
        raise ValueError("edgeless graph needs n >= 1")
    return SideInfoGraph.from_sets([[] for _ in range(n)])


def cycle(n: int) -> SideInfoGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return SideInfoGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> SideInfoGraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return SideInfoGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def circular_clique(k: int, d: int) -> SideInfoGraph:
    """K_{k/d}: u ~ v iff d <= |u - v| <= k - d. (k, d) need not be reduced."""
    if d < 1 or k < 2 * d:
        raise ValueError(f"circular clique needs k >= 2d >= 2, got k={k}, d={d}")
    return SideInfoGraph.from_edges(
        k, [(u, v) for u in range(k) for v in range(u + 1, k) if d <= v - u <= k - d]
    )


def web(p: int, q: int) -> SideInfoGraph:
    """Complement of the circular clique K_{p/q}."""
    if q < 1 or p < 2 * q:
        raise ValueError(f"web needs p/q >= 2, got p={p}, q={q}")
    return complement(circular_clique(p, q))


def join_at_vertex(G: SideInfoGraph, H: SideInfoGraph) -> SideInfoGraph:
    """Disjoint union of G and H with G's last vertex identified with H's first.

    ``join_at_vertex(complete(n), edgeless(n))`` is the (2n-1)-vertex graph
    made of K_n and n-1 further isolated vertices sharing one vertex with it.
    """
    require_undirected(G)
    require_undirected(H)
    shift = G.n - 1
    edges = G.edges() + [(u + shift, v + shift) for u, v in H.edges()]
    return SideInfoGraph.from_edges(G.n + H.n - 1, edges)


def _circular_distance(i: int, j: int, n: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def symmetric_neighbouring_side_info(n: int, d: int) -> SideInfoGraph:
    """Receiver i knows the d-1 messages on each side of it (cyclically)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return SideInfoGraph.from_sets(
        [[j for j in range(n) if j != i and _circular_distance(i, j, n) <= d - 1] for i in range(n)]
    )


def symmetric_neighbouring_interference(n: int, D: int) -> SideInfoGraph:
    """Receiver i knows everything except the D messages on each side of it."""
    if D < 0 or n < 2 * (D + 1):
        raise ValueError(f"need n >= 2(D+1), got n={n}, D={D}")
    return SideInfoGraph.from_sets(
        [[j for j in range(n) if j != i and _circular_distance(i, j, n) > D] for i in range(n)]
    )


def _interlace(v: Sequence[int], w: Sequence[int], n: int) -> bool:
    """Remove v's points from the circle; w interlaces v when its points
    (none of which may coincide with v's) land in pairwise different arcs."""
    if set(v) & set(w):
        return False
    vs = sorted(v)
    arcs = []
    for p in w:
        # arc index = number of v-points strictly below p, wrapping the last arc onto the first
        a = sum(1 for x in vs if x < p) % len(vs)
        arcs.append(a)
    return len(set(arcs)) == len(arcs)


def interlacing_graph(n: int, k: int, r: int) -> SideInfoGraph:
    """Vertices: k-subsets of the circle points 0..n-1 whose points are pairwise
    at cyclic distance >= r, in lexicographic order. Edges join interlacing
    subsets."""
    if k < 1 or r < 1 or n < k * r:
        raise ValueError(f"interlacing graph needs n >= k*r with k, r >= 1, got n={n}, k={k}, r={r}")
    verts = [
        c for c in itertools.combinations(range(n), k)
        if all(_circular_distance(a, b, n) >= r for a, b in itertools.combinations(c, 2))
    ]
    check_limit("vertices", len(verts), MAX_N)
    edges = [
        (a, b) for a, b in itertools.combinations(range(len(verts)), 2)
        if _interlace(verts[a], verts[b], n)
    ]
    return SideInfoGraph.from_edges(len(verts), edges)


def random_graph(n: int, edge_prob: float, seed: int = 0, directed: bool = False) -> SideInfoGraph:
    """Erdos-Renyi graph; with ``directed`` each arc is drawn independently."""
    if n < 1 or not (0.0 <= edge_prob <= 1.0):
        raise ValueError("need n >= 1 and 0 <= edge_prob <= 1")
    rng = random.Random(seed)
    if not directed:
        return SideInfoGraph.from_edges(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
        )
    sets = [[j for j in range(n) if j != i and rng.random() < edge_prob] for i in range(n)]
    return SideInfoGraph.from_sets(sets)


def nonisomorphic_graphs(n: int) -> list[SideInfoGraph]:
    """One representative per isomorphism class of undirected graphs on n
    vertices (the first in edge-bitmask order)."""
    check_limit("n", n, 6)
    pairs = list(itertools.combinations(range(n), 2))
    buckets: dict[tuple, list[SideInfoGraph]] = {}
    reps = []
    for mask in range(1 << len(pairs)):
        g = SideInfoGraph.from_edges(n, [e for b, e in enumerate(pairs) if mask >> b & 1])
        key = (len(g.edges()), tuple(sorted(g.degree(v) for v in range(n))))
        seen = buckets.setdefault(key, [])
        if any(is_isomorphic(g, h) for h in seen):
            continue
        seen.append(g)
        reps.append(g)
    return reps
