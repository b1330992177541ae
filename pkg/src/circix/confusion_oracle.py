"""Confusion graphs and the clique lower bound on the broadcast rate.

Vertex x in 0..q^(nt)-1 encodes the message tuple as nt base-q digits, most
significant first, grouped into n blocks of t digits (block i = message i).
Two tuples are confusable when some receiver i sees identical side
information but a different x_i.

Confusability depends only on x - y, so the graph is a Cayley graph and
vertex-transitive: some maximum clique contains 0, and
omega = 1 + omega(neighbourhood of 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph_params import induced_masks, max_clique
from .graphs import SideInfoGraph
from .limits import check_limit

MAX_VERTICES = 4096


@dataclass(frozen=True)
class ConfusionGraph:
    base: SideInfoGraph
    t: int
    q: int

    def __post_init__(self):
        if self.t < 1 or self.q < 2:
            raise ValueError("need t >= 1 and q >= 2")

    @property
    def num_vertices(self) -> int:
        return self.q ** (self.base.n * self.t)

    def digits(self, x: int) -> tuple[int, ...]:
        nt = self.base.n * self.t
        out = [0] * nt
        for p in range(nt - 1, -1, -1):
            x, out[p] = divmod(x, self.q)
        return tuple(out)

    def index(self, digits) -> int:
        x = 0
        for s in digits:
            x = x * self.q + s
        return x

    def block(self, x: int, i: int) -> tuple[int, ...]:
        d = self.digits(x)
        return d[i * self.t:(i + 1) * self.t]

    def edge(self, x: int, y: int) -> bool:
        if x == y:
            raise ValueError("confusion edge queried for identical vertices")
        dx, dy = self.digits(x), self.digits(y)
        t = self.t

        def blk(d, i):
            return d[i * t:(i + 1) * t]

        return any(
            blk(dx, i) != blk(dy, i) and all(blk(dx, j) == blk(dy, j) for j in self.base.side_info[i])
            for i in range(self.base.n)
        )

    def adjacency_masks(self) -> list[int]:
        """Neighbour bitmask of every vertex, built by grouping vertices on
        each receiver's view of the side information (no pairwise loop)."""
        check_limit("vertices", self.num_vertices, MAX_VERTICES)
        N, n, t = self.num_vertices, self.base.n, self.t
        blocks = []
        for x in range(N):
            d = self.digits(x)
            blocks.append(tuple(d[i * t:(i + 1) * t] for i in range(n)))
        adj = [0] * N
        for i in range(n):
            S = sorted(self.base.side_info[i])
            group: dict[tuple, int] = {}
            group_same: dict[tuple, int] = {}
            keys = []
            for x in range(N):
                key = tuple(blocks[x][j] for j in S)
                keys.append(key)
                bit = 1 << x
                group[key] = group.get(key, 0) | bit
                ks = (key, blocks[x][i])
                group_same[ks] = group_same.get(ks, 0) | bit
            for x in range(N):
                adj[x] |= group[keys[x]] & ~group_same[(keys[x], blocks[x][i])]
        return adj


def max_clique_confusion(G: SideInfoGraph, t: int, q: int) -> int:
    """Exact clique number of the confusion graph Gamma_t(G) over F_q."""
    cg = ConfusionGraph(G, t, q)
    check_limit("q^(nt)", cg.num_vertices, MAX_VERTICES)
    adj = cg.adjacency_masks()
    a, nbrs = adj[0], []
    while a:
        low = a & -a
        nbrs.append(low.bit_length() - 1)
        a ^= low
    sub = induced_masks(adj, nbrs)
    return 1 + len(max_clique(sub))


def log_base(value: int, q: int) -> Fraction | float:
    """log_q(value), exact when value is a power of q."""
    e, v = 0, value
    while v > 1 and v % q == 0:
        v //= q
        e += 1
    if v == 1:
        return Fraction(e)
    return math.log(value, q)


def beta_lower_bound(G: SideInfoGraph, t: int, q: int) -> Fraction | float:
    """log_q(omega(Gamma_t(G))) / t, a lower bound on the broadcast rate.

    Exact (a Fraction) whenever the clique number is a power of q.
    """
    return log_base(max_clique_confusion(G, t, q), q) / t


def embed_vertex(H_vertex: int, cg_H: ConfusionGraph, cg_G: ConfusionGraph, S: list[int], padding: list[tuple[int, ...]]) -> int:
    """Map a vertex of Gamma_t(H), H = G[S], into Gamma_t(G): block r of the
    H-tuple goes to block S[r]; blocks outside S take fixed padding values."""
    t = cg_H.t
    d = cg_H.digits(H_vertex)
    pad = iter(padding)
    where = {v: r for r, v in enumerate(S)}
    out = []
    for v in range(cg_G.base.n):
        if v in where:
            r = where[v]
            out.extend(d[r * t:(r + 1) * t])
        else:
            out.extend(next(pad))
    return cg_G.index(out)
