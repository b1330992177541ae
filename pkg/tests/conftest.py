"""Shared strategies and brute-force oracles.

The oracles here deliberately avoid the package's own search code: they
enumerate assignments, coefficient vectors or message pairs directly.
"""
import itertools

import networkx as nx
from hypothesis import settings, strategies as st

from circix.graphs import SideInfoGraph

# brute-force oracles dominate run time; timing noise is not a failure
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def undirected_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SideInfoGraph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


@st.composite
def directed_graphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    sets = []
    for i in range(n):
        others = [j for j in range(n) if j != i]
        keep = draw(st.lists(st.booleans(), min_size=len(others), max_size=len(others)))
        sets.append([j for j, k in zip(others, keep) if k])
    return SideInfoGraph.from_sets(sets)


def to_nx(G: SideInfoGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def brute_clique_number(G: SideInfoGraph) -> int:
    best = 0
    for size in range(1, G.n + 1):
        for S in itertools.combinations(range(G.n), size):
            if all(G.adjacent(u, v) for u, v in itertools.combinations(S, 2)):
                best = size
                break
    return best


def brute_circular_colorings(G: SideInfoGraph, k: int, d: int):
    """All (k, d) circular colourings in lexicographic order of the colour vector."""
    for f in itertools.product(range(k), repeat=G.n):
        if all(d <= abs(f[u] - f[v]) <= k - d for u, v in G.edges()):
            yield f


def brute_chi_c(G: SideInfoGraph):
    from fractions import Fraction
    best = None
    for k in range(1, G.n + 1):
        for d in range(1, k + 1):
            r = Fraction(k, d)
            if best is not None and r >= best:
                continue
            if next(brute_circular_colorings(G, k, d), None) is not None:
                best = r
    return best


def brute_rowspace_size(rows, q):
    """Number of distinct vectors in the row space (= q^rank)."""
    if not rows:
        return 1
    n = len(rows[0])
    seen = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        seen.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(n)))
    return len(seen)


def brute_in_span(v, U, q):
    n = len(v)
    target = tuple(x % q for x in v)
    for coeffs in itertools.product(range(q), repeat=len(U)):
        if tuple(sum(c * u[j] for c, u in zip(coeffs, U)) % q for j in range(n)) == target:
            return True
    return False


def brute_decodable(code, G) -> bool:
    """Definition of a valid index code: whenever two message tuples agree on a
    receiver's side information but differ in its demand, their codewords differ."""
    q, n, t = code.field.q, code.n, code.t
    messages = list(itertools.product(range(q), repeat=n * t))
    codewords = {x: code.B.mul_vector(x) for x in messages}
    for i in range(n):
        S = sorted(G.side_info[i])
        seen = {}
        for x in messages:
            key = (tuple(x[j * t:(j + 1) * t] for j in S), codewords[x])
            xi = x[i * t:(i + 1) * t]
            if seen.setdefault(key, xi) != xi:
                return False
    return True


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
