import itertools
import math
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings

from circix.graph_params import (
    chromatic_number, circular_chromatic_number, circular_clique_number, circular_perfect_witness,
    clique_number, find_induced_circular_clique, has_circular_coloring, is_circular_perfect,
    is_perfect, max_clique, params,
)
from circix.graphs import (
    SideInfoGraph, circular_clique, complement, complete, cycle, edgeless, induced_subgraph,
    interlacing_graph, is_isomorphic, join_at_vertex, path, random_graph, web,
)
from circix.limits import LimitExceeded

from conftest import (
    brute_chi_c, brute_circular_colorings, brute_clique_number, to_nx, undirected_graphs,
)


def test_clique_number_examples():
    assert clique_number(complete(6)) == 6
    assert clique_number(cycle(5)) == 2
    assert clique_number(web(9, 3)) == brute_clique_number(web(9, 3)) == 3


@given(undirected_graphs(max_n=9))
def test_clique_number_matches_enumeration(G):
    assert clique_number(G) == brute_clique_number(G)


def test_max_clique_on_larger_random_graphs():
    for seed in range(5):
        G = random_graph(24, 0.6, seed=seed)
        expected = max(len(c) for c in nx.find_cliques(to_nx(G)))
        clique = max_clique(G.adj_masks())
        assert len(clique) == expected
        assert all(G.adjacent(u, v) for u, v in itertools.combinations(clique, 2))


def test_clique_number_rejects_directed():
    with pytest.raises(ValueError):
        clique_number(SideInfoGraph.from_sets([[1], []]))


def test_chromatic_number_examples():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(edgeless(7)) == 1
    # i mod 3 colours web(9,3) properly and omega = 3 rules out fewer colours
    W = web(9, 3)
    assert all(u % 3 != v % 3 for u, v in W.edges())
    assert chromatic_number(W) == 3


@settings(max_examples=60)
@given(undirected_graphs(max_n=7))
def test_chromatic_number_matches_networkx_bruteforce(G):
    # smallest k with a proper k-colouring, by enumeration
    k = 1
    while not any(all(f[u] != f[v] for u, v in G.edges()) for f in itertools.product(range(k), repeat=G.n)):
        k += 1
    assert chromatic_number(G) == k


def test_circular_coloring_examples():
    assert has_circular_coloring(cycle(5), 5, 2).assignment == (0, 2, 4, 1, 3)
    assert has_circular_coloring(cycle(5), 2, 1) is None
    assert has_circular_coloring(complete(3), 3, 1).assignment == (0, 1, 2)


def test_circular_coloring_c5_is_lex_least():
    # all degrees equal, so the search order is 0..4 and the result must be
    # the first valid colour vector in lexicographic order
    first = next(brute_circular_colorings(cycle(5), 5, 2))
    assert first == (0, 2, 4, 1, 3)


@settings(max_examples=80)
@given(undirected_graphs(max_n=5))
def test_circular_coloring_existence_matches_enumeration(G):
    for k in range(1, G.n + 1):
        for d in range(1, k // 2 + 1):
            found = has_circular_coloring(G, k, d)
            exists = next(brute_circular_colorings(G, k, d), None) is not None
            assert (found is not None) == exists
            if found:
                assert found.is_valid_for(G)


def test_chi_c_examples():
    assert circular_chromatic_number(cycle(7))[0] == Fraction(7, 3)
    assert circular_chromatic_number(web(9, 3))[0] == Fraction(3)
    for n in range(2, 7):
        assert circular_chromatic_number(complete(n))[0] == n
    assert circular_chromatic_number(edgeless(4))[0] == 1


@settings(max_examples=60)
@given(undirected_graphs(max_n=5))
def test_chi_c_matches_enumeration(G):
    if G.edges():
        assert circular_chromatic_number(G)[0] == brute_chi_c(G)


def test_omega_c_examples():
    assert circular_clique_number(cycle(5)) == Fraction(5, 2)
    assert circular_clique_number(complete(4)) == 4
    assert circular_clique_number(cycle(7)) == Fraction(7, 3)


def _brute_omega_c(G):
    """Largest reduced k/d with K_{k/d} isomorphic to some induced subgraph (subset enumeration)."""
    if not G.edges():
        return Fraction(1)
    best = Fraction(0)
    for k in range(2, G.n + 1):
        for d in range(1, k // 2 + 1):
            if math.gcd(k, d) != 1 or Fraction(k, d) <= best:
                continue
            K = circular_clique(k, d)
            if any(is_isomorphic(induced_subgraph(G, S), K) for S in itertools.combinations(range(G.n), k)):
                best = Fraction(k, d)
    return best


@settings(max_examples=60)
@given(undirected_graphs(max_n=7))
def test_omega_c_matches_subset_isomorphism(G):
    assert circular_clique_number(G) == _brute_omega_c(G)


@settings(max_examples=60)
@given(undirected_graphs(max_n=7))
def test_parameter_chain_and_floor_ceil(G):
    p = params(G)
    assert p.omega <= p.omega_c <= p.chi_c <= p.chi
    assert p.omega == math.floor(p.omega_c)
    assert p.chi == math.ceil(p.chi_c)


@pytest.mark.parametrize("k,d", [(k, d) for k in range(2, 11) for d in range(1, k // 2 + 1) if math.gcd(k, d) == 1])
def test_circular_cliques_are_their_own_witnesses(k, d):
    K = circular_clique(k, d)
    assert circular_chromatic_number(K)[0] == Fraction(k, d)
    assert circular_clique_number(K) == Fraction(k, d)


def test_induced_circular_clique_embedding():
    img = find_induced_circular_clique(web(9, 3), 3, 1)
    assert img is not None
    assert is_isomorphic(induced_subgraph(web(9, 3), img), complete(3))
    assert find_induced_circular_clique(path(4), 5, 2) is None


def test_circular_perfect_examples():
    assert is_circular_perfect(cycle(5))
    assert is_circular_perfect(web(9, 3))
    assert not is_circular_perfect(web(8, 3))


def test_circular_perfect_witness_is_a_violation():
    S = circular_perfect_witness(web(8, 3))
    H = induced_subgraph(web(8, 3), S)
    assert circular_clique_number(H) != circular_chromatic_number(H)[0]


@pytest.mark.parametrize("p,q", [(p, q) for q in range(2, 5) for p in range(2 * q, 11)])
def test_web_circular_perfectness_rule(p, q):
    predicted = q == 2 or p == 2 * q or p == 2 * q + 1 or (q == 3 and p % 3 == 0)
    assert is_circular_perfect(web(p, q)) == predicted


@pytest.mark.parametrize("p,q", [(p, q) for q in range(1, 5) for p in range(2 * q, 13)])
def test_web_chi_c_formula(p, q):
    assert circular_chromatic_number(web(p, q))[0] == Fraction(p, p // q)


def test_odd_cycle_chi_c():
    for d in range(1, 6):
        assert circular_chromatic_number(cycle(2 * d + 1))[0] == 2 + Fraction(1, d)
    for n in (4, 6, 8, 10):
        assert circular_chromatic_number(cycle(n))[0] == 2


@pytest.mark.parametrize("n,k,r", [(5, 2, 1), (5, 2, 2), (7, 3, 2), (7, 2, 3), (9, 4, 2)])
def test_interlacing_chi_c(n, k, r):
    G = interlacing_graph(n, k, r)
    assert circular_chromatic_number(G)[0] == Fraction(n, k)


def test_perfect_examples():
    assert is_perfect(path(6))
    assert is_perfect(cycle(6))
    assert not is_perfect(cycle(5))
    assert not is_perfect(complement(cycle(7)))
    assert is_perfect(join_at_vertex(complete(3), edgeless(3)))


def _nx_has_odd_hole_or_antihole(G):
    g, gc = to_nx(G), nx.complement(to_nx(G))
    for size in range(5, G.n + 1, 2):
        for S in itertools.combinations(range(G.n), size):
            for h in (g.subgraph(S), gc.subgraph(S)):
                if all(d == 2 for _, d in h.degree()) and nx.is_connected(h):
                    return True
    return False


@settings(max_examples=50)
@given(undirected_graphs(max_n=8))
def test_perfect_matches_networkx_hole_search(G):
    assert is_perfect(G) == (not _nx_has_odd_hole_or_antihole(G))


@settings(max_examples=40, deadline=None)
@given(undirected_graphs(max_n=8))
def test_perfect_implies_circular_perfect(G):
    if is_perfect(G):
        assert is_circular_perfect(G)
    if is_circular_perfect(G):
        p = params(G)
        assert p.omega_c == p.chi_c


def test_size_limits():
    with pytest.raises(LimitExceeded):
        circular_chromatic_number(cycle(13))
    with pytest.raises(LimitExceeded):
        is_circular_perfect(cycle(11))
