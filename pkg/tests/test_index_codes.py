import random

import pytest
from hypothesis import given, settings, strategies as st

from circix.gf_linalg import GFMatrix, PrimeField
from circix.graph_params import clique_number
from circix.graphs import complement, complete, cycle, edgeless
from circix.index_codes import (
    DecodingError, LinearIndexCode, can_decode_rowspace, decode, encode, is_valid, uncoded, violations,
)

from conftest import brute_decodable, directed_graphs


def test_complete_graph_single_sum():
    # everyone knows everything else: x_0 + x_1 + x_2 serves all three
    code = LinearIndexCode.from_matrix(GFMatrix.from_rows(2, [[1, 1, 1]]), 3)
    G = complete(3)
    assert is_valid(code, G)
    x = [[1], [0], [1]]
    c = encode(code, x)
    assert c == (0,)
    for i in range(3):
        side = {u: x[u] for u in G.side_info[i]}
        assert decode(code, G, i, c, side) == tuple(x[i])


def test_single_sum_fails_without_side_info():
    code = LinearIndexCode.from_matrix(GFMatrix.from_rows(2, [[1, 1, 1]]), 3)
    assert not is_valid(code, edgeless(3))
    assert violations(code, edgeless(3)) == [(0, 0), (1, 0), (2, 0)]
    with pytest.raises(DecodingError, match="receiver cannot decode"):
        decode(code, edgeless(3), 0, (1,), {})


def test_uncoded_always_valid():
    for n in range(1, 5):
        assert is_valid(uncoded(3, n, 2), edgeless(n))


def test_pentagon_rate_three_code():
    # x0+x1, x2+x3, x4 + x0 ... a rate 3 scalar code for C5 over F2, verified by definition
    G = cycle(5)
    B = GFMatrix.from_rows(2, [[1, 1, 0, 0, 0], [0, 0, 1, 1, 0], [1, 0, 0, 0, 1]])
    code = LinearIndexCode.from_matrix(B, 5)
    assert brute_decodable(code, G)
    assert is_valid(code, G)


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        is_valid(uncoded(2, 3), edgeless(4))
    with pytest.raises(ValueError):
        LinearIndexCode(PrimeField(2), 2, 1, 1, GFMatrix.identity(2, 2))


def test_json_roundtrip_and_missing_field():
    code = uncoded(5, 2, 2)
    assert LinearIndexCode.from_json(code.to_json()) == code
    obj = code.to_json()
    del obj["t"]
    with pytest.raises(ValueError, match="'t'"):
        LinearIndexCode.from_json(obj)


@st.composite
def graph_and_code(draw, max_n=4):
    G = draw(directed_graphs(max_n=max_n))
    q = draw(st.sampled_from([2, 3]))
    t = draw(st.integers(1, 2))
    if q ** (G.n * t) > 729:
        t = 1
    l = draw(st.integers(1, G.n * t))
    entries = draw(st.lists(st.integers(0, q - 1), min_size=l * G.n * t, max_size=l * G.n * t))
    B = GFMatrix(PrimeField(q), l, G.n * t, tuple(entries))
    return G, LinearIndexCode.from_matrix(B, G.n, t)


@settings(max_examples=150)
@given(graph_and_code())
def test_validity_matches_rowspace_and_definition(gc):
    G, code = gc
    valid = is_valid(code, G)
    assert valid == all(can_decode_rowspace(code, G, i) for i in range(G.n))
    assert valid == brute_decodable(code, G)


@settings(max_examples=100)
@given(graph_and_code(max_n=5), st.integers(0, 2**32 - 1))
def test_encode_decode_roundtrip(gc, seed):
    G, code = gc
    rng = random.Random(seed)
    q = code.field.q
    x = [[rng.randrange(q) for _ in range(code.t)] for _ in range(code.n)]
    c = encode(code, x)
    for i in range(G.n):
        side = {u: x[u] for u in G.side_info[i]}
        if can_decode_rowspace(code, G, i):
            assert decode(code, G, i, c, side) == tuple(x[i])
        else:
            with pytest.raises(DecodingError):
                decode(code, G, i, c, side)


@settings(max_examples=60)
@given(graph_and_code(max_n=4))
def test_valid_codes_meet_clique_bound(gc):
    # a clique in the complement is a set of receivers knowing nothing of each other
    G, code = gc
    if G.is_undirected() and is_valid(code, G):
        assert code.rate() >= clique_number(complement(G))


def test_decode_requires_side_information():
    code = LinearIndexCode.from_matrix(GFMatrix.from_rows(2, [[1, 1]]), 2)
    with pytest.raises(ValueError, match="missing side information"):
        decode(code, complete(2), 0, (1,), {})
