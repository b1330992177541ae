"""Vector linear index codes: validity, decodability cross-check, encode/decode.

Column (i, j) of the encoding matrix, the precoding vector of symbol j of
message i, sits at index ``i * t + j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .gf_linalg import GFMatrix, PrimeField, as_field, in_span, rank_of_rows, rref, solve
from .graphs import SideInfoGraph


class DecodingError(ValueError):
    pass


@dataclass(frozen=True)
class LinearIndexCode:
    field: PrimeField
    n: int
    t: int
    l: int
    B: GFMatrix

    def __post_init__(self):
        if self.n < 1 or self.t < 1 or self.l < 0:
            raise ValueError("need n >= 1, t >= 1, l >= 0")
        if self.B.field != self.field:
            raise ValueError("encoding matrix is over a different field")
        if (self.B.rows, self.B.cols) != (self.l, self.n * self.t):
            raise ValueError(
                f"encoding matrix must be {self.l} x {self.n * self.t}, got {self.B.rows} x {self.B.cols}"
            )

    @classmethod
    def from_matrix(cls, B: GFMatrix, n: int, t: int = 1) -> "LinearIndexCode":
        return cls(B.field, n, t, B.rows, B)

    def col_index(self, i: int, j: int) -> int:
        return i * self.t + j

    def column(self, i: int, j: int) -> tuple[int, ...]:
        return self.B.column(i * self.t + j)

    def rate(self) -> Fraction:
        return Fraction(self.l, self.t)

    def to_json(self) -> dict:
        return {"q": self.field.q, "n": self.n, "t": self.t, "l": self.l, "B": self.B.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "LinearIndexCode":
        for key in ("q", "n", "t", "l", "B"):
            if key not in obj:
                raise ValueError(f"code JSON missing field '{key}'")
        B = GFMatrix.from_json(obj["B"])
        if B.field.q != int(obj["q"]):
            raise ValueError("code JSON field 'q' disagrees with matrix field")
        return cls(B.field, int(obj["n"]), int(obj["t"]), int(obj["l"]), B)


def _check_sizes(code: LinearIndexCode, G: SideInfoGraph) -> None:
    if code.n != G.n:
        raise ValueError(f"code has {code.n} messages but graph has {G.n} receivers")


def interference_columns(code: LinearIndexCode, G: SideInfoGraph, i: int, j: int) -> list[tuple[int, ...]]:
    """Columns that B^{ij} must stay outside the span of: the other symbols of
    message i and every symbol of messages receiver i does not know."""
    unknown = [u for u in range(G.n) if u != i and u not in G.side_info[i]]
    cols = [code.column(i, jj) for jj in range(code.t) if jj != j]
    cols += [code.column(u, jj) for u in unknown for jj in range(code.t)]
    return cols


def violations(code: LinearIndexCode, G: SideInfoGraph) -> list[tuple[int, int]]:
    """All (i, j) whose precoding vector lies in the span of its interference."""
    _check_sizes(code, G)
    return [
        (i, j)
        for i in range(G.n)
        for j in range(code.t)
        if in_span(code.column(i, j), interference_columns(code, G, i, j), code.field)
    ]


def is_valid(code: LinearIndexCode, G: SideInfoGraph) -> bool:
    _check_sizes(code, G)
    return all(
        not in_span(code.column(i, j), interference_columns(code, G, i, j), code.field)
        for i in range(G.n)
        for j in range(code.t)
    )


def receiver_ok(code: LinearIndexCode, G: SideInfoGraph, i: int) -> bool:
    return all(
        not in_span(code.column(i, j), interference_columns(code, G, i, j), code.field)
        for j in range(code.t)
    )


def can_decode_rowspace(code: LinearIndexCode, G: SideInfoGraph, i: int) -> bool:
    """Independent check: every unit vector on a coordinate of x_i lies in
    rowspace(B) + span of the unit vectors on receiver i's side information."""
    _check_sizes(code, G)
    N = code.n * code.t

    def unit(p: int) -> list[int]:
        e = [0] * N
        e[p] = 1
        return e

    known = [unit(u * code.t + jj) for u in sorted(G.side_info[i]) for jj in range(code.t)]
    basis, _ = rref(code.field, [list(code.B.row(r)) for r in range(code.l)] + known)
    base_rank = len(basis)
    return all(
        rank_of_rows(code.field, basis + [unit(i * code.t + j)]) == base_rank
        for j in range(code.t)
    )


def encode(code: LinearIndexCode, x: Sequence[Sequence[int]]) -> tuple[int, ...]:
    if len(x) != code.n or any(len(xi) != code.t for xi in x):
        raise ValueError(f"message must be {code.n} vectors of length {code.t}")
    return code.B.mul_vector([s for xi in x for s in xi])


def decode(
    code: LinearIndexCode,
    G: SideInfoGraph,
    i: int,
    c: Sequence[int],
    side: Mapping[int, Sequence[int]],
) -> tuple[int, ...]:
    """Recover x_i from the codeword and receiver i's side information.

    Side-information contributions are subtracted and the remaining system is
    solved for x_i together with the unknown messages; any solution yields the
    same x_i when the code is valid for receiver i.
    """
    _check_sizes(code, G)
    if len(c) != code.l:
        raise ValueError(f"codeword must have length {code.l}")
    if not receiver_ok(code, G, i):
        raise DecodingError(f"receiver cannot decode: receiver {i}")
    q = code.field.q
    t = code.t
    residual = list(c)
    for u in G.side_info[i]:
        if u not in side:
            raise ValueError(f"missing side information x_{u} for receiver {i}")
        xu = side[u]
        if len(xu) != t:
            raise ValueError(f"side information x_{u} must have length {t}")
        for jj in range(t):
            col = code.column(u, jj)
            for r in range(code.l):
                residual[r] = (residual[r] - col[r] * xu[jj]) % q
    unknown = [u for u in range(G.n) if u != i and u not in G.side_info[i]]
    cols = [code.column(i, j) for j in range(t)] + [code.column(u, jj) for u in unknown for jj in range(t)]
    M = GFMatrix.from_columns(code.field, cols, rows=code.l)
    z = solve(M, residual)
    if z is None:
        raise DecodingError(f"receiver cannot decode: codeword inconsistent for receiver {i}")
    return z[:t]


def uncoded(field: PrimeField | int, n: int, t: int = 1) -> LinearIndexCode:
    field = as_field(field)
    return LinearIndexCode(field, n, t, n * t, GFMatrix.identity(field, n * t))
