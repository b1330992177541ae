"""Exact linear algebra over prime fields F_q.

Matrices are small (a few hundred entries at most), so everything is plain
Python integers; no numerical tolerance is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_PRIME = 251


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not (2 <= self.q <= MAX_PRIME) or not _is_prime(self.q):
            raise ValueError(f"q={self.q} is not a prime in [2, {MAX_PRIME}]")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)


def as_field(field: PrimeField | int) -> PrimeField:
    return field if isinstance(field, PrimeField) else PrimeField(field)


@dataclass(frozen=True)
class GFMatrix:
    """Dense row-major matrix over a prime field."""

    field: PrimeField
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        q = self.field.q
        if any(not (0 <= e < q) for e in self.entries):
            raise ValueError(f"entries must be residues in [0, {q})")

    @classmethod
    def from_rows(cls, field: PrimeField | int, rows: Sequence[Sequence[int]], cols: int | None = None) -> "GFMatrix":
        field = as_field(field)
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(e % field.q for r in rows for e in r)
        return cls(field, len(rows), cols, flat)

    @classmethod
    def from_columns(cls, field: PrimeField | int, columns: Sequence[Sequence[int]], rows: int | None = None) -> "GFMatrix":
        field = as_field(field)
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls.from_rows(field, [[c[r] for c in columns] for r in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, field: PrimeField | int, rows: int, cols: int) -> "GFMatrix":
        return cls(as_field(field), rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, field: PrimeField | int, n: int) -> "GFMatrix":
        return cls(as_field(field), n, n, tuple(int(r == c) for r in range(n) for c in range(n)))

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[int, ...]:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def column(self, c: int) -> tuple[int, ...]:
        return self.entries[c::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def transpose(self) -> "GFMatrix":
        return GFMatrix.from_rows(self.field, [self.column(c) for c in range(self.cols)], cols=self.rows)

    def mul_vector(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.cols:
            raise ValueError(f"vector length {len(x)} does not match {self.cols} columns")
        q = self.field.q
        return tuple(
            sum(a * b for a, b in zip(self.row(r), x)) % q for r in range(self.rows)
        )

    def to_json(self) -> dict:
        return {"q": self.field.q, "rows": self.rows, "cols": self.cols, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, obj: dict) -> "GFMatrix":
        for key in ("q", "rows", "cols", "entries"):
            if key not in obj:
                raise ValueError(f"matrix JSON missing field '{key}'")
        return cls(PrimeField(int(obj["q"])), int(obj["rows"]), int(obj["cols"]), tuple(int(e) for e in obj["entries"]))


def rref(field: PrimeField, rows: Iterable[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    q = field.q
    m = [[e % q for e in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        s = field.inv(m[r][c])
        if s != 1:
            m[r] = [(e * s) % q for e in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_of_rows(field: PrimeField, rows: Iterable[Sequence[int]]) -> int:
    return len(rref(field, rows)[1])


def rank(M: GFMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return rank_of_rows(M.field, M.to_rows())


def in_span(v: Sequence[int], U: Iterable[Sequence[int]], field: PrimeField | int) -> bool:
    """True iff v is an F_q-linear combination of the vectors in U."""
    field = as_field(field)
    U = [tuple(u) for u in U]
    if any(len(u) != len(v) for u in U):
        raise ValueError("dimension mismatch between v and spanning set")
    if not any(e % field.q for e in v):
        return True
    if not U:
        return False
    basis, _ = rref(field, U)
    return rank_of_rows(field, basis + [list(v)]) == len(basis)


def solve(M: GFMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """One solution z of M z = b, or None when the system is inconsistent."""
    if len(b) != M.rows:
        raise ValueError("right-hand side length does not match rows")
    field = M.field
    aug = [list(M.row(r)) + [b[r] % field.q] for r in range(M.rows)]
    reduced, pivots = rref(field, aug)
    if pivots and pivots[-1] == M.cols:
        return None
    z = [0] * M.cols
    for row, c in zip(reduced, pivots):
        z[c] = row[-1]
    return tuple(z)


def kron(A: GFMatrix, B: GFMatrix) -> GFMatrix:
    if A.field != B.field:
        raise ValueError("field mismatch in Kronecker product")
    q = A.field.q
    out = []
    for ra in range(A.rows):
        for rb in range(B.rows):
            out.append([(A[ra, ca] * B[rb, cb]) % q for ca in range(A.cols) for cb in range(B.cols)])
    return GFMatrix.from_rows(A.field, out, cols=A.cols * B.cols)


def kron_vec(v: Sequence[int], w: Sequence[int], field: PrimeField | int) -> tuple[int, ...]:
    q = as_field(field).q
    return tuple((a * b) % q for a in v for b in w)
