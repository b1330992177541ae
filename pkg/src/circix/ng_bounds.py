"""Nordhaus-Gaddum type checks for linear broadcast rates of G and its complement.

The product lower bound comes with a constructive witness: for valid codes B
(for G) and C (for the complement) with equal message length t, the n*t^2
columns B^{ij} (x) C^{i j1} are linearly independent, so l1*l2 >= n*t^2.

The vector linear rate itself is not computable in general, so the reports
work with certified intervals [lower bound, achieved rate] and attach one of
the status strings defined below to each side of the inequality.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .construction import certified_code
from .gf_linalg import GFMatrix, PrimeField, as_field, in_span, kron_vec, rank
from .graph_params import chromatic_number
from .graphs import SideInfoGraph, complement, format_rational, require_undirected
from .index_codes import LinearIndexCode, is_valid, uncoded
from .search_oracle import ALLOWED_Q, MAX_N, beta_scalar_exhaustive

VERIFIED = "bound verified"
EQUALITY = "equality certified"
INCONCLUSIVE = "inconclusive"


def time_share(code: LinearIndexCode, copies: int) -> LinearIndexCode:
    """Run ``copies`` independent copies of the code side by side.

    Message symbol j' of the expanded code is symbol j' mod t of copy
    j' // t; copy c occupies rows c*l .. c*l + l - 1.
    """
    if copies < 1:
        raise ValueError("need at least one copy")
    t, l, n = code.t, code.l, code.n
    T, L = t * copies, l * copies
    rows = [[0] * (n * T) for _ in range(L)]
    for i in range(n):
        for jp in range(T):
            c, j = divmod(jp, t)
            col = code.column(i, j)
            for r in range(l):
                rows[c * l + r][i * T + jp] = col[r]
    return LinearIndexCode(code.field, n, T, L, GFMatrix.from_rows(code.field, rows, cols=n * T))


@dataclass(frozen=True)
class TensorRankReport:
    n: int
    t: int
    l1: int
    l2: int
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.rank == self.n * self.t ** 2

    @property
    def product_ok(self) -> bool:
        return self.l1 * self.l2 >= self.n * self.t ** 2

    def to_json(self) -> dict:
        return {"n": self.n, "t": self.t, "l1": self.l1, "l2": self.l2, "rank": self.rank,
                "full_rank": self.full_rank, "product_ok": self.product_ok}


def tensor_matrix(B: LinearIndexCode, C: LinearIndexCode) -> GFMatrix:
    """Columns kron(B^{ij}, C^{i j1}) ordered by (i, j, j1)."""
    if B.t != C.t or B.n != C.n or B.field != C.field:
        raise ValueError("codes must share n, t and field")
    cols = [
        kron_vec(B.column(i, j), C.column(i, j1), B.field)
        for i in range(B.n) for j in range(B.t) for j1 in range(C.t)
    ]
    return GFMatrix.from_columns(B.field, cols, rows=B.l * C.l)


def tensor_rank_check(B: LinearIndexCode, C: LinearIndexCode, G: SideInfoGraph) -> TensorRankReport:
    """Rank of the tensor matrix for a valid code of G and one of its complement.

    Unequal message lengths t1, t2 are equalised to t1*t2 by time sharing.
    """
    if not is_valid(B, G):
        raise ValueError("first code is not valid for G")
    if not is_valid(C, complement(G)):
        raise ValueError("second code is not valid for the complement of G")
    if B.t != C.t:
        B, C = time_share(B, C.t), time_share(C, B.t)
    F = tensor_matrix(B, C)
    return TensorRankReport(G.n, B.t, B.l, C.l, rank(F))


def kron_avoids_span(
    v: Sequence[int], w: Sequence[int],
    A1: Sequence[Sequence[int]], A2: Sequence[Sequence[int]],
    D: Sequence[Sequence[int]], E: Sequence[Sequence[int]],
    field: PrimeField | int,
) -> bool:
    """Whether kron(v, w) avoids span{a (x) d : a in A1, d in D} + span{e (x) b : e in E, b in A2}.

    Requires v outside span(A1) and w outside span(A2). Generators suffice on
    the left since the tensor product is bilinear.
    """
    field = as_field(field)
    if in_span(v, A1, field) or in_span(w, A2, field):
        raise ValueError("precondition violated: v in span(A1) or w in span(A2)")
    if not D or not E:
        raise ValueError("D and E must be nonempty")
    gens = [kron_vec(a, d, field) for a in A1 for d in D] + [kron_vec(e, b, field) for e in E for b in A2]
    return not in_span(kron_vec(v, w, field), gens, field)


def random_valid_code(G: SideInfoGraph, q: int, t: int, rng: random.Random, tries: int = 200) -> LinearIndexCode:
    """A random valid code of message length t, shortest found by rejection
    sampling over lengths nt-1, nt-2, ...; falls back to uncoded transmission."""
    field = PrimeField(q)
    N = G.n * t
    best = uncoded(field, G.n, t)
    for l in range(N - 1, 0, -1):
        found = None
        for _ in range(tries):
            B = GFMatrix(field, l, N, tuple(rng.randrange(q) for _ in range(l * N)))
            code = LinearIndexCode(field, G.n, t, l, B)
            if is_valid(code, G):
                found = code
                break
        if found is None:
            break
        best = found
    return best


def good_code(G: SideInfoGraph, q: int) -> LinearIndexCode:
    """Best readily available code: the circular-colouring construction for
    undirected G, else the optimal scalar code when small enough, else uncoded."""
    if G.is_undirected():
        return certified_code(G, q).code
    if G.n <= MAX_N and q in ALLOWED_Q:
        return beta_scalar_exhaustive(G, q)[1]
    return uncoded(q, G.n)


# --- interval reports --------------------------------------------------------

Interval = tuple[Fraction, Fraction]


def rate_interval(G: SideInfoGraph, q: int) -> Interval:
    """[omega_c(Gbar), best achieved rate] for the vector linear rate of G."""
    cert = certified_code(G, q)
    hi = cert.code.rate()
    if G.n <= MAX_N and q in ALLOWED_Q:
        hi = min(hi, Fraction(beta_scalar_exhaustive(G, q)[0]))
    return cert.omega_c, hi


def _fmt_interval(iv: Interval) -> list[str]:
    return [format_rational(iv[0]), format_rational(iv[1])]


@dataclass(frozen=True)
class ProductReport:
    n: int
    beta_g: Interval
    beta_gbar: Interval
    chi_product: int
    lower_status: str
    upper_status: str

    @property
    def product(self) -> Interval:
        return self.beta_g[0] * self.beta_gbar[0], self.beta_g[1] * self.beta_gbar[1]

    @property
    def upper_bound(self) -> Fraction:
        return Fraction(self.n + 1, 2) ** 2

    @property
    def strictly_above_lower(self) -> bool:
        return self.product[0] > self.n

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "beta_g": _fmt_interval(self.beta_g),
            "beta_gbar": _fmt_interval(self.beta_gbar),
            "product_interval": _fmt_interval(self.product),
            "upper_bound": format_rational(self.upper_bound),
            "lower_status": self.lower_status,
            "upper_status": self.upper_status,
            "strictly_above_lower": self.strictly_above_lower,
        }


def product_bound_report(G: SideInfoGraph, q: int = 2) -> ProductReport:
    require_undirected(G)
    n = G.n
    Gbar = complement(G)
    bg, bgb = rate_interval(G, q), rate_interval(Gbar, q)
    lo, hi = bg[0] * bgb[0], bg[1] * bgb[1]
    ub = Fraction(n + 1, 2) ** 2
    chi_prod = chromatic_number(G) * chromatic_number(Gbar)
    assert chi_prod <= ub, "Nordhaus-Gaddum product bound violated"
    assert hi >= n, f"achieved rates multiply to {hi} < n={n}"
    assert lo <= ub, f"certified lower rates multiply to {lo} > ((n+1)/2)^2"
    if lo == hi == n:
        lower = EQUALITY
    elif lo >= n:
        lower = VERIFIED
    else:
        lower = INCONCLUSIVE
    if lo == hi == ub:
        upper = EQUALITY
    elif hi <= ub:
        upper = VERIFIED
    else:
        upper = INCONCLUSIVE
    return ProductReport(n, bg, bgb, chi_prod, lower, upper)


@dataclass(frozen=True)
class SumReport:
    n: int
    beta_g: Interval
    beta_gbar: Interval
    chi_sum: int
    lower_status: str
    upper_status: str

    @property
    def sum(self) -> Interval:
        return self.beta_g[0] + self.beta_gbar[0], self.beta_g[1] + self.beta_gbar[1]

    @property
    def permits_lower_equality(self) -> bool:
        """Whether 2*sqrt(n) lies in the sum interval (squared comparison, exact)."""
        lo, hi = self.sum
        return lo * lo <= 4 * self.n <= hi * hi

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sum_interval": _fmt_interval(self.sum),
            "lower_status": self.lower_status,
            "upper_status": self.upper_status,
            "permits_lower_equality": self.permits_lower_equality,
        }


def sum_bound_report(G: SideInfoGraph, q: int = 2) -> SumReport:
    require_undirected(G)
    n = G.n
    Gbar = complement(G)
    bg, bgb = rate_interval(G, q), rate_interval(Gbar, q)
    lo, hi = bg[0] + bgb[0], bg[1] + bgb[1]
    chi_sum = chromatic_number(G) + chromatic_number(Gbar)
    assert chi_sum <= n + 1, "Nordhaus-Gaddum sum bound violated"
    assert hi <= n + 1, f"achieved rates sum to {hi} > n+1"
    assert hi * hi >= 4 * n, f"achieved rates sum to {hi} < 2 sqrt(n)"
    if lo == hi and lo * lo == 4 * n:
        lower = EQUALITY
    elif lo * lo >= 4 * n:
        lower = VERIFIED
    else:
        lower = INCONCLUSIVE
    if lo == hi == n + 1:
        upper = EQUALITY
    elif hi <= n + 1:
        upper = VERIFIED
    else:
        upper = INCONCLUSIVE
    return SumReport(n, bg, bgb, chi_sum, lower, upper)
