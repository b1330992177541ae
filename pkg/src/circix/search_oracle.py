"""Exhaustive search for optimal scalar linear codes, and the bound sandwich.

Validity only depends on the row space of the encoding matrix (the
span conditions are unchanged by row operations), so each l-dimensional row
space is visited once through its reduced row echelon form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .confusion_oracle import MAX_VERTICES, beta_lower_bound
from .construction import certified_code
from .gf_linalg import GFMatrix, PrimeField
from .graph_params import MAX_CIRCULAR_PERFECT_N, chromatic_number, clique_number, is_circular_perfect
from .graphs import SideInfoGraph, complement, require_undirected
from .index_codes import LinearIndexCode, is_valid
from .limits import LimitExceeded, check_limit

MAX_N = 6
ALLOWED_Q = (2, 3)


def rref_matrices(n: int, l: int, q: int) -> Iterator[tuple[int, ...]]:
    """Every l x n matrix over F_q in reduced row echelon form with rank l,
    flattened row-major."""
    for pivots in itertools.combinations(range(n), l):
        pivot_set = set(pivots)
        free = [(r, c) for r in range(l) for c in range(pivots[r] + 1, n) if c not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            m = [0] * (l * n)
            for r, c in enumerate(pivots):
                m[r * n + c] = 1
            for (r, c), val in zip(free, values):
                m[r * n + c] = val
            yield tuple(m)


def _valid_scalar(flat: tuple[int, ...], G: SideInfoGraph, field: PrimeField, l: int) -> LinearIndexCode | None:
    code = LinearIndexCode(field, G.n, 1, l, GFMatrix(field, l, G.n, flat))
    return code if is_valid(code, G) else None


def beta_scalar_exhaustive(G: SideInfoGraph, q: int, l_max: int | None = None) -> tuple[int, LinearIndexCode] | None:
    """Minimum length l <= l_max of a valid scalar linear code for G over F_q,
    with the lexicographically least RREF witness of that length."""
    if l_max is None:
        l_max = G.n
    check_limit("n", G.n, MAX_N)
    if q not in ALLOWED_Q:
        check_limit("q", q, max(ALLOWED_Q))
    if l_max > G.n:
        raise LimitExceeded(f"l_max={l_max} exceeds n={G.n}")
    field = PrimeField(q)
    for l in range(1, l_max + 1):
        best = None
        for flat in rref_matrices(G.n, l, q):
            if best is not None and flat >= best:
                continue
            if _valid_scalar(flat, G, field, l) is not None:
                best = flat
        if best is not None:
            return l, LinearIndexCode(field, G.n, 1, l, GFMatrix(field, l, G.n, best))
    return None


def beta_scalar_bruteforce(G: SideInfoGraph, q: int, l_max: int) -> int | None:
    """Same minimum as above but over all q^(l n) matrices; a cross-check for tiny cases."""
    field = PrimeField(q)
    for l in range(1, l_max + 1):
        for flat in itertools.product(range(q), repeat=l * G.n):
            if _valid_scalar(flat, G, field, l) is not None:
                return l
    return None


@dataclass
class SandwichReport:
    n: int
    q: int
    omega_bar: int
    omega_c_bar: Fraction
    chi_c_bar: Fraction
    chi_bar: int
    achieved_rate: Fraction
    confusion_bound: Fraction | float | None = None
    beta_sl: int | None = None
    circular_perfect_bar: bool | None = None
    beta_certified: Fraction | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        from .graphs import format_rational

        def fmt(x):
            if x is None:
                return None
            if isinstance(x, Fraction):
                return format_rational(x)
            return x

        return {
            "n": self.n,
            "q": self.q,
            "omega_bar": self.omega_bar,
            "omega_c_bar": fmt(self.omega_c_bar),
            "chi_c_bar": fmt(self.chi_c_bar),
            "chi_bar": self.chi_bar,
            "achieved_rate": fmt(self.achieved_rate),
            "confusion_bound": fmt(self.confusion_bound),
            "beta_sl": self.beta_sl,
            "circular_perfect_bar": self.circular_perfect_bar,
            "beta_certified": fmt(self.beta_certified),
            "notes": list(self.notes),
        }


def sandwich_report(G: SideInfoGraph, q: int = 2) -> SandwichReport:
    """Lower and upper bounds on the broadcast rate of an undirected G.

    Chain: omega(Gbar) <= omega_c(Gbar) <= beta <= constructed rate
    = chi_c(Gbar) <= chi(Gbar). The broadcast rate is pinned down when the
    constructed rate meets omega_c(Gbar).
    """
    require_undirected(G)
    Gbar = complement(G)
    cert = certified_code(G, q)
    rep = SandwichReport(
        n=G.n,
        q=q,
        omega_bar=clique_number(Gbar),
        omega_c_bar=cert.omega_c,
        chi_c_bar=cert.chi_c,
        chi_bar=chromatic_number(Gbar),
        achieved_rate=cert.code.rate(),
    )
    if q ** G.n <= MAX_VERTICES:
        rep.confusion_bound = beta_lower_bound(G, 1, q)
    else:
        rep.notes.append("confusion bound skipped: q^n too large")
    if G.n <= MAX_N and q in ALLOWED_Q:
        found = beta_scalar_exhaustive(G, q)
        rep.beta_sl = found[0] if found else None
    else:
        rep.notes.append("beta_sl skipped: outside exhaustive-search limits")
    if G.n <= MAX_CIRCULAR_PERFECT_N:
        rep.circular_perfect_bar = is_circular_perfect(Gbar)

    assert rep.omega_bar <= rep.omega_c_bar <= rep.achieved_rate <= rep.chi_bar, rep
    if rep.beta_sl is not None:
        assert rep.omega_c_bar <= rep.beta_sl <= rep.chi_bar, rep
        # q^l >= omega(Gamma_1) for any scalar code of length l
        if rep.confusion_bound is not None:
            assert rep.confusion_bound <= rep.beta_sl, rep
    if rep.omega_c_bar == rep.achieved_rate:
        rep.beta_certified = rep.achieved_rate
    if rep.circular_perfect_bar:
        assert rep.beta_certified is not None, "circular perfect complement must certify"
    return rep
