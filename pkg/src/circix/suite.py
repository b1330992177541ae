"""The full experiment battery behind ``circix suite``.

Each check produces one row per instance checked, plus an overall pass flag. Rows are sorted before writing so the CSV is byte-identical
for a given configuration.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .confusion_oracle import beta_lower_bound, max_clique_confusion
from .construction import build_code, certified_code
from .gf_linalg import GFMatrix, PrimeField, in_span
from .graph_params import (
    circular_chromatic_number, circular_clique_number,
    is_circular_perfect, is_perfect, params,
)
from .graphs import (
    SideInfoGraph, circular_clique, complement, complete, cycle, edgeless, format_rational,
    induced_subgraph, join_at_vertex, nonisomorphic_graphs, random_graph, web,
)
from .index_codes import LinearIndexCode, can_decode_rowspace, decode, encode, is_valid
from .ng_bounds import (
    good_code, product_bound_report, random_valid_code, sum_bound_report, kron_avoids_span,
    tensor_rank_check,
)
from .search_oracle import beta_scalar_exhaustive


@dataclass
class SuiteConfig:
    max_n: int = 5
    q: int = 2
    seed: int = 0
    confusion_pairs: int = 30
    tensor_graphs: int = 50
    kron_trials: int = 200
    roundtrips: int = 100
    crosscheck_pairs: int = 100


@dataclass(order=True)
class Row:
    check: str
    graph: str
    q: int
    t: int
    quantity: str
    value: str
    expected: str
    passed: bool


@dataclass
class CheckResult:
    name: str
    rows: list[Row] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and bool(self.rows)

    def add(self, graph: str, q: int, t: int, quantity: str, value, expected, passed: bool) -> None:
        self.rows.append(Row(self.name, graph, q, t, quantity, _s(value), _s(expected), bool(passed)))


def _s(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    return str(x)


def _random_message(rng: random.Random, n: int, t: int, q: int) -> list[list[int]]:
    return [[rng.randrange(q) for _ in range(t)] for _ in range(n)]


def roundtrip_ok(code: LinearIndexCode, G: SideInfoGraph, rng: random.Random, trials: int) -> bool:
    q = code.field.q
    for _ in range(trials):
        x = _random_message(rng, code.n, code.t, q)
        c = encode(code, x)
        for i in range(G.n):
            side = {u: x[u] for u in G.side_info[i]}
            if list(decode(code, G, i, c, side)) != x[i]:
                return False
    return True


def check_c5(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("c5_optimality")
    Gbar = cycle(5)
    G = complement(Gbar)
    rng = random.Random(cfg.seed)
    chi_c, coloring = circular_chromatic_number(Gbar)
    omega_c = circular_clique_number(Gbar)
    res.add("co-C5", 0, 0, "omega_c(Gbar)", omega_c, Fraction(5, 2), omega_c == Fraction(5, 2))
    res.add("co-C5", 0, 0, "chi_c(Gbar)", chi_c, Fraction(5, 2), chi_c == Fraction(5, 2))
    for q in (2, 3):
        code = build_code(G, coloring, q)
        res.add("co-C5", q, code.t, "shape(t,l)", (code.t, code.l), (2, 5), (code.t, code.l) == (2, 5))
        res.add("co-C5", q, code.t, "valid", is_valid(code, G), True, is_valid(code, G))
        ok = roundtrip_ok(code, G, rng, cfg.roundtrips)
        res.add("co-C5", q, code.t, "roundtrips", ok, True, ok)
        res.add("co-C5", q, code.t, "certified_beta", code.rate(), omega_c, code.rate() == omega_c)
    return res


def check_webs(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("web_family")
    for p, qq in [(5, 2), (7, 2), (9, 3), (8, 3)]:
        W = web(p, qq)
        name = f"web({p},{qq})"
        predicted = qq == 2 or p == 2 * qq or p == 2 * qq + 1 or (qq == 3 and p % 3 == 0)
        cp = is_circular_perfect(W)
        res.add(name, 0, 0, "circular_perfect", cp, predicted, cp == predicted)
        if cp:
            expected = Fraction(p, p // qq)
            chi_c, coloring = circular_chromatic_number(W)
            res.add(name, 0, 0, "chi_c", chi_c, expected, chi_c == expected)
            code = build_code(circular_clique(p, qq), coloring, cfg.q)
            ok = is_valid(code, circular_clique(p, qq)) and code.rate() == expected
            res.add(name, cfg.q, code.t, "code_rate", code.rate(), expected, ok)
    return res


def check_odd_cycles(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("odd_cycles")
    for length in (7, 9):
        d = (length - 1) // 2
        expected = 2 + Fraction(1, d)
        Gbar = cycle(length)
        G = complement(Gbar)
        cert = certified_code(G, cfg.q)
        name = f"co-C{length}"
        res.add(name, 0, 0, "chi_c(Gbar)", cert.chi_c, expected, cert.chi_c == expected)
        res.add(name, 0, 0, "omega_c(Gbar)", cert.omega_c, expected, cert.omega_c == expected)
        ok = is_valid(cert.code, G) and cert.code.rate() == expected
        res.add(name, cfg.q, cert.code.t, "code_rate", cert.code.rate(), expected, ok)
    return res


def _graph_name(G: SideInfoGraph) -> str:
    return f"n{G.n}:" + ",".join(f"{u}-{v}" for u, v in G.edges())


def check_sandwich(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("sandwich")
    for n in range(1, cfg.max_n + 1):
        for G in nonisomorphic_graphs(n):
            Gbar = complement(G)
            name = _graph_name(G)
            pr = params(Gbar)
            found = beta_scalar_exhaustive(G, cfg.q)
            beta_sl = found[0]
            cert = certified_code(G, cfg.q)
            chain = pr.omega <= pr.omega_c <= beta_sl and cert.code.rate() <= pr.chi
            res.add(name, cfg.q, 1, "omega<=omega_c<=beta_sl;rate<=chi",
                    f"{pr.omega}<={format_rational(pr.omega_c)}<={beta_sl};{format_rational(cert.code.rate())}<={pr.chi}",
                    True, chain)
            floors = pr.omega == pr.omega_c.numerator // pr.omega_c.denominator and pr.chi == -(-pr.chi_c.numerator // pr.chi_c.denominator)
            res.add(name, 0, 0, "floor/ceil", floors, True, floors)
            perfect = is_perfect(Gbar)
            impl = (not perfect) or is_circular_perfect(Gbar)
            res.add(name, 0, 0, "perfect=>circular_perfect", impl, True, impl)
    return res


def check_confusion(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("confusion_monotonicity")
    rng = random.Random(cfg.seed)
    for k in range(cfg.confusion_pairs):
        t = rng.choice((1, 2))
        n = rng.randint(2, min(cfg.max_n, 10 // t))
        G = random_graph(n, rng.random(), seed=rng.randrange(1 << 30), directed=rng.random() < 0.5)
        S = sorted(rng.sample(range(n), rng.randint(1, n)))
        H = induced_subgraph(G, S)
        wg, wh = max_clique_confusion(G, t, 2), max_clique_confusion(H, t, 2)
        res.add(f"pair{k:02d}:{_graph_name(G)}|{S}", 2, t, "omega(Gamma_t(H))<=omega(Gamma_t(G))",
                f"{wh}<={wg}", True, wh <= wg)
    for n in range(1, cfg.max_n + 1):
        b = beta_lower_bound(edgeless(n), 1, 2)
        res.add(f"edgeless({n})", 2, 1, "beta_lower_bound", b, n, b == n)
    return res


def check_tensor(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("tensor_rank")
    rng = random.Random(cfg.seed)
    for k in range(cfg.tensor_graphs):
        n = rng.randint(2, cfg.max_n)
        q = rng.choice((2, 3))
        t = rng.choice((1, 2))
        directed = k % 2 == 1
        G = random_graph(n, rng.random(), seed=rng.randrange(1 << 30), directed=directed)
        Gbar = complement(G)
        if t == 1:
            B, C = good_code(G, q), good_code(Gbar, q)
        else:
            B, C = random_valid_code(G, q, t, rng), random_valid_code(Gbar, q, t, rng)
        rep = tensor_rank_check(B, C, G)
        res.add(f"g{k:02d}:{'dir' if directed else 'und'}:{_graph_name(G)}", q, rep.t, "rank(F)=n*t^2",
                f"{rep.rank}/{rep.n * rep.t ** 2}", True, rep.full_rank and rep.product_ok)
    fails = 0
    for _ in range(cfg.kron_trials):
        if not _kron_trial(rng):
            fails += 1
    res.add("kron_nonmembership", 0, 0, "nonmembership_failures", fails, 0, fails == 0)
    return res


def random_kron_instance(rng: random.Random):
    """Random (v, w, A1, A2, D, E, q) meeting the preconditions of kron_avoids_span."""
    q = rng.choice((2, 3, 5))
    dim = rng.randint(2, 4)

    def vec():
        return tuple(rng.randrange(q) for _ in range(dim))

    def nonzero():
        while True:
            x = vec()
            if any(x):
                return x

    while True:
        v, w = nonzero(), nonzero()
        A1 = [vec() for _ in range(rng.randint(0, dim - 1))]
        A2 = [vec() for _ in range(rng.randint(0, dim - 1))]
        if not in_span(v, A1, q) and not in_span(w, A2, q):
            break
    D = [vec() for _ in range(rng.randint(1, dim))]
    E = [vec() for _ in range(rng.randint(1, dim))]
    return v, w, A1, A2, D, E, q


def _kron_trial(rng: random.Random) -> bool:
    return kron_avoids_span(*random_kron_instance(rng))


def check_ng_witnesses(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("ng_witnesses")
    for n in range(1, 6):
        rep = product_bound_report(complete(n), cfg.q)
        lo, hi = rep.product
        res.add(f"K{n}", cfg.q, 0, "product", f"[{_s(lo)},{_s(hi)}]", n, lo == hi == n)
    J = join_at_vertex(complete(3), edgeless(3))
    p, s = product_bound_report(J, cfg.q), sum_bound_report(J, cfg.q)
    ok_rates = p.beta_g == (3, 3) and p.beta_gbar == (3, 3)
    res.add("join(K3,E3)", cfg.q, 0, "beta_vl both ways", f"{p.beta_g},{p.beta_gbar}", "(3,3)", ok_rates)
    res.add("join(K3,E3)", cfg.q, 0, "product", f"[{_s(p.product[0])},{_s(p.product[1])}]", 9,
            p.product == (9, 9) and p.upper_bound == 9)
    res.add("join(K3,E3)", cfg.q, 0, "sum", f"[{_s(s.sum[0])},{_s(s.sum[1])}]", 6, s.sum == (6, 6))
    single = SideInfoGraph.from_edges(3, [(0, 1)])
    ps = product_bound_report(single, cfg.q)
    res.add("single-edge-3", cfg.q, 0, "product>n", _s(ps.product[0]), ">3", ps.product[0] > 3)
    return res


def check_oracles(cfg: SuiteConfig) -> CheckResult:
    res = CheckResult("oracle_crosscheck")
    beta = beta_scalar_exhaustive(cycle(5), 2)[0]
    res.add("C5", 2, 1, "beta_sl", beta, 3, beta == 3)
    rng = random.Random(cfg.seed)
    agree = 0
    bound_ok = True
    for _ in range(cfg.crosscheck_pairs):
        n = rng.randint(1, min(cfg.max_n, 5))
        q = rng.choice((2, 3))
        t = rng.choice((1, 2)) if q ** (n * 2) <= 1024 else 1
        G = random_graph(n, rng.random(), seed=rng.randrange(1 << 30), directed=rng.random() < 0.5)
        l = rng.randint(0, n * t)
        code = LinearIndexCode(PrimeField(q), n, t, l, GFMatrix(PrimeField(q), l, n * t,
                                                                  tuple(rng.randrange(q) for _ in range(l * n * t))))
        v = is_valid(code, G)
        r = all(can_decode_rowspace(code, G, i) for i in range(n))
        agree += v == r
        if v and q ** (n * t) <= 4096:
            bound_ok &= q ** l >= max_clique_confusion(G, t, q)
    res.add("random", 0, 0, "is_valid==rowspace", f"{agree}/{cfg.crosscheck_pairs}",
            f"{cfg.crosscheck_pairs}/{cfg.crosscheck_pairs}", agree == cfg.crosscheck_pairs)
    res.add("random", 0, 0, "q^l>=omega(Gamma_t)", bound_ok, True, bound_ok)
    return res


CHECKS: list[Callable[[SuiteConfig], CheckResult]] = [
    check_c5, check_webs, check_odd_cycles, check_sandwich, check_confusion,
    check_tensor, check_ng_witnesses, check_oracles,
]


def run_suite(cfg: SuiteConfig) -> list[CheckResult]:
    return [check(cfg) for check in CHECKS]


def to_csv(results: list[CheckResult]) -> str:
    rows = sorted(r for res in results for r in res.rows)
    buf = io.StringIO()
    names = list(Row.__dataclass_fields__)
    writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(asdict(r))
    return buf.getvalue()


def summary(results: list[CheckResult], cfg: SuiteConfig) -> dict:
    return {
        "config": asdict(cfg),
        "checks": {res.name: res.passed for res in results},
        "all_passed": all(res.passed for res in results),
    }
