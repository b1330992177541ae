"""Product and sum intervals for every unlabeled graph up to a vertex bound.

    python3 scripts/ng_sweep.py --max-n 5 --field 2
"""
import argparse
import csv
import sys
from dataclasses import dataclass, fields

from circix.graphs import format_rational, nonisomorphic_graphs
from circix.ng_bounds import product_bound_report, sum_bound_report


@dataclass
class Config:
    max_n: int = 5
    field: int = 2


def run(cfg: Config):
    for n in range(1, cfg.max_n + 1):
        for G in nonisomorphic_graphs(n):
            p, s = product_bound_report(G, cfg.field), sum_bound_report(G, cfg.field)
            yield {
                "n": n,
                "edges": " ".join(f"{u}-{v}" for u, v in G.edges()),
                "product_lo": format_rational(p.product[0]),
                "product_hi": format_rational(p.product[1]),
                "sum_lo": format_rational(s.sum[0]),
                "sum_hi": format_rational(s.sum[1]),
                "product_lower": p.lower_status,
                "product_upper": p.upper_status,
                "sum_upper": s.upper_status,
                "sum_meets_2sqrt_n": s.permits_lower_equality,
            }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    for f in fields(Config):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    cfg = Config(**vars(ap.parse_args(argv)))
    rows = list(run(cfg))
    w = csv.DictWriter(sys.stdout, list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


if __name__ == "__main__":
    main()
