"""Circular perfectness, chi_c and constructed code rate across webs W(p, q).

    python3 scripts/web_family.py --max-p 11 --max-q 4 --field 2
"""
import argparse
import csv
import sys
from dataclasses import dataclass, fields

from circix.construction import build_code
from circix.graph_params import circular_chromatic_number, is_circular_perfect
from circix.graphs import circular_clique, format_rational, web
from circix.index_codes import is_valid


@dataclass
class Config:
    max_p: int = 10
    max_q: int = 4
    field: int = 2


def run(cfg: Config):
    for q in range(2, cfg.max_q + 1):
        for p in range(2 * q, cfg.max_p + 1):
            W = web(p, q)
            chi_c, coloring = circular_chromatic_number(W)
            # W is the complement of the side-information graph K_{p/q}
            G = circular_clique(p, q)
            code = build_code(G, coloring, cfg.field)
            yield {
                "p": p, "q": q,
                "circular_perfect": is_circular_perfect(W),
                "chi_c": format_rational(chi_c),
                "rate": format_rational(code.rate()),
                "valid": is_valid(code, G),
            }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    for f in fields(Config):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    cfg = Config(**vars(ap.parse_args(argv)))
    w = csv.DictWriter(sys.stdout, ["p", "q", "circular_perfect", "chi_c", "rate", "valid"], lineterminator="\n")
    w.writeheader()
    w.writerows(run(cfg))


if __name__ == "__main__":
    main()
