"""DOT drawing of K_{9/3} with its 3-colouring, plus the code it yields for web(9,3).

    python3 scripts/k93_dot.py --out k93.dot
"""
import argparse
from dataclasses import dataclass
from pathlib import Path

from circix.construction import certified_code
from circix.graph_params import circular_chromatic_number
from circix.graphs import circular_clique, format_rational, web

PALETTE = ("tomato", "skyblue", "palegreen", "gold", "plum", "orange", "lightgrey", "pink", "khaki")


@dataclass
class Config:
    k: int = 9
    d: int = 3
    out: str = ""


def dot_with_colors(cfg: Config) -> str:
    K = circular_clique(cfg.k, cfg.d)
    _, coloring = circular_chromatic_number(K)
    lines = ["graph G {", "  layout=circo;"]
    for v in range(K.n):
        lines.append(f'  {v} [style=filled, fillcolor={PALETTE[coloring.assignment[v] % len(PALETTE)]}];')
    lines += [f"  {u} -- {v};" for u, v in K.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--d", type=int, default=Config.d)
    ap.add_argument("--out", default=Config.out)
    cfg = Config(**vars(ap.parse_args(argv)))
    text = dot_with_colors(cfg)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        print(text, end="")
    cert = certified_code(web(cfg.k, cfg.d), 2)
    print(f"# web({cfg.k},{cfg.d}): code rate {format_rational(cert.code.rate())}, "
          f"lower bound {format_rational(cert.omega_c)}")


if __name__ == "__main__":
    main()
