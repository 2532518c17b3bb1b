"""Which sign on the K factor of the adjacent-site relation makes L(A) confluent?

Runs the overlap and distant-commutator checks for both parities and both
rewrite schedules, and reports how many instances fail for each.
"""

import argparse
from dataclasses import dataclass

from hallforge import suites
from hallforge.lattice import LatticeConfig
from hallforge.quiver import table_from_config


@dataclass
class ParityExperiment:
    config: str = "A2"
    q: int = 2
    bound: tuple = (2, 2)
    window: tuple = (-2, 2)
    total: int = 2


def run(exp: ParityExperiment):
    t = table_from_config(exp.config, q=exp.q, bound=exp.bound)
    sites = range(exp.window[0], exp.window[1] + 1)
    out = {}
    for parity in (0, 1):
        reps = suites.lattice_confluence(t, sites, exp.total, LatticeConfig(adjacent_parity=parity))
        out[parity] = {r.name: (len(r.failures), r.checked) for r in reps}
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", default="A2")
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--window", default="-1:1")
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.window.split(":"))
    bound = (2, 2, 2) if args.config == "A3" else (2, 2)
    exp = ParityExperiment(args.config, args.q, bound, (lo, hi))
    for parity, res in run(exp).items():
        label = "(-1)^m" if parity == 0 else "(-1)^(m+1)"
        for name, (bad, n) in res.items():
            print(f"K sign {label:<11} {name:<28} {bad:>5} / {n} fail")


if __name__ == "__main__":
    main()
