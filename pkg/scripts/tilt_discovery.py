"""Search for tilt tables between two quiver orientations and check each one.

    python scripts/tilt_discovery.py --source A2 --target A2op
"""

import argparse
from dataclasses import dataclass

from hallforge.derived import corrupt_shift, corrupt_tilt, discover_tilt, hom_ext_patterns_ok, verify_tilt_heis
from hallforge.lattice import lattice_tilt_hom, split_factorization_check
from hallforge.quiver import table_from_config


@dataclass
class TiltSearch:
    source: str = "A2"
    target: str = "A2op"
    q: int = 2
    bound: tuple = (2, 2)
    shifts: tuple = (0, 1)
    window: tuple = (-2, 2)

    @property
    def target_bound(self):
        # images of products of shifted generators need room
        return tuple(2 * b for b in self.bound)


def describe(F) -> str:
    s, t = F.source, F.target
    return ", ".join(f"{s.name(x)} -> {t.name(y)}[{k}]" for x, (y, k) in sorted(F.mapping.items()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--source", default="A2")
    ap.add_argument("--target", default="A2op")
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--no-lattice", action="store_true", help="skip the (slower) lattice check")
    args = ap.parse_args()
    cfg = TiltSearch(args.source, args.target, args.q)
    src = table_from_config(cfg.source, q=cfg.q, bound=cfg.bound)
    tgt = table_from_config(cfg.target, q=cfg.q, bound=cfg.target_bound)
    sites = range(cfg.window[0], cfg.window[1] + 1)
    found = discover_tilt(src, tgt, cfg.shifts)
    print(f"{len(found)} tilt tables with shifts {cfg.shifts}")
    for i, F in enumerate(found):
        heis = verify_tilt_heis(F)
        line = f"[{i}] {describe(F)}\n    patterns {hom_ext_patterns_ok(F)}  heis {heis.ok} ({heis.checked})"
        line += f"  split {split_factorization_check(F).ok}"
        if not args.no_lattice:
            lat = lattice_tilt_hom(F, sites)
            line += f"  lattice {lat.ok} ({lat.checked})"
        bad = [not verify_tilt_heis(G).ok for G in (corrupt_tilt(F), corrupt_shift(F))]
        line += f"  corrupted tables rejected {sum(bad)}/2"
        print(line)


if __name__ == "__main__":
    main()
