"""Run every verify suite over a grid of configurations and print a summary table.

    python scripts/run_all_suites.py --out results.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from hallforge.cli import RunConfig, run_suite
from hallforge.quiver import ConfigError


@dataclass
class Job:
    suite: str
    config: str = "A2"
    q: int = 2
    bound: tuple = (2, 2)
    window: tuple = (-2, 2)
    target: str | None = None


@dataclass
class Grid:
    qs: tuple = (2, 3)
    jobs: list = field(default_factory=lambda: [
        Job("hall"), Job("hopf"), Job("pairing"), Job("heis"), Job("lattice-confluence"),
        Job("splice"), Job("serre"), Job("serre", "A3", bound=(2, 2, 2)), Job("oracles"),
        Job("tilt", target="A2op"), Job("falgebra", bound=(3, 3)),
    ])


def expand(grid: Grid):
    for job in grid.jobs:
        # tilt and F(A) are only claimed over F_2
        for q in ((2,) if job.suite in ("tilt", "falgebra") else grid.qs):
            yield Job(job.suite, job.config, q, job.bound, job.window, job.target)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None)
    ap.add_argument("--only", default=None, help="comma-separated suite names")
    args = ap.parse_args()
    only = set(args.only.split(",")) if args.only else None
    rows = []
    for job in expand(Grid()):
        if only and job.suite not in only:
            continue
        rc = RunConfig(config=job.config, q=job.q, bound=job.bound, window=job.window, target=job.target)
        t0 = time.time()
        try:
            rep = run_suite(job.suite, rc)
            status, checked, failed = ("PASS" if rep["pass"] else "FAIL"), rep["summary"]["checked"], rep["summary"]["failed"]
        except ConfigError as e:
            status, checked, failed = f"CONFIG ERROR ({e})", 0, 0
        dt = time.time() - t0
        print(f"{job.suite:<20} {job.config:<4} q={job.q} bound={job.bound}  {status:<5} "
              f"{checked:>7} checks {failed:>4} failed  {dt:6.1f}s", flush=True)
        rows.append(dict(asdict(job), status=status, checked=checked, failed=failed, seconds=round(dt, 2)))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
