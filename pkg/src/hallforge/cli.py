"""Command line front end.

    hallforge table build|info   --config A2 [--q 3] [--bound 2,2]
    hallforge eval --algebra lattice --expr "Z{1}[S1]*Z{0}[S1]"
    hallforge verify --suite serre --config A3 --bound 2,2,2 --window -1:1
    hallforge tilt discover --config A2 --target A2op [--out tilt.json]
    hallforge tilt check --tilt tilt.json

Exit codes: 0 everything passed, 1 some check failed, 2 bad input/config.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import suites
from .coeff import render_coeff
from .derived import TiltTable, corrupt_shift, corrupt_tilt, discover_tilt
from .expr import ExprError, Evaluator, parse_expr
from .heis import HeisDouble, heis_to_json
from .hopf import RingelHopf, belem_to_json
from .lattice import FAlgebra, LatticeAlgebra, f_to_json, lattice_to_json
from .oracles import oracle_suite
from .quiver import BudgetExceeded, ConfigError, DEFAULT_BUDGET, OutOfTable, load_config, table_from_config

log = logging.getLogger("hallforge")

SUITES = ("hall", "hopf", "pairing", "heis", "lattice-confluence", "splice", "serre",
          "tilt", "falgebra", "oracles")

SCHEMA_PATH = Path(__file__).parent / "data" / "suite_report.schema.json"


@dataclass
class RunConfig:
    config: object = "A2"
    q: int | None = None
    bound: tuple | None = None
    window: tuple = (-2, 2)
    budget: int = DEFAULT_BUDGET
    gamma_budget: int = 2**20
    target: object | None = None
    target_bound: tuple | None = None
    tilt: str | None = None
    corrupt: str | None = None
    shifts: tuple = (0, 1)
    extra: dict = field(default_factory=dict)

    @property
    def sites(self) -> range:
        return range(self.window[0], self.window[1] + 1)


def parse_bound(text: str) -> tuple:
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"bad bound {text!r}") from None
    if any(x < 0 for x in out):
        raise ConfigError(f"bad bound {text!r}")
    return out


def parse_window(text: str) -> tuple:
    lo, sep, hi = text.partition(":")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ConfigError(f"bad window {text!r} (want lo:hi)") from None
    if not sep or lo > hi:
        raise ConfigError(f"bad window {text!r} (want lo:hi)")
    return lo, hi


def _table(cfg, q, bound, budget):
    return table_from_config(cfg, q=q, bound=bound, budget=budget)


# ---- suite reports ------------------------------------------------------------------

def report_dict(suite: str, params: dict, reports, wall: float, notes=None) -> dict:
    records = []
    checks = {}
    for r in reports:
        for inst in r.passed:
            records.append({"check": r.name, "instance": inst, "pass": True})
        for inst in r.failures:
            records.append({"check": r.name, "instance": inst, "pass": False})
        for inst in r.skipped:
            records.append({"check": r.name, "instance": inst, "pass": False, "skipped": True})
        checks[r.name] = {"checked": r.checked, "failed": len(r.failures),
                          "skipped": len(r.skipped), "excluded": len(r.excluded), "pass": r.ok}
    ok = all(r.ok for r in reports)
    return {
        "suite": suite,
        "parameters": params,
        "records": records,
        "summary": {
            "checked": sum(r.checked for r in reports),
            "failed": sum(len(r.failures) for r in reports),
            "skipped": sum(len(r.skipped) for r in reports),
            "excluded": sum(len(r.excluded) for r in reports),
            "checks": checks,
        },
        "notes": notes or {},
        "pass": ok,
        "wall_time": round(wall, 3),
    }


def _tilt_tables(rc: RunConfig, src):
    if rc.target is None and rc.tilt is None:
        raise ConfigError("tilt suite needs --target or --tilt")
    data = None
    target = rc.target
    if rc.tilt is not None:
        try:
            data = json.loads(Path(rc.tilt).read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"tilt file: {e}") from None
        target = target if target is not None else data.get("target")
    tb = rc.target_bound or tuple(2 * b for b in src.bound)
    tgt = _table(target, src.ground.q, tb, rc.budget)
    if data is not None:
        try:
            return [TiltTable.from_json(data, src, tgt)]
        except (KeyError, ValueError) as e:
            raise ConfigError(f"tilt file: {e}") from None
    found = discover_tilt(src, tgt, rc.shifts)
    if not found:
        raise ConfigError("no tilt between the two configs with the given shifts")
    return found


def run_suite(name: str, rc: RunConfig) -> dict:
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}")
    t0 = time.time()
    t = _table(rc.config, rc.q, rc.bound, rc.budget)
    params = {"quiver": t.quiver.to_json(), "q": t.ground.q, "bound": list(t.bound),
              "window": list(rc.window)}
    notes = {}
    try:
        if name == "hall":
            reps = suites.hall_associativity(t)
        elif name == "hopf":
            reps = suites.hall_associativity(t) + suites.hopf_suite(t)
        elif name == "pairing":
            reps = suites.pairing_suite(t)
        elif name == "heis":
            reps = suites.heis_suite(t)
        elif name == "lattice-confluence":
            reps = (suites.lattice_confluence(t, rc.sites) + suites.lattice_associativity(t, rc.sites)
                    + suites.shift_suite(t, rc.sites))
        elif name == "splice":
            reps = suites.splice_suite(t)
        elif name == "serre":
            from .qgroup import serre_sign

            notes["serre_signed"] = serre_sign(t)
            reps = suites.qgroup_suite(t, rc.sites)
        elif name == "tilt":
            reps = []
            tilts = _tilt_tables(rc, t)
            notes["tilts"] = []
            for F in tilts:
                if rc.corrupt == "swap":
                    F = corrupt_tilt(F)
                elif rc.corrupt == "shift":
                    F = corrupt_shift(F)
                notes["tilts"].append(F.to_json())
                reps += suites.tilt_suite(F, rc.sites)
            params["target_bound"] = list(tilts[0].target.bound)
        elif name == "falgebra":
            reps = suites.falgebra_suite(t, budget=rc.gamma_budget)
        else:
            reps = oracle_suite(t)
    except OutOfTable as e:
        raise ConfigError(f"bound {t.bound} too small for suite {name}: {e}") from None
    except BudgetExceeded as e:
        raise ConfigError(str(e)) from None
    return report_dict(name, params, reps, time.time() - t0, notes)


def _print_report(rep: dict, out) -> None:
    s = rep["summary"]
    for name, c in s["checks"].items():
        status = "PASS" if c["pass"] else "FAIL"
        extra = f", {c['skipped']} skipped" if c["skipped"] else ""
        extra += f", {c['excluded']} over budget" if c["excluded"] else ""
        print(f"{status} {name}: {c['checked']} checked, {c['failed']} failed{extra}", file=out)
    for r in rep["records"]:
        if not r["pass"]:
            print(f"  failing {r['check']}: {json.dumps(r['instance'])}", file=out)
    for k, v in rep["notes"].items():
        print(f"note {k}: {json.dumps(v)}", file=out)
    verdict = "PASS" if rep["pass"] else "FAIL"
    print(f"{verdict} suite {rep['suite']} ({s['checked']} checks, {rep['wall_time']}s)", file=out)


# ---- eval ---------------------------------------------------------------------------

def eval_expression(text: str, algebra: str, table) -> list:
    if algebra == "B":
        alg, dump = RingelHopf(table), belem_to_json
    elif algebra == "heis":
        alg, dump = HeisDouble(RingelHopf(table)), heis_to_json
    elif algebra == "lattice":
        alg, dump = LatticeAlgebra(table), lattice_to_json
    elif algebra == "f":
        alg, dump = FAlgebra(table), f_to_json
    else:
        raise ConfigError(f"unknown algebra {algebra!r}")
    ast = parse_expr(text, algebra, table)
    return dump(table, Evaluator(alg, algebra).eval(ast))


def _coeff_text(c: dict, table) -> str:
    from .coeff import coeff_from_json

    return render_coeff(coeff_from_json(c, table.ground))


# ---- argument parsing --------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", default="A2", help="config path or builtin name (A2, A2op, A3)")
    p.add_argument("--q", type=int, default=None, help="field size override")
    p.add_argument("--bound", default=None, help="dimension bound, comma separated")
    p.add_argument("--window", default=None, help="site window lo:hi (inclusive)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="raw representation budget")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hallforge", description=__doc__.split("\n")[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    pt = sub.add_parser("table", help="build or describe a category table")
    pt.add_argument("action", choices=("build", "info"))
    pt.add_argument("--out", default=None, help="write the table as JSON")
    _common(pt)

    pe = sub.add_parser("eval", help="evaluate an expression to normal form")
    pe.add_argument("--algebra", required=True, choices=("B", "heis", "lattice", "f"))
    pe.add_argument("--expr", required=True)
    _common(pe)

    pv = sub.add_parser("verify", help="run an invariant suite")
    pv.add_argument("--suite", required=True, choices=SUITES)
    pv.add_argument("--target", default=None, help="target config for the tilt suite")
    pv.add_argument("--target-bound", default=None)
    pv.add_argument("--tilt", default=None, help="tilt table JSON for the tilt suite")
    pv.add_argument("--corrupt", choices=("swap", "shift"), default=None,
                    help="negative control: corrupt each tilt table before checking")
    pv.add_argument("--gamma-budget", type=int, default=2**20)
    pv.add_argument("--report", default=None, help="also write the JSON report here")
    _common(pv)

    pd = sub.add_parser("tilt", help="discover or check tilt tables")
    pd.add_argument("action", choices=("discover", "check"))
    pd.add_argument("--target", default=None)
    pd.add_argument("--target-bound", default=None)
    pd.add_argument("--tilt", default=None)
    pd.add_argument("--shifts", default="0,1")
    pd.add_argument("--out", default=None)
    _common(pd)
    return ap


def _run_config(args) -> RunConfig:
    cfg = load_config(args.config)
    window = parse_window(args.window) if args.window else tuple(cfg.get("window", (-2, 2)))
    rc = RunConfig(config=cfg, q=args.q, bound=parse_bound(args.bound) if args.bound else None,
                   window=window, budget=args.budget)
    if getattr(args, "target", None):
        rc.target = load_config(args.target)
    if getattr(args, "target_bound", None):
        rc.target_bound = parse_bound(args.target_bound)
    rc.tilt = getattr(args, "tilt", None)
    rc.corrupt = getattr(args, "corrupt", None)
    rc.gamma_budget = getattr(args, "gamma_budget", rc.gamma_budget)
    if getattr(args, "shifts", None):
        rc.shifts = tuple(int(x) for x in args.shifts.split(","))
    return rc


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    out = sys.stdout
    try:
        rc = _run_config(args)
        if args.cmd == "table":
            t = _table(rc.config, rc.q, rc.bound, rc.budget)
            if args.out:
                Path(args.out).write_text(json.dumps(t.to_json()))
            info = t.info()
            if args.action == "info":
                info["objects"] = [{"name": t.name(c), "dim": list(t.dim(c)), "aut": t.aut_count(c),
                                    "end_dim": t.end_dim(c)} for c in range(len(t.classes))]
            if args.json:
                print(json.dumps(info, indent=1), file=out)
            else:
                for k, v in info.items():
                    if k != "objects":
                        print(f"{k}: {v}", file=out)
                for o in info.get("objects", []):
                    print(f"  {o['name']:<14} dim={o['dim']} |Aut|={o['aut']} dim End={o['end_dim']}", file=out)
            return 0
        if args.cmd == "eval":
            t = _table(rc.config, rc.q, rc.bound, rc.budget)
            try:
                rows = eval_expression(args.expr, args.algebra, t)
            except OutOfTable as e:
                print(f"error: {e}", file=sys.stderr)
                return 1
            if args.json:
                print(json.dumps(rows, indent=1), file=out)
            else:
                if not rows:
                    print("0", file=out)
                for r in rows:
                    c = _coeff_text(r.pop("coeff"), t)
                    print(f"{c:>12}  {json.dumps(r)}", file=out)
            return 0
        if args.cmd == "verify":
            rep = run_suite(args.suite, rc)
            if args.report:
                Path(args.report).write_text(json.dumps(rep, indent=1))
            if args.json:
                print(json.dumps(rep, indent=1), file=out)
            else:
                _print_report(rep, out)
            return 0 if rep["pass"] else 1
        if args.cmd == "tilt":
            if args.action == "check":
                rep = run_suite("tilt", rc)
                if args.json:
                    print(json.dumps(rep, indent=1), file=out)
                else:
                    _print_report(rep, out)
                return 0 if rep["pass"] else 1
            src = _table(rc.config, rc.q, rc.bound, rc.budget)
            found = _tilt_tables(rc, src)
            src_ref = args.config
            tgt_ref = args.target
            rows = [F.to_json(src_ref, tgt_ref) for F in found]
            if args.out:
                Path(args.out).write_text(json.dumps(rows[0], indent=1))
            if args.json:
                print(json.dumps(rows, indent=1), file=out)
            else:
                for i, r in enumerate(rows):
                    body = ", ".join(f"{m['from']} -> {m['to']}[{m['shift']}]" for m in r["map"])
                    print(f"tilt {i}: {body}", file=out)
            return 0
    except (ConfigError, ExprError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
