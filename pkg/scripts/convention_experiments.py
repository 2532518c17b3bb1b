"""Readings of the scalar conventions that the verification suites had to pin down.

For each convention the consistent reading and its alternative are both
evaluated; the printout gives failure counts for each.
"""

import argparse
from dataclasses import dataclass

from hallforge.elem import scale, sub
from hallforge.hopf import HopfConfig, RingelHopf
from hallforge.qgroup import distant_and_k_checks, literal_distant_exponent, serre_check
from hallforge.quiver import table_from_config


@dataclass
class Conventions:
    config: str = "A2"
    q: int = 2
    bound: tuple = (2, 2)
    window: tuple = (-2, 2)


def antipode_failures(t, chains_from_zero):
    B = RingelHopf(t, HopfConfig(chains_from_zero=chains_from_zero))
    bad = 0
    for a in t.objects_upto():
        x = B.obj(a)
        want = scale(B.one(), B.counit(x))
        bad += bool(sub(B.convolution(x, 0), want) or sub(B.convolution(x, 1), want))
    return bad, len(t.objects_upto())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", default="A2")
    ap.add_argument("--q", type=int, default=2)
    args = ap.parse_args()
    bound = (2, 2, 2) if args.config == "A3" else (2, 2)
    c = Conventions(args.config, args.q, bound)
    t = table_from_config(c.config, q=c.q, bound=c.bound)
    sites = range(c.window[0], c.window[1] + 1)

    for flag in (True, False):
        bad, n = antipode_failures(t, flag)
        print(f"antipode chains from 0 = {flag!s:<5}: {bad}/{n} objects fail the convolution identity")

    for param in ("v", "q"):
        r = distant_and_k_checks(t, sites, param=param)
        print(f"K / distant exponents in {param}: {len(r.failures)}/{r.checked} fail")
    r = distant_and_k_checks(t, sites, distant_rule=literal_distant_exponent)
    print(f"distant formula used for both site orders: {len(r.failures)}/{r.checked} fail")

    for signed in (True, False):
        r = serre_check(t, range(-1, 2), signed=signed)
        print(f"Serre with {'alternating' if signed else 'constant'} signs: {len(r.failures)}/{r.checked} fail")


if __name__ == "__main__":
    main()
