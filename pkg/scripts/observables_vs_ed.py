"""Series magnetizations and correlation against exact ground-state expectation values."""
import argparse

import numpy as np

from spinchain import ChainSpec, FieldParams
from spinchain.observables import observables
from spinchain.oracle import build_lambda, exchange_expectation, ground_state, spin_expectation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--hx", type=float, default=1.0)
    ap.add_argument("--hy", type=float, default=0.3)
    ap.add_argument("--hz", type=float, default=1.0)
    ap.add_argument("--z", type=float, nargs="+", default=[0.4, 0.2, 0.1, 0.05, 0.025])
    args = ap.parse_args()

    chain = ChainSpec(args.n)
    base = FieldParams(args.hx, args.hy, args.hz)
    keys = ("mx", "my", "mz", "corr")
    errs = {k: [] for k in keys}
    print(f"{'z':>6} " + " ".join(f"{'d' + k:>11}" for k in keys))
    for z in args.z:
        p = base.with_J(z * base.h / 2)
        _, v = ground_state(build_lambda(chain, p))
        exact = {a: 2 / args.n * spin_expectation(a[1], v, chain) for a in keys[:3]}
        exact["corr"] = 4 / args.n * exchange_expectation(v, chain)
        ob = observables(p)
        for k in keys:
            errs[k].append(abs(getattr(ob, k) - exact[k]))
        print(f"{z:6.3f} " + " ".join(f"{errs[k][-1]:11.3e}" for k in keys))
    x = np.log(args.z)
    print("slopes: " + ", ".join(f"{k} {np.polyfit(x, np.log(errs[k]), 1)[0]:.2f}" for k in keys))


if __name__ == "__main__":
    main()
