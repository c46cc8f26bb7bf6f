"""Transverse-field limit: exact-diagonalization energy per spin vs the quartic series."""
import argparse

from spinchain import ChainSpec, FieldParams
from spinchain.oracle import exact_ground_energy
from spinchain.perturbation import pfeuty_reference, series_e0_ratio


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10, 12])
    ap.add_argument("--z", type=float, nargs="+", default=[0.1, 0.2, 0.4, 0.8])
    args = ap.parse_args()

    print(f"{'z':>5} {'series':>16} " + " ".join(f"{'N=' + str(n):>16}" for n in args.sizes))
    for z in args.z:
        p = FieldParams(1.0, 0.0, 0.0, z / 2)
        assert series_e0_ratio(z, 0.0, 1.0) == pfeuty_reference(z)
        ed = [exact_ground_energy(ChainSpec(n), p) / n / (-p.h / 2) for n in args.sizes]
        print(f"{z:5.2f} {pfeuty_reference(z):16.12f} " + " ".join(f"{v:16.12f}" for v in ed))


if __name__ == "__main__":
    main()
