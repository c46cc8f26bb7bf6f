"""Command-line front end.

    spinchain <command> [--n N] [--hx HX] [--hy HY] [--hz HZ] [--j J]
                        [--basis eps|lambda] [--order 1..4]
                        [--format json|csv] [--out PATH] [--seed SEED]

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import dataclass
from typing import Optional

from . import basis as B
from .basis import ChainSpec
from .errors import ResourceLimitError
from .hamiltonian import build_matrix, format_matrix
from .observables import observables
from .oracle import RS_MAX_SITES, eigensolve, ground_state, rs_corrections
from .perturbation import coefficient_rows, corrections
from .single_spin import FieldParams
from .validate import DEFAULT_SEED, format_report, run_all

COMMANDS = ("basis", "build", "spectrum", "gs", "perturb", "observables", "coeffs", "validate")

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    n: int = 8
    hx: float = 1.0
    hy: float = 0.0
    hz: float = 0.0
    j: float = 0.1
    basis_tag: str = "eps"
    order: int = 4
    format: Optional[str] = None
    out: Optional[str] = None
    seed: int = DEFAULT_SEED

    @property
    def chain(self) -> ChainSpec:
        return ChainSpec(self.n)

    @property
    def params(self) -> FieldParams:
        return FieldParams(self.hx, self.hy, self.hz, self.j)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spinchain", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--n", type=int, default=8, help="number of sites")
    ap.add_argument("--hx", type=float, default=1.0)
    ap.add_argument("--hy", type=float, default=0.0)
    ap.add_argument("--hz", type=float, default=0.0)
    ap.add_argument("--j", type=float, default=0.1, help="exchange coupling J")
    ap.add_argument("--basis", dest="basis_tag", choices=("eps", "lambda"), default="eps")
    ap.add_argument("--order", type=int, choices=(1, 2, 3, 4), default=4)
    ap.add_argument("--format", choices=("json", "csv"), default=None)
    ap.add_argument("--out", default=None, help="write output here instead of stdout")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return ap


def num(x: float) -> str:
    return format(float(x) + 0.0, ".17g")


def _header(cfg: RunConfig) -> dict:
    p = cfg.params
    return {"n": cfg.n, "hx": p.hx, "hy": p.hy, "hz": p.hz, "j": p.J,
            "h": p.h, "f": p.f, "g": p.g}


def _json(cfg: RunConfig, payload: dict) -> str:
    return json.dumps({**_header(cfg), **payload}, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([num(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _dense_chain(cfg: RunConfig) -> ChainSpec:
    chain = cfg.chain
    B.require_dense(chain)
    return chain


def cmd_basis(cfg: RunConfig) -> str:
    chain = _dense_chain(cfg)
    rows = [(r, "".join(map(str, B.bits(r, chain))), B.weight(r, chain)) for r in range(chain.dim)]
    degen = [B.degeneracy(m, chain) for m in range(cfg.n + 1)]
    if cfg.format == "csv":
        return _csv(("r", "bits", "weight"), rows)
    states = [{"r": r, "bits": b, "weight": w} for r, b, w in rows]
    return _json(cfg, {"states": states, "degeneracy": degen})


def cmd_build(cfg: RunConfig) -> str:
    return format_matrix(build_matrix(_dense_chain(cfg), cfg.params, cfg.basis_tag))


def cmd_spectrum(cfg: RunConfig) -> str:
    H = build_matrix(_dense_chain(cfg), cfg.params, cfg.basis_tag)
    w = eigensolve(H).eigenvalues
    if cfg.format == "csv":
        return _csv(("index", "eigenvalue"), [(i, float(x)) for i, x in enumerate(w)])
    return _json(cfg, {"basis": cfg.basis_tag, "eigenvalues": [float(x) for x in w]})


def cmd_gs(cfg: RunConfig) -> str:
    chain = _dense_chain(cfg)
    exact = ground_state(build_matrix(chain, cfg.params, cfg.basis_tag))[0]
    pert = corrections(chain, cfg.params).total
    diff = exact - pert
    if cfg.format == "csv":
        return _csv(("exact", "perturbative", "difference", "difference_per_spin"),
                    [(exact, pert, diff, diff / cfg.n)])
    return _json(cfg, {"exact": exact, "perturbative": pert, "difference": diff,
                       "difference_per_spin": diff / cfg.n})


def cmd_perturb(cfg: RunConfig) -> str:
    chain = cfg.chain
    closed = corrections(chain, cfg.params)
    oracle = rs_corrections(chain, cfg.params, cfg.order) if cfg.n <= RS_MAX_SITES else None
    orders = range(1, cfg.order + 1)
    if cfg.format == "csv":
        rows = [(m, closed.order(m), oracle.order(m) if oracle else "") for m in orders]
        return _csv(("order", "closed_form", "oracle"), rows)
    payload = {
        "order": cfg.order,
        "closed_form": {f"e{m}": closed.order(m) for m in orders},
        "oracle": {f"e{m}": oracle.order(m) for m in orders} if oracle else None,
        "unperturbed": closed.unperturbed,
        "total": closed.unperturbed + sum(closed.order(m) for m in orders),
    }
    return _json(cfg, payload)


def cmd_observables(cfg: RunConfig) -> str:
    cfg.chain  # validates n
    ob = observables(cfg.params)
    if cfg.format == "csv":
        return _csv(("mx", "my", "mz", "corr"), [(ob.mx, ob.my, ob.mz, ob.corr)])
    return _json(cfg, {"mx": ob.mx, "my": ob.my, "mz": ob.mz, "corr": ob.corr, "z": cfg.params.z})


def cmd_coeffs(cfg: RunConfig) -> str:
    rows = coefficient_rows()
    if cfg.format == "csv":
        return _csv(("m", "k", "num", "den"), rows)
    if cfg.format == "json":
        return json.dumps({"coefficients": [dict(zip(("m", "k", "num", "den"), r)) for r in rows]},
                          indent=2) + "\n"
    return "".join(f"{m} {k} {a} {b}\n" for m, k, a, b in rows)


HANDLERS = {
    "basis": cmd_basis, "build": cmd_build, "spectrum": cmd_spectrum, "gs": cmd_gs,
    "perturb": cmd_perturb, "observables": cmd_observables, "coeffs": cmd_coeffs,
}


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def run(cfg: RunConfig) -> int:
    if cfg.command == "validate":
        results = run_all(cfg.seed)
        if cfg.format == "json":
            text = json.dumps({"seed": cfg.seed,
                               "criteria": [{"number": r.number, "name": r.name,
                                             "passed": r.passed, "summary": r.summary}
                                            for r in results],
                               "passed": all(r.passed for r in results)}, indent=2) + "\n"
        else:
            text = format_report(results, cfg.seed)
        _emit(text, cfg.out)
        return EXIT_OK if all(r.passed for r in results) else EXIT_VALIDATION
    _emit(HANDLERS[cfg.command](cfg), cfg.out)
    return EXIT_OK


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"spinchain: warning: {message}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            warnings.showwarning = _show_warning
            return run(cfg)
    except ResourceLimitError as exc:
        print(f"spinchain: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"spinchain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
