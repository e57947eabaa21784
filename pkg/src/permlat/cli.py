"""
Command-line interface.

Single-object results are printed as JSON on stdout.  Exit status is 0 on
success, 2 for invalid arguments or configuration, 1 for internal failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .errors import ConfigError
from .lattice import is_tau_invariant, lattice_from_json, lattice_to_json, gram
from .perms import CycleType, format_cycles, format_images, order, parse_permutation
from .polynomials import cyclotomic, euler_phi, generic_order
from .reduction import MAX_MINKOWSKIAN_RANK, is_minkowskian, is_well_rounded, minimal_vectors, successive_minima
from .taulat import (
    invariant_subspaces_ncycle,
    is_generic,
    ncycle_alignment,
    orbit_lattice,
    orbit_matrix,
    tau_order,
)


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace("(", "").replace(")", "").split(",") if p.strip())
    except ValueError as exc:
        raise ConfigError(f"cannot parse integer vector {text!r}") from exc


def _perm(text: str, n: int | None):
    try:
        return parse_permutation(text, n)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _load_lattice(path: str):
    try:
        return lattice_from_json(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read lattice from {path}: {exc}") from exc


def _load_nonzero_lattice(path: str, max_rank: int | None = None):
    L = _load_lattice(path)
    if L.rank == 0:
        raise ConfigError("the lattice has rank 0")
    if max_rank is not None and L.rank > max_rank:
        raise ConfigError(f"rank {L.rank} exceeds the supported maximum {max_rank}")
    return L


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_order(args) -> None:
    x = _vector(args.vector)
    tau = _perm(args.perm, len(x))
    ct = tau.cycle_type()
    go = generic_order(ct)
    out = {
        "tau": format_cycles(tau),
        "vector": list(x),
        "permutation_order": order(tau),
        "cycle_type": list(ct.lengths),
        "tau_order": tau_order(x, tau),
        "o_generic": go.o_generic,
    }
    if any(x):
        out["is_generic"] = is_generic(x, tau)
    _emit(out)


def cmd_generic_order(args) -> None:
    try:
        ct = CycleType.parse(args.cycle_type)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    go = generic_order(ct)
    _emit({
        "cycle_type": list(ct.lengths),
        "n": ct.n,
        "o_generic": go.o_generic,
        "paper_pairwise_value": go.paper_pairwise_value,
        "agrees": go.agrees,
    })


def cmd_cyclotomic(args) -> None:
    if args.d < 1:
        raise ConfigError("d must be >= 1")
    p = cyclotomic(args.d)
    _emit({"d": args.d, "degree": p.degree, "euler_phi": euler_phi(args.d),
           "polynomial": str(p), "coefficients": list(p.coeffs)})


def cmd_orbit(args) -> None:
    x = _vector(args.vector)
    tau = _perm(args.perm, len(x))
    if not any(x):
        raise ConfigError("the zero vector has a trivial orbit")
    L = orbit_lattice(x, tau)
    _emit({
        "tau": format_cycles(tau),
        "orbit_matrix": orbit_matrix(x, tau),
        "tau_order": L.rank,
        "lattice": lattice_to_json(L),
        "det_sq": gram(L).det_sq,
        "full_rank": L.is_full_rank(),
    })


def cmd_invariant(args) -> None:
    L = _load_lattice(args.lattice)
    tau = _perm(args.perm, L.ambient_dim)
    _emit({"tau": format_cycles(tau), "invariant": is_tau_invariant(L, tau)})


def cmd_minima(args) -> None:
    _emit(successive_minima(_load_nonzero_lattice(args.lattice)).to_json())


def cmd_wr(args) -> None:
    L = _load_nonzero_lattice(args.lattice)
    mv = minimal_vectors(L)
    _emit({"well_rounded": is_well_rounded(L), "rank": L.rank, "minimal_vectors": mv.to_json()})


def cmd_minkowskian(args) -> None:
    L = _load_nonzero_lattice(args.lattice, MAX_MINKOWSKIAN_RANK)
    prof = successive_minima(L)
    _emit({"minkowskian": is_minkowskian(L, prof), "minima": prof.to_json()})


def cmd_subspaces(args) -> None:
    tau = _perm(args.perm, args.n)
    if not tau.is_n_cycle():
        raise ConfigError(f"{format_cycles(tau)} is not an n-cycle")
    subs = invariant_subspaces_ncycle(tau)
    _emit({
        "tau": format_cycles(tau),
        "rho": format_images(ncycle_alignment(tau)),
        "count": len(subs),
        "subspaces": [W.to_json() for W in subs],
    })


def _census(args, run, default_mode: str) -> None:
    if args.tau is None:
        raise ConfigError("--tau is required")
    n = args.n if args.n is not None else _perm(args.tau, None).n
    cfg = harness.ExperimentConfig(
        n=n, tau_spec=args.tau, box=args.box, samples=args.samples,
        seed=args.seed, mode=args.mode or default_mode,
    )
    result = run(cfg)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            harness.write_csv(result.records, fh)
        result.summary["csv"] = args.out
    _emit(result.summary)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permlat", description="Exact tools for permutation-invariant lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("order", help="tau-order of a vector")
    s.add_argument("perm")
    s.add_argument("vector", help="comma-separated integers")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("generic-order", help="generic tau-order of a cycle type")
    s.add_argument("cycle_type", help='e.g. "2,2,2"')
    s.set_defaults(func=cmd_generic_order)

    s = sub.add_parser("cyclotomic", help="d-th cyclotomic polynomial")
    s.add_argument("d", type=int)
    s.set_defaults(func=cmd_cyclotomic)

    s = sub.add_parser("orbit", help="orbit matrix and orbit lattice")
    s.add_argument("perm")
    s.add_argument("vector")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("invariant", help="decide tau-invariance of a lattice")
    s.add_argument("perm")
    s.add_argument("lattice", help="lattice JSON file")
    s.set_defaults(func=cmd_invariant)

    for name, func, helptext in [
        ("minima", cmd_minima, "squared successive minima"),
        ("wr", cmd_wr, "well-roundedness and minimal vectors"),
        ("minkowskian", cmd_minkowskian, "Minkowskian test"),
    ]:
        s = sub.add_parser(name, help=helptext)
        s.add_argument("lattice", help="lattice JSON file")
        s.set_defaults(func=func)

    s = sub.add_parser("subspaces", help="invariant subspaces of an n-cycle")
    s.add_argument("perm")
    s.add_argument("--n", type=int, default=None, help="degree, if not implied by the cycle")
    s.set_defaults(func=cmd_subspaces)

    for name, run, mode in [
        ("census-rank", harness.rank_census, "orbit"),
        ("census-wr", harness.wr_census, "orbit-span"),
    ]:
        s = sub.add_parser(name, help=f"seeded {name[7:]} census")
        s.add_argument("--n", type=int, default=None)
        s.add_argument("--tau", default=None, help='cycle notation, e.g. "(1 2)(3 4)"')
        s.add_argument("--box", type=int, default=10)
        s.add_argument("--samples", type=int, default=1000)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--mode", choices=["orbit", "orbit-span", "direct-sum"], default=None)
        s.add_argument("--out", default=None, help="CSV output path")
        s.set_defaults(func=lambda a, run=run, mode=mode: _census(a, run, mode))
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
