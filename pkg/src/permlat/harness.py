"""
Seeded censuses over random tau-invariant lattices.

Two censuses are provided:

* ``rank_census`` samples orbit lattices of uniform vectors in a box and
  tabulates their tau-orders.  For a permutation that is not an n-cycle no
  sample can have full rank.
* ``wr_census`` samples full-rank tau-invariant lattices and counts the
  well-rounded ones.  Each well-rounded verdict is re-checked by brute-force
  coefficient enumeration, independent of the Fincke-Pohst path.

Sample ``i`` draws its randomness from ``mix_seed(seed, i)`` only, so results
do not depend on evaluation order.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, TextIO

from . import linalg
from .errors import ConfigError
from .lattice import Lattice, gram, is_tau_invariant
from .perms import CycleType, Permutation, format_cycles, parse_permutation
from .polynomials import generic_order
from .reduction import lll_reduce, naive_short_vectors, successive_minima
from .seeding import mix_seed, random_box_vector, rng_for
from .taulat import MODES, orbit_lattice, random_invariant_lattice, tau_order

CSV_HEADER = ["sample_index", "tau_order", "full_rank", "wr", "minima_sq", "det_sq", "generators"]

__all__ = [
    "ExperimentConfig",
    "SampleRecord",
    "CensusResult",
    "rank_census",
    "wr_census",
    "wr_equation_count",
    "reverify_well_rounded",
    "wr_fraction",
    "write_csv",
    "records_to_csv",
]


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    tau_spec: str
    box: int = 10
    samples: int = 1000
    seed: int = 0
    mode: str = "orbit"

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if self.samples < 1:
            raise ConfigError(f"samples must be >= 1, got {self.samples}")
        if self.box < 1:
            raise ConfigError(f"box must be >= 1, got {self.box}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        try:
            parse_permutation(self.tau_spec, self.n)
        except ValueError as exc:
            raise ConfigError(f"tau {self.tau_spec!r} is not a permutation of degree {self.n}: {exc}") from exc

    @property
    def tau(self) -> Permutation:
        return parse_permutation(self.tau_spec, self.n)


@dataclass(frozen=True)
class SampleRecord:
    sample_index: int
    generators: tuple[tuple[int, ...], ...]
    tau_order: int
    full_rank: bool
    wr: bool | None = None
    minima_sq: tuple[int, ...] | None = None
    det_sq: int | None = None
    reverified: bool | None = None

    def csv_row(self) -> list[str]:
        def opt(v, fmt=str):
            return "" if v is None else fmt(v)

        return [
            str(self.sample_index),
            str(self.tau_order),
            "true" if self.full_rank else "false",
            opt(self.wr, lambda b: "true" if b else "false"),
            opt(self.minima_sq, lambda m: ";".join(map(str, m))),
            opt(self.det_sq),
            json.dumps([list(g) for g in self.generators], separators=(",", ":")),
        ]


@dataclass
class CensusResult:
    summary: dict
    records: list[SampleRecord] = field(default_factory=list)


def wr_equation_count(tau: Permutation | CycleType) -> int:
    """ceil(n / o_generic) - 1: orbit blocks needed to reach rank n, minus one."""
    ct = tau.cycle_type() if isinstance(tau, Permutation) else CycleType(tuple(tau.lengths))
    o = generic_order(ct).o_generic
    return -(-ct.n // o) - 1


def reverify_well_rounded(L: Lattice, norm_sq: int) -> bool:
    """
    Brute-force check that ``norm_sq`` is the minimum of ``L`` and that the
    vectors attaining it span the full rank of ``L``.
    """
    vs = naive_short_vectors(L, norm_sq, basis=lll_reduce(L))
    if not vs or min(sum(x * x for x in v) for v in vs) != norm_sq:
        return False
    return linalg.rank(vs) == L.rank


def _full_rank_fields(L: Lattice, reverify: bool) -> dict:
    prof = successive_minima(L)
    wr = prof.minima_sq[0] == prof.minima_sq[-1]
    out = {"wr": wr, "minima_sq": prof.minima_sq, "det_sq": gram(L).det_sq}
    if reverify and wr:
        out["reverified"] = reverify_well_rounded(L, prof.minima_sq[0])
    return out


def _base_summary(kind: str, cfg: ExperimentConfig) -> dict:
    tau = cfg.tau
    ct = tau.cycle_type()
    go = generic_order(ct)
    return {
        "census": kind,
        "config": asdict(cfg),
        "tau": format_cycles(tau),
        "cycle_type": list(ct.lengths),
        "is_n_cycle": ct.is_n_cycle(),
        "o_generic": go.o_generic,
        "paper_pairwise_value": go.paper_pairwise_value,
        "pairwise_formula_agrees": go.agrees,
        "wr_equation_count": wr_equation_count(ct),
    }


def rank_census(cfg: ExperimentConfig, reverify: bool = True) -> CensusResult:
    """
    tau-orders of orbit lattices of ``cfg.samples`` uniform nonzero vectors in
    [-box, box]^n.  Full-rank samples also get minima, WR flag and det_sq.
    """
    if cfg.mode != "orbit":
        raise ConfigError(f"rank census needs mode 'orbit', got {cfg.mode!r}")
    tau = cfg.tau
    o_gen = generic_order(tau.cycle_type()).o_generic
    records = []
    for i in range(cfg.samples):
        x = random_box_vector(rng_for(cfg.seed, i), cfg.n, cfg.box)
        order_ = tau_order(x, tau)
        rec = {"sample_index": i, "generators": (x,), "tau_order": order_, "full_rank": order_ == cfg.n}
        if rec["full_rank"]:
            L = orbit_lattice(x, tau)
            assert is_tau_invariant(L, tau)
            rec.update(_full_rank_fields(L, reverify))
        records.append(SampleRecord(**rec))

    dist = Counter(r.tau_order for r in records)
    full = sum(r.full_rank for r in records)
    summary = _base_summary("rank", cfg)
    summary.update(
        samples=cfg.samples,
        order_distribution={str(k): dist[k] for k in sorted(dist)},
        max_order=max(dist),
        generic_attainment_count=dist.get(o_gen, 0),
        generic_attainment_fraction=dist.get(o_gen, 0) / cfg.samples,
        full_rank_count=full,
        rank_deficiency_law_holds=summary["is_n_cycle"] or full == 0,
    )
    return CensusResult(summary, records)


def wr_census(cfg: ExperimentConfig, reverify: bool = True) -> CensusResult:
    """
    Well-roundedness among sampled full-rank tau-invariant lattices.

    Samples that fail to reach full rank are counted but excluded from the
    frequency denominator.  ``orbit`` mode is only accepted for n-cycles, since
    a single orbit of any other permutation never has full rank.
    """
    tau = cfg.tau
    if cfg.mode == "orbit" and not tau.is_n_cycle():
        raise ConfigError("orbit mode never yields full-rank lattices unless tau is an n-cycle")
    records = []
    for i in range(cfg.samples):
        s = random_invariant_lattice(tau, cfg.box, cfg.mode, mix_seed(cfg.seed, i))
        rec = {
            "sample_index": i,
            "generators": s.generators,
            "tau_order": tau_order(s.generators[0], tau),
            "full_rank": s.full_rank,
        }
        if s.full_rank:
            rec.update(_full_rank_fields(s.lattice, reverify))
        records.append(SampleRecord(**rec))

    full = [r for r in records if r.full_rank]
    wr = [r for r in full if r.wr]
    summary = _base_summary("wr", cfg)
    summary.update(
        samples=cfg.samples,
        full_rank_count=len(full),
        non_full_rank_count=cfg.samples - len(full),
        wr_count=len(wr),
        wr_frequency=(len(wr) / len(full)) if full else None,
        reverified_count=sum(1 for r in wr if r.reverified),
        reverify_failures=sum(1 for r in wr if r.reverified is False),
    )
    return CensusResult(summary, records)


def wr_fraction(result: CensusResult) -> Fraction | None:
    """Exact WR frequency among full-rank samples."""
    full = result.summary["full_rank_count"]
    return Fraction(result.summary["wr_count"], full) if full else None


def records_to_csv(records: Iterable[SampleRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def write_csv(records: Iterable[SampleRecord], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.csv_row())
