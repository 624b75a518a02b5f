"""Benchmark harness: the classical GL/SL suite and random generating sets."""

from __future__ import annotations

import csv
import io as _io
import json
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .chain import ChainConfig, complete_chain, compute_bsgs_deterministic, compute_bsgs_naive
from .groups import parse_builtin
from .matrix import random_invertible
from .randomized import DEFAULT_SIFT_THRESHOLD, make_rng, random_schreier_sims, spawn_rngs
from .stcs import DEFAULT_RATIO, verify_chain_stcs

METHODS = ("det", "naive", "random", "stcs")
CLASSICAL_SUITE = ((2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3))
CSV_COLUMNS = ("group", "method", "strategy", "ms", "order", "baselen", "orbits")


@dataclass
class BenchRecord:
    group: str
    method: str
    strategy: str
    ms: int
    order: int
    baselen: int
    orbits: list
    expected: int | None = None
    chain: object = field(default=None, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.expected is None or self.expected == self.order

    def row(self) -> dict:
        return {"group": self.group, "method": self.method, "strategy": self.strategy,
                "ms": self.ms, "order": self.order, "baselen": self.baselen,
                "orbits": "x".join(str(n) for n in self.orbits)}


def build_chain(gens, method="det", config=None, rng=None,
                sift_threshold=DEFAULT_SIFT_THRESHOLD, ratio=DEFAULT_RATIO):
    """Complete stabiliser chain for ``gens`` by the named method.

    ``random`` and ``stcs`` first run the randomised algorithm and then a
    verification pass (plain Schreier-Sims or STCS respectively), so the
    returned chain is always complete.
    """
    config = config or ChainConfig()
    if method == "det":
        return compute_bsgs_deterministic(gens, config)
    if method == "naive":
        return compute_bsgs_naive(gens, config)
    if method in ("random", "stcs"):
        chain = random_schreier_sims(gens, sift_threshold, rng=make_rng(rng), config=config)
        chain.probable_order = chain.orbit_product()
        if method == "random":
            return complete_chain(chain)
        return verify_chain_stcs(chain, Fraction(ratio))
    raise ValueError(f"unknown method {method!r}")


def run_one(label, gens, method, config=None, rng=None, expected=None, **kw) -> BenchRecord:
    config = config or ChainConfig()
    t0 = time.monotonic()
    chain = build_chain(gens, method, config, rng, **kw)
    ms = int(round((time.monotonic() - t0) * 1000))
    return BenchRecord(label, method, config.strategy, ms, chain.order(), len(chain.base),
                       chain.orbit_sizes(), expected, chain)


def bench_classical_suite(method="det", config=None, seed=None, kinds=("GL", "SL"),
                          suite=CLASSICAL_SUITE, **kw) -> list[BenchRecord]:
    out = []
    for kind in kinds:
        for d, q in suite:
            label, _, gens, oracle = parse_builtin(f"{kind}({d},{q})")
            out.append(run_one(label, gens, method, config, make_rng(seed), oracle, **kw))
    return out


def bench_random_suite(q, d, setsize, trials, seed=None, method="det", config=None,
                       report=print, **kw) -> list[BenchRecord]:
    """Random generating sets of ``setsize`` uniform invertible matrices.

    Trial k draws its matrices and any randomised-method choices from its
    own stream, spawned from ``seed``, so trials are independent and the
    whole run is reproducible.  The mean time is passed to ``report``.
    """
    from .gf import field_from_order

    if trials < 1:
        raise ValueError("trials must be >= 1")
    if setsize < 1:
        raise ValueError("setsize must be >= 1")
    F = field_from_order(q)
    out = []
    for k, rng in enumerate(spawn_rngs(seed, trials)):
        gens = [random_invertible(F, d, rng) for _ in range(setsize)]
        label = f"rand-q{q}-d{d}-n{setsize}-{k}"
        out.append(run_one(label, gens, method, config, rng, None, **kw))
    if report is not None:
        mean = statistics.fmean(r.ms for r in out)
        report(f"q={q} d={d} setsize={setsize} trials={trials} method={method} mean_ms={mean:.1f}")
    return out


def format_records(records, fmt="text") -> str:
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(r.row())
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([r.row() for r in records], indent=1) + "\n"
    lines = []
    for r in records:
        flag = "" if r.ok else f"  MISMATCH (expected {r.expected})"
        lines.append(f"{r.group:24s} {r.method:6s} {r.strategy:10s} {r.ms:7d} ms  "
                     f"order={r.order} base={r.baselen} orbits={r.row()['orbits']}{flag}")
    return "\n".join(lines) + "\n"
