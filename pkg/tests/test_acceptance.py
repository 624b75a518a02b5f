"""Acceptance suite: one test, and one PASS/FAIL line, per criterion."""

import collections
import time

from bsgs.bench import CLASSICAL_SUITE, bench_random_suite, build_chain
from bsgs.chain import (
    ChainConfig,
    StabilizerChain,
    compute_bsgs_deterministic,
    enumerate_elements,
    leon_check,
    partial_chain,
    random_element_from_chain,
)
from bsgs.gf import make_field
from bsgs.groups import make_gl, make_sl, parse_builtin
from bsgs.matrix import STATS, act_point
from bsgs.randomized import make_rng, random_schreier_sims
from bsgs.schreier import GENERATOR_LABELS, TRANSVERSAL_LABELS, compute_schreier_tree
from bsgs.stcs import Presentation, todd_coxeter, verify_chain_stcs

from helpers import closure, orbit

GROUPS = [f"{k}({d},{q})" for k in ("GL", "SL") for d, q in CLASSICAL_SUITE]
RANDOM_SEEDS = range(5)

# every completed chain built by criterion 1, kept for criteria 2 and 3
_CHAINS = {}


def _classical(name):
    return parse_builtin(name)


def test_criterion_01_order_oracle(criterion):
    failures = []
    t0 = time.monotonic()
    for name in GROUPS:
        label, _, gens, oracle = _classical(name)
        runs = [("det", None), ("naive", None), ("stcs", 0)] + [("random", s) for s in RANDOM_SEEDS]
        for method, seed in runs:
            chain = build_chain(gens, method, ChainConfig(), seed)
            _CHAINS[label, method, seed] = chain
            if chain.order() != oracle:
                failures.append(f"{label}/{method}/{seed}: {chain.order()} != {oracle}")
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed < 60
    criterion(1, "classical GL/SL orders under det, naive, random x5 seeds, stcs", ok,
              f"{len(GROUPS)} groups, {elapsed:.1f} s" + (f"; {failures[:3]}" if failures else ""))
    assert not failures
    assert elapsed < 60


def _chains():
    if not _CHAINS:
        test_criterion_01_order_oracle(lambda *a, **k: True)
    return _CHAINS


def test_criterion_02_enumeration_equals_closure(criterion):
    checked = 0
    bad = []
    small = {}
    for (label, method, seed), chain in _chains().items():
        if chain.order() <= 5000:
            small.setdefault(label, []).append(chain)
    for rec in bench_random_suite(2, 3, 2, 10, seed=1, report=None):
        small.setdefault(rec.group, []).append(rec.chain)
    for label, chains in small.items():
        gens = chains[0].generators
        brute = closure(gens)
        for chain in chains:
            elems = list(enumerate_elements(chain))
            checked += 1
            if len(elems) != len(set(elems)) or set(elems) != brute:
                bad.append(label)
    criterion(2, "enumerate_elements equals brute-force closure for |G| <= 5000", not bad,
              f"{checked} chains over {len(small)} groups")
    assert not bad


def test_criterion_03_leon(criterion):
    bad = []
    for key, chain in _chains().items():
        if not leon_check(chain):
            bad.append(f"{key}: schreier generator with non-trivial residue")
        if chain.order() <= 5000 and chain.orbit_product() != len(closure(chain.generators)):
            bad.append(f"{key}: orbit product differs from brute-force order")
    criterion(3, "Leon: all Schreier generators sift trivially; orbit product = |G|", not bad,
              f"{len(_chains())} chains")
    assert not bad


SCHREIER_PAIRS = [("GL", 2, 3, (1, 0), False), ("SL", 2, 3, (1, 1), False), ("GL", 3, 2, (1, 0, 0), False),
                  ("SL", 2, 5, (1, 0), False), ("GL", 2, 3, (1, 0), True)]


def test_criterion_04_schreier_lemma(criterion):
    bad = []
    for kind, d, q, root, proj in SCHREIER_PAIRS:
        F = make_field(q)
        gens = (make_gl if kind == "GL" else make_sl)(d, F)
        G = closure(gens)
        stab = {g for g in G if act_point(root, g, proj) == root}
        tree = compute_schreier_tree(gens, root, GENERATOR_LABELS, projective=proj)
        sgens = [tree.schreier_generator(p, s) for p in tree.points for s in gens]
        nontrivial = [g for g in sgens if not g.is_identity]
        generated = closure(nontrivial) if nontrivial else {tree.identity}
        index = len(G) // len(stab)
        identities = len(sgens) - len(nontrivial)
        if generated != stab or identities < index - 1 or len(tree) != index:
            bad.append(f"{kind}({d},{q}) at {root}")
    criterion(4, "Schreier's lemma and identity count on 5 group/point pairs", not bad)
    assert not bad


def test_criterion_05_sift_failure_rate(criterion):
    gens = make_gl(2, make_field(3))
    ref = compute_bsgs_deterministic(gens)
    chain = partial_chain(gens)
    chain.rebuild_all()
    assert chain.orbit_product() < 48, "the test chain must be incomplete"
    rng = make_rng(12345)
    n = 10_000
    fails = sum(not chain.sift(random_element_from_chain(ref, rng)).residue.is_identity for _ in range(n))
    rate = fails / n
    ok = rate >= 0.47
    criterion(5, "non-trivial residue rate on an incomplete GL(2,3) chain >= 0.47", ok,
              f"rate {rate:.4f}, partial orbit product {chain.orbit_product()}")
    assert ok


def test_criterion_06_divisibility(criterion):
    gens = make_sl(2, make_field(5))
    snapshots = []
    for seed in range(10):
        random_schreier_sims(gens, 20, rng=seed, on_update=lambda c: snapshots.append(c.orbit_product()))
    ok = bool(snapshots) and all(120 % n == 0 for n in snapshots)
    criterion(6, "every random Schreier-Sims snapshot on SL(2,5) divides 120", ok,
              f"{len(snapshots)} snapshots, values {sorted(set(snapshots))}")
    assert ok


def test_criterion_07_todd_coxeter(criterion):
    d4 = [[1, 1, 1, 1], [2, 2], [1, 2, 1, 2]]
    got = (todd_coxeter(Presentation(2, d4), 100).index,
           todd_coxeter(Presentation(2, d4, [[2]]), 100).index,
           todd_coxeter(Presentation(1, [[1] * 6]), 100).index)
    ok = got == (8, 4, 6)
    criterion(7, "Todd-Coxeter: D4 -> 8, D4/<b> -> 4, C6 -> 6", ok, f"got {got}")
    assert ok


def test_criterion_08_stcs(criterion):
    bad = []
    for name, oracle in (("GL(2,3)", 48), ("SL(3,2)", 168), ("GL(3,3)", 11232)):
        _, _, gens, _ = _classical(name)
        for seed in RANDOM_SEEDS:
            chain = random_schreier_sims(gens, 20, rng=seed)
            verify_chain_stcs(chain)
            if not chain.complete or chain.order() != oracle:
                bad.append(f"{name}/{seed}")
    repairs = []
    for name, oracle in (("GL(2,3)", 48), ("GL(3,3)", 11232)):
        _, _, gens, _ = _classical(name)
        src = random_schreier_sims(gens, 20, rng=7)
        trunc = StabilizerChain(src.field, src.d, config=src.config, generators=src.generators,
                                base=list(src.base), sgs=src.sgs[:-1])
        broken = trunc.orbit_product()
        verify_chain_stcs(trunc)
        repairs.append(f"{name}: {broken} -> {trunc.order()}")
        if trunc.order() != oracle:
            bad.append(f"{name} truncated")
    criterion(8, "STCS verifies random chains and repairs a truncated chain", not bad,
              "; ".join(repairs + bad))
    assert not bad


def test_criterion_09_strategy_invariance(criterion):
    bad = []
    for name in GROUPS:
        _, _, gens, oracle = _classical(name)
        for strategy in ("natural", "projective", "eigen"):
            if compute_bsgs_deterministic(gens, ChainConfig(strategy=strategy)).order() != oracle:
                bad.append(f"{name}/{strategy}")
    F = make_field(3)
    gens = make_gl(2, F)
    chain = compute_bsgs_deterministic(gens, ChainConfig(strategy="projective"))
    line, vec = chain.base[0], chain.base[1]
    sizes = chain.orbit_sizes()
    # brute force: the line orbit under G, and the orbit of v under the line stabiliser
    G = closure(gens)
    line_orbit = orbit(line.coords, gens, lambda p, s: act_point(p, s, True))
    stab = [g for g in G if act_point(line.coords, g, True) == line.coords]
    inner = {act_point(vec.coords, g, False) for g in stab}
    shape_ok = (line.projective and not vec.projective and sizes[0] == len(line_orbit) == 4
                and sizes[1] == len(inner) and 2 % sizes[1] == 0)
    ok = not bad and shape_ok
    criterion(9, "strategy invariance; projective GL(2,3) line orbit 4, inner orbit divides 2", ok,
              f"orbits {sizes}" + (f"; {bad}" if bad else ""))
    assert ok


def test_criterion_10_bench_determinism(criterion):
    def snapshot(method):
        recs = bench_random_suite(2, 3, 2, 20, seed=1, method=method, report=None)
        return [(r.order, tuple(r.chain.base), collections.Counter(g.entries for g in r.chain.sgs))
                for r in recs]

    ok = all(snapshot(m) == snapshot(m) for m in ("det", "random", "stcs"))
    criterion(10, "bench --suite random is reproducible (orders, base, sgs multiset)", ok)
    assert ok


def test_criterion_11_tree_labels(criterion):
    bad = []
    max_muls = 0
    for name in GROUPS:
        _, _, gens, oracle = _classical(name)
        orders = {}
        for mode in (TRANSVERSAL_LABELS, GENERATOR_LABELS):
            chain = compute_bsgs_deterministic(gens, ChainConfig(label_mode=mode))
            orders[mode] = chain.order()
            for i in range(1, len(chain.base) + 1):
                tree = chain.tree(i)
                bp = chain.base[i - 1]
                for p in tree.points:
                    before = STATS.mul
                    t = tree.orbit_element(p)
                    used = STATS.mul - before
                    if mode == TRANSVERSAL_LABELS:
                        max_muls = max(max_muls, used)
                    if act_point(bp.coords, t, bp.projective) != p:
                        bad.append(f"{name}/{mode}/level {i}")
        if len(set(orders.values())) != 1 or orders[TRANSVERSAL_LABELS] != oracle:
            bad.append(f"{name} orders {orders}")
    ok = not bad and max_muls == 0
    criterion(11, "transversal trace uses 0 multiplications; both label modes agree", ok,
              f"max multiplications per transversal query {max_muls}")
    assert ok
