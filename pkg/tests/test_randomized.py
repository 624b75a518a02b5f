import pytest

from bsgs.chain import complete_chain, compute_bsgs_deterministic, is_member
from bsgs.errors import NoGenerators
from bsgs.gf import make_field
from bsgs.groups import make_gl, make_sl
from bsgs.matrix import GroupMatrix, random_invertible
from bsgs.randomized import make_rng, random_schreier_sims, shake_init, shake_next, spawn_rngs

from helpers import closure

F2, F3, F5 = make_field(2), make_field(3), make_field(5)


def test_slot_count():
    a = GroupMatrix.diag(F5, [2, 1])
    assert shake_init([a], rng=0).m == 10
    rng = make_rng(1)
    gens = [random_invertible(F3, 2, rng) for _ in range(6)]
    assert shake_init(gens, rng=0).m == 13
    with pytest.raises(ValueError):
        shake_init(gens, m=12)
    with pytest.raises(NoGenerators):
        shake_init([])


def test_trivial_slots_stay_trivial():
    st = shake_init([GroupMatrix.identity(F3, 2)], burn_in=0, rng=0)
    assert all(shake_next(st).is_identity for _ in range(50))


def test_slots_and_outputs_in_group():
    gens = make_gl(2, F3)
    G = closure(gens)
    st = shake_init(gens, rng=3)
    assert all(s in G for s in st.slots)
    assert all(shake_next(st) in G for _ in range(500))


def test_coverage_gl22():
    st = shake_init(make_gl(2, F2), rng=9)
    seen = {shake_next(st) for _ in range(10000)}
    assert len(seen) == 6


def test_random_schreier_sims_gl23():
    for seed in range(5):
        chain = random_schreier_sims(make_gl(2, F3), 20, rng=seed)
        assert chain.probably_complete and not chain.complete
        complete_chain(chain)
        assert chain.order() == 48


def test_trivial_group():
    chain = random_schreier_sims([GroupMatrix.identity(F3, 2)], 5, rng=0)
    assert chain.base == [] and chain.orbit_product() == 1


def test_literal_mode():
    chain = random_schreier_sims(make_sl(2, F5), 20, rng=2, literal=True)
    complete_chain(chain)
    assert chain.order() == 120


def test_deterministic_under_seed():
    a = random_schreier_sims(make_gl(3, F3), 20, rng=42)
    b = random_schreier_sims(make_gl(3, F3), 20, rng=42)
    assert a.base == b.base and a.sgs == b.sgs


def test_spawned_streams_independent():
    r1, r2 = spawn_rngs(5, 2)
    assert list(r1.integers(0, 10**9, 4)) != list(r2.integers(0, 10**9, 4))
    assert [list(r.integers(0, 100, 3)) for r in spawn_rngs(5, 2)] == \
        [list(r.integers(0, 100, 3)) for r in spawn_rngs(5, 2)]


def test_snapshots_divide_order():
    orders = []
    random_schreier_sims(make_gl(3, F2), 20, rng=7, on_update=lambda c: orders.append(c.orbit_product()))
    assert orders and all(168 % n == 0 for n in orders)


def test_stop_must_be_positive():
    with pytest.raises(ValueError):
        random_schreier_sims(make_gl(2, F3), 0)


def test_probable_chain_membership_after_verification():
    chain = random_schreier_sims(make_sl(3, F3), 20, rng=1)
    complete_chain(chain)
    ref = compute_bsgs_deterministic(make_sl(3, F3))
    assert chain.order() == ref.order()
    assert not is_member(chain, GroupMatrix.diag(F3, [2, 1, 1]))
