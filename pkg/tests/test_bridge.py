import numpy as np
import pytest

from fourpoints import bridge
from fourpoints import factorizations as mf
from fourpoints import homological as hom
from fourpoints import quiver as q
from fourpoints import rings


def test_tilting_quotients_are_nonzero():
    data = bridge.tilting_data()
    for qi in data.quotients:
        assert not qi.is_zero()


@pytest.mark.parametrize("t", [(2, 1), (3, 1), (9, 5)])
def test_fundamental_image(t):
    E = bridge.apply_E(mf.fundamental_module(t))
    assert E.dims == (2, 1, 1, 1, 1)
    assert q.iso_rep(E, q.fundamental(t))
    assert q.identify(E) == q.reg_hom_name(t, 1)


def test_distinct_parameters_stay_apart():
    a = bridge.apply_E(mf.fundamental_module((2, 1)))
    b = bridge.apply_E(mf.fundamental_module((3, 1)))
    assert not q.iso_rep(a, b)


@pytest.mark.parametrize("t", rings.SINGULAR)
@pytest.mark.parametrize("sign", mf.SIGNS)
def test_degenerate_images(t, sign):
    assert q.iso_rep(bridge.apply_E(mf.degenerate_module(t, sign)), q.simple_regular(t, sign))
    assert q.iso_rep(bridge.apply_E(mf.fundamental_module(t, sign)), q.regular_pair(t, sign))


def test_projective_images():
    for i in q.ARMS:
        assert q.iso_rep(bridge.apply_E(mf.point_module(i)), q.projective(i))
    assert q.iso_rep(bridge.apply_E(hom.stabilize_k()), q.projective(0))


@pytest.mark.parametrize("r", [2, 3])
def test_uniserial_images(r):
    for sign in mf.SIGNS:
        E = bridge.apply_E(mf.degenerate_chain((0, 1), r, sign))
        assert q.iso_rep(E, q.named(q.reg_exc_name((0, 1), r, sign)))


def test_tau_exchange():
    for M in [mf.fundamental_module((2, 1)), mf.degenerate_module((0, 1), "+"), mf.point_module(1)]:
        assert bridge.tau_exchange_check(M).ok
    left = bridge.apply_E(hom.tau(mf.point_module(1)))
    assert q.iso_rep(left, q.tau_inverse(q.projective(1)))


def test_defect_dictionary_on_small_pool():
    rows = bridge.defect_dictionary(bridge.module_pool(((2, 1),)))
    assert all(r.ok for r in rows)
    assert {r.name: r.detail["defect"] for r in rows}["k^st"] == -2


def test_preprojective_dims():
    T = bridge.preprojective_dims(3)
    assert T.mismatches() == []
    assert [tot for _, tot, _ in T.totals()] == [9, 27, 45, 63]
    assert T.corner(0, 0) == [1, 3, 5, 7]
    for j in q.ARMS:
        assert [int(T.quiver_side[i][j, j]) for i in range(4)] == T.corner(j, j)


def test_preprojective_cost_guard():
    with pytest.raises(bridge.BridgeError):
        bridge.preprojective_dims(7)


def test_tilting_orthogonality():
    r = bridge.tilting_orthogonality()
    assert r.ok
    assert r.detail["L_1"] == [1, 0, 0, 0, 0, 0, 0]
    assert hom.betti_table(mf.point_module(1), 1)[(1, 1)] == 2


def test_random_parameters_are_generic():
    ts = bridge.random_parameters(np.random.default_rng(0), 10)
    assert len(set(ts)) == 10 and not set(ts) & set(rings.SINGULAR)
