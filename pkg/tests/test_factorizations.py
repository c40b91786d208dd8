import pytest

from fourpoints import factorizations as mf
from fourpoints import homological as hom
from fourpoints import rings
from fourpoints.rings import x, y, z

GENERIC = [(2, 1), (3, 1), (5, 7), (11, 4)]


@pytest.mark.parametrize("t", GENERIC + list(rings.SINGULAR))
@pytest.mark.parametrize("sign", mf.SIGNS)
def test_phi_pairs(t, sign):
    assert mf.mf_verify(mf.phi_pair(t, sign))


def test_phi_product_at_one():
    pair = mf.phi_pair((1, 1))
    assert pair.f == rings.normal_form(pair.ring, x * x - z * z)


def test_phi_determinant_at_zero():
    (a, b), (c, d) = mf.phi_matrices((0, 1))[0]
    assert a * d - b * c == rings.q0()


def test_phi_scaling():
    plus2 = mf.phi_matrices((4, 2))[0]
    plus1 = mf.phi_matrices((2, 1))[0]
    assert plus2[0][0] == 2 * plus1[0][0] and plus2[1][0] == 2 * plus1[1][0]
    assert rings.pencil((4, 2)) == 2 * rings.pencil((2, 1))


@pytest.mark.parametrize("t", rings.SINGULAR)
@pytest.mark.parametrize("sign", mf.SIGNS)
def test_psi_and_degenerate_pairs(t, sign):
    assert mf.mf_verify(mf.psi_pair(t, sign))
    assert mf.mf_verify(mf.degenerate_pair(t, sign))


def test_psi_infinity_diagonal():
    plus = mf.psi_matrices(rings.INFINITY)[0]
    assert (plus[0][0], plus[1][1]) == (y - z, y + z)


def test_degenerate_pair_on_zero():
    pair = mf.linear_pair(rings.hypersurface(rings.INFINITY), rings.q0(), [[x - y]], [[x + y]])
    assert mf.mf_verify(pair)


def test_perturbed_pair_fails():
    pair = mf.phi_pair((2, 1))
    phi = [list(r) for r in pair.phi.entries]
    phi[0][0] = phi[0][0] + z
    bad = mf.linear_pair(pair.ring, pair.f, phi, [list(r) for r in pair.psi.entries])
    assert not mf.mf_verify(bad)


def test_home_must_differ():
    with pytest.raises(mf.FactorizationError):
        mf.phi_pair((2, 1), "+", (2, 1))


def test_constructor_errors():
    with pytest.raises(mf.FactorizationError):
        mf.psi_matrices((2, 1))
    with pytest.raises(mf.FactorizationError):
        mf.degenerate_form((2, 1), "+")
    with pytest.raises(mf.FactorizationError):
        mf.point_module(5)
    with pytest.raises(mf.FactorizationError):
        mf.phi_pair((2, 1), "*")


def test_presentations():
    assert mf.degenerate_module((0, 1), "+").A.entries[0][0] == x - y
    assert mf.degenerate_module((1, 1), "+").A.entries[0][0] == x + z
    assert mf.point_module(1).A.entries[0] == (x - y, y - z) or \
        list(mf.point_module(1).A.entries[0]) == [x - y, y - z]


def test_psi_and_phi_cokernels_agree():
    for t in rings.SINGULAR:
        assert hom.iso_test(mf.psi_module(t, "+"), mf.fundamental_module(t, "+"))


def test_sign_distinguishes_only_on_singular_members():
    assert not hom.iso_test(mf.fundamental_module((0, 1), "+"), mf.fundamental_module((0, 1), "-"))
    assert hom.iso_test(mf.fundamental_module((3, 1), "+"), mf.fundamental_module((3, 1), "-"))


def test_periodicity():
    assert mf.periodicity_check(mf.fundamental_module((2, 1)), 1)
    D = mf.degenerate_module((0, 1), "+")
    assert not mf.periodicity_check(D, 1)
    assert mf.periodicity_check(D, 2)
    N0 = mf.fundamental_module((0, 1), "+")
    assert mf.periodicity_check(N0, 2) and not mf.periodicity_check(N0, 1)
    with pytest.raises(mf.FactorizationError):
        mf.periodicity_check(D, 0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_fundamental_chain_invariants(r):
    M = mf.fundamental_chain((2, 1), r)
    h = hom.hilbert_data(M)
    assert (h.nu, h.e) == (2 * r, 4 * r)
    assert hom.end_dim(M) == r
    assert hom.betti_table(M, 3).entries == {(i, i): 2 * r for i in range(4)}


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_degenerate_chain(r):
    for sign in mf.SIGNS:
        M = mf.degenerate_chain((1, 0), r, sign)
        assert hom.betti_table(M, 2).entries == {(i, i): r for i in range(3)}
        assert mf.periodicity_check(M, 2)


def test_chains_reject_wrong_parameters():
    with pytest.raises(mf.FactorizationError):
        mf.fundamental_chain((0, 1), 2)
    with pytest.raises(mf.FactorizationError):
        mf.degenerate_chain((0, 1), 0)
