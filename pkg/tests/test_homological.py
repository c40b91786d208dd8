import pytest

from fourpoints import factorizations as mf
from fourpoints import homological as hom
from fourpoints import rings
from fourpoints.graded import FreeGraded, GradedMap, free_module
from fourpoints.rings import QUOTIENT as R, x, y, z

T = (2, 1)


def test_kernel_of_point_presentation():
    A = mf.point_module(1).A
    K = hom.kernel_map(A)
    # beta_2(L_1) = 3: three linear second syzygies, all in degree 2
    assert K.src.gens == (2, 2, 2)
    assert (A @ K).is_zero()


def test_kernel_of_phi_is_phi_minus():
    N = mf.fundamental_module((0, 1), "+")
    K = hom.kernel_map(N.A)
    assert K.src.gens == (2, 2)
    minus = mf.fundamental_module((0, 1), "-").A.twist(-1)
    assert hom.iso_test(hom.PresentedModule(K), hom.PresentedModule(minus))


def test_kernel_of_identity_is_zero():
    F = FreeGraded(R, (0, 0))
    I = GradedMap(F, F, [[1, 0], [0, 1]])
    assert hom.kernel_map(I).src.rank == 0


def test_explicit_bound_is_hard_stop():
    A = mf.point_module(1).A
    with pytest.raises(hom.ResolutionError) as err:
        hom.kernel_map(A, degree_bound=1)
    assert err.value.bound == 1


@pytest.mark.parametrize("M, diag", [
    (mf.fundamental_module(T), 2),
    (mf.degenerate_module((0, 1), "+"), 1),
])
def test_linear_betti_rows(M, diag):
    B = hom.betti_table(M, 6)
    assert {k: v for k, v in B.entries.items() if v} == {(i, i): diag for i in range(7)}


def test_point_module_betti():
    B = hom.betti_table(mf.point_module(1), 4)
    assert [B[(i, i)] for i in range(5)] == [1, 2, 3, 4, 5]
    assert B.total(2) == 3


def test_residue_field_betti():
    B = hom.betti_table(hom.residue_field(), 4)
    assert [B.total(i) for i in range(5)] == [1, 3, 5, 7, 9]


def test_invariants_oracles():
    h = hom.hilbert_data(mf.fundamental_module(T))
    assert (h.numerator, h.nu, h.e) == ({0: 2, 1: 2}, 2, 4)
    h = hom.hilbert_data(mf.point_module(3))
    assert (h.nu, h.e, h.ulrich) == (1, 1, True)
    h = hom.hilbert_data(hom.stabilize_k())
    assert (h.numerator, h.nu, h.e) == ({-1: 1, 0: 3}, 2, 4)


def test_dual_of_free_module():
    F = free_module(R, (3,))
    D = hom.dual(F)
    assert D.F0.gens == (-3,) and D.F1.rank == 0


def test_dual_of_degenerate_module():
    # Hom(R/(l), R) = ann(l) is generated by the complementary line in degree 1.
    D = hom.dual(mf.degenerate_module((0, 1), "+"))
    assert hom.iso_test(D, mf.degenerate_module((0, 1), "+").twist(-1))
    assert not hom.iso_test(D, mf.degenerate_module((0, 1), "-").twist(1))


def test_double_dual_is_identity_on_mcm():
    N = mf.fundamental_module(T)
    assert hom.iso_test(hom.dual(hom.dual(N)), N)


def test_syzygies():
    assert hom.iso_test(hom.syzygy(mf.degenerate_module((0, 1), "+")),
                        mf.degenerate_module((0, 1), "-").twist(-1))
    N = mf.fundamental_module(T)
    assert hom.iso_test(hom.syzygy(N), N.twist(-1))
    assert hom.iso_test(hom.cosyzygy(hom.syzygy(N)), N)


def test_tau_on_tubes():
    N = mf.fundamental_module(T)
    assert hom.iso_test(hom.tau(N), N)
    D = mf.degenerate_module((0, 1), "+")
    assert hom.iso_test(hom.tau(D), mf.degenerate_module((0, 1), "-"))
    assert hom.iso_test(hom.tau(hom.tau(D)), D)


def test_iso_test_distinguishes():
    assert not hom.iso_test(mf.fundamental_module((0, 1), "+"), mf.fundamental_module((0, 1), "-"))
    assert hom.iso_test(mf.fundamental_module(T, "+"), mf.fundamental_module(T, "-"))
    assert hom.iso_test(mf.fundamental_module((2, 1)), mf.fundamental_module((4, 2)))


def test_end_dims():
    assert hom.end_dim(mf.fundamental_module(T)) == 1
    for t in rings.SINGULAR:
        for s in "+-":
            assert hom.end_dim(mf.degenerate_module(t, s)) == 1


def test_extensions():
    D_plus, D_minus = mf.degenerate_module((0, 1), "+"), mf.degenerate_module((0, 1), "-")
    Zm, classes = hom.ext1_classes(D_plus, D_minus)
    assert len(classes) == 1
    Y = hom.extension_module(Zm, D_minus, classes[0])
    assert hom.iso_test(Y, mf.fundamental_module((0, 1), "+"))
    split = hom.extension_module(Zm, D_minus, classes[0].scaled(0))
    assert hom.iso_test(split, D_minus + D_plus)


def test_extension_rejects_wrong_bidegree():
    D = mf.degenerate_module((0, 1), "+")
    Zm, classes = hom.ext1_classes(D, mf.degenerate_module((0, 1), "-"))
    with pytest.raises(hom.GradingError):
        hom.extension_module(Zm, mf.fundamental_module(T), classes[0])


def test_tube_ext_dimensions():
    N0 = mf.fundamental_module((0, 1), "+")
    assert hom.ext(N0, mf.degenerate_module((0, 1), "-"), 1).dim == 0
    assert hom.ext(N0, mf.degenerate_module((0, 1), "+"), 1).dim == 1


def test_kst_complete_betti_around_the_turn():
    B = hom.complete_betti(hom.stabilize_k(), 3, 3)
    assert [B[(i, i)] for i in range(4)] == [1, 3, 5, 7]
    assert [B[(-i, -i - 1)] for i in range(4)] == [1, 3, 5, 7]


def test_kst_is_not_periodic():
    # generator counts of tau^n(k^st) grow, so the orbit never repeats up to twist
    X = hom.stabilize_k()
    counts = []
    for _ in range(6):
        counts.append(hom.minimize(X.A).tgt.rank)
        X = hom.tau(X)
    assert counts == [2, 3, 5, 7, 9, 11]


def test_mcm_checks():
    assert hom.is_mcm(mf.fundamental_module(T))
    assert not hom.is_mcm(hom.residue_field())
    assert hom.is_free(free_module(R, (0, 1)))
