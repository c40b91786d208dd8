from collections import Counter

import numpy as np
import pytest

from fourpoints import linalg as la
from fourpoints import quiver as q
from fourpoints import rings

T = (2, 1)


def test_fundamental_endomorphisms():
    assert q.hom_dim(q.fundamental(T), q.fundamental(T)) == 1
    assert q.hom_dim(q.fundamental(T), q.fundamental((3, 1))) == 0


def test_hom_from_p0():
    M = q.named(q.reg_hom_name(T, 2))
    assert q.hom_dim(q.projective(0), M) == M.dims[0]


def test_hom_basis_intertwines():
    M, N = q.named(q.proj_name(1, 2)), q.named(q.reg_exc_name((0, 1), 3, "-"))
    for f in q.hom_rep(M, N).basis:
        for i in q.ARMS:
            assert np.array_equal(la.matmul(N.phi(i), f[i]), la.matmul(f[0], M.phi(i)))


def test_ext_dimensions():
    R = q.fundamental(T)
    assert q.euler_form(R.dims, R.dims) == 0
    assert q.ext1_dim(R, R) == 1
    for i in range(5):
        assert q.ext1_dim(q.projective(i), R) == 0
    assert q.ext1_dim(q.simple_regular((0, 1), "+"), q.simple_regular((0, 1), "-")) == 1


def test_defect_values():
    assert q.defect(q.fundamental(T)) == 0
    assert q.defect(q.projective(0)) == -2
    assert q.defect(q.injective(0)) == 2


def test_tau_facts():
    for t in rings.SINGULAR:
        for s, o in (("+", "-"), ("-", "+")):
            assert q.iso_rep(q.tau(q.simple_regular(t, s)), q.simple_regular(t, o))
            assert q.iso_rep(q.tau(q.regular_pair(t, s)), q.regular_pair(t, o))
    for r in range(1, 4):
        M = q.named(q.reg_hom_name(T, r))
        assert q.iso_rep(q.tau(M), M)
    for i in range(5):
        assert q.tau(q.projective(i)).is_zero()
        assert q.tau_inverse(q.injective(i)).is_zero()


def test_tau_round_trips():
    for name in [q.proj_name(2, 1), q.inj_name(0, 2), q.reg_exc_name((1, 1), 2, "-")]:
        M = q.named(name)
        assert q.iso_rep(q.tau_inverse(q.tau(M)), M)
        assert q.iso_rep(q.tau(q.tau_inverse(M)), M)


def test_iso_under_basis_change():
    rng = np.random.default_rng(0)
    R = q.fundamental(T)
    assert q.iso_rep(q.random_basis_change(R, rng), R)
    assert not q.iso_rep(q.regular_pair((0, 1), "+"), q.regular_pair((0, 1), "-"))
    S = q.simple_regular((1, 1), "+") + q.simple_regular((1, 1), "-")
    assert not q.iso_rep(S, q.regular_pair((1, 1), "+"))


def test_printed_r_minus_at_infinity_is_decomposable():
    printed = q.rep_from_lines([(1, 0), (1, 0), (0, 1), (0, 1)])
    assert not q.is_indecomposable(printed)
    assert q.is_indecomposable(q.regular_pair((1, 0), "-"))


def test_decompose_known_sums():
    R = q.fundamental(T)
    D = q.decompose(R + R)
    assert len(D.pieces) == 1 and D.pieces[0][1] == 2
    assert q.iso_rep(D.pieces[0][0], R)
    D = q.decompose(q.regular_pair((0, 1), "+"))
    assert len(D.parts) == 1


def test_decompose_same_tube():
    rng = np.random.default_rng(5)
    names = [q.reg_hom_name(T, 1), q.reg_hom_name(T, 2), q.reg_exc_name((0, 1), 1, "+"),
             q.reg_exc_name((0, 1), 2, "+"), q.reg_exc_name((0, 1), 2, "+")]
    M = q.random_basis_change(q.direct_sum(q.named(n) for n in names), rng)
    D = q.decompose(M, seed=1)
    got = Counter()
    for P, m in D.pieces:
        got[str(q.identify(P))] += m
    assert got == Counter(str(n) for n in names)


def test_decomposition_witness():
    M = q.projective(1) + q.fundamental(T)
    D = q.decompose(M)
    for v in range(5):
        assert la.rank(D.change_of_basis[v]) == M.dims[v]


def test_identify_examples():
    assert q.identify(q.rep_from_lines([(0, 1), (1, 1), (1, 0), (2, 1)])) == q.reg_hom_name(T, 1)
    assert q.identify(q.projective(3)) == q.proj_name(3, 0)
    assert q.identify(q.tau_inverse(q.projective(1))) == q.proj_name(1, 1)
    assert q.identify(q.injective(2)) == q.inj_name(2, 0)


def test_named_examples():
    S = q.named(q.reg_exc_name((0, 1), 1, "+"))
    assert S.dims == (1, 1, 0, 0, 1)
    assert q.named(q.reg_hom_name(T, 2)).dims == (4, 2, 2, 2, 2)
    assert q.iso_rep(q.named(q.proj_name(0, 0)), q.projective(0))
    with pytest.raises(q.RepError):
        q.named(q.reg_hom_name((0, 1), 1))
    with pytest.raises(q.RepError):
        q.named(q.IndecName("Other"))


@pytest.mark.parametrize("name", [
    q.proj_name(0, 4), q.proj_name(4, 3), q.inj_name(1, 4), q.inj_name(0, 3),
    q.reg_hom_name((5, 1), 4), q.reg_exc_name((1, 0), 5, "-"), q.reg_exc_name((1, 1), 4, "+"),
])
def test_identify_named(name):
    assert q.identify(q.named(name)) == name


def test_extension_rep():
    R = q.fundamental(T)
    zero = tuple(la.zeros(R.dims[0], R.dims[i]) for i in q.ARMS)
    assert q.iso_rep(q.extension_rep(R, R, zero), R + R)
    (xi,) = q.ext1_classes(R, R)
    Y = q.extension_rep(R, R, xi)
    assert q.is_indecomposable(Y)
    assert q.iso_rep(Y, q.named(q.reg_hom_name(T, 2)))
    with pytest.raises(q.RepError):
        q.extension_rep(R, R, xi[:3])


def test_exceptional_uniserial_extension():
    # 0 -> R_0^+ -> S_0<3>^+ -> S_0^+ -> 0; the opposite quotient splits
    R = q.regular_pair((0, 1), "+")
    assert q.ext1_dim(q.simple_regular((0, 1), "-"), R) == 0
    (xi,) = q.ext1_classes(q.simple_regular((0, 1), "+"), R)
    Y = q.extension_rep(q.simple_regular((0, 1), "+"), R, xi)
    assert q.iso_rep(Y, q.named(q.reg_exc_name((0, 1), 3, "+")))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_uniserial_socle(r):
    M = q.named(q.reg_exc_name((0, 1), r, "+"))
    assert q.hom_dim(q.simple_regular((0, 1), "+"), M) == 1
    assert q.hom_dim(q.simple_regular((0, 1), "-"), M) == 0


def test_four_lines():
    t, g = q.four_lines_normalize([(0, 1), (1, 1), (1, 0), (2, 1)])
    assert t == (2, 1)
    assert q.four_lines_normalize([(0, 1), (1, 1), (1, 0), (0, 1)])[0] == (0, 1)
    with pytest.raises(q.RepError):
        q.four_lines_normalize([(0, 1), (0, 2), (1, 0), (1, 1)])


def test_rep_json_round_trip():
    M = q.named(q.reg_exc_name((1, 1), 3, "-"))
    back = q.Rep.from_json(M.to_json())
    assert back.dims == M.dims and all(np.array_equal(a, b) for a, b in zip(back.maps, M.maps))
    name = q.reg_exc_name((1, 1), 3, "-")
    assert q.IndecName.from_json(name.to_json()) == name
    with pytest.raises(q.RepError):
        q.Rep.from_json({"dims": [1, 1, 0, 0], "maps": []})
