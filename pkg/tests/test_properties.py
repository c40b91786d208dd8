"""Invariants checked over random inputs."""

import numpy as np
from hypothesis import given, strategies as st

from fourpoints import factorizations as mf
from fourpoints import homological as hom
from fourpoints import linalg as la
from fourpoints import quiver as q
from fourpoints import rings
from fourpoints.rings import QUOTIENT as R

seeds = st.integers(0, 2**32 - 1)
small = st.integers(1, 6)


@given(seeds, small, small)
def test_kernel_is_annihilated(seed, r, c):
    rng = np.random.default_rng(seed)
    A = la.random_matrix(rng, r, c)
    A[:, -1] = A[:, 0]               # force a kernel
    K = la.kernel_basis(A)
    assert K.shape[1] == c - la.rank(A)
    assert not np.any(la.matmul(A, K))


@given(seeds, small, small)
def test_solve_round_trip(seed, r, c):
    rng = np.random.default_rng(seed)
    A = la.random_matrix(rng, r, c)
    x0 = la.random_matrix(rng, c, 1)[:, 0]
    b = la.matmul(A, x0[:, None])[:, 0]
    x = la.solve(A, b)
    assert x is not None
    assert np.array_equal(la.matmul(A, x[:, None])[:, 0], b)


@given(seeds, st.integers(1, 5))
def test_inverse(seed, n):
    M = la.random_invertible(np.random.default_rng(seed), n)
    assert np.array_equal(la.matmul(M, la.inverse(M)), la.eye(n))


@given(seeds, st.integers(0, 4), st.integers(0, 4))
def test_normal_form_idempotent_and_multiplicative(seed, d, e):
    rng = np.random.default_rng(seed)
    f = rings.random_form(rng, rings.AMBIENT, d)
    g = rings.random_form(rng, R, e)
    nf = rings.normal_form(R, f)
    assert rings.normal_form(R, nf) == nf
    lhs = rings.normal_form(R, f * g)
    rhs = rings.normal_form(R, nf * rings.normal_form(R, g))
    assert lhs == rhs


@given(seeds, st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_multiplication_associative(seed, a, b, c):
    rng = np.random.default_rng(seed)
    f, g, h = (rings.random_form(rng, R, d) for d in (a, b, c))
    gh = rings.coordinates(R, rings.normal_form(R, g * h), b + c)[:, None]
    left = la.matmul(rings.mult_matrix(R, f, b + c), gh)
    right = rings.coordinates(R, rings.normal_form(R, (f * g) * h), a + b + c)[:, None]
    assert np.array_equal(left, right)


@given(st.integers(-3, 3), st.sampled_from(["L1", "D0+", "k"]))
def test_betti_shift_under_twist(n, which):
    M = {"L1": mf.point_module(1), "D0+": mf.degenerate_module((0, 1), "+"),
         "k": hom.residue_field()}[which]
    base = hom.betti_table(M, 3)
    moved = hom.betti_table(hom.twist(M, n), 3)
    nz = lambda B: {k: v for k, v in B.entries.items() if v}
    assert nz(moved) == nz(base.shifted(n))


dims = st.tuples(*[st.integers(0, 6)] * 5)


@given(dims, dims, dims)
def test_euler_form_and_defect_are_additive(d, e, f):
    s = tuple(a + b for a, b in zip(d, e))
    assert q.euler_form(s, f) == q.euler_form(d, f) + q.euler_form(e, f)
    assert q.defect(s) == q.defect(d) + q.defect(e)


@given(seeds)
def test_euler_form_matches_hom_minus_ext(seed):
    rng = np.random.default_rng(seed)
    M = q.named(q.random_name(rng, 2, 2))
    N = q.named(q.random_name(rng, 2, 2))
    assert q.euler_form(M.dims, N.dims) == q.hom_dim(M, N) - q.ext1_dim(M, N)


@given(seeds, st.integers(2, 10**6))
def test_cross_ratio_invariant_under_gl2(seed, x):
    t = (x, 1)
    g = la.random_invertible(np.random.default_rng(seed), 2)
    lines = [(0, 1), (1, 1), (1, 0), t]
    moved = [tuple(int(c) for c in la.matmul(g, la.mat([[a], [b]]))[:, 0]) for a, b in lines]
    assert q.four_lines_normalize(moved)[0] == rings.normalize_point(t)


@given(seeds)
def test_tau_inverse_tau_is_identity_off_projectives(seed):
    rng = np.random.default_rng(seed)
    name = q.random_name(rng, 2, 2)
    M = q.random_basis_change(q.named(name), rng)
    if name.kind == "Proj" and name.m == 0:
        assert q.tau(M).total == 0
        return
    assert q.iso_rep(q.tau_inverse(q.tau(M)), M)


@given(seeds)
def test_rep_json_round_trip_and_identify(seed):
    rng = np.random.default_rng(seed)
    name = q.random_name(rng, 2, 2)
    M = q.random_basis_change(q.named(name), rng)
    back = q.Rep.from_json(M.to_json())
    assert back.dims == M.dims
    assert all(np.array_equal(a, b) for a, b in zip(back.maps, M.maps))
    assert q.identify(back) == name
    assert q.IndecName.from_json(name.to_json()) == name
