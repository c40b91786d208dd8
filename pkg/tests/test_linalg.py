import numpy as np
import pytest

from fourpoints import linalg as la

P = la.DEFAULT_PRIME


def test_identity_rref():
    R, T, r, piv = la.rref(la.eye(3))
    assert r == 3
    assert np.array_equal(R, la.eye(3))
    assert piv == [0, 1, 2]


def test_zero_matrix_rank():
    R, _, r, piv = la.rref(la.zeros(2, 4))
    assert r == 0 and piv == []


def test_hand_reduced_rank():
    assert la.rank(la.mat([[1, 2], [2, 4]])) == 1


def test_rref_transform():
    A = la.mat([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    R, T, r, _ = la.rref(A)
    assert np.array_equal(la.matmul(T, A), R)
    assert r == 2


def test_kernel_of_identity_is_empty():
    assert la.kernel_basis(la.eye(4)).shape == (4, 0)


def test_kernel_of_zero():
    assert la.kernel_basis(la.zeros(2, 3)).shape == (3, 3)


def test_kernel_annihilated():
    A = la.mat([[1, 1, 0]])
    K = la.kernel_basis(A)
    assert K.shape == (3, 2)
    assert not la.matmul(A, K).any()


def test_left_kernel():
    A = la.mat([[1, 2], [2, 4], [0, 1]])
    L = la.left_kernel(A)
    assert L.shape[0] == 1
    assert not la.matmul(L, A).any()


def test_solve_identity():
    b = np.array([3, 5, 7])
    assert np.array_equal(la.solve(la.eye(3), b), b)


def test_solve_inconsistent():
    assert la.solve(la.mat([[1], [0]]), [0, 1]) is None


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        la.solve(la.eye(2), [1, 2, 3])


def test_solve_round_trip():
    rng = np.random.default_rng(3)
    A = la.random_invertible(rng, 5)
    x0 = rng.integers(0, P, size=5)
    x = la.solve(A, la.matmul(A, x0[:, None])[:, 0])
    assert np.array_equal(x, x0)


def test_inverse_and_det():
    A = la.mat([[2, 1], [7, 4]])
    assert la.det(A) == 1
    assert np.array_equal(la.matmul(A, la.inverse(A)), la.eye(2))
    with pytest.raises(la.FieldError):
        la.inverse(la.mat([[1, 2], [2, 4]]))


def test_matmul_large_entries_exact():
    A = la.mat([[P - 1, P - 2], [P - 3, 5]])
    B = la.mat([[P - 1, 1], [2, P - 7]])
    want = [[(int(A[i, 0]) * int(B[0, j]) + int(A[i, 1]) * int(B[1, j])) % P
             for j in range(2)] for i in range(2)]
    assert la.matmul(A, B).tolist() == want


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        la.inv(0)


def test_signed_residue():
    assert la.signed(P - 1) == -1
    assert la.residue(-1) == P - 1


def test_set_prime_validation():
    with pytest.raises(la.FieldError):
        la.set_prime(2)
    with pytest.raises(la.FieldError):
        la.set_prime(15)
    with pytest.raises(la.FieldError):
        la.set_prime(2**31 + 11)
    la.set_prime(101)
    assert la.prime() == 101
    assert la.inv(2) == 51


def test_roots_and_min_poly():
    # (u - 2)(u - 5) = u^2 - 7u + 10
    assert la.roots([1, -7, 10]) == [2, 5]
    assert la.roots([1, 0, 1]) == []  # p = 3 mod 4: no square root of -1
    theta = la.mat([[2, 1], [0, 2]])
    assert la.krylov_min_poly(theta, np.array([0, 1])) == [1, (-4) % P, 4]
    assert la.krylov_min_poly(theta, np.array([1, 0])) == [1, (-2) % P]


def test_complement_columns():
    B = la.mat([[1], [0], [0]])
    assert la.complement_columns(B, la.eye(3)) == [1, 2]
    assert la.extend_basis(B, la.eye(3)) == [1, 2]
