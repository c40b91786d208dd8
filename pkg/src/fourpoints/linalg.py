"""Dense linear algebra over a prime field F_p.

Matrices are plain ``numpy`` int64 arrays whose entries are reduced residues
in ``[0, p)``.  The default prime is the Mersenne prime 2**31 - 1; any odd
prime below 2**31 may be configured with :func:`set_prime` (products of two
residues then fit in an int64).
"""

from __future__ import annotations

import functools
from typing import Callable, Optional, Sequence

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

DEFAULT_PRIME = 2147483647

_prime = DEFAULT_PRIME
_caches: list[Callable[[], None]] = []


class FieldError(ValueError):
    pass


def prime() -> int:
    return _prime


def set_prime(p: int) -> None:
    """Switch the ground field.  Clears every registered cache."""
    global _prime
    p = int(p)
    if p == 2 or p >= 2**31 or not isprime(p):
        raise FieldError(f"need an odd prime below 2**31, got {p}")
    _prime = p
    for clear in _caches:
        clear()


def cached(fn):
    """``lru_cache`` that is flushed whenever the prime changes."""
    wrapped = functools.lru_cache(maxsize=None)(fn)
    _caches.append(wrapped.cache_clear)
    return wrapped


# -- scalars -----------------------------------------------------------------

def inv(a: int) -> int:
    a = int(a) % _prime
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in F_p")
    return pow(a, _prime - 2, _prime)


def residue(a) -> int:
    return int(a) % _prime


def signed(a: int) -> int:
    """Symmetric representative, for display."""
    a = int(a) % _prime
    return a - _prime if a > _prime // 2 else a


# -- constructors ------------------------------------------------------------

def mat(rows, shape: Optional[tuple[int, int]] = None) -> np.ndarray:
    a = np.array(rows, dtype=object)
    if shape is not None:
        a = a.reshape(shape)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    out = np.zeros(a.shape, dtype=np.int64)
    for idx, v in np.ndenumerate(a):
        out[idx] = int(v) % _prime
    return out


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def random_matrix(rng: np.random.Generator, r: int, c: int) -> np.ndarray:
    return rng.integers(0, _prime, size=(r, c), dtype=np.int64)


def random_invertible(rng: np.random.Generator, n: int) -> np.ndarray:
    while True:
        g = random_matrix(rng, n, n)
        if rank(g) == n:
            return g


# -- arithmetic --------------------------------------------------------------

def reduce(A: np.ndarray) -> np.ndarray:
    return np.asarray(A, dtype=np.int64) % _prime


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact product mod p (splits A into 16-bit limbs to avoid overflow)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    if A.size == 0 or B.size == 0:
        return zeros(A.shape[0], B.shape[1])
    lo = A & 0xFFFF
    hi = A >> 16
    out = (hi @ B) % _prime
    out = (out * 65536 + (lo @ B)) % _prime
    return out


def mul_all(*mats: np.ndarray) -> np.ndarray:
    return functools.reduce(matmul, mats)


def add(A, B):
    return (np.asarray(A, dtype=np.int64) + B) % _prime


def sub(A, B):
    return (np.asarray(A, dtype=np.int64) - B) % _prime


def scale(A, c: int):
    return (np.asarray(A, dtype=np.int64) * (int(c) % _prime)) % _prime


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


# -- elimination -------------------------------------------------------------

def _eliminate(A: np.ndarray, transform: bool):
    p = _prime
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    T = eye(m) if transform else None
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
            if transform:
                T[[r, i]] = T[[i, r]]
        s = inv(A[r, c])
        A[r] = A[r] * s % p
        if transform:
            T[r] = T[r] * s % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            f = col[rows, None]
            A[rows] = (A[rows] - f * A[r][None, :] % p) % p
            if transform:
                T[rows] = (T[rows] - f * T[r][None, :] % p) % p
        pivots.append(c)
        r += 1
    return A, T, r, pivots


def rref(A: np.ndarray):
    """Return ``(R, T, rank, pivots)`` with ``T @ A == R`` in reduced echelon form."""
    R, T, r, piv = _eliminate(A, transform=True)
    return R, T, r, piv


def rank(A: np.ndarray) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        A = A.T
    return _eliminate(A, transform=False)[2]


def kernel_basis(A: np.ndarray) -> np.ndarray:
    """Columns spanning the right kernel of ``A``."""
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    if m == 0:
        return eye(n)
    R, _, r, piv = _eliminate(A, transform=False)
    free = [c for c in range(n) if c not in set(piv)]
    K = zeros(n, len(free))
    for k, f in enumerate(free):
        K[f, k] = 1
        for i, pc in enumerate(piv):
            K[pc, k] = (-R[i, f]) % _prime
    return K


def left_kernel(A: np.ndarray) -> np.ndarray:
    """Rows spanning the left kernel of ``A``: ``L @ A == 0``."""
    return kernel_basis(np.asarray(A).T).T


def solve(A: np.ndarray, b) -> Optional[np.ndarray]:
    """A solution of ``A x = b`` or ``None`` when ``b`` is outside the column span."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    m, n = A.shape
    if b.shape[0] != m:
        raise ValueError(f"rhs has length {b.shape[0]}, expected {m}")
    if m == 0:
        return zeros(n, 1)[:, 0]
    R, _, r, piv = _eliminate(np.hstack([A, b[:, None]]), transform=False)
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = R[i, n]
    return x


def solve_matrix(A: np.ndarray, B: np.ndarray) -> Optional[np.ndarray]:
    """Solve ``A X = B`` column by column in one elimination."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    m, n = A.shape
    k = B.shape[1]
    if m == 0:
        return zeros(n, k)
    R, _, r, piv = _eliminate(np.hstack([A, B]), transform=False)
    if any(pc >= n for pc in piv):
        return None
    X = zeros(n, k)
    for i, pc in enumerate(piv):
        X[pc] = R[i, n:]
    return X


def inverse(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    X = solve_matrix(A, eye(n))
    if X is None or A.shape[1] != n:
        raise FieldError("matrix is singular")
    return X


def det(A: np.ndarray) -> int:
    p = _prime
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[0]
    d = 1
    for c in range(n):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            A[[c, i]] = A[[i, c]]
            d = -d
        d = d * int(A[c, c]) % p
        s = inv(A[c, c])
        below = A[c + 1:, c].copy()
        A[c + 1:] = (A[c + 1:] - (below[:, None] * s % p) * A[c][None, :] % p) % p
    return d % p


def column_span(A: np.ndarray) -> np.ndarray:
    """A basis (as columns) of the column space of ``A``."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return zeros(A.shape[0], 0)
    _, _, r, piv = _eliminate(A, transform=False)
    return A[:, piv]


def extend_basis(B: np.ndarray, V: np.ndarray) -> list[int]:
    """Indices of columns of ``V`` that extend span(B) to span(B, V)."""
    base = rank(B) if B.size else 0
    chosen: list[int] = []
    cur = B
    for j in range(V.shape[1]):
        trial = np.hstack([cur, V[:, j:j + 1]]) if cur.size else V[:, j:j + 1]
        if rank(trial) > base:
            cur = trial
            base += 1
            chosen.append(j)
    return chosen


def complement_columns(B: np.ndarray, V: np.ndarray) -> list[int]:
    """Like :func:`extend_basis` but in one elimination: columns of ``V`` that
    are pivots of ``[B | V]``."""
    if V.shape[1] == 0:
        return []
    M = np.hstack([B, V]) if B.shape[1] else V
    _, _, _, piv = _eliminate(M, transform=False)
    nb = B.shape[1]
    return [c - nb for c in piv if c >= nb]


# -- polynomials in one variable (for eigenvalue search) ----------------------

def krylov_min_poly(theta: np.ndarray, v: np.ndarray) -> list[int]:
    """Monic minimal polynomial of ``v`` under ``theta`` (coefficients, highest first)."""
    n = theta.shape[0]
    vecs = [np.asarray(v, dtype=np.int64) % _prime]
    for _ in range(n):
        nxt = matmul(theta, vecs[-1][:, None])[:, 0]
        K = np.stack(vecs, axis=1)
        c = solve(K, nxt)
        if c is not None:
            # theta^k v = sum c_i theta^i v
            coeffs = [1] + [(-int(c[i])) % _prime for i in reversed(range(len(vecs)))]
            return coeffs
        vecs.append(nxt)
    raise FieldError("Krylov sequence did not close")  # pragma: no cover


def roots(coeffs: list[int]) -> list[int]:
    """Distinct roots in F_p of a polynomial given highest coefficient first."""
    f = [int(c) % _prime for c in coeffs]
    while f and f[0] == 0:
        f = f[1:]
    if len(f) <= 1:
        return []
    _, factors = gf_factor([ZZ(c) for c in f], _prime, ZZ)
    out = []
    for g, _e in factors:
        if len(g) == 2:
            out.append(int(-g[1] * pow(int(g[0]), _prime - 2, _prime)) % _prime)
    return sorted(set(out))


def matrix_power(A: np.ndarray, k: int) -> np.ndarray:
    result = eye(A.shape[0])
    base = A
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result
