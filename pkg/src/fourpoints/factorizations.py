"""Matrix factorizations of the pencil quadrics and the modules they present.

Complexity-one MCM modules over R come from factorizations of some Q_t over a
hypersurface S/(Q_s) with s != t, reduced modulo the second quadric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import homological as hom
from . import linalg as la
from . import rings
from .graded import FreeGraded, GradedMap, PresentedModule
from .rings import Poly, Ring, x, y, z

SIGNS = ("+", "-")


class FactorizationError(ValueError):
    pass


def _sign(sign: str) -> str:
    if sign not in SIGNS:
        raise FactorizationError(f"sign must be '+' or '-', got {sign!r}")
    return sign


def _flip(sign: str) -> str:
    return "-" if sign == "+" else "+"


def default_home(t) -> tuple[int, int]:
    """Hypersurface parameter used to factor Q_t: infinity, or 0 when t is infinity."""
    return rings.ZERO if rings.normalize_point(t) == rings.INFINITY else rings.INFINITY


@dataclass(frozen=True)
class MFPair:
    """Square matrices with ``phi psi = f I = psi phi`` over ``ring``.

    ``phi: B(-1)^n -> B^n`` and ``psi: B(-2)^n -> B(-1)^n`` for the linear
    factorizations handled here.
    """

    ring: Ring
    f: Poly
    phi: GradedMap
    psi: GradedMap
    label: str = ""

    @property
    def size(self) -> int:
        return self.phi.shape[0]

    def swapped(self) -> "MFPair":
        return linear_pair(self.ring, self.f, _rows(self.psi), _rows(self.phi),
                           label=f"swap({self.label})")

    def module(self, ring: Ring = rings.QUOTIENT, name: str = "") -> PresentedModule:
        """coker(phi) over ``ring`` (by default over R)."""
        return PresentedModule(self.phi.with_ring(ring), name or self.label)


def _rows(A: GradedMap) -> list[list[Poly]]:
    return [list(r) for r in A.entries]


def linear_pair(ring: Ring, f: Poly, phi: Sequence[Sequence], psi: Sequence[Sequence],
                label: str = "") -> MFPair:
    """Pair of n x n matrices of linear forms, graded as B(-1)^n -> B^n."""
    n = len(phi)
    if len(psi) != n:
        raise FactorizationError("phi and psi must have the same size")
    P = GradedMap(FreeGraded(ring, (1,) * n), FreeGraded(ring, (0,) * n), phi)
    Q = GradedMap(FreeGraded(ring, (2,) * n), FreeGraded(ring, (1,) * n), psi)
    return MFPair(ring, rings.normal_form(ring, f), P, Q, label)


def _matmul(ring: Ring, A, B) -> list[list[Poly]]:
    n, m, k = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = rings.ZERO_POLY
            for l in range(m):
                acc = acc + A[i][l] * B[l][j]
            row.append(rings.normal_form(ring, acc))
        out.append(row)
    return out


def mf_verify(pair: MFPair) -> bool:
    """Both products reduce to f times the identity in the pair's ring."""
    ring = pair.ring
    f = rings.normal_form(ring, pair.f)
    if f.is_zero():
        return False
    A, B = _rows(pair.phi), _rows(pair.psi)
    n = len(A)
    target = [[f if i == j else rings.ZERO_POLY for j in range(n)] for i in range(n)]
    return _matmul(ring, A, B) == target and _matmul(ring, B, A) == target


# -- the explicit factorizations ---------------------------------------------

def phi_matrices(t) -> tuple[list[list[Poly]], list[list[Poly]]]:
    t0, t1 = (la.residue(c) for c in t)
    plus = [[t1 * (x + y), y + z], [t0 * (z - y), x - y]]
    minus = [[x - y, -(y + z)], [t0 * (y - z), t1 * (x + y)]]
    return plus, minus


def _home(t, s) -> Ring:
    s = default_home(t) if s is None else rings.normalize_point(s)
    if rings.normalize_point(t) == s:
        raise FactorizationError("the quadric must differ from the hypersurface it lives on")
    return rings.hypersurface(s)


def phi_pair(t, sign: str = "+", s=None) -> MFPair:
    """(Phi_t^+, Phi_t^-) or, for sign '-', the swapped pair, factoring Q_t."""
    _sign(sign)
    ring = _home(t, s)
    plus, minus = phi_matrices(t)
    phi, psi = (plus, minus) if sign == "+" else (minus, plus)
    return linear_pair(ring, rings.pencil(t), phi, psi, f"Phi_{rings.point_label(t)}^{sign}")


def psi_matrices(t) -> tuple[list[list[Poly]], list[list[Poly]]]:
    t = rings.normalize_point(t)
    if t == rings.ZERO:
        return ([[x + y, z], [0, x - y]], [[x - y, -z], [0, x + y]])
    if t == rings.ONE:
        return ([[x - z, y], [0, x + z]], [[x + z, -y], [0, x - z]])
    if t == rings.INFINITY:
        return ([[y - z, x], [0, y + z]], [[y + z, -x], [0, y - z]])
    raise FactorizationError(f"Psi is only defined at the singular parameters, not {t}")


def psi_pair(t, sign: str = "+", s=None) -> MFPair:
    _sign(sign)
    plus, minus = psi_matrices(t)
    ring = _home(t, s)
    phi, psi = (plus, minus) if sign == "+" else (minus, plus)
    return linear_pair(ring, rings.pencil(t), phi, psi, f"Psi_{rings.point_label(t)}^{sign}")


def degenerate_form(t, sign: str) -> Poly:
    """The linear form presenting D_t^sign."""
    _sign(sign)
    t = rings.normalize_point(t)
    table = {
        rings.ZERO: (x - y, x + y),
        rings.ONE: (x + z, x - z),
        rings.INFINITY: (y + z, y - z),
    }
    if t not in table:
        raise FactorizationError(f"D_t is only defined at the singular parameters, not {t}")
    plus, minus = table[t]
    return plus if sign == "+" else minus


def degenerate_pair(t, sign: str = "+", s=None) -> MFPair:
    """1 x 1 factorization of Q_t by the two lines of the singular conic."""
    a = degenerate_form(t, sign)
    b = degenerate_form(t, _flip(sign))
    return linear_pair(_home(t, s), rings.pencil(t), [[a]], [[b]],
                       f"D_{rings.point_label(t)}^{sign}")


# -- modules over R ----------------------------------------------------------

def _R(entries, src, tgt, name) -> PresentedModule:
    R = rings.QUOTIENT
    return PresentedModule(GradedMap(FreeGraded(R, src), FreeGraded(R, tgt), entries), name)


def fundamental_module(t, sign: str = "+") -> PresentedModule:
    """N_t^sign = coker(Phi_t^sign) over R, generated in degree 0."""
    _sign(sign)
    plus, minus = phi_matrices(t)
    label = f"N_{rings.point_label(t)}" + ("" if sign == "+" else "^-")
    return _R(plus if sign == "+" else minus, (1, 1), (0, 0), label)


def psi_module(t, sign: str = "+") -> PresentedModule:
    plus, minus = psi_matrices(t)
    return _R(plus if _sign(sign) == "+" else minus, (1, 1), (0, 0),
              f"coker Psi_{rings.point_label(t)}^{sign}")


def degenerate_module(t, sign: str = "+") -> PresentedModule:
    return _R([[degenerate_form(t, sign)]], (1,), (0,), f"D_{rings.point_label(t)}^{sign}")


def point_module(i: int) -> PresentedModule:
    """L_i = R / (l_i, l_(i+1))."""
    if i not in (1, 2, 3, 4):
        raise FactorizationError(f"point index must be in 1..4, got {i}")
    return _R([[rings.line(i), rings.line(i + 1)]], (1, 1), (0,), f"L_{i}")


def residue_field() -> PresentedModule:
    return hom.residue_field()


# -- uniserial modules in the tubes --------------------------------------------

def _extend(Z: PresentedModule, X: PresentedModule, name: str) -> PresentedModule:
    Zm, classes = hom.ext1_classes(Z, X)
    if len(classes) != 1:
        raise FactorizationError(
            f"expected a one-dimensional Ext^1({Z.name}, {X.name}), got {len(classes)}")
    Y = hom.extension_module(Zm, hom.minimize_module(X), classes[0], name)
    return hom.minimize_module(Y)


def fundamental_chain(t, r: int) -> PresentedModule:
    """N_t<r> for t off the singular parameters, built from N_t by extensions

    0 -> N_t -> N_t<r+1> -> N_t<r> -> 0.
    """
    if r < 1:
        raise FactorizationError("length must be at least 1")
    if rings.normalize_point(t) in rings.SINGULAR:
        raise FactorizationError("use degenerate_chain at t = 0, 1, inf")
    N = fundamental_module(t)
    M = N
    for k in range(1, r):
        M = _extend(M, N, f"N_{rings.point_label(t)}<{k + 1}>")
    return M


def degenerate_chain(t, r: int, sign: str = "+") -> PresentedModule:
    """D_t<r>^sign: uniserial with top D_t^sign, built by

    0 -> D_t^(sign * (-1)^k) -> D_t<k+1>^sign -> D_t<k>^sign -> 0.

    D_t<2>^sign is N_t^sign, presented by Phi_t^sign.
    """
    if r < 1:
        raise FactorizationError("length must be at least 1")
    M = degenerate_module(t, sign)
    if r == 1:
        return M
    M = fundamental_module(t, sign).renamed(f"D_{rings.point_label(t)}<2>^{sign}")
    for k in range(2, r):
        sub_sign = sign if k % 2 == 0 else _flip(sign)
        X = degenerate_module(t, sub_sign)
        M = _extend(M, X, f"D_{rings.point_label(t)}<{k + 1}>^{sign}")
    return M


def tube_module(t, r: int, sign: str = "+") -> PresentedModule:
    """N_t<r> off the singular parameters; D_t<r>^sign on them."""
    if rings.normalize_point(t) in rings.SINGULAR:
        return degenerate_chain(t, r, sign)
    return fundamental_chain(t, r)


# -- periodicity -------------------------------------------------------------

def periodicity_check(M: PresentedModule, period: int, samples: int = 8, seed: int = 0) -> bool:
    """syz^period(M) ≅ M(-period)."""
    if period < 1:
        raise FactorizationError("period must be positive")
    S = M
    for _ in range(period):
        S = hom.syzygy(S)
    return bool(hom.iso_test(S, M.twist(-period), samples=samples, seed=seed))
