"""The functor E from graded MCM modules to D4 representations.

On the modules handled here E(M) is a plain Hom computation into
U = L_1 + L_2 + L_3 + L_4 + k:

    V_i = Hom_gr(M, L_i),   V_0 = Hom_gr(M, k),

with arrows given by composing with the quotient maps q_i: L_i -> k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import factorizations as mf
from . import homological as hom
from . import linalg as la
from . import quiver as q
from . import rings
from .graded import GradedMap, PresentedModule, hom_graded

VERTICES = (0, 1, 2, 3, 4)


class BridgeError(RuntimeError):
    pass


@dataclass
class TiltingData:
    """The summands of U and the quotient maps q_i: L_i -> k."""

    points: tuple[PresentedModule, ...]
    residue: PresentedModule
    quotients: tuple[GradedMap, ...]

    def summand(self, v: int) -> PresentedModule:
        return self.residue if v == 0 else self.points[v - 1]


def tilting_data() -> TiltingData:
    points = tuple(mf.point_module(i) for i in q.ARMS)
    k = hom.residue_field()
    quotients = []
    for L in points:
        H = hom_graded(L, k)
        if H.dim != 1:
            raise BridgeError(f"Hom({L.name}, k) has dimension {H.dim}, expected 1")
        quotients.append(H.basis()[0][0])
    return TiltingData(points, k, tuple(quotients))


_TILTING: dict[int, TiltingData] = {}


def _tilting() -> TiltingData:
    p = la.prime()
    if p not in _TILTING:
        _TILTING[p] = tilting_data()
    return _TILTING[p]


def apply_E(M: PresentedModule, data: Optional[TiltingData] = None) -> q.Rep:
    data = data or _tilting()
    M = hom.minimize_module(M)
    to_k = hom_graded(M, data.residue)
    d0 = to_k.dim
    dims = [d0]
    maps = []
    for L, qi in zip(data.points, data.quotients):
        H = hom_graded(M, L)
        cols = [to_k.coords(qi @ G) for G, _ in H.basis()]
        maps.append(np.stack(cols, axis=1) % la.prime() if cols else la.zeros(d0, 0))
        dims.append(H.dim)
    return q.Rep(tuple(dims), tuple(maps))


# -- the module pool ---------------------------------------------------------

@dataclass
class PoolEntry:
    label: str
    module: PresentedModule
    expected: Optional[q.Rep] = None      # the named image under E, when known
    regular: Optional[bool] = None        # complexity one


def module_pool(t_values: Sequence[tuple[int, int]] = ((2, 1), (3, 1))) -> list[PoolEntry]:
    """N_t, N_t<2>, D_t^+-, D_t<2>^+-, L_i and k^st, with their expected E-images."""
    pool = []
    for t in t_values:
        lab = rings.point_label(t)
        pool.append(PoolEntry(f"N_{lab}", mf.fundamental_module(t), q.fundamental(t), True))
        pool.append(PoolEntry(f"N_{lab}<2>", mf.fundamental_chain(t, 2),
                              q.named(q.reg_hom_name(t, 2)), True))
    for t in rings.SINGULAR:
        lab = rings.point_label(t)
        for s in mf.SIGNS:
            pool.append(PoolEntry(f"D_{lab}^{s}", mf.degenerate_module(t, s),
                                  q.simple_regular(t, s), True))
            pool.append(PoolEntry(f"D_{lab}<2>^{s}", mf.degenerate_chain(t, 2, s),
                                  q.regular_pair(t, s), True))
    for i in q.ARMS:
        pool.append(PoolEntry(f"L_{i}", mf.point_module(i), q.projective(i), False))
    pool.append(PoolEntry("k^st", hom.stabilize_k(), q.projective(0), False))
    return pool


# -- checks ------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def image_check(M: PresentedModule, expected: q.Rep, label: str = "") -> CheckResult:
    E = apply_E(M)
    ok = bool(q.iso_rep(E, expected))
    return CheckResult(label or M.name, ok, {"dims": list(E.dims), "expected": list(expected.dims)})


def random_parameters(rng: np.random.Generator, n: int) -> list[tuple[int, int]]:
    """n distinct points of P^1 away from 0, 1, inf."""
    out: list[tuple[int, int]] = []
    while len(out) < n:
        t = (int(rng.integers(2, la.prime() - 1)), 1)
        if t not in rings.SINGULAR and t not in out:
            out.append(t)
    return out


def fundamental_image_checks(ts: Sequence[tuple[int, int]]) -> list[CheckResult]:
    out = []
    for t in ts:
        N = mf.fundamental_module(t)
        E = apply_E(N)
        hom_ok = E.dims == (2, 1, 1, 1, 1)
        iso = bool(q.iso_rep(E, q.fundamental(t)))
        out.append(CheckResult(f"E(N_{rings.point_label(t)}) = R_t", hom_ok and iso,
                               {"dims": list(E.dims)}))
    return out


def theorem_checks(ts: Sequence[tuple[int, int]]) -> list[CheckResult]:
    """E(N_t) = R_t, E(D_t^+-) = S_t^+-, E(L_i) = P(i), E(k^st) = P(0)."""
    out = fundamental_image_checks(ts)
    for t in rings.SINGULAR:
        for s in mf.SIGNS:
            out.append(image_check(mf.degenerate_module(t, s), q.simple_regular(t, s),
                                   f"E(D_{rings.point_label(t)}^{s}) = S^{s}"))
    for i in q.ARMS:
        out.append(image_check(mf.point_module(i), q.projective(i), f"E(L_{i}) = P({i})"))
    out.append(image_check(hom.stabilize_k(), q.projective(0), "E(k^st) = P(0)"))
    return out


def tau_exchange_check(M: PresentedModule) -> CheckResult:
    """E(tau M) ≅ tau^-1 E(M)."""
    left = apply_E(hom.tau(M))
    right = q.tau_inverse(apply_E(M))
    ok = bool(q.iso_rep(left, right))
    return CheckResult(f"E(tau {M.name}) = tau^-1 E({M.name})", ok,
                       {"E(tau M)": list(left.dims), "tau^-1 E(M)": list(right.dims)})


def defect_dictionary(pool: Sequence[PoolEntry]) -> list[CheckResult]:
    """defect(E(M)) = 0 exactly when M is periodic of period at most 2."""
    out = []
    for entry in pool:
        E = apply_E(entry.module)
        periodic = any(mf.periodicity_check(entry.module, p) for p in (1, 2))
        zero = q.defect(E) == 0
        out.append(CheckResult(entry.label, zero == periodic,
                               {"defect": q.defect(E), "periodic": periodic}))
    return out


# -- preprojective algebra dimensions -------------------------------------------

@dataclass
class PreprojectiveTable:
    """dim Ext^i(U_a, U_b(-i)) against dim (tau^-i P(a))_b, per degree and pair."""

    module_side: dict[int, np.ndarray]
    quiver_side: dict[int, np.ndarray]

    def totals(self) -> list[tuple[int, int, int]]:
        return [(i, int(self.module_side[i].sum()), int(self.quiver_side[i].sum()))
                for i in sorted(self.module_side)]

    def mismatches(self) -> list[int]:
        return [i for i in sorted(self.module_side)
                if not np.array_equal(self.module_side[i], self.quiver_side[i])]

    def corner(self, a: int, b: int) -> list[int]:
        return [int(self.module_side[i][a, b]) for i in sorted(self.module_side)]

    def render(self) -> str:
        lines = ["deg  Ext(U,U(-i))  Hom(A,tau^-i A)  e0-corner"]
        for i, m, qq in self.totals():
            lines.append(f"{i:>3}  {m:>12}  {qq:>15}  {int(self.module_side[i][0, 0]):>9}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"module": {i: v.tolist() for i, v in self.module_side.items()},
                "quiver": {i: v.tolist() for i, v in self.quiver_side.items()},
                "totals": self.totals()}


def preprojective_dims(n_max: int = 5, cap: int = 6) -> PreprojectiveTable:
    if n_max > cap:
        raise BridgeError(f"n_max = {n_max} exceeds the cost guard {cap}")
    data = _tilting()
    summands = [data.summand(v) for v in VERTICES]
    resolutions = [hom.minimal_resolution(U, n_max + 1) for U in summands]
    module_side, quiver_side = {}, {}
    orbits = {a: q.projective(a) for a in VERTICES}
    for i in range(n_max + 1):
        mod = np.zeros((5, 5), dtype=np.int64)
        qui = np.zeros((5, 5), dtype=np.int64)
        for a in VERTICES:
            for b in VERTICES:
                mod[a, b] = hom.ext(summands[a], summands[b], i, -i, resolutions[a]).dim
                qui[a, b] = orbits[a].dims[b]
        module_side[i] = mod
        quiver_side[i] = qui
        orbits = {a: q.tau_inverse(orbits[a]) for a in VERTICES}
    return PreprojectiveTable(module_side, quiver_side)


# -- tilting orthogonality -------------------------------------------------------

def tilting_orthogonality(length: int = 6) -> CheckResult:
    """beta_(n,0)(L_i) = 0 for 1 <= n <= length and beta_(0,0)(L_i) = 1."""
    detail = {}
    ok = True
    for i in q.ARMS:
        B = hom.betti_table(mf.point_module(i), length)
        row = [B[(n, 0)] for n in range(length + 1)]
        detail[f"L_{i}"] = row
        ok &= row[0] == 1 and not any(row[1:])
    return CheckResult("beta_(n,0)(L_i) vanishes for n >= 1", ok, detail)
