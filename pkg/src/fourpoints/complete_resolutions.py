"""Complete resolutions of k^st and L_i from Koszul complexes with a dQ-action.

The construction totalises a bicomplex built from three ingredients:

* ``E``: the Koszul complex of a sequence of linear forms (x, y, z for k, or
  l_i, l_(i+1) for L_i), an exterior algebra on symbols dv;
* operators theta_0, theta_inf on ``E`` lifting dQ_0, dQ_inf, i.e. left
  multiplication by ``sum_v c_v dv`` with ``sum_v c_v v = Q_j``;
* divided powers eta^(a) on the left and polynomial monomials t^a on the
  right, joined at homological position 0 by multiplication with
  Omega = theta_0 theta_inf.

Cells and their bookkeeping (``p`` = exterior degree of the E factor):

* left  ``eta^(a) (x) e``         position ``2|a| + p``,      internal degree ``2|a| + p``
* right ``Omega^v (x) t^a (x) e``  position ``p - 3 - 2|a|``, internal degree ``p - 4 - 2|a|``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from . import homological as hom
from . import rings
from .factorizations import point_module
from .graded import FreeGraded, GradedMap, PresentedModule
from .rings import Poly, Ring

Subset = tuple[int, ...]
Element = dict  # basis key -> Poly


class ComplexError(ValueError):
    pass


# -- Koszul complexes with a dQ action ---------------------------------------

@dataclass
class KoszulDG:
    which: int
    forms: tuple[Poly, ...]                       # the v's, so that d(dv) = v
    lifts: tuple[dict[int, Poly], dict[int, Poly]]  # theta_0, theta_inf as {index: coefficient}

    @property
    def rank(self) -> int:
        return len(self.forms)

    def basis(self, p: int) -> list[Subset]:
        if p < 0 or p > self.rank:
            return []
        return list(combinations(range(self.rank), p))

    def boundary(self, S: Subset) -> dict[Subset, Poly]:
        out: dict[Subset, Poly] = {}
        for r, v in enumerate(S):
            rest = S[:r] + S[r + 1:]
            c = self.forms[v] if r % 2 == 0 else -self.forms[v]
            out[rest] = out.get(rest, rings.ZERO_POLY) + c
        return out

    def act(self, j: int, S: Subset) -> dict[Subset, Poly]:
        """theta_j . S, exterior multiplication on the left."""
        out: dict[Subset, Poly] = {}
        for v, c in self.lifts[j].items():
            if v in S:
                continue
            before = sum(1 for s in S if s < v)
            T = tuple(sorted(S + (v,)))
            coef = c if before % 2 == 0 else -c
            out[T] = out.get(T, rings.ZERO_POLY) + coef
        return out

    def apply(self, op, elem: dict[Subset, Poly]) -> dict[Subset, Poly]:
        out: dict[Subset, Poly] = {}
        for S, c in elem.items():
            for T, d in op(S).items():
                out[T] = out.get(T, rings.ZERO_POLY) + c * d
        return {T: c for T, c in out.items() if not c.is_zero()}

    def omega(self, S: Subset) -> dict[Subset, Poly]:
        """Omega = theta_0 theta_inf acting on S."""
        return self.apply(lambda T: self.act(0, T), self.act(1, S))

    # sanity checks over S (no quotient)
    def check_square_zero(self) -> bool:
        return all(not self.apply(lambda T: self.act(j, T), self.act(j, S))
                   for j in (0, 1) for p in range(self.rank + 1) for S in self.basis(p))

    def check_anticommute(self) -> bool:
        for p in range(self.rank + 1):
            for S in self.basis(p):
                a = self.apply(lambda T: self.act(0, T), self.act(1, S))
                b = self.apply(lambda T: self.act(1, T), self.act(0, S))
                if _add(a, b):
                    return False
        return True

    def check_homotopy(self) -> bool:
        """d(theta_j e) + theta_j d(e) = Q_j e for every basis element e."""
        Q = (rings.q0(), rings.qinf())
        for j in (0, 1):
            for p in range(self.rank + 1):
                for S in self.basis(p):
                    lhs = _add(self.apply(self.boundary, self.act(j, S)),
                               self.apply(lambda T: self.act(j, T), self.boundary(S)))
                    if _add(lhs, {S: -Q[j]}):
                        return False
        return True

    def check_boundary_square(self) -> bool:
        return all(not self.apply(self.boundary, self.boundary(S))
                   for p in range(self.rank + 1) for S in self.basis(p))


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, rings.ZERO_POLY) + v
    return {k: v for k, v in out.items() if not v.is_zero()}


# Factorizations Q_j = l_(j1) l_(j2) used for the point modules: for each
# E^i the lift of dQ_j is l_(j1) dl_(j2) with dl_(j2) among dl_i, dl_(i+1).
_POINT_LIFTS = {
    1: ((3, 1), (4, 2)),
    2: ((1, 3), (4, 2)),
    3: ((1, 3), (2, 4)),
    4: ((3, 1), (2, 4)),
}

def standard_k_lift():
    """(gamma_j, epsilon_j, zeta_j) with gamma x + epsilon y + zeta z = Q_j."""
    x, y, z = rings.x, rings.y, rings.z
    return ((x, -y, 0), (0, y, -z))


def alternate_k_lift():
    x, y, z = rings.x, rings.y, rings.z
    return ((x + z, -y, -x), (0, y, -z))


def koszul_dg(which: int, k_lift=None) -> KoszulDG:
    """E^0 (resolving k) or E^i (resolving L_i) with its dQ action.

    ``k_lift`` overrides the coefficients (gamma_j, epsilon_j, zeta_j) for E^0.
    """
    if which == 0:
        lift = standard_k_lift() if k_lift is None else k_lift
        theta = tuple({v: rings._coerce(c) for v, c in enumerate(row)
                       if not rings._coerce(c).is_zero()} for row in lift)
        return KoszulDG(0, (rings.x, rings.y, rings.z), theta)
    if which not in _POINT_LIFTS:
        raise ComplexError(f"Koszul index must be in 0..4, got {which}")
    gens = (which, which % 4 + 1)
    forms = tuple(rings.line(g) for g in gens)
    theta = []
    for j1, j2 in _POINT_LIFTS[which]:
        if j2 not in gens:
            raise ComplexError("inconsistent lift table")  # pragma: no cover
        theta.append({gens.index(j2): rings.line(j1)})
    return KoszulDG(which, forms, tuple(theta))


# -- the totalised complex ---------------------------------------------------

def _divided(q: int) -> list[tuple[int, int]]:
    return [(q - b, b) for b in range(q + 1)]


@dataclass
class Window:
    target: str
    lo: int
    hi: int
    maps: dict[int, GradedMap]           # n -> d_n : C_n -> C_(n-1), n in (lo, hi]
    cells: dict[int, list[tuple]]        # n -> basis keys of C_n

    def free(self, n: int) -> FreeGraded:
        return self.maps[n].src if n in self.maps else self.maps[n + 1].tgt

    def ranks(self) -> dict[int, int]:
        return {n: len(self.cells[n]) for n in range(self.lo, self.hi + 1)}

    def betti(self) -> hom.BettiTable:
        out: dict[tuple[int, int], int] = {}
        for n in range(self.lo, self.hi + 1):
            for g in self.free(n).gens:
                out[(n, g)] = out.get((n, g), 0) + 1
        return hom.BettiTable(out, (self.lo, self.hi))

    def cokernel(self, n: int) -> PresentedModule:
        """coker(d_(n+1): C_(n+1) -> C_n)."""
        if n + 1 not in self.maps:
            raise ComplexError(f"position {n + 1} is outside the window")
        return PresentedModule(self.maps[n + 1], f"coker d_{n + 1}")

    def to_json(self) -> dict:
        return {"target": self.target, "from": self.lo, "to": self.hi,
                "maps": {str(n): self.maps[n].to_json() for n in sorted(self.maps)}}


class BPRComplex:
    def __init__(self, E: KoszulDG, ring: Ring = rings.QUOTIENT):
        self.E = E
        self.ring = ring

    def cells(self, n: int) -> list[tuple]:
        out = []
        for p in range(self.E.rank + 1):
            if (n - p) >= 0 and (n - p) % 2 == 0:
                for a in _divided((n - p) // 2):
                    for S in self.E.basis(p):
                        out.append(("L", a, S))
        for p in range(self.E.rank + 1):
            m = p - 3 - n
            if m >= 0 and m % 2 == 0:
                for a in _divided(m // 2):
                    for S in self.E.basis(p):
                        out.append(("R", a, S))
        return out

    @staticmethod
    def degree(cell: tuple) -> int:
        kind, a, S = cell
        q = a[0] + a[1]
        return 2 * q + len(S) if kind == "L" else len(S) - 4 - 2 * q

    def differential(self, cell: tuple) -> dict[tuple, Poly]:
        kind, a, S = cell
        E = self.E
        out: dict[tuple, Poly] = {}

        def put(key, terms, sign=1):
            for T, c in terms.items():
                k = (key[0], key[1], T)
                out[k] = out.get(k, rings.ZERO_POLY) + (c if sign == 1 else -c)

        if kind == "L":
            put(("L", a), E.boundary(S))
            for j in (0, 1):
                if a[j] > 0:
                    b = (a[0] - (j == 0), a[1] - (j == 1))
                    put(("L", b), E.act(j, S))
            if a == (0, 0):
                put(("R", (0, 0)), E.omega(S))
        else:
            put(("R", a), E.boundary(S), sign=-1)
            for j in (0, 1):
                b = (a[0] + (j == 0), a[1] + (j == 1))
                put(("R", b), E.act(j, S))
        return {k: rings.normal_form(self.ring, v) for k, v in out.items()}

    def free(self, n: int) -> FreeGraded:
        return FreeGraded(self.ring, tuple(self.degree(c) for c in self.cells(n)))

    def map(self, n: int) -> GradedMap:
        """d_n: C_n -> C_(n-1)."""
        src, tgt = self.cells(n), self.cells(n - 1)
        index = {c: i for i, c in enumerate(tgt)}
        entries = [[rings.ZERO_POLY] * len(src) for _ in tgt]
        for j, c in enumerate(src):
            for k, v in self.differential(c).items():
                if v.is_zero():
                    continue
                if k not in index:
                    raise ComplexError(f"differential leaves the complex at {k}")  # pragma: no cover
                entries[index[k]][j] = v
        return GradedMap(self.free(n), self.free(n - 1), entries)

    def window(self, lo: int, hi: int, target: str = "") -> Window:
        if lo > hi:
            raise ComplexError("empty window")
        maps = {n: self.map(n) for n in range(lo + 1, hi + 1)}
        cells = {n: self.cells(n) for n in range(lo, hi + 1)}
        return Window(target, lo, hi, maps, cells)


TARGETS = ("k", "L1", "L2", "L3", "L4")


def parse_target(target: str) -> int:
    t = target.strip()
    if t == "k":
        return 0
    if len(t) == 2 and t[0] in "Ll" and t[1] in "1234":
        return int(t[1])
    raise ComplexError(f"unknown target {target!r}; expected one of {', '.join(TARGETS)}")


def bpr_window(target: str, lo: int, hi: int, k_lift=None) -> Window:
    which = parse_target(target)
    return BPRComplex(koszul_dg(which, k_lift)).window(lo, hi, target)


# -- cross validation --------------------------------------------------------

@dataclass
class CrossCheck:
    target: str
    minimal: bool
    complex_ok: bool
    cokernel_iso: bool
    betti_match: bool
    first_difference: Optional[tuple] = None
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.minimal and self.complex_ok and self.cokernel_iso and self.betti_match


def is_complex(w: Window) -> bool:
    for n in range(w.lo + 2, w.hi + 1):
        if not w.maps[n - 1].compose(w.maps[n]).is_zero():
            return False
    return True


def reference_module(target: str) -> PresentedModule:
    which = parse_target(target)
    return hom.stabilize_k() if which == 0 else point_module(which)


def cross_validate(target: str, lo: int = -3, hi: int = 6, k_lift=None,
                   seed: int = 0) -> CrossCheck:
    w = bpr_window(target, lo, hi, k_lift)
    minimal = all(m.is_minimal() for m in w.maps.values())
    complex_ok = is_complex(w)
    ref = reference_module(target)
    iso = bool(hom.iso_test(w.cokernel(0), ref, seed=seed)) if hi >= 1 else True
    expected = hom.complete_betti(ref, hi, -lo) if lo < 0 else hom.betti_table(ref, hi)
    got = w.betti()
    diff = None
    keys = sorted(set(expected.entries) | set(got.entries))
    for key in keys:
        if key[0] < lo or key[0] > hi:
            continue
        if expected[key] != got[key]:
            diff = (key, expected[key], got[key])
            break
    details = []
    if diff:
        details.append(f"first differing cell beta{diff[0]}: expected {diff[1]}, got {diff[2]}")
    return CrossCheck(target, minimal, complex_ok, iso, diff is None, diff, details)


def lift_independence(lo: int = -3, hi: int = 4, seed: int = 0) -> bool:
    """Two valid lifts for E^0 give isomorphic cokernels at every position."""
    a = bpr_window("k", lo, hi, standard_k_lift())
    b = bpr_window("k", lo, hi, alternate_k_lift())
    for n in range(lo, hi):
        if not hom.iso_test(a.cokernel(n), b.cokernel(n), seed=seed):
            return False
    return True
