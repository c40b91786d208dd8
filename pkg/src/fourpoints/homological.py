"""Syzygies, minimal resolutions, Betti tables, Hilbert data, duals and friends.

Everything here works degree by degree: a graded submodule is tracked through
the subspaces it cuts out of the pieces of an ambient free module, and new
generators are the vectors not already reached by multiplying lower-degree
elements with x, y and z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import linalg as la
from . import rings
from .graded import (FreeGraded, GradedMap, GradingError, HomSpace, PresentedModule,
                     block_matrix, from_vectors, hom_graded, is_surjective_in, zero_map)
from .rings import Poly, Ring

KERNEL_MARGIN = 3
STABLE_RUN = 2
EXTENSION_CAP = 8


class ResolutionError(RuntimeError):
    """A kernel or Hilbert-function search did not stabilize within its bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (degree bound {bound})")
        self.bound = bound


# -- submodules of free modules ----------------------------------------------

def _grow(F: FreeGraded, prev: np.ndarray, d: int) -> np.ndarray:
    """Span of R_1 * prev, where prev is a subspace of F_(d-1); result in F_d."""
    if prev.shape[1] == 0:
        return la.zeros(F.dim(d), 0)
    parts = [la.matmul(F.mult_block(v, d - 1), prev) for v in (rings.x, rings.y, rings.z)]
    return la.column_span(np.hstack(parts))


def minimal_generators(F: FreeGraded, columns: Sequence[tuple[int, np.ndarray]]):
    """Pick minimal generators among homogeneous elements ``(degree, vector)`` of F.

    Returns the indices of the chosen elements, in increasing degree.
    """
    if not columns:
        return []
    order = sorted(range(len(columns)), key=lambda k: columns[k][0])
    lo, hi = columns[order[0]][0], columns[order[-1]][0]
    chosen = []
    span = la.zeros(F.dim(lo - 1), 0)
    for d in range(lo, hi + 1):
        span = _grow(F, span, d)
        here = [k for k in order if columns[k][0] == d]
        if here:
            V = np.stack([columns[k][1] for k in here], axis=1)
            picked = la.complement_columns(span, V)
            chosen.extend(here[i] for i in picked)
            span = la.column_span(np.hstack([span, V[:, picked]])) if picked else span
    return chosen


@dataclass
class KernelResult:
    map: GradedMap          # columns generate the kernel
    stabilized: bool
    bound: int


def kernel_of_map(A: GradedMap, degree_bound: Optional[int] = None) -> KernelResult:
    """Minimal generators of ``ker(A: F -> G)``.

    With no explicit bound the scan covers at least ``max(F.gens) + KERNEL_MARGIN``
    and then keeps going (up to ``EXTENSION_CAP`` more degrees) until
    ``STABLE_RUN`` consecutive degrees add no generator.  An explicit bound is
    a hard stop.  ``stabilized`` reports whether that empty run was observed.
    """
    F = A.src
    if F.rank == 0:
        return KernelResult(zero_map(FreeGraded(F.ring, ()), F), True, 0)
    lo = min(F.gens)
    if degree_bound is None:
        bound = max(F.gens) + KERNEL_MARGIN
        cap = bound + EXTENSION_CAP
    else:
        bound = cap = degree_bound
    span = la.zeros(0, 0)
    gens: list[int] = []
    vecs: list[np.ndarray] = []
    last_new = lo - 1
    d = lo
    while d <= bound or (d - 1 - last_new < STABLE_RUN and d <= cap):
        span = _grow(F, span, d) if d > lo else la.zeros(F.dim(d), 0)
        K = la.kernel_basis(A.block(d))
        if K.shape[1] > span.shape[1]:
            picked = la.complement_columns(span, K)
            if picked:
                last_new = d
                for c in picked:
                    gens.append(d)
                    vecs.append(K[:, c])
                span = la.column_span(np.hstack([span, K[:, picked]]))
        d += 1
    scanned = d - 1
    B = from_vectors(FreeGraded(F.ring, tuple(gens)), F, vecs)
    return KernelResult(B, scanned - last_new >= STABLE_RUN, scanned)


def kernel_map(A: GradedMap, degree_bound: Optional[int] = None) -> GradedMap:
    res = kernel_of_map(A, degree_bound)
    if not res.stabilized:
        raise ResolutionError("kernel generators still appearing", res.bound)
    return res.map


# -- minimization ------------------------------------------------------------

def _prune_units(A: GradedMap) -> GradedMap:
    ring = A.ring
    rows = [list(r) for r in A.entries]
    tg, sg = list(A.tgt.gens), list(A.src.gens)
    while True:
        hit = next(((i, j) for i, r in enumerate(rows) for j, f in enumerate(r)
                    if f and f.degree() == 0), None)
        if hit is None:
            break
        i, j = hit
        u = la.inv(rows[i][j].constant_term())
        # clear column j using row i (change of basis in the target)
        for k in range(len(rows)):
            if k != i and rows[k][j]:
                c = rows[k][j] * u
                rows[k] = [rings.normal_form(ring, a - c * b) for a, b in zip(rows[k], rows[i])]
        # the remaining entries of row i can be cleared by column operations
        # without touching other rows, so row i and column j simply drop out
        del rows[i]
        for r in rows:
            del r[j]
        del tg[i]
        del sg[j]
    return GradedMap(FreeGraded(ring, tuple(sg)), FreeGraded(ring, tuple(tg)), rows)


def minimize(A: GradedMap) -> GradedMap:
    """Presentation of the same cokernel with minimal generators and relations."""
    A = _prune_units(A)
    cols = [(A.src.gens[j], A.column_vector(j)) for j in range(A.src.rank)]
    keep = minimal_generators(A.tgt, cols)
    keep = sorted(keep)
    src = FreeGraded(A.ring, tuple(A.src.gens[j] for j in keep))
    return GradedMap(src, A.tgt, [[row[j] for j in keep] for row in A.entries])


def minimize_module(M: PresentedModule) -> PresentedModule:
    return PresentedModule(minimize(M.A), M.name)


# -- resolutions and Betti tables --------------------------------------------

@dataclass
class BettiTable:
    """Multiplicities beta_(i, j): i homological, j internal degree."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    window: tuple[int, int] = (0, 0)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def column(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in self.entries.items() if a == i and v}

    def total(self, i: int) -> int:
        return sum(self.column(i).values())

    def shifted(self, n: int) -> "BettiTable":
        """Table of M(n): beta_(i, j)(M(n)) = beta_(i, j + n)(M)."""
        return BettiTable({(i, j - n): v for (i, j), v in self.entries.items()}, self.window)

    def to_json(self) -> dict:
        return {"window": list(self.window),
                "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items()) if v]}

    def render(self) -> str:
        """Rows indexed by j - i, columns by i (the usual Macaulay layout)."""
        lo, hi = self.window
        cells = {(i, j - i): v for (i, j), v in self.entries.items() if v}
        if not cells:
            return "(zero table)"
        rows = sorted({r for _, r in cells})
        width = max(len(str(v)) for v in cells.values())
        width = max(width, max(len(str(i)) for i in range(lo, hi + 1)))
        head = "      " + " ".join(f"{i:>{width}}" for i in range(lo, hi + 1))
        lines = [head]
        for r in rows:
            vals = [cells.get((i, r), 0) for i in range(lo, hi + 1)]
            body = " ".join(f"{v:>{width}}" if v else f"{'.':>{width}}" for v in vals)
            lines.append(f"{r:>4}: {body}")
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        a = {k: v for k, v in self.entries.items() if v}
        b = {k: v for k, v in other.entries.items() if v}
        return a == b


def _betti_of(free_modules: Sequence[FreeGraded], start: int = 0) -> dict:
    out: dict[tuple[int, int], int] = {}
    for i, F in enumerate(free_modules):
        for g in F.gens:
            out[(start + i, g)] = out.get((start + i, g), 0) + 1
    return out


@dataclass
class Resolution:
    maps: list[GradedMap]       # maps[i]: F_(i+1) -> F_i
    betti: BettiTable

    @property
    def frees(self) -> list[FreeGraded]:
        if not self.maps:
            return []
        return [self.maps[0].tgt] + [m.src for m in self.maps]


def minimal_resolution(M: PresentedModule, length: int,
                       margin: Optional[int] = None) -> Resolution:
    """Maps ``F_length -> ... -> F_0`` and the Betti table on ``[0, length]``.

    Each kernel search runs ``margin`` degrees past the top generator degree of
    the map being resolved (default ``KERNEL_MARGIN``).
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    A = minimize(M.A)
    maps = [A]
    while len(maps) < length:
        prev = maps[-1]
        bound = None
        if margin is not None and prev.src.rank:
            bound = max(prev.src.gens) + margin
        maps.append(kernel_map(prev, bound))
    frees = [A.tgt] + [m.src for m in maps]
    frees = frees[:length + 1]
    return Resolution(maps[:length], BettiTable(_betti_of(frees), (0, length)))


def betti_table(M: PresentedModule, length: int, margin: Optional[int] = None) -> BettiTable:
    return minimal_resolution(M, length, margin).betti


# -- module operations -------------------------------------------------------

def twist(M: PresentedModule, n: int) -> PresentedModule:
    return M.twist(n)


def syzygy(M: PresentedModule, degree_bound: Optional[int] = None) -> PresentedModule:
    A = minimize(M.A)
    B = kernel_map(A, degree_bound)
    return PresentedModule(minimize(B), _tag("syz", M.name))


def dual(M: PresentedModule, degree_bound: Optional[int] = None) -> PresentedModule:
    """``Hom_R(M, R)`` presented as the image of the kernel of ``A^T``."""
    A = minimize(M.A)
    K = kernel_map(A.transpose(), degree_bound)
    C = kernel_map(K, degree_bound)
    return PresentedModule(minimize(C), _tag("dual", M.name))


def cosyzygy(M: PresentedModule) -> PresentedModule:
    out = dual(syzygy(dual(M)))
    return out.renamed(_tag("cosyz", M.name))


def tau(M: PresentedModule) -> PresentedModule:
    """Auslander-Reiten translate of an MCM module: syz(M)(1)."""
    return syzygy(M).twist(1).renamed(_tag("tau", M.name))


def tau_inverse(M: PresentedModule) -> PresentedModule:
    return cosyzygy(M.twist(-1)).renamed(_tag("tau^-1", M.name))


def _tag(op: str, name: str) -> str:
    return f"{op}({name})" if name else ""


def complete_betti(M: PresentedModule, forward: int, backward: int) -> BettiTable:
    """Betti table of the complete resolution on ``[-backward, forward]``.

    The part in negative homological degree comes from resolving the dual:
    beta_(-i, j)(M) = beta_(i-1, -j)(M*).
    """
    fwd = betti_table(M, forward).entries
    out = dict(fwd)
    if backward > 0:
        back = betti_table(dual(M), backward - 1).entries
        for (i, j), v in back.items():
            out[(-(i + 1), -j)] = v
    return BettiTable(out, (-backward, forward))


# -- Hilbert data ------------------------------------------------------------

@dataclass
class HilbertData:
    numerator: dict[int, int]   # exponent -> coefficient of Q_M
    nu: int
    e: int
    window: tuple[int, int]

    @property
    def ulrich(self) -> bool:
        return self.nu == self.e

    def render(self) -> str:
        terms = []
        for k in sorted(self.numerator):
            c = self.numerator[k]
            if not c:
                continue
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(mono if c == 1 and k != 0 else (str(c) if k == 0 else f"{c}{mono}"))
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"Q": {str(k): v for k, v in sorted(self.numerator.items()) if v},
                "nu": self.nu, "e": self.e, "ulrich": self.ulrich}


def hilbert_data(M: PresentedModule, bound: Optional[int] = None) -> HilbertData:
    A = minimize(M.A)
    Mm = PresentedModule(A)
    gens = A.tgt.gens
    if not gens:
        return HilbertData({}, 0, 0, (0, 0))
    lo = min(gens) - 1
    hi = (max(gens) + 4) if bound is None else bound
    h = Mm.hilbert_function(lo, hi)
    if len(set(h[-STABLE_RUN - 1:])) != 1:
        raise ResolutionError("Hilbert function not yet constant", hi)
    Q: dict[int, int] = {}
    prev = 0
    for d, v in zip(range(lo, hi + 1), h):
        if v - prev:
            Q[d] = v - prev
        prev = v
    return HilbertData(Q, A.tgt.rank, sum(Q.values()), (lo, hi))


# -- isomorphism -------------------------------------------------------------

@dataclass
class IsoResult:
    isomorphic: bool
    witness: Optional[GradedMap] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def _window(M: PresentedModule, N: PresentedModule) -> tuple[int, int]:
    gens = list(M.F0.gens) + list(N.F0.gens)
    rel = list(M.F1.gens) + list(N.F1.gens)
    if not gens:
        return (0, 0)
    return (min(gens), max(gens + rel) + 2)


def iso_test(M: PresentedModule, N: PresentedModule, samples: int = 8,
             seed: int = 0, window: Optional[tuple[int, int]] = None) -> IsoResult:
    """Decide ``M ≅ N`` (degree-preserving) by finding a surjective Hom element.

    Equal Hilbert functions on the window plus a map that is onto in the
    generator degrees of N give a bijection on every piece of the window.
    """
    M = minimize_module(M)
    N = minimize_module(N)
    lo, hi = window or _window(M, N)
    if M.hilbert_function(lo, hi) != N.hilbert_function(lo, hi):
        return IsoResult(False, None, "Hilbert functions differ")
    if M.F0.rank != N.F0.rank:
        return IsoResult(False, None, "generator counts differ")
    if M.F0.rank == 0:
        return IsoResult(True, zero_map(M.F0, N.F0), "both zero")
    H = hom_graded(M, N)
    if H.dim == 0:
        return IsoResult(False, None, "no degree-zero maps")
    degrees = sorted(set(N.F0.gens))

    def onto(G: GradedMap) -> bool:
        return all(is_surjective_in(M, N, G, d) for d in degrees)

    rng = np.random.default_rng(seed)
    for _ in range(samples):
        G = H.element(rng.integers(0, la.prime(), size=H.dim))
        if onto(G):
            return IsoResult(True, G, "generic element is onto")
    for c in _fallback_coefficients(H.dim):
        G = H.element(c)
        if onto(G):
            return IsoResult(True, G, "deterministic search")
    return IsoResult(False, None, "no surjective map found")


def _fallback_coefficients(n: int):
    for i in range(n):
        v = np.zeros(n, dtype=np.int64)
        v[i] = 1
        yield v
    for i in range(n):
        for j in range(i + 1, n):
            v = np.zeros(n, dtype=np.int64)
            v[i] = 1
            v[j] = 1
            yield v


def end_dim(M: PresentedModule) -> int:
    return hom_graded(M, M).dim


def is_free(M: PresentedModule) -> bool:
    return minimize(M.A).src.rank == 0


# -- Ext ---------------------------------------------------------------------

@dataclass
class ExtSpace:
    """Degree-zero ``Ext^i(M, N)``; classes are cocycles ``F_i(M) -> F0(N)``."""

    degree: int
    cocycles: HomSpace
    classes: np.ndarray        # columns: G-vectors of a basis of Ext

    @property
    def dim(self) -> int:
        return self.classes.shape[1]

    def basis(self) -> list[GradedMap]:
        return [self.cocycles.g_map(self.classes[:, k]) for k in range(self.dim)]


def ext(M: PresentedModule, N: PresentedModule, i: int, shift: int = 0,
        resolution: Optional[Resolution] = None) -> ExtSpace:
    if i < 0:
        raise ValueError("negative Ext degree")
    res = resolution or minimal_resolution(M, i + 1)
    frees = res.frees
    Nt = N.twist(shift) if shift else N
    d_next = res.maps[i]
    top = PresentedModule(d_next)
    Z = hom_graded(top, Nt)
    if i == 0:
        return ExtSpace(0, Z, Z.g_vectors)
    d_i = res.maps[i - 1]
    Fi, Fprev = frees[i], frees[i - 1]
    N0 = Nt.F0
    # coboundaries: psi o d_i for psi running over a basis of Hom(F_(i-1), F0(N))
    cob = []
    g_sizes = [N0.dim(e) for e in Fi.gens]
    g_off = np.concatenate([[0], np.cumsum(g_sizes)]).astype(int)
    for k, deg in enumerate(Fprev.gens):
        n = N0.dim(deg)
        if n == 0:
            continue
        blocks = []
        for j, e in enumerate(Fi.gens):
            a = d_i.entries[k][j]
            blocks.append(N0.mult_block(a, deg) if a else la.zeros(g_sizes[j], n))
        cob.append(np.vstack(blocks) if blocks else la.zeros(0, n))
    ng = int(g_off[-1])
    C = np.hstack(cob) if cob else la.zeros(ng, 0)
    base = np.hstack([Z.relations, C]) if C.size else Z.relations
    chosen = la.complement_columns(base, Z.g_vectors)
    return ExtSpace(i, Z, Z.g_vectors[:, chosen])


# -- extensions --------------------------------------------------------------

def extension_module(Z: PresentedModule, X: PresentedModule, xi: GradedMap,
                     name: str = "") -> PresentedModule:
    """Middle term Y of ``0 -> X -> Y -> Z -> 0`` with class represented by xi.

    xi maps the relation module ``F1(Z)`` to ``F0(X)``; Z is used as given, so
    callers pass the presentation their cocycle was computed on.
    """
    if xi.src != Z.F1 or xi.tgt != X.F0:
        raise GradingError(
            f"cocycle has bidegree {list(xi.src.gens)} -> {list(xi.tgt.gens)}, "
            f"expected {list(Z.F1.gens)} -> {list(X.F0.gens)}")
    A = block_matrix([[X.A, xi], [zero_map(X.F1, Z.F0), Z.A]])
    return PresentedModule(A, name)


def ext1_classes(Z: PresentedModule, X: PresentedModule) -> tuple[PresentedModule, list[GradedMap]]:
    """Minimized Z and a basis of Ext^1(Z, X) as maps ``F1(Z) -> F0(X)``."""
    Zm = minimize_module(Z)
    E = ext(Zm, X, 1)
    return Zm, E.basis()


# -- the residue field -------------------------------------------------------

def residue_field(ring: Ring = rings.QUOTIENT) -> PresentedModule:
    F1 = FreeGraded(ring, (1, 1, 1))
    F0 = FreeGraded(ring, (0,))
    return PresentedModule(GradedMap(F1, F0, [[rings.x, rings.y, rings.z]]), "k")


def stabilize_k() -> PresentedModule:
    """MCM approximation of k: the cosyzygy of its first syzygy."""
    m = syzygy(residue_field())
    return cosyzygy(m).renamed("k^st")


# -- MCM checks --------------------------------------------------------------

def ext_vanishes(M: PresentedModule, N: PresentedModule, degrees: Sequence[int],
                 shifts: Sequence[int]) -> bool:
    res = minimal_resolution(M, max(degrees) + 1)
    return all(ext(M, N, i, s, res).dim == 0 for i in degrees for s in shifts)


def is_mcm(M: PresentedModule, shifts: Sequence[int] = (-2, -1, 0, 1, 2)) -> bool:
    """Spot check of maximal Cohen-Macaulayness: Ext^1(M, R(s)) = 0 on a window."""
    Rm = PresentedModule(zero_map(FreeGraded(M.ring, ()), FreeGraded(M.ring, (0,))), "R")
    return ext_vanishes(M, Rm, [1], shifts)
