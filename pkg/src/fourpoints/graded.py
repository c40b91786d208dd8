"""Graded free modules, homogeneous matrices and finitely presented modules.

A :class:`FreeGraded` with generator degrees ``(d_1, ..., d_n)`` stands for
``R(-d_1) + ... + R(-d_n)``.  Its degree-``d`` piece is the direct sum of the
ring pieces ``R_{d - d_i}``, laid out generator by generator in the monomial
order of :func:`rings.basis`.  All linear algebra on modules happens on these
pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from . import linalg as la
from . import rings
from .rings import Poly, Ring


class GradingError(ValueError):
    pass


# -- free modules ------------------------------------------------------------

@dataclass(frozen=True)
class FreeGraded:
    ring: Ring
    gens: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(int(g) for g in self.gens))

    @property
    def rank(self) -> int:
        return len(self.gens)

    def twist(self, n: int) -> "FreeGraded":
        """F(n): every generator degree drops by n."""
        return FreeGraded(self.ring, tuple(g - n for g in self.gens))

    def dual(self) -> "FreeGraded":
        return FreeGraded(self.ring, tuple(-g for g in self.gens))

    def __add__(self, other: "FreeGraded") -> "FreeGraded":
        if self.ring != other.ring:
            raise GradingError("direct sum over different rings")
        return FreeGraded(self.ring, self.gens + other.gens)

    def sizes(self, d: int) -> list[int]:
        return [rings.dim(self.ring, d - g) for g in self.gens]

    def dim(self, d: int) -> int:
        return sum(self.sizes(d))

    def offsets(self, d: int) -> list[int]:
        out, acc = [], 0
        for s in self.sizes(d):
            out.append(acc)
            acc += s
        return out

    def to_vector(self, column: Sequence[Poly], d: int) -> np.ndarray:
        """Coordinates in F_d of the element with the given polynomial entries."""
        parts = [rings.coordinates(self.ring, f, d - g) if d - g >= 0 else
                 _empty_check(f) for f, g in zip(column, self.gens)]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def from_vector(self, v: np.ndarray, d: int) -> list[Poly]:
        out = []
        for off, size, g in zip(self.offsets(d), self.sizes(d), self.gens):
            out.append(rings.from_coordinates(self.ring, v[off:off + size], d - g)
                       if size else rings.ZERO_POLY)
        return out

    def mult_block(self, f: Poly, d: int) -> np.ndarray:
        """Multiplication by the homogeneous polynomial f from F_d to F_(d + deg f)."""
        e = f.degree()
        return la.block_diag([
            rings.mult_matrix(self.ring, f, d - g) if d - g >= 0
            else la.zeros(rings.dim(self.ring, d + e - g), 0)
            for g in self.gens])

    def to_json(self) -> dict:
        return {"gens": list(self.gens)}

    @classmethod
    def from_json(cls, data: Mapping, ring: Ring) -> "FreeGraded":
        return cls(ring, tuple(int(g) for g in data["gens"]))


def _empty_check(f: Poly) -> np.ndarray:
    if not f.is_zero():
        raise GradingError(f"entry {f} lives in a negative degree")
    return np.zeros(0, dtype=np.int64)


def free(ring: Ring, gens: Iterable[int]) -> FreeGraded:
    return FreeGraded(ring, tuple(gens))


# -- homogeneous maps --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GradedMap:
    """Homogeneous matrix ``src -> tgt`` of degree zero.

    Entry ``(i, j)`` is homogeneous of degree ``src.gens[j] - tgt.gens[i]``.
    Entries are stored in normal form for the ring.
    """

    src: FreeGraded
    tgt: FreeGraded
    entries: tuple[tuple[Poly, ...], ...]
    _blocks: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        ring = self.src.ring
        if self.tgt.ring != ring:
            raise GradingError("source and target over different rings")
        rows = tuple(tuple(rings.normal_form(ring, rings._coerce(e)) for e in row)
                     for row in self.entries)
        if len(rows) != self.tgt.rank or any(len(r) != self.src.rank for r in rows):
            raise GradingError(
                f"entries have shape {len(rows)}x{len(rows[0]) if rows else 0}, "
                f"expected {self.tgt.rank}x{self.src.rank}")
        for i, row in enumerate(rows):
            for j, f in enumerate(row):
                if f.is_zero():
                    continue
                want = self.src.gens[j] - self.tgt.gens[i]
                if not f.is_homogeneous() or f.degree() != want:
                    raise GradingError(f"entry ({i},{j}) = {f} should have degree {want}")
        object.__setattr__(self, "entries", rows)

    @property
    def ring(self) -> Ring:
        return self.src.ring

    @property
    def shape(self) -> tuple[int, int]:
        return (self.tgt.rank, self.src.rank)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedMap) and self.src == other.src
                and self.tgt == other.tgt and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.src, self.tgt, self.entries))

    def column(self, j: int) -> list[Poly]:
        return [row[j] for row in self.entries]

    def block(self, d: int) -> np.ndarray:
        """The linear map ``src_d -> tgt_d``."""
        if d in self._blocks:
            return self._blocks[d]
        so, ss = self.src.offsets(d), self.src.sizes(d)
        to, ts = self.tgt.offsets(d), self.tgt.sizes(d)
        B = la.zeros(sum(ts), sum(ss))
        for i, row in enumerate(self.entries):
            if not ts[i]:
                continue
            for j, f in enumerate(row):
                if f.is_zero() or not ss[j]:
                    continue
                m = rings.mult_matrix(self.ring, f, d - self.src.gens[j])
                B[to[i]:to[i] + ts[i], so[j]:so[j] + ss[j]] = m
        B.setflags(write=False)
        self._blocks[d] = B
        return B

    def column_vector(self, j: int) -> np.ndarray:
        """Column j as an element of tgt in degree src.gens[j]."""
        return self.tgt.to_vector(self.column(j), self.src.gens[j])

    def compose(self, other: "GradedMap") -> "GradedMap":
        """``self ∘ other``."""
        if other.tgt != self.src:
            raise GradingError(f"cannot compose: {other.tgt.gens} vs {self.src.gens}")
        n = self.src.rank
        entries = []
        for i in range(self.tgt.rank):
            row = []
            for j in range(other.src.rank):
                acc = rings.ZERO_POLY
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            entries.append(row)
        return GradedMap(other.src, self.tgt, entries)

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        return self.compose(other)

    def transpose(self) -> "GradedMap":
        """The dual map ``tgt^* -> src^*``."""
        entries = [[self.entries[i][j] for i in range(self.tgt.rank)]
                   for j in range(self.src.rank)]
        return GradedMap(self.tgt.dual(), self.src.dual(), entries)

    def twist(self, n: int) -> "GradedMap":
        return GradedMap(self.src.twist(n), self.tgt.twist(n), self.entries)

    def is_zero(self) -> bool:
        return all(f.is_zero() for row in self.entries for f in row)

    def is_minimal(self) -> bool:
        """No entry has a nonzero constant term."""
        return all(f.constant_term() == 0 for row in self.entries for f in row)

    def with_ring(self, ring: Ring) -> "GradedMap":
        return GradedMap(FreeGraded(ring, self.src.gens), FreeGraded(ring, self.tgt.gens),
                         self.entries)

    def scaled(self, c: int) -> "GradedMap":
        return GradedMap(self.src, self.tgt, [[f * c for f in row] for row in self.entries])

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise GradingError("adding maps with different shapes")
        return GradedMap(self.src, self.tgt,
                         [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + other.scaled(-1)

    def to_json(self) -> dict:
        return {"src": self.src.to_json(), "tgt": self.tgt.to_json(),
                "entries": [[f.to_json() for f in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: Mapping, ring: Ring) -> "GradedMap":
        src = FreeGraded.from_json(data["src"], ring)
        tgt = FreeGraded.from_json(data["tgt"], ring)
        entries = [[Poly.from_json(f) for f in row] for row in data["entries"]]
        return cls(src, tgt, entries)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(repr(f) for f in row) for row in self.entries)
        return f"GradedMap({list(self.src.gens)} -> {list(self.tgt.gens)}: [{rows}])"


def graded_map(src: FreeGraded, tgt: FreeGraded, entries) -> GradedMap:
    return GradedMap(src, tgt, entries)


def from_vectors(src: FreeGraded, tgt: FreeGraded, columns: Sequence[np.ndarray]) -> GradedMap:
    """Map whose column j is the vector ``columns[j]`` in ``tgt`` at degree ``src.gens[j]``."""
    cols = [tgt.from_vector(v, d) for v, d in zip(columns, src.gens)]
    entries = [[cols[j][i] for j in range(src.rank)] for i in range(tgt.rank)]
    return GradedMap(src, tgt, entries)


def identity(F: FreeGraded) -> GradedMap:
    n = F.rank
    return GradedMap(F, F, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zero_map(src: FreeGraded, tgt: FreeGraded) -> GradedMap:
    return GradedMap(src, tgt, [[0] * src.rank for _ in range(tgt.rank)])


def block_matrix(rows: Sequence[Sequence[GradedMap]]) -> GradedMap:
    """Assemble a block matrix of maps (blocks in a row share a target)."""
    tgt = rows[0][0].tgt
    for r in rows[1:]:
        tgt = tgt + r[0].tgt
    src = rows[0][0].src
    for b in rows[0][1:]:
        src = src + b.src
    entries = []
    for r in rows:
        for i in range(r[0].tgt.rank):
            entries.append([f for b in r for f in b.entries[i]])
    return GradedMap(src, tgt, entries)


def hstack(maps: Sequence[GradedMap]) -> GradedMap:
    return block_matrix([list(maps)])


# -- presented modules -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PresentedModule:
    """``coker(A: F1 -> F0)``."""

    presentation: GradedMap
    name: str = ""
    _images: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def ring(self) -> Ring:
        return self.presentation.ring

    @property
    def F0(self) -> FreeGraded:
        return self.presentation.tgt

    @property
    def F1(self) -> FreeGraded:
        return self.presentation.src

    @property
    def A(self) -> GradedMap:
        return self.presentation

    def image(self, d: int) -> np.ndarray:
        """Basis (columns) of the relation subspace in ``F0_d``."""
        if d not in self._images:
            self._images[d] = la.column_span(self.A.block(d))
        return self._images[d]

    def dim(self, d: int) -> int:
        return self.F0.dim(d) - self.image(d).shape[1]

    def hilbert_function(self, lo: int, hi: int) -> list[int]:
        return [self.dim(d) for d in range(lo, hi + 1)]

    def twist(self, n: int) -> "PresentedModule":
        return PresentedModule(self.A.twist(n), _twist_name(self.name, n))

    def renamed(self, name: str) -> "PresentedModule":
        return PresentedModule(self.A, name)

    def __add__(self, other: "PresentedModule") -> "PresentedModule":
        A = block_matrix([[self.A, zero_map(other.F1, self.F0)],
                          [zero_map(self.F1, other.F0), other.A]])
        return PresentedModule(A, f"{self.name} + {other.name}".strip(" +"))

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "presentation": self.A.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "PresentedModule":
        ring = Ring.from_json(data.get("ring", "R"))
        return cls(GradedMap.from_json(data["presentation"], ring), data.get("name", ""))

    def __repr__(self) -> str:
        label = self.name or "M"
        return f"{label} = coker {self.A!r}"


def _twist_name(name: str, n: int) -> str:
    if not name or n == 0:
        return name
    return f"{name}({n})"


def module(A: GradedMap, name: str = "") -> PresentedModule:
    return PresentedModule(A, name)


def free_module(ring: Ring, gens: Iterable[int], name: str = "") -> PresentedModule:
    F = FreeGraded(ring, tuple(gens))
    return PresentedModule(zero_map(FreeGraded(ring, ()), F), name)


def piece_basis(M: PresentedModule, d: int) -> np.ndarray:
    """Columns of ``F0_d`` whose classes form a basis of ``M_d``."""
    F = M.F0
    n = F.dim(d)
    idx = la.complement_columns(M.image(d), la.eye(n))
    return la.eye(n)[:, idx]


# -- Hom spaces --------------------------------------------------------------

@dataclass
class HomSpace:
    """Degree-zero homomorphisms ``M -> N``, each given by a chain map (G, H).

    ``G: F0(M) -> F0(N)`` and ``H: F1(M) -> F1(N)`` satisfy ``G A_M = A_N H``.
    Basis elements are independent modulo maps with image inside im(A_N).
    """

    source: PresentedModule
    target: PresentedModule
    g_vectors: np.ndarray      # columns: basis elements, G flattened
    h_vectors: np.ndarray
    relations: np.ndarray      # columns: G that are zero as module maps

    @property
    def dim(self) -> int:
        return self.g_vectors.shape[1]

    def _g_layout(self):
        N0 = self.target.F0
        return [N0.dim(e) for e in self.source.F0.gens]

    def _h_layout(self):
        N1 = self.target.F1
        return [N1.dim(f) for f in self.source.F1.gens]

    def g_map(self, v: np.ndarray) -> GradedMap:
        cols = _split(v, self._g_layout())
        return from_vectors(self.source.F0, self.target.F0, cols)

    def h_map(self, v: np.ndarray) -> GradedMap:
        cols = _split(v, self._h_layout())
        return from_vectors(self.source.F1, self.target.F1, cols)

    def basis(self) -> list[tuple[GradedMap, GradedMap]]:
        return [(self.g_map(self.g_vectors[:, k]), self.h_map(self.h_vectors[:, k]))
                for k in range(self.dim)]

    def element(self, coeffs) -> GradedMap:
        c = np.asarray(coeffs, dtype=np.int64) % la.prime()
        return self.g_map(la.matmul(self.g_vectors, c[:, None])[:, 0])

    def element_vector(self, coeffs) -> np.ndarray:
        c = np.asarray(coeffs, dtype=np.int64) % la.prime()
        return la.matmul(self.g_vectors, c[:, None])[:, 0]

    def vector_of(self, G: GradedMap) -> np.ndarray:
        parts = [G.column_vector(j) for j in range(G.src.rank)]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def coords(self, G) -> np.ndarray:
        """Coordinates of the module map G in this basis (G a map or a G-vector)."""
        v = self.vector_of(G) if isinstance(G, GradedMap) else np.asarray(G)
        A = np.hstack([self.g_vectors, self.relations])
        sol = la.solve(A, v)
        if sol is None:
            raise GradingError("map does not lie in the Hom space")
        return sol[:self.dim]


def _split(v: np.ndarray, sizes: Sequence[int]) -> list[np.ndarray]:
    out, acc = [], 0
    for s in sizes:
        out.append(v[acc:acc + s])
        acc += s
    return out


def hom_graded(M: PresentedModule, N: PresentedModule, shift: int = 0) -> HomSpace:
    """Basis of ``Hom_gr(M, N(shift))_0``.

    Unknowns are the columns of G (one vector of ``F0(N')`` per generator of
    ``F0(M)``) and of H.  The chain-map condition is linear in them.
    """
    if M.ring != N.ring:
        raise GradingError("Hom between modules over different rings")
    Nt = N.twist(shift) if shift else N
    e = M.F0.gens
    f = M.F1.gens
    N0, N1 = Nt.F0, Nt.F1
    g_sizes = [N0.dim(d) for d in e]
    h_sizes = [N1.dim(d) for d in f]
    g_off = np.concatenate([[0], np.cumsum(g_sizes)]).astype(int)
    h_off = np.concatenate([[0], np.cumsum(h_sizes)]).astype(int)
    ng, nh = int(g_off[-1]), int(h_off[-1])

    eq_rows = [N0.dim(d) for d in f]
    r_off = np.concatenate([[0], np.cumsum(eq_rows)]).astype(int)
    S = la.zeros(int(r_off[-1]), ng + nh)
    for c, fc in enumerate(f):
        if not eq_rows[c]:
            continue
        rows = slice(r_off[c], r_off[c + 1])
        for j, ej in enumerate(e):
            a = M.A.entries[j][c]
            if a.is_zero() or not g_sizes[j]:
                continue
            S[rows, g_off[j]:g_off[j + 1]] = N0.mult_block(a, ej)
        if h_sizes[c]:
            S[rows, ng + h_off[c]:ng + h_off[c + 1]] = (-Nt.A.block(fc)) % la.prime()
    K = la.kernel_basis(S)
    Kg, Kh = K[:ng], K[ng:]

    relations = la.block_diag([Nt.image(d) for d in e])
    chosen = la.complement_columns(relations, Kg)
    return HomSpace(M, Nt, Kg[:, chosen], Kh[:, chosen], relations)


def is_surjective_in(M: PresentedModule, N: PresentedModule, G: GradedMap, d: int) -> bool:
    """Does G induce a surjection ``M_d -> N_d``?"""
    n = N.F0.dim(d)
    if n == 0:
        return True
    span = np.hstack([G.block(d), N.image(d)])
    return la.rank(span) == N.dim(d) + N.image(d).shape[1]
