"""Polynomials in x, y, z and the three kinds of rings used throughout.

* ``AMBIENT``: S = k[x, y, z]
* ``hypersurface(s)``: S / (Q_s) for a point s of P^1
* ``QUOTIENT``: R = S / (Q_0, Q_inf), the coordinate ring of four points

Normal forms come from two short rewriting systems, not a Groebner engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

import numpy as np

from . import linalg as la

Monomial = tuple[int, int, int]

# R is Gorenstein with a-invariant 1, so omega_R = R(1).
A_INVARIANT = 1
CANONICAL_TWIST = 1


class RingError(ValueError):
    pass


# -- projective parameters ---------------------------------------------------

def normalize_point(t) -> tuple[int, int]:
    """Scale a projective pair so that its last nonzero coordinate is 1."""
    t0, t1 = (la.residue(c) for c in t)
    if t1:
        return (t0 * la.inv(t1) % la.prime(), 1)
    if t0:
        return (1, 0)
    raise RingError("projective parameter (0, 0)")


ZERO = (0, 1)
ONE = (1, 1)
INFINITY = (1, 0)
SINGULAR = (ZERO, ONE, INFINITY)


def point_label(t) -> str:
    t = normalize_point(t)
    if t == ZERO:
        return "0"
    if t == ONE:
        return "1"
    if t == INFINITY:
        return "inf"
    return f"{la.signed(t[0])}:{la.signed(t[1])}"


def parse_point(text: str) -> tuple[int, int]:
    """Accepts ``inf``, ``a:b`` or a bare integer ``a`` meaning ``a:1``."""
    s = text.strip().lower()
    named = {"0": ZERO, "1": ONE, "inf": INFINITY, "infinity": INFINITY, "oo": INFINITY}
    if s in named:
        return named[s]
    a, _, b = s.partition(":")
    try:
        return normalize_point((int(a), int(b) if b else 1))
    except ValueError:
        raise RingError(f"cannot parse projective point {text!r}") from None


# -- polynomials -------------------------------------------------------------

class Poly:
    """Sparse polynomial with F_p coefficients; immutable and hashable.

    Coefficients are reduced modulo the prime active at construction time, so
    polynomials should be rebuilt after :func:`linalg.set_prime`.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                c = la.residue(c)
                if c:
                    if min(m) < 0:
                        raise RingError(f"negative exponent in {m}")
                    clean[tuple(int(e) for e in m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "Poly":
        return cls({m: c})

    # arithmetic
    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        p = la.prime()
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # structure
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        """Homogeneous degree; ``None`` for the zero polynomial."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise RingError(f"{self} is not homogeneous")
        return ds.pop()

    def coeff(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def constant_term(self) -> int:
        return self.terms.get((0, 0, 0), 0)

    def evaluate(self, point) -> int:
        p = la.prime()
        total = 0
        for (a, b, c), coef in self.terms.items():
            total += coef * pow(point[0], a, p) * pow(point[1], b, p) * pow(point[2], c, p)
        return total % p

    def derivative(self, var: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            if m[var]:
                e = list(m)
                e[var] -= 1
                out[tuple(e)] = c * m[var]
        return Poly(out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = "xyz"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = la.signed(self.terms[m])
            mono = "*".join(
                names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            if not mono:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{mono}")
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c:+d}*{mono}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s

    # JSON
    def to_json(self) -> list[dict]:
        return [{"m": list(m), "c": self.terms[m]} for m in sorted(self.terms, reverse=True)]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "Poly":
        out: dict[Monomial, int] = {}
        for term in data:
            m = tuple(int(e) for e in term["m"])
            if len(m) != 3:
                raise RingError(f"monomial {term['m']} needs three exponents")
            out[m] = out.get(m, 0) + int(term["c"])
        return cls(out)


def _coerce(v) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, np.integer)):
        return Poly.const(int(v))
    raise TypeError(f"cannot treat {type(v).__name__} as a polynomial")


x = Poly.monomial((1, 0, 0))
y = Poly.monomial((0, 1, 0))
z = Poly.monomial((0, 0, 1))
ZERO_POLY = Poly()
ONE_POLY = Poly.const(1)


def pencil(t) -> Poly:
    """Q_t = t0 * Q_inf + t1 * Q_0 (not normalized, so scaling t scales Q_t)."""
    t0, t1 = (la.residue(c) for c in t)
    if not (t0 or t1):
        raise RingError("projective parameter (0, 0)")
    return t0 * (y * y - z * z) + t1 * (x * x - y * y)


def q0() -> Poly:
    return pencil(ZERO)


def qinf() -> Poly:
    return pencil(INFINITY)


def q1() -> Poly:
    return pencil(ONE)


def gram_matrix(t) -> np.ndarray:
    """Diagonal symmetric matrix of Q_t in the basis x, y, z."""
    t0, t1 = (la.residue(c) for c in t)
    return la.mat([[t1, 0, 0], [0, t0 - t1, 0], [0, 0, -t0]])


def singular_members() -> set[tuple[int, int]]:
    """Parameters whose quadric is singular: roots of det Gram = -t0 t1 (t0 - t1).

    The determinant is a binary cubic; the chart t0 = 1 is scanned by root
    finding and the single missing point (0, 1) is tested directly.
    """
    found = set()
    if la.det(gram_matrix(ZERO)) == 0:
        found.add(ZERO)
    # on the chart t = (1, u) the determinant is a polynomial in u
    coeffs = _det_on_chart()
    for u in la.roots(coeffs):
        found.add(normalize_point((1, u)))
    return found


def _det_on_chart() -> list[int]:
    # interpolate det Gram(1, u) (degree <= 3) from four sample values
    us = [0, 1, 2, 3]
    vals = [la.det(gram_matrix((1, u))) for u in us]
    V = la.mat([[u ** k for k in range(3, -1, -1)] for u in us])
    c = la.solve(V, vals)
    return [int(v) for v in c]


def lines() -> tuple[Poly, Poly, Poly, Poly]:
    return (x - y, y - z, x + y, y + z)


def points() -> tuple[tuple[int, int, int], ...]:
    """p_i is the common zero of l_i and l_(i+1), indices cyclic."""
    return ((1, 1, 1), (1, -1, -1), (1, -1, 1), (1, 1, -1))


def lines_and_points():
    return lines(), points()


def line(i: int) -> Poly:
    """l_i with cyclic indexing, i in 1..4 (or any integer)."""
    return lines()[(i - 1) % 4]


# -- rings -------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    kind: str  # "S", "Ss", "R"
    s: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.kind not in ("S", "Ss", "R"):
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Ss":
            if self.s is None:
                raise RingError("hypersurface ring needs a parameter")
            object.__setattr__(self, "s", normalize_point(self.s))
        elif self.s is not None:
            raise RingError(f"ring {self.kind} takes no parameter")

    def __str__(self) -> str:
        if self.kind == "Ss":
            return f"S/(Q_{point_label(self.s)})"
        return self.kind

    def to_json(self):
        if self.kind == "Ss":
            return {"Ss": list(self.s)}
        return self.kind

    @classmethod
    def from_json(cls, data) -> "Ring":
        if data in ("S", "R"):
            return cls(data)
        if isinstance(data, Mapping) and "Ss" in data:
            return cls("Ss", tuple(int(v) for v in data["Ss"]))
        raise RingError(f"bad ring tag {data!r}")

    def defining_ideal(self) -> tuple[Poly, ...]:
        if self.kind == "S":
            return ()
        if self.kind == "Ss":
            return (pencil(self.s),)
        return (q0(), qinf())


AMBIENT = Ring("S")
QUOTIENT = Ring("R")


def hypersurface(s) -> Ring:
    return Ring("Ss", normalize_point(s))


# -- normal forms ------------------------------------------------------------

@la.cached
def _square_rule(s: tuple[int, int]):
    """For S/(Q_s): (variable to eliminate, replacement coefficients on squares)."""
    s0, s1 = s
    p = la.prime()
    coeffs = [s1 % p, (s0 - s1) % p, (-s0) % p]  # on x^2, y^2, z^2
    v = next(i for i, c in enumerate(coeffs) if c)
    lead = la.inv(coeffs[v])
    repl = {}
    for j, c in enumerate(coeffs):
        if j != v and c:
            repl[j] = (-c * lead) % p
    return v, repl


@la.cached
def _nf_monomial(ring: Ring, m: Monomial) -> tuple[tuple[Monomial, int], ...]:
    if ring.kind == "S":
        return ((m, 1),)
    if ring.kind == "R":
        a, b, c = m
        return (((a + 2 * (b // 2) + 2 * (c // 2), b % 2, c % 2), 1),)
    v, repl = _square_rule(ring.s)
    if m[v] < 2:
        return ((m, 1),)
    out: dict[Monomial, int] = {}
    p = la.prime()
    for j, c in repl.items():
        e = list(m)
        e[v] -= 2
        e[j] += 2
        for mm, cc in _nf_monomial(ring, tuple(e)):
            out[mm] = (out.get(mm, 0) + c * cc) % p
    return tuple((mm, cc) for mm, cc in out.items() if cc)


def normal_form(ring: Ring, f: Poly) -> Poly:
    if ring.kind == "S":
        return f
    out: dict[Monomial, int] = {}
    p = la.prime()
    for m, c in f.terms.items():
        for mm, cc in _nf_monomial(ring, m):
            out[mm] = (out.get(mm, 0) + c * cc) % p
    return Poly(out)


def is_normal(ring: Ring, m: Monomial) -> bool:
    if ring.kind == "S":
        return True
    if ring.kind == "R":
        return m[1] <= 1 and m[2] <= 1
    v, _ = _square_rule(ring.s)
    return m[v] <= 1


def _monomials(d: int) -> list[Monomial]:
    """All degree-d monomials in lex order x > y > z, largest first."""
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


@la.cached
def basis(ring: Ring, d: int) -> tuple[Monomial, ...]:
    if d < 0:
        raise RingError(f"negative degree {d}")
    return tuple(m for m in _monomials(d) if is_normal(ring, m))


@la.cached
def _index(ring: Ring, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(basis(ring, d))}


def dim(ring: Ring, d: int) -> int:
    return len(basis(ring, d)) if d >= 0 else 0


def coordinates(ring: Ring, f: Poly, d: int) -> np.ndarray:
    """Coordinate vector of the degree-d polynomial f in basis(ring, d)."""
    idx = _index(ring, d) if d >= 0 else {}
    v = np.zeros(len(idx), dtype=np.int64)
    for m, c in normal_form(ring, f).terms.items():
        if sum(m) != d:
            raise RingError(f"{f} is not homogeneous of degree {d}")
        v[idx[m]] = c
    return v


def from_coordinates(ring: Ring, v, d: int) -> Poly:
    return Poly({m: int(c) for m, c in zip(basis(ring, d), v)})


@la.cached
def mult_matrix(ring: Ring, f: Poly, d: int) -> np.ndarray:
    """Matrix of multiplication by homogeneous f from degree d to degree d + deg f."""
    if not f.is_homogeneous():
        raise RingError(f"{f} is not homogeneous")
    src = basis(ring, d) if d >= 0 else ()
    if f.is_zero():
        raise RingError("mult_matrix needs a nonzero polynomial (its degree is undefined)")
    e = f.degree()
    tgt_idx = _index(ring, d + e) if d + e >= 0 else {}
    M = la.zeros(len(tgt_idx), len(src))
    p = la.prime()
    for j, m in enumerate(src):
        for fm, fc in f.terms.items():
            prod = (m[0] + fm[0], m[1] + fm[1], m[2] + fm[2])
            for mm, cc in _nf_monomial(ring, prod):
                i = tgt_idx[mm]
                M[i, j] = (M[i, j] + fc * cc) % p
    M.setflags(write=False)
    return M


def hilbert_series_dim(d: int) -> int:
    """Coefficient of t^d in (1 + 2t + t^2) / (1 - t)."""
    if d < 0:
        return 0
    return [1, 3][d] if d < 2 else 4


def random_form(rng: np.random.Generator, ring: Ring, d: int) -> Poly:
    return Poly({m: int(rng.integers(0, la.prime())) for m in basis(ring, d)})

