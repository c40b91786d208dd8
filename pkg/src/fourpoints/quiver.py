"""Representations of the affine D4 quiver with all four arrows into the centre.

A representation is ``(W; V_1, ..., V_4)`` with maps ``phi_i: V_i -> W``.
Vertex 0 is the centre.  Everything is finite-dimensional linear algebra over
F_p; Auslander-Reiten translates come from minimal projective presentations
(transpose then dual) and their injective mirror.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import linalg as la
from . import rings

ARMS = (1, 2, 3, 4)


class RepError(ValueError):
    pass


# -- representations ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Rep:
    dims: tuple[int, int, int, int, int]
    maps: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != 5 or min(dims) < 0:
            raise RepError(f"bad dimension vector {self.dims}")
        maps = []
        for i, m in enumerate(self.maps, start=1):
            m = la.reduce(np.asarray(m, dtype=np.int64).reshape(dims[0], dims[i]))
            maps.append(m)
        if len(maps) != 4:
            raise RepError("need four arrow maps")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", tuple(maps))

    @property
    def total(self) -> int:
        return sum(self.dims)

    def phi(self, i: int) -> np.ndarray:
        return self.maps[i - 1]

    def is_zero(self) -> bool:
        return self.total == 0

    def __add__(self, other: "Rep") -> "Rep":
        dims = tuple(a + b for a, b in zip(self.dims, other.dims))
        maps = tuple(la.block_diag([a, b]) for a, b in zip(self.maps, other.maps))
        return Rep(dims, maps)

    def conjugate(self, g: Sequence[np.ndarray]) -> "Rep":
        """Transport along invertible g_v: M_v -> M'_v."""
        maps = tuple(la.mul_all(g[0], self.maps[i - 1], la.inverse(g[i])) if self.dims[i]
                     else la.zeros(self.dims[0], 0) for i in ARMS)
        return Rep(self.dims, maps)

    def to_json(self) -> dict:
        return {"dims": list(self.dims),
                "maps": [[[int(v) for v in row] for row in m] for m in self.maps]}

    @classmethod
    def from_json(cls, data) -> "Rep":
        dims = tuple(int(d) for d in data["dims"])
        if len(dims) != 5:
            raise RepError("dims must have five entries")
        maps = []
        for i, m in enumerate(data["maps"], start=1):
            arr = la.mat(m) if dims[0] and dims[i] else la.zeros(dims[0], dims[i])
            if arr.shape != (dims[0], dims[i]):
                raise RepError(f"map {i} has shape {arr.shape}, expected {(dims[0], dims[i])}")
            maps.append(arr)
        return cls(dims, tuple(maps))

    def __repr__(self) -> str:
        return f"Rep{self.dims}"


def direct_sum(reps: Iterable[Rep]) -> Rep:
    reps = list(reps)
    out = zero_rep()
    for r in reps:
        out = out + r
    return out


def zero_rep() -> Rep:
    return Rep((0, 0, 0, 0, 0), tuple(la.zeros(0, 0) for _ in ARMS))


def rep_from_lines(vectors: Sequence[Sequence[int]], w: int = 2) -> Rep:
    """Four one-dimensional spaces mapping onto the given vectors of k^w."""
    maps = tuple(la.mat([[c] for c in v]) for v in vectors)
    return Rep((w, 1, 1, 1, 1), maps)


# -- the named building blocks ------------------------------------------------

def projective(i: int) -> Rep:
    if i == 0:
        return Rep((1, 0, 0, 0, 0), tuple(la.zeros(1, 0) for _ in ARMS))
    dims = [1, 0, 0, 0, 0]
    dims[i] = 1
    return Rep(tuple(dims), tuple(la.eye(1) if j == i else la.zeros(1, 0) for j in ARMS))


def injective(i: int) -> Rep:
    if i == 0:
        return Rep((1, 1, 1, 1, 1), tuple(la.eye(1) for _ in ARMS))
    dims = [0, 0, 0, 0, 0]
    dims[i] = 1
    return Rep(tuple(dims), tuple(la.zeros(0, dims[j]) for j in ARMS))


def simple(i: int) -> Rep:
    return projective(0) if i == 0 else injective(i)


def fundamental(t) -> Rep:
    """R_t: lines [0:1], [1:1], [1:0], [t0:t1] in k^2."""
    t0, t1 = rings.normalize_point(t)
    return rep_from_lines([(0, 1), (1, 1), (1, 0), (t0, t1)])


# R_t^- for the singular parameters.  At infinity the printed configuration
# splits, so the lines that stay apart are taken distinct (see ledger).
_R_MINUS = {
    rings.ZERO: [(1, 1), (0, 1), (0, 1), (1, 0)],
    rings.ONE: [(1, 1), (0, 1), (1, 1), (1, 0)],
    rings.INFINITY: [(1, 0), (1, 0), (0, 1), (1, 1)],
}

# arms carried by the simple regular S_t^+ and S_t^-
SIMPLE_REGULAR_ARMS = {
    (rings.ZERO, "+"): (1, 4), (rings.ZERO, "-"): (2, 3),
    (rings.ONE, "+"): (2, 4), (rings.ONE, "-"): (1, 3),
    (rings.INFINITY, "+"): (3, 4), (rings.INFINITY, "-"): (1, 2),
}


def _singular(t) -> tuple[int, int]:
    t = rings.normalize_point(t)
    if t not in rings.SINGULAR:
        raise RepError(f"{t} is not one of the parameters 0, 1, inf")
    return t


def regular_pair(t, sign: str) -> Rep:
    """R_t^+ (= R_t) or R_t^- for t in {0, 1, inf}."""
    t = _singular(t)
    if sign == "+":
        return fundamental(t)
    if sign == "-":
        return rep_from_lines(_R_MINUS[t])
    raise RepError(f"bad sign {sign!r}")


def simple_regular(t, sign: str) -> Rep:
    t = _singular(t)
    if sign not in ("+", "-"):
        raise RepError(f"bad sign {sign!r}")
    arms = SIMPLE_REGULAR_ARMS[(t, sign)]
    dims = [1] + [1 if i in arms else 0 for i in ARMS]
    maps = tuple(la.eye(1) if i in arms else la.zeros(1, 0) for i in ARMS)
    return Rep(tuple(dims), maps)


# -- homomorphisms -----------------------------------------------------------

@dataclass
class HomRep:
    source: Rep
    target: Rep
    basis: list[tuple[np.ndarray, ...]]    # each (f0, f1, f2, f3, f4)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs) -> tuple[np.ndarray, ...]:
        out = [la.zeros(*b.shape) for b in self.basis[0]] if self.basis else []
        p = la.prime()
        for c, b in zip(coeffs, self.basis):
            c = int(c) % p
            if c:
                out = [(o + c * m % p) % p for o, m in zip(out, b)]
        return tuple(out)


def _vec_layout(M: Rep, N: Rep):
    sizes = [N.dims[v] * M.dims[v] for v in range(5)]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    return sizes, offs


def hom_rep(M: Rep, N: Rep) -> HomRep:
    """Intertwiners f with phi^N_i f_i = f_0 phi^M_i (row-major vectorisation)."""
    sizes, offs = _vec_layout(M, N)
    n = int(offs[-1])
    blocks = []
    for i in ARMS:
        rows = N.dims[0] * M.dims[i]
        if rows == 0:
            continue
        E = la.zeros(rows, n)
        # phi^N_i f_i
        if sizes[i]:
            E[:, offs[i]:offs[i + 1]] = np.kron(N.phi(i), la.eye(M.dims[i])) % la.prime()
        # - f_0 phi^M_i
        if sizes[0]:
            E[:, offs[0]:offs[1]] = (-np.kron(la.eye(N.dims[0]), M.phi(i).T)) % la.prime()
        blocks.append(E)
    S = np.vstack(blocks) if blocks else la.zeros(0, n)
    K = la.kernel_basis(S)
    basis = []
    for c in range(K.shape[1]):
        col = K[:, c]
        basis.append(tuple(col[offs[v]:offs[v + 1]].reshape(N.dims[v], M.dims[v]) for v in range(5)))
    return HomRep(M, N, basis)


def hom_dim(M: Rep, N: Rep) -> int:
    return hom_rep(M, N).dim


def _arrow_system(Z: Rep, X: Rep) -> np.ndarray:
    """The map (f_v) -> (phi^X_i f_i - f_0 phi^Z_i) from sum Hom(Z_v, X_v) to sum Hom(Z_i, X_0)."""
    sizes, offs = _vec_layout(Z, X)
    n = int(offs[-1])
    blocks = []
    for i in ARMS:
        rows = X.dims[0] * Z.dims[i]
        E = la.zeros(rows, n)
        if rows and sizes[i]:
            E[:, offs[i]:offs[i + 1]] = np.kron(X.phi(i), la.eye(Z.dims[i])) % la.prime()
        if rows and sizes[0]:
            E[:, offs[0]:offs[1]] = (-np.kron(la.eye(X.dims[0]), Z.phi(i).T)) % la.prime()
        blocks.append(E)
    return np.vstack(blocks) if blocks else la.zeros(0, n)


def ext1_dim(M: Rep, N: Rep) -> int:
    """dim Ext^1(M, N) as the cokernel dimension of the arrow system."""
    S = _arrow_system(M, N)
    return S.shape[0] - la.rank(S)


def ext1_classes(Z: Rep, X: Rep) -> list[tuple[np.ndarray, ...]]:
    """Cocycles (xi_1..xi_4), xi_i: Z_i -> X_0, spanning Ext^1(Z, X)."""
    S = _arrow_system(Z, X)
    rows = S.shape[0]
    picked = la.complement_columns(la.column_span(S), la.eye(rows))
    out = []
    for c in picked:
        v = la.eye(rows)[:, c]
        xi, acc = [], 0
        for i in ARMS:
            k = X.dims[0] * Z.dims[i]
            xi.append(v[acc:acc + k].reshape(X.dims[0], Z.dims[i]))
            acc += k
        out.append(tuple(xi))
    return out


def extension_rep(Z: Rep, X: Rep, xi: Sequence[np.ndarray]) -> Rep:
    """Middle term of 0 -> X -> Y -> Z -> 0 with spaces X_v + Z_v."""
    if len(xi) != 4:
        raise RepError("a cocycle has four components")
    maps = []
    for i, x in zip(ARMS, xi):
        x = np.asarray(x, dtype=np.int64)
        if x.shape != (X.dims[0], Z.dims[i]):
            raise RepError(f"cocycle component {i} has shape {x.shape}, "
                           f"expected {(X.dims[0], Z.dims[i])}")
        top = np.hstack([X.phi(i), x])
        bottom = np.hstack([la.zeros(Z.dims[0], X.dims[i]), Z.phi(i)])
        maps.append(np.vstack([top, bottom]))
    dims = tuple(a + b for a, b in zip(X.dims, Z.dims))
    return Rep(dims, tuple(maps))


# -- numerical invariants ----------------------------------------------------

def dim_vector(M: Rep) -> tuple[int, ...]:
    return M.dims


def euler_form(d: Sequence[int], e: Sequence[int]) -> int:
    return d[0] * e[0] + sum(d[i] * e[i] for i in ARMS) - sum(d[i] * e[0] for i in ARMS)


def defect(d) -> int:
    if isinstance(d, Rep):
        d = d.dims
    return -2 * d[0] + sum(d[i] for i in ARMS)


# -- isomorphism -------------------------------------------------------------

@dataclass
class RepIso:
    isomorphic: bool
    witness: Optional[tuple[np.ndarray, ...]] = None

    def __bool__(self) -> bool:
        return self.isomorphic


def _invertible(f: Sequence[np.ndarray]) -> bool:
    return all(m.shape[0] == m.shape[1] and (m.shape[0] == 0 or la.rank(m) == m.shape[0])
               for m in f)


def iso_rep(M: Rep, N: Rep, samples: int = 8, seed: int = 0) -> RepIso:
    if M.dims != N.dims:
        return RepIso(False)
    if M.is_zero():
        return RepIso(True, tuple(la.zeros(0, 0) for _ in range(5)))
    H = hom_rep(M, N)
    if H.dim == 0:
        return RepIso(False)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        f = H.combine(rng.integers(0, la.prime(), size=H.dim))
        if _invertible(f):
            return RepIso(True, f)
    for i in range(H.dim):
        for j in range(i, H.dim):
            c = np.zeros(H.dim, dtype=np.int64)
            c[i] = 1
            c[j] += 1
            f = H.combine(c)
            if _invertible(f):
                return RepIso(True, f)
    return RepIso(False)


# -- Auslander-Reiten translation ---------------------------------------------

def _restrict(M: Rep, bases: Sequence[np.ndarray]) -> Rep:
    """Subrepresentation spanned by the columns of bases[v] (assumed closed)."""
    B0 = bases[0]
    maps = []
    for i in ARMS:
        img = la.matmul(M.phi(i), bases[i]) if bases[i].shape[1] else la.zeros(M.dims[0], 0)
        X = la.solve_matrix(B0, img) if B0.shape[1] or img.shape[1] else la.zeros(0, 0)
        if X is None:
            raise RepError("subspaces are not closed under the arrows")
        maps.append(X.reshape(B0.shape[1], bases[i].shape[1]))
    return Rep(tuple(b.shape[1] for b in bases), tuple(maps))


def tau(M: Rep) -> Rep:
    """tau M = ker(nu(p_1)) for the minimal projective presentation p_1 of M."""
    d0 = M.dims[0]
    Phi = np.hstack([M.phi(i) for i in ARMS]) if d0 else la.zeros(0, sum(M.dims[1:]))
    # complement of the images in W: the top of M at the centre
    top = la.complement_columns(la.column_span(Phi), la.eye(d0)) if d0 else []
    Sec = la.eye(d0)[:, top] if d0 else la.zeros(0, 0)
    cover = np.hstack([Phi, Sec]) if d0 else la.zeros(0, Phi.shape[1] + len(top))
    C = la.kernel_basis(cover)           # rows: arms then top, columns: P(0)^m
    m = C.shape[1]
    if m == 0:
        return zero_rep()
    split = np.cumsum([0] + [M.dims[i] for i in ARMS] + [len(top)])
    C_arm = [C[split[k]:split[k + 1]] for k in range(4)]
    C0 = C[split[4]:split[5]]
    K0 = la.kernel_basis(C0) if C0.shape[0] else la.eye(m)
    bases = [K0]
    for k in range(4):
        stack = np.vstack([C0, C_arm[k]])
        bases.append(la.kernel_basis(stack) if stack.shape[0] else la.eye(m))
    return _restrict(Rep((m, m, m, m, m), tuple(la.eye(m) for _ in ARMS)), bases)


def tau_inverse(M: Rep) -> Rep:
    """tau^-1 M = coker(nu^-1(i^1)) for the minimal injective copresentation of M."""
    d0 = M.dims[0]
    p = la.prime()
    Ls, kers = [], []
    for i in ARMS:
        K = la.kernel_basis(M.phi(i)) if M.dims[i] else la.zeros(0, 0)
        k = K.shape[1]
        r = la.solve_matrix(K.T, la.eye(k)).T if k else la.zeros(0, M.dims[i])
        embed = np.vstack([M.phi(i), r]) if M.dims[i] else la.zeros(d0 + k, 0)
        L = la.left_kernel(embed) if embed.shape[0] else la.zeros(0, 0)
        Ls.append(L)
        kers.append(k)
    cs = [L.shape[0] for L in Ls]
    total_c = sum(cs)
    if total_c == 0:
        return zero_rep()
    # vertex 0 of nu^-1(i^1): P(0)^{d0} + sum P(i)^{k_i} -> sum P(i)^{c_i}
    cols = d0 + sum(kers)
    big = la.zeros(total_c, cols)
    r0 = 0
    k_off = d0
    for idx, L in enumerate(Ls):
        c = cs[idx]
        if c:
            big[r0:r0 + c, :d0] = L[:, :d0]
            big[r0:r0 + c, k_off:k_off + kers[idx]] = L[:, d0:]
        r0 += c
        k_off += kers[idx]
    P0 = la.left_kernel(big) if big.shape[1] else la.eye(total_c)
    maps, dims = [], [P0.shape[0]]
    r0 = 0
    for idx, L in enumerate(Ls):
        c = cs[idx]
        Lr = L[:, d0:] if c else la.zeros(0, 0)
        Pi = la.left_kernel(Lr) if Lr.shape[1] else la.eye(c)
        # section of the projection k^c -> V''_i
        sec = la.solve_matrix(Pi, la.eye(Pi.shape[0])) if Pi.shape[0] else la.zeros(c, 0)
        E = la.zeros(total_c, c)
        E[r0:r0 + c] = la.eye(c)
        maps.append(la.mul_all(P0, E, sec) if sec.shape[1] and P0.shape[0]
                    else la.zeros(P0.shape[0], sec.shape[1]))
        dims.append(Pi.shape[0])
        r0 += c
    return Rep(tuple(dims), tuple(m % p for m in maps))


def tau_power(M: Rep, m: int) -> Rep:
    for _ in range(abs(m)):
        M = tau(M) if m > 0 else tau_inverse(M)
    return M


# -- decomposition -----------------------------------------------------------

def _flat(M: Rep, f: Sequence[np.ndarray]) -> np.ndarray:
    return la.block_diag(list(f))


def _vertex_split(M: Rep, v: np.ndarray) -> list[np.ndarray]:
    out, acc = [], 0
    for d in M.dims:
        out.append(v[acc:acc + d])
        acc += d
    return out


def _fitting(M: Rep, theta: np.ndarray, lam: int):
    n = M.total
    N = (theta - lam * la.eye(n)) % la.prime()
    Np = la.matrix_power(N, n)
    K = la.kernel_basis(Np)
    I = la.column_span(Np)
    return K, I


def _vertex_bases(M: Rep, B: np.ndarray) -> list[np.ndarray]:
    """Split a theta-stable subspace of the total space by vertex.

    Subspaces coming from block-diagonal operators are sums of their
    vertex components, so a basis of each component is recovered by
    projecting and taking the span.
    """
    out, acc = [], 0
    for d in M.dims:
        part = B[acc:acc + d]
        out.append(la.column_span(part) if d else la.zeros(0, 0))
        acc += d
    return out


@dataclass
class Decomposition:
    pieces: list[tuple[Rep, int]]
    parts: list[Rep]                     # every summand, with repetition
    change_of_basis: list[np.ndarray]    # per vertex: columns are the summands' bases

    def multiset(self) -> list[tuple[Rep, int]]:
        return self.pieces


def is_indecomposable(M: Rep, samples: int = 8, seed: int = 0) -> bool:
    """Certificate: End(M) = k, or sampled endomorphisms all have a single eigenvalue."""
    if M.is_zero():
        return False
    H = hom_rep(M, M)
    if H.dim == 1:
        return True
    rng = np.random.default_rng(seed)
    n = M.total
    p = la.prime()
    for _ in range(samples):
        theta = _flat(M, H.combine(rng.integers(0, p, size=H.dim)))
        tr = int(np.trace(theta % p) % p) if n else 0
        lam = tr * la.inv(n % p) % p
        N = (theta - lam * la.eye(n)) % p
        if np.any(la.matrix_power(N, n)):
            return False
    return True


def _split_once(M: Rep, rng: np.random.Generator, attempts: int = 24):
    """Find a nontrivial Fitting split, or return None if M looks indecomposable."""
    H = hom_rep(M, M)
    if H.dim <= 1:
        return None
    n = M.total
    p = la.prime()
    for _ in range(attempts):
        theta = _flat(M, H.combine(rng.integers(0, p, size=H.dim)))
        v = rng.integers(0, p, size=n)
        roots = la.roots(la.krylov_min_poly(theta, v))
        for lam in roots:
            K, I = _fitting(M, theta, lam)
            if K.shape[1] and I.shape[1]:
                return _vertex_bases(M, K), _vertex_bases(M, I)
        if len(roots) == 1:
            lam = roots[0]
            N = (theta - lam * la.eye(n)) % p
            if not np.any(la.matrix_power(N, n)):
                # a single eigenvalue: check the nilpotency certificate again
                if is_indecomposable(M, samples=4, seed=int(rng.integers(0, 2**31))):
                    return None
    return None


def decompose(M: Rep, seed: int = 0, samples: int = 8) -> Decomposition:
    rng = np.random.default_rng(seed)
    stack = [(M, [la.eye(d) for d in M.dims])]
    parts: list[Rep] = []
    embeds: list[list[np.ndarray]] = []
    while stack:
        X, emb = stack.pop()
        if X.is_zero():
            continue
        split = _split_once(X, rng)
        if split is None:
            parts.append(X)
            embeds.append(emb)
            continue
        for bases in split:
            Y = _restrict(X, bases)
            stack.append((Y, [la.matmul(e, b) if b.shape[1] else la.zeros(e.shape[0], 0)
                              for e, b in zip(emb, bases)]))
    groups: list[list] = []
    for P in parts:
        for g in groups:
            if iso_rep(g[0], P, samples=samples, seed=seed):
                g[1] += 1
                break
        else:
            groups.append([P, 1])
    cob = [np.hstack([e[v] for e in embeds]) if embeds else la.zeros(M.dims[v], 0)
           for v in range(5)]
    return Decomposition([(g[0], g[1]) for g in groups], parts, cob)


# -- canonical names ---------------------------------------------------------

@dataclass(frozen=True)
class IndecName:
    kind: str                 # Proj, Inj, RegHom, RegExc
    vertex: int = 0           # Proj / Inj
    m: int = 0                # Proj: tau^-m P(i); Inj: tau^m I(i)
    t: tuple[int, int] = (0, 1)
    r: int = 1
    sign: str = "+"

    def __str__(self) -> str:
        if self.kind in ("Proj", "Inj"):
            return f"{self.kind}({self.vertex},{self.m})"
        label = rings.point_label(self.t)
        if self.kind == "RegHom":
            return f"RegHom({label},{self.r})"
        return f"RegExc({label},{self.r},{self.sign})"

    def to_json(self) -> dict:
        if self.kind in ("Proj", "Inj"):
            return {"kind": self.kind, "vertex": self.vertex, "m": self.m}
        out = {"kind": self.kind, "t": list(self.t), "r": self.r}
        if self.kind == "RegExc":
            out["sign"] = self.sign
        return out

    @classmethod
    def from_json(cls, data) -> "IndecName":
        kind = data["kind"]
        if kind in ("Proj", "Inj"):
            return cls(kind, vertex=int(data["vertex"]), m=int(data.get("m", 0)))
        t = rings.normalize_point(data["t"])
        return cls(kind, t=t, r=int(data.get("r", 1)), sign=data.get("sign", "+"))


def proj_name(i: int, m: int = 0) -> IndecName:
    return IndecName("Proj", vertex=i, m=m)


def inj_name(i: int, m: int = 0) -> IndecName:
    return IndecName("Inj", vertex=i, m=m)


def reg_hom_name(t, r: int = 1) -> IndecName:
    return IndecName("RegHom", t=rings.normalize_point(t), r=r)


def reg_exc_name(t, r: int = 1, sign: str = "+") -> IndecName:
    return IndecName("RegExc", t=rings.normalize_point(t), r=r, sign=sign)


def _extend_unique(Z: Rep, X: Rep) -> Rep:
    classes = ext1_classes(Z, X)
    if len(classes) != 1:
        raise RepError(f"expected one-dimensional Ext^1, found {len(classes)}")
    return extension_rep(Z, X, classes[0])


def _flip(sign: str) -> str:
    return "-" if sign == "+" else "+"


def named(name: IndecName) -> Rep:
    if name.kind == "Proj":
        if name.vertex not in range(5) or name.m < 0:
            raise RepError(f"invalid name {name}")
        return tau_power(projective(name.vertex), -name.m)
    if name.kind == "Inj":
        if name.vertex not in range(5) or name.m < 0:
            raise RepError(f"invalid name {name}")
        return tau_power(injective(name.vertex), name.m)
    if name.r < 1:
        raise RepError(f"invalid length in {name}")
    if name.kind == "RegHom":
        if name.t in rings.SINGULAR:
            raise RepError("RegHom needs t outside 0, 1, inf")
        base = fundamental(name.t)
        M = base
        for _ in range(1, name.r):
            M = _extend_unique(base, M)
        return M
    if name.kind == "RegExc":
        t = _singular(name.t)
        if name.sign not in ("+", "-"):
            raise RepError(f"invalid sign in {name}")
        if name.r == 1:
            return simple_regular(t, name.sign)
        M = regular_pair(t, name.sign)
        for k in range(2, name.r):
            quotient_sign = name.sign if k % 2 == 0 else _flip(name.sign)
            M = _extend_unique(simple_regular(t, quotient_sign), M)
        return M
    raise RepError(f"unknown kind {name.kind!r}")


# -- identification ----------------------------------------------------------

def _which_projective(M: Rep) -> Optional[int]:
    for i in range(5):
        if M.dims == projective(i).dims and iso_rep(M, projective(i)):
            return i
    return None


def _which_injective(M: Rep) -> Optional[int]:
    for i in range(5):
        if M.dims == injective(i).dims and iso_rep(M, injective(i)):
            return i
    return None


def homogeneous_parameter(M: Rep) -> tuple[int, int]:
    """The t with Hom(R_t, M) != 0, for M in a homogeneous tube.

    A map R_t -> M is a pair u = f(e1) in U3, v = f(e2) in U1 with u + v in U2,
    subject to t0 u + t1 v in U4.  On the first three conditions this is a
    square pencil A + s B (t = (1, s)) whose determinant has a single root.
    """
    U = [la.column_span(M.phi(i)) for i in ARMS]
    r = M.dims[0] // 2
    P2 = la.left_kernel(U[1])
    P4 = la.left_kernel(U[3])
    n1, n3 = U[0].shape[1], U[2].shape[1]
    cond = np.hstack([la.matmul(P2, U[2]), la.matmul(P2, U[0])])   # (beta, alpha)
    K = la.kernel_basis(cond)
    Kb, Ka = K[:n3], K[n3:]
    A = la.mul_all(P4, U[2], Kb)
    B = la.mul_all(P4, U[0], Ka)
    if A.shape[0] != A.shape[1]:
        raise RepError(f"pencil is {A.shape}, expected square")
    pts = list(range(A.shape[0] + 1))
    vals = [la.det((A + s * B) % la.prime()) for s in pts]
    V = la.mat([[s ** k for k in range(len(pts) - 1, -1, -1)] for s in pts])
    coeffs = la.solve(V, vals)
    roots = la.roots([int(c) for c in coeffs])
    if len(roots) != 1:
        raise RepError(f"expected a single tube parameter, found roots {roots}")
    return rings.normalize_point((1, roots[0]))


class IdentifyError(RepError):
    pass


def identify(M: Rep, max_steps: int = 64) -> IndecName:
    """Name an indecomposable representation."""
    if M.is_zero():
        raise IdentifyError("zero representation")
    dfc = defect(M)
    if dfc < 0:
        X = M
        for m in range(max_steps):
            i = _which_projective(X)
            if i is not None:
                return proj_name(i, m)
            X = tau(X)
            if X.is_zero():
                break
        raise IdentifyError("negative defect but no projective reached")
    if dfc > 0:
        X = M
        for m in range(max_steps):
            i = _which_injective(X)
            if i is not None:
                return inj_name(i, m)
            X = tau_inverse(X)
            if X.is_zero():
                break
        raise IdentifyError("positive defect but no injective reached")
    for t in rings.SINGULAR:
        for sign in ("+", "-"):
            if hom_dim(simple_regular(t, sign), M):
                name = reg_exc_name(t, M.dims[0], sign)
                if iso_rep(M, named(name)):
                    return name
                raise IdentifyError(f"socle S_{rings.point_label(t)}^{sign} but no match")
    if M.dims[0] % 2:
        raise IdentifyError("odd centre dimension outside the exceptional tubes")
    t = homogeneous_parameter(M)
    name = reg_hom_name(t, M.dims[0] // 2)
    if iso_rep(M, named(name)):
        return name
    raise IdentifyError(f"parameter {t} found but R_t<{name.r}> does not match")


# -- four lines --------------------------------------------------------------

def four_lines_normalize(lines: Sequence[Sequence[int]]):
    """Return (t, g) with g carrying lines 1, 2, 3 to [0:1], [1:1], [1:0]; t = g(line 4)."""
    if len(lines) != 4:
        raise RepError("need four lines")
    L = [la.mat([[c] for c in v]) for v in lines]
    for v in L:
        if v.shape != (2, 1) or not np.any(v):
            raise RepError("each line must be a nonzero vector in k^2")
    for a in range(3):
        for b in range(a + 1, 3):
            if la.rank(np.hstack([L[a], L[b]])) < 2:
                raise RepError(f"lines {a + 1} and {b + 1} coincide")
    coef = la.solve(np.hstack([L[2], L[0]]), L[1][:, 0])
    a, b = int(coef[0]), int(coef[1])
    frame = np.hstack([la.scale(L[2], a), la.scale(L[0], b)])
    g = la.inverse(frame)
    img = la.matmul(g, L[3])[:, 0]
    return rings.normalize_point((int(img[0]), int(img[1]))), g


def lines_of(M: Rep) -> list[tuple[int, int]]:
    if M.dims != (2, 1, 1, 1, 1):
        raise RepError("four-lines data needs dimension vector (2;1,1,1,1)")
    return [(int(M.phi(i)[0, 0]), int(M.phi(i)[1, 0])) for i in ARMS]


# -- sampling ----------------------------------------------------------------

def random_name(rng: np.random.Generator, max_m: int = 3, max_r: int = 3) -> IndecName:
    """A random indecomposable name from every family."""
    kind = int(rng.integers(0, 4))
    if kind == 0:
        return proj_name(int(rng.integers(0, 5)), int(rng.integers(0, max_m + 1)))
    if kind == 1:
        return inj_name(int(rng.integers(0, 5)), int(rng.integers(0, max_m + 1)))
    if kind == 2:
        while True:
            t = (int(rng.integers(2, la.prime() - 1)), 1)
            if t not in rings.SINGULAR:
                break
        return reg_hom_name(t, int(rng.integers(1, max_r + 1)))
    t = rings.SINGULAR[int(rng.integers(0, 3))]
    sign = "+" if rng.integers(0, 2) == 0 else "-"
    return reg_exc_name(t, int(rng.integers(1, max_r + 2)), sign)


def random_basis_change(M: Rep, rng: np.random.Generator) -> Rep:
    return M.conjugate([la.random_invertible(rng, d) for d in M.dims])
