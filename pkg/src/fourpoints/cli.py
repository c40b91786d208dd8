"""Command-line interface.

Exit codes: 0 when every check passed, 1 when a mathematical check failed,
2 for invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import acceptance, bridge
from . import complete_resolutions as cres
from . import factorizations as mf
from . import homological as hom
from . import linalg as la
from . import quiver as q
from . import rings
from .config import AcceptanceSizes, Settings
from .graded import GradingError, PresentedModule

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


# -- output ------------------------------------------------------------------

class Report:
    """Collects rows and renders them as text or as a JSON list."""

    def __init__(self, emit: str):
        self.emit = emit
        self.rows: list[dict] = []
        self.text: list[str] = []
        self.failed = False

    def check(self, name: str, statement: str, ok: bool, detail=None) -> None:
        self.failed |= not ok
        self.rows.append({"criterion": name, "statement": statement,
                          "status": "PASS" if ok else "FAIL", "detail": detail or {}})
        self.text.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {statement}")

    def info(self, name: str, text: str, detail=None) -> None:
        self.rows.append({"criterion": name, "statement": "", "status": "INFO",
                          "detail": detail if detail is not None else text})
        self.text.append(text)

    def render(self) -> str:
        if self.emit == "json":
            return json.dumps(self.rows, indent=2, default=_jsonable)
        return "\n".join(self.text)

    @property
    def code(self) -> int:
        return EXIT_FAIL if self.failed else EXIT_OK


def _jsonable(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, tuple)):
        return list(obj)
    return str(obj)


# -- argument helpers ----------------------------------------------------------

def _point(text: str) -> tuple[int, int]:
    try:
        return rings.parse_point(text)
    except (ValueError, rings.RingError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}")


def module_from_args(args) -> PresentedModule:
    """N --t [--r], D --t --sign [--r], L --i, k, kst, or a JSON file."""
    spec = args.module
    r = getattr(args, "r", 1) or 1
    if spec == "N":
        if args.t is None:
            raise InputError("N needs --t")
        return mf.fundamental_module(args.t) if r == 1 else mf.tube_module(args.t, r)
    if spec == "D":
        if args.t is None:
            raise InputError("D needs --t")
        return mf.degenerate_chain(args.t, r, args.sign)
    if spec == "L":
        if args.i is None:
            raise InputError("L needs --i")
        return mf.point_module(args.i)
    if spec == "kst":
        return hom.stabilize_k()
    if spec == "k":
        return hom.residue_field()
    if spec.endswith(".json") or Path(spec).exists():
        try:
            return PresentedModule.from_json(_load_json(spec))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed module file: {exc}")
    raise InputError(f"unknown module spec {spec!r}")


def _rep(path: str) -> q.Rep:
    try:
        return q.Rep.from_json(_load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed representation: {exc}")


def _add_module_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--module", required=True, help="N, D, L, k, kst or a JSON file")
    p.add_argument("--t", type=_point, help="pencil parameter: 0, 1, inf or a:b")
    p.add_argument("--sign", choices=mf.SIGNS, default="+")
    p.add_argument("--i", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--r", type=int, default=1, help="tube length")


# -- commands ----------------------------------------------------------------

def cmd_ring(args, rep: Report) -> None:
    dims = [rings.dim(rings.QUOTIENT, d) for d in range(args.degree + 1)]
    sing = sorted(rings.singular_members())
    rep.info("ring", f"dim R_d for d = 0..{args.degree}: {' '.join(map(str, dims))}", dims)
    rep.info("ring", "singular members: " + ", ".join(rings.point_label(t) for t in sing),
             [list(t) for t in sing])
    rep.info("ring", "points: " + ", ".join(str(p) for p in rings.points()),
             [list(p) for p in rings.points()])
    rep.info("ring", "lines: " + ", ".join(repr(l) for l in rings.lines()),
             [repr(l) for l in rings.lines()])
    rep.check("ring", "singular members are exactly 0, 1, inf", set(sing) == set(rings.SINGULAR))


def cmd_mf_verify(args, rep: Report) -> None:
    home = args.home
    if args.variant == "phi":
        pair = mf.phi_pair(args.t, args.sign, home)
    elif args.variant == "psi":
        pair = mf.psi_pair(args.t, args.sign, home)
    else:
        pair = mf.degenerate_pair(args.t, args.sign, home)
    rep.info("mf", repr(pair.phi.entries), {"phi": pair.phi.to_json(), "psi": pair.psi.to_json()})
    rep.check(f"mf verify {pair.label}", "phi psi = psi phi = Q_t I", mf.mf_verify(pair))


def cmd_module_betti(args, rep: Report) -> None:
    M = module_from_args(args)
    margin = args.degree_bound
    if args.backward:
        B = hom.complete_betti(M, args.length, args.backward)
    else:
        B = hom.betti_table(M, args.length, margin)
    rep.info("betti", f"{M.name or 'M'}\n{B.render()}", B.to_json())


def cmd_module_invariants(args, rep: Report) -> None:
    M = module_from_args(args)
    h = hom.hilbert_data(M)
    rep.info("invariants", f"{M.name or 'M'}: Q = {h.render()}, nu = {h.nu}, e = {h.e}, "
             f"ulrich = {h.ulrich}", h.to_json())


def cmd_cres_window(args, rep: Report) -> None:
    w = cres.bpr_window(args.target, args.lo, args.hi)
    rep.info("cres", f"{args.target} on [{args.lo}, {args.hi}]\n{w.betti().render()}", w.to_json())
    if args.check:
        c = cres.cross_validate(args.target, args.lo, args.hi, seed=args.seed)
        rep.check(f"cres {args.target}", "square-zero, minimal, matches the computed resolution",
                  c.ok, {"minimal": c.minimal, "d2": c.complex_ok, "cokernel": c.cokernel_iso,
                         "betti": c.betti_match, "details": c.details})


def cmd_rep_decompose(args, rep: Report) -> None:
    M = _rep(args.rep)
    D = q.decompose(M, seed=args.seed)
    rows = []
    for P, m in D.pieces:
        try:
            name = str(q.identify(P))
        except q.IdentifyError as exc:
            name = f"unidentified ({exc})"
        rows.append({"name": name, "multiplicity": m, "rep": P.to_json()})
    text = "\n".join(f"{r['multiplicity']} x {r['name']}" for r in rows)
    rep.info("decompose", text, rows)
    total = sum(P.total * m for P, m in D.pieces)
    rep.check("decompose", "summand dimensions add up", total == M.total)


def cmd_rep_identify(args, rep: Report) -> None:
    M = _rep(args.rep)
    if not q.is_indecomposable(M, seed=args.seed):
        rep.check("identify", "input is indecomposable", False)
        return
    name = q.identify(M)
    rep.info("identify", str(name), name.to_json())


def cmd_rep_tau(args, rep: Report) -> None:
    M = _rep(args.rep)
    out = q.tau_inverse(M) if args.inverse else q.tau(M)
    rep.info("tau", json.dumps(out.to_json()), out.to_json())


def cmd_rep_named(args, rep: Report) -> None:
    try:
        name = q.IndecName.from_json(json.loads(args.name))
    except (json.JSONDecodeError, KeyError) as exc:
        raise InputError(f"bad name: {exc}")
    M = q.named(name)
    rep.info("named", json.dumps(M.to_json()), M.to_json())


def cmd_rep_lines(args, rep: Report) -> None:
    try:
        lines = [tuple(int(c) for c in part.split(",")) for part in args.lines.split(";")]
    except ValueError as exc:
        raise InputError(f"bad line list: {exc}")
    t, g = q.four_lines_normalize(lines)
    rep.info("normalize-lines", f"t = {rings.point_label(t)}",
             {"t": list(t), "basis_change": g.tolist()})


def cmd_bridge_apply(args, rep: Report) -> None:
    M = module_from_args(args)
    E = bridge.apply_E(M)
    rep.info("apply-E", f"E({M.name or 'M'}) has dimension vector {E.dims}", E.to_json())
    try:
        rep.info("apply-E", f"identified as {q.identify(E)}")
    except q.RepError:
        rep.info("apply-E", "not identified as a single indecomposable")


def cmd_bridge_verify(args, rep: Report) -> None:
    rng = np.random.default_rng(args.seed)
    if args.suite == "images":
        for r in bridge.theorem_checks(bridge.random_parameters(rng, args.samples)):
            rep.check(r.name, "image under E", r.ok, r.detail)
    elif args.suite == "tau":
        mods = [mf.fundamental_module(t) for t in bridge.random_parameters(rng, 5)]
        mods += [mf.degenerate_module(s, g) for s in rings.SINGULAR for g in mf.SIGNS]
        mods += [mf.point_module(i) for i in q.ARMS]
        for M in mods:
            r = bridge.tau_exchange_check(M)
            rep.check(r.name, "E(tau M) = tau^-1 E(M)", r.ok, r.detail)
    elif args.suite == "preproj":
        T = bridge.preprojective_dims(args.degree)
        rep.info("preproj", T.render(), T.to_json())
        rep.check("preproj", "module and quiver tables agree", not T.mismatches())
    else:
        r = bridge.tilting_orthogonality()
        rep.check(r.name, "Tor vanishing off degree 0", r.ok, r.detail)


def cmd_verify_all(args, rep: Report) -> None:
    settings = Settings(seed=args.seed, prime=args.prime, degree_bound=args.degree_bound,
                        samples=args.samples, emit=args.emit)
    sizes = AcceptanceSizes(mf_parameters=args.samples, theorem_parameters=args.samples)
    only = {int(k) for k in args.only.split(",")} if args.only else None
    for c in acceptance.run_all(settings, sizes, only):
        rep.check(f"{c.number}. {c.title}", c.statement, c.ok, c.detail)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime", type=int, default=la.DEFAULT_PRIME)
    common.add_argument("--degree-bound", type=int, default=None,
                        help="kernel search margin above the top generator degree")
    common.add_argument("--samples", type=int, default=20)
    common.add_argument("--emit", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="fourpoints",
                                     description="Graded MCM modules over four points in P^2 "
                                                 "and D4 quiver representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", parents=[common], help="the coordinate ring and its pencil")
    p.add_argument("--degree", type=int, default=5)
    p.set_defaults(func=cmd_ring)

    mfp = sub.add_parser("mf", help="matrix factorizations").add_subparsers(dest="action", required=True)
    p = mfp.add_parser("verify", parents=[common])
    p.add_argument("--t", type=_point, required=True)
    p.add_argument("--variant", choices=("phi", "psi", "degenerate"), default="phi")
    p.add_argument("--sign", choices=mf.SIGNS, default="+")
    p.add_argument("--home", type=_point, default=None, help="hypersurface parameter s")
    p.set_defaults(func=cmd_mf_verify)

    modp = sub.add_parser("module", help="graded modules").add_subparsers(dest="action", required=True)
    p = modp.add_parser("betti", parents=[common])
    _add_module_args(p)
    p.add_argument("--length", type=int, default=6)
    p.add_argument("--backward", type=int, default=0, help="negative columns of the complete table")
    p.set_defaults(func=cmd_module_betti)
    p = modp.add_parser("invariants", parents=[common])
    _add_module_args(p)
    p.set_defaults(func=cmd_module_invariants)

    cp = sub.add_parser("cres", help="explicit complete resolutions").add_subparsers(dest="action", required=True)
    p = cp.add_parser("window", parents=[common])
    p.add_argument("--target", choices=cres.TARGETS, default="k")
    p.add_argument("--lo", type=int, default=-3)
    p.add_argument("--hi", type=int, default=6)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_cres_window)

    rp = sub.add_parser("rep", help="D4 representations (JSON files, '-' for stdin)") \
        .add_subparsers(dest="action", required=True)
    for name, func in (("decompose", cmd_rep_decompose), ("identify", cmd_rep_identify),
                       ("tau", cmd_rep_tau)):
        p = rp.add_parser(name, parents=[common])
        p.add_argument("rep")
        if name == "tau":
            p.add_argument("--inverse", action="store_true")
        p.set_defaults(func=func)
    p = rp.add_parser("named", parents=[common])
    p.add_argument("name", help='JSON name, e.g. {"kind": "RegHom", "t": [1, 2], "r": 2}')
    p.set_defaults(func=cmd_rep_named)
    p = rp.add_parser("normalize-lines", parents=[common])
    p.add_argument("--lines", required=True, help="four vectors, e.g. '0,1;1,1;1,0;2,1'")
    p.set_defaults(func=cmd_rep_lines)

    bp = sub.add_parser("bridge", help="the functor E").add_subparsers(dest="action", required=True)
    p = bp.add_parser("apply-E", parents=[common])
    _add_module_args(p)
    p.set_defaults(func=cmd_bridge_apply)
    p = bp.add_parser("verify", parents=[common])
    p.add_argument("--suite", choices=("images", "tau", "preproj", "tilting"), required=True)
    p.add_argument("--degree", type=int, default=5)
    p.set_defaults(func=cmd_bridge_verify)

    vp = sub.add_parser("verify", help="acceptance suite").add_subparsers(dest="action", required=True)
    p = vp.add_parser("all", parents=[common])
    p.add_argument("--only", default="", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.emit)
    try:
        Settings(seed=args.seed, prime=args.prime, degree_bound=args.degree_bound,
                 samples=args.samples, emit=args.emit).apply()
        args.func(args, rep)
    except (InputError, la.FieldError, rings.RingError, GradingError, q.RepError,
            mf.FactorizationError, cres.ComplexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except hom.ResolutionError as exc:
        rep.check("computation", str(exc), False)
    print(rep.render())
    return rep.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
