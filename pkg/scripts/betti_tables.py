"""Print complete Betti tables for the standard MCM modules."""

import argparse

from fourpoints import factorizations as mf
from fourpoints import homological as hom
from fourpoints.rings import parse_point


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--forward", type=int, default=6)
    ap.add_argument("--backward", type=int, default=3)
    ap.add_argument("--t", default="2:1", help="parameter for N_t")
    args = ap.parse_args()
    t = parse_point(args.t)
    modules = [mf.fundamental_module(t), mf.degenerate_module((0, 1), "+"),
               mf.degenerate_chain((0, 1), 2, "+"), mf.point_module(1), hom.stabilize_k()]
    for M in modules:
        print(f"== {M.name}")
        print(hom.complete_betti(M, args.forward, args.backward).render())
        print()


if __name__ == "__main__":
    main()
