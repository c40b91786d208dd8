"""Compare dim Ext^i(U, U(-i)) with the preprojective algebra of the D4 quiver."""

import argparse
import json

from fourpoints import bridge


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    table = bridge.preprojective_dims(args.degree)
    if args.json:
        print(json.dumps(table.to_json(), indent=1))
    else:
        print(table.render())
        print("mismatches:", table.mismatches() or "none")
    raise SystemExit(1 if table.mismatches() else 0)


if __name__ == "__main__":
    main()
