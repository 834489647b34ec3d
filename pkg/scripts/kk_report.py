"""Causality-relation residual reports at several transverse wavevectors.

Writes one JSON report per k value.  The exit code is the worst CLI exit
code seen, so a failed relation (including the expected conducting-limit
failure at k = 0) propagates to the caller.
"""

import argparse
import sys

from nlcasimir.cli import run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kperp", default="0,0.2,1.0",
                        help="comma list of transverse wavevectors in eV")
    parser.add_argument("--relations", default="all")
    parser.add_argument("--out-dir", default=".")
    args = parser.parse_args()

    worst = 0
    for k in (v.strip() for v in args.kperp.split(",")):
        path = f"{args.out_dir}/kk_k{k.replace('.', 'p')}.json"
        code = run(["kk-verify", "--kperp", k,
                    "--relations", args.relations, "--out", path])
        status = "ok" if code == 0 else f"exit {code}"
        print(f"{path}: {status}", file=sys.stderr)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
