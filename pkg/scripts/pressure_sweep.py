"""Pressure comparison sweep: drude vs nonlocal vs plasma.

Emits the plot-ready CSV (pressures plus both ratio columns) for the
micrometer range where the model families separate.
"""

import argparse
import sys

from nlcasimir.cli import run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a-min", type=float, default=1.0, help="um")
    parser.add_argument("--a-max", type=float, default=7.0, help="um")
    parser.add_argument("--points", type=int, default=25)
    parser.add_argument("--temp", type=float, default=300.0, help="K")
    parser.add_argument("--out", default=None,
                        help="CSV path (default: stdout)")
    args = parser.parse_args()

    argv = ["pressure", "--models", "drude,nonlocal,plasma",
            "--a-min", str(args.a_min), "--a-max", str(args.a_max),
            "--points", str(args.points), "--temp", str(args.temp)]
    if args.out:
        argv += ["--out", args.out]
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
