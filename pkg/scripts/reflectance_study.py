"""Real-frequency reflectances and their deviation from the local model.

Writes one CSV per incidence angle and prints the deviation extrema, the
quantities bounded in the release criteria.
"""

import argparse
import math
import sys

import numpy as np

from nlcasimir import Drude, gold_default, reflectance_deviation
from nlcasimir.cli import run

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--angles", default="45deg,60deg",
                        help="comma list, radians or 'NNdeg'")
    parser.add_argument("--omega-min", type=float, default=0.1, help="eV")
    parser.add_argument("--omega-max", type=float, default=1.0, help="eV")
    parser.add_argument("--points", type=int, default=50)
    parser.add_argument("--out-dir", default=".")
    args = parser.parse_args()

    nonlocal_model = gold_default()
    local_model = Drude(nonlocal_model.params.drude)
    worst = 0
    for angle in args.angles.split(","):
        angle = angle.strip()
        path = f"{args.out_dir}/reflectance_{angle.replace('.', 'p')}.csv"
        code = run(["reflectance", "--theta", angle,
                    "--omega-min", str(args.omega_min),
                    "--omega-max", str(args.omega_max),
                    "--points", str(args.points), "--out", path])
        worst = max(worst, code)

        theta = (math.radians(float(angle[:-3])) if angle.endswith("deg")
                 else float(angle))
        devs = [reflectance_deviation(nonlocal_model, local_model,
                                      float(om), theta)
                for om in np.linspace(args.omega_min, args.omega_max,
                                      args.points)]
        print(f"{path}: dR_TM in [{min(d.deviation_tm for d in devs):.3g}, "
              f"{max(d.deviation_tm for d in devs):.3g}], dR_TE in "
              f"[{min(d.deviation_te for d in devs):.3g}, "
              f"{max(d.deviation_te for d in devs):.3g}]", file=sys.stderr)
    sys.exit(worst)
