"""fwm-plot <kind> --in <dir> --out <file.(png|pdf)>"""

import argparse
import sys

from .figures import plot_efficiency, plot_evolution, plot_gv, plot_matching
from .io import InputError

KINDS = {
    "matching": plot_matching,
    "gv": plot_gv,
    "evolution": plot_evolution,
    "efficiency": plot_efficiency,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fwm-plot", description="Render figures from fwm output directories."
    )
    parser.add_argument("kind", choices=sorted(KINDS))
    parser.add_argument("--in", dest="in_dir", required=True, help="fwm output directory")
    parser.add_argument("--out", required=True, help="figure file (.png or .pdf)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if not args.out.endswith((".png", ".pdf")):
        print("fwm-plot: --out must end in .png or .pdf", file=sys.stderr)
        return 2
    try:
        KINDS[args.kind](args.in_dir, args.out)
    except InputError as exc:
        print(f"fwm-plot: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
