"""Draw the walls of a few classes into one SVG per class.

    python scripts/walls_figure.py --out figures/
"""

import argparse
import pathlib

from abeldt.gamma import GammaVector
from abeldt.walls import Viewport, emit_walls

CLASSES = [(2, 1, 1, 1), (1, 0, 0, -1), (1, 0, 0, 1), (0, -9, -9, -7), (1, 0, -2, -6), (2, 0, 0, 1)]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="figures")
    p.add_argument("--viewport", default="-3,3,3")
    args = p.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    vp = Viewport.parse(args.viewport)
    for v in CLASSES:
        name = "walls_" + "_".join(str(x) for x in v) + ".svg"
        (out / name).write_text(emit_walls(GammaVector(*v), "svg", vp))
        print(out / name, emit_walls(GammaVector(*v), "json"))


if __name__ == "__main__":
    main()
