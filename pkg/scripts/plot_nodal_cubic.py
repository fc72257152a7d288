"""Render the nodal cubic y^2 = x^2(x+1) as ASCII art, optionally SVG.

Usage: python scripts/plot_nodal_cubic.py [resolution] [svg-output-path]
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ringlab.domains import QQ
from ringlab.parsing import parse_polynomial
from ringlab.polynomials import PolyRing
from ringlab.raster import raster_plane_curve, render_ascii, render_svg


def main():
    res = int(sys.argv[1]) if len(sys.argv) > 1 else 64
    ring = PolyRing(QQ, ("x", "y"))
    f = parse_polynomial("y^2 - x^2*(x+1)", ring)
    window = (Fraction(-2), Fraction(2), Fraction(-2), Fraction(2))
    grid = raster_plane_curve(f, window, res, res)
    sys.stdout.write(render_ascii(grid))
    print(f"\n{len(grid.marked())} marked cells at {res}x{res}; "
          f"the loop passes (-1,0) and the node sits at the origin")
    if len(sys.argv) > 2:
        Path(sys.argv[2]).write_text(render_svg(grid))
        print(f"wrote {sys.argv[2]}")


if __name__ == "__main__":
    main()
