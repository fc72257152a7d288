"""Survey of the V and I correspondence over F_2^2.

Sweeps all 16 point sets and all 64 polynomials of total degree <= 2 and
reports how often each law held (they all hold; the point is to watch the
machinery do it).
"""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ringlab.domains import Fp
from ringlab.polyideals import IdealPresentation
from ringlab.polynomials import Polynomial, PolyRing
from ringlab.varieties import PointSet, vanishing_ideal, variety

RING = PolyRing(Fp(2), ("x", "y"))
SPACE = tuple(itertools.product(range(2), repeat=2))


def corpus():
    monos = [e for e in itertools.product(range(3), repeat=2) if sum(e) <= 2]
    return [
        Polynomial(RING, {m: b for m, b in zip(monos, bits) if b})
        for bits in itertools.product((0, 1), repeat=len(monos))
    ]


def v(gens):
    return set(variety(IdealPresentation(RING, tuple(gens))))


def main():
    polys = corpus()
    checked = 0

    for r in range(len(SPACE) + 1):
        for combo in itertools.combinations(SPACE, r):
            X = PointSet(2, 2, combo)
            assert variety(vanishing_ideal(X).ideal()).points == X.points
            checked += 1
    print(f"V(I(X)) = X for all {checked} point sets")

    singles = [v([f]) for f in polys]
    product_ok = pair_ok = 0
    for i, f in enumerate(polys):
        for j, g in enumerate(polys):
            if v([f * g]) == singles[i] | singles[j]:
                product_ok += 1
            if v([f, g]) == singles[i] & singles[j]:
                pair_ok += 1
    print(f"V(fg) = V(f) u V(g) held {product_ok}/4096 times")
    print(f"V(f,g) = V(f) n V(g) held {pair_ok}/4096 times")

    antitone = 0
    for i, f in enumerate(polys):
        for j, g in enumerate(polys):
            if v([f, g]) <= singles[i]:
                antitone += 1
    print(f"S <= T gives V(T) <= V(S) on {antitone}/4096 nested pairs")


if __name__ == "__main__":
    main()
