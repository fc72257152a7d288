"""Chain-condition experiments: where ascending chains stop and where they don't.

Three runs:
  1. random cumulative generator chains in Z, reduced to gcds, with the
     observed stabilization index;
  2. exhaustive maximal-element checks over the ideal posets of Z/n;
  3. the strictly growing chain (x1) < (x1, x2) < ... in a polynomial ring,
     certified step by step by evaluation witnesses.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ringlab.domains import Fp
from ringlab.intideals import (
    IntIdeal,
    ascending_chain_stabilizes,
    enumerate_ideals_mod_n,
)
from ringlab.polynomials import PolyRing
from ringlab.polyideals import strict_chain_demo


def integer_chains(runs=10, seed=0):
    rng = random.Random(seed)
    print("== ascending chains of integer ideals ==")
    for run in range(runs):
        acc = []
        chain = []
        for _ in range(rng.randint(2, 8)):
            acc = acc + [rng.randint(-60, 60) for _ in range(rng.randint(1, 2))]
            chain.append(tuple(acc))
        gcds = [IntIdeal.from_generators(c).generator for c in chain]
        idx = ascending_chain_stabilizes(chain)
        print(f"  run {run}: gcd sequence {gcds} stabilizes at index {idx}")
    print()


def maximal_elements(limit=12):
    print("== maximal elements among ideals of Z/n ==")
    import itertools

    for n in range(1, limit + 1):
        ideals = enumerate_ideals_mod_n(n)
        sets = [set(i.elements) for i in ideals]
        worst = 0
        for r in range(1, len(sets) + 1):
            for combo in itertools.combinations(sets, r):
                prop = any(not any(s < t for t in combo) for s in combo)
                assert prop
                worst = max(worst, r)
        print(f"  n={n:2d}: {len(ideals)} ideals, all {2 ** len(ideals) - 1} "
              f"nonempty collections have a maximal element")
    print()


def strict_chain(k=6):
    print(f"== strictly growing chain over F_2[x1..x{k + 1}] ==")
    ring = PolyRing(Fp(2), tuple(f"x{i}" for i in range(1, k + 2)))
    for step in strict_chain_demo(k, ring):
        witness = ", ".join(str(w) for w in step.certificate.witness)
        print(f"  {step.new_variable} is not in ({', '.join(step.ideal_vars)}): "
              f"witness ({witness})")
    print("  every inclusion is strict; nothing here ever stabilizes")


if __name__ == "__main__":
    integer_chains()
    maximal_elements()
    strict_chain()
