"""Finitely generated polynomial ideals: certified membership and friends.

Membership at a bound is decided by an exact linear system over the
cofactor coefficients: f is a bounded member of (g_1, ..., g_m) iff
f = sum h_i g_i is solvable with every h_i of total degree at most the
bound.  A Member certificate carries the cofactors and re-verifies by
plain polynomial arithmetic; a NonMember certificate carries a point
where all generators vanish but f does not; Unknown is the honest third
verdict when the search space is exhausted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .domains import Domain, QQ, RingElement
from .errors import (
    InseparableCase,
    NotEnoughVariables,
    RingMismatch,
    TooLarge,
    UnsupportedDomain,
    ZeroIdeal,
    ZeroPolynomial,
)
from .linalg import solve_mod_p, solve_rational
from .polynomials import Polynomial, PolyRing, monomials_up_to

RATIONAL_GRID_SPAN = 5
POINT_SCAN_LIMIT = 1_000_000


@dataclass(frozen=True)
class IdealPresentation:
    """A finite generator list in a fixed polynomial ring.

    Zero generators contribute nothing and are dropped; an empty list
    presents the zero ideal.
    """

    ring: PolyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatch(f"generator ring {g.ring} differs from {self.ring}")
            if not g.is_zero:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, *gens: Polynomial) -> "IdealPresentation":
        if not gens:
            raise ValueError("need at least one polynomial to infer the ring")
        return cls(gens[0].ring, tuple(gens))

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


MEMBER = "member"
NON_MEMBER = "non_member"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class MembershipCertificate:
    """Outcome of a bounded membership search, re-verifiable by anyone."""

    verdict: str
    bound: int
    cofactors: tuple[Polynomial, ...] | None = None
    witness: tuple[RingElement, ...] | None = None

    def verify(self, f: Polynomial, ideal: IdealPresentation) -> bool:
        """Re-check the certificate against f and the ideal, exactly."""
        if self.verdict == MEMBER:
            if self.cofactors is None or len(self.cofactors) != len(ideal.generators):
                return False
            total = Polynomial.zero(ideal.ring)
            for h, g in zip(self.cofactors, ideal.generators):
                total = total + h * g
            return total == f
        if self.verdict == NON_MEMBER:
            if self.witness is None:
                return False
            point = list(self.witness)
            if any(not g.evaluate(point).is_zero for g in ideal.generators):
                return False
            return not f.evaluate(point).is_zero
        return True  # Unknown makes no claim


def membership_bounded(f: Polynomial, ideal: IdealPresentation, bound: int) -> MembershipCertificate:
    """Decide f in (g_1..g_m) with cofactor total degree <= bound.

    Field coefficients only.  Over F_p a failed solve falls back to an
    exhaustive point scan for a non-membership witness; over Q the scan
    covers a small integer grid, so the honest fallback is Unknown.
    """
    if f.ring != ideal.ring:
        raise RingMismatch(f"{f.ring} vs {ideal.ring}")
    dom = f.ring.domain
    if not dom.is_field:
        raise UnsupportedDomain(f"membership needs field coefficients, not {dom}")

    cofactors = _solve_combination(f, ideal.generators, bound)
    if cofactors is not None:
        cert = MembershipCertificate(MEMBER, bound, cofactors=cofactors)
        assert cert.verify(f, ideal)
        return cert

    witness = _non_membership_witness(f, ideal)
    if witness is not None:
        cert = MembershipCertificate(NON_MEMBER, bound, witness=witness)
        assert cert.verify(f, ideal)
        return cert
    return MembershipCertificate(UNKNOWN, bound)


def _solve_combination(f: Polynomial, gens: Sequence[Polynomial],
                       bound: int) -> tuple[Polynomial, ...] | None:
    ring = f.ring
    dom = ring.domain
    if not gens:
        return () if f.is_zero else None
    if f.is_zero:
        return tuple(Polynomial.zero(ring) for _ in gens)

    shifts = monomials_up_to(ring.nvars, bound)
    columns: list[dict[tuple[int, ...], object]] = []
    col_ids: list[tuple[int, tuple[int, ...]]] = []
    row_index: dict[tuple[int, ...], int] = {}

    def row_of(exps: tuple[int, ...]) -> int:
        if exps not in row_index:
            row_index[exps] = len(row_index)
        return row_index[exps]

    for exps in f.terms:
        row_of(exps)
    for gi, g in enumerate(gens):
        for shift in shifts:
            col: dict[tuple[int, ...], object] = {}
            for exps, c in g.terms.items():
                target = tuple(a + b for a, b in zip(exps, shift))
                col[target] = c
                row_of(target)
            columns.append(col)
            col_ids.append((gi, shift))

    nrows = len(row_index)
    zero = dom.zero
    matrix = [[zero] * len(columns) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for exps, c in col.items():
            matrix[row_index[exps]][j] = c
    rhs = [zero] * nrows
    for exps, c in f.terms.items():
        rhs[row_index[exps]] = c

    if dom == QQ:
        sol = solve_rational(matrix, rhs)
    else:
        sol = solve_mod_p(matrix, rhs, dom.modulus)
    if sol is None:
        return None

    per_gen: list[dict[tuple[int, ...], object]] = [dict() for _ in gens]
    for (gi, shift), c in zip(col_ids, sol):
        if c:
            per_gen[gi][shift] = c
    return tuple(Polynomial(ring, terms) for terms in per_gen)


def _non_membership_witness(f: Polynomial,
                            ideal: IdealPresentation) -> tuple[RingElement, ...] | None:
    ring = f.ring
    dom = ring.domain
    for raw_point in _scan_points(dom, ring.nvars):
        point = tuple(dom.element(x) for x in raw_point)
        if all(g.evaluate(point).is_zero for g in ideal.generators):
            if not f.evaluate(point).is_zero:
                return point
    return None


def _scan_points(dom: Domain, nvars: int) -> Iterable[tuple]:
    if dom == QQ:
        span = range(-RATIONAL_GRID_SPAN, RATIONAL_GRID_SPAN + 1)
        return itertools.product([Fraction(v) for v in span], repeat=nvars)
    p = dom.modulus
    if p ** nvars > POINT_SCAN_LIMIT:
        raise TooLarge(f"point scan over {p}^{nvars} exceeds the desk-scale limit")
    return itertools.product(range(p), repeat=nvars)


EQUAL_WITHIN_BOUND = "equal_within_bound"
LEFT_NOT_IN_RIGHT = "left_not_in_right"
RIGHT_NOT_IN_LEFT = "right_not_in_left"


@dataclass(frozen=True)
class IdealComparison:
    """Mutual bounded membership of two presentations' generators."""

    kind: str
    offending: Polynomial | None = None
    certificate: MembershipCertificate | None = None


def ideal_equal_bounded(left: IdealPresentation, right: IdealPresentation,
                        bound: int) -> IdealComparison:
    """Compare two ideals by mutual membership of generators at a bound.

    A NonMember certificate in either direction is decisive; otherwise any
    Unknown verdict makes the comparison Unknown.
    """
    if left.ring != right.ring:
        raise RingMismatch(f"{left.ring} vs {right.ring}")
    saw_unknown = False
    for g in left.generators:
        cert = membership_bounded(g, right, bound)
        if cert.verdict == NON_MEMBER:
            return IdealComparison(LEFT_NOT_IN_RIGHT, g, cert)
        if cert.verdict == UNKNOWN:
            saw_unknown = True
    for g in right.generators:
        cert = membership_bounded(g, left, bound)
        if cert.verdict == NON_MEMBER:
            return IdealComparison(RIGHT_NOT_IN_LEFT, g, cert)
        if cert.verdict == UNKNOWN:
            saw_unknown = True
    if saw_unknown:
        return IdealComparison(UNKNOWN)
    return IdealComparison(EQUAL_WITHIN_BOUND)


# -- univariate division, gcd, radical ---------------------------------------


def divmod_univariate(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder in one variable over a field."""
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    if f.ring.nvars != 1:
        raise UnsupportedDomain("univariate division only")
    if not f.ring.domain.is_field:
        raise UnsupportedDomain("division needs field coefficients")
    if g.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    dom = f.ring.domain
    ring = f.ring
    quo = Polynomial.zero(ring)
    rem = f
    dg = g.degree()
    lead_inv = dom.inv(g.terms[(dg,)])
    while not rem.is_zero and rem.degree() >= dg:
        dr = rem.degree()
        coeff = dom.mul(rem.terms[(dr,)], lead_inv)
        step = Polynomial.monomial(ring, (dr - dg,), coeff)
        quo = quo + step
        rem = rem - step * g
    return quo, rem


def gcd_univariate(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero:
        _, r = divmod_univariate(a, b)
        a, b = b, r
    return monic(a) if not a.is_zero else a


def monic(f: Polynomial) -> Polynomial:
    if f.is_zero:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    dom = f.ring.domain
    lead = f.terms[f.leading_monomial()]
    if lead == dom.one:
        return f
    inv = dom.inv(lead)
    return f * Polynomial.constant(f.ring, inv)


def radical_univariate(f: Polynomial) -> Polynomial:
    """f / gcd(f, f'), normalized monic.

    Over Q the result generates the radical of (f).  Over F_p a
    nonconstant polynomial can have an identically zero derivative (x^p
    for instance); squarefree extraction breaks down there, so that case
    raises instead of guessing, and factors whose multiplicity is a
    multiple of p are beyond what this quotient can see.
    """
    if f.is_zero:
        raise ZeroPolynomial("radical of the zero ideal's generator")
    if f.ring.nvars != 1:
        raise UnsupportedDomain("radical_univariate needs one variable")
    if not f.ring.domain.is_field:
        raise UnsupportedDomain("radical needs field coefficients")
    df = f.derivative(f.ring.variables[0])
    if df.is_zero:
        if f.degree() >= 1:
            raise InseparableCase(f"derivative of {f} vanishes identically")
        return Polynomial.one(f.ring)  # nonzero constant: (f) is the whole ring
    g = gcd_univariate(f, df)
    quo, rem = divmod_univariate(f, g)
    assert rem.is_zero
    return monic(quo)


# -- the strictly growing chain and the basis-extraction demonstrator --------


@dataclass(frozen=True)
class ChainStep:
    """One certified strict inclusion (gens) < (gens + next_variable)."""

    step: int
    ideal_vars: tuple[str, ...]
    new_variable: str
    certificate: MembershipCertificate


def strict_chain_demo(k: int, ring: PolyRing) -> list[ChainStep]:
    """Certify the first k strict steps of the chain (x1) < (x1, x2) < ...

    Each step shows the next variable is outside the ideal of the previous
    ones via the evaluation point that is 1 on the new variable and 0
    elsewhere: a sound non-membership proof in any coefficient domain.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if ring.nvars < k + 1:
        raise NotEnoughVariables(f"need at least {k + 1} variables, ring has {ring.nvars}")
    dom = ring.domain
    steps = []
    for i in range(1, k + 1):
        prior = ring.variables[:i]
        new = ring.variables[i]
        ideal = IdealPresentation(ring, tuple(Polynomial.variable(ring, v) for v in prior))
        f = Polynomial.variable(ring, new)
        witness = tuple(
            dom.element(1 if j == i else 0) for j in range(ring.nvars)
        )
        cert = MembershipCertificate(NON_MEMBER, 0, witness=witness)
        if not cert.verify(f, ideal):
            raise AssertionError("evaluation witness failed to verify")
        steps.append(ChainStep(i, prior, new, cert))
    return steps


@dataclass(frozen=True)
class BasisExtraction:
    """Result of collapsing a univariate presentation to one generator.

    ``leading_profile[i]`` is True when the degree-<=i members of the
    ideal already realize every leading coefficient, which over a field
    happens exactly from the extracted generator's degree upward.
    """

    extracted: Polynomial
    leading_profile: tuple[bool, ...]
    verified_equal: bool


def hbt_extract_univariate(ideal: IdealPresentation) -> BasisExtraction:
    """Extract the single generator of a univariate ideal over F_p.

    The gcd of the generators generates the same ideal; the returned
    profile records, degree by degree, when leading coefficients of
    bounded-degree members fill out the whole field.
    """
    ring = ideal.ring
    if ring.nvars != 1:
        raise UnsupportedDomain("univariate presentations only")
    if not (ring.domain.is_field and ring.domain.is_finite):
        raise UnsupportedDomain("expected coefficients in a prime field")
    if not ideal.generators:
        raise ZeroIdeal("no nonzero generator to extract from")

    g = ideal.generators[0]
    for h in ideal.generators[1:]:
        g = gcd_univariate(g, h)
    g = monic(g)

    max_deg = max(int(h.degree()) for h in ideal.generators)
    dg = int(g.degree())
    profile = tuple(i >= dg for i in range(max_deg + 1))

    bound = max(1, sum(int(h.degree()) for h in ideal.generators))
    comparison = ideal_equal_bounded(IdealPresentation(ring, (g,)), ideal, bound)
    return BasisExtraction(g, profile, comparison.kind == EQUAL_WITHIN_BOUND)
