"""The variety / vanishing-ideal correspondence over prime fields.

Everything here is exhaustive and exact: a variety is computed by
scanning all of F_p^n, and the vanishing ideal of a point set comes from
the nullspace of the evaluation matrix on reduced monomials (per-variable
exponents below p) together with the field equations x_i^p - x_i.  Over a
finite field every subset of F_p^n is algebraic, so V(I(X)) = X exactly
and the irreducible sets are the singletons.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .domains import Domain, Fp, is_prime
from .errors import InvalidDomain, TooLarge, UnsupportedDomain
from .linalg import nullspace_mod_p
from .polyideals import IdealPresentation, MEMBER, membership_bounded
from .polynomials import Polynomial, PolyRing

SCAN_LIMIT = 1_000_000

_DEFAULT_NAMES = ("x", "y", "z")


def default_variables(n: int) -> tuple[str, ...]:
    if n <= len(_DEFAULT_NAMES):
        return _DEFAULT_NAMES[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class PointSet:
    """A canonically sorted finite subset of F_p^n."""

    p: int
    dim: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidDomain(f"point sets live over prime fields; {self.p} is not prime")
        if self.dim < 1:
            raise InvalidDomain("dimension must be >= 1")
        cleaned = set()
        for pt in self.points:
            if len(pt) != self.dim:
                raise InvalidDomain(f"point {pt} has wrong dimension")
            cleaned.add(tuple(c % self.p for c in pt))
        object.__setattr__(self, "points", tuple(sorted(cleaned)))

    @property
    def field(self) -> Domain:
        return Fp(self.p)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return tuple(pt) in set(self.points)

    def is_subset_of(self, other: "PointSet") -> bool:
        return set(self.points) <= set(other.points)

    def union(self, other: "PointSet") -> "PointSet":
        self._check_compatible(other)
        return PointSet(self.p, self.dim, self.points + other.points)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check_compatible(other)
        common = set(self.points) & set(other.points)
        return PointSet(self.p, self.dim, tuple(common))

    def _check_compatible(self, other: "PointSet"):
        if self.p != other.p or self.dim != other.dim:
            raise InvalidDomain("point sets live in different spaces")

    def __str__(self) -> str:
        inner = ", ".join("(" + ", ".join(map(str, pt)) + ")" for pt in self.points)
        return "{" + inner + "}"


def _require_prime_field_ring(ring: PolyRing) -> int:
    dom = ring.domain
    if dom.kind != "Fp":
        raise UnsupportedDomain(f"varieties are computed over F_p, not {dom}")
    return dom.modulus


def _check_scan_size(p: int, n: int):
    if p ** n > SCAN_LIMIT:
        raise TooLarge(f"{p}^{n} points exceed the desk-scale scan limit")


def variety(ideal: IdealPresentation) -> PointSet:
    """Exact common zero set of the generators, by exhaustive scan.

    The empty presentation (the zero ideal) cuts out all of F_p^n.
    """
    ring = ideal.ring
    p = _require_prime_field_ring(ring)
    n = ring.nvars
    _check_scan_size(p, n)
    dom = ring.domain
    hits = []
    for raw in itertools.product(range(p), repeat=n):
        point = tuple(dom.element(c) for c in raw)
        if all(g.evaluate(point).is_zero for g in ideal.generators):
            hits.append(raw)
    return PointSet(p, n, tuple(hits))


@dataclass(frozen=True)
class VanishingIdealResult:
    """Reduced-form generators of I(X) plus the field equations.

    The generators are a nullspace basis of the evaluation matrix on
    reduced monomials; together with the field equations they present the
    full vanishing ideal, and V of them recovers X exactly.
    """

    ring: PolyRing
    point_set: PointSet
    generators: tuple[Polynomial, ...]
    field_equations: tuple[Polynomial, ...]

    def all_generators(self) -> tuple[Polynomial, ...]:
        return self.generators + self.field_equations

    def ideal(self) -> IdealPresentation:
        return IdealPresentation(self.ring, self.all_generators())

    def spans_function(self, f: Polynomial) -> bool:
        """Does f, as a function on F_p^n, lie in the span of the result?

        Functions are compared by their full value tables, so this settles
        membership of f in I(X) modulo the field equations.
        """
        table = _function_table(f)
        span = _span_tables(self.generators, self.ring)
        return tuple(table) in span


def reduced_monomials(p: int, n: int) -> list[tuple[int, ...]]:
    """All exponent tuples with every entry below p, in lex order."""
    return sorted(itertools.product(range(p), repeat=n))


def field_equations(ring: PolyRing) -> tuple[Polynomial, ...]:
    """x_i^p - x_i for each variable; they vanish on every point of F_p^n."""
    p = _require_prime_field_ring(ring)
    eqs = []
    for name in ring.variables:
        x = Polynomial.variable(ring, name)
        eqs.append(x ** p - x)
    return tuple(eqs)


def vanishing_ideal(points: PointSet, variables: tuple[str, ...] | None = None) -> VanishingIdealResult:
    """I(X) for a finite point set, via an exact evaluation-matrix nullspace.

    The nullspace has dimension p^n - |X| because evaluation of reduced
    polynomials onto functions on X is onto (each point has an indicator
    polynomial).
    """
    p, n = points.p, points.dim
    _check_scan_size(p, n)
    names = tuple(variables) if variables else default_variables(n)
    ring = PolyRing(Fp(p), names)

    monos = reduced_monomials(p, n)
    matrix = []
    for pt in points:
        row = []
        for exps in monos:
            v = 1
            for c, e in zip(pt, exps):
                if e:
                    v = (v * pow(c, e, p)) % p
            row.append(v)
        matrix.append(row)

    basis = nullspace_mod_p(matrix, p, len(monos))
    gens = tuple(
        Polynomial(ring, {monos[j]: c for j, c in enumerate(vec) if c})
        for vec in basis
    )
    assert len(gens) == p ** n - len(points)

    result = VanishingIdealResult(ring, points, gens, field_equations(ring))
    recovered = variety(result.ideal())
    assert recovered.points == points.points, "V(I(X)) must recover X"
    return result


def viv_closure(ideal: IdealPresentation, check: bool = True) -> VanishingIdealResult:
    """I(V(S)) for a generator set S, with each member of S re-certified.

    Every generator of S vanishes on V(S), so each must be a bounded
    member of the computed vanishing ideal; the bound deg * (p-1) * n is
    generous enough to absorb reduction by the field equations.
    """
    ring = ideal.ring
    p = _require_prime_field_ring(ring)
    points = variety(ideal)
    result = vanishing_ideal(points, ring.variables)
    if check:
        target = result.ideal()
        for g in ideal.generators:
            bound = max(1, int(g.total_degree()) * (p - 1) * ring.nvars)
            cert = membership_bounded(g, target, bound)
            if cert.verdict != MEMBER:
                raise AssertionError(f"{g} failed to re-certify inside I(V(S))")
    return result


def is_irreducible(points: PointSet) -> bool:
    """Over a finite field only singletons resist a proper algebraic split.

    Every subset is algebraic here, so any X with two points splits into
    two proper pieces.  The empty set is declared reducible so that
    irreducibility matches primality of the vanishing ideal.
    """
    return len(points) == 1


def decompose(points: PointSet) -> list[PointSet]:
    """Irreducible components: the singletons, pairwise incomparable."""
    return [PointSet(points.p, points.dim, (pt,)) for pt in points]


@dataclass(frozen=True)
class PrimenessReport:
    prime: bool
    witnesses: tuple[Polynomial, Polynomial] | None = None


def indicator_polynomial(ring: PolyRing, point: tuple[int, ...]) -> Polynomial:
    """The reduced polynomial that is 1 at the point and 0 elsewhere."""
    p = _require_prime_field_ring(ring)
    f = Polynomial.one(ring)
    for name, c in zip(ring.variables, point):
        x = Polynomial.variable(ring, name)
        shifted = x - Polynomial.constant(ring, c)
        f = f * (Polynomial.one(ring) - shifted ** (p - 1))
    return f


def is_prime_vanishing_ideal(points: PointSet,
                             variables: tuple[str, ...] | None = None) -> PrimenessReport:
    """Is I(X) prime?  Exactly when X is a single point.

    For |X| >= 2 the report carries an explicit witness pair: the
    indicator of one point and its complement multiply to the zero
    function (so the product vanishes on X) while neither factor vanishes
    on X.  For X empty, I(X) is the whole ring, which is excluded from
    primality outright.
    """
    names = tuple(variables) if variables else default_variables(points.dim)
    ring = PolyRing(Fp(points.p), names)
    if len(points) == 1:
        return PrimenessReport(True)
    if len(points) == 0:
        return PrimenessReport(False)
    anchor = points.points[0]
    f = indicator_polynomial(ring, anchor)
    g = Polynomial.one(ring) - f
    product = f * g
    pts = [tuple(ring.domain.element(c) for c in pt) for pt in points]
    assert all(product.evaluate(pt).is_zero for pt in pts)
    assert any(not f.evaluate(pt).is_zero for pt in pts)
    assert any(not g.evaluate(pt).is_zero for pt in pts)
    return PrimenessReport(False, (f, g))


def _function_table(f: Polynomial) -> list[int]:
    p = _require_prime_field_ring(f.ring)
    dom = f.ring.domain
    values = []
    for raw in itertools.product(range(p), repeat=f.ring.nvars):
        point = tuple(dom.element(c) for c in raw)
        values.append(f.evaluate(point).value)
    return values


def _span_tables(gens: tuple[Polynomial, ...], ring: PolyRing) -> set[tuple[int, ...]]:
    """All F_p-linear combinations of the generators' value tables."""
    p = _require_prime_field_ring(ring)
    tables = [_function_table(g) for g in gens]
    width = p ** ring.nvars
    span = {(0,) * width}
    for t in tables:
        new = set()
        for coeff in range(1, p):
            scaled = tuple((coeff * v) % p for v in t)
            for existing in span:
                new.add(tuple((a + b) % p for a, b in zip(existing, scaled)))
        span |= new
    return span
