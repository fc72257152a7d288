"""Exact coefficient domains: the integers, the rationals, Z/n, and prime fields.

A ``Domain`` carries the arithmetic for raw values (Python ints, or
``fractions.Fraction`` for the rationals) and ``RingElement`` wraps a raw
value together with its domain for the public API.  Z/n residues are kept
canonical in ``[0, n)``; rationals are always in lowest terms with a
positive denominator (``Fraction`` guarantees both).  Z/1 is a legal ring
whose single element satisfies 1 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import (
    DivisionByZero,
    DomainMismatch,
    InvalidDomain,
    NoInverse,
)

Value = Union[int, Fraction]

KIND_Z = "Z"
KIND_Q = "Q"
KIND_ZN = "Zn"
KIND_FP = "Fp"


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Domain:
    """Descriptor plus arithmetic provider for one coefficient domain."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind in (KIND_Z, KIND_Q):
            if self.modulus is not None:
                raise InvalidDomain(f"{self.kind} takes no modulus")
        elif self.kind == KIND_ZN:
            if self.modulus is None or self.modulus < 1:
                raise InvalidDomain("Z/n requires n >= 1")
        elif self.kind == KIND_FP:
            if self.modulus is None or not is_prime(self.modulus):
                raise InvalidDomain(f"F_p requires a prime modulus, got {self.modulus}")
        else:
            raise InvalidDomain(f"unknown domain kind {self.kind!r}")
        # cached for the arithmetic hot path (None for Z and Q)
        object.__setattr__(self, "_mod", self.modulus if self.kind in (KIND_ZN, KIND_FP) else None)

    # -- structure ---------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind in (KIND_Q, KIND_FP)

    @property
    def is_finite(self) -> bool:
        return self.kind in (KIND_ZN, KIND_FP)

    @property
    def is_modular(self) -> bool:
        return self.kind in (KIND_ZN, KIND_FP)

    @property
    def is_trivial(self) -> bool:
        """True for Z/1, the one-element ring where 1 = 0."""
        return self.is_modular and self.modulus == 1

    # -- raw value arithmetic ----------------------------------------------

    def canon(self, v) -> Value:
        """Reduce an int, Fraction, or string into canonical form."""
        if self.kind == KIND_Q:
            return Fraction(v)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise DomainMismatch(f"{v} is not an element of {self}")
            v = v.numerator
        v = int(v)
        if self.is_modular:
            return v % self.modulus
        return v

    @property
    def zero(self) -> Value:
        return Fraction(0) if self.kind == KIND_Q else 0

    @property
    def one(self) -> Value:
        return self.canon(1)

    def add(self, a: Value, b: Value) -> Value:
        m = self._mod
        return (a + b) % m if m else a + b

    def sub(self, a: Value, b: Value) -> Value:
        m = self._mod
        return (a - b) % m if m else a - b

    def mul(self, a: Value, b: Value) -> Value:
        m = self._mod
        return (a * b) % m if m else a * b

    def neg(self, a: Value) -> Value:
        m = self._mod
        return (-a) % m if m else -a

    def inv(self, a: Value) -> Value:
        """Multiplicative inverse of a canonical value.

        Fields invert every nonzero element (zero raises DivisionByZero).
        In Z and Z/n only units are invertible; anything else raises
        NoInverse.  In Z/1 the sole element 0 is its own inverse.
        """
        if self.kind == KIND_Q:
            if a == 0:
                raise DivisionByZero("inverse of 0")
            return 1 / Fraction(a)
        if self.kind == KIND_FP:
            if a % self.modulus == 0:
                raise DivisionByZero("inverse of 0")
            return pow(a, -1, self.modulus)
        if self.kind == KIND_ZN:
            if self.modulus == 1:
                return 0
            if math.gcd(a, self.modulus) != 1:
                raise NoInverse(f"{a} is not a unit modulo {self.modulus}")
            return pow(a, -1, self.modulus)
        if a in (1, -1):
            return a
        raise NoInverse(f"{a} is not a unit in Z")

    def pow(self, a: Value, e: int) -> Value:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.is_modular:
            return pow(a, e, self.modulus)
        return a ** e

    # -- enumeration --------------------------------------------------------

    def raw_elements(self) -> Iterator[Value]:
        if not self.is_finite:
            raise InvalidDomain(f"{self} is infinite")
        return iter(range(self.modulus))

    def elements(self) -> Iterator["RingElement"]:
        return (RingElement(self, v) for v in self.raw_elements())

    def element(self, v) -> "RingElement":
        return RingElement(self, self.canon(v))

    def __str__(self) -> str:
        return {
            KIND_Z: "Z",
            KIND_Q: "Q",
            KIND_ZN: f"Z/{self.modulus}",
            KIND_FP: f"F_{self.modulus}",
        }[self.kind]


ZZ = Domain(KIND_Z)
QQ = Domain(KIND_Q)


def Zn(n: int) -> Domain:
    return Domain(KIND_ZN, n)


def Fp(p: int) -> Domain:
    return Domain(KIND_FP, p)


@dataclass(frozen=True)
class RingElement:
    """A canonical value tagged with its domain.

    Equality is structural; arithmetic between mismatched domains raises
    DomainMismatch.  Plain ints (and Fractions over Q) coerce on the fly.
    """

    domain: Domain
    value: Value

    def __post_init__(self):
        object.__setattr__(self, "value", self.domain.canon(self.value))

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.domain != self.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return other
        if isinstance(other, (int, Fraction)):
            return RingElement(self.domain, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.domain, self.domain.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.domain, self.domain.sub(self.value, other.value))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.domain, self.domain.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.domain, self.domain.neg(self.value))

    def __pow__(self, e: int):
        return RingElement(self.domain, self.domain.pow(self.value, e))

    def inv(self) -> "RingElement":
        return RingElement(self.domain, self.domain.inv(self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == self.domain.zero

    @property
    def is_one(self) -> bool:
        return self.value == self.domain.one

    def __str__(self) -> str:
        return str(self.value)


def units_of(domain: Domain) -> set[RingElement]:
    """All units of a finite modular ring, by exhaustive inverse search.

    In Z/1 the single element 0 (= 1) is a unit.  For n >= 2 the units are
    exactly the residues coprime to n, which this search rediscovers.
    """
    if not domain.is_modular:
        raise InvalidDomain("units_of expects Z/n or F_p")
    n = domain.modulus
    found = set()
    for u in range(n):
        if any(u * v % n == 1 % n for v in range(n)):
            found.add(RingElement(domain, u))
    return found


@dataclass(frozen=True)
class ModHomomorphism:
    """The reduction map from the integers onto Z/n.

    ``modulus == 0`` encodes the identity map of the integers onto
    themselves, which is what quotienting by the zero ideal produces.
    """

    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise InvalidDomain("modulus must be >= 0")

    @property
    def target(self) -> Domain:
        return ZZ if self.modulus == 0 else Zn(self.modulus)

    def apply(self, r: int) -> RingElement:
        return self.target.element(r)

    def __call__(self, r: int) -> RingElement:
        return self.apply(r)

    def kernel_contains(self, r: int) -> bool:
        if self.modulus == 0:
            return r == 0
        return r % self.modulus == 0


@dataclass(frozen=True)
class HomReport:
    """Outcome of sampling a map for the homomorphism laws."""

    additive: bool
    multiplicative: bool
    preserves_one: bool
    pairs_checked: int

    @property
    def passed(self) -> bool:
        return self.additive and self.multiplicative and self.preserves_one


def hom_check(phi: ModHomomorphism, samples: list[tuple[int, int]]) -> HomReport:
    """Verify phi(a+b) = phi(a)+phi(b), phi(ab) = phi(a)phi(b), phi(1) = 1."""
    additive = all(phi(a + b) == phi(a) + phi(b) for a, b in samples)
    multiplicative = all(phi(a * b) == phi(a) * phi(b) for a, b in samples)
    preserves_one = phi(1) == phi.target.element(1)
    return HomReport(additive, multiplicative, preserves_one, len(samples))
