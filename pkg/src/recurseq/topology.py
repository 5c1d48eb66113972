"""Congruence classes Con(a, b), the open basis of Furstenberg's topology on Z."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .modular import PeriodCertificate, period_mod, residues
from .primes import is_prime
from .recurrences import SequenceSource


@dataclass(frozen=True)
class CongruenceClass:
    """{x in Z : x = a (mod b)}, stored with 0 <= a < b."""

    a: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise DomainError("modulus must be positive")
        object.__setattr__(self, "a", self.a % self.b)

    def __contains__(self, x: int) -> bool:
        return (x - self.a) % self.b == 0

    def __str__(self):
        return f"Con({self.a},{self.b})"


def member(x: int, c: CongruenceClass) -> bool:
    return x in c


def intersect(c1: CongruenceClass, c2: CongruenceClass) -> CongruenceClass | None:
    """CRT intersection; None when the classes are disjoint."""
    g = math.gcd(c1.b, c2.b)
    if (c2.a - c1.a) % g:
        return None
    lcm = c1.b // g * c2.b
    # x = c1.a + c1.b * k with c1.b * k = c2.a - c1.a (mod c2.b)
    k = (c2.a - c1.a) // g * pow(c1.b // g, -1, c2.b // g) if c2.b // g > 1 else 0
    return CongruenceClass(c1.a + c1.b * k, lcm)


def fm_basis_valid(c: CongruenceClass, m: int) -> bool:
    """Whether c is a basic open set of the variant topology with moduli prime to m."""
    if m == 0:
        raise DomainError("m must be nonzero")
    return math.gcd(c.b, abs(m)) == 1


def continuity_certificate(src: SequenceSource, b: int, cap: int | None = None) -> PeriodCertificate:
    """Period certificate of n -> a_n mod b."""
    return period_mod(src, b, cap)


def preimage_classes(src: SequenceSource, target: CongruenceClass, cap: int | None = None):
    """Indices n >= 0 with a_n in target.

    Returns (finite set of preperiod indices, list of classes mod the period
    covering every later index).
    """
    cert = period_mod(src, target.b, cap)
    vals = residues(src, target.b, cert.preperiod + cert.period)
    head = [n for n in range(cert.preperiod) if vals[n] == target.a]
    tail = [
        CongruenceClass(n, cert.period)
        for n in range(cert.preperiod, cert.preperiod + cert.period)
        if vals[n] == target.a
    ]
    return head, tail


def euclid_witness(primes) -> int:
    """An integer outside {1, -1} lying in no Con(0, p) for the given primes."""
    primes = set(primes)
    for p in primes:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    if not primes:
        return 2
    return math.prod(primes) + 1
