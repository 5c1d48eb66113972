"""Residue streams: eventual periodicity mod m, null divisors, prime indices."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import BoundExceeded, CapExceeded, DomainError
from .recurrences import LinearRecurrence, SequenceSource

DEFAULT_STATE_CAP = 10**8
DEFAULT_J_CAP = 64


def default_state_cap() -> int:
    env = os.environ.get("RECURSEQ_STATE_CAP")
    return int(env) if env else DEFAULT_STATE_CAP


@dataclass(frozen=True)
class PeriodCertificate:
    """State vectors mod ``modulus`` satisfy s_{preperiod} = s_{preperiod + period}."""

    modulus: int
    preperiod: int
    period: int
    cycle_residue_states: int


def _pure_period(start, step, m, cap):
    s, n = step(start), 1
    while s != start:
        if n >= cap:
            raise BoundExceeded(f"no return to the initial state mod {m} within {cap} steps", m, n)
        s = step(s)
        n += 1
    return n


def _brent(start, step, m, cap):
    power = lam = 1
    tortoise, hare = start, step(start)
    steps = 1
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        lam += 1
        steps += 1
        if steps > cap:
            raise BoundExceeded(f"period mod {m} not found within {cap} steps", m, steps)
    tortoise = hare = start
    for _ in range(lam):
        hare = step(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = step(tortoise), step(hare)
        mu += 1
    return mu, lam


def period_mod(src: SequenceSource, m: int, cap: int | None = None) -> PeriodCertificate:
    """Minimal (preperiod, period) of the state-vector orbit mod m."""
    if m < 1:
        raise DomainError("modulus must be positive")
    if m == 1:
        return PeriodCertificate(1, 0, 1, 1)
    cap = cap or default_state_cap()
    start, step, pure = src.residue_machine(m)
    if pure:
        pi = _pure_period(start, step, m, cap)
        return PeriodCertificate(m, 0, pi, pi)
    mu, lam = _brent(start, step, m, cap)
    return PeriodCertificate(m, mu, lam, mu + lam)


def residues(src: SequenceSource, m: int, count: int, start: int = 0) -> list[int]:
    """a_n mod m for start <= n < start + count."""
    s, step, _ = src.residue_machine(m)
    for _ in range(start):
        s = step(s)
    out = []
    for _ in range(count):
        out.append(s[0])
        s = step(s)
    return out


def first_zero_mod(src: SequenceSource, m: int, cap: int | None = None) -> int | None:
    """Least n with m | a_n, or None when no term is divisible by m."""
    cap = cap or default_state_cap()
    start, step, pure = src.residue_machine(m)
    if pure:
        s, n = start, 0
        while True:
            if s[0] == 0:
                return n
            s = step(s)
            n += 1
            if s == start:
                return None
            if n >= cap:
                raise BoundExceeded(f"scan mod {m} exceeded {cap} steps", m, n)
    cert = period_mod(src, m, cap)
    s = start
    for n in range(cert.preperiod + cert.period):
        if s[0] == 0:
            return n
        s = step(s)
    return None


def is_null_divisor(src: SequenceSource, m: int, cap: int | None = None) -> bool:
    """True iff m divides every term of the periodic tail."""
    if m < 1:
        raise DomainError("modulus must be positive")
    if m == 1:
        return True
    cap = cap or default_state_cap()
    start, step, pure = src.residue_machine(m)
    if pure:
        s, n = start, 0
        while True:
            if s[0] != 0:
                return False
            s = step(s)
            n += 1
            if s == start:
                return True
            if n >= cap:
                raise BoundExceeded(f"scan mod {m} exceeded {cap} steps", m, n)
    cert = period_mod(src, m, cap)
    s = start
    for _ in range(cert.preperiod):
        s = step(s)
    for _ in range(cert.period):
        if s[0] != 0:
            return False
        s = step(s)
    return True


def coefficient_gcd_note(src: SequenceSource) -> str | None:
    if isinstance(src, LinearRecurrence):
        g = math.gcd(*src.coeffs)
        return f"GCD(r)={g}" + ("" if g == 1 else "≠1; index finiteness needs GCD(r_1..r_k)=1")
    return None


def prime_index(src: SequenceSource, p: int, j_cap: int = DEFAULT_J_CAP, cap: int | None = None) -> int:
    """Largest j <= j_cap with p^j a null divisor.

    Raises CapExceeded when p^j_cap is still a null divisor; the exception
    carries the coefficient-GCD hypothesis note.
    """
    for j in range(1, j_cap + 1):
        if not is_null_divisor(src, p**j, cap):
            return j - 1
    raise CapExceeded(
        f"p^{j_cap} is still a null divisor for p={p}", p=p, j_cap=j_cap, note=coefficient_gcd_note(src)
    )


@dataclass(frozen=True)
class ClassMaxima:
    modulus: int
    n_max: int
    maxima: tuple[int, ...]  # maxima[c] = max |a_n| over n <= n_max, n = c mod modulus
    threshold: int

    @property
    def exceeds(self) -> tuple[bool, ...]:
        return tuple(v > self.threshold for v in self.maxima)

    @property
    def all_exceed(self) -> bool:
        return all(self.exceeds)


def unbounded_on_classes(rec: SequenceSource, b: int, n_max: int, threshold: int | None = None) -> ClassMaxima:
    """Per-class maxima of |a_n|; threshold defaults to the class size n_max // b."""
    if b < 1:
        raise DomainError("modulus must be positive")
    if n_max < b - 1:
        raise DomainError("n_max must reach every class")
    maxima = [0] * b
    for n, a in zip(range(n_max + 1), rec.iter_terms()):
        c = n % b
        if abs(a) > maxima[c]:
            maxima[c] = abs(a)
    return ClassMaxima(b, n_max, tuple(maxima), n_max // b if threshold is None else threshold)
