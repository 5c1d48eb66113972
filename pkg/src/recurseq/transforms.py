"""phi_b, arithmetic-progression subsequences, coefficient scaling, prime stripping."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import reduce
from itertools import islice
from typing import Iterator

from .errors import DomainError
from .exact_algebra import IntPoly, p_adic_valuation, resultant_y, reverse_poly
from .modular import DEFAULT_J_CAP, first_zero_mod, period_mod, prime_index
from .primes import factorize
from .recurrences import LinearRecurrence, evaluate


def phi_b(g: IntPoly, b: int) -> IntPoly:
    """prod(1 - psi_i^b x) from g = prod(1 - psi_i x), via Res_y(G(y), x - y^b)."""
    g = g if isinstance(g, IntPoly) else IntPoly(g)
    if g[0] != 1:
        raise DomainError("phi_b needs g(0) = 1")
    if b < 1:
        raise DomainError("b must be a positive integer")
    k = g.degree
    if k == 0 or b == 1:
        return g
    monic = reverse_poly(g, k)
    gy = [IntPoly((c,)) for c in monic.coeffs]
    shifted = [IntPoly.x()] + [IntPoly()] * (b - 1) + [IntPoly((-1,))]
    h = resultant_y(gy, shifted)
    out = reverse_poly(h, k)
    assert out[0] == 1 and h.degree == k
    return out


def subsequence_recurrence(rec: LinearRecurrence, c: int, b: int) -> LinearRecurrence:
    """Recurrence with characteristic polynomial phi_b(g) for a_c, a_{c+b}, ..."""
    if b < 1 or not 0 <= c < b:
        raise DomainError(f"need 0 <= c < b, got c={c}, b={b}")
    h = phi_b(rec.char_poly, b)
    k = rec.order
    terms = evaluate(rec, c + (k - 1) * b)
    return LinearRecurrence.from_char_poly(h, terms[c::b][:k])


@dataclass(frozen=True)
class SubsequenceSpec:
    """Terms a_{offset + step*n} / (divisor_extracted * geometric_divisor**n)."""

    base: LinearRecurrence
    offset: int
    step: int
    divisor_extracted: int = 1
    geometric_divisor: int = 1

    def __post_init__(self):
        if self.step < 1 or not 0 <= self.offset < self.step:
            raise DomainError(f"need 0 <= offset < step, got {self.offset}, {self.step}")
        if self.divisor_extracted < 1 or self.geometric_divisor < 1:
            raise DomainError("divisors must be positive")

    def iter_terms(self) -> Iterator[int]:
        e, t = self.divisor_extracted, self.geometric_divisor
        scale = e
        src = self.base.iter_terms()
        for _ in range(self.offset):
            next(src)
        for a in src:
            q, r = divmod(a, scale)
            if r:
                raise ArithmeticError(f"{scale} does not divide subsequence term {a}")
            yield q
            scale *= t
            for _ in range(self.step - 1):
                next(src)

    def recurrence(self) -> LinearRecurrence:
        h = phi_b(self.base.char_poly, self.step)
        t = self.geometric_divisor
        coeffs = []
        for i in range(1, h.degree + 1):
            q, r = divmod(-h[i], t**i)
            if r:
                raise DomainError(f"geometric divisor {t}^{i} does not divide coefficient {-h[i]}")
            coeffs.append(q)
        return LinearRecurrence(tuple(coeffs), tuple(islice(self.iter_terms(), len(coeffs))))

    def then(self, inner: SubsequenceSpec) -> SubsequenceSpec:
        """Compose with a subsequence taken of this spec's own terms."""
        c, b, t = self.offset, self.step, self.geometric_divisor
        u, j = inner.offset, inner.step
        if inner.geometric_divisor != 1:
            raise DomainError("inner spec must not carry a geometric divisor")
        return SubsequenceSpec(
            self.base,
            c + b * u,
            b * j,
            self.divisor_extracted * inner.divisor_extracted * t**u,
            t**j,
        )

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_spec(),
            "offset": self.offset,
            "step": self.step,
            "divisor_extracted": self.divisor_extracted,
            "geometric_divisor": self.geometric_divisor,
        }


@dataclass(frozen=True)
class ScalingReport:
    s: int
    t: int
    coeffs: tuple[int, ...]  # m_1..m_k of phi_s(g) = 1 - sum m_i x^i
    scaled_coeffs: tuple[int, ...]  # m_i / t^i; empty if t^i does not divide m_i
    coprime: bool
    zero_coeffs: bool = False
    base_case_ok: bool | None = None
    failure_witness: tuple[int, int, int] | None = None  # (n, a_{sn}, t^n)
    quotient: SubsequenceSpec | None = None

    def to_dict(self) -> dict:
        d = {
            "s": self.s,
            "t": self.t,
            "coeffs": list(self.coeffs),
            "scaled_coeffs": list(self.scaled_coeffs),
            "coprime": self.coprime,
            "zero_coeffs": self.zero_coeffs,
            "base_case_ok": self.base_case_ok,
            "failure_witness": None,
            "quotient": self.quotient.to_dict() if self.quotient else None,
        }
        if self.failure_witness:
            n, term, power = self.failure_witness
            d["failure_witness"] = {"n": n, "term": term, "required_power": power}
        return d


def largest_power_root(coeffs) -> int:
    """Largest t >= 1 with t^i | coeffs[i-1] for every nonzero coefficient."""
    nonzero = [(i, m) for i, m in enumerate(coeffs, start=1) if m]
    common = reduce(math.gcd, (m for _, m in nonzero), 0)
    if common <= 1:
        return 1
    t = 1
    for p in factorize(common):
        t *= p ** min(p_adic_valuation(p, m) // i for i, m in nonzero)
    return t


def _scaled(coeffs, t):
    out = []
    for i, m in enumerate(coeffs, start=1):
        q, r = divmod(m, t**i)
        if r:
            return ()
        out.append(q)
    return tuple(out)


def scaling_candidate(rec: LinearRecurrence, s: int) -> ScalingReport:
    h = phi_b(rec.char_poly, s)
    coeffs = tuple(-h[i] for i in range(1, h.degree + 1))
    t = largest_power_root(coeffs)
    scaled = _scaled(coeffs, t)
    return ScalingReport(
        s=s,
        t=t,
        coeffs=coeffs,
        scaled_coeffs=scaled,
        coprime=math.gcd(*scaled) == 1,
        zero_coeffs=0 in coeffs,
    )


def verify_scaling(rec: LinearRecurrence, s: int, t: int, n_max: int) -> ScalingReport:
    """Check t^n | a_{sn} for n <= n_max; report the smallest failure."""
    if t < 1 or s < 1:
        raise DomainError("s and t must be positive")
    h = phi_b(rec.char_poly, s)
    coeffs = tuple(-h[i] for i in range(1, h.degree + 1))
    scaled = _scaled(coeffs, t)
    report = ScalingReport(
        s=s, t=t, coeffs=coeffs, scaled_coeffs=scaled,
        coprime=bool(scaled) and math.gcd(*scaled) == 1, zero_coeffs=0 in coeffs,
    )
    terms = evaluate(rec, s * n_max)[::s]
    for n, a in enumerate(terms):
        if a % t**n:
            return replace(report, base_case_ok=False, failure_witness=(n, a, t**n))
    quotient = SubsequenceSpec(rec, 0, s, 1, t) if scaled else None
    return replace(report, base_case_ok=True, quotient=quotient)


def strip_prime(
    rec: LinearRecurrence,
    p: int,
    l_margin: int = 1,
    scan_bound: int | None = None,
    j_cap: int = DEFAULT_J_CAP,
) -> SubsequenceSpec:
    """Subsequence a_{jn+t} / p^r whose terms are all prime to p.

    j is a multiple of the period mod p^l (l = index of p + l_margin) that
    clears the preperiod, and t is the smallest tail offset whose residue
    mod p^l is nonzero.
    """
    if l_margin < 1:
        raise DomainError("l_margin must be positive")
    if first_zero_mod(rec, p, scan_bound) is None:
        return SubsequenceSpec(rec, 0, 1, 1)
    level = prime_index(rec, p, j_cap, scan_bound) + l_margin
    mod = p**level
    cert = period_mod(rec, mod, scan_bound)
    sigma, pi = cert.preperiod, cert.period
    terms = evaluate(rec, sigma + pi - 1)
    t = next(u for u in range(sigma, sigma + pi) if terms[u] % mod)
    j = pi * -(-(sigma + pi) // pi)
    r = p_adic_valuation(p, terms[t])
    return SubsequenceSpec(rec, t, j, p**r)
