"""Prime-divisor decisions, enumeration reports and the theorem verifiers.

Divisibility is decided from residue scans over one preperiod plus one
period, never by factoring terms.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from .errors import BoundExceeded, CapExceeded, VerificationFailure
from .exact_algebra import IntPoly
from .modular import period_mod
from .primes import prime_factors, primes_up_to
from .recurrences import (
    IntPolynomialSequence,
    LinearRecurrence,
    NonlinearRecurrence,
    SequenceSource,
    is_degenerate,
    minimal_order,
)
from .transforms import SubsequenceSpec, scaling_candidate, strip_prime, verify_scaling

DEFAULT_CHECKPOINTS = (100, 1000, 5000)
ZERO_SCAN_TERMS = 64
ZERO_SCAN_BITS = 1 << 16


@dataclass(frozen=True)
class PrimeDivisorVerdict:
    p: int
    divides: bool
    first_index: int | None = None
    via_zero: bool = False  # only an exactly-zero term is divisible by p


@dataclass
class DivisorReport:
    source: str
    bound: int
    divisors: list[tuple[int, int]] = field(default_factory=list)
    non_divisors: list[int] = field(default_factory=list)
    errors: list[tuple[int, str]] = field(default_factory=list)
    checkpoints: list[tuple[int, int]] = field(default_factory=list)
    zero_terms: list[int] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    status: str = "OK"
    trace: list[dict] | None = None

    @property
    def divisor_set(self) -> set[int]:
        return {p for p, _ in self.divisors}

    @property
    def counts(self) -> list[int]:
        return [c for _, c in self.checkpoints]

    def strictly_growing(self) -> bool:
        c = self.counts
        return len(c) >= 2 and all(a < b for a, b in zip(c, c[1:]))

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "bound": self.bound,
            "divisors": [{"p": p, "first_n": n} for p, n in self.divisors],
            "non_divisors": list(self.non_divisors),
            "errors": [{"p": p, "reason": r} for p, r in self.errors],
            "checkpoints": [{"bound": b, "count": c} for b, c in self.checkpoints],
            "zero_terms": list(self.zero_terms),
            "flags": list(self.flags),
            "status": self.status,
            "trace": self.trace,
        }

    @classmethod
    def from_dict(cls, d: dict) -> DivisorReport:
        return cls(
            source=d["source"],
            bound=d["bound"],
            divisors=[(e["p"], e["first_n"]) for e in d["divisors"]],
            non_divisors=list(d["non_divisors"]),
            errors=[(e["p"], e["reason"]) for e in d["errors"]],
            checkpoints=[(e["bound"], e["count"]) for e in d["checkpoints"]],
            zero_terms=list(d.get("zero_terms", [])),
            flags=list(d.get("flags", [])),
            status=d.get("status", "OK"),
            trace=d.get("trace"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self, max_rows: int = 40) -> str:
        lines = [
            f"source : {self.source}",
            f"bound  : {self.bound}",
            f"status : {self.status}" + (f"  flags: {','.join(self.flags)}" if self.flags else ""),
        ]
        if self.zero_terms:
            lines.append(f"zeros  : a_n = 0 at n = {self.zero_terms}")
        lines.append(f"{'prime':>10}  {'first_n':>10}")
        for p, n in self.divisors[:max_rows]:
            lines.append(f"{p:>10}  {n:>10}")
        if len(self.divisors) > max_rows:
            lines.append(f"{'...':>10}  ({len(self.divisors) - max_rows} more)")
        lines.append(f"divisors: {len(self.divisors)}   non-divisors: {len(self.non_divisors)}")
        for b, c in self.checkpoints:
            lines.append(f"  primes <= {b:<8} divisors: {c}")
        for p, reason in self.errors:
            lines.append(f"  error p={p}: {reason}")
        return "\n".join(lines)


def exact_zero_terms(src: SequenceSource, n_terms: int = ZERO_SCAN_TERMS, max_bits: int = ZERO_SCAN_BITS) -> list[int]:
    """Indices n with a_n == 0 exactly, over a short exact prefix.

    Polynomial sources are searched up to the Cauchy root bound (capped at
    10^5); recurrences over ``n_terms`` terms, stopping early once terms
    exceed ``max_bits`` bits.
    """
    if isinstance(src, IntPolynomialSequence):
        f = src.poly
        if not f:
            return [0]
        if f.degree == 0:
            return []
        bound = 1 + max(abs(c) for c in f.coeffs[:-1]) // abs(f.lc)
        return [n for n in range(min(bound, 10**5) + 1) if f(n) == 0]
    zeros = []
    for n, a in enumerate(islice(src.iter_terms(), n_terms)):
        if a == 0:
            zeros.append(n)
        elif a.bit_length() > max_bits:
            break
    return zeros


def is_prime_divisor(src: SequenceSource, p: int, cap: int | None = None, zero_terms=None) -> PrimeDivisorVerdict:
    """Decide whether p divides some term.

    The reported index skips exactly-zero terms when a nonzero term is also
    divisible by p; ``via_zero`` marks primes reached only through a zero.
    """
    zeros = set(exact_zero_terms(src) if zero_terms is None else zero_terms)
    start, step, pure = src.residue_machine(p)
    if pure:
        sigma, limit = 0, None
    else:
        cert = period_mod(src, p, cap)
        sigma, limit = cert.preperiod, cert.preperiod + cert.period
    s, n, zero_hits = start, 0, []
    while True:
        if s[0] == 0:
            if n not in zeros:
                return PrimeDivisorVerdict(p, True, n)
            zero_hits.append(n)
        s = step(s)
        n += 1
        if pure and s == start:
            break
        if limit is not None and n >= limit:
            break
        if cap and n >= cap:
            raise BoundExceeded(f"scan mod {p} exceeded {cap} steps", p, n)
    pi = n - sigma
    # zero lists of recurrences only cover a prefix; polynomial ones are complete
    window = None if isinstance(src, IntPolynomialSequence) else ZERO_SCAN_TERMS
    for z in zero_hits:
        if z >= sigma:
            nxt = z + pi
            while nxt in zeros:
                nxt += pi
            if window is not None and nxt >= window and nxt > z + pi:
                break  # zeros recur along the whole scanned progression
            return PrimeDivisorVerdict(p, True, nxt)
    if zero_hits:
        return PrimeDivisorVerdict(p, True, zero_hits[0], via_zero=True)
    return PrimeDivisorVerdict(p, False)


def _scan_one(args):
    src, p, cap, zeros = args
    try:
        return is_prime_divisor(src, p, cap, zeros)
    except BoundExceeded as exc:
        return (p, f"BOUND_EXCEEDED: {exc}")


def _checkpoint_counts(divisors, checkpoints, bound):
    """Counts at each checkpoint <= bound; the bound closes the list if it overshoots."""
    if not checkpoints:
        return []
    marks = sorted({c for c in checkpoints if c <= bound})
    if max(checkpoints) > bound and (not marks or marks[-1] < bound):
        marks.append(bound)
    ps = sorted(p for p, _ in divisors)
    return [(c, sum(1 for p in ps if p <= c)) for c in marks]


def default_prime_bound(src: SequenceSource) -> int:
    if isinstance(src, LinearRecurrence) and src.order >= 3:
        return 500
    if isinstance(src, NonlinearRecurrence) and src.k >= 2:
        return 500
    return 5000


def enumerate_prime_divisors(
    src: SequenceSource,
    prime_bound: int,
    checkpoints=(),
    cap: int | None = None,
    jobs: int = 1,
    coprime_to: int = 1,
) -> DivisorReport:
    """Run is_prime_divisor for every prime <= prime_bound (optionally prime to m)."""
    if prime_bound < 2:
        raise ValueError("prime_bound must be at least 2")
    zeros = exact_zero_terms(src)
    primes = [p for p in primes_up_to(prime_bound) if coprime_to % p]
    tasks = [(src, p, cap, zeros) for p in primes]
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_scan_one(t) for t in tasks]
    report = DivisorReport(src.describe(), prime_bound, zero_terms=zeros)
    for res in results:
        if isinstance(res, tuple):
            report.errors.append(res)
        elif res.divides:
            report.divisors.append((res.p, res.first_index))
        else:
            report.non_divisors.append(res.p)
    report.checkpoints = _checkpoint_counts(report.divisors, checkpoints, prime_bound)
    if zeros:
        report.flags.append("HAS_ZERO_TERM")
    return report


def audit_divisors(src: SequenceSource, report: DivisorReport, max_index: int = 5000) -> list[tuple[int, int]]:
    """Recompute p | a_n by exact evaluation; returns the failing (p, n) pairs."""
    pairs = [(p, n) for p, n in report.divisors if n <= max_index]
    if not pairs:
        return []
    top = max(n for _, n in pairs)
    terms = list(islice(src.iter_terms(), top + 1))
    return [(p, n) for p, n in pairs if terms[n] % p]


def _require_growth(report: DivisorReport, label: str) -> DivisorReport:
    if report.strictly_growing():
        report.status = "VERIFIED"
        return report
    report.status = "GROWTH_NOT_OBSERVED"
    raise VerificationFailure(
        "GROWTH_NOT_OBSERVED",
        f"{label}: divisor counts {report.counts} do not grow strictly across checkpoints",
        witness=report.checkpoints,
        report=report,
    )


def schur_profile(f: IntPoly, prime_bound: int, checkpoints=DEFAULT_CHECKPOINTS, jobs: int = 1) -> DivisorReport:
    """Divisor counts of f(0), f(1), ... at each checkpoint."""
    f = f if isinstance(f, IntPoly) else IntPoly(f)
    src = IntPolynomialSequence(f)
    if f.degree <= 0:
        c = f[0]
        report = DivisorReport(src.describe(), prime_bound)
        if c == 0:
            report.divisors = [(p, 0) for p in primes_up_to(prime_bound)]
            report.zero_terms = [0]
            report.flags.append("HAS_ZERO_TERM")
        else:
            ps = set(prime_factors(c)) if abs(c) > 1 else set()
            report.divisors = [(p, 0) for p in primes_up_to(prime_bound) if p in ps]
            report.non_divisors = [p for p in primes_up_to(prime_bound) if p not in ps]
            report.flags.append("FINITE")
        report.checkpoints = _checkpoint_counts(report.divisors, checkpoints, prime_bound)
        report.status = "FINITE" if c else "OK"
        return report
    report = enumerate_prime_divisors(src, prime_bound, checkpoints, jobs=jobs)
    return _require_growth(report, "schur")


def _infinitude_trace(rec: LinearRecurrence, s_max: int = 6, cap: int | None = None) -> list[dict]:
    trace: list[dict] = []
    chosen = None
    for s in range(1, s_max + 1):
        cand = scaling_candidate(rec, s)
        trace.append({"stage": "scaling_candidate", **cand.to_dict()})
        if cand.coprime:
            chosen = cand
            break
    current = SubsequenceSpec(rec, 0, 1)
    if chosen is not None and chosen.t > 1:
        checked = verify_scaling(rec, chosen.s, chosen.t, 30)
        trace.append({"stage": "verify_scaling", **checked.to_dict()})
        if checked.base_case_ok and checked.quotient is not None:
            current = checked.quotient
        else:
            trace.append({"stage": "note", "text": "divisibility t^n | a_sn failed; continuing unscaled"})
    work = current.recurrence()
    rk = work.coeffs[-1]
    for p in prime_factors(rk) if abs(rk) > 1 else []:
        try:
            inner = strip_prime(work, p, scan_bound=cap)
        except (CapExceeded, BoundExceeded) as exc:
            trace.append({"stage": "strip_prime", "p": p, "error": f"{exc.code}: {exc}"})
            break
        current = current.then(inner)
        trace.append({"stage": "strip_prime", "p": p, **current.to_dict()})
        work = current.recurrence()
    final = {"stage": "result", **current.to_dict()}
    m = abs(rk)
    if m > 1:
        s0, step, _ = work.residue_machine(m)
        cert = period_mod(work, m, cap)
        coprime, s = True, s0
        for _ in range(cert.preperiod + cert.period):
            if math.gcd(s[0], m) != 1:
                coprime = False
                break
            s = step(s)
        final["terms_prime_to_rk"] = coprime
    trace.append(final)
    return trace


def verify_infinitude(
    rec: LinearRecurrence,
    prime_bound: int,
    checkpoints=DEFAULT_CHECKPOINTS,
    trace: bool = False,
    cap: int | None = None,
    jobs: int = 1,
) -> DivisorReport:
    """Desk-scale check that a non-degenerate recurrence of order > 1 keeps gaining prime divisors."""
    minimal = minimal_order(rec)
    if minimal.order <= 1:
        report = enumerate_prime_divisors(rec, prime_bound, checkpoints, cap, jobs)
        report.status = "PRECONDITION_ORDER"
        raise VerificationFailure(
            "PRECONDITION_ORDER",
            f"minimal order is {minimal.order}; the theorem needs order > 1",
            witness=minimal.coeffs,
            report=report,
        )
    verdict = is_degenerate(minimal)
    if verdict.degenerate:
        raise VerificationFailure(
            "PRECONDITION_DEGENERATE",
            f"two characteristic roots have a ratio that is a root of unity (Phi_{verdict.witness})",
            witness=verdict.witness,
        )
    report = enumerate_prime_divisors(rec, prime_bound, checkpoints, cap, jobs)
    if trace:
        report.trace = _infinitude_trace(minimal, cap=cap)
    return _require_growth(report, "linear")


def growth_confirmed(rec: SequenceSource, window: int, start: int) -> bool:
    vals = [abs(a) for a in islice(rec.iter_terms(), start, start + window + 1)]
    return all(a < b for a, b in zip(vals, vals[1:]))


def verify_generalized(
    rec: NonlinearRecurrence,
    prime_bound: int,
    checkpoints=DEFAULT_CHECKPOINTS,
    growth_window: int = 8,
    cap: int | None = None,
    jobs: int = 1,
) -> DivisorReport:
    """Divisor growth for a_{n+k+1} = +-a_n + f(...), after a monotone-window divergence proxy.

    |a_n| must increase strictly over ``growth_window`` steps starting at
    index k+1; this is reported, not proven.
    """
    if not growth_confirmed(rec, growth_window, rec.k + 1):
        raise VerificationFailure(
            "GROWTH_UNCONFIRMED",
            f"|a_n| is not strictly increasing on n in [{rec.k + 1}, {rec.k + 1 + growth_window}]",
            witness=growth_window,
        )
    report = enumerate_prime_divisors(rec, prime_bound, checkpoints, cap, jobs)
    report.flags.append("DIVERGENCE_BY_WINDOW")
    return _require_growth(report, "generalized")


def coprime_hypothesis_witness(src: SequenceSource, m: int, cap: int | None = None) -> int | None:
    """First n with gcd(a_n, m) > 1 over one preperiod plus period, else None."""
    if m == 1:
        return None
    cert = period_mod(src, m, cap)
    s, step, _ = src.residue_machine(m)
    for n in range(cert.preperiod + cert.period):
        if math.gcd(s[0], m) != 1:
            return n
        s = step(s)
    return None


def coprime_prime_divisors(
    src: SequenceSource,
    m: int,
    prime_bound: int,
    checkpoints=(),
    cap: int | None = None,
    jobs: int = 1,
) -> DivisorReport:
    """Prime divisors coprime to m, once every term is confirmed prime to m."""
    if m < 1:
        raise ValueError("m must be positive")
    witness = coprime_hypothesis_witness(src, m, cap)
    if witness is not None:
        raise VerificationFailure(
            "HYPOTHESIS_FAILED", f"a_{witness} shares a factor with {m}", witness=witness
        )
    return enumerate_prime_divisors(src, prime_bound, checkpoints, cap, jobs, coprime_to=m)

