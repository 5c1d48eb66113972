"""Sequence sources: linear recurrences, a_{n+k+1} = ±a_n + f(...) recurrences, and f(n).

Every source yields exact terms and exposes a *residue machine*: an
initial state mod m, a step function, and whether the orbit is known to
be purely periodic. The modular module drives these machines.

Characteristic polynomials use the constant-term-1 convention
g(x) = 1 - r_1 x - ... - r_k x^k throughout.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Iterator, Union

from .errors import DomainError
from .exact_algebra import (
    IntPoly,
    cyclotomic,
    poly_gcd,
    resultant_y,
    reverse_poly,
    squarefree_part,
)
from .primes import euler_phi

Machine = tuple  # (initial state, step function, purely periodic?)


@dataclass(frozen=True)
class LinearRecurrence:
    """a_{n+k} = r_1 a_{n+k-1} + ... + r_k a_n with r_k != 0."""

    coeffs: tuple[int, ...]
    initial: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "initial", tuple(int(a) for a in self.initial))
        if not self.coeffs:
            raise DomainError("a linear recurrence needs order k >= 1")
        if self.coeffs[-1] == 0:
            raise DomainError("last coefficient r_k must be nonzero")
        if len(self.initial) != len(self.coeffs):
            raise DomainError(
                f"order {len(self.coeffs)} needs {len(self.coeffs)} initial terms, "
                f"got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def char_poly(self) -> IntPoly:
        return IntPoly((1,) + tuple(-r for r in self.coeffs))

    @classmethod
    def from_char_poly(cls, g: IntPoly, initial) -> LinearRecurrence:
        if g[0] != 1:
            raise DomainError("characteristic polynomial must have g(0) = 1")
        return cls(tuple(-c for c in g.coeffs[1:]), tuple(initial))

    def iter_terms(self) -> Iterator[int]:
        state = list(self.initial)
        rev = self.coeffs[::-1]
        while True:
            yield state[0]
            nxt = sum(r * a for r, a in zip(rev, state))
            state.pop(0)
            state.append(nxt)

    def residue_machine(self, m: int) -> Machine:
        rev = tuple(r % m for r in self.coeffs[::-1])
        start = tuple(a % m for a in self.initial)
        if len(rev) == 1:
            (r,) = rev

            def step(s):
                return ((r * s[0]) % m,)

        elif len(rev) == 2:
            r2, r1 = rev

            def step(s):
                return (s[1], (r1 * s[1] + r2 * s[0]) % m)

        else:

            def step(s):
                return s[1:] + (sum(r * a for r, a in zip(rev, s)) % m,)

        return start, step, math.gcd(self.coeffs[-1], m) == 1

    def describe(self) -> str:
        return f"linear coeffs={list(self.coeffs)} initial={list(self.initial)}"

    def to_spec(self) -> dict:
        return {"type": "linear", "coeffs": list(self.coeffs), "initial": list(self.initial)}


@dataclass(frozen=True)
class NonlinearRecurrence:
    """a_{n+k+1} = sign * a_n + f(a_{n+1}, ..., a_{n+k}).

    ``poly`` is a sparse term list of (exponent vector, coefficient).
    """

    k: int
    sign: int
    poly: tuple[tuple[tuple[int, ...], int], ...]
    initial: tuple[int, ...]

    def __post_init__(self):
        poly = tuple((tuple(int(e) for e in exps), int(c)) for exps, c in self.poly)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "initial", tuple(int(a) for a in self.initial))
        if self.k < 1:
            raise DomainError("k must be at least 1")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        if len(self.initial) != self.k + 1:
            raise DomainError(f"k = {self.k} needs {self.k + 1} initial terms")
        for exps, _ in poly:
            if len(exps) != self.k or any(e < 0 for e in exps):
                raise DomainError(f"monomial {list(exps)} does not have {self.k} nonnegative exponents")

    def _f(self, args, m=None):
        total = 0
        for exps, c in self.poly:
            term = c
            for a, e in zip(args, exps):
                if e:
                    term *= pow(a, e, m) if m else a**e
            total += term
        return total % m if m else total

    def iter_terms(self) -> Iterator[int]:
        state = list(self.initial)
        while True:
            yield state[0]
            nxt = self.sign * state[0] + self._f(state[1:])
            state.pop(0)
            state.append(nxt)

    def residue_machine(self, m: int) -> Machine:
        sign, f = self.sign, self._f

        def step(s):
            return s[1:] + ((sign * s[0] + f(s[1:], m)) % m,)

        # a_n = sign * (a_{n+k+1} - f(...)), so the step is a bijection on states
        return tuple(a % m for a in self.initial), step, True

    def describe(self) -> str:
        terms = " + ".join(f"{c}*x^{list(e)}" for e, c in self.poly) or "0"
        s = "+" if self.sign == 1 else "-"
        return f"nonlinear k={self.k} sign={s} f={terms} initial={list(self.initial)}"

    def to_spec(self) -> dict:
        return {
            "type": "nonlinear",
            "k": self.k,
            "sign": self.sign,
            "poly": [{"exps": list(e), "c": c} for e, c in self.poly],
            "initial": list(self.initial),
        }


@dataclass(frozen=True)
class IntPolynomialSequence:
    """a_n = f(n) for an integer polynomial f."""

    poly: IntPoly

    def __post_init__(self):
        if not isinstance(self.poly, IntPoly):
            object.__setattr__(self, "poly", IntPoly(self.poly))

    def iter_terms(self) -> Iterator[int]:
        n = 0
        while True:
            yield self.poly(n)
            n += 1

    def residue_machine(self, m: int) -> Machine:
        # the difference-operator recurrence has r_k = +-1, hence pure periodicity
        return from_polynomial(self.poly).residue_machine(m)

    def describe(self) -> str:
        return f"polynomial f(n) = {self.poly}"

    def to_spec(self) -> dict:
        return {"type": "polynomial", "poly": list(self.poly.coeffs)}


SequenceSource = Union[LinearRecurrence, NonlinearRecurrence, IntPolynomialSequence]


def evaluate(src: SequenceSource, n_max: int) -> list[int]:
    """Exact terms a_0 .. a_{n_max}."""
    if n_max < 0:
        raise DomainError("n_max must be nonnegative")
    return list(islice(src.iter_terms(), n_max + 1))


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPoly
    denominator: IntPoly

    def series(self, n_terms: int) -> list[int]:
        """Power-series expansion f/g to n_terms coefficients (g(0) = 1)."""
        f, g = self.numerator, self.denominator
        out = []
        for n in range(n_terms):
            acc = f[n]
            for i in range(1, min(n, g.degree) + 1):
                acc -= g[i] * out[n - i]
            out.append(acc)
        return out


def generating_function(rec: LinearRecurrence) -> RationalGF:
    g = rec.char_poly
    k = rec.order
    f = [0] * k
    for i in range(k):
        for j in range(i + 1):
            f[i] += g[j] * rec.initial[i - j]
    return RationalGF(IntPoly(f), g)


def minimal_order(rec: LinearRecurrence) -> LinearRecurrence:
    """Cancel gcd(f, g) from the generating function and read the relation back."""
    gf = generating_function(rec)
    f, g = gf.numerator, gf.denominator
    if not f:
        raise DomainError("identically-zero sequence has no positive minimal order")
    d = poly_gcd(f, g)
    if d.degree == 0:
        return rec
    # d is primitive and divides g, f in Q[x], hence in Z[x] (Gauss)
    g2, f2 = g.exquo(d), f.exquo(d)
    if g2[0] == -1:
        g2, f2 = -g2, -f2
    assert g2[0] == 1, "cancelled denominator must have constant term +-1"
    k = g2.degree
    return LinearRecurrence.from_char_poly(g2, rec.initial[:k])


def from_polynomial(f: IntPoly) -> LinearRecurrence:
    """Order deg(f)+1 recurrence from the binomial identity for integer polynomials."""
    f = f if isinstance(f, IntPoly) else IntPoly(f)
    k = max(f.degree, 0)
    coeffs = [(-1) ** i * math.comb(k + 1, i + 1) for i in range(k + 1)]
    return LinearRecurrence(tuple(coeffs), tuple(f(n) for n in range(k + 1)))


class Degeneracy(Enum):
    DEGENERATE = "DEGENERATE"
    NON_DEGENERATE = "NON_DEGENERATE"


@dataclass(frozen=True)
class DegeneracyVerdict:
    verdict: Degeneracy
    witness: int | None = None  # cyclotomic index n with Phi_n | ratio polynomial

    @property
    def degenerate(self) -> bool:
        return self.verdict is Degeneracy.DEGENERATE


def ratio_polynomial(g: IntPoly) -> IntPoly:
    """Integer polynomial whose roots are the ratios of distinct roots of g."""
    monic = reverse_poly(g, g.degree)
    s = squarefree_part(monic)
    d = s.degree
    sy = [IntPoly((c,)) for c in s.coeffs]
    sxy = [IntPoly.monomial(c, i) for i, c in enumerate(s.coeffs)]
    q = resultant_y(sy, sxy)
    return q.exquo(IntPoly((-1, 1)) ** d)


def is_degenerate(rec: LinearRecurrence) -> DegeneracyVerdict:
    """Exact root-of-unity test on ratios of distinct characteristic roots.

    Call on a minimal-order recurrence.
    """
    if rec.order < 1:
        raise DomainError("order 0 has no characteristic roots")
    q = ratio_polynomial(rec.char_poly)
    dq = q.degree
    if dq < 1:
        return DegeneracyVerdict(Degeneracy.NON_DEGENERATE)
    # phi(n) >= sqrt(n/2), so phi(n) <= dq forces n <= 2 dq^2
    for n in range(1, 2 * dq * dq + 1):
        if euler_phi(n) <= dq and poly_gcd(q, cyclotomic(n)).degree > 0:
            return DegeneracyVerdict(Degeneracy.DEGENERATE, n)
    return DegeneracyVerdict(Degeneracy.NON_DEGENERATE)


# --- sequence-spec documents -------------------------------------------------


class SpecError(DomainError):
    """Malformed sequence-spec document; ``path`` locates the offending field."""

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path


_SPEC_KEYS = {
    "linear": {"type", "coeffs", "initial"},
    "nonlinear": {"type", "k", "sign", "poly", "initial"},
    "polynomial": {"type", "poly"},
}


def _int_list(doc, key, path):
    val = doc.get(key)
    if not isinstance(val, list):
        raise SpecError("expected a list of integers", f"{path}.{key}")
    for i, v in enumerate(val):
        if isinstance(v, bool) or not isinstance(v, int):
            raise SpecError(f"expected an integer, got {v!r}", f"{path}.{key}[{i}]")
    return val


def source_from_spec(doc, path="$") -> SequenceSource:
    if not isinstance(doc, dict):
        raise SpecError("sequence spec must be a JSON object", path)
    kind = doc.get("type")
    if kind not in _SPEC_KEYS:
        raise SpecError(f"unknown type {kind!r}; expected linear, nonlinear or polynomial", f"{path}.type")
    missing = _SPEC_KEYS[kind] - set(doc)
    if missing:
        raise SpecError(f"missing field(s) {sorted(missing)}", path)
    extra = set(doc) - _SPEC_KEYS[kind]
    if extra:
        raise SpecError(f"unknown field(s) {sorted(extra)}", path)
    try:
        if kind == "linear":
            return LinearRecurrence(
                tuple(_int_list(doc, "coeffs", path)), tuple(_int_list(doc, "initial", path))
            )
        if kind == "polynomial":
            return IntPolynomialSequence(IntPoly(_int_list(doc, "poly", path)))
        k, sign = doc["k"], doc["sign"]
        if isinstance(k, bool) or not isinstance(k, int):
            raise SpecError("expected an integer", f"{path}.k")
        if sign not in (1, -1) or isinstance(sign, bool):
            raise SpecError("expected 1 or -1", f"{path}.sign")
        if not isinstance(doc["poly"], list):
            raise SpecError("expected a list of monomials", f"{path}.poly")
        terms = []
        for i, mono in enumerate(doc["poly"]):
            mpath = f"{path}.poly[{i}]"
            if not isinstance(mono, dict) or set(mono) != {"exps", "c"}:
                raise SpecError('monomial must be {"exps": [...], "c": int}', mpath)
            exps = _int_list(mono, "exps", mpath)
            c = mono["c"]
            if isinstance(c, bool) or not isinstance(c, int):
                raise SpecError("expected an integer", f"{mpath}.c")
            terms.append((tuple(exps), c))
        return NonlinearRecurrence(k, sign, tuple(terms), tuple(_int_list(doc, "initial", path)))
    except SpecError:
        raise
    except DomainError as exc:
        raise SpecError(str(exc), path) from None


def load_spec(text: str) -> SequenceSource:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return source_from_spec(doc)


def is_source(obj) -> bool:
    return isinstance(obj, (LinearRecurrence, NonlinearRecurrence, IntPolynomialSequence))

