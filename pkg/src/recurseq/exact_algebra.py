"""Dense integer polynomials and the exact operations built on them.

Coefficients are stored ascending: ``IntPoly([1, -1, -1])`` is 1 - x - x^2.
Python ints are arbitrary precision, so they serve directly as the big
integer type.
"""

from __future__ import annotations

import math
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .errors import DomainError

ZERO_DEGREE = -1


class IntPoly:
    """Immutable polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: int, n: int) -> IntPoly:
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        n = max(len(self), len(other))
        return IntPoly(self[i] - other[i] for i in range(n))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return poly_product(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> IntPoly:
        """Primitive part with positive leading coefficient (zero stays zero)."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    def exquo(self, other) -> IntPoly:
        """Exact quotient in Z[x]; raises ArithmeticError if not exact."""
        if isinstance(other, int):
            other = IntPoly((other,))
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d, lc = other.degree, other.lc
        if len(rem) - 1 < d:
            if rem:
                raise ArithmeticError(f"{other} does not divide {self}")
            return IntPoly()
        quot = [0] * (len(rem) - d)
        for i in range(len(rem) - 1 - d, -1, -1):
            q, r = divmod(rem[i + d], lc)
            if r:
                raise ArithmeticError(f"{other} does not divide {self}")
            quot[i] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        if any(rem[:d]):
            raise ArithmeticError(f"{other} does not divide {self}")
        return IntPoly(quot)


def as_poly(p) -> IntPoly:
    return p if isinstance(p, IntPoly) else IntPoly(p)


def poly_product(p: IntPoly, q: IntPoly) -> IntPoly:
    p, q = as_poly(p), as_poly(q)
    if not p or not q:
        return IntPoly()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPoly(out)


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _exquo(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q
    return as_poly(a).exquo(b)


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over any exact ring."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr, shift = r[-1], len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] = r[i + shift] - lr * c
        _trim(r)
        e -= 1
    if e > 0:
        f = lb**e
        r = [f * c for c in r]
    return r


def _subresultant(a: list, b: list):
    """Res(a, b) by the subresultant PRS; coefficients from Z or Z[x]."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    s = 1
    if da < db:
        a, b = b, a
        if da * db % 2:
            s = -1
    g = h = 1
    while len(b) - 1 > 0:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        a = b
        if not r:
            return 0
        div = g * h**delta
        b = [_exquo(c, div) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exquo(g**delta, h ** (delta - 1))
    da = len(a) - 1
    lb = b[-1]
    if da == 0:
        h = 1
    elif da == 1:
        h = lb
    else:
        h = _exquo(lb**da, h ** (da - 1))
    return s * h if isinstance(h, int) else h * s


def resultant(p: IntPoly, q: IntPoly) -> int:
    p, q = as_poly(p), as_poly(q)
    if not p or not q:
        raise DomainError("resultant of the zero polynomial")
    return _subresultant(list(p.coeffs), list(q.coeffs))


def resultant_y(p: Sequence[IntPoly], q: Sequence[IntPoly]) -> IntPoly:
    """Res_y of two polynomials in y whose coefficients lie in Z[x].

    ``p[i]`` is the coefficient of y^i, itself an IntPoly in x.
    """
    p = [as_poly(c) for c in p]
    q = [as_poly(c) for c in q]
    if not _trim(list(p)) or not _trim(list(q)):
        raise DomainError("resultant of the zero polynomial")
    return as_poly(_subresultant(p, q))


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """GCD over Q, returned primitive with positive leading coefficient."""
    p, q = as_poly(p), as_poly(q)
    if not p and not q:
        raise DomainError("gcd(0, 0) is undefined")
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = IntPoly(_prem(list(a.coeffs), list(b.coeffs)))
        a, b = b, r.primitive()
    return a.primitive()


def reverse_poly(p: IntPoly, k: int) -> IntPoly:
    """x^k * p(1/x)."""
    p = as_poly(p)
    if k < p.degree:
        raise DomainError(f"reversal length {k} below degree {p.degree}")
    c = list(p.coeffs) + [0] * (k + 1 - len(p))
    return IntPoly(reversed(c))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    if n < 1:
        raise DomainError("cyclotomic index must be positive")
    poly = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exquo(cyclotomic(d))
    return poly


def p_adic_valuation(p: int, n: int) -> int:
    if n == 0:
        raise DomainError("valuation of 0 is infinite")
    if p < 2:
        raise DomainError("valuation base must be a prime")
    n, e = abs(n), 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def squarefree_part(p: IntPoly) -> IntPoly:
    p = as_poly(p)
    d = poly_gcd(p, p.derivative()) if p.degree > 0 else IntPoly((1,))
    return p.primitive().exquo(d)
