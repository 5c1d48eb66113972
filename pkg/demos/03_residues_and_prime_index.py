"""Recurrences are eventually periodic mod m; null divisors and prime indices follow.

Run: python3 demos/03_residues_and_prime_index.py
"""

from recurseq import CapExceeded, LinearRecurrence, is_null_divisor, period_mod, prime_index, strip_prime, unbounded_on_classes
from recurseq.modular import residues

fib = LinearRecurrence((1, 1), (0, 1))
for m in (2, 3, 7, 10, 1000):
    cert = period_mod(fib, m)
    print(f"Fibonacci mod {m}: preperiod {cert.preperiod}, period {cert.period}")

doubling = LinearRecurrence((2,), (1,))
print("2^n mod 4:", residues(doubling, 4, 8), "-> null divisor:", is_null_divisor(doubling, 4))

# a_n = 2 * 3^n: exactly one factor of 2 survives forever.
print("index of 2 in 2*3^n:", prime_index(LinearRecurrence((3,), (2,)), 2))
try:
    prime_index(LinearRecurrence((2,), (4,)), 2)
except CapExceeded as exc:
    print("index of 2 in 2^(n+2):", exc.code, "-", exc.note)

# Remove the even Fibonacci numbers by moving to a progression of indices.
odd = strip_prime(fib, 2)
print(f"strip 2 from Fibonacci: a_({odd.step}n+{odd.offset}) / {odd.divisor_extracted}")

print("class maxima of Fibonacci mod 3 up to n=30:", unbounded_on_classes(fib, 3, 30).maxima)
print("class maxima of 0,1,0,1,...:", unbounded_on_classes(LinearRecurrence((0, 1), (0, 1)), 2, 30).maxima)
