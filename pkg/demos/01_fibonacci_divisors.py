"""Which primes divide some Fibonacci number, and how fast does the set grow?

Run: python3 demos/01_fibonacci_divisors.py
"""

from recurseq import LinearRecurrence, evaluate, is_prime_divisor, minimal_order, verify_infinitude

fib = LinearRecurrence(coeffs=(1, 1), initial=(0, 1))
print("first terms:", evaluate(fib, 15))

# An order-3 relation that Fibonacci also satisfies collapses back to order 2.
padded = LinearRecurrence((3, -1, -2), (0, 1, 1))
print("minimal form of the order-3 relation:", minimal_order(padded))

# Divisibility is decided from one period of residues, so huge indices are fine.
for p in (11, 89, 1009, 2207):
    v = is_prime_divisor(fib, p)
    print(f"p={p}: divides some term -> {v.divides}, first at n={v.first_index}")

report = verify_infinitude(fib, 5000, checkpoints=(100, 1000, 5000))
print()
print(report.to_table(max_rows=8))
print("note: F_0 = 0 is divisible by every prime; see the HAS_ZERO_TERM flag")
