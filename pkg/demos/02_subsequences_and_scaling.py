"""Arithmetic-progression subsequences of a recurrence satisfy a recurrence of the same order.

Run: python3 demos/02_subsequences_and_scaling.py
"""

from recurseq import IntPoly, LinearRecurrence, evaluate, phi_b, scaling_candidate, subsequence_recurrence, verify_scaling

fib = LinearRecurrence((1, 1), (0, 1))
g = fib.char_poly
print("g(x) =", g)
for b in (2, 3, 5):
    print(f"phi_{b} g =", phi_b(g, b))

sub = subsequence_recurrence(fib, c=1, b=3)
print("F_1, F_4, F_7, ... :", evaluate(sub, 6))
print("check against F    :", evaluate(fib, 19)[1::3])

# Coefficient scaling: pull a common t^i out of the i-th coefficient.
rec = LinearRecurrence((2, 4), (0, 1))
for s in (1, 2):
    rep = scaling_candidate(rec, s)
    print(f"s={s}: coefficients {rep.coeffs} -> t={rep.t}, scaled {rep.scaled_coeffs}, coprime={rep.coprime}")

# The divisibility t^n | a_sn is not automatic; it depends on the initial terms.
bad = verify_scaling(rec, 1, 2, 10)
print("initial (0, 1):", "holds" if bad.base_case_ok else f"fails, witness (n, a_n, t^n) = {bad.failure_witness}")
good = verify_scaling(LinearRecurrence((2, 4), (0, 2)), 1, 2, 20)
print("initial (0, 2):", "holds up to n=20" if good.base_case_ok else "fails")
print("quotient recurrence:", good.quotient.recurrence())
print("phi_2 of a linear factor:", phi_b(IntPoly([1, -3]), 2))
