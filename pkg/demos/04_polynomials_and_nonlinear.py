"""Polynomial values and a nonlinear recurrence both keep acquiring new prime divisors.

Run: python3 demos/04_polynomials_and_nonlinear.py
"""

from recurseq import IntPoly, NonlinearRecurrence, evaluate, from_polynomial, schur_profile, verify_generalized

f = IntPoly([1, 0, 1])
print("f(n) = n^2 + 1 as a linear recurrence:", from_polynomial(f))
profile = schur_profile(f, 5000)
print("divisor counts:", profile.checkpoints, profile.status)
odd = sorted(p for p in profile.divisor_set if p != 2)
print("every odd divisor is 1 mod 4:", all(p % 4 == 1 for p in odd))

# a_{n+2} = a_n + a_{n+1}^2
rec = NonlinearRecurrence(k=1, sign=1, poly=(((2,), 1),), initial=(1, 1))
print("terms:", evaluate(rec, 7))
rep = verify_generalized(rec, 500, checkpoints=(50, 500))
print("divisor counts:", rep.checkpoints, rep.status, rep.flags)

flat = NonlinearRecurrence(k=1, sign=-1, poly=(), initial=(0, 1))
print("a_{n+2} = -a_n:", evaluate(flat, 7), "(bounded, so the growth hypothesis fails)")
