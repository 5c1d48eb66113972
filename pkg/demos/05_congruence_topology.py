"""Congruence classes as open sets, and the Euclid-style witness.

Run: python3 demos/05_congruence_topology.py
"""

from recurseq import CongruenceClass as Con
from recurseq import LinearRecurrence, continuity_certificate, euclid_witness, fm_basis_valid, intersect
from recurseq.topology import preimage_classes

print("Con(1,2) & Con(2,3) =", intersect(Con(1, 2), Con(2, 3)))
print("Con(0,2) & Con(1,4) =", intersect(Con(0, 2), Con(1, 4)) or "empty")
print("Con(1,3) allowed when moduli must be prime to 2:", fm_basis_valid(Con(1, 3), 2))

# If finitely many primes covered Z minus {1, -1}, this integer would be in some Con(0, p).
for ps in ({2}, {2, 3}, {2, 3, 5, 7, 11, 13}):
    print(sorted(ps), "->", euclid_witness(ps))

# n -> F_n is continuous: the preimage of an open class is a union of classes (plus finitely many points).
fib = LinearRecurrence((1, 1), (0, 1))
cert = continuity_certificate(fib, 5)
print(f"Fibonacci mod 5: preperiod {cert.preperiod}, period {cert.period}")
head, tail = preimage_classes(fib, Con(0, 5))
print("indices n with 5 | F_n:", head, [str(c) for c in tail])
