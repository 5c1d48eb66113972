"""Fixed instance corpora shared by unit and acceptance tests."""

import random

from oracles import fit_minimal_relation, float_degenerate, iterate

FIB = ((1, 1), (0, 1))


def degeneracy_corpus(seed=20240501, size=100):
    """100 recurrences (k <= 4) with impulse initial terms, so each is minimal."""
    fixed = [
        (0, 1),          # roots +-1
        (1, 1),          # Fibonacci
        (1, -1),         # primitive 6th roots of unity
        (0, 2),          # +-sqrt(2)
        (0, 0, 1),       # cube roots of unity
        (2, -1),         # double root 1
        (1,),
        (-1,),
        (0, -1),         # +-i
        (2, -2),         # 1 +- i
        (1, 0, 0, -1),
        (0, 0, 0, 1),
    ]
    rng = random.Random(seed)
    out = list(fixed)
    seen = set(out)
    while len(out) < size:
        k = rng.randint(1, 4)
        coeffs = tuple(rng.randint(-3, 3) for _ in range(k))
        if coeffs[-1] == 0 or coeffs in seen:
            continue
        seen.add(coeffs)
        out.append(coeffs)
    return [(c, (0,) * (len(c) - 1) + (1,)) for c in out]


def random_nondegenerate(rng, k_max=3, coeff_bound=5, initial_bound=5, order_at_least=2):
    """A random minimal, non-degenerate recurrence checked by the oracles only."""
    while True:
        k = rng.randint(order_at_least, k_max)
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(k)]
        if coeffs[-1] == 0:
            continue
        initial = [rng.randint(-initial_bound, initial_bound) for _ in range(k)]
        terms = iterate(coeffs, initial, 4 * k + 8)
        rel = fit_minimal_relation(terms, k)
        if rel is None or len(rel) != k or float_degenerate(coeffs):
            continue
        return tuple(coeffs), tuple(initial)
