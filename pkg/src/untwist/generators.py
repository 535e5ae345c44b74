"""Random valid inputs for property checks.

Seifert matrices are built valid by construction: start from a matrix
whose antisymmetrization is the standard form J, then apply a random
unimodular congruence assembled from bounded elementary operations.
"""

import random

from .laurent import LaurentMatrix, LaurentPoly
from .seifert import BasisChange, SeifertMatrix, congruence, identity


def random_unimodular(rng: random.Random, n: int, steps: int = None, bound: int = 2) -> BasisChange:
    """Product of random elementary column operations, swaps and sign flips."""
    u = [list(r) for r in identity(n)]
    if n == 0:
        return BasisChange(())
    steps = 2 * n if steps is None else steps
    for _ in range(steps):
        kind = rng.random()
        i = rng.randrange(n)
        if kind < 0.7 and n > 1:
            j = rng.choice([x for x in range(n) if x != i])
            c = rng.choice([x for x in range(-bound, bound + 1) if x])
            for r in u:
                r[i] += c * r[j]
        elif kind < 0.85 and n > 1:
            j = rng.randrange(n)
            for r in u:
                r[i], r[j] = r[j], r[i]
        else:
            for r in u:
                r[i] = -r[i]
    return BasisChange(tuple(tuple(r) for r in u))


def random_symplectic_seifert(rng: random.Random, g: int, bound: int = 3) -> SeifertMatrix:
    """Random V with ``V - V^T = J``: a symmetric matrix plus the upper half of J."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    for i in range(g):
        rows[2 * i][2 * i + 1] += 1
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def random_seifert(rng: random.Random, g: int, bound: int = 3, steps: int = None) -> SeifertMatrix:
    v = random_symplectic_seifert(rng, g, bound)
    u = random_unimodular(rng, 2 * g, steps, bound=1)
    return SeifertMatrix(congruence(v.entries, u.matrix))


def random_laurent_matrix(rng: random.Random, field, rows: int, cols: int, max_degree: int = 4,
                          density: float = 0.8, allow_negative: bool = True) -> LaurentMatrix:
    """Entries with random coefficients up to ``max_degree`` terms, some shifted below t^0."""
    p = field.characteristic or 7
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            if rng.random() > density:
                row.append(LaurentPoly.zero(field))
                continue
            d = rng.randint(0, max_degree)
            low = rng.randint(-2, 0) if allow_negative and rng.random() < 0.2 else 0
            row.append(LaurentPoly(field, [rng.randrange(p) - (p // 2 if not field.characteristic else 0)
                                           for _ in range(d + 1)], low))
        out.append(row)
    return LaurentMatrix(field, out)

