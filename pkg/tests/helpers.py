"""Independent oracles used by the tests.

Nothing here calls into the code paths it is used to check.
"""

import itertools


def leibniz_det(m):
    """Determinant by permutation expansion; entries may be ints or int-coefficient lists."""
    n = len(m)
    total = {}
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = {0: -1 if inv % 2 else 1}
        for i in range(n):
            entry = m[i][perm[i]]
            if isinstance(entry, int):
                entry = {0: entry}
            new = {}
            for a, x in term.items():
                for b, y in entry.items():
                    new[a + b] = new.get(a + b, 0) + x * y
            term = new
        for k, c in term.items():
            total[k] = total.get(k, 0) + c
    return {k: c for k, c in total.items() if c}


def seifert_det_poly(v):
    """det(V - t V^T) as {exponent: integer coefficient}, by Leibniz expansion."""
    n = len(v)
    m = [[{0: v[i][j], 1: -v[j][i]} for j in range(n)] for i in range(n)]
    return leibniz_det(m) if n else {0: 1}


def normalize_dict_poly(d):
    """Shift to lowest exponent 0 and fix the sign so the value at t = 1 is positive."""
    if not d:
        return []
    lo, hi = min(d), max(d)
    coeffs = [d.get(k, 0) for k in range(lo, hi + 1)]
    if sum(coeffs) < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def int_matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def int_transpose(a):
    return [list(r) for r in zip(*a)]

