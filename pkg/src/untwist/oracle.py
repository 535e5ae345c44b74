"""Independent check of Alexander-module rank over a prime field.

Deliberately shares no code with :mod:`untwist.laurent` or the SNF: it uses
its own dense coefficient lists over F_p (lowest degree first) and never
performs a Smith reduction.

For a presentation matrix M (m rows = generators) with generic rank r over
F(t), the minimal number of generators of coker M is

    max(m - r, max over monic irreducible q | Δ_r of (m - rank(M mod q)))

where Δ_r is the gcd of the r x r minors, and ``rank(M mod q)`` is plain
Gaussian elimination over the extension field F_p[t]/(q).
"""

import itertools
import random

Poly = list  # coefficients mod p, index = degree, no trailing zeros


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def psub(a, b, p):
    return padd(a, [(-x) % p for x in b], p)


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - c * y) % p
    return trim(q), trim(a[:db])


def pmod(a, b, p):
    return pdivmod(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def pgcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, pmod(a, b, p)
    return monic(a, p)


def pderiv(a, p):
    return trim([i * a[i] % p for i in range(1, len(a))])


def ppowmod(base, e, mod, p):
    result = [1]
    base = pmod(base, mod, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), mod, p)
        base = pmod(pmul(base, base, p), mod, p)
        e >>= 1
    return result


def pinvmod(a, mod, p):
    """Inverse of ``a`` in F_p[t]/(mod) by extended Euclid."""
    r0, r1 = list(mod), pmod(a, mod, p)
    s0, s1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible")
    c = pow(r0[0], -1, p)
    return [x * c % p for x in s0]


# -- factorization: squarefree split, distinct degree, equal degree ----------

def _pth_root(a, p):
    # a(t) = b(t^p) with derivative 0; over F_p, b(t)^p = b(t^p).
    return trim([a[i] for i in range(0, len(a), p)])


def _distinct_degree(f, p):
    """Split a squarefree monic f into (d, product of degree-d factors)."""
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(h, p, f, p)
        g = pgcd(f, psub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((d, g))
            f = pdivmod(f, g, p)[0]
            h = pmod(h, f, p)
    if len(f) > 1:
        out.append((len(f) - 1, monic(f, p)))
    return out


def _equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            b, acc = pmod(a, f, p), []
            for _ in range(d):
                acc = padd(acc, b, p)
                b = pmod(pmul(b, b, p), f, p)
        else:
            acc = psub(ppowmod(a, (p ** d - 1) // 2, f, p), [1], p)
        g = pgcd(f, acc, p)
        if 1 < len(g) < len(f):
            return _equal_degree(g, d, p, rng) + _equal_degree(pdivmod(f, g, p)[0], d, p, rng)


def irreducible_factors(f, p, seed=0):
    """Distinct monic irreducible factors of a nonzero polynomial over F_p."""
    f = monic(trim(list(f)), p)
    if not f:
        raise ValueError("zero polynomial has no finite factorization")
    rng = random.Random(seed)
    found = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        dg = pderiv(g, p)
        if not dg:
            stack.append(_pth_root(g, p))
            continue
        c = pgcd(g, dg, p)
        sqfree = pdivmod(g, c, p)[0]
        for d, part in _distinct_degree(monic(sqfree, p), p):
            for q in _equal_degree(part, d, p, rng):
                found.add(tuple(q))
        stack.append(c)
    return sorted((list(q) for q in found), key=lambda q: (len(q), q))


# -- ranks and minors ----------------------------------------------------------

def rank_mod(mat, q, p):
    """Rank of a polynomial matrix reduced into the field F_p[t]/(q)."""
    a = [[pmod(x, q, p) for x in row] for row in mat]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pinvmod(a[r][c], q, p)
        a[r] = [pmod(pmul(x, inv, p), q, p) for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                fac = a[i][c]
                a[i] = [psub(x, pmod(pmul(fac, y, p), q, p), p) for x, y in zip(a[i], a[r])]
        r += 1
    return r


def det(mat, p):
    """Bareiss determinant over F_p[t]."""
    n = len(mat)
    if n == 0:
        return [1]
    a = [list(map(list, row)) for row in mat]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = psub(pmul(a[i][j], a[k][k], p), pmul(a[i][k], a[k][j], p), p)
                quo, rem = pdivmod(num, prev, p)
                assert not rem
                a[i][j] = quo
        prev = a[k][k]
    return [x * sign % p for x in a[n - 1][n - 1]]


def generic_rank(mat, p):
    """Rank over the fraction field F_p(t): largest nonvanishing minor."""
    rows = len(mat)
    cols = len(mat[0]) if mat else 0
    for r in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), r):
            for ci in itertools.combinations(range(cols), r):
                if det([[mat[i][j] for j in ci] for i in ri], p):
                    return r
    return 0


def determinantal_divisor(mat, r, p):
    """Monic gcd of all r x r minors."""
    rows = len(mat)
    cols = len(mat[0]) if mat else 0
    g = []
    for ri in itertools.combinations(range(rows), r):
        for ci in itertools.combinations(range(cols), r):
            g = pgcd(g, det([[mat[i][j] for j in ci] for i in ri], p), p)
            if g == [1]:
                return g
    return g if g else [1]


def module_rank(mat, p):
    """Minimal generator count of coker(mat) over F_p[t, 1/t].

    ``mat`` is a list of rows of coefficient lists in t (nonnegative
    exponents).  Since t is a unit in the Laurent ring, the factor t is
    ignored.
    """
    mat = [[trim([c % p for c in x]) for x in row] for row in mat]
    rows = len(mat)
    if rows == 0:
        return 0
    r = generic_rank(mat, p)
    best = rows - r
    if r == 0:
        return best
    delta = determinantal_divisor(mat, r, p)
    for q in irreducible_factors(delta, p):
        if q == [0, 1]:
            continue
        best = max(best, rows - rank_mod(mat, q, p))
    return best


def seifert_module_rank(entries, p):
    """Oracle rank for a Seifert matrix via ``V - t V^T``."""
    n = len(entries)
    mat = [[[entries[i][j], -entries[j][i]] for j in range(n)] for i in range(n)]
    return module_rank(mat, p)
