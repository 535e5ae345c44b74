"""Alexander module of a knot over F[t, 1/t].

The module is presented by ``V - t V^T``; its invariant factors come from a
Smith normal form computed over F[t] after each row is shifted by a power of
t (a unit in the Laurent ring) to clear negative exponents.
"""

import os
from dataclasses import dataclass
from typing import List, Tuple

from .laurent import QQ, Field, LaurentMatrix, LaurentPoly
from .seifert import SeifertMatrix

# When set, every SNF call re-checks A*M*B == D and the divisibility chain.
CHECK = bool(os.environ.get("UNTWIST_CHECK"))


def presentation_matrix(v: SeifertMatrix, field: Field) -> LaurentMatrix:
    """Entry (i, j) is ``V[i][j] - t V[j][i]``."""
    n = v.dim
    e = v.entries
    return LaurentMatrix(field, [[LaurentPoly(field, [e[i][j], -e[j][i]]) for j in range(n)] for i in range(n)])


def smith_normal_form(m: LaurentMatrix, verify: bool = None) -> Tuple[LaurentMatrix, LaurentMatrix, LaurentMatrix]:
    """Return ``(D, A, B)`` with ``D = A M B`` diagonal and ``d_i | d_{i+1}``.

    ``A`` and ``B`` are invertible over the Laurent ring.  Nonzero diagonal
    entries are normalized to lowest exponent 0 and leading coefficient 1,
    so every unit on the diagonal becomes 1.

    Pivot: the nonzero entry of least degree in the active block, ties
    broken in row-major order.
    """
    f = m.field
    rows, cols = m.shape
    zero = LaurentPoly.zero(f)
    one = LaurentPoly.const(f, 1)
    a = [list(r) for r in m.rows]
    left = [[one if i == j else zero for j in range(rows)] for i in range(rows)]
    right = [[one if i == j else zero for j in range(cols)] for i in range(cols)]

    # Clear negative exponents row by row.
    for i in range(rows):
        lows = [x.low for x in a[i] if x.coeffs]
        if lows and min(lows) != 0:
            k = -min(lows)
            a[i] = [x.shift(k) for x in a[i]]
            left[i] = [x.shift(k) for x in left[i]]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y if y.coeffs else x for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y if y.coeffs else x for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for r in a:
            if r[src].coeffs:
                r[dst] = r[dst] + q * r[src]
        for r in right:
            if r[src].coeffs:
                r[dst] = r[dst] + q * r[src]

    def settle(s):
        # Bring a pivot to (s, s) dividing everything in the active block.
        # Returns False when the active block is zero.
        while True:
            best = None
            for i in range(s, rows):
                for j in range(s, cols):
                    x = a[i][j]
                    if x.coeffs and (best is None or x.degree() < best[0]):
                        best = (x.degree(), i, j)
            if best is None:
                return False
            _, pi, pj = best
            if pi != s:
                swap_rows(s, pi)
            if pj != s:
                swap_cols(s, pj)
            piv = a[s][s]
            clean = True
            for i in range(s + 1, rows):
                if a[i][s].coeffs:
                    q, r = a[i][s].poly_divmod(piv)
                    add_row(i, s, -q)
                    clean = clean and r.is_zero()
            for j in range(s + 1, cols):
                if a[s][j].coeffs:
                    q, r = a[s][j].poly_divmod(piv)
                    add_col(j, s, -q)
                    clean = clean and r.is_zero()
            if not clean:
                continue
            bad = next(
                (i for i in range(s + 1, rows) for j in range(s + 1, cols)
                 if a[i][j].coeffs and not a[i][j].poly_divmod(piv)[1].is_zero()),
                None,
            )
            if bad is None:
                return True
            add_row(s, bad, one)

    for s in range(min(rows, cols)):
        if not settle(s):
            break

    for i in range(min(rows, cols)):
        d = a[i][i]
        if d.coeffs and d != d.normalized():
            u = LaurentPoly.monomial(f, f.inv(d.lead()), -d.low)
            a[i] = [x * u for x in a[i]]
            left[i] = [x * u for x in left[i]]

    out = LaurentMatrix(f, a), LaurentMatrix(f, left), LaurentMatrix(f, right)
    if CHECK if verify is None else verify:
        check_smith_form(m, *out)
    return out


def check_smith_form(m: LaurentMatrix, d: LaurentMatrix, a: LaurentMatrix, b: LaurentMatrix) -> None:
    """Raise AssertionError unless ``(d, a, b)`` is a valid SNF of ``m``."""
    assert a @ m @ b == d, "A*M*B != D"
    assert d.is_diagonal(), "D is not diagonal"
    diag = d.diagonal()
    for x, y in zip(diag, diag[1:]):
        assert x.divides(y), f"{x} does not divide {y}"
    for x in diag:
        assert x.is_zero() or x == x.normalized(), f"{x} not normalized"
    assert a.det().is_unit(), "A not invertible"
    assert b.det().is_unit(), "B not invertible"


@dataclass(frozen=True)
class AlexanderModule:
    """Invariant-factor decomposition of the Alexander module over ``field``.

    ``invariant_factors`` holds the non-unit factors only, each dividing the
    next; a zero factor stands for a free summand.
    """

    field: Field
    invariant_factors: Tuple[LaurentPoly, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def to_json(self):
        return {
            "field": self.field.name,
            "rank": self.rank,
            "invariant_factors": [x.to_json() for x in self.invariant_factors],
        }

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        parts = []
        for x in self.invariant_factors:
            parts.append("R" if x.is_zero() else f"R/({x})")
        return " + ".join(parts)


def invariant_factors(m: LaurentMatrix) -> List[LaurentPoly]:
    """Non-unit invariant factors of the module presented by ``m``.

    Generators correspond to rows; rows beyond the column count contribute
    free summands (zero factors).
    """
    rows, cols = m.shape
    d = smith_normal_form(m)[0]
    out = [x for x in d.diagonal() if not x.is_unit()]
    out += [LaurentPoly.zero(m.field)] * max(0, rows - cols)
    return out


def module_rank(v: SeifertMatrix, field: Field) -> Tuple[AlexanderModule, int]:
    """Minimal number of generators of ``H_1`` of the infinite cyclic cover over ``field``."""
    mod = AlexanderModule(field, tuple(invariant_factors(presentation_matrix(v, field))))
    return mod, mod.rank


def alexander_polynomial(v: SeifertMatrix) -> LaurentPoly:
    """``det(V - t V^T)`` over Q, shifted to start at t^0 and signed so that Δ(1) = 1."""
    d = presentation_matrix(v, QQ).det()
    d = d.shift(-d.low)
    if d(1) < 0:
        d = -d
    return d
