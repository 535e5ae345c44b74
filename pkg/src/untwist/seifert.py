"""Integer Seifert-matrix algebra.

Matrices are stored as tuples of tuples of Python ints, so arithmetic is
exact and unbounded.  The basis convention for a symplectic Seifert matrix
is ``a_1, b_1, ..., a_g, b_g`` with ``(V - V^T)[a_i, b_i] = +1``.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    NonUnimodularIntersection,
    NotSymplectic,
    NotUnimodular,
    OddDimension,
)

IntMatrix = Tuple[Tuple[int, ...], ...]


# -- plain integer matrix helpers --------------------------------------------

def as_int_matrix(rows) -> IntMatrix:
    """Freeze a nested sequence into a square-checked tuple matrix."""
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"matrix entries must be integers, got {x!r}")
            r.append(x)
        out.append(tuple(r))
    n = len(out)
    if any(len(r) != n for r in out):
        raise DimensionMismatch("matrix is not square")
    return tuple(out)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def antisym(m: IntMatrix) -> IntMatrix:
    """Return ``m - m^T``."""
    n = len(m)
    return tuple(tuple(m[i][j] - m[j][i] for j in range(n)) for i in range(n))


def det(m: IntMatrix) -> int:
    """Bareiss fraction-free determinant; exact for integer input."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def congruence(v: IntMatrix, u: IntMatrix) -> IntMatrix:
    """``U^T V U``."""
    return matmul(matmul(transpose(u), v), u)


def standard_form(g: int) -> IntMatrix:
    """The standard symplectic block matrix J of size 2g."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return tuple(tuple(r) for r in rows)


# -- value types ---------------------------------------------------------------

@dataclass(frozen=True)
class SeifertMatrix:
    """A validated Seifert matrix of a knot.

    Use :func:`validate_seifert` to build one from raw rows.
    """

    entries: IntMatrix
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.entries)
        if n % 2:
            raise OddDimension(f"Seifert matrix has odd dimension {n}")
        d = det(antisym(self.entries))
        if d != 1:
            raise NonUnimodularIntersection(f"det(V - V^T) = {d}, expected 1")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_lists(self):
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class SymplecticSeifertMatrix(SeifertMatrix):
    """Seifert matrix whose basis is ordered ``a_1, b_1, ..., a_g, b_g``."""

    def __post_init__(self):
        super().__post_init__()
        if antisym(self.entries) != standard_form(self.genus):
            raise NotSymplectic("V - V^T is not the standard block form")


@dataclass(frozen=True)
class BasisChange:
    """Unimodular integer matrix; columns are the new basis vectors."""

    matrix: IntMatrix

    def __post_init__(self):
        if abs(det(self.matrix)) != 1:
            raise NotUnimodular(f"det(U) = {det(self.matrix)}")

    @classmethod
    def identity(cls, n: int) -> "BasisChange":
        return cls(identity(n))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def then(self, other: "BasisChange") -> "BasisChange":
        """Compose: first ``self``, then ``other`` (matrix product self*other)."""
        return BasisChange(matmul(self.matrix, other.matrix))

    def is_identity(self) -> bool:
        return self.matrix == identity(len(self.matrix))


# -- operations ----------------------------------------------------------------

def validate_seifert(entries: Sequence[Sequence[int]], name: Optional[str] = None) -> SeifertMatrix:
    """Check a raw integer matrix and wrap it as a :class:`SeifertMatrix`.

    Raises OddDimension or NonUnimodularIntersection.
    """
    return SeifertMatrix(as_int_matrix(entries), name)


def connected_sum(v1: SeifertMatrix, v2: SeifertMatrix) -> SeifertMatrix:
    n1, n2 = v1.dim, v2.dim
    rows = [list(r) + [0] * n2 for r in v1.entries]
    rows += [[0] * n1 + list(r) for r in v2.entries]
    name = None
    if v1.name and v2.name:
        name = f"{v1.name} # {v2.name}"
    return SeifertMatrix(as_int_matrix(rows), name)


def basis_change(v: SeifertMatrix, u: BasisChange) -> SeifertMatrix:
    """Change basis by congruence ``U^T V U``."""
    if not isinstance(u, BasisChange):
        u = BasisChange(as_int_matrix(u))
    if u.dim != v.dim:
        raise DimensionMismatch(f"basis change is {u.dim}x{u.dim}, matrix is {v.dim}x{v.dim}")
    return SeifertMatrix(congruence(v.entries, u.matrix), v.name)


def _omega(form, x, y):
    return sum(x[i] * form[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j])


def symplectic_reduce(v: SeifertMatrix) -> Tuple[SymplecticSeifertMatrix, BasisChange]:
    """Find an integral symplectic basis for the intersection form ``V - V^T``.

    Symplectic Gram-Schmidt over the integers: take the first remaining
    vector as ``a``, run Euclid on its pairings with the others to produce a
    partner ``b`` with pairing exactly +1, then project the rest off the
    hyperbolic plane spanned by ``a, b``.

    Returns ``(V', U)`` with ``V' = U^T V U``.
    """
    n = v.dim
    form = antisym(v.entries)
    rest = [list(r) for r in identity(n)]
    basis = []
    while rest:
        a = rest.pop(0)
        vals = [_omega(form, a, y) for y in rest]
        # Euclid across the remaining vectors until one pairing is +-gcd.
        while sum(1 for x in vals if x) > 1:
            piv = min((k for k in range(len(vals)) if vals[k]), key=lambda k: (abs(vals[k]), k))
            for k in range(len(vals)):
                if k != piv and vals[k]:
                    q = vals[k] // vals[piv]
                    rest[k] = [x - q * y for x, y in zip(rest[k], rest[piv])]
                    vals[k] -= q * vals[piv]
        piv = next(k for k in range(len(vals)) if vals[k])
        if abs(vals[piv]) != 1:
            raise NonUnimodularIntersection("intersection form is not unimodular")
        b = rest.pop(piv)
        if vals[piv] < 0:
            b = [-x for x in b]
        projected = []
        for z in rest:
            za, zb = _omega(form, z, a), _omega(form, z, b)
            projected.append([zi - zb * ai + za * bi for zi, ai, bi in zip(z, a, b)])
        rest = projected
        basis += [a, b]
    u = BasisChange(transpose(tuple(tuple(c) for c in basis)) if basis else ())
    return SymplecticSeifertMatrix(congruence(v.entries, u.matrix), v.name), u


def _pair_move(n: int, i: int, block) -> IntMatrix:
    rows = [list(r) for r in identity(n)]
    for r in range(2):
        for c in range(2):
            rows[2 * i + r][2 * i + c] = block[r][c]
    return tuple(tuple(r) for r in rows)


# a -> b, b -> -a   (columns are new basis vectors)
_SWAP = ((0, -1), (1, 0))
# a -> a + b, b -> b
_SHEAR = ((1, 0), (1, 1))


def parity_normalize(v: SymplecticSeifertMatrix) -> Tuple[SymplecticSeifertMatrix, BasisChange]:
    """Make every ``a_i`` have odd Seifert self-pairing.

    Per pair: keep if ``V(a,a)`` is odd; otherwise swap to ``(b, -a)`` if
    ``V(b,b)`` is odd; otherwise replace ``a`` by ``a + b``, whose
    self-pairing is ``V(a,b) - V(b,a) = 1`` mod 2.
    """
    if not isinstance(v, SymplecticSeifertMatrix):
        v = SymplecticSeifertMatrix(v.entries, v.name)
    n = v.dim
    u = identity(n)
    cur = v.entries
    for i in range(v.genus):
        a, b = 2 * i, 2 * i + 1
        if cur[a][a] % 2:
            continue
        step = _pair_move(n, i, _SWAP if cur[b][b] % 2 else _SHEAR)
        cur = congruence(cur, step)
        u = matmul(u, step)
    return SymplecticSeifertMatrix(cur, v.name), BasisChange(u)
