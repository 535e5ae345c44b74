"""Exact Laurent polynomials and matrices over F_p or Q."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import DimensionMismatch, FieldMismatch, NonPrimeModulus


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int) or not is_prime(self.p):
            raise NonPrimeModulus(f"{self.p!r} is not prime")

    @property
    def name(self) -> str:
        return f"F{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def inv(self, x: int) -> int:
        return pow(x, -1, self.p)

    def to_json(self, x):
        return int(x)

    def from_json(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValueError(f"expected integer field element, got {x!r}")
        return self(x)

    def sort_key(self):
        return (0, self.p)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Rationals:

    @property
    def name(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / Fraction(x)

    def to_json(self, x):
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"

    def from_json(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise ValueError(f"expected 'num/den' string, got {x!r}")
        return Fraction(x)

    def sort_key(self):
        return (1, 0)

    def __str__(self):
        return self.name


QQ = Rationals()
Field = Union[PrimeField, Rationals]


def field_from_name(name: str) -> Field:
    """Parse ``"Q"``, ``"F3"`` or a bare prime such as ``"3"``."""
    s = name.strip()
    if s.upper() in ("Q", "QQ"):
        return QQ
    if s[:1] in ("F", "f"):
        s = s[1:]
    try:
        p = int(s)
    except ValueError:
        raise NonPrimeModulus(f"cannot read a field from {name!r}") from None
    return PrimeField(p)


class LaurentPoly:
    """Element of F[t, 1/t], stored as dense coefficients from ``low`` upwards.

    Canonical: the zero polynomial has no coefficients and ``low == 0``;
    otherwise the first and last coefficients are nonzero.
    """

    __slots__ = ("field", "low", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = (), low: int = 0):
        cs = [field(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        self.field = field
        self.coeffs: Tuple = tuple(cs[start:end])
        self.low = low + start if self.coeffs else 0

    # -- constructors --
    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @classmethod
    def monomial(cls, field, c=1, k=1):
        return cls(field, [c], k)

    @classmethod
    def _raw(cls, field, coeffs, low):
        # coeffs already reduced and trimmed
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        obj.low = low if coeffs else 0
        return obj

    # -- predicates / accessors --
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly ``c t^k`` with ``c != 0``."""
        return len(self.coeffs) == 1

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def degree(self) -> int:
        """Highest exponent; -1 for zero."""
        return self.high if self.coeffs else -1

    def span(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_polynomial(self) -> bool:
        return self.low >= 0

    def lead(self):
        return self.coeffs[-1]

    def coefficient(self, k: int):
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field(0)

    def _check(self, other):
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        return LaurentPoly.const(self.field, other)

    # -- arithmetic --
    def __add__(self, other):
        other = self._check(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(self.field, out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.field, tuple(self.field(-c) for c in self.coeffs), self.low)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero(self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.field, out, self.low + other.low)

    __rmul__ = __mul__

    def scale(self, c):
        return self * LaurentPoly.const(self.field, c)

    def shift(self, k: int):
        """Multiply by ``t^k``."""
        return LaurentPoly._raw(self.field, self.coeffs, self.low + k)

    def unit_inverse(self):
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        return LaurentPoly.monomial(self.field, self.field.inv(self.coeffs[0]), -self.low)

    def poly_divmod(self, other):
        """Euclidean division in F[t]; both operands must be ordinary polynomials."""
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("poly_divmod needs nonnegative exponents")
        f = self.field
        rem = [0] * self.low + list(self.coeffs) if self.coeffs else []
        div = [0] * other.low + list(other.coeffs)
        db = len(div) - 1
        inv_lead = f.inv(div[-1])
        if len(rem) - 1 < db:
            return LaurentPoly.zero(f), self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = f(rem[k + db] * inv_lead)
            if c:
                quot[k] = c
                for j, d in enumerate(div):
                    rem[k + j] = f(rem[k + j] - c * d)
        return LaurentPoly(f, quot), LaurentPoly(f, rem[:db])

    def divides(self, other) -> bool:
        """Divisibility in the Laurent ring."""
        if self.is_zero():
            return other.is_zero()
        a = self.shift(-self.low)
        b = other.shift(-other.low)
        return b.poly_divmod(a)[1].is_zero()

    def normalized(self):
        """Associate with lowest exponent 0 and leading coefficient 1."""
        if not self.coeffs:
            return self
        inv = self.field.inv(self.coeffs[-1])
        return LaurentPoly(self.field, [c * inv for c in self.coeffs], 0)

    def reciprocal(self):
        """Substitute ``t -> 1/t``."""
        return LaurentPoly._raw(self.field, self.coeffs[::-1], -self.high if self.coeffs else 0)

    def __call__(self, x):
        x = self.field(x)
        return self.field(sum(c * x ** (self.low + i) for i, c in enumerate(self.coeffs)))

    # -- comparison / display --
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return (self.field, self.low, self.coeffs) == (other.field, other.low, other.coeffs)
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self.field}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.low + i
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        return {"lowest_exp": self.low, "coeffs": [self.field.to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field, obj):
        return cls(field, [field.from_json(c) for c in obj["coeffs"]], obj["lowest_exp"])


class LaurentMatrix:
    """Rectangular matrix of :class:`LaurentPoly` over one field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        conv = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, LaurentPoly):
                    if x.field != field:
                        raise FieldMismatch(f"entry over {x.field}, matrix over {field}")
                    r.append(x)
                else:
                    r.append(LaurentPoly.const(field, x))
            conv.append(tuple(r))
        if conv and any(len(r) != len(conv[0]) for r in conv):
            raise DimensionMismatch("ragged matrix")
        self.field = field
        self.rows: Tuple[Tuple[LaurentPoly, ...], ...] = tuple(conv)

    @classmethod
    def identity(cls, field, n):
        one, zero = LaurentPoly.const(field, 1), LaurentPoly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_coefficients(cls, field, table, low=0):
        """Build from a nested list whose entries are coefficient lists."""
        return cls(field, [[LaurentPoly(field, cs, low) for cs in row] for row in table])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = LaurentPoly.zero(self.field)
        out = []
        for i in range(m):
            row = []
            for j in range(n):
                acc = zero
                for x in range(k):
                    a = self.rows[i][x]
                    if a.coeffs:
                        b = other.rows[x][j]
                        if b.coeffs:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(self.field, out)

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def is_diagonal(self) -> bool:
        return all(x.is_zero() for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def diagonal(self) -> List[LaurentPoly]:
        m, n = self.shape
        return [self.rows[i][i] for i in range(min(m, n))]

    def det(self) -> LaurentPoly:
        """Determinant by fraction-free (Bareiss) elimination.

        Entries are first shifted to ordinary polynomials; the shift is undone
        at the end.
        """
        m, n = self.shape
        if m != n:
            raise DimensionMismatch("determinant of a non-square matrix")
        f = self.field
        if n == 0:
            return LaurentPoly.const(f, 1)
        shift = 0
        a = []
        for row in self.rows:
            lows = [x.low for x in row if x.coeffs]
            k = -min(lows) if lows else 0
            shift -= k
            a.append([x.shift(k) for x in row])
        sign = 1
        prev = LaurentPoly.const(f, 1)
        for k in range(n - 1):
            if a[k][k].is_zero():
                for r in range(k + 1, n):
                    if not a[r][k].is_zero():
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return LaurentPoly.zero(f)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    q, r = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).poly_divmod(prev)
                    assert r.is_zero()
                    a[i][j] = q
            prev = a[k][k]
        return a[n - 1][n - 1].scale(sign).shift(shift)

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"LaurentMatrix({self.field}, [{body}])"
