"""Upper and lower bounds on the null-homologous untwisting number.

Lower bound: a knot unknotted by k null-homologous twists has Alexander
module of rank at most k over every field, so the largest rank over the
requested fields bounds k from below.  Upper bound: twice the genus of the
presented Seifert surface.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from .alexander import alexander_polynomial, module_rank
from .laurent import Field, LaurentPoly, field_from_name
from .seifert import SeifertMatrix, connected_sum, validate_seifert

WITNESS_BLOCK = ((0, 1), (2, 0))


def normalize_fields(fields: Iterable) -> Tuple[Field, ...]:
    """Coerce names like ``"F3"``/``"Q"`` to fields; dedupe and sort (primes first)."""
    out = {f if not isinstance(f, (str, int)) else field_from_name(str(f)) for f in fields}
    return tuple(sorted(out, key=lambda f: f.sort_key()))


def lower_bound_twists(v: SeifertMatrix, fields: Iterable) -> int:
    fields = normalize_fields(fields)
    return max((module_rank(v, f)[1] for f in fields), default=0)


def upper_bound_twists(v: SeifertMatrix) -> int:
    return 2 * v.genus


def witness_family(g: int) -> SeifertMatrix:
    """Connected sum of ``g`` copies of the genus-one knot with Seifert matrix [[0,1],[2,0]]."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    v = validate_seifert([], name=f"{g}K")
    block = validate_seifert(WITNESS_BLOCK)
    for _ in range(g):
        v = connected_sum(v, block)
    return SeifertMatrix(v.entries, f"{g}K")


@dataclass(frozen=True)
class BoundsReport:
    genus: int
    alexander: LaurentPoly
    ranks: Dict[Field, int]
    lower_bound: int
    upper_bound: int

    @property
    def tight(self) -> bool:
        return self.lower_bound == self.upper_bound

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "alexander": self.alexander.to_json(),
            "ranks": {f.name: r for f, r in self.ranks.items()},
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "upper_bound_scope": "presented surface",
            "tight": self.tight,
        }


def bounds_report(v: SeifertMatrix, fields: Iterable) -> BoundsReport:
    fields = normalize_fields(fields)
    ranks = {f: module_rank(v, f)[1] for f in fields}
    lower = max(ranks.values(), default=0)
    upper = upper_bound_twists(v)
    # Both bounds are theorems about the same knot; disagreement is a bug.
    assert lower <= upper, (lower, upper)
    return BoundsReport(v.genus, alexander_polynomial(v), ranks, lower, upper)
