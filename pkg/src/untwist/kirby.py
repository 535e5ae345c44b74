"""Kirby moves on framing/linking matrices.

A :class:`SurgeryPresentation` is a symmetric integer matrix: framings on
the diagonal, linking numbers off it.  Components ``0..n-1`` are the link
being described, ``n..n+k-1`` are surgery curves.  All indices are 0-based.

Geometric facts that a linking matrix cannot see (that a blown-down curve
is really an unknot, that a curve is isotopic to a given one) are recorded
as caller-declared metadata on the moves and never verified.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .errors import (
    DimensionMismatch,
    InvalidPresentation,
    NonUnitFraming,
    NotSurgeryComponent,
    SelfSlide,
    SlideOverLinkComponent,
)
from .seifert import (
    IntMatrix,
    SeifertMatrix,
    as_int_matrix,
    identity,
    matmul,
    parity_normalize,
    symplectic_reduce,
)


@dataclass(frozen=True)
class SurgeryPresentation:
    matrix: IntMatrix
    n: int
    k: int
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        m = self.matrix
        dim = len(m)
        if any(len(r) != dim for r in m):
            raise InvalidPresentation("linking matrix is not square")
        if any(m[i][j] != m[j][i] for i in range(dim) for j in range(i)):
            raise InvalidPresentation("linking matrix is not symmetric")
        if self.n < 0 or self.k < 0 or self.n + self.k != dim:
            raise InvalidPresentation(f"n + k = {self.n + self.k}, dimension {dim}")
        if not self.labels:
            labels = tuple(f"L{i + 1}" for i in range(self.n)) + tuple(f"S{j + 1}" for j in range(self.k))
            object.__setattr__(self, "labels", labels)
        elif len(self.labels) != dim:
            raise InvalidPresentation("one label per component required")

    @classmethod
    def from_rows(cls, rows, n, k=None, labels=()):
        m = as_int_matrix(rows)
        return cls(m, n, len(m) - n if k is None else k, tuple(labels))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def framing(self, i: int) -> int:
        return self.matrix[i][i]

    def linking(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def is_surgery(self, j: int) -> bool:
        return self.n <= j < self.dim

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix], "n": self.n, "k": self.k}


# -- moves ---------------------------------------------------------------------

@dataclass(frozen=True)
class Slide:
    """Slide component ``i`` over surgery component ``j``."""
    i: int
    j: int
    sign: int = 1

    def to_json(self):
        return {"op": "slide", "i": self.i, "j": self.j, "sign": self.sign}


@dataclass(frozen=True)
class BlowDown:
    j: int
    declared_unknot: bool = True

    def to_json(self):
        return {"op": "blow_down", "j": self.j, "declared_unknot": self.declared_unknot}


@dataclass(frozen=True)
class BlowUp:
    eps: int
    linking: Tuple[int, ...] = ()

    def to_json(self):
        return {"op": "blow_up", "eps": self.eps, "linking": list(self.linking)}


@dataclass(frozen=True)
class BandSlide:
    """Slide Seifert-surface basis curve ``curve`` (and its band) over twist curve ``j``."""
    curve: int
    j: int
    sign: int = 1

    def to_json(self):
        return {"op": "band_slide", "curve": self.curve, "j": self.j, "sign": self.sign}


KirbyMove = Union[Slide, BlowDown, BlowUp, BandSlide]


def move_from_json(obj: dict) -> KirbyMove:
    op = obj.get("op")
    if op == "slide":
        return Slide(int(obj["i"]), int(obj["j"]), int(obj.get("sign", 1)))
    if op == "blow_down":
        return BlowDown(int(obj["j"]), bool(obj.get("declared_unknot", True)))
    if op == "blow_up":
        return BlowUp(int(obj["eps"]), tuple(int(x) for x in obj.get("linking", ())))
    if op == "band_slide":
        return BandSlide(int(obj["curve"]), int(obj["j"]), int(obj.get("sign", 1)))
    raise ValueError(f"unknown move {op!r}")


def _check_sign(sign):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def slide_matrix(dim: int, i: int, j: int, sign: int) -> IntMatrix:
    """Unimodular E with ``slide(M) = E^T M E``: the class of i becomes i + sign*j."""
    rows = [list(r) for r in identity(dim)]
    rows[j][i] = sign
    return tuple(tuple(r) for r in rows)


def _congruence_slide(m, i, j, sign):
    # E^T W E for the class change e_i -> e_i + sign * e_j; W need not be symmetric
    rows = [list(r) for r in m]
    for a in range(len(m)):
        if a != i:
            rows[i][a] = m[i][a] + sign * m[j][a]
            rows[a][i] = m[a][i] + sign * m[a][j]
    rows[i][i] = m[i][i] + sign * (m[i][j] + m[j][i]) + m[j][j]
    return tuple(tuple(r) for r in rows)


def slide(p: SurgeryPresentation, i: int, j: int, sign: int = 1) -> SurgeryPresentation:
    """Handle slide of component ``i`` over surgery component ``j``.

    Linking of i with a != i gains ``sign * lk(j, a)``; the framing of i
    becomes ``fr(i) + fr(j) + 2 sign lk(i, j)``.
    """
    _check_sign(sign)
    if not (0 <= i < p.dim and 0 <= j < p.dim):
        raise IndexError(f"component index out of range for dimension {p.dim}")
    if i == j:
        raise SelfSlide(f"cannot slide component {i} over itself")
    if not p.is_surgery(j):
        raise SlideOverLinkComponent(f"component {j} is a link component, not a surgery curve")
    m = p.matrix
    rows = [list(r) for r in m]
    for a in range(p.dim):
        if a != i:
            rows[i][a] = rows[a][i] = m[i][a] + sign * m[j][a]
    rows[i][i] = m[i][i] + m[j][j] + 2 * sign * m[i][j]
    return SurgeryPresentation(tuple(tuple(r) for r in rows), p.n, p.k, p.labels)


def blow_down(p: SurgeryPresentation, j: int, declared_unknot: bool = True) -> SurgeryPresentation:
    """Remove a +-1 framed surgery curve; entries change by ``-eps * lk(a,j) * lk(b,j)``.

    ``declared_unknot`` is the caller's assertion that the curve is an
    unknot; it cannot be checked from the matrix.
    """
    if not (0 <= j < p.dim):
        raise IndexError(f"component index {j} out of range")
    if not p.is_surgery(j):
        raise NotSurgeryComponent(f"component {j} is a link component")
    eps = p.matrix[j][j]
    if eps not in (1, -1):
        raise NonUnitFraming(f"component {j} has framing {eps}, need +1 or -1")
    m = p.matrix
    keep = [a for a in range(p.dim) if a != j]
    rows = tuple(tuple(m[a][b] - eps * m[a][j] * m[b][j] for b in keep) for a in keep)
    labels = tuple(p.labels[a] for a in keep)
    return SurgeryPresentation(rows, p.n, p.k - 1, labels)


def blow_up(p: SurgeryPresentation, eps: int, linking: Sequence[int] = None, label: str = None) -> SurgeryPresentation:
    """Append a +-1 framed unknotted surgery curve with the given linking numbers.

    Existing entries gain ``eps * lk_a * lk_b`` so that blowing the new curve
    down recovers ``p`` exactly.
    """
    _check_sign(eps)
    lam = tuple(linking) if linking is not None else (0,) * p.dim
    if len(lam) != p.dim:
        raise DimensionMismatch(f"linking vector has {len(lam)} entries, need {p.dim}")
    m = p.matrix
    rows = [[m[a][b] + eps * lam[a] * lam[b] for b in range(p.dim)] + [lam[a]] for a in range(p.dim)]
    rows.append(list(lam) + [eps])
    labels = p.labels + (label or f"S{p.k + 1}",)
    return SurgeryPresentation(tuple(tuple(r) for r in rows), p.n, p.k + 1, labels)


def is_null_homologous(p: SurgeryPresentation) -> bool:
    """Every surgery curve has linking number 0 with every link component."""
    return all(p.matrix[i][j] == 0 for i in range(p.n) for j in range(p.n, p.dim))


def apply_move(p: SurgeryPresentation, move: KirbyMove) -> SurgeryPresentation:
    if isinstance(move, Slide):
        return slide(p, move.i, move.j, move.sign)
    if isinstance(move, BlowDown):
        return blow_down(p, move.j, move.declared_unknot)
    if isinstance(move, BlowUp):
        return blow_up(p, move.eps, move.linking)
    raise TypeError(f"{type(move).__name__} does not act on a bare presentation")


# -- traces --------------------------------------------------------------------

@dataclass(frozen=True)
class TraceStep:
    move: KirbyMove
    presentation: SurgeryPresentation
    note: str = ""

    def to_json(self):
        out = {"move": self.move.to_json(), "matrix": [list(r) for r in self.presentation.matrix],
               "n": self.presentation.n, "k": self.presentation.k}
        if self.note:
            out["note"] = self.note
        return out


class MoveTrace:
    """Append-only record of moves and the presentation after each one."""

    def __init__(self, initial: SurgeryPresentation):
        self.initial = initial
        self._steps: List[TraceStep] = []

    @property
    def steps(self) -> Tuple[TraceStep, ...]:
        return tuple(self._steps)

    @property
    def current(self) -> SurgeryPresentation:
        return self._steps[-1].presentation if self._steps else self.initial

    def __len__(self):
        return len(self._steps)

    def apply(self, move: KirbyMove, note: str = "") -> SurgeryPresentation:
        p = apply_move(self.current, move)
        self._steps.append(TraceStep(move, p, note))
        return p

    def verify(self) -> bool:
        """Replay every move from the initial state and compare."""
        p = self.initial
        for step in self._steps:
            p = apply_move(p, step.move)
            if p != step.presentation:
                return False
        return True

    def to_json(self) -> dict:
        return {"initial": self.initial.to_json(), "steps": [s.to_json() for s in self._steps]}

    @classmethod
    def replay(cls, initial: SurgeryPresentation, moves: Sequence[KirbyMove]) -> "MoveTrace":
        trace = cls(initial)
        for mv in moves:
            trace.apply(mv)
        return trace


# -- the Ohyama two-twist construction -------------------------------------------

@dataclass(frozen=True)
class OhyamaTrace:
    f: int
    alpha: int
    trace: MoveTrace
    checkpoints: Tuple[IntMatrix, IntMatrix, IntMatrix]

    @property
    def twist_linkings(self) -> Tuple[int, int]:
        final = self.checkpoints[2]
        return final[0][1], final[0][2]


def ohyama_closed_form(f: int, alpha: int) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """The three framing/linking matrices (order K, S1, S2) written out in closed form."""
    a = alpha
    return (
        ((f + 1, 1, 1), (1, 0, 1), (1, 1, 1)),
        ((f + 2 * a + 1, 1, a + 1), (1, 0, 1), (a + 1, 1, 1)),
        ((f + 2 * a + 1, -a, a + 1), (-a, -1, 0), (a + 1, 0, 1)),
    )


def ohyama_trace(f: int, alpha: int) -> OhyamaTrace:
    """Unknot a knot of framing ``f`` with two twists of opposite sign.

    Blow up a -1 and a +1 curve away from K, slide the -1 curve over the +1
    curve (giving a 0-framed curve S1) and K over the +1 curve S2; then
    slide K over S1 ``alpha`` times (each slide is a crossing change or a
    kink changing the framing of K by 2); finally slide S1 over S2 with sign
    -1 to split the surgery curves.

    The split surgery curves end with framings -1 and +1 (opposite signs),
    not -1 and -1 as the construction is sometimes summarized.
    """
    p = SurgeryPresentation(((f,),), 1, 0, ("K",))
    trace = MoveTrace(p)
    trace.apply(BlowUp(-1, (0,)), "blow up -1 curve")
    trace.apply(BlowUp(1, (0, 0)), "blow up +1 curve")
    trace.apply(Slide(1, 2, 1), "-1 curve over +1 curve: S1 now 0-framed")
    trace.apply(Slide(0, 2, 1), "K over +1 curve")
    first = trace.current.matrix
    s = 1 if alpha >= 0 else -1
    for _ in range(abs(alpha)):
        trace.apply(Slide(0, 1, s), "K over 0-framed S1")
    second = trace.current.matrix
    trace.apply(Slide(1, 2, -1), "S1 over S2: split the surgery curves")
    third = trace.current.matrix
    expected = ohyama_closed_form(f, alpha)
    assert (first, second, third) == expected
    lk1, lk2 = third[0][1], third[0][2]
    assert abs(abs(lk1) - abs(lk2)) == 1
    return OhyamaTrace(f, alpha, trace, (first, second, third))


# -- null-homologous unknotting of a Seifert surface -----------------------------

@dataclass(frozen=True)
class BandState:
    """Seifert pairing on surface curves, their linking with twist curves, and the presentation."""
    seifert: IntMatrix
    band_linking: IntMatrix  # rows: basis curves, columns: twist curves
    presentation: SurgeryPresentation

    def combined(self) -> IntMatrix:
        """Pairing on [basis curves..., twist curves...]; symmetric off the Seifert block."""
        v, lk, m = self.seifert, self.band_linking, self.presentation.matrix
        n0 = self.presentation.n
        twists = range(n0, self.presentation.dim)
        top = [list(v[x]) + list(lk[x]) for x in range(len(v))]
        bottom = [[lk[x][a - n0] for x in range(len(v))] + [m[a][b] for b in twists] for a in twists]
        return tuple(tuple(r) for r in top + bottom)

    def to_json(self):
        return {"seifert": [list(r) for r in self.seifert],
                "band_linking": [list(r) for r in self.band_linking],
                **self.presentation.to_json()}


def apply_band_move(state: BandState, move: KirbyMove) -> BandState:
    """Apply a move to the combined state.

    Sliding a band over a twist curve drags both boundary strands of the
    band, which run in opposite directions, so the linking of K with every
    twist curve is unchanged.
    """
    p = state.presentation
    g2 = len(state.seifert)
    n0 = p.n
    if isinstance(move, BlowUp):
        if any(move.linking):
            raise ValueError("twist curves are introduced unlinked")
        new_p = blow_up(p, move.eps, move.linking)
        lk = tuple(r + (0,) for r in state.band_linking)
        return BandState(state.seifert, lk, new_p)
    if isinstance(move, Slide):
        new_p = slide(p, move.i, move.j, move.sign)
        if move.i < n0:
            return BandState(state.seifert, state.band_linking, new_p)
        w = _congruence_slide(state.combined(), g2 + move.i - n0, g2 + move.j - n0, move.sign)
        return BandState(state.seifert, tuple(r[g2:] for r in w[:g2]), new_p)
    if isinstance(move, BandSlide):
        _check_sign(move.sign)
        if not (0 <= move.curve < g2):
            raise IndexError(f"basis curve {move.curve} out of range")
        if not p.is_surgery(move.j):
            raise SlideOverLinkComponent(f"component {move.j} is not a twist curve")
        w = _congruence_slide(state.combined(), move.curve, g2 + move.j - n0, move.sign)
        return BandState(tuple(r[:g2] for r in w[:g2]), tuple(r[g2:] for r in w[:g2]), p)
    raise TypeError(f"{type(move).__name__} is not used on band states")


@dataclass(frozen=True)
class BandStep:
    move: KirbyMove
    state: BandState
    note: str = ""

    def to_json(self):
        out = {"move": self.move.to_json(), **self.state.to_json()}
        if self.note:
            out["note"] = self.note
        return out


class UnknottingTrace:
    """Append-only trace of the band-state construction."""

    def __init__(self, seifert: SeifertMatrix, basis: IntMatrix, start: BandState):
        self.seifert = seifert
        self.basis = basis
        self.initial = start
        self._steps: List[BandStep] = []

    @property
    def steps(self) -> Tuple[BandStep, ...]:
        return tuple(self._steps)

    @property
    def current(self) -> BandState:
        return self._steps[-1].state if self._steps else self.initial

    def __len__(self):
        return len(self._steps)

    def apply(self, move: KirbyMove, note: str = "") -> BandState:
        st = apply_band_move(self.current, move)
        self._steps.append(BandStep(move, st, note))
        return st

    @property
    def twist_count(self) -> int:
        return self.current.presentation.k

    def verify(self) -> bool:
        st = self.initial
        for step in self._steps:
            st = apply_band_move(st, step.move)
            if st != step.state:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "seifert": self.seifert.to_lists(),
            "basis_change": [list(r) for r in self.basis],
            "initial": self.initial.to_json(),
            "steps": [s.to_json() for s in self._steps],
            "final_seifert": [list(r) for r in self.current.seifert],
            "twist_count": self.twist_count,
            "null_homologous": is_null_homologous(self.current.presentation),
        }


def unknotting_trace(v: SeifertMatrix) -> UnknottingTrace:
    """Matrix shadow of unknotting a genus-g Seifert surface with 2g null-homologous twists.

    After moving to a symplectic basis with odd ``V(a_i, a_i)``, each pair
    gets a -1 and a +1 twist curve encircling the ``a_i`` band.  Sliding the
    -1 curve over the +1 curve makes it a 0-framed meridian ``m_i`` of the
    band, and sliding the ``a_i`` band over the +1 curve adds 1 to its
    framing.  Each slide of a curve over ``m_i`` is a crossing change
    with ``a_i`` (one off-diagonal pair moves by 1); sliding ``a_i`` itself
    over ``m_i`` moves its framing by 2.  The a-rows are cleared in
    row-major order, then the framings, and finally each ``m_i`` is slid
    back off its partner so the twist curves form a +-1 framed unlink.
    """
    vs, u1 = symplectic_reduce(v)
    vn, u2 = parity_normalize(vs)
    basis = matmul(u1.matrix, u2.matrix)
    g = v.genus
    start = BandState(vn.entries, tuple(() for _ in range(2 * g)),
                      SurgeryPresentation(((0,),), 1, 0, ("K",)))
    tr = UnknottingTrace(v, basis, start)

    def meridian(i):
        return 1 + 2 * i

    def partner(i):
        return 2 + 2 * i

    for i in range(g):
        tr.apply(BlowUp(-1, (0,) * tr.current.presentation.dim), f"twist curve for a{i + 1} (-1)")
        tr.apply(BlowUp(1, (0,) * tr.current.presentation.dim), f"twist curve for a{i + 1} (+1)")
        tr.apply(Slide(meridian(i), partner(i), 1), f"-1 curve over +1 curve: 0-framed meridian of a{i + 1}")
        tr.apply(BandSlide(2 * i, partner(i), 1), f"a{i + 1} band over +1 curve")

    for i in range(g):
        a = 2 * i
        for x in range(2 * g):
            if x == a:
                continue
            e = tr.current.seifert[a][x]
            s = -1 if e > 0 else 1
            for _ in range(abs(e)):
                tr.apply(BandSlide(x, meridian(i), s), f"crossing change a{i + 1} / curve {x}")
    for i in range(g):
        a = 2 * i
        e = tr.current.seifert[a][a]
        assert e % 2 == 0
        s = -1 if e > 0 else 1
        for _ in range(abs(e) // 2):
            tr.apply(BandSlide(a, meridian(i), s), f"kink in a{i + 1}: framing by 2")
    for i in range(g):
        tr.apply(Slide(meridian(i), partner(i), -1), f"split twist curves of a{i + 1}")

    check_unknotting(tr)
    return tr


def check_unknotting(tr: UnknottingTrace) -> None:
    """Assert the postconditions of :func:`unknotting_trace`."""
    g = tr.seifert.genus
    states = [tr.initial] + [s.state for s in tr.steps]
    assert all(is_null_homologous(st.presentation) for st in states), "twist curve links K"
    final = tr.current
    v = final.seifert
    for i in range(g):
        a = 2 * i
        assert all(v[a][x] == 0 for x in range(2 * g)), f"row a{i + 1} not cleared"
        for j in range(g):
            assert v[2 * j + 1][a] == (-1 if i == j else 0), f"V[b{j + 1}, a{i + 1}]"
    assert final.presentation.k == 2 * g
    m = final.presentation.matrix
    for a in range(1, final.presentation.dim):
        for b in range(1, final.presentation.dim):
            assert (m[a][b] in (1, -1)) if a == b else m[a][b] == 0, "twist curves not a +-1 unlink"
