import random

import pytest

from helpers import int_matmul, int_transpose
from untwist.bounds import lower_bound_twists, witness_family
from untwist.errors import (
    DimensionMismatch,
    InvalidPresentation,
    NonUnitFraming,
    NotSurgeryComponent,
    SelfSlide,
    SlideOverLinkComponent,
)
from untwist.generators import random_seifert
from untwist.kirby import (
    BandSlide,
    BlowDown,
    BlowUp,
    MoveTrace,
    Slide,
    SurgeryPresentation,
    blow_down,
    blow_up,
    is_null_homologous,
    move_from_json,
    ohyama_closed_form,
    ohyama_trace,
    slide,
    slide_matrix,
    unknotting_trace,
)
from untwist.laurent import PrimeField
from untwist.seifert import det, validate_seifert


def pres(rows, n):
    return SurgeryPresentation.from_rows(rows, n)


def random_presentation(rng, n, k, bound=3):
    dim = n + k
    m = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            m[i][j] = m[j][i] = rng.randint(-bound, bound)
    return pres(m, n)


def test_presentation_validation():
    with pytest.raises(InvalidPresentation):
        pres([[0, 1], [2, 0]], 1)
    with pytest.raises(InvalidPresentation):
        SurgeryPresentation(((0,),), 1, 1)
    assert pres([[0, 1], [1, 1]], 1).labels == ("L1", "S1")


@pytest.mark.parametrize("f", [-2, 0, 5])
@pytest.mark.parametrize("alpha", [0, 1, 4])
def test_slides_reproduce_unknotting_matrices(f, alpha):
    p = pres([[f + 1, 1, 1], [1, 0, 1], [1, 1, 1]], 1)
    for _ in range(alpha):
        p = slide(p, 0, 1, 1)
    assert p.matrix == ((f + 2 * alpha + 1, 1, alpha + 1), (1, 0, 1), (alpha + 1, 1, 1))
    p = slide(p, 1, 2, -1)
    assert p.matrix == ((f + 2 * alpha + 1, -alpha, alpha + 1), (-alpha, -1, 0), (alpha + 1, 0, 1))


def test_slide_inverse(rng):
    for _ in range(50):
        p = random_presentation(rng, 2, 2)
        i, j = rng.randrange(4), rng.choice([2, 3])
        if i == j:
            continue
        assert slide(slide(p, i, j, 1), i, j, -1) == p


def test_slide_errors():
    p = pres([[0, 1], [1, 1]], 1)
    with pytest.raises(SelfSlide):
        slide(p, 1, 1)
    with pytest.raises(SlideOverLinkComponent):
        slide(p, 1, 0)


def test_slide_is_explicit_congruence(rng):
    for _ in range(100):
        p = random_presentation(rng, rng.randint(1, 3), rng.randint(1, 3))
        j = rng.randrange(p.n, p.dim)
        i = rng.choice([x for x in range(p.dim) if x != j])
        s = rng.choice([1, -1])
        e = [list(r) for r in slide_matrix(p.dim, i, j, s)]
        expected = int_matmul(int_matmul(int_transpose(e), [list(r) for r in p.matrix]), e)
        out = slide(p, i, j, s)
        assert [list(r) for r in out.matrix] == expected
        assert det(out.matrix) == det(p.matrix)


def test_slide_over_zero_framed_meridian_changes_framing_by_two(rng):
    for _ in range(50):
        p = random_presentation(rng, 2, 2)
        rows = [list(r) for r in p.matrix]
        rows[3][3] = 0
        rows[0][3] = rows[3][0] = 1
        p = pres(rows, 2)
        for s in (1, -1):
            q = slide(p, 0, 3, s)
            assert q.framing(0) == p.framing(0) + 2 * s
            assert all(q.framing(a) == p.framing(a) for a in range(1, 4))


def test_blow_down_examples():
    assert blow_down(pres([[0, 2], [2, 1]], 1), 1).matrix == ((-4,),)
    assert blow_down(pres([[0, 2], [2, -1]], 1), 1).matrix == ((4,),)


def test_blow_down_errors():
    with pytest.raises(NonUnitFraming):
        blow_down(pres([[0, 2], [2, 3]], 1), 1)
    with pytest.raises(NotSurgeryComponent):
        blow_down(pres([[1, 2], [2, 1]], 1), 0)


def test_blow_up_errors():
    with pytest.raises(DimensionMismatch):
        blow_up(pres([[0]], 1), 1, [1, 2])


def test_blow_up_unlinked():
    p = pres([[3, 1], [1, -1]], 1)
    q = blow_up(p, 1)
    assert q.matrix == ((3, 1, 0), (1, -1, 0), (0, 0, 1))
    assert q.k == 2


def test_two_blow_ups_give_setup():
    p = blow_up(blow_up(pres([[5]], 1), -1, [0]), 1, [0, 0])
    assert p.matrix == ((5, 0, 0), (0, -1, 0), (0, 0, 1))


def test_blow_up_down_round_trip(rng):
    for _ in range(100):
        p = random_presentation(rng, rng.randint(1, 3), rng.randint(0, 2))
        lam = [rng.randint(-4, 4) for _ in range(p.dim)]
        eps = rng.choice([1, -1])
        assert blow_down(blow_up(p, eps, lam), p.dim) == p


def test_blow_down_multiplies_det_by_eps(rng):
    for _ in range(100):
        p = random_presentation(rng, 2, 2)
        rows = [list(r) for r in p.matrix]
        eps = rng.choice([1, -1])
        rows[3][3] = eps
        p = pres(rows, 2)
        assert det(blow_down(p, 3).matrix) == eps * det(p.matrix)


def test_null_homologous():
    assert is_null_homologous(pres([[1, 0, 0], [0, 2, 3], [0, 3, -1]], 1))
    final = ohyama_closed_form(0, 1)[2]
    assert not is_null_homologous(SurgeryPresentation(final, 1, 2))


def test_ohyama_zero():
    res = ohyama_trace(0, 0)
    assert res.checkpoints == (
        ((1, 1, 1), (1, 0, 1), (1, 1, 1)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 1)),
        ((1, 0, 1), (0, -1, 0), (1, 0, 1)),
    )
    assert res.trace.verify()


def test_ohyama_f2_alpha3():
    assert ohyama_trace(2, 3).checkpoints[2] == ((9, -3, 4), (-3, -1, 0), (4, 0, 1))


@pytest.mark.parametrize("alpha", range(-5, 6))
def test_ohyama_linkings_differ_by_one(alpha):
    lk1, lk2 = ohyama_trace(1, alpha).twist_linkings
    assert abs(abs(lk1) - abs(lk2)) == 1
    assert (abs(lk1), abs(lk2)) == (abs(alpha), abs(alpha + 1))


def test_ohyama_parity_of_final_framing():
    # framing f' of K after unknotting satisfies f + f' odd
    for f in range(-3, 4):
        for alpha in range(-3, 4):
            final = ohyama_trace(f, alpha).checkpoints[2]
            assert (f + final[0][0]) % 2 == 1


def test_trace_replay_and_json():
    t = MoveTrace.replay(pres([[0]], 1), [BlowUp(1, (2,)), Slide(0, 1, -1), BlowDown(1)])
    assert t.verify()
    moves = [move_from_json(s.to_json()["move"]) for s in t.steps]
    assert MoveTrace.replay(t.initial, moves).steps == t.steps


def test_unknotting_empty():
    tr = unknotting_trace(validate_seifert([]))
    assert len(tr) == 0 and tr.twist_count == 0


def test_unknotting_gk1_example():
    tr = unknotting_trace(validate_seifert([[0, 1], [2, 0]]))
    assert tr.twist_count == 2
    assert tr.current.seifert[0] == (0, 0)
    assert tr.current.seifert[1][0] == -1
    assert tr.verify()


def test_unknotting_witness_matches_lower_bound():
    w = witness_family(2)
    tr = unknotting_trace(w)
    assert tr.twist_count == 4 == lower_bound_twists(w, {PrimeField(3)})


def test_unknotting_steps_are_local(rng):
    # every band slide over a meridian moves exactly one symmetric pair by 1, or a framing by 2
    for _ in range(20):
        tr = unknotting_trace(random_seifert(rng, rng.randint(1, 3)))
        prev = tr.initial
        started = False
        for step in tr.steps:
            if isinstance(step.move, BandSlide) and step.move.j % 2 == 1:
                started = True
                a, b = prev.seifert, step.state.seifert
                diff = {(x, y): b[x][y] - a[x][y] for x in range(len(a)) for y in range(len(a)) if b[x][y] != a[x][y]}
                c = step.move.curve
                meridian_of = 2 * ((step.move.j - 1) // 2)
                if c == meridian_of:
                    assert diff == {(c, c): 2 * step.move.sign}
                else:
                    assert diff == {(meridian_of, c): step.move.sign, (c, meridian_of): step.move.sign}
            assert is_null_homologous(step.state.presentation)
            prev = step.state
        assert started


def test_unknotting_random_postconditions():
    rng = random.Random(5)
    for _ in range(50):
        v = random_seifert(rng, rng.randint(0, 3))
        tr = unknotting_trace(v)  # raises on any failed postcondition
        assert tr.twist_count == 2 * v.genus
        assert tr.verify()
