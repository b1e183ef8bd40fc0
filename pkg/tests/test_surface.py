import pytest

from pvform.quadspace import brown, q_eval
from pvform.surface import (
    EMPTY,
    FixedPointData,
    MembraneData,
    SurfaceUnion,
    achievable_brown_set,
    euler_char,
    homology_model,
    kalinin_class,
    parse_components,
    pontrjagin_square_surface,
    refinements,
    render_components,
    w1_value,
)

P = parse_components


def test_parse_examples():
    assert euler_char(P("4V1+2S")) == 8
    assert [c.token for c in P("S1+V2+4S").components] == ["V2", "S1", "S", "S", "S", "S"]
    with pytest.raises(ValueError):
        P("3X")
    with pytest.raises(ValueError):
        P("0V1")
    with pytest.raises(ValueError):
        P("V")


def test_parse_is_order_and_space_insensitive():
    assert P(" 2S + V2+ S1 ") == P("S1+V2+2S")


def test_render_roundtrip():
    for text in ("4V1+2S", "V2+2V1+3S", "S1+V2+4S", "V10", "0"):
        u = P(text)
        assert P(render_components(u)) == u


def test_euler_characteristics():
    assert euler_char(P("V10")) == -8
    assert euler_char(EMPTY) == 0
    assert euler_char(P("S1")) == 0


def test_homology_ranks():
    assert homology_model(P("S")).rank == 0
    h = homology_model(P("S1"))
    assert h.rank == 2 and h.w1_dual == 0
    assert h.bilinear.rows == (0b10, 0b01)
    h = homology_model(P("V3"))
    assert h.rank == 3 and h.w1_dual == 0b111
    assert h.bilinear.rows == (1, 2, 4)


def test_w1_dual_is_characteristic():
    for text in ("V1", "V2+S1", "2V2", "V3+2V1+S"):
        h = homology_model(P(text))
        for x in range(1 << h.rank):
            self_pair = (h.bilinear.mul_vector(x) & x).bit_count() & 1
            w_pair = (h.bilinear.mul_vector(h.w1_dual) & x).bit_count() & 1
            assert self_pair == w_pair


def test_refinement_counts():
    assert len(list(refinements(P("V1")))) == 2
    assert sorted(s.q_basis[0] for s in refinements(P("V1"))) == [1, 3]
    assert len(list(refinements(P("S")))) == 1
    assert len(list(refinements(P("S1")))) == 4


def test_achievable_sets():
    assert achievable_brown_set(P("V1")) == {1, 7}
    assert achievable_brown_set(P("V2")) == {0, 2, 6}
    assert achievable_brown_set(P("S1")) == {0, 4}
    assert achievable_brown_set(P("2S")) == {0}
    assert achievable_brown_set(EMPTY) == {0}


@pytest.mark.parametrize("p", range(1, 9))
def test_achievable_crosscap_formula(p):
    assert achievable_brown_set(P(f"V{p}")) == {(p - 2 * k) % 8 for k in range(p + 1)}


def test_achievable_closed_under_negation():
    for text in ("V1", "V2", "V3+V1", "S1+V2", "2V2+S"):
        got = achievable_brown_set(P(text))
        assert got == {(-v) % 8 for v in got}


def test_brown_vs_w1_characteristic():
    for text in ("V1", "V2", "2V1", "V2+V1", "S1+V1"):
        u = P(text)
        h = homology_model(u)
        for s in refinements(u):
            b = brown(s)
            assert b % 4 == q_eval(s, h.w1_dual) % 4


def test_w1_value_examples():
    u = P("V2")
    h = homology_model(u)
    spaces = {s.q_basis: s for s in refinements(u)}
    assert w1_value(spaces[(1, 1)], h, 0) == 2
    assert w1_value(spaces[(1, 3)], h, 0) == 0
    hv1 = homology_model(P("V1"))
    one = next(s for s in refinements(P("V1")) if s.q_basis == (1,))
    assert w1_value(one, hv1, 0) == 1
    with pytest.raises(ValueError):
        w1_value(next(iter(refinements(P("S")))), homology_model(P("S")), 0)


def test_membrane_square_examples():
    assert pontrjagin_square_surface(MembraneData(0, 0, 2)) == 0
    assert pontrjagin_square_surface(MembraneData(2, 0, 0)) == 2
    assert pontrjagin_square_surface(MembraneData(-1, 1, 1)) == 3


def test_kalinin_class_examples():
    assert kalinin_class(FixedPointData(1, 0, 0)).one_cycles == ("[l1]",)
    k = kalinin_class(FixedPointData(0, 1, 1))
    assert set(k.one_cycles) == {"[n1]"}
    assert set(k.zero_classes) == {"[P1]", "<n1>"}
    empty = kalinin_class(FixedPointData(0, 0, 0))
    assert empty.one_cycles == () and empty.zero_classes == ()


def test_rank_guard():
    with pytest.raises(ValueError):
        list(refinements(P("V25")))
