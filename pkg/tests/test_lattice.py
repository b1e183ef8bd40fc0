import random

import pytest

from pvform.lattice import (
    UnimodularLattice,
    brown_signature_check,
    direct_sum,
    e8,
    hyperbolic_plane,
    minus_one,
    plus_one,
    reduce_mod2,
    signature,
)
from pvform.quadspace import brown


def test_signature_examples():
    assert signature(hyperbolic_plane()) == 0
    assert signature(e8()) == -8
    assert signature(direct_sum(plus_one(), minus_one())) == 0


def test_rejects_non_unimodular():
    with pytest.raises(ValueError):
        UnimodularLattice(((2,),))
    with pytest.raises(ValueError):
        UnimodularLattice(((1, 1), (0, 1)))


def test_reduce_mod2_examples():
    s = reduce_mod2(plus_one())
    assert s.dim == 1 and s.q_basis == (1,)
    u = reduce_mod2(hyperbolic_plane())
    assert u.q_basis == (0, 0) and u.bilinear.rows == (0b10, 0b01)
    v = reduce_mod2(e8())
    assert all(q % 2 == 0 for q in v.q_basis)
    assert brown(v) == 0


def test_check_examples():
    assert brown_signature_check(direct_sum(e8(), hyperbolic_plane())) == (0, 0, True)
    assert brown_signature_check(direct_sum(*[plus_one()] * 3)) == (3, 3, True)
    assert brown_signature_check(minus_one()) == (7, 7, True)


def test_signature_additive_and_bounded():
    rng = random.Random(3)
    pool = [e8(), hyperbolic_plane(), plus_one(), minus_one()]
    for _ in range(25):
        parts = [rng.choice(pool) for _ in range(rng.randrange(1, 4))]
        lat = direct_sum(*parts)
        assert signature(lat) == sum(signature(p) for p in parts)
        assert abs(signature(lat)) <= lat.rank


def test_all_block_sums_up_to_rank_10():
    for a in range(2):
        for b in range(6):
            for c in range(11):
                for d in range(11):
                    r = 8 * a + 2 * b + c + d
                    if not 0 < r <= 10:
                        continue
                    parts = (
                        [e8()] * a
                        + [hyperbolic_plane()] * b
                        + [plus_one()] * c
                        + [minus_one()] * d
                    )
                    _, _, ok = brown_signature_check(direct_sum(*parts))
                    assert ok, (a, b, c, d)


def test_even_lattice_even_values():
    v = reduce_mod2(direct_sum(e8(), hyperbolic_plane()))
    assert all(q % 2 == 0 for q in v.q_basis)
