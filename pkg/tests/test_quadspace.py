import random

import pytest

from pvform.gf2 import Gf2Matrix
from pvform.quadspace import (
    QuadraticSpace,
    all_symmetric_forms,
    brown,
    brown_by_decomposition,
    characteristic_elements,
    direct_sum,
    gauss_profile,
    informative_subspace_check,
    null_cobordant_witness,
    q_eval,
    radical_and_informative,
    refinements_of_form,
    shift,
)


def diag(*qs):
    n = len(qs)
    return QuadraticSpace(n, Gf2Matrix.identity(n), tuple(qs))


def sympl(qa, qb):
    return QuadraticSpace(2, Gf2Matrix.from_entries([[0, 1], [1, 0]]), (qa, qb))


def test_parity_invariant_enforced():
    with pytest.raises(ValueError):
        diag(2)
    with pytest.raises(ValueError):
        sympl(1, 0)


def test_q_eval_examples():
    assert q_eval(diag(1, 1), 0) == 0
    assert q_eval(diag(1, 1), 0b11) == 2
    assert q_eval(sympl(0, 0), 0b11) == 2


def test_radical_and_informative():
    assert radical_and_informative(sympl(0, 0)) == ((), True)
    zero1 = QuadraticSpace(1, Gf2Matrix.from_entries([[0]]), (0,))
    assert radical_and_informative(zero1) == ((1,), True)
    bad = QuadraticSpace(1, Gf2Matrix.from_entries([[0]]), (2,))
    assert radical_and_informative(bad) == ((1,), False)


def test_brown_examples():
    empty = QuadraticSpace(0, Gf2Matrix((), 0), ())
    assert brown(empty) == 0
    assert brown(diag(1)) == 1
    assert brown(sympl(2, 2)) == 4
    assert brown(diag(1, 1)) == 2
    assert brown(QuadraticSpace(1, Gf2Matrix.from_entries([[0]]), (2,))) is None


def test_shift_examples():
    s = sympl(0, 0)
    assert shift(s, 0) == s
    shifted = shift(s, 0b01)
    assert shifted.q_basis == (0, 2)
    assert brown(shifted) == 0
    assert brown(shift(diag(1), 1)) == 7


def test_direct_sum_examples():
    a = diag(1)
    empty = QuadraticSpace(0, Gf2Matrix((), 0), ())
    assert direct_sum(a, empty) == a
    assert brown(direct_sum(diag(1), diag(1))) == 2
    assert brown(direct_sum(diag(1), diag(3))) == 0


def test_characteristic_elements_examples():
    assert characteristic_elements(diag(1, 1, 1)) == [0b111]
    assert characteristic_elements(sympl(0, 0)) == [0]
    free = QuadraticSpace(1, Gf2Matrix.from_entries([[0]]), (0,))
    assert characteristic_elements(free) == [0, 1]


def test_null_cobordant_witness_examples():
    w = null_cobordant_witness(sympl(0, 0))
    assert w is not None and all(q_eval(sympl(0, 0), x) == 0 for x in w)
    w = null_cobordant_witness(diag(1, 3))
    assert w == (0b11,)
    assert null_cobordant_witness(diag(1)) is None
    with pytest.raises(ValueError):
        null_cobordant_witness(QuadraticSpace(1, Gf2Matrix.from_entries([[0]]), (2,)))


def test_informative_subspace_examples():
    s = sympl(0, 0)
    assert informative_subspace_check(s, (0b01,)) == (True, 0)
    assert informative_subspace_check(diag(1, 1), (0b01,)) == (False, None)
    full = informative_subspace_check(diag(1, 1), (0b01, 0b10))
    assert full == (True, 2)


def _random_space(rng, dim):
    rows = [0] * dim
    for i in range(dim):
        for j in range(i, dim):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    bil = Gf2Matrix(tuple(rows), dim)
    qb = tuple((bil.entry(i, i) + 2 * rng.randrange(2)) % 4 for i in range(dim))
    return QuadraticSpace(dim, bil, qb)


def test_exhaustive_laws_small_dims():
    for dim in range(4):
        for form in all_symmetric_forms(dim):
            for s in refinements_of_form(form):
                b = brown(s)
                assert b == brown_by_decomposition(s)
                radical, informative = radical_and_informative(s)
                assert (b is not None) == informative
                if not informative:
                    continue
                assert b % 2 == (dim - len(radical)) % 2
                for u in characteristic_elements(s):
                    assert b % 4 == q_eval(s, u) % 4
                profile = gauss_profile(s)
                assert profile.magnitude_squared() == 1 << (dim + len(radical))
                assert (null_cobordant_witness(s) is not None) == (b == 0)


@pytest.mark.parametrize("seed", range(30))
def test_random_shift_and_additivity(seed):
    rng = random.Random(seed)
    a = _random_space(rng, rng.randrange(1, 7))
    b = _random_space(rng, rng.randrange(0, 5))
    ba, bb = brown(a), brown(b)
    if ba is not None:
        v = rng.randrange(1 << a.dim)
        assert brown(shift(a, v)) == (ba - 2 * q_eval(a, v)) % 8
    if ba is not None and bb is not None:
        assert brown(direct_sum(a, b)) == (ba + bb) % 8


def test_q_eval_dimension_check():
    with pytest.raises(ValueError):
        q_eval(diag(1), 0b10)
