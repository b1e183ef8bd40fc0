import itertools
import random

import pytest

from pvform.gf2 import Gf2Matrix, gf2_kernel, gf2_rank, gf2_solve, in_span, span


def vec(bits):
    return sum(1 << i for i, b in enumerate(bits) if b)


def test_identity_system():
    a = Gf2Matrix.identity(3)
    sol = gf2_solve(a, 0b001)
    assert sol.particular == 0b001
    assert sol.kernel_basis == ()
    assert sol.rank == 3


def test_inconsistent_system():
    a = Gf2Matrix.zero(2, 2)
    assert gf2_solve(a, 0b01) is None


def test_one_equation():
    a = Gf2Matrix.from_entries([[1, 1]])
    sol = gf2_solve(a, 0b1)
    assert sol.rank == 1
    assert a.mul_vector(sol.particular) == 1
    assert sol.kernel_basis == (0b11,)


def test_rejects_bad_rhs():
    with pytest.raises(ValueError):
        gf2_solve(Gf2Matrix.identity(2), 0b100)


@pytest.mark.parametrize("seed", range(20))
def test_solution_and_kernel_properties(seed):
    rng = random.Random(seed)
    m, n = rng.randrange(1, 6), rng.randrange(1, 6)
    a = Gf2Matrix(tuple(rng.randrange(1 << n) for _ in range(m)), n)
    b = rng.randrange(1 << m)
    sol = gf2_solve(a, b)
    brute = [x for x in range(1 << n) if a.mul_vector(x) == b]
    if sol is None:
        assert not brute
        return
    assert a.mul_vector(sol.particular) == b
    for k in sol.kernel_basis:
        assert a.mul_vector(k) == 0
    assert len(sol.kernel_basis) == n - sol.rank
    # particular + kernel span = all solutions
    got = {sol.particular ^ s for s in span(sol.kernel_basis, n)}
    assert got == set(brute)


def test_rank_and_kernel_of_symmetric():
    a = Gf2Matrix.from_entries([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    assert gf2_rank(a) == 2
    assert gf2_kernel(a) == (0b100,)


def test_in_span():
    assert in_span([0b011, 0b101], 0b110, 3)
    assert not in_span([0b011], 0b001, 3)


def test_transpose_roundtrip():
    a = Gf2Matrix.from_entries([[1, 0, 1], [0, 1, 1]])
    assert a.transpose().transpose() == a
