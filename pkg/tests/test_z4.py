import itertools
import random

import pytest

from pvform.z4 import Parity, Z4Matrix, z4_solution_space, z4_solve_parity

O, F = Parity.ODD, Parity.FREE


def brute_solutions(a, b, mask):
    out = []
    for x in itertools.product(range(4), repeat=a.cols):
        if any(p is O and v % 2 == 0 for p, v in zip(mask, x)):
            continue
        if a.mul_vector(x) == tuple(b):
            out.append(x)
    return out


def test_sum_zero_both_odd():
    a = Z4Matrix.from_entries([[1, 1]])
    x = z4_solve_parity(a, [0], (O, O))
    assert x in ((1, 3), (3, 1))


def test_double_is_never_odd():
    a = Z4Matrix.from_entries([[2]])
    assert z4_solve_parity(a, [1], (F,)) is None


def test_unconstrained_odd_unknown():
    a = Z4Matrix((), 1)
    assert z4_solve_parity(a, [], (O,)) in ((1,), (3,))


def test_dimension_mismatch():
    a = Z4Matrix.from_entries([[1, 1]])
    with pytest.raises(ValueError):
        z4_solve_parity(a, [0], (O,))
    with pytest.raises(ValueError):
        z4_solve_parity(a, [0, 0], (O, O))


def test_solution_space_examples():
    a = Z4Matrix.from_entries([[1, 1]])
    x, gens = z4_solution_space(a, [0], (O, O))
    assert x in ((1, 3), (3, 1))
    assert gens == [(2, 2)]

    eye = Z4Matrix.from_entries([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    x, gens = z4_solution_space(eye, [0, 0, 0], (F, F, F))
    assert x == (0, 0, 0)
    assert gens == []

    zero = Z4Matrix.from_entries([[0]])
    x, gens = z4_solution_space(zero, [0], (F,))
    assert x == (0,)
    assert gens == [(1,)]


def _span(gens, n):
    out = {tuple([0] * n)}
    frontier = [tuple([0] * n)]
    while frontier:
        base = frontier.pop()
        for g in gens:
            nxt = tuple((a + b) % 4 for a, b in zip(base, g))
            if nxt not in out:
                out.add(nxt)
                frontier.append(nxt)
    return out


@pytest.mark.parametrize("seed", range(40))
def test_oracle_equivalence(seed):
    rng = random.Random(seed)
    m, n = rng.randrange(1, 4), rng.randrange(1, 5)
    a = Z4Matrix.from_entries(
        [[rng.randrange(4) for _ in range(n)] for _ in range(m)]
    )
    b = [rng.randrange(4) for _ in range(m)]
    mask = tuple(rng.choice((O, F)) for _ in range(n))
    got = z4_solve_parity(a, b, mask)
    brute = brute_solutions(a, b, mask)
    if got is None:
        assert not brute
        return
    assert got in brute
    # the solution space covers every solution
    x, gens = z4_solution_space(a, b, mask)
    reachable = {tuple((xi + d) % 4 for xi, d in zip(x, diff)) for diff in _span(gens, n)}
    assert reachable == set(brute)
    for g in gens:
        assert a.mul_vector(g) == tuple([0] * m)
        assert all(not (p is O and v % 2) for p, v in zip(mask, g))
