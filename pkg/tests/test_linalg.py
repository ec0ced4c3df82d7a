import random
from fractions import Fraction

from delannoy.fields import QQ, PrimeField
from delannoy.linalg import (SpanBuilder, nullspace, rank, rank_big,
                             rank_kernel_int, rref, solve)


def frac_rows(rows):
    return [[Fraction(x) for x in r] for r in rows]


def test_rref_small():
    red, piv = rref(frac_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]]))
    assert piv == [0, 2]
    assert red == frac_rows([[1, 2, 0], [0, 0, 1]])


def test_rank_and_nullspace():
    rows = frac_rows([[1, 2, 3], [2, 4, 6]])
    assert rank(rows) == 1
    ker = nullspace(rows, 3)
    assert len(ker) == 2
    for v in ker:
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in rows)


def test_solve():
    rows = frac_rows([[1, 1], [1, -1]])
    x = solve(rows, [Fraction(3), Fraction(1)])
    assert x == [Fraction(2), Fraction(1)]
    assert solve(frac_rows([[1, 1], [2, 2]]), [Fraction(1), Fraction(3)]) is None
    # multiple right-hand sides
    xs = solve(rows, [[Fraction(3), Fraction(1)], [Fraction(0), Fraction(2)]])
    assert xs == [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(-1)]]


def test_span_builder_matches_rank():
    rng = random.Random(7)
    rows = [[Fraction(rng.randint(-3, 3)) for _ in range(6)] for _ in range(10)]
    sb = SpanBuilder(6)
    for r in rows:
        sb.insert(r)
    assert sb.dim == rank(rows)
    for r in rows:
        assert sb.contains(r)


def test_rank_kernel_int_certified():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    r, ker = rank_kernel_int(rows, 3)
    assert r == 2
    assert len(ker) == 1
    v = ker[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_rank_big_matches_fraction_rank():
    rng = random.Random(11)
    for trial in range(20):
        nrows, ncols = rng.randint(1, 12), rng.randint(1, 9)
        base = [[rng.randint(-5, 5) for _ in range(ncols)]
                for _ in range(rng.randint(1, min(nrows, ncols)))]
        rows = [list(rng.choice(base)) for _ in range(nrows)]
        for i in range(0, nrows, 2):
            rows[i] = [a + b for a, b in zip(rows[i], rng.choice(base))]
        fr = frac_rows(rows)
        assert rank_big(fr) == rank(fr)


def test_rank_big_with_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1)]]
    assert rank_big(rows) == rank(rows) == 1  # det = 1/2 - 1/2
    rows2 = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(2)]]
    assert rank_big(rows2) == rank(rows2) == 2


def test_prime_field_rank():
    f = PrimeField(5)
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    gf_rows = [[f.of_int(x) for x in r] for r in rows]
    assert rank(gf_rows, f) == 2
    assert rank_big(gf_rows, f) == 2
    # 5 | 10, so this matrix drops rank mod 5 but not over Q
    rows2 = [[10, 0], [0, 1]]
    assert rank([[f.of_int(x) for x in r] for r in rows2], f) == 1
    assert rank_big(frac_rows(rows2), QQ) == 2
