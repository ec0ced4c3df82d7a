from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from delannoy.paths import (DIAG, RIGHT, UP, delannoy, enumerate_paths,
                            is_quasi_diagonal, path_m, path_n, path_of_pair,
                            reflect, representative, visited_vertices)


def brute_paths(m, n):
    # independent oracle: filter all step words of the right length
    out = set()
    for length in range(max(m, n), m + n + 1):
        for word in product("URD", repeat=length):
            w = "".join(word)
            if path_m(w) == m and path_n(w) == n:
                out.add(w)
    return out


def test_enumeration_matches_brute_force():
    for m, n in [(0, 0), (1, 1), (2, 1), (2, 2), (3, 2)]:
        assert set(enumerate_paths(m, n)) == brute_paths(m, n)


def test_small_counts():
    assert len(enumerate_paths(1, 1)) == 3
    assert len(enumerate_paths(2, 2)) == 13  # brute-force count, frozen
    assert enumerate_paths(0, 0) == ("",)


def test_delannoy_recurrence_vs_enumeration():
    for m in range(7):
        for n in range(7):
            assert delannoy(m, n) == len(enumerate_paths(m, n))


def test_lex_order():
    ps = enumerate_paths(1, 1)
    assert ps == ("UR", "RU", "D")


def test_representative_examples():
    assert representative("D") == ((1,), (1,))
    assert representative("RU") == ((2,), (1,))
    assert representative("DD") == ((1, 2), (1, 2))


def test_path_of_pair_examples():
    assert path_of_pair((1,), (1,)) == "D"
    assert path_of_pair((1,), (2,)) == "UR"


def test_round_trip():
    for m in range(4):
        for n in range(4):
            for p in enumerate_paths(m, n):
                y, x = representative(p)
                assert path_of_pair(y, x) == p


@given(st.data())
def test_monotone_reparametrization_invariance(data):
    m = data.draw(st.integers(0, 3))
    n = data.draw(st.integers(0, 3))
    p = data.draw(st.sampled_from(list(enumerate_paths(m, n))))
    y, x = representative(p)
    pts = sorted(set(y) | set(x))
    vals = data.draw(st.lists(st.fractions(min_value=-50, max_value=50),
                              min_size=len(pts), max_size=len(pts),
                              unique=True))
    vals.sort()
    relabel = dict(zip(pts, vals))
    y2 = tuple(relabel[v] for v in y)
    x2 = tuple(relabel[v] for v in x)
    assert path_of_pair(y2, x2) == p


def test_reflect():
    assert reflect("URD") == "RUD"
    for p in enumerate_paths(2, 3):
        assert reflect(reflect(p)) == p
        assert path_m(reflect(p)) == path_n(p)


def test_quasi_diagonal_figure_paths():
    left = "RUDURD"   # passes through every diagonal vertex
    right = "DRDDU"   # skips (2,2)
    assert is_quasi_diagonal(left)
    assert not is_quasi_diagonal(right)
    assert is_quasi_diagonal("DDDD")
    with pytest.raises(ValueError):
        is_quasi_diagonal("RRU")


def test_quasi_diagonal_no_diag_count_is_2_to_n():
    for n in range(6):
        qd = [p for p in enumerate_paths(n, n)
              if DIAG not in p and is_quasi_diagonal(p)]
        assert len(qd) == 2 ** n


def test_visited_vertices_endpoint():
    for p in enumerate_paths(2, 3):
        assert (2, 3) in visited_vertices(p)
