"""Tests for facet patterns, their order, and minimality."""

from __future__ import annotations

import pytest

from tiltnull.facets import (
    FacetPattern,
    cone_contains,
    facet_from_point,
    facet_k,
    facet_leq,
    facet_strictly_less,
    is_minimal,
    pattern_str,
    roots_str,
    stabilizer_simple_roots,
    standard_facet,
    strongly_minimal_facets,
    table_rows,
    tableau_facet,
)
from tiltnull.young import (
    StandardTableau,
    partitions,
    row_reading_tableau,
    standard_tableaux,
    transpose,
)


def P(entries, sigma, ell=5):
    return FacetPattern(tuple(entries), sigma, ell)


def test_pattern_validation():
    with pytest.raises(ValueError):  # not strictly decreasing
        P([(1, 0), (1, 0), (0, 0)], 1)
    with pytest.raises(ValueError):  # last entry must be (0, 0)
        P([(1, 0), (0, 1)], 2)
    with pytest.raises(ValueError):  # symbol ranks not contiguous
        P([(0, 2), (0, 0)], 3)
    with pytest.raises(ValueError):  # too many symbols for ell
        P([(0, s) for s in range(2, -1, -1)], 3, ell=2)
    # a valid one
    f = P([(1, 0), (0, 1), (0, 0)], 2)
    assert f.size == 3
    assert f.generic_point() == (5, 1, 0)
    assert f.coordinates((0, 3)) == (5, 3, 0)


def test_standard_facets():
    assert standard_facet((2, 1), 5).entries == ((1, 0), (0, 1), (0, 0))
    assert standard_facet((1, 1, 1), 5).entries == ((2, 0), (1, 0), (0, 0))
    assert standard_facet((2, 2), 5).entries == ((1, 1), (1, 0), (0, 1), (0, 0))
    assert standard_facet((4,), 5).entries == ((0, 3), (0, 2), (0, 1), (0, 0))
    assert standard_facet((3, 2), 5).num_symbols == 3


def test_tableau_facets_hand_checked():
    t = StandardTableau(((1, 3), (2,), (4,)))
    assert tableau_facet(t, 5).entries == ((2, 0), (1, 0), (0, 1), (0, 0))
    t = StandardTableau(((1, 2), (3,), (4,)))
    assert tableau_facet(t, 5).entries == ((2, 0), (1, 1), (1, 0), (0, 0))
    t = StandardTableau(((1, 2, 3), (4, 5)))
    assert tableau_facet(t, 5).entries == ((1, 1), (1, 0), (0, 2), (0, 1), (0, 0))
    # one-row and one-column shapes
    assert tableau_facet(row_reading_tableau((4,)), 5).entries == standard_facet(
        (4,), 5
    ).entries
    assert tableau_facet(row_reading_tableau((1, 1, 1, 1)), 5).entries == (
        (3, 0),
        (2, 0),
        (1, 0),
        (0, 0),
    )


def test_standard_facet_occurs_among_tableau_facets():
    for n in range(1, 7):
        for lam in partitions(n):
            found = {tableau_facet(t, 11) for t in standard_tableaux(lam)}
            assert standard_facet(lam, 11) in found, lam
            # and it is the lexicographically smallest of them
            assert min(f.entries for f in found) == standard_facet(lam, 11).entries


def test_facet_k_frozen_values():
    assert facet_k(P([(1, 0), (0, 1), (0, 0)], 2)) == 1
    assert facet_k(P([(2, 0), (1, 0), (0, 0)], 1)) == 3
    assert facet_k(P([(2, 0), (1, 1), (1, 0), (0, 0)], 2)) == 3
    assert facet_k(standard_facet((4,), 5)) == 0


def test_facet_k_matches_column_pair_count():
    # depth of a tableau facet = number of same-column pairs of the shape
    for n in range(1, 7):
        for lam in partitions(n):
            expected = sum(c * (c - 1) // 2 for c in transpose(lam))
            for t in standard_tableaux(lam):
                assert facet_k(tableau_facet(t, 7)) == expected, (lam, t)


def test_stabilizer_simple_roots_order():
    f = P([(2, 0), (1, 1), (1, 0), (0, 1), (0, 0)], 2)  # (2l, l+x1, l, x1, 0)
    assert stabilizer_simple_roots(f) == ((1, 3, 1), (3, 5, 1), (2, 4, 1))
    assert roots_str(f) == "e1-e3,e3-e5,e2-e4"
    f = P([(1, 1), (1, 0), (0, 1), (0, 0)], 2)  # (l+x1, l, x1, 0)
    assert roots_str(f) == "e1-e3,e2-e4"
    assert roots_str(standard_facet((3,), 5)) == ""


def test_cone_contains_frozen_examples():
    f = P([(1, 0), (0, 1), (0, 0)], 2, ell=5)
    assert cone_contains(f, (8, 2, 0))
    assert not cone_contains(f, (4, 2, 0))
    g = P([(2, 0), (1, 0), (0, 0)], 1, ell=5)
    assert not cone_contains(g, (6, 1, 0))
    assert cone_contains(g, (10, 5, 0))
    with pytest.raises(ValueError):
        cone_contains(f, (1, 0))


def test_facet_from_point():
    assert facet_from_point((10, 5, 0), 5).entries == ((2, 0), (1, 0), (0, 0))
    f = facet_from_point((8, 2, 0), 5)
    assert f.entries == ((1, 2), (0, 1), (0, 0))
    assert f.num_symbols == 3
    with pytest.raises(ValueError):
        facet_from_point((5, 5, 0), 5)
    with pytest.raises(ValueError):
        facet_from_point((7, 3, 1), 5)


def test_facet_order_basic():
    shallow = P([(1, 0), (0, 1), (0, 0)], 2)  # (l, x1, 0)
    deep = P([(2, 0), (1, 0), (0, 0)], 1)  # (2l, l, 0)
    assert facet_leq(shallow, deep)
    assert not facet_leq(deep, shallow)
    assert facet_strictly_less(shallow, deep)
    assert not facet_strictly_less(deep, shallow)
    # reflexive
    assert facet_leq(deep, deep) and not facet_strictly_less(deep, deep)
    generic = P([(0, 2), (0, 1), (0, 0)], 3)
    assert facet_leq(generic, shallow) and facet_strictly_less(generic, shallow)


def test_facet_order_shared_flat():
    # these two distinct patterns satisfy each other's wall inequalities,
    # so the non-strict order is not antisymmetric in general
    a = P([(2, 0), (0, 2), (0, 1), (0, 0)], 3)
    b = P([(2, 0), (1, 2), (1, 1), (0, 0)], 3)
    assert facet_leq(a, b) and facet_leq(b, a)
    assert not facet_strictly_less(a, b) and not facet_strictly_less(b, a)


def test_facet_order_antisymmetric_on_tableau_facets():
    for n in range(1, 5):
        seen = []
        for lam in partitions(n):
            for t in standard_tableaux(lam):
                f = tableau_facet(t, 7)
                if f not in seen:
                    seen.append(f)
        for f in seen:
            for g in seen:
                if f != g:
                    assert not (facet_leq(f, g) and facet_leq(g, f)), (f, g)


def test_facet_order_requires_matching_shapes():
    with pytest.raises(ValueError):
        facet_leq(standard_facet((2, 1), 5), standard_facet((2, 2), 5))
    with pytest.raises(ValueError):
        facet_leq(standard_facet((2, 1), 5), standard_facet((2, 1), 7))


def test_is_minimal_on_table_patterns():
    for entries, sigma in [
        ([(0, 2), (0, 1), (0, 0)], 3),
        ([(1, 0), (0, 1), (0, 0)], 2),
        ([(2, 0), (1, 0), (0, 0)], 1),
        ([(2, 0), (1, 1), (1, 0), (0, 0)], 2),
        ([(1, 1), (1, 0), (0, 1), (0, 0)], 2),
    ]:
        assert is_minimal(P(entries, sigma)), entries
    # a deeper pattern in a class of its own is still minimal
    assert is_minimal(P([(2, 0), (0, 1), (0, 0)], 2))


def test_strongly_minimal_sl3():
    rows = []
    for lam in ((3,), (2, 1), (1, 1, 1)):
        rows.extend(table_rows(lam, 7))
    assert rows == [
        "(x2, x1, 0) | 0 |",
        "(l, x1, 0) | 1 | e1-e3",
        "(2l, l, 0) | 3 | e1-e2,e2-e3",
    ]


def test_strongly_minimal_excludes_second_two_one_facet():
    # shape (2,1) has two tableau facets; only (l, x1, 0) survives
    facets = strongly_minimal_facets((2, 1), 7)
    assert len(facets) == 1
    assert facets[0].entries == ((1, 0), (0, 1), (0, 0))


def test_strongly_minimal_two_one_one():
    facets = strongly_minimal_facets((2, 1, 1), 7)
    assert [f.entries for f in facets] == [
        ((2, 0), (1, 0), (0, 1), (0, 0)),
        ((2, 0), (1, 1), (1, 0), (0, 0)),
    ]


def test_table_rows_are_ell_independent():
    for lam in ((2, 1, 1), (2, 2), (3, 1), (2, 2, 1)):
        assert table_rows(lam, 7) == table_rows(lam, 11) == table_rows(lam, 13)


def test_pattern_str():
    assert pattern_str(P([(2, 0), (1, 1), (1, 0), (0, 0)], 2)) == "(2l, l+x1, l, 0)"
    assert pattern_str(P([(0, 2), (0, 1), (0, 0)], 3)) == "(x2, x1, 0)"
    assert pattern_str(P([(3, 0), (2, 1), (2, 0), (1, 0), (0, 0)], 2)) == (
        "(3l, 2l+x1, 2l, l, 0)"
    )


def test_size_limit_guard(monkeypatch):
    monkeypatch.setenv("TILTNULL_MAX_N", "4")
    with pytest.raises(ValueError, match="TILTNULL_MAX_N"):
        strongly_minimal_facets((3, 2), 7)
    monkeypatch.setenv("TILTNULL_MAX_N", "6")
    assert strongly_minimal_facets((3, 2), 7)
