"""End-to-end acceptance checks.

Each test covers one numbered criterion, asserts its stated tolerance and
runtime budget, and prints a single PASS line (to the real stderr, so it
survives pytest's capture).  A failed assert means the criterion fails.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from kauffman_oracle import bracket_closure

from tiltnull.cells import (
    a_value,
    chain_partition,
    in_D_lambda,
    shi_tableau,
)
from tiltnull.dims import (
    NotKNegligibleError,
    modified_dim,
    modular_nullity_simple,
    modular_weyl_dim,
    quantum_nullity,
    quantum_weyl_dim,
    sl2_modular_ideal,
    steinberg_weight,
    telescope_weight,
    a2_modular_cells,
)
from tiltnull.facets import facet_k, standard_facet, table_rows
from tiltnull.laurent import (
    LaurentPolynomial,
    NumberFieldElement,
    cyclotomic,
    int_valuation,
    phi_valuation,
)
from tiltnull.roots import root_system
from tiltnull.tl import (
    colored_invariant,
    invariant_jet,
    modified_invariant,
    object_nullity_tl,
    quantum_integer_A,
)
from tiltnull.young import partitions, transpose

TREFOIL = [1, 1, 1]
FIGURE_EIGHT = [1, -2, 1, -2]


@pytest.fixture
def report(capfd):
    """One visible pass line per criterion, bypassing output capture."""

    def _report(num: int, budget: float, start: float, detail: str) -> None:
        elapsed = time.perf_counter() - start
        with capfd.disabled():
            print(
                f"criterion {num:02d}: PASS  {detail}  [{elapsed:.2f}s < {budget:g}s]",
                flush=True,
            )
        assert elapsed < budget, f"criterion {num} exceeded its {budget}s budget"

    return _report


def facet_points(lam, ell):
    """All integer points of the open standard facet F0(lam) at this ell."""
    facet = standard_facet(lam, ell)
    free = facet.num_symbols - 1
    for combo in combinations(range(1, ell), free):
        yield facet, facet.coordinates((0,) + combo)


def point_to_weight(y):
    """Fundamental-weight coordinates of the type-A weight with point y."""
    return tuple(y[i] - y[i + 1] - 1 for i in range(len(y) - 1))


# -- 1: facet tables ---------------------------------------------------------

SL3_TABLE = {
    (3,): ["(x2, x1, 0) | 0 |"],
    (2, 1): ["(l, x1, 0) | 1 | e1-e3"],
    (1, 1, 1): ["(2l, l, 0) | 3 | e1-e2,e2-e3"],
}

SL4_TABLE = {
    (4,): ["(x3, x2, x1, 0) | 0 |"],
    (3, 1): ["(l, x2, x1, 0) | 1 | e1-e4"],
    (2, 2): ["(l+x1, l, x1, 0) | 2 | e1-e3,e2-e4"],
    (2, 1, 1): [
        "(2l, l, x1, 0) | 3 | e1-e2,e2-e4",
        "(2l, l+x1, l, 0) | 3 | e1-e3,e3-e4",
    ],
    (1, 1, 1, 1): ["(3l, 2l, l, 0) | 6 | e1-e2,e2-e3,e3-e4"],
}

SL5_TABLE = {
    (3, 2): ["(l+x1, l, x2, x1, 0) | 2 | e1-e4,e2-e5"],
    (3, 1, 1): [
        "(2l, l, x2, x1, 0) | 3 | e1-e2,e2-e5",
        "(2l, l+x1, l, x2, 0) | 3 | e1-e3,e3-e5",
        "(2l, l+x2, l+x1, l, 0) | 3 | e1-e4,e4-e5",
    ],
    (2, 2, 1): ["(2l, l+x1, l, x1, 0) | 4 | e1-e3,e3-e5,e2-e4"],
    (2, 1, 1, 1): [
        "(3l, 2l, l, x1, 0) | 6 | e1-e2,e2-e3,e3-e5",
        "(3l, 2l, l+x1, l, 0) | 6 | e1-e2,e2-e4,e4-e5",
        "(3l, 2l+x1, 2l, l, 0) | 6 | e1-e3,e3-e4,e4-e5",
    ],
}


def test_criterion_01_facet_tables(report):
    start = time.perf_counter()
    rows = 0
    for table in (SL3_TABLE, SL4_TABLE, SL5_TABLE):
        for lam, expected in table.items():
            assert table_rows(lam, 7) == expected, lam
            rows += len(expected)
    assert rows == 3 + 6 + 8
    report(1, 30, start, f"{rows} table rows byte-exact")


# -- 2: a-function -----------------------------------------------------------


def test_criterion_02_a_value(report):
    a_value((4, 3, 1))  # warm up imports/caches before timing
    start = time.perf_counter()
    got = a_value((4, 3, 1))
    elapsed = time.perf_counter() - start
    assert got == 5
    assert elapsed < 0.001
    report(2, 0.001, start, "a_value((4,3,1)) == 5")


# -- 3: nullity on the standard facet ----------------------------------------


def test_criterion_03_nullity_on_standard_facet(report):
    start = time.perf_counter()
    rng = random.Random(2026)
    checked = 0
    for n in range(3, 7):
        for lam in partitions(n):
            expected = a_value(lam)
            for ell in (7, 11):
                facet = standard_facet(lam, ell)
                assert facet_k(facet) == expected, lam
                free = facet.num_symbols - 1
                pool = list(combinations(range(1, ell), free))
                for combo in rng.sample(pool, min(5, len(pool))):
                    y = facet.coordinates((0,) + combo)
                    got = quantum_nullity(f"A{n - 1}", point_to_weight(y), ell)
                    assert got.nullity == expected, (lam, ell, y)
                    checked += 1
    report(3, 120, start, f"nullity == a == k at {checked} facet points")


# -- 4: valuation oracle ------------------------------------------------------


def test_criterion_04_nullity_equals_valuation(report):
    start = time.perf_counter()
    rng = random.Random(41)
    types = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]
    for _ in range(200):
        ctype = rng.choice(types)
        ell = rng.choice([7, 11, 13])
        rank = root_system(ctype).rank
        lam = tuple(rng.randrange(6) for _ in range(rank))
        got = quantum_nullity(ctype, lam, ell, verify_dimension=False)
        dim = quantum_weyl_dim(ctype, lam)
        assert got.nullity == phi_valuation(dim, ell), (ctype, lam, ell)
    report(4, 60, start, "root-count == Phi-valuation on 200 weights")


# -- 5: Shi insertion vs chain partitions -------------------------------------


def test_criterion_05_shi_cross_validation(report):
    start = time.perf_counter()
    points = 0
    for n in range(1, 7):
        for lam in partitions(n):
            for _, y in facet_points(lam, 7):
                assert chain_partition(y, 7) == transpose(shi_tableau(y, 7).shape)
                points += 1
    rng = random.Random(505)
    agree = 0
    trials = 1000
    for _ in range(trials):
        n = rng.randrange(2, 8)
        ell = rng.choice([3, 5, 7])
        y = tuple(sorted(rng.sample(range(60), n), reverse=True))
        if chain_partition(y, ell) == transpose(shi_tableau(y, ell).shape):
            agree += 1
    report(
        5, 120, start,
        f"exact on {points} facet points; random agreement {agree}/{trials}",
    )


# -- 6: ideal membership ------------------------------------------------------


def test_criterion_06_ideal_membership(report):
    start = time.perf_counter()
    rng = random.Random(66)
    column_hits = 0
    for _ in range(500):
        n = rng.randrange(2, 7)
        ell = rng.choice([7, 11])  # facets of an n-box shape need ell >= n
        y = tuple(sorted(rng.sample(range(40), n), reverse=True))
        shape = shi_tableau(y, ell).shape
        assert in_D_lambda(y, shape, ell), (y, ell)
        if in_D_lambda(y, (1,) * n, ell):
            column_hits += 1
            for lam in partitions(n):
                assert in_D_lambda(y, lam, ell), (y, ell, lam)
    report(6, 60, start, f"500 shapes contained; D([1^n]) hit {column_hits} times")


# -- 7: Steinberg weights and telescoping --------------------------------------

STEINBERG_LEVELS = [
    ("A1", 3), ("A2", 5), ("A3", 5), ("B2", 5), ("B3", 7), ("C3", 7),
    ("D4", 7), ("E6", 13), ("E7", 19), ("E8", 31), ("F4", 13), ("G2", 7),
]


def test_criterion_07_steinberg_and_telescoping(report):
    start = time.perf_counter()
    for ctype, ell in STEINBERG_LEVELS:
        rs = root_system(ctype)
        verify = ctype not in ("E7", "E8")  # dimension polynomial too large
        got = quantum_nullity(
            ctype, steinberg_weight(ctype, ell), ell, verify_dimension=verify
        )
        assert got.nullity == len(rs.positive_roots), ctype

    for ctype in ("A1", "A2", "A3", "B2", "G2"):
        rs = root_system(ctype)
        zero = (0,) * rs.rank
        for p in (5, 7):
            for r in (1, 2, 3):
                weight = telescope_weight(ctype, zero, r, p)
                assert modular_weyl_dim(ctype, weight) == p ** (
                    r * len(rs.positive_roots)
                ), (ctype, p, r)

    rng = random.Random(7)
    for _ in range(100):
        ctype = rng.choice(["A1", "A2", "A3", "B2", "C3", "G2"])
        rs = root_system(ctype)
        lam = tuple(rng.randrange(4) for _ in range(rs.rank))
        p = rng.choice([5, 7])
        r = rng.randrange(1, 4)
        base = modular_nullity_simple(ctype, lam, p, verify_dimension=False)
        lifted = modular_nullity_simple(
            ctype, telescope_weight(ctype, lam, r, p), p, verify_dimension=False
        )
        assert lifted.nullity == base.nullity + r * len(rs.positive_roots)
    report(7, 60, start, "Steinberg nullity, p^{r|R+|} dims, 100 telescopes")


# -- 8: small-rank modular catalogues ------------------------------------------


def test_criterion_08_modular_catalogues(report):
    start = time.perf_counter()
    for p in (2, 3, 5):
        for m in range(201):
            r = sl2_modular_ideal(m, p)
            assert p**r - 1 <= m < p ** (r + 1) - 1, (m, p, r)

    for p in (3, 5):
        families = a2_modular_cells(p, 3)
        assert [f["nullity"] for f in families] == [
            3 * s + extra for s in range(4) for extra in (0, 1)
        ]
        for fam in families:
            got = modular_nullity_simple("A2", fam["sample_weight"], p)
            assert got.nullity == fam["nullity"], fam
    report(8, 10, start, "sl2 ideal rule on m<=200; A2 strata s<=3 at p=3,5")


# -- 9: link invariants ---------------------------------------------------------


def value_at_root(f: LaurentPolynomial, ell: int) -> NumberFieldElement:
    """Evaluate at A0 with A0^2 = x, a primitive ell-th root of unity."""
    half = (ell + 1) // 2
    folded: dict[int, Fraction] = {}
    for e, c in f.coeffs.items():
        r = (e * half) % ell
        folded[r] = folded.get(r, Fraction(0)) + c
    return NumberFieldElement.from_laurent(LaurentPolynomial(folded), ell)


def quotient_then_evaluate(inv: LaurentPolynomial, ell: int, k: int):
    g = inv
    for _ in range(k):
        g = g.exact_div(cyclotomic(ell))
    return value_at_root(g, ell)


def jet_quotient_then_evaluate(rep, ell: int, k: int):
    """Same quotient route, but from a dense jet mod Phi^(k+1)."""
    phi = cyclotomic(ell)
    g = LaurentPolynomial({i: c for i, c in enumerate(rep) if c})
    for _ in range(k):
        g = g.exact_div(phi)
    return value_at_root(g, ell)


def random_word(rng, strands, length):
    return [
        rng.choice([1, -1]) * rng.randrange(1, strands)
        for _ in range(length)
    ]


def test_criterion_09_link_invariants(report):
    start = time.perf_counter()
    for m in range(1, 7):
        expected = quantum_integer_A(m + 1) * (-1) ** m
        assert colored_invariant([], 1, (m,)) == expected, m

    trefoil = colored_invariant(TREFOIL, 2)
    assert trefoil == bracket_closure(TREFOIL, 2)
    assert trefoil == LaurentPolynomial({7: 1, 3: 1, -1: 1, -9: -1})

    rng = random.Random(909)
    for _ in range(100):
        strands = rng.randrange(2, 5)
        word = random_word(rng, strands, rng.randrange(1, 9))
        conj = random_word(rng, strands, rng.randrange(1, 5))
        moved = conj + word + [-g for g in reversed(conj)]
        assert colored_invariant(moved, strands) == colored_invariant(word, strands)

    ell = 5
    k = object_nullity_tl([(4, 1)], ell)
    assert k == 1
    tref_inv = colored_invariant(TREFOIL, 2, (4, 4))
    tref_mod = modified_invariant(TREFOIL, 2, (4, 4), ell, k)
    assert tref_mod == quotient_then_evaluate(tref_inv, ell, k)
    assert not tref_mod.is_zero

    fig8_rep = invariant_jet(FIGURE_EIGHT, 3, (4, 4, 4), ell, k + 1)
    fig8_mod = modified_invariant(FIGURE_EIGHT, 3, (4, 4, 4), ell, k)
    assert fig8_mod == jet_quotient_then_evaluate(fig8_rep, ell, k)
    assert not fig8_mod.is_zero
    report(9, 180, start, "unknots, oracle, 100 conjugations, 2 modified links")


# -- 10: negligibility guard -----------------------------------------------------


def test_criterion_10_negligibility_guard(report):
    start = time.perf_counter()
    rng = random.Random(1010)
    inputs = 0

    for _ in range(60):  # quantum dimensions
        ctype = rng.choice(["A1", "A2", "B2"])
        rank = root_system(ctype).rank
        lam = tuple(rng.randrange(7) for _ in range(rank))
        ell = rng.choice([5, 7])
        dim = quantum_weyl_dim(ctype, lam)
        val = phi_valuation(dim, ell)
        k = rng.randrange(val + 3)
        if k <= val:
            modified_dim(dim, ell, k, mode="quantum")
        else:
            try:
                modified_dim(dim, ell, k, mode="quantum")
            except NotKNegligibleError as exc:
                assert "not k-negligible" in str(exc)
            else:
                raise AssertionError((ctype, lam, ell, k))
        inputs += 1

    for _ in range(60):  # modular dimensions
        p = rng.choice([2, 3, 5])
        dim = rng.randrange(1, 50) * p ** rng.randrange(4)
        val = int_valuation(dim, p)
        k = rng.randrange(val + 3)
        raised = False
        try:
            modified_dim(dim, p, k, mode="modular")
        except NotKNegligibleError:
            raised = True
        assert raised == (val < k), (dim, p, k)
        inputs += 1

    for _ in range(80):  # unknot invariants: valuation = #{i : ell | m_i + 1}
        ell = rng.choice([5, 7])
        strands = rng.randrange(1, 3)
        colors = tuple(rng.choice([1, 2, ell - 1]) for _ in range(strands))
        val = sum(1 for m in colors if (m + 1) % ell == 0)
        k = rng.randrange(3)
        raised = False
        try:
            modified_invariant([], strands, colors, ell, k)
        except NotKNegligibleError as exc:
            assert "not k-negligible" in str(exc)
            raised = True
        assert raised == (val < k), (colors, ell, k)
        inputs += 1

    assert inputs == 200
    report(10, 30, start, "raise iff valuation < k on 200 fuzz inputs")
