"""Cell data for strictly decreasing integer points (type A).

Two independent combinatorial routes are implemented side by side:

* ``chain_partition`` — Greene-style invariant: greedy-free exact covers of
  the point set by chains of pairwise gap >= ell;
* ``shi_tableau`` — leftmost-column insertion producing a standard Young
  tableau whose transposed shape matches the chain partition on facet
  points.

They are deliberately kept separate so one can validate the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .facets import FacetPattern, cone_contains, tableau_facet
from .limits import check_size
from .young import (
    StandardTableau,
    check_partition,
    partitions,
    standard_tableaux,
    transpose,
)


def _check_point(y) -> tuple[int, ...]:
    y = tuple(int(c) for c in y)
    if any(y[i] <= y[i + 1] for i in range(len(y) - 1)):
        raise ValueError(f"point must be strictly decreasing: {y}")
    return y


def chain_partition(y, ell: int) -> tuple[int, ...]:
    """Partition whose k-th prefix sum is the largest number of coordinates
    coverable by k disjoint chains (chains have pairwise gaps >= ell)."""
    y = _check_point(y)
    n = check_size(len(y), "point size")

    @lru_cache(maxsize=None)
    def best(idx: int, lasts: tuple[int, ...], k: int) -> int:
        if idx == n:
            return 0
        v = y[idx]
        score = best(idx + 1, lasts, k)  # leave v uncovered
        for i, last in enumerate(lasts):
            if last - v >= ell:
                nxt = tuple(sorted(lasts[:i] + lasts[i + 1 :] + (v,)))
                score = max(score, 1 + best(idx + 1, nxt, k))
        if len(lasts) < k:
            nxt = tuple(sorted(lasts + (v,)))
            score = max(score, 1 + best(idx + 1, nxt, k))
        return score

    parts = []
    covered = 0
    for k in range(1, n + 1):
        new = best(0, (), k)
        parts.append(new - covered)
        covered = new
        if covered == n:
            break
    best.cache_clear()
    mu = tuple(p for p in parts if p)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise RuntimeError(f"chain cover increments not monotone for {y}")
    return mu


def shi_tableau(y, ell: int) -> StandardTableau:
    """Insert 1..n (indexing the descending coordinates) into columns:
    each value lands at the bottom of the leftmost column whose current
    bottom is at least ell above it, else it opens a new column."""
    y = _check_point(y)
    columns: list[list[int]] = []
    for i, v in enumerate(y, start=1):
        for col in columns:
            if y[col[-1] - 1] - v >= ell:
                col.append(i)
                break
        else:
            columns.append([i])
    height = max(len(c) for c in columns)
    rows = tuple(
        tuple(col[r] for col in columns if len(col) > r) for r in range(height)
    )
    return StandardTableau(rows)


def cell_label(y, ell: int) -> tuple[int, ...]:
    """Transposed shape of the insertion tableau."""
    return transpose(shi_tableau(y, ell).shape)


def a_value(lam) -> int:
    """Sum over the transposed parts c of c*(c-1)/2.

    >>> a_value((4, 3, 1))
    5
    """
    return sum(c * (c - 1) // 2 for c in transpose(check_partition(lam)))


@dataclass(frozen=True)
class CellReport:
    point: tuple[int, ...]
    ell: int
    tableau: StandardTableau
    shape: tuple[int, ...]
    cell_label: tuple[int, ...]
    a_value: int
    chain_partition: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "point": list(self.point),
            "ell": self.ell,
            "tableau": [list(r) for r in self.tableau.rows],
            "shape": list(self.shape),
            "cell_label": list(self.cell_label),
            "a_value": self.a_value,
            "chain_partition": list(self.chain_partition),
        }


def cell_report(y, ell: int) -> CellReport:
    """Both cell invariants of a point, without collapsing them."""
    t = shi_tableau(y, ell)
    label = transpose(t.shape)
    return CellReport(
        point=_check_point(y),
        ell=ell,
        tableau=t,
        shape=t.shape,
        cell_label=label,
        a_value=a_value(t.shape),
        chain_partition=chain_partition(y, ell),
    )


# ---------------------------------------------------------------------------
# region membership
# ---------------------------------------------------------------------------


def _unique_tableau_facets(lam, ell: int) -> tuple[FacetPattern, ...]:
    out: list[FacetPattern] = []
    for t in standard_tableaux(lam):
        f = tableau_facet(t, ell)
        if f not in out:
            out.append(f)
    return tuple(out)


def in_D_lambda(y, lam, ell: int) -> bool:
    """Whether y lies in some tableau-facet cone of the shape lam."""
    y = _check_point(y)
    lam = check_partition(lam)
    if sum(lam) != len(y):
        raise ValueError(f"shape {lam} does not match point size {len(y)}")
    check_size(len(y), "point size")
    return any(cone_contains(f, y) for f in _unique_tableau_facets(lam, ell))


def weight_point(nu) -> tuple[int, ...]:
    """Strictly decreasing point of a dominant weight: partial sums of
    nu + rho from the right, ending at 0."""
    if any(c < 0 for c in nu):
        raise ValueError(f"weight {nu} is not dominant")
    shifted = [c + 1 for c in nu]
    y = [0]
    for c in reversed(shifted):
        y.append(y[-1] + c)
    return tuple(reversed(y))


def ideal_member(nu, lam, ell: int) -> bool:
    """Whether the weight nu lies in the thick ideal region of shape lam."""
    return in_D_lambda(weight_point(nu), lam, ell)


def nk_member(nu, ell: int, k: int) -> bool:
    """Whether nu lies in the region of negligibility order >= k: some
    shape with a-value >= k contains it."""
    if k < 0:
        raise ValueError("k must be >= 0")
    n = len(nu) + 1
    check_size(n, "rank")
    point = weight_point(nu)
    for lam in partitions(n):
        if a_value(lam) >= k and in_D_lambda(point, lam, ell):
            return True
    return False


def modular_region_member(nu, lam, p: int, r: int) -> bool:
    """Depth-r modular analogue of ideal membership.

    r = 1 is plain membership at ell = p.  For r >= 2 the consecutive
    differences of the point must dominate p^r times the differences of an
    actual facet point of the shape (symbols realized inside [0, p)).
    The empty shape descends to the full column shape one level down.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    n = len(nu) + 1
    lam = tuple(lam)
    if lam == ():
        if r < 2:
            raise ValueError("empty shape needs r >= 2")
        return modular_region_member(nu, (1,) * n, p, r - 1)
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"shape {lam} does not match weight rank {n}")
    if r == 1:
        return ideal_member(nu, lam, p)
    check_size(n, "rank")
    z = weight_point(nu)
    from itertools import combinations

    for f in _unique_tableau_facets(lam, p):
        sigma = f.num_symbols
        for xs in combinations(range(1, p), sigma - 1):
            w = f.coordinates((0,) + xs)
            if all(
                z[i] - z[i + 1] >= p**r * (w[i] - w[i + 1]) for i in range(n - 1)
            ):
                return True
    return False


if __name__ == "__main__":
    import doctest

    doctest.testmod()
