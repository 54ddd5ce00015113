"""Facet patterns on the fundamental alcove wall structure for type A.

A facet pattern records, for each coordinate of a strictly decreasing
integer point, its multiple of ell and a *symbol* rank: coordinate
i has value m_i * ell + x_{s_i} where the symbols satisfy
0 = x_0 < x_1 < ... < x_{sigma-1} < ell.  Two coordinates sharing a symbol
are congruent mod ell; their difference is an exact multiple of ell, which
is what creates a wall-crossing constraint.

Patterns are normalized so the last (smallest) entry is (0, 0) and the
symbol ranks used are exactly 0..sigma-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .limits import check_size
from .young import StandardTableau, check_partition, standard_tableaux


@dataclass(frozen=True)
class FacetPattern:
    """Symbolic facet: entries are (multiple-of-ell, symbol-rank) pairs,
    listed in strictly decreasing order."""

    entries: tuple[tuple[int, int], ...]
    num_symbols: int
    ell: int

    def __post_init__(self):
        entries = tuple((int(m), int(s)) for m, s in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.ell < 2:
            raise ValueError("ell must be at least 2")
        if not entries:
            raise ValueError("pattern needs at least one entry")
        if self.num_symbols > self.ell:
            raise ValueError(
                f"{self.num_symbols} symbols cannot be realized below ell={self.ell}"
            )
        if any(m < 0 or not 0 <= s < self.num_symbols for m, s in entries):
            raise ValueError(f"entry out of range in {entries}")
        if any(entries[i] <= entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"entries must strictly decrease: {entries}")
        if entries[-1] != (0, 0):
            raise ValueError(f"smallest entry must be (0, 0), got {entries[-1]}")
        if {s for _, s in entries} != set(range(self.num_symbols)):
            raise ValueError("symbol ranks must be contiguous from 0")

    @property
    def size(self) -> int:
        return len(self.entries)

    def coordinates(self, symbol_values) -> tuple[int, ...]:
        """Concrete point for an admissible symbol assignment (x_0 = 0)."""
        if len(symbol_values) != self.num_symbols:
            raise ValueError("one value per symbol required")
        return tuple(m * self.ell + symbol_values[s] for m, s in self.entries)

    def generic_point(self) -> tuple[int, ...]:
        """The point with x_j = j (the smallest admissible assignment)."""
        return self.coordinates(tuple(range(self.num_symbols)))

    def _closure_vertices(self):
        """Vertices of the closed symbol box 0 <= x_1 <= ... <= x_{sigma-1} <= ell."""
        for t in range(1, self.num_symbols + 1):
            values = tuple(
                self.ell if s >= t else 0 for s in range(self.num_symbols)
            )
            yield self.coordinates(values)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def standard_facet(lam, ell: int) -> FacetPattern:
    """The facet of a partition's superstandard point: box (r, c) -> (r, c).

    >>> standard_facet((2, 1), 5).entries
    ((1, 0), (0, 1), (0, 0))
    """
    parts = check_partition(lam)
    entries = sorted(
        ((r, c) for r, length in enumerate(parts) for c in range(length)),
        reverse=True,
    )
    return FacetPattern(tuple(entries), parts[0], ell)


def tableau_facet(t: StandardTableau, ell: int) -> FacetPattern:
    """Lowest facet whose columns sit on common mod-ell ladders.

    Entries are processed from n down to 1; entry i must land strictly
    above entry i+1.  An entry sitting on top of another one in its
    column keeps that entry's symbol at the smallest admissible level --
    one step of ell above it, or more when interleaving entries force a
    higher rung.  A column bottom reuses the level of the previously
    processed entry and opens a fresh symbol immediately above that
    entry's symbol.
    """
    n = t.size
    if n == 0:
        raise ValueError("tableau must be nonempty")
    level: dict[int, int] = {}
    symbol: dict[int, object] = {}
    order: list = []  # symbol ids, smallest residue first
    for i in range(n, 0, -1):
        below = t.entry_below(i)
        if i == n:
            level[i] = 0
            symbol[i] = object()
            order.append(symbol[i])
        elif below is not None:
            sym = symbol[below]
            m = level[below] + 1
            prev = (level[i + 1], order.index(symbol[i + 1]))
            if (m, order.index(sym)) <= prev:
                m = prev[0] + (0 if order.index(sym) > prev[1] else 1)
            level[i] = m
            symbol[i] = sym
        else:
            level[i] = level[i + 1]
            fresh = object()
            order.insert(order.index(symbol[i + 1]) + 1, fresh)
            symbol[i] = fresh
    rank = {sym: r for r, sym in enumerate(order)}
    entries = tuple((level[i], rank[symbol[i]]) for i in range(1, n + 1))
    return FacetPattern(entries, len(order), ell)


def facet_from_point(y, ell: int) -> FacetPattern:
    """Pattern of the facet whose interior contains the strictly
    decreasing integer point y (with y[-1] == 0)."""
    y = tuple(int(c) for c in y)
    if any(y[i] <= y[i + 1] for i in range(len(y) - 1)):
        raise ValueError(f"point must be strictly decreasing: {y}")
    if y[-1] != 0:
        raise ValueError("point must end at 0 (shift it first)")
    residues = sorted({c % ell for c in y})
    rank = {res: r for r, res in enumerate(residues)}
    entries = tuple((c // ell, rank[c % ell]) for c in y)
    return FacetPattern(entries, len(residues), ell)


# ---------------------------------------------------------------------------
# invariants of a pattern
# ---------------------------------------------------------------------------


def _symbol_positions(pattern: FacetPattern) -> list[list[int]]:
    """Positions (1-based) of each symbol class, classes ordered by first
    occurrence in the pattern."""
    seen: dict[int, list[int]] = {}
    for pos, (_, s) in enumerate(pattern.entries, start=1):
        seen.setdefault(s, []).append(pos)
    return list(seen.values())


def facet_k(pattern: FacetPattern) -> int:
    """Number of same-symbol coordinate pairs (the depth of the facet)."""
    return sum(len(ps) * (len(ps) - 1) // 2 for ps in _symbol_positions(pattern))


def stabilizer_simple_roots(pattern: FacetPattern) -> tuple[tuple[int, int, int], ...]:
    """Simple roots e_i - e_j of the facet stabilizer, as (i, j, level).

    Consecutive positions within each symbol class; level is the exact
    multiple of ell separating the two coordinates.
    """
    out = []
    for ps in _symbol_positions(pattern):
        for a, b in zip(ps, ps[1:]):
            lvl = pattern.entries[a - 1][0] - pattern.entries[b - 1][0]
            out.append((a, b, lvl))
    return tuple(out)


def cone_contains(pattern: FacetPattern, y) -> bool:
    """Whether the point y satisfies every stabilizer wall inequality
    y_i - y_j >= level * ell of the pattern."""
    if len(y) != pattern.size:
        raise ValueError(f"point has {len(y)} coordinates, pattern {pattern.size}")
    return all(
        y[i - 1] - y[j - 1] >= lvl * pattern.ell
        for i, j, lvl in stabilizer_simple_roots(pattern)
    )


# ---------------------------------------------------------------------------
# the closure order on patterns
# ---------------------------------------------------------------------------


def facet_leq(p: FacetPattern, q: FacetPattern) -> bool:
    """p <= q: every point of q's closed cell satisfies p's wall inequalities.

    The inequalities are linear in the symbol values, so checking the
    vertices of the closed symbol box of q is exact.
    """
    if p.size != q.size:
        raise ValueError("patterns must have the same number of coordinates")
    if p.ell != q.ell:
        raise ValueError("patterns must share the same ell")
    constraints = stabilizer_simple_roots(p)
    for vertex in q._closure_vertices():
        for i, j, lvl in constraints:
            if vertex[i - 1] - vertex[j - 1] < lvl * p.ell:
                return False
    return True


def facet_strictly_less(p: FacetPattern, q: FacetPattern) -> bool:
    """Strict version of the closure order.

    Note this is leq(p, q) and not leq(q, p): distinct patterns can share a
    flat and be <= each other, in which case neither is strictly less.
    """
    return facet_leq(p, q) and not facet_leq(q, p)


# ---------------------------------------------------------------------------
# minimality
# ---------------------------------------------------------------------------


def _descending_points(total, prefixes, residue_pool, ell, n):
    """Strictly decreasing n-tuples ending in 0 with the given coordinate
    sum, residue multiset mod ell, and prefix sums bounded by ``prefixes``."""
    out = []
    ys: list[int] = []

    def rec(i, prev, acc):
        if i == n - 1:
            if acc + 0 == total and prev > 0 and residue_pool.get(0, 0) > 0:
                out.append(tuple(ys) + (0,))
            return
        rest = n - 2 - i  # strictly-decreasing positive values still to pick
        hi = min(prev - 1, prefixes[i] - acc, total - acc - rest * (rest + 1) // 2)
        for y in range(hi, rest, -1):
            r = y % ell
            if residue_pool.get(r, 0) == 0:
                continue
            remaining = total - acc - y
            max_rest = rest * y - rest * (rest + 1) // 2
            if remaining > max_rest:
                continue
            residue_pool[r] -= 1
            ys.append(y)
            rec(i + 1, y, acc + y)
            ys.pop()
            residue_pool[r] += 1

    rec(0, 10**9, 0)
    return out


def is_minimal(pattern: FacetPattern) -> bool:
    """Whether no facet of the same translation class lies strictly below.

    Candidates are read off from the strictly decreasing points with the
    same coordinate sum and residue multiset as the pattern's generic
    point, bounded above by it in the dominance order.
    """
    n = pattern.size
    check_size(n, "pattern size")
    g = pattern.generic_point()
    prefixes = [sum(g[: i + 1]) for i in range(n)]
    pool: dict[int, int] = {}
    for c in g:
        pool[c % pattern.ell] = pool.get(c % pattern.ell, 0) + 1
    for y in _descending_points(sum(g), prefixes, pool, pattern.ell, n):
        cand = facet_from_point(y, pattern.ell)
        if cand != pattern and facet_strictly_less(cand, pattern):
            return False
    return True


def _class_size_matched_patterns(pattern: FacetPattern):
    """All patterns with the same multiset of symbol-class sizes as
    ``pattern`` and levels bounded by its depth (plus one)."""
    sizes = sorted(len(ps) for ps in _symbol_positions(pattern))
    sigma = pattern.num_symbols
    top = max(m for m, _ in pattern.entries) + 1
    pool = range(top + 1)
    for perm in sorted(set(permutations(sizes))):
        options = []
        for r in range(sigma):
            opts = list(combinations(pool, perm[r]))
            if r == 0:
                opts = [o for o in opts if 0 in o]
            options.append(opts)
        for choice in product(*options):
            entries = tuple(
                sorted(
                    ((m, r) for r, mset in enumerate(choice) for m in mset),
                    reverse=True,
                )
            )
            yield FacetPattern(entries, sigma, pattern.ell)


def strongly_minimal_facets(lam, ell: int) -> tuple[FacetPattern, ...]:
    """Tableau facets of the shape lam that no class-size-matched pattern
    undercuts in the closure order, sorted by entries."""
    parts = check_partition(lam)
    check_size(sum(parts), "partition size")
    facets = []
    for t in standard_tableaux(parts):
        f = tableau_facet(t, ell)
        if f not in facets:
            facets.append(f)
    survivors = []
    for f in facets:
        if any(
            p != f and facet_strictly_less(p, f)
            for p in _class_size_matched_patterns(f)
        ):
            continue
        survivors.append(f)
    return tuple(sorted(survivors, key=lambda f: f.entries))


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def pattern_str(pattern: FacetPattern) -> str:
    """Symbolic coordinates, e.g. "(2l, l+x1, l, 0)"."""
    terms = []
    for m, s in pattern.entries:
        parts = []
        if m:
            parts.append("l" if m == 1 else f"{m}l")
        if s:
            parts.append(f"x{s}")
        terms.append("+".join(parts) if parts else "0")
    return "(" + ", ".join(terms) + ")"


def roots_str(pattern: FacetPattern) -> str:
    return ",".join(f"e{i}-e{j}" for i, j, _ in stabilizer_simple_roots(pattern))


def table_rows(lam, ell: int) -> list[str]:
    """One formatted row per strongly minimal facet of the shape:
    "pattern | depth | stabilizer roots"."""
    return [
        f"{pattern_str(f)} | {facet_k(f)} | {roots_str(f)}".rstrip()
        for f in strongly_minimal_facets(lam, ell)
    ]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
