"""Finite root systems: Cartan data, positive roots, and exact pairings.

Positive roots are stored as integer coefficient vectors over the simple
roots and are generated by the string-closure algorithm from the Cartan
matrix (nothing is hard-coded per type beyond the matrix itself).

Conventions: ``a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`` and the
symmetrizer ``d[i] = (alpha_i, alpha_i)/2`` with short roots of squared
length 2.  Weights are given in fundamental-weight coordinates, so
``(x, alpha_j) = d[j] * x[j]`` for a fundamental-coordinate vector x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def _chain_matrix(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cartan_data(letter: str, n: int) -> tuple[list[list[int]], list[int]]:
    if letter == "A":
        return _chain_matrix(n), [1] * n
    if letter == "B":
        a = _chain_matrix(n)
        a[n - 1][n - 2] = -2
        return a, [2] * (n - 1) + [1]
    if letter == "C":
        a = _chain_matrix(n)
        a[n - 2][n - 1] = -2
        return a, [1] * (n - 1) + [2]
    if letter == "D":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a, [1] * n
    if letter == "E":
        edges = [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for u, v in edges:
            if u <= n and v <= n:
                a[u - 1][v - 1] = a[v - 1][u - 1] = -1
        return a, [1] * n
    if letter == "F":
        a = _chain_matrix(4)
        a[2][1] = -2
        return a, [2, 2, 1, 1]
    if letter == "G":
        return [[2, -3], [-1, 2]], [1, 3]
    raise ValueError(f"unknown type letter {letter!r}")


def _closure(a: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """All positive roots from the Cartan matrix, via root strings.

    beta + alpha_i is a root iff the string length below beta exceeds the
    pairing: q = p - <beta, alpha_i^vee> >= 1, where p is the number of
    steps one can walk down from beta along alpha_i.
    """
    n = len(a)
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simples)
    level = list(simples)
    while level:
        nxt = []
        for c in level:
            for i in range(n):
                pairing = sum(c[j] * a[i][j] for j in range(n))
                p = 0
                cur = list(c)
                while True:
                    cur[i] -= 1
                    if cur[i] < 0 or tuple(cur) not in roots:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(c)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.append(t)
        level = nxt
    return tuple(sorted(roots, key=lambda c: (sum(c), c)))


@dataclass(frozen=True)
class RootSystem:
    """An irreducible finite root system of a given Cartan type."""

    cartan_type: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]

    # -- structural data ------------------------------------------------

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def rho(self) -> tuple[int, ...]:
        """Half-sum of positive roots, in fundamental coordinates."""
        return (1,) * self.rank

    def root_height(self, alpha) -> int:
        return sum(alpha)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=self.root_height)

    @property
    def coxeter_number(self) -> int:
        return self.root_height(self.highest_root) + 1

    # -- bilinear form ----------------------------------------------------

    def inner(self, alpha, beta) -> int:
        """(alpha, beta) for two root coefficient vectors."""
        d, a = self.symmetrizer, self.cartan_matrix
        return sum(
            alpha[i] * beta[j] * d[i] * a[i][j]
            for i in range(self.rank)
            for j in range(self.rank)
            if alpha[i] and beta[j]
        )

    def pairing(self, x, alpha) -> int:
        """(x, alpha) for x in fundamental coordinates, alpha a root vector.

        Note: callers wanting the rho-shifted value pass x = lam + rho
        themselves; nothing is added here.
        """
        d = self.symmetrizer
        return sum(c * d[j] * x[j] for j, c in enumerate(alpha) if c)

    def coroot_pairing(self, x, alpha):
        """<x, alpha^vee> = 2 (x, alpha) / (alpha, alpha)."""
        num = 2 * self.pairing(x, alpha)
        den = self.inner(alpha, alpha)
        q, r = divmod(num, den)
        return q if r == 0 else num / den

    # -- weights and levels ----------------------------------------------

    def shifted_weight(self, lam) -> tuple[int, ...]:
        """lam + rho in fundamental coordinates."""
        self._check_weight(lam)
        return tuple(c + 1 for c in lam)

    def _check_weight(self, lam) -> None:
        if len(lam) != self.rank:
            raise ValueError(
                f"weight has {len(lam)} coordinates; {self.cartan_type} needs {self.rank}"
            )

    def is_dominant(self, lam) -> bool:
        self._check_weight(lam)
        return all(c >= 0 for c in lam)

    def is_regular_weight(self, lam, ell: int) -> bool:
        """True when no pairing (lam + rho, alpha) is divisible by ell."""
        shifted = self.shifted_weight(lam)
        return all(
            self.pairing(shifted, alpha) % ell != 0 for alpha in self.positive_roots
        )

    def validate_level(self, ell: int) -> int:
        """Check that ell is an admissible odd level for this type."""
        if ell % 2 == 0:
            raise ValueError(f"level ell={ell} must be odd")
        if ell <= self.coxeter_number:
            raise ValueError(
                f"level ell={ell} must exceed the Coxeter number "
                f"{self.coxeter_number} of {self.cartan_type}"
            )
        if self.cartan_type.startswith("G") and ell % 3 == 0:
            raise ValueError(f"level ell={ell} must be prime to 3 for G2")
        return ell


@lru_cache(maxsize=None)
def root_system(cartan_type: str) -> RootSystem:
    """Build the root system for a Cartan type label like "A2" or "E8".

    >>> root_system("G2").num_positive_roots
    6
    >>> root_system("B2").positive_roots
    ((0, 1), (1, 0), (1, 1), (1, 2))
    """
    m = _TYPE_RE.match(cartan_type.strip())
    if not m:
        raise ValueError(f"malformed Cartan type {cartan_type!r}; expected e.g. 'A2'")
    letter, n = m.group(1), int(m.group(2))
    if letter in _MIN_RANK and n < _MIN_RANK[letter]:
        raise ValueError(f"type {letter} needs rank >= {_MIN_RANK[letter]}")
    if letter == "E" and n not in (6, 7, 8):
        raise ValueError("type E exists only in ranks 6, 7, 8")
    if letter == "F" and n != 4:
        raise ValueError("type F exists only in rank 4")
    if letter == "G" and n != 2:
        raise ValueError("type G exists only in rank 2")
    a, d = _cartan_data(letter, n)
    for i in range(n):
        for j in range(n):
            assert d[i] * a[i][j] == d[j] * a[j][i], "symmetrizer mismatch"
    return RootSystem(
        cartan_type=f"{letter}{n}",
        rank=n,
        cartan_matrix=tuple(tuple(row) for row in a),
        symmetrizer=tuple(d),
        positive_roots=_closure(a),
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
