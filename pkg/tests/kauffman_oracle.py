"""Brute-force Kauffman state sum for braid closures.

Independent oracle for the diagram-algebra pipeline: enumerates all 2^c
smoothings of a c-crossing braid word, counts the loops of each smoothed
closure with union-find on a grid of cut points, and accumulates
A^(smoothing weight) * delta^loops with plain dict arithmetic.  No
Temperley-Lieb code is reused.
"""

from __future__ import annotations

from tiltnull.laurent import LaurentPolynomial


def _poly_mul_delta(term: dict) -> dict:
    """Multiply an exponent->coeff dict by delta = -A^2 - A^{-2}."""
    out: dict = {}
    for e, c in term.items():
        out[e + 2] = out.get(e + 2, 0) - c
        out[e - 2] = out.get(e - 2, 0) - c
    return out


def bracket_closure(word, strands: int) -> LaurentPolynomial:
    """Bracket value of the braid closure, every closed loop worth delta."""
    word = list(word)
    c = len(word)
    total: dict = {}
    for mask in range(1 << c):
        parent = {(i, p): (i, p) for i in range(c + 1) for p in range(strands)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        exp = 0
        for idx, letter in enumerate(word):
            j = abs(letter) - 1
            cupcap = (mask >> idx) & 1
            sign = 1 if letter > 0 else -1
            exp += -sign if cupcap else sign
            for p in range(strands):
                if p != j and p != j + 1:
                    union((idx, p), (idx + 1, p))
            if cupcap:
                union((idx, j), (idx, j + 1))
                union((idx + 1, j), (idx + 1, j + 1))
            else:
                union((idx, j), (idx + 1, j))
                union((idx, j + 1), (idx + 1, j + 1))
        for p in range(strands):
            union((c, p), (0, p))
        loops = len({find(n) for n in parent})
        term = {exp: 1}
        for _ in range(loops):
            term = _poly_mul_delta(term)
        for e, co in term.items():
            total[e] = total.get(e, 0) + co
    return LaurentPolynomial(total)
