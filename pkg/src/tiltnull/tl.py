"""Temperley-Lieb diagrams, Jones-Wenzl projectors, and colored bracket
invariants of braid closures.

A diagram on w strands is a perfect matching of the 2w boundary points
0..w-1 (bottom, left to right) and w..2w-1 (top, left to right), stored as
an involution tuple.  Braid letters expand by the Kauffman skein rule

    positive crossing -> A * id + A^{-1} * e,
    negative crossing -> A^{-1} * id + A * e,

with closed-loop value delta = -A^2 - A^{-2}.  Strands may carry colors:
color m cables the strand m-fold and inserts the m-th Jones-Wenzl
projector, so the closure of the empty braid on one m-colored strand is
(-1)^m [m+1] evaluated at v = A^2.

Everything is exact: coefficients are Laurent polynomials in A (or, for
wide cabled computations, integer jets modulo a power of a cyclotomic
polynomial in A).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .dims import NotKNegligibleError
from .laurent import (
    LaurentPolynomial,
    NumberFieldElement,
    _cyclotomic_dense,
    _list_divmod,
    _list_mul,
    _list_sub,
    cyclotomic,
    phi_valuation,
    quantum_integer,
)

DELTA = LaurentPolynomial({2: -1, -2: -1})


@lru_cache(maxsize=None)
def delta_power(k: int) -> LaurentPolynomial:
    return LaurentPolynomial.one() if k == 0 else delta_power(k - 1) * DELTA

FULL_WIDTH_LIMIT = 10
JET_WIDTH_LIMIT = 12
NULLITY_WIDTH_LIMIT = 8


def quantum_integer_A(m: int) -> LaurentPolynomial:
    """[m] with v specialized to A^2 (a Laurent polynomial in A)."""
    return LaurentPolynomial({2 * e: c for e, c in quantum_integer(m).coeffs.items()})


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------


def identity_diagram(w: int) -> tuple[int, ...]:
    return tuple(list(range(w, 2 * w)) + list(range(w)))


@lru_cache(maxsize=None)
def e_diagram(w: int, i: int) -> tuple[int, ...]:
    """Cup-cap generator joining strands i, i+1 (0-based)."""
    if not 0 <= i <= w - 2:
        raise ValueError(f"e index {i} out of range for width {w}")
    m = list(identity_diagram(w))
    m[i], m[i + 1] = i + 1, i
    m[w + i], m[w + i + 1] = w + i + 1, w + i
    return tuple(m)


def compose(upper, lower, w: int) -> tuple[tuple[int, ...], int]:
    """Stack ``upper`` on top of ``lower`` (lower applied first).

    Returns the resulting diagram and the number of closed loops created
    in the middle.
    """
    match = [None] * (2 * w)
    visited = [False] * w  # middle junctions
    for start in range(2 * w):
        if match[start] is not None:
            continue
        in_lower = start < w
        cur = start
        while True:
            if in_lower:
                q = lower[cur]
                if q < w:
                    end = q
                    break
                visited[q - w] = True
                in_lower, cur = False, q - w
            else:
                q = upper[cur]
                if q >= w:
                    end = q
                    break
                visited[q] = True
                in_lower, cur = True, w + q
        match[start] = end
        match[end] = start
    # junctions untouched by any boundary walk pair off into closed loops
    loops = 0
    seen = [False] * w
    for j0 in range(w):
        if visited[j0] or seen[j0]:
            continue
        loops += 1
        j = j0
        while not seen[j]:
            seen[j] = True
            j1 = upper[j]
            seen[j1] = True
            j = lower[w + j1] - w
    return tuple(match), loops


def closure_loops(diagram, w: int) -> int:
    """Loops of the Markov closure (top i glued to bottom i)."""
    parent = list(range(2 * w))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for p in range(2 * w):
        union(p, diagram[p])
    for i in range(w):
        union(i, w + i)
    return len({find(p) for p in range(2 * w)})


def noncrossing_diagrams(w: int) -> list[tuple[int, ...]]:
    """The full diagram basis: planar matchings of the closed boundary."""

    def node(p: int) -> int:
        return p if p < w else 3 * w - 1 - p

    results: list[tuple[int, ...]] = []

    def rec(avail: tuple[int, ...]):
        if not avail:
            yield ()
            return
        first = avail[0]
        for idx in range(1, len(avail), 2):
            partner = avail[idx]
            for inside in rec(avail[1:idx]):
                for outside in rec(avail[idx + 1 :]):
                    yield ((first, partner),) + inside + outside

    for pairs in rec(tuple(range(2 * w))):
        m = [0] * (2 * w)
        for a, b in pairs:
            m[node(a)], m[node(b)] = node(b), node(a)
        results.append(tuple(m))
    assert len(results) == catalan(w), "diagram basis miscounted"
    return results


# ---------------------------------------------------------------------------
# elements of the diagram algebra
# ---------------------------------------------------------------------------


class TLElement:
    """A linear combination of diagrams over Laurent polynomials in A,
    divided by one global Laurent denominator."""

    __slots__ = ("width", "terms", "den")

    def __init__(self, width, terms, den=None):
        self.width = width
        self.terms = {d: c for d, c in terms.items() if not c.is_zero}
        self.den = den if den is not None else LaurentPolynomial.one()

    @classmethod
    def from_diagram(cls, d, w) -> "TLElement":
        return cls(w, {tuple(d): LaurentPolynomial.one()})

    @classmethod
    def identity(cls, w) -> "TLElement":
        return cls.from_diagram(identity_diagram(w), w)

    def scaled(self, num, den=None) -> "TLElement":
        terms = {d: c * num for d, c in self.terms.items()}
        new_den = self.den if den is None else self.den * den
        return TLElement(self.width, terms, new_den)

    def add(self, other: "TLElement") -> "TLElement":
        if self.width != other.width:
            raise ValueError("widths differ")
        terms = {d: c * other.den for d, c in self.terms.items()}
        for d, c in other.terms.items():
            terms[d] = terms.get(d, LaurentPolynomial.zero()) + c * self.den
        return TLElement(self.width, terms, self.den * other.den)

    def multiply(self, other: "TLElement") -> "TLElement":
        """self stacked on top of other (other applied first)."""
        if self.width != other.width:
            raise ValueError("widths differ")
        w = self.width
        terms: dict = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = compose(d1, d2, w)
                c = c1 * c2
                if loops:
                    c = c * delta_power(loops)
                terms[d] = terms.get(d, LaurentPolynomial.zero()) + c
        return TLElement(w, terms, self.den * other.den)

    def tensor(self, other: "TLElement") -> "TLElement":
        w1, w2 = self.width, other.width
        w = w1 + w2

        def remap(d1, d2):
            m = [0] * (2 * w)
            for p in range(2 * w1):
                q = d1[p]
                m[p if p < w1 else p + w2] = q if q < w1 else q + w2
            for p in range(2 * w2):
                q = d2[p]
                m[p + w1 if p < w2 else p + 2 * w1] = (
                    q + w1 if q < w2 else q + 2 * w1
                )
            return tuple(m)

        terms = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                terms[remap(d1, d2)] = c1 * c2
        return TLElement(w, terms, self.den * other.den)

    def trace_closure(self) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """Markov trace as an exact fraction (numerator, denominator)."""
        num = LaurentPolynomial.zero()
        for d, c in self.terms.items():
            num = num + c * delta_power(closure_loops(d, self.width))
        return num, self.den

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TLElement) or self.width != other.width:
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        z = LaurentPolynomial.zero()
        return all(
            self.terms.get(d, z) * other.den == other.terms.get(d, z) * self.den
            for d in keys
        )

    def __repr__(self):
        return f"TLElement(width={self.width}, {len(self.terms)} diagrams)"


def braid_generator(w: int, letter: int) -> TLElement:
    """sigma_j (letter > 0) or its inverse (letter < 0) as a TL element."""
    j = abs(letter) - 1
    a = 1 if letter > 0 else -1
    return TLElement(
        w,
        {
            identity_diagram(w): LaurentPolynomial.monomial(a),
            e_diagram(w, j): LaurentPolynomial.monomial(-a),
        },
    )


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def chebyshev_delta(m: int) -> LaurentPolynomial:
    """Delta_m = delta * Delta_{m-1} - Delta_{m-2}; equals (-1)^m [m+1] at
    v = A^2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return LaurentPolynomial.one()
    if m == 1:
        return DELTA
    return DELTA * chebyshev_delta(m - 1) - chebyshev_delta(m - 2)


@lru_cache(maxsize=None)
def _jones_wenzl(m: int) -> tuple:
    if m < 1:
        raise ValueError("projector index must be >= 1")
    if m == 1:
        return ((identity_diagram(1), LaurentPolynomial.one()),), LaurentPolynomial.one()
    prev_terms, q = _jones_wenzl(m - 1)
    prev = TLElement(m - 1, dict(prev_terms), q)
    ext = prev.tensor(TLElement.identity(1))
    mid = ext.multiply(TLElement.from_diagram(e_diagram(m, m - 2), m)).multiply(ext)
    dm1, dm2 = chebyshev_delta(m - 1), chebyshev_delta(m - 2)
    # combine over the common denominator q^2 * dm1, then cancel one factor
    # of q (the reduced denominators only grow by one Chebyshev factor)
    terms = {d: c * (q * dm1) for d, c in ext.terms.items()}
    for d, c in mid.terms.items():
        terms[d] = terms.get(d, LaurentPolynomial.zero()) - dm2 * c
    terms = {d: c for d, c in terms.items() if not c.is_zero}
    try:
        terms = {d: c.exact_div(q) for d, c in terms.items()}
        den = q * dm1
    except ValueError:  # pragma: no cover - cancellation always succeeds
        den = q * q * dm1
    return tuple(terms.items()), den


def jones_wenzl(m: int) -> TLElement:
    """The m-strand Jones-Wenzl projector.

    >>> f2 = jones_wenzl(2)
    >>> sorted(c.to_str("A") for c in f2.terms.values())
    ['-1', '-A^-2 - A^2']
    """
    terms, den = _jones_wenzl(m)
    return TLElement(m, dict(terms), den)


# ---------------------------------------------------------------------------
# braids, cabling, colors
# ---------------------------------------------------------------------------


def _check_word(word, strands: int) -> list[int]:
    word = [int(x) for x in word]
    if strands < 1:
        raise ValueError("strands must be >= 1")
    for letter in word:
        if letter == 0 or abs(letter) > strands - 1:
            raise ValueError(f"letter {letter} invalid on {strands} strands")
    return word


def braid_permutation(word, strands: int) -> tuple[int, ...]:
    """perm[i] = final position of the strand starting at position i."""
    word = _check_word(word, strands)
    pos = list(range(strands))  # pos[i] = current position of strand i
    for letter in word:
        j = abs(letter) - 1
        for i in range(strands):
            if pos[i] == j:
                pos[i] = j + 1
            elif pos[i] == j + 1:
                pos[i] = j
    return tuple(pos)


def braid_components(word, strands: int) -> list[tuple[int, ...]]:
    """Cycles of the closure permutation; one cycle per link component."""
    perm = braid_permutation(word, strands)
    seen = [False] * strands
    cycles = []
    for i in range(strands):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(tuple(cyc))
    return cycles


def cable_letters(word, strands: int, colors) -> tuple[list[int], list[int]]:
    """Expand a braid word for cabled strands of the given widths.

    A positive crossing of bundles of widths (wa, wb) starting at 1-based
    offset P becomes the letters sigma_{P+r+c} for r = wa-1..0, c =
    0..wb-1, applied in that order; negative crossings reverse and negate.
    """
    word = _check_word(word, strands)
    widths = [int(c) for c in colors]
    if len(widths) != strands or any(c < 1 for c in widths):
        raise ValueError("colors must give a positive width per strand")
    out = []
    ws = list(widths)
    for letter in word:
        j = abs(letter)
        wa, wb = ws[j - 1], ws[j]
        offset = sum(ws[: j - 1])
        block = [
            offset + r + c + 1 for r in range(wa - 1, -1, -1) for c in range(wb)
        ]
        if letter > 0:
            out.extend(block)
        else:
            out.extend(-x for x in reversed(block))
        ws[j - 1], ws[j] = wb, wa
    return out, ws


class _LaurentOps:
    """Coefficient ring operations for the full Laurent route."""

    @staticmethod
    def mul_A(c, s):
        return c.shift(s)

    @staticmethod
    def mul_delta(c, loops):
        return c * delta_power(loops)

    @staticmethod
    def accumulate(terms, d, c):
        prev = terms.get(d)
        c = c if prev is None else prev + c
        if c.is_zero:
            terms.pop(d, None)
        else:
            terms[d] = c


def _apply_letter(terms: dict, width: int, letter: int, ops) -> dict:
    j = abs(letter) - 1
    positive = letter > 0
    e = e_diagram(width, j)
    out: dict = {}
    for d, c in terms.items():
        ops.accumulate(out, d, ops.mul_A(c, 1 if positive else -1))
        d2, loops = compose(e, d, width)
        c2 = ops.mul_A(c, -1 if positive else 1)
        if loops:
            c2 = ops.mul_delta(c2, loops)
        ops.accumulate(out, d2, c2)
    return out


def _validate_coloring(word, strands, colors):
    colors = tuple(int(c) for c in colors)
    if len(colors) != strands or any(c < 1 for c in colors):
        raise ValueError("need one positive color per strand")
    for cycle in braid_components(word, strands):
        if len({colors[i] for i in cycle}) != 1:
            raise ValueError("strand colors must agree on each link component")
    return colors


def _colored_f_tensor(colors) -> TLElement:
    x = jones_wenzl(colors[0])
    for c in colors[1:]:
        x = x.tensor(jones_wenzl(c))
    return x


@lru_cache(maxsize=64)
def _closure_laurent(word, strands, colors) -> LaurentPolynomial:
    width = sum(colors)
    letters, ws = cable_letters(word, strands, colors)
    assert ws == list(colors), "coloring must be closure-consistent"
    x = _colored_f_tensor(colors)
    terms = dict(x.terms)
    for letter in letters:
        terms = _apply_letter(terms, width, letter, _LaurentOps)
    num = LaurentPolynomial.zero()
    for d, c in terms.items():
        num = num + c * delta_power(closure_loops(d, width))
    try:
        return num.exact_div(x.den)
    except ValueError:
        raise RuntimeError("denominator not a unit on this closure") from None


def colored_invariant(
    word, strands: int, colors=None, writhe_correct: bool = False,
    max_width: int = FULL_WIDTH_LIMIT,
) -> LaurentPolynomial:
    """Exact bracket invariant of the colored braid closure, as a Laurent
    polynomial in A.  Uncorrected for framing unless ``writhe_correct``
    (only meaningful for all colors 1, where it multiplies by
    (-A^3)^{-writhe})."""
    if colors is None:
        colors = (1,) * strands
    colors = _validate_coloring(word, strands, colors)
    width = sum(colors)
    if width > max_width:
        raise ValueError(
            f"cabled width {width} exceeds {max_width}; "
            "use modified_invariant/invariant_jet for wide cablings"
        )
    inv = _closure_laurent(tuple(_check_word(word, strands)), strands, colors)
    if writhe_correct:
        if any(c != 1 for c in colors):
            raise ValueError("writhe correction applies to all-1 colorings only")
        w = sum(1 if x > 0 else -1 for x in word)
        inv = inv * LaurentPolynomial.monomial(-3 * w, (-1) ** (w % 2))
    return inv


# ---------------------------------------------------------------------------
# object-level nullity
# ---------------------------------------------------------------------------


def object_nullity_tl(widths, ell: int, max_width: int = NULLITY_WIDTH_LIMIT) -> int:
    """Minimal Phi_ell-valuation of a Markov trace against the projector
    tensor for the multiset of colors ``widths`` = [(color, multiplicity)].

    This is the order of negligibility of the colored object itself: a
    single strand of color ell-1 gives 1, smaller colors give 0.
    """
    widths = [(int(c), int(m)) for c, m in widths]
    if any(c < 1 or m < 1 for c, m in widths):
        raise ValueError("colors and multiplicities must be positive")
    w = sum(c * m for c, m in widths)
    if w > max_width:
        raise ValueError(f"total width {w} exceeds {max_width}")
    flat = [c for c, m in widths for _ in range(m)]
    block = [i for i, c in enumerate(flat) for _ in range(c)]
    x = _colored_f_tensor(flat)
    den_val = phi_valuation(x.den, ell)
    best = None
    for p in noncrossing_diagrams(w):
        # an arc joining two same-side points of one projector block hits
        # that projector with a cup or cap, so the trace vanishes outright
        if any(
            p[a] > a and (a < w) == (p[a] < w) and block[a % w] == block[p[a] % w]
            for a in range(2 * w)
        ):
            continue
        buckets: dict[int, LaurentPolynomial] = {}
        for d, c in x.terms.items():
            d2, loops = compose(p, d, w)
            k = closure_loops(d2, w) + loops
            buckets[k] = buckets.get(k, LaurentPolynomial.zero()) + c
        num = LaurentPolynomial.zero()
        for k, s in buckets.items():
            num = num + delta_power(k) * s
        if num.is_zero:
            continue
        val = phi_valuation(num, ell) - den_val
        if best is None or val < best:
            best = val
            if best == 0:
                break
    if best is None:
        raise RuntimeError("all traces vanished; no valuation defined")
    return best


# ---------------------------------------------------------------------------
# jets: integer arithmetic modulo Phi_ell(A)^K
# ---------------------------------------------------------------------------


class _JetRing:
    """Z[A] / Phi_ell(A)^K with dense integer coefficient tuples.

    A is invertible here because Phi_ell(0) = 1, so Laurent polynomials in
    A reduce into the ring with integer coefficients.
    """

    def __init__(self, ell: int, K: int):
        phi = [Fraction(c) for c in _cyclotomic_dense(ell)]
        mod = [Fraction(1)]
        for _ in range(K):
            mod = _list_mul(mod, phi)
        assert all(c.denominator == 1 for c in mod)
        self.ell, self.K = ell, K
        self.modulus = [int(c) for c in mod]
        self.D = len(self.modulus) - 1
        self.zero = (0,) * self.D
        one = [0] * self.D
        one[0] = 1
        self.one = tuple(one)
        # A^D mod M and A^{-1} = (1 - M)/A (constant term of M is 1)
        self.a_top = tuple(-c for c in self.modulus[:-1])
        self.a_inv = tuple(-c for c in self.modulus[1:])
        delta = self.sub(
            self.zero, self.add(self.mul_A(self.mul_A(self.one, 1), 1),
                                self.mul_A(self.mul_A(self.one, -1), -1))
        )
        self._delta_pows = [self.one, delta]

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul_A(self, c, s: int):
        D = self.D
        if s > 0:
            top = c[D - 1]
            if top:
                at = self.a_top
                return tuple((c[i - 1] if i else 0) + top * at[i] for i in range(D))
            return (0,) + tuple(c[:-1])
        low = c[0]
        if low:
            ai = self.a_inv
            return tuple(
                (c[i + 1] if i < D - 1 else 0) + low * ai[i] for i in range(D)
            )
        return tuple(c[1:]) + (0,)

    def mul(self, a, b):
        prod = [0] * (2 * self.D - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        for i in range(len(prod) - 1, self.D - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.D):
                    prod[i - self.D + j] -= c * self.modulus[j]
        return tuple(prod[: self.D])

    def delta_pow(self, k: int):
        while len(self._delta_pows) <= k:
            self._delta_pows.append(
                self.mul(self._delta_pows[-1], self._delta_pows[1])
            )
        return self._delta_pows[k]

    def from_laurent(self, f: LaurentPolynomial):
        out = self.zero
        for e, c in f.coeffs.items():
            assert c.denominator == 1, "jet route needs integer coefficients"
            mono = self.one
            step = 1 if e >= 0 else -1
            for _ in range(abs(e)):
                mono = self.mul_A(mono, step)
            out = self.add(out, tuple(int(c) * x for x in mono))
        return out

    # rational endgame -----------------------------------------------------

    def inverse_rational(self, a) -> list[Fraction]:
        """Inverse of an integer jet over Q[A]/M via extended Euclid."""
        mod = [Fraction(c) for c in self.modulus]
        r0, r1 = mod, [Fraction(c) for c in a]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _list_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _list_sub(s0, _list_mul(q, s1))
        while r0 and not r0[-1]:
            r0.pop()
        if len(r0) != 1:
            raise ZeroDivisionError("jet denominator shares a factor with Phi^K")
        inv = [c / r0[0] for c in s0]
        _, rem = _list_divmod(inv, mod)
        rem += [Fraction(0)] * (self.D - len(rem))
        return rem[: self.D]

    def mul_rational(self, a, b) -> list[Fraction]:
        prod = _list_mul([Fraction(c) for c in a], [Fraction(c) for c in b])
        _, rem = _list_divmod(prod, [Fraction(c) for c in self.modulus])
        rem += [Fraction(0)] * (self.D - len(rem))
        return rem[: self.D]


class _JetOps:
    """Coefficient ring operations over a _JetRing.

    Jets live in mutable lists here so the letter loop can accumulate in
    place instead of churning tuples.
    """

    def __init__(self, ring: _JetRing):
        self.ring = ring
        self.zero = ring.zero

    def mul_A(self, c, s):
        return list(self.ring.mul_A(c, s))

    def mul_delta(self, c, loops):
        return list(self.ring.mul(c, self.ring.delta_pow(loops)))

    def accumulate(self, terms, d, c):
        prev = terms.get(d)
        if prev is None:
            terms[d] = c
            return
        for i, x in enumerate(c):
            prev[i] += x
        if not any(prev):
            del terms[d]


@lru_cache(maxsize=16)
def _jet_contract(word, strands, colors, ell, precision) -> tuple[Fraction, ...]:
    width = sum(colors)
    ring = _JetRing(ell, precision)
    ops = _JetOps(ring)
    letters, _ = cable_letters(word, strands, colors)
    x = _colored_f_tensor(colors)
    terms = {d: list(ring.from_laurent(c)) for d, c in x.terms.items()}
    terms = {d: c for d, c in terms.items() if any(c)}
    for letter in letters:
        terms = _apply_letter(terms, width, letter, ops)
    tr = ring.zero
    for d, c in terms.items():
        tr = ring.add(tr, ring.mul(c, ring.delta_pow(closure_loops(d, width))))
    return tuple(
        ring.mul_rational(tr, ring.inverse_rational(ring.from_laurent(x.den)))
    )


def invariant_jet(word, strands: int, colors, ell: int, precision: int) -> list[Fraction]:
    """Canonical representative (coefficient list, degree < precision *
    deg Phi_ell) of the colored invariant modulo Phi_ell(A)^precision.

    Runs the same cabled contraction as :func:`colored_invariant` but with
    integer jet coefficients, so widths beyond the full-Laurent limit stay
    tractable.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    colors = _validate_coloring(word, strands, colors)
    width = sum(colors)
    if width > JET_WIDTH_LIMIT:
        raise ValueError(f"cabled width {width} exceeds {JET_WIDTH_LIMIT}")
    return list(
        _jet_contract(tuple(_check_word(word, strands)), strands, colors, ell, precision)
    )


# ---------------------------------------------------------------------------
# modified invariants
# ---------------------------------------------------------------------------


def _eval_at_root(f: LaurentPolynomial, ell: int) -> NumberFieldElement:
    """Evaluate a Laurent polynomial in A at A_0 = x^{(ell+1)/2}, the square
    root of the primitive ell-th root x with A_0^2 = x, inside Q[x]/Phi_ell."""
    half = (ell + 1) // 2
    folded: dict[int, Fraction] = {}
    for e, c in f.coeffs.items():
        idx = (e * half) % ell
        folded[idx] = folded.get(idx, Fraction(0)) + c
    return NumberFieldElement.from_laurent(LaurentPolynomial(folded), ell)


def _canonical_value(f: LaurentPolynomial, ell: int, k: int) -> NumberFieldElement:
    """Value of f / Phi_ell(A)^k at A_0, extracted by k divided derivatives
    in v = A^2 and a unit correction.

    If f has Phi_ell(A)-valuation exactly k, writing f = Phi^k * g gives
    g(A_0) = (1/k!) (d/dv)^k f |_{A_0} * (2 A_0)^k * Phi'(A_0)^{-k}.
    """
    g = f
    for _ in range(k):
        g = g.derivative()
        g = LaurentPolynomial({e - 1: c / 2 for e, c in g.coeffs.items()})
    g = LaurentPolynomial({e: c / factorial(k) for e, c in g.coeffs.items()})
    value = _eval_at_root(g, ell)
    if k:
        a0 = _eval_at_root(LaurentPolynomial.var(), ell)
        phi_prime = _eval_at_root(cyclotomic(ell).derivative(), ell)
        unit = ((a0 * 2) ** k) * (phi_prime.inverse() ** k)
        value = value * unit
    return value


def modified_invariant(
    word, strands: int, colors, ell: int, k: int
) -> NumberFieldElement:
    """Order-k modified bracket invariant at the primitive 2*ell-th root.

    Requires the invariant to vanish to order >= k at the root (the
    coloring must be k-negligible); returns the value of the invariant
    divided by Phi_ell(A)^k, an element of Q[x]/Phi_ell.
    """
    if k < 0:
        raise ValueError("order k must be >= 0")
    colors = _validate_coloring(word, strands, colors)
    width = sum(colors)
    if width <= FULL_WIDTH_LIMIT:
        inv = colored_invariant(word, strands, colors)
        if inv.is_zero:
            return NumberFieldElement.zero(ell)
        if phi_valuation(inv, ell) < k:
            raise NotKNegligibleError("link not k-negligible for this coloring")
        return _canonical_value(inv, ell, k)
    rep = invariant_jet(word, strands, colors, ell, k + 1)
    phi = [Fraction(c) for c in _cyclotomic_dense(ell)]
    q = list(rep)
    for _ in range(k):
        q, r = _list_divmod(q, phi)
        if any(r):
            raise NotKNegligibleError("link not k-negligible for this coloring")
    return _canonical_value(
        LaurentPolynomial({i: c for i, c in enumerate(rep) if c}), ell, k
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
