"""Exact Laurent-polynomial, cyclotomic, and number-field arithmetic over Q.

Everything in this module is exact: coefficients are `fractions.Fraction`,
and no quantity is ever evaluated at a floating-point root of unity.
Evaluation "at a primitive N-th root of unity" always means reduction into
Q[x]/(Phi_N), carried out by polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


class InfiniteValuationError(ValueError):
    """The zero polynomial (or integer zero) has no finite valuation."""


def _fmt_q(c: Fraction) -> str:
    """Canonical 'p/q' string for a rational (plain 'p' when integral)."""
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _parse_q(s) -> Fraction:
    return Fraction(s)


class LaurentPolynomial:
    """A Laurent polynomial in one variable with rational coefficients.

    Stored as a map ``exponent -> nonzero Fraction``; the zero polynomial is
    the empty map.

    >>> v = LaurentPolynomial.var()
    >>> (v + v**-1) * (v - v**-1) == v**2 - v**-2
    True
    >>> print(quantum_integer(3))
    v^-2 + 1 + v^2
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    d[int(e)] = c
        self.coeffs = d

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def var(cls) -> "LaurentPolynomial":
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c) -> "LaurentPolynomial":
        return cls({0: c})

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def min_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        d: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = d.get(e, 0) + c1 * c2
                if s:
                    d[e] = s
                else:
                    del d[e]
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) == 1:
                ((e, c),) = self.coeffs.items()
                return LaurentPolynomial({e * n: Fraction(1, 1) / c ** (-n)})
            raise ValueError("negative powers only defined for monomials")
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _coerce(x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPolynomial.constant(x)
        raise TypeError(f"cannot coerce {type(x)!r} to LaurentPolynomial")

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by x^k."""
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def derivative(self) -> "LaurentPolynomial":
        """Formal derivative d/dx (valid for negative exponents too)."""
        return LaurentPolynomial({e - 1: c * e for e, c in self.coeffs.items() if e})

    def evaluate(self, x: Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        x = Fraction(x)
        if x == 0 and any(e < 0 for e in self.coeffs):
            raise ZeroDivisionError("negative exponents at x = 0")
        return sum((c * x**e for e, c in self.coeffs.items()), Fraction(0))

    def coefficient_sum(self) -> Fraction:
        """Sum of all coefficients (= evaluation at 1)."""
        return sum(self.coeffs.values(), Fraction(0))

    # -- division -----------------------------------------------------

    def poly_parts(self) -> tuple[int, list[Fraction]]:
        """Split off the unit monomial: self = x^shift * (honest polynomial).

        Returns ``(shift, coefficient list ascending)`` with a nonzero
        constant term.  Zero is returned as ``(0, [])``.
        """
        if not self.coeffs:
            return 0, []
        lo = self.min_degree()
        hi = self.degree()
        dense = [Fraction(0)] * (hi - lo + 1)
        for e, c in self.coeffs.items():
            dense[e - lo] = c
        return lo, dense

    @classmethod
    def from_poly_parts(cls, shift: int, dense) -> "LaurentPolynomial":
        return cls({shift + i: c for i, c in enumerate(dense) if c})

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ValueError if the remainder is nonzero."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return LaurentPolynomial.zero()
        s_lo, s = self.poly_parts()
        o_lo, o = other.poly_parts()
        q, r = _list_divmod(s, o)
        if any(r):
            raise ValueError("division is not exact")
        return LaurentPolynomial.from_poly_parts(s_lo - o_lo, q)

    def divisible_by(self, other: "LaurentPolynomial") -> bool:
        try:
            self.exact_div(other)
            return True
        except ValueError:
            return False

    # -- serialization / display --------------------------------------

    def to_json(self) -> dict:
        return {str(e): _fmt_q(c) for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPolynomial":
        return cls({int(e): _parse_q(c) for e, c in data.items()})

    def to_str(self, var: str = "v") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = _fmt_q(c)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{_fmt_q(c)}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_str()})"


def _list_divmod(num: list[Fraction], den: list[Fraction]):
    """Dense polynomial divmod (ascending coefficient lists)."""
    while den and not den[-1]:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(num)
    dn = len(den) - 1
    lead = den[-1]
    if len(r) - 1 < dn:
        return [], r
    q = [Fraction(0)] * (len(r) - dn)
    for i in range(len(r) - 1, dn - 1, -1):
        c = r[i]
        if not c:
            continue
        f = c / lead
        q[i - dn] = f
        for j, dc in enumerate(den):
            r[i - dn + j] -= f * dc
    while r and not r[-1]:
        r.pop()
    return q, r


# ---------------------------------------------------------------------------
# quantum integers and cyclotomic polynomials
# ---------------------------------------------------------------------------


def quantum_integer(m: int) -> LaurentPolynomial:
    """The balanced quantum integer [m] = v^(m-1) + v^(m-3) + ... + v^(1-m).

    [0] = 0 and [1] = 1; negative m is rejected.
    """
    if m < 0:
        raise ValueError("quantum_integer requires m >= 0")
    return LaurentPolynomial({e: 1 for e in range(1 - m, m, 2)})


@lru_cache(maxsize=None)
def _cyclotomic_dense(N: int) -> tuple[int, ...]:
    if N < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if N == 1:
        return (-1, 1)
    num = [0] * (N + 1)
    num[0], num[N] = -1, 1
    num = [Fraction(c) for c in num]
    for d in range(1, N):
        if N % d == 0:
            q, r = _list_divmod(num, [Fraction(c) for c in _cyclotomic_dense(d)])
            assert not any(r), "cyclotomic division must be exact"
            num = q
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def cyclotomic(N: int) -> LaurentPolynomial:
    """The N-th cyclotomic polynomial Phi_N in the polynomial variable.

    >>> print(cyclotomic(10).to_str("x"))
    1 - x + x^2 - x^3 + x^4
    """
    return LaurentPolynomial({i: c for i, c in enumerate(_cyclotomic_dense(N)) if c})


def phi_valuation(f: LaurentPolynomial, N: int) -> int:
    """Multiplicity of Phi_N in f, after stripping the unit monomial.

    Raises :class:`InfiniteValuationError` for f = 0.
    """
    if f.is_zero:
        raise InfiniteValuationError("zero polynomial has infinite valuation")
    _, dense = f.poly_parts()
    phi = [Fraction(c) for c in _cyclotomic_dense(N)]
    val = 0
    while True:
        q, r = _list_divmod(dense, phi)
        if any(r):
            return val
        val += 1
        dense = q


def int_valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if n == 0:
        raise InfiniteValuationError("zero has infinite valuation")
    n = abs(n)
    val = 0
    while n % p == 0:
        n //= p
        val += 1
    return val


# ---------------------------------------------------------------------------
# number field elements: Q[x]/(Phi_N)
# ---------------------------------------------------------------------------


def _reduce_mod_phi(dense: list[Fraction], N: int) -> tuple[Fraction, ...]:
    phi = [Fraction(c) for c in _cyclotomic_dense(N)]
    _, r = _list_divmod(dense, phi)
    deg = len(phi) - 1
    r = r + [Fraction(0)] * (deg - len(r))
    return tuple(r)


@dataclass(frozen=True)
class NumberFieldElement:
    """An element of Q[x]/(Phi_N), stored as a representative of degree < deg Phi_N.

    The class of x is a primitive N-th root of unity; in particular
    x^N = 1, so Laurent polynomials reduce by folding exponents mod N.
    """

    modulus_order: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeff_list(cls, N: int, dense) -> "NumberFieldElement":
        return cls(N, _reduce_mod_phi([Fraction(c) for c in dense], N))

    @classmethod
    def from_laurent(cls, f: LaurentPolynomial, N: int) -> "NumberFieldElement":
        """Reduce a Laurent polynomial at the class of x (folding exponents mod N)."""
        size = max(len(_cyclotomic_dense(N)) - 1, N)
        dense = [Fraction(0)] * size
        for e, c in f.coeffs.items():
            dense[e % N] += c
        return cls.from_coeff_list(N, dense)

    @classmethod
    def zero(cls, N: int) -> "NumberFieldElement":
        deg = len(_cyclotomic_dense(N)) - 1
        return cls(N, tuple(Fraction(0) for _ in range(deg)))

    @classmethod
    def one(cls, N: int) -> "NumberFieldElement":
        return cls.from_coeff_list(N, [1])

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "NumberFieldElement"):
        if self.modulus_order != other.modulus_order:
            raise ValueError("mixed cyclotomic moduli")

    def __add__(self, other: "NumberFieldElement") -> "NumberFieldElement":
        self._check(other)
        return NumberFieldElement(
            self.modulus_order,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "NumberFieldElement") -> "NumberFieldElement":
        self._check(other)
        return NumberFieldElement(
            self.modulus_order,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "NumberFieldElement":
        return NumberFieldElement(self.modulus_order, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "NumberFieldElement":
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(
                self.modulus_order, tuple(a * other for a in self.coeffs)
            )
        self._check(other)
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return NumberFieldElement.from_coeff_list(self.modulus_order, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "NumberFieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = NumberFieldElement.one(self.modulus_order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "NumberFieldElement":
        """Multiplicative inverse via extended Euclid against Phi_N."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q[x]/Phi_N")
        phi = [Fraction(c) for c in _cyclotomic_dense(self.modulus_order)]
        a = list(self.coeffs)
        # extended gcd over Q[x]: s*a + t*phi = gcd
        r0, r1 = phi, [c for c in a]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _list_divmod(r0, r1)
            r0, r1 = r1, r
            new_s = _list_sub(s0, _list_mul(q, s1))
            s0, s1 = s1, new_s
        # r0 = gcd (a nonzero constant since Phi_N is irreducible over Q)
        while r0 and not r0[-1]:
            r0.pop()
        if len(r0) != 1:
            raise ZeroDivisionError("element not invertible mod Phi_N")
        inv = [c / r0[0] for c in s0]
        return NumberFieldElement.from_coeff_list(self.modulus_order, inv)

    def to_json(self) -> dict:
        return {
            "N": self.modulus_order,
            "coeffs": [_fmt_q(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NumberFieldElement":
        return cls(int(data["N"]), tuple(_parse_q(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        poly = LaurentPolynomial({i: c for i, c in enumerate(self.coeffs) if c})
        return f"{poly.to_str('x')} (mod Phi_{self.modulus_order})"


def _list_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _list_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def derivative_eval(f: LaurentPolynomial, k: int, N: int) -> NumberFieldElement:
    """Class of f^(k) / k! in Q[x]/(Phi_N).

    The derivative is taken formally in the polynomial variable *before*
    reducing exponents mod N (differentiation and exponent folding do not
    commute).  For f with Phi_N-valuation exactly j, the result is zero
    for k < j and nonzero at k = j (Taylor criterion).
    """
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    g = f
    for _ in range(k):
        g = g.derivative()
    g = LaurentPolynomial({e: c / factorial(k) for e, c in g.coeffs.items()})
    return NumberFieldElement.from_laurent(g, N)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
