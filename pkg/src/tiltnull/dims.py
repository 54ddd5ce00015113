"""Weyl dimensions, nullities, and modified dimensions (quantum and modular).

The quantum Weyl dimension is computed exactly as a Laurent polynomial in v;
its order of vanishing at a primitive 2l-th root of unity (equivalently the
Phi_l-multiplicity, l odd) is the *nullity*, which also equals the number of
positive roots alpha with l | (lam + rho, alpha).  The modular analogue
replaces cyclotomic valuation with p-adic valuation of the integer Weyl
dimension pairings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .laurent import (
    LaurentPolynomial,
    NumberFieldElement,
    derivative_eval,
    int_valuation,
    phi_valuation,
)
from .roots import RootSystem, root_system


class NotKNegligibleError(ValueError):
    """Raised when a modified value of order k is requested but the
    relevant valuation is smaller than k."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _check_prime(p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"p={p} is not prime")
    return p


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------


def _binomial_product(exps) -> list[int]:
    """Dense coefficients of prod_e (x^e - 1)."""
    dense = [1]
    for e in exps:
        out = [0] * (len(dense) + e)
        for i, c in enumerate(dense):
            if c:
                out[i + e] += c
                out[i] -= c
        dense = out
    return dense


def _binomial_quotient(dense: list[int], e: int) -> list[int]:
    """Exact division of a dense polynomial by (x^e - 1).

    Uses the recurrence g[i] = g[i-e] - f[i]; the division must be exact.
    """
    n = len(dense)
    g = [0] * (n - e)
    for i in range(n - e):
        prev = g[i - e] if i >= e else 0
        g[i] = prev - dense[i]
    for i in range(n - e, n):
        prev = g[i - e] if 0 <= i - e < n - e else 0
        if dense[i] != prev:
            raise ValueError("binomial division not exact")
    return g


def quantum_weyl_dim(cartan_type: str, lam) -> LaurentPolynomial:
    """Exact quantum Weyl dimension of the dominant weight lam.

    Equals the product over positive roots of [ (lam+rho, alpha) ] divided
    by [ (rho, alpha) ], computed through one big binomial quotient so that
    even very large weights stay fast.

    >>> print(quantum_weyl_dim("A2", (1, 0)))
    v^-2 + 1 + v^2
    """
    rs = root_system(cartan_type)
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    shifted = rs.shifted_weight(lam)
    ns = [rs.pairing(shifted, a) for a in rs.positive_roots]
    ds = [rs.pairing(rs.rho, a) for a in rs.positive_roots]
    dense = _binomial_product(2 * n for n in ns)
    for d in ds:
        dense = _binomial_quotient(dense, 2 * d)
    return LaurentPolynomial.from_poly_parts(sum(ds) - sum(ns), dense)


def modular_weyl_dim(cartan_type: str, lam) -> int:
    """Ordinary Weyl dimension as an exact integer."""
    rs = root_system(cartan_type)
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    shifted = rs.shifted_weight(lam)
    dim = Fraction(1)
    for a in rs.positive_roots:
        dim *= Fraction(rs.pairing(shifted, a), rs.pairing(rs.rho, a))
    assert dim.denominator == 1
    return int(dim)


# ---------------------------------------------------------------------------
# nullity reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NullityReport:
    """Outcome of a nullity computation.

    ``witnesses`` lists the positive roots contributing, as pairs
    ``(root, value)`` where value is the divisible pairing (quantum mode)
    or the p-adic valuation of the pairing (modular mode).
    """

    cartan_type: str
    weight: tuple[int, ...]
    base: int
    mode: str
    nullity: int
    witnesses: tuple[tuple[tuple[int, ...], int], ...]
    dimension: Optional[object] = None

    def to_json(self) -> dict:
        base_key = "level" if self.mode == "quantum" else "prime"
        value_key = "pairing" if self.mode == "quantum" else "valuation"
        out = {
            "cartan_type": self.cartan_type,
            "weight": list(self.weight),
            base_key: self.base,
            "mode": self.mode,
            "nullity": self.nullity,
            "witnesses": [
                {"root": list(root), value_key: value}
                for root, value in self.witnesses
            ],
        }
        if self.dimension is not None:
            if isinstance(self.dimension, LaurentPolynomial):
                out["dimension"] = self.dimension.to_json()
            else:
                out["dimension"] = self.dimension
        return out


def quantum_nullity(
    cartan_type: str, lam, ell: int, verify_dimension: bool = True
) -> NullityReport:
    """Number of positive roots alpha with ell | (lam + rho, alpha).

    With ``verify_dimension`` the count is cross-checked against the
    Phi_ell-multiplicity of the quantum Weyl dimension (an independent
    route; a mismatch would be a bug, not bad input).
    """
    rs = root_system(cartan_type)
    rs.validate_level(ell)
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    shifted = rs.shifted_weight(lam)
    witnesses = []
    for alpha in rs.positive_roots:
        n = rs.pairing(shifted, alpha)
        if n % ell == 0:
            witnesses.append((alpha, n))
    dim = None
    if verify_dimension:
        dim = quantum_weyl_dim(cartan_type, lam)
        val = phi_valuation(dim, ell)
        if val != len(witnesses):
            raise RuntimeError(
                f"nullity cross-check failed for {cartan_type} {lam} at ell={ell}: "
                f"root count {len(witnesses)} vs dimension valuation {val}"
            )
    return NullityReport(
        cartan_type=rs.cartan_type,
        weight=tuple(lam),
        base=ell,
        mode="quantum",
        nullity=len(witnesses),
        witnesses=tuple(witnesses),
        dimension=dim,
    )


def modular_nullity_simple(
    cartan_type: str, lam, p: int, verify_dimension: bool = True
) -> NullityReport:
    """Sum over positive roots of the p-adic valuation of (lam + rho, alpha)."""
    rs = root_system(cartan_type)
    _check_prime(p)
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    shifted = rs.shifted_weight(lam)
    witnesses = []
    total = 0
    for alpha in rs.positive_roots:
        k = int_valuation(rs.pairing(shifted, alpha), p)
        total += k
        if k:
            witnesses.append((alpha, k))
    dim = None
    if verify_dimension:
        dim = modular_weyl_dim(cartan_type, lam)
        rho_val = sum(
            int_valuation(rs.pairing(rs.rho, a), p) for a in rs.positive_roots
        )
        if int_valuation(dim, p) != total - rho_val:
            raise RuntimeError(
                f"modular nullity cross-check failed for {cartan_type} {lam} at p={p}"
            )
    return NullityReport(
        cartan_type=rs.cartan_type,
        weight=tuple(lam),
        base=p,
        mode="modular",
        nullity=total,
        witnesses=tuple(witnesses),
        dimension=dim,
    )


# ---------------------------------------------------------------------------
# distinguished weights
# ---------------------------------------------------------------------------


def steinberg_weight(cartan_type: str, ell: int) -> tuple[int, ...]:
    """(ell - 1) * rho in fundamental coordinates."""
    rs = root_system(cartan_type)
    return tuple((ell - 1) * c for c in rs.rho)


def telescope_weight(cartan_type: str, lam, r: int, p: int) -> tuple[int, ...]:
    """The r-fold dilation p^r * lam + (p^r - 1) * rho.

    Every pairing (lam' + rho, alpha) is exactly p^r times the original,
    so the modular nullity grows by r * (number of positive roots).
    """
    rs = root_system(cartan_type)
    rs._check_weight(lam)
    if r < 0:
        raise ValueError("r must be >= 0")
    q = p**r
    return tuple(q * c + q - 1 for c in lam)


# ---------------------------------------------------------------------------
# modified dimensions
# ---------------------------------------------------------------------------


def modified_dim(dimension, base: int, k: int, mode: str = "quantum"):
    """Order-k modified dimension of a precomputed (quantum or modular) dimension.

    quantum mode: ``dimension`` is a Laurent polynomial; requires
    Phi_base-valuation >= k and returns the class of the k-th divided
    derivative in Q[x]/(Phi_base).

    modular mode: ``dimension`` is an integer; requires p-adic valuation
    >= k and returns ``(dimension / base**k, residue mod base)``.
    """
    if k < 0:
        raise ValueError("order k must be >= 0")
    if mode == "quantum":
        if not isinstance(dimension, LaurentPolynomial):
            raise ValueError("quantum mode needs a Laurent polynomial dimension")
        if phi_valuation(dimension, base) < k:
            raise NotKNegligibleError("object not k-negligible")
        return derivative_eval(dimension, k, base)
    if mode == "modular":
        _check_prime(base)
        if int_valuation(dimension, base) < k:
            raise NotKNegligibleError("object not k-negligible")
        quotient = dimension // base**k
        return quotient, quotient % base
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# small-rank modular cell pictures
# ---------------------------------------------------------------------------


def sl2_modular_ideal(m: int, p: int) -> int:
    """Largest r >= 0 with m >= p^r - 1 (the negligibility order available
    at the sl2 weight m in characteristic p)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    _check_prime(p)
    r = 0
    while m >= p ** (r + 1) - 1:
        r += 1
    return r


def a2_modular_cells(p: int, s_max: int) -> list[dict]:
    """Nullity strata for rank 2, type A, in characteristic p (p odd).

    For each scale s this yields two families: the Steinberg-type stratum
    of nullity 3s and the subregular stratum of nullity 3s + 1, each with
    one sample weight and the defining pairing constraints.
    """
    _check_prime(p)
    if p == 2:
        raise ValueError("p must be odd for the rank-2 strata")
    if s_max < 0:
        raise ValueError("s_max must be >= 0")
    out = []
    for s in range(s_max + 1):
        q = p**s
        out.append(
            {
                "s": s,
                "family": "steinberg",
                "nullity": 3 * s,
                "sample_weight": [q - 1, q - 1],
                "constraints": [
                    f"(lam+rho, alpha1) = r1*{p}^{s} with {p} not dividing r1",
                    f"(lam+rho, alpha2) = r2*{p}^{s} with {p} not dividing r2",
                    f"(lam+rho, theta) = r3*{p}^{s} with {p} not dividing r3",
                ],
            }
        )
        out.append(
            {
                "s": s,
                "family": "subregular",
                "nullity": 3 * s + 1,
                "sample_weight": [q - 1, p * q - q - 1],
                "constraints": [
                    f"(lam+rho, alpha1) = r*{p}^{s} with 1 <= r < {p}",
                    f"(lam+rho, theta) = {p}^{s + 1}",
                ],
            }
        )
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
