"""Exact Walsh-Hadamard spectra.

A spectrum stores the integers F(a) = sum_x f(x) (-1)^<a,x>, i.e. the
Fourier coefficients scaled by 2^n.  Everything stays in exact integer (or
dyadic-rational) arithmetic; no floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .boolfunc import BooleanFunction


@dataclass(frozen=True)
class Spectrum:
    """Scaled Fourier transform: coeffs[enc(a)] = 2^n * f^(a)."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 1 << self.n:
            raise ValueError("coefficient array must have 2^n entries")


def butterfly(values: list[int]) -> None:
    """In-place Walsh-Hadamard butterfly; applying it twice scales by 2^n."""
    size = len(values)
    h = 1
    while h < size:
        for i in range(0, size, h << 1):
            for j in range(i, i + h):
                x = values[j]
                y = values[j + h]
                values[j] = x + y
                values[j + h] = x - y
        h <<= 1


def wht(f: BooleanFunction) -> Spectrum:
    """Exact transform of a 0/1 truth table via the in-place butterfly."""
    size = 1 << f.n
    t = f.table
    vals = [(t >> i) & 1 for i in range(size)]
    butterfly(vals)
    return Spectrum(f.n, tuple(vals))


def naive_wht(f: BooleanFunction) -> Spectrum:
    """Direct-summation oracle: F(a) = sum over the support of (-1)^<a,x>.

    Quadratic in 2^n; kept deliberately independent of the butterfly so the
    two implementations can check each other.
    """
    size = 1 << f.n
    supp = [x for x in range(size) if f.value(x)]
    coeffs = []
    for a in range(size):
        acc = 0
        for x in supp:
            acc += -1 if (a & x).bit_count() & 1 else 1
        coeffs.append(acc)
    return Spectrum(f.n, tuple(coeffs))


def inverse_wht(s: Spectrum) -> tuple[Fraction, ...]:
    """Exact function values recovered from a spectrum, as dyadic rationals."""
    vals = list(s.coeffs)
    butterfly(vals)
    size = 1 << s.n
    return tuple(Fraction(v, size) for v in vals)


def boolean_cast(s: Spectrum) -> BooleanFunction:
    """Invert the spectrum and cast to a truth table; 0/1 values required."""
    vals = list(s.coeffs)
    butterfly(vals)
    size = 1 << s.n
    table = 0
    for x, v in enumerate(vals):
        if v == size:
            table |= 1 << x
        elif v != 0:
            raise ValueError(
                f"value at point {x} is {Fraction(v, size)}, not 0 or 1"
            )
    return BooleanFunction(s.n, table)


def dyadic_granularity(value: Fraction) -> int:
    """Least k with value = m / 2^k for an odd integer m; 0 for value 0.

    Raises if the reduced denominator is not a power of two.
    """
    if value == 0:
        return 0
    den = value.denominator
    if den & (den - 1):
        raise ValueError(f"{value} is not a dyadic rational")
    return den.bit_length() - 1


def coefficient_granularity(coeff: int, n: int) -> int:
    """Granularity of the coefficient coeff / 2^n without building a Fraction."""
    if coeff == 0:
        return 0
    twos = (coeff & -coeff).bit_length() - 1
    return max(0, n - twos)


def granularity(s: Spectrum) -> int:
    """Maximum granularity over the nonzero coefficients; 0 for the zero map."""
    best = 0
    for c in s.coeffs:
        g = coefficient_granularity(c, s.n)
        if g > best:
            best = g
    return best


def sparsity(s: Spectrum) -> int:
    """Number of nonzero Fourier coefficients."""
    return sum(1 for c in s.coeffs if c)


def is_boolean_spectrum(s: Spectrum) -> bool:
    """Whether the spectrum belongs to a 0/1-valued function.

    Inverts the transform and range-checks the values, which is the
    O(n 2^n) route; boolean_convolution_check is the quadratic identity
    kept as an independent cross-check.
    """
    vals = list(s.coeffs)
    butterfly(vals)
    size = 1 << s.n
    return all(v == 0 or v == size for v in vals)


def boolean_convolution_check(s: Spectrum) -> bool:
    """Quadratic oracle: 2^n F(a) = sum_b F(b) F(a+b) for every a."""
    size = 1 << s.n
    c = s.coeffs
    for a in range(size):
        acc = 0
        for b in range(size):
            acc += c[b] * c[a ^ b]
        if acc != c[a] << s.n:
            return False
    return True


def parseval_holds(f: BooleanFunction, s: Spectrum) -> bool:
    """Exact Parseval identity for 0/1 tables: sum F(a)^2 = 2^n |supp f|."""
    return sum(c * c for c in s.coeffs) == f.weight << f.n
