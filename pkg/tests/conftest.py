"""Shared independent oracles for the test suite.

These are deliberately written from first principles (indicator-spectrum
sums, brute-force enumeration) rather than through the library's own fast
paths, so the two can check each other.
"""

from __future__ import annotations


def indicator_spectrum(n: int, shift: int, perp_points: list[int], codim: int) -> list[int]:
    """Scaled spectrum of one affine-subspace indicator.

    F(a) = 2^(n-codim) * (-1)^<a, shift> on the constraint space, 0 elsewhere.
    """
    coeffs = [0] * (1 << n)
    for a in perp_points:
        sign = -1 if (a & shift).bit_count() & 1 else 1
        coeffs[a] = sign << (n - codim)
    return coeffs


def span_points(gens: list[int]) -> list[int]:
    pts = [0]
    for g in gens:
        pts += [p ^ g for p in pts]
    return pts


def expected_two_affine_spectrum(n: int, k: int) -> list[int]:
    """Sum of the two indicator spectra of the standard two-subspace instance.

    The instance is 1_{e_k + V1} + 1_{V2} with constraint spaces
    span(e_1..e_k) and span(e_k..e_{2k-1}); adding the two closed-form
    indicator spectra is an independent route to the same coefficients.
    """
    ek = 1 << (k - 1)
    v1_perp = span_points([1 << i for i in range(k)])
    v2_perp = span_points([1 << i for i in range(k - 1, 2 * k - 1)])
    a = indicator_spectrum(n, ek, v1_perp, k)
    b = indicator_spectrum(n, 0, v2_perp, k)
    return [x + y for x, y in zip(a, b)]


def brute_force_spectrum(n: int, table: int) -> list[int]:
    """Textbook double loop: F(a) = sum_x f(x) (-1)^<a,x>."""
    size = 1 << n
    out = []
    for a in range(size):
        acc = 0
        for x in range(size):
            if (table >> x) & 1:
                acc += -1 if (a & x).bit_count() & 1 else 1
        out.append(acc)
    return out
