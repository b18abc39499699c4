"""Truth tables of Boolean functions f: F_2^n -> {0,1}, bit-packed.

The table is one Python int: bit enc(x) is f(x), with the first input
coordinate at the least-significant bit of enc(x) (see gf2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gf2 import GF2Matrix, check_dimension, check_vector


@dataclass(frozen=True)
class BooleanFunction:
    n: int
    table: int

    def __post_init__(self) -> None:
        check_dimension(self.n)
        if self.table < 0 or self.table >> (1 << self.n):
            raise ValueError(f"truth table does not fit 2^{self.n} entries")

    @staticmethod
    def from_support(n: int, support: Iterable[int]) -> "BooleanFunction":
        check_dimension(n)
        table = 0
        for x in support:
            check_vector(x, n)
            table |= 1 << x
        return BooleanFunction(n, table)

    def value(self, x: int) -> int:
        return (self.table >> x) & 1

    def support(self) -> frozenset[int]:
        t = self.table
        return frozenset(x for x in range(1 << self.n) if (t >> x) & 1)

    @property
    def weight(self) -> int:
        return self.table.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.table == 0

    @property
    def is_one(self) -> bool:
        return self.table == (1 << (1 << self.n)) - 1

    def __repr__(self) -> str:
        return f"BooleanFunction(n={self.n}, table=0x{self.table:x})"


def restrict_first_bit(f: BooleanFunction) -> tuple[BooleanFunction, BooleanFunction]:
    """Sub-functions fixing the first input bit: (f(0,y), f(1,y)).

    With x_1 at the least-significant bit this is the even/odd interleave of
    the table.  For n = 1 the two halves are 0-dimensional constants.
    """
    if f.n < 1:
        raise ValueError("cannot restrict a 0-dimensional function")
    half = 1 << (f.n - 1)
    t = f.table
    t0 = 0
    t1 = 0
    for y in range(half):
        pair = (t >> (2 * y)) & 3
        t0 |= (pair & 1) << y
        t1 |= (pair >> 1) << y
    return BooleanFunction(f.n - 1, t0), BooleanFunction(f.n - 1, t1)


def tensor(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    """Product function h(x, y) = f(x) * g(y); x occupies the low coordinates."""
    block = f.table
    width = 1 << f.n
    table = 0
    for y in range(1 << g.n):
        if g.value(y):
            table |= block << (y * width)
    return BooleanFunction(f.n + g.n, table)


def apply_transform(f: BooleanFunction, m: GF2Matrix) -> BooleanFunction:
    """g(x) = f(Mx).  The spectrum is the permutation beta -> (M^T)^-1 beta."""
    if f.n != m.n:
        raise ValueError("function and matrix dimensions differ")
    n = f.n
    size = 1 << n
    images = [0] * size
    for i in range(n):
        col = m.apply(1 << i)
        step = 1 << i
        for x in range(step):
            images[x | step] = images[x] ^ col
    t = f.table
    out = 0
    for x in range(size):
        if (t >> images[x]) & 1:
            out |= 1 << x
    return BooleanFunction(n, out)


def shift(f: BooleanFunction, a: int) -> BooleanFunction:
    """h(x) = f(x + a): translate the support by XOR with a."""
    check_vector(a, f.n)
    if a == 0:
        return f
    t = f.table
    out = 0
    for x in range(1 << f.n):
        if (t >> (x ^ a)) & 1:
            out |= 1 << x
    return BooleanFunction(f.n, out)
