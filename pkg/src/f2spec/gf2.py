"""Bit-packed linear algebra over the two-element field.

Vectors in F_2^n are plain Python ints: coordinate x_i (1-based) is bit i-1
of the int, so the first coordinate is the least-significant bit.  Addition
is XOR.  The ambient dimension travels on the container types (Subspace,
AffineSubspace, GF2Matrix); loose ints are validated where they enter one.

Everything here is immutable and pure, so values can be shared freely
between parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_DIMENSION = 24


def dot(x: int, y: int) -> int:
    """Standard inner product: parity of the coordinates shared by x and y."""
    return (x & y).bit_count() & 1


def check_dimension(n: int) -> None:
    if not 0 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension must be between 0 and {MAX_DIMENSION}, got {n}")


def check_vector(x: int, n: int) -> None:
    if x < 0 or x >> n:
        raise ValueError(f"vector {x} does not fit in dimension {n}")


def _echelon(vectors: Iterable[int]) -> dict[int, int]:
    """Row-echelon basis keyed by pivot (= highest set bit of the row)."""
    by_pivot: dict[int, int] = {}
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            row = by_pivot.get(p)
            if row is None:
                by_pivot[p] = v
                break
            v ^= row
    return by_pivot


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon basis, rows sorted by decreasing pivot.

    Pivots sit at the highest set bit of each row and occur in no other row,
    which makes coset reduction a single pass in any row order.
    """
    rows = sorted(_echelon(vectors).values())
    for i, r in enumerate(rows):
        p = r.bit_length() - 1
        for j in range(i + 1, len(rows)):
            if (rows[j] >> p) & 1:
                rows[j] ^= r
    return tuple(sorted(rows, reverse=True))


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of F_2^n, held as a reduced row-echelon basis."""

    n: int
    basis: tuple[int, ...]

    @staticmethod
    def spanned_by(n: int, vectors: Iterable[int]) -> "Subspace":
        check_dimension(n)
        vs = list(vectors)
        for v in vs:
            check_vector(v, n)
        return Subspace(n, rref(vs))

    @staticmethod
    def zero(n: int) -> "Subspace":
        check_dimension(n)
        return Subspace(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce_mod(self, v: int) -> int:
        """Minimum representative of the coset v + self (integer order)."""
        for row in self.basis:
            if (v >> (row.bit_length() - 1)) & 1:
                v ^= row
        return v

    def contains(self, v: int) -> bool:
        return self.reduce_mod(v) == 0

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def points(self) -> list[int]:
        pts = [0]
        for b in self.basis:
            pts += [p ^ b for p in pts]
        return pts


def linear_span(n: int, points: Iterable[int]) -> Subspace:
    """Smallest subspace containing the points; empty input gives {0}."""
    return Subspace.spanned_by(n, points)


def orthogonal_complement(v: Subspace) -> Subspace:
    """All vectors orthogonal to every basis row; dim is n - dim(v)."""
    pivots = [r.bit_length() - 1 for r in v.basis]
    pivot_set = set(pivots)
    gens = []
    for c in range(v.n):
        if c in pivot_set:
            continue
        w = 1 << c
        for row, p in zip(v.basis, pivots):
            if (row >> c) & 1:
                w |= 1 << p
        gens.append(w)
    return Subspace.spanned_by(v.n, gens)


@dataclass(frozen=True)
class AffineSubspace:
    """Coset shift + direction of an affine subspace; shift is canonical.

    The constructor reduces the shift modulo the direction, so structurally
    equal cosets compare equal field by field.
    """

    shift: int
    direction: Subspace

    def __post_init__(self) -> None:
        check_vector(self.shift, self.direction.n)
        object.__setattr__(self, "shift", self.direction.reduce_mod(self.shift))

    @property
    def n(self) -> int:
        return self.direction.n

    @property
    def dim(self) -> int:
        return self.direction.dim

    def contains(self, v: int) -> bool:
        return self.direction.contains(v ^ self.shift)

    def points(self) -> list[int]:
        return [self.shift ^ p for p in self.direction.points()]


def affine_span(n: int, points: Iterable[int]) -> AffineSubspace:
    """Smallest affine subspace containing the (nonempty) points."""
    pts = set(points)
    if not pts:
        raise ValueError("affine span of the empty set is undefined")
    p0 = min(pts)
    direction = linear_span(n, (p ^ p0 for p in pts))
    return AffineSubspace(p0, direction)


def is_full_affine_subspace(n: int, points: Iterable[int]) -> bool:
    """True iff the points are exactly a full coset of some subspace."""
    pts = set(points)
    if not pts:
        raise ValueError("empty point set")
    return len(pts) == 1 << affine_span(n, pts).dim


def _invert_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Gauss-Jordan inverse of an n x n bit matrix; raises if singular."""
    aug = [rows[i] | (1 << (n + i)) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if (aug[r] >> col) & 1), None)
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and (aug[r] >> col) & 1:
                aug[r] ^= aug[col]
    return tuple(aug[i] >> n for i in range(n))


def _transpose_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        sum(((rows[i] >> j) & 1) << i for i in range(n)) for j in range(n)
    )


@dataclass(frozen=True)
class GF2Matrix:
    """Invertible n x n matrix over F_2 with its inverse cached.

    rows[i] holds row i+1 as a bitmask; (Mx)_i = <rows[i], x>.  The product
    inverse * matrix is checked to be the identity at construction.
    """

    n: int
    rows: tuple[int, ...]
    inverse_rows: tuple[int, ...]

    def __post_init__(self) -> None:
        check_dimension(self.n)
        if len(self.rows) != self.n or len(self.inverse_rows) != self.n:
            raise ValueError("row count must equal the dimension")
        for i in range(self.n):
            e = 1 << i
            if self.apply(self.apply_inverse(e)) != e:
                raise ValueError("cached inverse does not invert the matrix")

    @staticmethod
    def from_rows(n: int, rows: Iterable[int]) -> "GF2Matrix":
        rows = tuple(rows)
        for r in rows:
            check_vector(r, n)
        return GF2Matrix(n, rows, _invert_rows(n, rows))

    @staticmethod
    def identity(n: int) -> "GF2Matrix":
        rows = tuple(1 << i for i in range(n))
        return GF2Matrix(n, rows, rows)

    def apply(self, x: int) -> int:
        return sum(((self.rows[i] & x).bit_count() & 1) << i for i in range(self.n))

    def apply_inverse(self, x: int) -> int:
        return sum(
            ((self.inverse_rows[i] & x).bit_count() & 1) << i for i in range(self.n)
        )

    def inverse(self) -> "GF2Matrix":
        return GF2Matrix(self.n, self.inverse_rows, self.rows)

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix(
            self.n,
            _transpose_rows(self.n, self.rows),
            _transpose_rows(self.n, self.inverse_rows),
        )


def transform_sending_to_e1(n: int, alpha: int) -> GF2Matrix:
    """Invertible L whose spectrum action moves the coefficient at alpha to e1.

    Concretely: for g(x) = f(Lx) the spectra satisfy g^(e1) = f^(alpha).
    alpha is completed to a basis with the smallest standard vectors that
    keep it independent, so the result is reproducible.
    """
    check_vector(alpha, n)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    cols = [alpha]
    echelon = _echelon(cols)
    for i in range(n):
        if len(cols) == n:
            break
        e = 1 << i
        v = e
        while v:
            p = v.bit_length() - 1
            row = echelon.get(p)
            if row is None:
                echelon[p] = v
                cols.append(e)
                break
            v ^= row
    # P has the completed basis as columns, so P e1 = alpha; the function-side
    # matrix is L = (P^-1)^T, whose spectrum action is beta -> P beta.
    p_rows = tuple(
        sum(((cols[i] >> j) & 1) << i for i in range(n)) for j in range(n)
    )
    p_inv = _invert_rows(n, p_rows)
    l_rows = _transpose_rows(n, p_inv)
    l_inverse_rows = _transpose_rows(n, p_rows)
    return GF2Matrix(n, l_rows, l_inverse_rows)


def iter_subspaces(n: int, dim: int) -> Iterator[Subspace]:
    """All subspaces of F_2^n of the given dimension, each exactly once.

    Enumerates reduced row-echelon bases directly: choose pivot columns,
    then every assignment of the free positions below each pivot.
    """
    check_dimension(n)
    if dim < 0 or dim > n:
        return
    if dim == 0:
        yield Subspace(n, ())
        return
    for pivots in combinations(range(n - 1, -1, -1), dim):
        pivot_set = set(pivots)
        free = [[q for q in range(p) if q not in pivot_set] for p in pivots]
        counts = [len(f) for f in free]
        total = sum(counts)
        for m in range(1 << total):
            rows = []
            off = 0
            for i, p in enumerate(pivots):
                row = 1 << p
                bits = (m >> off) & ((1 << counts[i]) - 1)
                for b_idx, q in enumerate(free[i]):
                    if (bits >> b_idx) & 1:
                        row |= 1 << q
                rows.append(row)
                off += counts[i]
            yield Subspace(n, tuple(rows))


def iter_affine_masks(n: int, dim: int) -> Iterator[int]:
    """Point bitmasks of every affine subspace of the given dimension.

    Bit x of a mask marks membership of the point x.  Generated lazily;
    the masks of one direction subspace partition all 2^n points.
    """
    size = 1 << n
    for sub in iter_subspaces(n, dim):
        pts = sub.points()
        covered = 0
        for rep in range(size):
            if (covered >> rep) & 1:
                continue
            mask = 0
            for p in pts:
                mask |= 1 << (rep ^ p)
            covered |= mask
            yield mask


def max_flat_through(n: int, point: int, points: Iterable[int]) -> AffineSubspace:
    """Greedy inclusion-maximal affine subspace through `point` inside the set."""
    available = frozenset(points)
    if point not in available:
        raise ValueError("point must belong to the set")
    deltas = frozenset(p ^ point for p in available)
    span = {0}
    basis: list[int] = []
    for cand in sorted(deltas):
        if cand == 0 or cand in span:
            continue
        new = {cand ^ s for s in span}
        if new <= deltas:
            span |= new
            basis.append(cand)
    return AffineSubspace(point, Subspace.spanned_by(n, basis))


def iter_subspaces_within(
    deltas: frozenset[int], dim: int
) -> Iterator[frozenset[int]]:
    """All dim-dimensional subspaces contained in a point set (0 must be in it).

    Each subspace is produced exactly once, via its greedy-minimal generator
    sequence: the next generator is always the smallest element the subspace
    adds, and generators increase.
    """
    ordered = sorted(deltas)

    def rec(span: frozenset[int], last: int, depth: int) -> Iterator[frozenset[int]]:
        if depth == dim:
            yield span
            return
        for c in ordered:
            if c <= last or c in span:
                continue
            new = frozenset(c ^ s for s in span)
            if min(new) != c or not new <= deltas:
                continue
            yield from rec(span | new, c, depth + 1)

    if 0 in deltas:
        yield from rec(frozenset([0]), 0, 0)


def find_flat_partition(
    n: int, points: Iterable[int], dim: int, count: int
) -> list[AffineSubspace] | None:
    """Exhaustively partition the points into `count` disjoint dim-flats.

    Returns None when no such partition exists. Backtracking always assigns
    the smallest remaining point first, so a partition is found iff one
    exists.
    """
    pts = frozenset(points)
    if len(pts) != count << dim:
        return None
    return _partition_rec(n, pts, dim, count)


def _partition_rec(
    n: int, points: frozenset[int], dim: int, count: int
) -> list[AffineSubspace] | None:
    if not points:
        return []
    p = min(points)
    deltas = frozenset(x ^ p for x in points)
    for span in iter_subspaces_within(deltas, dim):
        rest = points - {p ^ s for s in span}
        sub = _partition_rec(n, rest, dim, count - 1)
        if sub is not None:
            flat = AffineSubspace(p, Subspace.spanned_by(n, span))
            return [flat] + sub
    return None
