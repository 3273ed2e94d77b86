"""Exact linear maps between small tensor powers.

Every map is a dense matrix of :class:`fractions.Fraction` whose column ``j`` is
the image of domain basis vector ``j``.  Tensor products of spaces are
flattened row-major with the left factor major: basis vector ``(i, j)`` of
``U (x) V`` sits at flat index ``i * dim(V) + j``.  :func:`kron`, :func:`twist`
and the JSON serialization all share this one convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch

# Scalar field.  Swapping this (and ``to_scalar``) for a prime-field type is
# the only change needed to move off the rationals.
Rational = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value) -> Fraction:
    if type(value) is Fraction:
        return value
    if isinstance(value, float):
        raise TypeError("floating-point scalars are not allowed")
    return Fraction(value)


def pair_index(i: int, j: int, right_dim: int) -> int:
    return i * right_dim + j


def split_index(flat: int, right_dim: int) -> tuple[int, int]:
    return divmod(flat, right_dim)


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Exact linear map ``domain_dim -> codomain_dim``."""

    domain_dim: int
    codomain_dim: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.domain_dim < 1 or self.codomain_dim < 1:
            raise DimensionMismatch("dimensions must be positive")
        rows = tuple(tuple(to_scalar(x) for x in row) for row in self.entries)
        if len(rows) != self.codomain_dim or any(len(r) != self.domain_dim for r in rows):
            raise DimensionMismatch(
                f"entries are not {self.codomain_dim}x{self.domain_dim}"
            )
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "LinearMap":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch("empty matrix")
        return cls(len(rows[0]), len(rows), tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "LinearMap":
        cols = [list(c) for c in columns]
        if not cols or not cols[0]:
            raise DimensionMismatch("empty matrix")
        return cls.from_rows(list(zip(*cols)))

    @classmethod
    def from_sparse(
        cls, domain_dim: int, codomain_dim: int, items: Iterable[tuple[int, int, object]]
    ) -> "LinearMap":
        rows = [[ZERO] * domain_dim for _ in range(codomain_dim)]
        for r, c, v in items:
            rows[r][c] += to_scalar(v)
        return cls(domain_dim, codomain_dim, tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.codomain_dim, self.domain_dim)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r][c]

    @cached_property
    def columns(self) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
        """Sparse columns: for each domain index, the nonzero ``(row, value)`` pairs."""
        cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.domain_dim)]
        for r, row in enumerate(self.entries):
            for c, v in enumerate(row):
                if v:
                    cols[c].append((r, v))
        return tuple(tuple(c) for c in cols)

    def nonzero(self) -> list[tuple[int, int, Fraction]]:
        return [
            (r, c, v)
            for r, row in enumerate(self.entries)
            for c, v in enumerate(row)
            if v
        ]

    def is_zero(self) -> bool:
        return not any(v for row in self.entries for v in row)

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        if len(vector) != self.domain_dim:
            raise DimensionMismatch("vector length does not match domain")
        vec = [to_scalar(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(row, vec)), ZERO) for row in self.entries)

    def with_entry(self, row: int, col: int, value) -> "LinearMap":
        rows = [list(r) for r in self.entries]
        rows[row][col] = to_scalar(value)
        return LinearMap(self.domain_dim, self.codomain_dim, tuple(tuple(r) for r in rows))

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(v for row in self.entries for v in row)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"LinearMap({self.domain_dim}->{self.codomain_dim}: [{body}])"


def identity(n: int) -> LinearMap:
    return LinearMap.from_sparse(n, n, ((i, i, 1) for i in range(n)))


def zero_map(domain_dim: int, codomain_dim: int) -> LinearMap:
    return LinearMap.from_sparse(domain_dim, codomain_dim, ())


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """``g o f``: apply ``f`` first."""
    if g.domain_dim != f.codomain_dim:
        raise DimensionMismatch(
            f"cannot compose {g.domain_dim}->{g.codomain_dim} after "
            f"{f.domain_dim}->{f.codomain_dim}"
        )
    rows = [[ZERO] * f.domain_dim for _ in range(g.codomain_dim)]
    g_cols = g.columns
    for j, col in enumerate(f.columns):
        for k, fkj in col:
            for i, gik in g_cols[k]:
                rows[i][j] += gik * fkj
    return LinearMap(f.domain_dim, g.codomain_dim, tuple(tuple(r) for r in rows))


def compose_all(*maps: LinearMap) -> LinearMap:
    """``compose_all(h, g, f) == h o g o f``."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def kron(f: LinearMap, g: LinearMap) -> LinearMap:
    """Tensor product ``f (x) g`` under the row-major pairing."""
    gd, gc = g.domain_dim, g.codomain_dim
    items = []
    for j, fcol in enumerate(f.columns):
        for l, gcol in enumerate(g.columns):
            col = j * gd + l
            for i, a in fcol:
                for k, b in gcol:
                    items.append((i * gc + k, col, a * b))
    return LinearMap.from_sparse(f.domain_dim * gd, f.codomain_dim * gc, items)


def kron_all(*maps: LinearMap) -> LinearMap:
    out = maps[0]
    for m in maps[1:]:
        out = kron(out, m)
    return out


def twist(m: int, n: int) -> LinearMap:
    """Permutation matrix of ``u (x) v -> v (x) u`` with ``dim U = m``, ``dim V = n``."""
    return LinearMap.from_sparse(
        m * n, m * n, ((j * m + i, i * n + j, 1) for i in range(m) for j in range(n))
    )


def difference(f: LinearMap, g: LinearMap) -> LinearMap:
    if f.shape != g.shape:
        raise DimensionMismatch(f"cannot subtract {g.shape} from {f.shape}")
    return LinearMap(
        f.domain_dim,
        f.codomain_dim,
        tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(f.entries, g.entries)),
    )


def power(f: LinearMap, k: int) -> LinearMap:
    if f.domain_dim != f.codomain_dim:
        raise DimensionMismatch("only endomorphisms have powers")
    out = identity(f.domain_dim)
    for _ in range(k):
        out = compose(f, out)
    return out


def vstack(top: LinearMap, bottom: LinearMap) -> LinearMap:
    """Block matrix ``[top; bottom]`` over a shared domain."""
    if top.domain_dim != bottom.domain_dim:
        raise DimensionMismatch("vstack needs a shared domain")
    return LinearMap(
        top.domain_dim, top.codomain_dim + bottom.codomain_dim, top.entries + bottom.entries
    )
