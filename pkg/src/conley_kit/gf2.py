"""Dense linear algebra over GF(2).

Rows are stored as Python integers used as bit sets: bit ``j`` of ``rows[i]``
is the entry ``(i, j)``.  All elimination is deterministic (leftmost pivot,
topmost candidate row), so every basis returned here is reproducible.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "DimensionMismatch",
    "Gf2Matrix",
    "rank",
    "kernel_basis",
    "image_basis",
    "solve",
    "mul",
    "add",
    "block_assemble",
    "hstack",
    "vstack",
    "bits_to_int",
    "int_to_bits",
]


class DimensionMismatch(ValueError):
    """Operands have non-conforming shapes."""

    def __init__(self, op: str, left: tuple[int, int], right: tuple[int, int]):
        self.op = op
        self.left = left
        self.right = right
        super().__init__(f"{op}: shapes {left} and {right} do not conform")


def bits_to_int(bits: Iterable[int]) -> int:
    value = 0
    for j, b in enumerate(bits):
        if b & 1:
            value |= 1 << j
    return value


def int_to_bits(value: int, length: int) -> tuple[int, ...]:
    return tuple((value >> j) & 1 for j in range(length))


class Gf2Matrix:
    """Immutable ``nrows x ncols`` matrix with entries in {0, 1}."""

    __slots__ = ("_nrows", "_ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        mask = (1 << ncols) - 1
        if rows is None:
            data = (0,) * nrows
        else:
            data = tuple(int(r) for r in rows)
            if len(data) != nrows:
                raise ValueError(f"expected {nrows} rows, got {len(data)}")
            if any(r < 0 or r & ~mask for r in data):
                raise ValueError("row bits exceed column count")
        self._nrows = nrows
        self._ncols = ncols
        self._rows = data

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Gf2Matrix:
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> Gf2Matrix:
        """Build from nested 0/1 lists.  ``ncols`` is required when there are no rows."""
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError(f"row {i} has length {len(r)}, expected {ncols}")
            if any(v not in (0, 1) for v in r):
                raise ValueError(f"row {i} has entries outside {{0, 1}}")
        return cls(len(rows), ncols, [bits_to_int(r) for r in rows])

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> Gf2Matrix:
        """Build from columns given as integer bit sets of length ``nrows``."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in range(nrows):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(nrows, len(columns), rows)

    @classmethod
    def from_array(cls, array) -> Gf2Matrix:
        arr = np.asarray(array, dtype=np.int64) % 2
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_rows(arr.tolist(), ncols=arr.shape[1])

    # access -------------------------------------------------------------
    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self._nrows and 0 <= j < self._ncols):
            raise IndexError(index)
        return (self._rows[i] >> j) & 1

    def row(self, i: int) -> tuple[int, ...]:
        return int_to_bits(self._rows[i], self._ncols)

    def column(self, j: int) -> int:
        """Column ``j`` as an integer bit set over the rows."""
        col = 0
        for i, r in enumerate(self._rows):
            if (r >> j) & 1:
                col |= 1 << i
        return col

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self._ncols)]

    def column_bits(self, j: int) -> tuple[int, ...]:
        return int_to_bits(self.column(j), self._nrows)

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self._nrows)]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_rows(), dtype=np.uint8).reshape(self.shape)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def transpose(self) -> Gf2Matrix:
        return Gf2Matrix(self._ncols, self._nrows, self.columns())

    @property
    def T(self) -> Gf2Matrix:
        return self.transpose()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Gf2Matrix:
        out = []
        for i in rows:
            r = self._rows[i]
            v = 0
            for jj, j in enumerate(cols):
                if (r >> j) & 1:
                    v |= 1 << jj
            out.append(v)
        return Gf2Matrix(len(rows), len(cols), out)

    def apply(self, vector: int) -> int:
        """Matrix-vector product with both vectors as integer bit sets."""
        out = 0
        for i, r in enumerate(self._rows):
            if (r & vector).bit_count() & 1:
                out |= 1 << i
        return out

    # arithmetic ---------------------------------------------------------
    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        return mul(self, other)

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        return add(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._nrows, self._ncols, self._rows))

    def __repr__(self) -> str:
        body = "; ".join("".join(str(b) for b in self.row(i)) for i in range(self._nrows))
        return f"Gf2Matrix({self._nrows}x{self._ncols}: [{body}])"


# elimination ---------------------------------------------------------------

def _rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        found = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if found is None:
            continue
        work[r], work[found] = work[found], work[r]
        piv = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= piv
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(m: Gf2Matrix) -> int:
    # plain echelon is enough for the rank
    pivots: dict[int, int] = {}
    count = 0
    for row in m.rows:
        while row:
            lead = row.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                count += 1
                break
            row ^= p
    return count


def kernel_basis(m: Gf2Matrix) -> Gf2Matrix:
    """Basis of the null space as the columns of a ``ncols x nullity`` matrix.

    One basis vector per free column ``f`` (ascending): it has a 1 at ``f``
    and the pivot variables read off the reduced row echelon form.
    """
    red, pivots = _rref(m.rows, m.ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(red, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return Gf2Matrix.from_columns(basis, m.ncols)


def image_basis(m: Gf2Matrix) -> Gf2Matrix:
    """Basis of the column space, in reduced column echelon form."""
    red, _ = _rref(m.columns(), m.nrows)
    return Gf2Matrix.from_columns(red, m.nrows)


def solve(m: Gf2Matrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """Return some ``x`` with ``m @ x == b``, or ``None`` if no solution exists.

    Free variables are set to zero, so the returned solution is the one
    read directly from the pivot rows.
    """
    if len(b) != m.nrows:
        raise DimensionMismatch("solve", m.shape, (len(b), 1))
    x = solve_int(m, bits_to_int(b))
    return None if x is None else int_to_bits(x, m.ncols)


def solve_int(m: Gf2Matrix, b: int) -> int | None:
    """Bit-set variant of :func:`solve`."""
    n = m.ncols
    aug = [r | (((b >> i) & 1) << n) for i, r in enumerate(m.rows)]
    red, pivots = _rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = 0
    for row, p in zip(red, pivots):
        if (row >> n) & 1:
            x |= 1 << p
    return x


def mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    if a.ncols != b.nrows:
        raise DimensionMismatch("mul", a.shape, b.shape)
    brows = b.rows
    out = []
    for r in a.rows:
        acc = 0
        j = 0
        while r:
            if r & 1:
                acc ^= brows[j]
            r >>= 1
            j += 1
        out.append(acc)
    return Gf2Matrix(a.nrows, b.ncols, out)


def add(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    if a.shape != b.shape:
        raise DimensionMismatch("add", a.shape, b.shape)
    return Gf2Matrix(a.nrows, a.ncols, [x ^ y for x, y in zip(a.rows, b.rows)])


def hstack(blocks: Sequence[Gf2Matrix], nrows: int | None = None) -> Gf2Matrix:
    if not blocks:
        return Gf2Matrix(nrows or 0, 0)
    h = blocks[0].nrows
    for blk in blocks:
        if blk.nrows != h:
            raise DimensionMismatch("hstack", blocks[0].shape, blk.shape)
    rows = [0] * h
    offset = 0
    for blk in blocks:
        for i, r in enumerate(blk.rows):
            rows[i] |= r << offset
        offset += blk.ncols
    return Gf2Matrix(h, offset, rows)


def vstack(blocks: Sequence[Gf2Matrix], ncols: int | None = None) -> Gf2Matrix:
    if not blocks:
        return Gf2Matrix(0, ncols or 0)
    w = blocks[0].ncols
    rows: list[int] = []
    for blk in blocks:
        if blk.ncols != w:
            raise DimensionMismatch("vstack", blocks[0].shape, blk.shape)
        rows.extend(blk.rows)
    return Gf2Matrix(len(rows), w, rows)


def block_assemble(blocks: Sequence[Sequence[Gf2Matrix]]) -> Gf2Matrix:
    """Concatenate a rectangular grid of blocks into one matrix.

    Every block in a grid row must share its row count and every block in a
    grid column its column count.
    """
    if not blocks:
        return Gf2Matrix(0, 0)
    width = len(blocks[0])
    for gi, line in enumerate(blocks):
        if len(line) != width:
            raise ValueError(f"block grid row {gi} has {len(line)} blocks, expected {width}")
    col_widths = [blocks[0][gj].ncols for gj in range(width)]
    for line in blocks:
        for gj, blk in enumerate(line):
            if blk.ncols != col_widths[gj]:
                raise DimensionMismatch("block_assemble", blocks[0][gj].shape, blk.shape)
    return vstack([hstack(list(line)) for line in blocks], ncols=sum(col_widths))
