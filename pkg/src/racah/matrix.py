"""Dense matrices over the exact rationals.

Mat is immutable (entries stored as a tuple of row tuples).  Arithmetic is
schoolbook; sizes here top out around 30x30, so clarity wins over cleverness.
Shape mismatches raise ShapeError naming both shapes.
"""

from __future__ import annotations

from .rational import Rat, ZERO, ONE, rat


class ShapeError(ValueError):
    pass


class Mat:
    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries):
        rows = tuple(tuple(rat(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ShapeError("matrix needs at least one row and one column")
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ShapeError(
                    f"ragged rows: expected {ncols} columns, found {len(r)}"
                )
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, diag) -> "Mat":
        diag = list(diag)
        n = len(diag)
        return cls(
            [[diag[i] if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Rat:
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other):
        return isinstance(other, Mat) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape() != other.shape():
            raise ShapeError(f"cannot add {self.rows}x{self.cols} to {other.rows}x{other.cols}")
        return Mat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape() != other.shape():
            raise ShapeError(f"cannot subtract {other.rows}x{other.cols} from {self.rows}x{self.cols}")
        return Mat(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def scale(self, c) -> "Mat":
        c = rat(c)
        return Mat([[c * x for x in row] for row in self.entries])

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ShapeError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            bt = list(zip(*other.entries))
            return Mat(
                [
                    [sum(a * b for a, b in zip(arow, bcol)) for bcol in bt]
                    for arow in self.entries
                ]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise ShapeError(f"cannot take powers of a {self.rows}x{self.cols} matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        acc = Mat.identity(self.rows)
        for _ in range(k):
            acc = acc * self
        return acc

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.entries)))

    def trace(self) -> Rat:
        if self.rows != self.cols:
            raise ShapeError(f"trace needs a square matrix, got {self.rows}x{self.cols}")
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def apply(self, vec):
        """Matrix times column vector (a sequence of Rat)."""
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ShapeError(
                f"cannot apply {self.rows}x{self.cols} to a vector of length {len(vec)}"
            )
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def first_nonzero(self):
        """(i, j, value) of the first nonzero entry in row-major order, or None."""
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x != 0:
                    return (i, j, x)
        return None

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"


def commutator(x: Mat, y: Mat) -> Mat:
    return x * y - y * x


def lower_bidiagonal(diag, sub) -> Mat:
    """Square matrix with the given diagonal and first subdiagonal."""
    diag, sub = list(diag), list(sub)
    n = len(diag)
    assert len(sub) == n - 1
    m = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = diag[i]
    for i in range(n - 1):
        m[i + 1][i] = sub[i]
    return Mat(m)


def upper_bidiagonal(diag, sup) -> Mat:
    """Square matrix with the given diagonal and first superdiagonal."""
    return lower_bidiagonal(diag, sup).transpose()
