"""Dense exact matrices over the Gaussian rationals.

Matrices are immutable values; all operations return fresh results, so a
verification transcript built from them cannot be invalidated later.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import GaussianRational, ONE, ZERO, parse

__all__ = [
    "ExactMatrix",
    "PermutationMap",
    "SingularMatrixError",
    "direct_sum",
]


class SingularMatrixError(ArithmeticError):
    """Inversion was asked of a matrix with determinant zero."""


def _entry(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"matrix entries must be exact scalars, got {type(value)!r}")


class ExactMatrix:
    """Immutable rows x cols matrix with GaussianRational entries."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(tuple(_entry(v) for v in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "ExactMatrix":
        vals = [_entry(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, key) -> GaussianRational:
        i, j = key
        return self._entries[i][j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self._entries[i]

    @property
    def entries(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._entries

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash(self._entries)

    def first_difference(self, other: "ExactMatrix") -> tuple[int, int] | None:
        """First (row, col) where the two matrices differ, 0-based; None if equal."""
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        for i in range(self.rows):
            if self._entries[i] != other._entries[i]:
                for j in range(self.cols):
                    if self._entries[i][j] != other._entries[i][j]:
                        return (i, j)
        return None

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._entries, other._entries)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ExactMatrix([[-v for v in row] for row in self._entries])

    def scale(self, c) -> "ExactMatrix":
        c = _entry(c)
        return ExactMatrix([[c * v for v in row] for row in self._entries])

    def __rmul__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for arow in self._entries:
            acc = [ZERO] * other.cols
            for k, aik in enumerate(arow):
                if not aik:
                    continue
                brow = other._entries[k]
                for j, bkj in enumerate(brow):
                    if bkj:
                        acc[j] = acc[j] + aik * bkj
            out.append(acc)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self._entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def det(self) -> GaussianRational:
        """Exact determinant by Gaussian elimination.

        Pivots are the first nonzero entry in each column (exactness makes
        pivot magnitude irrelevant); row swaps flip the tracked sign.
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self._entries]
        sign = 1
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if m[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                return ZERO
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                sign = -sign
            pivot = m[col][col]
            for r in range(col + 1, n):
                factor = m[r][col]
                if not factor:
                    continue
                ratio = factor / pivot
                row = m[r]
                prow = m[col]
                for j in range(col, n):
                    row[j] = row[j] - ratio * prow[j]
        result = ONE if sign == 1 else -ONE
        for idx in range(n):
            result = result * m[idx][idx]
        return result

    def inverse(self) -> "ExactMatrix":
        """Exact inverse via elimination on the augmented matrix."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self._entries]
        inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if m[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
            pivot = m[col][col]
            pivot_inv = pivot.inverse()
            m[col] = [v * pivot_inv for v in m[col]]
            inv[col] = [v * pivot_inv for v in inv[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = m[r][col]
                if not factor:
                    continue
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
                inv[r] = [a - factor * b for a, b in zip(inv[r], inv[col])]
        return ExactMatrix(inv)

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        return self == ExactMatrix.identity(self.rows)

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(v) for v in row] for row in self._entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExactMatrix":
        rows = data["rows"]
        cols = data["cols"]
        entries = data["entries"]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match declared shape")
        return cls([[parse(v) for v in row] for row in entries])

    def __str__(self) -> str:
        text = [[str(v) for v in row] for row in self._entries]
        widths = [max(len(text[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = [
            "[" + "  ".join(t.rjust(w) for t, w in zip(row, widths)) + "]"
            for row in text
        ]
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<ExactMatrix {self.rows}x{self.cols}>"


def direct_sum(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    """Block-diagonal assembly of square blocks, order preserved."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("direct_sum needs at least one block")
    if any(not b.is_square() for b in blocks):
        raise ValueError("direct_sum blocks must be square")
    n = sum(b.rows for b in blocks)
    grid = [[ZERO] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.rows):
            row = grid[offset + i]
            for j in range(b.cols):
                row[offset + j] = b[i, j]
        offset += b.rows
    return ExactMatrix(grid)


class PermutationMap:
    """Bijection of {1..n}, stored as the 1-based image list.

    As a matrix it is orthogonal with entries in {0,1}: column k carries a
    single 1 in row images[k].
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(v) for v in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError("images must be a permutation of 1..n")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("PermutationMap is immutable")

    def __len__(self) -> int:
        return len(self.images)

    def __eq__(self, other):
        if not isinstance(other, PermutationMap):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self) -> str:
        return f"PermutationMap({list(self.images)})"

    @classmethod
    def identity(cls, n: int) -> "PermutationMap":
        return cls(range(1, n + 1))

    def inverse(self) -> "PermutationMap":
        inv = [0] * len(self.images)
        for k, img in enumerate(self.images):
            inv[img - 1] = k + 1
        return PermutationMap(inv)

    def matrix(self) -> ExactMatrix:
        n = len(self.images)
        grid = [[ZERO] * n for _ in range(n)]
        for k, img in enumerate(self.images):
            grid[img - 1][k] = ONE
        return ExactMatrix(grid)

    def sign(self) -> int:
        """Parity of the permutation via cycle decomposition."""
        seen = [False] * len(self.images)
        sign = 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.images[k] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def conjugate(self, a: ExactMatrix) -> ExactMatrix:
        """P a P^{-1} for the permutation matrix P with P e_k = e_{images[k]}."""
        n = len(self.images)
        if a.rows != n or a.cols != n:
            raise ValueError("matrix size does not match the permutation")
        img0 = [v - 1 for v in self.images]
        grid = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            target = grid[img0[i]]
            arow = a.row(i)
            for j in range(n):
                target[img0[j]] = arow[j]
        return ExactMatrix(grid)
