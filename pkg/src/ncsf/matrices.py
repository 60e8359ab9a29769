"""Square integer matrices indexed by compositions, with exact inversion.

The transition matrices between the bases implemented here are unitriangular
over the integers once rows and columns follow ``compositions_ordered``, so
inversion is plain back-substitution and never leaves the integers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .compositions import Composition


@dataclass(frozen=True)
class IntMatrix:
    """Rows and columns share one ordered list of composition labels."""

    labels: tuple[Composition, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("matrix shape does not match its labels")

    @classmethod
    def from_entries(cls, labels, entry) -> "IntMatrix":
        """Build from a callable entry(row_label, col_label) -> int."""
        labels = tuple(labels)
        rows = tuple(tuple(entry(r, c) for c in labels) for r in labels)
        return cls(labels, rows)

    @classmethod
    def identity(cls, labels) -> "IntMatrix":
        return cls.from_entries(labels, lambda r, c: int(r == c))

    def __getitem__(self, key):
        row, col = key
        i = row if isinstance(row, int) else self.labels.index(row)
        j = col if isinstance(col, int) else self.labels.index(col)
        return self.rows[i][j]

    def size(self) -> int:
        return len(self.labels)

    def row(self, label) -> dict[Composition, int]:
        i = label if isinstance(label, int) else self.labels.index(label)
        return {c: v for c, v in zip(self.labels, self.rows[i]) if v}

    def column(self, label) -> dict[Composition, int]:
        j = label if isinstance(label, int) else self.labels.index(label)
        return {c: self.rows[i][j] for i, c in enumerate(self.labels) if self.rows[i][j]}

    def is_unitriangular(self) -> bool:
        """Upper triangular with unit diagonal, in the stored label order."""
        n = self.size()
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(i + 1)
        )

    def multiply(self, other: "IntMatrix") -> "IntMatrix":
        if self.labels != other.labels:
            raise ValueError("label mismatch")
        n = self.size()
        rows = tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return IntMatrix(self.labels, rows)


def matrix_inverse(matrix: IntMatrix) -> IntMatrix:
    """Exact inverse of a unitriangular matrix by back-substitution.

    Column j of the inverse solves M x = e_j from the bottom row upward; every
    intermediate value is an integer because the diagonal is all ones.
    """
    if not matrix.is_unitriangular():
        raise ValueError("matrix is not unitriangular in its stored order")
    n = matrix.size()
    cols = []
    for j in range(n):
        x = [0] * n
        for i in range(j, -1, -1):
            acc = (1 if i == j else 0) - sum(
                matrix.rows[i][k] * x[k] for k in range(i + 1, j + 1)
            )
            x[i] = acc
        cols.append(x)
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return IntMatrix(matrix.labels, rows)
