"""Exact integer matrices with labeled axes, and the standard constructions.

Everything here is plain Python integers, so arithmetic never overflows and
equality is exact.  Matrix equality requires equal row labels, equal column
labels, and equal entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import OrientedHypergraph, SwitchingFunction, incidence_dual


@dataclass(frozen=True)
class LabeledIntegerMatrix:
    """Dense integer matrix whose rows and columns are label sequences."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        if len(set(self.row_labels)) != len(self.row_labels):
            raise ValueError("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError("duplicate column labels")
        if len(self.entries) != len(self.row_labels):
            raise ValueError(
                f"expected {len(self.row_labels)} rows, got {len(self.entries)}"
            )
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError(
                    f"expected {len(self.col_labels)} columns, got a row of length {len(row)}"
                )
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be integers, got {x!r}")

    @classmethod
    def zeros(cls, row_labels: Iterable[str], col_labels: Iterable[str]) -> "LabeledIntegerMatrix":
        rows = tuple(row_labels)
        cols = tuple(col_labels)
        return cls(rows, cols, tuple((0,) * len(cols) for _ in rows))

    @classmethod
    def identity(cls, labels: Iterable[str]) -> "LabeledIntegerMatrix":
        labels = tuple(labels)
        n = len(labels)
        return cls(labels, labels, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, labels: Iterable[str], values: Sequence[int]) -> "LabeledIntegerMatrix":
        labels = tuple(labels)
        if len(values) != len(labels):
            raise ValueError("diagonal needs one value per label")
        n = len(labels)
        return cls(
            labels,
            labels,
            tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def entry(self, row_label: str, col_label: str) -> int:
        try:
            i = self.row_labels.index(row_label)
            j = self.col_labels.index(col_label)
        except ValueError:
            raise ValueError(f"no entry at ({row_label!r}, {col_label!r})") from None
        return self.entries[i][j]

    def transpose(self) -> "LabeledIntegerMatrix":
        n, m = self.shape
        rows = tuple(tuple(self.entries[i][j] for i in range(n)) for j in range(m))
        return LabeledIntegerMatrix(self.col_labels, self.row_labels, rows)

    def _require_same_labels(self, other: "LabeledIntegerMatrix") -> None:
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise ValueError("matrix labels do not match")

    def __add__(self, other: "LabeledIntegerMatrix") -> "LabeledIntegerMatrix":
        if not isinstance(other, LabeledIntegerMatrix):
            return NotImplemented
        self._require_same_labels(other)
        rows = tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        )
        return LabeledIntegerMatrix(self.row_labels, self.col_labels, rows)

    def __sub__(self, other: "LabeledIntegerMatrix") -> "LabeledIntegerMatrix":
        if not isinstance(other, LabeledIntegerMatrix):
            return NotImplemented
        self._require_same_labels(other)
        rows = tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        )
        return LabeledIntegerMatrix(self.row_labels, self.col_labels, rows)

    def __neg__(self) -> "LabeledIntegerMatrix":
        rows = tuple(tuple(-a for a in row) for row in self.entries)
        return LabeledIntegerMatrix(self.row_labels, self.col_labels, rows)

    def __matmul__(self, other: "LabeledIntegerMatrix") -> "LabeledIntegerMatrix":
        if not isinstance(other, LabeledIntegerMatrix):
            return NotImplemented
        if self.col_labels != other.row_labels:
            raise ValueError("matrix product needs the inner labels to match")
        cols = other.transpose().entries
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries
        )
        return LabeledIntegerMatrix(self.row_labels, other.col_labels, rows)

    def power(self, k: int) -> "LabeledIntegerMatrix":
        """k-fold product of a square matrix with itself; power(0) is I."""
        if self.row_labels != self.col_labels:
            raise ValueError("matrix power needs equal row and column labels")
        if k < 0:
            raise ValueError(f"matrix power needs a nonnegative exponent, got {k}")
        result = LabeledIntegerMatrix.identity(self.row_labels)
        for _ in range(k):
            result = result @ self
        return result


def incidence_matrix(g: OrientedHypergraph) -> LabeledIntegerMatrix:
    """Vertices-by-edges matrix summing incidence signs over mult_index.

    For a simple instance each entry is the incidence sign, or 0 when the
    vertex and edge do not meet.
    """
    vi, ei = g.vertex_index, g.edge_index
    acc = [[0] * len(g.edges) for _ in g.vertices]
    for inc in g.incidences:
        acc[vi[inc.vertex]][ei[inc.edge]] += inc.sign
    return LabeledIntegerMatrix(g.vertices, g.edges, acc)


def adjacency_matrix(g: OrientedHypergraph) -> LabeledIntegerMatrix:
    """Vertices-by-vertices matrix of signed adjacency counts.

    Every ordered pair of distinct incidences inside one edge contributes
    -sign(first) * sign(second) to the entry of its vertex pair.  For a
    simple instance this leaves a zero diagonal and, off the diagonal, the
    sum over edges of -sign(v, e) * sign(w, e); repeated incidences add
    signed self-adjacencies on the diagonal.
    """
    vi = g.vertex_index
    acc = [[0] * len(g.vertices) for _ in g.vertices]
    for e in g.edges:
        incs = g.incidences_at_edge(e)
        for first in incs:
            for second in incs:
                if first == second:
                    continue
                acc[vi[first.vertex]][vi[second.vertex]] += -first.sign * second.sign
    return LabeledIntegerMatrix(g.vertices, g.vertices, acc)


def degree_matrix(g: OrientedHypergraph) -> LabeledIntegerMatrix:
    """Diagonal matrix of vertex degrees (incidence counts)."""
    return LabeledIntegerMatrix.diagonal(g.vertices, [g.degree(v) for v in g.vertices])


def laplacian(g: OrientedHypergraph) -> LabeledIntegerMatrix:
    """Degree matrix minus adjacency matrix."""
    return degree_matrix(g) - adjacency_matrix(g)


def dual_laplacian(g: OrientedHypergraph) -> LabeledIntegerMatrix:
    """Laplacian of the incidence dual; equals H^T H for the incidence matrix H."""
    return laplacian(incidence_dual(g))


def switching_matrix(theta: SwitchingFunction, vertex_order: Iterable[str]) -> LabeledIntegerMatrix:
    """Diagonal +1/-1 matrix of switching values in the given vertex order."""
    order = tuple(vertex_order)
    return LabeledIntegerMatrix.diagonal(order, [theta(v) for v in order])
