"""Walk enumeration over oriented hypergraphs, walk signs, and walk matrices.

A walk is an alternating sequence of anchors (vertices and edges) joined by
incidences: a0, i1, a1, i2, ..., in, an, where incidence ih contains both
a(h-1) and ah.  The length of a walk is half its incidence count, so walks
between anchors of the same kind have an even incidence count and walks
between a vertex and an edge have an odd one.  Lengths are always passed
around as the integer incidence count n, never as a fraction.

The defining constraint pairs incidences by position: (i1, i2), (i3, i4),
and so on must each be two distinct incidences.  The pairs (i2, i3),
(i4, i5), ... are deliberately unconstrained, so a walk may leave its
current anchor along the incidence it just arrived by.  This positional
reading is observable: it makes counts of vertex-to-edge walks differ, in
general, from counts of edge-to-vertex walks once three or more incidences
are involved.  A weak walk drops the pair constraint entirely and may
immediately return along the same incidence at any point.

The sign of a walk with n incidences is (-1)**(n // 2) times the product of
its incidence signs; backsteps (weak one-step returns v, i, e, i, v) are
therefore always negative.

Enumeration is exhaustive depth-first search and is intended as a
desk-scale oracle; ceilings on the incidence count and on the number of
generated walks keep runs bounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Incidence, OrientedHypergraph
from .matrices import LabeledIntegerMatrix


class EnumerationLimitError(RuntimeError):
    """Raised when a walk search would exceed its configured ceilings."""


@dataclass(frozen=True)
class EnumerationLimits:
    """Ceilings for a walk search.

    ``max_incidences`` bounds the requested incidence count n;
    ``max_walks`` bounds the number of walk sequences generated during one
    search, counting every complete sequence regardless of its endpoint.
    """

    max_incidences: int = 12
    max_walks: int = 1_000_000


DEFAULT_LIMITS = EnumerationLimits()


@dataclass(frozen=True)
class Walk:
    """An alternating anchor sequence joined by incidences.

    ``anchors`` has one more element than ``incidences``; incidence h joins
    anchors h-1 and h.  ``weak`` records that the walk was produced under
    the relaxed rule (see the module docstring); a weak walk may also
    happen to satisfy the strict pair constraint.
    """

    anchors: tuple[str, ...]
    incidences: tuple[Incidence, ...]
    weak: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchors", tuple(self.anchors))
        object.__setattr__(self, "incidences", tuple(self.incidences))
        if len(self.anchors) != len(self.incidences) + 1:
            raise ValueError("a walk needs exactly one more anchor than incidences")

    @property
    def half_length_numerator(self) -> int:
        """Number of incidences; the walk length is half this value."""
        return len(self.incidences)

    @property
    def is_backstep(self) -> bool:
        """True for a one-step vertex walk that returns along its own incidence."""
        return (
            len(self.incidences) == 2
            and self.incidences[0] == self.incidences[1]
            and self.anchors[0] == self.incidences[0].vertex
        )


@dataclass(frozen=True)
class WalkCounts:
    """Walk totals split by sign; signed_net = positive - negative."""

    total: int
    positive: int
    negative: int
    signed_net: int

    def __post_init__(self) -> None:
        if self.total != self.positive + self.negative:
            raise ValueError("total must equal positive + negative")
        if self.signed_net != self.positive - self.negative:
            raise ValueError("signed_net must equal positive - negative")


def _anchor_is_vertex(g: OrientedHypergraph, label: str) -> bool:
    if label in g.vertex_index:
        return True
    if label in g.edge_index:
        return False
    raise ValueError(f"unknown anchor label {label!r}")


def _require_parity(start_is_vertex: bool, end_is_vertex: bool, n: int) -> None:
    if start_is_vertex == end_is_vertex:
        if n % 2:
            kind = "vertices" if start_is_vertex else "edges"
            raise ValueError(f"walks between two {kind} need an even incidence count, got {n}")
    elif n % 2 == 0:
        raise ValueError(f"walks between a vertex and an edge need an odd incidence count, got {n}")


def _require_count(n: int, limits: EnumerationLimits) -> None:
    if n < 0:
        raise ValueError(f"incidence count must be nonnegative, got {n}")
    if n > limits.max_incidences:
        raise EnumerationLimitError(
            f"incidence count {n} exceeds the ceiling of {limits.max_incidences}"
        )


def _candidate_tables(g: OrientedHypergraph):
    # Incidences sorted by the declared-order key so that depth-first search
    # emits walks in lexicographic incidence order.
    canon = sorted(g.incidences, key=g.incidence_sort_key)
    at_vertex: list[list[tuple[int, int, int, Incidence]]] = [[] for _ in g.vertices]
    at_edge: list[list[tuple[int, int, int, Incidence]]] = [[] for _ in g.edges]
    for ident, inc in enumerate(canon):
        vi = g.vertex_index[inc.vertex]
        ei = g.edge_index[inc.edge]
        at_vertex[vi].append((ident, ei, inc.sign, inc))
        at_edge[ei].append((ident, vi, inc.sign, inc))
    return at_vertex, at_edge


def walk_sign(g: OrientedHypergraph, walk: Walk) -> int:
    """Sign of a walk: (-1)**(n // 2) times the product of incidence signs.

    The walk is structurally checked against ``g`` first; a malformed walk
    raises ValueError.
    """
    _check_walk(g, walk)
    prod = 1
    for inc in walk.incidences:
        prod *= inc.sign
    return -prod if (len(walk.incidences) // 2) % 2 else prod


def _check_walk(g: OrientedHypergraph, walk: Walk) -> None:
    anchors, incs = walk.anchors, walk.incidences
    is_vertex = _anchor_is_vertex(g, anchors[0])
    for h, inc in enumerate(incs, start=1):
        prev_a, next_a = anchors[h - 1], anchors[h]
        if inc not in g.incidence_set:
            raise ValueError(f"incidence {inc} is not part of the hypergraph")
        if is_vertex:
            if inc.vertex != prev_a or inc.edge != next_a:
                raise ValueError(f"incidence {h} does not join {prev_a!r} to {next_a!r}")
        else:
            if inc.edge != prev_a or inc.vertex != next_a:
                raise ValueError(f"incidence {h} does not join {prev_a!r} to {next_a!r}")
        if not walk.weak and h % 2 == 0 and inc == incs[h - 2]:
            raise ValueError(f"incidences {h - 1} and {h} coincide in a non-weak walk")
        is_vertex = not is_vertex


def enumerate_walks(
    g: OrientedHypergraph,
    start: str,
    end: str,
    half_length_numerator: int,
    weak: bool = False,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> list[Walk]:
    """Every walk from ``start`` to ``end`` with exactly the given incidence count.

    Walks come out in canonical order: lexicographic in the incidence
    sequence under the declared-order key (vertex, edge, mult_index).  The
    incidence count 0 yields the single trivial walk when start == end.
    """
    n = half_length_numerator
    _require_count(n, limits)
    start_is_vertex = _anchor_is_vertex(g, start)
    end_is_vertex = _anchor_is_vertex(g, end)
    _require_parity(start_is_vertex, end_is_vertex, n)

    at_vertex, at_edge = _candidate_tables(g)
    vlabels, elabels = g.vertices, g.edges
    start_idx = (g.vertex_index if start_is_vertex else g.edge_index)[start]

    walks: list[Walk] = []
    budget = [limits.max_walks]
    anchors: list[str] = [start]
    incs: list[Incidence] = []

    def descend(is_vertex: bool, idx: int, h: int) -> None:
        if h > n:
            budget[0] -= 1
            if budget[0] < 0:
                raise EnumerationLimitError(
                    f"walk enumeration exceeded the ceiling of {limits.max_walks} walks"
                )
            if anchors[-1] == end:
                walks.append(Walk(tuple(anchors), tuple(incs), weak))
            return
        check = not weak and h % 2 == 0
        last = incs[-1] if incs else None
        for _ident, other, _sign, inc in at_vertex[idx] if is_vertex else at_edge[idx]:
            if check and inc == last:
                continue
            incs.append(inc)
            anchors.append(elabels[other] if is_vertex else vlabels[other])
            descend(not is_vertex, other, h + 1)
            incs.pop()
            anchors.pop()

    descend(start_is_vertex, start_idx, 1)
    return walks


def walk_counts(
    g: OrientedHypergraph,
    start: str,
    end: str,
    half_length_numerator: int,
    weak: bool = False,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> WalkCounts:
    """Totals of :func:`enumerate_walks` output classified by :func:`walk_sign`."""
    walks = enumerate_walks(g, start, end, half_length_numerator, weak, limits)
    positive = sum(1 for w in walks if walk_sign(g, w) == 1)
    negative = len(walks) - positive
    return WalkCounts(len(walks), positive, negative, positive - negative)


def _signed_totals(
    g: OrientedHypergraph,
    tables,
    start_is_vertex: bool,
    start_idx: int,
    n: int,
    weak: bool,
    limits: EnumerationLimits,
) -> list[int]:
    """Signed net walk counts from one anchor, bucketed by final anchor index.

    Same search as :func:`enumerate_walks`, with the sign accumulated along
    the way instead of per-walk afterwards; the two are cross-checked in
    the test suite.
    """
    at_vertex, at_edge = tables
    final_is_vertex = start_is_vertex if n % 2 == 0 else not start_is_vertex
    out = [0] * (len(g.vertices) if final_is_vertex else len(g.edges))
    budget = [limits.max_walks]
    parity = -1 if (n // 2) % 2 else 1

    def descend(is_vertex: bool, idx: int, h: int, last_ident: int, prod: int) -> None:
        if h > n:
            budget[0] -= 1
            if budget[0] < 0:
                raise EnumerationLimitError(
                    f"walk enumeration exceeded the ceiling of {limits.max_walks} walks"
                )
            out[idx] += prod
            return
        check = not weak and h % 2 == 0
        for ident, other, sign, _inc in at_vertex[idx] if is_vertex else at_edge[idx]:
            if check and ident == last_ident:
                continue
            descend(not is_vertex, other, h + 1, ident, prod * sign)

    descend(start_is_vertex, start_idx, 1, -1, parity)
    return out


def _anchor_family(g: OrientedHypergraph, which: str) -> tuple[tuple[str, ...], bool]:
    if which == "V":
        return g.vertices, True
    if which == "E":
        return g.edges, False
    raise ValueError(f"anchor family must be 'V' or 'E', got {which!r}")


def _walk_matrix(
    g: OrientedHypergraph,
    row_anchors: str,
    col_anchors: str,
    n: int,
    weak: bool,
    limits: EnumerationLimits,
) -> LabeledIntegerMatrix:
    row_labels, rows_vertex = _anchor_family(g, row_anchors)
    col_labels, cols_vertex = _anchor_family(g, col_anchors)
    _require_count(n, limits)
    _require_parity(rows_vertex, cols_vertex, n)
    tables = _candidate_tables(g)
    index = g.vertex_index if rows_vertex else g.edge_index
    entries = tuple(
        tuple(_signed_totals(g, tables, rows_vertex, index[label], n, weak, limits))
        for label in row_labels
    )
    return LabeledIntegerMatrix(row_labels, col_labels, entries)


def walk_matrix(
    g: OrientedHypergraph,
    row_anchors: str,
    col_anchors: str,
    half_length_numerator: int,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> LabeledIntegerMatrix:
    """Signed net walk counts between two anchor families ("V" or "E").

    Entry (a, b) is the number of positive minus the number of negative
    walks from a to b with the given incidence count.
    """
    return _walk_matrix(g, row_anchors, col_anchors, half_length_numerator, False, limits)


def weak_walk_matrix(
    g: OrientedHypergraph,
    row_anchors: str,
    col_anchors: str,
    half_length_numerator: int,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> LabeledIntegerMatrix:
    """Signed net weak walk counts between two anchor families ("V" or "E")."""
    return _walk_matrix(g, row_anchors, col_anchors, half_length_numerator, True, limits)


def backstep_count(g: OrientedHypergraph, vertex: str) -> int:
    """Number of weak one-step walks at ``vertex`` reusing one incidence.

    Equal to the degree of the vertex: every incidence at the vertex
    contributes exactly one backstep.
    """
    if vertex not in g.vertex_index:
        raise ValueError(f"unknown vertex {vertex!r}")
    return sum(1 for w in enumerate_walks(g, vertex, vertex, 2, weak=True) if w.is_backstep)
