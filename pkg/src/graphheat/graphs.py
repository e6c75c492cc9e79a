"""Immutable simple graphs: parsing, BFS distance profiles, exact walk counts.

Vertices are dense integer indices ``0 .. n-1``.  External names live in
``Graph.labels`` (first-appearance order when parsed from an edge list).
All combinatorial quantities here are exact: counts are Python integers,
weights are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
    WeightError,
)

class Graph:
    """Finite simple undirected graph with optional positive rational weights.

    Parameters
    ----------
    n:
        Number of vertices.
    edges:
        Iterable of index pairs.  Stored canonically with ``u < v``, in the
        order given.  Self-loops and duplicates are rejected.
    weights:
        Optional mapping from edge (either orientation) to a positive
        rational.  Absent edges default to weight 1.  ``None`` means the
        graph is unweighted and all exact arithmetic stays on integers.
    labels:
        Optional external vertex names, one per vertex, unique.

    Instances are immutable after construction and safe to share.
    """

    __slots__ = ("n", "labels", "edges", "weights", "_adj", "_wadj", "_wdeg", "_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        weights: Mapping[tuple[int, int], Fraction | int] | None = None,
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ValueError("vertex labels must be unique")

        seen: set[tuple[int, int]] = set()
        elist: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {labels[u]!r}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(
                    f"duplicate edge {labels[key[0]]!r} -- {labels[key[1]]!r}"
                )
            seen.add(key)
            elist.append(key)

        self.n = n
        self.labels = labels
        self.edges = tuple(elist)
        self._index = {name: i for i, name in enumerate(labels)}

        wmap: dict[tuple[int, int], Fraction] | None = None
        if weights is not None:
            wmap = {}
            for (u, v), w in weights.items():
                key = (u, v) if u < v else (v, u)
                if key not in seen:
                    raise WeightError(f"weight given for non-edge ({u}, {v})")
                w = Fraction(w)
                if w <= 0:
                    raise WeightError(f"edge weight must be positive, got {w}")
                wmap[key] = w
            for key in elist:
                wmap.setdefault(key, Fraction(1))
        self.weights = wmap

        adj: list[list[int]] = [[] for _ in range(n)]
        wadj: list[list[Fraction]] | None = [[] for _ in range(n)] if wmap else None
        for u, v in elist:
            adj[u].append(v)
            adj[v].append(u)
            if wmap is not None and wadj is not None:
                wadj[u].append(wmap[(u, v)])
                wadj[v].append(wmap[(u, v)])
        self._adj = tuple(tuple(row) for row in adj)
        self._wadj = tuple(tuple(row) for row in wadj) if wadj is not None else None
        self._wdeg = (
            tuple(sum(row, Fraction(0)) for row in wadj) if wadj is not None else None
        )

    # -- basic accessors ---------------------------------------------------

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_weights(self, v: int) -> tuple[Fraction, ...]:
        """Weights aligned with ``neighbors(v)``; all 1 on unweighted graphs."""
        if self._wadj is None:
            return tuple(Fraction(1) for _ in self._adj[v])
        return self._wadj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def weighted_degree(self, v: int):
        """Sum of incident edge weights (== degree when unweighted)."""
        if self._wdeg is None:
            return len(self._adj[v])
        return self._wdeg[v]

    def max_weighted_degree(self) -> float:
        if self.n == 0:
            return 0.0
        return float(max(self.weighted_degree(v) for v in range(self.n)))

    def edge_weight(self, u: int, v: int):
        key = (u, v) if u < v else (v, u)
        if self.weights is None:
            if v not in self._adj[u]:
                raise KeyError(f"no edge ({u}, {v})")
            return 1
        return self.weights[key]

    def index_of(self, label: str) -> int:
        """Resolve an external vertex name; raises KeyError if unknown."""
        return self._index[label]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        kind = "weighted " if self.is_weighted else ""
        return f"Graph({kind}n={self.n}, m={len(self.edges)})"


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format.

    One edge per line: ``u v`` or ``u v w``.  Vertex names are arbitrary
    whitespace-free tokens, numbered in first-appearance order.  ``#`` starts
    a comment; blank lines are skipped.  A weight is a decimal literal
    (``1.5``) or a ratio (``3/2``) and is parsed exactly — ``1.5`` becomes
    the rational 3/2, never a binary float.

    Raises :class:`ParseError`, :class:`SelfLoopError`,
    :class:`DuplicateEdgeError` or :class:`WeightError`, each carrying the
    offending line number.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    weights: dict[tuple[int, int], Fraction] = {}
    seen: set[tuple[int, int]] = set()
    any_weight = False

    def intern(name: str) -> int:
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
        return index[name]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(
                f"expected 'u v' or 'u v weight', got {raw.strip()!r}", lineno
            )
        u = intern(parts[0])
        v = intern(parts[1])
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {parts[0]!r}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(
                f"duplicate edge {parts[0]!r} -- {parts[1]!r}", lineno
            )
        seen.add(key)
        edges.append(key)
        if len(parts) == 3:
            try:
                w = Fraction(parts[2])
            except (ValueError, ZeroDivisionError):
                raise WeightError(f"cannot parse weight {parts[2]!r}", lineno) from None
            if w <= 0:
                raise WeightError(f"edge weight must be positive, got {parts[2]}", lineno)
            weights[key] = w
            any_weight = True

    return Graph(
        len(labels),
        edges,
        weights=weights if any_weight else None,
        labels=labels,
    )


@dataclass(frozen=True)
class DistanceProfile:
    """Single-source BFS summary.

    ``dist[v]`` is the hop distance from ``source`` (``None`` if v is in a
    different component).  ``geodesic_count[v]`` counts shortest paths as an
    exact integer; ``geodesic_weight[v]`` sums, over those paths, the product
    of edge weights along each (equal to the count when unweighted).
    Unreachable vertices get count 0 and weight 0.
    """

    source: int
    dist: tuple[int | None, ...]
    geodesic_count: tuple[int, ...]
    geodesic_weight: tuple[int | Fraction, ...]

    def reachable(self, v: int) -> bool:
        return self.dist[v] is not None

    @property
    def eccentricity(self) -> int:
        """Largest finite distance from the source."""
        finite = [d for d in self.dist if d is not None]
        return max(finite)


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for {g.n} vertices")


def bfs_profile(g: Graph, source: int) -> DistanceProfile:
    """Layered BFS from ``source`` with geodesic counting.

    Counts obey the layer recurrence: a vertex at distance k accumulates the
    counts of its neighbours at distance k-1.  Weights follow the same
    recurrence with the connecting edge weight multiplied in.  Everything is
    exact; counts can exceed 64-bit range without issue.
    """
    _check_vertex(g, source)
    dist: list[int | None] = [None] * g.n
    count: list[int] = [0] * g.n
    dist[source] = 0
    count[source] = 1
    queue = deque([source])

    if not g.is_weighted:
        adj = g._adj
        while queue:
            v = queue.popleft()
            dv = dist[v]
            for u in adj[v]:
                if dist[u] is None:
                    dist[u] = dv + 1
                    count[u] = count[v]
                    queue.append(u)
                elif dist[u] == dv + 1:
                    count[u] += count[v]
        return DistanceProfile(source, tuple(dist), tuple(count), tuple(count))

    weight: list[Fraction | int] = [0] * g.n
    weight[source] = 1
    adj = g._adj
    wadj = g._wadj
    assert wadj is not None
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for u, w in zip(adj[v], wadj[v]):
            if dist[u] is None:
                dist[u] = dv + 1
                count[u] = count[v]
                weight[u] = weight[v] * w
                queue.append(u)
            elif dist[u] == dv + 1:
                count[u] += count[v]
                weight[u] = weight[u] + weight[v] * w
    return DistanceProfile(source, tuple(dist), tuple(count), tuple(weight))


def adjacency_apply(g: Graph, u: Sequence) -> list:
    """Exact adjacency matrix–vector product ``A u`` (weighted where defined)."""
    if len(u) != g.n:
        raise ValueError(f"vector length {len(u)} != vertex count {g.n}")
    out = [0] * g.n
    if g.is_weighted:
        wadj = g._wadj
        assert wadj is not None
        for v in range(g.n):
            uv = u[v]
            if uv:
                for nbr, w in zip(g._adj[v], wadj[v]):
                    out[nbr] += uv * w
    else:
        for v in range(g.n):
            uv = u[v]
            if uv:
                for nbr in g._adj[v]:
                    out[nbr] += uv
    return out


def adjacency_power_entry(g: Graph, k: int, x: int, y: int):
    """Entry ``(A^k)[x, y]`` computed exactly by repeated application.

    Counts walks of length k from x to y (weighted by edge-weight products on
    weighted graphs).  At ``k == d(x, y)`` every such walk is a geodesic, so
    the entry equals the geodesic count there; below the distance it is 0.
    """
    if k < 0:
        raise ValueError(f"power must be nonnegative, got {k}")
    _check_vertex(g, x)
    _check_vertex(g, y)
    vec: list = [0] * g.n
    vec[x] = 1
    for _ in range(k):
        vec = adjacency_apply(g, vec)
    return vec[y]


def is_bipartite(g: Graph) -> tuple[int, ...] | None:
    """2-colour the graph by BFS, or return None if an odd cycle exists.

    Deterministic: each component is explored from its lowest-index vertex,
    which gets colour 0.
    """
    color: list[int | None] = [None] * g.n
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            cv = color[v]
            for u in g._adj[v]:
                if color[u] is None:
                    color[u] = 1 - cv
                    queue.append(u)
                elif color[u] == cv:
                    return None
    return tuple(color)  # type: ignore[arg-type]
