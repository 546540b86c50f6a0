from dataclasses import dataclass
from functools import cached_property

import networkx as nx
from django.core.exceptions import ValidationError


@dataclass(frozen=True)
class Quiver:
    """Finite quiver. Vertices are indexed 0..n-1 and carry display labels."""
    labels: tuple
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(str(label) for label in self.labels))
        object.__setattr__(self, 'arrows', tuple((int(s), int(t)) for s, t in self.arrows))
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("Vertex labels must be distinct", code='vertex')
        for s, t in self.arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValidationError(
                    "Arrow %(arrow)s uses an unknown vertex", code='vertex',
                    params={'arrow': (s, t)})
            if s == t:
                raise ValidationError(
                    "Loop at vertex %(vertex)s is not allowed", code='loop',
                    params={'vertex': self.labels[s]})

    @classmethod
    def from_arrows(cls, n, arrows):
        """Quiver on vertices "1".."n" from 1-based (source, target) pairs."""
        return cls(tuple(str(i) for i in range(1, n + 1)), tuple((s - 1, t - 1) for s, t in arrows))

    def __str__(self):
        edges = ', '.join(f"{self.labels[s]}->{self.labels[t]}" for s, t in self.arrows)
        return f"Quiver({self.n} vertices; {edges})"

    @property
    def n(self):
        return len(self.labels)

    def index(self, vertex):
        """Vertex index from a label ("3", "3'") or a 1-based integer."""
        if isinstance(vertex, str) and vertex in self.labels:
            return self.labels.index(vertex)
        if isinstance(vertex, int) and 1 <= vertex <= self.n:
            return vertex - 1
        raise ValidationError("Unknown vertex %(vertex)s", code='vertex', params={'vertex': vertex})

    def out_arrows(self, i):
        return [a for a, (s, _) in enumerate(self.arrows) if s == i]

    def in_arrows(self, i):
        return [a for a, (_, t) in enumerate(self.arrows) if t == i]

    def sinks(self):
        return [i for i in range(self.n) if not self.out_arrows(i)]

    def sources(self):
        return [i for i in range(self.n) if not self.in_arrows(i)]

    def opposite(self):
        return Quiver(self.labels, tuple((t, s) for s, t in self.arrows))

    def full_subquiver(self, vertices):
        vertices = list(vertices)
        position = {v: k for k, v in enumerate(vertices)}
        arrows = tuple((position[s], position[t]) for s, t in self.arrows
                       if s in position and t in position)
        return Quiver(tuple(self.labels[v] for v in vertices), arrows)

    def relabel(self, suffix):
        return Quiver(tuple(label + suffix for label in self.labels), self.arrows)

    def digraph(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.arrows)
        return graph

    def underlying_graph(self):
        return nx.MultiGraph(self.digraph())

    @cached_property
    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.digraph())

    def is_connected(self):
        return self.n > 0 and nx.is_connected(self.underlying_graph())

    @cached_property
    def paths(self):
        """
        All paths as (start, arrows) with arrows listed in the order they are
        traversed; trivial paths have no arrows. Requires an acyclic quiver.
        """
        if not self.is_acyclic:
            raise ValidationError("Quiver has an oriented cycle", code='cyclic')
        found = []

        def extend(start, end, arrows):
            found.append((start, arrows))
            for a in self.out_arrows(end):
                extend(start, self.arrows[a][1], arrows + (a,))

        for i in range(self.n):
            extend(i, i, ())
        return tuple(found)

    def paths_from(self, i):
        return [p for p in self.paths if p[0] == i]

    def path_end(self, path):
        start, arrows = path
        return self.arrows[arrows[-1]][1] if arrows else start

    def path_count(self, i, j):
        return sum(1 for p in self.paths if p[0] == i and self.path_end(p) == j)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Skew-symmetric matrix b[i][j] = #arrows i->j - #arrows j->i."""
    b: tuple

    def __post_init__(self):
        b = tuple(tuple(int(x) for x in row) for row in self.b)
        object.__setattr__(self, 'b', b)
        n = len(b)
        for i in range(n):
            if len(b[i]) != n:
                raise ValueError("Exchange matrix must be square")
            for j in range(n):
                if b[i][j] != -b[j][i]:
                    raise ValueError(f"Exchange matrix is not skew-symmetric at ({i}, {j})")

    @classmethod
    def from_quiver(cls, q):
        b = [[0] * q.n for _ in range(q.n)]
        for s, t in q.arrows:
            b[s][t] += 1
            b[t][s] -= 1
        return cls(tuple(map(tuple, b)))

    @property
    def n(self):
        return len(self.b)

    def to_quiver(self, labels=None):
        labels = labels or tuple(str(i) for i in range(1, self.n + 1))
        arrows = []
        for i in range(self.n):
            for j in range(self.n):
                arrows.extend([(i, j)] * max(self.b[i][j], 0))
        return Quiver(labels, tuple(arrows))

    def permuted(self, order):
        """Matrix with vertex order[k] moved to position k."""
        return ExchangeMatrix(tuple(tuple(self.b[i][j] for j in order) for i in order))
