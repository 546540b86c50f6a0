"""Recognition of simply-laced Dynkin diagrams from the underlying graph of a quiver."""
from dataclasses import dataclass

import networkx as nx
from django.core.exceptions import ValidationError

NON_DYNKIN = 'non-Dynkin'


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int = 0

    def __str__(self):
        if self.family == NON_DYNKIN:
            return NON_DYNKIN
        return f"{self.family}{self.rank}"

    @property
    def is_dynkin(self):
        return self.family != NON_DYNKIN

    @property
    def positive_roots(self):
        """Number of positive roots = number of indecomposable kQ-modules."""
        n = self.rank
        if self.family == 'A':
            return n * (n + 1) // 2
        if self.family == 'D':
            return n * (n - 1)
        if self.family == 'E':
            return {6: 36, 7: 63, 8: 120}[n]
        raise ValueError("Non-Dynkin quivers have infinitely many indecomposables")


def _classify_component(graph):
    n = graph.number_of_nodes()
    simple = nx.Graph(graph)
    if simple.number_of_edges() != graph.number_of_edges() or not nx.is_tree(simple):
        return DynkinType(NON_DYNKIN)
    degrees = sorted(d for _, d in simple.degree())
    if n == 1 or degrees[-1] <= 2:
        return DynkinType('A', n)
    branch_points = [v for v, d in simple.degree() if d >= 3]
    if len(branch_points) != 1 or simple.degree(branch_points[0]) != 3:
        return DynkinType(NON_DYNKIN)
    centre = branch_points[0]
    pruned = simple.copy()
    pruned.remove_node(centre)
    arms = sorted(len(c) for c in nx.connected_components(pruned))
    if arms[0] == 1 and arms[1] == 1:
        return DynkinType('D', n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return DynkinType('E', n)
    return DynkinType(NON_DYNKIN)


def dynkin_components(q):
    """Dynkin type of each connected component, components ordered by least vertex."""
    graph = q.underlying_graph()
    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    return [_classify_component(graph.subgraph(c)) for c in components]


def dynkin_type(q):
    if q.n == 0:
        raise ValidationError("Empty quiver has no Dynkin type", code='vertex')
    components = dynkin_components(q)
    if len(components) > 1:
        raise ValidationError(
            "Quiver is disconnected; component types: %(types)s", code='disconnected',
            params={'types': ', '.join(str(t) for t in components)})
    return components[0]


def require_dynkin(q):
    """Gate for enumeration: every component must be Dynkin."""
    components = dynkin_components(q)
    if not all(t.is_dynkin for t in components):
        raise ValidationError(
            "Quiver is not of Dynkin type (%(types)s); enumeration refused", code='refused',
            params={'types': ', '.join(str(t) for t in components)})
    return components


def positive_root_count(q):
    """Number of indecomposable kQ-modules for a quiver of Dynkin type (summed over components)."""
    return sum(t.positive_roots for t in require_dynkin(q))
