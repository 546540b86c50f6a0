from dataclasses import dataclass, field

import networkx as nx
from django.core.exceptions import ValidationError

from hmod.homology import is_isomorphic
from quiver.dot import gvquote


@dataclass
class ARNode:
    """An indecomposable, tau^-power P_vertex."""
    index: int
    module: object
    vertex: int
    power: int
    label: str = ''

    @property
    def dims(self):
        return self.module.dims

    def to_json(self):
        return {
            'index': self.index,
            'label': self.label,
            'dims': list(self.dims),
            'orbit': self.module.algebra.vertices[self.vertex],
            'power': self.power,
        }


@dataclass(eq=False)
class ARQuiver:
    algebra: object
    nodes: list
    tau_links: dict = field(default_factory=dict)  # node -> tau(node)
    arrows: dict = field(default_factory=dict)  # (source, target) -> multiplicity
    hom: list = field(default_factory=list)  # hom[i][j] = dim Hom(node i, node j)

    def __len__(self):
        return len(self.nodes)

    def __post_init__(self):
        self._by_orbit = {(n.vertex, n.power): n.index for n in self.nodes}
        self._by_dims = {}
        for n in self.nodes:
            self._by_dims.setdefault(n.dims, []).append(n.index)
        self._by_label = {n.label: n.index for n in self.nodes}

    def tau(self, i):
        return self.tau_links.get(i)

    def tau_inv(self, i):
        node = self.nodes[i]
        return self._by_orbit.get((node.vertex, node.power + 1))

    def is_projective(self, i):
        return self.nodes[i].power == 0

    def is_injective(self, i):
        return self.tau_inv(i) is None

    def proj_inj(self):
        return [i for i in range(len(self)) if self.is_projective(i) and self.is_injective(i)]

    def find(self, module):
        """Node isomorphic to an indecomposable module (None for the zero module)."""
        if module.is_zero():
            return None
        for i in self._by_dims.get(module.dims, []):
            if is_isomorphic(self.nodes[i].module, module):
                return i
        raise ValidationError(
            "No node of the AR quiver has dimension vector %(dims)s", code='inconsistent',
            params={'dims': module.dims})

    def by_label(self, label):
        try:
            return self._by_label[label.strip()]
        except KeyError:
            raise ValidationError("Unknown object %(label)s", code='vertex', params={'label': label}) from None

    def digraph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from(self.arrows)
        return graph

    def hom_digraph(self):
        """Edge i -> j for distinct nodes with a nonzero map i -> j."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from((i, j) for i, row in enumerate(self.hom) for j, d in enumerate(row) if d and i != j)
        return graph

    def predecessors(self, i):
        return nx.ancestors(self.hom_digraph(), i) | {i}

    def to_json(self):
        return {
            'algebra': repr(self.algebra),
            'nodes': [n.to_json() for n in self.nodes],
            'tau': [[i, j] for i, j in sorted(self.tau_links.items())],
            'arrows': [[s, t, m] for (s, t), m in sorted(self.arrows.items())],
        }

    def dot_lines(self, flagged=()):
        """Irreducible maps solid (multiplicity as label when above 1), tau links dashed."""
        flagged = set(flagged)
        yield "digraph {\n"
        for n in self.nodes:
            style = ', style=filled' if n.index in flagged else ''
            yield "  {} [label={}{}];\n".format(n.index, gvquote(n.label), style)
        for (s, t), m in sorted(self.arrows.items()):
            yield "  {} -> {}{};\n".format(s, t, f' [label="{m}"]' if m > 1 else '')
        for i, j in sorted(self.tau_links.items()):
            yield "  {} -> {} [style=dashed, constraint=false];\n".format(i, j)
        yield "}\n"

    def to_dot(self, flagged=()):
        return ''.join(self.dot_lines(flagged))


MODULE = 'module'
SHIFT = 'shift'


@dataclass
class FDObject:
    """An object of the fundamental domain: an H-module M, or P_vertex[1] realized as tau^-1 I_vertex."""
    node: int
    kind: str
    h_module: object  # M itself, or P_vertex for a shift
    vertex: int = None

    @property
    def is_shift(self):
        return self.kind == SHIFT


@dataclass
class FundamentalDomain:
    ar: ARQuiver
    objects: list

    def __len__(self):
        return len(self.objects)

    @property
    def nodes(self):
        return [o.node for o in self.objects]

    def position(self, node):
        for k, o in enumerate(self.objects):
            if o.node == node:
                return k
        raise ValidationError("Node %(node)s is not in the fundamental domain", code='vertex',
                              params={'node': node})

    def label(self, k):
        return self.ar.nodes[self.objects[k].node].label

    def by_label(self, label):
        return self.position(self.ar.by_label(label))

    def to_json(self):
        return [
            {
                'label': self.label(k),
                'dims': list(self.ar.nodes[o.node].dims),
                'kind': o.kind,
                'h_dims': list(o.h_module.dims),
            }
            for k, o in enumerate(self.objects)
        ]
