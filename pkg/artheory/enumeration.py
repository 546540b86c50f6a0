"""
AR quivers of representation-directed algebras, the fundamental domain of the
cluster category inside mod Gamma (or mod Lambda), and left parts.
"""
import functools
import logging

import networkx as nx
from django.core.exceptions import ValidationError

from exactlin import linalg as la
from hmod import homology
from hmod.representations import injective, projective, tau_orbits
from quiver.dynkin import positive_root_count, require_dynkin
from triplecat.construct import embed_h, stacked_label

from .homological import base_quiver
from .models import MODULE, SHIFT, ARNode, ARQuiver, FDObject, FundamentalDomain

logger = logging.getLogger(__name__)


def _label_nodes(nodes):
    seen = {}
    for node in nodes:
        label = stacked_label(node.module)
        seen[label] = seen.get(label, 0) + 1
        node.label = label if seen[label] == 1 else f"{label}#{seen[label]}"


def irreducible_arrows(nodes, hom):
    """
    Multiplicity of X -> Y: dim Hom(X, Y) minus the rank of the composites
    through the other indecomposables (rad^2 for a directed algebra).
    """
    n = len(nodes)
    basis = {}

    def maps(i, j):
        if (i, j) not in basis:
            basis[(i, j)] = homology.hom_basis(nodes[i].module, nodes[j].module)
        return basis[(i, j)]

    arrows = {}
    for x in range(n):
        for y in range(n):
            if x == y or not hom[x][y]:
                continue
            composites = []
            for z in range(n):
                if z in (x, y) or not (hom[x][z] and hom[z][y]):
                    continue
                composites.extend(g.compose(f) for g in maps(z, y) for f in maps(x, z))
            multiplicity = hom[x][y] - homology.maps_span_rank(composites)
            if multiplicity:
                arrows[(x, y)] = multiplicity
    return arrows


@functools.lru_cache(maxsize=None)
def _indecomposables(alg, field):
    h = base_quiver(alg)
    require_dynkin(h)
    bound = 6 * (positive_root_count(h) + h.n)
    found = homology.enumerate_indecomposables(alg, field, bound)
    nodes = [ARNode(k, X, v, power) for k, (v, power, X) in enumerate(found)]
    _label_nodes(nodes)
    hom = [[homology.hom_dim(a.module, b.module) for b in nodes] for a in nodes]
    by_orbit = {(n.vertex, n.power): n.index for n in nodes}
    tau_links = {n.index: by_orbit[(n.vertex, n.power - 1)] for n in nodes if n.power}
    ar = ARQuiver(alg, nodes, tau_links, irreducible_arrows(nodes, hom), hom)
    logger.info("AR quiver of %r: %d nodes, %d arrows", alg, len(nodes), len(ar.arrows))
    return ar


def indecomposables(alg, field=None):
    """The AR quiver of alg; refused unless the underlying quiver is Dynkin."""
    return _indecomposables(alg, field or la.prime_field())


def pd_table(ar):
    return [homology.pd(n.module) for n in ar.nodes]


def knitting_order(h):
    """Vertices of H with j before i for every arrow i -> j, ties by vertex number."""
    return list(nx.lexicographical_topological_sort(h.opposite().digraph()))


def fundamental_domain(alg, field=None):
    """
    Embedded ind H followed by tau^-1 of the embedded injectives. Within each
    tau^-1-slice, and among the shifts P_i[1] = tau^-1 I_i, vertices follow
    ``knitting_order`` so that maps run forward.
    """
    field = field or la.prime_field()
    if not hasattr(alg, 'plain'):
        raise ValidationError("The fundamental domain lives in mod Gamma or mod Lambda", code='vertex')
    ar = indecomposables(alg, field)
    h = alg.h
    rank = {v: r for r, v in enumerate(knitting_order(h))}
    objects = []
    for _, _, M in sorted(tau_orbits(h, field), key=lambda item: (item[1], rank[item[0]])):
        objects.append(FDObject(ar.find(embed_h(M, alg)), MODULE, M))
    for i in sorted(range(h.n), key=rank.get):
        shifted = homology.tau_inv(embed_h(injective(h, i + 1, field), alg))
        objects.append(FDObject(ar.find(shifted), SHIFT, projective(h, i + 1, field), vertex=i))
    clash = set(o.node for o in objects) & set(ar.proj_inj())
    if clash or len({o.node for o in objects}) != len(objects):
        raise ValidationError(
            "Fundamental domain of %(alg)r meets the projective-injectives or repeats a node",
            code='inconsistent', params={'alg': alg})
    return FundamentalDomain(ar, objects)


def left_part(alg, field=None):
    """Nodes all of whose predecessors have projective dimension at most one."""
    ar = indecomposables(alg, field)
    pds = pd_table(ar)
    graph = ar.hom_digraph()
    return [i for i in range(len(ar)) if all(pds[j] <= 1 for j in nx.ancestors(graph, i) | {i})]


def gamma_subcategory(lam, field=None):
    """Lambda-nodes whose primed part is supported on the sinks: the image of mod Gamma."""
    ar = indecomposables(lam, field)
    outside = [v for v in lam.primed_vertices
               if lam.vertices[v].rstrip("'") not in {lam.h.labels[s] for s in lam.sinks}]
    return [n.index for n in ar.nodes if all(n.dims[v] == 0 for v in outside)]
