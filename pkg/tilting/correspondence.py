"""
Cluster-tilting objects of C_H and their tilting modules over Gamma and Lambda.

theta adds the projective-injective summands add I_0(Delta) to a cluster-tilting
object read in the fundamental domain; lambda_correspondence adds the remaining
projective-injective Lambda-modules.
"""
import functools
import itertools
import logging

import networkx as nx
from django.core.exceptions import ValidationError

from artheory.enumeration import fundamental_domain, indecomposables
from artheory.homological import socle_injectives
from exactlin import linalg as la
from hmod import homology
from hmod.representations import ext1_dim, projective
from triplecat.algebras import gamma_of, lambda_of
from triplecat.construct import gamma_in_lambda

from .enumeration import is_tilting, tilting_modules
from .models import ClusterTiltObj, TiltingSet

logger = logging.getLogger(__name__)


def _inconsistent(message, **params):
    logger.warning(message, params)
    return ValidationError(message, code='inconsistent', params=params)


def proj_inj_delta(gamma, field=None):
    """Nodes of add I_0(Delta) in the AR quiver of Gamma."""
    field = field or la.prime_field()
    ar = indecomposables(gamma, field)
    return sorted(ar.find(I) for I in socle_injectives(gamma, field))


def theta(t, field=None):
    """T |-> T + I_0(Delta), a tilting Gamma-module."""
    fd = t.domain
    ar = fd.ar
    s = TiltingSet(ar, t.nodes + proj_inj_delta(ar.algebra, field))
    if not is_tilting(ar, s.summands):
        raise _inconsistent("theta(%(obj)s) is not a tilting module", obj=t.labels())
    return s


def theta_inv(s, field=None):
    """Strip add I_0(Delta) from a tilting Gamma-module."""
    ar = s.ar
    delta = proj_inj_delta(ar.algebra, field)
    missing = [ar.nodes[i].label for i in delta if i not in s]
    if missing:
        raise _inconsistent("Tilting module %(module)s lacks %(missing)s", module=s.labels(), missing=missing)
    fd = fundamental_domain(ar.algebra, field)
    return ClusterTiltObj(fd, [fd.position(i) for i in s.summands if i not in delta])


def cluster_tilting_objects(h, field=None):
    """All cluster-tilting objects of C_H, as theta^-1 of the tilting Gamma-modules."""
    return sorted((theta_inv(s, field) for s in tilting_modules(gamma_of(h), field)), key=lambda t: t.summands)


# ============================================================================
# GAMMA AND LAMBDA
# ============================================================================

@functools.lru_cache(maxsize=None)
def _gamma_to_lambda(h, field):
    ar_gamma = indecomposables(gamma_of(h), field)
    ar_lambda = indecomposables(lambda_of(h), field)
    return {n.index: ar_lambda.find(gamma_in_lambda(n.module)) for n in ar_gamma.nodes}


def complementary_proj_inj(h, field=None):
    """Lambda-nodes of the projective-injectives P_{i'}, i not a sink (I_0(DH) without I_0(Delta))."""
    field = field or la.prime_field()
    lam = lambda_of(h)
    ar = indecomposables(lam, field)
    sinks = set(h.sinks())
    return sorted(ar.find(homology.projective_module(lam, h.labels[i] + "'", field))
                  for i in range(h.n) if i not in sinks)


def lambda_correspondence(s, field=None):
    """A tilting Gamma-module, read as a Lambda-module, plus the missing projective-injectives."""
    field = field or la.prime_field()
    h = s.algebra.h
    image = _gamma_to_lambda(h, field)
    ar = indecomposables(lambda_of(h), field)
    result = TiltingSet(ar, [image[i] for i in s.summands] + complementary_proj_inj(h, field))
    if not is_tilting(ar, result.summands):
        raise _inconsistent("%(module)s does not extend to a tilting Lambda-module", module=s.labels())
    return result


def lambda_restriction(s, field=None):
    """Inverse of ``lambda_correspondence``."""
    field = field or la.prime_field()
    h = s.algebra.h
    back = {v: k for k, v in _gamma_to_lambda(h, field).items()}
    extra = set(complementary_proj_inj(h, field))
    if not extra <= set(s.summands):
        raise _inconsistent("Tilting Lambda-module %(module)s lacks a projective-injective", module=s.labels())
    rest = [i for i in s.summands if i not in extra]
    if any(i not in back for i in rest):
        raise _inconsistent("Tilting Lambda-module %(module)s leaves mod Gamma", module=s.labels())
    return TiltingSet(indecomposables(gamma_of(h), field), [back[i] for i in rest])


# ============================================================================
# COMPLEMENTS AND THE EXCHANGE GRAPH
# ============================================================================

def complements(almost, objects):
    """
    Every X completing ``almost`` (FD positions, n - 1 of them) to one of the
    given cluster-tilting objects.
    """
    almost = set(almost)
    if not objects:
        return []
    n = len(objects[0])
    found = sorted({k for t in objects if almost < set(t.summands) for k in t.summands if k not in almost})
    if len(almost) != n - 1 or not found:
        raise ValidationError(
            "%(almost)s is not an almost complete cluster-tilting object", code='vertex',
            params={'almost': sorted(almost)})
    return found


def derived_ext1(x, y):
    """
    dim Ext^1 in D^b(H) between fundamental-domain objects, from mod H data:
    Ext^1(M, N) = Ext^1_H(M, N), Ext^1(M, P[1]) = 0, Ext^1(P[1], N) = Hom_H(P, N),
    Ext^1(P[1], Q[1]) = 0.
    """
    if x.is_shift:
        return 0 if y.is_shift else homology.hom_dim(x.h_module, y.h_module)
    return 0 if y.is_shift else ext1_dim(x.h_module, y.h_module)


def compatible_objects(h, field=None):
    """Cluster-tilting objects as maximal Ext^1_C-orthogonal n-sets of the fundamental domain."""
    fd = fundamental_domain(gamma_of(h), field)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(fd)))
    for a, b in itertools.combinations(range(len(fd)), 2):
        x, y = fd.objects[a], fd.objects[b]
        if not derived_ext1(x, y) and not derived_ext1(y, x):
            graph.add_edge(a, b)
    found = sorted({tuple(sorted(c)) for c in nx.find_cliques(graph) if len(c) == h.n})
    return [ClusterTiltObj(fd, c) for c in found]


def projective_object(h, field=None):
    """The cluster-tilting object H, as positions of the embedded projectives."""
    field = field or la.prime_field()
    fd = fundamental_domain(gamma_of(h), field)
    positions = []
    for i in range(1, h.n + 1):
        P = projective(h, i, field)
        positions.extend(k for k, o in enumerate(fd.objects)
                         if not o.is_shift and homology.is_isomorphic(o.h_module, P))
    return ClusterTiltObj(fd, positions)


def exchange_graph(h, field=None):
    """Cluster-tilting objects reachable from H by exchanging one summand at a time."""
    objects = compatible_objects(h, field)
    graph = nx.Graph()
    graph.add_nodes_from(t.summands for t in objects)
    for s, t in itertools.combinations(objects, 2):
        if len(set(s.summands) & set(t.summands)) == h.n - 1:
            graph.add_edge(s.summands, t.summands)
    start = projective_object(h, field).summands
    return graph.subgraph(nx.node_connected_component(graph, start)).copy()
