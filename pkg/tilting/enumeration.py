"""
Basic tilting modules (of projective dimension at most one) over Gamma and Lambda.

Candidates are the indecomposables of pd <= 1 without self-extensions; two of
them are compatible when Ext^1 vanishes in both directions. Tilting modules are
the maximal cliques of the compatibility graph whose size is the number of
simple modules.
"""
import functools
import itertools
import logging

import networkx as nx

from artheory.enumeration import indecomposables, pd_table
from exactlin import linalg as la
from hmod import homology

from .models import TiltingSet

logger = logging.getLogger(__name__)


def rank(alg):
    """Rank of the Grothendieck group: n + |Delta| for Gamma, 2n for Lambda."""
    return alg.n_vertices


@functools.lru_cache(maxsize=None)
def _ext_table(ar):
    candidates = [i for i, pd in enumerate(pd_table(ar)) if pd <= 1]
    ext = {(i, j): homology.ext_dim(ar.nodes[i].module, ar.nodes[j].module, 1)
           for i in candidates for j in candidates}
    return tuple(i for i in candidates if not ext[(i, i)]), ext


def compatibility_graph(ar):
    candidates, ext = _ext_table(ar)
    graph = nx.Graph()
    graph.add_nodes_from(candidates)
    graph.add_edges_from(
        (i, j) for i, j in itertools.combinations(candidates, 2) if not ext[(i, j)] and not ext[(j, i)])
    return graph


def is_tilting(ar, summands):
    summands = sorted(set(summands))
    candidates, ext = _ext_table(ar)
    if len(summands) != rank(ar.algebra) or not set(summands) <= set(candidates):
        return False
    return all(not ext[(i, j)] for i in summands for j in summands)


def tilting_modules(alg, field=None):
    """All basic tilting modules, by clique enumeration (sorted, duplicate-free)."""
    ar = indecomposables(alg, field or la.prime_field())
    size = rank(alg)
    found = sorted({tuple(sorted(c)) for c in nx.find_cliques(compatibility_graph(ar)) if len(c) == size})
    logger.info("%d tilting modules over %r", len(found), alg)
    return [TiltingSet(ar, c) for c in found]


def tilting_modules_exhaustive(alg, field=None):
    """Same list as ``tilting_modules``, by checking every subset of the right size."""
    ar = indecomposables(alg, field or la.prime_field())
    candidates, _ = _ext_table(ar)
    return [TiltingSet(ar, c) for c in itertools.combinations(candidates, rank(alg)) if is_tilting(ar, c)]
