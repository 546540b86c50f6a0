"""Representations of a quiver H: the mod H entry points used by the CLI and the other apps."""
import logging

import numpy as np
from django.core.exceptions import ValidationError

from exactlin import linalg as la
from quiver.dynkin import positive_root_count

from . import homology
from .algebras import path_algebra

logger = logging.getLogger(__name__)


def _setup(q, field):
    return path_algebra(q), field or la.prime_field()


def simple(q, i, field=None):
    """S_i, with i a label or a 1-based vertex number."""
    algebra, field = _setup(q, field)
    return homology.simple_module(algebra, q.index(i), field)


def projective(q, i, field=None):
    """P_i: the paths starting at i."""
    algebra, field = _setup(q, field)
    return homology.projective_module(algebra, q.index(i), field)


def injective(q, i, field=None):
    """I_i: dual of the paths ending at i."""
    algebra, field = _setup(q, field)
    return homology.injective_module(algebra, q.index(i), field)


def hom_basis(M, N):
    return homology.hom_basis(M, N)


def ext1_dim(M, N):
    return homology.ext_dim(M, N, 1)


def nakayama(M):
    return homology.nakayama(M)


def tau_h(M):
    return homology.tau(M)


def tau_h_inv(M):
    return homology.tau_inv(M)


def euler_form(q, a, b):
    """<a, b> = sum a_i b_i - sum over arrows i->j of a_i b_j."""
    return sum(x * y for x, y in zip(a, b)) - sum(a[s] * b[t] for s, t in q.arrows)


def cartan_matrix(q):
    """C[i][j] = number of paths j -> i, so column j is dim P_j and row j is dim I_j."""
    C = np.zeros((q.n, q.n), dtype=np.int64)
    for i in range(q.n):
        for j in range(q.n):
            C[i, j] = q.path_count(j, i)
    return C


def coxeter_matrix(q):
    """Phi = -C^T C^-1: sends dim P_j to -dim I_j and dim X to dim tau X for X not projective."""
    C = cartan_matrix(q)
    inverse = np.rint(np.linalg.inv(C)).astype(np.int64)
    return -C.T @ inverse


def tau_orbits(q, field=None):
    """
    Every indecomposable kQ-module as (vertex, k, tau^-k P_vertex), ordered by (k, vertex).
    Refused unless every component of q is Dynkin.
    """
    expected = positive_root_count(q)
    algebra, field = _setup(q, field)
    found = homology.enumerate_indecomposables(algebra, field, expected)
    if len(found) != expected:
        raise ValidationError(
            "Found %(found)s indecomposables, expected %(expected)s positive roots",
            code='inconsistent', params={'found': len(found), 'expected': expected})
    logger.info("mod H for %s has %d indecomposables", q, len(found))
    return found


def indecomposables_h(q, field=None):
    """Every indecomposable kQ-module, found as tau^-k P_i and ordered by (k, i)."""
    return [X for _, _, X in tau_orbits(q, field)]
