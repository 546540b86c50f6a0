"""Operations on Lambda- and Gamma-modules (triples)."""
import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError

from exactlin import linalg as la
from hmod import homology
from hmod.algebras import path_algebra
from hmod.models import Rep

from .algebras import GAMMA, LAMBDA, gamma_of, lambda_of

logger = logging.getLogger(__name__)

ALGEBRA_KINDS = ('H', GAMMA, LAMBDA)


def instance(kind, h):
    """The algebra named by the CLI's --algebra flag."""
    if kind == 'H':
        return path_algebra(h)
    if kind == GAMMA:
        return gamma_of(h)
    if kind == LAMBDA:
        return lambda_of(h)
    raise ValidationError("Unknown algebra %(kind)s", code='vertex', params={'kind': kind})


def projectives(alg, field=None):
    field = field or la.prime_field()
    return [homology.projective_module(alg, v, field) for v in range(alg.n_vertices)]


def injectives(alg, field=None):
    field = field or la.prime_field()
    return [homology.injective_module(alg, v, field) for v in range(alg.n_vertices)]


def projective_injectives(alg, field=None):
    """Vertices v whose projective P_v is also injective."""
    field = field or la.prime_field()
    found = []
    for v, P in enumerate(projectives(alg, field)):
        if any(homology.is_isomorphic(P, I) for I in injectives(alg, field)):
            found.append(v)
    return found


def hom_triples(M, N):
    """Basis of Hom(M, N) as pairs (alpha, beta); triples over different instances are rejected."""
    return homology.hom_basis(M, N)


radical = homology.radical
top = homology.top
socle = homology.socle
proj_cover = homology.proj_cover
dual = homology.dual


# ============================================================================
# THE FUNCTOR T = M (x) -
# ============================================================================

@dataclass
class TensorImage:
    """T(x) as a quotient of the free sum over bimodule basis elements."""
    module: object
    projection: object
    blocks: dict  # plain vertex -> [(bimodule key, primed vertex, offset)]


def t_functor(alg, x):
    """
    T(x) = M (x)_L x: generated by phi (x) w, subject to (phi a) (x) w = phi (x) (a w)
    for every arrow a of the primed algebra.
    """
    if alg.is_opposite:
        raise ValueError("T is defined on the instance itself, not on its opposite")
    plain, field = alg.plain, x.field
    blocks = {t: [] for t in range(plain.n_vertices)}
    where = {}
    dims = [0] * plain.n_vertices
    for key, u, t in alg.bimodule.elements:
        blocks[t].append((key, u, dims[t]))
        where[key] = (t, u, dims[t])
        dims[t] += x.dims[u]

    action = {}
    for g in plain.generators:
        mat = np.zeros((dims[g.target], dims[g.source]), dtype=np.int64)
        for key, u, offset in blocks[g.source]:
            d = x.dims[u]
            for result, c in alg.bimodule.left_act(g.key, key).items():
                _, _, start = where[result]
                mat[start:start + d, offset:offset + d] += c * np.eye(d, dtype=np.int64)
        action[g.key] = la.wrap(field, mat)
    free = plain.make_module(field, dims, action)

    relations = [[] for _ in dims]
    for g in alg.primed.generators:
        u, v = g.source, g.target
        x_a = la.ints(x.action[g.key])
        for key, w, t in alg.bimodule.elements:
            if w != v:
                continue
            block = np.zeros((dims[t], x.dims[u]), dtype=np.int64)
            _, _, offset = where[key]
            block[offset:offset + x.dims[v], :] -= x_a
            for result, c in alg.bimodule.right_act(g.key, key).items():
                _, _, start = where[result]
                block[start:start + x.dims[u], :] += c * np.eye(x.dims[u], dtype=np.int64)
            relations[t].append(la.wrap(field, block))
    spans = [la.hstack(field, rel, d) for rel, d in zip(relations, dims)]
    module, projection = homology.quotient(free, spans)
    return TensorImage(module, projection, blocks)


def structure_map(M):
    """f : T(x) -> y, induced by the matrices mu_phi."""
    alg = M.algebra
    image = t_functor(alg, M.x)
    y = M.y
    mu = M.mu
    comps = []
    for t, d in enumerate(y.dims):
        on_free = la.hstack(M.field, [mu[key] for key, _, _ in image.blocks[t]], d)
        comps.append(la.mul(on_free, la.right_inverse(image.projection.comps[t])))
    return alg.plain.make_map(image.module, y, comps)


# ============================================================================
# EMBEDDINGS
# ============================================================================

def embed_h(M, alg):
    """The triple (0, M, 0) for a representation M of H."""
    dims = [0] * alg.n_vertices
    for v, d in zip(alg.plain_vertices, M.dims):
        dims[v] = d
    action = {alg.plain.arrow_key(a): mat for a, mat in enumerate(M.mats)}
    return alg.make_module(M.field, dims, action)


def restrict_h(T):
    """Inverse of ``embed_h`` on triples with x = 0."""
    if not T.x.is_zero():
        raise ValueError(f"{T!r} has a nonzero primed part")
    y = T.y
    return Rep.from_mats(T.algebra.h, y.dims, y.mats, T.field)


def gamma_in_lambda(M):
    """A Gamma-module as a Lambda-module: x extended by zero off the sinks."""
    gamma = M.algebra
    if gamma.kind != GAMMA or gamma.is_opposite:
        raise ValueError(f"{M!r} is not a Gamma-module")
    lam = lambda_of(gamma.h)
    dims = [0] * lam.n_vertices
    for v, d in enumerate(M.dims):
        dims[lam.vertex(gamma.vertices[v])] = d
    return lam.make_module(M.field, dims, dict(M.action))


# ============================================================================
# LABELS
# ============================================================================

def _plain_label(label):
    return label.rstrip("'")


def stacked_label(M):
    """Radical layers top first, e.g. 3'/12/3; the zero module is 0."""
    if M.is_zero():
        return '0'
    labels = M.algebra.vertices
    separator = '.' if any(len(_plain_label(label)) > 1 for label in labels) else ''
    layers = []
    for layer in homology.radical_layers(M):
        layers.append(separator.join(label for label, m in zip(labels, layer) for _ in range(m)))
    return '/'.join(layers)


def bimodule_element_name(alg, key):
    """(a1a3)* for the dual of the path along arrows 1 then 3, (e2)* for a trivial path."""
    _, start, arrows = key
    if not arrows:
        return f"(e{alg.h.labels[start]})*"
    return '(' + ''.join(f"a{a + 1}" for a in arrows) + ')*'
