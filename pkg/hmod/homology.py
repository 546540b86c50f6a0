"""
Homological algebra over elementary algebras (see ``hmod.algebras``).

Everything is computed with exact linear algebra on the module data:
Hom spaces as kernels of commuting-square systems, projective covers from the
top M / rad M, the transpose Tr from the coefficients of a minimal projective
presentation, tau = D Tr and tau^-1 = Tr D. The same code serves mod H, mod Lambda,
mod Gamma and the endomorphism algebras of ``ctquiver``.
"""
import functools
import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError

from exactlin import linalg as la

logger = logging.getLogger(__name__)


# ============================================================================
# CONSTRUCTIONS
# ============================================================================

def zero_module(algebra, field):
    return algebra.make_module(field, [0] * algebra.n_vertices, {})


def simple_module(algebra, vertex, field):
    v = algebra.vertex(vertex)
    dims = [0] * algebra.n_vertices
    dims[v] = 1
    return algebra.make_module(field, dims, {})


@dataclass
class DirectSum:
    module: object
    summands: list
    offsets: list  # offsets[k][v]: first coordinate of summand k at vertex v


def direct_sum(algebra, field, modules):
    offsets = []
    running = [0] * algebra.n_vertices
    for m in modules:
        offsets.append(list(running))
        running = [r + d for r, d in zip(running, m.dims)]
    action = {g.key: la.block_diag(field, [m.action[g.key] for m in modules]) for g in algebra.generators}
    return DirectSum(algebra.make_module(field, running, action), list(modules), offsets)


@functools.lru_cache(maxsize=None)
def projective_module(algebra, vertex, field):
    """P_v = A e_v with basis the elements starting at v."""
    v = algebra.vertex(vertex)
    dims = [len(algebra.basis(v, k)) for k in range(algebra.n_vertices)]
    action = {}
    for g in algebra.generators:
        mat = np.zeros((dims[g.target], dims[g.source]), dtype=np.int64)
        for col, e in enumerate(algebra.basis(v, g.source)):
            for key, coeff in algebra.left_multiply(g.key, e).items():
                mat[algebra.position(v, g.target, key), col] += coeff
        action[g.key] = la.wrap(field, mat)
    return algebra.make_module(field, dims, action)


def generator_position(algebra, vertex):
    """Coordinate of e_v inside (P_v)_v."""
    return algebra.position(vertex, vertex, algebra.identity(vertex).key)


@functools.lru_cache(maxsize=None)
def injective_module(algebra, vertex, field):
    """I_v = D(e_v A), the dual of the projective of the opposite algebra."""
    opposite = algebra.opposite()
    label = algebra.vertices[algebra.vertex(vertex)]
    return dual(projective_module(opposite, opposite.vertex(label), field))


def maps_from_projectives(algebra, field, vertices, target, images):
    """
    The map from P_{v_1} + ... + P_{v_r} to target sending the generator of the
    k-th summand to images[k] (a vector of target at v_k).
    """
    total = direct_sum(algebra, field, [projective_module(algebra, v, field) for v in vertices])
    comps = []
    for k in range(algebra.n_vertices):
        blocks = []
        for v, image in zip(vertices, images):
            cols = [la.mul(target.act(e), image.reshape(-1, 1)) for e in algebra.basis(v, k)]
            blocks.append(la.hstack(field, cols, target.dims[k]))
        comps.append(la.hstack(field, blocks, target.dims[k]))
    return total, algebra.make_map(total.module, target, comps)


# ============================================================================
# HOM SPACES
# ============================================================================

def _hom_system(M, N):
    """Commuting-square constraints for Hom(M, N); unknowns are the comps, row-major."""
    offsets = []
    total = 0
    for m, n in zip(M.dims, N.dims):
        offsets.append(total)
        total += m * n
    blocks = []
    for g in M.algebra.generators:
        s, t = g.source, g.target
        height = N.dims[t] * M.dims[s]
        if height == 0:
            continue
        block = np.zeros((height, total), dtype=np.int64)
        n_g = la.ints(N.action[g.key])
        m_g = la.ints(M.action[g.key])
        block[:, offsets[s]:offsets[s] + N.dims[s] * M.dims[s]] += np.kron(n_g, np.eye(M.dims[s], dtype=np.int64))
        block[:, offsets[t]:offsets[t] + N.dims[t] * M.dims[t]] -= np.kron(np.eye(N.dims[t], dtype=np.int64), m_g.T)
        blocks.append(block)
    if not blocks:
        return la.zeros(M.field, 0, total)
    return la.wrap(M.field, np.vstack(blocks))


def _check_same_algebra(M, N):
    if M.algebra is not N.algebra:
        raise ValidationError("Modules live over different algebras", code='mixed')


def hom_basis(M, N):
    _check_same_algebra(M, N)
    K = la.kernel_matrix(_hom_system(M, N))
    return [M.algebra.map_class.from_vector(M, N, K[:, j]) for j in range(K.shape[1])]


@functools.lru_cache(maxsize=200000)
def hom_dim(M, N):
    _check_same_algebra(M, N)
    system = _hom_system(M, N)
    return system.shape[1] - la.rank(system)


def maps_span_rank(maps):
    """Dimension of the span of a list of maps with a common source and target."""
    if not maps:
        return 0
    vectors = [f.vector() for f in maps]
    field = maps[0].source.field
    return la.rank(la.vstack(field, [v.reshape(1, -1) for v in vectors], len(vectors[0])))


# ============================================================================
# SUBMODULES, QUOTIENTS, KERNELS, COKERNELS
# ============================================================================

def submodule(M, bases):
    """Submodule with the given column bases per vertex (must be closed under the action)."""
    action = {
        g.key: la.express(bases[g.target], la.mul(M.action[g.key], bases[g.source]))
        for g in M.algebra.generators
    }
    S = M.algebra.make_module(M.field, [b.shape[1] for b in bases], action)
    return S, M.algebra.make_map(S, M, list(bases))


def quotient(M, spans):
    """M modulo the submodule spanned per vertex by the columns of spans[v]."""
    projections = []
    sections = []
    for v, d in enumerate(M.dims):
        Q, C = la.quotient_projection(spans[v], d)
        projections.append(Q)
        sections.append(la.identity(M.field, d)[:, C])
    action = {
        g.key: la.mul(projections[g.target], la.mul(M.action[g.key], sections[g.source]))
        for g in M.algebra.generators
    }
    Q = M.algebra.make_module(M.field, [p.shape[0] for p in projections], action)
    return Q, M.algebra.make_map(M, Q, projections)


def kernel(f):
    return submodule(f.source, [la.kernel_matrix(c) for c in f.comps])


def cokernel(f):
    return quotient(f.target, f.comps)


def image_dims(f):
    return [la.rank(c) for c in f.comps]


def _radical_spans(M):
    spans = []
    for v, d in enumerate(M.dims):
        images = [M.action[g.key] for g in M.algebra.generators if g.target == v]
        spans.append(la.column_basis(la.hstack(M.field, images, d)) if images else la.zeros(M.field, d, 0))
    return spans


def radical(M):
    """rad M = sum of the images of all generators, with its inclusion."""
    return submodule(M, _radical_spans(M))


def top(M):
    """top M = M / rad M, with the projection."""
    return quotient(M, _radical_spans(M))


def socle(M):
    """soc M, computed as D top D M, with its inclusion into M."""
    _, projection = top(dual(M))
    inclusion = dual_map(projection)
    return inclusion.source, M.algebra.make_map(inclusion.source, M, inclusion.comps)


def radical_layers(M):
    """Dimension vectors of M/rad M, rad M/rad^2 M, ..."""
    layers = []
    while not M.is_zero():
        R, _ = radical(M)
        layers.append(tuple(m - r for m, r in zip(M.dims, R.dims)))
        M = R
    return layers


# ============================================================================
# DUALITY
# ============================================================================

def dual(M):
    """D M = Hom_k(M, k), a module over the opposite algebra."""
    opposite = M.algebra.opposite()
    index = M.algebra.same_vertex(opposite)
    dims = [M.dims[i] for i in index]
    action = {key: mat.T for key, mat in M.action.items()}
    return opposite.make_module(M.field, dims, action)


def dual_map(f):
    """D f : D target -> D source."""
    source, target = dual(f.target), dual(f.source)
    index = f.source.algebra.same_vertex(source.algebra)
    return source.algebra.make_map(source, target, [f.comps[i].T for i in index])


# ============================================================================
# PROJECTIVE COVERS, PRESENTATIONS, RESOLUTIONS
# ============================================================================

@dataclass
class Cover:
    vertices: list
    total: DirectSum
    map: object

    @property
    def module(self):
        return self.total.module


def proj_cover(M):
    """Minimal projective cover, one summand P_v per dimension of (top M)_v."""
    algebra, field = M.algebra, M.field
    vertices, images = [], []
    for v, span in enumerate(_radical_spans(M)):
        for c in la.complement_coordinates(span, M.dims[v]):
            vertices.append(v)
            images.append(la.identity(field, M.dims[v])[:, c])
    total, cover = maps_from_projectives(algebra, field, vertices, M, images)
    return Cover(vertices, total, cover)


@dataclass
class Presentation:
    """Minimal projective presentation P1 -> P0 -> M."""
    module: object
    cover: Cover
    relations: Cover
    p1: object

    @property
    def p0(self):
        return self.cover.map

    def coefficient(self, s, r):
        """
        The element a with p1(generator of summand s of P1) having component a
        in summand r of P0; a is a vector over basis(v_r, w_s).
        """
        algebra = self.module.algebra
        v_r = self.cover.vertices[r]
        w_s = self.relations.vertices[s]
        column = self.relations.total.offsets[s][w_s] + generator_position(algebra, w_s)
        start = self.cover.total.offsets[r][w_s]
        length = len(algebra.basis(v_r, w_s))
        return self.p1.comps[w_s][start:start + length, column]


def min_presentation(M):
    cover = proj_cover(M)
    K, inclusion = kernel(cover.map)
    relations = proj_cover(K)
    return Presentation(M, cover, relations, inclusion.compose(relations.map))


@dataclass
class Stage:
    cover: Cover
    syzygy: object  # kernel of the cover map


def resolution(M, limit=None):
    """Minimal projective resolution as the list of covers of M, Omega M, Omega^2 M, ..."""
    limit = limit if limit is not None else M.algebra.n_vertices + 2
    stages = []
    current = M
    while not current.is_zero():
        if len(stages) > limit:
            raise ValidationError(
                "Projective resolution longer than %(limit)s steps", code='inconsistent',
                params={'limit': limit})
        cover = proj_cover(current)
        K, _ = kernel(cover.map)
        stages.append(Stage(cover, K))
        current = K
    return stages


@functools.lru_cache(maxsize=20000)
def _cached_resolution(M):
    return resolution(M)


def pd(M):
    """Projective dimension (0 for the zero module)."""
    return max(len(_cached_resolution(M)) - 1, 0)


def ext_dim(M, N, k):
    """
    dim Ext^k(M, N) by dimension shifting along the minimal resolution:
    Ext^1(X, N) = hom(Omega X, N) - hom(P_0 X, N) + hom(X, N).
    """
    if k < 1:
        raise ValueError(f"Ext degree must be positive, got {k}")
    stages = _cached_resolution(M)
    if len(stages) < k:
        return 0
    X = M if k == 1 else stages[k - 2].syzygy
    stage = stages[k - 1]
    hom_p0 = sum(N.dims[v] for v in stage.cover.vertices)
    return hom_dim(stage.syzygy, N) - hom_p0 + hom_dim(X, N)


def syzygy_multiplicities(M, k):
    """Vertices of the projective summands of the k-th term of the minimal resolution."""
    stages = _cached_resolution(M)
    return list(stages[k].cover.vertices) if k < len(stages) else []


# ============================================================================
# TRANSPOSE, AR TRANSLATION, NAKAYAMA
# ============================================================================

def transpose_map(presentation):
    """
    p* : P0^op -> P1^op, obtained by applying Hom(-, A) to p1. The coefficient
    of the (s, r) component is reused verbatim since basis(v, w) of A and
    basis(w, v) of A^op list the same elements.
    """
    M = presentation.module
    algebra, field = M.algebra, M.field
    opposite = algebra.opposite()
    relations = presentation.relations
    cover = presentation.cover
    to_opposite = {i: opposite.vertex(label) for i, label in enumerate(algebra.vertices)}
    target = direct_sum(opposite, field, [
        projective_module(opposite, to_opposite[w], field) for w in relations.vertices])
    images = []
    for r, v in enumerate(cover.vertices):
        v_op = to_opposite[v]
        image = np.zeros(target.module.dims[v_op], dtype=np.int64)
        for s, w in enumerate(relations.vertices):
            a = la.ints(presentation.coefficient(s, r))
            start = target.offsets[s][v_op]
            image[start:start + len(a)] = a
        images.append(la.wrap(field, image))
    _, pstar = maps_from_projectives(opposite, field, [to_opposite[v] for v in cover.vertices],
                                     target.module, images)
    return pstar


def transpose(M):
    """Tr M, a module over the opposite algebra."""
    C, _ = cokernel(transpose_map(min_presentation(M)))
    return C


def nakayama(M):
    """nu M = coker(nu p1), with nu p1 = D(p*)."""
    C, _ = cokernel(dual_map(transpose_map(min_presentation(M))))
    return C


def _require_indecomposable(M):
    if not is_indecomposable(M):
        raise ValidationError("%(module)r is not indecomposable", code='decomposable', params={'module': M})


def tau(M, check=True):
    """AR translate D Tr M."""
    if check:
        _require_indecomposable(M)
    return dual(transpose(M))


def tau_inv(M, check=True):
    """Inverse AR translate Tr D M."""
    if check:
        _require_indecomposable(M)
    return transpose(dual(M))


# ============================================================================
# INDECOMPOSABILITY AND ISOMORPHISM
# ============================================================================

def _is_nilpotent_shift(f, scalar):
    field = f.source.field
    for c in f.comps:
        shifted = la.sub(c, la.scale(scalar, la.identity(field, c.shape[0])))
        power = shifted
        for _ in range(c.shape[0]):
            power = la.mul(power, shifted)
        if not la.is_zero(power):
            return False
    return True


def endomorphism_scalar(f):
    """
    The lambda with f - lambda nilpotent, or None if there is none.

    Read off as trace / dim at a vertex whose dimension is a unit mod p. When p
    divides every dimension then p <= dim M and the field is searched directly.
    """
    field = f.source.field
    p = field.order
    dims = f.source.dims
    units = [v for v, d in enumerate(dims) if d % p]
    if units:
        v = units[0]
        candidates = [int(la.ints(f.comps[v]).trace()) * pow(dims[v], -1, p) % p]
    else:
        candidates = [
            s for s in range(p)
            if all(la.rank(la.sub(c, la.scale(s, la.identity(field, c.shape[0])))) < c.shape[0]
                   for c in f.comps if c.shape[0])]
    for scalar in candidates:
        if _is_nilpotent_shift(f, scalar):
            return scalar
    return None


def _is_scalar_plus_nilpotent(f):
    """f - lambda is nilpotent for one eigenvalue lambda shared by every vertex."""
    return endomorphism_scalar(f) is not None


def is_indecomposable(M):
    """
    End(M) is local. Fast path: End(M) = k. Otherwise every basis element of
    End(M) and one seeded generic combination must be a scalar plus a nilpotent.
    """
    if M.is_zero():
        return False
    basis = hom_basis(M, M)
    if len(basis) == 1:
        return True
    p = M.field.order
    rng = np.random.default_rng(M.dim * 7919 + len(basis))
    coefficients = rng.integers(1, p, size=len(basis))
    generic = sum(int(c) * la.ints(f.vector()) for c, f in zip(coefficients, basis))
    candidates = basis + [M.algebra.map_class.from_vector(M, M, la.wrap(M.field, generic))]
    return all(_is_scalar_plus_nilpotent(f) for f in candidates)


def is_isomorphic(M, N):
    """Isomorphism of indecomposables over a representation-directed algebra."""
    if M.dims != N.dims:
        return False
    if M.is_zero():
        return True
    return hom_dim(M, N) > 0 and hom_dim(N, M) > 0


def enumerate_indecomposables(algebra, field, bound):
    """
    All indecomposables of a representation-directed algebra as
    (vertex, k, tau^-k P_vertex), ordered by (k, vertex).
    """
    found = []
    for v in range(algebra.n_vertices):
        X = projective_module(algebra, v, field)
        k = 0
        while not X.is_zero():
            found.append((v, k, X))
            if len(found) > bound:
                raise ValidationError(
                    "More than %(bound)s indecomposables found; the algebra is not representation-finite",
                    code='inconsistent', params={'bound': bound})
            X = tau_inv(X, check=False)
            k += 1
    found.sort(key=lambda item: (item[1], item[0]))
    logger.info("Enumerated %d indecomposables over %r", len(found), algebra)
    return found
