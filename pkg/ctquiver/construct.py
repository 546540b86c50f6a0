"""
Endomorphism algebras of summands of a module, and the quiver of the
cluster-tilted algebra End_C(T) read off mod Gamma.

Q_C has, from i to j, the arrows of the quiver of the stable endomorphism
algebra (maps modulo add I_0(soc H)) plus the minimal relations from T_i to T_j
in add(T + I_0(Delta)). Relations are counted as dim Ext^2 between simple
modules of E = End(T + I_0(Delta)), which has global dimension at most two.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from artheory.homological import composites_through, require_gldim, socle_injectives
from exactlin import linalg as la
from hmod import homology
from hmod.representations import ext1_dim
from quiver.models import Quiver
from quiver.mutation import in_mutation_class
from tilting.correspondence import proj_inj_delta
from triplecat.construct import stacked_label

from .models import RADICAL_TAG, BasicAlgebra, QuiverOut

logger = logging.getLogger(__name__)


# ============================================================================
# ENDOMORPHISM ALGEBRAS
# ============================================================================

@dataclass
class HomSpace:
    """Hom(source, target), possibly modulo the maps factoring through a set of modules."""
    source: object
    target: object
    matrix: object  # columns are the vectors of a basis of Hom(source, target)
    projection: object  # Hom coordinates -> quotient coordinates
    section: object  # quotient coordinates -> Hom coordinates
    radical: object  # basis of the radical, in quotient coordinates

    @property
    def dim(self):
        return self.projection.shape[0]

    def coordinates(self, f):
        hom = la.express(self.matrix, f.vector().reshape(-1, 1))
        return la.mul(self.projection, hom)

    def representative(self, column):
        vec = la.mul(self.matrix, la.mul(self.section, column.reshape(-1, 1))).reshape(-1)
        return self.source.algebra.map_class.from_vector(self.source, self.target, vec)


def hom_space(source, target, through=(), local=False):
    field = source.field
    basis = homology.hom_basis(source, target)
    length = sum(a * b for a, b in zip(source.dims, target.dims))
    d = len(basis)
    matrix = la.hstack(field, [f.vector().reshape(-1, 1) for f in basis], length)
    killed = la.hstack(
        field, [la.express(matrix, f.vector().reshape(-1, 1)) for f in composites_through(source, target, through)], d)
    projection, complement = la.quotient_projection(killed, d)
    section = la.identity(field, d)[:, complement]
    if local:
        scalars = [homology.endomorphism_scalar(f) for f in basis]
        if any(s is None for s in scalars):
            raise ValidationError("End(%(module)r) is not local", code='decomposable', params={'module': source})
        radical = la.kernel_matrix(la.matrix(field, [scalars], shape=(1, d)))
    else:
        radical = la.identity(field, d)
    radical = la.column_basis(la.mul(projection, radical))
    if local and radical.shape[1] + 1 != projection.shape[0]:
        raise ValidationError("The identity of %(module)r factors through the given modules", code='inconsistent',
                              params={'module': source})
    return HomSpace(source, target, matrix, projection, section, radical)


def _require_basic(summands):
    if not summands:
        raise ValueError("An endomorphism algebra needs at least one summand")
    for k, T in enumerate(summands):
        if T.algebra is not summands[0].algebra:
            raise ValidationError("Summands live over different algebras", code='mixed')
        if not homology.is_indecomposable(T):
            raise ValidationError("Summand %(module)r is not indecomposable", code='decomposable',
                                  params={'module': T})
        if any(homology.is_isomorphic(S, T) for S in summands[:k]):
            raise ValidationError("Summand %(module)r is repeated", code='decomposable', params={'module': T})


def end_algebra(summands, labels=None, through=()):
    """
    The basic algebra End(T_1 + ... + T_m), with every Hom space taken modulo
    the maps factoring through add(through).
    """
    _require_basic(summands)
    labels = list(labels) if labels is not None else [stacked_label(T) for T in summands]
    field = summands[0].field
    m = len(summands)
    # element i -> j is a map T_j -> T_i
    spaces = {(i, j): hom_space(summands[j], summands[i], through, local=(i == j))
              for i in range(m) for j in range(m)}

    radical, keys, maps = [], {}, {}
    for (i, j), space in sorted(spaces.items()):
        keys[(i, j)] = []
        for c in range(space.radical.shape[1]):
            key = (RADICAL_TAG, len(radical))
            radical.append((key, i, j))
            keys[(i, j)].append(key)
            maps[key] = space.representative(space.radical[:, c])

    products = {}
    for g_key, j, k in radical:
        for e_key, i, target in radical:
            if target != j:
                continue
            composite = maps[e_key].compose(maps[g_key])
            space = spaces[(i, k)]
            coefficients = la.ints(la.express(space.radical, space.coordinates(composite))).reshape(-1)
            products[(g_key, e_key)] = {key: int(c) for key, c in zip(keys[(i, k)], coefficients) if c}

    hom_dims = [[spaces[(i, j)].dim for j in range(m)] for i in range(m)]
    E = BasicAlgebra(labels, field, radical, products, hom_dims)
    logger.debug("End algebra %r has dimension %d", E, E.dimension)
    return E


def stable_end(summands, labels=None):
    """End(T) modulo the maps factoring through add I_0(soc H)."""
    T = summands[0]
    return end_algebra(summands, labels, socle_injectives(T.algebra, T.field))


def algebra_quiver(E):
    """Arrows i -> j = dim rad(i, j) / rad^2(i, j)."""
    arrows = []
    for i, j in itertools.product(range(E.n_vertices), repeat=2):
        rad = E.radical_basis(i, j)
        if not rad:
            continue
        vectors = []
        for g in E.generators:
            if g.target != j:
                continue
            for e in E.radical_basis(i, g.source):
                product = E.left_multiply(g.key, e)
                vectors.append([product.get(x.key, 0) for x in rad])
        rank = la.rank(la.matrix(E.field, vectors, shape=(len(vectors), len(rad)))) if vectors else 0
        arrows.extend([(i, j)] * (len(rad) - rank))
    return Quiver(E.labels, tuple(arrows))


def min_relation_counts(E):
    """
    table[i][j] = number of minimal relations from T_i to T_j, that is
    dim Ext^2_E(S_j, S_i).
    """
    require_gldim(E, 2, E.field)
    S = [homology.simple_module(E, v, E.field) for v in range(E.n_vertices)]
    return [[homology.ext_dim(S[j], S[i], 2) for j in range(E.n_vertices)] for i in range(E.n_vertices)]


# ============================================================================
# CLUSTER-TILTED QUIVERS
# ============================================================================

def _inconsistent(message, **params):
    logger.warning(message, params)
    return ValidationError(message, code='inconsistent', params=params)


def _combine(labels, stable, relations):
    m = len(labels)
    arrows, found = [], {}
    for i, j in itertools.product(range(m), repeat=2):
        a, r = stable[(i, j)], relations[i][j]
        if a and r:
            raise _inconsistent(
                "Both an arrow and a relation from %(source)s to %(target)s", source=labels[i], target=labels[j])
        if r:
            found[(i, j)] = r
        arrows.extend([(i, j)] * (a + r))
    stable = {pair: c for pair, c in stable.items() if c}
    return QuiverOut(Quiver(tuple(labels), tuple(arrows)), stable, found)


def cluster_tilted_quiver(t):
    """Quiver of End_C(T) for a cluster-tilting object given in the fundamental domain."""
    ar = t.domain.ar
    T = [ar.nodes[i].module for i in t.nodes]
    labels = t.labels()
    field = T[0].field
    delta = proj_inj_delta(ar.algebra, field)
    stable = Counter(algebra_quiver(stable_end(T, labels)).arrows)
    E = end_algebra(T + [ar.nodes[i].module for i in delta], labels + [ar.nodes[i].label for i in delta])
    relations = min_relation_counts(E)
    qc = _combine(labels, stable, relations)
    logger.info("Cluster-tilted quiver of %s: %d arrows", labels, len(qc.quiver.arrows))
    return qc


def hereditary_quiver(t):
    """
    The same quiver for a cluster-tilting object made of H-modules only, from
    End_H(T) and its minimal relations in add T.
    """
    if any(o.is_shift for o in t.objects):
        raise ValidationError("%(obj)s has a shifted summand", code='vertex', params={'obj': t.labels()})
    labels = t.labels()
    E = end_algebra([o.h_module for o in t.objects], labels)
    return _combine(labels, Counter(algebra_quiver(E).arrows), min_relation_counts(E))


def derived_hom(x, y):
    """
    dim Hom_D(X, Y) for fundamental-domain objects: Hom_H(M, N), Ext^1_H(M, P),
    0 from P[1] to N, Hom_H(P, Q) between shifts.
    """
    if x.is_shift:
        return homology.hom_dim(x.h_module, y.h_module) if y.is_shift else 0
    if y.is_shift:
        return ext1_dim(x.h_module, y.h_module)
    return homology.hom_dim(x.h_module, y.h_module)


def _twisted_hom(x, y):
    """dim Hom_D(F^-1 X, Y) with F = tau^-1 [1]."""
    if y.is_shift:
        return 0
    if x.is_shift:
        return ext1_dim(homology.nakayama(x.h_module), y.h_module)
    translate = homology.tau(x.h_module)
    return 0 if translate.is_zero() else ext1_dim(translate, y.h_module)


def cluster_hom_dim(x, y):
    """dim Hom_C(X, Y) = dim Hom_D(X, Y) + dim Hom_D(F^-1 X, Y)."""
    return derived_hom(x, y) + _twisted_hom(x, y)


def cluster_hom_table(objects):
    """table[a][b] = dim Hom_C(objects[a], objects[b])."""
    return [[cluster_hom_dim(x, y) for y in objects] for x in objects]


def top_dims(table):
    """
    Arrow counts of Q_C forced by a Hom_C table, as (low, high) per pair (i, j).

    Arrows i -> j are the irreducible maps T_j -> T_i: dim rad(T_j, T_i) minus
    dim rad^2(T_j, T_i). The radical square is spanned by composites through a
    third summand, so low = high whenever no such composite exists.
    """
    m = len(table)
    bounds = {}
    for i, j in itertools.product(range(m), repeat=2):
        high = table[j][i] - (1 if i == j else 0)
        through = sum(table[j][k] * table[k][i] for k in range(m) if k not in (i, j))
        bounds[(i, j)] = (high - min(high, through), high)
    return bounds


def cluster_hom_mismatches(t, qc):
    """Pairs whose arrow count in qc falls outside the bounds of ``top_dims``."""
    labels = t.labels()
    counts = qc.arrow_counts()
    failures = []
    for (i, j), (low, high) in sorted(top_dims(cluster_hom_table(t.objects)).items()):
        count = counts.get((i, j), 0)
        if not low <= count <= high:
            failures.append({'object': labels, 'arrow': [labels[i], labels[j]], 'arrows': count,
                             'top': [low, high]})
    return failures


def verify_mutation_class(qc, q):
    return in_mutation_class(qc.quiver, q)
