"""Presentations, projective dimension, Ext, global dimension and Gabriel quivers."""
import logging
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from exactlin import linalg as la
from hmod import homology
from hmod.representations import injective
from quiver.models import Quiver

logger = logging.getLogger(__name__)

EXT_DEGREES = (1, 2, 3)


def base_quiver(alg):
    """The quiver H an algebra was built from."""
    return alg.h if hasattr(alg, 'h') else alg.base


def min_presentation(M):
    """(p1, p0) for the minimal projective presentation P1 -> P0 -> M."""
    presentation = homology.min_presentation(M)
    return presentation.p1, presentation.p0


pd = homology.pd
tau = homology.tau
tau_inv = homology.tau_inv


def ext_dim(M, N, k):
    if k not in EXT_DEGREES:
        raise ValueError(f"Ext degree must be one of {EXT_DEGREES}, got {k}")
    return homology.ext_dim(M, N, k)


def simples(alg, field=None):
    field = field or la.prime_field()
    return [homology.simple_module(alg, v, field) for v in range(alg.n_vertices)]


def gldim(alg, field=None):
    """max pd over the simple modules."""
    return max((pd(S) for S in simples(alg, field)), default=0)


@dataclass
class GabrielQuiver:
    quiver: Quiver
    relations: dict  # (i, j) -> number of minimal relations from i to j

    def to_json(self):
        labels = self.quiver.labels
        return {
            'vertices': list(labels),
            'arrows': [[labels[s], labels[t]] for s, t in self.quiver.arrows],
            'relations': [[labels[i], labels[j], c] for (i, j), c in sorted(self.relations.items())],
        }


def gabriel_quiver(alg, field=None):
    """Arrows i -> j counted by Ext^1(S_i, S_j), relations by Ext^2(S_i, S_j)."""
    S = simples(alg, field)
    arrows = []
    relations = {}
    for i, Si in enumerate(S):
        for j, Sj in enumerate(S):
            arrows.extend([(i, j)] * homology.ext_dim(Si, Sj, 1))
            count = homology.ext_dim(Si, Sj, 2)
            if count:
                relations[(i, j)] = count
    return GabrielQuiver(Quiver(alg.vertices, tuple(arrows)), relations)


def lambda_trichotomy(h, field=None):
    """
    gldim of the duplicated algebra read off H: 1 when H is semisimple, 2 when
    tau_H^2 vanishes on every injective, 3 otherwise.
    """
    if not h.arrows:
        return 1
    for i in range(1, h.n + 1):
        X = homology.tau(injective(h, i, field))
        if not X.is_zero() and not homology.tau(X).is_zero():
            return 3
    return 2


# ============================================================================
# FACTORIZATION THROUGH A SET OF MODULES
# ============================================================================

def composites_through(X, Y, through):
    """g o h for h in a basis of Hom(X, Z), g in a basis of Hom(Z, Y), Z in through."""
    maps = []
    for Z in through:
        first = homology.hom_basis(X, Z)
        if not first:
            continue
        for g in homology.hom_basis(Z, Y):
            maps.extend(g.compose(h) for h in first)
    return maps


def factoring_rank(X, Y, through):
    """Dimension of the subspace of Hom(X, Y) of maps factoring through add(through)."""
    return homology.maps_span_rank(composites_through(X, Y, through))


def factors_through(f, through):
    composites = composites_through(f.source, f.target, through)
    if not composites:
        return f.is_zero()
    rank = homology.maps_span_rank(composites)
    return homology.maps_span_rank(composites + [f]) == rank


def socle_injectives(alg, field=None):
    """Indecomposable summands of I_0(soc H): the injective envelopes of the simple projective H-modules."""
    field = field or la.prime_field()
    h = base_quiver(alg)
    plain = getattr(alg, 'plain_vertices', range(h.n))
    return [homology.injective_module(alg, plain[s], field) for s in h.sinks()]


def factors_through_proj_inj(f):
    """True iff f factors through add I_0(soc H)."""
    return factors_through(f, socle_injectives(f.source.algebra, f.source.field))


def stable_hom_dim(X, Y):
    """dim Hom(X, Y) modulo the maps factoring through add I_0(soc H)."""
    through = socle_injectives(X.algebra, X.field)
    return homology.hom_dim(X, Y) - factoring_rank(X, Y, through)


def require_gldim(alg, bound, field=None):
    value = gldim(alg, field)
    if value > bound:
        raise ValidationError(
            "Global dimension %(value)s of %(alg)r exceeds %(bound)s", code='inconsistent',
            params={'value': value, 'alg': alg, 'bound': bound})
    return value
