"""Cross-checks of the cluster-tilted quivers; every check returns its counterexamples."""
from artheory.enumeration import fundamental_domain
from artheory.homological import gldim, stable_hom_dim
from tilting.correspondence import cluster_tilting_objects
from tilting.enumeration import tilting_modules
from triplecat.algebras import gamma_of

from .construct import (
    cluster_hom_mismatches, cluster_tilted_quiver, derived_hom, end_algebra, hereditary_quiver, verify_mutation_class,
)


def quivers_in_mutation_class(h, field):
    failures = []
    for t in cluster_tilting_objects(h, field):
        qc = cluster_tilted_quiver(t)
        if not verify_mutation_class(qc, h):
            failures.append({'object': t.labels(), 'quiver': qc.to_json()})
    return failures


def module_objects_match_hereditary(h, field):
    failures = []
    for t in cluster_tilting_objects(h, field):
        if any(o.is_shift for o in t.objects):
            continue
        ours, theirs = cluster_tilted_quiver(t), hereditary_quiver(t)
        if ours.arrow_counts() != theirs.arrow_counts():
            failures.append({'object': t.labels(), 'quiver': ours.to_json(), 'hereditary': theirs.to_json()})
    return failures


def arrows_match_cluster_hom(h, field):
    """Arrow counts of every Q_C agree with the tops read off the Hom_C tables."""
    failures = []
    for t in cluster_tilting_objects(h, field):
        failures.extend(cluster_hom_mismatches(t, cluster_tilted_quiver(t)))
    return failures


def stable_hom_matches_derived(h, field):
    """Hom modulo add I_0(soc H) between fundamental-domain objects equals Hom in D^b(H)."""
    fd = fundamental_domain(gamma_of(h), field)
    failures = []
    for a, x in enumerate(fd.objects):
        for b, y in enumerate(fd.objects):
            stable = stable_hom_dim(fd.ar.nodes[x.node].module, fd.ar.nodes[y.node].module)
            derived = derived_hom(x, y)
            if stable != derived:
                failures.append({'from': fd.label(a), 'to': fd.label(b), 'stable': stable, 'derived': derived})
    return failures


def tilting_endomorphisms_have_gldim_two(h, field):
    failures = []
    for s in tilting_modules(gamma_of(h), field):
        value = gldim(end_algebra(s.modules, s.labels()), field)
        if value > 2:
            failures.append({'module': s.labels(), 'gldim': value})
    return failures
