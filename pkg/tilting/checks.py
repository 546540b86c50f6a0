"""Checks of the tilting correspondences; every check returns its counterexamples."""
import itertools

from triplecat.algebras import gamma_of, lambda_of

from .correspondence import (
    cluster_tilting_objects, compatible_objects, complements, exchange_graph, lambda_correspondence,
    lambda_restriction, theta, theta_inv,
)
from .enumeration import tilting_modules, tilting_modules_exhaustive


def clique_search_is_complete(h, field):
    failures = []
    for alg in (gamma_of(h), lambda_of(h)):
        fast, slow = tilting_modules(alg, field), tilting_modules_exhaustive(alg, field)
        if fast != slow:
            failures.append({'algebra': repr(alg), 'cliques': len(fast), 'exhaustive': len(slow)})
    return failures


def theta_is_bijective(h, field):
    failures = []
    for s in tilting_modules(gamma_of(h), field):
        if theta(theta_inv(s, field), field) != s:
            failures.append({'module': s.labels()})
    objects = cluster_tilting_objects(h, field)
    derived = compatible_objects(h, field)
    if objects != derived:
        failures.append({'theta_inverse': [t.labels() for t in objects],
                         'ext_orthogonal': [t.labels() for t in derived]})
    return failures


def exchange_graph_is_connected(h, field):
    graph = exchange_graph(h, field)
    total = len(cluster_tilting_objects(h, field))
    if graph.number_of_nodes() != total:
        return [{'reachable': graph.number_of_nodes(), 'objects': total}]
    return []


def lambda_correspondence_round_trip(h, field):
    gamma_side = tilting_modules(gamma_of(h), field)
    failures = [{'module': s.labels()} for s in gamma_side
                if lambda_restriction(lambda_correspondence(s, field), field) != s]
    lambda_count = len(tilting_modules(lambda_of(h), field))
    if lambda_count != len(gamma_side):
        failures.append({'gamma': len(gamma_side), 'lambda': lambda_count})
    return failures


def two_complements(h, field):
    objects = cluster_tilting_objects(h, field)
    failures = []
    seen = set()
    for t in objects:
        for almost in itertools.combinations(t.summands, h.n - 1):
            if almost in seen:
                continue
            seen.add(almost)
            found = complements(almost, objects)
            if len(found) != 2:
                fd = t.domain
                failures.append({'almost': [fd.label(k) for k in almost],
                                 'complements': [fd.label(k) for k in found]})
    return failures
