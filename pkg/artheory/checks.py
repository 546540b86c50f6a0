"""
Structural properties of mod Lambda and mod Gamma, checked on enumerated AR quivers.

Every check returns the list of counterexamples found (empty when it holds).
"""
from collections import Counter

from hmod import homology
from hmod.representations import injective, projective
from triplecat.algebras import gamma_of, lambda_of
from triplecat.construct import embed_h, gamma_in_lambda

from .enumeration import fundamental_domain, gamma_subcategory, indecomposables, left_part, pd_table
from .homological import gldim, lambda_trichotomy


def _primed_zero(M):
    return all(M.dims[v] == 0 for v in M.algebra.primed_vertices)


def pd_one_iff_translate_in_mod_h(h, field):
    ar = indecomposables(lambda_of(h), field)
    failures = []
    for node, pd in zip(ar.nodes, pd_table(ar)):
        translate = homology.tau(node.module, check=False)
        if (pd <= 1) != _primed_zero(translate):
            failures.append({'node': node.label, 'pd': pd, 'tau_dims': list(translate.dims)})
    return failures


def maps_into_pd_one_lower_pd(alg, field):
    ar = indecomposables(alg, field)
    pds = pd_table(ar)
    return [
        {'from': ar.nodes[i].label, 'to': ar.nodes[j].label, 'pd_from': pds[i]}
        for i in range(len(ar)) for j in range(len(ar))
        if ar.hom[i][j] and pds[j] == 1 and pds[i] > 1
    ]


def left_part_has_pd_one(h, field):
    """Inside Lambda: every node of the left part has pd <= 1 and the fundamental domain lies in it."""
    lam = lambda_of(h)
    ar = indecomposables(lam, field)
    pds = pd_table(ar)
    left = set(left_part(lam, field))
    failures = [{'node': ar.nodes[i].label, 'pd': pds[i]} for i in sorted(left) if pds[i] > 1]
    failures += [{'outside_left_part': ar.nodes[i].label}
                 for i in fundamental_domain(lam, field).nodes if i not in left]
    return failures


def gamma_pd_one_is_domain_plus_proj_inj(h, field):
    gamma = gamma_of(h)
    ar = indecomposables(gamma, field)
    pds = pd_table(ar)
    small = {i for i, pd in enumerate(pds) if pd <= 1}
    expected = set(fundamental_domain(gamma, field).nodes) | set(ar.proj_inj())
    failures = [{'node': ar.nodes[i].label, 'pd': pds[i]} for i in sorted(small ^ expected)]
    left = set(left_part(gamma, field))
    if left != small:
        failures.append({'not_predecessor_closed': sorted(ar.nodes[i].label for i in small - left)})
    return failures


def gamma_split_torsion(h, field):
    gamma = gamma_of(h)
    ar = indecomposables(gamma, field)
    pds = pd_table(ar)
    failures = [{'node': ar.nodes[i].label, 'pd': pd} for i, pd in enumerate(pds) if pd > 2]
    for i, pd in enumerate(pds):
        if pd <= 1:
            bad = [ar.nodes[j].label for j in ar.predecessors(i) if pds[j] == 2]
            if bad:
                failures.append({'node': ar.nodes[i].label, 'pd_two_predecessors': bad})
    return failures


def translate_of_dual_projective(h, field):
    """tau^-1 of D Hom(P, H) = I is the triple (soc P, I_1(P), pi)."""
    lam = lambda_of(h)
    failures = []
    for i in range(1, h.n + 1):
        P = projective(h, i, field)
        soc, _ = homology.socle(P)
        coresolution = homology.syzygy_multiplicities(homology.dual(P), 1)
        expected_y = [0] * h.n
        for v in coresolution:
            expected_y = [a + b for a, b in zip(expected_y, injective(h, v + 1, field).dims)]
        X = homology.tau_inv(embed_h(injective(h, i, field), lam))
        if list(X.x.dims) != list(soc.dims) or list(X.y.dims) != expected_y:
            failures.append({'vertex': h.labels[i - 1], 'dims': list(X.dims),
                             'expected_x': list(soc.dims), 'expected_y': expected_y})
    return failures


def envelope_of_h_covers_shifted_injectives(h, field):
    """I_0(H) over Lambda equals the projective cover of tau^-1 DH, summand by summand."""
    lam = lambda_of(h)
    envelope = Counter()
    cover = Counter()
    for i in range(1, h.n + 1):
        soc, _ = homology.socle(embed_h(projective(h, i, field), lam))
        for v, m in enumerate(soc.dims):
            envelope[homology.injective_module(lam, v, field).dims] += m
        shifted = homology.tau_inv(embed_h(injective(h, i, field), lam))
        for v in homology.proj_cover(shifted).vertices:
            cover[homology.projective_module(lam, v, field).dims] += 1
    if envelope != cover:
        return [{'envelope': sorted(map(list, envelope.elements())), 'cover': sorted(map(list, cover.elements()))}]
    return []


def global_dimension_bounds(h, field):
    failures = []
    g, l = gldim(gamma_of(h), field), gldim(lambda_of(h), field)
    if g > 2:
        failures.append({'algebra': 'Gamma', 'gldim': g})
    if l > 3:
        failures.append({'algebra': 'Lambda', 'gldim': l})
    expected = lambda_trichotomy(h, field)
    if l != expected:
        failures.append({'algebra': 'Lambda', 'gldim': l, 'trichotomy': expected})
    return failures


def mesh_relations(alg, field):
    """dim X + dim tau^-1 X is the sum over the arrows X -> Y of dim Y."""
    ar = indecomposables(alg, field)
    failures = []
    for node in ar.nodes:
        after = ar.tau_inv(node.index)
        if after is None:
            continue
        middle = [0] * alg.n_vertices
        for (s, t), m in ar.arrows.items():
            if s == node.index:
                middle = [a + m * b for a, b in zip(middle, ar.nodes[t].dims)]
        ends = [a + b for a, b in zip(node.dims, ar.nodes[after].dims)]
        if ends != middle:
            failures.append({'node': node.label, 'ends': ends, 'middle': middle})
    return failures


def gamma_inside_lambda(h, field):
    """mod Gamma sits in mod Lambda as the modules with primed part on the sinks; pd agrees."""
    gamma, lam = gamma_of(h), lambda_of(h)
    ar_gamma, ar_lambda = indecomposables(gamma, field), indecomposables(lam, field)
    failures = []
    images = set()
    for node, pd in zip(ar_gamma.nodes, pd_table(ar_gamma)):
        k = ar_lambda.find(gamma_in_lambda(node.module))
        images.add(k)
        if homology.pd(ar_lambda.nodes[k].module) != pd:
            failures.append({'node': node.label, 'pd_gamma': pd, 'pd_lambda': homology.pd(ar_lambda.nodes[k].module)})
    expected = set(gamma_subcategory(lam, field))
    if images != expected:
        failures.append({'lambda_nodes': sorted(ar_lambda.nodes[i].label for i in images ^ expected)})
    return failures


def fundamental_domains_agree(h, field):
    gamma, lam = gamma_of(h), lambda_of(h)
    fd_gamma, fd_lambda = fundamental_domain(gamma, field), fundamental_domain(lam, field)
    failures = []
    for k, (a, b) in enumerate(zip(fd_gamma.objects, fd_lambda.objects)):
        image = gamma_in_lambda(fd_gamma.ar.nodes[a.node].module)
        if image.dims != fd_lambda.ar.nodes[b.node].dims:
            failures.append({'position': k, 'gamma': fd_gamma.label(k), 'lambda': fd_lambda.label(k)})
    return failures