from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from exactlin import linalg as la
from hmod import homology
from quiver.models import Quiver
from triplecat.algebras import gamma_of, lambda_of
from triplecat.construct import embed_h, projectives
from hmod.representations import injective

from . import checks
from .enumeration import fundamental_domain, indecomposables, left_part, pd_table
from .homological import (
    ext_dim, factors_through_proj_inj, gabriel_quiver, gldim, lambda_trichotomy, min_presentation,
    stable_hom_dim, tau_inv,
)
from .models import SHIFT

A1 = Quiver.from_arrows(1, [])
A2 = Quiver.from_arrows(2, [(1, 2)])
Y3 = Quiver.from_arrows(3, [(1, 3), (2, 3)])
SOURCE3 = Quiver.from_arrows(3, [(2, 1), (2, 3)])
A3_LINEAR = Quiver.from_arrows(3, [(1, 2), (2, 3)])
TRIANGLE = Quiver.from_arrows(3, [(1, 2), (2, 3), (1, 3)])
TWO_POINTS = Quiver.from_arrows(2, [])
KRONECKER = Quiver.from_arrows(2, [(1, 2), (1, 2)])

FIELD = la.prime_field()


def labels(ar):
    return {n.label for n in ar.nodes}


class EnumerationTests(SimpleTestCase):

    def test_gamma_a2_nodes(self):
        ar = indecomposables(gamma_of(A2))
        self.assertEqual(labels(ar), {'2', '1/2', '1', "2'/1/2", "2'/1", "2'"})

    def test_gamma_y3_nodes(self):
        ar = indecomposables(gamma_of(Y3))
        self.assertEqual(labels(ar), {
            '3', '1/3', '2/3', '12/3', "3'/12/3", '2', '1', "3'/12", "3'/1", "3'/2", "3'"})
        self.assertEqual([ar.nodes[i].label for i in ar.proj_inj()], ["3'/12/3"])

    def test_lambda_a1_is_the_triangular_algebra(self):
        ar = indecomposables(lambda_of(A1))
        self.assertEqual(len(ar), 3)
        self.assertEqual(len(ar.proj_inj()), 1)

    def test_tau_links(self):
        ar = indecomposables(gamma_of(Y3))
        for i in range(len(ar)):
            j = ar.tau_inv(i)
            if j is not None:
                self.assertEqual(ar.tau(j), i)
            self.assertEqual(ar.tau(i) is None, ar.is_projective(i))

    def test_mesh_relations(self):
        for alg in (gamma_of(A2), gamma_of(Y3), lambda_of(A2)):
            self.assertEqual(checks.mesh_relations(alg, FIELD), [])

    def test_non_dynkin_is_refused(self):
        with self.assertRaises(ValidationError) as ctx:
            indecomposables(gamma_of(KRONECKER))
        self.assertEqual(ctx.exception.code, 'refused')

    def test_dot_output(self):
        dot = indecomposables(gamma_of(A2)).to_dot()
        self.assertTrue(dot.startswith('digraph {'))
        self.assertIn('style=dashed', dot)


class FundamentalDomainTests(SimpleTestCase):

    def test_a2_domain(self):
        fd = fundamental_domain(gamma_of(A2))
        self.assertEqual([fd.label(k) for k in range(len(fd))], ['2', '1/2', '1', "2'/1", "2'"])
        self.assertEqual([o.kind == SHIFT for o in fd.objects], [False] * 3 + [True] * 2)

    def test_slices_follow_the_knitting_order(self):
        fd = fundamental_domain(gamma_of(Y3))
        self.assertEqual([fd.label(k) for k in range(6)], ['3', '1/3', '2/3', '12/3', '2', '1'])
        self.assertEqual([o.vertex for o in fd.objects[6:]], [2, 0, 1])

    def test_sizes(self):
        self.assertEqual(len(fundamental_domain(gamma_of(Y3))), 9)
        self.assertEqual(len(fundamental_domain(gamma_of(A1))), 2)
        self.assertEqual(len(fundamental_domain(lambda_of(Y3))), 9)

    def test_shifted_injective(self):
        gamma = gamma_of(Y3)
        ar = indecomposables(gamma)
        X = tau_inv(embed_h(injective(Y3, 3), gamma))
        self.assertEqual(ar.nodes[ar.find(X)].label, "3'/12")

    def test_left_part_of_gamma_is_pd_at_most_one(self):
        gamma = gamma_of(Y3)
        ar = indecomposables(gamma)
        small = [i for i, pd in enumerate(pd_table(ar)) if pd <= 1]
        self.assertEqual(left_part(gamma), small)


class HomologicalTests(SimpleTestCase):

    def test_presentation_of_simple_primed(self):
        gamma = gamma_of(A2)
        S = homology.simple_module(gamma, "2'", FIELD)
        p1, p0 = min_presentation(S)
        self.assertEqual(p0.source.dims, (1, 1, 1))
        self.assertEqual(p1.source.dims, (1, 1, 0))

    def test_presentation_of_projective(self):
        P = projectives(gamma_of(Y3))[0]
        p1, p0 = min_presentation(P)
        self.assertTrue(p1.source.is_zero())
        self.assertTrue(homology.is_isomorphic(p0.source, P))

    def test_global_dimensions(self):
        self.assertEqual(gldim(lambda_of(A1)), 1)
        self.assertEqual(gldim(lambda_of(TWO_POINTS)), 1)
        self.assertEqual(gldim(lambda_of(A2)), 2)
        self.assertEqual(gldim(lambda_of(Y3)), 2)
        self.assertEqual(gldim(lambda_of(SOURCE3)), 2)
        self.assertEqual(gldim(lambda_of(A3_LINEAR)), 3)
        self.assertEqual(gldim(lambda_of(TRIANGLE)), 3)
        for h in (A2, Y3, A3_LINEAR, TRIANGLE):
            self.assertLessEqual(gldim(gamma_of(h)), 2)

    def test_trichotomy(self):
        for h in (A1, TWO_POINTS, A2, Y3, SOURCE3, A3_LINEAR, TRIANGLE):
            self.assertEqual(lambda_trichotomy(h), gldim(lambda_of(h)))

    def test_tilting_example_is_ext_orthogonal(self):
        gamma = gamma_of(Y3)
        ar = indecomposables(gamma)
        T = [ar.nodes[ar.by_label(label)].module for label in ('2/3', '2', "3'/2", "3'/12/3")]
        for M in T:
            for N in T:
                self.assertEqual(ext_dim(M, N, 1), 0)

    def test_ext_degree_range(self):
        S = homology.simple_module(gamma_of(A2), 0, FIELD)
        with self.assertRaises(ValueError):
            ext_dim(S, S, 4)

    def test_gabriel_quiver_of_gamma_a2(self):
        gq = gabriel_quiver(gamma_of(A2))
        self.assertEqual(sorted(gq.to_json()['arrows']), [['1', '2'], ["2'", '1']])
        self.assertEqual(gq.relations, {})

    def test_worked_example_hom_dimensions(self):
        ar = indecomposables(gamma_of(Y3))
        node = {n.label: n.module for n in ar.nodes}
        self.assertEqual(homology.hom_dim(node['2/3'], node['2']), 1)
        self.assertEqual(homology.hom_dim(node['2'], node["3'/2"]), 1)


class FactorizationTests(SimpleTestCase):

    def setUp(self):
        ar = indecomposables(gamma_of(Y3))
        self.node = {n.label: n.module for n in ar.nodes}

    def test_map_through_proj_inj_is_detected(self):
        first = homology.hom_basis(self.node['2/3'], self.node["3'/12/3"])[0]
        second = homology.hom_basis(self.node["3'/12/3"], self.node["3'/2"])[0]
        composite = second.compose(first)
        self.assertFalse(composite.is_zero())
        self.assertTrue(factors_through_proj_inj(composite))
        self.assertEqual(stable_hom_dim(self.node['2/3'], self.node["3'/2"]), 0)

    def test_identity_does_not_factor(self):
        M = self.node['2/3']
        self.assertFalse(factors_through_proj_inj(homology.hom_basis(M, M)[0]))
        self.assertEqual(stable_hom_dim(M, M), 1)


class PropertyTests(SimpleTestCase):

    def test_lambda_properties(self):
        for h in (A2, Y3):
            self.assertEqual(checks.pd_one_iff_translate_in_mod_h(h, FIELD), [])
            self.assertEqual(checks.maps_into_pd_one_lower_pd(lambda_of(h), FIELD), [])
            self.assertEqual(checks.left_part_has_pd_one(h, FIELD), [])
            self.assertEqual(checks.translate_of_dual_projective(h, FIELD), [])
            self.assertEqual(checks.envelope_of_h_covers_shifted_injectives(h, FIELD), [])

    def test_gamma_properties(self):
        for h in (A2, Y3):
            self.assertEqual(checks.gamma_pd_one_is_domain_plus_proj_inj(h, FIELD), [])
            self.assertEqual(checks.gamma_split_torsion(h, FIELD), [])
            self.assertEqual(checks.maps_into_pd_one_lower_pd(gamma_of(h), FIELD), [])
            self.assertEqual(checks.global_dimension_bounds(h, FIELD), [])

    def test_gamma_inside_lambda(self):
        for h in (A2, Y3):
            self.assertEqual(checks.gamma_inside_lambda(h, FIELD), [])
            self.assertEqual(checks.fundamental_domains_agree(h, FIELD), [])
