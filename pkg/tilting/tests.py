import itertools

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from artheory.enumeration import fundamental_domain, indecomposables
from quiver.models import Quiver
from triplecat.algebras import gamma_of, lambda_of

from .correspondence import (
    cluster_tilting_objects, compatible_objects, complements, exchange_graph, lambda_correspondence,
    lambda_restriction, proj_inj_delta, projective_object, theta, theta_inv,
)
from .enumeration import compatibility_graph, is_tilting, tilting_modules, tilting_modules_exhaustive
from .models import ClusterTiltObj, TiltingSet

A1 = Quiver.from_arrows(1, [])
A2 = Quiver.from_arrows(2, [(1, 2)])
Y3 = Quiver.from_arrows(3, [(1, 3), (2, 3)])
A3_LINEAR = Quiver.from_arrows(3, [(1, 2), (2, 3)])


def catalan(n):
    return len(list(itertools.combinations(range(2 * n), n))) // (n + 1)


class TiltingModuleTests(SimpleTestCase):

    def test_counts_over_gamma(self):
        self.assertEqual(len(tilting_modules(gamma_of(A2))), 5)
        self.assertEqual(len(tilting_modules(gamma_of(Y3))), 14)

    def test_clique_search_matches_exhaustive(self):
        for alg in (gamma_of(A1), gamma_of(A2), gamma_of(Y3), lambda_of(A1), lambda_of(A2)):
            self.assertEqual(tilting_modules(alg), tilting_modules_exhaustive(alg))

    def test_summands_are_valid(self):
        gamma = gamma_of(Y3)
        ar = indecomposables(gamma)
        for s in tilting_modules(gamma):
            self.assertEqual(len(s), 4)
            self.assertTrue(is_tilting(ar, s.summands))

    def test_every_tilting_gamma_module_contains_the_proj_injectives(self):
        for h in (A2, Y3, A3_LINEAR):
            delta = proj_inj_delta(gamma_of(h))
            for s in tilting_modules(gamma_of(h)):
                self.assertTrue(all(i in s for i in delta))

    def test_compatibility_graph_excludes_pd_two(self):
        gamma = gamma_of(Y3)
        ar = indecomposables(gamma)
        graph = compatibility_graph(ar)
        self.assertNotIn(ar.by_label("3'"), graph)
        self.assertEqual(graph.number_of_nodes(), 10)

    def test_ar_quiver_keys_the_ext_cache(self):
        ar = indecomposables(gamma_of(A2))
        self.assertEqual(hash(ar), hash(indecomposables(gamma_of(A2))))
        self.assertEqual(compatibility_graph(ar).number_of_nodes(), 6)
        self.assertTrue(all(is_tilting(ar, s.summands) for s in tilting_modules(gamma_of(A2))))

    def test_tilting_set_is_basic(self):
        ar = indecomposables(gamma_of(A2))
        self.assertEqual(TiltingSet(ar, (3, 1, 3)).summands, (1, 3))


class ThetaTests(SimpleTestCase):

    def test_worked_example(self):
        fd = fundamental_domain(gamma_of(Y3))
        t = ClusterTiltObj(fd, [fd.by_label(label) for label in ('2/3', '2', "3'/2")])
        self.assertEqual(sorted(theta(t).labels()), sorted(['2/3', '2', "3'/2", "3'/12/3"]))

    def test_smallest_case(self):
        fd = fundamental_domain(gamma_of(A1))
        shift = next(k for k, o in enumerate(fd.objects) if o.is_shift)
        self.assertEqual(sorted(theta(ClusterTiltObj(fd, [shift])).labels()), ["1'", "1'/1"])

    def test_round_trip(self):
        for h in (A2, Y3, A3_LINEAR):
            for s in tilting_modules(gamma_of(h)):
                self.assertEqual(theta(theta_inv(s)), s)

    def test_missing_proj_injective_is_inconsistent(self):
        gamma = gamma_of(A2)
        ar = indecomposables(gamma)
        s = TiltingSet(ar, [ar.by_label('1/2'), ar.by_label('2')])
        with self.assertRaises(ValidationError) as ctx:
            theta_inv(s)
        self.assertEqual(ctx.exception.code, 'inconsistent')

    def test_catalan_counts(self):
        self.assertEqual(len(cluster_tilting_objects(A1)), catalan(2))
        self.assertEqual(len(cluster_tilting_objects(A2)), catalan(3))
        for h in (Y3, A3_LINEAR):
            self.assertEqual(len(cluster_tilting_objects(h)), catalan(4))

    def test_matches_derived_compatibility(self):
        for h in (A1, A2, Y3, A3_LINEAR):
            self.assertEqual(cluster_tilting_objects(h), compatible_objects(h))

    def test_exchange_graph_reaches_everything(self):
        self.assertEqual(exchange_graph(A2).number_of_nodes(), 5)
        self.assertEqual(exchange_graph(Y3).number_of_nodes(), 14)
        self.assertEqual(projective_object(Y3).labels(), ['3', '1/3', '2/3'])


class LambdaCorrespondenceTests(SimpleTestCase):

    def test_bijection_on_a2(self):
        gamma_side = tilting_modules(gamma_of(A2))
        lambda_side = tilting_modules(lambda_of(A2))
        self.assertEqual(len(gamma_side), len(lambda_side))
        self.assertEqual(sorted(lambda_correspondence(s).summands for s in gamma_side),
                         sorted(s.summands for s in lambda_side))

    def test_round_trip(self):
        for s in tilting_modules(gamma_of(A2)):
            image = lambda_correspondence(s)
            self.assertEqual(len(image) - len(s), A2.n - len(A2.sinks()))
            self.assertEqual(lambda_restriction(image), s)


class ComplementTests(SimpleTestCase):

    def test_a2_example(self):
        objects = cluster_tilting_objects(A2)
        fd = objects[0].domain
        found = complements([fd.by_label('2')], objects)
        self.assertEqual([fd.label(k) for k in found], ['1/2', "2'"])

    def test_exactly_two_complements(self):
        for h in (A1, A2, Y3, A3_LINEAR):
            objects = cluster_tilting_objects(h)
            for t in objects:
                for almost in itertools.combinations(t.summands, h.n - 1):
                    self.assertEqual(len(complements(almost, objects)), 2)

    def test_not_almost_complete(self):
        objects = cluster_tilting_objects(A2)
        with self.assertRaises(ValidationError) as ctx:
            complements(objects[0].summands, objects)
        self.assertEqual(ctx.exception.code, 'vertex')
