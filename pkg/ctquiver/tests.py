from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from artheory.enumeration import fundamental_domain, indecomposables
from exactlin import linalg as la
from hmod import homology
from quiver.models import Quiver
from tilting.correspondence import projective_object
from tilting.models import ClusterTiltObj
from triplecat.algebras import gamma_of, lambda_of
from triplecat.construct import projectives

from . import checks
from .construct import (
    algebra_quiver, cluster_hom_dim, cluster_hom_mismatches, cluster_hom_table, cluster_tilted_quiver, end_algebra,
    hereditary_quiver, min_relation_counts, stable_end, top_dims, verify_mutation_class,
)
from .models import QuiverOut

A2 = Quiver.from_arrows(2, [(1, 2)])
Y3 = Quiver.from_arrows(3, [(1, 3), (2, 3)])
A3_LINEAR = Quiver.from_arrows(3, [(1, 2), (2, 3)])
CYCLE3 = Quiver.from_arrows(3, [(1, 2), (2, 3), (3, 1)])
A2_PLUS_A1 = Quiver.from_arrows(3, [(1, 2)])

FIELD = la.prime_field()


def modules(h, *labels):
    ar = indecomposables(gamma_of(h))
    return [ar.nodes[ar.by_label(label)].module for label in labels]


def obj(h, *labels):
    fd = fundamental_domain(gamma_of(h))
    return ClusterTiltObj(fd, [fd.by_label(label) for label in labels])


def labelled_arrows(qc):
    labels = qc.quiver.labels
    return sorted((labels[s], labels[t]) for s, t in qc.quiver.arrows)


class EndAlgebraTests(SimpleTestCase):

    def test_simple_summand(self):
        E = end_algebra([homology.simple_module(gamma_of(A2), 0, FIELD)])
        self.assertEqual(E.dimension, 1)
        self.assertEqual(algebra_quiver(E).arrows, ())

    def test_projective_generator_gives_gamma(self):
        E = end_algebra(projectives(gamma_of(A2)), ['1', '2', "2'"])
        self.assertEqual(E.dimension, 6)
        q = algebra_quiver(E)
        self.assertEqual(sorted((q.labels[s], q.labels[t]) for s, t in q.arrows), [('1', '2'), ("2'", '1')])
        self.assertEqual(min_relation_counts(E), [[0] * 3 for _ in range(3)])

    def test_worked_example_hom_dims(self):
        T = modules(Y3, '2/3', '2', "3'/2", "3'/12/3")
        E = end_algebra(T)
        self.assertEqual(E.hom_dims[1][0], 1)
        self.assertEqual(E.hom_dims[2][1], 1)
        self.assertEqual(E.dimension, sum(homology.hom_dim(X, Y) for X in T for Y in T))

    def test_path_through_proj_inj(self):
        T = modules(Y3, '2/3', '2', "3'/2", "3'/12/3")
        q = algebra_quiver(end_algebra(T))
        arrows = set((q.labels[s], q.labels[t]) for s, t in q.arrows)
        self.assertIn(("3'/12/3", '2/3'), arrows)
        self.assertIn(("3'/2", "3'/12/3"), arrows)

    def test_semisimple(self):
        gamma = gamma_of(A2)
        E = end_algebra([homology.simple_module(gamma, v, FIELD) for v in range(3)])
        self.assertEqual(algebra_quiver(E).arrows, ())

    def test_repeated_summand(self):
        S = homology.simple_module(gamma_of(A2), 0, FIELD)
        with self.assertRaises(ValidationError) as ctx:
            end_algebra([S, S])
        self.assertEqual(ctx.exception.code, 'decomposable')

    def test_decomposable_summand(self):
        gamma = gamma_of(A2)
        both = homology.direct_sum(gamma, FIELD, [homology.simple_module(gamma, v, FIELD) for v in (0, 1)])
        with self.assertRaises(ValidationError) as ctx:
            end_algebra([both.module])
        self.assertEqual(ctx.exception.code, 'decomposable')

    def test_projective_dimension_vectors(self):
        E = end_algebra(modules(Y3, '2/3', '2', "3'/2", "3'/12/3"))
        P = homology.projective_module(E, 0, FIELD)
        self.assertEqual(P.dims, tuple(E.hom_dims[0]))


class RelationTests(SimpleTestCase):

    def test_zero_relation_through_proj_inj(self):
        E = end_algebra(modules(A2, '2', "2'", "2'/1/2"))
        relations = min_relation_counts(E)
        self.assertEqual(relations[0][1], 1)
        self.assertEqual(sum(map(sum, relations)), 1)

    def test_commutativity_relation(self):
        E = end_algebra(modules(Y3, '2/3', '2', "3'/2", "3'/12/3"))
        relations = min_relation_counts(E)
        self.assertEqual(relations[0][2], 1)
        self.assertEqual(sum(map(sum, relations)), 1)

    def test_global_dimension_three_is_inconsistent(self):
        E = end_algebra(projectives(lambda_of(A3_LINEAR)))
        with self.assertRaises(ValidationError) as ctx:
            min_relation_counts(E)
        self.assertEqual(ctx.exception.code, 'inconsistent')


class StableEndTests(SimpleTestCase):

    def test_a2_example(self):
        self.assertEqual(stable_end(modules(A2, '2', "2'")).hom_dims, [[1, 0], [0, 1]])

    def test_map_through_proj_inj_dies(self):
        T = modules(Y3, '2/3', '2', "3'/2")
        self.assertEqual(end_algebra(T).hom_dims[2][0], 1)
        B = stable_end(T)
        self.assertEqual(B.hom_dims[2][0], 0)
        self.assertEqual([B.hom_dims[i][i] for i in range(3)], [1, 1, 1])

    def test_modules_keep_every_map(self):
        T = modules(Y3, '1/3', '2/3', '3')
        self.assertEqual(stable_end(T).hom_dims, end_algebra(T).hom_dims)


class ClusterTiltedQuiverTests(SimpleTestCase):

    def test_oriented_three_cycle(self):
        qc = cluster_tilted_quiver(obj(Y3, '2/3', '2', "3'/2"))
        self.assertEqual(labelled_arrows(qc), sorted([('2', '2/3'), ("3'/2", '2'), ('2/3', "3'/2")]))
        self.assertTrue(verify_mutation_class(qc, Y3))

    def test_a2_shifted_object(self):
        qc = cluster_tilted_quiver(obj(A2, '2', "2'"))
        self.assertEqual(labelled_arrows(qc), [('2', "2'")])
        self.assertEqual(qc.stable_arrows, {})
        self.assertEqual(qc.relations, {(0, 1): 1})

    def test_projective_object_gives_the_quiver(self):
        self.assertEqual(labelled_arrows(cluster_tilted_quiver(projective_object(A2))), [('1/2', '2')])
        self.assertEqual(labelled_arrows(cluster_tilted_quiver(projective_object(Y3))),
                         [('1/3', '3'), ('2/3', '3')])

    def test_module_objects_agree_with_hereditary_end(self):
        t = projective_object(A3_LINEAR)
        self.assertEqual(cluster_tilted_quiver(t).arrow_counts(), hereditary_quiver(t).arrow_counts())

    def test_hereditary_quiver_needs_modules(self):
        with self.assertRaises(ValidationError) as ctx:
            hereditary_quiver(obj(A2, '2', "2'"))
        self.assertEqual(ctx.exception.code, 'vertex')

    def test_to_json(self):
        data = cluster_tilted_quiver(obj(A2, '2', "2'")).to_json()
        self.assertEqual(data['arrows'], [['2', "2'"]])
        self.assertEqual(data['relations'], [['2', "2'", 1]])


class ClusterHomTests(SimpleTestCase):

    def test_worked_examples(self):
        fd = fundamental_domain(gamma_of(Y3))
        x, y = fd.objects[fd.by_label("3'/2")], fd.objects[fd.by_label('2/3')]
        self.assertEqual(cluster_hom_dim(x, y), 1)
        fd = fundamental_domain(gamma_of(A2))
        self.assertEqual(cluster_hom_dim(fd.objects[fd.by_label("2'")], fd.objects[fd.by_label('2')]), 1)
        self.assertEqual(cluster_hom_dim(fd.objects[fd.by_label('2')], fd.objects[fd.by_label("2'")]), 0)

    def test_identity(self):
        for h in (A2, Y3):
            fd = fundamental_domain(gamma_of(h))
            for o in fd.objects:
                self.assertGreaterEqual(cluster_hom_dim(o, o), 1)


class TopTests(SimpleTestCase):

    def test_a2_tops_are_exact(self):
        t = obj(A2, '2', "2'")
        table = cluster_hom_table(t.objects)
        self.assertEqual(table, [[1, 0], [1, 1]])
        self.assertEqual(top_dims(table), {(0, 0): (0, 0), (0, 1): (1, 1), (1, 0): (0, 0), (1, 1): (0, 0)})
        self.assertEqual(cluster_hom_mismatches(t, cluster_tilted_quiver(t)), [])

    def test_missing_arrow_is_reported(self):
        t = obj(A2, '2', "2'")
        bare = QuiverOut(Quiver(tuple(t.labels()), ()))
        self.assertEqual(cluster_hom_mismatches(t, bare),
                         [{'object': ['2', "2'"], 'arrow': ['2', "2'"], 'arrows': 0, 'top': [1, 1]}])

    def test_missing_arrow_in_the_three_cycle(self):
        t = obj(Y3, '2/3', '2', "3'/2")
        qc = cluster_tilted_quiver(t)
        self.assertEqual(cluster_hom_mismatches(t, qc), [])
        fewer = QuiverOut(Quiver(qc.quiver.labels, qc.quiver.arrows[1:]))
        self.assertEqual(len(cluster_hom_mismatches(t, fewer)), 1)


class SmallFieldTests(SimpleTestCase):

    def test_three_cycle_over_f2_and_f3(self):
        for p in (2, 3):
            fd = fundamental_domain(gamma_of(Y3), la.prime_field(p))
            t = ClusterTiltObj(fd, [fd.by_label(label) for label in ('2/3', '2', "3'/2")])
            self.assertEqual(labelled_arrows(cluster_tilted_quiver(t)),
                             sorted([('2', '2/3'), ("3'/2", '2'), ('2/3', "3'/2")]))

    def test_identity_stays_out_of_the_radical(self):
        ar = indecomposables(gamma_of(Y3), la.prime_field(2))
        T = [ar.nodes[ar.by_label(label)].module for label in ('2/3', '2', "3'/2", "3'/12/3")]
        E = end_algebra(T)
        self.assertEqual([E.hom_dims[i][i] for i in range(4)], [1, 1, 1, 1])
        self.assertEqual(E.dimension, sum(map(sum, E.hom_dims)))


class MutationClassTests(SimpleTestCase):

    def test_oracle(self):
        self.assertTrue(verify_mutation_class(QuiverOut(CYCLE3), A3_LINEAR))
        self.assertTrue(verify_mutation_class(QuiverOut(A3_LINEAR), A3_LINEAR))
        self.assertFalse(verify_mutation_class(QuiverOut(CYCLE3), A2_PLUS_A1))


class CheckTests(SimpleTestCase):

    def test_checks_pass(self):
        for h in (A2, Y3):
            self.assertEqual(checks.quivers_in_mutation_class(h, FIELD), [])
            self.assertEqual(checks.module_objects_match_hereditary(h, FIELD), [])
            self.assertEqual(checks.arrows_match_cluster_hom(h, FIELD), [])
            self.assertEqual(checks.stable_hom_matches_derived(h, FIELD), [])
            self.assertEqual(checks.tilting_endomorphisms_have_gldim_two(h, FIELD), [])

    def test_linear_a3_quivers(self):
        self.assertEqual(checks.quivers_in_mutation_class(A3_LINEAR, FIELD), [])
