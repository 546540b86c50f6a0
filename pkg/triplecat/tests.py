from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from exactlin import linalg as la
from hmod import homology
from hmod.representations import projective as h_projective
from quiver.models import Quiver

from .algebras import gamma_of, lambda_of
from .construct import (
    embed_h, gamma_in_lambda, hom_triples, injectives, instance, projective_injectives,
    projectives, restrict_h, stacked_label, t_functor,
)

A2 = Quiver.from_arrows(2, [(1, 2)])
Y3 = Quiver.from_arrows(3, [(1, 3), (2, 3)])
A3_LINEAR = Quiver.from_arrows(3, [(1, 2), (2, 3)])
CYCLE = Quiver.from_arrows(2, [(1, 2), (2, 1)])


class InstanceTests(SimpleTestCase):

    def test_vertex_sets(self):
        self.assertEqual(gamma_of(A2).vertices, ('1', '2', "2'"))
        self.assertEqual(lambda_of(A2).vertices, ('1', '2', "1'", "2'"))
        self.assertEqual(gamma_of(Y3).delta, (3,))

    def test_projective_counts(self):
        for h in (A2, Y3, A3_LINEAR):
            self.assertEqual(len(projectives(gamma_of(h))), h.n + len(h.sinks()))
            self.assertEqual(len(projectives(lambda_of(h))), 2 * h.n)

    def test_instances_are_cached(self):
        self.assertIs(gamma_of(Y3), gamma_of(Quiver.from_arrows(3, [(1, 3), (2, 3)])))
        self.assertIs(instance('Lambda', A2), lambda_of(A2))

    def test_cyclic_quiver_is_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            gamma_of(CYCLE)
        self.assertEqual(ctx.exception.code, 'cyclic')

    def test_opposite_round_trip(self):
        gamma = gamma_of(Y3)
        self.assertIs(gamma.opposite().opposite(), gamma)
        self.assertTrue(gamma.opposite().is_opposite)


class ProjectiveTests(SimpleTestCase):

    def test_gamma_a2_projectives(self):
        labels = [stacked_label(P) for P in projectives(gamma_of(A2))]
        self.assertEqual(labels, ['1/2', '2', "2'/1/2"])

    def test_gamma_y3_projective_injective(self):
        gamma = gamma_of(Y3)
        P = projectives(gamma)[gamma.vertex("3'")]
        self.assertEqual(stacked_label(P), "3'/12/3")
        self.assertEqual(projective_injectives(gamma), list(gamma.delta))

    def test_injectives_are_duals(self):
        gamma = gamma_of(Y3)
        for I in injectives(gamma):
            self.assertIs(I.algebra, gamma)
            S, _ = homology.socle(I)
            self.assertEqual(S.dim, 1)

    def test_hom_dual_symmetry(self):
        modules = projectives(gamma_of(Y3)) + injectives(gamma_of(Y3))
        for M in modules:
            for N in modules:
                self.assertEqual(
                    homology.hom_dim(M, N),
                    homology.hom_dim(homology.dual(N), homology.dual(M)))

    def test_top_plus_radical(self):
        for M in projectives(lambda_of(A3_LINEAR)):
            T, _ = homology.top(M)
            R, _ = homology.radical(M)
            self.assertEqual(T.dim + R.dim, M.dim)

    def test_mixed_instances_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            hom_triples(projectives(gamma_of(A2))[0], projectives(lambda_of(A2))[0])
        self.assertEqual(ctx.exception.code, 'mixed')


class FunctorTests(SimpleTestCase):

    def test_lambda_functor_is_nakayama(self):
        lam = lambda_of(A3_LINEAR)
        field = la.prime_field()
        for v in range(3):
            x = homology.projective_module(lam.primed, v, field)
            self.assertEqual(t_functor(lam, x).module.dims, homology.nakayama(x).dims)

    def test_structure_maps_are_homomorphisms(self):
        for alg in (gamma_of(Y3), lambda_of(A2)):
            for M in projectives(alg) + injectives(alg):
                self.assertTrue(M.f.is_homomorphism())

    def test_projective_triple_components(self):
        gamma = gamma_of(A2)
        P = projectives(gamma)[gamma.vertex("2'")]
        self.assertEqual(P.x.dims, (1,))
        self.assertEqual(P.y.dims, (1, 1))
        self.assertEqual(P.f.source.dims, (1, 1))
        self.assertEqual(set(P.to_json()['mu']), {'(e2)*', '(a1)*'})


class EmbeddingTests(SimpleTestCase):

    def test_embed_and_restrict(self):
        M = h_projective(Y3, 1)
        T = embed_h(M, gamma_of(Y3))
        self.assertEqual(T.dims, (1, 0, 1, 0))
        self.assertTrue(homology.is_indecomposable(T))
        back = restrict_h(T)
        self.assertTrue(homology.is_isomorphic(back, M))

    def test_restrict_needs_empty_primed_part(self):
        gamma = gamma_of(A2)
        with self.assertRaises(ValueError):
            restrict_h(projectives(gamma)[gamma.vertex("2'")])

    def test_gamma_in_lambda(self):
        gamma = gamma_of(A2)
        image = gamma_in_lambda(projectives(gamma)[gamma.vertex("2'")])
        self.assertEqual(image.dims, (1, 1, 0, 1))
        self.assertTrue(homology.is_indecomposable(image))
        self.assertEqual(homology.pd(image), 0)

    def test_gamma_a2_has_six_indecomposables(self):
        found = homology.enumerate_indecomposables(gamma_of(A2), la.prime_field(), 50)
        self.assertEqual(len(found), 6)
