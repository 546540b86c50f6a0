import numpy as np
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from exactlin import linalg as la
from quiver.models import Quiver

from . import homology
from .algebras import path_algebra
from .models import Rep, RepMap
from .representations import (
    coxeter_matrix, euler_form, ext1_dim, hom_basis, indecomposables_h, injective, nakayama,
    projective, simple, tau_h, tau_h_inv,
)

A2 = Quiver.from_arrows(2, [(1, 2)])
Y3 = Quiver.from_arrows(3, [(1, 3), (2, 3)])
A3_LINEAR = Quiver.from_arrows(3, [(1, 2), (2, 3)])
D4 = Quiver.from_arrows(4, [(1, 4), (2, 4), (3, 4)])
KRONECKER = Quiver.from_arrows(2, [(1, 2), (1, 2)])


class ProjectiveInjectiveTests(SimpleTestCase):

    def test_a2_projectives_and_injectives(self):
        self.assertEqual(projective(A2, 1).dims, (1, 1))
        self.assertEqual(projective(A2, 2).dims, (0, 1))
        self.assertEqual(injective(A2, 1).dims, (1, 0))
        self.assertEqual(injective(A2, 2).dims, (1, 1))

    def test_projective_dimension_counts_paths(self):
        for q in (A2, Y3, A3_LINEAR, D4):
            for i in range(q.n):
                self.assertEqual(
                    projective(q, i + 1).dims, tuple(q.path_count(i, j) for j in range(q.n)))

    def test_hom_from_projective_is_the_vertex_space(self):
        for M in indecomposables_h(Y3):
            for i in (1, 2, 3):
                self.assertEqual(homology.hom_dim(projective(Y3, i), M), M.dims[i - 1])

    def test_vertices_accept_labels(self):
        self.assertIs(projective(Y3, '3'), projective(Y3, 3))
        with self.assertRaises(ValidationError) as ctx:
            simple(Y3, 4)
        self.assertEqual(ctx.exception.code, 'vertex')

    def test_nakayama_sends_projectives_to_injectives(self):
        for i in (1, 2, 3):
            self.assertEqual(nakayama(projective(Y3, i)).dims, injective(Y3, i).dims)


class HomExtTests(SimpleTestCase):

    def test_simple_ext_follows_arrows(self):
        self.assertEqual(ext1_dim(simple(A2, 1), simple(A2, 2)), 1)
        self.assertEqual(ext1_dim(simple(A2, 2), simple(A2, 1)), 0)
        self.assertEqual(len(hom_basis(simple(A2, 1), simple(A2, 2))), 0)

    def test_hom_basis_elements_commute_with_arrows(self):
        P1, P3 = projective(Y3, 1), projective(Y3, 3)
        maps = hom_basis(P3, P1)
        self.assertEqual(len(maps), 1)
        self.assertTrue(maps[0].is_homomorphism())

    def test_euler_form_matches_hom_minus_ext(self):
        modules = indecomposables_h(A3_LINEAR)
        for M in modules:
            for N in modules:
                self.assertEqual(
                    homology.hom_dim(M, N) - ext1_dim(M, N),
                    euler_form(A3_LINEAR, M.dims, N.dims))

    def test_hereditary_modules_have_pd_at_most_one(self):
        for M in indecomposables_h(D4):
            self.assertLessEqual(homology.pd(M), 1)
        self.assertEqual(homology.pd(simple(A2, 1)), 1)
        self.assertEqual(homology.pd(homology.zero_module(path_algebra(A2), la.prime_field())), 0)

    def test_modules_over_different_quivers_are_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            homology.hom_dim(simple(A2, 1), simple(Y3, 1))
        self.assertEqual(ctx.exception.code, 'mixed')

    def test_ext_degree_must_be_positive(self):
        with self.assertRaises(ValueError):
            homology.ext_dim(simple(A2, 1), simple(A2, 2), 0)


class TranslateTests(SimpleTestCase):

    def test_a2_translates(self):
        self.assertEqual(tau_h_inv(projective(A2, 2)).dims, (1, 0))
        self.assertTrue(tau_h_inv(simple(A2, 1)).is_zero())
        self.assertTrue(tau_h(projective(A2, 1)).is_zero())

    def test_tau_inverts_tau_inverse(self):
        for M in indecomposables_h(Y3):
            N = tau_h_inv(M)
            if not N.is_zero():
                self.assertTrue(homology.is_isomorphic(tau_h(N), M))

    def test_coxeter_matrix_predicts_translate(self):
        phi = coxeter_matrix(A3_LINEAR)
        for M in indecomposables_h(A3_LINEAR):
            N = tau_h(M)
            if not N.is_zero():
                self.assertEqual(tuple(phi @ np.array(M.dims)), N.dims)

    def test_decomposable_input_is_rejected(self):
        algebra = path_algebra(A2)
        total = homology.direct_sum(algebra, la.prime_field(), [simple(A2, 1), simple(A2, 2)])
        self.assertFalse(homology.is_indecomposable(total.module))
        with self.assertRaises(ValidationError) as ctx:
            tau_h(total.module)
        self.assertEqual(ctx.exception.code, 'decomposable')


class EnumerationTests(SimpleTestCase):

    def test_counts_are_positive_roots(self):
        self.assertEqual(len(indecomposables_h(A2)), 3)
        self.assertEqual(len(indecomposables_h(A3_LINEAR)), 6)
        self.assertEqual(len(indecomposables_h(D4)), 12)

    def test_order_starts_with_projectives(self):
        modules = indecomposables_h(Y3)
        self.assertEqual([M.dims for M in modules[:3]], [(1, 0, 1), (0, 1, 1), (0, 0, 1)])
        self.assertEqual(len({M.dims for M in modules}), 6)

    def test_non_dynkin_is_refused(self):
        with self.assertRaises(ValidationError) as ctx:
            indecomposables_h(KRONECKER)
        self.assertEqual(ctx.exception.code, 'refused')


class StructureTests(SimpleTestCase):

    def test_radical_layers_and_socle(self):
        P1 = projective(A2, 1)
        self.assertEqual(homology.radical_layers(P1), [(1, 0), (0, 1)])
        S, inclusion = homology.socle(P1)
        self.assertEqual(S.dims, (0, 1))
        self.assertTrue(inclusion.is_homomorphism())

    def test_top_and_radical_add_up(self):
        for M in indecomposables_h(D4):
            T, _ = homology.top(M)
            R, _ = homology.radical(M)
            self.assertEqual(T.dim + R.dim, M.dim)

    def test_rep_from_matrices(self):
        field = la.prime_field()
        M = Rep.from_mats(A2, [1, 1], [[[1]]], field)
        self.assertTrue(homology.is_isomorphic(M, projective(A2, 1)))
        self.assertEqual(M.to_json(), {'dims': [1, 1], 'mats': {'0': [[1]]}})
        self.assertTrue(RepMap.identity(M).is_homomorphism())

    def test_bad_matrix_shape_is_rejected(self):
        with self.assertRaises(ValueError):
            Rep.from_mats(A2, [1, 2], [[[1]]])


class EndomorphismScalarTests(SimpleTestCase):

    def test_identity_when_p_divides_the_total_dimension(self):
        M = projective(A3_LINEAR, 1, la.prime_field(3))
        identity = RepMap.identity(M)
        self.assertEqual(homology.endomorphism_scalar(identity), 1)
        doubled = RepMap(M, M, [la.scale(2, c) for c in identity.comps])
        self.assertEqual(homology.endomorphism_scalar(doubled), 2)

    def test_search_when_p_divides_every_dimension(self):
        field = la.prime_field(2)
        M = Rep.from_mats(Quiver.from_arrows(1, []), [2], [], field)
        self.assertEqual(homology.endomorphism_scalar(RepMap.identity(M)), 1)
        self.assertEqual(homology.endomorphism_scalar(RepMap(M, M, [la.matrix(field, [[0, 1], [0, 0]])])), 0)
        self.assertIsNone(homology.endomorphism_scalar(RepMap(M, M, [la.matrix(field, [[1, 0], [0, 0]])])))

    def test_indecomposability_over_small_fields(self):
        for p in (2, 3):
            field = la.prime_field(p)
            self.assertTrue(all(homology.is_indecomposable(M) for M in indecomposables_h(D4, field)))
            total = homology.direct_sum(path_algebra(A2), field, [simple(A2, 1, field), simple(A2, 2, field)])
            self.assertFalse(homology.is_indecomposable(total.module))
