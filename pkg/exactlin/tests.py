from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings

from . import linalg as la


class FieldTests(SimpleTestCase):

    def test_default_prime(self):
        self.assertEqual(la.prime_field().order, 32003)

    @override_settings(FIELD_PRIME=7)
    def test_prime_from_settings(self):
        F = la.prime_field()
        self.assertEqual(F.order, 7)
        self.assertTrue(la.is_zero(la.scale(7, la.identity(F, 2))))

    def test_explicit_prime_wins(self):
        self.assertEqual(la.prime_field(5).order, 5)

    def test_not_prime(self):
        with self.assertRaises(ImproperlyConfigured):
            la.prime_field(9)

    def test_wrap_reduces(self):
        F = la.prime_field(7)
        self.assertEqual(la.to_lists(la.matrix(F, [[-1, 8]])), [[6, 1]])


class EliminationTests(SimpleTestCase):

    def setUp(self):
        self.F = la.prime_field()

    def test_rank(self):
        A = la.matrix(self.F, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        self.assertEqual(la.rank(A), 2)
        self.assertEqual(la.rref(A)[1], [0, 1])

    def test_empty_shapes(self):
        self.assertEqual(la.rank(la.zeros(self.F, 0, 3)), 0)
        self.assertEqual(la.kernel_matrix(la.zeros(self.F, 0, 3)).shape, (3, 3))
        self.assertEqual(la.mul(la.zeros(self.F, 2, 0), la.zeros(self.F, 0, 4)).shape, (2, 4))

    def test_kernel(self):
        A = la.matrix(self.F, [[1, 2, 3], [2, 4, 6]])
        K = la.kernel_matrix(A)
        self.assertEqual(K.shape, (3, 2))
        self.assertTrue(la.is_zero(la.mul(A, K)))

    def test_solve(self):
        A = la.matrix(self.F, [[1, 1], [0, 1]])
        x = la.solve(A, la.vector(self.F, [3, 1]))
        self.assertEqual(la.to_lists(x), [2, 1])
        B = la.matrix(self.F, [[1, 1], [1, 1]])
        self.assertIsNone(la.solve(B, la.vector(self.F, [1, 2])))

    def test_solve_length_mismatch(self):
        with self.assertRaises(ValueError):
            la.solve(la.identity(self.F, 2), la.vector(self.F, [1, 2, 3]))

    def test_multiply_mismatch(self):
        with self.assertRaises(ValueError):
            la.mul(la.identity(self.F, 2), la.identity(self.F, 3))

    def test_express(self):
        B = la.matrix(self.F, [[1, 0], [1, 1], [0, 1]])
        V = la.matrix(self.F, [[2], [5], [3]])
        self.assertEqual(la.to_lists(la.express(B, V)), [[2], [3]])
        with self.assertRaises(ValueError):
            la.express(B, la.matrix(self.F, [[1], [0], [0]]))

    def test_quotient_projection(self):
        S = la.matrix(self.F, [[1], [1], [0]])
        Q, C = la.quotient_projection(S, 3)
        self.assertEqual(Q.shape, (2, 3))
        self.assertEqual(len(C), 2)
        self.assertTrue(la.is_zero(la.mul(Q, S)))
        self.assertEqual(la.rank(Q), 2)

    def test_right_inverse(self):
        P = la.matrix(self.F, [[1, 2, 0], [0, 1, 1]])
        self.assertEqual(la.to_lists(la.mul(P, la.right_inverse(P))), [[1, 0], [0, 1]])
        with self.assertRaises(ValueError):
            la.right_inverse(la.matrix(self.F, [[1, 1], [1, 1]]))

    def test_quotient_dim(self):
        e = [la.vector(self.F, row) for row in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
        self.assertEqual(la.quotient_dim([e[0], e[1]], [e[0]]), 1)
        self.assertEqual(la.quotient_dim([], []), 0)
        with self.assertRaises(ValueError):
            la.quotient_dim([e[0]], [e[2]])

    def test_block_diag(self):
        D = la.block_diag(self.F, [la.identity(self.F, 1), la.matrix(self.F, [[2, 3]])])
        self.assertEqual(la.to_lists(D), [[1, 0, 0], [0, 2, 3]])
