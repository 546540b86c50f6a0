import tempfile
from pathlib import Path

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings

from .dot import to_dot
from .dynkin import dynkin_type, positive_root_count, require_dynkin
from .models import ExchangeMatrix, Quiver
from .mutation import canonical_form, in_mutation_class, mutate, mutation_class
from .parsing import load_quiver, parse_quiver, quiver_to_json

A2 = Quiver.from_arrows(2, [(1, 2)])
Y3 = Quiver.from_arrows(3, [(1, 3), (2, 3)])
A3_LINEAR = Quiver.from_arrows(3, [(1, 2), (2, 3)])
CYCLE3 = Quiver.from_arrows(3, [(1, 2), (2, 3), (3, 1)])
KRONECKER = Quiver.from_arrows(2, [(1, 2), (1, 2)])
D4 = Quiver.from_arrows(4, [(1, 4), (2, 4), (3, 4)])
E6 = Quiver.from_arrows(6, [(1, 2), (2, 3), (4, 3), (5, 4), (6, 3)])
E2 = Quiver.from_arrows(4, [(1, 2), (2, 4), (3, 4)])


class QuiverTests(SimpleTestCase):

    def test_basic_queries(self):
        self.assertEqual(Y3.sinks(), [2])
        self.assertEqual(Y3.sources(), [0, 1])
        self.assertEqual(Y3.opposite().sinks(), [0, 1])
        self.assertEqual(Y3.index('3'), 2)
        self.assertEqual(Y3.index(1), 0)

    def test_paths(self):
        self.assertEqual(len(A3_LINEAR.paths), 6)
        self.assertEqual(A3_LINEAR.path_count(0, 2), 1)
        self.assertEqual(KRONECKER.path_count(0, 1), 2)

    def test_acyclic(self):
        self.assertTrue(Y3.is_acyclic)
        self.assertFalse(CYCLE3.is_acyclic)
        with self.assertRaises(ValidationError) as ctx:
            CYCLE3.paths
        self.assertEqual(ctx.exception.code, 'cyclic')

    def test_invalid(self):
        with self.assertRaises(ValidationError) as ctx:
            Quiver(('1', '1'), ())
        self.assertEqual(ctx.exception.code, 'vertex')
        with self.assertRaises(ValidationError) as ctx:
            Quiver.from_arrows(2, [(2, 2)])
        self.assertEqual(ctx.exception.code, 'loop')
        with self.assertRaises(ValidationError) as ctx:
            Y3.index('7')
        self.assertEqual(ctx.exception.code, 'vertex')

    def test_exchange_matrix(self):
        b = ExchangeMatrix.from_quiver(KRONECKER)
        self.assertEqual(b.b, ((0, 2), (-2, 0)))
        self.assertEqual(b.to_quiver().arrows, ((0, 1), (0, 1)))
        with self.assertRaises(ValueError):
            ExchangeMatrix(((0, 1), (1, 0)))


class ParsingTests(SimpleTestCase):

    def test_text(self):
        q = parse_quiver("# Y3\nvertices 3\narrow 1 3  # first\n\narrow 2 3\n")
        self.assertEqual(q, Y3)

    def test_json(self):
        self.assertEqual(parse_quiver('{"vertices": 2, "arrows": [[1, 2], [1, 2]]}'), KRONECKER)
        self.assertEqual(quiver_to_json(A2), {'vertices': ['1', '2'], 'arrows': [['1', '2']]})

    def assertParseError(self, text, code='parse', line=None):
        with self.assertRaises(ValidationError) as ctx:
            parse_quiver(text)
        self.assertEqual(ctx.exception.code, code)
        if line is not None:
            self.assertEqual(ctx.exception.params['line'], line)

    def test_errors(self):
        self.assertParseError("arrow 1 2\n", line=1)
        self.assertParseError("vertices 2\nedge 1 2\n", line=2)
        self.assertParseError("vertices 2\narrow 1 3\n", line=2)
        self.assertParseError("vertices 2\narrow 1\n", line=2)
        self.assertParseError("vertices 2\nvertices 3\n", line=2)
        self.assertParseError("# nothing\n")
        self.assertParseError('{"vertices": 2, "arrows": [[1]]}')
        self.assertParseError('{"arrows": []}')

    def test_non_ascii_digits(self):
        self.assertParseError("vertices \u00b2\n", line=1)
        self.assertParseError("vertices 2\narrow 1 \u0662\n", line=2)
        self.assertParseError('{"vertices": true, "arrows": []}')

    def test_invalid_utf8_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.quiver'
            path.write_bytes(b'vertices 2\narrow 1 \xff\n')
            with self.assertRaises(ValidationError) as ctx:
                load_quiver(path)
        self.assertEqual(ctx.exception.code, 'parse')

    def test_loop(self):
        self.assertParseError("vertices 2\narrow 2 2\n", code='loop', line=2)


class DynkinTests(SimpleTestCase):

    def test_types(self):
        self.assertEqual(str(dynkin_type(A2)), 'A2')
        self.assertEqual(str(dynkin_type(Y3)), 'A3')
        self.assertEqual(str(dynkin_type(D4)), 'D4')
        self.assertEqual(str(dynkin_type(E6)), 'E6')
        self.assertEqual(str(dynkin_type(KRONECKER)), 'non-Dynkin')
        self.assertEqual(str(dynkin_type(Quiver.from_arrows(3, [(1, 2), (2, 3), (1, 3)]))), 'non-Dynkin')

    def test_positive_roots(self):
        self.assertEqual(positive_root_count(E2), 10)
        self.assertEqual(positive_root_count(D4), 12)
        self.assertEqual(positive_root_count(E6), 36)
        self.assertEqual(positive_root_count(Quiver.from_arrows(3, [(1, 2)])), 4)

    def test_disconnected(self):
        with self.assertRaises(ValidationError) as ctx:
            dynkin_type(Quiver.from_arrows(2, []))
        self.assertEqual(ctx.exception.code, 'disconnected')

    def test_refused(self):
        with self.assertRaises(ValidationError) as ctx:
            require_dynkin(KRONECKER)
        self.assertEqual(ctx.exception.code, 'refused')


class MutationTests(SimpleTestCase):

    def test_mutation_is_an_involution(self):
        b = ExchangeMatrix.from_quiver(CYCLE3)
        for k in range(1, 4):
            self.assertEqual(mutate(mutate(b, k), k), b)

    def test_cycle_mutates_to_line(self):
        mutated = mutate(ExchangeMatrix.from_quiver(CYCLE3), 2)
        self.assertEqual(canonical_form(mutated), canonical_form(ExchangeMatrix.from_quiver(A3_LINEAR)))

    def test_kronecker(self):
        b = ExchangeMatrix.from_quiver(KRONECKER)
        self.assertEqual(mutate(b, 1).b, ((0, -2), (2, 0)))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            mutate(ExchangeMatrix.from_quiver(A2), 3)

    def test_class_sizes(self):
        self.assertEqual(len(mutation_class(A2)), 1)
        self.assertEqual(len(mutation_class(A3_LINEAR)), 4)
        self.assertEqual(mutation_class(Y3), mutation_class(CYCLE3))

    def test_membership(self):
        self.assertTrue(in_mutation_class(CYCLE3, Y3))
        self.assertFalse(in_mutation_class(A2, Y3))
        self.assertFalse(in_mutation_class(Quiver.from_arrows(3, [(1, 2)]), Y3))

    @override_settings(MAX_MUTATION_CLASS=2)
    def test_cap(self):
        with self.assertRaises(ValidationError) as ctx:
            mutation_class(A3_LINEAR)
        self.assertEqual(ctx.exception.code, 'refused')


class DotTests(SimpleTestCase):

    def test_dot(self):
        self.assertEqual(to_dot(A2), 'digraph {\n  "1";\n  "2";\n  "1" -> "2";\n}\n')
        self.assertIn('"3\'" -> "1";', to_dot(Quiver(("1", "3'"), ((1, 0),)), name='Gamma'))
