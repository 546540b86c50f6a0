import json
import tempfile
from collections import Counter
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from artheory.enumeration import fundamental_domain, indecomposables
from exactlin import linalg as la
from quiver.parsing import load_quiver
from triplecat.algebras import gamma_of

from .suite import CHECKS, FAIL, NON_DYNKIN_SKIP, PASS, SKIPPED, Check, verify_all

FIXTURES = Path(__file__).resolve().parent / 'fixtures'


def fixture(name):
    return str(FIXTURES / name)


def run(*args, **options):
    out = StringIO()
    call_command('fdcluster', *args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


class CommandTests(SimpleTestCase):

    def assertExit(self, code, exit_code, *args, **options):
        err = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('fdcluster', *args, stdout=StringIO(), stderr=err, json=True, **options)
        self.assertEqual(ctx.exception.returncode, exit_code)
        diagnostic = json.loads(err.getvalue())
        self.assertEqual(diagnostic['error'], code)
        self.assertEqual(diagnostic['exit'], exit_code)

    def test_fd(self):
        data = json.loads(run('fd', fixture('a2.quiver'), json=True))
        self.assertEqual([o['label'] for o in data], ['2', '1/2', '1', "2'/1", "2'"])
        self.assertEqual([o['kind'] for o in data].count('shift'), 2)

    def test_fd_text(self):
        self.assertEqual(len(run('fd', fixture('y3.quiver')).splitlines()), 9)

    def test_info(self):
        data = json.loads(run('info', fixture('a2.quiver'), json=True))
        self.assertEqual(data['type'], 'A2')
        self.assertEqual(data['counts']['ind H'], 3)
        self.assertEqual(data['counts']['ind Gamma'], 6)
        self.assertEqual(data['counts']['fundamental domain'], 5)
        self.assertEqual(data['counts']['cluster-tilting objects'], 5)

    def test_info_non_dynkin(self):
        data = json.loads(run('info', fixture('kronecker.quiver'), json=True))
        self.assertFalse(data['dynkin'])
        self.assertNotIn('counts', data)

    def test_gamma(self):
        data = json.loads(run('gamma', fixture('a2.quiver'), json=True))
        self.assertEqual(data['arrows'], [['1', '2'], ["2'", '1']])
        self.assertEqual(data['relations'], [])
        self.assertEqual(data['dimension'], 6)
        self.assertEqual(data['gldim'], 1)

    def test_ar(self):
        data = json.loads(run('ar', fixture('a2.quiver'), json=True))
        self.assertEqual(len(data['nodes']), 6)
        self.assertEqual(len(data['fundamental_domain']), 5)
        dot = run('ar', fixture('y3.quiver'), dot=True)
        self.assertTrue(dot.startswith('digraph'))
        self.assertIn('style=dashed', dot)
        self.assertIn('style=filled', dot)

    def test_ar_of_h(self):
        data = json.loads(run('ar', fixture('y3.quiver'), algebra='H', json=True))
        self.assertEqual(len(data['nodes']), 6)
        self.assertEqual(data['fundamental_domain'], [])

    def test_tilting(self):
        data = json.loads(run('tilting', fixture('y3.quiver'), json=True))
        self.assertEqual(len(data), 14)
        self.assertTrue(all(len(s) == 4 and "3'/12/3" in s for s in data))

    def test_cluster_tilting(self):
        lines = run('cluster-tilting', fixture('a2.quiver')).splitlines()
        self.assertEqual(len(lines), 5)
        self.assertIn("2,2'", lines)

    def test_ct_quiver_three_cycle(self):
        dot = run('ct-quiver', fixture('y3.quiver'), object="2/3,2,3'/2", dot=True, verify=True)
        for edge in ('"2" -> "2/3";', '"3\'/2" -> "2";', '"2/3" -> "3\'/2";'):
            self.assertIn(edge, dot)
        self.assertEqual(dot.count('->'), 3)

    def test_ct_quiver_json(self):
        data = json.loads(run('ct-quiver', fixture('a2.quiver'), object="2,2'", json=True, verify=True))
        self.assertEqual(data['arrows'], [['2', "2'"]])
        self.assertTrue(data['mutation_class'])

    def test_gldim(self):
        self.assertEqual(run('gldim', fixture('a3linear.quiver'), algebra='Lambda').strip(), '3')
        self.assertEqual(run('gldim', fixture('y3.quiver')).strip(), '2')
        self.assertEqual(run('gldim', fixture('y3.quiver'), algebra='H').strip(), '1')

    def test_verify(self):
        data = json.loads(run('verify', fixture('a2.quiver'), json=True))
        self.assertTrue(data['ok'])
        self.assertEqual(data['counts'], {'pass': len(CHECKS), 'fail': 0, 'skipped': 0})

    def test_verify_over_small_fields(self):
        for name, p in (('y3.quiver', 2), ('y3.quiver', 3), ('a3linear.quiver', 2)):
            data = json.loads(run('verify', fixture(name), field=p, json=True))
            self.assertEqual(data['counts'], {'pass': len(CHECKS), 'fail': 0, 'skipped': 0}, (name, p))

    def test_output_is_deterministic(self):
        first = run('cluster-tilting', fixture('y3.quiver'), json=True)
        self.assertEqual(first, run('cluster-tilting', fixture('y3.quiver'), json=True))

    def test_missing_file(self):
        self.assertExit('parse', 2, 'info', fixture('missing.quiver'))

    def test_invalid_utf8(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.quiver'
            path.write_bytes(b'vertices 2\narrow 1 \xff\n')
            self.assertExit('parse', 2, 'info', str(path))

    def test_refused(self):
        self.assertExit('refused', 1, 'tilting', fixture('kronecker.quiver'))

    def test_unknown_label(self):
        self.assertExit('vertex', 2, 'ct-quiver', fixture('a2.quiver'), object='3')

    def test_not_cluster_tilting(self):
        self.assertExit('vertex', 2, 'ct-quiver', fixture('a2.quiver'), object='2,1')

    def test_bad_prime(self):
        self.assertExit('config', 2, 'fd', fixture('a2.quiver'), field=4)


class SuiteTests(SimpleTestCase):

    def test_y3_passes(self):
        report = verify_all(load_quiver(fixture('y3.quiver')), la.prime_field())
        self.assertTrue(report.ok)
        self.assertTrue(all(r.status == PASS for r in report.results))

    def test_non_dynkin_is_skipped(self):
        report = verify_all(load_quiver(fixture('kronecker.quiver')), la.prime_field())
        for check, result in zip(CHECKS, report.results):
            if check.needs_enumeration:
                self.assertEqual(result.status, SKIPPED)
                self.assertEqual(result.detail, NON_DYNKIN_SKIP)

    def test_failure_payload(self):
        def broken(h, field):
            return [{'node': 'X'}]

        check = Check('broken', "always fails", broken)
        report = verify_all(load_quiver(fixture('a1.quiver')), la.prime_field(), checks=(check,))
        self.assertFalse(report.ok)
        self.assertEqual(report.results[0].status, FAIL)
        data = report.to_json()['checks'][0]
        self.assertEqual(data['label'], 'broken')
        self.assertEqual(data['counterexamples'], [{'node': 'X'}])
        self.assertEqual(next(report.lines()), "[fail] broken: always fails")

    def test_labels_are_unique(self):
        self.assertEqual(len({check.label for check in CHECKS}), len(CHECKS))


class FixtureTests(SimpleTestCase):

    def test_e2_gamma_nodes(self):
        expected = json.loads((FIXTURES / 'e2_gamma_nodes.json').read_text())
        gamma = gamma_of(load_quiver(fixture(expected['quiver'])))
        self.assertEqual(list(gamma.vertices), expected['vertices'])
        ar = indecomposables(gamma)
        self.assertEqual(Counter(tuple(n.dims) for n in ar.nodes), Counter(tuple(d) for d in expected['dims']))
        self.assertEqual(len(fundamental_domain(gamma)), 10 + 4)
