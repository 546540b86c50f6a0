import json

from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.core.management.base import BaseCommand, CommandError

from artheory.enumeration import fundamental_domain, indecomposables
from artheory.homological import gabriel_quiver, gldim, lambda_trichotomy
from cli.suite import verify_all
from ctquiver.construct import cluster_tilted_quiver, verify_mutation_class
from exactlin import linalg as la
from quiver.dot import to_dot
from quiver.dynkin import dynkin_components, positive_root_count
from quiver.parsing import load_quiver, quiver_to_json
from tilting.correspondence import cluster_tilting_objects
from tilting.enumeration import tilting_modules
from tilting.models import ClusterTiltObj
from triplecat.algebras import GAMMA, LAMBDA, gamma_of, lambda_of
from triplecat.construct import ALGEBRA_KINDS, instance

VERBS = ('info', 'gamma', 'lambda', 'ar', 'fd', 'tilting', 'cluster-tilting', 'ct-quiver', 'gldim', 'verify')

EXIT_CODES = {
    'refused': 1,
    'parse': 2,
    'loop': 2,
    'vertex': 2,
    'cyclic': 2,
    'disconnected': 2,
    'mixed': 2,
    'config': 2,
    'decomposable': 3,
    'inconsistent': 3,
}


class Command(BaseCommand):
    help = "Fundamental domains of cluster categories: Gamma, Lambda, AR quivers, tilting and cluster-tilted quivers."

    def add_arguments(self, parser):
        parser.add_argument('verb', choices=VERBS)
        parser.add_argument('quiver', help="Quiver file (text or JSON)")
        parser.add_argument('--algebra', choices=ALGEBRA_KINDS, default=None,
                            help="H, Gamma or Lambda (default depends on the verb)")
        parser.add_argument('--object', default='',
                            help="Comma-separated fundamental-domain labels, as printed by cluster-tilting")
        parser.add_argument('--verify', action='store_true', help="Check the ct-quiver against the mutation class")
        parser.add_argument('--json', action='store_true', help="Machine-readable output and diagnostics")
        parser.add_argument('--dot', action='store_true', help="Graphviz output")
        parser.add_argument('--field', type=int, default=None, help="Prime of the ground field")

    def handle(self, *args, **options):
        self.as_json = options['json']
        try:
            field = la.prime_field(options['field'])
            h = load_quiver(options['quiver'])
            handler = getattr(self, 'do_' + options['verb'].replace('-', '_'))
            return handler(h, field, options)
        except ValidationError as exc:
            self.fail(exc.code or 'inconsistent', ' '.join(exc.messages))
        except ImproperlyConfigured as exc:
            self.fail('config', str(exc))

    def fail(self, code, message, exit_code=None):
        exit_code = exit_code if exit_code is not None else EXIT_CODES.get(code, 3)
        if self.as_json:
            self.stderr.write(json.dumps({'error': code, 'message': message, 'exit': exit_code}))
        raise CommandError(message, returncode=exit_code)

    def emit(self, data, text):
        if self.as_json:
            self.stdout.write(json.dumps(data, indent=2))
        else:
            self.stdout.write(text.rstrip('\n'))

    # ------------------------------------------------------------------------
    # verbs
    # ------------------------------------------------------------------------

    def do_info(self, h, field, options):
        components = dynkin_components(h)
        data = {
            'quiver': quiver_to_json(h),
            'type': ' + '.join(str(t) for t in components),
            'dynkin': all(t.is_dynkin for t in components),
            'sinks': [h.labels[s] for s in h.sinks()],
        }
        if data['dynkin']:
            data['counts'] = {
                'ind H': positive_root_count(h),
                'ind Gamma': len(indecomposables(gamma_of(h), field)),
                'ind Lambda': len(indecomposables(lambda_of(h), field)),
                'fundamental domain': len(fundamental_domain(gamma_of(h), field)),
                'cluster-tilting objects': len(cluster_tilting_objects(h, field)),
            }
        lines = [f"type: {data['type']}", f"vertices: {h.n}", f"arrows: {len(h.arrows)}"]
        lines += [f"{name}: {count}" for name, count in data.get('counts', {}).items()]
        self.emit(data, '\n'.join(lines))

    def _algebra_summary(self, alg, field, options):
        gq = gabriel_quiver(alg, field)
        if options['dot']:
            self.stdout.write(to_dot(gq.quiver, repr(alg)).rstrip('\n'))
            return
        data = dict(gq.to_json(), dimension=len(alg.elements), gldim=gldim(alg, field))
        lines = [f"{alg!r}: dimension {data['dimension']}, gldim {data['gldim']}"]
        lines += [f"{s} -> {t}" for s, t in data['arrows']]
        lines += [f"relations {s} ~> {t}: {c}" for s, t, c in data['relations']]
        self.emit(data, '\n'.join(lines))

    def do_gamma(self, h, field, options):
        self._algebra_summary(gamma_of(h), field, options)

    def do_lambda(self, h, field, options):
        self._algebra_summary(lambda_of(h), field, options)

    def do_ar(self, h, field, options):
        alg = instance(options['algebra'] or GAMMA, h)
        ar = indecomposables(alg, field)
        flagged = fundamental_domain(alg, field).nodes if hasattr(alg, 'plain') else []
        if options['dot']:
            self.stdout.write(ar.to_dot(flagged).rstrip('\n'))
            return
        data = dict(ar.to_json(), fundamental_domain=list(flagged))
        lines = []
        for node in ar.nodes:
            after = ar.tau_inv(node.index)
            marks = ('*' if node.index in flagged else '') + ('P' if ar.is_projective(node.index) else '') \
                + ('I' if ar.is_injective(node.index) else '')
            lines.append(f"{node.index:3d} {node.label:12s} {list(node.dims)} {marks}".rstrip()
                         + (f" tau^-1 -> {ar.nodes[after].label}" if after is not None else ''))
        self.emit(data, '\n'.join(lines))

    def do_fd(self, h, field, options):
        alg = instance(options['algebra'] or GAMMA, h)
        fd = fundamental_domain(alg, field)
        data = fd.to_json()
        lines = [f"{k:3d} {o['label']:12s} {o['dims']} {o['kind']}" for k, o in enumerate(data)]
        self.emit(data, '\n'.join(lines))

    def do_tilting(self, h, field, options):
        found = tilting_modules(instance(options['algebra'] or GAMMA, h), field)
        self.emit([s.labels() for s in found], '\n'.join(','.join(s.labels()) for s in found))

    def do_cluster_tilting(self, h, field, options):
        found = cluster_tilting_objects(h, field)
        self.emit([t.labels() for t in found], '\n'.join(','.join(t.labels()) for t in found))

    def _cluster_tilting_object(self, h, field, text):
        labels = [label.strip() for label in text.split(',') if label.strip()]
        if not labels:
            raise ValidationError("--object needs comma-separated summand labels", code='vertex')
        fd = fundamental_domain(gamma_of(h), field)
        t = ClusterTiltObj(fd, [fd.by_label(label) for label in labels])
        if t not in cluster_tilting_objects(h, field):
            raise ValidationError("%(obj)s is not a cluster-tilting object", code='vertex',
                                  params={'obj': ','.join(labels)})
        return t

    def do_ct_quiver(self, h, field, options):
        t = self._cluster_tilting_object(h, field, options['object'])
        qc = cluster_tilted_quiver(t)
        if options['verify'] and not verify_mutation_class(qc, h):
            raise ValidationError("Quiver of %(obj)s is not in the mutation class of %(q)s", code='inconsistent',
                                  params={'obj': ','.join(t.labels()), 'q': h})
        if options['dot']:
            self.stdout.write(qc.to_dot().rstrip('\n'))
            return
        data = qc.to_json()
        if options['verify']:
            data['mutation_class'] = True
        lines = [f"{s} -> {t}" for s, t in data['arrows']]
        lines += [f"relation {s} ~> {t}: {c}" for s, t, c in data['relations']]
        if options['verify']:
            lines.append("mutation class: ok")
        self.emit(data, '\n'.join(lines))

    def do_gldim(self, h, field, options):
        kind = options['algebra'] or LAMBDA
        value = gldim(instance(kind, h), field)
        data = {'algebra': kind, 'gldim': value}
        if kind == LAMBDA:
            expected = lambda_trichotomy(h, field)
            if expected != value:
                raise ValidationError("gldim Lambda is %(value)s but tau^2 predicts %(expected)s",
                                      code='inconsistent', params={'value': value, 'expected': expected})
        self.emit(data, str(value))

    def do_verify(self, h, field, options):
        report = verify_all(h, field)
        self.emit(report.to_json(), '\n'.join(report.lines()))
        if not report.ok:
            self.fail('inconsistent', f"{report.counts()['fail']} checks failed")
