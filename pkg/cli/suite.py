"""
The verification suite behind ``fdcluster verify``.

Each check is a function of (H, field) returning its counterexamples. A check
passes when it returns none; enumeration-dependent checks are skipped for
non-Dynkin quivers, and a domain error is reported as a failure with its message.
"""
import logging
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

from artheory import checks as ar_checks
from ctquiver import checks as ct_checks
from quiver.dynkin import dynkin_components
from tilting import checks as tilting_checks
from triplecat.algebras import gamma_of, lambda_of

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'
NON_DYNKIN_SKIP = 'non-Dynkin: skipped'


@dataclass(frozen=True)
class Check:
    label: str
    name: str
    run: object
    needs_enumeration: bool = True


@dataclass
class CheckResult:
    label: str
    name: str
    status: str
    detail: str = ''
    failures: list = field(default_factory=list)

    def to_json(self):
        data = {'label': self.label, 'check': self.name, 'status': self.status}
        if self.detail:
            data['detail'] = self.detail
        if self.failures:
            data['counterexamples'] = self.failures
        return data


CHECKS = (
    Check('lambda.pd-one', "Lambda: pd X <= 1 exactly when tau X lies in mod H",
          ar_checks.pd_one_iff_translate_in_mod_h),
    Check('lambda.predecessors', "Lambda: a module mapping to a pd-one module has pd <= 1",
          lambda h, f: ar_checks.maps_into_pd_one_lower_pd(lambda_of(h), f)),
    Check('lambda.left-part', "Lambda: the left part has pd <= 1 and contains the fundamental domain",
          ar_checks.left_part_has_pd_one),
    Check('lambda.shifted-injective', "Lambda: tau^-1 of an injective H-module is (soc P, I_1(P), pi)",
          ar_checks.translate_of_dual_projective),
    Check('lambda.cover', "Lambda: I_0(H) is the projective cover of tau^-1 DH",
          ar_checks.envelope_of_h_covers_shifted_injectives),
    Check('lambda.mesh', "Lambda: mesh relations", lambda h, f: ar_checks.mesh_relations(lambda_of(h), f)),
    Check('gldim', "global dimension: Gamma <= 2, Lambda <= 3, Lambda by the tau^2 trichotomy",
          ar_checks.global_dimension_bounds, needs_enumeration=False),
    Check('gamma.pd-one', "Gamma: pd <= 1 is the fundamental domain plus add I_0(Delta), closed under predecessors",
          ar_checks.gamma_pd_one_is_domain_plus_proj_inj),
    Check('gamma.torsion', "Gamma: pd <= 2 and no pd-two predecessor of a pd <= 1 module",
          ar_checks.gamma_split_torsion),
    Check('gamma.predecessors', "Gamma: a module mapping to a pd-one module has pd <= 1",
          lambda h, f: ar_checks.maps_into_pd_one_lower_pd(gamma_of(h), f)),
    Check('gamma.mesh', "Gamma: mesh relations", lambda h, f: ar_checks.mesh_relations(gamma_of(h), f)),
    Check('gamma.inside-lambda',
          "Gamma: mod Gamma is the full subcategory of mod Lambda supported away from the primed non-sinks",
          ar_checks.gamma_inside_lambda),
    Check('domain', "Gamma and Lambda carry the same fundamental domain", ar_checks.fundamental_domains_agree),
    Check('tilting.search', "tilting: clique search equals exhaustive search",
          tilting_checks.clique_search_is_complete),
    Check('tilting.theta', "tilting: theta is a bijection onto Ext-orthogonal objects of C_H",
          tilting_checks.theta_is_bijective),
    Check('tilting.exchange', "tilting: the exchange graph from H reaches every cluster-tilting object",
          tilting_checks.exchange_graph_is_connected),
    Check('tilting.lambda', "tilting: Gamma and Lambda tilting modules correspond",
          tilting_checks.lambda_correspondence_round_trip),
    Check('tilting.complements', "tilting: every almost complete object has exactly two complements",
          tilting_checks.two_complements),
    Check('ct.gldim', "ct-quiver: gldim End(T) <= 2 for every tilting Gamma-module",
          ct_checks.tilting_endomorphisms_have_gldim_two),
    Check('ct.stable-hom', "ct-quiver: stable Hom in mod Gamma equals Hom in the derived category",
          ct_checks.stable_hom_matches_derived),
    Check('ct.tops', "ct-quiver: arrow counts equal the tops of the Hom_C tables",
          ct_checks.arrows_match_cluster_hom),
    Check('ct.hereditary', "ct-quiver: module-only objects agree with End_H(T) plus reversed relations",
          ct_checks.module_objects_match_hereditary),
    Check('ct.mutation', "ct-quiver: every quiver lies in the mutation class of Q", ct_checks.quivers_in_mutation_class),
)


@dataclass
class Report:
    quiver: object
    results: list

    @property
    def ok(self):
        return all(r.status != FAIL for r in self.results)

    def counts(self):
        return {status: sum(r.status == status for r in self.results) for status in (PASS, FAIL, SKIPPED)}

    def to_json(self):
        return {'quiver': str(self.quiver), 'ok': self.ok, 'counts': self.counts(),
                'checks': [r.to_json() for r in self.results]}

    def lines(self):
        for r in self.results:
            yield f"[{r.status}] {r.label}: {r.name}" + (f" ({r.detail})" if r.detail else '')
            for failure in r.failures:
                yield f"    {failure}"
        counts = self.counts()
        yield f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped"


def run_check(check, h, field, dynkin=True):
    if check.needs_enumeration and not dynkin:
        return CheckResult(check.label, check.name, SKIPPED, NON_DYNKIN_SKIP)
    try:
        failures = check.run(h, field)
    except ValidationError as exc:
        if exc.code == 'refused':
            return CheckResult(check.label, check.name, SKIPPED, NON_DYNKIN_SKIP)
        logger.warning("Check %r raised %s", check.name, exc)
        return CheckResult(check.label, check.name, FAIL, exc.code or 'error',
                           [{'message': ' '.join(exc.messages)}])
    if failures:
        logger.warning("Check %r found %d counterexamples", check.name, len(failures))
        return CheckResult(check.label, check.name, FAIL, failures=list(failures))
    return CheckResult(check.label, check.name, PASS)


def verify_all(h, field, checks=CHECKS):
    dynkin = all(t.is_dynkin for t in dynkin_components(h))
    results = [run_check(check, h, field, dynkin) for check in checks]
    report = Report(h, results)
    logger.info("Verification of %s: %s", h, report.counts())
    return report
