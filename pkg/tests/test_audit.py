import json
from fractions import Fraction

import pytest

from qumbral.audit import DEFAULT_Q_GRID, REGISTRY, RunConfig, run_audit
from qumbral.cli import verdict_json
from qumbral.formatting import parse_rational
from qumbral.verdict import FALSIFIED, VARIANT_RESOLVED, VERIFIED

V, F = VERIFIED, FALSIFIED

# Every statement family that must have an audit entry, grouped by topic.
COVERAGE = {
    "q-calculus basics": ["q-binomial-formula", "q-exp-fixed-point", "q-derivative-quotient", "jackson-ftc"],
    "appell families": ["appell-gf", "appell-derivative"],
    "functionals and operators": [
        "eq-particular", "evaluation-functional", "expansion-functional", "expansion-polynomial",
        "adjoint", "t-power-action", "pairing-convolution", "pairing-multinomial",
        "operator-derivative", "derivative-at-zero",
    ],
    "appell theorems": [
        "sheffer-orthonormality", "expansion-theorem-functional", "expansion-theorem-polynomial",
        "appell-equivalent-c", "appell-equivalent-d", "appell-equivalent-e", "recurrence",
    ],
    "genocchi": [
        "genocchi-delta", "genocchi-derivative", "genocchi-convolution",
        "genocchi-operator-form", "genocchi-shift-recurrence", "genocchi-number-recurrence",
        "genint-closed-form", "genocchi-integral-convolution", "genocchi-integral-identity",
        "genocchi-integral-expansion", "xm1-pairing", "xm1-genocchi-expansion",
        "xm1-genocchi-closed-form", "xm1-monomial-expansion", "coefficient-theorem",
    ],
    "higher order": [
        "genocchi-order-multinomial", "genocchi-order-delta", "genocchi-order-reduction",
        "order-m-pairing-expansion", "genocchi-order-m-closed-form", "appell-order-m-closed-form",
    ],
}

EXPECTED = {
    'q-binomial-formula': {None: V},
    'q-exp-fixed-point': {None: V},
    'q-derivative-quotient': {None: V},
    'jackson-ftc': {None: V},
    'appell-gf': {'bernoulli': V, 'euler': V, 'genocchi': V, 'genocchi^2': V, 'genocchi^3': V},
    'appell-derivative': {'bernoulli': V, 'euler': V, 'genocchi': V, 'genocchi^2': V, 'genocchi^3': V},
    'eq-particular': {None: V},
    'evaluation-functional': {None: V},
    'expansion-functional': {None: V},
    'expansion-polynomial': {None: V},
    'adjoint': {'power-series': V, 'laurent-inner': V, 'laurent-outer': F},
    't-power-action': {'printed': F, 'corrected': V},
    'pairing-convolution': {None: V},
    'pairing-multinomial': {None: V},
    'operator-derivative': {None: V},
    'derivative-at-zero': {None: V},
    'sheffer-orthonormality': {'bernoulli': V, 'euler': V, 'genocchi': F},
    'expansion-theorem-functional': {'bernoulli': V, 'euler': V, 'genocchi': V},
    'expansion-theorem-polynomial': {'bernoulli': V, 'euler': V, 'genocchi': F},
    'appell-equivalent-c': {'bernoulli': V, 'euler': V, 'genocchi': V, 'genocchi^2': V, 'genocchi^3': V},
    'appell-equivalent-d': {'bernoulli': V, 'euler': V, 'genocchi': V, 'genocchi^2': V, 'genocchi^3': V},
    'appell-equivalent-e': {'bernoulli': V, 'euler': V, 'genocchi': V, 'genocchi^2': V, 'genocchi^3': V},
    'recurrence': {'statement': F, 'proof': F, 'corrected': V},
    'genocchi-delta': {'all-indices': F, 'positive-indices': V},
    'genocchi-derivative': {None: V},
    'genocchi-convolution': {None: V},
    'genocchi-operator-form': {None: V},
    'genocchi-shift-recurrence': {None: F},
    'genocchi-number-recurrence': {'g0-claim': F, 'printed': F},
    'genint-closed-form': {'printed': F, 'without-p0': V},
    'genocchi-integral-convolution': {None: V},
    'genocchi-integral-identity': {None: F},
    'genocchi-integral-expansion': {'printed': F, 'without-p0': F},
    'xm1-pairing': {None: V},
    'xm1-genocchi-expansion': {'printed': F, 'corrected': V},
    'xm1-genocchi-closed-form': {'printed': F, 'l-denominator': F},
    'xm1-monomial-expansion': {'printed': F, 'with-q-binomial': F, 'from-binomial-formula': V},
    'coefficient-theorem': {'printed': F, 'functional': F, 'corrected': V},
    'genocchi-order-multinomial': {None: V},
    'genocchi-order-delta': {'all-indices': F, 'indices-at-least-m': V},
    'genocchi-order-reduction': {'printed': F, 'corrected': V},
    'order-m-pairing-expansion': {'printed-range': F, 'shifted-range': V},
    'genocchi-order-m-closed-form': {'printed': F, 'binomial': F},
    'appell-order-m-closed-form': {'printed': F, 'binomial': F},
}


@pytest.fixture(scope="module")
def default_run():
    return run_audit(RunConfig())


def test_registry_covers_every_statement():
    listed = [i for ids in COVERAGE.values() for i in ids]
    assert len(listed) == len(set(listed))
    assert set(listed) == set(REGISTRY)


def test_default_verdicts(default_run):
    got = {v.identity: {r.variant: r.status for r in v.variants} for v in default_run}
    assert got == EXPECTED


def test_every_falsified_variant_has_counterexample(default_run):
    for v in default_run:
        for r in v.variants:
            assert (r.counterexample is None) == (r.status == VERIFIED), (v.identity, r.variant)
            assert r.cells > 0


def test_overall_status(default_run):
    by_id = {v.identity: v for v in default_run}
    assert by_id["eq-particular"].status == VERIFIED
    assert by_id["genint-closed-form"].status == VARIANT_RESOLVED
    assert by_id["genint-closed-form"].resolved_variant == "without-p0"
    assert by_id["genocchi-order-m-closed-form"].status == FALSIFIED


def test_grid_includes_classical_limit(default_run):
    qs = {q for v in default_run for q, _, _ in v.grid}
    assert qs == set(DEFAULT_Q_GRID) | {Fraction(1)}


def test_instability_is_visible(default_run):
    rec = next(v for v in default_run if v.identity == "recurrence")
    statement = rec.variant("statement")
    assert not statement.stable
    assert statement.status_at(1) == VERIFIED
    assert all(statement.status_at(q) == FALSIFIED for q in DEFAULT_Q_GRID)


def test_deterministic_and_parallel_identical():
    cfg = RunConfig(nmax=5, mmax=2)
    first = [verdict_json(v) for v in run_audit(cfg)]
    again = [verdict_json(v) for v in run_audit(cfg)]
    threaded = [verdict_json(v) for v in run_audit(cfg, jobs=4)]
    assert json.dumps(first) == json.dumps(again) == json.dumps(threaded)


def test_json_rationals_round_trip(default_run):
    for v in default_run:
        for rec in verdict_json(v)["variants"]:
            for q, _, _ in rec["grid"]:
                assert str(parse_rational(q)) == q
            c = rec["counterexample"]
            if c is not None:
                assert str(parse_rational(c["q"])) == c["q"]


def test_run_config_validation():
    assert RunConfig().truncation == 17
    with pytest.raises(ValueError):
        RunConfig(q_grid=(Fraction(3, 2),))
    with pytest.raises(ValueError):
        RunConfig(mmax=0)
    with pytest.raises(ValueError):
        RunConfig(format="xml")
    assert RunConfig(q_grid=(Fraction(1, 2),), include_classical=False).q_values == (Fraction(1, 2),)


def test_unknown_identity():
    with pytest.raises(KeyError):
        run_audit(RunConfig(), ["no-such-identity"])
