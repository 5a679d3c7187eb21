from heatengine.checks import BaseCheck, CheckResult, CheckContext, discoverChecks, collectChecksFromModule
from heatengine.checks.modules import figureChecks, ledgerChecks, pathChecks, statmechChecks
from heatengine.checks.modules.__registry__ import CHECKS
from heatengine.cli.validate import selectChecks, runChecks
from heatengine.config import ConfigController
from heatengine.errors import SpecError, DomainError

from types import ModuleType
from dataclasses import replace

import pytest

CHECK_IDS = [
    "carnot-figure-values",
    "carnot-figure-monotone",
    "otto-positivity-window",
    "otto-printed-form",
    "carnot-efficiency",
    "otto-efficiency",
    "gup-work-invariance",
    "gup-deficit-sign",
    "first-order-consistency",
    "cycle-ledger-oracle",
    "path-oracle-isothermal",
    "path-oracle-isochoric",
    "heat-quadrature",
    "path-oracle-order",
    "adiabatic-heat-vanishing",
    "euler-maclaurin-offset",
    "closed-form-validity",
    "closed-form-breakdown",
    "fourth-moment",
    "gup-partition-shift",
    "gup-entropy-width",
]

@pytest.fixture(scope="module")
def context() -> CheckContext:
    return CheckContext.fromConfig(ConfigController())

@pytest.fixture(scope="module")
def checks() -> dict[str, BaseCheck]:
    return {check.id: check for check in discoverChecks()}

def test_discovery_finds_every_check_in_module_order():
    assert [check.id for check in discoverChecks()] == CHECK_IDS

def test_registry_matches_discovery():
    assert sorted(check.id for check in CHECKS) == sorted(CHECK_IDS)

def test_every_module_exports_checks():
    for module in (figureChecks, ledgerChecks, pathChecks, statmechChecks):
        collected = collectChecksFromModule(module)

        assert collected
        assert all(isinstance(check, BaseCheck) for check in collected)

def test_collect_skips_foreign_objects(caplog):
    module = ModuleType("fake")
    module.CHECKS = [object(), figureChecks.CarnotMonotoneCheck()]

    collected = collectChecksFromModule(module)

    assert [check.id for check in collected] == ["carnot-figure-monotone"]
    assert "not an instance of BaseCheck" in caplog.text
    assert collectChecksFromModule(ModuleType("empty")) == []

def test_context_from_packaged_defaults(context):
    assert context.betaGamma == 1e-4
    assert context.steps == 10_000
    assert context.deltaMax == 1e-3
    assert context.fig5 == (0.205, 0.245, 41)

def test_context_streams_are_per_check(context):
    first = context.rng("fourth-moment").random(4)
    again = context.rng("fourth-moment").random(4)
    other = context.rng("gup-deficit-sign").random(4)

    assert (first == again).all()
    assert not (first == other).all()

@pytest.mark.parametrize("checkId", CHECK_IDS)
def test_check_passes_with_defaults(checkId, checks, context):
    result = checks[checkId].run(context)

    assert isinstance(result, CheckResult)
    assert result.checkId == checkId
    assert result.passed, result.detail
    assert result.status == "pass"

def test_closed_form_validity_outside_trusted_regime(checks, context):
    check = checks["closed-form-validity"]

    # marginal states are reported without a verdict
    marginal = check.run(replace(context, betaGamma=0.01))
    assert marginal.passed and marginal.tolerance is None

    invalid = check.run(replace(context, betaGamma=5.0))
    assert invalid.passed and invalid.tolerance == 0.1

def test_select_checks(checks):
    everything = list(checks.values())

    assert selectChecks(everything, None) == everything
    assert [check.id for check in selectChecks(everything, ["fourth-moment"])] == ["fourth-moment"]

    with pytest.raises(SpecError):
        selectChecks(everything, ["fourth-moment", "nope"])

class FailingCheck(BaseCheck):
    id = "always-fails"
    name = "raises a library error"

    def run(self, context):
        raise DomainError("broken on purpose")

class SkippedCheck(BaseCheck):
    id = "never-runs"

    def canRun(self, context):
        return False

def test_run_checks_contains_library_errors(context, caplog):
    results = runChecks([FailingCheck(), SkippedCheck()], context)

    assert len(results) == 1
    assert results[0].status == "fail"
    assert "DomainError" in results[0].detail
    assert "always-fails failed" in caplog.text

class CrashingCheck(BaseCheck):
    id = "always-crashes"
    name = "raises an error from outside the library"

    def run(self, context):
        raise AttributeError("no such field")

def test_run_checks_survives_unexpected_errors(context, caplog):
    results = runChecks([CrashingCheck(), statmechChecks.GupEntropyWidthCheck()], context)

    assert [result.checkId for result in results] == ["always-crashes", "gup-entropy-width"]
    assert results[0].status == "fail"
    assert "AttributeError" in results[0].detail
    assert results[1].passed
    assert "always-crashes crashed" in caplog.text

def test_cycle_oracle_check_catches_a_ledger_regression(checks, context, monkeypatch):
    honest = ledgerChecks.carnotLedger

    def drifted(spec, deltaMax):
        ledger = honest(spec, deltaMax)
        return replace(ledger, etaG=ledger.etaG + 1e-6)

    monkeypatch.setattr(ledgerChecks, "carnotLedger", drifted)
    result = checks["cycle-ledger-oracle"].run(context)

    assert not result.passed
    assert result.measured == pytest.approx(1e-6, rel=1e-2)

def test_result_helpers():
    check = FailingCheck()

    assert check.below(1e-3, 1e-3).passed
    assert not check.above(0.1, 0.1).passed
    assert check.above(0.2, 0.1).status == "pass"
