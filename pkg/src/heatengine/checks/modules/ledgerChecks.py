from ..context import CheckContext
from ..base import BaseCheck, CheckResult

from ...cycles.specs import CarnotSpec, OttoSpec
from ...cycles.carnot import carnotBuild, carnotLedger
from ...cycles.otto import ottoBuild, ottoLedger
from ...cycles.oracle import cycleLedgerOracle
from ...model.gup import GupParams

ROUNDING_SCALE = 1e-12

def randomCarnotSpec(rng, betaG: float = 0.0) -> CarnotSpec:
    tHot = float(rng.uniform(1.0, 10.0))
    lA = float(rng.uniform(1.0, 3.0))
    mass = float(rng.uniform(0.5, 2.0))

    return CarnotSpec(
        tHot=tHot,
        tCold=tHot * float(rng.uniform(0.1, 0.9)),
        lA=lA,
        lB=lA * float(rng.uniform(1.1, 4.0)),
        mass=mass,
        gup=GupParams(betaG, mass)
    )

def randomOttoSpec(rng, betaG: float = 0.0) -> OttoSpec:
    """
    random otto cycle in the engine regime, r * r_L^O between 0.2 and 0.8.
    """

    lSmall = float(rng.uniform(1.0, 3.0))
    lLarge = lSmall * float(rng.uniform(1.1, 3.0))
    mass = float(rng.uniform(0.5, 2.0))
    tHot = float(rng.uniform(1.0, 10.0))

    rLO = (lLarge / lSmall) ** 2
    r = float(rng.uniform(0.2, 0.8)) / rLO

    return OttoSpec(
        tHot=tHot,
        tCold=r * tHot,
        lSmall=lSmall,
        lLarge=lLarge,
        mass=mass,
        gup=GupParams(betaG, mass)
    )

def _relative(measured: float, reference: float) -> float:
    return abs(measured - reference) / abs(reference)

def _gupLedgers(context: CheckContext, checkId: str):
    rng = context.rng(checkId)
    ledgers = []

    for _ in range(context.randomSpecs):
        betaG = float(10.0 ** rng.uniform(-7.0, -5.0))
        ledgers.append(carnotLedger(randomCarnotSpec(rng, betaG), context.deltaMax))

    for _ in range(context.randomSpecs):
        betaG = float(10.0 ** rng.uniform(-7.0, -5.0))
        ledgers.append(ottoLedger(randomOttoSpec(rng, betaG), context.deltaMax))

    return ledgers

class CarnotEfficiencyCheck(BaseCheck):
    id = "carnot-efficiency"
    name = "carnot ledger efficiency is 1 - T_cold / T_hot"

    def run(self, context: CheckContext) -> CheckResult:
        rng = context.rng(self.id)
        worst = 0.0

        for _ in range(context.randomSpecs):
            spec = randomCarnotSpec(rng)
            worst = max(worst, _relative(carnotLedger(spec).eta, 1.0 - spec.tCold / spec.tHot))

        return self.below(worst, 1e-12, f"{context.randomSpecs} random specs")

class OttoEfficiencyCheck(BaseCheck):
    id = "otto-efficiency"
    name = "otto ledger efficiency is 1 - L_small^2 / L_large^2"

    def run(self, context: CheckContext) -> CheckResult:
        rng = context.rng(self.id)
        worst = 0.0

        for _ in range(context.randomSpecs):
            spec = randomOttoSpec(rng)
            expected = 1.0 - (spec.lSmall / spec.lLarge) ** 2
            worst = max(worst, _relative(ottoLedger(spec).eta, expected))

        return self.below(worst, 1e-12, f"{context.randomSpecs} random specs")

class WorkInvarianceCheck(BaseCheck):
    id = "gup-work-invariance"
    name = "gup corrections leave the cycle work unchanged"

    def run(self, context: CheckContext) -> CheckResult:
        ledgers = _gupLedgers(context, self.id)
        worst = max(_relative(ledger.workG, ledger.work) for ledger in ledgers)

        return self.below(worst, 1e-14, f"{len(ledgers)} carnot and otto ledgers")

class DeficitSignCheck(BaseCheck):
    id = "gup-deficit-sign"
    name = "gup-corrected efficiency is lower for every engine"

    def run(self, context: CheckContext) -> CheckResult:
        ledgers = [ledger for ledger in _gupLedgers(context, self.id) if ledger.isEngine]
        violations = sum(1 for ledger in ledgers if not ledger.etaG < ledger.eta)

        return self.below(float(violations), 0.0, f"violations among {len(ledgers)} engine ledgers")

class FirstOrderConsistencyCheck(BaseCheck):
    """
    the exact corrected efficiency and the first-order one differ by a term
    of order (dQ / Q_in)^2; the ratio to that scale must stay bounded.
    """

    id = "first-order-consistency"
    name = "first-order deficit matches the exact deficit"

    def run(self, context: CheckContext) -> CheckResult:
        worst = 0.0
        compared = 0

        for ledger in _gupLedgers(context, self.id):
            scale = (ledger.deltaQIn / ledger.qIn) ** 2

            # below this the gap is rounding, not the expansion
            if scale < ROUNDING_SCALE:
                continue

            compared += 1
            worst = max(worst, abs(ledger.etaG - (ledger.eta - ledger.deltaEta)) / scale)

        return self.below(worst, 10.0, f"max |etaG - (eta - deltaEta)| / (dQ / Q_in)^2 over {compared} ledgers")

class CycleOracleCheck(BaseCheck):
    """
    rebuilds reference carnot and otto ledgers from path-integrated leg heats.
    """

    id = "cycle-ledger-oracle"
    name = "closed-form ledgers against path-integrated ledgers"

    BETA_G = 1e-5

    def run(self, context: CheckContext) -> CheckResult:
        carnot = CarnotSpec(tHot=2.0, tCold=1.0, lA=1.0, lB=2.0, mass=1.0, gup=GupParams(self.BETA_G, 1.0))
        otto = OttoSpec(tHot=10.0, tCold=1.0, lSmall=1.0, lLarge=2.0, mass=1.0, gup=GupParams(self.BETA_G, 1.0))

        carnotOracle = cycleLedgerOracle(
            carnotBuild(carnot).legs, carnot.gup, context.steps, context.deltaMax, cycle="carnot"
        )
        ottoOracle = cycleLedgerOracle(
            ottoBuild(otto).legs, otto.gup, context.steps, context.deltaMax, cycle="otto"
        )

        carnotEtaError = abs(carnotOracle.eta - (1.0 - carnot.tCold / carnot.tHot))
        ottoEtaError = abs(ottoOracle.eta - (1.0 - (otto.lSmall / otto.lLarge) ** 2))

        lam = carnot.gup.lam
        expectedQBC = 0.5 * lam * (1.0 / carnot.betaHot ** 2 - 1.0 / carnot.betaCold ** 2)
        qbcError = abs(carnotOracle.heatOf("BC").QG - expectedQBC)

        closedLedger = carnotLedger(carnot, context.deltaMax)
        ledgerError = abs(closedLedger.etaG - carnotOracle.etaG)

        passed = max(carnotEtaError, ottoEtaError, ledgerError) <= 1e-7 and qbcError <= 1e-9
        detail = (
            f"carnot eta {carnotEtaError:.3e}, otto eta {ottoEtaError:.3e}, "
            f"closed vs oracle etaG {ledgerError:.3e}, Q_BC^G {qbcError:.3e} (limit 1e-9)"
        )

        return CheckResult(self.id, passed, max(carnotEtaError, ottoEtaError, ledgerError), 1e-7, detail)

CHECKS = [
    CarnotEfficiencyCheck(),
    OttoEfficiencyCheck(),
    WorkInvarianceCheck(),
    DeficitSignCheck(),
    FirstOrderConsistencyCheck(),
    CycleOracleCheck(),
]
