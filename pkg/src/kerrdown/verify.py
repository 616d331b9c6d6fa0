"""Cross-engine verification: closed forms vs the Fock oracle on a fixed grid.

Drives three independent routes to the squeezing factors over a parameter grid
(couplings x seeds x 50 times), checks them against each other, runs the
formula-variant arbitration, and checks the oracle's conservation laws.  The
CLI `verify` subcommand renders the resulting report; the acceptance tests
call the same functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fock_oracle, moments_engine, quad_core, squeezing_analytic
from .errors import DegenerateDenominator
from .fock_oracle import OracleConfig
from .moments_engine import DConvention, SqueezeKind, SystemParams

GRID_CHIS = (0.0, 0.25, 0.5)
GRID_KS = (0.0, 0.05, 0.1)
GRID_ALPHAS = ((0.4, 0.0), (0.4, 0.4), (0.2, 0.3))
GRID_STEPS = 50
GRID_T_MAX = 3.0

TOL_ANALYTIC_MOMENTS = 1e-10
TOL_ORACLE = 1e-6
ARBITRATION_FLOOR = 1e-3  # the rejected trig variant must deviate at least this much
TOL_CONSERVATION = 1e-9
TOL_NORM = 1e-10


@dataclass
class Check:
    name: str
    value: float
    bound: float
    # "le": value must stay below bound; "ge": value must exceed it (the
    # rejected-variant floor); "info": reported, never gating
    mode: str = "le"

    @property
    def passed(self) -> bool:
        if self.mode == "le":
            return self.value <= self.bound
        if self.mode == "ge":
            return self.value >= self.bound
        return True

    def render(self) -> str:
        tag = "INFO" if self.mode == "info" else ("PASS" if self.passed else "FAIL")
        rel = {"le": "<=", "ge": ">=", "info": "  "}[self.mode]
        return f"[{tag}] {self.name:<44s} {self.value:12.5e} {rel} {self.bound:.1e}"


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [
            f"verification grid: chi in {GRID_CHIS}, k in {GRID_KS}, "
            f"alpha in {GRID_ALPHAS}, {GRID_STEPS} times in [0, {GRID_T_MAX}]"
        ]
        lines += [c.render() for c in self.checks]
        if self.skipped:
            lines.append("skipped cells:")
            lines += [f"  {s}" for s in self.skipped]
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def grid_times() -> np.ndarray:
    return np.linspace(0.0, GRID_T_MAX, GRID_STEPS)


def grid_params() -> list[SystemParams]:
    return [
        SystemParams(chi, k, a1, a2)
        for chi in GRID_CHIS
        for k in GRID_KS
        for (a1, a2) in GRID_ALPHAS
    ]


def _kind_cells():
    cells = [
        (SqueezeKind.SINGLE1, DConvention.NUMBER_SUM),
        (SqueezeKind.SINGLE2, DConvention.NUMBER_SUM),
        (SqueezeKind.TWO_MODE, DConvention.NUMBER_SUM),
        (SqueezeKind.SUM, DConvention.NUMBER_SUM),
        (SqueezeKind.SUM, DConvention.COMMUTATOR),
    ]
    return cells

_SINGLE_KINDS = (SqueezeKind.SINGLE1, SqueezeKind.SINGLE2)
_ARBITRATION_VARIANTS = ("arbitrated", "sin-theta", "single-dephasing", "unarbitrated")


def run_verification(
    cfg: OracleConfig | None = None, tol: float = TOL_ORACLE
) -> VerificationReport:
    """Run the full cross-engine grid, the variant arbitration, and conservation."""
    cfg = cfg if cfg is not None else OracleConfig()
    ts = grid_times()
    report = VerificationReport()

    dev_am = 0.0  # analytic vs moments route
    dev_ao = 0.0  # analytic vs oracle
    dev_mo = 0.0  # moments route vs oracle
    envelope = 0.0  # v - min(f, g), should stay <= 0 up to roundoff
    var_dev = {v: 0.0 for v in _ARBITRATION_VARIANTS}

    params = grid_params() + [SystemParams(0.5, 0.1, 0.0, 0.0)]  # degenerate probe
    for p in params:
        for kind, conv in _kind_cells():
            cell = f"kind={kind.value} d={conv.value} chi={p.chi_bar} k={p.k} alpha=({p.alpha1},{p.alpha2})"
            skipped_here = False
            for t in ts:
                try:
                    mm = moments_engine.moments_for(p, float(t), kind, conv)
                    fm = quad_core.factor_x(mm)
                    gm = quad_core.factor_y(mm)
                    vm = quad_core.principal(mm)
                    fa, ga = squeezing_analytic.factors(p, float(t), kind, conv)
                    mo = fock_oracle.moment_set_numeric(p, float(t), kind, cfg, conv)
                    fo = quad_core.factor_x(mo)
                    go = quad_core.factor_y(mo)
                    vo = quad_core.principal(mo)
                except DegenerateDenominator as exc:
                    if not skipped_here:
                        report.skipped.append(f"{cell}: DegenerateDenominator: {exc}")
                        skipped_here = True
                    continue
                dev_am = max(dev_am, abs(fa - fm), abs(ga - gm))
                dev_ao = max(dev_ao, abs(fa - fo), abs(ga - go))
                dev_mo = max(dev_mo, abs(fm - fo), abs(gm - go), abs(vm - vo))
                envelope = max(envelope, vm - min(fm, gm), vo - min(fo, go))
                if kind in _SINGLE_KINDS:
                    which = 1 if kind is SqueezeKind.SINGLE1 else 2
                    for variant in _ARBITRATION_VARIANTS:
                        fv, gv = squeezing_analytic.single_mode_fg(
                            p, float(t), which, variant
                        )
                        var_dev[variant] = max(
                            var_dev[variant], abs(fv - fo), abs(gv - go)
                        )

    report.checks.append(
        Check("analytic vs moments route", dev_am, TOL_ANALYTIC_MOMENTS)
    )
    report.checks.append(Check("analytic vs oracle", dev_ao, tol))
    report.checks.append(Check("moments route vs oracle", dev_mo, tol))
    report.checks.append(Check("principal envelope v - min(f,g)", envelope, 1e-10))
    report.checks.append(
        Check("single-mode arbitrated variant vs oracle", var_dev["arbitrated"], tol)
    )
    report.checks.append(
        Check(
            "single-mode sin-theta variant vs oracle",
            var_dev["sin-theta"],
            ARBITRATION_FLOOR,
            mode="ge",
        )
    )
    report.checks.append(
        Check(
            "single-mode single-dephasing variant vs oracle",
            var_dev["single-dephasing"],
            0.0,
            mode="info",
        )
    )
    report.checks.append(
        Check(
            "single-mode unarbitrated variant vs oracle",
            var_dev["unarbitrated"],
            0.0,
            mode="info",
        )
    )

    report.checks.extend(conservation_checks(cfg))
    return report


def conservation_checks(cfg: OracleConfig | None = None) -> list[Check]:
    """Drift of the motion constants along the (chi, k) = (0.5, 0.1) evolution.

    n1 - n2 commutes with the generator, so <n1 - n2> and its square are flat;
    the frame energy and the norm are flat by unitarity.
    """
    cfg = cfg if cfg is not None else OracleConfig()
    p = SystemParams(0.5, 0.1, 0.4, 0.4)
    h = fock_oracle.build_hamiltonian(p, cfg.n_max)
    seed = fock_oracle.coherent_state(p.alpha1, p.alpha2, cfg.n_max, cfg.tau_trunc)

    def observables(state):
        n1 = fock_oracle.expect(state, (1, 1, 0, 0)).real
        n2 = fock_oracle.expect(state, (0, 0, 1, 1)).real
        # n^2 = a+^2 a^2 + n per mode; cross term via the joint moment
        n1_sq = fock_oracle.expect(state, (2, 2, 0, 0)).real + n1
        n2_sq = fock_oracle.expect(state, (0, 0, 2, 2)).real + n2
        n1n2 = fock_oracle.expect(state, (1, 1, 1, 1)).real
        vec = state.vector()
        energy = (vec.conj() @ (h @ vec)).real / state.norm_sq()
        return (
            n1 - n2,
            n1_sq - 2.0 * n1n2 + n2_sq,
            energy,
            np.sqrt(state.norm_sq()),
        )

    ref = observables(seed)
    drifts = [0.0, 0.0, 0.0, 0.0]
    for t in np.linspace(0.0, GRID_T_MAX, 16)[1:]:
        state = fock_oracle.evolve(seed, h, float(t), cfg)
        for i, (now, then) in enumerate(zip(observables(state), ref)):
            drifts[i] = max(drifts[i], abs(now - then))
    return [
        Check("conservation <n1 - n2> drift", drifts[0], TOL_CONSERVATION),
        Check("conservation <(n1 - n2)^2> drift", drifts[1], TOL_CONSERVATION),
        Check("frame energy drift", drifts[2], TOL_CONSERVATION),
        Check("norm drift", drifts[3], TOL_NORM),
    ]
