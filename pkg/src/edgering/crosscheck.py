"""Compare the combinatorial decision with the semigroup oracle."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import DEFAULT_CYCLE_CAP
from .model import MixedGraph, Vector, l1
from .normality import NormalityReport, decide
from .oracle.semigroup import (
    GenerationVerdict,
    OracleVerdict,
    default_coeff_cap,
    oracle_normality,
    t1_member,
    t2_member_bounded,
    verify_generation,
)


@dataclass
class CrossCheck:
    agree: bool
    reason: str
    report: NormalityReport
    oracle: OracleVerdict
    generation: GenerationVerdict | None
    # generators shown to be in T1 and outside T2 (within the cap) one by one
    certified: list[Vector] = field(default_factory=list)
    beyond_window: bool = False


def certify_generator(g: MixedGraph, v: Vector, coeff_cap: int | None) -> bool:
    """``v`` lies in T1 but has no T2 representation within the cap."""
    if not t1_member(g, v):
        return False
    return not t2_member_bounded(g, v, coeff_cap).found


def cross_check(
    g: MixedGraph,
    degree_bound: int = 4,
    coeff_cap: int | None = None,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> CrossCheck:
    """Decide, run the oracle, and check the generators against the window.

    The oracle only sees vectors of 1-norm at most ``degree_bound``.  A
    non-normal graph whose generators all lie beyond that norm can look
    normal to it; that case counts as agreement only when every generator
    is certified individually (in T1, no T2 representation within the cap).
    """
    report = decide(g, cycle_cap)
    verdict = oracle_normality(g, degree_bound, coeff_cap)
    if report.normal:
        if verdict.normal:
            return CrossCheck(True, "both normal", report, verdict, None)
        return CrossCheck(False, f"oracle witness {verdict.witness} but decided normal", report, verdict, None)

    gen = verify_generation(g, report.generators, degree_bound, coeff_cap)
    certified = [v for v in report.generators if certify_generator(g, v, coeff_cap)]
    if len(certified) != len(report.generators):
        bad = [v for v in report.generators if v not in certified]
        return CrossCheck(False, f"generators {bad} are not certified", report, verdict, gen, certified)
    if not gen.ok:
        return CrossCheck(False, f"window vectors {gen.inexpressible} not generated", report, verdict, gen, certified)
    if not verdict.normal:
        return CrossCheck(True, "both not normal", report, verdict, gen, certified)
    if all(l1(v) > degree_bound for v in report.generators):
        return CrossCheck(True, "generators lie beyond the oracle window", report, verdict, gen, certified, True)
    return CrossCheck(False, "decided not normal but the oracle window has no witness", report, verdict, gen, certified)


__all__ = ["CrossCheck", "certify_generator", "cross_check", "default_coeff_cap"]
