"""Obstructions to commensurability between two pseudo-Anosov words.

Each check either certifies that no common power can be covered by a common
map, or reports that it found nothing. A verdict of NOT_COMMENSURABLE always
carries at least one certificate.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import NumberField
from .complex import SquareComplex, format_delta
from .flat import build_flat
from .jinvariant import JEquivalence, Verdict, j_equivalence, j_of_flat
from .twist import (
    Classification,
    ExpansionFactor,
    NotPseudoAnosov,
    TwistWord,
    classify,
    expansion_factor,
    trace_field_data,
)

DEFAULT_BOUND = 12


def delta_commensurable(d1: dict[int, int], d2: dict[int, int]) -> Fraction | None:
    """The q > 0 with q * d1 = d2 entrywise, if any."""
    a = {k: v for k, v in d1.items() if v}
    b = {k: v for k, v in d2.items() if v}
    if set(a) != set(b):
        return None
    if not a:
        return Fraction(1)
    ratios = {Fraction(b[k], a[k]) for k in a}
    return ratios.pop() if len(ratios) == 1 else None


class LambdaOutcome(enum.Enum):
    RELATION = "relation"
    CERTIFIED_NONE = "certified_none"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LambdaResult:
    outcome: LambdaOutcome
    powers: tuple[int, int] | None = None  # (m, n) with l1^m = l2^n
    reason: str = ""

    def to_json(self) -> dict:
        out = {"outcome": self.outcome.value, "reason": self.reason}
        if self.powers:
            out["powers"] = list(self.powers)
        return out


def _power(e: ExpansionFactor, k: int):
    if e.value.is_rational():
        return e.value ** k
    F = NumberField(e.value)
    return (F.gen ** k).to_real()


def lambda_commensurable(l1: ExpansionFactor, l2: ExpansionFactor, bound: int = DEFAULT_BOUND) -> LambdaResult:
    """Smallest (m, n), m first, with l1^m = l2^n and 1 <= m, n <= bound."""
    log1, log2 = math.log(float(l1.value)), math.log(float(l2.value))
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            if abs(m * log1 - n * log2) > 1e-9 * max(m * log1, 1.0):
                continue
            if _power(l1, m) == _power(l2, n):
                return LambdaResult(LambdaOutcome.RELATION, (m, n), "exact equality of powers")
    f1, f2 = trace_field_data(l1), trace_field_data(l2)
    if f1.degree == 2 and f2.degree == 2 and f1.quadratic_radicand != f2.quadratic_radicand:
        return LambdaResult(LambdaOutcome.CERTIFIED_NONE, None,
                            f"powers stay in distinct quadratic fields {f1.describe()} and {f2.describe()}")
    return LambdaResult(LambdaOutcome.INCONCLUSIVE, None, f"no relation with exponents up to {bound}")


class CompareVerdict(enum.Enum):
    NOT_COMMENSURABLE = "NOT_COMMENSURABLE"
    NO_OBSTRUCTION_FOUND = "NO_OBSTRUCTION_FOUND"


@dataclass(frozen=True)
class ObstructionReport:
    delta: tuple[dict, dict]
    delta_ratio: Fraction | None
    lambdas: tuple[ExpansionFactor, ExpansionFactor]
    lambda_result: LambdaResult
    j_result: JEquivalence
    punctured: tuple[bool, bool]
    verdict: CompareVerdict
    reasons: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self, digits: int = 12) -> dict:
        return {
            "delta": {
                "first": format_delta(self.delta[0]),
                "second": format_delta(self.delta[1]),
                "commensurable": self.delta_ratio is not None,
                "ratio": str(self.delta_ratio) if self.delta_ratio is not None else None,
            },
            "lambda": {
                "first": self.lambdas[0].to_json(digits),
                "second": self.lambdas[1].to_json(digits),
                "trace_fields": [trace_field_data(x).describe() for x in self.lambdas],
                **self.lambda_result.to_json(),
            },
            "j": self.j_result.to_json(),
            "punctures": {"first": self.punctured[0], "second": self.punctured[1]},
            "verdict": self.verdict.value,
            "reasons": list(self.reasons),
        }


def _checked_factor(c: SquareComplex, w: TwistWord, mu) -> ExpansionFactor:
    cls = classify(w, mu)
    if cls is not Classification.PSEUDO_ANOSOV:
        raise NotPseudoAnosov(cls)
    return expansion_factor(w, mu)


def compare(c1: SquareComplex, w1: TwistWord, c2: SquareComplex, w2: TwistWord,
            bound: int = DEFAULT_BOUND) -> ObstructionReport:
    f1, f2 = build_flat(c1), build_flat(c2)
    l1, l2 = _checked_factor(c1, w1, f1.mu), _checked_factor(c2, w2, f2.mu)
    d1, d2 = c1.delta, c2.delta
    q = delta_commensurable(d1, d2)
    lam = lambda_commensurable(l1, l2, bound)
    jr = j_equivalence(j_of_flat(f1), j_of_flat(f2))
    punct = (bool(c1.marked), bool(c2.marked))
    reasons = []
    if q is None:
        reasons.append(f"singularity data {format_delta(d1)} and {format_delta(d2)} are not proportional")
    if lam.outcome is LambdaOutcome.CERTIFIED_NONE:
        reasons.append("expansion factors: " + lam.reason)
    if jr.verdict is Verdict.DISTINCT:
        reasons.append("J invariants: " + jr.reason)
    if punct[0] != punct[1]:
        reasons.append("one surface is punctured and the other is closed")
    verdict = CompareVerdict.NOT_COMMENSURABLE if reasons else CompareVerdict.NO_OBSTRUCTION_FOUND
    return ObstructionReport((d1, d2), q, (l1, l2), lam, jr, punct, verdict, tuple(reasons))
