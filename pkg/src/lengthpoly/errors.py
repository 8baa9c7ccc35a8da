"""Exception hierarchy.

Domain errors (bad input, budget exhaustion) derive from :class:`LengthPolyError`.
:class:`InternalInvariantViolation` signals that a structural guarantee of
interval orders was observed to fail, which always indicates a bug.
"""


class LengthPolyError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class InvalidOrder(LengthPolyError):
    code = "invalid_order"


class CycleInRelation(InvalidOrder):
    code = "cycle_in_relation"


class NotAnIntervalOrder(InvalidOrder):
    code = "not_an_interval_order"

    def __init__(self, witness):
        a, b, c, d = witness
        super().__init__(
            f"2+2 pattern: {a}<{b}, {c}<{d}, {a} || {d}, {c} || {b}")
        self.witness = tuple(witness)

    def to_dict(self):
        d = super().to_dict()
        d["witness"] = list(self.witness)
        return d


class MalformedInterval(InvalidOrder):
    code = "malformed_interval"


class InvalidAscentSequence(InvalidOrder):
    code = "invalid_ascent_sequence"

    def __init__(self, index, message):
        super().__init__(f"position {index}: {message}")
        self.index = index


class UndefinedSlack(LengthPolyError):
    code = "undefined_slack"


class NotACycle(LengthPolyError):
    code = "not_a_cycle"


class NotACirculation(LengthPolyError):
    code = "not_a_circulation"


class DimensionMismatch(LengthPolyError):
    code = "dimension_mismatch"


class BudgetExceeded(LengthPolyError):
    code = "budget_exceeded"


class CycleBudgetExceeded(BudgetExceeded):
    code = "cycle_budget_exceeded"


class SupportCycleBudgetExceeded(CycleBudgetExceeded):
    code = "support_cycle_budget_exceeded"


class BlowupBudgetExceeded(BudgetExceeded):
    code = "fme_blowup_budget_exceeded"


class PreconditionViolated(LengthPolyError):
    code = "precondition_violated"


class InfeasibleWeight(LengthPolyError):
    code = "infeasible_weight"


class NotRedundant(LengthPolyError):
    code = "not_redundant"


class OrderingViolation(LengthPolyError):
    code = "ordering_violation"


class InternalInvariantViolation(LengthPolyError):
    """A property that holds for every interval order failed to hold."""

    code = "internal_invariant_violation"

    def __init__(self, module, invariant, detail=""):
        msg = f"[{module}] {invariant}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.module = module
        self.invariant = invariant

    def to_dict(self):
        d = super().to_dict()
        d.update(module=self.module, invariant=self.invariant)
        return d


class IntegralityViolation(InternalInvariantViolation):
    code = "integrality_violation"

    def __init__(self, detail=""):
        super().__init__("circulation", "vertex of a totally unimodular system is integral", detail)


class NoDivergence(InternalInvariantViolation):
    code = "no_divergence"

    def __init__(self, detail=""):
        super().__init__("circulation", "distinct cycles through a common vertex diverge", detail)
