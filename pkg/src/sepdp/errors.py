class BudgetExceeded(RuntimeError):
    """An enumeration produced more objects than its configured cap."""


class SeparatorBudgetExceeded(BudgetExceeded):
    pass


class PMCBudgetExceeded(BudgetExceeded):
    pass


class PreconditionError(ValueError):
    pass


class VerificationError(AssertionError):
    """A post-hoc check of a computed object failed; always a bug signal."""


class DisconnectedComplementError(ValueError):
    pass
