# -*- coding: utf-8 -*-


class AmaciError(RuntimeError):
    kind = "error"
    exit_code = 3


class InvalidParameters(AmaciError):
    """Bad sextuple, failed precondition or unknown formula."""
    kind = "invalid_parameters"
    exit_code = 1


class BudgetExceeded(AmaciError):
    """The tiling search visited more nodes than it was allowed to."""
    kind = "budget_exceeded"
    exit_code = 2

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"node budget {budget} exceeded after {nodes} extensions")
        self.nodes = nodes
        self.budget = budget


class InvariantViolation(AmaciError):
    """Two routes that must agree did not."""
    kind = "invariant_violation"
    exit_code = 3
