"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an arithmetic operation."""


class NotInvertibleError(DomainError):
    def __init__(self, a, n, gcd):
        super().__init__(f"{a} is not invertible modulo {n} (gcd {gcd})")
        self.a = a
        self.n = n
        self.gcd = gcd


class IncompleteFactorizationError(ArithmeticError):
    """Factoring gave up within its effort budget.

    ``factors`` holds the prime powers found so far and ``cofactor`` the
    composite part that could not be split.
    """

    def __init__(self, n, factors, cofactor):
        super().__init__(f"could not fully factor {n}: cofactor {cofactor} remains")
        self.n = n
        self.factors = factors
        self.cofactor = cofactor


class NoSolutionError(ArithmeticError):
    """A discrete logarithm does not exist in the given subgroup."""


class BudgetExceededError(RuntimeError):
    pass


class KeygenError(RuntimeError):
    pass


class PreconditionError(ValueError):
    """The public key does not satisfy the hypothesis of an attack."""


class AttackInapplicableError(Exception):
    """No forgery could be produced.

    ``reasons`` maps a strategy name to a human readable failure reason.
    """

    def __init__(self, message, reasons=None):
        super().__init__(message)
        self.reasons = dict(reasons or {})


class ParityError(AttackInapplicableError):
    """For p = 3 (mod 4) the digest falls in the unreachable parity class."""


class SubgroupOrderError(AttackInapplicableError):
    """The subgroup generated in the attack does not have the expected order."""
