"""Exception hierarchy shared by every module of the package."""


class SymbPowError(Exception):
    """Base class for all errors raised by symbpow."""


class ParseError(SymbPowError, ValueError):
    """Malformed polynomial, ideal or definition-file input."""


class RingMismatchError(SymbPowError, ValueError):
    """Objects from different rings (or module ranks/orders) were combined."""


class HomogeneityError(SymbPowError, ValueError):
    """An operation that needs homogeneous input received something else."""


class NotAGroebnerBasisError(SymbPowError):
    """An S-pair of a supposed Groebner basis has a nonzero normal form."""


class HypothesisError(SymbPowError):
    """A mathematical precondition failed (e.g. non-ACM input to a constructor).

    The CLI maps this to exit status 1 ("mathematical refusal").
    """


class GenericityError(HypothesisError):
    """Random "general" choices failed validation for every seed tried."""


class InvariantViolation(SymbPowError):
    """An internal invariant or a proven theorem was contradicted.

    Never expected in practice; the CLI maps it to exit status 3.
    """
