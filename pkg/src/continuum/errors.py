"""Exception hierarchy. Every domain failure derives from :class:`DomainError`."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class ZeroDivisorError(DomainError, ZeroDivisionError):
    """Division by a dual number whose real part is zero."""


class NeverClosesError(DomainError):
    """Pursuit with speed ratio r <= 1: the gap never shrinks."""


class NotInClassAError(DomainError):
    """A sequence with an all-ones tail was given where class A is required."""
