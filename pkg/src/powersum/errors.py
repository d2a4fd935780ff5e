"""Exception hierarchy.

Every ``IdentityViolation`` means an identity that must hold exactly did not.
They are raised by the self-checking constructions and are never expected on
a correct build.
"""


class IdentityViolation(ArithmeticError):
    """An exact identity failed to hold."""


class NonzeroRemainder(IdentityViolation):
    pass


class NotInBasis(IdentityViolation):
    pass


class RaabeViolation(IdentityViolation):
    pass


class ChainInconsistency(IdentityViolation):
    pass


class JacobiRecurrenceViolation(IdentityViolation):
    pass


class SchroederIdentityViolation(IdentityViolation):
    pass


class BnFpViolation(IdentityViolation):
    pass


class AppellViolation(IdentityViolation):
    pass


class HoppeMismatch(IdentityViolation):
    pass


class ClosedFormMismatch(IdentityViolation):
    pass


class RecurrenceMismatch(IdentityViolation):
    pass


class LambdaRecurrenceViolation(IdentityViolation):
    pass


class SymmetryViolation(IdentityViolation):
    pass


class RouteMismatch(IdentityViolation):
    pass


class BridgeMismatch(IdentityViolation):
    pass


class MethodDisagreement(IdentityViolation):
    pass


class StrategyDisagreement(IdentityViolation):
    pass
