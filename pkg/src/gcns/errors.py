"""Exception hierarchy shared by all modules.

The class names double as the error names printed by the CLI.
"""


class GcnsError(ValueError):
    """Base class for every error raised by this package."""


class ParameterDomain(GcnsError):
    pass


class GcdViolation(GcnsError):
    pass


class NonpositiveGenerator(GcnsError):
    pass


class ConditionNotMet(GcnsError):
    """A formula was requested outside the hypotheses it is proven under."""


class IntegralityViolation(GcnsError):
    pass


class EmptyGenerators(GcnsError):
    pass


class WNotMember(GcnsError):
    pass
