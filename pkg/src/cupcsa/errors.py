"""Exception hierarchy shared by all modules."""


class CupError(Exception):
    """Base class; ``module`` names where the failure originated."""

    module = "cupcsa"


# exactnum
class Singular(CupError):
    module = "exactnum"


# fieldtower
class NotInvertible(CupError):
    module = "fieldtower"


class NotClosed(CupError):
    module = "fieldtower"


class SearchExhausted(CupError):
    module = "fieldtower"


class BasisDegenerate(CupError):
    module = "fieldtower"


# datum
class SchemaError(CupError):
    module = "datum"


class CocycleViolation(CupError):
    module = "datum"


class NotAGroup(CupError):
    module = "datum"


class BadZeta(CupError):
    module = "datum"


class StructureViolation(CupError):
    module = "datum"


# theorem
class NotInK(CupError):
    module = "theorem"


class AssociativityFailure(CupError):
    module = "theorem"


class RewritingCycle(CupError):
    module = "theorem"


# crossed
class DimensionMismatch(CupError):
    module = "crossed"


class MismatchReport(CupError):
    module = "crossed"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# brauer2
class NotRationalBase(CupError):
    module = "brauer2"


class NotAntiCommuting(CupError):
    module = "brauer2"


class ReciprocityViolation(CupError):
    module = "brauer2"


# cli / catalog
class UnknownExample(CupError):
    module = "catalog"
