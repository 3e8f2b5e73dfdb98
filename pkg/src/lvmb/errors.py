"""Exception hierarchy for the lvmb package."""


class LVMBError(Exception):
    """Base class for every error raised by lvmb."""


# fundamental sets / complexes
class EmptyFamily(LVMBError, ValueError):
    pass


class MixedCardinality(LVMBError, ValueError):
    pass


class OutOfRange(LVMBError, ValueError):
    pass


class Duplicate(LVMBError, ValueError):
    pass


class NotPure(LVMBError, ValueError):
    pass


class SEUViolated(LVMBError, ValueError):
    pass


class DegenerateNM(LVMBError, ValueError):
    pass


# exact geometry
class DimensionMismatch(LVMBError, ValueError):
    pass


class Infeasible(LVMBError):
    pass


class EmptyInput(LVMBError, ValueError):
    pass


# good systems
class NotAcceptableSystem(LVMBError):
    pass


class InvalidWitness(LVMBError):
    pass


class SiegelViolated(LVMBError):
    pass


class UnsupportedDimension(LVMBError):
    pass


class WitnessNotFound(LVMBError):
    """No LVM witness was found.

    ``conclusive`` is True when the search was exhaustive (m <= 1), so the
    system is certainly not LVM; False when a bounded heuristic gave up.
    """

    def __init__(self, message, conclusive):
        super().__init__(message)
        self.conclusive = conclusive


# toric
class RankDeficient(LVMBError):
    pass


class CollapsedRay(LVMBError):
    pass


class NonSimplicialImage(LVMBError):
    pass


class NotFullDimensional(LVMBError):
    pass


class CertificationFailed(LVMBError):
    def __init__(self, stage, detail=""):
        super().__init__(f"certification failed at stage '{stage}'" + (f": {detail}" if detail else ""))
        self.stage = stage
        self.detail = detail


class NotAcceptableSupport(LVMBError, ValueError):
    pass


# inverse construction
class NotStarshaped(LVMBError):
    pass


class NotGood(LVMBError):
    pass


# moment-angle
class OutsidePolydisk(LVMBError, ValueError):
    pass


class PreconditionViolated(LVMBError, ValueError):
    pass


# documents
class ParseError(LVMBError, ValueError):
    pass


class SchemaError(LVMBError, ValueError):
    pass
