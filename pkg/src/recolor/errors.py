"""Exception types shared across the package."""


class RecolorError(Exception):
    """Base class for all errors raised by this package."""


class InvalidColoring(RecolorError):
    """A coloring is malformed or improper where properness is required."""


class InvalidSize(RecolorError):
    """An instance generator was asked for an impossible size."""


class NotEnoughColors(RecolorError):
    """No color is available for some vertex during coloring construction."""


class NotPEO(RecolorError):
    """The given ordering is not a perfect elimination ordering."""


class NotWidth2(RecolorError):
    """The graph has treewidth greater than 2."""


class OmegaTooLarge(RecolorError):
    """A vertex has more than 2 later neighbors along the ordering."""


class InvalidDecomposition(RecolorError):
    """A tree decomposition fails one of its structural invariants."""


class LiftFailure(RecolorError):
    """Expanding a merged-graph sequence produced an invalid sequence,
    which means a precondition on the inputs was violated."""


class InvalidInput(RecolorError):
    """Operation preconditions violated."""


class InvalidIndex(RecolorError):
    """A step index is out of range for the sequence."""


class NoValidColor(RecolorError):
    """No color choice keeps the coloring proper (signals a caller bug)."""


class TooLarge(RecolorError):
    """The state space exceeds the configured cap."""


class ImproperStart(RecolorError):
    """A sequence's start coloring is not proper."""


class SequenceStepError(RecolorError):
    """A replay error at a specific step of a recoloring sequence."""

    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


class ImproperStep(SequenceStepError):
    """A step creates a monochromatic edge."""


class NoOpStep(SequenceStepError):
    """A step assigns a vertex the color it already has."""


class AuditViolation(RecolorError):
    """A sequence violates one of the audited structural rules."""

    def __init__(self, vertex: int, rule: str, index, detail: str):
        super().__init__(f"vertex {vertex}, rule {rule!r}, index {index}: {detail}")
        self.vertex = vertex
        self.rule = rule
        self.index = index
        self.detail = detail
