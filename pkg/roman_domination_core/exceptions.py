"""
Roman Domination Engine
Error hierarchy shared by every module.
"""


class RomanDominationError(Exception):
    """Base class for all errors raised by the engine."""


class EmptyGraph(RomanDominationError):
    """An operation needs at least one vertex."""


class GraphFormatError(RomanDominationError):
    """Malformed edge-list or JSON graph input (self-loops, duplicates, bad ids)."""


class LabelingMismatch(RomanDominationError):
    """Labeling length does not match the graph, or a label is outside {0, 1, 2}."""


class NotCubic(RomanDominationError):
    """The source graph of the class F construction is not 3-regular."""


class NotACograph(RomanDominationError):
    """The graph is connected, co-connected and has more than one vertex."""


class ParameterError(RomanDominationError):
    """Generator or reduction parameters are out of range."""


class InvalidCover(RomanDominationError):
    """A claimed exact cover is not pairwise disjoint or does not cover the universe."""


class NotDominating(RomanDominationError):
    """A claimed dominating set leaves some vertex undominated."""


class ExtractionFailed(RomanDominationError):
    """Backward witness lifting produced something that is not a source solution."""


class DidNotFinish(RomanDominationError):
    """A search ran out of its time budget before it could answer."""

    def __init__(self, message: str, best_so_far=None):
        super().__init__(message)
        self.best_so_far = best_so_far
