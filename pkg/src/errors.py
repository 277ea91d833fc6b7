# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Exception hierarchy shared by the engine and the CLI."""


class LcxError(Exception):
    """Base class for every error raised by lcx."""


class CapacityError(LcxError, ValueError):
    """An order exceeds what a representation or algorithm supports."""


class VertexRangeError(LcxError, IndexError):
    """A vertex index is outside 0..n-1."""


class Graph6Error(LcxError, ValueError):
    """A graph6 record is malformed."""


class PreconditionError(LcxError, ValueError):
    """An operation was called outside its pre-condition."""


class HypothesisError(PreconditionError):
    """A lemma or theorem was evaluated on a graph outside its hypotheses."""


class InvariantError(LcxError, AssertionError):
    """A bookkeeping identity failed at runtime."""
