"""Domain errors raised across the package.

Every error subclasses :class:`Error`, which itself subclasses ``ValueError``,
so callers may catch either the precise condition or the whole family.
"""


class Error(ValueError):
    """Base class for all sgcirc domain errors."""


# -- graph construction and manipulation ------------------------------------

class LoopEdgeError(Error):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(Error):
    """Two edges share the same unordered endpoint pair."""


class BadEndpointError(Error):
    """An edge endpoint is outside the vertex range."""


class BadVertexError(Error):
    """A vertex id is outside the vertex range."""


class DegenerateSquareError(Error):
    """Exact square of an even cycle shorter than 6 is not a pair of cycles."""


class BadParamsError(Error):
    """Family parameters outside the valid range."""


# -- girth -------------------------------------------------------------------

class HasPositiveEdgeError(Error):
    """Operation requires an all-negative signed graph."""


class TooLargeError(Error):
    """Instance exceeds a brute-force enumeration guard."""


# -- circular coloring ---------------------------------------------------------

class InvalidPQError(Error):
    """p/q pair violates the scaled-circle invariants (p even, p >= 2q >= 2)."""


class PartialAssignmentError(Error):
    """Coloring does not assign every vertex under consideration."""


class NotBipartiteError(Error):
    """Operation requires a bipartite underlying graph."""


class NoCandidateColorableError(Error):
    """No candidate on the (q_max, upper) grid admits a coloring."""


# -- circle geometry and winding ----------------------------------------------

class CircleMismatchError(Error):
    """Points live on circles of different circumference."""


class EqualAdjacentImagesError(Error):
    """Clockwise extension is undefined for equal adjacent images."""


class AmbiguousTieError(Error):
    """Shortest-arc extension is undefined for exactly antipodal images."""


class IntervalTouchesImageError(Error):
    """Reference interval contains an arc endpoint."""


class NotCylinderError(Error):
    """Graph does not carry a complete cylinder grid labelling."""


class RTooLargeError(Error):
    """Operation requires circumference r < 4."""


class BadLemmaParamsError(Error):
    """Lemma harness parameters are missing or out of range."""


class UncolorableError(Error):
    """Sampling requested from an uncolorable instance."""
