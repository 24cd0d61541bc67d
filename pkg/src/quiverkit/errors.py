"""Exception types shared across the toolkit.

Every precondition violation raises a named subclass of :class:`QuiverError`
so callers (and the CLI exit-code mapping) can distinguish bad input from
bad state without string matching.
"""


class QuiverError(ValueError):
    """Base class for all toolkit errors."""


# graph construction / queries

class DuplicateId(QuiverError):
    """A vertex or edge id occurs twice in one graph."""


class DanglingEndpoint(QuiverError):
    """An edge or bundle references a vertex that is not in the graph."""


class UnknownEdge(QuiverError):
    """An edge id does not exist in the graph."""


class InfiniteBundlePresent(QuiverError):
    """Operation requires a graph without infinite edge bundles."""


class ResultCapExceeded(QuiverError):
    """Enumeration would produce more results than the configured cap."""


class HasLoop(QuiverError):
    """Operation requires a graph without directed cycles."""


class IndexOutOfRange(QuiverError):
    """Subpath indices fall outside the path."""


class InvalidPermutation(QuiverError):
    """Sequence is not a bijection of {1..n}."""


# serialization

class ParseError(QuiverError):
    """Input file or document does not match the documented schema."""


# matrices

class DimensionMismatch(QuiverError):
    """Matrix dimensions are incompatible."""


# extremal pipeline

class InvalidRange(QuiverError):
    """Parameters (N, k) violate 1 <= k <= N."""


class NoKPath(QuiverError):
    """Longest path is shorter than the requested length k."""


class NotInFkForm(QuiverError):
    """Graph is not in sorted-front form, or there is nothing to merge."""


class SearchBudgetExceeded(QuiverError):
    """Brute-force search exceeds its configured budget."""


class ConfigInvalid(QuiverError):
    """Explorer configuration is inconsistent."""


# structure

class TooManyVertices(QuiverError):
    """Power-set enumeration refused beyond the vertex cap."""


class NotHereditary(QuiverError):
    """Subset is not hereditary."""


class PartialMap(QuiverError):
    """Homomorphism data does not cover the whole source graph."""


class NotInjective(QuiverError):
    """Homomorphism is not injective."""


class NotHomomorphism(QuiverError):
    """Map does not commute with source/target maps."""


class IncompatibleOverlap(QuiverError):
    """Shared edge ids disagree on endpoints."""


class StarIdCollision(QuiverError):
    """Ghost edge id would collide with an existing edge id."""


# algebras

class GraphMismatch(QuiverError):
    """Elements belong to different graphs."""


class BudgetExceeded(QuiverError):
    """Enumeration budget exceeded."""


class InvalidWord(QuiverError):
    """Word is not a path in the extended graph."""


class NotAdmissible(QuiverError):
    """Inclusion is not admissible."""


class NotRowFinite(QuiverError):
    """Graph has an infinite emitter."""


class NotAdmissibleIntersection(QuiverError):
    """The intersection of the two graphs is not admissible."""
