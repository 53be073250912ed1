"""Exception types shared across the package."""


class FermiwellError(Exception):
    """Base class for all package errors."""


class DomainError(FermiwellError, ValueError):
    """Argument outside the mathematically valid window."""


class PoleError(DomainError):
    """log Gamma evaluated at a non-positive integer."""


class ConvergenceError(FermiwellError):
    """A series or iterative scheme hit its budget before the tolerance."""


class DegenerateParameterError(FermiwellError):
    """c-a-b within 1e-8 of an integer where the connection formula is needed."""


class QuadratureError(FermiwellError):
    """Adaptive quadrature exhausted its refinement budget."""


class BracketCollisionError(FermiwellError):
    """Two same-parity roots fell into one scan cell; raise the grid density."""


class LabelingError(FermiwellError):
    """Parity alternation or node-count verification of a spectrum failed."""


class RootNotFoundError(FermiwellError):
    """Requested root lies beyond the scan ceiling."""


class NodeMismatchError(FermiwellError):
    """A solution's verified node count differs from the requested one."""
