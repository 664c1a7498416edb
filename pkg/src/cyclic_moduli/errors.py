"""Exception hierarchy shared by the library, the CLI, and the HTTP service."""


class CyclicModuliError(Exception):
    """Base class for all domain errors raised by this package."""


class NoStableIndexing(CyclicModuliError):
    """No rotation of the node degrees admits stable representations."""


class IrrationalRoots(CyclicModuliError):
    """A coefficient form does not factor into linear forms over the rationals."""


class ChartDegenerate(CyclicModuliError):
    """The working chart cannot support the requested coefficient elimination."""


class DegreeMismatch(CyclicModuliError):
    """A section's ambient degree disagrees with what the quiver requires."""


class ZeroGamma(CyclicModuliError):
    """The base point is the zero section; the fibre is the nilpotent cone."""


class ProfileMismatch(CyclicModuliError):
    """A multiplicity profile does not sum to the required degree."""


class ZeroScalar(CyclicModuliError):
    """A torus scalar was zero."""


class ZeroInteriorMap(CyclicModuliError):
    """An interior map (phi_1..phi_{n-1}) is zero where a nonzero one is required."""


class QuiverMismatch(CyclicModuliError):
    """Two representations do not share the same quiver."""


class InvalidSplitting(CyclicModuliError):
    """A splitting type violates the (k,1) constraints."""


class SpecError(Exception):
    """Base class for errors in the textual quiver/section language."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class SpecSyntaxError(SpecError):
    """Malformed input text."""


class SpecSemanticError(SpecError):
    """Well-formed text describing an invalid object (e.g. a non-decreasing splitting)."""
