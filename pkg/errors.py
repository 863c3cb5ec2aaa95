"""
Exception hierarchy for the IntComplex library.

Library code raises these; the command-line front end maps them to exit codes.
"""


class IntComplexError(Exception):
    """Base class for every error raised by the library"""


class InteractionSyntaxError(IntComplexError, ValueError):
    """Malformed interaction text"""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class InvalidPairsError(IntComplexError, ValueError):
    """Number pairs that do not describe a binary tree"""


class FaceError(IntComplexError, ValueError):
    """Face or leaf index requested on an interaction that has none"""


class VertexMapError(IntComplexError, ValueError):
    """Vertex map that is undefined on a leaf or leaves its target complex"""


class ComplexError(IntComplexError, ValueError):
    """Invalid complex construction or query"""


class NotFreeError(ComplexError):
    """Collapse requested on a pair that is not free"""


class ComplexFileError(IntComplexError, ValueError):
    """Complex or subset file that does not follow the line format"""

    def __init__(self, message: str, line: int, column: int = 1, path: str | None = None):
        self.line = line
        self.column = column
        self.path = path
        where = f"{path}:" if path else "line "
        super().__init__(f"{where}{line}:{column}: {message}")


class FieldError(IntComplexError, ValueError):
    """Unknown coefficient field"""


class PersistenceError(IntComplexError):
    """Rank function that admits no interval decomposition"""


class DiagramError(IntComplexError, ValueError):
    """Persistence diagram input that does not follow the schema"""
