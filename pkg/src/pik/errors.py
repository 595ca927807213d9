"""Exception hierarchy shared by all pik modules."""


class PikError(Exception):
    """Base class for every error raised by pik."""


class PrecisionError(PikError, ValueError):
    """Precision level out of range, or two different levels mixed."""


class ShapeError(PikError, ValueError):
    """Matrix or object dimensions do not line up."""


class WellFormednessError(PikError, ValueError):
    """A term does not type-check.

    ``path`` is the list of child selectors from the root to the offending node.
    """

    def __init__(self, message, path=()):
        self.path = tuple(path)
        where = "/".join(self.path) if self.path else "<root>"
        super().__init__(f"{message} (at {where})")


class ParseError(PikError, ValueError):
    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


class SynthesisError(PikError, ValueError):
    pass


class SynthesisCancelled(PikError):
    pass


class ChannelError(PikError, ValueError):
    pass


class WitnessError(PikError, ValueError):
    pass
