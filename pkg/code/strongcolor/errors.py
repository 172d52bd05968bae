"""Exception hierarchy shared by the library and the command line.

Every exception carries the exit code the CLI uses when it is the reason a
command stops: 1 for bad input, 2 for a failed verification and 3 for an
internal invariant breach (a would-be counterexample).
"""


class StrongColorError(Exception):
    exit_code = 1


## --
## -- input errors (exit code 1)
## --

class InputError(StrongColorError):
    exit_code = 1


class LoopEdge(InputError):
    def __init__(self, edge, vertex):
        super().__init__(f"edge {edge} is a loop at vertex {vertex}")
        self.edge = edge
        self.vertex = vertex


class RotationMismatch(InputError):
    def __init__(self, vertex, reason):
        super().__init__(f"rotation at vertex {vertex}: {reason}")
        self.vertex = vertex


class IndexOutOfRange(InputError):
    def __init__(self, what, index, bound):
        super().__init__(f"{what} {index} out of range [0, {bound})")
        self.index = index


class NonPlanar(InputError):
    pass


class NotOnFace(InputError):
    pass


class UnknownName(InputError):
    pass


class InfeasibleSpec(InputError):
    pass


class PmgSyntaxError(InputError):
    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class ColorOutOfRange(InputError):
    pass


class UncoloredEdge(InputError):
    def __init__(self, edge):
        super().__init__(f"edge {edge} has no color")
        self.edge = edge


class AlreadyColored(InputError):
    def __init__(self, edge, color):
        super().__init__(f"edge {edge} is already colored {color}")
        self.edge = edge


class FrontierTooLarge(InputError):
    pass


class TooLarge(InputError):
    pass


class InvalidColoring(InputError):
    pass


class InputInvalid(InputError):
    pass


class Disconnected(InputError):
    pass


class HasBridge(InputError):
    pass


class ConfigError(InputError):
    pass


## --
## -- verification failure (exit code 2)
## --

class VerificationFailed(StrongColorError):
    exit_code = 2


## --
## -- internal invariant breaches (exit code 3)
## --

class InternalError(StrongColorError):
    """Raised when something the theorem forbids happens.

    The message embeds the offending graph as PMG text so the failure can be
    replayed with the command line tools.
    """
    exit_code = 3

    def __init__(self, reason, dump=None):
        message = reason if dump is None else f"{reason}\n--- graph ---\n{dump}"
        super().__init__(message)
        self.reason = reason
        self.dump = dump


class InvalidConfiguration(InternalError):
    pass


class ExtensionImpossible(InternalError):
    pass


class InternalCounterexample(InternalError):
    pass


class DetectorGap(InternalError):
    pass
