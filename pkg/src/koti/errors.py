"""Exception hierarchy shared by every koti module."""


class KotiError(Exception):
    """Base class for all koti errors."""


class EmptySpace(KotiError):
    def __init__(self):
        super().__init__("a sample space needs at least one outcome")


class DuplicateOutcome(KotiError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"duplicate outcome {name!r}")


class UnknownOutcome(KotiError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown outcome {name!r}")


class SpaceMismatch(KotiError):
    def __init__(self, left=None, right=None):
        msg = "operands live in different sample spaces"
        if left is not None and right is not None:
            msg += f": {left!r} vs {right!r}"
        super().__init__(msg)


class UnboundAtom(KotiError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unbound atom {name!r}")


class EmptySupport(KotiError):
    def __init__(self):
        super().__init__("a support coevent needs a nonempty support")


class TableLengthMismatch(KotiError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"dense table needs {expected} bits, got {got}")


class CapacityExceeded(KotiError):
    """An enumeration or classification would exceed a hard size limit."""

    def __init__(self, what, n, limit):
        self.what = what
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: n={n} exceeds the limit n<={limit}")
