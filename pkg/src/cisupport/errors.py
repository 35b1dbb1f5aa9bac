"""Exception hierarchy. Every engine error derives from CISupportError."""


class CISupportError(Exception):
    pass


class InvalidField(CISupportError, ValueError):
    pass


class DuplicateVariable(CISupportError, ValueError):
    pass


class BadWeight(CISupportError, ValueError):
    pass


class RingMismatch(CISupportError, ValueError):
    pass


class NonHomogeneousInput(CISupportError, ValueError):
    pass


class NotRegularSequence(CISupportError, ValueError):
    pass


class SingularMatrix(CISupportError, ValueError):
    pass


class ZeroModule(CISupportError, ValueError):
    pass


class BoundExceeded(CISupportError, RuntimeError):
    pass


class LiftDecompositionFailure(CISupportError, ArithmeticError):
    pass


class CommutationFailure(CISupportError, ArithmeticError):
    pass


class TruncationInsufficient(CISupportError, RuntimeError):
    pass


class DegenerateForm(CISupportError, ValueError):
    pass


class ComplexityMismatch(CISupportError, RuntimeError):
    pass


class NotFiniteLength(CISupportError, ValueError):
    pass


class EventualNonvanishing(CISupportError, ValueError):
    pass


class NoWitness(CISupportError, ValueError):
    pass


class ParseError(CISupportError, SyntaxError):
    def __init__(self, message, line=None, column=None, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        loc = f" at line {line}, column {column}" if line is not None else ""
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message}{loc}{exp}")


class NameError(CISupportError):  # noqa: A001 - DSL use-before-declaration
    def __init__(self, name, line=None, column=None):
        self.name = name
        self.line = line
        self.column = column
        loc = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"name {name!r} used before declaration{loc}")
