"""Exception hierarchy shared by all modules."""


class LinresError(Exception):
    """Base class. CLI maps subclasses to exit codes."""


class ParseError(LinresError):
    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            msg = f"line {lineno}: {msg}"
        super().__init__(msg)


class DomainError(LinresError):
    """Bad parameters, caps exceeded and similar (CLI exit 2)."""


class UnboundVariable(DomainError):
    pass


class TooManyVariables(DomainError):
    pass


class BadParams(DomainError):
    pass


class BadGraph(DomainError):
    pass


class LocalDerivationTooLarge(DomainError):
    pass


class SizeBudgetExceeded(DomainError):
    pass


class CheckError(LinresError):
    """A proof line failed verification. `line` is the failing line id."""

    def __init__(self, msg, line=None):
        self.line = line
        self.msg = msg
        super().__init__(msg if line is None else f"line {line}: {msg}")

    def at(self, line):
        return type(self)(self.msg, line)


class BadAntecedent(CheckError):
    pass


class IndexOutOfRange(CheckError):
    pass


class NotSimplifiable(CheckError):
    pass


class LineMismatch(CheckError):
    pass


class BadAxiomShape(CheckError):
    pass


class NotARefutation(CheckError):
    pass


class NotR0Line(CheckError):
    pass


class NotR0(CheckError):
    pass


class DuplicateCaseValue(LinresError):
    pass


class HookMismatch(LinresError):
    pass


class NotImplied(LinresError):
    def __init__(self, countermodel):
        self.countermodel = countermodel
        super().__init__("target not implied; countermodel " +
                         " ".join(f"x{i + 1}={v}" for i, v in enumerate(countermodel)))


class InvalidResolutionStep(CheckError):
    pass


class InvalidRes2Step(CheckError):
    pass


class InvalidRcpStep(CheckError):
    pass


class PcrCheckError(CheckError):
    pass
