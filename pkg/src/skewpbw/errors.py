"""Exception types shared across the package.

Everything raised on purpose derives from SkewPBWError so callers (and the
CLI) can tell deliberate failure modes from genuine bugs.
"""


class SkewPBWError(Exception):
    """Base class for all deliberate errors raised by this package."""


class DivisionByZero(SkewPBWError):
    """Exact division by a zero scalar."""


class NDependenceViolation(SkewPBWError):
    """A scalar the rewrite engine must invert is exactly zero.

    With independent symbolic parameters this cannot happen; it signals a
    degenerate numeric specialization (e.g. a root of unity collapsing a
    1 - q^m factor).
    """

    def __init__(self, divisor, context=""):
        self.divisor = divisor
        self.context = context
        msg = f"required divisor is zero: {divisor}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class UnsupportedRelation(SkewPBWError):
    """A relation shape the engine does not admit (e.g. a needed zero-pattern
    coefficient is nonzero for an invertible pair)."""


class NotInvertible(SkewPBWError):
    """Inversion requested outside the invertible block."""


class ValidationFailure(SkewPBWError):
    """A presentation, automorphism or derivation fails a stated condition.

    Carries which condition failed and the offending indices, when known.
    """

    def __init__(self, condition, indices=None, detail=""):
        self.condition = condition
        self.indices = tuple(indices) if indices is not None else None
        self.detail = detail
        msg = f"validation failed: {condition}"
        if self.indices is not None:
            msg += f" at indices {self.indices}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class HypothesisViolation(SkewPBWError):
    """A unit hypothesis fails for a specific monomial (1 - gamma_1 * sigma = 0)."""

    def __init__(self, monomial, detail=""):
        self.monomial = tuple(monomial)
        msg = f"unit hypothesis fails at monomial {self.monomial}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DecompositionFailure(SkewPBWError):
    """The inner + toric decomposition leaves a nonzero residual.

    Signals that the derivation falls outside the diagonal + inner form;
    carries the residual element (or None when the failure is structural,
    e.g. an automorphism outside the supported cases).
    """

    def __init__(self, message, residual=None, index=None):
        self.residual = residual
        self.index = index
        super().__init__(message)


class NotClassifiable(SkewPBWError):
    """No single scalar xi certifies every generator pair of a bracket."""

    def __init__(self, pair, detail=""):
        self.pair = tuple(pair) if pair is not None else None
        self.detail = detail
        msg = "bracket is not a scalar multiple of the commutator"
        if self.pair is not None:
            msg += f" at pair {self.pair}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class AllCommutatorsZero(SkewPBWError):
    """Every generator commutator vanishes, so xi is undetermined."""


class ZeroElement(SkewPBWError):
    """An operation that needs a nonzero element received zero."""


class UnknownExample(SkewPBWError):
    """No catalog entry under the requested key."""


class InvalidOptions(SkewPBWError):
    """Catalog entry options outside the supported range."""


class ExprSyntaxError(SkewPBWError):
    """Expression text failed to parse; carries the character position."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownSymbol(SkewPBWError):
    """An identifier in an expression is neither a generator nor a parameter."""

    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        msg = f"unknown symbol {name!r}"
        if position is not None:
            msg += f" (at position {position})"
        super().__init__(msg)


class FileFormatError(SkewPBWError):
    """A structured data file (presentation / bracket / derivation) is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
