"""Exceptions raised by the workbench.

Every error derives from RelatioError so that the command scripts can map
them to the exit-code contract with a single except clause.
"""


class RelatioError(Exception):
    """Base class of every workbench error."""


class ParseError(RelatioError):
    """A text input could not be read.

    Parameters:
        message (str) -- what went wrong
        line (int)    -- 1-based line of the offending text (1 for one-line inputs)
        col (int)     -- 1-based column of the offending text
    """

    def __init__(self, message, line=1, col=1):
        self.message = message
        self.line = line
        self.col = col
        super().__init__('%s (line %d, column %d)' % (message, line, col))

    def at_line(self, line, offset=0):
        """Return a copy re-anchored at <line> of a larger file, <offset> columns to the right."""
        return type(self)(self.message, line, self.col + offset)


class EmptyInput(ParseError):
    pass


class UnknownSymbol(ParseError):
    pass


class ArityMismatch(ParseError):
    pass


class UnbalancedParenthesis(ParseError):
    pass


class MalformedFormula(ParseError):
    pass


class DefinitionError(ParseError):
    """A logic-definition or table file is structurally wrong."""


class OutOfUniverse(RelatioError):
    pass


class MissingTable(RelatioError):
    pass


class UniverseTooLarge(RelatioError):
    pass


class PremiseSetTooLarge(RelatioError):
    pass


class IndeterminateNontriviality(RelatioError):
    pass


class CapMismatch(RelatioError):
    pass


class UnknownProperty(RelatioError):
    pass


class UnknownRelation(RelatioError):
    pass


class UnknownLogic(RelatioError):
    pass
