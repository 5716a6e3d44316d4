"""Exceptions raised by cyarith.

Every library error derives from :class:`CyarithError` and from the builtin
exception a caller would otherwise expect (``ValueError`` for bad arguments,
``ArithmeticError`` for evaluation failures), so plain ``except ValueError``
code keeps working.
"""


class CyarithError(Exception):
    #: the argument n an arithmetical function failed at, when known
    argument = None


class InvalidArgumentError(CyarithError, ValueError):
    pass


class OutOfRangeError(CyarithError, ValueError):
    pass


class UnsupportedError(CyarithError, ValueError):
    pass


class InvalidFunctionError(InvalidArgumentError):
    pass


class EvaluationError(CyarithError, ArithmeticError):
    """An arithmetical function failed at a specific argument."""

    def __init__(self, argument, message=None):
        self.argument = argument
        super().__init__(message or f"evaluation failed at n={argument}")
