from typing import Any

from .validation_pomes import validate_format_error


class QformsError(Exception):
    """
    Base class for the errors raised by the algebra engine.

    The message is built from the coded messages in *validation_msgs*, with *args* replacing
    the placeholders in the message text.
    """
    error_id: int = 101

    def __init__(self,
                 *args: Any) -> None:
        """
        Build the error from the arguments of its coded message.

        :param args: the arguments for the message placeholders
        """
        self.args_msg: tuple = args
        super().__init__(validate_format_error(self.error_id, *args))


class IrreducibilityUnknown(QformsError):
    error_id = 301


class UnsupportedInseparableStep(QformsError):
    error_id = 302


class DegreeCapExceeded(QformsError):
    error_id = 303


class DivisionByZero(QformsError, ZeroDivisionError):
    error_id = 304


class TowerMismatch(QformsError):
    error_id = 305


class NotSimpleStep(QformsError):
    error_id = 306


class ZeroSubspace(QformsError):
    error_id = 307


class SingularInput(QformsError):
    error_id = 308


class DimensionMismatch(QformsError):
    error_id = 309


class OddDimension(QformsError):
    error_id = 310


class ZeroScalar(QformsError):
    error_id = 311


class InseparableContext(QformsError):
    error_id = 312


class GenerationExhausted(QformsError):
    error_id = 313


class BoundExceeded(QformsError):
    error_id = 314


class UnknownSuite(QformsError):
    error_id = 319


class UnsupportedCharacteristic(QformsError):
    error_id = 320


class NotSymmetric(QformsError):
    error_id = 318


class ScriptError(QformsError):
    """
    Errors located in a script, carrying the line and column of the offending text.
    """
    def __init__(self,
                 *args: Any,
                 line: int = None,
                 column: int = None) -> None:
        self.line: int | None = line
        self.column: int | None = column
        super().__init__(*args)


class ScriptSyntaxError(ScriptError):
    error_id = 315


class UnknownIdentifier(ScriptError):
    error_id = 316


class TypeMismatch(ScriptError):
    error_id = 317


class NameInUse(QformsError):
    error_id = 321


class NotTotallySingular(QformsError):
    error_id = 322
