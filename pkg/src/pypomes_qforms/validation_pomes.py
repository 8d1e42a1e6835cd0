from enum import StrEnum, auto
from logging import Logger
from typing import Any, Final

from .env_pomes import APP_PREFIX, env_get_str, env_get_enum


class MsgLang(StrEnum):
    """
    Possible languages for error reporting.
    """
    EN = auto()
    PT = auto()


VALIDATION_MSG_LANGUAGE: Final[MsgLang] = env_get_enum(key=f"{APP_PREFIX}_VALIDATION_MSG_LANGUAGE",
                                                       enum_class=MsgLang,
                                                       def_value=MsgLang.EN)
VALIDATION_MSG_PREFIX: Final[str] = env_get_str(key=f"{APP_PREFIX}_VALIDATION_MSG_PREFIX",
                                                def_value="QF")


def __report(msg: str,
             errors: list[str] | None,
             logger: Logger | None) -> None:
    if logger:
        logger.error(msg=msg)
    if isinstance(errors, list):
        errors.append(msg)


def validate_int(source: dict[str, Any],
                 attr: str,
                 min_val: int = None,
                 max_val: int = None,
                 default: int = None,
                 errors: list[str] = None,
                 logger: Logger = None) -> int | None:
    """
    Validate the integer option *attr* in *source*, as given on a *check* statement or the command line.

    Option values arrive as text, so a string of digits is accepted. A missing option yields *default*.

    :param source: the options
    :param attr: the option name
    :param min_val: the minimum value accepted
    :param max_val: the maximum value accepted
    :param default: the value of a missing option
    :param errors: incidental error messages (might be a non-empty list)
    :param logger: optional logger
    :return: the validated value, or *None* if validation failed
    """
    # initialize the return variable
    result: int | None = None

    stat: str | None = None
    value: Any = source.get(attr, default)
    if isinstance(value, str) and value.lstrip("-").isdigit():
        value = int(value)

    # 'bool' is subtype of 'int'
    if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
        # 152: Invalid value {}: must be type {}
        stat = validate_format_error(152,
                                     value,
                                     "int",
                                     f"@{attr}")
    elif value is not None and min_val is not None and max_val is not None and \
            not min_val <= value <= max_val:
        # 151: Invalid value {}: must be in the range {}
        stat = validate_format_error(151,
                                     value,
                                     [min_val, max_val],
                                     f"@{attr}")
    elif value is not None and min_val is not None and value < min_val:
        # 144: Invalid value {}: must be greater than {}
        stat = validate_format_error(144,
                                     value,
                                     min_val - 1,
                                     f"@{attr}")
    elif value is not None and max_val is not None and value > max_val:
        # 143: Invalid value {}: must be less than {}
        stat = validate_format_error(143,
                                     value,
                                     max_val + 1,
                                     f"@{attr}")
    if stat:
        __report(stat, errors, logger)
    else:
        result = value

    return result


def validate_str(source: dict[str, Any],
                 attr: str,
                 values: list[str] = None,
                 default: str = None,
                 errors: list[str] = None,
                 logger: Logger = None) -> str | None:
    """
    Validate the text option *attr* in *source*, optionally against the accepted *values*.

    :param source: the options
    :param attr: the option name
    :param values: optional list of accepted values
    :param default: the value of a missing option
    :param errors: incidental error messages (might be a non-empty list)
    :param logger: optional logger
    :return: the validated value, or *None* if validation failed
    """
    # initialize the return variable
    result: str | None = None

    stat: str | None = None
    value: Any = source.get(attr, default)
    if value is not None and not isinstance(value, str):
        # 152: Invalid value {}: must be type {}
        stat = validate_format_error(152,
                                     value,
                                     "str",
                                     f"@{attr}")
    elif value is not None and values and value not in values:
        if len(values) == 1:
            # 149: Invalid value {}: must be {}
            stat = validate_format_error(149,
                                         value,
                                         values[0],
                                         f"@{attr}")
        else:
            # 150: Invalid value {}: must be one of {}
            stat = validate_format_error(150,
                                         value,
                                         values,
                                         f"@{attr}")
    if stat:
        __report(stat, errors, logger)
    else:
        result = value

    return result


def validate_range(source: dict[str, Any],
                   attr: str,
                   min_val: int = None,
                   errors: list[str] = None,
                   logger: Logger = None) -> list[int] | None:
    """
    Validate the range option *attr* in *source*, written *a..b* or as a single integer *a*.

    :param source: the options
    :param attr: the option name
    :param min_val: the smallest lower end accepted
    :param errors: incidental error messages (might be a non-empty list)
    :param logger: optional logger
    :return: the integers *a, ..., b*, or *None* if the option is missing or invalid
    """
    # initialize the return variable
    result: list[int] | None = None

    value: Any = source.get(attr)
    if value is not None:
        low, _, high = str(value).partition("..")
        high = high or low
        if low.isdigit() and high.isdigit() and int(low) <= int(high) and \
                (min_val is None or int(low) >= min_val):
            result = list(range(int(low), int(high) + 1))
        else:
            # 153: Invalid range {}: must be a..b, with {} <= a <= b
            __report(validate_format_error(153,
                                           value,
                                           0 if min_val is None else min_val,
                                           f"@{attr}"),
                     errors, logger)
    return result


def validate_keys(source: dict[str, Any],
                  keys: list[str],
                  errors: list[str] = None,
                  logger: Logger = None) -> bool:
    """
    Verify that every option in *source* is one of *keys*.

    :param source: the options
    :param keys: the option names accepted
    :param errors: incidental error messages (might be a non-empty list)
    :param logger: optional logger
    :return: *True* if no unknown option was found
    """
    unknown: list[str] = sorted(set(source) - set(keys))
    for key in unknown:
        # 154: Unknown option {}: must be one of {}
        __report(validate_format_error(154,
                                       f"--{key}",
                                       [f"--{k}" for k in keys]),
                 errors, logger)
    return not unknown


def validate_format_error(error_id: int,
                          /,
                          *args: Any,
                          **kwargs: Any) -> str:
    """
    Format and return the coded error message *error_id*.

    The occurrences of *{}* in the message are sequentially replaced by the given *args*.
    When replacing, an instance of *args* is surrounded by single quotes if it contains no blankspaces.
    The element in *args* prefixed with *@*, if present, is appended to the end of the message.
    A *None* argument removes its placeholder.

    Optional custom language and prefix, replacing those defined respectively by the environment variables
    *VALIDATION_MSG_LANGUAGE* and *VALIDATION_MSG_PREFIX*, may be provided in *kwargs*, with the corresponding
    keys *msg_lang*, and *msg_prefix*.

    Suppose this function is invoked with:
      - *error_id*: 309 (defined as: Dimension mismatch: {} and {})
      - *args*: 2, 4
    The formatted error message will be (*<VMP>* is the validation message prefix):
      - <VMP>309: Dimension mismatch: '2' and '4'

    :param error_id: the identification of the message element
    :param args: optional non-keyworded arguments to format the error message with
    :param kwargs: optional keyworded arguments to define language and prefix
    :return: the formatted error message
    """
    from .validation_msgs import _ERR_MSGS_EN, _ERR_MSGS_PT

    msg_prefix: str = kwargs.get("msg_prefix") if "msg_prefix" in kwargs else VALIDATION_MSG_PREFIX
    msg_lang: MsgLang = kwargs.get("msg_lang") or VALIDATION_MSG_LANGUAGE
    err_msgs: dict[int, str] = _ERR_MSGS_PT if msg_lang == MsgLang.PT else _ERR_MSGS_EN

    # initialize the return variable
    result: str = ""
    if error_id != 100:
        if msg_prefix:
            result += f"{msg_prefix}{error_id}: "
        result += err_msgs.get(error_id, "")

    # apply the provided arguments
    for arg in args:
        if arg is None:
            pos1: int = result.find(": {}")
            pos2: int = result.find(" {}")
            if pos1 < 0 or pos2 < pos1:
                result = result.replace(" {}", "", 1)
            else:
                result = result.replace(": {}", "", 1)
        elif not result or (isinstance(arg, str) and arg.startswith("@")):
            result += " " + arg
        elif isinstance(arg, str) and arg.find(" ") > 0:
            result = result.replace("{}", arg, 1)
        else:
            result = result.replace("{}", f"'{arg}'", 1)

    return result
