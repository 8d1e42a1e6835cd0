import os
from enum import IntEnum, StrEnum
from typing import Any, Final

# the prefix for the names of the environment variables
APP_PREFIX: Final[str] = os.getenv(key="PYPOMES_APP_PREFIX",
                                   default="")


def env_get_str(key: str,
                values: list[str] = None,
                ignore_case: bool = False,
                def_value: str = None) -> str | None:
    """
    Read the text setting *key* from the environment.

    A value not among *values*, when these are given, is discarded in favor of *def_value*.

    :param key: the environment variable
    :param values: optional list of accepted values
    :param ignore_case: whether *values* are matched regardless of capitalization
    :param def_value: the value for a missing or rejected setting
    :return: the setting, or *def_value*
    """
    # initialize the return variable
    result: str | None = os.getenv(key)

    if result is None:
        result = def_value
    elif values and (result.lower() if ignore_case else result) not in \
            ([v.lower() for v in values] if ignore_case else values):
        result = def_value

    return result


def env_get_int(key: str,
                values: list[int] = None,
                min_value: int = None,
                def_value: int = None) -> int | None:
    """
    Read the integer setting *key* from the environment.

    Text that is not an integer, a value not among *values*, and a value below *min_value* are all
    discarded in favor of *def_value*.

    :param key: the environment variable
    :param values: optional list of accepted values
    :param min_value: optional lower bound
    :param def_value: the value for a missing or rejected setting
    :return: the setting, or *def_value*
    """
    # initialize the return variable
    result: int | None = def_value

    text: str | None = os.getenv(key)
    if text is not None and text.strip().lstrip("-").isdigit():
        value: int = int(text)
        if (not values or value in values) and (min_value is None or value >= min_value):
            result = value

    return result


def env_get_enum(key: str,
                 enum_class: type[IntEnum | StrEnum],
                 def_value: IntEnum | StrEnum = None) -> Any:
    """
    Read the setting *key* from the environment as a member of *enum_class*.

    Either the name or the value of the member is accepted, regardless of capitalization.

    :param key: the environment variable
    :param enum_class: the *IntEnum* or *StrEnum* subclass
    :param def_value: the value for a missing or unknown setting
    :return: the member, or *def_value*
    """
    text: str = (os.getenv(key) or "").lower()
    return next((e for e in enum_class if text in (e.name.lower(), str(e.value).lower())),
                def_value) if text else def_value
