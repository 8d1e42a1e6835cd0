import traceback
from enum import Enum
from pathlib import Path
from types import TracebackType
from typing import Any


def obj_to_dict(obj: Any,
                canonical: bool = False) -> dict[str, Any] | list[Any] | Any:
    """
    Convert the generic object *obj* to a JSON-ready structure.

    The conversion is done recursively. Field elements become their text form, or their canonical
    *num/den* (or *coords*) shape if *canonical* is set. Objects exposing *to_dict()* are converted
    through it; other objects are converted from their public, non-callable attributes.

    :param obj: the object to be converted
    :param canonical: whether to emit field elements in canonical shape
    :return: the structure obtained from *obj*
    """
    # imported here, as the algebra modules import this one
    from .field_pomes import FieldElement, FieldTower

    # declare the return variable
    result: dict[str, Any] | list[Any] | Any

    if isinstance(obj, FieldElement):
        result = obj.to_dict() if canonical else str(obj)
    elif isinstance(obj, FieldTower):
        result = obj.key
    elif isinstance(obj, Enum):
        result = obj.value
    elif isinstance(obj, dict):
        result = {str(k): obj_to_dict(obj=v,
                                      canonical=canonical) for k, v in obj.items()}
    elif isinstance(obj, list | tuple | set | frozenset):
        result = [obj_to_dict(obj=item,
                              canonical=canonical) for item in obj]
    elif hasattr(obj, "to_dict"):
        result = obj_to_dict(obj=obj.to_dict(),
                             canonical=canonical)
    elif hasattr(obj, "__dict__") or not isinstance(obj, str | int | float | bool | type(None)):
        result = {}
        for attr in dir(obj):
            if not attr.startswith("_"):
                value: Any = getattr(obj,
                                     attr,
                                     None)
                if value is not None and not callable(value):
                    result[attr] = obj_to_dict(obj=value,
                                               canonical=canonical)
    else:
        result = obj

    return result


def exc_format(exc: Exception,
               exc_info: tuple[type[BaseException], BaseException, TracebackType]) -> str:
    """
    Format an unexpected exception raised while running a statement, a suite instance or a check.

    The format is *<module>, <line>, <exception class> - <text>*, where module and line are those of
    the innermost frame, that is, where the exception was raised.

    :param exc: the exception raised
    :param exc_info: the information returned by *sys.exc_info()*
    :return: the formatted message
    """
    frames: traceback.StackSummary = traceback.extract_tb(exc_info[2])
    where: str = f"{Path(frames[-1].filename).name}, {frames[-1].lineno}" if frames else "<unknown module>, 0"
    return f"{where}, {type(exc).__module__}.{type(exc).__qualname__} - {exc}"
