import json
from datetime import datetime
from pathlib import Path
from typing import Any, Final, TextIO
from zoneinfo import ZoneInfo

from .env_pomes import APP_PREFIX, env_get_str
from .obj_pomes import obj_to_dict

# HAZARD: requires 'tzdata' package installed to work
TZ_LOCAL: Final[ZoneInfo] = ZoneInfo(key=env_get_str(key=f"{APP_PREFIX}_TZ_LOCAL",
                                                     def_value="UTC"))

# version of the report layout
REPORT_SCHEMA: Final[int] = 1


def report_summary(records: list[dict[str, Any]],
                   wall_time: float = None) -> dict[str, Any]:
    """
    Summarize the report *records*: statements run, errors, and suites failed.

    :param records: the records of a script run
    :param wall_time: the elapsed time, in seconds
    :return: the summary object
    """
    failed: int = sum(1 for r in records
                      if isinstance(r.get("result"), dict) and r["result"].get("passed") is False)
    result: dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "statements": len(records),
        "errors": sum(1 for r in records if "error" in r),
        "failed_suites": failed,
        "generated": datetime.now(tz=TZ_LOCAL).isoformat()
    }
    if wall_time is not None:
        result["wall_time"] = round(wall_time, 3)

    return result


def report_lines(records: list[dict[str, Any]],
                 wall_time: float = None) -> list[str]:
    """
    Render *records* as JSON lines, one per statement, followed by the summary object.

    Keys are sorted, so that runs with the same seed render identically, apart from the summary times.
    """
    result: list[str] = [json.dumps(obj_to_dict(obj=r),
                                    sort_keys=True,
                                    ensure_ascii=False) for r in records]
    result.append(json.dumps({"summary": report_summary(records=records,
                                                        wall_time=wall_time)},
                             sort_keys=True,
                             ensure_ascii=False))
    return result


def report_write(records: list[dict[str, Any]],
                 target: Path | str | TextIO,
                 wall_time: float = None) -> None:
    """
    Write *records* as JSON lines to *target*, a file path or an open text stream.

    :param records: the records of a script run
    :param target: where to write
    :param wall_time: the elapsed time, in seconds
    """
    text: str = "\n".join(report_lines(records=records,
                                       wall_time=wall_time)) + "\n"
    if isinstance(target, Path | str):
        Path(target).write_text(data=text,
                                encoding="utf-8")
    else:
        target.write(text)
