"""
The *qforms* command line: runs a script, a corpus of scripts, or a single theorem suite.

Reports are JSON lines, one per statement, plus a final summary object. The exit code is 0 when
no statement failed and no suite reported a failing verdict, 1 otherwise, and 2 on unusable input.
"""
import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Final

from .config_pomes import QformsParam, qforms_get, qforms_setup
from .error_pomes import QformsError
from .report_pomes import report_lines, report_summary, report_write
from .script_pomes import script_execute

# the required first line of a corpus file, carrying the corpus schema version
CORPUS_HEADER: Final[str] = "# qforms-corpus 1"


def parse_args(argv: list[str] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="qforms",
                                     description="Decide isometry, similarity and Witt equivalence of "
                                                 "quadratic and bilinear forms in characteristic 2.")
    parser.add_argument("script",
                        nargs="?",
                        type=Path,
                        help="script file to run (default: read standard input)")
    parser.add_argument("--json",
                        type=Path,
                        default=None,
                        help="write the JSON-lines report to this path instead of standard output")
    parser.add_argument("--seed",
                        type=int,
                        default=None,
                        help="seed for certificates and suites")
    parser.add_argument("--budget",
                        type=int,
                        default=None,
                        help="coefficient-degree budget for bounded searches")
    parser.add_argument("--p",
                        type=int,
                        choices=[2, 3, 5, 7],
                        default=None,
                        help="characteristic for suites whose mode allows it")
    parser.add_argument("--corpus",
                        type=Path,
                        default=None,
                        help="run every *.qf file in this directory")
    parser.add_argument("--suite",
                        default=None,
                        help="run this theorem suite instead of a script")
    parser.add_argument("--seeds",
                        type=int,
                        default=None,
                        help="number of seeds for --suite")
    parser.add_argument("--mode",
                        default=None,
                        help="mode for --suite")
    parser.add_argument("--degrees",
                        default=None,
                        help="extension degrees for --suite, as a range a..b")
    return parser.parse_args(argv)


def _suite_script(args: argparse.Namespace) -> str:
    options: list[str] = [f"--{key} {value}" for key, value in (("seeds", args.seeds),
                                                               ("mode", args.mode),
                                                               ("degrees", args.degrees))
                          if value is not None]
    return f"check {' '.join([args.suite, *options])};\n"


def _corpus(directory: Path,
            errors: list[str]) -> list[tuple[Path, str]]:
    result: list[tuple[Path, str]] = []
    for path in sorted(directory.glob("*.qf")):
        text: str = path.read_text(encoding="utf-8")
        if text.splitlines()[:1] != [CORPUS_HEADER]:
            errors.append(f"{path}: first line must be '{CORPUS_HEADER}'")
        else:
            result.append((path, text))
    return result


def main(argv: list[str] = None) -> int:
    args: argparse.Namespace = parse_args(argv)
    if args.p is not None:
        qforms_setup(characteristic=args.p)
    logging.basicConfig(level=qforms_get(QformsParam.LOG_LEVEL),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logger: logging.Logger = logging.getLogger("pypomes_qforms")

    # collect the sources to run
    sources: list[tuple[str, str]] = []
    usage: list[str] = []
    if args.suite:
        sources.append(("--suite", _suite_script(args)))
    elif args.corpus:
        if not args.corpus.is_dir():
            usage.append(f"corpus path is not a directory: {args.corpus}")
        else:
            sources.extend((str(p), text) for p, text in _corpus(args.corpus, usage))
    elif args.script:
        if not args.script.is_file():
            usage.append(f"script file does not exist: {args.script}")
        else:
            sources.append((str(args.script), args.script.read_text(encoding="utf-8")))
    else:
        sources.append(("<stdin>", sys.stdin.read()))
    if usage:
        for err in usage:
            print(f"[qforms] error: {err}", file=sys.stderr)
        return 2

    started: float = time.perf_counter()
    errors: list[str] = []
    records: list[dict[str, Any]] = []
    for name, text in sources:
        try:
            run: list[dict[str, Any]] = script_execute(text=text,
                                                       budget=args.budget,
                                                       seed=args.seed,
                                                       errors=errors,
                                                       logger=logger)
        except QformsError as e:
            errors.append(str(e))
            run = [{"error": str(e)}]
        if len(sources) > 1:
            for r in run:
                r["source"] = name
        records.extend(run)
    wall_time: float = time.perf_counter() - started

    if args.json:
        report_write(records=records,
                     target=args.json,
                     wall_time=wall_time)
        summary: dict[str, Any] = report_summary(records=records,
                                                 wall_time=wall_time)
        print(f"[qforms] {summary['statements']} statements, {summary['errors']} errors, "
              f"{summary['failed_suites']} failed suites; report in {args.json}")
    else:
        print("\n".join(report_lines(records=records,
                                     wall_time=wall_time)))
    for err in errors:
        print(f"[qforms] {err}", file=sys.stderr)

    failed: bool = any("error" in r or (isinstance(r.get("result"), dict) and r["result"].get("passed") is False)
                       for r in records)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
