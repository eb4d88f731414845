"""
Output helpers: atomic file writes and TSV score formatting.
"""

import os
import sys
import tempfile
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO, Union

import orjson


def format_score(value: float) -> str:
    """Render a double with 17 significant digits (round-trippable)."""
    return format(float(value), ".17g")


def score_lines(scores: Sequence[float], header: Sequence[str] = ()) -> Iterable[str]:
    """Yield '#' header lines then one ``node<TAB>score`` line per node."""
    for line in header:
        yield f"# {line}\n"
    for node, value in enumerate(scores):
        yield f"{node}\t{format_score(value)}\n"


def atomic_write(path: Union[str, Path], lines: Iterable[str]) -> None:
    """
    Write text to ``path`` through a temporary sibling file and rename it
    into place, so a failed run never leaves a partial file behind.
    """
    target = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(lines)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def emit(lines: Iterable[str], output: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Send lines to ``output`` (atomically) or to standard output when it is None or '-'."""
    if output is None or output == "-":
        # materialize first so an exception never leaves half a table on stdout
        text = "".join(lines)
        (stream or sys.stdout).write(text)
        return
    atomic_write(output, list(lines))


def dumps_json(payload: object) -> str:
    """Deterministic JSON rendering (sorted keys, trailing newline)."""
    return orjson.dumps(
        payload, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_NON_STR_KEYS
    ).decode("utf-8") + "\n"
