# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

import csv
import io
import json
from typing import Iterable, List, Optional, Sequence, Tuple

from .._options.constants import DiffInfoConstants


Constants = DiffInfoConstants()


def format_info(value: float) -> str:
    """
    InfoValues are printed with a fixed number of fractional digits, so
    identical runs produce identical bytes.
    """
    text = f"{value:.{Constants.INFO_DIGITS}f}"
    # no "-0.000000"
    return text[1:] if text.startswith("-") and float(text) == 0 else text


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_nats(text: str) -> List[int]:
    """ Parse '1,4,6' (or an empty string) into a list of naturals. """
    text = text.strip().strip("{}[]")
    if not text:
        return []
    values = [int(part) for part in text.split(",")]
    if any(v < 0 for v in values):
        raise ValueError(f"Expected natural numbers, got '{text}'.")
    return values


def parse_range(text: str) -> Tuple[int, int]:
    """ Parse 'lo:hi' into a pair of naturals. """
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"Expected a range of the form lo:hi, got '{text}'.")
    return int(lo), int(hi)


def write_output(text: str, path: Optional[str] = None) -> None:
    if path is None:
        print(text, end="")
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
