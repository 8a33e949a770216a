# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Versioned data fixtures shipped with the package.
"""

import json
from importlib import resources
from typing import Dict, List

from .._objects.bitvector import CharString
from .._objects.codebook import Codebook
from .._objects.sbxor import SbxorInstance


FIXTURES = ("scalefree22", "xor3")


def load_raw(name: str) -> Dict:
    if name not in FIXTURES:
        raise ValueError(f"Unknown fixture '{name}'; available: {', '.join(FIXTURES)}.")
    text = resources.files(__package__).joinpath("fixtures").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def scalefree_codebook() -> Codebook:
    raw = load_raw("scalefree22")
    return Codebook([int(v) for v in raw["codebook"]])


def scalefree_charstring() -> CharString:
    return CharString.from_string(load_raw("scalefree22")["charstring"])


def xor_instance() -> SbxorInstance:
    return SbxorInstance.from_json(load_raw("xor3"))


def fixture_names() -> List[str]:
    return list(FIXTURES)
