"""Reading and writing code files.

A code file is a JSON document with fields ``ring`` (spec string), ``n``,
and ``generators`` (rows of canonical element encodings: plain ints for
integer residues, coefficient lists otherwise).
"""

from __future__ import annotations

import json
from pathlib import Path

from .linalg import Code
from .rings import ring


def code_to_dict(code: Code) -> dict:
    r = code.ring
    return {
        "ring": r.spec(),
        "n": code.n,
        "generators": [
            [r.coeffs(x) for x in row] for row in code.generator_matrix().rows
        ],
    }


def code_from_dict(doc: dict) -> Code:
    r = ring(doc["ring"])
    n = int(doc["n"])
    rows = [[r.parse_element(x) for x in row] for row in doc.get("generators", [])]
    return Code(r, n, rows)


def save_code(path, code: Code) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code), indent=1) + "\n")


def load_code(path) -> Code:
    return code_from_dict(json.loads(Path(path).read_text()))
