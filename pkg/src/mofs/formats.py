"""Reading and writing the text and JSON formats.

Three square formats: grid (n lines of n space-separated symbols,
squares separated by blank lines), superimposed (n lines of n k-digit
binary strings, one digit per square), and JSON ({order, frequencies,
entries} per square, {"squares": [...]} for a set).

Designs: first line "V B", then exactly B lines, one block per line as
space-separated 0-based points; an empty line is an empty block.

Block arrays: first line "n k" (array order, point count), then n lines
of n cells, each cell "-" or a comma-separated list of 1-based points,
matching the way block arrays are usually displayed.

Certificates: JSON {kind, conclusion, parameters, witness}.

All functions raise FormatError on malformed input; mathematical
validity (frequencies, orthogonality) is still checked by the type
constructors, whose errors pass through untouched.
"""

import json

from .bridge import BlockArray
from .core import (
    FrequencySquare,
    FrequencyType,
    MofsSet,
    pack_superimposed,
    square_from_entries,
    unpack_superimposed,
)
from .designs import Design
from .errors import FormatError
from .maximality import Certificate


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected an integer {what}, got {token!r}") from None


# ---------------------------------------------------------------- squares


def squares_to_grid(squares) -> str:
    """Grid text for one or more squares, blank-line separated."""
    chunks = []
    for sq in squares:
        chunks.append(
            "\n".join(" ".join(str(v) for v in row) for row in sq.entries)
        )
    return "\n\n".join(chunks) + "\n"


def grid_to_squares(text: str) -> list[FrequencySquare]:
    blocks = [b for b in text.split("\n\n") if b.strip()]
    if not blocks:
        raise FormatError("no squares found in grid input")
    squares = []
    for b in blocks:
        rows = [
            tuple(_int(tok, "symbol") for tok in line.split())
            for line in b.splitlines()
            if line.strip()
        ]
        squares.append(square_from_entries(rows))
    return squares


def squares_to_superimposed(squares) -> str:
    return "\n".join(" ".join(row) for row in pack_superimposed(squares)) + "\n"


def superimposed_to_squares(text: str) -> list[FrequencySquare]:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise FormatError("no rows found in superimposed input")
    return unpack_superimposed(rows)


def square_to_dict(sq: FrequencySquare) -> dict:
    return {
        "order": sq.order,
        "frequencies": list(sq.ftype.frequencies),
        "entries": [list(row) for row in sq.entries],
    }


def square_from_dict(data) -> FrequencySquare:
    try:
        ftype = FrequencyType(data["order"], tuple(data["frequencies"]))
        entries = tuple(tuple(row) for row in data["entries"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed square object: {exc}") from None
    return FrequencySquare(ftype, entries)


def set_to_dict(s: MofsSet) -> dict:
    return {"squares": [square_to_dict(sq) for sq in s.squares]}


def squares_from_dict(data) -> list[FrequencySquare]:
    try:
        items = data["squares"]
    except (KeyError, TypeError):
        raise FormatError("expected an object with a 'squares' list") from None
    return [square_from_dict(item) for item in items]


def parse_squares(text: str, fmt: str = "auto") -> list[FrequencySquare]:
    """Dispatch on format name; 'auto' sniffs JSON, then superimposed
    (all cells same-width binary strings of width >= 2), then grid."""
    if fmt == "json":
        return squares_from_dict(_load_json(text))
    if fmt == "superimposed":
        return superimposed_to_squares(text)
    if fmt == "grid":
        return grid_to_squares(text)
    if fmt != "auto":
        raise FormatError(f"unknown square format {fmt!r}")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return squares_from_dict(_load_json(text))
    cells = [tok for line in text.splitlines() for tok in line.split()]
    if (
        cells
        and len(cells[0]) >= 2
        and all(len(c) == len(cells[0]) and set(c) <= {"0", "1"} for c in cells)
    ):
        return superimposed_to_squares(text)
    return grid_to_squares(text)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


# ---------------------------------------------------------------- designs


def design_to_text(d: Design) -> str:
    lines = [f"{d.num_points} {d.num_blocks}"]
    for block in d.blocks:
        lines.append(" ".join(str(p) for p in block))
    return "\n".join(lines) + "\n"


def design_from_text(text: str) -> Design:
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise FormatError("design input is missing the 'V B' header line")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'V B', got {lines[0]!r}")
    v = _int(head[0], "point count")
    b = _int(head[1], "block count")
    if len(lines) < 1 + b:
        raise FormatError(f"expected {b} block lines, found {len(lines) - 1}")
    blocks = []
    for line in lines[1 : 1 + b]:
        blocks.append(tuple(_int(tok, "point") for tok in line.split()))
    return Design(v, tuple(blocks))


def design_to_dict(d: Design) -> dict:
    return {"num_points": d.num_points, "blocks": [list(b) for b in d.blocks]}


def design_from_dict(data) -> Design:
    try:
        return Design(data["num_points"], tuple(tuple(b) for b in data["blocks"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed design object: {exc}") from None


# ------------------------------------------------------------ block arrays


def block_array_to_text(arr: BlockArray) -> str:
    lines = [f"{arr.order} {arr.num_points}"]
    for row in arr.cells:
        lines.append(
            " ".join(
                ",".join(str(p + 1) for p in cell) if cell else "-" for cell in row
            )
        )
    return "\n".join(lines) + "\n"


def block_array_from_text(text: str) -> BlockArray:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("block array input is empty")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n k', got {lines[0]!r}")
    n = _int(head[0], "array order")
    k = _int(head[1], "point count")
    if len(lines) != 1 + n:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}")
    cells = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != n:
            raise FormatError(f"expected {n} cells per row, got {len(toks)}")
        row = []
        for tok in toks:
            if tok == "-":
                row.append(())
            else:
                row.append(tuple(_int(p, "point") - 1 for p in tok.split(",")))
        cells.append(tuple(row))
    return BlockArray(k, tuple(cells))


# ------------------------------------------------------------ certificates


def _detuple(value):
    if isinstance(value, tuple):
        return [_detuple(v) for v in value]
    return value


def _retuple(value):
    if isinstance(value, list):
        return tuple(_retuple(v) for v in value)
    return value


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "kind": cert.kind,
        "conclusion": cert.conclusion,
        "parameters": {k: _detuple(v) for k, v in cert.parameters},
        "witness": square_to_dict(cert.witness) if cert.witness else None,
    }


def certificate_from_dict(data) -> Certificate:
    try:
        kind = data["kind"]
        conclusion = data["conclusion"]
        params = data["parameters"]
        witness = data.get("witness")
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed certificate object: {exc}") from None
    if not isinstance(params, dict):
        raise FormatError("certificate parameters must be an object")
    try:
        return Certificate(
            kind=kind,
            conclusion=conclusion,
            parameters=tuple(sorted((k, _retuple(v)) for k, v in params.items())),
            witness=square_from_dict(witness) if witness else None,
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2) + "\n"


def certificate_from_json(text: str) -> Certificate:
    return certificate_from_dict(_load_json(text))
