"""
Complex Input and Report Output
===============================

Parses the two complex formats and writes JSON documents atomically.

JSON:        {"m": 4, "facets": [[1, 2, 3], [3, 4]]}
Plain text:  first significant line "m", then one facet per line
             ("1 2 3"); blank lines and "#" comments are ignored.

Malformed input raises ComplexFormatError with the source name, line and
column of the first problem.
"""

import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO, Union

try:
    from .complex_core import SimplicialComplex, new_from_facets, vertices_of
    from .errors import ComplexFormatError
except ImportError:
    from complex_core import SimplicialComplex, new_from_facets, vertices_of
    from errors import ComplexFormatError

PathLike = Union[str, Path]


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def complex_from_document(document: Any, source: str = "<input>") -> SimplicialComplex:
    """Validate a decoded JSON document and build the complex.

    Raises:
        ComplexFormatError: With a JSON path such as ``facets[2][1]``
    """
    if not isinstance(document, dict):
        raise ComplexFormatError("expected an object with 'm' and 'facets'", source, path="$")
    if "m" not in document:
        raise ComplexFormatError("missing key 'm'", source, path="$")
    if "facets" not in document:
        raise ComplexFormatError("missing key 'facets'", source, path="$")
    m = document["m"]
    if not _is_int(m) or m < 1:
        raise ComplexFormatError(f"'m' must be a positive integer, got {m!r}", source, path="m")
    facets = document["facets"]
    if not isinstance(facets, list):
        raise ComplexFormatError("'facets' must be a list of vertex lists", source, path="facets")

    for i, facet in enumerate(facets):
        if not isinstance(facet, list):
            raise ComplexFormatError("facet must be a list of vertices", source, path=f"facets[{i}]")
        if not facet:
            raise ComplexFormatError("facet is empty", source, path=f"facets[{i}]")
        for j, v in enumerate(facet):
            if not _is_int(v) or v < 1 or v > m:
                raise ComplexFormatError(f"vertex {v!r} outside 1..{m}", source, path=f"facets[{i}][{j}]")
    return new_from_facets(m, facets)


def parse_complex_json(text: str, source: str = "<input>") -> SimplicialComplex:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexFormatError(e.msg, source, line=e.lineno, column=e.colno) from None
    return complex_from_document(document, source)


def parse_complex_text(text: str, source: str = "<input>") -> SimplicialComplex:
    """Parse the plain-text format.

    Raises:
        ComplexFormatError: On a missing or non-integer header, or a bad vertex
    """
    m: Optional[int] = None
    facets: List[List[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = []
        column = 0
        for token in line.split():
            column = line.index(token, column) + 1
            try:
                value = int(token)
            except ValueError:
                raise ComplexFormatError(f"expected an integer, got {token!r}", source,
                                         line=line_no, column=column) from None
            tokens.append((value, column))
            column += len(token) - 1

        if m is None:
            if len(tokens) != 1:
                raise ComplexFormatError("first line must hold the vertex count m alone", source,
                                         line=line_no, column=tokens[1][1] if len(tokens) > 1 else 1)
            m, column = tokens[0]
            if m < 1:
                raise ComplexFormatError(f"m must be positive, got {m}", source, line=line_no, column=column)
            continue

        for value, column in tokens:
            if value < 1 or value > m:
                raise ComplexFormatError(f"vertex {value} outside 1..{m}", source,
                                         line=line_no, column=column)
        facets.append([value for value, _ in tokens])

    if m is None:
        raise ComplexFormatError("input holds no vertex count", source, line=1, column=1)
    return new_from_facets(m, facets)


def parse_complex(text: str, source: str = "<input>") -> SimplicialComplex:
    """Sniff the format: JSON if the first non-blank character is '{'."""
    if text.lstrip().startswith("{"):
        return parse_complex_json(text, source)
    return parse_complex_text(text, source)


def load_complex(path: PathLike, stdin: Optional[TextIO] = None) -> SimplicialComplex:
    """Read a complex from ``path``, or from standard input when ``path`` is '-'."""
    if str(path) == "-":
        stream = stdin if stdin is not None else sys.stdin
        return parse_complex(stream.read(), "<stdin>")
    with open(path, "r", encoding="utf-8") as f:
        return parse_complex(f.read(), str(path))


def complex_document(K: SimplicialComplex) -> Dict[str, Any]:
    return {"m": K.m, "facets": K.facet_lists()}


def dump_complex_json(K: SimplicialComplex) -> str:
    return json.dumps(complex_document(K), sort_keys=True) + "\n"


def dump_complex_text(K: SimplicialComplex) -> str:
    lines = [str(K.m)] + [" ".join(str(v) for v in vertices_of(f)) for f in K.facets]
    return "\n".join(lines) + "\n"


def normalized_hash(K: SimplicialComplex) -> str:
    """sha256 of the canonical facet list, independent of input formatting."""
    canonical = json.dumps(complex_document(K), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def format_json(document: Any) -> str:
    """Pinned JSON layout so repeated runs produce identical bytes."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def save_json(path: PathLike, document: Any) -> None:
    """Write ``document`` as JSON through a temp file and an atomic rename.

    Raises:
        OSError: If the directory cannot be written
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    temp_fd, temp_path = tempfile.mkstemp(suffix=".json", dir=target.parent)
    try:
        with os.fdopen(temp_fd, "w", encoding="utf-8") as f:
            f.write(format_json(document))
        os.replace(temp_path, target)
    except Exception:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise
