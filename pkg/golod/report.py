"""
Analysis Reports
================

The JSON document every CLI subcommand prints. Sections are kept in insertion
order and timings are only attached on request, so two runs with the same
input and flags print identical bytes.
"""

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

try:
    from .complex_core import SimplicialComplex, f_vector
    from .complex_io import format_json, normalized_hash
except ImportError:
    from complex_core import SimplicialComplex, f_vector
    from complex_io import format_json, normalized_hash

SCHEMA_VERSION = "1.0"


def describe_input(K: SimplicialComplex, source: str) -> Dict[str, Any]:
    return {
        "source": source,
        "m": K.m,
        "dim": K.dim,
        "facet_count": len(K.facets),
        "f_vector": list(f_vector(K)),
        "sha256": normalized_hash(K),
    }


@dataclass
class AnalysisReport:
    """Results of one CLI invocation.

    Attributes:
        command: Subcommand name
        input: Input identification, or None for generated complexes
        sections: Named result blocks in the order they were computed
        text_blocks: Pre-rendered text for sections with a table layout
        timing: Wall-clock seconds per section, only with ``--timing``
    """

    command: str
    input: Optional[Dict[str, Any]] = None
    sections: Dict[str, Any] = field(default_factory=dict)
    text_blocks: Dict[str, str] = field(default_factory=dict)
    timing: Optional[Dict[str, float]] = None
    exit_status: int = 0

    def add(self, name: str, value: Any, text: Optional[str] = None) -> None:
        self.sections[name] = value
        if text is not None:
            self.text_blocks[name] = text

    @contextmanager
    def timed(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.timing is not None:
                self.timing[name] = round(time.perf_counter() - start, 6)

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"schema_version": SCHEMA_VERSION, "command": self.command}
        if self.input is not None:
            document["input"] = self.input
        document["sections"] = self.sections
        if self.timing is not None:
            document["timing"] = self.timing
        return document

    def render_json(self) -> str:
        return format_json(self.to_json())

    def render_text(self) -> str:
        lines = [f"golod {self.command} (report schema {SCHEMA_VERSION})"]
        if self.input is not None:
            lines.append(f"input: {self.input['source']}  m={self.input['m']}  dim={self.input['dim']}  "
                         f"sha256={self.input['sha256'][:16]}")
        for name, value in self.sections.items():
            lines.append("")
            lines.append(f"== {name} ==")
            if name in self.text_blocks:
                lines.append(self.text_blocks[name])
            else:
                lines.extend(_render_value(value, 0))
        if self.timing:
            lines.append("")
            lines.append("== timing ==")
            lines.extend(f"{name}: {seconds:.3f}s" for name, seconds in self.timing.items())
        return "\n".join(lines) + "\n"


def _render_value(value: Any, depth: int) -> List[str]:
    pad = "  " * depth
    if isinstance(value, dict):
        out = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat_list(item):
                out.append(f"{pad}{key}:")
                out.extend(_render_value(item, depth + 1))
            else:
                out.append(f"{pad}{key}: {_scalar(item)}")
        return out
    if isinstance(value, list) and not _is_flat_list(value):
        out = []
        for item in value:
            rendered = _render_value(item, depth + 1)
            if rendered:
                out.append(f"{pad}- {rendered[0].strip()}")
                out.extend(rendered[1:])
        return out
    return [f"{pad}{_scalar(value)}"]


def _is_flat_list(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(x, (dict, list)) or _is_flat_list(x) for x in value)


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)
