"""
Test complex parsing, error positions and atomic JSON output
"""

import io
import json
import sys
from pathlib import Path

import pytest

# Add golod module to path
sys.path.insert(0, str(Path(__file__).parent.parent / "golod"))

from complex_core import new_from_facets
from complex_io import (
    complex_from_document,
    dump_complex_json,
    dump_complex_text,
    format_json,
    load_complex,
    normalized_hash,
    parse_complex,
    parse_complex_text,
    save_json,
)
from corpus import cycle_complex, triangle_with_tail, rp2_six_vertex, simplex
from errors import ComplexFormatError
from moore_complexes import moore_complex

FIXTURES = Path(__file__).parent / "fixtures"


class TestLoadComplex:
    """Test reading both input formats."""

    def test_json_fixtures(self):
        assert load_complex(FIXTURES / "triangle_with_tail.json") == triangle_with_tail()
        assert load_complex(FIXTURES / "rp2_six_vertex.json") == rp2_six_vertex()
        assert load_complex(FIXTURES / "moore_2.json") == moore_complex(2)
        assert load_complex(FIXTURES / "triangle_simplex.json") == simplex(3)

    def test_text_fixture_with_comments(self):
        assert load_complex(FIXTURES / "square.txt") == cycle_complex(4)

    def test_stdin(self):
        K = load_complex("-", stdin=io.StringIO('{"m": 4, "facets": [[3, 4], [1, 2, 3]]}'))
        assert K == triangle_with_tail()

    def test_missing_file(self):
        with pytest.raises(OSError):
            load_complex(FIXTURES / "no_such_file.json")

    def test_extra_keys_are_ignored(self):
        K = complex_from_document({"m": 2, "facets": [[1, 2]], "names": {"1": "a"}})
        assert K == simplex(2)

    def test_empty_facet_list_gives_ghosts(self):
        K = parse_complex('{"m": 2, "facets": []}')
        assert K.facets == ()
        assert K.ghost_mask == 0b11


class TestMalformedInput:
    """Test that errors point at the first problem."""

    def test_out_of_range_vertex(self):
        with pytest.raises(ComplexFormatError) as info:
            load_complex(FIXTURES / "malformed_vertex.json")
        assert info.value.path == "facets[1][1]"
        assert "malformed_vertex.json" in str(info.value)
        assert "vertex 4 outside 1..3" in str(info.value)

    def test_json_syntax(self):
        with pytest.raises(ComplexFormatError) as info:
            load_complex(FIXTURES / "malformed_syntax.json")
        assert info.value.line == 4
        assert info.value.column == 1

    def test_text_header(self):
        with pytest.raises(ComplexFormatError) as info:
            load_complex(FIXTURES / "malformed_header.txt")
        assert (info.value.line, info.value.column) == (2, 3)
        assert str(info.value).startswith(str(FIXTURES / "malformed_header.txt") + ":2:3")

    @pytest.mark.parametrize("text,line,column", [
        ("3\n1 x\n", 2, 3),
        ("3\n1 2\n  2 9\n", 3, 5),
        ("# only comments\n\n", 1, 1),
        ("0\n", 1, 1),
    ])
    def test_text_positions(self, text, line, column):
        with pytest.raises(ComplexFormatError) as info:
            parse_complex_text(text)
        assert (info.value.line, info.value.column) == (line, column)

    @pytest.mark.parametrize("document,path", [
        ([], "$"),
        ({"facets": []}, "$"),
        ({"m": 3}, "$"),
        ({"m": "3", "facets": []}, "m"),
        ({"m": True, "facets": []}, "m"),
        ({"m": 3, "facets": {}}, "facets"),
        ({"m": 3, "facets": [[1], 2]}, "facets[1]"),
        ({"m": 3, "facets": [[1], []]}, "facets[1]"),
        ({"m": 3, "facets": [[1, 2.0]]}, "facets[0][1]"),
    ])
    def test_document_paths(self, document, path):
        with pytest.raises(ComplexFormatError) as info:
            complex_from_document(document)
        assert info.value.path == path

    def test_format_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            parse_complex("not a complex")


class TestDumpAndHash:
    """Test canonical output and hashing."""

    def test_dumps(self):
        assert dump_complex_json(triangle_with_tail()) == '{"facets": [[1, 2, 3], [3, 4]], "m": 4}\n'
        assert dump_complex_text(triangle_with_tail()) == "4\n1 2 3\n3 4\n"

    def test_text_dump_parses_back(self):
        K = moore_complex(3)
        assert parse_complex(dump_complex_text(K)) == K

    def test_hash_ignores_presentation(self):
        a = new_from_facets(4, [[1, 2, 3], [3, 4]])
        b = new_from_facets(4, [[4, 3], [3, 1, 2], [1, 2]])
        assert normalized_hash(a) == normalized_hash(b)
        assert normalized_hash(a) != normalized_hash(simplex(4))
        assert len(normalized_hash(a)) == 64

    def test_format_json_is_stable(self):
        document = {"b": [1, 2], "a": "Δ"}
        assert format_json(document) == format_json(json.loads(format_json(document)))
        assert "Δ" in format_json(document)


class TestSaveJson:
    """Test atomic report writes."""

    def test_writes_document(self, tmp_path):
        target = tmp_path / "reports" / "out.json"
        save_json(target, {"status": "ok"})
        assert json.loads(target.read_text(encoding="utf-8")) == {"status": "ok"}
        assert [p.name for p in target.parent.iterdir()] == ["out.json"]

    def test_replaces_existing_file(self, tmp_path):
        target = tmp_path / "out.json"
        target.write_text("old", encoding="utf-8")
        save_json(target, [1, 2])
        assert json.loads(target.read_text(encoding="utf-8")) == [1, 2]

    def test_failed_write_leaves_no_temp_file(self, tmp_path):
        target = tmp_path / "out.json"
        with pytest.raises(TypeError):
            save_json(target, {"value": object()})
        assert list(tmp_path.iterdir()) == []


if __name__ == "__main__":
    pytest.main([__file__])
