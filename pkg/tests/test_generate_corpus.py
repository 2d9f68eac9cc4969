"""
Test the seeded random complex generator script
"""

import json
import sys
from pathlib import Path

import pytest

# Add scripts and golod modules to path
sys.path.insert(0, str(Path(__file__).parent.parent / "scripts"))
sys.path.insert(0, str(Path(__file__).parent.parent / "golod"))

from complex_io import load_complex
from generate_random_complexes import generate_random_corpus, main


class TestGenerateRandomCorpus:
    """Test reproducibility and the written files."""

    def test_same_seed_same_complexes(self):
        first = generate_random_corpus(5, 6, 4, seed=7)
        second = generate_random_corpus(5, 6, 4, seed=7)
        assert first == second
        assert list(first) == [f"random_7_{i:03d}" for i in range(5)]
        assert all(3 <= K.m <= 6 for K in first.values())

    def test_main_writes_loadable_files(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setattr(sys, "argv", [
            "generate_random_complexes.py", "--count", "3", "--seed", "11",
            "--outdir", str(tmp_path), "--named",
        ])
        assert main() == 0
        assert "Generated" in capsys.readouterr().out

        expected = generate_random_corpus(3, 8, 6, seed=11)
        for stem, K in expected.items():
            assert load_complex(tmp_path / f"{stem}.json") == K
        with open(tmp_path / "square.json") as f:
            assert json.load(f) == {"m": 4, "facets": [[1, 2], [2, 3], [1, 4], [3, 4]]}

    def test_rejects_small_vertex_counts(self, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["generate_random_complexes.py", "--max-m", "2"])
        with pytest.raises(SystemExit):
            main()


if __name__ == "__main__":
    pytest.main([__file__])
