#!/usr/bin/env python3
"""
generate_random_complexes.py - Generate seeded random complexes for testing
==========================================================================

Writes reproducible random simplicial complexes (and, optionally, the named
corpus) as complex JSON files, one per complex, for feeding the golod CLI or
for growing the test fixtures. The same seed always produces the same files.

Usage:
  python3 generate_random_complexes.py [options]

Options:
  --count N        Number of random complexes (default: 20)
  --max-m N        Largest vertex count (default: 8)
  --max-facets N   Faces generated per complex (default: 6)
  --seed N         Random seed (default: 2024)
  --outdir DIR     Output directory (default: ../corpus)
  --named          Also write every named corpus complex

Examples:
  python3 generate_random_complexes.py --count 50 --max-m 10
  python3 generate_random_complexes.py --named --outdir /tmp/corpus
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "golod"))

from complex_io import complex_document, save_json  # noqa: E402
from corpus import NAMED, random_complex  # noqa: E402


def generate_random_corpus(count, max_m, max_facets, seed):
    """Build ``count`` random complexes keyed by file stem.

    Args:
        count (int): Number of complexes
        max_m (int): Largest vertex count; each m is drawn from 3..max_m
        max_facets (int): Upper bound on generated faces per complex
        seed (int): Random seed

    Returns:
        dict: File stem -> SimplicialComplex
    """
    rng = random.Random(seed)
    complexes = {}
    for index in range(count):
        m = rng.randint(3, max_m)
        complexes[f"random_{seed}_{index:03d}"] = random_complex(m, rng, max_facets=max_facets)
    return complexes


def main():
    """Main entry point with argument parsing."""
    parser = argparse.ArgumentParser(
        description="Generate seeded random simplicial complexes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Twenty small complexes for a quick oracle sweep
  python3 generate_random_complexes.py --count 20

  # Larger complexes plus the named corpus
  python3 generate_random_complexes.py --count 50 --max-m 10 --named
        """
    )

    parser.add_argument('--count', type=int, default=20,
                        help='Number of random complexes (default: 20)')
    parser.add_argument('--max-m', type=int, default=8,
                        help='Largest vertex count (default: 8)')
    parser.add_argument('--max-facets', type=int, default=6,
                        help='Faces generated per complex (default: 6)')
    parser.add_argument('--seed', type=int, default=2024,
                        help='Random seed (default: 2024)')
    parser.add_argument('--outdir', type=str, default='../corpus',
                        help='Output directory (default: ../corpus)')
    parser.add_argument('--named', action='store_true',
                        help='Also write every named corpus complex')

    args = parser.parse_args()

    if args.max_m < 3 or args.count < 0 or args.max_facets < 1:
        parser.error("need --max-m >= 3, --count >= 0 and --max-facets >= 1")

    output_dir = Path(args.outdir)
    if not output_dir.is_absolute():
        # Relative to script directory
        output_dir = Path(__file__).parent / args.outdir

    print("Random Complex Generator")
    print("=" * 40)

    complexes = generate_random_corpus(args.count, args.max_m, args.max_facets, args.seed)
    if args.named:
        complexes.update({name: build() for name, build in NAMED.items()})

    try:
        for stem, K in complexes.items():
            save_json(output_dir / f"{stem}.json", complex_document(K))
    except OSError as e:
        print(f"Error writing complexes: {e}")
        return 1

    print(f"Generated {len(complexes)} complexes")
    print(f"Saved to: {output_dir.absolute()}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
