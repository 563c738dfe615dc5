#!/usr/bin/env python3
"""Survey the cyclic structures inside a parameter box.

For each (period, shift) pair this prints every block structure up to the
bound, its diagram, whether the layout is degenerate, and the level
sequence of its flip chain, then cross-checks the minimal chain length.

Usage: python scripts/enumerate_cyclic.py [--period P] [--shift K] [--bound B]
"""

import argparse

from dresschain.maya import (
    build_diagram,
    enumerate_structures,
    minimal_flip_chain,
    static_flip_chain,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--period", type=int, default=5)
    parser.add_argument("--shift", type=int, default=3)
    parser.add_argument("--bound", type=int, default=2)
    args = parser.parse_args()

    structures = enumerate_structures(args.period, args.shift, args.bound)
    degenerate_count = 0
    for cs in structures:
        diagram, degenerate = build_diagram(cs)
        chain = static_flip_chain(cs)
        minimal = minimal_flip_chain(diagram, args.shift)
        tag = ""
        if degenerate:
            degenerate_count += 1
            tag = "  [degenerate: minimal period is %d]" % minimal.size
        print(
            "okamoto=%-12s blocks=%-18s diagram=%-20s chain=%s%s"
            % (
                list(cs.okamoto),
                [list(b) for b in cs.second_type],
                list(diagram.entries),
                list(chain.levels()),
                tag,
            )
        )
    print(
        "\n%d structures (%d degenerate) for period %d, shift %d, bound %d"
        % (len(structures), degenerate_count, args.period, args.shift, args.bound)
    )


if __name__ == "__main__":
    main()
