#!/usr/bin/env python3
"""Regenerate the JSON fixture library from the built-in constructors."""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from germkit import fixtures
from germkit.formats import algebra_to_dict, render_json

ROOT = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def main() -> None:
    ROOT.mkdir(exist_ok=True)
    files = {
        "abelian3.json": algebra_to_dict(fixtures.abelian(3), "abelian3"),
        "h3.json": algebra_to_dict(fixtures.heisenberg3(), "h3"),
        "h5.json": algebra_to_dict(fixtures.heisenberg5(), "h5"),
        "filiform4.json": algebra_to_dict(fixtures.filiform4(), "filiform4"),
        "q_plus_h3.json": algebra_to_dict(
            fixtures.q_plus_heisenberg3(), "q_plus_h3"
        ),
        "solv_heisenberg.json": algebra_to_dict(
            fixtures.solvable_heisenberg(),
            "solv_heisenberg",
            nilradical=fixtures.solvable_heisenberg_input().nilradical,
            complement=fixtures.solvable_heisenberg_input().complement,
            characters=fixtures.solvable_heisenberg_characters(),
        ),
        "sol3.json": algebra_to_dict(
            fixtures.sol3(),
            "sol3",
            nilradical=fixtures.sol3_input().nilradical,
            complement=fixtures.sol3_input().complement,
        ),
        "sl2.json": algebra_to_dict(fixtures.sl2(), "sl2"),
        "gl2.json": algebra_to_dict(fixtures.gl(2), "gl2"),
        "non_unimodular2.json": {
            "name": "non_unimodular2",
            "dim": 2,
            "basis": ["T", "X"],
            "field": "Q",
            "brackets": [
                {
                    "left": "T",
                    "right": "X",
                    "result": [{"coef": "1", "basis": "X"}],
                }
            ],
        },
        "diag_weight_characters.json": {
            "characters": {
                "rank": 1,
                "exponents": [[0], [1], [-1], [0]],
            }
        },
    }
    for name, data in files.items():
        path = ROOT / name
        path.write_text(render_json(data), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
