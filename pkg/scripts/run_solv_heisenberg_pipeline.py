#!/usr/bin/env python3
"""End-to-end demo on the 4-dim solvable extension of the Heisenberg algebra.

Runs the full chain by hand (classify, nilshadow, grade, split, solve the
deformation series, check the degree bound, compare with the character
sub-DGA) and prints each intermediate object.  The same run is available as
``germkit pipeline fixtures/solv_heisenberg.json --target sl2``.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from germkit import fixtures
from germkit.cedga import ce_complex, pd_type_check, subdga_from_characters
from germkit.decomp import betti_numbers, kernel_containment_check, split_complex
from germkit.kuranishi import (
    gauge_identity_check,
    kuranishi_series,
    linear_embedding_check,
    obstruction_system,
    random_rational_samples,
    verify_degree_bound,
)
from germkit.liealg import infer_grading_basis_aligned, lower_central_series
from germkit.nilshadow import ad_s_map, nilshadow


def main() -> None:
    data = fixtures.solvable_heisenberg_input()
    g = data.algebra
    print(f"input algebra on basis {g.labels}, unimodular={g.is_unimodular()}")

    ads = ad_s_map(data)
    diag = [str(ads.matrices[0][d][d]) for d in range(g.dim)]
    print(f"semisimple part of ad_T is diagonal with weights {diag}")

    shadow = nilshadow(data)
    pretty = "; ".join(
        f"[{shadow.labels[i]}, {shadow.labels[j]}] = "
        + " + ".join(f"{c}*{shadow.labels[k]}" for k, c in sorted(comps.items()))
        for i, j, comps in shadow.nonzero_brackets()
    )
    print(f"nilshadow brackets: {pretty}")
    print(f"nilshadow class: nu = {lower_central_series(shadow).nu}")

    grading = infer_grading_basis_aligned(shadow)
    assert grading is not None
    print(f"layer dims of the natural grading: {[l.dim for l in grading.layers]}")

    dga = ce_complex(shadow)
    print(f"duality type: {'pass' if pd_type_check(dga) is None else 'FAIL'}")
    print(
        "degree-2 cocycle weights bounded by nu+1:",
        kernel_containment_check(dga, grading) is None,
    )

    dec = split_complex(dga, "metric", grading)
    print(f"betti numbers: {betti_numbers(dec)}")

    target = fixtures.sl2()
    series = kuranishi_series(dec, target)
    system = obstruction_system(series)
    print(
        f"series: {len(series.variables)} parameters, terminated at degree "
        f"{series.last_nonzero}, gauge identities "
        f"{'pass' if gauge_identity_check(series) is None else 'FAIL'}"
    )
    print(
        f"obstruction system: {len(system.polynomials)} polynomials, "
        f"max total degree {system.max_degree}; degree bound <= "
        f"{grading.depth + 1}: "
        f"{'PASS' if verify_degree_bound(system, grading.depth) is None else 'FAIL'}"
    )
    for label, poly in zip(system.coordinates, system.polynomials):
        if not poly.is_zero():
            print(f"  {label}: {poly} = 0")

    sub = subdga_from_characters(dga, fixtures.solvable_heisenberg_characters())
    sub_dec = split_complex(sub.complex())
    sub_series = kuranishi_series(sub_dec, target)
    sub_system = obstruction_system(sub_series)
    print(
        f"character sub-DGA: degree counts {sub.degree_counts()}, "
        f"betti {betti_numbers(sub_dec)}, "
        f"{'smooth germ' if sub_system.is_smooth else 'obstructed germ'}"
    )
    samples = random_rational_samples(
        100, sub.complex().dim_at(1) * target.dim, seed=20240810
    )
    print(
        "inclusion preserves flatness residuals on 100 samples:",
        linear_embedding_check(sub, target, samples) is None,
    )


if __name__ == "__main__":
    main()
