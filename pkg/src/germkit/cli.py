"""Command-line surface.

Subcommands: check, nilshadow, decompose, subdga, kuranishi, mc-check,
pipeline.  Exit codes: 0 success, 1 mathematical precondition failure,
2 parse error, 3 internal invariant violation.  ``--json`` switches any
subcommand to its machine-readable mirror (optionally into a file); the
text and JSON forms are rendered from the same report object.
"""

from __future__ import annotations

import argparse
import sys

from . import fixtures
from .cedga import (
    CharacterData,
    Dga,
    ce_complex,
    pd_type_check,
    subdga_from_characters,
    verify_subdga,
)
from .decomp import (
    betti_numbers,
    degree2_weight_table,
    kernel_containment_check,
    split_complex,
)
from .errors import InternalCheckError, ParseError, PreconditionError
from .formats import (
    SCHEMA_VERSION,
    ParsedAlgebra,
    algebra_to_dict,
    germ_from_dict,
    germ_to_dict,
    load_algebra_file,
    load_json_file,
    parse_point,
    parse_subdga_spec,
    render_json,
    subdga_to_monomial_lists,
)
from .kuranishi import (
    gauge_identity_check,
    kuranishi_series,
    linear_embedding_check,
    mc_residual,
    obstruction_system,
    random_rational_samples,
    sparse_columns,
    verify_degree_bound,
)
from .liealg import (
    Grading,
    LieAlgebra,
    infer_grading_basis_aligned,
    is_solvable,
    lower_central_series,
    verify_natural_grading,
)
from .nilshadow import SolvableInput, nilshadow

EMBEDDING_SAMPLES = 20


def entrypoint() -> None:
    sys.exit(main())


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_help()
        return 0
    try:
        report = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    emit(report, args)
    return 0


def emit(report: dict, args) -> None:
    if getattr(args, "json", None) is not None:
        payload = render_json(report)
        if args.json == "-":
            sys.stdout.write(payload)
        else:
            with open(args.json, "w", encoding="utf-8") as handle:
                handle.write(payload)
            print(f"wrote {args.json}")
    else:
        for line in report["text"]:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="germkit",
        description=(
            "Exact computations with Lie algebra cochain complexes: "
            "nilshadows, splittings, and deformation germs."
        ),
    )
    sub = parser.add_subparsers()

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--json",
            nargs="?",
            const="-",
            default=None,
            metavar="PATH",
            help="emit machine-readable JSON (to PATH, or stdout if omitted)",
        )

    p = sub.add_parser("check", help="validate an algebra file and classify it")
    p.add_argument("file")
    common(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("nilshadow", help="compute the nilshadow of a solvable algebra")
    p.add_argument("file")
    common(p)
    p.set_defaults(handler=cmd_nilshadow)

    p = sub.add_parser("decompose", help="split the cochain complex degree by degree")
    p.add_argument("file")
    p.add_argument("--strategy", choices=("metric", "pivot"), default="metric")
    common(p)
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("subdga", help="select an invariant monomial sub-DGA")
    p.add_argument("file")
    p.add_argument("--characters", metavar="PATH", default=None)
    common(p)
    p.set_defaults(handler=cmd_subdga)

    p = sub.add_parser("kuranishi", help="solve the deformation series and emit the germ")
    p.add_argument("file")
    p.add_argument("--target", required=True, help="algebra file, sl2, or gl:N")
    p.add_argument("--subdga", metavar="PATH", default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--strategy", choices=("metric", "pivot"), default="metric")
    common(p)
    p.set_defaults(handler=cmd_kuranishi)

    p = sub.add_parser("mc-check", help="exact spot check of a germ file at a point")
    p.add_argument("germ")
    p.add_argument("--point", required=True, help='e.g. "t1=1,t2=1/2"')
    common(p)
    p.set_defaults(handler=cmd_mc_check)

    p = sub.add_parser("pipeline", help="full run: classify, nilshadow, grade, germ, bound")
    p.add_argument("file")
    p.add_argument("--target", default="sl2", help="algebra file, sl2, or gl:N")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--strategy", choices=("metric", "pivot"), default="metric")
    common(p)
    p.set_defaults(handler=cmd_pipeline)

    return parser


# -- shared helpers ---------------------------------------------------------------


def resolve_target(spec: str) -> tuple[dict, LieAlgebra]:
    if spec == "sl2":
        algebra = fixtures.sl2()
        return algebra_to_dict(algebra, "sl2"), algebra
    if spec.startswith("gl:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad target spec {spec!r}; use gl:N") from None
        if n < 1:
            raise ParseError("gl:N needs N >= 1")
        algebra = fixtures.gl(n)
        return algebra_to_dict(algebra, f"gl{n}"), algebra
    parsed = load_algebra_file(spec)
    return algebra_to_dict(parsed.algebra, parsed.name), parsed.algebra


def obtain_grading(
    parsed_grading: Grading | None, algebra: LieAlgebra
) -> tuple[Grading | None, str]:
    if parsed_grading is not None:
        violation = verify_natural_grading(algebra, parsed_grading)
        if violation is not None:
            raise PreconditionError(f"supplied grading is not natural: {violation}")
        return parsed_grading, "supplied"
    inferred = infer_grading_basis_aligned(algebra)
    if inferred is not None:
        return inferred, "inferred"
    return None, "none"


def grading_rows(grading: Grading) -> list[list[list[str]]]:
    return [
        [[str(c) for c in row] for row in layer.rows] for layer in grading.layers
    ]


def classification(algebra: LieAlgebra) -> dict:
    lcs = lower_central_series(algebra)
    return {
        "dim": algebra.dim,
        "jacobi": "pass",
        "solvable": is_solvable(algebra),
        "nilpotent": lcs.is_nilpotent,
        "nu": lcs.nu,
        "lower_central_dims": lcs.dims(),
        "unimodular": algebra.is_unimodular(),
    }


# -- subcommands --------------------------------------------------------------------


def cmd_check(args) -> dict:
    parsed = load_algebra_file(args.file)
    info = classification(parsed.algebra)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "check",
        "name": parsed.name,
        "input_digest": parsed.digest,
        **info,
    }
    report["text"] = [
        f"algebra {parsed.name}: dim={info['dim']} jacobi=pass",
        f"solvable={info['solvable']} nilpotent={info['nilpotent']}"
        + (f" nu={info['nu']}" if info["nu"] is not None else ""),
        f"lower central dims: {info['lower_central_dims']}",
        f"unimodular={info['unimodular']}",
    ]
    return report


def _require_solvable_data(parsed: ParsedAlgebra) -> SolvableInput:
    if parsed.nilradical is None or parsed.complement is None:
        raise ParseError(
            f"{parsed.name}: nilshadow needs 'nilradical' and 'complement' entries"
        )
    return SolvableInput(
        algebra=parsed.algebra,
        nilradical=parsed.nilradical,
        complement=parsed.complement,
    )


def cmd_nilshadow(args) -> dict:
    parsed = load_algebra_file(args.file)
    data = _require_solvable_data(parsed)
    shadow = nilshadow(data)
    lcs = lower_central_series(shadow)
    brackets_unchanged = all(
        shadow.bracket(list(u), list(v)) == parsed.algebra.bracket(list(u), list(v))
        for u in data.nilradical.rows
        for v in data.nilradical.rows
    )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "nilshadow",
        "name": parsed.name,
        "input_digest": parsed.digest,
        "nilshadow_algebra": algebra_to_dict(shadow, f"{parsed.name}_nilshadow"),
        "nu": lcs.nu,
        "lower_central_dims": lcs.dims(),
        "bracket_fixed_on_nilradical": brackets_unchanged,
    }
    pretty = [
        f"[{shadow.labels[i]}, {shadow.labels[j]}] = "
        + " + ".join(f"{c}*{shadow.labels[k]}" for k, c in sorted(comps.items()))
        for i, j, comps in shadow.nonzero_brackets()
    ]
    report["text"] = [
        f"nilshadow of {parsed.name} on basis ({', '.join(shadow.labels)})",
        "nonzero brackets: " + ("; ".join(pretty) if pretty else "none (abelian)"),
        f"nilpotent with nu={lcs.nu}; lower central dims {lcs.dims()}",
        f"bracket unchanged on the nilradical: {brackets_unchanged}",
    ]
    return report


def cmd_decompose(args) -> dict:
    parsed = load_algebra_file(args.file)
    dga = ce_complex(parsed.algebra)
    grading, grading_how = obtain_grading(parsed.grading, parsed.algebra)
    dec = split_complex(dga, strategy=args.strategy, grading=grading)
    betti = betti_numbers(dec)
    harmonic = {
        str(p): [dga.cochain_label(p, row) for row in dec.harmonic_basis(p)]
        for p in range(len(dec.splits))
    }
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "name": parsed.name,
        "input_digest": parsed.digest,
        "strategy": args.strategy,
        "grading": grading_how,
        "betti": betti,
        "degree_dims": dga.dims(),
        "split_dims": [
            {
                "degree": p,
                "harmonic": len(dec.splits[p].harmonic),
                "exact": len(dec.splits[p].exact),
                "complement": len(dec.splits[p].complement),
            }
            for p in range(len(dec.splits))
        ],
        "harmonic_bases": harmonic,
    }
    text = [
        f"complex of {parsed.name}: degree dims {dga.dims()}",
        f"strategy={args.strategy} grading={grading_how}",
        f"betti numbers: {betti}",
    ]
    for p in range(len(dec.splits)):
        split = dec.splits[p]
        text.append(
            f"degree {p}: harmonic={len(split.harmonic)} "
            f"exact={len(split.exact)} complement={len(split.complement)}"
        )
        if split.harmonic:
            text.append(
                f"  harmonic basis: "
                + "; ".join(dga.cochain_label(p, list(r)) for r in split.harmonic)
            )
    if grading is not None and dec.weights is not None:
        table = degree2_weight_table(dga, dec.weights)
        rows = {
            str(w): [dga.monomial_label(m) for m in monos]
            for w, monos in table.items()
        }
        report["degree2_weight_table"] = rows
        kc = kernel_containment_check(dga, grading)
        report["degree2_cocycle_weight_bound"] = {
            "bound": grading.depth + 1,
            "satisfied": kc is None,
        }
        text.append("degree-2 weight table: " + "; ".join(
            f"w={w}: {', '.join(monos)}" for w, monos in rows.items()
        ))
        text.append(
            f"degree-2 cocycles confined to weight <= {grading.depth + 1}: "
            f"{kc is None}"
        )
    report["text"] = text
    return report


def _selection_from_args(args, parsed: ParsedAlgebra, dga: Dga):
    if args.characters is not None:
        spec = load_json_file(args.characters)
        if "characters" not in spec and "monomials" not in spec:
            spec = {"characters": spec}
        return parse_subdga_spec(spec, dga, args.characters)
    if parsed.characters is not None:
        return parsed.characters
    raise ParseError(
        "no selection given: pass --characters FILE or embed 'characters' "
        "in the algebra file"
    )


def cmd_subdga(args) -> dict:
    parsed = load_algebra_file(args.file)
    dga = ce_complex(parsed.algebra)
    spec = _selection_from_args(args, parsed, dga)
    if isinstance(spec, CharacterData):
        sub = subdga_from_characters(dga, spec)
    else:
        sub = spec
    violation = verify_subdga(sub)
    if violation is not None:
        raise PreconditionError(f"selection is not a sub-DGA: {violation}")
    restricted = sub.complex()
    pd = pd_type_check(restricted)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "subdga",
        "name": parsed.name,
        "input_digest": parsed.digest,
        "selected_monomials": subdga_to_monomial_lists(sub),
        "degree_counts": sub.degree_counts(),
        "verification": "pass",
        "pd_type": "pass" if pd is None else pd,
    }
    labels = [
        dga.monomial_label(mono) for level in sub.selected for mono in level
    ]
    report["text"] = [
        f"selection in the complex of {parsed.name}: "
        f"{sum(sub.degree_counts())} monomials, degree counts {sub.degree_counts()}",
        "selected: " + ", ".join(labels),
        "closed under d and wedge: pass",
        f"duality-type check: {report['pd_type']}",
    ]
    return report


def _run_germ(
    base_parsed: ParsedAlgebra,
    base_algebra: LieAlgebra,
    complex_: Dga,
    target_dict: dict,
    target: LieAlgebra,
    strategy: str,
    cap: int | None,
    grading: Grading | None,
    subdga_monomials: list[list[int]] | None,
) -> tuple[dict, dict]:
    dec = split_complex(complex_, strategy=strategy, grading=grading)
    series = kuranishi_series(dec, target, cap)
    system = obstruction_system(series)
    if series.terminated:
        failure = gauge_identity_check(series)
        if failure is not None:
            raise InternalCheckError(f"gauge identity failed: {failure}")
    degree_bound = None
    if grading is not None and series.terminated:
        witness = verify_degree_bound(system, grading.depth)
        degree_bound = {
            "bound": grading.depth + 1,
            "satisfied": witness is None,
        }
        if witness is not None:
            degree_bound["witness"] = str(witness)
    germ = germ_to_dict(
        series,
        system,
        base=algebra_to_dict(base_algebra, base_parsed.name),
        target=target_dict,
        strategy=strategy,
        grading_labels=grading_rows(grading) if grading is not None else None,
        subdga_monomials=subdga_monomials,
        degree_bound=degree_bound,
    )
    summary = {
        "variables": len(series.variables),
        "betti": betti_numbers(dec),
        "terminated": series.terminated,
        "last_nonzero_degree": series.last_nonzero,
        "cap": series.cap,
        "max_degree": system.max_degree,
        "smooth": system.is_smooth,
        "polynomials": len(system.polynomials),
        "degree_bound": degree_bound,
    }
    return germ, summary


def cmd_kuranishi(args) -> dict:
    parsed = load_algebra_file(args.file)
    target_dict, target = resolve_target(args.target)
    full = ce_complex(parsed.algebra)
    subdga_monomials = None
    complex_ = full
    sub = None
    if args.subdga is not None:
        spec = parse_subdga_spec(load_json_file(args.subdga), full, args.subdga)
        sub = (
            subdga_from_characters(full, spec)
            if isinstance(spec, CharacterData)
            else spec
        )
        violation = verify_subdga(sub)
        if violation is not None:
            raise PreconditionError(f"selection is not a sub-DGA: {violation}")
        complex_ = sub.complex()
        subdga_monomials = subdga_to_monomial_lists(sub)
        grading, grading_how = None, "none (sub-DGA run)"
    else:
        grading, grading_how = obtain_grading(parsed.grading, parsed.algebra)

    germ, summary = _run_germ(
        parsed,
        parsed.algebra,
        complex_,
        target_dict,
        target,
        args.strategy,
        args.cap,
        grading,
        subdga_monomials,
    )
    if sub is not None:
        samples = random_rational_samples(
            EMBEDDING_SAMPLES, complex_.dim_at(1) * target.dim
        )
        witness = linear_embedding_check(sub, target, samples)
        germ["embedding_check"] = {
            "samples": EMBEDDING_SAMPLES,
            "agree": witness is None,
        }
        if witness is not None:
            raise InternalCheckError(
                f"inclusion does not preserve residuals on sample {witness[0]}: "
                f"{witness[1]}"
            )

    text = [
        f"deformation series for {parsed.name} with target {args.target}",
        f"strategy={args.strategy} grading={grading_how}",
        f"variables: {summary['variables']}; betti {summary['betti']}",
        f"series: last nonzero degree {summary['last_nonzero_degree']}, "
        f"cap {summary['cap']}, terminated={summary['terminated']}",
    ]
    if not summary["terminated"]:
        text.append(
            f"warning: truncated; system valid modulo degree > {summary['cap']}"
        )
    if summary["smooth"]:
        text.append("germ is smooth at origin (no obstruction equations)")
    else:
        text.append(
            f"obstructions: {summary['polynomials']} polynomials, "
            f"max total degree {summary['max_degree']}"
        )
        for label, pretty in zip(
            germ["obstructions"]["coordinates"], germ["obstructions"]["pretty"]
        ):
            if pretty != "0":
                text.append(f"  {label}: {pretty} = 0")
    if summary["degree_bound"] is not None:
        db = summary["degree_bound"]
        text.append(
            f"degree bound: max degree {summary['max_degree']} <= {db['bound']}: "
            + ("PASS" if db["satisfied"] else "FAIL")
        )
    if sub is not None:
        text.append(
            f"inclusion residual agreement on {EMBEDDING_SAMPLES} samples: pass"
        )
    germ["text"] = text
    return germ


def cmd_mc_check(args) -> dict:
    data = load_json_file(args.germ)
    germ = germ_from_dict(data, args.germ)
    point = parse_point(args.point, germ.variables)
    values = [poly.eval(point) for poly in germ.polynomials]
    omega = germ.phi.eval(point)
    residual = mc_residual(germ.tdgla, omega)
    delta1 = sparse_columns(
        germ.decomposition.delta[1], germ.complex.dim_at(1)
    )
    gauge = germ.tdgla.apply_matrix(delta1, omega)
    vanish = all(not v for v in values)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "mc-check",
        "point": {name: str(v) for name, v in zip(germ.variables, point)},
        "obstruction_values": {
            label: str(v) for label, v in zip(germ.coordinates, values)
        },
        "obstructions_vanish": vanish,
        "residual_is_zero": not residual,
        "gauge_is_zero": not gauge,
        "residual": germ.tdgla.element_str(2, residual),
        "terminated_series": germ.terminated,
    }
    report["consistent"] = (not vanish) or (not residual and not gauge)
    text = [
        f"point: {args.point}",
        f"obstruction values vanish: {vanish}",
        f"flatness residual zero: {not residual}",
        f"gauge condition zero: {not gauge}",
    ]
    if not vanish:
        nonzero = [
            f"{label} = {v}"
            for label, v in zip(germ.coordinates, values)
            if v
        ]
        text.append("nonzero obstructions: " + "; ".join(map(str, nonzero)))
        text.append(f"residual: {report['residual']}")
    if not report["consistent"]:
        raise InternalCheckError(
            "obstructions vanish but the point is not flat: "
            f"residual {report['residual']}"
        )
    report["text"] = text
    return report


def cmd_pipeline(args) -> dict:
    parsed = load_algebra_file(args.file)
    target_dict, target = resolve_target(args.target)
    stages: list[dict] = []
    text: list[str] = [f"pipeline: {parsed.name} -> target {args.target}"]

    info = classification(parsed.algebra)
    stages.append({"stage": "classify", **info})
    text.append(
        f"[classify] dim={info['dim']} jacobi=pass solvable={info['solvable']} "
        f"nilpotent={info['nilpotent']} unimodular={info['unimodular']}"
    )

    if parsed.nilradical is not None and parsed.complement is not None:
        shadow = nilshadow(_require_solvable_data(parsed))
        how = "computed from nilradical/complement data"
    elif info["nilpotent"]:
        shadow = parsed.algebra
        how = "input already nilpotent; nilshadow is the identity"
    else:
        raise PreconditionError(
            "algebra is not nilpotent and no nilradical/complement data "
            "was provided; cannot form the nilshadow"
        )
    shadow_lcs = lower_central_series(shadow)
    pretty = [
        f"[{shadow.labels[i]}, {shadow.labels[j]}] = "
        + " + ".join(f"{c}*{shadow.labels[k]}" for k, c in sorted(comps.items()))
        for i, j, comps in shadow.nonzero_brackets()
    ]
    stages.append(
        {
            "stage": "nilshadow",
            "how": how,
            "nu": shadow_lcs.nu,
            "algebra": algebra_to_dict(shadow, f"{parsed.name}_nilshadow"),
        }
    )
    text.append(
        f"[nilshadow] {how}; nu={shadow_lcs.nu}; brackets: "
        + ("; ".join(pretty) if pretty else "none (abelian)")
    )

    grading, grading_how = obtain_grading(
        parsed.grading if shadow is parsed.algebra else None, shadow
    )
    stages.append(
        {
            "stage": "grading",
            "how": grading_how,
            "layers": grading_rows(grading) if grading is not None else None,
        }
    )
    text.append(f"[grading] {grading_how}"
                + (f", {grading.depth} layers" if grading is not None else ""))

    dga = ce_complex(shadow)
    pd = pd_type_check(dga)
    stages.append({"stage": "pd_type", "verdict": "pass" if pd is None else pd})
    text.append(f"[pd-type] {'pass' if pd is None else pd}")

    if grading is not None:
        kc = kernel_containment_check(dga, grading)
        stages.append(
            {
                "stage": "degree2_cocycle_weights",
                "bound": grading.depth + 1,
                "satisfied": kc is None,
            }
        )
        text.append(
            f"[cocycle-weights] degree-2 cocycles confined to weight <= "
            f"{grading.depth + 1}: {kc is None}"
        )

    germ, summary = _run_germ(
        parsed, shadow, dga, target_dict, target, args.strategy, args.cap,
        grading, None,
    )
    stages.append({"stage": "germ", **{k: v for k, v in summary.items()}})
    text.append(
        f"[decompose] betti {summary['betti']} (strategy {args.strategy})"
    )
    text.append(
        f"[germ] variables={summary['variables']} "
        f"terminated={summary['terminated']} "
        f"last nonzero degree {summary['last_nonzero_degree']}"
    )
    if summary["smooth"]:
        text.append("[germ] smooth at origin (no obstruction equations)")
    else:
        text.append(
            f"[germ] {summary['polynomials']} obstruction polynomials, "
            f"max total degree {summary['max_degree']}"
        )
    if summary["degree_bound"] is not None:
        db = summary["degree_bound"]
        text.append(
            f"[bound] max degree {summary['max_degree']} <= {db['bound']}: "
            + ("PASS" if db["satisfied"] else "FAIL")
        )

    sub_summary = None
    if parsed.characters is not None:
        sub = subdga_from_characters(dga, parsed.characters)
        violation = verify_subdga(sub)
        if violation is not None:
            raise PreconditionError(f"character selection: {violation}")
        sub_complex = sub.complex()
        sub_germ, sub_sum = _run_germ(
            parsed, shadow, sub_complex, target_dict, target, args.strategy,
            args.cap, None, subdga_to_monomial_lists(sub),
        )
        samples = random_rational_samples(
            EMBEDDING_SAMPLES, sub_complex.dim_at(1) * target.dim
        )
        witness = linear_embedding_check(sub, target, samples)
        sub_summary = {
            "stage": "character_subdga",
            "degree_counts": sub.degree_counts(),
            "betti": sub_sum["betti"],
            "variables": sub_sum["variables"],
            "terminated": sub_sum["terminated"],
            "max_degree": sub_sum["max_degree"],
            "smooth": sub_sum["smooth"],
            "embedding_samples": EMBEDDING_SAMPLES,
            "embedding_agree": witness is None,
        }
        stages.append(sub_summary)
        text.append(
            f"[sub-dga] degree counts {sub.degree_counts()}, betti "
            f"{sub_sum['betti']}, variables={sub_sum['variables']}, "
            + ("smooth germ" if sub_sum["smooth"] else
               f"max degree {sub_sum['max_degree']}")
        )
        text.append(
            f"[embedding] residual agreement on {EMBEDDING_SAMPLES} "
            f"samples: {'pass' if witness is None else 'FAIL'}"
        )
        if witness is not None:
            raise InternalCheckError(
                f"inclusion does not preserve residuals: {witness[1]}"
            )

    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "pipeline",
        "name": parsed.name,
        "input_digest": parsed.digest,
        "target": args.target,
        "strategy": args.strategy,
        "stages": stages,
        "germ": germ,
        "text": text,
    }
    return report
