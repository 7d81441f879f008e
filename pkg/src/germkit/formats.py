"""JSON interchange for algebras, selections, deformation germs and reports.

Scalars travel as strings to keep arbitrary-precision exactness; all
emitters sort keys and sets so identical inputs produce byte-identical
output.  Parse errors carry the offending field path.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any

from .cedga import CharacterData, Dga, Monomial, SubDga, TorsionComponent
from .decomp import Decomposition, split_complex
from .errors import ParseError
from .kuranishi import (
    KuranishiSeries,
    ObstructionSystem,
    PolyCochain,
    TensorDgla,
)
from .liealg import Grading, LieAlgebra, Subspace
from .multipoly import MultiPoly
from .scalars import Scalar, parse_scalar, scalar

SCHEMA_VERSION = 1


def render_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def file_digest(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


def load_json_file(path: str) -> dict:
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    data["__digest__"] = file_digest(raw)
    return data


def _coerce_scalar(value: Any, where: str) -> Scalar:
    if isinstance(value, bool):
        raise ParseError(f"{where}: booleans are not scalars")
    if isinstance(value, int):
        return scalar(value)
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ParseError as exc:
            raise ParseError(f"{where}: {exc}") from None
    raise ParseError(
        f"{where}: scalars must be strings like '1/2' or '1/2+1/3*i' "
        f"(or plain integers), got {type(value).__name__}"
    )


# -- algebra files ---------------------------------------------------------------


@dataclass
class ParsedAlgebra:
    name: str
    algebra: LieAlgebra
    grading: Grading | None
    nilradical: Subspace | None
    complement: Subspace | None
    characters: CharacterData | None
    digest: str | None


def _parse_vector(entry: Any, labels: tuple[str, ...], where: str) -> list[Scalar]:
    n = len(labels)
    if isinstance(entry, str):
        if entry not in labels:
            raise ParseError(f"{where}: unknown basis label {entry!r}")
        vec = [scalar(0)] * n
        vec[labels.index(entry)] = scalar(1)
        return vec
    if isinstance(entry, list):
        if len(entry) != n:
            raise ParseError(
                f"{where}: vector has {len(entry)} coordinates, expected {n}"
            )
        return [
            _coerce_scalar(c, f"{where}[{k}]") for k, c in enumerate(entry)
        ]
    raise ParseError(f"{where}: expected a basis label or a coordinate vector")


def _parse_subspace(
    entries: Any, labels: tuple[str, ...], where: str
) -> Subspace:
    if not isinstance(entries, list):
        raise ParseError(f"{where}: expected a list of labels or vectors")
    vectors = [
        _parse_vector(entry, labels, f"{where}[{k}]")
        for k, entry in enumerate(entries)
    ]
    return Subspace.from_vectors(len(labels), vectors)


def parse_characters(data: Any, dim: int, where: str) -> CharacterData:
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object")
    try:
        rank = int(data["rank"])
    except (KeyError, TypeError, ValueError):
        raise ParseError(f"{where}.rank: missing or not an integer") from None
    raw_exps = data.get("exponents")
    if not isinstance(raw_exps, list) or len(raw_exps) != dim:
        raise ParseError(
            f"{where}.exponents: need one exponent vector per basis index ({dim})"
        )
    exponents = []
    for k, vec in enumerate(raw_exps):
        if not isinstance(vec, list) or len(vec) != rank:
            raise ParseError(
                f"{where}.exponents[{k}]: expected a list of {rank} integers"
            )
        try:
            exponents.append(tuple(int(x) for x in vec))
        except (TypeError, ValueError):
            raise ParseError(f"{where}.exponents[{k}]: not integers") from None
    torsion = []
    for k, comp in enumerate(data.get("torsion", [])):
        try:
            modulus = int(comp["modulus"])
            residues = tuple(int(x) for x in comp["residues"])
        except (KeyError, TypeError, ValueError):
            raise ParseError(
                f"{where}.torsion[{k}]: need modulus and residues"
            ) from None
        if len(residues) != dim:
            raise ParseError(
                f"{where}.torsion[{k}].residues: need {dim} entries"
            )
        if modulus < 2:
            raise ParseError(f"{where}.torsion[{k}].modulus: must be >= 2")
        torsion.append(TorsionComponent(modulus, residues))
    return CharacterData(rank=rank, exponents=tuple(exponents), torsion=tuple(torsion))


def parse_algebra_dict(data: dict, source: str = "<input>") -> ParsedAlgebra:
    name = data.get("name", "unnamed")
    basis = data.get("basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError(f"{source}: basis: expected a list of labels")
    labels = tuple(basis)
    if len(set(labels)) != len(labels):
        raise ParseError(f"{source}: basis: duplicate labels")
    dim = data.get("dim", len(labels))
    if dim != len(labels):
        raise ParseError(
            f"{source}: dim = {dim} does not match {len(labels)} basis labels"
        )
    field_name = data.get("field", "Q")
    if field_name not in ("Q", "Q(i)"):
        raise ParseError(f"{source}: field: expected 'Q' or 'Q(i)'")

    raw_brackets = data.get("brackets", [])
    if not isinstance(raw_brackets, list):
        raise ParseError(f"{source}: brackets: expected a list")
    brackets: dict[tuple[int, int], dict[int, Scalar]] = {}
    seen: set[tuple[int, int]] = set()
    for k, entry in enumerate(raw_brackets):
        where = f"{source}: brackets[{k}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: expected an object")
        for fieldname in ("left", "right", "result"):
            if fieldname not in entry:
                raise ParseError(f"{where}: missing field {fieldname!r}")
        left, right = entry["left"], entry["right"]
        for side, value in (("left", left), ("right", right)):
            if value not in labels:
                raise ParseError(f"{where}.{side}: unknown basis label {value!r}")
        i, j = labels.index(left), labels.index(right)
        if i == j:
            raise ParseError(f"{where}: bracket of {left!r} with itself")
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        if (i, j) in seen:
            raise ParseError(
                f"{where}: duplicate bracket for ({labels[i]!r}, {labels[j]!r})"
            )
        seen.add((i, j))
        comps: dict[int, Scalar] = {}
        if not isinstance(entry["result"], list):
            raise ParseError(f"{where}.result: expected a list")
        for t, term in enumerate(entry["result"]):
            tw = f"{where}.result[{t}]"
            if not isinstance(term, dict) or "coef" not in term or "basis" not in term:
                raise ParseError(f"{tw}: expected {{coef, basis}}")
            if term["basis"] not in labels:
                raise ParseError(f"{tw}.basis: unknown basis label {term['basis']!r}")
            target = labels.index(term["basis"])
            coeff = _coerce_scalar(term["coef"], f"{tw}.coef")
            if field_name == "Q" and not coeff.is_rational():
                raise ParseError(f"{tw}.coef: imaginary part in a field-Q file")
            if sign == -1:
                coeff = -coeff
            total = comps.get(target, scalar(0)) + coeff
            if total:
                comps[target] = total
            else:
                comps.pop(target, None)
        if comps:
            brackets[(i, j)] = comps

    algebra = LieAlgebra(labels, brackets)  # runs the Jacobi check

    grading = None
    if "grading" in data:
        if not isinstance(data["grading"], list):
            raise ParseError(f"{source}: grading: expected a list of layers")
        layers = [
            _parse_subspace(layer, labels, f"{source}: grading[{k}]")
            for k, layer in enumerate(data["grading"])
        ]
        grading = Grading(tuple(layers))

    nilradical = (
        _parse_subspace(data["nilradical"], labels, f"{source}: nilradical")
        if "nilradical" in data
        else None
    )
    complement = (
        _parse_subspace(data["complement"], labels, f"{source}: complement")
        if "complement" in data
        else None
    )
    characters = (
        parse_characters(data["characters"], len(labels), f"{source}: characters")
        if "characters" in data
        else None
    )
    return ParsedAlgebra(
        name=name,
        algebra=algebra,
        grading=grading,
        nilradical=nilradical,
        complement=complement,
        characters=characters,
        digest=data.get("__digest__"),
    )


def load_algebra_file(path: str) -> ParsedAlgebra:
    return parse_algebra_dict(load_json_file(path), source=path)


def algebra_to_dict(
    algebra: LieAlgebra,
    name: str = "unnamed",
    *,
    grading: Grading | None = None,
    nilradical: Subspace | None = None,
    complement: Subspace | None = None,
    characters: CharacterData | None = None,
) -> dict:
    rational = all(
        c.is_rational()
        for _, _, comps in algebra.nonzero_brackets()
        for c in comps.values()
    )
    data: dict[str, Any] = {
        "name": name,
        "dim": algebra.dim,
        "basis": list(algebra.labels),
        "field": "Q" if rational else "Q(i)",
        "brackets": [
            {
                "left": algebra.labels[i],
                "right": algebra.labels[j],
                "result": [
                    {"coef": str(c), "basis": algebra.labels[k]}
                    for k, c in sorted(comps.items())
                ],
            }
            for i, j, comps in algebra.nonzero_brackets()
        ],
    }
    if grading is not None:
        data["grading"] = [
            [[str(c) for c in row] for row in layer.rows]
            for layer in grading.layers
        ]
    if nilradical is not None:
        data["nilradical"] = [[str(c) for c in row] for row in nilradical.rows]
    if complement is not None:
        data["complement"] = [[str(c) for c in row] for row in complement.rows]
    if characters is not None:
        data["characters"] = characters_to_dict(characters)
    return data


def characters_to_dict(characters: CharacterData) -> dict:
    out: dict[str, Any] = {
        "rank": characters.rank,
        "exponents": [list(v) for v in characters.exponents],
    }
    if characters.torsion:
        out["torsion"] = [
            {"modulus": comp.modulus, "residues": list(comp.residues)}
            for comp in characters.torsion
        ]
    return out


# -- sub-DGA selection files ---------------------------------------------------------


def parse_subdga_spec(
    data: dict, dga: Dga, source: str = "<subdga>"
) -> "SubDga | CharacterData":
    """A selection file holds either explicit monomials or character data."""
    if "characters" in data:
        return parse_characters(
            data["characters"], dga.algebra.dim, f"{source}: characters"
        )
    if "monomials" not in data:
        raise ParseError(f"{source}: need either 'monomials' or 'characters'")
    labels = dga.algebra.labels
    n = dga.algebra.dim
    levels: list[set[Monomial]] = [set() for _ in range(n + 1)]
    raw = data["monomials"]
    if not isinstance(raw, list):
        raise ParseError(f"{source}: monomials: expected a list of index lists")
    for k, entry in enumerate(raw):
        where = f"{source}: monomials[{k}]"
        if not isinstance(entry, list):
            raise ParseError(f"{where}: expected a list")
        indices = []
        for item in entry:
            if isinstance(item, str):
                if item not in labels:
                    raise ParseError(f"{where}: unknown basis label {item!r}")
                indices.append(labels.index(item))
            elif isinstance(item, int) and not isinstance(item, bool):
                if not (1 <= item <= n):
                    raise ParseError(
                        f"{where}: index {item} out of range 1..{n} (1-based)"
                    )
                indices.append(item - 1)
            else:
                raise ParseError(f"{where}: entries must be labels or 1-based indices")
        mono = tuple(sorted(indices))
        if len(set(mono)) != len(mono):
            raise ParseError(f"{where}: repeated index")
        levels[len(mono)].add(mono)
    levels[0].add(())
    return SubDga(dga, tuple(tuple(sorted(level)) for level in levels))


def subdga_to_monomial_lists(sub: SubDga) -> list[list[int]]:
    """1-based index lists, by degree then lexicographic order."""
    out = []
    for level in sub.selected:
        for mono in level:
            out.append([i + 1 for i in mono])
    return out


# -- germ files -----------------------------------------------------------------------


def _sparse_entries(tdgla: TensorDgla, vec: dict[int, Scalar]) -> list[dict]:
    ta = tdgla.target.dim
    entries = []
    for idx in sorted(vec):
        mono_idx, a = divmod(idx, ta)
        entries.append(
            {
                "monomial_index": mono_idx,
                "target": tdgla.target.labels[a],
                "value": str(vec[idx]),
            }
        )
    return entries


def germ_to_dict(
    series: KuranishiSeries,
    system: ObstructionSystem,
    *,
    base: dict,
    target: dict,
    strategy: str,
    grading_labels: list[list[list[str]]] | None,
    subdga_monomials: list[list[int]] | None,
    degree_bound: dict | None,
) -> dict:
    tdgla = series.tdgla
    phi_out = []
    for r in sorted(series.slices):
        terms = []
        for exps in sorted(series.slices[r]):
            terms.append(
                {
                    "exponents": list(exps),
                    "entries": _sparse_entries(tdgla, series.slices[r][exps]),
                }
            )
        phi_out.append({"degree": r, "terms": terms})
    harmonic1 = [
        [str(c) for c in row] for row in series.decomposition.harmonic_basis(1)
    ]
    harmonic2 = (
        [[str(c) for c in row] for row in series.decomposition.harmonic_basis(2)]
        if len(series.decomposition.splits) > 2
        else []
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "germ",
        "base_algebra": base,
        "target_algebra": target,
        "strategy": strategy,
        "grading": grading_labels,
        "subdga_monomials": subdga_monomials,
        "cap": series.cap,
        "terminated": series.terminated,
        "last_nonzero_degree": series.last_nonzero,
        "variables": list(series.variables),
        "zeta": [
            {
                "variable": series.variables[i],
                "harmonic_one_form": h,
                "target": tdgla.target.labels[a],
            }
            for i, (h, a) in enumerate(series.zeta_info)
        ],
        "harmonic_one_forms": harmonic1,
        "harmonic_two_forms": harmonic2,
        "phi": phi_out,
        "obstructions": {
            "coordinates": list(system.coordinates),
            "polynomials": [p.to_records() for p in system.polynomials],
            "pretty": [str(p) for p in system.polynomials],
            "homogeneous_degrees": system.homogeneous_degrees(),
            "max_degree": system.max_degree,
            "nu": system.nu,
            "terminated": system.terminated,
            "valid_modulo": system.valid_modulo,
            "smooth": system.is_smooth,
            "degree_bound": degree_bound,
        },
    }


@dataclass
class GermData:
    """A germ file rebuilt far enough to evaluate points exactly."""

    base: ParsedAlgebra
    target: ParsedAlgebra
    complex: Dga
    decomposition: Decomposition
    tdgla: TensorDgla
    variables: tuple[str, ...]
    phi: PolyCochain
    polynomials: tuple[MultiPoly, ...]
    coordinates: tuple[str, ...]
    terminated: bool


def germ_from_dict(data: dict, source: str = "<germ>") -> GermData:
    if data.get("kind") != "germ":
        raise ParseError(f"{source}: not a germ file (kind != 'germ')")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"{source}: unsupported schema_version")
    base = parse_algebra_dict(data["base_algebra"], f"{source}: base_algebra")
    target = parse_algebra_dict(data["target_algebra"], f"{source}: target_algebra")
    full = Dga(base.algebra)
    if data.get("subdga_monomials") is not None:
        sub = parse_subdga_spec(
            {"monomials": data["subdga_monomials"]}, full, f"{source}: subdga"
        )
        assert isinstance(sub, SubDga)
        complex_ = sub.complex()
    else:
        complex_ = full
    grading = None
    if data.get("grading") is not None:
        layers = [
            _parse_subspace(layer, base.algebra.labels, f"{source}: grading[{k}]")
            for k, layer in enumerate(data["grading"])
        ]
        grading = Grading(tuple(layers))
    strategy = data.get("strategy", "metric")
    dec = split_complex(complex_, strategy=strategy, grading=grading)
    tdgla = TensorDgla(complex_, target.algebra)
    variables = tuple(data.get("variables", []))
    ta = target.algebra.dim
    slices: dict[int, dict] = {}
    for block in data.get("phi", []):
        r = int(block["degree"])
        terms = {}
        for term in block.get("terms", []):
            exps = tuple(int(e) for e in term["exponents"])
            vec: dict[int, Scalar] = {}
            for entry in term.get("entries", []):
                mono_idx = int(entry["monomial_index"])
                label = entry["target"]
                if label not in target.algebra.labels:
                    raise ParseError(
                        f"{source}: phi: unknown target label {label!r}"
                    )
                a = target.algebra.labels.index(label)
                value = _coerce_scalar(entry["value"], f"{source}: phi entry")
                if value:
                    vec[mono_idx * ta + a] = value
            if vec:
                terms[exps] = vec
        if terms:
            slices[r] = terms
    phi = PolyCochain(variables, 1, slices)
    obstructions = data.get("obstructions", {})
    polys = tuple(
        MultiPoly.from_records(variables, records)
        for records in obstructions.get("polynomials", [])
    )
    return GermData(
        base=base,
        target=target,
        complex=complex_,
        decomposition=dec,
        tdgla=tdgla,
        variables=variables,
        phi=phi,
        polynomials=polys,
        coordinates=tuple(obstructions.get("coordinates", [])),
        terminated=bool(data.get("terminated", False)),
    )


def parse_point(text: str, variables: tuple[str, ...]) -> list[Scalar]:
    """Parse 't1=1,t2=1/2' into a full coordinate vector (default 0)."""
    values = {name: scalar(0) for name in variables}
    text = text.strip()
    if text:
        for chunk in text.split(","):
            if "=" not in chunk:
                raise ParseError(f"point: expected name=value, got {chunk!r}")
            name, _, raw = chunk.partition("=")
            name = name.strip()
            if name not in values:
                raise ParseError(f"point: unknown variable {name!r}")
            values[name] = _coerce_scalar(raw.strip(), f"point.{name}")
    return [values[name] for name in variables]
