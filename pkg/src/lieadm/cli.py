"""Command line interface.

Subcommands check algebra files against signed associativity conditions,
compute operad dimensions and dual presentations, run cohomology and
module checks, build dual cogebras and tensor products, test the
symmetric-perturbation criterion, and run the whole verification suite.

Exit codes: 0 all requested checks passed, 1 at least one check failed,
2 malformed input or violated precondition.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from pathlib import Path
from typing import Sequence

from .algebra import Algebra, Identity3Id, check_identity_3, lie_invariants
from .constructions import (
    TABLE_RUNS,
    cogebra_to_algebra,
    deformation_vinberg_check,
    deformed_law,
    dual_cogebra,
    duality_map,
    fiber_membership,
    run_table_comparisons,
    tensor_product,
    which_g_associative_dual,
)
from .errors import (
    ContractViolationError,
    FixtureError,
    InputError,
    LieadmError,
    PreconditionError,
)
from .fileio import (
    algebra_to_obj,
    load_algebra,
    load_multimap,
    load_pair,
    multimap_to_obj,
    save_algebra,
)
from .fixtures import FIXTURE_DESCRIPTIONS, fixture_names, get_fixture
from .modules import ModuleFlavor, check_module, hat_lambda
from .multilinear import chevalley_differential, differential, lemma_scaling_probe
from .operads import (
    OperadId,
    dual_identities,
    koszul_residual,
    operad_dimension,
)
from .permutations import SubgroupId
from .sampling import random_multimap
from .suite import SECTIONS, run_suite


@dataclass
class Report:
    """Outcome of one subcommand: verdict, human lines, JSON payload."""

    ok: bool
    lines: list[str] = field(default_factory=list)
    body: dict[str, object] = field(default_factory=dict)


def _labels(alg: Algebra) -> tuple[str, ...]:
    if alg.basis_labels:
        return alg.basis_labels
    return tuple(f"e{i + 1}" for i in range(alg.dim))


def _combo(v: Sequence[Fraction], labels: Sequence[str]) -> str:
    """Linear combination as text, such as ``e1 - 1/2*e3``."""
    parts: list[tuple[str, str]] = []
    for coeff, label in zip(v, labels):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        parts.append((sign, label if mag == 1 else f"{mag}*{label}"))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _verdict(ok: bool) -> str:
    return "yes" if ok else "no"


def _algebra_display(alg: Algebra, path: str) -> str:
    return alg.name or Path(path).name


def _parse_subgroup(text: str) -> SubgroupId:
    try:
        return SubgroupId(text)
    except ValueError:
        names = ", ".join(g.value for g in SubgroupId)
        raise InputError(f"unknown subgroup {text!r}; expected one of {names}")


def _parse_identity(text: str) -> Identity3Id:
    try:
        return Identity3Id[text]
    except KeyError:
        names = ", ".join(i.name for i in Identity3Id)
        raise InputError(f"unknown identity {text!r}; expected one of {names}")


def _parse_params(pairs: Sequence[str]) -> dict[str, Fraction]:
    params: dict[str, Fraction] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InputError(f"parameter {pair!r} is not of the form name=value")
        try:
            params[key] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"parameter value {value!r} is not a rational")
    return params


def _algebra_lines(alg: Algebra) -> list[str]:
    labels = _labels(alg)
    lines = [f"dimension: {alg.dim}", "basis: " + ", ".join(labels)]
    lines.append("nonzero products:")
    count = 0
    for i in range(alg.dim):
        for j in range(alg.dim):
            v = alg.c[i][j]
            if any(x != 0 for x in v):
                lines.append(f"  {labels[i]} * {labels[j]} = {_combo(v, labels)}")
                count += 1
    if count == 0:
        lines.append("  (none)")
    return lines


def _profile_lines(alg: Algebra) -> list[str]:
    profile = alg.g_associative_profile()
    passed = [g.value for g in SubgroupId if profile[g]]
    return ["signed conditions satisfied: " + (" ".join(passed) if passed else "(none)")]


# ----- check -----------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> Report:
    alg = load_algebra(args.file)
    if not (args.group or args.identity or args.lie):
        raise InputError("nothing to check: pass --group, --identity, or --lie")
    report = Report(ok=True)
    name = _algebra_display(alg, args.file)
    report.lines.append(f"algebra: {name} (dimension {alg.dim})")
    checks: list[dict[str, object]] = []
    for text in args.group:
        g = _parse_subgroup(text)
        ok = alg.g_associative(g)
        report.ok = report.ok and ok
        report.lines.append(f"signed condition {g.value}: {'pass' if ok else 'fail'}")
        checks.append({"kind": "group", "target": g.value, "ok": ok})
    for text in args.identity:
        ident = _parse_identity(text)
        ok = check_identity_3(alg, ident)
        report.ok = report.ok and ok
        report.lines.append(f"identity {ident.name}: {'pass' if ok else 'fail'}")
        checks.append({"kind": "identity", "target": ident.name, "ok": ok})
    body_extra: dict[str, object] = {}
    if args.lie:
        ok = alg.g_associative(SubgroupId.G6)
        report.ok = report.ok and ok
        report.lines.append(f"lie-admissible: {'pass' if ok else 'fail'}")
        checks.append({"kind": "lie-admissible", "target": "G6", "ok": ok})
        if ok:
            inv = lie_invariants(alg.commutator_lie())
            report.lines.append("commutator invariants:")
            report.lines.append(
                "  derived series: " + ", ".join(str(d) for d in inv.derived_series)
            )
            report.lines.append(
                "  lower central series: "
                + ", ".join(str(d) for d in inv.lower_central_series)
            )
            report.lines.append(f"  center dimension: {inv.center_dim}")
            report.lines.append(f"  two-step nilpotent: {_verdict(inv.is_two_step_nilpotent)}")
            report.lines.append(f"  abelian: {_verdict(inv.is_abelian)}")
            body_extra["invariants"] = {
                "derived_series": list(inv.derived_series),
                "lower_central_series": list(inv.lower_central_series),
                "center_dim": inv.center_dim,
                "two_step_nilpotent": inv.is_two_step_nilpotent,
                "abelian": inv.is_abelian,
            }
    report.body = {"algebra": name, "dim": alg.dim, "checks": checks, **body_extra}
    return report


# ----- operad ----------------------------------------------------------


def cmd_operad_dims(args: argparse.Namespace) -> Report:
    op = OperadId.parse(args.operad)
    if args.max_arity < 1:
        raise InputError("--max-arity must be at least 1")
    dims = [operad_dimension(op, n) for n in range(1, args.max_arity + 1)]
    report = Report(ok=True)
    report.lines.append(f"operad: {op.display()}")
    for n, d in enumerate(dims, start=1):
        report.lines.append(f"arity {n}: {d}")
    report.body = {
        "operad": op.display(),
        "dimensions": [{"arity": n, "dim": d} for n, d in enumerate(dims, start=1)],
    }
    return report


def cmd_operad_dual(args: argparse.Namespace) -> Report:
    op = OperadId.parse(args.operad)
    if op.dual:
        raise InputError("pass the primal operad; its dual is what gets described")
    info = dual_identities(op)
    report = Report(ok=True)
    report.lines.append(f"operad: {op.display()}")
    report.lines.append(f"dual: {op.dual_id().display()}")
    report.lines.append(f"dual identities: {info.description}")
    if info.identity3 is not None:
        report.lines.append(f"triple-product identity name: {info.identity3.name}")
    report.body = {
        "operad": op.display(),
        "dual": op.dual_id().display(),
        "description": info.description,
        "words": [list(w) for w in info.words],
        "identity3": info.identity3.name if info.identity3 else None,
    }
    return report


def cmd_operad_koszul(args: argparse.Namespace) -> Report:
    op = OperadId.parse(args.operad)
    if args.order < 1:
        raise InputError("--order must be at least 1")
    residual = koszul_residual(op, args.order)
    coeffs = [residual.coeff(n) for n in range(1, residual.order + 1)]
    ok = residual.is_zero()
    report = Report(ok=ok)
    report.lines.append(f"pairing: {op.display()} with {op.dual_id().display()}")
    report.lines.append(f"order: {args.order}")
    report.lines.append(
        "residual coefficients: " + ", ".join(str(c) for c in coeffs)
    )
    report.lines.append(f"functional equation holds to this order: {_verdict(ok)}")
    report.body = {
        "operad": op.display(),
        "dual": op.dual_id().display(),
        "order": args.order,
        "coefficients": [str(c) for c in coeffs],
        "zero": ok,
    }
    return report


# ----- cohom -----------------------------------------------------------


def cmd_cohom_delta(args: argparse.Namespace) -> Report:
    alg = load_algebra(args.file)
    phi = load_multimap(args.cochain)
    d = differential(alg, phi)
    report = Report(ok=True)
    name = _algebra_display(alg, args.file)
    report.lines.append(f"algebra: {name} (dimension {alg.dim})")
    report.lines.append(f"cochain arity: {phi.arity}")
    report.lines.append(f"differential arity: {d.arity}")
    labels = _labels(alg)
    entries = 0
    for ins in product(range(alg.dim), repeat=d.arity):
        v = d.value_on_basis(ins)
        if any(x != 0 for x in v):
            argtext = ", ".join(labels[i] for i in ins)
            report.lines.append(f"  d phi({argtext}) = {_combo(v, labels)}")
            entries += 1
    report.lines.append(f"nonzero basis values: {entries}")
    report.lines.append(f"cocycle (differential vanishes): {_verdict(d.is_zero())}")
    report.body = {
        "algebra": name,
        "cochain_arity": phi.arity,
        "differential": multimap_to_obj(d),
        "cocycle": d.is_zero(),
    }
    return report


def cmd_cohom_compare(args: argparse.Namespace) -> Report:
    alg = load_algebra(args.file)
    phi = load_multimap(args.cochain)
    lhs = differential(alg, phi)
    rhs = chevalley_differential(alg, phi).scale(4)
    ok = lhs == rhs
    name = _algebra_display(alg, args.file)
    report = Report(ok=ok)
    report.lines.append(f"algebra: {name} (dimension {alg.dim})")
    report.lines.append(
        f"differential equals 4 times the classical one: {_verdict(ok)}"
    )
    report.body = {"algebra": name, "factor_four": ok}
    return report


def cmd_cohom_lemma(args: argparse.Namespace) -> Report:
    if args.dim < 1:
        raise InputError("--dim must be at least 1")
    if args.arity_f < 1 or args.arity_g < 1:
        raise InputError("arities must be at least 1")
    rng = random.Random(args.seed)
    f = random_multimap(rng, args.dim, args.arity_f)
    g = random_multimap(rng, args.dim, args.arity_g)
    c1, c2 = lemma_scaling_probe(f, g)
    claimed = factorial(args.arity_f + args.arity_g - 1)
    report = Report(ok=True)
    report.lines.append(f"dimension: {args.dim}, arities: f {args.arity_f}, g {args.arity_g}")
    report.lines.append(f"measured factors: {c1}, {c2}")
    report.lines.append(f"catalog reference factor (n+m-1)!: {claimed}")
    report.lines.append(
        "matches catalog reference: "
        + _verdict(c1 == claimed and c2 == claimed)
    )
    report.body = {
        "dim": args.dim,
        "arity_f": args.arity_f,
        "arity_g": args.arity_g,
        "measured": [str(c1), str(c2)],
        "reference_factor": claimed,
        "matches_reference": bool(c1 == claimed and c2 == claimed),
    }
    return report


# ----- module ----------------------------------------------------------

_FLAVORS = {f.name.lower(): f for f in ModuleFlavor}


def cmd_module_check(args: argparse.Namespace) -> Report:
    pair = load_pair(args.file)
    flavor = _FLAVORS.get(args.flavor.lower())
    if flavor is None:
        raise InputError(
            "unknown flavor; expected one of " + ", ".join(sorted(_FLAVORS))
        )
    result = check_module(pair, flavor)
    name = pair.alg.name or Path(args.file).name
    report = Report(ok=result.ok)
    report.lines.append(f"algebra: {name} (dimension {pair.alg.dim})")
    report.lines.append(f"module dimension: {pair.module_dim}")
    report.lines.append(f"flavor: {flavor.name}")
    report.lines.append(f"module axioms hold: {_verdict(result.ok)}")
    witness = None
    if result.witness is not None:
        witness = result.witness.describe()
        report.lines.append(f"failure: {witness}")
    report.body = {
        "algebra": name,
        "module_dim": pair.module_dim,
        "flavor": flavor.name,
        "ok": result.ok,
        "witness": witness,
    }
    return report


def cmd_module_hat(args: argparse.Namespace) -> Report:
    pair = load_pair(args.file)
    hats = hat_lambda(pair)
    name = pair.alg.name or Path(args.file).name
    labels = _labels(pair.alg)
    report = Report(ok=True)
    report.lines.append(f"algebra: {name} (dimension {pair.alg.dim})")
    report.lines.append(f"combined action on a module of dimension {pair.module_dim}:")
    for label, mat in zip(labels, hats):
        report.lines.append(f"hat({label}) =")
        for row in mat:
            report.lines.append("  [" + ", ".join(str(x) for x in row) + "]")
    report.body = {
        "algebra": name,
        "module_dim": pair.module_dim,
        "hat": [[[str(x) for x in row] for row in mat] for mat in hats],
    }
    return report


# ----- cogebra ---------------------------------------------------------


def _delta_lines(dim: int, delta, labels: Sequence[str]) -> list[str]:
    lines: list[str] = []
    for k in range(dim):
        terms: list[str] = []
        for a in range(dim):
            for b in range(dim):
                coeff = delta[k][a][b]
                if coeff == 0:
                    continue
                tensor = f"{labels[a]} (x) {labels[b]}"
                if coeff == 1:
                    terms.append(f"+ {tensor}")
                elif coeff == -1:
                    terms.append(f"- {tensor}")
                else:
                    terms.append(f"+ {coeff}*{tensor}" if coeff > 0 else f"- {-coeff}*{tensor}")
        if terms:
            text = " ".join(terms)
            if text.startswith("+ "):
                text = text[2:]
            elif text.startswith("- "):
                text = "-" + text[2:]
            lines.append(f"Delta({labels[k]}) = {text}")
        else:
            lines.append(f"Delta({labels[k]}) = 0")
    return lines


def cmd_cogebra_dual(args: argparse.Namespace) -> Report:
    alg = load_algebra(args.file)
    cog = dual_cogebra(alg)
    name = _algebra_display(alg, args.file)
    labels = tuple(f"f{i + 1}" for i in range(alg.dim))
    report = Report(ok=True)
    report.lines.append(f"algebra: {name} (dimension {alg.dim})")
    flavor = cog.flavor.value if cog.flavor else "(none)"
    report.lines.append(f"coproduct diagram flavor: {flavor}")
    report.lines.extend(_delta_lines(cog.dim, cog.delta, labels))
    report.body = {
        "algebra": name,
        "flavor": cog.flavor.value if cog.flavor else None,
        "delta": [
            {
                "out": k + 1,
                "left": a + 1,
                "right": b + 1,
                "value": str(cog.delta[k][a][b]),
            }
            for k in range(cog.dim)
            for a in range(cog.dim)
            for b in range(cog.dim)
            if cog.delta[k][a][b] != 0
        ],
    }
    return report


def cmd_cogebra_roundtrip(args: argparse.Namespace) -> Report:
    alg = load_algebra(args.file)
    cog = dual_cogebra(alg)
    recovered = cogebra_to_algebra(cog, twisted=args.twisted)
    same = recovered == alg
    same_op = recovered == alg.opposite()
    ok = same_op if args.twisted else same
    duals = sorted(g.value for g in which_g_associative_dual(cog, twisted=args.twisted))
    name = _algebra_display(alg, args.file)
    report = Report(ok=ok)
    report.lines.append(f"algebra: {name} (dimension {alg.dim})")
    report.lines.append(f"mode: {'twisted' if args.twisted else 'plain'}")
    report.lines.append(f"recovered equals original: {_verdict(same)}")
    report.lines.append(f"recovered equals opposite: {_verdict(same_op)}")
    report.lines.append(
        "dual-side signed conditions: " + (" ".join(duals) if duals else "(none)")
    )
    report.body = {
        "algebra": name,
        "twisted": args.twisted,
        "equals_original": same,
        "equals_opposite": same_op,
        "dual_conditions": duals,
    }
    return report


def cmd_cogebra_map(args: argparse.Namespace) -> Report:
    mapping = duality_map(twisted=args.twisted)
    report = Report(ok=True)
    report.lines.append(f"mode: {'twisted' if args.twisted else 'plain'}")
    for src in SubgroupId:
        report.lines.append(f"{src.value} -> {mapping[src].value}")
    report.body = {
        "twisted": args.twisted,
        "map": {src.value: mapping[src].value for src in SubgroupId},
    }
    return report


# ----- tensor ----------------------------------------------------------


def cmd_tensor_product(args: argparse.Namespace) -> Report:
    left = load_algebra(args.left)
    right = load_algebra(args.right)
    t = tensor_product(left, right)
    report = Report(ok=True)
    report.lines.append(
        f"left: {_algebra_display(left, args.left)} (dimension {left.dim})"
    )
    report.lines.append(
        f"right: {_algebra_display(right, args.right)} (dimension {right.dim})"
    )
    report.lines.extend(_algebra_lines(t))
    report.lines.extend(_profile_lines(t))
    if args.out:
        save_algebra(args.out, t)
        report.lines.append(f"saved to {args.out}")
    report.body = {"product": algebra_to_obj(t)}
    return report


def cmd_tensor_tables(args: argparse.Namespace) -> Report:
    diffs = run_table_comparisons()
    registered = {run.table: set(run.expected_mismatches) for run in TABLE_RUNS}
    report = Report(ok=True)
    total = 0
    matching = 0
    unregistered = 0
    for name in sorted(diffs):
        diff = diffs[name]
        total += diff.total
        matching += diff.matching
        report.lines.append(f"table {name}: {diff.matching}/{diff.total} entries match")
        for entry in diff.mismatches():
            known = (entry.left, entry.right) in registered[name]
            if not known:
                unregistered += 1
            tag = "registered" if known else "UNREGISTERED"
            report.lines.append(
                f"  ({entry.left},{entry.right}): computed "
                f"({', '.join(str(x) for x in entry.computed)}) expected "
                f"({', '.join(str(x) for x in entry.expected)}) [{tag}]"
            )
    agreement = Fraction(matching, total)
    report.lines.append(
        f"overall agreement: {matching}/{total} "
        f"({float(100 * agreement):.1f}%)"
    )
    report.lines.append(f"unregistered mismatches: {unregistered}")
    report.ok = unregistered == 0 and agreement >= Fraction(95, 100)
    report.body = {
        "tables": {
            name: {
                "total": diffs[name].total,
                "matching": diffs[name].matching,
                "mismatches": [
                    {
                        "left": e.left,
                        "right": e.right,
                        "computed": [str(x) for x in e.computed],
                        "expected": [str(x) for x in e.expected],
                        "registered": (e.left, e.right) in registered[name],
                    }
                    for e in diffs[name].mismatches()
                ],
            }
            for name in sorted(diffs)
        },
        "matching": matching,
        "total": total,
        "unregistered": unregistered,
    }
    return report


# ----- deform ----------------------------------------------------------


def cmd_deform_check(args: argparse.Namespace) -> Report:
    mu = load_algebra(args.file)
    phi = load_multimap(args.phi)
    if phi.arity != 2:
        raise InputError("perturbation must be a bilinear map (arity 2)")
    criterion = deformation_vinberg_check(mu, phi)
    deformed = deformed_law(mu, phi)
    direct = deformed.g_associative(SubgroupId.G2)
    fiber = fiber_membership(mu, deformed)
    routes_agree = criterion == direct
    name = _algebra_display(mu, args.file)
    report = Report(ok=criterion and routes_agree)
    report.lines.append(f"algebra: {name} (dimension {mu.dim})")
    report.lines.append(f"criterion holds: {_verdict(criterion)}")
    report.lines.append(
        f"half-law plus perturbation satisfies the G2 condition: {_verdict(direct)}"
    )
    report.lines.append(f"routes agree: {_verdict(routes_agree)}")
    report.lines.append(f"deformed law stays in the fiber: {_verdict(fiber)}")
    report.body = {
        "algebra": name,
        "criterion": criterion,
        "direct": direct,
        "routes_agree": routes_agree,
        "fiber": fiber,
    }
    return report


# ----- fixtures --------------------------------------------------------


def cmd_fixtures_list(args: argparse.Namespace) -> Report:
    report = Report(ok=True)
    names = fixture_names()
    for name in names:
        report.lines.append(f"{name}: {FIXTURE_DESCRIPTIONS[name]}")
    report.body = {
        "fixtures": [
            {"name": name, "description": FIXTURE_DESCRIPTIONS[name]} for name in names
        ]
    }
    return report


def cmd_fixtures_show(args: argparse.Namespace) -> Report:
    params = _parse_params(args.param)
    alg = get_fixture(args.name, params or None)
    report = Report(ok=True)
    report.lines.append(f"fixture: {args.name}")
    if params:
        report.lines.append(
            "parameters: " + ", ".join(f"{k}={v}" for k, v in sorted(params.items()))
        )
    report.lines.extend(_algebra_lines(alg))
    report.lines.extend(_profile_lines(alg))
    if args.out:
        save_algebra(args.out, alg)
        report.lines.append(f"saved to {args.out}")
    profile = alg.g_associative_profile()
    report.body = {
        "fixture": args.name,
        "parameters": {k: str(v) for k, v in sorted(params.items())},
        "algebra": algebra_to_obj(alg),
        "signed_conditions": [g.value for g in SubgroupId if profile[g]],
    }
    return report


# ----- suite -----------------------------------------------------------


def cmd_suite(args: argparse.Namespace) -> Report:
    sections = None if (args.all or not args.section) else list(args.section)
    results = run_suite(sections, seed=args.seed)
    failures = [r for r in results if not r.ok]
    report = Report(ok=not failures)
    for r in results:
        status = "pass" if r.ok else "FAIL"
        detail = f"  {r.detail}" if r.detail else ""
        report.lines.append(f"{r.identifier}: {status}{detail}")
        for note in r.notes:
            report.lines.append(f"    note: {note}")
    report.lines.append(f"checks: {len(results)}  failures: {len(failures)}")
    report.body = {
        "seed": args.seed,
        "checks": [
            {
                "section": r.section,
                "name": r.name,
                "ok": r.ok,
                "detail": r.detail,
                "notes": list(r.notes),
            }
            for r in results
        ],
        "failures": len(failures),
    }
    return report


# ----- parser ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    parser = argparse.ArgumentParser(
        prog="lieadm",
        description="Exact rational checks for signed associativity conditions, "
        "the six operads they present, and the attached module, cohomology, "
        "cogebra, tensor, and deformation constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", parents=[common], help="check an algebra file against conditions"
    )
    p_check.add_argument("file", help="algebra JSON file")
    p_check.add_argument(
        "--group",
        action="append",
        default=[],
        metavar="G",
        help="signed condition to test (G1..G6); repeatable",
    )
    p_check.add_argument(
        "--identity",
        action="append",
        default=[],
        metavar="NAME",
        help="triple-product identity to test; repeatable",
    )
    p_check.add_argument(
        "--lie",
        action="store_true",
        help="test Lie admissibility and print commutator invariants",
    )
    p_check.set_defaults(handler=cmd_check)

    p_operad = sub.add_parser("operad", help="operad dimensions, duals, pairings")
    sub_operad = p_operad.add_subparsers(dest="action", required=True)
    p_dims = sub_operad.add_parser("dims", parents=[common], help="dimensions by arity")
    p_dims.add_argument("--operad", required=True, help="operad name, e.g. LieAdm or Vinb!")
    p_dims.add_argument("--max-arity", type=int, default=4)
    p_dims.set_defaults(handler=cmd_operad_dims)
    p_dual = sub_operad.add_parser(
        "dual", parents=[common], help="monomial identities of the quadratic dual"
    )
    p_dual.add_argument("--operad", required=True, help="primal operad name")
    p_dual.set_defaults(handler=cmd_operad_dual)
    p_koszul = sub_operad.add_parser(
        "koszul", parents=[common], help="series functional equation residual"
    )
    p_koszul.add_argument("--operad", required=True, help="primal operad name")
    p_koszul.add_argument("--order", type=int, default=4)
    p_koszul.set_defaults(handler=cmd_operad_koszul)

    p_cohom = sub.add_parser("cohom", help="cochain differentials and scaling probes")
    sub_cohom = p_cohom.add_subparsers(dest="action", required=True)
    p_delta = sub_cohom.add_parser(
        "delta", parents=[common], help="apply the differential to a cochain"
    )
    p_delta.add_argument("file", help="algebra JSON file")
    p_delta.add_argument("--cochain", required=True, help="cochain JSON file")
    p_delta.set_defaults(handler=cmd_cohom_delta)
    p_cc = sub_cohom.add_parser(
        "compare-chevalley",
        parents=[common],
        help="compare against four times the classical differential",
    )
    p_cc.add_argument("file", help="antisymmetric Jacobi algebra JSON file")
    p_cc.add_argument("--cochain", required=True, help="alternating cochain JSON file")
    p_cc.set_defaults(handler=cmd_cohom_compare)
    p_lemma = sub_cohom.add_parser(
        "lemma-probe",
        parents=[common],
        help="measure the scalars relating pre- and post-alternated products",
    )
    p_lemma.add_argument("--dim", type=int, default=3)
    p_lemma.add_argument("--arity-f", type=int, default=2)
    p_lemma.add_argument("--arity-g", type=int, default=2)
    p_lemma.add_argument("--seed", type=int, default=0)
    p_lemma.set_defaults(handler=cmd_cohom_lemma)

    p_module = sub.add_parser("module", help="bimodule axiom checks")
    sub_module = p_module.add_subparsers(dest="action", required=True)
    p_mcheck = sub_module.add_parser(
        "check", parents=[common], help="check a pair file against module axioms"
    )
    p_mcheck.add_argument("file", help="pair JSON file")
    p_mcheck.add_argument(
        "--flavor",
        required=True,
        help="one of " + ", ".join(sorted(_FLAVORS)),
    )
    p_mcheck.set_defaults(handler=cmd_module_check)
    p_mhat = sub_module.add_parser(
        "hat", parents=[common], help="print the combined action of a valid pair"
    )
    p_mhat.add_argument("file", help="pair JSON file")
    p_mhat.set_defaults(handler=cmd_module_hat)

    p_cogebra = sub.add_parser("cogebra", help="dual coproducts and recovery")
    sub_cogebra = p_cogebra.add_subparsers(dest="action", required=True)
    p_cdual = sub_cogebra.add_parser(
        "dual", parents=[common], help="transpose an algebra into its coproduct"
    )
    p_cdual.add_argument("file", help="algebra JSON file")
    p_cdual.set_defaults(handler=cmd_cogebra_dual)
    p_crt = sub_cogebra.add_parser(
        "roundtrip", parents=[common], help="recover an algebra from its coproduct"
    )
    p_crt.add_argument("file", help="algebra JSON file")
    p_crt.add_argument("--twisted", action="store_true", help="flip the tensor factors")
    p_crt.set_defaults(handler=cmd_cogebra_roundtrip)
    p_cmap = sub_cogebra.add_parser(
        "map", parents=[common], help="empirical condition correspondence table"
    )
    p_cmap.add_argument("--twisted", action="store_true", help="flip the tensor factors")
    p_cmap.set_defaults(handler=cmd_cogebra_map)

    p_tensor = sub.add_parser("tensor", help="tensor products and bracket tables")
    sub_tensor = p_tensor.add_subparsers(dest="action", required=True)
    p_tp = sub_tensor.add_parser(
        "product", parents=[common], help="tensor product of two algebra files"
    )
    p_tp.add_argument("left", help="left algebra JSON file")
    p_tp.add_argument("right", help="right algebra JSON file")
    p_tp.add_argument("--out", help="write the product algebra to this file")
    p_tp.set_defaults(handler=cmd_tensor_product)
    p_tt = sub_tensor.add_parser(
        "tables", parents=[common], help="compare computed commutator tables to stored ones"
    )
    p_tt.set_defaults(handler=cmd_tensor_tables)

    p_deform = sub.add_parser("deform", help="symmetric perturbations of a Lie law")
    sub_deform = p_deform.add_subparsers(dest="action", required=True)
    p_dc = sub_deform.add_parser(
        "check", parents=[common], help="test the perturbation criterion"
    )
    p_dc.add_argument("file", help="antisymmetric Jacobi algebra JSON file")
    p_dc.add_argument("--phi", required=True, help="symmetric bilinear map JSON file")
    p_dc.set_defaults(handler=cmd_deform_check)

    p_fixtures = sub.add_parser("fixtures", help="built-in example algebras")
    sub_fixtures = p_fixtures.add_subparsers(dest="action", required=True)
    p_fl = sub_fixtures.add_parser("list", parents=[common], help="list fixtures")
    p_fl.set_defaults(handler=cmd_fixtures_list)
    p_fs = sub_fixtures.add_parser(
        "show", parents=[common], help="print one fixture, optionally save it"
    )
    p_fs.add_argument("name", help="fixture name")
    p_fs.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="fixture parameter, e.g. a=1/2; repeatable",
    )
    p_fs.add_argument("--out", help="write the fixture to this algebra file")
    p_fs.set_defaults(handler=cmd_fixtures_show)

    p_suite = sub.add_parser("suite", parents=[common], help="run the verification suite")
    p_suite.add_argument("--all", action="store_true", help="run every section (default)")
    p_suite.add_argument(
        "--section",
        action="append",
        default=[],
        choices=sorted(SECTIONS),
        help="run one section; repeatable",
    )
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.set_defaults(handler=cmd_suite)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except (InputError, PreconditionError, FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractViolationError as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 1
    except LieadmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload = {"command": args.command, "ok": report.ok, **report.body}
        print(json.dumps(payload, indent=2))
    else:
        for line in report.lines:
            print(line)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
