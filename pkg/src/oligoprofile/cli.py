"""Command-line surface for batch use.

stdout carries data, stderr carries diagnostics.  Exit codes: 0 on
success, 1 when a computation fails (resource caps, violated
preconditions, a failed check), 2 when an expression or group file
does not parse.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .blocks import (
    check_four_blocks_lemma,
    all_block_systems,
    parse_partition,
    serialize_partition,
    tower,
)
from .errors import ExpressionParseError, OligoprofileError
from .oligo import (
    canonical_block_structure,
    format_expression,
    generator_degrees,
    growth,
    parse_expression,
    profile_series,
    verify_positivity,
)
from .oracle import profile as oracle_profile
from .orbit_algebra import element, express_element, product, reynolds
from .perm import (
    FinitePermGroup,
    format_cycles,
    group_order,
    parse_group_file,
    point_orbits,
    profile_values,
    subset_orbits,
)
from .polya import cycle_index, molien_series, subset_count_polynomial
from .series import coefficients, to_json_dict

SERIES_TERMS = 20


def _ints(values) -> str:
    return " ".join(str(v) for v in values) if values else "(none)"


def _read_group(path: str) -> FinitePermGroup:
    with open(path, encoding="utf-8") as handle:
        return parse_group_file(handle.read())


def _cmd_profile(args) -> int:
    expr = parse_expression(args.expr)
    values = coefficients(profile_series(expr), args.max_n)
    check = None
    if args.check:
        up_to = min(args.max_n, 6)
        bad = [n for n in range(up_to + 1) if oracle_profile(expr, n) != values[n]]
        check = {"up_to": up_to, "ok": not bad}
    if args.json:
        payload = {
            "expression": format_expression(expr),
            "max_n": args.max_n,
            "values": values,
        }
        if check is not None:
            payload["check"] = check
        print(json.dumps(payload))
    else:
        print(_ints(values))
    if check is not None:
        if check["ok"]:
            print(f"check: oracle agrees for n <= {check['up_to']}", file=sys.stderr)
        else:
            print(f"check: oracle disagrees at n = {bad}", file=sys.stderr)
            return 1
    return 0


def _cmd_series(args) -> int:
    expr = parse_expression(args.expr)
    series = profile_series(expr)
    coeffs = coefficients(series, SERIES_TERMS - 1)
    numerator, ok = verify_positivity(expr)
    if args.json:
        payload = {
            "expression": format_expression(expr),
            "series": to_json_dict(series),
            "coefficients": coeffs,
            "positivity": {
                "numerator": list(numerator),
                "degrees": list(generator_degrees(expr)),
                "ok": ok,
            },
        }
        print(json.dumps(payload))
    else:
        print(f"numerator: {_ints(series.numerator)}")
        print(f"denominator degrees: {_ints(series.denominator_degrees)}")
        print(f"coefficients: {_ints(coeffs)}")
        print(f"positivity: {'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_growth(args) -> int:
    k, a = growth(parse_expression(args.expr))
    print(f"k={k} a={a}")
    return 0


def _cmd_blocks(args) -> int:
    expr = parse_expression(args.expr)
    structure = canonical_block_structure(expr)
    degrees = generator_degrees(expr)
    if args.json:
        payload = {
            "expression": format_expression(expr),
            "infinite_block_counts": list(structure.infinite_block_counts),
            "finite_block_orbits": [
                {"size": size, "census": list(census)}
                for size, census in structure.finite_block_orbits
            ],
            "kernel_size": structure.kernel_size,
            "generator_degrees": list(degrees),
        }
        print(json.dumps(payload))
        return 0
    print(f"infinite block counts: {_ints(structure.infinite_block_counts)}")
    if structure.finite_block_orbits:
        parts = "; ".join(
            f"size {size} census {_ints(census)}"
            for size, census in structure.finite_block_orbits
        )
    else:
        parts = "(none)"
    print(f"finite block orbits: {parts}")
    print(f"kernel size: {structure.kernel_size}")
    print(f"generator degrees: {_ints(degrees)}")
    return 0


def _monomial(ctype) -> str:
    return " ".join(
        f"a{length}^{count}" if count > 1 else f"a{length}" for length, count in ctype
    )


def _cmd_fin(args) -> int:
    group = _read_group(args.groupfile)
    if args.action == "orbits":
        rows = point_orbits(group)
        if args.json:
            print(json.dumps({"orbits": [list(o) for o in rows]}))
        else:
            for orbit in rows:
                print(_ints(orbit))
    elif args.action == "profile":
        values = profile_values(group)
        if args.json:
            print(json.dumps({"values": values}))
        else:
            print(_ints(values))
    elif args.action == "blocksystems":
        systems = all_block_systems(group)
        if args.json:
            print(json.dumps({"systems": [serialize_partition(p) for p in systems]}))
        else:
            for system in systems:
                print(serialize_partition(system))
    elif args.action == "cycleindex":
        index = cycle_index(group)
        terms = sorted(index.terms.items())
        if args.json:
            print(
                json.dumps(
                    {
                        "degree": index.degree,
                        "terms": [
                            {"cycle_type": [list(p) for p in ctype], "weight": str(w)}
                            for ctype, w in terms
                        ],
                    }
                )
            )
        else:
            for ctype, weight in terms:
                print(f"{weight} {_monomial(ctype)}")
    else:
        series = molien_series(group)
        coeffs = coefficients(series, SERIES_TERMS - 1)
        if args.json:
            print(json.dumps({"series": to_json_dict(series), "coefficients": coeffs}))
        else:
            print(f"numerator: {_ints(series.numerator)}")
            print(f"denominator degrees: {_ints(series.denominator_degrees)}")
            print(f"coefficients: {_ints(coeffs)}")
    return 0


def _cmd_tower(args) -> int:
    group = _read_group(args.groupfile)
    partition = parse_partition(args.blocks, group.degree)
    result = tower(group, partition)
    rows = []
    for i, entry in enumerate(result.entries):
        identity = tuple(range(entry.degree))
        moving = [g for g in entry.generators if g.images != identity]
        gens = ", ".join(format_cycles(g) for g in moving) if moving else "()"
        rows.append((i, entry.degree, group_order(entry), gens))
    verdict = None
    if len(partition.blocks) == 4:
        verdict = check_four_blocks_lemma(group, partition)
    if args.json:
        payload = {
            "entries": [
                {"index": i, "degree": d, "order": o, "generators": gens.split(", ")}
                for i, d, o, gens in rows
            ],
        }
        if verdict is not None:
            payload["four_blocks"] = verdict
        print(json.dumps(payload))
    else:
        for i, degree, order, gens in rows:
            print(f"entry {i}: degree {degree} order {order} generators {gens}")
        if verdict is not None:
            print(f"four-blocks: {'holds' if verdict else 'FAILS'}")
    return 0 if verdict in (None, True) else 1


def _random_homogeneous(rng, group, grade):
    reps = [o.representative for o in subset_orbits(group, grade)]
    terms = {rep: rng.randint(-3, 3) for rep in reps}
    return element(group, terms)


def _cmd_reynolds(args) -> int:
    big = _read_group(args.groupfile)
    sub = _read_group(args.subgroup)
    rng = random.Random(args.seed)
    grades = list(range(1, big.degree)) or [0]

    def sample(group):
        return _random_homogeneous(rng, group, rng.choice(grades))

    checks = {
        "idempotent": True,
        "fixes embedded elements": True,
        "representative schemes agree": True,
        "module morphism": True,
    }
    for _ in range(args.trials):
        x = sample(sub)
        r = reynolds(big, sub, x)
        if reynolds(big, sub, r) != r:
            checks["idempotent"] = False
        if reynolds(big, sub, x, scheme="lex-max") != r:
            checks["representative schemes agree"] = False
        embedded = express_element(big, sub, sample(big))
        if reynolds(big, sub, embedded) != embedded:
            checks["fixes embedded elements"] = False
        lhs = reynolds(big, sub, product(embedded, x))
        if lhs != product(embedded, r):
            checks["module morphism"] = False
    for name, ok in checks.items():
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    return 0 if all(checks.values()) else 1


def _cmd_report(args) -> int:
    import csv
    import os

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    expr = parse_expression(args.expr)
    series = profile_series(expr)
    values = coefficients(series, args.max_n)
    k, a = growth(expr)
    numerator, ok = verify_positivity(expr)
    os.makedirs(args.out_dir, exist_ok=True)

    csv_path = os.path.join(args.out_dir, "profile.csv")
    with open(csv_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "profile"])
        writer.writerows(enumerate(values))

    label = format_expression(expr)
    ns = list(range(args.max_n + 1))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, values, marker="o", markersize=3, linewidth=1, label="profile")
    if k >= 1:
        ax.plot(ns, [float(a) * n**k for n in ns], "--", label=f"{a} * n^{k}")
    ax.set_xlabel("n")
    ax.set_ylabel("orbits of n-subsets")
    ax.set_title(label)
    ax.legend()
    growth_path = os.path.join(args.out_dir, "growth.png")
    fig.savefig(growth_path, dpi=120, bbox_inches="tight")
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(numerator)), numerator)
    ax.set_xlabel("z power")
    ax.set_ylabel("coefficient")
    ax.set_title(f"numerator over degrees {_ints(generator_degrees(expr))}")
    numerator_path = os.path.join(args.out_dir, "numerator.png")
    fig.savefig(numerator_path, dpi=120, bbox_inches="tight")
    plt.close(fig)

    for path in (csv_path, growth_path, numerator_path):
        print(path)
    if not ok:
        print("warning: numerator has a negative coefficient", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oligoprofile",
        description="Profiles, series, and block towers of permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="profile values from the series")
    p.add_argument("expr")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--check", action="store_true", help="compare with the oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("series", help="rational series and positivity")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("growth", help="asymptotic growth a * n^k")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("blocks", help="canonical block structure")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("fin", help="finite-group computations from a group file")
    p.add_argument("groupfile")
    p.add_argument(
        "action",
        choices=["orbits", "profile", "blocksystems", "cycleindex", "molien"],
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fin)

    p = sub.add_parser("tower", help="tower of groups over a block system")
    p.add_argument("groupfile")
    p.add_argument("--blocks", required=True, help='partition, e.g. "[[0,1],[2,3]]"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tower)

    p = sub.add_parser("reynolds", help="averaging projection checks")
    p.add_argument("groupfile")
    p.add_argument("--subgroup", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=_cmd_reynolds)

    p = sub.add_parser("report", help="CSV plus rendered figures")
    p.add_argument("expr")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--max-n", type=int, default=30)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExpressionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OligoprofileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
