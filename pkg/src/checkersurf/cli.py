"""Command-line front end.

Subcommands cover canonical forms, coset products, concentration tables,
spherical values, the filtered surface algebra, dessin export, the pair
census, and a seeded random generator. Exit codes: 0 success, 2 bad input
or usage, 3 budget exceeded, 4 internal invariant failure. Every run is
deterministic given its flags and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
from itertools import permutations
from math import factorial

from checkersurf.convolution import coset_decomposition
from checkersurf.cosets import DoubleCoset, circledast, concat_geometric
from checkersurf.errors import BudgetError, InvariantError, SchemaError
from checkersurf.ik import IKElement, ik_product, poisson_bracket, project
from checkersurf.kernel import canonical_code
from checkersurf.spherical import (
    DEFAULT_MAX_ASSIGNMENTS,
    Tensor3,
    spherical_assignment_sum,
    spherical_oracle,
)
from checkersurf.surface import (
    Triple,
    canonical_form,
    checker_surface,
    random_triple,
    to_dessin,
)

DEFAULT_MAX_TERMS = 10**6

EXIT_SCHEMA = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SchemaError("cannot read %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise SchemaError("invalid JSON in %s: %s" % (path, exc)) from None
    if not isinstance(data, dict):
        raise SchemaError("%s: expected a JSON object" % path)
    return data


def _load_triple(path: str) -> Triple:
    data = _load_json(path)
    try:
        return Triple.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("%s: %s" % (path, exc)) from None


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _tsv_text(rows) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def _emit(text: str, args) -> None:
    if args.output:
        target = os.path.abspath(args.output)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".tmp-emit-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)


def _note(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _element_rows(element) -> list:
    rows = [("n", "blue", "red", "yellow", "coeff", "value")]
    for key, val in element.items():
        t = key.canonical_triple if hasattr(key, "canonical_triple") else key
        rows.append(
            (
                t.n,
                t.blue.cycle_string(),
                t.red.cycle_string(),
                t.yellow.cycle_string(),
                str(val),
                float(val),
            )
        )
    return rows


def cmd_canon(args) -> None:
    t = _load_triple(args.input)
    form = canonical_form(t, args.alpha, args.beta)
    if args.format == "dot":
        _emit(to_dessin(form.triple).to_dot() + "\n", args)
        return
    info = form.describe()
    if args.format == "tsv":
        rows = [
            ("degree", form.n),
            ("alpha", form.alpha),
            ("beta", form.beta),
            ("blue", form.triple.blue.cycle_string()),
            ("red", form.triple.red.cycle_string()),
            ("yellow", form.triple.yellow.cycle_string()),
            ("components", len(info["components"])),
            ("chi", " ".join(str(c) for c in info["chi"])),
            ("genus", " ".join(str(g) for g in info["genus"])),
        ]
        _emit(_tsv_text(rows), args)
    else:
        _emit(_json_text(info), args)


def cmd_product(args) -> None:
    p = DoubleCoset.from_triple(_load_triple(args.left), args.alpha, args.beta)
    q = DoubleCoset.from_triple(_load_triple(args.right), args.beta, args.gamma)
    algebraic = circledast(p, q)
    geometric = concat_geometric(p.surface, q.surface)
    if algebraic.surface != geometric:
        raise InvariantError(
            "shift-stabilized product disagrees with geometric concatenation"
        )
    _note(args, "both product paths agree")
    if args.format == "dot":
        _emit(to_dessin(algebraic.surface.triple).to_dot() + "\n", args)
        return
    info = algebraic.surface.describe()
    info["paths_agree"] = True
    if args.format == "tsv":
        rows = [
            ("degree", algebraic.degree),
            ("alpha", algebraic.alpha),
            ("beta", algebraic.beta),
            ("blue", algebraic.surface.triple.blue.cycle_string()),
            ("red", algebraic.surface.triple.red.cycle_string()),
            ("yellow", algebraic.surface.triple.yellow.cycle_string()),
            ("paths_agree", "true"),
        ]
        _emit(_tsv_text(rows), args)
    else:
        _emit(_json_text(info), args)


def cmd_concentrate(args) -> None:
    p = DoubleCoset.from_json(_load_json(args.left))
    q = DoubleCoset.from_json(_load_json(args.right))
    if args.n_from > args.n_to:
        raise SchemaError("--n-from must not exceed --n-to")
    if factorial(args.n_to) > args.max_terms:
        raise BudgetError(
            "h-sum at degree %d needs %d terms, over the %d budget"
            % (args.n_to, factorial(args.n_to), args.max_terms)
        )
    degrees = list(range(args.n_from, args.n_to + 1))
    target = circledast(p, q)
    decomps = [coset_decomposition(p, q, n) for n in degrees]
    series = [decomp.coefficient(target) for decomp in decomps]
    rows = [("n", "sigma", "value")]
    for n, sigma in zip(degrees, series):
        rows.append((n, str(sigma), float(sigma)))
    if args.format == "json":
        payload = {
            "target": target.to_json(),
            "series": [
                {"n": n, "sigma": str(sigma), "value": float(sigma)}
                for n, sigma in zip(degrees, series)
            ],
            "decompositions": [decomp.to_json() for decomp in decomps],
        }
        _emit(_json_text(payload), args)
    else:
        _emit(_tsv_text(rows), args)


def cmd_spherical(args) -> None:
    t = _load_triple(args.surface)
    xi = Tensor3.from_json(_load_json(args.xi))
    direct = spherical_assignment_sum(t, xi, max_assignments=args.max_assignments)
    oracle = spherical_oracle(t, xi)
    difference = abs(direct - oracle)
    _note(args, "assignment sum and inner product differ by %.3e" % difference)
    if args.format == "tsv":
        rows = [
            ("path", "re", "im"),
            ("assignment_sum", direct.real, direct.imag),
            ("inner_product", oracle.real, oracle.imag),
            ("difference", difference, 0.0),
        ]
        _emit(_tsv_text(rows), args)
    else:
        payload = {
            "assignment_sum": {"re": direct.real, "im": direct.imag},
            "inner_product": {"re": oracle.real, "im": oracle.imag},
            "difference": difference,
        }
        _emit(_json_text(payload), args)


def _emit_element(element, args) -> None:
    if args.format == "tsv":
        _emit(_tsv_text(_element_rows(element)), args)
    else:
        _emit(_json_text(element.to_json()), args)


def cmd_ik_product(args) -> None:
    p = checker_surface(_load_triple(args.left))
    q = checker_surface(_load_triple(args.right))
    _emit_element(ik_product(p, q), args)


def cmd_ik_project(args) -> None:
    x = IKElement.from_json(_load_json(args.input))
    _emit_element(project(x, args.n), args)


def cmd_poisson(args) -> None:
    p = checker_surface(_load_triple(args.left))
    q = checker_surface(_load_triple(args.right))
    _emit_element(poisson_bracket(p, q), args)


def cmd_dessin(args) -> None:
    t = _load_triple(args.input)
    dessin = to_dessin(t)
    if args.format == "json":
        payload = {
            "n": dessin.n,
            "red_vertices": [list(c) for c in dessin.red_vertices],
            "yellow_vertices": [list(c) for c in dessin.yellow_vertices],
            "faces": [list(c) for c in dessin.faces],
            "edges": [list(e) for e in dessin.edges],
        }
        _emit(_json_text(payload), args)
    else:
        _emit(dessin.to_dot() + "\n", args)


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _burnside_pair_classes(n: int) -> int:
    # orbits of diagonal conjugation on pairs: sum over cycle types of the
    # centralizer order z_lambda
    total = 0
    for lam in _partitions(n):
        z = 1
        mult = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        for part, m in mult.items():
            z *= (part**m) * factorial(m)
        total += z
    return total


def cmd_census(args) -> None:
    cost = sum(factorial(d) ** 2 for d in range(1, args.n + 1))
    if cost > args.max_terms:
        raise BudgetError(
            "census up to degree %d needs %d enumerations, over the %d budget"
            % (args.n, cost, args.max_terms)
        )
    report = []
    for d in range(1, args.n + 1):
        seen = set()
        ident = tuple(range(d))
        for g1 in permutations(range(d)):
            for g2 in permutations(range(d)):
                seen.add(canonical_code(d, g1, g2, ident, 0, 0, False))
        expected = _burnside_pair_classes(d)
        if len(seen) != expected:
            raise InvariantError(
                "census at degree %d found %d classes, Burnside predicts %d"
                % (d, len(seen), expected)
            )
        breakdown = {}
        for code in seen:
            s = checker_surface(Triple._from_zero_based(code[0], *code[1:]))
            key = (len(s.component_partition), sum(s.genus_by_component))
            breakdown[key] = breakdown.get(key, 0) + 1
        report.append((d, len(seen), expected, breakdown))
        _note(args, "degree %d: %d classes, Burnside agrees" % (d, len(seen)))
    if args.format == "json":
        payload = {
            "degrees": [
                {
                    "n": d,
                    "classes": count,
                    "burnside": expected,
                    "breakdown": [
                        {"components": comps, "genus": gen, "count": c}
                        for (comps, gen), c in sorted(items.items())
                    ],
                }
                for d, count, expected, items in report
            ]
        }
        _emit(_json_text(payload), args)
    else:
        rows = [("n", "components", "genus", "count", "classes_total", "burnside")]
        for d, count, expected, items in report:
            for (comps, gen), c in sorted(items.items()):
                rows.append((d, comps, gen, c, count, expected))
        _emit(_tsv_text(rows), args)


def cmd_random(args) -> None:
    rng = random.Random(args.seed)
    t = random_triple(rng, args.n)
    if args.format == "tsv":
        rows = [
            ("blue", t.blue.cycle_string()),
            ("red", t.red.cycle_string()),
            ("yellow", t.yellow.cycle_string()),
            ("n", t.n),
        ]
        _emit(_tsv_text(rows), args)
    else:
        _emit(_json_text(t.to_json()), args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="checkersurf",
        description="Calculus of checker triangulated surfaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument(
        "--format",
        choices=("json", "tsv", "dot"),
        default=None,
        help="output format (default json; dot for dessins)",
    )
    common.add_argument("--quiet", action="store_true", help="suppress status notes")
    common.add_argument("--output", help="write the result to this file atomically")

    sub = parser.add_subparsers(dest="command", required=True)

    p_canon = sub.add_parser(
        "canon", parents=[common], help="canonical form of a labeled surface"
    )
    p_canon.add_argument("input", help="triple JSON file")
    p_canon.add_argument("--alpha", type=int, default=0, help="black labels")
    p_canon.add_argument("--beta", type=int, default=0, help="white labels")
    p_canon.set_defaults(func=cmd_canon)

    p_prod = sub.add_parser(
        "product",
        parents=[common],
        aliases=["coset-product"],
        help="coset product via both code paths",
    )
    p_prod.add_argument("left", help="triple JSON of the left factor")
    p_prod.add_argument("right", help="triple JSON of the right factor")
    p_prod.add_argument("--alpha", type=int, required=True)
    p_prod.add_argument("--beta", type=int, required=True)
    p_prod.add_argument("--gamma", type=int, required=True)
    p_prod.set_defaults(func=cmd_product)

    p_conc = sub.add_parser(
        "concentrate", parents=[common], help="concentration series and decompositions"
    )
    p_conc.add_argument("left", help="coset JSON (triple plus alpha, beta)")
    p_conc.add_argument("right", help="coset JSON (triple plus alpha, beta)")
    p_conc.add_argument("--n-from", type=int, default=4, dest="n_from")
    p_conc.add_argument("--n-to", type=int, default=9, dest="n_to")
    p_conc.add_argument(
        "--max-terms",
        type=int,
        default=DEFAULT_MAX_TERMS,
        help="largest permitted h-sum size (default %d)" % DEFAULT_MAX_TERMS,
    )
    p_conc.set_defaults(func=cmd_concentrate)

    p_sph = sub.add_parser(
        "spherical", parents=[common], help="spherical value by both paths"
    )
    p_sph.add_argument("surface", help="triple JSON file")
    p_sph.add_argument("xi", help="unit tensor JSON file")
    p_sph.add_argument(
        "--max-assignments",
        type=int,
        default=DEFAULT_MAX_ASSIGNMENTS,
        help="multiply-add budget (default %d)" % DEFAULT_MAX_ASSIGNMENTS,
    )
    p_sph.set_defaults(func=cmd_spherical)

    p_ikp = sub.add_parser(
        "ik-product", parents=[common], help="gluing product in the surface algebra"
    )
    p_ikp.add_argument("left", help="triple JSON file")
    p_ikp.add_argument("right", help="triple JSON file")
    p_ikp.set_defaults(func=cmd_ik_product)

    p_ikj = sub.add_parser(
        "ik-project", parents=[common], help="projection to a pair group algebra"
    )
    p_ikj.add_argument("input", help="element JSON file")
    p_ikj.add_argument("--n", type=int, required=True, help="target degree")
    p_ikj.set_defaults(func=cmd_ik_project)

    p_poi = sub.add_parser(
        "poisson", parents=[common], help="Poisson bracket of two surfaces"
    )
    p_poi.add_argument("left", help="triple JSON file")
    p_poi.add_argument("right", help="triple JSON file")
    p_poi.set_defaults(func=cmd_poisson)

    p_des = sub.add_parser(
        "dessin", parents=[common], help="bipartite graph of the blue edges"
    )
    p_des.add_argument("input", help="triple JSON file")
    p_des.set_defaults(func=cmd_dessin, dot_default=True)

    p_cen = sub.add_parser(
        "census", parents=[common], help="pair classes by degree with statistics"
    )
    p_cen.add_argument("--n", type=int, required=True, help="largest degree")
    p_cen.add_argument(
        "--max-terms",
        type=int,
        default=DEFAULT_MAX_TERMS,
        help="largest permitted enumeration (default %d)" % DEFAULT_MAX_TERMS,
    )
    p_cen.set_defaults(func=cmd_census)

    p_rnd = sub.add_parser(
        "random", parents=[common], help="seeded uniform random triple"
    )
    p_rnd.add_argument("--n", type=int, required=True, help="degree")
    p_rnd.set_defaults(func=cmd_random)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "dot" if getattr(args, "dot_default", False) else "json"
    try:
        args.func(args)
    except SchemaError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_SCHEMA
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_SCHEMA
    except BudgetError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except InvariantError as exc:
        print("invariant violated: %s" % exc, file=sys.stderr)
        return EXIT_INVARIANT
    return 0


if __name__ == "__main__":
    sys.exit(main())
