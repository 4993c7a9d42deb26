"""Command-line surface: pairing tables, field reports, witness searches,
composite product reports, property suites, and the conductor sieve.

Every command can emit a deterministic JSON document (--json to stdout,
--out FILE to write it); propcheck exits nonzero when any check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import gforms, linalg
from . import resolvends as rsv
from . import stickelberger as stk
from .arith import unit_group_generators
from .cyclotomic import LevelBoundError
from .groups import FiniteAbelianGroup
from .number_fields import build_field, compose_fields, different, sqrt_inverse_different
from .suites import SUITES, SuiteConfig, run_suite, sieve_conductors


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if getattr(args, "json", False) or not getattr(args, "out", None):
        print(text)


def _frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def cmd_stickelberger(args) -> int:
    if args.verb != "table":
        raise SystemExit(f"unknown stickelberger verb {args.verb!r}")
    G = FiniteAbelianGroup.from_spec(args.group)
    if G.order % 2 == 0:
        raise SystemExit("the pairing needs a group of odd order")
    pairs = []
    for chi in G.characters():
        for s in G.elements():
            u = stk.upsilon(chi, s)
            pairs.append(
                {
                    "chi": list(chi.exponents),
                    "s": list(s.exponents),
                    "upsilon": u,
                    "pairing": _frac(Fraction(u, s.order())),
                }
            )
    basis = stk.det_kernel_basis(G)
    rng = SuiteConfig(seed=args.seed).rng("table")
    if 5**G.order <= 1 << 22:
        total, hits = stk.integrality_sweep_exhaustive(G, 2)
        sweep = {"mode": "exhaustive", "total": total, "kernel_hits": hits}
    else:
        total, hits = stk.integrality_sweep_random(G, 2000, 2, rng)
        sweep = {"mode": "random", "total": total, "kernel_hits": hits}
    gens = unit_group_generators(G.exponent)
    checks = {
        "integrality_matches_kernel": sweep,
        "twist_equivariance": stk.equivariance_check(G, gens),
        "transpose_self_dual": all(
            stk.image_selfdual_check(stk.EquivariantMap.random_map(G, rng)) for _ in range(10)
        ),
    }
    doc = {
        "group": list(G.invariant_factors),
        "pairs": pairs,
        "s_hat_basis": [list(psi.coeffs) for psi in basis],
        "checks": checks,
    }
    _emit(doc, args)
    return 0


def cmd_field(args) -> int:
    if args.verb != "analyze":
        raise SystemExit(f"unknown field verb {args.verb!r}")
    K = build_field(args.degree, args.conductor)
    d = different(K)
    A = sqrt_inverse_different(K)
    from .number_fields import dual_lattice, trace_gram

    doc = {
        "degree": K.degree,
        "conductor": K.conductor,
        "ramified_primes": list(K.ramified_primes),
        "generator": K.generator,
        "periods": [
            sorted(c * k % K.conductor for k in K.subgroup) for c in K.cosets
        ],
        "mult_table": [[list(entry) for entry in row] for row in K.mult_table],
        "gram": [list(r) for r in K.gram],
        "different_hnf": d.to_json(),
        "A_hnf": A.to_json(),
        "checks": {
            "disc": K.discriminant,
            "disc_expected": K.conductor ** (K.degree - 1),
            "A_squared_is_inverse_different": A * A == d.inverse(),
            "A_self_dual": dual_lattice(A) == A,
            "gram_det_A": _frac(linalg.det(trace_gram(K, A.basis_elements()))),
        },
    }
    _emit(doc, args)
    return 0


def cmd_selfdual(args) -> int:
    if args.verb != "search":
        raise SystemExit(f"unknown selfdual verb {args.verb!r}")
    K = build_field(args.degree, args.conductor)
    form = gforms.gform_from_A(K)
    w = gforms.find_self_dual_generator(form)
    if w is None:
        doc = {"degree": args.degree, "conductor": args.conductor, "witness_coords": None}
        _emit(doc, args)
        return 1
    a = gforms.witness_element(form, w)
    r = rsv.resolvend(a)
    factorization = (
        rsv.stickelberger_factorization_check(a)
        if len(K.ramified_primes) == 1
        else None
    )
    try:
        fourier_resolvents = {
            str(chi): v.to_json() for chi, v in rsv.resolvent_values(a).items()
        }
    except LevelBoundError as exc:
        fourier_resolvents = {"skipped": str(exc)}
    doc = {
        "degree": args.degree,
        "conductor": args.conductor,
        "witness_coords": list(w.coords),
        "orbit_matrix": [list(r_) for r_ in w.orbit_matrix],
        "gram_check": w.verify(),
        "lattice_check": gforms.is_self_dual_generator(a, sqrt_inverse_different(K)),
        "resolvend_coeffs": r.to_json(),
        "fourier_resolvents": fourier_resolvents,
        "reduced_form": rsv.reduced_resolvend(a).representative.to_json(),
        "checks": {
            "nbg": rsv.is_normal_basis_generator(a),
            "selfdual": rsv.is_self_dual(a),
            "factorization": factorization.passed if factorization else None,
            "branch_witness": list(factorization.witness.exponents)
            if factorization and factorization.witness
            else None,
        },
    }
    _emit(doc, args)
    return 0


def cmd_compose(args) -> int:
    try:
        f1, f2 = (int(x) for x in args.conductors.split(","))
    except ValueError:
        raise SystemExit("--conductors expects two comma-separated integers")
    K1 = build_field(args.degree, f1)
    K2 = build_field(args.degree, f2)
    form1 = gforms.gform_from_A(K1)
    form2 = gforms.gform_from_A(K2)
    w1 = gforms.find_self_dual_generator(form1)
    w2 = gforms.find_self_dual_generator(form2)
    if w1 is None or w2 is None:
        raise SystemExit("missing self-dual witness on a factor field")
    a1 = gforms.witness_element(form1, w1)
    a2 = gforms.witness_element(form2, w2)
    composite = compose_fields(K1, K2)
    a = rsv.product_resolvend(a1, a2, composite)
    A12 = sqrt_inverse_different(composite)
    self_dual = rsv.is_self_dual(a)
    generates = gforms.is_self_dual_generator(a, A12)
    doc = {
        "degree": args.degree,
        "conductors": [f1, f2],
        "composite_conductor": composite.conductor,
        "factor_witnesses": [list(w1.coords), list(w2.coords)],
        "product_alpha": a.alpha.to_json(),
        "self_dual": self_dual,
        "generates_A": generates,
        "status": "pass" if (self_dual and generates) else "fail",
    }
    _emit(doc, args)
    return 0 if self_dual and generates else 1


def cmd_propcheck(args) -> int:
    config = SuiteConfig(
        seed=args.seed,
        conductor_bound=args.max,
        include_timings=args.timings,
    )
    report = run_suite(args.suite, config)
    doc = report.to_json()
    for check in report.checks:
        line = f"[{check.status.upper():4}] {check.check_id} {check.name}"
        if args.timings:
            line += f" ({check.elapsed:.2f}s)"
        print(line, file=sys.stderr)
    _emit(doc, args)
    return 0 if report.passed else 1


def cmd_corpus(args) -> int:
    doc = {
        "degree": args.degree,
        "max": args.max,
        "conductors": sieve_conductors(args.degree, args.max),
    }
    _emit(doc, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gform-lab",
        description="exact-arithmetic lab for trace forms on square roots of inverse differents",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stickelberger", help="pairing table and kernel basis for a group")
    p.add_argument("verb", nargs="?", default="table")
    p.add_argument("--group", required=True, help='invariant factors, e.g. "3,9"')
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_stickelberger)

    p = sub.add_parser("field", help="period-field report for one conductor")
    p.add_argument("verb", nargs="?", default="analyze")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--conductor", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_field)

    p = sub.add_parser("selfdual", help="search a self-dual generator of (A, trace)")
    p.add_argument("verb", nargs="?", default="search")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--conductor", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_selfdual)

    p = sub.add_parser("compose", help="product-law report for two coprime conductors")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--conductors", required=True, help='e.g. "7,13"')
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("propcheck", help="run a property suite")
    p.add_argument("suite", nargs="?", default="all", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max", type=int, default=100, help="conductor bound for field sweeps")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_propcheck)

    p = sub.add_parser("corpus", help="admissible squarefree conductors up to a bound")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--max", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
